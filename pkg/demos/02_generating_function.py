# %% [markdown]
# # The rational generating function
#
# The ordered counts have generating function `P(x) / Q(x)` with
# `Q(x) = B_L x^L + ... + B_1 x - 1`.  Built bracket by bracket, the long
# numerator collapses to the constant -1.

# %%
from coinstack import (
    build_numerator_literal,
    e_sequence,
    literal_gf,
    parse_denominations,
    series_expand,
    simplified_gf,
)

for text in ["2,5", "1,2", "3,4,10", "6,9,20"]:
    coins = parse_denominations(text)
    gf = simplified_gf(coins)
    print(f"{text:>8}:  G(x) = {gf}    i.e. {gf.normalized_str()}")
    print("          literal numerator:", build_numerator_literal(coins))

# %% [markdown]
# Expanding the fraction as a power series gives the stack counts back.

# %%
coins = parse_denominations("6,9,20")
coeffs = series_expand(literal_gf(coins), 60)
assert coeffs == list(e_sequence(coins, 60).terms)
print("first 60 coefficients:", coeffs)
