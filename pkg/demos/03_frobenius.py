# %% [markdown]
# # Which amounts can be paid?
#
# An amount is payable exactly when at least one stack reaches it.  Scanning
# the counts until a run of `smallest coin` payable amounts appears gives
# the Frobenius number (the largest amount that cannot be paid).

# %%
from coinstack import frobenius_number, is_representable, parse_denominations, representability_batch

coins = parse_denominations("6,9,20")
result = frobenius_number(coins)
print(result.kind.value, result.value, "certificate run:", result.certificate)

for report in representability_batch(coins, [1, 15, 43, 44, 100]):
    print(f"{report.target:4d} payable={report.representable} stacks={report.e_value}")

# %% [markdown]
# Large isolated targets use the fast single-term evaluator.

# %%
big = is_representable(coins, 10_000)
print("10000 payable:", big.representable, "stacks have", len(str(big.e_value)), "digits")

# %% [markdown]
# Coprime pairs follow the classical a*b - a - b; a common divisor leaves
# infinitely many gaps, and a unit coin leaves none.

# %%
for text in ["5,8", "4,6", "1,7"]:
    r = frobenius_number(parse_denominations(text))
    print(f"{text:>5}: {r.kind.value} {r.value}")
