# %% [markdown]
# # Counting coin stacks
#
# With coins worth 2 and 5 there is one *unordered* way to pay 7 (2 + 5) but
# two *ordered* stacks: 2 on 5, and 5 on 2.  `e_sequence` counts the ordered
# stacks for every amount at once.

# %%
from coinstack import (
    e_sequence,
    enumerate_compositions,
    multinomial_count,
    parse_denominations,
    partition_count,
)

coins = parse_denominations("2,5")
print("mask B_1..B_L:", list(coins.mask))

seq = e_sequence(coins, 12)
for amount, stacks in enumerate(seq):
    print(f"{amount:3d}  stacks={stacks:3d}  multisets={partition_count(coins, amount)}")

# %% [markdown]
# Two brute-force references agree with the recurrence: walking every stack,
# and summing multinomial coefficients over coin multisets.

# %%
for amount in range(13):
    assert seq[amount] == enumerate_compositions(coins, amount) == multinomial_count(coins, amount)
print("recurrence, enumeration and multinomial sum agree up to 12")

# %% [markdown]
# Unit and 2-unit coins give the Fibonacci numbers.

# %%
print(list(e_sequence(parse_denominations("1,2"), 15)))
