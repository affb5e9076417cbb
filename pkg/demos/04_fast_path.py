# %% [markdown]
# # Far-out terms
#
# `e_term_fast` raises `x` to the n-th power modulo the characteristic
# polynomial, so one term costs O(L^2 log n) instead of O(n L).

# %%
import time

from coinstack import DenominationSet, e_term_dp, e_term_fast

P = 18446744073709551557  # largest prime below 2**64
coins = DenominationSet.of(range(1, 33))

for n in [10**3, 10**6, 10**12, 10**100]:
    t0 = time.perf_counter()
    value = e_term_fast(coins, n, modulus=P)
    print(f"E_n mod p for n=10^{len(str(n)) - 1}: {value}  ({time.perf_counter() - t0:.4f}s)")

# %% [markdown]
# Exact values: both strategies agree, the fast one pulls ahead as n grows.

# %%
fib = DenominationSet.of([1, 2])
for name, fn in [("dp", e_term_dp), ("fast", e_term_fast)]:
    t0 = time.perf_counter()
    v = fn(fib, 50_000)
    print(f"{name:>4}: {v.bit_length()} bits in {time.perf_counter() - t0:.4f}s")
