"""Ordered stack counts ``E_i`` and independent oracles for them.

``E_i`` is the number of ways to stack coins (order matters) so that the
stack is worth ``i``.  It satisfies ``E_0 = 1`` and, for ``i >= 1``,

    E_i = sum(B_j * E_{i-j} for j in 1..L),   E_k = 0 for k < 0,

where ``B`` is the denomination mask.  Besides the sliding-window evaluator
this module has a single-term evaluator based on polynomial exponentiation
modulo the characteristic polynomial, plus two brute-force oracles
(composition enumeration and a multinomial sum over coin multisets).
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from ._limits import max_work
from .denominations import DenominationSet
from .errors import OracleLimitExceeded, ResourceLimit, UnsupportedIndex

ORACLE_LIMIT = 24


@dataclass(frozen=True)
class StackCountSequence:
    ds: DenominationSet
    terms: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, i: int) -> int:
        return self.terms[i]

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[int]:
        return iter(self.terms)


@dataclass(frozen=True)
class PartMultiset:
    """Coin multiplicities ``K_1..K_L`` of one unordered stack."""

    multiplicities: tuple[int, ...]

    @property
    def total(self) -> int:
        return sum(j * k for j, k in enumerate(self.multiplicities, start=1))

    @property
    def size(self) -> int:
        return sum(self.multiplicities)

    def arrangements(self) -> int:
        """Distinct orderings: ``(K_1 + ... + K_L)! / (K_1! ... K_L!)``."""
        out = math.factorial(self.size)
        for k in self.multiplicities:
            out //= math.factorial(k)
        return out


def _check_work(amount: int, what: str) -> None:
    bound = max_work()
    if amount > bound:
        raise ResourceLimit(f"{what} needs ~{amount} operations, bound is {bound}")


def mask_recurrence(mask: Sequence[int], n: int) -> list[int]:
    """E_0..E_n for an arbitrary 0/1 mask (the all-zero mask is allowed).

    The window is truncated at the start instead of padding with zeros.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    parts = [j for j, flag in enumerate(mask, start=1) if flag]
    terms = [1] + [0] * n
    for i in range(1, n + 1):
        s = 0
        for j in parts:
            if j > i:
                break
            s += terms[i - j]
        terms[i] = s
    return terms


def e_sequence(ds: DenominationSet, n: int) -> StackCountSequence:
    """Exact E_0..E_n by the sliding-window recurrence."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_work(n * ds.largest, "e_sequence")
    return StackCountSequence(ds, tuple(mask_recurrence(ds.mask, n)))


def iter_terms(ds: DenominationSet) -> Iterator[int]:
    """Endless stream E_0, E_1, ... keeping only the last ``L`` terms."""
    L = ds.largest
    parts = ds.values
    window: deque[int] = deque([0] * (L - 1) + [1], maxlen=L)
    yield 1
    while True:
        # window[-j] holds E_{i-j}
        nxt = sum(window[-j] for j in parts)
        window.append(nxt)
        yield nxt


def e_term_dp(ds: DenominationSet, n: int, modulus: int | None = None) -> int:
    """E_n by the recurrence in O(L) memory; reduced mod ``modulus`` if given."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    _check_work(n * len(ds), "e_term_dp")
    L = ds.largest
    parts = ds.values
    window: deque[int] = deque([0] * (L - 1) + [1], maxlen=L)
    for _ in range(n):
        nxt = sum(window[-j] for j in parts)
        window.append(nxt % modulus if modulus is not None else nxt)
    last = window[-1]
    return last % modulus if modulus is not None else last


# -- single-term evaluation -------------------------------------------------

def _reduce(poly: list[int], parts: Sequence[int], L: int, modulus: int | None) -> list[int]:
    # x^L == sum_j x^(L-j) over coin values j, so x^k folds onto x^(k-j).
    for k in range(len(poly) - 1, L - 1, -1):
        c = poly[k]
        if c:
            for j in parts:
                poly[k - j] += c
    del poly[L:]
    if modulus is not None:
        poly = [c % modulus for c in poly]
    return poly


def _square(a: list[int]) -> list[int]:
    n = len(a)
    out = [0] * (2 * n - 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        out[2 * i] += ai * ai
        twice = 2 * ai
        for j in range(i + 1, n):
            aj = a[j]
            if aj:
                out[i + j] += twice * aj
    return out


def x_power_mod_charpoly(ds: DenominationSet, n: int, modulus: int | None = None) -> list[int]:
    """Coefficients ``r_0..r_{L-1}`` of ``x^n mod (x^L - B_1 x^{L-1} - ... - B_L)``."""
    L = ds.largest
    parts = ds.values
    result = [1] + [0] * (L - 1)
    if L == 1:
        # x == 1 modulo (x - 1)
        return [1 % modulus] if modulus is not None else [1]
    for bit in bin(n)[2:]:
        result = _reduce(_square(result), parts, L, modulus)
        if bit == "1":
            result = _reduce([0] + result, parts, L, modulus)
    return result


def e_term_fast(ds: DenominationSet, n: int, modulus: int | None = None) -> int:
    """E_n via polynomial exponentiation; reduced mod ``modulus`` if given.

    Cost is O(L^2 log n) coefficient operations with schoolbook squaring.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if modulus is not None and modulus < 2:
        raise ValueError(f"modulus must be >= 2, got {modulus}")
    L = ds.largest
    _check_work(L * L * max(n.bit_length(), 1), "e_term_fast")
    seed = mask_recurrence(ds.mask, L - 1)
    if n < L:
        value = seed[n]
        return value % modulus if modulus is not None else value
    residue = x_power_mod_charpoly(ds, n, modulus)
    value = sum(r * e for r, e in zip(residue, seed))
    return value % modulus if modulus is not None else value


# -- brute-force oracles ----------------------------------------------------

def _check_oracle(i: int, limit: int) -> None:
    if i < 0:
        raise ValueError(f"i must be non-negative, got {i}")
    if i > limit:
        raise OracleLimitExceeded(f"oracle refuses i={i} > {limit}")


def enumerate_compositions(ds: DenominationSet, i: int, *, limit: int = ORACLE_LIMIT) -> int:
    """Count ordered coin sequences summing to ``i`` by walking every one of them."""
    _check_oracle(i, limit)
    parts = ds.values
    count = 0
    stack = [i]
    while stack:
        remaining = stack.pop()
        if remaining == 0:
            count += 1
            continue
        for p in parts:
            if p > remaining:
                break
            stack.append(remaining - p)
    return count


def part_multisets(ds: DenominationSet, i: int) -> Iterator[PartMultiset]:
    """Every multiplicity vector over the allowed coins with weighted sum ``i``."""
    parts = ds.values
    L = ds.largest
    counts = [0] * L

    def walk(idx: int, remaining: int) -> Iterator[PartMultiset]:
        if remaining == 0:
            yield PartMultiset(tuple(counts))
            return
        if idx == len(parts):
            return
        p = parts[idx]
        for k in range(remaining // p, -1, -1):
            counts[p - 1] = k
            yield from walk(idx + 1, remaining - k * p)
        counts[p - 1] = 0

    yield from walk(0, i)


def multinomial_count(ds: DenominationSet, i: int, *, limit: int = ORACLE_LIMIT) -> int:
    """Sum of multinomial coefficients over all coin multisets worth ``i``."""
    _check_oracle(i, limit)
    return sum(pm.arrangements() for pm in part_multisets(ds, i))


# Printed expansions of E_1..E_5 as (coefficient, {coin: power}) monomials.
_EXPANSIONS: dict[int, list[tuple[int, dict[int, int]]]] = {
    1: [(1, {1: 1})],
    2: [(1, {2: 1}), (1, {1: 2})],
    3: [(1, {3: 1}), (2, {1: 1, 2: 1}), (1, {1: 3})],
    4: [(1, {4: 1}), (2, {1: 1, 3: 1}), (1, {2: 2}), (3, {1: 2, 2: 1}), (1, {1: 4})],
    5: [
        (1, {5: 1}),
        (2, {1: 1, 4: 1}),
        (2, {2: 1, 3: 1}),
        (3, {2: 2, 1: 1}),
        (4, {2: 1, 1: 3}),
        (3, {1: 2, 3: 1}),
        (1, {1: 5}),
    ],
}


def symbolic_expansion_check(i: int, mask: Sequence[int]) -> int:
    """Evaluate the hand-expanded polynomial for E_i (1 <= i <= 5) at a 0/1 mask."""
    if i not in _EXPANSIONS:
        raise UnsupportedIndex(f"expansion only available for i in 1..5, got {i}")
    b = list(mask) + [0] * max(0, 5 - len(mask))
    total = 0
    for coef, powers in _EXPANSIONS[i]:
        term = coef
        for j, k in powers.items():
            term *= b[j - 1] ** k
        total += term
    return total
