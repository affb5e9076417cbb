"""Representability queries and the Frobenius number via stack counts.

An amount ``S`` can be paid with the coins exactly when at least one ordered
stack is worth ``S``, i.e. when ``E_S > 0``.  The unordered count ``F_S`` is
computed independently here (classic coin-change accumulation) to cross-check
that bridge.
"""
from __future__ import annotations

import enum
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterable

from ._limits import max_work
from .denominations import DenominationSet
from .errors import ResourceLimit, SearchLimitExceeded
from .recurrence import e_sequence, e_term_fast, iter_terms

# isolated targets above FAST_FACTOR * L go through polynomial exponentiation
FAST_FACTOR = 8


@dataclass(frozen=True)
class RepresentabilityReport:
    target: int
    representable: bool
    e_value: int


class FrobeniusKind(str, enum.Enum):
    FINITE = "finite"
    ALL_REPRESENTABLE = "all_representable"
    INFINITE_GAP = "infinite_gap"


@dataclass(frozen=True)
class FrobeniusResult:
    """Outcome of the Frobenius search.

    ``value`` is None unless ``kind`` is FINITE (the Frobenius number is
    undefined, or -1 by convention, when every amount is payable).
    ``certificate`` is the inclusive index range ``(start, stop)`` of the run of
    consecutive payable amounts that ended the search.
    """

    kind: FrobeniusKind
    value: int | None = None
    certificate: tuple[int, int] | None = None


def is_representable(ds: DenominationSet, target: int) -> RepresentabilityReport:
    if target < 0:
        raise ValueError(f"target must be non-negative, got {target}")
    if target % ds.gcd:
        return RepresentabilityReport(target, False, 0)
    if target > FAST_FACTOR * ds.largest:
        e = e_term_fast(ds, target)
    else:
        e = e_sequence(ds, target).terms[target]
    return RepresentabilityReport(target, e > 0, e)


def representability_batch(
    ds: DenominationSet, targets: Iterable[int], *, workers: int | None = None
) -> list[RepresentabilityReport]:
    """Reports for many targets, in input order.

    With ``workers`` unset a single streamed sequence up to ``max(targets)``
    answers every query; with ``workers`` the targets are evaluated
    independently on a thread pool.
    """
    targets = list(targets)
    if not targets:
        return []
    if any(t < 0 for t in targets):
        raise ValueError("targets must be non-negative")
    if workers:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda t: is_representable(ds, t), targets))
    terms = e_sequence(ds, max(targets)).terms
    return [RepresentabilityReport(t, terms[t] > 0, terms[t]) for t in targets]


def default_search_bound(ds: DenominationSet) -> int:
    return ds.smallest * ds.largest


def frobenius_number(ds: DenominationSet, *, bound: int | None = None) -> FrobeniusResult:
    """Largest amount that no stack of coins can reach.

    Streams ``E_0, E_1, ...`` until ``smallest`` consecutive positive terms
    appear; from there on adding the smallest coin keeps every amount payable.
    """
    if ds.gcd > 1:
        return FrobeniusResult(FrobeniusKind.INFINITE_GAP)
    m = ds.smallest
    if bound is None:
        bound = default_search_bound(ds)
    if bound * len(ds) > max_work():
        raise ResourceLimit(f"Frobenius search up to {bound} exceeds work bound {max_work()}")

    last_zero = None
    run = 0
    for i, e in enumerate(iter_terms(ds)):
        if i > bound:
            raise SearchLimitExceeded(f"no run of {m} payable amounts before index {bound}")
        if e:
            run += 1
            if run == m:
                cert = (i - m + 1, i)
                if last_zero is None:
                    return FrobeniusResult(FrobeniusKind.ALL_REPRESENTABLE, None, cert)
                return FrobeniusResult(FrobeniusKind.FINITE, last_zero, cert)
        else:
            run = 0
            last_zero = i
    raise AssertionError("unreachable")


def partition_counts(ds: DenominationSet, n: int) -> list[int]:
    """F_0..F_n: number of coin multisets worth each amount."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if n * len(ds) > max_work():
        raise ResourceLimit(f"partition_count up to {n} exceeds work bound {max_work()}")
    ways = [1] + [0] * n
    for coin in ds.values:
        for amount in range(coin, n + 1):
            ways[amount] += ways[amount - coin]
    return ways


def partition_count(ds: DenominationSet, i: int) -> int:
    return partition_counts(ds, i)[i]
