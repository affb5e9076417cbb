"""Coin denomination sets and their binary indicator mask.

A denomination set is a finite set of distinct positive integers. Its mask is
the 0/1 vector ``B_1..B_L`` (``L`` the largest coin) that the stack-count
recurrence consumes directly.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable

from .errors import EmptyInput, Malformed, NonPositive, TooLarge

L_MAX = 10_000

_INT_TOKEN = re.compile(r"[+-]?\d+")


@dataclass(frozen=True)
class DenominationSet:
    """Validated, immutable set of coin values.

    ``mask`` is stored 0-based: ``mask[j - 1]`` is the flag for coin value ``j``.
    """

    values: tuple[int, ...]
    largest: int = field(init=False)
    mask: tuple[int, ...] = field(init=False, repr=False)
    gcd: int = field(init=False)

    def __post_init__(self) -> None:
        vals = tuple(self.values)
        if not vals:
            raise EmptyInput("denomination set must not be empty")
        if any(not isinstance(v, int) or isinstance(v, bool) for v in vals):
            raise Malformed(f"denominations must be integers: {vals!r}")
        if any(v <= 0 for v in vals):
            raise NonPositive(f"denominations must be positive: {vals!r}")
        if list(vals) != sorted(set(vals)):
            raise ValueError(
                "values must be strictly increasing; use DenominationSet.of() to normalize"
            )
        largest = vals[-1]
        mask = [0] * largest
        for v in vals:
            mask[v - 1] = 1
        object.__setattr__(self, "values", vals)
        object.__setattr__(self, "largest", largest)
        object.__setattr__(self, "mask", tuple(mask))
        object.__setattr__(self, "gcd", math.gcd(*vals))

    @classmethod
    def of(cls, values: Iterable[int], *, max_value: int = L_MAX) -> DenominationSet:
        """Deduplicate, sort and validate an arbitrary iterable of coin values."""
        vals = list(values)
        if not vals:
            raise EmptyInput("denomination set must not be empty")
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool):
                raise Malformed(f"not an integer denomination: {v!r}")
            if v <= 0:
                raise NonPositive(f"denomination must be positive, got {v}")
        top = max(vals)
        if top > max_value:
            raise TooLarge(f"largest denomination {top} exceeds limit {max_value}")
        return cls(tuple(sorted(set(vals))))

    @classmethod
    def from_mask(cls, mask: Iterable[int]) -> DenominationSet:
        return cls.of(j for j, flag in enumerate(mask, start=1) if flag)

    @property
    def smallest(self) -> int:
        return self.values[0]

    @property
    def count(self) -> int:
        """Number of denominations (popcount of the mask)."""
        return len(self.values)

    def __contains__(self, item: object) -> bool:
        return item in self.values

    def __iter__(self):
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def scaled(self, factor: int) -> DenominationSet:
        return DenominationSet.of((v * factor for v in self.values), max_value=self.largest * factor)

    def serialize(self) -> str:
        return serialize(self)

    def __str__(self) -> str:
        return self.serialize()


def parse_denominations(text: str, *, max_value: int = L_MAX) -> DenominationSet:
    """Parse ``"6, 9,20"`` style input into a :class:`DenominationSet`.

    Duplicates are dropped and the values sorted.  Raises ``EmptyInput``,
    ``Malformed``, ``NonPositive`` or ``TooLarge``.
    """
    if text is None or not text.strip():
        raise EmptyInput("no denominations given")
    tokens = [tok.strip() for tok in text.split(",")]
    if all(not tok for tok in tokens):
        raise EmptyInput("no denominations given")
    values = []
    for tok in tokens:
        if not _INT_TOKEN.fullmatch(tok):
            raise Malformed(f"not an integer: {tok!r}")
        values.append(int(tok))
    return DenominationSet.of(values, max_value=max_value)


def serialize(ds: DenominationSet) -> str:
    return ",".join(str(v) for v in ds.values)


def mask_of(ds: DenominationSet) -> list[int]:
    """Indicator list of length ``ds.largest``; entry ``j-1`` is 1 iff ``j`` is a coin."""
    return list(ds.mask)


def values_from_mask(mask: Iterable[int]) -> list[int]:
    return [j for j, flag in enumerate(mask, start=1) if flag]
