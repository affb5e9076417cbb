"""Rational generating function ``G(x) = P(x) / Q(x)`` of the stack counts.

Sign convention: ``Q(x) = B_L x^L + ... + B_1 x - 1`` has constant term -1,
and the collapsed numerator is the constant -1.  ``normalized_str`` renders
the familiar ``1 / (1 - sum B_j x^j)`` form for display only.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import zip_longest
from typing import Iterable, Sequence

from .denominations import DenominationSet
from .errors import NonUnitConstantTerm
from .recurrence import mask_recurrence


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, ascending powers; ``()`` is the zero polynomial."""

    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", _trim(int(c) for c in self.coeffs))

    @classmethod
    def constant(cls, c: int) -> IntPolynomial:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __neg__(self) -> IntPolynomial:
        return IntPolynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        return IntPolynomial(tuple(a + b for a, b in zip_longest(self.coeffs, other.coeffs, fillvalue=0)))

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        return self + (-other)

    def __mul__(self, other: IntPolynomial) -> IntPolynomial:
        if not self or not other:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(tuple(out))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return render(self)

    def to_json(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    @classmethod
    def from_json(cls, data: Sequence[str]) -> IntPolynomial:
        return cls(tuple(int(s) for s in data))


def _monomial(k: int) -> str:
    return "1" if k == 0 else ("x" if k == 1 else f"x^{k}")


def render(poly: IntPolynomial) -> str:
    """Ascending sparse text, e.g. ``-1 + x^2 + x^5`` or ``1 - 3*x``."""
    pieces: list[str] = []
    for k, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if k == 0:
            body = str(mag)
        elif mag == 1:
            body = _monomial(k)
        else:
            body = f"{mag}*{_monomial(k)}"
        if not pieces:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


@dataclass(frozen=True)
class RationalGF:
    numerator: IntPolynomial
    denominator: IntPolynomial

    def __str__(self) -> str:
        return f"({render(self.numerator)}) / ({render(self.denominator)})"

    def normalized_str(self) -> str:
        """Display with the denominator's constant term made +1."""
        if self.denominator[0] < 0:
            return f"({render(-self.numerator)}) / ({render(-self.denominator)})"
        return str(self)

    def to_json(self) -> str:
        return json.dumps({"numerator": self.numerator.to_json(), "denominator": self.denominator.to_json()})

    def series(self, n: int) -> list[int]:
        return series_expand(self, n)


def build_denominator(ds: DenominationSet) -> IntPolynomial:
    return IntPolynomial((-1,) + ds.mask)


def build_numerator_literal(ds: DenominationSet) -> IntPolynomial:
    """Numerator assembled bracket by bracket from the printed closed form.

    The coefficient of ``x^k`` (1 <= k <= L-1) is
    ``B_k + B_{k-1} E_1 + ... + B_1 E_{k-1} - E_k``; the constant is -1.
    Each bracket is the recurrence rearranged, so the result should always be -1.
    """
    L = ds.largest
    b = (0,) + ds.mask  # b[j] == B_j
    e = mask_recurrence(ds.mask, max(L - 1, 0))
    coeffs = [-1]
    for k in range(1, L):
        bracket = b[k]
        for t in range(1, k):
            bracket += b[k - t] * e[t]
        coeffs.append(bracket - e[k])
    return IntPolynomial(tuple(coeffs))


def literal_gf(ds: DenominationSet) -> RationalGF:
    return RationalGF(build_numerator_literal(ds), build_denominator(ds))


def simplified_gf(ds: DenominationSet) -> RationalGF:
    return RationalGF(IntPolynomial.constant(-1), build_denominator(ds))


def series_expand(gf: RationalGF, n: int) -> list[int]:
    """First ``n + 1`` power-series coefficients of ``P / Q``, exactly."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    q = gf.denominator.coeffs
    p = gf.numerator
    q0 = q[0] if q else 0
    if abs(q0) != 1:
        raise NonUnitConstantTerm(f"denominator constant term must be +-1, got {q0}")
    nz = [(j, qj) for j, qj in enumerate(q) if j and qj]
    out = [0] * (n + 1)
    for i in range(n + 1):
        acc = p[i]
        for j, qj in nz:
            if j > i:
                break
            acc -= qj * out[i - j]
        out[i] = acc * q0  # 1 / q0 == q0
    return out
