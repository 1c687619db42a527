"""Rational Hilbert series with denominator a power of (1 - s).

A series is ``P(s) / (1-s)^k`` with P an integer Laurent polynomial (a shift
plus a coefficient tuple) and k >= 0. The canonical form strips zero
coefficients at both ends and cancels every common factor of (1 - s) between
numerator and denominator, so equality of canonical forms is equality of the
underlying formal series. Coefficients are extracted exactly by binomial
convolution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import InputError


def _strip(shift: int, coeffs: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    lo = 0
    hi = len(coeffs)
    while lo < hi and coeffs[lo] == 0:
        lo += 1
    while hi > lo and coeffs[hi - 1] == 0:
        hi -= 1
    if lo == hi:
        return 0, ()
    return shift + lo, coeffs[lo:hi]


def _divide_by_one_minus_s(coeffs: tuple[int, ...]) -> tuple[int, ...] | None:
    """Quotient coeffs / (1 - s) when exact (coefficient sum zero), else None."""
    total = 0
    out = []
    for a in coeffs:
        total += a
        out.append(total)
    if total != 0:
        return None
    return tuple(out[:-1])


@dataclass(frozen=True)
class HilbertSeries:
    """Canonical rational series P(s)/(1-s)^pole, P starting at s^shift."""

    shift: int = 0
    coeffs: tuple[int, ...] = ()
    pole: int = 0

    @staticmethod
    def make(coeffs: Iterable[int], shift: int = 0, pole: int = 0) -> "HilbertSeries":
        if pole < 0:
            raise InputError(f"pole order must be >= 0, got {pole}")
        shift, tup = _strip(shift, tuple(int(c) for c in coeffs))
        while pole > 0 and tup:
            q = _divide_by_one_minus_s(tup)
            if q is None:
                break
            shift, tup = _strip(shift, q)
            pole -= 1
        if not tup:
            return HilbertSeries(0, (), 0)
        return HilbertSeries(shift, tup, pole)

    @staticmethod
    def zero() -> "HilbertSeries":
        return HilbertSeries(0, (), 0)

    @staticmethod
    def monomial(n: int, pole: int = 0) -> "HilbertSeries":
        """s^n / (1-s)^pole."""
        return HilbertSeries.make((1,), shift=n, pole=pole)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def _with_pole(self, k: int) -> tuple[int, tuple[int, ...]]:
        """Numerator data of this series rewritten over (1-s)^k, k >= pole."""
        shift, tup = self.shift, self.coeffs
        for _ in range(k - self.pole):
            # multiply numerator by (1 - s)
            new = [0] * (len(tup) + 1)
            for i, a in enumerate(tup):
                new[i] += a
                new[i + 1] -= a
            tup = tuple(new)
        return shift, tup

    def __add__(self, other: "HilbertSeries") -> "HilbertSeries":
        k = max(self.pole, other.pole)
        s1, c1 = self._with_pole(k)
        s2, c2 = other._with_pole(k)
        lo = min(s1, s2) if (c1 or c2) else 0
        hi = max(s1 + len(c1), s2 + len(c2)) if (c1 or c2) else 0
        acc = [0] * (hi - lo)
        for i, a in enumerate(c1):
            acc[s1 - lo + i] += a
        for i, a in enumerate(c2):
            acc[s2 - lo + i] += a
        return HilbertSeries.make(acc, shift=lo, pole=k)

    def __neg__(self) -> "HilbertSeries":
        return HilbertSeries(self.shift, tuple(-a for a in self.coeffs), self.pole)

    def __sub__(self, other: "HilbertSeries") -> "HilbertSeries":
        return self + (-other)

    def __mul__(self, other: "HilbertSeries") -> "HilbertSeries":
        if self.is_zero or other.is_zero:
            return HilbertSeries.zero()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return HilbertSeries.make(
            out, shift=self.shift + other.shift, pole=self.pole + other.pole
        )

    def scale(self, k: int) -> "HilbertSeries":
        return HilbertSeries.make(
            tuple(k * a for a in self.coeffs), shift=self.shift, pole=self.pole
        )

    def coefficient(self, n: int) -> int:
        """The exact coefficient of s^n in the expanded series."""
        if self.pole == 0:
            i = n - self.shift
            if 0 <= i < len(self.coeffs):
                return self.coeffs[i]
            return 0
        total = 0
        k = self.pole
        for j, a in enumerate(self.coeffs):
            m = n - (self.shift + j)
            if m >= 0:
                total += a * math.comb(m + k - 1, k - 1)
        return total

    def coefficients(self, upto: int) -> list[int]:
        return [self.coefficient(n) for n in range(upto + 1)]

    def numerator_str(self) -> str:
        if not self.coeffs:
            return "0"
        parts: list[str] = []
        for j, a in enumerate(self.coeffs):
            if a == 0:
                continue
            e = self.shift + j
            mag = abs(a)
            if e == 0:
                body = str(mag)
            elif e == 1:
                body = "s" if mag == 1 else f"{mag}s"
            else:
                body = f"s^{e}" if mag == 1 else f"{mag}s^{e}"
            if not parts:
                parts.append(body if a > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if a > 0 else f"- {body}")
        return " ".join(parts)

    def __str__(self) -> str:
        num = self.numerator_str()
        if self.pole == 0:
            return num
        denom = "(1-s)" if self.pole == 1 else f"(1-s)^{self.pole}"
        single_term = sum(1 for a in self.coeffs if a != 0) == 1
        if single_term and not num.startswith("-"):
            return f"{num}/{denom}"
        return f"({num})/{denom}"


def line_module_series(i: int = 0) -> HilbertSeries:
    """s^i / (1-s)^2, the series of a shifted line module."""
    return HilbertSeries.monomial(i, pole=2)


def elliptic_algebra_series(d: int) -> HilbertSeries:
    """(1 + (d-2)s + s^2)/(1-s)^3 for a degree-d algebra, d >= 2."""
    if d < 2:
        raise InputError(f"degree-too-small: elliptic algebra series needs d >= 2, got {d}")
    return HilbertSeries.make((1, d - 2, 1), pole=3)


def tcr_section_series(d: int) -> HilbertSeries:
    """(1 + (d-2)s + s^2)/(1-s)^2 for a degree-d section ring, d >= 1."""
    if d < 1:
        raise InputError(f"degree-too-small: section ring series needs d >= 1, got {d}")
    return HilbertSeries.make((1, d - 2, 1), pole=2)


def lift_central_divisible(h: HilbertSeries) -> HilbertSeries:
    """h / (1-s): the series of a module that is torsion-free over a central
    degree-1 element with quotient series h."""
    return HilbertSeries.make(h.coeffs, shift=h.shift, pole=h.pole + 1)


@dataclass(frozen=True)
class LineCohomology:
    """Cohomology and pairing bookkeeping of a shifted line against the algebra."""

    hom_dim: int
    ext1_dim: int
    ext2_dim: int
    pair_algebra_line: int
    pair_line_algebra: int


def line_cohomology_table(n: int) -> LineCohomology:
    """For the shifted line L[n]: dims of Hom/Ext from the algebra and both
    pairings, as functions of the shift alone."""
    return LineCohomology(
        hom_dim=max(n + 1, 0),
        ext1_dim=max(-n - 1, 0),
        ext2_dim=0,
        pair_algebra_line=-n - 1,
        pair_line_algebra=-n,
    )
