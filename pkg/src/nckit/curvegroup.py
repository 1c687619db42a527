"""Exact points and divisors on the base curve.

A point is a finite rational combination of named generator symbols, i.e. an
element of the free vector space over Q spanned by those symbols. The group law
is written additively; translation by k steps of t is ``p + k * t``. Working
over Q makes the group torsion-free and makes division by integers (needed for
"one third of a translation" constructions) exact.

Divisors are finite formal Z-combinations of points, with exact degree and sum.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Union

Rat = Union[int, Fraction]


@dataclass(frozen=True, order=True)
class Point:
    """A curve point: canonical sorted tuple of (generator, coefficient) pairs.

    Zero coefficients are dropped, so equality of the tuples is equality in the
    group. Construct via :func:`point`, :func:`gen` or :meth:`from_map`.
    """

    coeffs: tuple[tuple[str, Fraction], ...] = ()

    @staticmethod
    def from_map(m: Mapping[str, Rat]) -> "Point":
        items = []
        for g, c in m.items():
            f = Fraction(c)
            if f != 0:
                items.append((str(g), f))
        return Point(tuple(sorted(items)))

    def as_map(self) -> dict[str, Fraction]:
        return dict(self.coeffs)

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "Point") -> "Point":
        m = self.as_map()
        for g, c in other.coeffs:
            m[g] = m.get(g, Fraction(0)) + c
        return Point.from_map(m)

    def __neg__(self) -> "Point":
        return Point(tuple((g, -c) for g, c in self.coeffs))

    def __sub__(self, other: "Point") -> "Point":
        return self + (-other)

    def scale(self, k: Rat) -> "Point":
        f = Fraction(k)
        if f == 0:
            return Point()
        return Point(tuple((g, c * f) for g, c in self.coeffs))

    def translate(self, t: "Point", k: int = 1) -> "Point":
        """The point moved by k steps of the translation t."""
        return self + t.scale(k)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for g, c in self.coeffs:
            if c == 1:
                parts.append(g)
            elif c == -1:
                parts.append(f"-{g}")
            else:
                parts.append(f"{c}*{g}")
        return " + ".join(parts).replace("+ -", "- ")


ZERO = Point()


def gen(name: str) -> Point:
    """The generator point with the given symbol name."""
    return Point(((name, Fraction(1)),))


def point(m: Mapping[str, Rat]) -> Point:
    return Point.from_map(m)


@dataclass(frozen=True)
class Divisor:
    """A finite formal Z-combination of points, canonically sorted, no zeros."""

    terms: tuple[tuple[Point, int], ...] = ()

    @staticmethod
    def from_terms(terms: Mapping[Point, int] | Iterable[tuple[Point, int]]) -> "Divisor":
        acc: dict[Point, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for p, k in items:
            acc[p] = acc.get(p, 0) + int(k)
        return Divisor(tuple(sorted((p, k) for p, k in acc.items() if k != 0)))

    @staticmethod
    def of(*points: Point) -> "Divisor":
        """The reduced-looking divisor p1 + p2 + ... (repeats accumulate)."""
        return Divisor.from_terms((p, 1) for p in points)

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.terms)

    @property
    def sum_point(self) -> Point:
        s = ZERO
        for p, k in self.terms:
            s = s + p.scale(k)
        return s

    def stats(self) -> tuple[int, Point]:
        """(degree, group sum) of the divisor."""
        return self.degree, self.sum_point

    def multiplicity(self, p: Point) -> int:
        for q, k in self.terms:
            if q == p:
                return k
        return 0

    @property
    def support(self) -> tuple[Point, ...]:
        return tuple(p for p, _ in self.terms)

    def __add__(self, other: "Divisor") -> "Divisor":
        return Divisor.from_terms(list(self.terms) + list(other.terms))

    def __neg__(self) -> "Divisor":
        return Divisor(tuple((p, -k) for p, k in self.terms))

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self + (-other)

    def translate(self, t: Point, k: int = 1) -> "Divisor":
        """Move every point of the divisor by k steps of t."""
        return Divisor.from_terms(((p.translate(t, k), m) for p, m in self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for p, k in self.terms:
            if k == 1:
                parts.append(f"({p})")
            else:
                parts.append(f"{k}*({p})")
        return " + ".join(parts)


EMPTY_DIVISOR = Divisor()
