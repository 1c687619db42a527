"""Invertible sheaf classes on the base curve.

A class is determined exactly by its degree and the group sum of an underlying
divisor, so iso testing, tensoring, twisting, translation pullback and twisted
powers are all finite bookkeeping on ``(degree, sum)`` pairs, and the dimension
of global sections is a closed formula.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curvegroup import ZERO, Divisor, Point
from .errors import InputError


@dataclass(frozen=True)
class SheafClass:
    """Iso class of an invertible sheaf: (degree, sum of a defining divisor)."""

    degree: int
    sum_point: Point

    def is_isomorphic(self, other: "SheafClass") -> bool:
        return self == other

    def tensor(self, *others: "SheafClass") -> "SheafClass":
        d, s = self.degree, self.sum_point
        for o in others:
            d += o.degree
            s = s + o.sum_point
        return SheafClass(d, s)

    def dual(self) -> "SheafClass":
        return SheafClass(-self.degree, -self.sum_point)

    def twist(self, divisor: Divisor, sign: int = 1) -> "SheafClass":
        """Tensor with O(divisor) (sign +1) or O(-divisor) (sign -1)."""
        if sign not in (1, -1):
            raise InputError(f"twist sign must be +1 or -1, got {sign}")
        return SheafClass(
            self.degree + sign * divisor.degree,
            self.sum_point + divisor.sum_point.scale(sign),
        )

    def pullback(self, t: Point, k: int = 1) -> "SheafClass":
        """Pullback along translation by k steps of t.

        Degree is unchanged; the sum moves by -k * degree * t.
        """
        return SheafClass(self.degree, self.sum_point - t.scale(k * self.degree))

    def twisted_power(self, t: Point, n: int) -> "SheafClass":
        """The n-fold product L * L^t * L^{2t} * ... * L^{(n-1)t} (n >= 0).

        Degree n*d; sum n*s - d*n(n-1)/2 * t. For n = 0 this is the trivial
        class.
        """
        if n < 0:
            raise InputError(f"twisted power needs n >= 0, got {n}")
        d = self.degree
        return SheafClass(
            n * d,
            self.sum_point.scale(n) - t.scale(d * (n * (n - 1) // 2)),
        )

    def h0(self) -> int:
        """Dimension of global sections.

        degree >= 1: the degree; degree < 0: zero; degree 0: one exactly for
        the trivial class.
        """
        if self.degree >= 1:
            return self.degree
        if self.degree < 0:
            return 0
        return 1 if self.sum_point.is_zero else 0


def trivial_class() -> SheafClass:
    return SheafClass(0, ZERO)


def class_of_divisor(d: Divisor) -> SheafClass:
    return SheafClass(d.degree, d.sum_point)


def collinear_wrt(L: SheafClass, a: Point, b: Point, c: Point) -> bool:
    """Whether a, b, c lie on a common line section of the degree-3 class L.

    Exactly when a + b + c equals the sum of L. Requires deg L = 3.
    """
    if L.degree != 3:
        raise InputError(
            f"invalid-sheaf-degree: collinearity needs a degree-3 class, got {L.degree}"
        )
    return a + b + c == L.sum_point
