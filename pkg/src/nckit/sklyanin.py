"""Section spaces in a three-generator elliptic algebra and their products.

The context carries the degree-3 class L (sum normalized to zero in scenes)
and the translation point sigma. Basic spaces:

* ``w(a)``: degree-1 sections vanishing at a (dim 2),
* ``v(D)``: degree-2 sections vanishing on the divisor D (dim 6 - deg D),
* ``s1()``: the full degree-1 piece (dim 3),
* ``s_full(k)``: the full degree-k piece,
* ``line_through(a, b)``: the one-dimensional space spanned by the linear
  section vanishing at a, b and the forced third point,
* ``inv_line(a, b)``: its formal inverse, used to conjugate witnesses.

Products are computed by a closed list of certified rules; when no rule
applies, the result is an honest dimension interval. A space is
"vanishing-defined" when it consists of exactly the sections vanishing on its
recorded divisor; the flag is three-valued (True/False/None for unknown).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curvegroup import EMPTY_DIVISOR, Divisor, Point
from .errors import InputError, UnsupportedQuery
from .picard import SheafClass

# word atoms: ("W", a) | ("V", D) | ("S1",) | ("S", k) | ("line", a, b, c)
#           | ("inv_line", a, b, c) | ("WWdeg", b, c)
Atom = tuple


@dataclass(frozen=True)
class SectionSpace:
    """A subspace of a graded piece, with exact or interval dimension."""

    degree: int
    dim_lo: int
    dim_hi: int
    vanishing_divisor: Optional[Divisor]
    vanishing_defined: Optional[bool]
    word: tuple[Atom, ...]
    rule: str = "atom"

    @property
    def dim(self) -> int:
        if self.dim_lo != self.dim_hi:
            raise InputError(
                f"dimension not exact: only the interval [{self.dim_lo}, {self.dim_hi}] is certified"
            )
        return self.dim_lo

    @property
    def dim_exact(self) -> bool:
        return self.dim_lo == self.dim_hi

    @property
    def is_scalar(self) -> bool:
        return (
            self.dim_exact
            and self.dim_lo == 1
            and len(self.word) == 1
            and self.word[0][0] in ("line", "inv_line")
        )


def _exact(degree: int, dim: int, vdiv: Optional[Divisor], vdef: Optional[bool],
           word: tuple[Atom, ...], rule: str) -> SectionSpace:
    return SectionSpace(degree, dim, dim, vdiv, vdef, word, rule)


@dataclass(frozen=True)
class SklyaninContext:
    """The degree-3 class L and the translation sigma of the base algebra."""

    L: SheafClass
    sigma: Point

    def __post_init__(self) -> None:
        if self.L.degree != 3:
            raise InputError(
                f"invalid-sheaf-degree: context needs a degree-3 class, got {self.L.degree}"
            )

    @property
    def tau(self) -> Point:
        """Translation of the cubed ring: three sigma steps."""
        return self.sigma.scale(3)

    def shift(self, p: Point, k: int = 1) -> Point:
        """p moved by k sigma steps."""
        return p.translate(self.sigma, k)

    def third_point(self, a: Point, b: Point) -> Point:
        """The third vanishing point of the linear section through a and b."""
        return self.L.sum_point - a - b

    def is_collinear(self, a: Point, b: Point, c: Point) -> bool:
        return a + b + c == self.L.sum_point

    def graded_class(self, m: int) -> SheafClass:
        """The class whose sections realize the degree-m piece."""
        return self.L.twisted_power(self.sigma, m)

    def graded_dim(self, m: int) -> int:
        """dim of the full degree-m piece: 3m + dim of the piece 3 lower."""
        if m < 0:
            return 0
        if m == 0:
            return 1
        total = 0
        while m > 0:
            total += 3 * m
            m -= 3
        return total + (1 if m == 0 else 0)

    def h0_twisted(self, m: int, D: Divisor) -> int:
        """h0 of the degree-m class twisted down by D."""
        return self.graded_class(m).twist(D, -1).h0()

    # -- atoms ------------------------------------------------------------

    def w(self, a: Point) -> SectionSpace:
        return _exact(1, self.h0_twisted(1, Divisor.of(a)), Divisor.of(a), True,
                      (("W", a),), "atom")

    def v(self, D: Divisor) -> SectionSpace:
        if D.degree >= 6:
            raise InputError(
                f"divisor-too-large: degree-2 vanishing space needs deg D < 6, got {D.degree}"
            )
        if any(k < 0 for _, k in D.terms):
            raise InputError("vanishing divisor must be effective")
        return _exact(2, self.h0_twisted(2, D), D, True, (("V", D),), "atom")

    def s1(self) -> SectionSpace:
        return _exact(1, 3, EMPTY_DIVISOR, True, (("S1",),), "atom")

    def s_full(self, k: int) -> SectionSpace:
        if k < 0:
            raise InputError(f"graded piece index must be >= 0, got {k}")
        return _exact(k, self.graded_dim(k), EMPTY_DIVISOR, True, (("S", k),), "atom")

    def line_through(self, a: Point, b: Point) -> SectionSpace:
        c = self.third_point(a, b)
        D = Divisor.of(a, b, c)
        return _exact(1, 1, D, True, (("line", a, b, c),), "atom")

    def inv_line(self, a: Point, b: Point) -> SectionSpace:
        c = self.third_point(a, b)
        return _exact(-1, 1, None, False, (("inv_line", a, b, c),), "atom")

    # -- products ---------------------------------------------------------

    def mul(self, X: SectionSpace, Y: SectionSpace) -> SectionSpace:
        """Product space, by the first applicable certified rule.

        Falls back to an honest dimension interval with the product divisor
        as an upper-bound witness when no rule applies.
        """
        word = X.word + Y.word
        deg = X.degree + Y.degree

        # scalar factors preserve the dimension of the other factor
        if X.is_scalar or Y.is_scalar:
            other = Y if X.is_scalar else X
            return SectionSpace(deg, other.dim_lo, other.dim_hi, None, None,
                                word, "scalar-factor")

        ax = X.word[-1] if X.word else None
        ay = Y.word[0] if Y.word else None

        if len(X.word) == 1 and len(Y.word) == 1 and ax and ay:
            kx, ky = ax[0], ay[0]

            if kx == "W" and ky == "W":
                b, c = ax[1], ay[1]
                if c == self.shift(b, -2):
                    return _exact(2, 3, None, False, (("WWdeg", b, c),),
                                  "ww-degenerate")
                D = Divisor.of(b, self.shift(c, -1))
                return _exact(2, 4, D, True, (("V", D),), "ww-generic")

            if kx == "WWdeg" and ky == "S1":
                return _exact(3, 7, None, False, word, "ww-degenerate-extend")

            if kx == "V" and ky == "S1":
                D = ax[1]
                if D.degree == 2:
                    return _exact(3, 8, D, True, word, "v2-extend")
                if D.degree == 3:
                    pts = _divisor_points(D)
                    if self.is_collinear(*pts):
                        return _exact(3, 6, None, False, word, "v3-collinear")
                    return _exact(3, 7, D, True, word, "v3-extend")

            if kx == "S1" and ky == "V":
                D = ay[1]
                if D.degree == 2:
                    Dm = D.translate(self.sigma, -1)
                    return _exact(3, 8, Dm, True, word, "v2-extend-left")
                if D.degree == 3:
                    pts = [p.translate(self.sigma, 1) for p in _divisor_points(D)]
                    if self.is_collinear(*pts):
                        return _exact(3, 6, None, False, word, "v3-collinear-left")
                    return _exact(3, 7, D.translate(self.sigma, -1), True, word,
                                  "v3-extend-left")

            if kx == "W" and ky == "V" and ay[1].degree == 2:
                a, D = ax[1], ay[1]
                if D.multiplicity(self.shift(a, -2)) > 0:
                    return _exact(3, 6, None, False, word, "wv-degenerate")
                return _exact(3, 7, Divisor.of(a) + D.translate(self.sigma, -1),
                              True, word, "wv-generic")

            if kx == "V" and ky == "W" and ax[1].degree == 2:
                D, c = ax[1], ay[1]
                if D.multiplicity(self.shift(c, 1)) > 0:
                    return _exact(3, 6, None, False, word, "vw-degenerate")
                return _exact(3, 7, D + Divisor.of(self.shift(c, -2)), True, word,
                              "vw-generic")

            if kx in ("S", "S1") and ky in ("S", "S1"):
                jx = ax[1] if kx == "S" else 1
                jy = ay[1] if ky == "S" else 1
                return self.s_full(jx + jy)

        # fallback: honest interval
        lo = max(X.dim_lo, Y.dim_lo)
        hi = self.graded_dim(deg)
        if X.vanishing_divisor is not None and Y.vanishing_divisor is not None:
            D_up = X.vanishing_divisor + Y.vanishing_divisor.translate(
                self.sigma, -X.degree)
            hi = min(hi, self.h0_twisted(deg, D_up) + self.graded_dim(deg - 3))
        else:
            D_up = None
        return SectionSpace(deg, lo, hi, D_up, None, word, "fallback-bound")

    def mul_chain(self, *spaces: SectionSpace) -> SectionSpace:
        if not spaces:
            raise InputError("empty product")
        acc = spaces[0]
        for nxt in spaces[1:]:
            acc = self.mul(acc, nxt)
        return acc

    # -- rewriting --------------------------------------------------------

    def rewrite_commute(self, X: SectionSpace) -> SectionSpace:
        """Move the first movable degree-1 full piece across its neighbor.

        The rules, read left to right on the word:
            (W(a), S1)  -> (S1, W(sigma a))
            (V(D), S1)  -> (S1, V(sigma D))
            (S1, W(a))  -> (W(inv-sigma a), S1)
            (S1, V(D))  -> (V(inv-sigma D), S1)
        Dimension data and vanishing data are untouched; only the presentation
        changes. Raises when no adjacent pair matches.
        """
        word = X.word
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            new: tuple[Atom, ...] | None = None
            if b[0] == "S1" and a[0] == "W":
                new = (("S1",), ("W", self.shift(a[1], 1)))
            elif b[0] == "S1" and a[0] == "V":
                new = (("S1",), ("V", a[1].translate(self.sigma, 1)))
            elif a[0] == "S1" and b[0] == "W":
                new = (("W", self.shift(b[1], -1)), ("S1",))
            elif a[0] == "S1" and b[0] == "V":
                new = (("V", b[1].translate(self.sigma, -1)), ("S1",))
            if new is not None:
                return SectionSpace(
                    X.degree, X.dim_lo, X.dim_hi, X.vanishing_divisor,
                    X.vanishing_defined, word[:i] + new + word[i + 2:],
                    X.rule,
                )
        raise UnsupportedQuery("no-rule-applies: no adjacent pair can be commuted")


def _divisor_points(D: Divisor) -> list[Point]:
    pts: list[Point] = []
    for p, k in D.terms:
        pts.extend([p] * k)
    return pts


def word_str(space: SectionSpace) -> str:
    parts = []
    for atom in space.word:
        kind = atom[0]
        if kind == "W":
            parts.append(f"W({atom[1]})")
        elif kind == "V":
            parts.append(f"V({atom[1]})")
        elif kind == "S1":
            parts.append("S_1")
        elif kind == "S":
            parts.append(f"S_{atom[1]}")
        elif kind == "line":
            parts.append(f"x({atom[1]}; {atom[2]}; {atom[3]})")
        elif kind == "inv_line":
            parts.append(f"x({atom[1]}; {atom[2]}; {atom[3]})^-1")
        elif kind == "WWdeg":
            parts.append(f"[W({atom[1]})W({atom[2]})]")
        else:
            parts.append(str(atom))
    return " * ".join(parts) if parts else "1"
