"""Hom series between shifted section modules of a twisted coordinate ring.

The ring is determined by a translation point t and an ample class N (degree
>= 1). A section module is indexed by a twisting class G; the degree-n piece of
Hom from module G_j to module G_i has dimension

    h0( dual(pullback(G_j, t, n)) * G_i * N_n ),     N_n = twisted power of N,

for n >= 0. Those dimensions grow linearly once the per-degree class has
positive degree, so a finite window of second differences determines the
numerator of the series over (1-s)^2 exactly; a central degree-1 lift then
gives the full series over (1-s)^3.
"""

from __future__ import annotations

from dataclasses import dataclass

from .curvegroup import Divisor, Point
from .errors import InputError
from .hilbert import HilbertSeries, lift_central_divisible
from .picard import SheafClass, class_of_divisor, trivial_class


@dataclass(frozen=True)
class TwistedRing:
    """Base data: translation point t and ample class N."""

    t: Point
    N: SheafClass

    def __post_init__(self) -> None:
        if self.N.degree < 1:
            raise InputError(
                f"degree-too-small: twisted ring needs deg N >= 1, got {self.N.degree}"
            )

    def piece_class(self, Gj: SheafClass, Gi: SheafClass, n: int) -> SheafClass:
        """The sheaf class whose sections are the degree-n Hom piece."""
        return Gj.pullback(self.t, n).dual().tensor(Gi, self.N.twisted_power(self.t, n))

    def hom_piece_dim(self, Gj: SheafClass, Gi: SheafClass, n: int) -> int:
        if n < 0:
            return 0
        return self.piece_class(Gj, Gi, n).h0()

    def hom_series(self, Gj: SheafClass, Gi: SheafClass) -> HilbertSeries:
        """Exact Hilbert series of Hom(module G_j, module G_i) over (1-s)^3."""
        # find where the per-degree class degree becomes >= 1 (it increases by
        # deg N >= 1 each step, so this terminates)
        n0 = 0
        while self.piece_class(Gj, Gi, n0).degree < 1:
            n0 += 1
        dims: dict[int, int] = {}

        def d(n: int) -> int:
            if n not in dims:
                dims[n] = self.hom_piece_dim(Gj, Gi, n)
            return dims[n]

        numer = []
        for n in range(n0 + 3):
            numer.append(d(n) - 2 * d(n - 1) + d(n - 2))
        level2 = HilbertSeries.make(numer, pole=2)
        return lift_central_divisible(level2)


def recognition_hom_matrix(
    a: Point, b: Point, c: Point, d: Point, e: Point, f: Point,
    N: SheafClass, t: Point,
) -> list[list[HilbertSeries]]:
    """The 3x3 matrix of Hom series between the three distinguished modules.

    The modules are twisted by O(-a-b-c), the trivial class, and O(d+e+f).
    Entry (i, j) is the series of Hom(module j, module i), indexed from 0.
    """
    ring = TwistedRing(t, N)
    G = [
        class_of_divisor(Divisor.of(a, b, c)).dual(),
        trivial_class(),
        class_of_divisor(Divisor.of(d, e, f)),
    ]
    return [[ring.hom_series(G[j], G[i]) for j in range(3)] for i in range(3)]


def section_dim(N: SheafClass, t: Point, n: int) -> int:
    """Dimension of the degree-n sections piece of the ring itself."""
    if n < 0:
        return 0
    return N.twisted_power(t, n).h0()
