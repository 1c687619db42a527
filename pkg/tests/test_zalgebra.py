"""Graded windows: exponent bookkeeping, normalization, veronese, solver."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from nckit.curvegroup import ZERO, Divisor, gen, point
from nckit.errors import CheckFailed, InputError
from nckit.picard import SheafClass, class_of_divisor
from nckit.zalgebra import (
    SolvedPlane,
    StandardZAlgebra,
    ZPiece,
    binomial_growth_ok,
    check_periodic,
    composite_class,
    exponent_map,
    normalize,
    recognition_zalgebra,
    sheaf_sequence_window,
    solve_three_generator,
    veronese,
)


def _harvest():
    p, q, s = gen("p"), gen("q"), gen("s")
    t = s.scale(3)
    a = -(p + q)
    b, c = p, q
    d = a - t
    e, f = p + t, q + t
    N = SheafClass(9, s.scale(-9))
    return (a, b, c, d, e, f), N, t


def _window(ds, tau=None):
    """A window over [lo, hi] with the given d pattern and throwaway classes."""
    lo = -(len(ds) // 2)
    tau = tau if tau is not None else gen("t")
    pieces = [
        ZPiece(lo + i, SheafClass(3, point({"u": lo + i})), d)
        for i, d in enumerate(ds)
    ]
    return StandardZAlgebra(tau, tuple(pieces))


def test_window_must_contain_zero():
    t = gen("t")
    with pytest.raises(InputError):
        exponent_map(StandardZAlgebra(t, (ZPiece(2, SheafClass(3, ZERO), 0),)))


def test_window_must_be_contiguous():
    t = gen("t")
    with pytest.raises(InputError):
        StandardZAlgebra(
            t,
            (ZPiece(0, SheafClass(3, ZERO), 0), ZPiece(2, SheafClass(3, ZERO), 0)),
        )


@settings(max_examples=200)
@given(st.lists(st.integers(-2, 2), min_size=1, max_size=9))
def test_exponent_invariance(ds):
    """e_i plus the summed step exponents from i down to j recovers e_j."""
    A = _window(ds)
    e = exponent_map(A)
    for i in range(A.lo, A.hi + 2):
        for j in range(A.lo, i):
            d_ij = sum(A.piece(k).d for k in range(j, i))
            assert e[i] + d_ij == e[j]


def test_exponent_closed_form_for_recognition_pattern():
    (a, b, c, d, e, f), N, t = _harvest()
    A = recognition_zalgebra(a, b, c, d, e, f, N, t, -6, 6)
    em = exponent_map(A)
    for n in range(0, 7):
        assert em[n + 1] == -(n // 3)
    for n in range(-6, 1):
        assert em[n] == sum(1 for i in range(n, 1) if i % 3 == 0)


def test_recognition_pattern_periods():
    (a, b, c, d, e, f), N, t = _harvest()
    A = recognition_zalgebra(a, b, c, d, e, f, N, t, -6, 6)
    assert all(p.cls.degree == 3 for p in A.pieces)
    assert all(p.d == (1 if p.n % 3 == 0 else 0) for p in A.pieces)
    assert check_periodic(A, 3)
    assert not check_periodic(A, 1)


def test_normalize_zeroes_the_exponents():
    (a, b, c, d, e, f), N, t = _harvest()
    A = recognition_zalgebra(a, b, c, d, e, f, N, t, -3, 3)
    em, B = normalize(A)
    assert all(p.d == 0 for p in B.pieces)
    for p in B.pieces:
        assert p.cls == A.piece(p.n).cls.pullback(t, em[p.n + 1])
    em2, B2 = normalize(B)
    assert B2 == B
    assert all(v == 0 for v in em2.values())


def test_normalize_is_identity_on_exponent_free_windows():
    A = _window([0, 0, 0, 0])
    em, B = normalize(A)
    assert B == A
    assert set(em.values()) == {0}


def test_veronese_step_one_is_the_identity():
    A = _window([1, 0, 2, 0, 1])
    V = veronese(A, 1, 0, A.lo, A.hi - 1)
    for p in V.pieces:
        orig = A.piece(p.n)
        assert p.cls == orig.cls
        assert p.d == orig.d


def test_veronese_step_three_reaches_the_principal_form():
    """Composing three adjacent pieces gives the degree-9 class with d = 1,
    independently of the veronese position."""
    (a, b, c, d, e, f), N, t = _harvest()
    A = recognition_zalgebra(a, b, c, d, e, f, N, t, -6, 6)
    V = veronese(A, 3, 2, -2, 0)
    for p in V.pieces:
        assert p.cls == N
        assert p.d == 1
    assert check_periodic(V, 1)


def test_composite_class_accumulates_pullbacks():
    A = _window([1, 0, 0, 1, 0])
    i, j = A.hi + 1, A.lo
    cls, total = composite_class(A, i, j)
    assert total == sum(A.piece(k).d for k in range(j, i))
    assert cls.degree == sum(A.piece(k).cls.degree for k in range(j, i))
    with pytest.raises(InputError):
        composite_class(A, j, i)


def test_binomial_growth_table():
    good = {(i, j): math.comb(i - j + 2, 2) for j in range(4) for i in range(j, j + 5)}
    assert binomial_growth_ok(good)
    bad = dict(good)
    bad[(3, 1)] += 1
    assert not binomial_growth_ok(bad)
    with pytest.raises(InputError):
        binomial_growth_ok({(0, 1): 1})


def test_solver_on_harvested_data():
    (a, b, c, d, e, f), N, t = _harvest()
    solved = solve_three_generator(a, b, c, d, e, f, N, t)
    # sigma is one third of the translation point
    assert solved.sigma.scale(3) == t
    assert solved.sigma == gen("s")
    assert solved.L.degree == 3
    assert solved.L.sum_point == gen("s").scale(-3)
    # the two pullbacks reproduce the marked-point classes
    assert solved.L.pullback(solved.sigma, -1) == class_of_divisor(Divisor.of(a, b, c))
    assert solved.L.pullback(solved.sigma, -2) == class_of_divisor(Divisor.of(d, e, f))


def test_solver_need2_gate():
    (a, b, c, d, e, f), N, t = _harvest()
    bad_N = SheafClass(9, N.sum_point + gen("p"))
    with pytest.raises(CheckFailed) as err:
        solve_three_generator(a, b, c, d, e, f, bad_N, t)
    assert err.value.check == "need2-failed"


def test_solver_need1_gate():
    (a, b, c, d, e, f), N, t = _harvest()
    with pytest.raises(CheckFailed) as err:
        solve_three_generator(a, b, c, d + gen("p"), e, f, N, t)
    assert err.value.check == "need1-failed"


def test_sheaf_window_agrees_on_solved_data():
    (a, b, c, d, e, f), N, t = _harvest()
    solved = solve_three_generator(a, b, c, d, e, f, N, t)
    rows = sheaf_sequence_window(solved, a, b, c, d, e, f, t, 9)
    assert len(rows) == 19
    assert all(eq for _, _, _, eq in rows)
    assert {n for n, _, _, _ in rows} == set(range(-9, 10))


def test_sheaf_window_detects_tampering():
    (a, b, c, d, e, f), N, t = _harvest()
    solved = solve_three_generator(a, b, c, d, e, f, N, t)
    fake = SolvedPlane(solved.sigma + gen("p"), solved.L)
    rows = sheaf_sequence_window(fake, a, b, c, d, e, f, t, 5)
    assert not all(eq for _, _, _, eq in rows)
