"""The nine headline checks, one test per criterion, with time budgets.

Each test prints a single "criterion N ...: PASS/FAIL" line (visible under
pytest -s); under pytest -v the per-test PASSED/FAILED column gives the same
one-line-per-criterion summary. All comparisons are exact; no tolerances.
"""

import contextlib
import random
import time
from fractions import Fraction

import pytest

from nckit.curvegroup import ZERO, Divisor, Point, gen
from nckit.errors import CheckFailed
from nckit.hilbert import HilbertSeries, line_module_series
from nckit.picard import SheafClass
from nckit.sklyanin import SklyaninContext
from nckit.surface import (
    QuadricData,
    blowdown,
    check_balance,
    converse_scene,
    cremona_scene,
    cremona_transform,
    hexagon_matrix,
    quadric_to_plane,
    recognize,
)
from nckit.tcrhom import recognition_hom_matrix
from nckit.zalgebra import sheaf_sequence_window, solve_three_generator


@contextlib.contextmanager
def _criterion(n, label):
    try:
        yield
    except BaseException:
        print(f"criterion {n} ({label}): FAIL")
        raise
    print(f"criterion {n} ({label}): PASS")


def _ctx():
    return SklyaninContext(SheafClass(3, ZERO), gen("s"))


def _rand_point(rng, names=("x", "y", "s")):
    return Point.from_map(
        {n: Fraction(rng.randint(-12, 12), rng.randint(1, 4)) for n in names}
    )


def _generic_triple(rng, ctx):
    """Draw (p, q, r) until the distinctness and non-collinearity conditions
    hold; the gate itself re-derives them."""
    while True:
        p, q, r = (_rand_point(rng) for _ in range(3))
        if p == q or q == r or p == r:
            continue
        pts = [p, q, r]
        ok = True
        for i in range(3):
            for j in range(i, 3):
                for k in range(j, 3):
                    if (pts[i] + pts[j] + pts[k] + ctx.tau).is_zero:
                        ok = False
        if ok:
            return p, q, r


def test_criterion_1_hom_matrix_closed_forms():
    with _criterion(1, "hom matrix closed forms, < 0.1 s"):
        p, q, s = gen("p"), gen("q"), gen("s")
        t = s.scale(3)
        a, b, c = -(p + q), p, q
        d, e, f = a - t, p + t, q + t
        N = SheafClass(9, s.scale(-9))
        start = time.perf_counter()
        m = recognition_hom_matrix(a, b, c, d, e, f, N, t)
        elapsed = time.perf_counter() - start
        assert [[str(h) for h in row] for row in m] == [
            ["(1 + 7s + s^2)/(1-s)^3", "(6s + 3s^2)/(1-s)^3", "(3s + 6s^2)/(1-s)^3"],
            ["(3 + 6s)/(1-s)^3", "(1 + 7s + s^2)/(1-s)^3", "(6s + 3s^2)/(1-s)^3"],
            ["(6 + 3s)/(1-s)^3", "(3 + 6s)/(1-s)^3", "(1 + 7s + s^2)/(1-s)^3"],
        ]
        assert elapsed < 0.1


_HEXAGON = (
    (-1, 0, 0, 0, 1, 1),
    (0, -1, 0, 1, 0, 1),
    (0, 0, -1, 1, 1, 0),
    (0, 1, 1, -1, 0, 0),
    (1, 0, 1, 0, -1, 0),
    (1, 1, 0, 0, 0, -1),
)

_ORDER = ["exc_p", "exc_q", "exc_r", "strict_p", "strict_q", "strict_r"]


def test_criterion_2_hexagon_on_twenty_random_scenes():
    with _criterion(2, "hexagon pattern on 20 random generic scenes, < 1 s"):
        ctx = _ctx()
        rng = random.Random(20260822)
        triples = [_generic_triple(rng, ctx) for _ in range(20)]
        start = time.perf_counter()
        for p, q, r in triples:
            R6, _, _ = cremona_scene(ctx, p, q, r)
            m = hexagon_matrix(R6, _ORDER)
            assert tuple(tuple(row) for row in m) == _HEXAGON
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0


def test_criterion_3_cremona_round_trip():
    with _criterion(3, "full transform round trip, < 1 s"):
        ctx = _ctx()
        p, q, r = gen("p"), gen("q"), gen("r")
        t = ctx.tau
        start = time.perf_counter()
        res = cremona_transform(ctx, p, q, r)
        elapsed = time.perf_counter() - start
        assert res.scene.degree == 6
        plane = res.recognition.plane
        assert plane.degree == 9 and plane.tau == t
        assert res.new_points == (-(q + r) - t, -(p + r) - t, -(p + q) - t)
        six = [p, q, r, *res.new_points]
        assert all(six[i] != six[j] for i in range(6) for j in range(i + 1, 6))
        diff = ctx.L.sum_point - res.recognition.solved.L.sum_point
        assert res.iso_witness.scale(3) == diff
        assert elapsed < 1.0


def test_criterion_4_two_point_recognition_on_random_scenes():
    with _criterion(4, "two-point scenes pass recognition with derived data"):
        ctx = _ctx()
        t = ctx.tau
        rng = random.Random(7)
        for _ in range(5):
            p, q = _rand_point(rng), _rand_point(rng)
            if p == q:
                continue
            R, records = converse_scene(ctx, p, q)
            derived = {rec.subject for rec in records if rec.quantity == "entry"}
            assert derived == {
                ("exc_p", "exc_q"), ("exc_p", "third"), ("exc_q", "third"),
            }
            Lp, Lq = R.line("exc_p"), R.line("exc_q")
            assert Lp.div == p.translate(t, 1)
            assert Lp.div != Lq.div
            assert check_balance(R, Lp.div, Lq.div, R.line("third").div)
            rec = recognize(R, "exc_p", "exc_q", "third")
            assert all(c.passed for c in rec.checks)
            assert rec.blowup_points == (p, q)


def test_criterion_5_deficit_ledger():
    with _criterion(5, "contraction deficits move by s^i/(1-s)^3, i in {1, 2}"):
        ctx = _ctx()
        p, q = gen("p"), gen("q")
        t = ctx.tau
        R7, _ = converse_scene(ctx, p, q)
        R8, _ = blowdown(R7, "exc_p")
        R9, _ = blowdown(R8, "exc_q")
        steps = {
            i: HilbertSeries.make([0] * i + [1], pole=3) for i in (1, 2)
        }
        # entry 0 with the contracted line: i = 1
        assert (R8.series() - line_module_series(0)) - (
            R7.series() - line_module_series(0)
        ) == steps[1]
        # entry 1 (demotion) and former entry 1 (transport): i = 2
        h7 = R7.series() - line_module_series(0)
        h8 = R8.series() - R8.ideal("third").deficit
        h9 = R9.series() - R9.ideal("third").deficit
        assert h8 - h7 == steps[2]
        assert h9 - h8 == steps[2]
        K = R9.ideal("third")
        assert K.deficit == HilbertSeries.make([1, 2], pole=2)
        r_div = R7.line("third").div
        p_div, q_div = R7.line("exc_p").div, R7.line("exc_q").div
        assert K.divisor == Divisor.of(
            r_div, p_div.translate(t, -1), q_div.translate(t, -1)
        )


def test_criterion_6_product_dimension_table():
    with _criterion(6, "eight product dimension cases, toggled by one point"):
        ctx = _ctx()
        a, b, c = gen("a"), gen("b"), gen("c")
        pairs = [
            (
                ctx.mul(ctx.w(b), ctx.w(c)),
                ctx.mul(ctx.w(b), ctx.w(ctx.shift(b, -2))),
            ),
            (
                ctx.mul_chain(ctx.w(b), ctx.w(c), ctx.s1()),
                ctx.mul_chain(ctx.w(b), ctx.w(ctx.shift(b, -2)), ctx.s1()),
            ),
            (
                ctx.mul(ctx.v(Divisor.of(a, b, c)), ctx.s1()),
                ctx.mul(ctx.v(Divisor.of(a, b, ctx.third_point(a, b))), ctx.s1()),
            ),
            (
                ctx.mul(ctx.w(a), ctx.v(Divisor.of(b, c))),
                ctx.mul(ctx.w(ctx.shift(b, 2)), ctx.v(Divisor.of(b, c))),
            ),
            (
                ctx.mul(ctx.v(Divisor.of(a, b)), ctx.w(c)),
                ctx.mul(ctx.v(Divisor.of(a, b)), ctx.w(ctx.shift(a, -1))),
            ),
        ]
        dims = [(g.dim, d.dim) for g, d in pairs]
        assert dims == [(4, 3), (8, 7), (7, 6), (7, 6), (7, 6)]


def test_criterion_7_solver_and_sheaf_window():
    with _criterion(7, "solver recovers sigma = t/3 and the |n| <= 9 window"):
        ctx = _ctx()
        p, q = gen("p"), gen("q")
        t = ctx.tau
        R, _ = converse_scene(ctx, p, q)
        rec = recognize(R, "exc_p", "exc_q", "third")
        a, b, c, d, e, f = rec.harvest
        N = rec.plane.sheaf
        assert N.sum_point + t.scale(3) == (a + b + c).scale(3)
        assert a + b + c + t == d + e + f
        solved = solve_three_generator(a, b, c, d, e, f, N, t)
        assert solved.sigma.scale(3) == t
        rows = sheaf_sequence_window(solved, a, b, c, d, e, f, t, 9)
        assert len(rows) == 19
        assert [n for n, _, _, _ in rows] == list(range(-9, 10))
        assert all(equal for _, _, _, equal in rows)


def test_criterion_8_quadric_pipeline():
    with _criterion(8, "quadric ledger 8-7-8-9 and sigma = 2a/3"):
        a, A, z = gen("a"), gen("A"), gen("z")
        qd = QuadricData(
            alpha_point=a,
            ruling_class=SheafClass(4, A),
            z=z,
            zprime=A + a.scale(2) - z,
        )
        res = quadric_to_plane(qd, gen("t0"))
        assert res.sigma_point == a.scale(Fraction(2, 3))
        assert res.degree_ledger == (8, 7, 8, 9)
        singular = QuadricData(
            alpha_point=a, ruling_class=SheafClass(4, A), z=z, zprime=z,
        )
        with pytest.raises(CheckFailed) as exc:
            quadric_to_plane(singular, gen("t0"))
        assert exc.value.check == "not-smooth"


def test_criterion_9_property_suites_run_at_width_200():
    with _criterion(9, "randomized property suites at >= 200 examples"):
        import test_curvegroup as t_group
        import test_hilbert as t_hilb
        import test_picard as t_pic
        import test_surface as t_surf

        suites = [
            t_group.test_addition_associative_commutative,
            t_group.test_identity_and_inverse,
            t_pic.test_pullback_is_a_tensor_homomorphism,
            t_pic.test_twisted_power_cocycle,
            t_hilb.test_canonical_form_preserves_coefficients_to_50,
            t_surf.test_contraction_order_does_not_matter,
        ]
        for fn in suites:
            settings = fn._hypothesis_internal_use_settings
            assert settings.max_examples >= 200, fn.__name__
