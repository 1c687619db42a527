"""Section-space calculus: atoms, certified products, rewriting."""

import math

import pytest
from hypothesis import given, settings, strategies as st

from nckit.curvegroup import ZERO, Divisor, Point, gen, point
from nckit.errors import InputError, UnsupportedQuery
from nckit.picard import SheafClass
from nckit.sklyanin import SklyaninContext, word_str

_coeffs = st.fractions(min_value=-10, max_value=10, max_denominator=8)
_points = st.dictionaries(
    st.sampled_from(["a", "b", "c"]), _coeffs, min_size=1, max_size=3,
).map(Point.from_map)


def _ctx():
    return SklyaninContext(SheafClass(3, ZERO), gen("s"))


def test_atom_dimensions():
    ctx = _ctx()
    a, b = gen("a"), gen("b")
    assert ctx.w(a).dim == 2
    assert ctx.v(Divisor.of(a, b)).dim == 4
    assert ctx.v(Divisor.of(a, b, gen("c"))).dim == 3
    assert ctx.s1().dim == 3
    assert ctx.line_through(a, b).dim == 1
    assert ctx.line_through(a, b).is_scalar


@given(st.integers(0, 12))
def test_graded_dims_grow_binomially(m):
    assert _ctx().graded_dim(m) == math.comb(m + 2, 2)


def test_third_point_and_collinearity():
    ctx = _ctx()
    a, b = gen("a"), gen("b")
    c = ctx.third_point(a, b)
    assert c == -(a + b)
    assert ctx.is_collinear(a, b, c)
    assert not ctx.is_collinear(a, b, gen("c"))


def test_ww_products():
    ctx = _ctx()
    b, c = gen("b"), gen("c")
    generic = ctx.mul(ctx.w(b), ctx.w(c))
    assert generic.dim == 4
    assert generic.rule == "ww-generic"
    assert generic.vanishing_divisor == Divisor.of(b, ctx.shift(c, -1))
    degenerate = ctx.mul(ctx.w(b), ctx.w(ctx.shift(b, -2)))
    assert degenerate.dim == 3
    assert degenerate.rule == "ww-degenerate"
    assert degenerate.vanishing_defined is False


def test_ww_s1_products():
    ctx = _ctx()
    b, c = gen("b"), gen("c")
    generic = ctx.mul_chain(ctx.w(b), ctx.w(c), ctx.s1())
    assert generic.dim == 8
    degenerate = ctx.mul_chain(ctx.w(b), ctx.w(ctx.shift(b, -2)), ctx.s1())
    assert degenerate.dim == 7
    assert degenerate.rule == "ww-degenerate-extend"


def test_v3_s1_collinearity_toggle():
    ctx = _ctx()
    a, b = gen("a"), gen("b")
    generic = ctx.mul(ctx.v(Divisor.of(a, b, gen("c"))), ctx.s1())
    assert generic.dim == 7
    assert generic.rule == "v3-extend"
    collinear = ctx.mul(ctx.v(Divisor.of(a, b, ctx.third_point(a, b))), ctx.s1())
    assert collinear.dim == 6
    assert collinear.rule == "v3-collinear"
    assert collinear.vanishing_defined is False


def test_left_and_right_v2_products_agree():
    """V(b+c)S1 and S1 V(sigma b + sigma c) present the same space."""
    ctx = _ctx()
    b, c = gen("b"), gen("c")
    D = Divisor.of(b, c)
    right = ctx.mul(ctx.v(D), ctx.s1())
    shifted = Divisor.of(ctx.shift(b, 1), ctx.shift(c, 1))
    left = ctx.mul(ctx.s1(), ctx.v(shifted))
    assert right.dim == left.dim == 8
    assert right.vanishing_divisor == D
    assert left.vanishing_divisor == D
    assert right.vanishing_defined and left.vanishing_defined


def test_left_v3_collinearity_uses_shifted_points():
    ctx = _ctx()
    a, b = gen("a"), gen("b")
    # sigma a, sigma b, sigma c collinear exactly when shifted triple sums to 0
    c = ctx.third_point(ctx.shift(a, 1), ctx.shift(b, 1)).translate(ctx.sigma, -1)
    collinear = ctx.mul(ctx.s1(), ctx.v(Divisor.of(a, b, c)))
    assert collinear.dim == 6
    assert collinear.rule == "v3-collinear-left"
    generic = ctx.mul(ctx.s1(), ctx.v(Divisor.of(a, b, gen("c"))))
    assert generic.dim == 7
    assert generic.rule == "v3-extend-left"


def test_wv_products():
    ctx = _ctx()
    a, b, c = gen("a"), gen("b"), gen("c")
    generic = ctx.mul(ctx.w(a), ctx.v(Divisor.of(b, c)))
    assert generic.dim == 7
    assert generic.rule == "wv-generic"
    expected = Divisor.of(a) + Divisor.of(b, c).translate(ctx.sigma, -1)
    assert generic.vanishing_divisor == expected
    degenerate = ctx.mul(ctx.w(ctx.shift(b, 2)), ctx.v(Divisor.of(b, c)))
    assert degenerate.dim == 6
    assert degenerate.rule == "wv-degenerate"


def test_vw_products():
    ctx = _ctx()
    a, b, c = gen("a"), gen("b"), gen("c")
    D = Divisor.of(a, b)
    generic = ctx.mul(ctx.v(D), ctx.w(c))
    assert generic.dim == 7
    assert generic.rule == "vw-generic"
    assert generic.vanishing_divisor == D + Divisor.of(ctx.shift(c, -2))
    degenerate = ctx.mul(ctx.v(D), ctx.w(ctx.shift(a, -1)))
    assert degenerate.dim == 6
    assert degenerate.rule == "vw-degenerate"


def test_full_piece_products():
    ctx = _ctx()
    assert ctx.mul(ctx.s1(), ctx.s1()).dim == 6
    assert ctx.mul(ctx.s_full(2), ctx.s1()).dim == 10
    assert ctx.mul(ctx.s_full(2), ctx.s_full(2)).dim == 15


def test_scalar_factor_rule():
    ctx = _ctx()
    a, b = gen("a"), gen("b")
    out = ctx.mul(ctx.line_through(a, b), ctx.s1())
    assert out.rule == "scalar-factor"
    assert out.dim == 3
    assert out.degree == 2


def test_fallback_interval_is_honest():
    ctx = _ctx()
    a, b, c, d = gen("a"), gen("b"), gen("c"), point({"a": 2})
    X = ctx.v(Divisor.of(a, b))
    Y = ctx.v(Divisor.of(c, d))
    out = ctx.mul(X, Y)
    assert out.rule == "fallback-bound"
    assert not out.dim_exact
    assert out.dim_lo == 4
    # upper bound: sections vanishing on the product divisor plus lower piece
    assert out.dim_hi == (12 - 4) + 3
    with pytest.raises(InputError):
        out.dim


def test_v_atom_validation():
    ctx = _ctx()
    with pytest.raises(InputError):
        ctx.v(Divisor.from_terms([(gen("a"), -1)]))
    with pytest.raises(InputError):
        ctx.v(Divisor.from_terms([(gen("a"), 6)]))


def test_rewrite_commute_round_trip():
    ctx = _ctx()
    a = gen("a")
    X = ctx.mul(ctx.v(Divisor.of(a, gen("b"))), ctx.s1())
    moved = ctx.rewrite_commute(X)
    assert moved.word[0] == ("S1",)
    assert moved.dim_lo == X.dim_lo and moved.dim_hi == X.dim_hi
    back = ctx.rewrite_commute(moved)
    assert back.word == X.word


def test_rewrite_commute_needs_a_movable_pair():
    ctx = _ctx()
    with pytest.raises(UnsupportedQuery):
        ctx.rewrite_commute(ctx.w(gen("a")))


@settings(max_examples=200)
@given(_points, _points, st.booleans())
def test_rewrite_preserves_dimension_data(x, y, use_v):
    """Moving a factor across S1 never changes certified dimensions."""
    ctx = _ctx()
    if use_v:
        atom = ctx.v(Divisor.of(x, y))
    else:
        atom = ctx.w(x)
    X = ctx.mul(atom, ctx.s1())
    moved = ctx.rewrite_commute(X)
    assert (moved.degree, moved.dim_lo, moved.dim_hi) == (
        X.degree, X.dim_lo, X.dim_hi,
    )
    assert ctx.rewrite_commute(moved).word == X.word


def test_word_str_is_readable():
    ctx = _ctx()
    out = ctx.mul(ctx.v(Divisor.of(gen("a"), gen("b"))), ctx.s1())
    s = word_str(out)
    assert "V(" in s and "S_1" in s
