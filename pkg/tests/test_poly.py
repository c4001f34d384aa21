"""Polynomial arithmetic, term orders, and the homogenization map."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monoideal import FieldSpec, RingContext, TermOrder, multi_homogenize, parse_polynomial
from monoideal.poly import ev_divides, ev_lcm, specialize_ones

from conftest import poly


# ---------------------------------------------------------------- fields


def test_field_kinds():
    assert FieldSpec(0).kind == "rationals"
    assert FieldSpec(7).kind == "prime_field"


@pytest.mark.parametrize("bad", [1, 4, 6, 9, 2**31])
def test_composite_characteristic_rejected(bad):
    with pytest.raises(ValueError):
        FieldSpec(bad)


def test_prime_field_literals():
    f = FieldSpec(5)
    assert f.of(7) == 2
    assert f.of(1, 2) == 3  # 1/2 = 3 mod 5
    with pytest.raises(ZeroDivisionError):
        f.of(1, 10)


def test_rational_literals_stay_exact():
    f = FieldSpec(0)
    assert f.of(4, 2) == 2
    assert f.of(1, 3) == Fraction(1, 3)


# ---------------------------------------------------------------- orders


def test_grevlex_examples():
    o = TermOrder.grevlex(2)
    assert o.compare((2, 0), (1, 1)) > 0  # x^2 > xy
    assert o.compare((1, 1), (1, 1)) == 0


def test_lex_reflexive():
    o = TermOrder.lex(3)
    assert o.compare((1, 2, 3), (1, 2, 3)) == 0


def test_block_order_eliminates():
    # companion block first: y1 beats any power of x1
    o = TermOrder(2, [((1,), "grevlex"), ((0,), "grevlex")])
    assert o.compare((0, 1), (5, 0)) > 0


def test_compare_arity_mismatch():
    with pytest.raises(ValueError):
        TermOrder.grevlex(2).compare((1, 0, 0), (0, 1, 0))


_exps = st.tuples(*(st.integers(min_value=0, max_value=6) for _ in range(3)))
_orders = st.sampled_from(
    [
        TermOrder.lex(3),
        TermOrder.grevlex(3),
        TermOrder(3, [((2,), "grevlex"), ((0, 1), "grevlex")]),
        TermOrder(3, [((0, 1), "lex"), ((2,), "lex")]),
    ]
)


@given(_exps, _exps, _exps, _orders)
def test_order_total_and_multiplicative(a, b, c, o):
    ab = o.compare(a, b)
    assert ab == -o.compare(b, a)
    if ab == 0:
        assert a == b
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert o.compare(ac, bc) == ab


@given(_exps, _exps, _exps, _orders)
def test_order_transitive(a, b, c, o):
    if o.compare(a, b) >= 0 and o.compare(b, c) >= 0:
        assert o.compare(a, c) >= 0


# ---------------------------------------------------------------- arithmetic


def _polys(char):
    field = FieldSpec(char)
    ring = RingContext(field, ("x", "y", "z"))
    coeff = st.integers(min_value=-9, max_value=9)
    exp = st.tuples(*(st.integers(min_value=0, max_value=4) for _ in range(3)))
    term = st.tuples(exp, coeff)
    return st.lists(term, max_size=5).map(
        lambda terms: sum(
            (ring.monomial(e, c) for e, c in terms),
            ring.zero(),
        )
    )


@pytest.mark.parametrize("char", [0, 5])
def test_ring_axioms(char):
    @settings(max_examples=60, deadline=None)
    @given(_polys(char), _polys(char), _polys(char))
    def inner(f, g, h):
        assert (f + g) * h == f * h + g * h
        assert (f * g) * h == f * (g * h)
        assert f * f.ring.one() == f
        assert (f - f).is_zero()
        assert f * g == g * f

    inner()


def test_pow():
    ring = RingContext(FieldSpec(0), ("x", "y"))
    x, y = ring.variable(0), ring.variable(1)
    assert (x + y) ** 3 == x**3 + 3 * x**2 * y + 3 * x * y**2 + y**3
    assert (x + y) ** 0 == ring.one()


def test_char_two_cancellation():
    ring = RingContext(FieldSpec(2), ("x", "y"))
    x, y = ring.variable(0), ring.variable(1)
    assert ((x + y) + (x + y)).is_zero()
    assert (x + y) ** 2 == x**2 + y**2


@pytest.mark.parametrize("char", [0, 5])
def test_print_parse_round_trip(char):
    @settings(max_examples=60, deadline=None)
    @given(_polys(char))
    def inner(f):
        assert parse_polynomial(str(f), f.ring) == f

    inner()


# ---------------------------------------------------------------- homogenization


def _extended(ring):
    return ring.extended([f"y{i + 1}" for i in range(ring.n)])


def test_multi_homogenize_linear(qq_xy):
    ext = _extended(qq_xy)
    f = poly(qq_xy, "x + y")
    assert multi_homogenize(f, ext) == parse_polynomial("x*y2 + y*y1", ext)


def test_multi_homogenize_mixed_cubic(qq_xyz):
    ext = _extended(qq_xyz)
    f = poly(qq_xyz, "x^2*y + x*y^2 + x*y*z")
    expected = parse_polynomial("x^2*y*y2*y3 + x*y^2*y1*y3 + x*y*z*y1*y2", ext)
    assert multi_homogenize(f, ext) == expected


def test_multi_homogenize_monomial(qq_xy):
    ext = _extended(qq_xy)
    f = poly(qq_xy, "x^3")
    assert multi_homogenize(f, ext) == parse_polynomial("x^3", ext)


def test_multi_homogenize_zero(qq_xy):
    ext = _extended(qq_xy)
    assert multi_homogenize(qq_xy.zero(), ext).is_zero()


def test_multi_homogenize_bidegrees_constant(qq_xyz):
    ext = _extended(qq_xyz)
    f = poly(qq_xyz, "x^2*z - 3*y^2 + x*y*z")
    h = multi_homogenize(f, ext)
    combined = {
        tuple(e[i] + e[i + 3] for i in range(3)) for e in h.coeffs
    }
    assert len(combined) == 1


@pytest.mark.parametrize("char", [0, 5])
def test_specialize_companions_recovers_input(char):
    @settings(max_examples=40, deadline=None)
    @given(_polys(char))
    def inner(f):
        ext = _extended(f.ring)
        h = multi_homogenize(f, ext)
        back = specialize_ones(h, range(3, 6))
        assert {e[:3]: c for e, c in back.coeffs.items()} == f.coeffs

    inner()


def test_ev_helpers():
    assert ev_divides((1, 0), (2, 1))
    assert not ev_divides((3, 0), (2, 1))
    assert ev_lcm((1, 2), (2, 0)) == (2, 2)


def test_ring_validation():
    with pytest.raises(ValueError):
        RingContext(FieldSpec(0), ())
    with pytest.raises(ValueError):
        RingContext(FieldSpec(0), ("x", "x"))
