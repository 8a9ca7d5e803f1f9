"""Standard bases, local leading ideals, colengths, intersection numbers."""

import random
from fractions import Fraction

import pytest

from algebroid.errors import ZeroPoly
from algebroid.groebner import IdealHandle
from algebroid.localalg import (
    base_weights,
    dehomogenize,
    hom_ring,
    homogenize,
    initial_ideal,
    intersection_number,
    local_colength,
    local_lead_monomials,
    standard_basis,
)
from algebroid.polyring import INF, Poly, RingCtx, in_w, ord_w
from algebroid.scalars import GF, QQ

from oracles import (
    intersection_via_branches,
    poly_eval_series,
    s_from_terms,
    s_ord,
    staircase_count,
)

XY = RingCtx(QQ, ("x", "y"))
XYZ = RingCtx(QQ, ("x", "y", "z"))


def test_homogenize_round_trip():
    big = hom_ring(XY)
    f = XY.poly("y^2 - x^3 + x^4")
    F = homogenize(f, (2, 3), big)
    # weights: y^2 -> 6, x^3 -> 6, x^4 -> 8: top is 8
    assert F.terms == {(0, 2, 2): 1, (3, 0, 2): -1, (4, 0, 0): 1}
    assert dehomogenize(F, XY) == f
    with pytest.raises(ZeroPoly):
        homogenize(XY.zero(), (1, 1), big)


def test_standard_basis_unit_factor_is_local():
    # x - x^2 = x(1 - x): locally the unit 1 - x divides out
    sb = standard_basis([XY.poly("x - x^2"), XY.poly("y")])
    leads = local_lead_monomials([XY.poly("x - x^2"), XY.poly("y")])
    assert (1, 0) in leads and (0, 1) in leads
    assert local_colength([XY.poly("x - x^2"), XY.poly("y")]) == 1


def test_cusp_base_weights():
    handle = IdealHandle([XY.poly("y^2 - x^3")])
    assert intersection_number(XY.var("x"), handle) == 2
    assert intersection_number(XY.var("y"), handle) == 3
    assert base_weights(handle) == (2, 3)


def test_infinite_intersection_number():
    handle = IdealHandle([XY.poly("x*y")])
    assert intersection_number(XY.var("x"), handle) == INF
    assert base_weights(handle) == (INF, INF)
    # a polynomial inside the ideal has infinite intersection number
    cusp = IdealHandle([XY.poly("y^2 - x^3")])
    assert intersection_number(XY.poly("y^2 - x^3"), cusp) == INF


def test_monomial_curve_intersection_numbers():
    # branch (t^4, t^3): x^3 - y^4 vanishes on it
    handle = IdealHandle([XY.poly("x^3 - y^4")])
    assert intersection_number(XY.poly("x*y^2"), handle) == 10
    for text, expect in (("x", 4), ("y", 3), ("x + y", 3), ("x*y", 7)):
        assert intersection_number(XY.poly(text), handle) == expect


def test_intersection_number_matches_branch_oracle():
    # y^2 - x^3 parametrized by (t^2, t^3); compare against series orders
    handle = IdealHandle([XY.poly("y^2 - x^3")])
    N = 40
    comps = [s_from_terms([(2, Fraction(1))], N),
             s_from_terms([(3, Fraction(1))], N)]
    rng = random.Random(31)
    for _ in range(20):
        items = []
        for _ in range(rng.randint(1, 4)):
            m = (rng.randint(0, 3), rng.randint(0, 3))
            items.append((m, QQ.coerce(rng.randint(-3, 3))))
        f = Poly.from_items(items, XY)
        if f.is_zero():
            continue
        expect = intersection_via_branches(
            {m: Fraction(c) for m, c in f.terms.items()}, [comps])
        got = intersection_number(f, handle)
        if expect is None:
            # oracle window exhausted or f vanishes on the branch
            assert got == INF or got >= N
        else:
            assert got == expect


def test_initial_ideal_cusp():
    handle = IdealHandle([XY.poly("y^2 - x^3 + x^4")])
    forms = initial_ideal(handle, (2, 3))
    assert len(forms) == 1
    assert forms[0] in (XY.poly("x^3 - y^2"), XY.poly("y^2 - x^3"))
    assert all(in_w(f, (2, 3)) == f for f in forms)


def test_initial_ideal_two_branches():
    # (y - x^2)(y - x^2 - x^3) expanded; weight (1, 2) sees both branches
    f = (XY.poly("y - x^2") * XY.poly("y - x^2 - x^3"))
    forms = initial_ideal([f], (1, 2))
    assert len(forms) == 1
    assert forms[0] == in_w(f, (1, 2))
    assert forms[0] == XY.poly("(y - x^2)^2")


def test_initial_ideal_generates_all_informs():
    # the initial ideal must contain the in-form of every member tried
    handle = IdealHandle([XYZ.poly("y^2 - x^3"), XYZ.poly("z - x*y")])
    w = (2, 3, 5)
    forms = initial_ideal(handle, w)
    from algebroid.groebner import ideal_membership
    rng = random.Random(41)
    gens = list(handle.generators)
    for _ in range(15):
        c1 = rng.randint(-3, 3)
        c2 = rng.randint(-3, 3)
        m1 = XYZ.mono((rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)))
        m2 = XYZ.mono((rng.randint(0, 2), rng.randint(0, 2), rng.randint(0, 2)))
        f = m1 * gens[0] * c1 + m2 * gens[1] * c2
        if f.is_zero():
            continue
        assert ideal_membership(in_w(f, w), IdealHandle(forms, XYZ))


def test_local_colength_vs_global_difference():
    # globally <x - x^2> + <y> has two points; locally just one
    gens = [XY.poly("x - x^2"), XY.poly("y")]
    assert local_colength(gens) == 1


def test_weights_validation():
    with pytest.raises(ValueError):
        standard_basis([XY.poly("x")], (1,))
    with pytest.raises(ValueError):
        standard_basis([XY.poly("x")], (0, 1))
    with pytest.raises(ValueError):
        standard_basis([XY.poly("x")], (1, INF))


def test_colength_weight_independence():
    rng = random.Random(57)
    gens = [XY.poly("y^2 - x^3"), XY.poly("x^4")]
    base = local_colength(gens)
    assert base == 8  # <y^2 - x^3, x^4>: staircase of <y^2, x^4>
    for _ in range(5):
        w = (rng.randint(1, 5), rng.randint(1, 5))
        assert local_colength(IdealHandle(gens), w) == base


def test_char_p_local():
    ctx = RingCtx(GF(2), ("x", "y"))
    handle = IdealHandle([ctx.poly("y^2 + x^3 + x^2 y")])
    assert base_weights(handle) == (2, 3)
