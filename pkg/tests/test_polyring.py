"""Polynomial ring arithmetic, orders, initial forms and parsing."""

import random
from fractions import Fraction

import pytest

from algebroid.errors import ParseError, ZeroPoly
from algebroid.polyring import (
    INF,
    BlockOrder,
    DegRevLex,
    HomogenizedLocalOrder,
    Lex,
    Poly,
    RingCtx,
    WeightedOrder,
    division,
    embed,
    in_w,
    mono_div,
    mono_lcm,
    normal_form,
    ord_w,
    wdot,
)
from algebroid.scalars import GF, QQ


CTX = RingCtx(QQ, ("x", "y", "z"))


def test_parse_and_format_round_trip():
    f = CTX.poly("y^2 - x^3")
    assert f.terms == {(0, 2, 0): 1, (3, 0, 0): -1}
    g = CTX.poly(str(f))
    assert f == g


def test_parse_implicit_multiplication():
    assert CTX.poly("2x y") == CTX.poly("2*x*y")
    assert CTX.poly("3(x + y)") == CTX.poly("3*x + 3*y")
    # names with digits are single identifiers, not implicit products
    ctx = RingCtx(QQ, ("x", "z1", "z2"))
    assert ctx.poly("z1 z2").terms == {(0, 1, 1): 1}


def test_parse_fractions_and_unary_minus():
    f = CTX.poly("-x/2 + 1/3")
    assert f.coeff((1, 0, 0)) == Fraction(-1, 2)
    assert f.constant_coeff() == Fraction(1, 3)


def test_parse_rejects_unknown_variable():
    with pytest.raises(ParseError):
        CTX.poly("x + w")


def test_parse_rejects_garbage():
    with pytest.raises(ParseError):
        CTX.poly("x + ")
    with pytest.raises(ParseError):
        CTX.poly("x ^ y")
    with pytest.raises(ParseError):
        CTX.poly("(x + y")


def test_arithmetic_basics():
    x, y = CTX.var("x"), CTX.var("y")
    assert (x + y) * (x - y) == x ** 2 - y ** 2
    assert (x + 1) ** 3 == CTX.poly("x^3 + 3x^2 + 3x + 1")
    assert x - x == CTX.zero()
    assert (x * 0).is_zero()


def test_char_p_arithmetic():
    ctx2 = RingCtx(GF(2), ("x", "y"))
    x, y = ctx2.var("x"), ctx2.var("y")
    assert (x + y) ** 2 == x ** 2 + y ** 2
    assert x + x == ctx2.zero()


def test_lex_and_degrevlex_leads():
    f = CTX.poly("x*y^2 + x^2 + y^3")
    assert f.lead(Lex())[0] == (2, 0, 0)
    # degrevlex: all degree 3 except x^2; among x*y^2 and y^3,
    # x*y^2 wins (smaller last-variable share)
    assert f.lead(DegRevLex())[0] == (1, 2, 0)


def test_degrevlex_classic_tie():
    # classic: x*z vs y^2 in degrevlex with x > y > z: y^2 > x*z
    f = CTX.poly("x*z - y^2")
    assert f.lead(DegRevLex())[0] == (0, 2, 0)


def test_weighted_order_and_block_order():
    w = (2, 3, 0)
    ow = WeightedOrder(w)
    f = CTX.poly("y^2 + x^3 + x*y")
    assert f.lead(ow)[0] == (3, 0, 0)  # weight 6 beats 6? no: x^3 w=6, y^2 w=6, xy w=5
    b = BlockOrder(1)
    g = CTX.poly("x + y^5")
    assert g.lead(b)[0] == (1, 0, 0)


def test_weighted_tie_goes_to_degrevlex():
    ow = WeightedOrder((2, 3, 100))
    f = CTX.poly("y^2 + x^3")
    m, _ = f.lead(ow)
    assert m == (3, 0, 0)  # same weight 6; degrevlex prefers x^3


def test_wdot_with_inf():
    assert wdot((2, INF, 1), (3, 0, 1)) == 7
    assert wdot((2, INF, 1), (0, 1, 0)) == INF


def test_ord_and_in_w():
    f = CTX.poly("y^2 - x^3 + x^4")
    w = (2, 3, 1)
    assert ord_w(f, w) == 6
    assert in_w(f, w) == CTX.poly("y^2 - x^3")
    assert ord_w(CTX.zero(), w) == INF
    assert in_w(CTX.zero(), w).is_zero()


def test_in_w_multiplicative_random():
    rng = random.Random(5)
    for _ in range(30):
        f = random_poly(rng)
        g = random_poly(rng)
        if f.is_zero() or g.is_zero():
            continue
        w = (rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 5))
        assert ord_w(f * g, w) == ord_w(f, w) + ord_w(g, w)
        assert in_w(f * g, w) == in_w(f, w) * in_w(g, w)


def random_poly(rng, nterms=4):
    items = []
    for _ in range(rng.randint(1, nterms)):
        m = (rng.randint(0, 3), rng.randint(0, 3), rng.randint(0, 3))
        items.append((m, QQ.coerce(rng.randint(-4, 4))))
    return Poly.from_items(items, CTX)


def test_division_properties():
    order = DegRevLex()
    f = CTX.poly("x^2*y + x*y^2 + y^2")
    g1 = CTX.poly("x*y - 1")
    g2 = CTX.poly("y^2 - 1")
    quots, rem = division(f, [g1, g2], order, with_quotients=True)
    assert quots[0] * g1 + quots[1] * g2 + rem == f
    for m in rem.terms:
        assert mono_div(m, g1.lead(order)[0]) is None
        assert mono_div(m, g2.lead(order)[0]) is None
    assert rem == CTX.poly("x + y + 1")


def test_homogenized_local_order_prefers_small_weight():
    ctx = RingCtx(QQ, ("x", "y", "h"))
    order = HomogenizedLocalOrder((2, 3))
    # homogenized y^2 - x^3 + x^4 at D = 8: y^2 h^2 - x^3 h^2 + x^4
    f = ctx.poly("y^2 h^2 - x^3 h^2 + x^4")
    m, _ = f.lead(order)
    assert m in ((0, 2, 2), (3, 0, 2))  # weight-6 part leads
    assert m == (3, 0, 2)  # degrevlex tie break prefers x^3


def test_embed_and_subs():
    big = CTX.extend(("w",))
    f = CTX.poly("y^2 - x^3")
    g = embed(f, big)
    assert g.ctx == big and g.terms == {(0, 2, 0, 0): 1, (3, 0, 0, 0): -1}
    t_ring = RingCtx(QQ, ("t",))
    t = t_ring.var("t")
    h = f.subs({"x": t ** 2, "y": t ** 3, "z": t_ring.zero()})
    assert h.is_zero()


def test_lead_of_zero_raises():
    with pytest.raises(ZeroPoly):
        CTX.zero().lead(DegRevLex())


def test_normal_form_idempotent():
    order = DegRevLex()
    gens = [CTX.poly("x^2 - y"), CTX.poly("y^2 - z")]
    rng = random.Random(9)
    for _ in range(20):
        f = random_poly(rng, 5)
        r = normal_form(f, gens, order)
        assert normal_form(r, gens, order) == r
