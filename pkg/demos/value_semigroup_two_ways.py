"""Compute the value semigroup of the branch

    (y^2 - x^3)^2 = x^2*y^3

by two unrelated routes and watch them agree.

Route one works with the ideal: the decision loop adjoins one variable
and stops at the weight vector (4, 6, 13), so the semigroup is
generated by 4, 6 and 13.  Route two works with a parametrization: the
branch is the image of t -> (t^4, t^6 + t^7), and completing that pair
to a full canonical generating set of its coordinate algebra reads off
the same orders.

Run with: python3 demos/value_semigroup_two_ways.py
"""

from algebroid import (
    IdealHandle,
    Parametrization,
    QQ,
    RingCtx,
    conductor,
    membership,
    parse_poly,
    sagbi_complete,
    value_semigroup,
)


def main():
    ctx = RingCtx(QQ, ("x", "y"))
    curve = IdealHandle((parse_poly("(y^2 - x^3)^2 - x^2*y^3", ctx),), ctx)
    print("input ideal:", curve.generators[0])

    tower, w = value_semigroup(curve)
    print("route one (ideal side): weights", w)
    print("  presentation ring:", tower.ctx)

    t_ring = RingCtx(QQ, ("t",))
    xi = Parametrization.from_polynomials(
        [t_ring.poly("t^4"), t_ring.poly("t^6 + t^7")])
    done = sagbi_complete(xi)
    print("route two (parametrization side): orders", done.orders)

    assert tuple(sorted(w)) == tuple(sorted(done.orders))
    c = conductor(w)
    gaps = [n for n in range(c) if membership(n, w) is None]
    print("conductor:", c)
    print("gaps:", gaps)


if __name__ == "__main__":
    main()
