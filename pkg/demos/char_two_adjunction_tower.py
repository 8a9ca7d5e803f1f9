"""The same plane equation behaves differently in characteristic 2:

    (y^2 + x^3)^2 + x^7   over F_2

is irreducible, and the proof is a weight vector.  The base weights
(4, 6) share a factor, which is never primitive, so the loop adjoins
z = x^3 + x^2*y + y^2 (the relation whose intersection number 15 is
odd) and lands on the tropism (4, 6, 15).  The initial ideal at that
weight is a complete intersection of two binomials, which is visibly a
prime toric ideal.

Run with: python3 demos/char_two_adjunction_tower.py
"""

from algebroid import (
    GF,
    IdealHandle,
    RingCtx,
    decide_irreducible,
    ideal_membership,
    initial_ideal,
    parse_poly,
)


def main():
    ctx = RingCtx(GF(2), ("x", "y"))
    curve = IdealHandle((parse_poly("(y^2 + x^3)^2 + x^7", ctx),), ctx)

    print("input ideal:", curve.generators[0], "over F_2")
    report = decide_irreducible(curve)
    print("verdict:", report.verdict)
    print("tropism:", report.certificate.data)
    print("weight history:", report.stats["weight_history"])
    for name, rel in report.certificate.transcript:
        print(f"adjoined {name} =", rel)

    tower = report.certificate.ideal
    print("presentation ring:", tower.ctx)
    in_forms = initial_ideal(tower, report.certificate.data)
    print(f"initial ideal at {report.certificate.data}: "
          f"{len(in_forms)} standard-basis initial forms, equal to the")
    binomials = (parse_poly("x^3 + y^2", tower.ctx),
                 parse_poly("y^5 + z^2", tower.ctx))
    print("toric complete intersection")
    for b in binomials:
        print("  ", b)
    in_handle = IdealHandle(in_forms, tower.ctx)
    bin_handle = IdealHandle(binomials, tower.ctx)
    assert all(ideal_membership(b, in_handle) for b in binomials)
    assert all(ideal_membership(g, bin_handle) for g in in_forms)
    print("(equality checked by mutual ideal membership)")


if __name__ == "__main__":
    main()
