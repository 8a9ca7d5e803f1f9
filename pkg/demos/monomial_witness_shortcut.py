"""Sometimes reducibility is free.  For the space curve ideal

    ( (x^3 + y^2)x - yz^2,  y^2 - xz,  z^3 - (x^3 + y^2)y )

the base weights are (5, 6, 7) and the initial form of the first
generator at those weights is the single monomial x*y^2.  A monomial
in the weighted initial ideal contradicts primality outright (a prime
curve ideal meets no coordinate hyperplane), so the decision finishes
without running a single pencil test.

Run with: python3 demos/monomial_witness_shortcut.py
"""

from algebroid import (
    IdealHandle,
    QQ,
    RingCtx,
    base_weights,
    decide_irreducible,
    in_w,
    parse_poly,
    verify_certificate,
)


def main():
    ctx = RingCtx(QQ, ("x", "y", "z"))
    gens = (parse_poly("(x^3 + y^2)*x - y*z^2", ctx),
            parse_poly("y^2 - x*z", ctx),
            parse_poly("z^3 - (x^3 + y^2)*y", ctx))
    curve = IdealHandle(gens, ctx)

    w = base_weights(curve)
    print("base weights:", w)
    for g in gens:
        print(f"  in_w({g}) =", in_w(g, w))

    report = decide_irreducible(curve)
    print("verdict:", report.verdict)
    print("witness monomial:", report.certificate.data)
    print("pencil tests used:", report.stats["parametric_calls"])
    ok, reason = verify_certificate(report.certificate)
    print("verification:", ok, f"({reason})")


if __name__ == "__main__":
    main()
