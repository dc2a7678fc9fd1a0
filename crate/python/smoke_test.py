"""Smoke test for the genbern Python extension.

Build and install first, e.g. `maturin develop -m crates/python/Cargo.toml`
or `pip install ./crates/python`, then run `python python/smoke_test.py`.
"""

from fractions import Fraction

import genbern


def main() -> None:
    b = genbern.classical_numbers(12)
    assert b[1] == Fraction(-1, 2)
    assert b[12] == Fraction(-691, 2730)

    assert genbern.number(2) == "(-1/12)*a + (1/4)*a^2"
    p = genbern.poly(2)
    assert p == genbern.Poly("x^2 - a*x + (3*a^2 - a)/12")
    assert p.derive() == genbern.poly(1) + genbern.poly(1)
    assert p.eval(0, 1) == Fraction(1, 6)
    assert genbern.classical_poly(3) == genbern.poly(3).specialize(1)

    res = genbern.verify_theorem(2, 1, 1, 2, Fraction(1, 2))
    assert res["holds"] and res["residual"].is_zero

    cert = genbern.certify_lambda(1, 2, 1, 2)
    assert cert["verified"] and cert["points"] == list(range(7))

    assert genbern.verify("t3", n=2, l=1, r=1)["status"] == "verified"
    t24 = genbern.verify("t24", n=2, m=3)
    assert t24["status"] == "adjudicated"
    assert t24["adjudication"]["verifying"] == "r = 0"
    assert genbern.verify("s20", n=1, r=1, t="1/3", alpha="symbolic")["status"] == "verified"

    report = genbern.run_suite({"cases": ["t3"], "max_n": 2, "max_l": 2, "max_r": 1})
    assert report["summary"]["verified"] == 18

    for bad in (lambda: genbern.verify("nope", n=1), lambda: genbern.Poly("x +"),
                lambda: genbern.verify_theorem(1, 1, 1, 1, 0.5)):
        try:
            bad()
        except ValueError:
            pass
        else:
            raise AssertionError("expected ValueError")

    print(f"genbern smoke test passed ({len(genbern.case_ids())} catalog cases)")


if __name__ == "__main__":
    main()
