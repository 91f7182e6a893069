"""Smoke test for the `spc` extension module.

Build and install it first, e.g.

    cd crates/py && maturin develop --release

then run `python python/smoke_test.py`.
"""

import json

import spc


def main():
    ring = spc.Ring("QQ", ["x", "y", "z"])
    x, y, z = (ring.poly(v) for v in "xyz")

    # three double points
    cehh = ring.ideal("x*y^2; y*z^2; z*x^2; x*y*z")
    f = ring.poly("x^2*y^2*z^2")
    assert f in cehh.symbolic_power(3)
    assert f in cehh.power(2)
    assert f not in ring.irrelevant_ideal() * cehh.power(2)
    parts = [ring.ideal("x^2; y"), ring.ideal("y^2; z"), ring.ideal("z^2; x")]
    assert cehh == parts[0].intersect(parts[1]).intersect(parts[2])
    assert cehh.degree() == (1, 6)

    # Fermat configuration: I^(3) is not inside I^2
    fermat = spc.catalog_ideal("fermat", ring, 3)
    cert = spc.check_containment(fermat, 3, 2)
    assert cert.verdict == "not_contained" and cert.verify()
    expected = (x**3 - y**3) * (x**3 - z**3) * (y**3 - z**3)
    assert cert.witness == expected, cert
    assert fermat.saturation().degree() == (1, 12)

    # fibering along the squaring map preserves the failure
    gf = spc.Ring("GF(9001)")
    squares = spc.Map(gf, ["x^2", "y^2", "z^2"])
    agree, source, pushed = spc.check_roundtrip(spc.catalog_ideal("fermat", gf, 3), squares, 3, 2)
    assert agree and not pushed.contained
    assert pushed.witness.degree == 18

    # errors surface as SpcError with the engine's error kind
    try:
        ring.ideal("x + w")
    except spc.SpcError as e:
        assert "UnknownVariable" in str(e)
    else:
        raise AssertionError("expected SpcError")

    code, report = spc.run_job("ring QQ[x,y,z]\nideal I = @cehh\ncheck I 4 2\n")
    report = json.loads(report)
    assert code == 0 and report["schema"] == 1
    assert report["tasks"][0]["result"]["certificate"]["verdict"] == "contained"

    bound, failures = spc.resurgence_scan(spc.catalog_ideal("fermat", gf, 3), 3, 2)
    assert bound == "3/2" and (3, 2) in failures

    print(f"spc {spc.__version__}: smoke test passed ({len(spc.catalog_list())} catalog entries)")


if __name__ == "__main__":
    main()
