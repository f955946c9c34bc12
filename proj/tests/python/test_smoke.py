import math
from fractions import Fraction

import pytest

import subexp


def test_partition_counts():
    p = subexp.exact_coefficients(subexp.standard(), 100)
    assert p[10] == 42
    assert p[100] == 190569292
    assert p[:5] == subexp.pentagonal_oracle(4) == [1, 1, 2, 3, 5]


def test_rational_coefficients():
    c = subexp.exact_coefficients(subexp.weight_table(["1/2", 0, 0, 0]), 3)
    assert c == [1, Fraction(1, 2), Fraction(3, 8), Fraction(5, 16)]


def test_zeta():
    assert subexp.riemann_zeta(2) == pytest.approx(math.pi**2 / 6, rel=1e-15)
    assert subexp.hurwitz_zeta(0, 1 / 3) == pytest.approx(1 / 6, rel=1e-12)
    assert subexp.riemann_zeta_str("2").startswith("1.6449340668482264364724151666460251892")
    with pytest.raises(subexp.Error):
        subexp.riemann_zeta(1)


def test_roots_spectrum():
    sd = subexp.spectrum(subexp.roots())
    assert sd.classification == "critical"
    assert sd.A0 == pytest.approx(-2 / 3, rel=1e-15)
    assert [rho for rho, _ in sd.poles] == [1.0, 2.0]
    assert subexp.kappa(sd) == pytest.approx(-8 / 9, rel=1e-15)


def test_hardy_ramanujan():
    sd = subexp.spectrum(subexp.standard())
    for n in (10, 100, 1000):
        want = -math.log(4 * math.sqrt(3)) - math.log(n) + math.pi * math.sqrt(2 * n / 3)
        assert subexp.log_estimate(sd, n)["log_value"] == pytest.approx(want, rel=1e-13)
    k = subexp.log_estimate(sd, 100, formula="khintchine")
    assert abs(k["log_value"] - math.log(190569292)) < 0.08


def test_solver():
    sol = subexp.solve_delta(subexp.spectrum(subexp.standard()), 100)
    assert sol["delta"] == pytest.approx(0.12580504750128083, rel=1e-14)


def test_custom_spectrum_errors():
    with pytest.raises(subexp.Error):
        subexp.custom_spectrum('{"poles": [], "A0": 0, "h0": 0, "d_neg": [0]}')
    with pytest.raises(subexp.Error):
        subexp.congruent(4, 2)


def test_cli_and_verify():
    code, out, _ = subexp.run_cli(["exact", "--model", "standard", "--N", "10"])
    assert code == 0
    assert out.splitlines()[-1] == "10 42"
    assert subexp.run_cli(["predict", "--n", "0"])[0] == 2
    assert all(ok for _, ok in subexp.verify())
