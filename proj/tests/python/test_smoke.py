"""End-to-end smoke tests for the python bindings and the CLI binary."""

import math
import os
import subprocess

import pytest

import specstat as ss


def test_pair_evaluations():
    fejer = ss.TestFunctionPair("fejer")
    assert fejer.fhat(0.0) == 1.0
    assert fejer.fhat(0.5) == 0.5
    assert fejer.fhat(1.5) == 0.0
    assert fejer.f_real(0.0) == pytest.approx(1.0, abs=1e-14)
    assert abs(fejer.f(2 * math.pi)) < 1e-15
    z = fejer.f(0.5j)
    assert z.real == pytest.approx(1.02100772165104628, abs=1e-13)

    bump = ss.TestFunctionPair("cinf_bump")
    assert bump.f_real(0.0) == pytest.approx(0.443993816168079, abs=1e-11)

    wide = fejer.scale_support(2.0)
    assert wide.beta == 2.0
    assert wide.fhat(0.0) == 0.5


def test_kernels():
    p = ss.KernelParams(10.0, 0.0, ss.TestFunctionPair("fejer"))
    assert ss.eval_F(p, 5.0) == pytest.approx(0.0826418349275478, abs=1e-13)
    assert ss.eval_HL(p, 6.0) == pytest.approx(0.0239571767205175, abs=1e-13)
    assert ss.eval_GL(p, 6.0) == pytest.approx(0.0598929418012936, abs=1e-13)
    assert ss.eval_HL(p, 11.0) == 0.0
    assert ss.sinh_ratio_bound_check(5, 3.0)
    assert ss.min_nonsimple_geodesic_length() == pytest.approx(3.5254943480781721, abs=1e-12)
    with pytest.raises(ValueError):
        ss.eval_HL(p, -1.0)


def test_sigma2_and_variance():
    fejer = ss.TestFunctionPair("fejer")
    assert ss.sigma2_goe_closed_form(fejer) == pytest.approx(1 / 3, abs=1e-10)
    b = ss.variance_tau0(fejer, 10.0, k_budget=100)
    assert b.offdiag_term == 0.0
    assert b.total == b.goe_term + b.diag_correction
    assert abs(b.total - 1 / 3) <= 12.0 * math.log(10.0) / 100.0
    lv = ss.limiting_variance(ss.KernelParams(10.0, 1.0, fejer), k_budget=50)
    assert lv.total == lv.goe_term + lv.diag_correction + lv.offdiag_term
    assert lv.tail_bound > 0.0


def test_i_f_components():
    p = ss.KernelParams(10.0, 0.0, ss.TestFunctionPair("fejer"))
    c = ss.i_f_components(p)
    assert c.total == pytest.approx(11.492739868950, abs=1e-6)
    assert c.total == pytest.approx(c.k1 + c.k2 + c.k3plus, rel=1e-12)
    assert ss.i_f(p) == c.total
    central, half = ss.expectation_sns_finite_g(p, 100, 1.0)
    assert central == c.total
    assert half > 0.0


def test_goe_mc_small():
    r = ss.sample_goe_variance(dim=128, samples=32, seed=9, pair=ss.TestFunctionPair("fejer"))
    assert r.samples_used == 32
    assert r.std_error > 0.0
    assert abs(r.estimate - r.closed_form) < 0.3
    again = ss.sample_goe_variance(dim=128, samples=32, seed=9,
                                   pair=ss.TestFunctionPair("fejer"))
    assert again.estimate == r.estimate


def test_trace_stats_and_io(tmp_path):
    spec = ss.LengthSpectrum(2, [(3.0, 5, "sns"), (4.5, 2, "unknown")])
    assert spec.systole() == 3.0
    p_small = ss.KernelParams(2.0, 0.0, ss.TestFunctionPair("fejer"))
    assert ss.n_osc_from_spectrum(p_small, spec) == 0.0  # window below systole

    path = str(tmp_path / "spec.txt")
    ss.write_length_spectrum(path, spec)
    back = ss.read_length_spectrum(path)
    assert back.genus == 2 and len(back) == 2

    ev = ss.EigenvalueList(2, [0.0, 0.25, 1.5])
    p = ss.KernelParams(1.0, 0.0, ss.TestFunctionPair("fejer"))
    assert math.isfinite(ss.statistic_from_eigenvalues(p, ev))
    assert ss.weyl_main_term(p, 2) > 0.0


def test_cli_in_process(tmp_path):
    out = str(tmp_path / "conv.csv")
    rc = ss.cli_main(["convergence-study", "--Ls", "10,20", "--k-budget", "50",
                      "--output", out])
    assert rc == 0
    text = open(out).read()
    assert "L,total,sigma2_goe" in text
    assert ss.cli_main(["variance", "--L", "-3"]) == 2


@pytest.mark.skipif("SPECSTAT_CLI" not in os.environ, reason="CLI path not provided")
def test_cli_binary(tmp_path):
    cli = os.environ["SPECSTAT_CLI"]
    out = subprocess.run([cli, "goe-closed", "--family", "hann", "--format", "json"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert '"sigma2_goe"' in out.stdout
    bad = subprocess.run([cli, "goe-mc", "--dim", "3"], capture_output=True, text=True)
    assert bad.returncode == 2
