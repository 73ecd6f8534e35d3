import numpy as np
import pytest

import qplane.qdilog as qd
from qplane.errors import DomainError, PoleError
from qplane.modular import from_b, from_b2, from_r

# frozen oracles: independent high-precision quadrature of the integral
# representation (dps=35), computed once
GB_HALF_B07 = 0.1873444335053693830977339 - 0.6238863136199672918223367j
GB_HALF_B08 = 0.2372083709438624755946471 - 0.6429814245704509165111966j
GB_COMPLEX_B08 = 0.4236070643113332438041264 - 0.9037068176506037737739207j
G_RUI_B08 = 0.9617074738554430545545526 - 0.2740779719907864351937274j

P07 = from_b(0.7)
P08 = from_b(0.8)


def test_integral_backend_fixtures():
    assert abs(qd.gb(0.5, P07).value - GB_HALF_B07) < 1e-10
    assert abs(qd.gb(0.5, P08).value - GB_HALF_B08) < 1e-10
    assert abs(qd.gb(0.3 + 0.2j, P08).value - GB_COMPLEX_B08) < 1e-10
    assert abs(qd.ruijsenaars_g(0.25, P08).value - G_RUI_B08) < 1e-10


def test_ruijsenaars_base_values():
    assert abs(qd.ruijsenaars_g(0.0, P08).value - 1.0) < 1e-13
    # the defining integrand is odd in z, so G(-z) = 1/G(z)
    gp = qd.ruijsenaars_g(0.3, P08).value
    gm = qd.ruijsenaars_g(-0.3, P08).value
    assert abs(gm - 1.0 / gp) < 1e-10
    # halved-step self-check via the tolerance-driven error estimate
    assert qd.ruijsenaars_g(0.25, P08, tol=1e-11).err_estimate < 1e-11


def test_ruijsenaars_strip_guard():
    with pytest.raises(DomainError):
        qd.ruijsenaars_g(0.0 + 1.2j, P08)  # |Im z| too close to Q/2


def test_gb_midpoint_sign():
    # reflection fixes G_b(Q/2)^2; the integral backend resolves the sign:
    # G_b(Q/2) = e^{-i pi Q^2/8} exactly
    for p in (P07, P08):
        v = qd.gb(p.Q / 2, p).value
        assert abs(v - np.exp(-1j * np.pi * p.Q**2 / 8)) < 1e-11
        assert abs(v**2 - np.exp(-1j * np.pi * p.Q**2 / 4)) < 1e-11


def test_gb_residue_limit():
    for x in (1e-2, 5e-3, 2.5e-3):
        val = 2 * np.pi * x * qd.gb(x, P07).value
        assert abs(val - 1.0) < 0.05
    # Richardson extrapolation over the three x values reaches 1e-6
    f = {x: 2 * np.pi * x * qd.gb(x, P07).value for x in (1e-2, 5e-3, 2.5e-3)}
    r1a, r1b = 2 * f[5e-3] - f[1e-2], 2 * f[2.5e-3] - f[5e-3]
    assert abs((4 * r1b - r1a) / 3 - 1) < 1e-6
    # product regime residue dominance (b^2 = 0.5i, x = 0.01): ~2 percent
    p = from_b2(0.5j)
    v = qd.gb_product(0.01, p).value
    assert abs(v - 1.0 / (2 * np.pi * 0.01)) / (1.0 / (2 * np.pi * 0.01)) < 0.021


def test_product_backend_midpoint_modulus():
    # at complex b^2 the midpoint value is fixed by reflection alone:
    # G_b(Q/2)^2 = e^{-i pi Q^2/4}, so |G_b(Q/2)| = |e^{-i pi Q^2/8}|
    # (the unimodularity familiar from real b needs the conjugation identity)
    p = from_b2(0.3 + 0.4j)
    v = qd.gb_product(p.Q / 2, p).value
    assert abs(v**2 - np.exp(-1j * np.pi * p.Q**2 / 4)) < 1e-8
    assert abs(abs(v) - abs(np.exp(-1j * np.pi * p.Q**2 / 8))) < 1e-8
    # for real b the modulus is 1
    assert abs(abs(qd.gb(P08.Q / 2, P08).value) - 1.0) < 1e-10


def test_product_truncation_oracle():
    # doubled-precision truncation as oracle (tolerance drives the counts)
    p = from_b2(0.2 + 0.1j)
    coarse = qd.gb_product(0.4 + 0.3j, p, tol=1e-8).value
    fine = qd.gb_product(0.4 + 0.3j, p, tol=1e-15).value
    assert abs(coarse - fine) / abs(fine) < 1e-8


def test_product_pole_flag():
    p = from_b2(0.3 + 0.4j)
    with pytest.raises(PoleError):
        qd.gb_product(0.0, p)
    with pytest.raises(PoleError):
        qd.gb_product(-p.b, p)


def test_zero_lattice_values():
    # zeros at Q + n b + m/b come out exactly from both backends
    assert abs(qd.gb(P08.Q + P08.b, P08).value) < 1e-12
    pc = from_b2(0.3 + 0.4j)
    assert abs(qd.gb(pc.Q + pc.b, pc).value) < 1e-12
    with pytest.raises(PoleError):
        qd.gb(-P08.b, P08)  # pole lattice raises instead


def test_backend_agreement_epsilon_extrapolation():
    # integral backend vs Richardson-extrapolated product backend
    pint = P07
    for x in (0.3, 0.6, pint.Q.real / 2, 0.9 + 0.2j, 1.3):
        vals = {eps: qd.gb(x, from_b2(0.49 + 1j * eps), tol=1e-8).value
                for eps in (1e-2, 1e-3)}
        extrap = vals[1e-3] + (vals[1e-3] - vals[1e-2]) * 1e-3 / (1e-2 - 1e-3)
        assert abs(extrap - qd.gb(x, pint).value) < 1e-4


def test_identities_spot():
    assert qd.verify_identity("reflection", P07.Q / 2, P07) < 1e-12
    assert qd.verify_identity("functional_b", 0.3 + 0.2j, from_b(0.75)) < 1e-8
    assert qd.verify_identity("selfduality", 0.6, P07) < 1e-8
    p = from_b2(0.3 + 0.4j)
    for kind in ("functional_b", "functional_binv", "reflection", "conjugation"):
        assert qd.verify_identity(kind, 0.4 + 0.1j, p) < 1e-8


def test_unimodularity_on_symmetric_line():
    ts = np.linspace(-2, 2, 7)
    vals = qd.gb_many(P08.Q / 2 + 1j * ts, P08)
    assert np.max(np.abs(np.abs(vals) - 1)) < 1e-8


def test_variants():
    # S_b reflection at the midpoint
    v = qd.sb(P08.Q / 2, P08).value
    assert abs(abs(v) - 1) < 1e-10 and abs(v * v - 1) < 1e-10
    # V_eta unimodularity at real argument and agreement with the integral form
    w = qd.veta(0.4, P08).value
    assert abs(w * np.conj(w) - 1) < 1e-8
    assert abs(qd.veta_integral(0.4, P08) - w) < 1e-7
    # g_b at x=1 reduces to zeta_bar / G_b(Q/2)
    assert abs(qd.gb_small(1.0, P08).value - P08.zeta_b_bar / qd.gb(P08.Q / 2, P08).value) < 1e-10
    with pytest.raises(DomainError):
        qd.gb_small(-1.0, P08)


def test_residue_checks():
    assert qd.residue_check(0, 0, P08) < 1e-6
    pc = from_b2(0.3 + 0.3j)
    assert qd.residue_check(1, 0, pc) < 1e-6
    assert qd.residue_check(0, 1, pc) < 1e-6


def test_tau_beta():
    Q = P08.Q.real
    assert qd.tau_beta_residual(Q / 4, Q / 4, P08) < 1e-6
    assert qd.tau_beta_residual(Q / 3, Q / 6, P08) < 1e-6
    pc = from_b2(0.1 + 0.4j)
    assert qd.tau_beta_residual(pc.Q / 4 + 0.1j, pc.Q / 4, pc) < 1e-6


def test_tau_beta_decay_guard():
    with pytest.raises(DomainError):
        qd.tau_beta_residual(P08.Q.real, P08.Q.real, P08)  # Re(a+b) beyond Q


def test_fourier_formulas():
    assert qd.fourier_gb_residual(1, 0.0, P08) < 1e-6
    assert qd.fourier_gb_residual(2, 0.3, P08) < 1e-6
    assert qd.fourier_gb_residual(3, -0.2, from_b(0.75)) < 1e-6
    assert qd.fourier_gb_residual(4, 0.3, P08) < 1e-6


def test_qbinomial_coeffs_symbolic():
    q = P08.q
    c2 = qd.qbinomial_coeffs(2, q)
    assert abs(c2[0] - 1) < 1e-14 and abs(c2[2] - 1) < 1e-14
    assert abs(c2[1] - (1 + q**-2)) < 1e-14
    c3 = qd.qbinomial_coeffs(3, q)
    assert abs(c3[1] - (1 + q**-2 + q**-4)) < 1e-14


def test_qbinomial_residue_content():
    for n in range(1, 6):
        assert qd.qbinom_residue_check(n, P08) < 1e-8


def test_fb_reduction_to_tau_beta():
    Q = P08.Q.real
    F = qd.fb_hypergeometric(Q / 4, Q / 3, Q / 4, -0.5, P08)
    beff = Q / 2 - 1j * np.log(complex(0.5)) / (2 * np.pi * P08.b)
    closed = qd.gb(beff, P08).value / qd.gb(Q / 3 + beff, P08).value
    assert abs(F - closed) / abs(closed) < 1e-6


def test_fb_decay_guard():
    with pytest.raises(DomainError):
        qd.fb_hypergeometric(P08.Q.real, P08.Q.real, 0.1, -0.5, P08)


def test_eta_functional_equation():
    for r in (0.37, 0.8):
        assert qd.classical_limit_residual("eta", 0.0, r) < 1e-10


def test_glim_spots():
    res = [qd.classical_limit_residual("Glim", 1.0, r) for r in (0.1, 0.05, 0.025)]
    # at x = 1 the ratio is exactly Gamma(1) for every r (G_b(b) = -i b)
    assert max(res) < 1e-9
    res05 = [qd.classical_limit_residual("Glim", 0.5, r) for r in (0.1, 0.05, 0.025)]
    assert res05[0] > res05[1] > res05[2]
    assert qd.classical_limit_residual("Glim", 0.5, 1e-3) < 1e-2


def test_asymptotics():
    for p in (P08, from_b2(0.3 + 0.4j)):
        assert abs(qd.gb(p.Q / 2 + 8j, p).value - p.zeta_b_bar) < 1e-6
        x = p.Q / 2 - 8j
        tgt = p.zeta_b * np.exp(1j * np.pi * x * (x - p.Q))
        assert abs(qd.gb(x, p).value - tgt) / abs(tgt) < 1e-6
