import math

import pytest

import planarvac as pv


def test_version():
    assert pv.__version__ == "1.0.0"


def test_induced_charge_linear():
    assert abs(pv.q1(0.1) - 0.1 * math.pi / 4) < 1e-8
    q = pv.q_ind(0.3)
    assert q.total == q.q1 + q.qr
    assert q.l_used > 0


def test_bound_spectrum_endpoint():
    sys = pv.CoulombSystem(a=0.3, m=1.0)
    lvl = pv.bound_spectrum(sys, 0, 0)
    assert abs(lvl.energy_re - 0.8) < 1e-14
    assert lvl.kind == pv.LevelKind.Bound


def test_wronskian_matches_closed_form():
    sys = pv.CoulombSystem(a=0.3, m=1.0)
    ch = pv.make_channel(sys, 0, 1)
    E = 0.4
    lam = math.sqrt(1 - E * E)
    reg = pv.regular_solution(sys, ch, E, 1.0 / lam)
    irr = pv.irregular_solution(sys, ch, E, 1.0 / lam)
    got = reg.g * irr.f - reg.f * irr.g
    want = pv.wronskian(sys, ch, E)
    assert abs(got - want) < 1e-8 * abs(want)


def test_supercritical_window():
    a = 1.0
    sys = pv.CoulombSystem(a=a, theta=0.7)
    step = math.exp(math.pi / pv.sigma0(a))
    r = 0.9
    v1 = r * r * pv.density_window(sys, r).density_re
    v2 = (r * step) ** 2 * pv.density_window(sys, r * step).density_re
    assert abs(v1 - v2) < 1e-10 * abs(v1)


def test_rg_flow_critical_radius():
    g0, e0sq = 1.2, 0.8
    grid = [30.0 ** (i / 11.0) for i in range(12)]
    grid[0] = 1.0
    flow = pv.rg_flow(g0, e0sq, 1.0, grid)
    u0 = math.log(2 * g0 + math.sqrt(4 * g0 * g0 - 1))
    want = math.exp(math.pi * u0 / (2 * e0sq))
    assert flow.r_star == pytest.approx(want, rel=1e-8)
    assert flow.states[-1].g == 0.5


def test_massive_charge():
    pt = pv.q_m_coordinate(0.3, 1.0, 1.0, quad_tol=1e-12)
    assert pt.q_m == pytest.approx(-0.3 * 0.076963590311658423, rel=1e-9)
    assert pt.regime == pv.MassiveRegime.Exact
    assert pv.polarization_operator(4.0, 1.0) == pytest.approx(
        -1.0 / (4 * math.pi), rel=1e-12
    )


def test_specfun_values():
    assert pv.trigamma(1.0) == pytest.approx(math.pi ** 2 / 6, rel=1e-12)
    v = pv.whittaker_M(0.0, 0.5, 1.0)
    assert v.real == pytest.approx(2 * math.sinh(0.5), rel=1e-12)
    assert abs(v.imag) < 1e-15


def test_validation_maps_to_value_error():
    with pytest.raises(ValueError):
        pv.q1(0.6)
    with pytest.raises(ValueError):
        pv.CoulombSystem(a=-1.0)


def test_convergence_maps_to_runtime_error():
    with pytest.raises(RuntimeError):
        pv.q1(0.4, tail_tol=1e-30, l_max=60)
