import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from ottobounds.engine import (
    EngineParams,
    efficiency_ht,
    engine_report,
    eta_mw,
    eta_rk,
    eta_up,
    eta_up_thermal,
    generalized_carnot,
    ht_regime_ok,
    pwc_ht,
    work_ht,
    z2_of_eta,
    z_star,
)
from ottobounds.errors import DomainError, NoSolutionError, SingularityError
from ottobounds.oracle import find_root_scalar

# Frozen high-precision references (tests/_freeze_reference_values.py).
ETA_UP_02_1 = 0.22387738483056396
ETA_MW_02_1 = 0.2189517832537392
GEN_CARNOT_02_1 = 0.78735821693273625
ETA_UP_02_6 = 0.49778539432639543
ETA_UP_TH_05 = 0.11111111111111111
ETA_RK_05 = 0.10819418755438784
ETA_UP_TH_02 = 0.03752470442573563
ETA_RK_02 = 0.036474508437578864
WORK_06_05_05 = 0.049341358696433565
R_CROSS_UP_02 = 0.89529439182932804   # eta_up(0.2, r) = 0.2
R_CROSS_MW_02 = 0.91546900346346075   # eta_mw(0.2, r) = 0.2
R_CROSS_UP_04 = 1.9933065475870387
R_CROSS_MW_04 = 2.0369262490014615

REL = 1e-12


# ---------------------------------------------------------------------------
# Work


def test_work_vanishes_on_the_pwc_boundary():
    # z^2 = tau at r = 0: second factor of the work is exactly zero.
    assert work_ht(EngineParams(z=math.sqrt(0.37), tau=0.37, r=0.0)) == 0.0


def test_work_positive_example():
    p = EngineParams(z=0.6, tau=0.5, r=0.5, beta2=1.0)
    assert math.isclose(work_ht(p), WORK_06_05_05, rel_tol=REL)
    assert pwc_ht(0.6, 0.5, 0.5)


def test_work_scales_inversely_with_beta2():
    w1 = work_ht(EngineParams(0.6, 0.5, 0.5, beta2=1.0))
    w2 = work_ht(EngineParams(0.6, 0.5, 0.5, beta2=4.0))
    assert math.isclose(w1, 4.0 * w2, rel_tol=1e-15)


@given(
    z=st.floats(0.05, 0.95),
    tau=st.floats(0.05, 0.95),
    r=st.floats(0.0, 3.0),
)
def test_work_grouped_form_matches_distributed_form(z, tau, r):
    got = work_ht(EngineParams(z, tau, r))
    c = math.cosh(2.0 * r)
    plain = (1.0 - z * z) * (z * z * c - tau) / (2.0 * z * z)
    assert math.isclose(got, plain, rel_tol=1e-9, abs_tol=1e-9 * c)


def test_work_near_degenerate_ratio_tends_to_zero():
    assert abs(work_ht(EngineParams(1.0 - 1e-9, 0.5, 0.0))) < 1e-8


def test_engine_params_validation():
    with pytest.raises(DomainError):
        EngineParams(z=1.0, tau=0.5)
    with pytest.raises(DomainError):
        EngineParams(z=0.5, tau=0.0)
    with pytest.raises(DomainError):
        EngineParams(z=0.5, tau=0.5, r=-0.2)
    with pytest.raises(DomainError):
        EngineParams(z=0.5, tau=0.5, beta2=0.0)


# ---------------------------------------------------------------------------
# Efficiency and positive work condition


def test_efficiency_sign_bookkeeping_below_pwc():
    # z^2 < tau and r = 0: not an engine, the formula goes negative.
    assert math.isclose(efficiency_ht(0.6, 0.5, 0.0), -2.24, rel_tol=1e-12)


def test_efficiency_zero_on_the_pwc_boundary():
    # z = 0.5, tau = 0.25: z^2 == tau exactly in floats.
    assert efficiency_ht(0.5, 0.25, 0.0) == 0.0


def test_efficiency_pole_raises():
    # 2 z^2 == tau (1 + z^2) exactly for z = 0.5, tau = 0.4.
    with pytest.raises(SingularityError):
        efficiency_ht(0.5, 0.4, 0.0)


def test_pwc_spot_cases():
    assert not pwc_ht(0.5, 0.5, 0.0)          # 0.25 < 0.5
    assert pwc_ht(0.5, 0.5, 1.0)              # 0.25 cosh 2 = 0.94 > 0.5
    assert not pwc_ht(0.5, 0.25, 0.0)         # exact tie: strict inequality


@given(z=st.floats(0.05, 0.95), tau=st.floats(0.05, 0.95), r=st.floats(0.0, 4.0))
def test_efficiency_in_the_engine_window(z, tau, r):
    g = tau / math.cosh(2.0 * r)
    if abs(z * z - g) < 1e-12:  # avoid the boundary itself
        return
    try:
        eta = efficiency_ht(z, tau, r)
    except SingularityError:
        assert not pwc_ht(z, tau, r)  # pole lies outside the engine region
        return
    if pwc_ht(z, tau, r):
        assert 0.0 < eta < 0.5
    else:
        # Not an engine: either no work is extracted (eta <= 0) or the hot
        # heat itself has reversed sign (negative denominator).
        den = 2.0 * z * z - g * (1.0 + z * z)
        assert eta <= 0.0 or den < 0.0


# ---------------------------------------------------------------------------
# Inversion z^2(eta)


@given(eta_c=st.floats(0.05, 0.95), r=st.floats(0.0, 3.0), frac=st.floats(0.0, 0.98))
def test_z2_of_eta_round_trip(eta_c, r, frac):
    eta = frac * eta_up(eta_c, r)
    z2 = z2_of_eta(eta, eta_c, r)
    assert 0.0 < z2 < 1.0
    eff = efficiency_ht(math.sqrt(z2), 1.0 - eta_c, r)
    assert math.isclose(eff, eta, rel_tol=1e-10, abs_tol=1e-10)


def test_z2_of_eta_zero_efficiency_pins_the_pwc_boundary():
    eta_c, r = 0.4, 0.7
    g = (1.0 - eta_c) / math.cosh(2.0 * r)
    assert math.isclose(z2_of_eta(0.0, eta_c, r), g, rel_tol=1e-9)


def test_z2_of_eta_discarded_branch_is_the_degenerate_ratio():
    # The inversion is two-valued.  At eta -> 0 the kept (minus) branch
    # pins the positive-work boundary; the plus branch lands on z = 1,
    # which the frequency types reject.  For eta > 0 both branches
    # reproduce eta, so the choice is fixed by the eta -> 0 limit.
    eta_c, r = 0.4, 0.7
    g = (1.0 - eta_c) / math.cosh(2.0 * r)
    b0 = 1.0 + g
    z2_plus_at_zero = 0.5 * (b0 + math.sqrt(b0 * b0 - 4.0 * g))
    assert math.isclose(z2_plus_at_zero, 1.0, rel_tol=1e-12)

    eta = 0.5 * eta_up(eta_c, r)
    b = (1.0 - 2.0 * eta) + g * (1.0 + eta)
    z2_plus = 0.5 * (b + math.sqrt(b * b - 4.0 * g * (1.0 - eta)))
    assert z2_of_eta(eta, eta_c, r) < z2_plus < 1.0
    assert math.isclose(efficiency_ht(math.sqrt(z2_plus), 1.0 - eta_c, r), eta, rel_tol=1e-9)


def test_z2_of_eta_rejects_unreachable_efficiencies():
    bound = eta_up(0.3, 1.0)
    with pytest.raises(NoSolutionError):
        z2_of_eta(bound, 0.3, 1.0)
    with pytest.raises(NoSolutionError):
        z2_of_eta(bound + 1e-9, 0.3, 1.0)
    with pytest.raises(DomainError):
        z2_of_eta(-0.1, 0.3, 1.0)


# ---------------------------------------------------------------------------
# Bounds


def test_eta_up_high_precision_values():
    assert math.isclose(eta_up(0.2, 1.0), ETA_UP_02_1, rel_tol=REL)
    assert math.isclose(eta_up(0.2, 6.0), ETA_UP_02_6, rel_tol=REL)


def test_eta_up_reduces_to_thermal_bound_at_r_zero():
    for eta_c in (0.1, 0.2, 0.5, 0.8, 0.95):
        assert math.isclose(eta_up(eta_c, 0.0), eta_up_thermal(eta_c), rel_tol=1e-13)


def test_eta_up_approaches_one_half():
    assert abs(eta_up(0.2, 6.0) - 0.5) < 5e-3
    assert eta_up(0.2, 20.0) < 0.5


def test_eta_up_strictly_below_half_everywhere_sampled():
    for eta_c in np.linspace(0.02, 0.98, 25):
        for r in np.linspace(0.0, 20.0, 41):
            assert eta_up(float(eta_c), float(r)) < 0.5


def test_eta_mw_high_precision_values():
    assert math.isclose(eta_mw(0.2, 1.0), ETA_MW_02_1, rel_tol=REL)
    assert math.isclose(eta_rk(0.5), ETA_RK_05, rel_tol=REL)
    assert math.isclose(eta_mw(0.5, 0.0), ETA_RK_05, rel_tol=1e-14)


def test_eta_mw_limit_at_unit_carnot():
    assert abs(eta_mw(1.0 - 1e-12, 1.0) - 0.5) < 1e-5


def test_eta_mw_never_exceeds_eta_up():
    for eta_c in np.linspace(0.05, 0.95, 19):
        for r in np.linspace(0.0, 8.0, 17):
            assert eta_mw(float(eta_c), float(r)) <= eta_up(float(eta_c), float(r))


def test_generalized_carnot_values():
    assert math.isclose(generalized_carnot(0.2, 0.0), 0.2, rel_tol=1e-15)
    assert math.isclose(generalized_carnot(0.2, 1.0), GEN_CARNOT_02_1, rel_tol=REL)
    assert generalized_carnot(0.01, 10.0) > 1.0 - 1e-8


def test_generalized_carnot_monotone_in_r():
    vals = [generalized_carnot(0.3, r) for r in np.linspace(0.0, 6.0, 25)]
    assert all(b > a for a, b in zip(vals, vals[1:]))


def test_eta_up_never_exceeds_generalized_carnot():
    for eta_c in np.linspace(0.05, 0.95, 19):
        for r in np.linspace(0.0, 10.0, 21):
            assert eta_up(float(eta_c), float(r)) < generalized_carnot(float(eta_c), float(r))


def test_thermal_bound_values_and_chain():
    assert math.isclose(eta_up_thermal(0.5), ETA_UP_TH_05, rel_tol=1e-15)
    assert math.isclose(eta_up_thermal(0.2), ETA_UP_TH_02, rel_tol=REL)
    assert math.isclose(eta_rk(0.2), ETA_RK_02, rel_tol=REL)
    for x in np.linspace(0.01, 0.99, 99):
        x = float(x)
        assert eta_rk(x) <= eta_up_thermal(x) <= 0.5 * x


def test_thermal_bound_limits():
    assert eta_up_thermal(1e-9) < 1e-9
    assert abs(eta_up_thermal(1.0 - 1e-12) - 0.5) < 1e-5
    assert abs(eta_rk(1.0 - 1e-12) - 0.5) < 1e-6


def test_eta_rk_small_carnot_slope_is_one_sixth():
    # Finite difference at the origin: eta_rk = eta_c/6 + O(eta_c^2).
    fd = eta_rk(1e-6) / 1e-6
    assert math.isclose(fd, 1.0 / 6.0, rel_tol=1e-5)


def test_reduction_identities_on_grid():
    for eta_c in np.linspace(0.05, 0.95, 19):
        for r in np.linspace(0.0, 5.0, 11):
            eta_c, r = float(eta_c), float(r)
            gen = generalized_carnot(eta_c, r)
            assert math.isclose(eta_up(eta_c, r), eta_up_thermal(gen), rel_tol=1e-12)
            assert math.isclose(eta_mw(eta_c, r), eta_rk(gen), rel_tol=1e-12)


# ---------------------------------------------------------------------------
# Carnot crossings (bounds vs. the bare Carnot efficiency)


def test_bounds_cross_carnot_at_finite_squeezing():
    root = find_root_scalar(lambda r: eta_up(0.2, r) - 0.2, (0.0, 5.0), tol=1e-10)
    assert abs(root - R_CROSS_UP_02) < 1e-8
    root = find_root_scalar(lambda r: eta_mw(0.2, r) - 0.2, (0.0, 5.0), tol=1e-10)
    assert abs(root - R_CROSS_MW_02) < 1e-8
    root = find_root_scalar(lambda r: eta_up(0.4, r) - 0.4, (0.0, 6.0), tol=1e-10)
    assert abs(root - R_CROSS_UP_04) < 1e-8
    root = find_root_scalar(lambda r: eta_mw(0.4, r) - 0.4, (0.0, 6.0), tol=1e-10)
    assert abs(root - R_CROSS_MW_04) < 1e-8


def test_large_carnot_is_never_crossed():
    # eta_up < 1/2 < 0.8 for every squeezing strength.
    for r in np.linspace(0.0, 20.0, 81):
        assert eta_up(0.8, float(r)) < 0.8


# ---------------------------------------------------------------------------
# Optimal ratio, report, regime advisory


def test_z_star_closed_form():
    assert math.isclose(z_star(0.5, 0.0), 0.5**0.25, rel_tol=1e-15)
    assert math.isclose(
        z_star(0.5, 1.0), (0.5 / math.cosh(2.0)) ** 0.25, rel_tol=1e-14
    )


def test_efficiency_at_z_star_is_eta_mw():
    # Algebraic identity, checked through the independent expression trees.
    for eta_c in (0.1, 0.4, 0.7):
        for r in (0.0, 0.5, 2.0):
            tau = 1.0 - eta_c
            assert math.isclose(
                efficiency_ht(z_star(tau, r), tau, r), eta_mw(eta_c, r), rel_tol=1e-12
            )


def test_engine_report_bundles_consistent_fields():
    rep = engine_report(0.2, 1.0)
    assert math.isclose(rep.eta_up, ETA_UP_02_1, rel_tol=REL)
    assert math.isclose(rep.eta_mw, ETA_MW_02_1, rel_tol=REL)
    assert math.isclose(rep.eta_c_gen, GEN_CARNOT_02_1, rel_tol=REL)
    assert math.isclose(rep.z_star, z_star(0.8, 1.0), rel_tol=1e-15)
    assert rep.pwc_satisfied  # the work optimum always clears the PWC
    assert rep.eta_mw <= rep.eta_up < rep.eta_c_gen
    assert not engine_report(0.2, 0.0, z=0.3).pwc_satisfied


def test_ht_regime_advisory_threshold():
    assert ht_regime_ok(0.3, 1.0)
    assert not ht_regime_ok(0.31, 1.0)
