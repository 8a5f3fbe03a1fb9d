"""Refrigerator performance with a squeezed cold reservoir.

High-temperature, sudden-quench regime in the variables z = omega1/omega2,
tau = beta_hot/beta_cold and the cold-bath squeezing r.  The combination
``tau_c = tau * cosh(2r)`` is the temperature ratio against the cold bath's
effective temperature; cooling is possible only for tau_c in (1/2, 1), and
all windows are strict: their endpoints carry zero cooling and evaluate to
the infeasible error rather than to a boundary value.

Two distinct coefficient-of-performance notions appear.  ``cop_ht`` is the
operational one, heat drawn from the cold bath per unit work input, and it
is the quantity the upper bounds here actually cap.  ``cop_quasistatic`` is
the frequency ratio omega1/(omega2 - omega1), the familiar quasi-static
expression; it is exposed separately and is *not* bounded by zeta_up.
"""

import math
from dataclasses import dataclass

from .cycle import classify_mode
from .errors import DomainError, InfeasibleError, ModeError
from .special import sech

__all__ = [
    "FridgeBoundsReport",
    "FridgeParams",
    "cooling_heat_ht",
    "cop_ht",
    "cop_quasistatic",
    "extracted_work_ht",
    "fridge_report",
    "hot_heat_ht",
    "r_window",
    "tau_window",
    "zeta_carnot",
    "zeta_up",
    "zeta_up_thermal",
]


def _check_unit_open(name, value):
    if not (isinstance(value, (int, float)) and 0.0 < value < 1.0):
        raise DomainError(f"{name} must lie strictly inside (0, 1), got {value!r}")
    return float(value)


def _check_r(r):
    if not (isinstance(r, (int, float)) and math.isfinite(r) and r >= 0.0):
        raise DomainError(f"r must be a non-negative finite number, got {r!r}")
    return float(r)


def _tau_c(tau, r):
    u = sech(2.0 * r)
    return math.inf if u == 0.0 else tau / u


@dataclass(frozen=True)
class FridgeParams:
    """Refrigerator operating point (dimensionless; heats scale with 1/beta2)."""

    z: float
    tau: float
    r: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "z", _check_unit_open("z", self.z))
        object.__setattr__(self, "tau", _check_unit_open("tau", self.tau))
        object.__setattr__(self, "r", _check_r(self.r))


@dataclass(frozen=True)
class FridgeBoundsReport:
    """Carnot COP, the squeezed bound (None when infeasible) and both windows."""

    zeta_c: float
    zeta_up: float | None
    tau_window: tuple[float, float]
    r_window: tuple[float, float]
    cooling_feasible: bool
    reason: str | None = None


def cooling_heat_ht(z, tau, r, beta2=1.0):
    """Heat drawn from the cold reservoir: (2 tau cosh 2r - 1 - z^2) / (2 beta2).

    Accepts the closed interval z in [0, 1] so the edges of the cooling
    window can be probed; the endpoints bracket where the sign change in r
    sweeps as z runs over the open interval.
    """
    if not (isinstance(z, (int, float)) and 0.0 <= z <= 1.0):
        raise DomainError(f"z must lie in [0, 1], got {z!r}")
    tau = _check_unit_open("tau", tau)
    tc = _tau_c(tau, _check_r(r))
    return (2.0 * tc - 1.0 - z * z) / (2.0 * beta2)


def hot_heat_ht(z, tau, r, beta2=1.0):
    """Heat exchanged with the hot reservoir: (2 z^2 - tau_c (1 + z^2)) / (2 beta2 z^2)."""
    z = _check_unit_open("z", z)
    tau = _check_unit_open("tau", tau)
    tc = _tau_c(tau, _check_r(r))
    z2 = z * z
    return (2.0 * z2 - tc * (1.0 + z2)) / (2.0 * beta2 * z2)


def extracted_work_ht(z, tau, r, beta2=1.0):
    """Net extracted work: -(1 - z^2)(tau_c - z^2) / (2 beta2 z^2).

    Negative throughout the cooling window (the refrigerator consumes work).
    """
    z = _check_unit_open("z", z)
    tau = _check_unit_open("tau", tau)
    tc = _tau_c(tau, _check_r(r))
    z2 = z * z
    return -(1.0 - z2) * (tc - z2) / (2.0 * beta2 * z2)


def cop_ht(p):
    """Coefficient of performance Q_cold / W_in at one operating point.

    Computed from the high-temperature heats; raises ModeError, naming the
    actual operating mode, whenever the point does not cool (q4 <= 0,
    including the exact window boundary where cooling vanishes).
    """
    q4 = cooling_heat_ht(p.z, p.tau, p.r)
    if not math.isfinite(q4):
        raise DomainError(
            f"tau*cosh(2r) exceeds the double range at r={p.r}; "
            f"the heats are no longer representable"
        )
    if q4 <= 0.0:
        q2 = hot_heat_ht(p.z, p.tau, p.r)
        mode = classify_mode(q2, q4, q2 + q4)
        raise ModeError(
            f"no cooling at z={p.z}, tau={p.tau}, r={p.r}: "
            f"the cycle operates as a {mode.value}",
            mode=mode,
        )
    return q4 / -extracted_work_ht(p.z, p.tau, p.r)


def cop_quasistatic(z):
    """Frequency-ratio COP omega1/(omega2 - omega1) = z/(1 - z)."""
    z = _check_unit_open("z", z)
    return z / (1.0 - z)


def zeta_carnot(tau):
    """Carnot COP tau/(1 - tau); grows without bound as tau -> 1."""
    tau = _check_unit_open("tau", tau)
    return tau / (1.0 - tau)


def zeta_up_thermal(zeta_c):
    """COP bound between plain thermal reservoirs: 1 + 3 zc - 2 sqrt(2 zc (1 + zc)).

    Needs zeta_c > 1 (tau > 1/2); below that the cold reservoir sits under
    half the hot temperature and this machine cannot cool it at all.
    """
    if not (isinstance(zeta_c, (int, float)) and math.isfinite(zeta_c)):
        raise DomainError(f"zeta_c must be finite, got {zeta_c!r}")
    if zeta_c <= 1.0:
        raise InfeasibleError(
            f"cooling requires zeta_c > 1 (the cold reservoir cannot sit below "
            f"half the hot temperature), got zeta_c={zeta_c}"
        )
    return 1.0 + 3.0 * zeta_c - 2.0 * math.sqrt(2.0 * zeta_c * (1.0 + zeta_c))


def zeta_up(tau, r):
    """COP bound with a squeezed cold reservoir.

    3/(1 - tau_c) - 2 - 2 sqrt(2) sqrt(tau_c / (tau_c - 1)^2) with
    tau_c = tau cosh(2r); identical to zeta_up_thermal(tau_c/(1 - tau_c)).
    Raises InfeasibleError naming the violated side when tau_c leaves the
    open window (1/2, 1).
    """
    tau = _check_unit_open("tau", tau)
    tc = _tau_c(tau, _check_r(r))
    if tc <= 0.5:
        raise InfeasibleError(
            f"tau*cosh(2r) <= 1/2: effective cold temperature at or below half "
            f"the hot temperature (tau={tau}, r={r})"
        )
    if tc >= 1.0:
        raise InfeasibleError(
            f"tau*cosh(2r) >= 1: effective cold temperature at or above the hot "
            f"temperature, refrigeration has stopped (tau={tau}, r={r})"
        )
    return 3.0 / (1.0 - tc) - 2.0 - 2.0 * math.sqrt(2.0) * math.sqrt(tc / (tc - 1.0) ** 2)


def tau_window(r):
    """Open interval of temperature ratios with positive cooling: (sech(2r)/2, sech(2r))."""
    u = sech(2.0 * _check_r(r))
    return (0.5 * u, u)


def r_window(tau):
    """Open interval of squeezing strengths with positive cooling at ratio tau.

    (acosh(1/(2 tau))/2, acosh(1/tau)/2) for tau below 1/2; from tau = 1/2
    upward the lower endpoint is 0 (cooling is already open at r = 0+).
    """
    tau = _check_unit_open("tau", tau)
    hi = 0.5 * math.acosh(1.0 / tau)
    lo = 0.5 * math.acosh(1.0 / (2.0 * tau)) if tau < 0.5 else 0.0
    return (lo, hi)


def fridge_report(tau, r=0.0):
    """Feasibility report at (tau, r): bound if cooling is possible, reason if not."""
    tau = _check_unit_open("tau", tau)
    r = _check_r(r)
    try:
        bound = zeta_up(tau, r)
        feasible, reason = True, None
    except InfeasibleError as exc:
        bound, feasible, reason = None, False, str(exc)
    return FridgeBoundsReport(
        zeta_c=zeta_carnot(tau),
        zeta_up=bound,
        tau_window=tau_window(r),
        r_window=r_window(tau),
        cooling_feasible=feasible,
        reason=reason,
    )
