"""Exact bookkeeping of the four-stroke harmonic Otto cycle.

The working fluid is a harmonic oscillator driven around a cycle of two
frequency strokes (omega1 <-> omega2) and two heat-exchange strokes, one
against a cold thermal reservoir and one against a hot reservoir; either
reservoir may be squeezed.  Everything here is evaluated at finite
temperature with no high-temperature approximation.  Units: hbar = k_B = 1,
so frequencies, inverse temperatures and energies share one energy scale.

Sign convention: heat absorbed by the oscillator is positive, and
``w_ext = q2 + q4`` is the net extracted work (positive when the cycle runs
as an engine).  Refrigerator work input is derived at the reporting layer
as ``-w_ext``.
"""

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DomainError, ModeError
from .special import coth

__all__ = [
    "AdiabaticityMode",
    "BathSpec",
    "CyclePerformance",
    "CycleSpec",
    "FrequencyPair",
    "OperatingMode",
    "SqueezePlacement",
    "classify_mode",
    "cycle_energies",
    "delta_h",
    "effective_temperature",
    "efficiency_sudden",
    "heats_work",
    "lambda_sudden",
    "squeezed_occupation",
    "thermal_occupation",
]

# sinh(r)**2 overflows past this; occupations saturate to inf there.
_SINH_OVERFLOW = 355.0


def _positive(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0):
        raise DomainError(f"{name} must be a positive finite number, got {value!r}")
    return float(value)


def _nonnegative(name, value):
    if not (isinstance(value, (int, float)) and math.isfinite(value) and value >= 0):
        raise DomainError(f"{name} must be a non-negative finite number, got {value!r}")
    return float(value)


def thermal_occupation(beta, omega):
    """Mean thermal quanta 1/(e^{beta omega} - 1) of a mode at frequency omega."""
    beta = _positive("beta", beta)
    omega = _positive("omega", omega)
    x = beta * omega
    e = math.exp(-x)
    return e / -math.expm1(-x)


def squeezed_occupation(beta, omega, r):
    """Mean quanta of a squeezed thermal state: <n> + (2<n> + 1) sinh^2(r)."""
    n = thermal_occupation(beta, omega)
    r = _nonnegative("r", r)
    if r == 0.0:
        return n
    if r > _SINH_OVERFLOW:
        return math.inf
    s2 = math.sinh(r) ** 2
    return n + (2.0 * n + 1.0) * s2


def delta_h(beta, omega, r):
    """Squeezing enhancement of the mean occupation, 1 + (2 + 1/<n>) sinh^2(r).

    Equals 1 exactly at r = 0 and tends to cosh(2r) as beta*omega -> 0.
    For beta*omega beyond ~709 (or r beyond ~355) the factor exceeds the
    double range and saturates to inf.
    """
    beta = _positive("beta", beta)
    omega = _positive("omega", omega)
    r = _nonnegative("r", r)
    if r == 0.0:
        return 1.0
    x = beta * omega
    inv_n = math.expm1(x) if x < 709.0 else math.inf
    if r > _SINH_OVERFLOW:
        return math.inf
    return 1.0 + (2.0 + inv_n) * math.sinh(r) ** 2


def lambda_sudden(freqs):
    """Non-adiabaticity factor of an instantaneous frequency quench.

    (omega1^2 + omega2^2) / (2 omega1 omega2); at least 1, with equality
    only for equal frequencies (which FrequencyPair rejects).
    """
    w1, w2 = freqs.omega1, freqs.omega2
    return (w1 * w1 + w2 * w2) / (2.0 * w1 * w2)


@dataclass(frozen=True)
class BathSpec:
    """One reservoir: inverse temperature and squeezing strength."""

    beta: float
    r: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "beta", _positive("beta", self.beta))
        object.__setattr__(self, "r", _nonnegative("r", self.r))


@dataclass(frozen=True)
class FrequencyPair:
    """The two stroke frequencies, strictly ordered omega1 < omega2.

    Equal frequencies are rejected outright: every downstream expression
    divides by (omega2 - omega1) or (1 - z^2), so the degenerate zero-work
    cycle would only ever surface as spurious 0/0 noise.
    """

    omega1: float
    omega2: float

    def __post_init__(self):
        object.__setattr__(self, "omega1", _positive("omega1", self.omega1))
        object.__setattr__(self, "omega2", _positive("omega2", self.omega2))
        if not self.omega1 < self.omega2:
            raise DomainError(
                f"need omega1 < omega2 strictly, got omega1={self.omega1}, omega2={self.omega2}"
            )

    @property
    def ratio(self):
        """Compression ratio z = omega1/omega2, in (0, 1)."""
        return self.omega1 / self.omega2


@dataclass(frozen=True)
class AdiabaticityMode:
    """How the frequency strokes are driven.

    ``adiabatic()`` is the quasi-static limit (factor 1), ``sudden_switch()``
    the instantaneous quench, and ``custom(lam)`` accepts an externally
    computed factor lam >= 1 for any other ramp.
    """

    kind: str
    lam: float | None = None

    _KINDS = ("adiabatic", "sudden", "custom")

    def __post_init__(self):
        if self.kind not in self._KINDS:
            raise DomainError(f"unknown adiabaticity kind {self.kind!r}")
        if self.kind == "custom":
            if self.lam is None or not (math.isfinite(self.lam) and self.lam >= 1.0):
                raise DomainError(f"custom adiabaticity factor must be >= 1, got {self.lam!r}")
        elif self.lam is not None:
            raise DomainError(f"{self.kind!r} mode does not take an explicit factor")

    @classmethod
    def adiabatic(cls):
        return cls("adiabatic")

    @classmethod
    def sudden_switch(cls):
        return cls("sudden")

    @classmethod
    def custom(cls, lam):
        return cls("custom", float(lam))

    def lambda_for(self, freqs):
        """The adiabaticity factor this mode assigns to a frequency pair."""
        if self.kind == "adiabatic":
            return 1.0
        if self.kind == "sudden":
            return lambda_sudden(freqs)
        return self.lam


class SqueezePlacement(Enum):
    """Which reservoir carries the squeezing."""

    HOT_BATH = "hot"
    COLD_BATH = "cold"


class OperatingMode(Enum):
    """Sign-pattern label of a cycle's heats and work."""

    ENGINE = "engine"
    REFRIGERATOR = "refrigerator"
    HEATER = "heater"
    ACCELERATOR = "accelerator"


@dataclass(frozen=True)
class CycleSpec:
    """Full cycle configuration.

    ``cold`` contacts the oscillator at omega1, ``hot`` at omega2, and the
    cold bath must be genuinely colder (cold.beta > hot.beta).  Exactly one
    side may carry squeezing, selected by ``placement``; the other bath must
    have r = 0.
    """

    cold: BathSpec
    hot: BathSpec
    freqs: FrequencyPair
    mode: AdiabaticityMode
    placement: SqueezePlacement = SqueezePlacement.HOT_BATH

    def __post_init__(self):
        if not self.cold.beta > self.hot.beta:
            raise DomainError(
                f"cold bath must be colder: need cold.beta > hot.beta, "
                f"got {self.cold.beta} <= {self.hot.beta}"
            )
        idle = self.cold if self.placement is SqueezePlacement.HOT_BATH else self.hot
        if idle.r != 0.0:
            raise DomainError(
                f"the non-squeezed ({'cold' if idle is self.cold else 'hot'}) bath must have r = 0, "
                f"got r={idle.r}"
            )

    @property
    def squeezed_bath(self):
        return self.hot if self.placement is SqueezePlacement.HOT_BATH else self.cold


@dataclass(frozen=True)
class CyclePerformance:
    """Corner energies, heats, net work and the operating-mode label.

    ``eta`` is populated only in engine mode, ``cop`` only in refrigerator
    mode.  ``q2 = h_c - h_b`` and ``q4 = h_a - h_d`` hold by construction,
    as does the first-law closure ``w_ext = q2 + q4``.
    """

    h_a: float
    h_b: float
    h_c: float
    h_d: float
    q2: float
    q4: float
    w_ext: float
    mode_label: OperatingMode
    eta: float | None = None
    cop: float | None = None

    @property
    def work_input(self):
        """Work pumped into the cycle, -w_ext (positive for a refrigerator)."""
        return -self.w_ext


def cycle_energies(spec):
    """Mean oscillator energies at the four cycle corners A, B, C, D.

    Corner A closes the cold contact at omega1, B follows the upward
    frequency stroke, C closes the hot contact at omega2, D follows the
    downward stroke.  The squeezed side's enhancement factor multiplies the
    two corners fed by that reservoir: C and D for hot-side squeezing, A and
    B for cold-side squeezing.

    Note on cold-side squeezing: the exact finite-temperature treatment
    applies the full enhancement delta_h(beta_cold, omega1, r) to corners A
    and B, mirroring the hot-side convention; the widely quoted
    high-temperature forms (factor cosh 2r) are recovered as the
    beta*omega -> 0 limit of this choice.
    """
    w1, w2 = spec.freqs.omega1, spec.freqs.omega2
    lam = spec.mode.lambda_for(spec.freqs)
    c_cold = coth(0.5 * spec.cold.beta * w1)
    c_hot = coth(0.5 * spec.hot.beta * w2)
    if spec.placement is SqueezePlacement.HOT_BATH:
        f = delta_h(spec.hot.beta, w2, spec.hot.r)
        h_a = 0.5 * w1 * c_cold
        h_b = 0.5 * w2 * lam * c_cold
        h_c = 0.5 * w2 * c_hot * f
        h_d = 0.5 * w1 * lam * c_hot * f
    else:
        f = delta_h(spec.cold.beta, w1, spec.cold.r)
        h_a = 0.5 * w1 * c_cold * f
        h_b = 0.5 * w2 * lam * c_cold * f
        h_c = 0.5 * w2 * c_hot
        h_d = 0.5 * w1 * lam * c_hot
    return h_a, h_b, h_c, h_d


def classify_mode(q2, q4, w_ext):
    """Operating-mode label from the sign pattern of the heats and work.

    Engine: absorbs at the hot contact, rejects at the cold one, extracts
    net work.  Accelerator: same heat pattern but net work is spent.
    Refrigerator: draws heat out of the cold reservoir at the cost of work.
    Boundary ties are never labelled engine: a zero-work tie with
    engine-pattern heats counts as an accelerator, and every remaining
    pattern (both heats rejected, or exact zeros in the heats) as a heater.
    """
    if q2 > 0.0 and q4 < 0.0:
        return OperatingMode.ENGINE if w_ext > 0.0 else OperatingMode.ACCELERATOR
    if q2 < 0.0 and q4 > 0.0 and w_ext < 0.0:
        return OperatingMode.REFRIGERATOR
    return OperatingMode.HEATER


def heats_work(spec):
    """Evaluate one full cycle: corner energies, heats, work, mode label."""
    h_a, h_b, h_c, h_d = cycle_energies(spec)
    q2 = h_c - h_b
    q4 = h_a - h_d
    w_ext = q2 + q4
    mode = classify_mode(q2, q4, w_ext)
    eta = w_ext / q2 if mode is OperatingMode.ENGINE else None
    cop = q4 / -w_ext if mode is OperatingMode.REFRIGERATOR else None
    return CyclePerformance(
        h_a=h_a, h_b=h_b, h_c=h_c, h_d=h_d,
        q2=q2, q4=q4, w_ext=w_ext,
        mode_label=mode, eta=eta, cop=cop,
    )


def efficiency_sudden(spec):
    """Engine efficiency w_ext / q2 of the cycle.

    Raises ModeError, naming the actual operating mode, when the spec does
    not extract positive work from positive hot-side heat.
    """
    perf = heats_work(spec)
    if perf.mode_label is not OperatingMode.ENGINE:
        raise ModeError(
            f"efficiency is defined for engine operation only; "
            f"this cycle runs as a {perf.mode_label.value}",
            mode=perf.mode_label,
        )
    return perf.eta


def effective_temperature(beta, omega, r):
    """Temperature a plain thermal bath would need to mimic a squeezed one.

    Inverts the Bose factor at the squeezed occupation N:
    T = omega / ln(1 + 1/N).  Reduces to 1/beta exactly at r = 0 and to
    cosh(2r)/beta in the beta*omega -> 0 limit.
    """
    beta = _positive("beta", beta)
    omega = _positive("omega", omega)
    r = _nonnegative("r", r)
    if r == 0.0:
        return 1.0 / beta
    n = squeezed_occupation(beta, omega, r)
    if math.isinf(n):
        return math.inf
    return omega / math.log1p(1.0 / n)
