"""Analytic performance theory of the sudden-quench harmonic Otto machine
coupled to squeezed thermal reservoirs, with built-in numerical verification.

`cycle` holds the exact finite-temperature bookkeeping of the four-stroke
cycle; `engine` and `fridge` the closed-form high-temperature bounds;
`oracle` the deterministic search primitives; `verify` the self-check
suites; `cli` the command line.
"""

__version__ = "0.1.0"

from . import cycle, engine, errors, fridge, oracle, special, verify
from .cycle import (
    AdiabaticityMode,
    BathSpec,
    CyclePerformance,
    CycleSpec,
    FrequencyPair,
    OperatingMode,
    SqueezePlacement,
    cycle_energies,
    delta_h,
    effective_temperature,
    efficiency_sudden,
    heats_work,
    lambda_sudden,
    squeezed_occupation,
    thermal_occupation,
)
from .engine import (
    EngineBoundsReport,
    EngineParams,
    efficiency_ht,
    engine_report,
    eta_mw,
    eta_rk,
    eta_up,
    eta_up_thermal,
    generalized_carnot,
    pwc_ht,
    work_ht,
    z2_of_eta,
    z_star,
)
from .fridge import (
    FridgeBoundsReport,
    FridgeParams,
    cop_ht,
    cop_quasistatic,
    fridge_report,
    r_window,
    tau_window,
    zeta_carnot,
    zeta_up,
    zeta_up_thermal,
)
from .oracle import (
    ScalarObjective,
    SupremumReport,
    find_root_scalar,
    maximize_scalar,
    sup_constrained_grid,
)
