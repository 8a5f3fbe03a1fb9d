"""Deterministic numerical search, independent of every closed form it checks.

Three primitives: golden-section maximisation of a unimodal scalar
objective, brute-force suprema over constrained rectangular grids, and
bisection root location.  All three are fully deterministic: identical
inputs produce bitwise-identical reports, grid reductions break ties on the
lowest lexicographic input, and no randomness enters anywhere.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import BracketError, DomainError

__all__ = [
    "ScalarObjective",
    "SupremumReport",
    "find_root_scalar",
    "maximize_scalar",
    "refine_parabolic",
    "sup_constrained_grid",
]

INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0        # 1/phi
INV_PHI2 = (3.0 - math.sqrt(5.0)) / 2.0       # 1/phi^2


@dataclass(frozen=True)
class ScalarObjective:
    """A scalar function to maximise on [lo, hi], assumed unimodal there.

    Unimodality is the caller's responsibility; each use in this package
    documents why it holds (and the tests check it by second differences).
    """

    fn: Callable[[float], float]
    lo: float
    hi: float
    tol: float = 1e-10

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError(f"empty interval [{self.lo}, {self.hi}]")
        if not self.tol > 0:
            raise DomainError(f"tolerance must be positive, got {self.tol}")


@dataclass(frozen=True)
class SupremumReport:
    """Best point found by a search; None fields signal an empty domain."""

    best_input: float | tuple | None
    best_value: float | None
    evaluations: int
    method: str


def _eval_finite(fn, x):
    y = fn(x)
    if not math.isfinite(y):
        raise DomainError(f"objective returned a non-finite value {y!r} at x={x}")
    return y


def maximize_scalar(obj):
    """Golden-section maximisation of a unimodal objective.

    The bracket shrinks by 1/phi per iteration; the step count is fixed up
    front as ceil(log(width/tol)/log(phi)), so the report is a deterministic
    function of the inputs.  best_input is the best point actually
    evaluated, which always lies inside the final bracket.
    """
    a, b = obj.lo, obj.hi
    h = b - a
    if h <= obj.tol:
        x = 0.5 * (a + b)
        return SupremumReport(x, _eval_finite(obj.fn, x), 1, "golden-section")

    n = int(math.ceil(math.log(h / obj.tol) / math.log(1.0 / INV_PHI)))
    c = a + INV_PHI2 * h
    d = a + INV_PHI * h
    yc = _eval_finite(obj.fn, c)
    yd = _eval_finite(obj.fn, d)
    best_x, best_y = (c, yc) if yc >= yd else (d, yd)
    evaluations = 2

    for _ in range(n - 1):
        if yc > yd:
            b, d, yd = d, c, yc
            h = INV_PHI * h
            c = a + INV_PHI2 * h
            yc = _eval_finite(obj.fn, c)
            x_new, y_new = c, yc
        else:
            a, c, yc = c, d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = _eval_finite(obj.fn, d)
            x_new, y_new = d, yd
        evaluations += 1
        if y_new > best_y:
            best_x, best_y = x_new, y_new

    mid = 0.5 * (a + b)
    y_mid = _eval_finite(obj.fn, mid)
    evaluations += 1
    if y_mid > best_y:
        best_x, best_y = mid, y_mid
    return SupremumReport(best_x, best_y, evaluations, "golden-section")


def refine_parabolic(fn, x, h=1e-5):
    """One parabolic-fit step through (x - h, x, x + h) around a maximum.

    Any comparison-based search (golden section included) stalls once the
    objective differences near a smooth interior maximum fall under the
    rounding noise of the values, an argmax plateau of order sqrt(eps).
    A single parabola fitted through samples spaced well outside that
    plateau recovers the vertex to ~h^2 truncation error instead.  Returns
    x unchanged if the three points are not locally concave at this scale.
    """
    f0 = _eval_finite(fn, x)
    fp = _eval_finite(fn, x + h)
    fm = _eval_finite(fn, x - h)
    den = fp - 2.0 * f0 + fm
    if den >= 0.0:
        return x
    return x - 0.5 * h * (fp - fm) / den


def _as_resolutions(resolution, k):
    if isinstance(resolution, int):
        res = [resolution] * k
    else:
        res = [int(n) for n in resolution]
        if len(res) != k:
            raise DomainError(f"got {len(res)} resolutions for {k} axes")
    for n in res:
        if n < 2:
            raise DomainError(f"resolution must be >= 2 per axis, got {n}")
    return res


def _grid_scan(objective, predicate, axes):
    """Supremum over the product grid; first maximum in C order wins ties.

    When there are several axes the scan is chunked over the first one to
    keep memory flat, which preserves the lexicographic tie-break: earlier
    chunks win ties, and np.argmax already returns the first maximum within
    a chunk.
    """
    best_val = -math.inf
    best_point = None
    evaluations = 0

    def scan_block(coords):
        nonlocal best_val, best_point, evaluations
        if predicate is None:
            mask = np.ones(coords[0].shape, dtype=bool)
        else:
            mask = np.asarray(predicate(*coords), dtype=bool)
        n_feasible = int(mask.sum())
        if n_feasible == 0:
            return
        evaluations += n_feasible
        vals = np.full(coords[0].shape, -np.inf)
        vals[mask] = objective(*(c[mask] for c in coords))
        flat = int(np.argmax(vals))
        val = float(vals.flat[flat])
        if val > best_val:
            idx = np.unravel_index(flat, vals.shape)
            best_val = val
            best_point = tuple(float(c[idx]) for c in coords)

    if len(axes) == 1:
        scan_block([np.asarray(axes[0])])
    else:
        inner = np.meshgrid(*axes[1:], indexing="ij")
        for x0 in axes[0]:
            scan_block([np.full_like(inner[0], x0), *inner])

    return best_point, best_val, evaluations


def sup_constrained_grid(objective, bounds, predicate=None, resolution=50, refine=True):
    """Supremum of a vectorised objective over a feasible rectangular grid.

    ``objective`` and ``predicate`` receive one numpy array per axis; the
    objective is only ever evaluated at feasible points, so it may be
    undefined elsewhere.  An empty feasible set is an answer, not an error:
    the report comes back with None fields and zero evaluations.

    With ``refine`` the coarse best point is re-bracketed by one coarse step
    per axis and re-scanned on a 10x finer local grid; this buys accuracy
    cheaply without any claim of convergence.
    """
    k = len(bounds)
    if not 1 <= k <= 5:
        raise DomainError(f"grid search supports 1 to 5 axes, got {k}")
    res = _as_resolutions(resolution, k)
    for (lo, hi) in bounds:
        if not lo < hi:
            raise DomainError(f"empty axis [{lo}, {hi}]")

    axes = [np.linspace(lo, hi, n) for (lo, hi), n in zip(bounds, res)]
    best_point, best_val, evaluations = _grid_scan(objective, predicate, axes)
    method = "grid"

    if best_point is None:
        return SupremumReport(None, None, 0, method)

    if refine:
        fine_axes = []
        for (lo, hi), n, x in zip(bounds, res, best_point):
            step = (hi - lo) / (n - 1)
            fine_axes.append(np.linspace(max(lo, x - step), min(hi, x + step), 21))
        point, val, extra = _grid_scan(objective, predicate, fine_axes)
        evaluations += extra
        if point is not None and val > best_val:
            best_point, best_val = point, val
        method = "grid+refine"

    return SupremumReport(best_point, best_val, evaluations, method)


def find_root_scalar(g, bracket, tol=1e-12):
    """Bisection root of a continuous function with a sign change on the bracket."""
    a, b = bracket
    if not a < b:
        raise DomainError(f"empty bracket [{a}, {b}]")
    fa = g(a)
    fb = g(b)
    if fa == 0.0:
        return a
    if fb == 0.0:
        return b
    if math.isnan(fa) or math.isnan(fb) or (fa > 0.0) == (fb > 0.0):
        raise BracketError(f"no sign change on [{a}, {b}]: g(a)={fa}, g(b)={fb}")
    while b - a > tol:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:  # interval no longer splittable in floats
            break
        fm = g(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (fa > 0.0):
            a, fa = mid, fm
        else:
            b, fb = mid, fm
    return 0.5 * (a + b)
