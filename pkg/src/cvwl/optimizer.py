"""Gain selection: closed forms for the GHZ and asymmetric EPR families,
plus a derivative-free minimizer over tied gain structures.

Objectives: "entanglement" minimizes ``ent_ratio = lhs / bound`` (the
bound of c5/c6/c8 moves with the gains, so this differs from minimizing
the left-hand side once the bound is gain-dependent); "steering" divides
by the steering bound instead; "lhs" minimizes the raw left-hand side —
the stationarity procedure behind the published gain tables, and the only
objective whose optimum matches them for the criterion-8 structures at
four or more modes.

The search runs a vectorized coarse grid over [-2, 2] per free parameter
followed by Nelder-Mead refinement; with at most three tied parameters
the grid brackets the global optimum.  Passing an explicit ``init`` skips
the grid (warm start) and refines from there.

Grid step: 0.01 for one or two free parameters.  Three-parameter problems
use a 0.05 grid plus refinement instead — a 0.01 cube would be 6.5e7
points for no accuracy gain, since the simplex stage converges to ~1e-8
from any bracketing cell.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np
from scipy.optimize import minimize as _scipy_minimize

from . import networks, witnesses
from .networks import build_counterexample, build_epr_type_i, build_epr_type_ii, build_ghz
from .partitions import enumerate_bipartitions
from .states import GainVector, State, apply_loss, second_moments, vacuum_state

GRID_RANGE = (-2.0, 2.0)
RATIO_TOL = 1e-8


def analytic_gains_ghz(n: int, r: float):
    """Stationary gains (g, h) of the GHZ-state variance expansion for the
    tied structure h_1 = g_1 = 1, h_i = h, g_i = g (i >= 2).

    With input variances vx1 = exp(2r), vx2 = exp(-2r) (and the p variances
    swapped), h = -(vx1 - vx2) / (vx2 + (N-1) vx1) and g likewise from the
    p variances; at large r these approach g = 1, h = -1/(N-1).
    """
    if n < 2:
        raise ValueError(f"need at least 2 modes, got {n}")
    if r < 0:
        raise ValueError(f"squeeze parameter must be nonnegative, got {r}")
    vx1, vx2 = math.exp(2.0 * r), math.exp(-2.0 * r)
    vp1, vp2 = vx2, vx1
    h = -(vx1 - vx2) / (vx2 + (n - 1) * vx1) + 0.0
    g = -(vp1 - vp2) / (vp2 + (n - 1) * vp1) + 0.0
    return g, h


def analytic_gains_epr1(n: int, r: float):
    """Stationary gains (g, h) for the asymmetric EPR-type state:
    h = -(vx1 - vx2) / (sqrt(N-1) (vx2 + vx1)) = -tanh(2r)/sqrt(N-1),
    g = +tanh(2r)/sqrt(N-1); at large r these approach +-1/sqrt(N-1)."""
    if n < 2:
        raise ValueError(f"need at least 2 modes, got {n}")
    if r < 0:
        raise ValueError(f"squeeze parameter must be nonnegative, got {r}")
    scale = math.tanh(2.0 * r) / math.sqrt(n - 1)
    return scale, -scale + 0.0


@dataclass(frozen=True)
class GainStructure:
    """Tied-parameter layout mapping free parameters to criterion gains.

    Kinds:
      - "tied":    params (g, h) -> GainVector (1, h, ..., h), (1, g, ..., g)
      - "free_g3": params (g1, g2, g3) for the three-mode forms and c1/c2
      - "tied_g":  single g tied across all four scalar gains of c9
      - "free_g14": params (g1, g4) for c10
      - "epr2":    params (h_R, h_L, g_R) for c8 on the symmetric EPR state,
                   with g on the left-arm modes tied to h_L
      - "fixed":   no free parameters (c3, c4, c7)
    """

    kind: str
    n_modes: int

    @property
    def param_names(self):
        return {
            "tied": ("g", "h"),
            "free_g3": ("g1", "g2", "g3"),
            "tied_g": ("g",),
            "free_g14": ("g1", "g4"),
            "epr2": ("h_R", "h_L", "g_R"),
            "fixed": (),
        }[self.kind]

    @property
    def n_params(self) -> int:
        return len(self.param_names)

    def expand(self, params: Sequence[float]):
        """Criterion-level gains for one parameter point."""
        params = tuple(float(v) for v in params)
        if len(params) != self.n_params:
            raise ValueError(
                f"structure {self.kind!r} takes {self.n_params} parameters, "
                f"got {len(params)}"
            )
        n = self.n_modes
        if self.kind == "tied":
            g, h = params
            return GainVector((1.0,) + (h,) * (n - 1), (1.0,) + (g,) * (n - 1))
        if self.kind == "free_g3":
            return params
        if self.kind == "tied_g":
            return (params[0],) * 4
        if self.kind == "free_g14":
            return params
        if self.kind == "epr2":
            h_r, h_l, g_r = params
            right, left = networks.right_left_groups(n)
            h = np.zeros(n)
            g = np.zeros(n)
            h[0] = g[0] = 1.0
            h[list(right)] = h_r
            g[list(right)] = g_r
            h[list(left[1:])] = h_l
            g[list(left[1:])] = h_l
            return GainVector(tuple(h), tuple(g))
        if self.kind == "fixed":
            return None
        raise ValueError(f"unknown structure kind {self.kind!r}")


def default_structure(criterion: str, n_modes: int, name: Optional[str] = None) -> GainStructure:
    """The customary structure for a criterion, or a named override."""
    cid = str(criterion).strip().lower()
    if name is not None:
        return GainStructure(name, n_modes)
    if cid in ("c5", "c6", "c8"):
        return GainStructure("tied", n_modes)
    if cid in ("b1", "b2", "b3", "s1", "s2", "s3", "c1", "c2"):
        return GainStructure("free_g3", n_modes)
    if cid == "c9":
        return GainStructure("tied_g", n_modes)
    if cid == "c10":
        return GainStructure("free_g14", n_modes)
    if cid in ("c3", "c4", "c7"):
        return GainStructure("fixed", n_modes)
    raise ValueError(f"no optimization structure for criterion {criterion!r}")


def _batch_var(c_block: np.ndarray, coeffs: np.ndarray) -> np.ndarray:
    return np.einsum("bi,ij,bj->b", coeffs, c_block, coeffs)


def _batch_hg(structure: GainStructure, params: np.ndarray):
    """Arrays H, G of shape (B, N) for GainVector-valued structures."""
    n = structure.n_modes
    b = params.shape[0]
    h = np.zeros((b, n))
    g = np.zeros((b, n))
    h[:, 0] = g[:, 0] = 1.0
    if structure.kind == "tied":
        h[:, 1:] = params[:, 1][:, None]
        g[:, 1:] = params[:, 0][:, None]
    elif structure.kind == "epr2":
        right, left = networks.right_left_groups(n)
        h[:, list(right)] = params[:, 0][:, None]
        g[:, list(right)] = params[:, 2][:, None]
        if len(left) > 1:
            h[:, list(left[1:])] = params[:, 1][:, None]
            g[:, list(left[1:])] = params[:, 1][:, None]
    else:
        raise ValueError(f"structure {structure.kind!r} does not expand to (h, g)")
    return h, g


def _batch_forms_ratio(moments, n, forms_fn, n_gains, slots, params, ent_bound, steer_bound, objective, product):
    """Ratio array for criteria built from fixed-h variance forms with free
    scalar gains inserted at `slots[form][mode] = param index`."""
    b = params.shape[0]
    cxx = moments[:n, :n]
    cpp = moments[n:, n:]
    total = np.zeros(b)
    base_forms = forms_fn(*([0.0] * n_gains))
    for k, (_, h, g) in enumerate(base_forms):
        hv = np.asarray(h)
        var_u = float(hv @ cxx @ hv)
        gmat = np.tile(np.asarray(g), (b, 1))
        for mode, pidx in slots[k].items():
            gmat[:, mode] = params[:, pidx]
        var_v = _batch_var(cpp, gmat)
        if product:
            total += np.sqrt(var_u * var_v)
        else:
            total += var_u + var_v
    if objective == "lhs":
        return total
    bound = steer_bound if objective == "steering" else ent_bound
    return total / bound


def _batch_ratio(state: State, criterion: str, structure: GainStructure,
                 params: np.ndarray, objective: str) -> np.ndarray:
    """Vectorized objective: normalized ratio at each parameter row."""
    cid = str(criterion).strip().lower()
    moments = second_moments(state)
    n = state.n_modes
    params = np.atleast_2d(np.asarray(params, dtype=float))
    if cid in ("c5", "c6", "c8"):
        h, g = _batch_hg(structure, params)
        var_u = _batch_var(moments[:n, :n], h)
        var_v = _batch_var(moments[n:, n:], g)
        if objective == "lhs":
            return np.sqrt(var_u * var_v) if cid == "c6" else var_u + var_v
        prods = h * g
        if objective == "steering":
            if n != 3:
                raise ValueError("steering objective needs a three-mode state")
            bound = 2.0 * np.min(np.abs(prods), axis=1)
        else:
            sums = [
                np.abs(prods[:, sorted(p.set_a)].sum(axis=1))
                + np.abs(prods[:, sorted(p.set_b)].sum(axis=1))
                for p in enumerate_bipartitions(n)
            ]
            bound = 2.0 * np.min(np.stack(sums), axis=0)
        if cid == "c6":
            lhs = np.sqrt(var_u * var_v)
            bound = bound / 2.0
        else:
            lhs = var_u + var_v
        with np.errstate(divide="ignore"):
            return np.where(bound > 0.0, lhs / np.maximum(bound, 1e-300), np.inf)
    if cid in ("c1", "c2"):
        slots = ({2: 2}, {0: 0}, {1: 1})  # form k: free gain column -> param index
        ent = 8.0 if cid == "c1" else 4.0
        steer = 4.0 if cid == "c1" else 2.0
        return _batch_forms_ratio(moments, 3, witnesses.vlf_forms_3, 3, slots, params,
                                  ent, steer, objective, product=(cid == "c2"))
    if cid in ("b1", "b2", "b3", "s1", "s2", "s3"):
        k = int(cid[1]) - 1
        slots_all = ({2: 2}, {0: 0}, {1: 1})
        b = params.shape[0]
        cxx, cpp = moments[:3, :3], moments[3:, 3:]
        _, h, g = witnesses.vlf_forms_3(0.0, 0.0, 0.0)[k]
        hv = np.asarray(h)
        var_u = float(hv @ cxx @ hv)
        gmat = np.tile(np.asarray(g), (b, 1))
        for mode, pidx in slots_all[k].items():
            gmat[:, mode] = params[:, pidx]
        var_v = _batch_var(cpp, gmat)
        if cid.startswith("s"):
            lhs = np.sqrt(var_u * var_v)
            bound = 1.0 if objective == "steering" else 2.0
        else:
            lhs = var_u + var_v
            bound = 2.0 if objective == "steering" else 4.0
        return lhs if objective == "lhs" else lhs / bound
    if cid == "c9":
        slots = ({2: 0, 3: 0}, {0: 0, 3: 0}, {1: 0, 3: 0},
                 {0: 0, 1: 0}, {0: 0, 2: 0}, {1: 0, 2: 0})
        if objective == "steering":
            raise ValueError("no steering bound is defined for c9")
        return _batch_forms_ratio(moments, 4, witnesses.vlf_forms_4, 4, slots, params,
                                  12.0, None, objective, product=False)
    if cid == "c10":
        if objective == "steering":
            raise ValueError("no steering bound is defined for c10")
        cxx, cpp = moments[:4, :4], moments[4:, 4:]
        hi = np.array([1.0, -1.0, -1.0, -1.0])
        gi = np.array([1.0, 1.0, 1.0, -1.0])
        i_val = float(hi @ cxx @ hi) + float(gi @ cpp @ gi)
        h2 = np.array([0.0, 1.0, -1.0, 0.0])
        var_u2 = float(h2 @ cxx @ h2)
        b = params.shape[0]
        g2 = np.tile(np.array([0.0, 1.0, 1.0, 0.0]), (b, 1))
        g2[:, 0] = params[:, 0]
        g2[:, 3] = params[:, 1]
        var_v2 = _batch_var(cpp, g2)
        total = i_val + var_u2 + var_v2
        return total if objective == "lhs" else total / 4.0
    if cid in ("c3", "c4", "c7"):
        report = witnesses.evaluate(state, cid)
        if objective == "lhs":
            value = report.lhs
        else:
            value = report.steer_ratio if objective == "steering" else report.ent_ratio
        if value is None:
            raise ValueError(f"no steering bound is defined for {cid}")
        return np.full(params.shape[0], value)
    raise ValueError(f"unknown criterion {criterion!r}")


@dataclass(frozen=True)
class OptimizationResult:
    """Optimal gains for one (state, criterion) pair.

    `gains` is whatever the criterion's evaluator accepts (a GainVector for
    c5/c6/c8, a tuple of scalar gains otherwise); `ratio` is the minimized
    objective and `ent_ratio` the entanglement ratio re-evaluated through
    :mod:`cvwl.witnesses` at the returned gains.
    """

    criterion_id: str
    objective: str
    params: tuple
    gains: object
    ratio: float
    ent_ratio: float
    report: witnesses.WitnessReport
    iterations: int
    converged: bool


def optimize_gains(state: State, criterion: str,
                   structure: Optional[GainStructure] = None,
                   init: Optional[Sequence[float]] = None,
                   objective: str = "entanglement",
                   grid_step: Optional[float] = None) -> OptimizationResult:
    """Minimize the normalized witness ratio over a tied gain structure.

    Cold start (no `init`): vectorized grid over [-2, 2]^k followed by
    Nelder-Mead refinement from the best cell.  Warm start: refinement from
    `init` only.  Deterministic either way.
    """
    if objective not in ("entanglement", "steering", "lhs"):
        raise ValueError(
            f"objective must be 'entanglement', 'steering' or 'lhs', got {objective!r}")
    cid = str(criterion).strip().lower()
    structure = structure or default_structure(cid, state.n_modes)
    k = structure.n_params

    def ratio_at(params) -> float:
        return float(_batch_ratio(state, cid, structure, np.atleast_2d(params), objective)[0])

    evaluations = 0
    if k == 0:
        best = ()
        best_ratio = ratio_at(np.zeros((1, 0)))
        converged = True
        iterations = 1
    else:
        if init is not None:
            best = np.asarray(init, dtype=float)
            if best.shape != (k,):
                raise ValueError(f"init must supply {k} values for {structure.param_names}")
            best_ratio = ratio_at(best)
        else:
            step = grid_step if grid_step is not None else (0.01 if k <= 2 else 0.05)
            axis = np.arange(GRID_RANGE[0], GRID_RANGE[1] + step / 2.0, step)
            grids = np.meshgrid(*([axis] * k), indexing="ij")
            pts = np.stack([g.ravel() for g in grids], axis=1)
            ratios = _batch_ratio(state, cid, structure, pts, objective)
            floor = float(np.min(ratios))
            # flat objectives (e.g. every separable state at ratio 1) are
            # tie-broken toward the smallest gains
            tied = np.flatnonzero(ratios <= floor + 1e-9)
            idx = int(tied[np.argmin(np.einsum("bi,bi->b", pts[tied], pts[tied]))])
            best = pts[idx]
            best_ratio = float(ratios[idx])
            evaluations = pts.shape[0]
        # absolute-scale initial simplex: the default one is relative to the
        # start point and degenerates when warm-starting from gains near zero
        simplex = np.tile(np.asarray(best, dtype=float), (k + 1, 1))
        for axis_idx in range(k):
            simplex[axis_idx + 1, axis_idx] += 0.1
        res = _scipy_minimize(
            ratio_at, best, method="Nelder-Mead",
            options={"xatol": 1e-7, "fatol": RATIO_TOL, "maxiter": 2000,
                     "maxfev": 4000, "initial_simplex": simplex},
        )
        if np.isfinite(res.fun) and res.fun <= best_ratio:
            best, best_ratio = res.x, float(res.fun)
        best = tuple(float(v) for v in np.atleast_1d(best))
        converged = bool(res.success) or abs(float(res.fun) - best_ratio) < RATIO_TOL
        iterations = evaluations + int(res.nit)

    gains = structure.expand(best)
    report = witnesses.evaluate(state, cid, gains)
    return OptimizationResult(
        criterion_id=cid,
        objective=objective,
        params=tuple(best) if k else (),
        gains=gains,
        ratio=best_ratio,
        ent_ratio=report.ent_ratio,
        report=report,
        iterations=iterations,
        converged=converged,
    )


BUILDERS: dict = {
    "vacuum": lambda n, r: vacuum_state(n),
    "ghz": build_ghz,
    "epr1": build_epr_type_i,
    "epr2": build_epr_type_ii,
    "counterexample": lambda n, r: build_counterexample(r),
}


def build_state(name: str, n: int, r: float) -> State:
    """Build a preset state by name (vacuum, ghz, epr1, epr2, counterexample)."""
    key = str(name).strip().lower()
    if key not in BUILDERS:
        raise ValueError(f"unknown state preset {name!r}; known: {', '.join(sorted(BUILDERS))}")
    if key == "counterexample" and n != 3:
        raise ValueError("the counterexample mixture is defined for 3 modes")
    return BUILDERS[key](n, r)


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a parameter sweep."""

    param: float
    gains: object
    report: witnesses.WitnessReport

    @property
    def ent(self) -> float:
        return self.report.ent_ratio


def _threads() -> int:
    raw = os.environ.get("CVWL_THREADS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def sweep(builder: str, n: int, criterion: str,
          r_values: Optional[Sequence[float]] = None,
          eta_values: Optional[Sequence[float]] = None,
          r: Optional[float] = None,
          loss_modes: Sequence[int] = (),
          optimize: bool = True,
          gains=None,
          structure: Optional[GainStructure] = None,
          objective: str = "entanglement",
          warm_start: bool = True):
    """Evaluate (and optionally gain-optimize) a criterion over a grid.

    Exactly one of `r_values` (state squeezing sweep) or `eta_values`
    (loss sweep at fixed `r`, applying efficiency eta to each mode in
    `loss_modes`, 0-based) must be given.  With `optimize`, each point is
    gain-optimized; `warm_start` seeds each point with the previous
    optimum (the coarse grid still runs for the first point).  Honors
    CVWL_THREADS for cold-start parallel evaluation.
    """
    if (r_values is None) == (eta_values is None):
        raise ValueError("provide exactly one of r_values or eta_values")
    if eta_values is not None and r is None:
        raise ValueError("eta sweeps need the base squeeze parameter r")
    if eta_values is not None and not loss_modes:
        raise ValueError("eta sweeps need at least one loss mode")

    def state_at(value: float) -> State:
        if r_values is not None:
            return build_state(builder, n, value)
        state = build_state(builder, n, r)
        for mode in loss_modes:
            state = apply_loss(state, mode, value)
        return state

    values = list(r_values if r_values is not None else eta_values)

    def solve(value: float, init) -> SweepRow:
        state = state_at(value)
        if optimize:
            result = optimize_gains(state, criterion, structure=structure,
                                    init=init, objective=objective)
            return SweepRow(value, result.gains, result.report)
        report = witnesses.evaluate(state, criterion, gains)
        return SweepRow(value, gains, report)

    if optimize and warm_start:
        rows = []
        prev = None
        for value in values:
            result = optimize_gains(state_at(value), criterion, structure=structure,
                                    init=prev, objective=objective)
            rows.append(SweepRow(value, result.gains, result.report))
            prev = result.params if result.params else None
        return rows

    workers = _threads()
    if workers > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(lambda v: solve(v, None), values))
        return rows
    return [solve(v, None) for v in values]
