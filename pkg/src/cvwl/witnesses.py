"""Variance-witness evaluation for genuine multipartite entanglement and steering.

Every criterion produces a :class:`WitnessReport` holding the measured
left-hand side, the entanglement bound it must beat, the (stricter)
steering bound where one exists, and the normalized ratio
``ent_ratio = lhs / ent_bound`` — the quantity plotted as "Ent" in sweep
output, with values below 1 certifying genuine multipartite entanglement.

Criterion identifiers accepted by :func:`evaluate`:

==========  =====================================================  ==========
id          left-hand side                                         ent bound
==========  =====================================================  ==========
b1/b2/b3    three-mode variance-sum forms B_I..B_III               4
s1/s2/s3    their product forms S_I..S_III                         2
c1          B_I + B_II + B_III                                     8
c2          S_I + S_II + S_III                                     4
c3 / c4     fixed gains (1, -1/sqrt2, -1/sqrt2): sum / product     2 / 1
c5 / c6     free gains, bound minimized over bipartitions          varies
c7          best pair B_J + B_K at unit gains                      4
c8          N-mode generalization of c5                            varies
c9          sum of the six four-mode forms                         12
c10         I + B_II where I pairs (x1 - x4) against (x2 + x3)     4
==========  =====================================================  ==========

Steering bounds: 2 for each B form, 1 for each S form, 4 for c1, 2 for c2,
1 for c3, 0.5 for c4, and 2 min_i |h_i g_i| (half that for the product
form) for c5/c6 and for c8 at three modes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .partitions import genuine_bound, steering_bound
from .states import GainVector, State, quadrature_variances

CRITERIA = (
    "b1", "b2", "b3", "s1", "s2", "s3",
    "c1", "c2", "c3", "c4", "c5", "c6", "c7", "c8", "c9", "c10",
)


@dataclass(frozen=True)
class WitnessReport:
    """Outcome of one criterion evaluation on one state."""

    criterion_id: str
    lhs: float
    ent_bound: float
    steer_bound: float | None = None
    details: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.steer_bound is not None and self.steer_bound > self.ent_bound + 1e-12:
            raise ValueError(
                f"steering bound {self.steer_bound} exceeds entanglement bound "
                f"{self.ent_bound}"
            )

    @property
    def ent_ratio(self) -> float:
        """lhs / ent_bound; infinite when the bound vanishes (no constraint)."""
        if self.ent_bound <= 0.0:
            return math.inf
        return self.lhs / self.ent_bound

    @property
    def verdict_entanglement(self) -> bool:
        return self.ent_ratio < 1.0

    @property
    def steer_ratio(self):
        if self.steer_bound is None:
            return None
        if self.steer_bound <= 0.0:
            return math.inf
        return self.lhs / self.steer_bound

    @property
    def verdict_steering(self):
        ratio = self.steer_ratio
        return None if ratio is None else ratio < 1.0


def equal_split_gains(n: int) -> GainVector:
    """Gains (1, -c, ..., -c), (1, c, ..., c) with c = 1/sqrt(N-1): unit gain
    on mode 0 against an equal split over the rest."""
    if n < 2:
        raise ValueError(f"need at least 2 modes, got {n}")
    c = 1.0 / math.sqrt(n - 1)
    return GainVector((1.0,) + (-c,) * (n - 1), (1.0,) + (c,) * (n - 1))


def _require_modes(state: State, n: int, what: str):
    if state.n_modes != n:
        raise ValueError(f"{what} needs a {n}-mode state, got {state.n_modes} modes")


def _as_triple(gains):
    if gains is None:
        return (0.0, 0.0, 0.0)
    g = tuple(float(v) for v in gains)
    if len(g) != 3:
        raise ValueError(f"expected three gain values, got {len(g)}")
    return g


def vlf_forms_3(g1: float, g2: float, g3: float):
    """The three 3-mode variance forms, as (name, h, g) coefficient triples.

    Form k pairs the position difference of one mode pair against the total
    momentum with one adjustable gain: B_I uses g3, B_II uses g1, B_III g2.
    """
    return (
        ("B_I", (1.0, -1.0, 0.0), (1.0, 1.0, g3)),
        ("B_II", (0.0, 1.0, -1.0), (g1, 1.0, 1.0)),
        ("B_III", (1.0, 0.0, -1.0), (1.0, g2, 1.0)),
    )


def vlf_forms_4(g1: float, g2: float, g3: float, g4: float):
    """The six 4-mode variance forms B_I..B_VI."""
    return (
        ("B_I", (1.0, -1.0, 0.0, 0.0), (1.0, 1.0, g3, g4)),
        ("B_II", (0.0, 1.0, -1.0, 0.0), (g1, 1.0, 1.0, g4)),
        ("B_III", (1.0, 0.0, -1.0, 0.0), (1.0, g2, 1.0, g4)),
        ("B_IV", (0.0, 0.0, 1.0, -1.0), (g1, g2, 1.0, 1.0)),
        ("B_V", (0.0, 1.0, 0.0, -1.0), (g1, 1.0, g3, 1.0)),
        ("B_VI", (1.0, 0.0, 0.0, -1.0), (1.0, g2, g3, 1.0)),
    )


_WHICH = {"i": 0, "ii": 1, "iii": 2, "1": 0, "2": 1, "3": 2}


def _vlf_variances(state, which, gains):
    _require_modes(state, 3, "a three-mode variance form")
    g1, g2, g3 = _as_triple(gains)
    try:
        name, h, g = vlf_forms_3(g1, g2, g3)[_WHICH[str(which).lower()]]
    except KeyError:
        raise ValueError(f"form selector must be I, II or III, got {which!r}") from None
    var_u, var_v = quadrature_variances(state, GainVector(h, g))
    return name, var_u, var_v


def vlf(state: State, which, gains=None) -> WitnessReport:
    """One variance-sum form B_I, B_II or B_III; B < 4 rules out the two
    bipartitions separating the differenced modes (steering bound 2)."""
    name, var_u, var_v = _vlf_variances(state, which, gains)
    return WitnessReport(name, var_u + var_v, 4.0, 2.0,
                         {"var_u": var_u, "var_v": var_v})


def vlf_product(state: State, which, gains=None) -> WitnessReport:
    """Product form S = Delta u Delta v of the same combination (bound 2,
    steering bound 1); always at most half the matching sum form."""
    name, var_u, var_v = _vlf_variances(state, which, gains)
    return WitnessReport("S" + name[1:], math.sqrt(var_u * var_v), 2.0, 1.0,
                         {"var_u": var_u, "var_v": var_v})


def criterion_sum_vlf(state: State, gains=None) -> WitnessReport:
    """Criterion C1: B_I + B_II + B_III < 8 certifies genuine tripartite
    entanglement; < 4 certifies genuine tripartite steering."""
    reports = [vlf(state, w, gains) for w in ("I", "II", "III")]
    details = {r.criterion_id: r.lhs for r in reports}
    return WitnessReport("C1", sum(r.lhs for r in reports), 8.0, 4.0, details)


def criterion_product_vlf(state: State, gains=None) -> WitnessReport:
    """Criterion C2: S_I + S_II + S_III < 4 (entanglement), < 2 (steering)."""
    reports = [vlf_product(state, w, gains) for w in ("I", "II", "III")]
    details = {r.criterion_id: r.lhs for r in reports}
    return WitnessReport("C2", sum(r.lhs for r in reports), 4.0, 2.0, details)


def criterion_simple(state: State):
    """Criteria C3 (sum, bound 2) and C4 (product, bound 1) at the fixed
    gains (1, -1/sqrt2, -1/sqrt2) / (1, 1/sqrt2, 1/sqrt2).

    These bounds demand 50% more noise reduction than the bipartite bound
    (4 for the 1|23 split) at the same gains.  Steering bounds: 1 and 0.5.
    """
    _require_modes(state, 3, "the fixed-gain criterion")
    var_u, var_v = quadrature_variances(state, equal_split_gains(3))
    details = {"var_u": var_u, "var_v": var_v}
    return (
        WitnessReport("C3", var_u + var_v, 2.0, 1.0, details),
        WitnessReport("C4", math.sqrt(var_u * var_v), 1.0, 0.5, details),
    )


def criterion_general(state: State, gains: GainVector):
    """Criteria C5 (sum) and C6 (product) with free three-mode gains.

    The entanglement bound is minimized over the three bipartitions
    (2 min{...} for the sum, half that for the product); the steering bound
    is 2 min_i |h_i g_i| (respectively min_i |h_i g_i|).
    """
    _require_modes(state, 3, "the generalized three-mode criterion")
    var_u, var_v = quadrature_variances(state, gains)
    bound = genuine_bound(gains, 3)
    sbound = steering_bound(gains)
    details = {"var_u": var_u, "var_v": var_v}
    return (
        WitnessReport("C5", var_u + var_v, bound, sbound, details),
        WitnessReport("C6", math.sqrt(var_u * var_v), bound / 2.0, sbound / 2.0, details),
    )


def criterion_two_vlf(state: State) -> WitnessReport:
    """Criterion C7: the smallest pair sum B_J + B_K at unit gains; any pair
    below 4 certifies genuine tripartite entanglement."""
    _require_modes(state, 3, "the two-form criterion")
    values = {r.criterion_id: r.lhs for w in ("I", "II", "III")
              for r in [vlf(state, w, (1.0, 1.0, 1.0))]}
    pairs = {
        "B_I+B_II": values["B_I"] + values["B_II"],
        "B_I+B_III": values["B_I"] + values["B_III"],
        "B_II+B_III": values["B_II"] + values["B_III"],
    }
    details = dict(values)
    details.update(pairs)
    return WitnessReport("C7", min(pairs.values()), 4.0, None, details)


def criterion_npartite(state: State, gains: GainVector) -> WitnessReport:
    """Criterion C8: the single N-mode inequality with the bound minimized
    over all 2^(N-1) - 1 bipartitions.  Steering bound only at N=3."""
    n = state.n_modes
    if gains.n_modes != n:
        raise ValueError(f"gain length {gains.n_modes} does not match {n} modes")
    var_u, var_v = quadrature_variances(state, gains)
    bound = genuine_bound(gains, n)
    sbound = steering_bound(gains) if n == 3 else None
    return WitnessReport("C8", var_u + var_v, bound, sbound,
                         {"var_u": var_u, "var_v": var_v})


def criterion_four_sum(state: State, gains=None) -> WitnessReport:
    """Criterion C9: B_I + ... + B_VI < 12 certifies genuine four-partite
    entanglement (for symmetric states each form must drop below 2)."""
    _require_modes(state, 4, "the six-form criterion")
    if gains is None:
        gains = (0.0, 0.0, 0.0, 0.0)
    g = tuple(float(v) for v in gains)
    if len(g) != 4:
        raise ValueError(f"expected four gain values, got {len(g)}")
    details = {}
    total = 0.0
    for name, h, gv in vlf_forms_4(*g):
        var_u, var_v = quadrature_variances(state, GainVector(h, gv))
        details[name] = var_u + var_v
        total += var_u + var_v
    return WitnessReport("C9", total, 12.0, None, details)


def criterion_combined(state: State, g1: float = 0.0, g4: float = 0.0) -> WitnessReport:
    """Criterion C10: I + B_II < 4, where I pairs Var((x1 - x4) - (x2 + x3))
    with Var(p1 - p4 + p2 + p3) (1-based labels) and B_II carries free
    gains on modes 1 and 4.  Tailored to the symmetric EPR-type state,
    whose bipartitions 12|34 and 13|24 are invisible to I alone."""
    _require_modes(state, 4, "the combined criterion")
    vi_u, vi_v = quadrature_variances(
        state, GainVector((1.0, -1.0, -1.0, -1.0), (1.0, 1.0, 1.0, -1.0))
    )
    _, h2, g2 = vlf_forms_4(float(g1), 0.0, 0.0, float(g4))[1]
    vb_u, vb_v = quadrature_variances(state, GainVector(h2, g2))
    i_val = vi_u + vi_v
    b_val = vb_u + vb_v
    return WitnessReport("C10", i_val + b_val, 4.0, None,
                         {"I": i_val, "B_II": b_val})


def evaluate(state: State, criterion: str, gains=None) -> WitnessReport:
    """Evaluate one criterion by id (see module docstring for the table).

    `gains` is criterion-specific: a GainVector for c5/c6/c8 (defaulting to
    :func:`equal_split_gains`), (g1, g2, g3) for the three-mode forms and
    c1/c2, (g1..g4) for c9, (g1, g4) for c10, and ignored for c3/c4/c7.
    Unsupplied scalar gains default to zero.
    """
    cid = str(criterion).strip().lower()
    if cid in ("b1", "b2", "b3"):
        return vlf(state, cid[1], gains)
    if cid in ("s1", "s2", "s3"):
        return vlf_product(state, cid[1], gains)
    if cid == "c1":
        return criterion_sum_vlf(state, gains)
    if cid == "c2":
        return criterion_product_vlf(state, gains)
    if cid in ("c3", "c4"):
        pair = criterion_simple(state)
        return pair[0] if cid == "c3" else pair[1]
    if cid in ("c5", "c6"):
        gv = gains if gains is not None else equal_split_gains(state.n_modes)
        pair = criterion_general(state, gv)
        return pair[0] if cid == "c5" else pair[1]
    if cid == "c7":
        return criterion_two_vlf(state)
    if cid == "c8":
        gv = gains if gains is not None else equal_split_gains(state.n_modes)
        return criterion_npartite(state, gv)
    if cid == "c9":
        return criterion_four_sum(state, gains)
    if cid == "c10":
        if gains is None:
            return criterion_combined(state)
        g = tuple(float(v) for v in gains)
        if len(g) != 2:
            raise ValueError(f"c10 takes two gain values (g1, g4), got {len(g)}")
        return criterion_combined(state, *g)
    raise ValueError(f"unknown criterion {criterion!r}; known ids: {', '.join(CRITERIA)}")
