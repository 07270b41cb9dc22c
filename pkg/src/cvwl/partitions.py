"""Bipartitions of N modes and the separability bounds they imply.

For gains (h, g) and a bipartition A|B, any state separable across A|B
obeys Var(u) + Var(v) >= 2 (|sum_A h_i g_i| + |sum_B h_i g_i|); the
corresponding product bound Delta u Delta v is half of that.  Minimizing
over every bipartition gives the bound that certifies genuine N-partite
entanglement, and for three modes a hybrid trust model gives the strictly
smaller steering bound 2 min_i |h_i g_i|.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .states import GainVector

MAX_MODES = 20


@dataclass(frozen=True)
class Bipartition:
    """Canonical split of modes 0..N-1 into two nonempty sets; mode 0 in set_a."""

    set_a: frozenset
    set_b: frozenset

    def __post_init__(self):
        object.__setattr__(self, "set_a", frozenset(self.set_a))
        object.__setattr__(self, "set_b", frozenset(self.set_b))
        if not self.set_a or not self.set_b:
            raise ValueError("both sides of a bipartition must be nonempty")
        if self.set_a & self.set_b:
            raise ValueError("bipartition sides must be disjoint")
        n = len(self.set_a) + len(self.set_b)
        if self.set_a | self.set_b != frozenset(range(n)):
            raise ValueError("bipartition must cover modes 0..N-1 exactly")
        if 0 not in self.set_a:
            raise ValueError("canonical form requires mode 0 in set_a")

    @property
    def n_modes(self) -> int:
        return len(self.set_a) + len(self.set_b)

    def label(self) -> str:
        """1-based compact label, e.g. '12|3' for set_a={0,1}, set_b={2}."""
        fmt = lambda side: ",".join(str(m + 1) for m in sorted(side))
        return f"{fmt(self.set_a)}|{fmt(self.set_b)}"


@lru_cache(maxsize=None)
def enumerate_bipartitions(n: int):
    """All 2^(N-1) - 1 canonical bipartitions, ordered by the bitmask of set_b."""
    if not 2 <= n <= MAX_MODES:
        raise ValueError(f"mode count must lie in [2, {MAX_MODES}], got {n}")
    parts = []
    for mask in range(1, 1 << (n - 1)):
        set_b = frozenset(k + 1 for k in range(n - 1) if mask >> k & 1)
        set_a = frozenset(range(n)) - set_b
        parts.append(Bipartition(set_a, set_b))
    return tuple(parts)


def biseparable_bound(gains: GainVector, partition: Bipartition) -> float:
    """Sum-inequality bound 2 (|sum_A h g| + |sum_B h g|) implied by
    separability across the given bipartition.  The product-inequality
    bound is half this value."""
    if gains.n_modes != partition.n_modes:
        raise ValueError(
            f"gain length {gains.n_modes} does not match partition over "
            f"{partition.n_modes} modes"
        )
    products = gains.products()
    sum_a = products[sorted(partition.set_a)].sum()
    sum_b = products[sorted(partition.set_b)].sum()
    return 2.0 * (abs(float(sum_a)) + abs(float(sum_b)))


def genuine_bound(gains: GainVector, n: int | None = None) -> float:
    """Genuine-multipartite-entanglement bound: the minimum of
    :func:`biseparable_bound` over every canonical bipartition."""
    if n is None:
        n = gains.n_modes
    if gains.n_modes != n:
        raise ValueError(f"gain length {gains.n_modes} does not match n={n}")
    return min(biseparable_bound(gains, p) for p in enumerate_bipartitions(n))


def binding_partition(gains: GainVector) -> Bipartition:
    """The bipartition achieving :func:`genuine_bound` (first in canonical order)."""
    return min(
        enumerate_bipartitions(gains.n_modes),
        key=lambda p: biseparable_bound(gains, p),
    )


def steering_bound(gains: GainVector) -> float:
    """Genuine tripartite steering bound 2 min_i |h_i g_i| (sum form; the
    product form is half).  Only defined for three modes."""
    if gains.n_modes != 3:
        raise ValueError(
            "steering bounds are only defined for three modes, "
            f"got {gains.n_modes}"
        )
    return 2.0 * float(np.min(np.abs(gains.products())))
