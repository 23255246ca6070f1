"""Deciding (fractional) k-factor-criticality, with replayable witnesses.

Two routes per property: the definition (delete every ``k``-set and look
for a (fractional) perfect matching) and an exhaustive Tutte-type scan
over all ``S`` with ``|S| >= k`` used as an oracle on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _kernels
from .graph import Graph, component_masks, delete_vertices, mask_of, members
from .matching import has_fractional_perfect_matching, has_perfect_matching

ORACLE_MAX_N = 24

ODD = "odd-components"
ISOLATED = "isolated"
NO_PM = "no-perfect-matching"
NO_FPM = "no-fractional-perfect-matching"
PARITY = "parity"


@dataclass(frozen=True)
class CriticalityVerdict:
    holds: bool
    witness: Optional[frozenset] = None
    violation_kind: Optional[str] = None

    def __bool__(self) -> bool:
        return self.holds

    def witness_list(self) -> Optional[list[int]]:
        return None if self.witness is None else sorted(self.witness)


_HOLDS = CriticalityVerdict(True)


def _fail(mask: int, kind: str) -> CriticalityVerdict:
    return CriticalityVerdict(False, frozenset(members(mask)), kind)


def is_k_factor_critical(g: Graph, k: int) -> CriticalityVerdict:
    """Every ``k``-set deletion leaves a graph with a perfect matching."""
    if not 1 <= k < g.n:
        raise ValueError(f"need 1 <= k < n, got k={k}, n={g.n}")
    if (g.n - k) % 2:
        return CriticalityVerdict(False, frozenset(), PARITY)
    kern, rows = _kernels.prepare(g)
    hit = kern.deletion_scan(rows, g.n, k, False)
    return _HOLDS if hit == -1 else _fail(hit, NO_PM)


def is_fractional_k_factor_critical(g: Graph, k: int) -> CriticalityVerdict:
    """Every ``k``-set deletion leaves a graph with a fractional perfect matching."""
    if not 1 <= k <= g.n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got k={k}, n={g.n}")
    kern, rows = _kernels.prepare(g)
    hit = kern.deletion_scan(rows, g.n, k, True)
    return _HOLDS if hit == -1 else _fail(hit, NO_FPM)


def _oracle_prep(g: Graph):
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"exhaustive oracle limited to n <= {ORACLE_MAX_N}, got n={g.n}")
    return _kernels.prepare(g)


def odd_component_oracle(g: Graph, k: int) -> CriticalityVerdict:
    """Parity plus ``o(G-S) <= |S|-k`` for every ``S`` with ``|S| >= k``."""
    kern, rows = _oracle_prep(g)
    if k < 1:
        raise ValueError("k must be >= 1")
    if (g.n - k) % 2:
        return CriticalityVerdict(False, frozenset(), PARITY)
    hit = kern.tutte_scan(rows, g.n, k, False)
    return _HOLDS if hit == -1 else _fail(hit, ODD)


def isolated_vertex_oracle(g: Graph, k: int) -> CriticalityVerdict:
    """``i(G-S) <= |S|-k`` for every ``S`` with ``|S| >= k``."""
    kern, rows = _oracle_prep(g)
    if not 1 <= k <= g.n - 2:
        raise ValueError(f"need 1 <= k <= n-2, got k={k}, n={g.n}")
    hit = kern.tutte_scan(rows, g.n, k, True)
    return _HOLDS if hit == -1 else _fail(hit, ISOLATED)


def odd_and_isolated_after(g: Graph, s) -> tuple[int, int]:
    """``(o(G-S), i(G-S))`` without building the subgraph."""
    alive = g.full_mask & ~mask_of(s)
    comps = component_masks(g, alive)
    return sum(c.bit_count() % 2 for c in comps), sum(c.bit_count() == 1 for c in comps)


def replay(g: Graph, k: int, verdict: CriticalityVerdict) -> bool:
    """Re-evaluate a failing verdict's witness; True iff the violation reproduces."""
    if verdict.holds:
        return False
    s = verdict.witness
    kind = verdict.violation_kind
    if kind == PARITY:
        return (g.n - k) % 2 == 1
    if kind in (ODD, ISOLATED):
        odd, iso = odd_and_isolated_after(g, s)
        return len(s) >= k and (odd if kind == ODD else iso) > len(s) - k
    rest = delete_vertices(g, s)
    if kind == NO_PM:
        return len(s) == k and not has_perfect_matching(rest)
    if kind == NO_FPM:
        return len(s) == k and not has_fractional_perfect_matching(rest)[0]
    raise ValueError(f"unknown violation kind {kind!r}")
