"""Claim verifiers over parameter grids, and the campaign runner.

Each verifier returns :class:`~kfcrit.report.ClaimResult` records. Spectral
strict inequalities count as verified only when the margin exceeds ten
times the eigensolver tolerance; a smaller margin is "inconclusive".
"""

from __future__ import annotations

import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Iterator, Optional

from . import __version__, _kernels
from .connectivity import vertex_connectivity
from .criticality import is_fractional_k_factor_critical, is_k_factor_critical, odd_and_isolated_after
from .families import (
    CliqueJoinFamily,
    FamilyError,
    core_k1_family,
    edge_count,
    extremal_family,
    fan_lin_family,
    jfl_family,
    composition_target,
    large_core_family,
    realize,
)
from .graph import min_degree
from .graph6 import encode
from .isomorphism import is_isomorphic
from .report import (
    CLAIM_IDS,
    INCONCLUSIVE,
    PARTIAL,
    REFUTED,
    SKIPPED,
    VERIFIED,
    ClaimResult,
    Report,
)
from .spectral import DEFAULT_TOL, rho_power, rho_quotient

SCAN_MAX_N = 40


class HypothesisError(ValueError):
    """Parameters violate the hypotheses of the claim being checked."""


class ConfigError(ValueError):
    pass


@lru_cache(maxsize=None)
def _rho(f: CliqueJoinFamily) -> float:
    return rho_quotient(f)


def _strict_less(claim, params, lhs, rhs, tol, witness=None, note="") -> ClaimResult:
    margin = rhs - lhs
    if margin > 10 * tol:
        status = VERIFIED
    elif margin < -10 * tol:
        status = REFUTED
    else:
        status = INCONCLUSIVE
    if status != VERIFIED and witness is None:
        witness = {}
    return ClaimResult(claim, params, status, lhs, rhs, margin, witness if status != VERIFIED else None, note)


def _int_less(claim, params, lhs, rhs, witness=None, note="") -> ClaimResult:
    status = VERIFIED if lhs < rhs else REFUTED
    return ClaimResult(claim, params, status, lhs, rhs, rhs - lhs, witness if status == REFUTED else None, note)


def _skipped(claim, params, reason) -> ClaimResult:
    return ClaimResult(claim, params, SKIPPED, note=reason)


# -- part-composition grids: spectral and edge-count comparisons ------------


def composition_hypothesis(s: int, parts, p: int) -> Optional[str]:
    """None when the instance satisfies the hypotheses, else the reason it does not."""
    parts = list(parts)
    t = len(parts)
    n = s + sum(parts)
    if s < 1:
        return "need s >= 1"
    if t < 2:
        return "need t >= 2"
    if parts != sorted(parts, reverse=True):
        return "parts must be non-increasing"
    if p < 1 or parts[-1] < p:
        return f"need n_t >= p >= 1 (n_t={parts[-1]}, p={p})"
    if parts[1] < 3:
        return "need n_2 >= 3"
    bound = n - s - (t - 2) * p - 3
    if not parts[0] < bound:
        return f"need n_1 < n-s-(t-2)p-3 = {bound}, got n_1={parts[0]}"
    return None


def composition_edge_difference(parts, p: int) -> int:
    """Closed form for ``|E(target)| - |E(family)|`` as a sum of nonnegative products."""
    n1, n2, rest = parts[0], parts[1], list(parts[2:])
    total = (n2 - 3) * (n1 - 3)
    total += sum((nj - p) * (n1 - p) for nj in rest)
    total += sum((nj - p) * (n2 - 3) for nj in rest)
    total += sum((rest[i] - p) * (rest[j] - p) for i in range(len(rest)) for j in range(i + 1, len(rest)))
    return total


def _composition_params(s, parts, p):
    return {"s": s, "parts": list(parts), "p": p, "n": s + sum(parts)}


def check_composition_rho(s: int, parts, p: int, tol: float = DEFAULT_TOL, claim: str = "L2.4") -> ClaimResult:
    parts = tuple(parts)
    params = _composition_params(s, parts, p)
    reason = composition_hypothesis(s, parts, p)
    if reason:
        return _skipped(claim, params, reason)
    fam = CliqueJoinFamily(s, parts)
    target = composition_target(s, fam.n, len(parts), p)
    lhs, rhs = _rho(fam), _rho(target)
    return _strict_less(claim, params, lhs, rhs, tol, {"family": fam.literal(), "target": target.literal()})


def check_unit_composition(s: int, parts, tol: float = DEFAULT_TOL) -> ClaimResult:
    return check_composition_rho(s, parts, 1, tol, claim="L2.3")


def check_composition_edges(s: int, parts, p: int) -> ClaimResult:
    parts = tuple(parts)
    params = _composition_params(s, parts, p)
    reason = composition_hypothesis(s, parts, p)
    if reason:
        return _skipped("L2.6", params, reason)
    fam = CliqueJoinFamily(s, parts)
    target = composition_target(s, fam.n, len(parts), p)
    lhs, rhs = edge_count(fam), edge_count(target)
    formula = composition_edge_difference(parts, p)
    witness = {"family": fam.literal(), "target": target.literal(), "formula_difference": formula}
    res = _int_less("L2.6", params, lhs, rhs, witness)
    if formula != rhs - lhs:
        res.status = REFUTED
        res.witness = witness
        res.note = f"difference formula gives {formula}, direct count gives {rhs - lhs}"
    return res


def part_compositions(t: int, total_max: int, min_last: int = 1, min_second: int = 1) -> Iterator[tuple]:
    """Non-increasing ``t``-tuples with sum <= total_max, last >= min_last, second >= min_second."""

    def rec(prefix, remaining, cap):
        i = len(prefix)
        if i == t:
            yield tuple(prefix)
            return
        lo = min_last
        if i == 1:
            lo = max(lo, min_second)
        # room left for the remaining parts at their minimum size
        room = remaining - min_last * (t - i - 1)
        for v in range(min(cap, room), lo - 1, -1):
            yield from rec(prefix + [v], remaining - v, v)

    yield from rec([], total_max, total_max)


def composition_instances(s_range, t_range, p_range, n_max) -> Iterator[tuple]:
    """All ``(s, parts, p)`` within the ranges that satisfy the hypotheses."""
    for s in range(s_range[0], s_range[1] + 1):
        for t in range(t_range[0], t_range[1] + 1):
            for p in range(p_range[0], p_range[1] + 1):
                for parts in part_compositions(t, n_max - s, min_last=p, min_second=3):
                    if composition_hypothesis(s, parts, p) is None:
                        yield s, parts, p


# -- core-size comparisons and the extremal graph ----------------------------


def _require(cond: bool, msg: str):
    if not cond:
        raise HypothesisError(msg)


def verify_core_rho(k: int, delta: int, n: int, tol: float = DEFAULT_TOL) -> ClaimResult:
    _require(k >= 1 and delta >= k + 2, f"need k >= 1 and delta >= k+2 (k={k}, delta={delta})")
    _require(n >= 8 * delta - 5 * k + 20, f"need n >= 8delta-5k+20 = {8 * delta - 5 * k + 20}")
    lo, hi = core_k1_family(n, k, delta), large_core_family(n, k, delta)
    return _strict_less(
        "L2.5", {"k": k, "delta": delta, "n": n}, _rho(lo), _rho(hi), tol,
        {"smaller": lo.literal(), "extremal": hi.literal()},
    )


def core_edge_difference(k: int, delta: int) -> Fraction:
    d = delta - k
    return Fraction(d * (d - 1), 2) + 3 * (d - 1)


def verify_core_edges(k: int, delta: int, n: int) -> ClaimResult:
    _require(k >= 1 and delta >= k + 2, f"need k >= 1 and delta >= k+2 (k={k}, delta={delta})")
    _require(n >= 6 * delta - 5 * k + 8, f"need n >= 6delta-5k+8 = {6 * delta - 5 * k + 8}")
    lo, hi = core_k1_family(n, k, delta), large_core_family(n, k, delta)
    a, b = edge_count(lo), edge_count(hi)
    formula = core_edge_difference(k, delta)
    witness = {"smaller": lo.literal(), "extremal": hi.literal(), "formula_difference": str(formula)}
    res = _int_less("L2.7", {"k": k, "delta": delta, "n": n}, a, b, witness)
    if formula != b - a:
        res.status = REFUTED
        res.witness = witness
        res.note = f"difference formula gives {formula}, direct count gives {b - a}"
    return res


def verify_extremal_not_critical(k: int, delta: int, n: int) -> ClaimResult:
    _require(k >= 1 and delta >= k + 1, f"need k >= 1 and delta >= k+1 (k={k}, delta={delta})")
    _require(n - k > 0 and (n - k) % 2 == 0, f"need n-k positive and even (n={n}, k={k})")
    _require(n >= 2 * delta - k + 6, f"need n >= 2delta-k+6 = {2 * delta - k + 6}")
    fam = extremal_family(n, k, delta)
    g = realize(fam)
    verdict = is_k_factor_critical(g, k)
    core = list(range(delta))
    odd, _ = odd_and_isolated_after(g, core)
    expected = delta - k + 2
    ok = not verdict.holds and odd == expected
    witness = {"graph6": encode(g), "S": core, "kfc_witness": verdict.witness_list()}
    note = "" if ok else (
        "extremal graph is k-factor-critical" if verdict.holds else f"o(G-S)={odd}, expected {expected}"
    )
    return ClaimResult(
        "L2.8", {"k": k, "delta": delta, "n": n}, VERIFIED if ok else REFUTED,
        lhs=odd, rhs=len(core) - k, margin=odd - (len(core) - k), witness=witness, note=note,
    )


# -- theorem sharpness -----------------------------------------------------------


def theorem_bound(mode: str, k: int, delta: int) -> Fraction:
    """Lower bound on n from the theorem hypotheses, as an exact rational."""
    if mode == "size":
        quad = (
            Fraction(delta * delta, 6)
            - (Fraction(k, 3) - Fraction(3, 2)) * delta
            + Fraction(k * k, 6)
            - Fraction(k, 2)
            + 4
        )
        return max(Fraction(6 * delta - 5 * k + 8), quad)
    if mode == "spectral":
        return Fraction(max(8 * delta - 5 * k + 20, delta * (delta - k - 1) ** 2 - 2 * delta - 1))
    raise ValueError(f"mode must be 'size' or 'spectral', got {mode!r}")


def admissible(mode: str, n: int, k: int, delta: int) -> bool:
    return k >= 1 and delta >= k + 1 and (n - k) % 2 == 0 and n >= theorem_bound(mode, k, delta)


def smallest_admissible(mode: str, n_max: int, k_max: int = 6) -> tuple[int, int, int]:
    """Admissible ``(n, k, delta)`` with the smallest ``n`` (ties: smallest k, delta)."""
    best = None
    for k in range(1, k_max + 1):
        for delta in range(k + 1, n_max):
            b = theorem_bound(mode, k, delta)
            n = math.ceil(b)
            if (n - k) % 2:
                n += 1
            cand = (n, k, delta)
            if n <= n_max and (best is None or cand < best):
                best = cand
    if best is None:
        raise HypothesisError(f"no admissible instance with n <= {n_max}")
    return best


def verify_theorem_sharpness(n: int, k: int, delta: int, mode: str, tol: float = DEFAULT_TOL) -> list[ClaimResult]:
    """The extremal graph meets every hypothesis yet is not k-factor-critical,
    and adding any single edge raises the parameter and restores criticality."""
    claim = "T1.3-sharp" if mode == "size" else "T1.4-sharp"
    bound = theorem_bound(mode, k, delta)
    _require(k >= 1 and delta >= k + 1, f"need k >= 1 and delta >= k+1 (k={k}, delta={delta})")
    _require((n - k) % 2 == 0, f"need n = k (mod 2), got n={n}, k={k}")
    _require(n >= bound, f"need n >= {bound} for the {mode} theorem, got n={n}")
    boundary = bound.denominator != 1 and n == math.ceil(bound)
    base = {"n": n, "k": k, "delta": delta, "mode": mode}
    fam = extremal_family(n, k, delta)
    g = realize(fam)
    out = []

    kappa = vertex_connectivity(g)
    mindeg = min_degree(g)
    fkfc = is_fractional_k_factor_critical(g, k)
    kfc = is_k_factor_critical(g, k)
    ok = kappa >= k + 1 and mindeg == delta and fkfc.holds and not kfc.holds
    facts = {
        "family": fam.literal(),
        "graph6": encode(g) if g.n <= 62 else None,
        "connectivity": kappa,
        "min_degree": mindeg,
        "fractional_k_factor_critical": fkfc.holds,
        "k_factor_critical": kfc.holds,
        "kfc_witness": kfc.witness_list(),
    }
    note = "n at ceiling of a non-integer bound" if boundary else ""
    out.append(ClaimResult(claim, {**base, "check": "extremal"}, VERIFIED if ok else REFUTED,
                           lhs=kappa, rhs=k + 1, margin=kappa - (k + 1), witness=facts, note=note))

    if mode == "spectral":
        value = rho_power(g, tol).rho
        out.append(_strict_less(claim, {**base, "check": "rho-lower-bound"}, n - delta + k - 4, value, tol,
                                {"family": fam.literal()}))
    else:
        value = g.edge_count()

    aug = {**base, "check": "augment"}
    missing = g.missing_edges()
    if n > SCAN_MAX_N:
        out.append(ClaimResult(claim, aug, PARTIAL, lhs=value, note=f"augmentation scan skipped for n > {SCAN_MAX_N}"))
        return out
    worst_gain = math.inf
    worst_value = value
    failure = None
    for u, v in missing:
        h = g.with_edge(u, v)
        new = rho_power(h, tol).rho if mode == "spectral" else h.edge_count()
        gain = new - value
        if gain < worst_gain:
            worst_gain, worst_value = gain, new
        verdict = is_k_factor_critical(h, k)
        if not verdict.holds and not is_isomorphic(h, g) and failure is None:
            failure = {"edge": [u, v], "graph6": encode(h), "kfc_witness": verdict.witness_list()}
    threshold = 10 * tol if mode == "spectral" else 0
    if failure is not None or worst_gain < -threshold:
        status = REFUTED
    elif worst_gain <= threshold:
        status = INCONCLUSIVE
    else:
        status = VERIFIED
    out.append(ClaimResult(claim, aug, status, lhs=value, rhs=worst_value, margin=worst_gain,
                           witness=failure, note=f"{len(missing)} single-edge augmentations"))
    return out


# -- threshold comparisons ----------------------------------------------------------


def verify_threshold_comparisons(n: int, k: int, delta: int, tol: float = DEFAULT_TOL) -> list[ClaimResult]:
    _require(k >= 1 and delta >= k + 1, f"need k >= 1 and delta >= k+1 (k={k}, delta={delta})")
    _require(n >= 2 * delta - k + 6, f"need n >= 2delta-k+6 = {2 * delta - k + 6}")
    ext = large_core_family(n, k, delta)
    params = {"n": n, "k": k, "delta": delta}
    out = []
    for claim, other in (("CMP-1.2", jfl_family(n, k)), ("CMP-1.5", fan_lin_family(n, k, delta))):
        out.append(_strict_less(claim, params, _rho(ext), _rho(other), tol,
                                {"extremal": ext.literal(), "other": other.literal()}))
    return out


# -- open question: connectivity exactly k ------------------------------------------


def search_connectivity_k(n: int, k: int, delta: int, max_parts: int = 3) -> list[dict]:
    """Clique-join graphs with connectivity exactly ``k`` compared against the extremal threshold.

    Scans ``K_k v (K_{n_1} u ... u K_{n_t})`` with minimum degree ``delta``
    and reports each candidate's criticality and how its size and spectral
    radius compare with the extremal graph. Nothing is asserted.
    """
    ext = extremal_family(n, k, delta)
    e_ext, r_ext = edge_count(ext), _rho(ext)
    smallest = delta - k + 1
    found = []
    for t in range(2, max_parts + 1):
        for parts in part_compositions(t, n - k, min_last=smallest):
            if sum(parts) != n - k or parts[-1] != smallest:
                continue
            fam = CliqueJoinFamily(k, parts)
            g = realize(fam)
            if g.n > SCAN_MAX_N:
                continue
            found.append({
                "family": fam.literal(),
                "connectivity": vertex_connectivity(g),
                "min_degree": min_degree(g),
                "fractional_k_factor_critical": is_fractional_k_factor_critical(g, k).holds,
                "k_factor_critical": is_k_factor_critical(g, k).holds,
                "edges_minus_extremal": edge_count(fam) - e_ext,
                "rho_minus_extremal": _rho(fam) - r_ext,
            })
    return found


# -- single-claim dispatch ------------------------------------------------------------


def _triple(params) -> tuple[int, int, int]:
    try:
        return int(params["n"]), int(params["k"]), int(params["delta"])
    except KeyError as e:
        raise HypothesisError(f"missing parameter {e.args[0]!r}") from None


def run_claim(claim: str, params: dict, tol: float = DEFAULT_TOL) -> list[ClaimResult]:
    """Evaluate one claim instance; hypothesis violations become a skipped result."""
    if claim not in CLAIM_IDS:
        raise ValueError(f"unknown claim {claim!r}; choose from {', '.join(CLAIM_IDS)}")
    try:
        if claim in ("L2.3", "L2.4", "L2.6"):
            s, parts = int(params["s"]), [int(x) for x in params["parts"]]
            p = 1 if claim == "L2.3" else int(params.get("p", 1))
            if claim == "L2.6":
                return [check_composition_edges(s, parts, p)]
            return [check_composition_rho(s, parts, p, tol, claim=claim)]
        n, k, delta = _triple(params)
        if claim == "L2.5":
            return [verify_core_rho(k, delta, n, tol)]
        if claim == "L2.7":
            return [verify_core_edges(k, delta, n)]
        if claim == "L2.8":
            return [verify_extremal_not_critical(k, delta, n)]
        if claim in ("T1.3-sharp", "T1.4-sharp"):
            mode = "size" if claim == "T1.3-sharp" else "spectral"
            return verify_theorem_sharpness(n, k, delta, mode, tol)
        res = verify_threshold_comparisons(n, k, delta, tol)
        return [r for r in res if r.claim == claim]
    except (HypothesisError, FamilyError) as e:
        return [_skipped(claim, dict(params), str(e))]
    except KeyError as e:
        return [_skipped(claim, dict(params), f"missing parameter {e.args[0]!r}")]


# -- campaign configuration and runner --------------------------------------------------


def _parity_bound(bound: int, k: int) -> int:
    return bound if (bound - k) % 2 == 0 else bound + 1


DEFAULT_GRIDS: dict = {
    "L2.3": {"s": [1, 5], "t": [2, 4], "n_max": 30},
    "L2.4": {"s": [1, 5], "t": [2, 4], "p": [1, 3], "n_max": 30},
    "L2.6": {"s": [1, 5], "t": [2, 4], "p": [1, 3], "n_max": 30},
    "L2.5": {"k": [1, 2], "delta_above_k": [2, 5], "n_offsets": [0, 2]},
    "L2.7": {"k": [1, 2], "delta_above_k": [2, 5], "n_offsets": [0, 2]},
    "L2.8": {"k": [1, 3], "delta_above_k": [1, 3], "n_offsets": [0, 2, 4]},
    "T1.3-sharp": {"instances": [[15, 1, 2], [16, 2, 3], [21, 1, 2]]},
    "T1.4-sharp": {"instances": [[31, 1, 2], [34, 2, 3], [39, 1, 3]]},
    "CMP-1.2": {"k": [1, 2], "delta_above_k": [1, 5], "n_offsets": [0, 10]},
    "CMP-1.5": {"k": [1, 2], "delta_above_k": [1, 5], "n_offsets": [0, 10]},
}

_RANGE_KEYS = {"s", "t", "p", "k", "delta_above_k"}


def _n_base(claim: str, k: int, delta: int) -> int:
    if claim == "L2.5":
        return _parity_bound(8 * delta - 5 * k + 20, k)
    if claim == "L2.7":
        return _parity_bound(6 * delta - 5 * k + 8, k)
    return 2 * delta - k + 6  # L2.8 and the comparisons; already = k (mod 2)


def expand_grid(claim: str, grid: dict) -> list[dict]:
    """Concrete parameter dicts for one claim's grid, in deterministic order."""
    if claim in ("L2.3", "L2.4", "L2.6"):
        p_range = [1, 1] if claim == "L2.3" else grid["p"]
        return [
            {"s": s, "parts": list(parts), "p": p}
            for s, parts, p in composition_instances(grid["s"], grid["t"], p_range, grid["n_max"])
        ]
    if claim in ("T1.3-sharp", "T1.4-sharp"):
        return [{"n": n, "k": k, "delta": d} for n, k, d in grid["instances"]]
    out = []
    for k in range(grid["k"][0], grid["k"][1] + 1):
        for extra in range(grid["delta_above_k"][0], grid["delta_above_k"][1] + 1):
            delta = k + extra
            for off in grid["n_offsets"]:
                out.append({"n": _n_base(claim, k, delta) + off, "k": k, "delta": delta})
    return out


@dataclass
class CampaignConfig:
    claims: list = field(default_factory=lambda: list(CLAIM_IDS))
    grids: dict = field(default_factory=dict)
    tol: float = DEFAULT_TOL
    workers: int = 1
    out: Optional[str] = None
    csv: Optional[str] = None

    def resolved_grids(self) -> dict:
        return {c: {**DEFAULT_GRIDS[c], **self.grids.get(c, {})} for c in self.claims}


def _is_int_pair(v) -> bool:
    return isinstance(v, list) and len(v) == 2 and all(isinstance(x, int) and not isinstance(x, bool) for x in v) and v[0] <= v[1]


def parse_config(data) -> CampaignConfig:
    """Validate a decoded JSON config; raises ConfigError before any computation."""
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    unknown = set(data) - {"claims", "grids", "tol", "workers", "out", "csv"}
    if unknown:
        raise ConfigError(f"unknown config fields: {sorted(unknown)}")
    cfg = CampaignConfig()
    if "claims" in data:
        claims = data["claims"]
        if not isinstance(claims, list) or not all(c in CLAIM_IDS for c in claims):
            raise ConfigError(f"claims must be a list drawn from {list(CLAIM_IDS)}")
        cfg.claims = [c for c in CLAIM_IDS if c in claims]
    grids = data.get("grids", {})
    if not isinstance(grids, dict):
        raise ConfigError("grids must be an object keyed by claim id")
    for claim, grid in grids.items():
        if claim not in CLAIM_IDS:
            raise ConfigError(f"grid for unknown claim {claim!r}")
        if not isinstance(grid, dict):
            raise ConfigError(f"grid for {claim} must be an object")
        allowed = set(DEFAULT_GRIDS[claim])
        for key, val in grid.items():
            if key not in allowed:
                raise ConfigError(f"grid {claim}: unknown key {key!r} (allowed: {sorted(allowed)})")
            if key in _RANGE_KEYS and not _is_int_pair(val):
                raise ConfigError(f"grid {claim}.{key} must be [lo, hi] integers with lo <= hi")
            if key == "n_max" and (not isinstance(val, int) or val < 1):
                raise ConfigError(f"grid {claim}.n_max must be a positive integer")
            if key == "n_offsets" and not (isinstance(val, list) and all(isinstance(x, int) and x >= 0 for x in val)):
                raise ConfigError(f"grid {claim}.n_offsets must be a list of non-negative integers")
            if key == "instances" and not (
                isinstance(val, list) and all(isinstance(x, list) and len(x) == 3 and all(isinstance(y, int) for y in x) for x in val)
            ):
                raise ConfigError(f"grid {claim}.instances must be a list of [n, k, delta] triples")
    cfg.grids = grids
    tol = data.get("tol", DEFAULT_TOL)
    if not isinstance(tol, (int, float)) or isinstance(tol, bool) or not tol > 0:
        raise ConfigError("tol must be a positive number")
    cfg.tol = float(tol)
    workers = data.get("workers", 1)
    if not isinstance(workers, int) or isinstance(workers, bool) or workers < 1:
        raise ConfigError("workers must be a positive integer")
    cfg.workers = workers
    for key in ("out", "csv"):
        val = data.get(key)
        if val is not None and not isinstance(val, str):
            raise ConfigError(f"{key} must be a path string")
        setattr(cfg, key, val)
    return cfg


def load_config(path) -> CampaignConfig:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as e:
        raise ConfigError(f"config is not valid JSON: {e}") from None
    return parse_config(data)


def _run_chunk(tasks):
    claim_tasks, tol = tasks
    out = []
    for claim, params in claim_tasks:
        out.extend(run_claim(claim, params, tol))
    return out


def run_campaign(cfg: CampaignConfig) -> Report:
    start = time.perf_counter()
    grids = cfg.resolved_grids()
    tasks = [(claim, params) for claim in cfg.claims for params in expand_grid(claim, grids[claim])]
    if cfg.workers > 1 and len(tasks) > 1:
        size = max(1, len(tasks) // (4 * cfg.workers))
        chunks = [(tasks[i : i + size], cfg.tol) for i in range(0, len(tasks), size)]
        with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
            results = [r for part in pool.map(_run_chunk, chunks) for r in part]
    else:
        results = _run_chunk((tasks, cfg.tol))
    results.sort(key=ClaimResult.sort_key)
    report = Report(__version__, _kernels.BACKEND, grids, cfg.tol, results, time.perf_counter() - start)
    if cfg.out:
        Path(cfg.out).write_text(report.to_json())
    if cfg.csv:
        Path(cfg.csv).write_text(report.to_csv())
    return report
