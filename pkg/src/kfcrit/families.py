"""Clique-join families ``K_s v (K_{n_1} u ... u K_{n_t})``.

A family is stored symbolically as the core size ``s`` plus the part
sizes sorted non-increasing, so equal families compare (and hash) equal
however they were built.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable

from .graph import Graph, GraphError, component_masks, complete, join, members, union_all


class FamilyError(ValueError):
    pass


class ReductionInapplicable(FamilyError):
    """The deleted set leaves too few odd components for the reduction."""


@dataclass(frozen=True)
class CliqueJoinFamily:
    s: int
    parts: tuple[int, ...]

    def __init__(self, s: int, parts: Iterable[int]):
        parts = tuple(sorted((int(p) for p in parts), reverse=True))
        if s < 0:
            raise FamilyError(f"core size must be >= 0, got {s}")
        if any(p < 1 for p in parts):
            raise FamilyError(f"part sizes must be positive, got {parts}")
        object.__setattr__(self, "s", int(s))
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return self.s + sum(self.parts)

    @property
    def t(self) -> int:
        return len(self.parts)

    def literal(self) -> str:
        return f"s={self.s};parts={','.join(map(str, self.parts))}"

    def __str__(self) -> str:
        return self.literal()

    def sort_key(self) -> tuple:
        return (self.n, self.s, self.parts)


_LITERAL = re.compile(r"^\s*s\s*=\s*(\d+)\s*;\s*parts\s*=\s*([\d,\s]*)$")


def parse_family(text: str) -> CliqueJoinFamily:
    """Parse the literal form ``"s=2;parts=3,3,1"``."""
    m = _LITERAL.match(text)
    if not m:
        raise FamilyError(f"bad family literal {text!r}; expected 's=<int>;parts=<int>,<int>,...'")
    raw = [p.strip() for p in m.group(2).split(",") if p.strip()]
    if not raw:
        raise FamilyError(f"family literal {text!r} lists no parts")
    return CliqueJoinFamily(int(m.group(1)), [int(p) for p in raw])


def realize(f: CliqueJoinFamily) -> Graph:
    """The graph, with the core on vertices ``0..s-1`` and parts in listed order."""
    return join(complete(f.s), union_all(complete(p) for p in f.parts))


def class_ranges(f: CliqueJoinFamily) -> list[range]:
    """Vertex ranges of the core followed by each part in ``realize(f)``."""
    out = [range(0, f.s)]
    start = f.s
    for p in f.parts:
        out.append(range(start, start + p))
        start += p
    return out


def edge_count(f: CliqueJoinFamily) -> int:
    return comb(f.s, 2) + f.s * (f.n - f.s) + sum(comb(p, 2) for p in f.parts)


# -- named families ---------------------------------------------------


@dataclass(frozen=True)
class ExtremalParams:
    n: int
    k: int
    delta: int

    def __post_init__(self):
        n, k, d = self.n, self.k, self.delta
        if k < 1:
            raise FamilyError(f"k must be >= 1, got {k}")
        if d <= k:
            raise FamilyError(f"need delta >= k+1, got delta={d}, k={k}")
        if (n - k) % 2:
            raise FamilyError(f"need n = k (mod 2), got n={n}, k={k}")
        if n < 2 * d - k + 6:
            raise FamilyError(f"need n >= 2*delta-k+6 = {2 * d - k + 6}, got n={n}")


def extremal_family(n: int, k: int, delta: int) -> CliqueJoinFamily:
    """``K_delta v (K_{n-2delta+k-3} u K_3 u (delta-k) K_1)``."""
    ExtremalParams(n, k, delta)
    return CliqueJoinFamily(delta, [n - 2 * delta + k - 3, 3] + [1] * (delta - k))


def jfl_family(n: int, k: int) -> CliqueJoinFamily:
    """``K_k v (K_{n-k-3} u K_3)``, the fractional-criticality threshold family."""
    if k < 1 or n - k - 3 < 3:
        raise FamilyError(f"need k >= 1 and n-k-3 >= 3, got n={n}, k={k}")
    return CliqueJoinFamily(k, [n - k - 3, 3])


def fan_lin_family(n: int, k: int, delta: int) -> CliqueJoinFamily:
    """``K_delta v (K_{n-2delta+k-1} u (delta-k+1) K_1)``, the minimum-degree threshold family."""
    big = n - 2 * delta + k - 1
    if big < 1 or delta < k:
        raise FamilyError(f"need n-2delta+k-1 >= 1 and delta >= k, got n={n}, k={k}, delta={delta}")
    return CliqueJoinFamily(delta, [big] + [1] * (delta - k + 1))


def composition_target(s: int, n: int, t: int, p: int) -> CliqueJoinFamily:
    """``K_s v (K_{n-s-(t-2)p-3} u K_3 u (t-2) K_p)``."""
    big = n - s - (t - 2) * p - 3
    if big < 1:
        raise FamilyError(f"target big part would be {big}")
    return CliqueJoinFamily(s, [big, 3] + [p] * (t - 2))


def core_k1_family(n: int, k: int, delta: int) -> CliqueJoinFamily:
    """``K_{k+1} v (K_{n-delta-4} u K_3 u K_{delta-k})``; the ``s = k+1`` competitor."""
    big = n - delta - 4
    if delta - k < 1 or big < 1:
        raise FamilyError(f"need delta > k and n-delta-4 >= 1, got n={n}, k={k}, delta={delta}")
    return CliqueJoinFamily(k + 1, [big, 3, delta - k])


def large_core_family(n: int, k: int, s: int) -> CliqueJoinFamily:
    """``K_s v (K_{n-2s+k-3} u K_3 u (s-k) K_1)``; the extremal shape with core ``s``."""
    big = n - 2 * s + k - 3
    if big < 1 or s < k:
        raise FamilyError(f"need n-2s+k-3 >= 1 and s >= k, got n={n}, k={k}, s={s}")
    return CliqueJoinFamily(s, [big, 3] + [1] * (s - k))


def small_core_family(n: int, k: int, delta: int, s: int) -> CliqueJoinFamily:
    """``K_s v (K_{n-s-(s-k)(delta+1-s)-3} u K_3 u (s-k) K_{delta+1-s})`` for ``s < delta``."""
    q = delta + 1 - s
    big = n - s - (s - k) * q - 3
    if q < 1 or big < 1 or s < k:
        raise FamilyError(f"small-core family undefined for n={n}, k={k}, delta={delta}, s={s}")
    return CliqueJoinFamily(s, [big, 3] + [q] * (s - k))


# -- spanning-supergraph reduction --------------------------------------


def tutte_reduction_map(g: Graph, s: Iterable[int], k: int) -> tuple[CliqueJoinFamily, list[int]]:
    """Clique-join supergraph of ``g`` forced by a Tutte-violating set ``s``.

    The ``|s|-k+1`` smallest odd components of ``g - s`` stay separate
    parts; the remaining odd components and every even component merge
    into one big part. Returns the family and ``perm`` such that
    ``g.relabel(perm)`` is a spanning subgraph of ``realize(family)``.
    """
    s = sorted(set(s))
    if any(not 0 <= v < g.n for v in s):
        raise GraphError(f"deleted set {s} out of range for n={g.n}")
    size = len(s)
    if size < k:
        raise ReductionInapplicable(f"need |S| >= k, got |S|={size}, k={k}")
    smask = 0
    for v in s:
        smask |= 1 << v
    comps = component_masks(g, g.full_mask & ~smask)
    odd = sorted((c for c in comps if c.bit_count() % 2), key=lambda c: (c.bit_count(), c & -c))
    even = [c for c in comps if c.bit_count() % 2 == 0]
    keep = size - k + 1
    if len(odd) < keep + 1:
        raise ReductionInapplicable(
            f"o(G-S) = {len(odd)} < |S|-k+2 = {keep + 1}; the odd-component bound holds for this S"
        )
    small = odd[:keep]
    merged = 0
    for c in odd[keep:] + even:
        merged |= c
    # parts in the same non-increasing order the family stores them
    blocks = [smask] + sorted([merged] + small, key=lambda c: -c.bit_count())
    perm = [0] * g.n
    pos = 0
    for block in blocks:
        for v in members(block):
            perm[v] = pos
            pos += 1
    family = CliqueJoinFamily(size, [merged.bit_count()] + [c.bit_count() for c in small])
    return family, perm


def tutte_reduction(g: Graph, s: Iterable[int], k: int) -> CliqueJoinFamily:
    return tutte_reduction_map(g, s, k)[0]
