"""Exponential-time reference answers for desk-scale instances.

Everything here is deliberately plain: enumerate the maximal independent
sets, compare weights, try every assignment.  The fast algorithms in
:mod:`wellcover.algorithms` are tested against these functions.

Size caps guard every enumeration.  They default to 24 vertices and 24
variables and can be overridden with the ``WELLCOVER_MAX_VERTICES`` and
``WELLCOVER_MAX_VARS`` environment variables or per call.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cnf import Assignment, CnfInstance
from .graph import (
    Graph,
    GraphError,
    bits,
    closed_neighborhood_mask,
    is_induced_complete_bipartite,
    mask_of,
    members,
)
from .weightspace import ConstraintSystem, equal_weights

__all__ = [
    "CapExceeded",
    "MisEnumeration",
    "WitnessCertificate",
    "max_vertices",
    "max_vars",
    "enumerate_mis",
    "iter_maximal_independent_masks",
    "is_well_covered_oracle",
    "wcw_oracle",
    "generating_oracle",
    "sat_bruteforce",
]

DEFAULT_MAX_VERTICES = 24
DEFAULT_MAX_VARS = 24


class CapExceeded(RuntimeError):
    """Instance too large for brute force under the configured cap."""


def max_vertices() -> int:
    return int(os.environ.get("WELLCOVER_MAX_VERTICES", DEFAULT_MAX_VERTICES))


def max_vars() -> int:
    return int(os.environ.get("WELLCOVER_MAX_VARS", DEFAULT_MAX_VARS))


def _check_cap(size: int, cap: int | None, what: str, default) -> None:
    limit = default() if cap is None else cap
    if size > limit:
        raise CapExceeded(f"{what} {size} exceeds the brute-force cap of {limit}")


def iter_maximal_independent_masks(g: Graph, within: int | None = None) -> Iterator[int]:
    """Maximal independent sets of ``G[within]`` as bit masks, unordered.

    Bron-Kerbosch with Tomita pivoting, run on the complement graph so that
    cliques there are independent sets here.
    """
    adj = g.adj
    universe = g.full_mask if within is None else within
    if not universe:
        yield 0
        return
    comp = {v: universe & ~adj[v] & ~(1 << v) for v in bits(universe)}

    def expand(r: int, p: int, x: int) -> Iterator[int]:
        if not p and not x:
            yield r
            return
        pivot = max(bits(p | x), key=lambda u: (p & comp[u]).bit_count())
        for v in bits(p & ~comp[pivot]):
            yield from expand(r | (1 << v), p & comp[v], x & comp[v])
            p &= ~(1 << v)
            x |= 1 << v

    yield from expand(0, universe, 0)


def _lex_key(mask: int) -> tuple[int, ...]:
    return tuple(bits(mask))


@dataclass(frozen=True)
class MisEnumeration:
    """All maximal independent sets of ``graph``, lexicographically ordered."""

    graph: Graph
    sets: tuple[frozenset[int], ...]

    def __iter__(self):
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)

    def sizes(self) -> set[int]:
        return {len(s) for s in self.sets}


def enumerate_mis(g: Graph, cap: int | None = None) -> MisEnumeration:
    _check_cap(g.n, cap, "vertex count", max_vertices)
    masks = sorted(iter_maximal_independent_masks(g), key=_lex_key)
    return MisEnumeration(g, tuple(members(m) for m in masks))


def is_well_covered_oracle(g: Graph, cap: int | None = None) -> bool:
    return len(enumerate_mis(g, cap).sizes()) <= 1


def wcw_oracle(g: Graph, cap: int | None = None) -> ConstraintSystem:
    """``w(M_i) = w(M_1)`` for every maximal independent set ``M_i``.

    The solution space of the result is exactly the set of weight functions
    under which ``g`` is well-covered.
    """
    mis = enumerate_mis(g, cap).sets
    system = ConstraintSystem(g.n)
    for m in mis[1:]:
        system.add(equal_weights(m, mis[0]))
    return system


@dataclass(frozen=True)
class WitnessCertificate:
    bx: frozenset[int]
    by: frozenset[int]
    s: frozenset[int]

    @property
    def m_x(self) -> frozenset[int]:
        return self.s | self.bx

    @property
    def m_y(self) -> frozenset[int]:
        return self.s | self.by

    def to_json(self) -> dict:
        return {
            "bx": sorted(self.bx),
            "by": sorted(self.by),
            "witness": sorted(self.s),
            "m_x": sorted(self.m_x),
            "m_y": sorted(self.m_y),
        }


def generating_oracle(
    g: Graph, bx: Iterable[int], by: Iterable[int], cap: int | None = None
) -> WitnessCertificate | None:
    """First witness ``S`` (lexicographic order) that ``G[bx | by]`` is generating.

    A witness can contain nothing from ``N[bx | by]``: ``S | bx`` and
    ``S | by`` are independent only if ``S`` avoids both closed
    neighbourhoods.  Every vertex outside ``N[bx | by]`` must be dominated by
    ``S`` itself for either union to be maximal, so ``S`` is a maximal
    independent set of ``G - N[bx | by]``.  Those sets are the whole search
    space; the cap applies to the size of that remainder.
    """
    bx, by = frozenset(bx), frozenset(by)
    if not is_induced_complete_bipartite(g, bx, by):
        raise GraphError(f"({sorted(bx)}, {sorted(by)}) is not an induced complete bipartite subgraph")
    xm, ym = mask_of(bx), mask_of(by)
    rest = g.full_mask & ~closed_neighborhood_mask(g, xm | ym)
    _check_cap(rest.bit_count(), cap, "search-space vertex count", max_vertices)
    full = g.full_mask
    for s in sorted(iter_maximal_independent_masks(g, rest), key=_lex_key):
        if closed_neighborhood_mask(g, s | xm) == full and closed_neighborhood_mask(g, s | ym) == full:
            return WitnessCertificate(bx, by, members(s))
    return None


def sat_bruteforce(inst: CnfInstance, cap: int | None = None) -> Assignment | None:
    """First satisfying assignment with ``(x1, ..., xn)`` read as a binary number."""
    n = inst.n_vars
    _check_cap(n, cap, "variable count", max_vars)
    # x1 is the most significant bit so counting upward is lexicographic
    clauses = []
    for c in inst.clauses:
        pos = neg = 0
        for l in c:
            b = 1 << (n - abs(l))
            if l > 0:
                pos |= b
            else:
                neg |= b
        clauses.append((pos, neg))
    full = (1 << n) - 1
    for a in range(1 << n):
        na = full ^ a
        if all(a & pos or na & neg for pos, neg in clauses):
            return Assignment(tuple(bool(a >> (n - i) & 1) for i in range(1, n + 1)))
    return None
