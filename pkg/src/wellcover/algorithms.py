"""Polynomial recognition of generating subgraphs and well-covered weight spaces.

Two graph families are handled.

* Bipartite graphs without 6-cycles: generating-subgraph recognition,
  the maximal generating stars/double stars ``maxgen1``/``maxgen2``, the
  full weight-space constraint system and the well-covered test.
* Graphs without cycles of lengths 3, 4, 5 and 7: the weight space as the
  leaf equations ``w(x) = w(N(x) & L(G))`` over non-leaves ``x``.

Every public entry point checks family membership first (cached per graph)
and raises :class:`~wellcover.graph.FamilyViolation` outside it, unless
``unchecked=True``.  The loops follow the published pseudocode line for line,
with vertex sets as integer bit masks.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import (
    FAMILIES,
    FamilySpec,
    Graph,
    GraphError,
    bits,
    component_masks,
    is_induced_complete_bipartite,
    layer_mask,
    leaf_mask,
    mask_of,
    members,
    open_neighborhood_mask,
    require_family,
    validate_family,
)
from .oracles import generating_oracle
from .weightspace import ConstraintSystem, LinearConstraint, equal_weights, zero_weight

__all__ = [
    "BIP_C6FREE",
    "C3457FREE",
    "NeighborhoodDecomposition",
    "LeafProfile",
    "decompose",
    "leaf_profile",
    "generating_bip_c6free",
    "maxgen1",
    "maxgen2",
    "wcw_bip_c6free",
    "well_covered_bip_c6free",
    "wcw_leaf_characterization",
    "relating_edge",
]

BIP_C6FREE: FamilySpec = FAMILIES["bip-c6free"]
C3457FREE: FamilySpec = FAMILIES["c3457free"]


def _check(g: Graph, family: FamilySpec, unchecked: bool) -> None:
    if not unchecked:
        require_family(g, family)


# -- notation ----------------------------------------------------------------


@dataclass(frozen=True)
class NeighborhoodDecomposition:
    """The sets around ``X`` (one or two vertices) and ``Y = common N(X)``.

    ``a_sets[i]`` is ``N(y_i) - X``, ``z_sets[i]`` is the part of the second
    neighbourhood of ``y_i`` at distance 3 from ``X``; ``s`` holds the
    neighbours of ``X`` outside ``Y`` and ``s_prime`` their neighbours
    outside ``X``.  ``d1``/``d2`` are the first and second neighbourhoods of
    ``X | Y`` (``d1`` excludes ``X | Y``).
    """

    x_side: frozenset[int]
    y_side: tuple[int, ...]
    a_sets: tuple[frozenset[int], ...]
    z_sets: tuple[frozenset[int], ...]
    s: frozenset[int]
    s_prime: frozenset[int]
    d1: frozenset[int]
    d2: frozenset[int]
    dominated: tuple[bool, ...]

    def kept(self) -> list[int]:
        """Indices ``i`` whose ``A_i`` is dominated by ``Z_i``."""
        return [i for i, ok in enumerate(self.dominated) if ok]

    def dropped(self) -> list[int]:
        return [i for i, ok in enumerate(self.dominated) if not ok]

    def trace(self, g: Graph | None = None) -> str:
        name = g.label if g is not None else str
        fmt = lambda s: "{" + ", ".join(name(v) for v in sorted(s)) + "}"
        lines = [f"X = {fmt(self.x_side)}", f"Y = {fmt(self.y_side)}"]
        for i, y in enumerate(self.y_side):
            lines.append(f"  y={name(y)}: A = {fmt(self.a_sets[i])}  Z = {fmt(self.z_sets[i])}")
        lines += [f"S = {fmt(self.s)}", f"S' = {fmt(self.s_prime)}"]
        return "\n".join(lines)


def decompose(g: Graph, x_side: Iterable[int]) -> NeighborhoodDecomposition:
    """Compute ``Y``, ``A_i``, ``Z_i``, ``S`` and ``S'`` for an independent ``X``."""
    xs = frozenset(x_side)
    if not 1 <= len(xs) <= 2:
        raise GraphError("X must hold one or two vertices")
    adj = g.adj
    xm = mask_of(xs)
    if any(adj[v] & xm for v in xs):
        raise GraphError("X must be independent")
    ym = g.full_mask
    for v in xs:
        ym &= adj[v]
    y_side = tuple(bits(ym))
    n3x = layer_mask(g, xm, 3)
    a_sets, z_sets, dominated = [], [], []
    for y in y_side:
        am = adj[y] & ~xm
        zm = layer_mask(g, 1 << y, 2) & n3x
        a_sets.append(members(am))
        z_sets.append(members(zm))
        dominated.append(all(adj[a] & zm for a in bits(am)))
    s_mask = open_neighborhood_mask(g, xm) & ~ym
    sp_mask = open_neighborhood_mask(g, s_mask) & ~xm
    b = xm | ym
    d1 = open_neighborhood_mask(g, b) & ~b if ym else 0
    d2 = layer_mask(g, b, 2) if ym else 0
    return NeighborhoodDecomposition(
        xs, y_side, tuple(a_sets), tuple(z_sets), members(s_mask), members(sp_mask),
        members(d1), members(d2), tuple(dominated),
    )


# -- bipartite graphs without 6-cycles ---------------------------------------


def _generating_mask(adj, xm: int, ym: int) -> bool:
    d = 0
    for v in bits(xm | ym):
        d |= adj[v]
    d1 = d & ~(xm | ym)
    for v in bits(d1):
        if not adj[v] & ~d:
            return False
    return True


def generating_bip_c6free(g: Graph, bx: Iterable[int], by: Iterable[int], *, unchecked: bool = False) -> bool:
    """Decide whether ``G[bx | by]`` is generating; ``O(n^2)``.

    In this family the second neighbourhood of ``B`` is independent, so
    ``B`` is generating exactly when every vertex of ``N(B) - B`` has a
    neighbour outside ``N[B]``.
    """
    _check(g, BIP_C6FREE, unchecked)
    bx, by = list(bx), list(by)
    if not is_induced_complete_bipartite(g, bx, by):
        raise GraphError(f"({sorted(bx)}, {sorted(by)}) is not an induced complete bipartite subgraph")
    return _generating_mask(g.adj, mask_of(bx), mask_of(by))


def _maxgen1_mask(adj, x: int) -> int:
    nx_ = adj[x]
    t = 0
    for y in bits(nx_):
        flag = True
        for a in bits(adj[y] & ~(1 << x)):
            if not adj[a] & ~nx_:
                flag = False
                break
        if flag:
            t |= 1 << y
    return t


def maxgen1(g: Graph, x: int, *, unchecked: bool = False) -> frozenset[int]:
    """Largest ``T`` within ``N(x)`` making ``G[{x} | T]`` generating; ``O(n^3)``.

    An empty result means no such ``T`` exists.  That conflation is harmless:
    any ``y`` whose second-level neighbours all reach beyond ``N(x)`` is
    always included, so an empty answer never hides a generating star.
    """
    _check(g, BIP_C6FREE, unchecked)
    return members(_maxgen1_mask(g.adj, x))


def _maxgen2_mask(adj, x1: int, x2: int) -> int:
    xm = (1 << x1) | (1 << x2)
    ym = adj[x1] & adj[x2]
    if ym.bit_count() < 2:
        return 0
    for s in bits(adj[x1] ^ adj[x2]):
        if not adj[s] & ~xm:
            return 0
    t = 0
    for y in bits(ym):
        flag = True
        for a in bits(adj[y] & ~xm):
            if not adj[a] & ~ym:
                flag = False
                break
        if flag:
            t |= 1 << y
    if t.bit_count() < 2:
        return 0
    return t


def maxgen2(g: Graph, x1: int, x2: int, *, unchecked: bool = False) -> frozenset[int]:
    """Largest ``T`` of size >= 2 in ``N(x1) & N(x2)`` with ``G[{x1, x2} | T]`` generating.

    Empty when no such set exists; ``O(n^2)``.
    """
    if x1 == x2:
        raise GraphError("maxgen2 needs two distinct vertices")
    _check(g, BIP_C6FREE, unchecked)
    return members(_maxgen2_mask(g.adj, x1, x2))


def wcw_bip_c6free(g: Graph, *, unchecked: bool = False) -> ConstraintSystem:
    """Weight-space constraints from maximal generating stars and double stars.

    Emitted in order: for each vertex ``v`` the star equation
    ``w(T) = w(v)`` and zero equations for non-pendant members of ``T``;
    then the same for each ordered pair ``(v1, v2)``.  Duplicates collapse in
    the :class:`ConstraintSystem`.  ``O(n^4)``.

    Warning: the zero equations assume that no vertex outside ``X`` is
    adjacent to two members of ``T``.  A 4-cycle can break that, and then
    ``w(t) = 0`` is emitted although ``X | T - {t}`` is not generating, so
    the solution space comes out too small.  The smallest case is a 4-cycle
    with one pendant vertex.  No disagreement with the oracle is known on
    bipartite graphs without 4- and 6-cycles.
    """
    _check(g, BIP_C6FREE, unchecked)
    adj = g.adj
    out = ConstraintSystem(g.n)
    for v in range(g.n):
        t = _maxgen1_mask(adj, v)
        if t:
            out.add(equal_weights(bits(t), [v]))
        if t.bit_count() >= 2:
            for u in bits(t):
                if adj[u] != 1 << v:
                    out.add(zero_weight(u))
    for v1 in range(g.n):
        for v2 in range(g.n):
            if v1 == v2:
                continue
            t = _maxgen2_mask(adj, v1, v2)
            if t.bit_count() >= 2:
                pair = (1 << v1) | (1 << v2)
                out.add(equal_weights(bits(t), [v1, v2]))
                for u in bits(t):
                    if adj[u] != pair:
                        out.add(zero_weight(u))
    return out


def well_covered_bip_c6free(g: Graph, *, unchecked: bool = False) -> bool:
    """The loop form of the well-covered test (no constraint system built).

    Shares the blind spot of :func:`wcw_bip_c6free`: a ``T`` of size 2 whose
    members have a common neighbour outside ``X`` yields ``False`` even when
    the graph is well-covered.  ``K_{2,3}`` with a pendant at a degree-2
    vertex is the smallest example.
    """
    _check(g, BIP_C6FREE, unchecked)
    adj = g.adj
    for v in range(g.n):
        if _maxgen1_mask(adj, v).bit_count() > 1:
            return False
    for v1 in range(g.n):
        for v2 in range(g.n):
            if v1 == v2:
                continue
            t = _maxgen2_mask(adj, v1, v2)
            size = t.bit_count()
            if size > 2:
                return False
            if size == 2:
                pair = (1 << v1) | (1 << v2)
                for u in bits(t):
                    if adj[u] != pair:
                        return False
    return True


# -- graphs without cycles of lengths 3, 4, 5, 7 -----------------------------


@dataclass(frozen=True)
class LeafProfile:
    leaves: frozenset[int]
    leaf_neighbors: frozenset[int]
    s_x: dict[int, frozenset[int]]


def leaf_profile(g: Graph) -> LeafProfile:
    lm = leaf_mask(g)
    near = open_neighborhood_mask(g, lm)
    sx = {x: members(g.adj[x] & ~near) for x in range(g.n) if not lm >> x & 1 and g.adj[x]}
    return LeafProfile(members(lm), members(near), sx)


def wcw_leaf_characterization(g: Graph, *, unchecked: bool = False) -> ConstraintSystem:
    """Weight-space constraints from leaves alone, per connected component.

    Isolated vertices are unconstrained and a ``K2`` component forces its two
    weights equal.  In any other component every non-leaf ``x`` gets
    ``w(x) = w(N(x) & L(G))``, which reads ``w(x) = 0`` when ``x`` has no
    pendant neighbour.

    Warning: the cycle ``C6`` is in this family, yet its weight space is
    2-dimensional while these constraints force ``w = 0``.  The function
    reports the characterization as stated and does not patch around it.
    """
    _check(g, C3457FREE, unchecked)
    adj = g.adj
    lm = leaf_mask(g)
    out = ConstraintSystem(g.n)
    for comp in component_masks(g):
        size = comp.bit_count()
        if size == 1:
            continue
        if size == 2:
            a, b = bits(comp)
            out.add(equal_weights([a], [b]))
            continue
        for x in bits(comp & ~lm):
            out.add(LinearConstraint.from_mapping({x: 1, **{l: -1 for l in bits(adj[x] & lm)}}))
    return out


# -- relating edges ----------------------------------------------------------


def relating_edge(g: Graph, u: int, v: int) -> bool:
    """Whether ``uv`` forces ``w(u) = w(v)`` via a generating ``K_{1,1}``.

    Uses the polynomial test on bipartite graphs without 6-cycles and falls
    back to the exponential oracle otherwise.
    """
    if not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    key = ("family", BIP_C6FREE)
    check = g._cache.get(key)
    if check is None:
        check = g._cache[key] = validate_family(g, BIP_C6FREE)
    if check.ok:
        return _generating_mask(g.adj, 1 << u, 1 << v)
    return generating_oracle(g, [u], [v]) is not None
