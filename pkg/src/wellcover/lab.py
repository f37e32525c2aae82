"""Seeded instance generators and exhaustive small-graph corpora.

All randomness comes from :class:`SplitMix64`, a fixed integer-only
generator, so a given seed produces the same graphs and formulas on every
platform and Python version.  The stdlib ``random`` module is not used
because its algorithms are not guaranteed stable across releases.

Rejection sampling is biased towards sparse members of a family; nothing
here claims uniformity except :func:`random_tree`.
"""
from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations
from pathlib import Path
from typing import Iterator

from .cnf import CnfInstance, Kind, validate
from .graph import FamilySpec, Graph, bits, get_family, graph_to_json, validate_family

__all__ = [
    "SplitMix64",
    "GenerationError",
    "GeneratorConfig",
    "derive_seed",
    "random_tree",
    "random_family_graph",
    "family_graph_stream",
    "sparse_family_graph",
    "enumerate_small_graphs",
    "enumerate_bipartite_graphs",
    "random_dsat",
    "random_monotone",
    "write_corpus",
]

MASK64 = (1 << 64) - 1
MAX_ENUM_N = 9


class GenerationError(RuntimeError):
    """A generator hit its rejection cap or got infeasible parameters."""


class SplitMix64:
    """Steele, Lea and Flood's SplitMix64; 64-bit state, 64-bit outputs."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` (rejection, no modulo bias)."""
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        limit = (1 << 64) - (1 << 64) % n
        while True:
            x = self.next()
            if x < limit:
                return x % n

    def chance(self, p: float) -> bool:
        """True with probability ``p``, resolved to 53 bits."""
        return (self.next() >> 11) < int(p * (1 << 53))

    def sample(self, population: int, k: int) -> list[int]:
        """``k`` distinct values from ``range(population)``, partial Fisher-Yates."""
        pool = list(range(population))
        for i in range(k):
            j = i + self.below(population - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]


def derive_seed(seed: int, index: int) -> int:
    """Independent child seed for the ``index``-th item of a seeded batch."""
    rng = SplitMix64(seed ^ (index * 0xD1B54A32D192ED03 & MASK64))
    return rng.next()


@dataclass(frozen=True)
class GeneratorConfig:
    """Parameters of a graph or formula generator; equal configs give equal output."""

    seed: int = 0
    n: int = 8
    p: float = 0.2
    n_vars: int = 6
    n_clauses: int = 8
    family: FamilySpec = field(default_factory=lambda: get_family("any"))
    max_rejections: int = 10_000

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "n": self.n,
            "p": self.p,
            "n_vars": self.n_vars,
            "n_clauses": self.n_clauses,
            "family": self.family.describe(),
            "family_spec": self.family.to_json(),
            "max_rejections": self.max_rejections,
        }


# -- graphs ------------------------------------------------------------------


def random_tree(n: int, seed: int) -> Graph:
    """Uniform labelled tree on ``n`` vertices by Pruefer decoding."""
    if n < 1:
        raise GenerationError("a tree needs n >= 1")
    if n <= 2:
        return Graph(n, [(0, 1)] if n == 2 else [])
    rng = SplitMix64(seed)
    seq = [rng.below(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph(n, edges)


def _candidate_pairs(rng: SplitMix64, n: int, bipartite: bool) -> list[tuple[int, int]]:
    if not bipartite:
        return list(combinations(range(n), 2))
    side = [rng.chance(0.5) for _ in range(n)]
    return [(u, v) for u, v in combinations(range(n), 2) if side[u] != side[v]]


def family_graph_stream(config: GeneratorConfig) -> Iterator[Graph]:
    """Endless stream of family members from one RNG; the k-th item is fixed by the config.

    Each draw picks every candidate edge independently with probability
    ``config.p``.  When the family requires bipartiteness, vertices are first
    split into two random sides and only cross edges are candidates.  A draw
    that fails :func:`validate_family` is discarded; ``max_rejections``
    consecutive failures raise :class:`GenerationError`.
    """
    rng = SplitMix64(config.seed)
    fam = config.family
    while True:
        for _ in range(config.max_rejections):
            pairs = _candidate_pairs(rng, config.n, fam.require_bipartite)
            g = Graph(config.n, [e for e in pairs if rng.chance(config.p)])
            if validate_family(g, fam):
                break
        else:
            raise GenerationError(
                f"no {fam.describe()} graph on n={config.n} with p={config.p} after "
                f"{config.max_rejections} draws; lower p or raise max_rejections"
            )
        yield g


def random_family_graph(config: GeneratorConfig) -> Graph:
    return next(family_graph_stream(config))


def _has_path(adj: list[int], u: int, v: int, length: int) -> bool:
    """Is there a simple ``u``-``v`` path with exactly ``length`` edges?"""
    dist = {v: 0}
    frontier = seen = 1 << v
    for d in range(1, length + 1):
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        nxt &= ~seen
        if not nxt:
            break
        for x in bits(nxt):
            dist[x] = d
        seen |= nxt
        frontier = nxt
    if dist.get(u, length + 1) > length:
        return False
    far = length + 1

    def extend(x: int, visited: int, remaining: int) -> bool:
        if remaining == 0:
            return x == v
        for y in bits(adj[x] & ~visited):
            if dist.get(y, far) <= remaining - 1 and (y != v or remaining == 1):
                if extend(y, visited | (1 << y), remaining - 1):
                    return True
        return False

    return extend(u, 1 << u, length)


def _connected(adj: list[int], u: int, v: int) -> bool:
    seen = frontier = 1 << u
    while frontier:
        if seen >> v & 1:
            return True
        nxt = 0
        for x in bits(frontier):
            nxt |= adj[x]
        frontier = nxt & ~seen
        seen |= frontier
    return bool(seen >> v & 1)


def sparse_family_graph(n: int, m: int, family: FamilySpec, seed: int, max_rejections: int = 100_000) -> Graph:
    """Grow a family member edge by edge up to ``m`` edges.

    Random vertex pairs are proposed and kept only when the new edge closes
    no forbidden cycle, so the result is valid by construction (and checked
    once more at the end).  This scales to thousands of vertices, unlike
    whole-graph rejection.  Cycle lengths above 8 are only excluded for the
    acyclic family.
    """
    rng = SplitMix64(seed)
    bip = family.require_bipartite
    side = [rng.chance(0.5) for _ in range(n)] if bip else None
    lengths = sorted(k for k in family.forbidden_lengths() if not (bip and k % 2))
    adj = [0] * n
    edges = []
    rejected = 0
    while len(edges) < m:
        if rejected >= max_rejections:
            raise GenerationError(f"placed only {len(edges)} of {m} edges after {rejected} rejected proposals")
        u, v = rng.below(n), rng.below(n)
        ok = u != v and not adj[u] >> v & 1 and (not bip or side[u] != side[v])
        if ok and family.acyclic:
            ok = not _connected(adj, u, v)
        if ok:
            ok = not any(_has_path(adj, u, v, k - 1) for k in lengths)
        if not ok:
            rejected += 1
            continue
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        edges.append((u, v))
    g = Graph(n, edges)
    if not validate_family(g, family):
        raise GenerationError("incremental generator produced an invalid graph")
    return g


def enumerate_small_graphs(n: int, family: FamilySpec | None = None) -> Iterator[Graph]:
    """Every graph on the labelled vertices ``0..n-1``, one per edge subset.

    Edge subsets are visited in increasing bitmask order over the
    lexicographically sorted vertex pairs.
    """
    if n > MAX_ENUM_N:
        raise GenerationError(f"labelled enumeration is limited to n <= {MAX_ENUM_N}, got {n}")
    pairs = list(combinations(range(n), 2))
    for sub in range(1 << len(pairs)):
        g = Graph(n, [pairs[i] for i in bits(sub)])
        if family is None or validate_family(g, family):
            yield g


def _canonical_rows(rows: tuple[int, ...], b: int) -> tuple[int, ...]:
    best = None
    for perm in permutations(rows):
        cols = tuple(sorted(sum(((r >> j) & 1) << i for i, r in enumerate(perm)) for j in range(b)))
        if best is None or cols < best:
            best = cols
    return best


def enumerate_bipartite_graphs(n: int, family: FamilySpec | None = None) -> Iterator[Graph]:
    """One representative of every isomorphism class of bipartite graphs on ``n`` vertices.

    A bipartite graph with sides of sizes ``a <= b`` is an ``a x b`` 0/1
    matrix.  Matrices are generated with rows in non-decreasing order and
    reduced to a canonical form (least sorted column vector over all row
    orders), which identifies two matrices exactly when they differ by row
    and column permutations.  Graphs with several bipartitions appear once
    per distinct matrix shape, so a class may repeat; none is missed.
    Rows ``0..a-1`` are one side and ``a..n-1`` the other.
    """
    if n > MAX_ENUM_N:
        raise GenerationError(f"bipartite enumeration is limited to n <= {MAX_ENUM_N}, got {n}")
    seen = set()
    for a in range(n // 2 + 1):
        b = n - a
        for rows in combinations_with_replacement(range(1 << b), a):
            key = (a, _canonical_rows(rows, b))
            if key in seen:
                continue
            seen.add(key)
            edges = [(i, a + j) for i, r in enumerate(rows) for j in bits(r)]
            g = Graph(n, edges)
            if family is None or validate_family(g, family):
                yield g


# -- formulas ----------------------------------------------------------------


def _clause(rng: SplitMix64, n_vars: int, size: int, sign: int | None) -> tuple[int, ...]:
    vars_ = rng.sample(n_vars, size)
    return tuple((v + 1) * (sign if sign is not None else (1 if rng.chance(0.5) else -1)) for v in vars_)


def _dsat_compatible(c: tuple[int, ...], chosen: list[tuple[int, ...]]) -> bool:
    a = set(c)
    for other in chosen:
        b = set(other)
        shared = a & b
        if len(shared) > 1:
            return False
        if shared and any(-l in b for l in a):
            return False
    return True


def random_dsat(n_vars: int, n_clauses: int, seed: int, max_rejections: int = 10_000) -> CnfInstance:
    """Random DSAT instance built clause by clause.

    Each proposal has 2 or 3 literals over distinct variables with random
    signs; it is dropped if it breaks a DSAT condition against the clauses
    already accepted.
    """
    if n_clauses and n_vars < 2:
        raise GenerationError("DSAT clauses need at least 2 variables")
    rng = SplitMix64(seed)
    chosen: list[tuple[int, ...]] = []
    rejected = 0
    while len(chosen) < n_clauses:
        if rejected >= max_rejections:
            raise GenerationError(f"accepted only {len(chosen)} of {n_clauses} DSAT clauses after {rejected} rejections")
        size = 2 + rng.below(2) if n_vars >= 3 else 2
        c = _clause(rng, n_vars, size, None)
        if _dsat_compatible(c, chosen):
            chosen.append(c)
        else:
            rejected += 1
    inst = CnfInstance(n_vars, tuple(chosen), (), Kind.DSAT)
    report = validate(inst)
    if not report:
        raise GenerationError("generated DSAT instance failed validation: " + "; ".join(report.violations))
    return inst


def random_monotone(n_vars: int, n_pos: int, n_neg: int, seed: int, max_size: int = 3) -> CnfInstance:
    """Random MONOTONE instance: ``n_pos`` all-positive and ``n_neg`` all-negative clauses of 1..max_size literals."""
    if n_vars < 1 and n_pos + n_neg:
        raise GenerationError("clauses need at least one variable")
    rng = SplitMix64(seed)
    top = min(max_size, n_vars)
    c1 = tuple(_clause(rng, n_vars, 1 + rng.below(top), 1) for _ in range(n_pos))
    c2 = tuple(_clause(rng, n_vars, 1 + rng.below(top), -1) for _ in range(n_neg))
    return CnfInstance(n_vars, c1, c2, Kind.MONOTONE)


# -- corpora -----------------------------------------------------------------


def write_corpus(graphs, directory, config: dict) -> dict:
    """Write ``graphs`` as ``g00000.json ...`` plus ``manifest.json`` with SHA-256 checksums."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    files = []
    for i, g in enumerate(graphs):
        name = f"g{i:05d}.json"
        data = (json.dumps(graph_to_json(g), sort_keys=True) + "\n").encode()
        (out / name).write_bytes(data)
        files.append({"file": name, "n": g.n, "m": g.num_edges(), "sha256": hashlib.sha256(data).hexdigest()})
    manifest = {"config": config, "count": len(files), "files": files}
    (out / "manifest.json").write_text(json.dumps(manifest, indent=1, sort_keys=True) + "\n")
    return manifest
