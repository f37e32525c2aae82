"""Simple undirected graphs over dense integer vertex ids.

Vertex sets are handled two ways.  The public functions accept any iterable
of vertex ids and return ``frozenset`` objects; internally every set is an
``int`` bit mask (bit ``v`` set iff vertex ``v`` is a member), which keeps
the set algebra used by the recognition algorithms at one machine word per
64 vertices.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator

__all__ = [
    "Graph",
    "GraphError",
    "FamilySpec",
    "FamilyCheck",
    "FamilyViolation",
    "Violation",
    "FAMILIES",
    "MAX_CYCLE_LENGTH",
    "bits",
    "mask_of",
    "members",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "star_graph",
    "complete_bipartite_graph",
    "empty_graph",
    "neighborhood_layer",
    "distance_layers",
    "is_independent",
    "dominates",
    "bipartition",
    "contains_cycle_of_length",
    "find_cycle_of_length",
    "girth",
    "find_any_cycle",
    "validate_family",
    "require_family",
    "get_family",
    "is_induced_complete_bipartite",
    "leaves",
    "s_x",
    "components",
    "graph_to_json",
    "graph_from_json",
    "read_graph",
    "write_graph",
    "parse_edge_list",
]

MAX_CYCLE_LENGTH = 8


class GraphError(ValueError):
    """Malformed graph or an operation applied outside its domain."""


class FamilyViolation(GraphError):
    """A graph is outside the family an algorithm is proved correct for."""

    def __init__(self, message: str, check: "FamilyCheck | None" = None):
        super().__init__(message)
        self.check = check


# -- bit-set helpers ---------------------------------------------------------


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    return frozenset(bits(mask))


# -- the graph type ----------------------------------------------------------


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Undirected edges.  Repeated edges collapse; self-loops and ids out of
        range raise :class:`GraphError`.
    labels : dict, optional
        Display names for some vertices.  Never used by any algorithm.
    """

    __slots__ = ("_n", "_adj", "_labels", "_cache")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        adj = [0] * n
        for e in edges:
            u, v = (int(x) for x in e)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self._n = n
        self._adj = tuple(adj)
        self._labels = {int(k): str(s) for k, s in (labels or {}).items()}
        for k in self._labels:
            if not 0 <= k < n:
                raise GraphError(f"label for unknown vertex {k}")
        self._cache = {}

    @classmethod
    def from_masks(cls, adj: Iterable[int], labels=None) -> "Graph":
        """Build from per-vertex neighbour masks (checked for symmetry)."""
        adj = tuple(adj)
        n = len(adj)
        full = (1 << n) - 1
        for v, m in enumerate(adj):
            if m & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if m >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in bits(m):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        g = cls.__new__(cls)
        g._n = n
        g._adj = adj
        g._labels = dict(labels or {})
        g._cache = {}
        return g

    @property
    def n(self) -> int:
        return self._n

    @property
    def adj(self) -> tuple[int, ...]:
        """Neighbour bit masks, one per vertex."""
        return self._adj

    @property
    def labels(self) -> dict[int, str]:
        return dict(self._labels)

    @property
    def full_mask(self) -> int:
        return (1 << self._n) - 1

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, v: int) -> frozenset[int]:
        return members(self._adj[v])

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as ``(u, v)`` with ``u < v``, lexicographically sorted."""
        return [(u, v) for u in range(self._n) for v in bits(self._adj[u] >> (u + 1) << (u + 1))]

    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def label(self, v: int) -> str:
        return self._labels.get(v, str(v))

    def vertex_by_label(self, name: str) -> int:
        for v, s in self._labels.items():
            if s == name:
                return v
        raise KeyError(name)

    def with_labels(self, labels) -> "Graph":
        return Graph.from_masks(self._adj, labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={self.edges()})"


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def star_graph(k: int) -> Graph:
    """Centre 0 joined to leaves ``1..k``."""
    return Graph(k + 1, [(0, i) for i in range(1, k + 1)])


def complete_bipartite_graph(p: int, q: int) -> Graph:
    return Graph(p + q, [(u, p + v) for u in range(p) for v in range(q)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


# -- distances and layers ----------------------------------------------------


def distance_layers(g: Graph, s: Iterable[int] | int) -> Iterator[int]:
    """Yield the masks ``N_0(S), N_1(S), ...`` until no new vertex is reached."""
    smask = s if isinstance(s, int) else mask_of(s)
    if not smask:
        raise GraphError("distance to the empty set is undefined")
    adj = g.adj
    seen = frontier = smask
    yield frontier
    while True:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= ~seen
        if not nxt:
            return
        seen |= nxt
        frontier = nxt
        yield nxt


def layer_mask(g: Graph, smask: int, i: int, closed: bool = False) -> int:
    if i < 0:
        raise GraphError(f"distance must be nonnegative, got {i}")
    acc = 0
    for d, layer in enumerate(distance_layers(g, smask)):
        if d > i:
            break
        if closed:
            acc |= layer
        elif d == i:
            return layer
    return acc


def neighborhood_layer(g: Graph, s: Iterable[int], i: int, closed: bool = False) -> frozenset[int]:
    """Vertices at distance exactly ``i`` from ``s`` (or at most ``i`` if ``closed``).

    Raises
    ------
    GraphError
        If ``s`` is empty; the distance to an empty set is not defined.
    """
    return members(layer_mask(g, mask_of(s), i, closed))


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    m = mask_of(s)
    adj = g.adj
    return all(not (adj[v] & m) for v in bits(m))


def closed_neighborhood_mask(g: Graph, m: int) -> int:
    acc = m
    for v in bits(m):
        acc |= g.adj[v]
    return acc


def open_neighborhood_mask(g: Graph, m: int) -> int:
    """Union of ``N(v)`` over ``v`` in ``m`` (may intersect ``m`` itself)."""
    acc = 0
    for v in bits(m):
        acc |= g.adj[v]
    return acc


def dominates(g: Graph, s: Iterable[int], t: Iterable[int]) -> bool:
    """True iff every vertex of ``t`` lies in ``N[s]``."""
    t_mask = mask_of(t)
    return not (t_mask & ~closed_neighborhood_mask(g, mask_of(s)))


def components(g: Graph) -> list[frozenset[int]]:
    return [members(m) for m in component_masks(g)]


def component_masks(g: Graph) -> list[int]:
    left = g.full_mask
    out = []
    while left:
        start = left & -left
        comp = 0
        for layer in distance_layers(g, start):
            comp |= layer
        out.append(comp)
        left &= ~comp
    return out


# -- bipartiteness -----------------------------------------------------------


def _two_colour(g: Graph):
    """BFS two-colouring; returns (colour, None) or (None, odd cycle)."""
    colour = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return None, _tree_cycle(parent, depth, u, w)
    return colour, None


def _tree_cycle(parent, depth, u, w):
    left, right = [u], [w]
    a, b = u, w
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    right.pop()
    return left + right[::-1]


def bipartition(g: Graph) -> tuple[frozenset[int], frozenset[int]] | None:
    """A two-colouring ``(side0, side1)`` or ``None`` when ``g`` has an odd cycle.

    Each component's lowest vertex is placed on side 0.
    """
    colour, _ = _two_colour(g)
    if colour is None:
        return None
    return (
        frozenset(v for v in range(g.n) if colour[v] == 0),
        frozenset(v for v in range(g.n) if colour[v] == 1),
    )


# -- cycles ------------------------------------------------------------------


def _bounded_distances(adj, src: int, allowed: int, limit: int) -> dict[int, int]:
    dist = {src: 0}
    frontier = 1 << src
    seen = frontier
    for d in range(1, limit + 1):
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        if not nxt:
            break
        for v in bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def _cycle_through(adj, s: int, k: int, allowed: int) -> list[int] | None:
    """A k-cycle through ``s`` whose other vertices lie in ``allowed``."""
    dist = _bounded_distances(adj, s, allowed, k)
    far = k + 1
    path = [s]

    def extend(v: int, visited: int, remaining: int) -> bool:
        # ``remaining`` edges still to place, the last one closing back to s
        if remaining == 1:
            return bool(adj[v] >> s & 1)
        for w in bits(adj[v] & allowed & ~visited):
            if dist.get(w, far) <= remaining - 1:
                path.append(w)
                if extend(w, visited | (1 << w), remaining - 1):
                    return True
                path.pop()
        return False

    return path if extend(s, 1 << s, k) else None


def find_cycle_of_length(g: Graph, k: int) -> list[int] | None:
    """Vertices of some (not necessarily induced) ``k``-cycle, or ``None``.

    The search is an exhaustive simple-path DFS rooted at the smallest vertex
    of the cycle, pruned by BFS distance back to the root; ``3 <= k <= 8``.
    """
    if not 3 <= k <= MAX_CYCLE_LENGTH:
        raise GraphError(f"cycle length must be in 3..{MAX_CYCLE_LENGTH}, got {k}")
    adj = g.adj
    full = g.full_mask
    for s in range(g.n):
        allowed = full & ~((1 << (s + 1)) - 1)
        if (adj[s] & allowed).bit_count() < 2:
            continue
        cyc = _cycle_through(adj, s, k, allowed)
        if cyc is not None:
            return cyc
    return None


def contains_cycle_of_length(g: Graph, k: int) -> bool:
    return find_cycle_of_length(g, k) is not None


def find_any_cycle(g: Graph) -> list[int] | None:
    """Some cycle of ``g`` (closed by a non-tree BFS edge), or ``None`` for a forest."""
    parent = [-1] * g.n
    depth = [-1] * g.n
    for root in range(g.n):
        if depth[root] >= 0:
            continue
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in bits(g.adj[u]):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    return _tree_cycle(parent, depth, u, w)
    return None


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    best = math.inf
    adj = g.adj
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for w in bits(adj[u]):
                if w not in dist:
                    dist[w] = dist[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    best = min(best, dist[u] + dist[w] + 1)
    return best


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Graph family given by forbidden (not necessarily induced) cycle lengths.

    ``min_girth`` is capped at ``MAX_CYCLE_LENGTH + 1`` so that a violation can
    always be exhibited by the bounded cycle search.
    """

    forbidden_cycle_lengths: frozenset[int] = frozenset()
    require_bipartite: bool = False
    min_girth: int | None = None
    acyclic: bool = False
    name: str = field(default="", compare=False)

    def __post_init__(self):
        lengths = frozenset(int(k) for k in self.forbidden_cycle_lengths)
        object.__setattr__(self, "forbidden_cycle_lengths", lengths)
        for k in lengths:
            if not 3 <= k <= MAX_CYCLE_LENGTH:
                raise GraphError(f"forbidden cycle length {k} outside 3..{MAX_CYCLE_LENGTH}")
        if self.min_girth is not None and not 3 <= self.min_girth <= MAX_CYCLE_LENGTH + 1:
            raise GraphError(f"min_girth {self.min_girth} outside 3..{MAX_CYCLE_LENGTH + 1}")

    def describe(self) -> str:
        if self.name:
            return self.name
        parts = []
        if self.require_bipartite:
            parts.append("bipartite")
        if self.forbidden_cycle_lengths:
            parts.append("no C" + ",C".join(str(k) for k in sorted(self.forbidden_cycle_lengths)))
        if self.min_girth is not None:
            parts.append(f"girth >= {self.min_girth}")
        if self.acyclic:
            parts.append("acyclic")
        return ", ".join(parts) or "all graphs"

    def forbidden_lengths(self) -> frozenset[int]:
        """Every cycle length excluded by this spec, girth and parity included."""
        out = set(self.forbidden_cycle_lengths)
        if self.min_girth is not None:
            out.update(range(3, self.min_girth))
        if self.require_bipartite:
            out.update(range(3, MAX_CYCLE_LENGTH + 1, 2))
        if self.acyclic:
            out.update(range(3, MAX_CYCLE_LENGTH + 1))
        return frozenset(out)

    def to_json(self) -> dict:
        return {
            "forbidden_cycle_lengths": sorted(self.forbidden_cycle_lengths),
            "require_bipartite": self.require_bipartite,
            "min_girth": self.min_girth,
            "acyclic": self.acyclic,
        }


FAMILIES: dict[str, FamilySpec] = {
    "any": FamilySpec(name="any"),
    "bip-c6free": FamilySpec(frozenset({6}), require_bipartite=True, name="bip-c6free"),
    "bip-c4c6free": FamilySpec(frozenset({4, 6}), require_bipartite=True, name="bip-c4c6free"),
    "bip-girth6": FamilySpec(require_bipartite=True, min_girth=6, name="bip-girth6"),
    "c3457free": FamilySpec(frozenset({3, 4, 5, 7}), name="c3457free"),
    "c35free": FamilySpec(frozenset({3, 5}), name="c35free"),
    "forest": FamilySpec(acyclic=True, name="forest"),
}


def get_family(name: str) -> FamilySpec:
    try:
        return FAMILIES[name]
    except KeyError:
        raise GraphError(f"unknown family {name!r}; known: {', '.join(sorted(FAMILIES))}") from None


@dataclass(frozen=True)
class Violation:
    kind: str  # "forbidden-cycle" | "odd-cycle" | "girth" | "cycle"
    message: str
    cycle: tuple[int, ...]

    def to_json(self) -> dict:
        return {"kind": self.kind, "message": self.message, "cycle": list(self.cycle)}


@dataclass(frozen=True)
class FamilyCheck:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": [v.to_json() for v in self.violations]}


def validate_family(g: Graph, spec: FamilySpec) -> FamilyCheck:
    """Check every condition of ``spec`` and report each one that fails."""
    found = []
    for k in sorted(spec.forbidden_cycle_lengths):
        cyc = find_cycle_of_length(g, k)
        if cyc is not None:
            found.append(Violation("forbidden-cycle", f"contains a {k}-cycle", tuple(cyc)))
    if spec.require_bipartite:
        _, odd = _two_colour(g)
        if odd is not None:
            found.append(Violation("odd-cycle", f"not bipartite: odd cycle of length {len(odd)}", tuple(odd)))
    if spec.min_girth is not None:
        gi = girth(g)
        if gi < spec.min_girth:
            cyc = find_cycle_of_length(g, int(gi))
            found.append(Violation("girth", f"girth {gi} < {spec.min_girth}", tuple(cyc)))
    if spec.acyclic:
        cyc = find_any_cycle(g)
        if cyc is not None:
            found.append(Violation("cycle", f"not a forest: contains a {len(cyc)}-cycle", tuple(cyc)))
    return FamilyCheck(not found, tuple(found))


def require_family(g: Graph, spec: FamilySpec) -> None:
    """Raise :class:`FamilyViolation` unless ``g`` is in ``spec``; cached per graph."""
    key = ("family", spec)
    check = g._cache.get(key)
    if check is None:
        check = validate_family(g, spec)
        g._cache[key] = check
    if not check.ok:
        msgs = "; ".join(v.message for v in check.violations)
        raise FamilyViolation(f"graph is not in family {spec.describe()}: {msgs}", check)


def is_induced_complete_bipartite(g: Graph, bx: Iterable[int], by: Iterable[int]) -> bool:
    x, y = mask_of(bx), mask_of(by)
    if not x or not y or x & y:
        return False
    adj = g.adj
    if any(adj[v] & x for v in bits(x)) or any(adj[v] & y for v in bits(y)):
        return False
    return all(adj[v] & y == y for v in bits(x))


# -- leaves ------------------------------------------------------------------


def leaf_mask(g: Graph) -> int:
    return mask_of(v for v in range(g.n) if g.adj[v].bit_count() == 1)


def leaves(g: Graph) -> frozenset[int]:
    """Vertices of degree exactly one."""
    return members(leaf_mask(g))


def s_x(g: Graph, x: int) -> frozenset[int]:
    """Neighbours of ``x`` that are not adjacent to any leaf.

    Only defined for vertices of degree at least two.
    """
    if g.adj[x].bit_count() < 2:
        raise GraphError(f"s_x is defined for non-leaf vertices of degree >= 2; vertex {x} has degree {g.degree(x)}")
    near_leaves = open_neighborhood_mask(g, leaf_mask(g))
    return members(g.adj[x] & ~near_leaves)


# -- serialisation -----------------------------------------------------------


def graph_to_json(g: Graph) -> dict:
    out = {"n": g.n, "edges": [list(e) for e in g.edges()]}
    if g.labels:
        out["labels"] = {str(k): v for k, v in sorted(g.labels.items())}
    return out


def graph_from_json(obj: dict) -> Graph:
    try:
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj.get("edges", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    labels = {int(k): v for k, v in (obj.get("labels") or {}).items()}
    return Graph(n, edges, labels)


def parse_edge_list(text: str) -> Graph:
    """Parse ``n m`` followed by ``m`` lines of ``u v``; ``#`` starts a comment."""
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list must start with an 'n m' header line")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (ValueError, IndexError) as exc:
        raise GraphError(f"malformed edge list: {exc}") from exc
    if any(len(r) != 2 for r in rows[1:]):
        raise GraphError("every edge line needs exactly two vertex ids")
    if len(edges) != m:
        raise GraphError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def read_graph(path) -> Graph:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise GraphError(f"malformed graph JSON: {exc}") from exc
        return graph_from_json(obj)
    return parse_edge_list(text)


def write_graph(g: Graph, path) -> None:
    Path(path).write_text(json.dumps(graph_to_json(g)) + "\n")
