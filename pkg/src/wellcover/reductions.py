"""Constructive reductions from restricted SAT variants to generating-subgraph instances.

Vertex numbering of the graph constructions (labels in brackets):

``dmsat_to_gs``
    ``x`` = 0, then ``y_1..y_m``, ``v_1..v_m``, ``v'_1..v'_m'``,
    ``u_1..u_n``, ``u'_1..u'_n``.  ``B`` is the star ``({x}, {y_j})``.
``monotone_to_gs``
    ``z`` = 0, ``y_1`` = 1, ``y_2`` = 2, then ``v_j``, ``v'_j``, ``u_i``,
    ``u'_i``.  ``B`` is ``({z}, {y_1, y_2})``.
``extend_to_kpq``
    appends ``z_2..z_p`` and ``y_3..y_q``; ``B`` becomes ``K_{p,q}`` with the
    ``z`` vertices on the first side.

In every construction a satisfying assignment maps to the witness
``{u_i : x_i true} | {u'_i : x_i false}`` and back.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cnf import Assignment, CnfError, CnfInstance, Kind, validate
from .graph import Graph, graph_from_json, graph_to_json

__all__ = [
    "ReductionError",
    "ReductionArtifact",
    "dsat_to_dmsat",
    "dmsat_to_gs",
    "monotone_to_gs",
    "extend_to_kpq",
    "assignment_to_witness",
    "witness_to_assignment",
    "artifact_to_json",
    "artifact_from_json",
]


class ReductionError(CnfError):
    pass


def _require(inst: CnfInstance, kind: Kind) -> None:
    report = validate(inst, kind)
    if not report:
        raise ReductionError(f"input is not a valid {kind.value} instance: " + "; ".join(report.violations))


def dsat_to_dmsat(inst: CnfInstance) -> CnfInstance:
    """Replace each negative literal of x_i by a fresh z_i (variable ``n + i``).

    The output clauses are the rewritten clauses, then ``(x_i, z_i)`` for
    every ``i``, all in ``c1``; ``c2`` holds ``(-x_i, -z_i)``.
    """
    _require(inst, Kind.DSAT)
    n = inst.n_vars
    rewritten = tuple(tuple(l if l > 0 else n - l for l in c) for c in inst.c1)
    d = tuple((i, n + i) for i in range(1, n + 1))
    e = tuple((-i, -(n + i)) for i in range(1, n + 1))
    out = CnfInstance(2 * n, rewritten + d, e, Kind.DMSAT)
    report = validate(out, Kind.DMSAT)
    assert report, report.violations
    return out


@dataclass(frozen=True)
class ReductionArtifact:
    graph: Graph
    bx: frozenset[int]
    by: frozenset[int]
    u: tuple[int, ...]
    u_prime: tuple[int, ...]
    construction: str  # "dmsat" | "monotone" | "kpq"
    params: dict = field(default_factory=dict, compare=False)

    @property
    def labels(self) -> dict[int, str]:
        return self.graph.labels

    @property
    def n_vars(self) -> int:
        return len(self.u)


def dmsat_to_gs(inst: CnfInstance) -> ReductionArtifact:
    """Bipartite graph of girth >= 6 in which ``B`` is generating iff ``inst`` is satisfiable."""
    _require(inst, Kind.DMSAT)
    n, m, mp = inst.n_vars, len(inst.c1), len(inst.c2)
    if m == 0:
        raise ReductionError("the construction needs at least one clause in c1 (B would have an empty side)")
    x = 0
    y = [1 + j for j in range(m)]
    v = [1 + m + j for j in range(m)]
    vp = [1 + 2 * m + j for j in range(mp)]
    u = [1 + 2 * m + mp + i for i in range(n)]
    up = [1 + 2 * m + mp + n + i for i in range(n)]
    edges = [(x, yj) for yj in y]
    edges += [(y[j], v[j]) for j in range(m)]
    edges += [(x, vj) for vj in vp]
    edges += [(v[j], u[l - 1]) for j, c in enumerate(inst.c1) for l in c]
    edges += [(vp[j], up[-l - 1]) for j, c in enumerate(inst.c2) for l in c]
    edges += [(u[i], up[i]) for i in range(n)]
    labels = {x: "x"}
    labels.update({y[j]: f"y_{j + 1}" for j in range(m)})
    labels.update({v[j]: f"v_{j + 1}" for j in range(m)})
    labels.update({vp[j]: f"v'_{j + 1}" for j in range(mp)})
    labels.update({u[i]: f"u_{i + 1}" for i in range(n)})
    labels.update({up[i]: f"u'_{i + 1}" for i in range(n)})
    g = Graph(1 + 2 * m + mp + 2 * n, edges, labels)
    return ReductionArtifact(g, frozenset([x]), frozenset(y), tuple(u), tuple(up), "dmsat")


def monotone_to_gs(inst: CnfInstance) -> ReductionArtifact:
    """Graph without 3- or 5-cycles where ``K_{1,2}`` is generating iff ``inst`` is satisfiable."""
    _require(inst, Kind.MONOTONE)
    n, m, mp = inst.n_vars, len(inst.c1), len(inst.c2)
    z, y1, y2 = 0, 1, 2
    v = [3 + j for j in range(m)]
    vp = [3 + m + j for j in range(mp)]
    u = [3 + m + mp + i for i in range(n)]
    up = [3 + m + mp + n + i for i in range(n)]
    edges = [(z, y1), (z, y2)]
    edges += [(y1, vj) for vj in v]
    edges += [(y2, vj) for vj in vp]
    edges += [(v[j], u[l - 1]) for j, c in enumerate(inst.c1) for l in c]
    edges += [(vp[j], up[-l - 1]) for j, c in enumerate(inst.c2) for l in c]
    edges += [(u[i], up[i]) for i in range(n)]
    labels = {z: "z", y1: "y_1", y2: "y_2"}
    labels.update({v[j]: f"v_{j + 1}" for j in range(m)})
    labels.update({vp[j]: f"v'_{j + 1}" for j in range(mp)})
    labels.update({u[i]: f"u_{i + 1}" for i in range(n)})
    labels.update({up[i]: f"u'_{i + 1}" for i in range(n)})
    g = Graph(3 + m + mp + 2 * n, edges, labels)
    return ReductionArtifact(g, frozenset([z]), frozenset([y1, y2]), tuple(u), tuple(up), "monotone")


def extend_to_kpq(art: ReductionArtifact, p: int, q: int) -> ReductionArtifact:
    """Grow the ``K_{1,2}`` of a monotone artifact into ``K_{p,q}`` (``p >= 1``, ``q >= 2``).

    The side containing ``z`` gets ``p`` vertices and the side containing
    ``y_1, y_2`` gets ``q``, so ``(1, 2)`` leaves the artifact unchanged.
    """
    if art.construction != "monotone":
        raise ReductionError("extend_to_kpq applies to monotone_to_gs artifacts only")
    if p < 1 or q < 2:
        raise ReductionError(f"need p >= 1 and q >= 2, got p={p}, q={q}")
    g = art.graph
    n0 = g.n
    zs = [0] + [n0 + j for j in range(p - 1)]
    ys = [1, 2] + [n0 + p - 1 + i for i in range(q - 2)]
    labels = g.labels
    labels.update({zs[j]: f"z_{j + 1}" for j in range(1, p)})
    labels.update({ys[i]: f"y_{i + 1}" for i in range(2, q)})
    edges = g.edges() + [(yi, zj) for yi in ys for zj in zs]
    h = Graph(n0 + (p - 1) + (q - 2), edges, labels)
    return ReductionArtifact(h, frozenset(zs), frozenset(ys), art.u, art.u_prime, "kpq", {"p": p, "q": q})


def assignment_to_witness(art: ReductionArtifact, assignment: Assignment) -> frozenset[int]:
    if len(assignment) != art.n_vars:
        raise ReductionError(f"assignment has {len(assignment)} values, instance has {art.n_vars} variables")
    return frozenset(art.u[i] if val else art.u_prime[i] for i, val in enumerate(assignment.values))


def witness_to_assignment(art: ReductionArtifact, witness) -> Assignment:
    s = set(witness)
    return Assignment(tuple(ui in s for ui in art.u))


def artifact_to_json(art: ReductionArtifact) -> dict:
    out = graph_to_json(art.graph)
    out.update(
        {
            "bx": sorted(art.bx),
            "by": sorted(art.by),
            "u": list(art.u),
            "u_prime": list(art.u_prime),
            "construction": art.construction,
        }
    )
    if art.params:
        out["params"] = dict(art.params)
    return out


def artifact_from_json(obj: dict) -> ReductionArtifact:
    g = graph_from_json(obj)
    return ReductionArtifact(
        g,
        frozenset(obj["bx"]),
        frozenset(obj["by"]),
        tuple(obj.get("u", ())),
        tuple(obj.get("u_prime", ())),
        obj.get("construction", "dmsat"),
        dict(obj.get("params", {})),
    )
