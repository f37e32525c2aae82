"""``wellcover`` command-line entry point.

Every subcommand writes one JSON document to standard output and
diagnostics to standard error.  Exit status: 0 success, 1 domain or input
error (messages prefixed ``domain error:`` / ``input error:``), 2 usage
error (prefixed ``usage error:``).  ``validate`` and ``verify`` also exit 1
when the checked object is invalid or a report has unexpected
disagreements.

Oracle size caps come from ``WELLCOVER_MAX_VERTICES`` and
``WELLCOVER_MAX_VARS`` (both default 24).
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import algorithms as alg
from . import oracles
from .cnf import CnfError, Kind, cnf_to_json, read_cnf, validate
from .graph import (
    FAMILIES,
    Graph,
    GraphError,
    get_family,
    graph_to_json,
    mask_of,
    members,
    open_neighborhood_mask,
    read_graph,
    validate_family,
)
from .lab import (
    GenerationError,
    GeneratorConfig,
    enumerate_bipartite_graphs,
    enumerate_small_graphs,
    family_graph_stream,
    random_dsat,
    random_family_graph,
    random_tree,
    write_corpus,
)
from .reductions import (
    ReductionError,
    artifact_from_json,
    artifact_to_json,
    dmsat_to_gs,
    dsat_to_dmsat,
    extend_to_kpq,
    monotone_to_gs,
)
from .verify import SUITES, reproduce_worked_examples, run_suite
from .weightspace import basis_to_json, nullspace, system_to_json

__all__ = ["main", "build_parser", "InputError"]

DOMAIN_ERRORS = (GraphError, CnfError, GenerationError, oracles.CapExceeded, ReductionError)


class InputError(Exception):
    """Unreadable or malformed input file."""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- input helpers -------------------------------------------------------------


def _load_graph(path) -> Graph:
    if path is None:
        raise UsageError("--graph FILE is required")
    try:
        return read_graph(path)
    except OSError as exc:
        raise InputError(f"cannot read graph file {path}: {exc.strerror or exc}") from exc
    except (GraphError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed graph file {path}: {exc}") from exc


def _load_cnf(path, kind=None):
    if path is None:
        raise UsageError("--cnf FILE (or --in FILE) is required")
    try:
        return read_cnf(path, kind)
    except OSError as exc:
        raise InputError(f"cannot read CNF file {path}: {exc.strerror or exc}") from exc
    except (CnfError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"malformed CNF file {path}: {exc}") from exc


def _load_json(path) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _vertex(g: Graph, token: str) -> int:
    token = token.strip()
    if token.lstrip("-").isdigit():
        v = int(token)
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} outside 0..{g.n - 1}")
        return v
    try:
        return g.vertex_by_label(token)
    except (KeyError, GraphError) as exc:
        raise GraphError(f"no vertex labelled {token!r}") from exc


def _vertex_list(g: Graph, text, flag: str) -> list[int]:
    if text is None:
        raise UsageError(f"{flag} LIST is required")
    return [_vertex(g, t) for t in text.split(",") if t.strip()]


def _one_vertex(g: Graph, text, flag: str) -> int:
    if text is None:
        raise UsageError(f"{flag} VERTEX is required")
    return _vertex(g, text)


def _family(name):
    return get_family(name) if name else None


def _sorted(s) -> list[int]:
    return sorted(s)


def _space_json(system) -> dict:
    basis = nullspace(system)
    return {"system": system_to_json(system), "dimension": basis.dimension, "basis": basis_to_json(basis)["basis"]}


def _trace(args, text: str) -> None:
    if args.trace:
        print(text, file=sys.stderr)


# -- commands ----------------------------------------------------------------


def cmd_generating(args):
    g = _load_graph(args.graph)
    bx, by = _vertex_list(g, args.bx, "--bx"), _vertex_list(g, args.by, "--by")
    result = alg.generating_bip_c6free(g, bx, by, unchecked=args.unchecked)
    if args.trace:
        b = mask_of(bx) | mask_of(by)
        d = open_neighborhood_mask(g, b)
        d1 = d & ~b
        lines = [f"D = {_sorted(members(d))}", f"D1 = {_sorted(members(d1))}"]
        for v in _sorted(members(d1)):
            escape = g.adj[v] & ~d
            lines.append(f"  {g.label(v)}: N(v) - D = {_sorted(members(escape))}")
        _trace(args, "\n".join(lines))
    return {"generating": result}


def cmd_maxgen1(args):
    g = _load_graph(args.graph)
    x = _one_vertex(g, args.x, "--x")
    t = alg.maxgen1(g, x, unchecked=args.unchecked)
    if args.trace:
        _trace(args, alg.decompose(g, [x]).trace(g))
    return {"x": x, "T": _sorted(t)}


def cmd_maxgen2(args):
    g = _load_graph(args.graph)
    x1, x2 = _one_vertex(g, args.x1, "--x1"), _one_vertex(g, args.x2, "--x2")
    t = alg.maxgen2(g, x1, x2, unchecked=args.unchecked)
    if args.trace and not g.has_edge(x1, x2) and x1 != x2:
        _trace(args, alg.decompose(g, [x1, x2]).trace(g))
    return {"x1": x1, "x2": x2, "T": _sorted(t)}


def cmd_wcw(args):
    g = _load_graph(args.graph)
    return _space_json(alg.wcw_bip_c6free(g, unchecked=args.unchecked))


def cmd_well_covered(args):
    g = _load_graph(args.graph)
    return {"well_covered": alg.well_covered_bip_c6free(g, unchecked=args.unchecked)}


def cmd_wcw_leaf(args):
    g = _load_graph(args.graph)
    system = alg.wcw_leaf_characterization(g, unchecked=args.unchecked)
    if args.trace:
        prof = alg.leaf_profile(g)
        _trace(args, f"L(G) = {_sorted(prof.leaves)}\nN(L(G)) = {_sorted(prof.leaf_neighbors)}")
    return _space_json(system)


def cmd_relating_edge(args):
    g = _load_graph(args.graph)
    u, v = _one_vertex(g, args.u, "--u"), _one_vertex(g, args.v, "--v")
    return {"u": u, "v": v, "relating": alg.relating_edge(g, u, v)}


def cmd_oracle(args):
    what = args.what
    if what == "sat":
        inst = _load_cnf(args.cnf)
        a = oracles.sat_bruteforce(inst)
        return {
            "satisfiable": a is not None,
            "assignment": None if a is None else list(a.values),
            "true_vars": None if a is None else a.true_vars(),
        }
    g = _load_graph(args.graph)
    if what == "mis":
        mis = oracles.enumerate_mis(g)
        return {"count": len(mis), "sizes": sorted(mis.sizes()), "sets": [_sorted(s) for s in mis]}
    if what == "wc":
        return {"well_covered": oracles.is_well_covered_oracle(g)}
    if what == "wcw":
        return _space_json(oracles.wcw_oracle(g))
    bx, by = _vertex_list(g, args.bx, "--bx"), _vertex_list(g, args.by, "--by")
    cert = oracles.generating_oracle(g, bx, by)
    return {"generating": cert is not None, "certificate": None if cert is None else cert.to_json()}


def _artifact_input(args):
    src = args.cnf
    if src is None:
        raise UsageError("--in FILE is required")
    obj = _load_json(src) if str(src).endswith(".json") else None
    if obj is not None and "construction" in obj:
        try:
            return artifact_from_json(obj)
        except (GraphError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed artifact file {src}: {exc}") from exc
    return monotone_to_gs(_load_cnf(src, Kind.MONOTONE))


def cmd_reduce(args):
    how = args.how
    if how == "extend-kpq":
        if args.p is None or args.q is None:
            raise UsageError("--p and --q are required")
        return artifact_to_json(extend_to_kpq(_artifact_input(args), args.p, args.q))
    if how == "dsat-to-dmsat":
        return cnf_to_json(dsat_to_dmsat(_load_cnf(args.cnf, Kind.DSAT)))
    if how == "dmsat-to-gs":
        return artifact_to_json(dmsat_to_gs(_load_cnf(args.cnf, Kind.DMSAT)))
    return artifact_to_json(monotone_to_gs(_load_cnf(args.cnf, Kind.MONOTONE)))


def cmd_validate(args):
    if args.what == "family":
        g = _load_graph(args.graph)
        if not args.family:
            raise UsageError("--family NAME is required")
        fam = get_family(args.family)
        out = {"family": fam.describe(), **validate_family(g, fam).to_json()}
    else:
        inst = _load_cnf(args.cnf, args.kind)
        kind = Kind(args.kind) if args.kind else inst.kind
        out = {"kind": kind.value, **validate(inst, kind).to_json()}
    args.status = 0 if out["valid"] else 1
    return out


def cmd_gen(args):
    what = args.what
    seed = args.seed
    if what == "tree":
        return graph_to_json(random_tree(args.n if args.n is not None else 8, seed))
    if what == "dsat":
        return cnf_to_json(random_dsat(args.vars, args.clauses, seed))
    fam = _family(args.family) or get_family("any")
    if what == "graph":
        cfg = GeneratorConfig(seed=seed, n=args.n if args.n is not None else 8, p=args.p, family=fam)
        return graph_to_json(random_family_graph(cfg))
    # enum: a corpus directory with a manifest
    if args.out is None:
        raise UsageError("gen enum needs --out DIR")
    n = args.n if args.n is not None else 6
    if args.count is not None:
        cfg = GeneratorConfig(seed=seed, n=n, p=args.p, family=fam)
        stream = family_graph_stream(cfg)
        graphs = [next(stream) for _ in range(args.count)]
        config = {"mode": "random", **cfg.to_json(), "count": args.count}
    elif args.labeled or not fam.require_bipartite:
        graphs = list(enumerate_small_graphs(n, fam))
        config = {"mode": "labeled", "n": n, "family": fam.describe(), "family_spec": fam.to_json(), "seed": seed}
    else:
        graphs = list(enumerate_bipartite_graphs(n, fam))
        config = {"mode": "bipartite-classes", "n": n, "family": fam.describe(), "family_spec": fam.to_json(), "seed": seed}
    manifest = write_corpus(graphs, args.out, config)
    return {"directory": str(args.out), "count": manifest["count"], "config": config}


def cmd_verify(args):
    fam = _family(args.family)
    report = run_suite(args.suite, n=args.n, count=args.count, seed=args.seed, family=fam, jobs=args.jobs)
    args.status = 0 if report.ok else 1
    print(
        f"{report.suite}: {report.agreements}/{report.total} agree, "
        f"{len(report.unexpected)} unexpected disagreements",
        file=sys.stderr,
    )
    return report.to_json(records=args.records)


def cmd_reproduce(args):
    report = reproduce_worked_examples()
    args.status = 0 if report.ok else 1
    for r in report.records:
        tag = "expected disagreement" if r.expected_disagreement and not r.agree else ("ok" if r.agree else "FAIL")
        print(f"{r.instance_id}: {tag}", file=sys.stderr)
    return report.to_json(records=True)


# -- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="indent the JSON output")
    common.add_argument("--trace", action="store_true", help="human-readable trace on stderr")
    common.add_argument("--unchecked", action="store_true", help="skip the graph-family check")

    graph = _Parser(add_help=False)
    graph.add_argument("--graph", metavar="FILE", help="graph as JSON or an 'n m' edge list")

    cnf = _Parser(add_help=False)
    cnf.add_argument("--cnf", "--in", dest="cnf", metavar="FILE", help="CNF as JSON or DIMACS")

    p = _Parser(prog="wellcover", description="Generating subgraphs, well-covered graphs and their weight spaces.")
    sub = p.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("generating", parents=[common, graph], help="is G[bx | by] generating (bipartite, no C6)")
    s.add_argument("--bx", metavar="LIST")
    s.add_argument("--by", metavar="LIST")
    s.set_defaults(func=cmd_generating)

    s = sub.add_parser("maxgen1", parents=[common, graph], help="maximal generating star at x")
    s.add_argument("--x", metavar="VERTEX")
    s.set_defaults(func=cmd_maxgen1)

    s = sub.add_parser("maxgen2", parents=[common, graph], help="maximal generating double star at x1, x2")
    s.add_argument("--x1", metavar="VERTEX")
    s.add_argument("--x2", metavar="VERTEX")
    s.set_defaults(func=cmd_maxgen2)

    s = sub.add_parser("wcw", parents=[common, graph], help="weight-space constraints (bipartite, no C6)")
    s.set_defaults(func=cmd_wcw)
    s = sub.add_parser("well-covered", parents=[common, graph], help="well-covered test (bipartite, no C6)")
    s.set_defaults(func=cmd_well_covered)
    s = sub.add_parser("wcw-leaf", parents=[common, graph], help="leaf equations (no C3, C4, C5, C7)")
    s.set_defaults(func=cmd_wcw_leaf)

    s = sub.add_parser("relating-edge", parents=[common, graph], help="does edge uv force w(u) = w(v)")
    s.add_argument("--u", metavar="VERTEX")
    s.add_argument("--v", metavar="VERTEX")
    s.set_defaults(func=cmd_relating_edge)

    s = sub.add_parser("oracle", parents=[common, graph, cnf], help="brute-force reference answers")
    s.add_argument("what", choices=["mis", "wc", "wcw", "generating", "sat"])
    s.add_argument("--bx", metavar="LIST")
    s.add_argument("--by", metavar="LIST")
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("reduce", parents=[common, cnf], help="SAT-to-graph reductions")
    s.add_argument("how", choices=["dsat-to-dmsat", "dmsat-to-gs", "monotone-to-gs", "extend-kpq"])
    s.add_argument("--p", type=int, help="side of K_{p,q} holding z (extend-kpq)")
    s.add_argument("--q", type=int, help="side of K_{p,q} holding y_1, y_2 (extend-kpq)")
    s.set_defaults(func=cmd_reduce)

    s = sub.add_parser("validate", parents=[common, graph, cnf], help="family membership or CNF side conditions")
    s.add_argument("what", choices=["family", "cnf"])
    s.add_argument("--family", choices=sorted(FAMILIES))
    s.add_argument("--kind", choices=[k.value for k in Kind])
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("gen", parents=[common], help="seeded generators and corpora")
    s.add_argument("what", choices=["graph", "tree", "dsat", "enum"])
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--n", type=int)
    s.add_argument("--p", type=float, default=0.2, help="edge probability")
    s.add_argument("--count", type=int, help="enum: draw this many random graphs instead of enumerating")
    s.add_argument("--family", choices=sorted(FAMILIES))
    s.add_argument("--vars", type=int, default=6)
    s.add_argument("--clauses", type=int, default=8)
    s.add_argument("--labeled", action="store_true", help="enum: every labelled graph, not bipartite classes")
    s.add_argument("--out", type=Path, metavar="DIR")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("verify", parents=[common], help="algorithm-versus-oracle batch check")
    s.add_argument("suite", choices=list(SUITES))
    s.add_argument("--family", choices=sorted(FAMILIES))
    s.add_argument("--n", type=int)
    s.add_argument("--count", type=int, help="random instances; omit for exhaustive enumeration")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--jobs", type=int, default=1)
    s.add_argument("--records", action="store_true", help="include every record, not just failures")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("reproduce-paper", parents=[common], help="re-derive the bundled worked examples")
    s.set_defaults(func=cmd_reproduce)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        args.status = 0
        out = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 1
    except DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 1
    json.dump(out, sys.stdout, indent=2 if args.pretty else None)
    sys.stdout.write("\n")
    return args.status


if __name__ == "__main__":
    sys.exit(main())
