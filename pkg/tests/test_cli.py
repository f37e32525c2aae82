import json
import shutil
import subprocess
import sys

import pytest

from wellcover.cli import main
from wellcover.cnf import cnf_from_json
from wellcover.graph import cycle_graph, graph_from_json, path_graph, star_graph, write_graph
from wellcover.verify import load_fixture
from wellcover.weightspace import nullspace, system_from_json


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, g in {"p4": path_graph(4), "c4": cycle_graph(4), "c6": cycle_graph(6), "k13": star_graph(3)}.items():
        paths[name] = tmp_path / f"{name}.json"
        write_graph(g, paths[name])
    for name in ("dsat_9v14c.json", "dmsat_10v14c.json"):
        paths[name] = tmp_path / name
        paths[name].write_text(json.dumps(load_fixture(name)))
    paths["fig2"] = tmp_path / "fig2.json"
    paths["fig2"].write_text(json.dumps(load_fixture("double_star_31.json")))
    paths["mono"] = tmp_path / "mono.cnf"
    paths["mono"].write_text("p cnf 2 2\n1 2 0\n-1 0\n")
    paths["tmp"] = tmp_path
    return paths


class TestGraphCommands:
    def test_generating_exact_output(self, files, capsys):
        code = main(["generating", "--graph", str(files["p4"]), "--bx", "0", "--by", "1"])
        out = capsys.readouterr().out
        assert code == 0 and out == '{"generating": true}\n'

    def test_generating_trace_goes_to_stderr(self, files, capsys):
        code, out, err = run(capsys, "generating", "--graph", files["p4"], "--bx", "1", "--by", "2", "--trace")
        assert code == 0 and out == {"generating": False}
        assert "D1" in err

    def test_maxgen(self, files, capsys):
        assert run(capsys, "maxgen1", "--graph", files["p4"], "--x", "1")[1]["T"] == [0]
        assert run(capsys, "maxgen2", "--graph", files["c4"], "--x1", "0", "--x2", "2")[1]["T"] == [1, 3]

    def test_maxgen2_labels(self, files, capsys):
        fx = load_fixture("double_star_31.json")
        code, out, _ = run(capsys, "maxgen2", "--graph", files["fig2"], "--x1", "x_1", "--x2", "x_2")
        g = graph_from_json(fx)
        assert sorted(g.label(v) for v in out["T"]) == fx["expected_T"]

    def test_wcw_and_well_covered(self, files, capsys):
        code, out, _ = run(capsys, "wcw", "--graph", files["c4"])
        assert code == 0 and out["dimension"] == 3
        assert nullspace(system_from_json(out["system"])).dimension == 3
        assert run(capsys, "well-covered", "--graph", files["k13"])[1] == {"well_covered": False}

    def test_wcw_leaf(self, files, capsys):
        code, out, _ = run(capsys, "wcw-leaf", "--graph", files["c6"])
        assert code == 0 and out["dimension"] == 0

    def test_relating_edge(self, files, capsys):
        assert run(capsys, "relating-edge", "--graph", files["p4"], "--u", "0", "--v", "1")[1]["relating"] is True

    def test_family_violation_is_domain_error(self, files, capsys):
        code, out, err = run(capsys, "wcw", "--graph", files["c6"])
        assert code == 1 and out is None and err.startswith("domain error:")

    def test_unchecked_bypasses_family(self, files, capsys):
        code, out, _ = run(capsys, "wcw", "--graph", files["c6"], "--unchecked")
        assert code == 0


class TestOracleCommands:
    def test_mis(self, files, capsys):
        out = run(capsys, "oracle", "mis", "--graph", files["c6"])[1]
        assert out["count"] == 5 and out["sets"][0] == [0, 2, 4]

    def test_wcw(self, files, capsys):
        assert run(capsys, "oracle", "wcw", "--graph", files["c6"])[1]["dimension"] == 2

    def test_generating_certificate(self, files, capsys):
        out = run(capsys, "oracle", "generating", "--graph", files["p4"], "--bx", "0", "--by", "1")[1]
        assert out["certificate"]["witness"] == [3]

    def test_sat(self, files, capsys):
        out = run(capsys, "oracle", "sat", "--cnf", files["dmsat_10v14c.json"])[1]
        assert out["satisfiable"]


class TestReduceCommands:
    def test_dsat_to_dmsat(self, files, capsys):
        code, out, _ = run(capsys, "reduce", "dsat-to-dmsat", "--in", files["dsat_9v14c.json"])
        assert code == 0 and out["n_vars"] == 18
        inst = cnf_from_json(out)
        assert sorted(inst.clauses) == sorted(cnf_from_json(load_fixture("dmsat_18v32c.json")).clauses)

    def test_dmsat_to_gs(self, files, capsys):
        out = run(capsys, "reduce", "dmsat-to-gs", "--in", files["dmsat_10v14c.json"])[1]
        assert out["n"] == 44 and out["bx"] == [0]

    def test_monotone_then_extend(self, files, capsys):
        art = run(capsys, "reduce", "monotone-to-gs", "--in", files["mono"])[1]
        path = files["tmp"] / "art.json"
        path.write_text(json.dumps(art))
        ext = run(capsys, "reduce", "extend-kpq", "--in", path, "--p", "2", "--q", "3")[1]
        assert ext["n"] == art["n"] + 2 and len(ext["bx"]) == 2 and len(ext["by"]) == 3

    def test_extend_needs_p_q(self, files, capsys):
        code, _, err = run(capsys, "reduce", "extend-kpq", "--in", files["mono"])
        assert code == 2 and err.startswith("usage error:")

    def test_invalid_instance(self, files, capsys):
        code, _, err = run(capsys, "reduce", "dmsat-to-gs", "--in", files["dsat_9v14c.json"])
        assert code == 1 and err.startswith("domain error:")


class TestValidateGen:
    def test_family(self, files, capsys):
        code, out, _ = run(capsys, "validate", "family", "--graph", files["c6"], "--family", "bip-c6free")
        assert code == 1 and not out["valid"] and out["violations"][0]["cycle"]
        code, out, _ = run(capsys, "validate", "family", "--graph", files["p4"], "--family", "c3457free")
        assert code == 0 and out["valid"]

    def test_cnf(self, files, capsys):
        code, out, _ = run(capsys, "validate", "cnf", "--cnf", files["dmsat_10v14c.json"], "--kind", "DMSAT")
        assert code == 0 and out["valid"]

    def test_gen_deterministic(self, capsys):
        a = run(capsys, "gen", "graph", "--seed", 3, "--n", 9, "--family", "bip-c6free")[1]
        b = run(capsys, "gen", "graph", "--seed", 3, "--n", 9, "--family", "bip-c6free")[1]
        assert a == b and a["n"] == 9
        assert run(capsys, "gen", "tree", "--n", 5)[1]["n"] == 5
        assert len(run(capsys, "gen", "dsat", "--vars", 5, "--clauses", 4)[1]["c1"]) == 4

    def test_gen_enum(self, files, capsys):
        out_dir = files["tmp"] / "corpus"
        out = run(capsys, "gen", "enum", "--n", 4, "--family", "bip-c6free", "--out", out_dir)[1]
        assert out["count"] == len(list(out_dir.glob("g*.json")))
        assert (out_dir / "manifest.json").exists()


class TestErrors:
    def test_unknown_subcommand(self, capsys):
        code, _, err = run(capsys, "frobnicate")
        assert code == 2 and err.startswith("usage error:")

    def test_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "wcw", "--graph", tmp_path / "missing.json")
        assert code == 1 and err.startswith("input error:")

    def test_malformed_file(self, capsys, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text("{")
        code, _, err = run(capsys, "wcw", "--graph", bad)
        assert code == 1 and err.startswith("input error:")

    def test_unknown_vertex_label(self, files, capsys):
        code, _, err = run(capsys, "maxgen1", "--graph", files["p4"], "--x", "nope")
        assert code == 1 and err.startswith("domain error:")


class TestBatch:
    def test_verify_exit_zero_on_agreement(self, capsys):
        code, out, err = run(capsys, "verify", "generating", "--n", 5)
        assert code == 0 and out["ok"] and out["total"] == out["agreements"]
        assert "agree" in err

    def test_verify_exit_one_on_disagreement(self, capsys):
        code, out, _ = run(capsys, "verify", "wcw", "--n", 6)
        assert code == 1 and out["unexpected_disagreements"] > 0
        assert out["failures"][0]["instance"]["graph"]

    def test_reproduce(self, capsys):
        code, out, err = run(capsys, "reproduce-paper")
        assert code == 0 and out["ok"]
        assert out["expected_disagreements"] == 3
        assert "known-c6-leaf-characterization: expected disagreement" in err


@pytest.mark.skipif(shutil.which("wellcover") is None, reason="console script not installed")
def test_console_script(tmp_path):
    path = tmp_path / "p4.json"
    write_graph(path_graph(4), path)
    proc = subprocess.run(
        ["wellcover", "generating", "--graph", str(path), "--bx", "0", "--by", "1"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout == '{"generating": true}\n'


def test_module_entry(tmp_path):
    path = tmp_path / "k2.json"
    write_graph(path_graph(2), path)
    proc = subprocess.run(
        [sys.executable, "-m", "wellcover.cli", "well-covered", "--graph", str(path)], capture_output=True, text=True
    )
    assert json.loads(proc.stdout) == {"well_covered": True}
