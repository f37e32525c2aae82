from collections import Counter

import pytest
from hypothesis import given, strategies as st

from wellcover.cnf import (
    Assignment,
    CnfError,
    CnfInstance,
    Kind,
    cnf_from_json,
    parse_dimacs,
    read_cnf,
    to_dimacs,
    validate,
    write_cnf,
)
from wellcover.graph import FamilySpec, bipartition, get_family, girth, is_independent, validate_family
from wellcover.lab import GenerationError, random_dsat, random_monotone
from wellcover.oracles import generating_oracle, sat_bruteforce
from wellcover.reductions import (
    ReductionError,
    artifact_from_json,
    artifact_to_json,
    assignment_to_witness,
    dmsat_to_gs,
    dsat_to_dmsat,
    extend_to_kpq,
    monotone_to_gs,
    witness_to_assignment,
)
from wellcover.verify import load_fixture

NO_C3_C5 = FamilySpec(frozenset({3, 5}))


def fixture(name):
    return cnf_from_json(load_fixture(name))


def multiset(inst):
    return Counter(inst.clauses)


def witness_of(art):
    cert = generating_oracle(art.graph, art.bx, art.by)
    return None if cert is None else cert.s


dsat_instances = st.builds(
    lambda nv, nc, seed: _dsat(nv, nc, seed), st.integers(2, 6), st.integers(0, 8), st.integers(0, 2**32)
)
monotone_instances = st.builds(
    random_monotone, st.integers(1, 5), st.integers(0, 4), st.integers(0, 4), st.integers(0, 2**32)
)


def _dsat(nv, nc, seed):
    while True:
        try:
            return random_dsat(nv, nc, seed, max_rejections=500)
        except GenerationError:
            nc -= 1


class TestInstances:
    def test_clause_normalised(self):
        inst = CnfInstance(3, ((3, 1, 1),))
        assert inst.c1 == ((1, 3),)

    def test_complementary_clause_rejected(self):
        with pytest.raises(CnfError):
            CnfInstance(2, ((1, -1),))

    def test_variable_range(self):
        with pytest.raises(CnfError):
            CnfInstance(2, ((3,),))

    def test_assignment_helpers(self):
        a = Assignment.from_true_vars(4, [2, 4])
        assert a.values == (False, True, False, True)
        assert a.true_vars() == [2, 4]
        assert a.satisfies((1, 2)) and not a.satisfies((1, -2))


class TestValidate:
    def test_dmsat_18v32c_is_dmsat(self):
        assert validate(fixture("dmsat_18v32c.json"), Kind.DMSAT)

    def test_dsat_9v14c_is_dsat(self):
        assert validate(fixture("dsat_9v14c.json"), Kind.DSAT)

    def test_two_common_literals(self):
        report = validate(CnfInstance(4, ((1, 2, 3), (1, 2, 4))), Kind.DSAT)
        assert not report and "share 2" in report.violations[0]

    def test_c2_not_disjoint(self):
        report = validate(CnfInstance(3, ((1, 2),), ((-1, -2), (-2, -3)), Kind.DMSAT))
        assert not report and any("c2" in v for v in report.violations)

    def test_conditional_opposite_literal_rule(self):
        # clauses share x1 and hold x2 against its negation
        bad = CnfInstance(3, ((1, 2), (1, -2, 3)))
        assert not validate(bad, Kind.DSAT)
        # opposite literals without a shared literal are allowed
        assert validate(CnfInstance(3, ((1, 2), (-1, 3))), Kind.DSAT)

    def test_reports_every_violation(self):
        inst = CnfInstance(4, ((1,), (1, 2, 3), (1, 2, 4)))
        assert len(validate(inst, Kind.DSAT).violations) >= 2

    def test_monotone(self):
        assert validate(CnfInstance(2, ((1, 2),), ((-1,),), Kind.MONOTONE))
        assert not validate(CnfInstance(2, ((1, -2),), (), Kind.MONOTONE))


class TestFormats:
    def test_dimacs_round_trip(self):
        inst = fixture("dsat_9v14c.json")
        back = parse_dimacs(to_dimacs(inst), Kind.DSAT)
        assert back == inst

    def test_dimacs_sign_split(self):
        inst = parse_dimacs("p cnf 3 3\n1 2 0\n-1 -3 0\n2 3 0\n")
        assert inst.kind is Kind.MONOTONE
        assert inst.c1 == ((1, 2), (2, 3)) and inst.c2 == ((-1, -3),)

    def test_dimacs_header_count(self):
        with pytest.raises(CnfError):
            parse_dimacs("p cnf 2 2\n1 2 0\n")

    def test_file_round_trip(self, tmp_path):
        inst = fixture("dmsat_10v14c.json")
        write_cnf(inst, tmp_path / "i.json")
        write_cnf(inst, tmp_path / "i.cnf")
        assert read_cnf(tmp_path / "i.json") == inst
        assert read_cnf(tmp_path / "i.cnf", Kind.DMSAT) == inst

    def test_malformed_json(self):
        with pytest.raises(CnfError):
            cnf_from_json({"c1": []})


class TestDsatToDmsat:
    def test_dsat_9v14c(self):
        out = dsat_to_dmsat(fixture("dsat_9v14c.json"))
        printed = fixture("dmsat_18v32c.json")
        assert out.n_vars == 18 and len(out.clauses) == 32
        assert multiset(out) == multiset(printed)

    def test_single_clause(self):
        out = dsat_to_dmsat(CnfInstance(2, ((1, 2),), (), Kind.DSAT))
        assert out.c1 == ((1, 2), (1, 3), (2, 4))
        assert out.c2 == ((-1, -3), (-2, -4))

    def test_rejects_non_dsat(self):
        with pytest.raises(ReductionError):
            dsat_to_dmsat(CnfInstance(4, ((1, 2, 3), (1, 2, 4)), (), Kind.DSAT))

    def test_unsat_stays_unsat(self):
        inst = CnfInstance(3, ((-1, -3), (2, -3), (1, -2), (-1, 2), (1, 3), (-2, 3)), (), Kind.DSAT)
        assert validate(inst, Kind.DSAT)
        assert sat_bruteforce(inst) is None
        assert sat_bruteforce(dsat_to_dmsat(inst)) is None

    @given(dsat_instances)
    def test_equisatisfiable(self, inst):
        out = dsat_to_dmsat(inst)
        assert validate(out, Kind.DMSAT)
        assert (sat_bruteforce(inst) is None) == (sat_bruteforce(out) is None)


class TestDmsatToGs:
    def test_dmsat10_graph44(self):
        inst = fixture("dmsat_10v14c.json")
        art = dmsat_to_gs(inst)
        assert art.graph.n == 44
        assert bipartition(art.graph) is not None and girth(art.graph) >= 6
        assert witness_of(art) is not None

    def test_dmsat10_witness(self):
        fx = load_fixture("dmsat_10v14c.json")
        art = dmsat_to_gs(cnf_from_json(fx))
        w = assignment_to_witness(art, Assignment.from_true_vars(10, fx["assignment_true"]))
        assert sorted(art.graph.label(v) for v in w) == sorted(fx["witness_labels"])

    def test_minimal(self):
        art = dmsat_to_gs(CnfInstance(2, ((1, 2),), (), Kind.DMSAT))
        assert art.graph.n == 7
        assert sorted(art.graph.label(v) for v in witness_of(art)) == ["u_1", "u_2"]

    def test_needs_a_positive_clause(self):
        with pytest.raises(ReductionError):
            dmsat_to_gs(CnfInstance(2, (), ((-1, -2),), Kind.DMSAT))

    @given(dsat_instances)
    def test_equivalence_and_shape(self, inst):
        dm = dsat_to_dmsat(inst)
        if not dm.c1:
            return
        art = dmsat_to_gs(dm)
        g = art.graph
        assert g.n == 1 + 2 * len(dm.c1) + len(dm.c2) + 2 * dm.n_vars
        assert validate_family(g, get_family("bip-girth6"))
        w = witness_of(art)
        assert (w is not None) == (sat_bruteforce(dm) is not None)
        if w is not None:
            assert all((u in w) != (up in w) for u, up in zip(art.u, art.u_prime))
            assert dm.is_satisfied_by(witness_to_assignment(art, w))


class TestMonotoneToGs:
    def test_contradiction(self):
        art = monotone_to_gs(CnfInstance(1, ((1,),), ((-1,),), Kind.MONOTONE))
        assert art.graph.n == 7
        assert witness_of(art) is None

    def test_single_positive_clause(self):
        art = monotone_to_gs(CnfInstance(2, ((1, 2),), (), Kind.MONOTONE))
        w = witness_of(art)
        assert w is not None and (art.u[0] in w or art.u[1] in w)

    def test_mixed(self):
        art = monotone_to_gs(CnfInstance(2, ((1,),), ((-2,),), Kind.MONOTONE))
        assert witness_of(art) is not None

    @given(monotone_instances)
    def test_equivalence_and_shape(self, inst):
        art = monotone_to_gs(inst)
        assert art.graph.n == 3 + len(inst.c1) + len(inst.c2) + 2 * inst.n_vars
        assert validate_family(art.graph, NO_C3_C5)
        assert (witness_of(art) is not None) == (sat_bruteforce(inst) is not None)


class TestExtendToKpq:
    def base(self):
        return monotone_to_gs(CnfInstance(1, ((1,),), ((-1,),), Kind.MONOTONE))

    def test_identity(self):
        art = self.base()
        assert extend_to_kpq(art, 1, 2).graph == art.graph

    def test_sizes(self):
        art = self.base()
        assert extend_to_kpq(art, 2, 2).graph.n == 8
        assert extend_to_kpq(art, 3, 3).graph.n == 7 + 3

    def test_range(self):
        with pytest.raises(ReductionError):
            extend_to_kpq(self.base(), 1, 1)
        with pytest.raises(ReductionError):
            extend_to_kpq(extend_to_kpq(self.base(), 2, 2), 2, 2)

    @given(monotone_instances, st.integers(1, 3), st.integers(2, 3))
    def test_preserves_status(self, inst, p, q):
        art = monotone_to_gs(inst)
        ext = extend_to_kpq(art, p, q)
        assert len(ext.bx) == p and len(ext.by) == q
        assert is_independent(ext.graph, ext.bx) and is_independent(ext.graph, ext.by)
        assert validate_family(ext.graph, NO_C3_C5)
        assert (witness_of(ext) is not None) == (witness_of(art) is not None)


class TestWitnessMaps:
    def test_all_true(self):
        art = dmsat_to_gs(fixture("dmsat_10v14c.json"))
        assert assignment_to_witness(art, Assignment((True,) * 10)) == frozenset(art.u)

    @given(st.lists(st.booleans(), min_size=10, max_size=10))
    def test_round_trip(self, values):
        art = dmsat_to_gs(fixture("dmsat_10v14c.json"))
        a = Assignment(tuple(values))
        assert witness_to_assignment(art, assignment_to_witness(art, a)) == a

    def test_length_check(self):
        art = dmsat_to_gs(fixture("dmsat_10v14c.json"))
        with pytest.raises(ReductionError):
            assignment_to_witness(art, Assignment((True,)))

    def test_artifact_json(self):
        art = extend_to_kpq(monotone_to_gs(CnfInstance(2, ((1, 2),), (), Kind.MONOTONE)), 2, 3)
        back = artifact_from_json(artifact_to_json(art))
        assert back == art and back.params == {"p": 2, "q": 3}
