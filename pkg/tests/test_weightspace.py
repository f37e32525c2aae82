from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from wellcover.weightspace import (
    ConstraintSystem,
    DimensionMismatch,
    LinearConstraint,
    basis_from_json,
    basis_to_json,
    equal_weights,
    evaluate,
    nullspace,
    rank,
    satisfies,
    spaces_equal,
    system_from_json,
    system_to_json,
    zero_weight,
)


def transposed_rank(rows, n):
    """Rank by forward elimination on the transpose, kept separate from the library."""
    cols = [[Fraction(r[j]) for r in rows] for j in range(n)]
    rk = 0
    width = len(rows)
    for c in range(width):
        piv = next((i for i in range(rk, len(cols)) if cols[i][c] != 0), None)
        if piv is None:
            continue
        cols[rk], cols[piv] = cols[piv], cols[rk]
        for i in range(rk + 1, len(cols)):
            f = cols[i][c] / cols[rk][c]
            cols[i] = [a - f * b for a, b in zip(cols[i], cols[rk])]
        rk += 1
    return rk


@st.composite
def systems(draw, max_n=6, max_rows=6):
    n = draw(st.integers(1, max_n))
    rows = draw(st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), max_size=max_rows))
    return ConstraintSystem(n, [LinearConstraint.from_mapping(dict(enumerate(r))) for r in rows])


class TestConstraint:
    def test_normalised_form(self):
        a = LinearConstraint.from_mapping({0: 2, 1: -2})
        b = LinearConstraint.from_mapping({0: Fraction(-1, 3), 1: Fraction(1, 3)})
        assert a == b == equal_weights([0], [1])
        assert a.coeffs == ((0, 1), (1, -1))

    def test_trivial_is_none(self):
        assert LinearConstraint.from_mapping({0: 0}) is None
        assert equal_weights([0, 1], [1, 0]) is None

    def test_out_of_range_vertex(self):
        with pytest.raises(ValueError):
            ConstraintSystem(2, [zero_weight(2)])

    def test_deduplicated(self):
        s = ConstraintSystem(2, [equal_weights([0], [1]), LinearConstraint.from_mapping({0: -5, 1: 5})])
        assert len(s) == 1


class TestNullspace:
    def test_p4_pairs(self):
        s = ConstraintSystem(4, [equal_weights([0], [1]), equal_weights([2], [3])])
        assert nullspace(s).dimension == 2

    def test_single_vertex(self):
        assert nullspace(ConstraintSystem(1)).dimension == 1

    def test_c4_one_relation(self):
        s = ConstraintSystem(4, [equal_weights([0, 2], [1, 3])])
        assert nullspace(s).dimension == 3

    @given(systems())
    def test_rank_nullity(self, s):
        assert nullspace(s).dimension + transposed_rank(s.rows(), s.n) == s.n
        assert rank(s) == transposed_rank(s.rows(), s.n)

    @given(systems())
    def test_basis_vectors_satisfy_exactly(self, s):
        basis = nullspace(s)
        for w in basis:
            assert all(c.apply(w) == 0 for c in s)
        # independence: basis vectors carry a unit in distinct free columns
        assert transposed_rank(list(basis), s.n) == basis.dimension

    @given(systems())
    def test_dedup_keeps_space(self, s):
        doubled = ConstraintSystem(s.n)
        for c in list(s) + list(s):
            doubled.add(LinearConstraint.from_mapping({v: 3 * x for v, x in c.coeffs}))
        assert len(doubled) == len(s)
        assert spaces_equal(s, doubled)


class TestSpacesEqual:
    def test_scaling(self):
        a = ConstraintSystem(2, [equal_weights([0], [1])])
        b = ConstraintSystem(2, [LinearConstraint.from_mapping({0: 2, 1: -2})])
        assert spaces_equal(a, b)

    def test_zero_vs_nothing(self):
        assert not spaces_equal(ConstraintSystem(1, [zero_weight(0)]), ConstraintSystem(1))

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            spaces_equal(ConstraintSystem(1), ConstraintSystem(2))

    @given(systems(max_n=4), systems(max_n=4), systems(max_n=4))
    def test_equivalence_relation(self, a, b, c):
        assert spaces_equal(a, a)
        if a.n == b.n:
            assert spaces_equal(a, b) == spaces_equal(b, a)
        if a.n == b.n == c.n and spaces_equal(a, b) and spaces_equal(b, c):
            assert spaces_equal(a, c)

    @given(systems())
    def test_row_combination_keeps_space(self, s):
        rows = s.rows()
        if len(rows) < 2:
            return
        mixed = ConstraintSystem(s.n, list(s))
        mixed.add(LinearConstraint.from_mapping({j: rows[0][j] + 2 * rows[1][j] for j in range(s.n)}))
        assert spaces_equal(s, mixed)


class TestEvaluate:
    def test_c6_vector(self):
        assert evaluate((1, 1, 0, -1, -1, 0), {0, 2, 4}) == 0

    def test_empty(self):
        assert evaluate((5, 7), set()) == 0

    def test_uniform(self):
        assert evaluate([1] * 9, {0, 3, 5, 8}) == 4

    def test_satisfies_length_check(self):
        with pytest.raises(DimensionMismatch):
            satisfies(ConstraintSystem(3), [1, 1])


class TestJson:
    def test_fraction_strings(self):
        s = ConstraintSystem(3, [equal_weights([0], [1, 2])])
        assert system_to_json(s) == {"n": 3, "constraints": [{"coeffs": {"0": "1/1", "1": "-1/1", "2": "-1/1"}}]}

    @given(systems())
    def test_round_trip(self, s):
        assert list(system_from_json(system_to_json(s))) == list(s)
        b = nullspace(s)
        assert basis_from_json(basis_to_json(b)) == b
