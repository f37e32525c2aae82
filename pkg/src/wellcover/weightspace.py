"""Homogeneous rational constraints on vertex weights and their solution spaces.

A weight function is a vector ``w`` of length ``n``; a constraint is a linear
form ``sum(c_v * w_v) = 0``.  All arithmetic is exact (:class:`fractions.Fraction`).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

__all__ = [
    "LinearConstraint",
    "ConstraintSystem",
    "WeightBasis",
    "DimensionMismatch",
    "equal_weights",
    "zero_weight",
    "nullspace",
    "rank",
    "spaces_equal",
    "evaluate",
    "satisfies",
    "format_fraction",
    "parse_fraction",
    "system_to_json",
    "system_from_json",
    "basis_to_json",
    "basis_from_json",
]


class DimensionMismatch(ValueError):
    pass


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


@dataclass(frozen=True, order=True)
class LinearConstraint:
    """``sum(coeff * w[vertex]) = 0`` in primitive integer form.

    Use :meth:`from_mapping` to build one; it scales the coefficients to
    coprime integers with the lowest-indexed coefficient positive, so two
    constraints with the same zero set compare equal.
    """

    coeffs: tuple[tuple[int, int], ...]

    @classmethod
    def from_mapping(cls, coeffs: Mapping[int, object]) -> "LinearConstraint | None":
        """Normalise; returns ``None`` for the trivial form ``0 = 0``."""
        items = sorted((int(v), Fraction(c)) for v, c in coeffs.items() if Fraction(c) != 0)
        if not items:
            return None
        denom = 1
        for _, c in items:
            denom = _lcm(denom, c.denominator)
        ints = [(v, int(c * denom)) for v, c in items]
        g = 0
        for _, c in ints:
            g = math.gcd(g, c)
        if ints[0][1] < 0:
            g = -g
        return cls(tuple((v, c // g) for v, c in ints))

    def as_dict(self) -> dict[int, Fraction]:
        return {v: Fraction(c) for v, c in self.coeffs}

    def vertices(self) -> list[int]:
        return [v for v, _ in self.coeffs]

    def apply(self, w: Sequence) -> Fraction:
        return sum((c * Fraction(w[v]) for v, c in self.coeffs), Fraction(0))

    def __str__(self) -> str:
        terms = []
        for v, c in self.coeffs:
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            terms.append(f"{sign} {mag}w{v}")
        text = " ".join(terms)
        return (text[2:] if text.startswith("+ ") else "-" + text[2:]) + " = 0"


def equal_weights(left: Iterable[int], right: Iterable[int]) -> LinearConstraint | None:
    """The restriction ``w(left) = w(right)``."""
    coeffs: dict[int, int] = {}
    for v in left:
        coeffs[v] = coeffs.get(v, 0) + 1
    for v in right:
        coeffs[v] = coeffs.get(v, 0) - 1
    return LinearConstraint.from_mapping(coeffs)


def zero_weight(v: int) -> LinearConstraint:
    return LinearConstraint(((v, 1),))


class ConstraintSystem:
    """An ordered, duplicate-free list of constraints over ``n`` vertex weights.

    First occurrence wins when a constraint is added twice, so insertion
    order is deterministic for a deterministic producer.
    """

    __slots__ = ("n", "_constraints", "_seen")

    def __init__(self, n: int, constraints: Iterable[LinearConstraint | None] = ()):
        self.n = n
        self._constraints: list[LinearConstraint] = []
        self._seen: set[LinearConstraint] = set()
        for c in constraints:
            self.add(c)

    def add(self, c: LinearConstraint | None) -> None:
        if c is None:
            return
        for v, _ in c.coeffs:
            if not 0 <= v < self.n:
                raise ValueError(f"constraint references vertex {v} outside 0..{self.n - 1}")
        if c not in self._seen:
            self._seen.add(c)
            self._constraints.append(c)

    @property
    def constraints(self) -> tuple[LinearConstraint, ...]:
        return tuple(self._constraints)

    def __len__(self) -> int:
        return len(self._constraints)

    def __iter__(self):
        return iter(self._constraints)

    def __contains__(self, c) -> bool:
        return c in self._seen

    def rows(self) -> list[list[Fraction]]:
        out = []
        for c in self._constraints:
            row = [Fraction(0)] * self.n
            for v, k in c.coeffs:
                row[v] = Fraction(k)
            out.append(row)
        return out

    def __repr__(self) -> str:
        return f"ConstraintSystem(n={self.n}, constraints=[{', '.join(str(c) for c in self)}])"


@dataclass(frozen=True)
class WeightBasis:
    n: int
    basis: tuple[tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)


def _rref(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Gauss-Jordan elimination in place; returns the nonzero rows and pivot columns."""
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        lead = rows[r][col]
        if lead != 1:
            rows[r] = [x / lead for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def nullspace(system: ConstraintSystem) -> WeightBasis:
    """Basis of ``{w : every constraint vanishes}``, one vector per free column.

    Each basis vector has a 1 in its free column, 0 in every other free
    column, and the pivot entries read off the reduced row echelon form.
    """
    n = system.n
    red, pivots = _rref(system.rows(), n)
    pivot_set = set(pivots)
    basis = []
    for free in range(n):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * n
        vec[free] = Fraction(1)
        for row, p in zip(red, pivots):
            vec[p] = -row[free]
        basis.append(tuple(vec))
    return WeightBasis(n, tuple(basis))


def rank(system: ConstraintSystem) -> int:
    return len(_rref(system.rows(), system.n)[1])


def satisfies(system: ConstraintSystem, w: Sequence) -> bool:
    if len(w) != system.n:
        raise DimensionMismatch(f"weight vector of length {len(w)} for a system on {system.n} vertices")
    return all(c.apply(w) == 0 for c in system)


def spaces_equal(a: ConstraintSystem, b: ConstraintSystem) -> bool:
    """True iff both systems cut out the same subspace of weight functions."""
    if a.n != b.n:
        raise DimensionMismatch(f"systems live in dimensions {a.n} and {b.n}")
    return all(satisfies(b, w) for w in nullspace(a)) and all(satisfies(a, w) for w in nullspace(b))


def evaluate(w: Sequence, s: Iterable[int]) -> Fraction:
    """Total weight ``w(S)``."""
    return sum((Fraction(w[v]) for v in s), Fraction(0))


# -- serialisation -----------------------------------------------------------


def format_fraction(x) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text) -> Fraction:
    return Fraction(str(text))


def system_to_json(system: ConstraintSystem) -> dict:
    return {
        "n": system.n,
        "constraints": [
            {"coeffs": {str(v): format_fraction(c) for v, c in con.coeffs}} for con in system
        ],
    }


def system_from_json(obj: dict) -> ConstraintSystem:
    sys_ = ConstraintSystem(int(obj["n"]))
    for con in obj.get("constraints", []):
        sys_.add(LinearConstraint.from_mapping({int(v): parse_fraction(c) for v, c in con["coeffs"].items()}))
    return sys_


def basis_to_json(basis: WeightBasis) -> dict:
    return {
        "n": basis.n,
        "dimension": basis.dimension,
        "basis": [[format_fraction(x) for x in vec] for vec in basis],
    }


def basis_from_json(obj: dict) -> WeightBasis:
    vecs = tuple(tuple(parse_fraction(x) for x in vec) for vec in obj["basis"])
    return WeightBasis(int(obj["n"]), vecs)
