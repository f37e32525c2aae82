"""CNF instances split into a positive part and a negative part.

Literals are signed 1-based variable indices, DIMACS style: ``3`` is the
variable x3 and ``-3`` its negation.  Generic and DSAT instances keep all
their clauses in ``c1`` and leave ``c2`` empty.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

__all__ = [
    "Kind",
    "CnfError",
    "CnfInstance",
    "Assignment",
    "ValidationReport",
    "normalize_clause",
    "validate",
    "cnf_to_json",
    "cnf_from_json",
    "read_cnf",
    "write_cnf",
    "parse_dimacs",
    "to_dimacs",
]

Clause = tuple[int, ...]


class Kind(str, enum.Enum):
    GENERIC = "GENERIC"
    MONOTONE = "MONOTONE"
    DSAT = "DSAT"
    DMSAT = "DMSAT"


class CnfError(ValueError):
    pass


def normalize_clause(lits: Iterable[int]) -> Clause:
    """Sort by variable, drop repeats; reject a variable next to its negation."""
    out = sorted(set(int(l) for l in lits), key=lambda l: (abs(l), l))
    for l in out:
        if l == 0:
            raise CnfError("literal 0 is not allowed")
    vars_ = [abs(l) for l in out]
    if len(set(vars_)) != len(vars_):
        raise CnfError(f"clause {out} contains a variable and its negation")
    return tuple(out)


@dataclass(frozen=True)
class CnfInstance:
    n_vars: int
    c1: tuple[Clause, ...] = ()
    c2: tuple[Clause, ...] = ()
    kind: Kind = Kind.GENERIC

    def __post_init__(self):
        object.__setattr__(self, "kind", Kind(self.kind))
        c1 = tuple(normalize_clause(c) for c in self.c1)
        c2 = tuple(normalize_clause(c) for c in self.c2)
        for clause in c1 + c2:
            for l in clause:
                if abs(l) > self.n_vars:
                    raise CnfError(f"literal {l} refers to a variable beyond n_vars={self.n_vars}")
        object.__setattr__(self, "c1", c1)
        object.__setattr__(self, "c2", c2)

    @property
    def clauses(self) -> tuple[Clause, ...]:
        return self.c1 + self.c2

    def is_satisfied_by(self, assignment: "Assignment") -> bool:
        return all(assignment.satisfies(c) for c in self.clauses)


@dataclass(frozen=True)
class Assignment:
    """Truth values ``values[i-1]`` for variables ``x1..xn``."""

    values: tuple[bool, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(bool(v) for v in self.values))

    def __len__(self) -> int:
        return len(self.values)

    def value(self, lit: int) -> bool:
        v = self.values[abs(lit) - 1]
        return v if lit > 0 else not v

    def satisfies(self, clause: Sequence[int]) -> bool:
        return any(self.value(l) for l in clause)

    def true_vars(self) -> list[int]:
        return [i + 1 for i, v in enumerate(self.values) if v]

    @classmethod
    def from_true_vars(cls, n: int, true_vars: Iterable[int]) -> "Assignment":
        on = set(true_vars)
        return cls(tuple(i + 1 in on for i in range(n)))


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[str, ...] = field(default=())

    def __bool__(self) -> bool:
        return self.ok

    def to_json(self) -> dict:
        return {"valid": self.ok, "violations": list(self.violations)}


def _pairwise_shared(clauses, limit, label, out):
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            shared = set(clauses[i]) & set(clauses[j])
            if len(shared) > limit:
                out.append(
                    f"{label} clauses {i + 1} {list(clauses[i])} and {j + 1} {list(clauses[j])} "
                    f"share {len(shared)} literals {sorted(shared, key=abs)}"
                )


def _check_monotone(inst: CnfInstance, out: list[str]) -> None:
    for j, c in enumerate(inst.c1):
        if any(l < 0 for l in c):
            out.append(f"c1 clause {j + 1} {list(c)} contains a negated literal")
    for j, c in enumerate(inst.c2):
        if any(l > 0 for l in c):
            out.append(f"c2 clause {j + 1} {list(c)} contains a positive literal")


def _check_dsat(inst: CnfInstance, out: list[str]) -> None:
    clauses = inst.clauses
    for j, c in enumerate(clauses):
        if not 2 <= len(c) <= 3:
            out.append(f"clause {j + 1} {list(c)} has {len(c)} literals, expected 2 or 3")
    _pairwise_shared(clauses, 1, "", out)
    # Conditional reading: the opposite-literal ban applies only to pairs
    # that already share a literal.
    for i in range(len(clauses)):
        for j in range(i + 1, len(clauses)):
            a, b = set(clauses[i]), set(clauses[j])
            if a & b:
                clash = sorted((l for l in a if -l in b), key=abs)
                if clash:
                    out.append(
                        f"clauses {i + 1} {list(clauses[i])} and {j + 1} {list(clauses[j])} share a literal "
                        f"and also hold opposite literals {clash} / {[-l for l in clash]}"
                    )


def _check_dmsat(inst: CnfInstance, out: list[str]) -> None:
    _check_monotone(inst, out)
    for j, c in enumerate(inst.c1):
        if not 2 <= len(c) <= 3:
            out.append(f"c1 clause {j + 1} {list(c)} has {len(c)} literals, expected 2 or 3")
    for j, c in enumerate(inst.c2):
        if len(c) != 2:
            out.append(f"c2 clause {j + 1} {list(c)} has {len(c)} literals, expected 2")
    _pairwise_shared(inst.c1, 1, "c1", out)
    _pairwise_shared(inst.c2, 0, "c2", out)


def validate(inst: CnfInstance, kind: Kind | str | None = None) -> ValidationReport:
    """Check ``inst`` against the side conditions of ``kind``.

    Every violated condition is reported; nothing is raised.  ``kind``
    defaults to the instance's own tag.  For DSAT the third condition (no
    complementary literals between two clauses) is read as applying only to
    clause pairs that already share a literal, which is how the condition is
    phrased; an unconditional reading would be strictly stronger.
    """
    kind = Kind(kind if kind is not None else inst.kind)
    out: list[str] = []
    if kind is Kind.MONOTONE:
        _check_monotone(inst, out)
    elif kind is Kind.DSAT:
        if inst.c2:
            out.append("DSAT instances keep every clause in c1")
        _check_dsat(inst, out)
    elif kind is Kind.DMSAT:
        _check_dmsat(inst, out)
    return ValidationReport(not out, tuple(out))


# -- serialisation -----------------------------------------------------------


def cnf_to_json(inst: CnfInstance) -> dict:
    return {
        "n_vars": inst.n_vars,
        "c1": [list(c) for c in inst.c1],
        "c2": [list(c) for c in inst.c2],
        "kind": inst.kind.value,
    }


def cnf_from_json(obj: dict) -> CnfInstance:
    try:
        return CnfInstance(
            int(obj["n_vars"]),
            tuple(tuple(c) for c in obj.get("c1", [])),
            tuple(tuple(c) for c in obj.get("c2", [])),
            Kind(obj.get("kind", "GENERIC")),
        )
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, CnfError):
            raise
        raise CnfError(f"malformed CNF JSON: {exc}") from exc


def parse_dimacs(text: str, kind: Kind | str | None = None) -> CnfInstance:
    """Read DIMACS CNF.

    Without ``kind`` the partition is recovered from literal signs: if every
    clause is all-positive or all-negative the result is MONOTONE with the
    negative clauses in ``c2``; otherwise GENERIC with everything in ``c1``.
    An explicit ``kind`` of MONOTONE or DMSAT forces the sign split.
    """
    n_vars = None
    declared = None
    clauses: list[list[int]] = []
    cur: list[int] = []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise CnfError(f"bad DIMACS header {line!r}")
            n_vars, declared = int(parts[2]), int(parts[3])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(cur)
    if n_vars is None:
        raise CnfError("DIMACS input lacks a 'p cnf' header")
    if declared != len(clauses):
        raise CnfError(f"header announces {declared} clauses, found {len(clauses)}")
    split = all(all(l > 0 for l in c) or all(l < 0 for l in c) for c in clauses)
    kind = Kind(kind) if kind is not None else (Kind.MONOTONE if split and clauses else Kind.GENERIC)
    if kind in (Kind.MONOTONE, Kind.DMSAT):
        c1 = [c for c in clauses if all(l > 0 for l in c)]
        c2 = [c for c in clauses if not all(l > 0 for l in c)]
    else:
        c1, c2 = clauses, []
    return CnfInstance(n_vars, tuple(map(tuple, c1)), tuple(map(tuple, c2)), kind)


def to_dimacs(inst: CnfInstance) -> str:
    lines = [f"c kind {inst.kind.value}", f"p cnf {inst.n_vars} {len(inst.clauses)}"]
    lines += [" ".join(str(l) for l in c) + " 0" for c in inst.clauses]
    return "\n".join(lines) + "\n"


def read_cnf(path, kind: Kind | str | None = None) -> CnfInstance:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        try:
            return cnf_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise CnfError(f"malformed CNF JSON: {exc}") from exc
    return parse_dimacs(text, kind)


def write_cnf(inst: CnfInstance, path) -> None:
    path = Path(path)
    if path.suffix in (".cnf", ".dimacs"):
        path.write_text(to_dimacs(inst))
    else:
        path.write_text(json.dumps(cnf_to_json(inst)) + "\n")
