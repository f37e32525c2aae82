"""Generating subgraphs, well-covered graphs and their weight spaces.

Submodules
----------
graph        bit-set graphs, distance layers, cycle search, graph families
weightspace  exact rational constraint systems and their solution spaces
oracles      brute-force reference answers (exponential, capped)
algorithms   polynomial recognition on restricted graph families
cnf          CNF instances, DIMACS I/O, side-condition validation
reductions   SAT-variant to generating-subgraph constructions
lab          seeded generators and exhaustive corpora
verify       algorithm-versus-oracle batch checks
cli          the ``wellcover`` command
"""
from .algorithms import (
    decompose,
    generating_bip_c6free,
    maxgen1,
    maxgen2,
    relating_edge,
    wcw_bip_c6free,
    wcw_leaf_characterization,
    well_covered_bip_c6free,
)
from .cnf import Assignment, CnfError, CnfInstance, Kind, validate
from .graph import (
    FAMILIES,
    FamilySpec,
    FamilyViolation,
    Graph,
    GraphError,
    get_family,
    girth,
    neighborhood_layer,
    validate_family,
)
from .lab import GeneratorConfig, random_dsat, random_family_graph, random_tree
from .oracles import (
    CapExceeded,
    enumerate_mis,
    generating_oracle,
    is_well_covered_oracle,
    sat_bruteforce,
    wcw_oracle,
)
from .reductions import (
    ReductionArtifact,
    assignment_to_witness,
    dmsat_to_gs,
    dsat_to_dmsat,
    extend_to_kpq,
    monotone_to_gs,
    witness_to_assignment,
)
from .weightspace import ConstraintSystem, LinearConstraint, nullspace, spaces_equal

__version__ = "0.1.0"

__all__ = [
    "Assignment",
    "CapExceeded",
    "CnfError",
    "CnfInstance",
    "ConstraintSystem",
    "FAMILIES",
    "FamilySpec",
    "FamilyViolation",
    "GeneratorConfig",
    "Graph",
    "GraphError",
    "Kind",
    "LinearConstraint",
    "ReductionArtifact",
    "assignment_to_witness",
    "decompose",
    "dmsat_to_gs",
    "dsat_to_dmsat",
    "enumerate_mis",
    "extend_to_kpq",
    "generating_bip_c6free",
    "generating_oracle",
    "get_family",
    "girth",
    "is_well_covered_oracle",
    "maxgen1",
    "maxgen2",
    "monotone_to_gs",
    "neighborhood_layer",
    "nullspace",
    "random_dsat",
    "random_family_graph",
    "random_tree",
    "relating_edge",
    "sat_bruteforce",
    "spaces_equal",
    "validate",
    "validate_family",
    "wcw_bip_c6free",
    "wcw_leaf_characterization",
    "wcw_oracle",
    "well_covered_bip_c6free",
    "witness_to_assignment",
]
