"""
From satisfiability to generating subgraphs
===========================================

A DSAT formula becomes a DMSAT formula, which becomes a bipartite graph of
girth at least 6 whose star ``B`` is generating exactly when the formula is
satisfiable.  Satisfying assignments and witnesses translate both ways.
"""

from collections import Counter

from wellcover.cnf import Assignment, cnf_from_json
from wellcover.graph import girth
from wellcover.oracles import generating_oracle, sat_bruteforce
from wellcover.reductions import assignment_to_witness, dmsat_to_gs, dsat_to_dmsat, witness_to_assignment
from wellcover.verify import load_fixture

i1 = cnf_from_json(load_fixture("dsat_9v14c.json"))
i2 = dsat_to_dmsat(i1)
print(f"DSAT: {i1.n_vars} vars, {len(i1.clauses)} clauses -> DMSAT: {i2.n_vars} vars, {len(i2.clauses)} clauses")
print("matches the bundled golden copy:", Counter(i2.clauses) == Counter(cnf_from_json(load_fixture("dmsat_18v32c.json")).clauses))

fx = load_fixture("dmsat_10v14c.json")
art = dmsat_to_gs(cnf_from_json(fx))
g = art.graph
print(f"graph: {g.n} vertices, girth {girth(g)}")

model = sat_bruteforce(cnf_from_json(fx))
cert = generating_oracle(g, art.bx, art.by)
print("first model:", model.true_vars(), " witness found:", sorted(g.label(v) for v in cert.s))
print("witness back to assignment:", witness_to_assignment(art, cert.s).true_vars())

printed = Assignment.from_true_vars(10, fx["assignment_true"])
print("witness of the bundled assignment:", sorted(g.label(v) for v in assignment_to_witness(art, printed)))
