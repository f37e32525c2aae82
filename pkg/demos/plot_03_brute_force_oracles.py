"""
Brute-force ground truth
========================

The oracles enumerate maximal independent sets.  They are slow but easy to
trust, and every fast routine is checked against them.
"""

from wellcover.graph import cycle_graph, path_graph, star_graph
from wellcover.oracles import enumerate_mis, generating_oracle, is_well_covered_oracle, wcw_oracle
from wellcover.weightspace import nullspace, satisfies

c6 = cycle_graph(6)
print("maximal independent sets of C6:", [sorted(m) for m in enumerate_mis(c6)])
print("C6 well-covered:", is_well_covered_oracle(c6))

# the weight space of C6 is two-dimensional
space = wcw_oracle(c6)
print("dim WCW(C6) =", nullspace(space).dimension)
print("(1,1,0,-1,-1,0) in WCW(C6):", satisfies(space, (1, 1, 0, -1, -1, 0)))

# a witness certifies that the edge ab of P4 is relating
cert = generating_oracle(path_graph(4), {0}, {1})
print("witness for ab in P4:", cert.to_json())

print("K_{1,3} well-covered:", is_well_covered_oracle(star_graph(3)))
