"""
Polynomial recognition on bipartite graphs without 6-cycles
===========================================================

``generating_bip_c6free`` decides whether an induced complete bipartite
subgraph is generating.  ``maxgen1`` and ``maxgen2`` grow maximal generating
stars and double stars, and ``wcw_bip_c6free`` collects their equations.
"""

from wellcover.algorithms import (
    decompose,
    generating_bip_c6free,
    maxgen1,
    maxgen2,
    wcw_bip_c6free,
    well_covered_bip_c6free,
)
from wellcover.graph import cycle_graph, graph_from_json, path_graph, star_graph
from wellcover.oracles import wcw_oracle
from wellcover.verify import load_fixture
from wellcover.weightspace import nullspace, spaces_equal

p4 = path_graph(4)
print("ab generating:", generating_bip_c6free(p4, {0}, {1}), " bc generating:", generating_bip_c6free(p4, {1}, {2}))
print("maxgen1(P4, b) =", sorted(maxgen1(p4, 1)), " maxgen2(C4, a, c) =", sorted(maxgen2(cycle_graph(4), 0, 2)))

# the double-star example drawn with sets A_i, Z_i, S and S'
fx = load_fixture("double_star_31.json")
g = graph_from_json(fx)
print(decompose(g, {fx["x1"], fx["x2"]}).trace(g))
print("T =", sorted(g.label(v) for v in maxgen2(g, fx["x1"], fx["x2"])))

# weight-space equations, compared with brute force
for name, h in (("P4", p4), ("C4", cycle_graph(4)), ("K13", star_graph(3))):
    sys_ = wcw_bip_c6free(h)
    print(f"{name}: dim {nullspace(sys_).dimension}, equals oracle: {spaces_equal(sys_, wcw_oracle(h))},"
          f" well-covered: {well_covered_bip_c6free(h)}")
