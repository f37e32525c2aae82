"""
Graphs, distance layers and forbidden cycles
============================================

Vertices are the integers ``0..n-1``.  Sets of vertices go in and come back
as ``frozenset`` objects; labels are decoration only.
"""

from wellcover.graph import (
    bipartition,
    contains_cycle_of_length,
    cycle_graph,
    get_family,
    girth,
    leaves,
    neighborhood_layer,
    path_graph,
    s_x,
    validate_family,
)

# the path a-b-c-d, numbered 0-1-2-3
p4 = path_graph(4)
print("N_2({a}) =", sorted(neighborhood_layer(p4, {0}, 2)))
print("N_2[{a}] =", sorted(neighborhood_layer(p4, {0}, 2, closed=True)))

# cycles are searched as subgraphs, not induced subgraphs
c6 = cycle_graph(6)
print("C6 has a 6-cycle:", contains_cycle_of_length(c6, 6), " girth:", girth(c6))
print("two colour classes of C6:", [sorted(s) for s in bipartition(c6)])

# family checks report the offending cycle
check = validate_family(c6, get_family("bip-c6free"))
print("C6 in bip-c6free?", bool(check), "->", check.violations[0].message, list(check.violations[0].cycle))

# leaves and S_x = N(x) minus the neighbours of leaves
print("leaves of P4:", sorted(leaves(p4)), " S_b:", sorted(s_x(p4, 1)))
