"""
Weight spaces with exact arithmetic
===================================

A weight space is the solution set of homogeneous linear equations in the
vertex weights.  Everything is done over :class:`fractions.Fraction`.
"""

from wellcover.weightspace import (
    ConstraintSystem,
    LinearConstraint,
    equal_weights,
    nullspace,
    spaces_equal,
    system_to_json,
)

# w_a = w_b and w_c = w_d on four vertices leaves two free directions
s = ConstraintSystem(4, [equal_weights([0], [1]), equal_weights([2], [3])])
basis = nullspace(s)
print("dimension:", basis.dimension)
for vec in basis:
    print("  basis vector:", [str(x) for x in vec])

# scaled copies normalise to one stored constraint
t = ConstraintSystem(4, [LinearConstraint.from_mapping({0: 2, 1: -2}), equal_weights([2], [3])])
print("same space after scaling:", spaces_equal(s, t))

# JSON uses "p/q" strings so output is exact on every platform
print(system_to_json(s))
