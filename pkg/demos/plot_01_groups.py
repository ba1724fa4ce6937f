"""
Finite groups as multiplication tables
======================================

Every group is an n x n numpy array of element indices, with index 0 the
identity.  Orders, inverses and powers are all read off that table.
"""

import numpy as np

from fuzzylagrange.groups import make_cyclic, make_zm
from fuzzylagrange.notation import build_group

# Z12: index k stands for k (mod 12)
z12 = make_cyclic(12)
print(z12.table[:4, :4])
print("orders in Z12:", z12.element_orders.tolist())

# the group notation builds products, permutation groups and metacyclic groups
for text in ["Z2xZ2", "S3", "Q8", "A4", "ZM(3,4,2)"]:
    g = build_group(text)
    print(f"{text:10s} order {g.order:2d}  exponent {g.exponent:2d}  "
          f"abelian {g.abelian!s:5s}  census {g.order_census()}")

# ZM(3,4,2) = <a, b | a^3 = b^4 = 1, b^-1 a b = a^2>, elements b^x a^y
g = make_zm(3, 4, 2)
print(g.labels)

# a Cayley table is a Latin square: every row is a permutation
assert all(np.array_equal(np.sort(row), np.arange(g.order)) for row in g.table)
