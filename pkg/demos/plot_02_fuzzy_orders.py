"""
Fuzzy subgroups of Z12 and their orders
=======================================

A fuzzy subgroup is stored as a chain of nested subgroups with decreasing
membership values.  Its fuzzy order is the exponent of G relative to the
top level set.
"""

from fractions import Fraction

from fuzzylagrange.fuzzy import (
    FuzzySubgroup,
    MembershipFunction,
    fuzzy_order,
    fuzzy_order_of_element,
    level_subset,
    validate_fuzzy_subgroup,
)
from fuzzylagrange.groups import make_cyclic
from fuzzylagrange.lab import image_of_O
from fuzzylagrange.subgroups import closure, whole_group

g = make_cyclic(12)

# mu_3 is 1 on {0, 3, 6, 9} and 0 elsewhere
mu3 = validate_fuzzy_subgroup(
    MembershipFunction.from_mapping(g, {x: int(x % 3 == 0) for x in g.elements()}))
print("chain:", [(h.members, str(v)) for h, v in mu3.chain])
print("O(mu_3) =", fuzzy_order(mu3))
print("FO(1) =", fuzzy_order_of_element(mu3, 1))
print("level set at 1:", level_subset(mu3, 1).members)

# a three-valued fuzzy subgroup; only the top level set matters for the order
f = FuzzySubgroup(g, [(closure(g, [6]), Fraction(1)), (closure(g, [3]), Fraction(1, 2)),
                      (whole_group(g), Fraction(0))])
print("three-valued chain has order", fuzzy_order(f))

# every divisor of 12 is the order of some fuzzy subgroup
print("Im(O) for Z12:", image_of_O(g))
