"""
Subgroups of ZM(m, n, r) from index triples
===========================================

The subgroups of a metacyclic group ZM(m, n, r) are indexed by triples
(m1, n1, s).  Each triple gives the subgroup generated by a^m1 and
b^n1 a^s, of order (m/m1)(n/n1).
"""

from fuzzylagrange.groups import make_zm
from fuzzylagrange.lab import verify_zm_bijection
from fuzzylagrange.reports import format_table
from fuzzylagrange.subgroups import enumerate_subgroups, zm_subgroup_from_triple, zm_triples

g = make_zm(7, 3, 2)
for t in zm_triples(7, 3, 2):
    h = zm_subgroup_from_triple(g, t)
    print((t.m1, t.n1, t.s), h.order, h.labels())

print(len(zm_triples(7, 3, 2)), "triples,", len(enumerate_subgroups(g)), "subgroups")

report = verify_zm_bijection(3, 4, 2)
print(format_table(report.rows, ["triple", "order", "generators"]))
print(report.summary)
