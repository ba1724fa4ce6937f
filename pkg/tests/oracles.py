"""Slow, independent reference computations used only by the tests.

None of these touch the cached powers, cyclic seeds or closure code of the
library; they work straight from the multiplication table.
"""

import itertools
import math

import numpy as np


def naive_order(g, x):
    k, y = 1, x
    while y != 0:
        y = int(g.table[y, x])
        k += 1
    return k


def naive_relative_order(g, members, x):
    members = set(members)
    k, y = 1, x
    while y not in members:
        y = int(g.table[y, x])
        k += 1
    return k


def naive_is_subgroup(g, members):
    s = set(members)
    return 0 in s and all(int(g.table[a, b]) in s for a in s for b in s)


def powerset_subgroups(g):
    """Every subset containing the identity, filtered by closure (vectorized).

    Closure under products suffices in a finite group.  Practical up to
    order 16 (2**15 candidate subsets).
    """
    n = g.order
    if n > 18:
        raise ValueError("powerset oracle is limited to order 18")
    rest = n - 1
    codes = np.arange(2 ** rest, dtype=np.int64)
    bits = np.ones((codes.size, n), dtype=bool)
    bits[:, 1:] = (codes[:, None] >> np.arange(rest)) & 1
    t = g.table
    out = []
    chunk = 4096
    for start in range(0, codes.size, chunk):
        b = bits[start:start + chunk]
        both = b[:, :, None] & b[:, None, :]
        prod_in = b[:, t]  # prod_in[s, i, j] = (i*j) in S
        ok = ~(both & ~prod_in).any(axis=(1, 2))
        for row in b[ok]:
            out.append(tuple(np.flatnonzero(row).tolist()))
    return sorted(out, key=lambda m: (len(m), m))


def _naive_closure(g, gens):
    s = {0}
    frontier = {0}
    while frontier:
        new = {int(g.table[a, b]) for a in frontier for b in gens} - s
        s |= new
        frontier = new
    return tuple(sorted(s))


def generated_subgroups(g):
    """Subgroups generated by every subset of at most log2(|g|) elements.

    Any subgroup H has a generating set of size <= log2|H|, since each new
    generator at least doubles the subgroup, so this finds them all.
    """
    n = g.order
    width = max(1, int(math.log2(n))) if n > 1 else 0
    found = {(0,)}
    for k in range(1, width + 1):
        for gens in itertools.combinations(range(1, n), k):
            found.add(_naive_closure(g, gens))
    return sorted(found, key=lambda m: (len(m), m))


def quotient_exponent_by_cosets(g, members):
    """Exponent of G/H from left cosets as frozensets, without a table."""
    members = list(members)
    cosets = {frozenset(int(g.table[x, h]) for h in members) for x in range(g.order)}
    h = frozenset(members)
    exps = []
    for c in cosets:
        x = min(c)
        k, y = 1, x
        while y not in h:
            y = int(g.table[y, x])
            k += 1
        exps.append(k)
    return math.lcm(*exps), len(cosets)
