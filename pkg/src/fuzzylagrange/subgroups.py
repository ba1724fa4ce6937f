"""Subgroups, relative orders and exponents, Sylow subgroups, ZM triples."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

from .errors import (
    InvalidParameterError,
    InvalidTripleError,
    NotAPrimeDivisorError,
    SizeLimitError,
)
from .groups import DEFAULT_CAP, Group, check_zm_parameters, zm_index
from .arith import divisors, factorize, is_prime


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of ``parent`` held as a sorted tuple of element indices.

    Two subgroups are equal when they share the parent object and the member
    set.  ``generators`` records how the subgroup was produced and plays no
    part in equality.
    """

    parent: Group
    members: tuple[int, ...]
    generators: tuple[int, ...] = field(default=(), repr=False)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.parent is other.parent and self.members == other.members

    def __hash__(self):
        return hash((id(self.parent), self.members))

    def __len__(self):
        return len(self.members)

    def __contains__(self, x) -> bool:
        return x in self.member_set

    def __iter__(self):
        return iter(self.members)

    @property
    def order(self) -> int:
        return len(self.members)

    @cached_property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.members)] = True
        m.setflags(write=False)
        return m

    def issubset(self, other: Subgroup) -> bool:
        return self.member_set <= other.member_set

    def sort_key(self):
        return (len(self.members), self.members)

    def labels(self) -> list[str]:
        return [self.parent.labels[i] for i in self.members]


def is_subgroup(g: Group, members: Iterable[int]) -> bool:
    """Exhaustive subgroup test: identity, products and inverses stay inside."""
    idx = np.array(sorted(set(members)), dtype=np.int64)
    if idx.size == 0 or idx[0] != 0 or idx[-1] >= g.order:
        return False
    mask = np.zeros(g.order, dtype=bool)
    mask[idx] = True
    return bool(mask[g.table[np.ix_(idx, idx)]].all() and mask[g.inverses[idx]].all())


def subgroup_from_members(g: Group, members: Iterable[int]) -> Subgroup:
    members = tuple(sorted(set(int(x) for x in members)))
    if not is_subgroup(g, members):
        raise InvalidParameterError(f"{list(members)} is not a subgroup of {g.spec}")
    return Subgroup(g, members)


def whole_group(g: Group) -> Subgroup:
    return Subgroup(g, tuple(range(g.order)), (0,) if g.order == 1 else ())


def trivial_subgroup(g: Group) -> Subgroup:
    return Subgroup(g, (0,), ())


def closure(g: Group, generators: Iterable[int] = ()) -> Subgroup:
    """Smallest subgroup containing ``generators``, by breadth-first products.

    In a finite group the monoid generated by a set is already a group, so
    right-multiplying by the generators alone reaches everything.
    """
    gens = tuple(dict.fromkeys(g._index(x) for x in generators))
    rows = g.rows
    seen = {0}
    queue = deque([0])
    while queue:
        x = queue.popleft()
        row = rows[x]
        for s in gens:
            y = row[s]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return Subgroup(g, tuple(sorted(seen)), tuple(s for s in gens if s != 0))


def join(h: Subgroup, k: Subgroup) -> Subgroup:
    """Subgroup generated by ``h`` and ``k``."""
    gens = (h.generators or h.members) + (k.generators or k.members)
    return closure(h.parent, gens)


def meet(h: Subgroup, k: Subgroup) -> Subgroup:
    return Subgroup(h.parent, tuple(sorted(h.member_set & k.member_set)))


def enumerate_subgroups(g: Group, cap: int = DEFAULT_CAP) -> list[Subgroup]:
    """All subgroups of ``g``, sorted by order then by member list.

    Starts from the cyclic subgroups and keeps adjoining one cyclic subgroup
    at a time until nothing new appears.  Every subgroup is generated by
    finitely many cyclic subgroups, so the fixed point is the whole lattice.
    """
    if g.order > cap:
        raise SizeLimitError(f"group order {g.order} exceeds cap {cap}")
    return list(_enumerate(g))


@lru_cache(maxsize=512)
def _enumerate(g: Group) -> tuple[Subgroup, ...]:
    cyclic = cyclic_subgroups(g)
    found: dict[tuple[int, ...], Subgroup] = {h.members: h for h in cyclic}
    queue = deque(cyclic)
    while queue:
        h = queue.popleft()
        for c in cyclic:
            if c.generators and c.generators[0] in h.member_set:
                continue
            if not c.generators:  # trivial subgroup
                continue
            k = closure(g, h.generators + c.generators)
            if k.members not in found:
                found[k.members] = k
                queue.append(k)
    return tuple(sorted(found.values(), key=Subgroup.sort_key))


def cyclic_subgroups(g: Group) -> list[Subgroup]:
    """Distinct cyclic subgroups, each tagged with its first generator in index order."""
    seen: dict[tuple[int, ...], Subgroup] = {}
    for x in g.elements():
        o = int(g.element_orders[x])
        members = tuple(sorted(set(g.powers[x, :o].tolist())))
        if members not in seen:
            seen[members] = Subgroup(g, members, (x,) if x else ())
    return sorted(seen.values(), key=Subgroup.sort_key)


def is_normal(g: Group, h: Subgroup) -> bool:
    """True iff conjugating ``h`` by every element of ``g`` stays inside ``h``."""
    idx = np.array(h.members)
    conj = g.table[g.table[:, idx], g.inverses[:, None]]
    return bool(h.mask[conj].all())


def relative_orders(g: Group, h: Subgroup) -> np.ndarray:
    """``o_H(x)`` for every element ``x``: least ``k >= 1`` with ``x**k`` in ``h``."""
    hits = h.mask[g.powers[:, 1:]]
    # x**exp(g) == e is always a hit, so argmax finds a genuine True
    return np.argmax(hits, axis=1) + 1


def relative_order(g: Group, h: Subgroup, x) -> int:
    x = g._index(x)
    for k in range(1, int(g.element_orders[x]) + 1):
        if int(g.powers[x, k]) in h.member_set:
            return k
    raise AssertionError("unreachable: x**o(x) is the identity")


def relative_exponent(g: Group, h: Subgroup) -> int:
    """Least common multiple of the relative orders of all elements."""
    return math.lcm(*relative_orders(g, h).tolist())


def quotient_group(g: Group, h: Subgroup) -> Group:
    """``g / h`` for a normal subgroup, built from coset representatives.

    Coset ``i`` is represented by its smallest member; coset 0 is ``h``.
    """
    if not is_normal(g, h):
        raise InvalidParameterError(f"subgroup {list(h.members)} is not normal in {g.spec}")
    coset_of = np.full(g.order, -1, dtype=np.int64)
    reps = []
    for x in g.elements():
        if coset_of[x] < 0:
            coset_of[g.table[x, list(h.members)]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    table = coset_of[g.table[np.ix_(reps, reps)]]
    labels = [f"{g.labels[r]}H" for r in reps]
    return Group(table, labels, spec=f"{g.spec}/H{len(h)}", cap=max(g.order, 1))


def sylow_subgroup(g: Group, p: int) -> Subgroup:
    """First Sylow ``p``-subgroup in enumeration order."""
    if not is_prime(p) or g.order % p:
        raise NotAPrimeDivisorError(f"{p} is not a prime divisor of {g.order}")
    target = p ** factorize(g.order)[p]
    for h in _enumerate(g):
        if h.order == target:
            return h
    raise AssertionError(f"no subgroup of order {target}; Sylow's theorem guarantees one")


# ---------------------------------------------------------------------------
# ZM(m, n, r)


@dataclass(frozen=True, order=True)
class ZmTriple:
    """Index ``(m1, n1, s)`` of a subgroup of ZM(m, n, r)."""

    m1: int
    n1: int
    s: int


def _geometric_quotient(r: int, n: int, n1: int) -> int:
    """``(r**n - 1) / (r**n1 - 1)`` as the exact sum ``sum_k r**(k*n1)``.

    The sum form is the same integer for ``r >= 2`` and stays meaningful at
    ``r = 1`` where the fraction is 0/0.
    """
    return sum(r ** (k * n1) for k in range(n // n1))


def in_zm_triple_set(m: int, n: int, r: int, t: ZmTriple) -> bool:
    return (
        t.m1 >= 1 and m % t.m1 == 0
        and t.n1 >= 1 and n % t.n1 == 0
        and 0 <= t.s < t.m1
        and (t.s * _geometric_quotient(r, n, t.n1)) % t.m1 == 0
    )


def zm_triples(m: int, n: int, r: int) -> list[ZmTriple]:
    """Every triple of the indexing set, ordered by ``(m1, n1, s)``."""
    check_zm_parameters(m, n, r)
    out = []
    for m1 in divisors(m):
        for n1 in divisors(n):
            q = _geometric_quotient(r, n, n1)
            out.extend(ZmTriple(m1, n1, s) for s in range(m1) if (s * q) % m1 == 0)
    return out


def _zm_params(g: Group) -> tuple[int, int, int]:
    if g.meta.get("family") != "zm":
        raise InvalidParameterError(f"{g.spec} was not built by make_zm")
    return g.meta["m"], g.meta["n"], g.meta["r"]


def zm_subgroup_from_triple(g: Group, t: ZmTriple) -> Subgroup:
    """``<a**m1, b**n1 a**s>``; its order is ``(m/m1) * (n/n1)``."""
    m, n, r = _zm_params(g)
    if not in_zm_triple_set(m, n, r, t):
        raise InvalidTripleError(f"{t} is not a valid triple for ZM({m},{n},{r})")
    a_part = zm_index(m, 0, t.m1 % m)
    alpha = zm_index(m, t.n1 % n, t.s)
    return closure(g, (a_part, alpha))


def zm_subgroup_coset_union(g: Group, t: ZmTriple) -> frozenset[int]:
    """The same subgroup written as a union of cosets ``alpha**k <a**m1>``, k = 1..n/n1."""
    m, n, r = _zm_params(g)
    if not in_zm_triple_set(m, n, r, t):
        raise InvalidTripleError(f"{t} is not a valid triple for ZM({m},{n},{r})")
    a_sub = closure(g, (zm_index(m, 0, t.m1 % m),)).members
    alpha = zm_index(m, t.n1 % n, t.s)
    out = set()
    for k in range(1, n // t.n1 + 1):
        ak = g.power(alpha, k)
        out.update(g.rows[ak][y] for y in a_sub)
    return frozenset(out)


def subgroup_is_cyclic(h: Subgroup) -> bool:
    orders = h.parent.element_orders
    return any(int(orders[x]) == h.order for x in h.members)
