"""Fuzzy subgroups as level chains, with fuzzy orders.

A fuzzy subgroup of a finite group takes finitely many values
``t0 > t1 > ... > t_{k-1}``, and its level sets form a chain of subgroups
``H0 < H1 < ... < H_{k-1} = G``.  :class:`FuzzySubgroup` stores exactly that
chain; membership values are :class:`fractions.Fraction` so that the
predicate ``mu(x**n) == mu(e)`` is exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import EmptyLevelError, FuzzyAxiomError, UnsupportedFormError
from .groups import Group
from .subgroups import (
    Subgroup,
    is_normal,
    is_subgroup,
    join,
    meet,
    whole_group,
)

ZERO = Fraction(0)
ONE = Fraction(1)


def _as_fraction(v) -> Fraction:
    if isinstance(v, float):
        raise TypeError("membership values must be exact (int, Fraction or 'p/q' string), not float")
    return Fraction(v)


@dataclass(frozen=True)
class MembershipFunction:
    """A total map from the elements of ``parent`` to rationals in [0, 1]."""

    parent: Group
    values: tuple[Fraction, ...]

    def __post_init__(self):
        vals = tuple(_as_fraction(v) for v in self.values)
        if len(vals) != self.parent.order:
            raise ValueError(f"need {self.parent.order} values, got {len(vals)}")
        for i, v in enumerate(vals):
            if not ZERO <= v <= ONE:
                raise ValueError(f"value {v} at element {i} is outside [0, 1]")
        object.__setattr__(self, "values", vals)

    @classmethod
    def from_mapping(cls, parent: Group, values: Mapping[int, object]) -> MembershipFunction:
        missing = [x for x in parent.elements() if x not in values]
        if missing:
            raise ValueError(f"membership function is not total; missing {missing}")
        return cls(parent, tuple(values[x] for x in parent.elements()))

    def __call__(self, x) -> Fraction:
        return self.values[self.parent._index(x)]

    def ranks(self) -> np.ndarray:
        """Values replaced by their rank among the distinct values (order preserving)."""
        distinct = sorted(set(self.values))
        pos = {v: i for i, v in enumerate(distinct)}
        return np.array([pos[v] for v in self.values], dtype=np.int64)


class FuzzySubgroup:
    """A fuzzy subgroup in canonical chain form.

    ``chain`` is a sequence of ``(subgroup, value)`` pairs with strictly
    growing subgroups, strictly falling values and the whole group last.
    An element's value is that of the first subgroup containing it.
    """

    __slots__ = ("parent", "chain")

    def __init__(self, parent: Group, chain: Sequence[tuple[Subgroup, object]]):
        if not chain:
            raise ValueError("a fuzzy subgroup needs at least one level")
        links = tuple((h, _as_fraction(v)) for h, v in chain)
        for h, v in links:
            if h.parent is not parent:
                raise ValueError("chain subgroup belongs to a different group")
            if not ZERO <= v <= ONE:
                raise ValueError(f"value {v} outside [0, 1]")
            if not is_subgroup(parent, h.members):
                raise ValueError(f"{list(h.members)} is not a subgroup")
        for (h, s), (k, t) in zip(links, links[1:]):
            if not (h.member_set < k.member_set):
                raise ValueError("chain subgroups must be strictly nested")
            if not s > t:
                raise ValueError("chain values must be strictly decreasing")
        if links[-1][0].order != parent.order:
            raise ValueError("the last chain subgroup must be the whole group")
        self.parent = parent
        self.chain = links

    def __eq__(self, other):
        if not isinstance(other, FuzzySubgroup):
            return NotImplemented
        return self.parent is other.parent and self.chain == other.chain

    def __hash__(self):
        return hash((id(self.parent), self.chain))

    def __repr__(self):
        parts = ", ".join(f"{h.order}:{v}" for h, v in self.chain)
        return f"FuzzySubgroup({self.parent.spec}; {parts})"

    def __call__(self, x) -> Fraction:
        return evaluate(self, x)

    @property
    def top(self) -> Subgroup:
        """The subgroup ``{x : mu(x) == mu(e)}``."""
        return self.chain[0][0]

    @property
    def is_indicator(self) -> bool:
        values = [v for _, v in self.chain]
        return values == [ONE, ZERO] or values == [ONE]

    def values(self) -> tuple[Fraction, ...]:
        out = [None] * self.parent.order
        for h, v in reversed(self.chain):
            for x in h.members:
                out[x] = v
        return tuple(out)

    def membership(self) -> MembershipFunction:
        return MembershipFunction(self.parent, self.values())

    def to_json(self) -> dict:
        return {
            "levels": [
                {"members": list(h.members), "value": f"{v.numerator}/{v.denominator}"}
                for h, v in self.chain
            ]
        }

    @classmethod
    def from_json(cls, parent: Group, data: Mapping) -> FuzzySubgroup:
        from .subgroups import subgroup_from_members

        return cls(parent, [
            (subgroup_from_members(parent, level["members"]), Fraction(level["value"]))
            for level in data["levels"]
        ])


# ---------------------------------------------------------------------------
# validation


def axiom_violation(f: MembershipFunction):
    """First violation of ``mu(xy) >= min(mu(x), mu(y))`` or ``mu(x^-1) >= mu(x)``.

    Returns ``None`` when both axioms hold, ``("product", (x, y))`` or
    ``("inverse", x)`` otherwise.
    """
    g = f.parent
    r = f.ranks()
    bad = r[g.table] < np.minimum(r[:, None], r[None, :])
    if bad.any():
        x, y = np.argwhere(bad)[0]
        return ("product", (int(x), int(y)))
    bad = r[g.inverses] < r
    if bad.any():
        return ("inverse", int(np.argmax(bad)))
    return None


def level_sets_are_subgroups(f: MembershipFunction) -> bool:
    """Level criterion: every level set at an attained value is a subgroup."""
    g = f.parent
    for alpha in set(f.values):
        if not is_subgroup(g, [x for x in g.elements() if f.values[x] >= alpha]):
            return False
    return True


def validate_fuzzy_subgroup(f: MembershipFunction) -> FuzzySubgroup:
    """Check the fuzzy subgroup axioms and return the canonical chain form.

    Raises :class:`FuzzyAxiomError` with the offending pair or element.
    """
    violation = axiom_violation(f)
    levels_ok = level_sets_are_subgroups(f)
    if (violation is None) != levels_ok:
        raise AssertionError("axiom check and level-set check disagree")
    if violation is not None:
        kind, witness = violation
        if kind == "product":
            x, y = witness
            msg = (f"mu(xy) < min(mu(x), mu(y)) for x={f.parent.labels[x]}, "
                   f"y={f.parent.labels[y]}")
        else:
            msg = f"mu(x^-1) < mu(x) for x={f.parent.labels[witness]}"
        raise FuzzyAxiomError(msg, witness)
    g = f.parent
    chain = []
    for alpha in sorted(set(f.values), reverse=True):
        members = tuple(x for x in g.elements() if f.values[x] >= alpha)
        chain.append((Subgroup(g, members), alpha))
    return FuzzySubgroup(g, chain)


def indicator(h: Subgroup) -> FuzzySubgroup:
    """Value 1 on ``h`` and 0 elsewhere."""
    g = h.parent
    if h.order == g.order:
        return FuzzySubgroup(g, [(h, ONE)])
    return FuzzySubgroup(g, [(h, ONE), (whole_group(g), ZERO)])


def constant(g: Group, value=ONE) -> FuzzySubgroup:
    return FuzzySubgroup(g, [(whole_group(g), value)])


# ---------------------------------------------------------------------------
# queries


def evaluate(f: FuzzySubgroup, x) -> Fraction:
    x = f.parent._index(x)
    for h, v in f.chain:
        if x in h.member_set:
            return v
    raise AssertionError("unreachable: the chain ends with the whole group")


def is_fuzzy_normal(f: FuzzySubgroup) -> bool:
    """``mu(xy) == mu(yx)`` for all pairs; cross-checked against chain normality."""
    g = f.parent
    r = f.membership().ranks()
    pairwise = bool((r[g.table] == r[g.table.T]).all())
    levelwise = all(is_normal(g, h) for h, _ in f.chain)
    if pairwise != levelwise:
        raise AssertionError("pairwise and level-set normality disagree")
    return pairwise


def level_subset(f: FuzzySubgroup, alpha) -> Subgroup:
    """``{x : mu(x) >= alpha}``."""
    alpha = _as_fraction(alpha)
    if not ZERO <= alpha <= ONE:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    found = None
    for h, v in f.chain:
        if v >= alpha:
            found = h
    if found is None:
        raise EmptyLevelError(f"alpha={alpha} exceeds mu(e)={f.chain[0][1]}; the level set is empty")
    return found


def fuzzy_order_of_element(f: FuzzySubgroup, x) -> int:
    """Least ``n >= 1`` with ``mu(x**n) == mu(e)``."""
    g = f.parent
    x = g._index(x)
    top = f.chain[0][1]
    y = x
    n = 1
    while evaluate(f, y) != top:
        y = g.mul(y, x)
        n += 1
    return n


def fuzzy_order(f: FuzzySubgroup) -> int:
    """Least common multiple of the fuzzy orders of all elements."""
    return math.lcm(*(fuzzy_order_of_element(f, x) for x in f.parent.elements()))


def _require_indicator(*fs: FuzzySubgroup) -> None:
    for f in fs:
        if not f.is_indicator:
            raise UnsupportedFormError("meet and join are only implemented for indicator fuzzy subgroups")
    if len({id(f.parent) for f in fs}) != 1:
        raise UnsupportedFormError("fuzzy subgroups live in different groups")


def fuzzy_meet(f1: FuzzySubgroup, f2: FuzzySubgroup) -> FuzzySubgroup:
    _require_indicator(f1, f2)
    result = indicator(meet(f1.top, f2.top))
    return validate_fuzzy_subgroup(result.membership())


def fuzzy_join(f1: FuzzySubgroup, f2: FuzzySubgroup) -> FuzzySubgroup:
    _require_indicator(f1, f2)
    result = indicator(join(f1.top, f2.top))
    return validate_fuzzy_subgroup(result.membership())
