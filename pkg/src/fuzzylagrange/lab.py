"""Catalog-wide checks of the fuzzy Lagrange converse and its lemmas.

Everything here is computed exhaustively from subgroup lists.  The image of
the fuzzy-order map is taken over subgroups: a fuzzy subgroup's order equals
the exponent of the group relative to its top level set, and every subgroup
is the top level set of its indicator, so nothing is lost.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field
from functools import lru_cache

from .arith import DivisorLattice, closure_failure, divisors, prime_divisors
from .errors import (
    BijectionMismatch,
    ConsistencyError,
    ConstructionViolation,
    InvalidParameterError,
    IsoViolation,
    LemmaViolation,
    TheoremViolation,
)
from .fuzzy import (
    FuzzySubgroup,
    fuzzy_join,
    fuzzy_meet,
    fuzzy_order,
    fuzzy_order_of_element,
    indicator,
)
from .groups import DEFAULT_CAP, Group, check_zm_parameters, make_zm
from .notation import build_group, parse_group_spec, spec_order
from .subgroups import (
    Subgroup,
    closure,
    enumerate_subgroups,
    quotient_group,
    relative_exponent,
    relative_order,
    subgroup_is_cyclic,
    sylow_subgroup,
    zm_subgroup_coset_union,
    zm_subgroup_from_triple,
    zm_triples,
)

DEFAULT_MAX_ORDER = 60

# direct products added to the catalog beyond the named families
_PRODUCTS = [
    "Z2xZ3", "Z3xZ4", "Z2xZ4", "Z2xZ6", "Z2xZ8", "Z4xZ4", "Z3xZ6", "Z2xZ10",
    "Z2xZ12", "Z2xZ14", "Z3xZ9", "Z4xZ9", "Z2xZ2xZ2", "Z2xZ2xZ4", "Z2xZ2xZ3",
    "Z2xZ2xZ2xZ2", "Z2xZ2xZ2xZ3", "Z3xZ3xZ3", "Z2xZ2xZ2xZ2xZ2",
    "Z2xS3", "Z3xS3", "Z4xS3", "Z5xS3", "Z2xZ2xS3", "Z2xQ8", "Z3xQ8", "Z5xQ8",
    "Z2xA4", "Z3xA4", "Z2xD4", "Z2xD5", "Z3xD4", "Z2xS4", "S3xS3",
    "Z3xZM(7,3,2)", "Z2xZM(3,4,2)", "Z5xZM(3,4,2)",
]


# ---------------------------------------------------------------------------
# per-group analysis


@lru_cache(maxsize=512)
def _subgroup_exponents(g: Group) -> tuple[tuple[Subgroup, int], ...]:
    return tuple((h, relative_exponent(g, h)) for h in enumerate_subgroups(g, g.order))


def subgroup_exponents(g: Group, cap: int = DEFAULT_CAP) -> list[tuple[Subgroup, int]]:
    """Every subgroup paired with the exponent of ``g`` relative to it."""
    enumerate_subgroups(g, cap)  # cap check
    return list(_subgroup_exponents(g))


def image_of_O(g: Group, cap: int = DEFAULT_CAP) -> list[int]:
    """Sorted set of fuzzy orders attained by fuzzy subgroups of ``g``."""
    return sorted({e for _, e in subgroup_exponents(g, cap)})


@dataclass
class CfltResult:
    holds: bool
    missing: list[int]
    witnesses: dict[int, FuzzySubgroup]

    def __bool__(self):
        return self.holds


def satisfies_cflt(g: Group, cap: int = DEFAULT_CAP) -> CfltResult:
    """Does every divisor ``d`` of ``|g|`` occur as some fuzzy order?

    Witnesses are indicators of the first subgroup (in enumeration order)
    whose relative exponent is ``d``.
    """
    first: dict[int, Subgroup] = {}
    for h, e in subgroup_exponents(g, cap):
        first.setdefault(e, h)
    missing = [d for d in divisors(g.order) if d not in first]
    witnesses = {d: indicator(first[d]) for d in sorted(first)}
    return CfltResult(not missing, missing, witnesses)


def satisfies_clt(g: Group, cap: int = DEFAULT_CAP) -> bool:
    """Converse of the classical theorem: a subgroup of every order dividing ``|g|``."""
    orders = {h.order for h in enumerate_subgroups(g, cap)}
    return all(d in orders for d in divisors(g.order))


def sylow_all_cyclic(g: Group) -> bool:
    return all(subgroup_is_cyclic(sylow_subgroup(g, p)) for p in prime_divisors(g.order))


@dataclass
class GroupReport:
    spec: str
    order: int
    divisors: list[int]
    image_of_O: list[int]
    cflt: bool
    clt: bool
    cyclic: bool
    sylow_all_cyclic: bool
    missing_divisors: list[int]
    witnesses: dict[int, tuple[list[int], int]]
    subgroup_count: int = 0
    exponent: int = 0

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "divisors": self.divisors,
            "image_of_O": self.image_of_O,
            "cflt": self.cflt,
            "clt": self.clt,
            "cyclic": self.cyclic,
            "sylow_all_cyclic": self.sylow_all_cyclic,
            "missing_divisors": self.missing_divisors,
            "witnesses": {
                str(d): {"members": members, "relative_exponent": e}
                for d, (members, e) in self.witnesses.items()
            },
            "subgroup_count": self.subgroup_count,
            "exponent": self.exponent,
        }


def analyze_group(g: Group, cap: int = DEFAULT_CAP) -> GroupReport:
    cflt = satisfies_cflt(g, cap)
    return GroupReport(
        spec=g.spec,
        order=g.order,
        divisors=divisors(g.order),
        image_of_O=image_of_O(g, cap),
        cflt=cflt.holds,
        clt=satisfies_clt(g, cap),
        cyclic=g.cyclic,
        sylow_all_cyclic=sylow_all_cyclic(g),
        missing_divisors=cflt.missing,
        witnesses={d: (list(f.top.members), d) for d, f in cflt.witnesses.items()},
        subgroup_count=len(enumerate_subgroups(g, cap)),
        exponent=g.exponent,
    )


# ---------------------------------------------------------------------------
# catalog


def zm_parameters(max_order: int) -> list[tuple[int, int, int]]:
    """Valid ``(m, n, r)`` with ``m*n <= max_order``, ``n >= 2`` and ``2 <= r < m``.

    Requiring ``r`` to be reduced mod ``m`` and different from 1 keeps exactly
    the non-abelian presentations.
    """
    out = []
    for m in range(3, max_order // 2 + 1):
        for n in range(2, max_order // m + 1):
            for r in range(2, m):
                if math.gcd(m, n) == 1 and math.gcd(m, r - 1) == 1 and pow(r, n, m) == 1:
                    out.append((m, n, r))
    return out


@dataclass
class Catalog:
    """Deterministic list of group descriptors of order at most ``max_order``.

    This is a curated family list, not every isomorphism type.
    """

    max_order: int
    entries: list[str]
    cap: int = DEFAULT_CAP
    _groups: list[Group] | None = field(default=None, init=False, repr=False, compare=False)

    def groups(self) -> list[Group]:
        if self._groups is None:
            self._groups = [build_group(s, self.cap) for s in self.entries]
        return self._groups

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.groups())


def build_catalog(max_order: int = DEFAULT_MAX_ORDER, cap: int = DEFAULT_CAP,
                  families: tuple[str, ...] | None = None) -> Catalog:
    """Cyclic, dihedral, Z_p x Z_p, S3, S4, A4, A5, S5, Q8, ZM and assorted products.

    ``families`` restricts the catalog, e.g. ``("cyclic",)``.
    """
    if max_order < 1:
        raise InvalidParameterError(f"max_order must be positive, got {max_order}")
    if max_order > cap:
        raise InvalidParameterError(f"max_order {max_order} exceeds cap {cap}")
    wanted = set(families) if families else None

    def want(name):
        return wanted is None or name in wanted

    entries: list[str] = []
    if want("cyclic"):
        entries += [f"Z{n}" for n in range(1, max_order + 1)]
    if want("dihedral"):
        entries += [f"D{n}" for n in range(1, max_order // 2 + 1)]
    if want("elementary"):
        entries += [f"Z{p}xZ{p}" for p in range(2, max_order) if p * p <= max_order
                    and all(p % q for q in range(2, p))]
    if want("permutation"):
        entries += ["S3", "A4", "S4", "A5", "S5"]
    if want("quaternion"):
        entries += ["Q8"]
    if want("zm"):
        entries += [f"ZM({m},{n},{r})" for m, n, r in zm_parameters(max_order)]
    if want("product"):
        entries += _PRODUCTS
    entries = [e for e in entries if spec_order(parse_group_spec(e)) <= max_order]
    return Catalog(max_order, list(dict.fromkeys(entries)), cap)


# ---------------------------------------------------------------------------
# suites


@dataclass
class SuiteReport:
    name: str
    rows: list[dict]
    passed: bool = True
    notes: list[str] = field(default_factory=list)
    summary: dict = field(default_factory=dict)


def verify_main_theorem(catalog: Catalog) -> SuiteReport:
    """CFLT holds exactly for the cyclic groups of the catalog."""
    rows = []
    for g in catalog:
        res = satisfies_cflt(g, catalog.cap)
        row = {"spec": g.spec, "order": g.order, "cyclic": g.cyclic, "cflt": res.holds,
               "missing_divisors": res.missing}
        rows.append(row)
        if res.holds != g.cyclic:
            raise TheoremViolation(f"{g.spec}: cflt={res.holds} but cyclic={g.cyclic}", row)
    return SuiteReport("main-theorem", rows)


def verify_lemma1(catalog: Catalog) -> SuiteReport:
    """Groups satisfying CFLT have only cyclic Sylow subgroups."""
    rows = []
    for g in catalog:
        holds = satisfies_cflt(g, catalog.cap).holds
        sylows = {p: sylow_subgroup(g, p) for p in prime_divisors(g.order)}
        cyc = {p: subgroup_is_cyclic(s) for p, s in sylows.items()}
        row = {"spec": g.spec, "cflt": holds, "sylow_cyclic": {str(p): c for p, c in cyc.items()}}
        rows.append(row)
        if holds and not all(cyc.values()):
            bad = next(p for p, c in cyc.items() if not c)
            row["witness"] = list(sylows[bad].members)
            raise LemmaViolation(f"{g.spec} satisfies CFLT but its Sylow {bad}-subgroup is not cyclic", row)
    return SuiteReport("lemma1", rows)


def _cyclic_generator(g: Group) -> int:
    if not g.cyclic:
        raise InvalidParameterError(f"{g.spec} is not cyclic")
    return int((g.element_orders == g.order).argmax())


def verify_mu_d_construction(g: Group) -> SuiteReport:
    """For each divisor d: |G/H_d|, exp_{H_d}(G), exp(G/H_d) and O(mu_d) all equal d."""
    a = _cyclic_generator(g)
    rows = []
    for d in divisors(g.order):
        h = closure(g, [g.power(a, d)])
        q = quotient_group(g, h)
        row = {
            "spec": g.spec, "d": d,
            "index": q.order,
            "relative_exponent": relative_exponent(g, h),
            "quotient_exponent": q.exponent,
            "fuzzy_order": fuzzy_order(indicator(h)),
        }
        rows.append(row)
        if not all(row[k] == d for k in ("index", "relative_exponent", "quotient_exponent", "fuzzy_order")):
            raise ConstructionViolation(f"{g.spec}, d={d}: {row}", row)
    return SuiteReport("mu-d-construction", rows)


def verify_sublattice_iso(g: Group) -> SuiteReport:
    """The indicators of ``<a^d>`` form a sublattice mapped onto L_n by O."""
    a = _cyclic_generator(g)
    lattice = DivisorLattice(g.order)
    family = {d: indicator(closure(g, [g.power(a, d)])) for d in lattice}
    by_value = {f: d for d, f in family.items()}
    orders = {d: fuzzy_order(f) for d, f in family.items()}
    if sorted(orders.values()) != lattice.divisors or any(orders[d] != d for d in lattice):
        raise IsoViolation(f"{g.spec}: O is not a bijection onto the divisors", orders)
    rows = []
    for d, e in itertools.combinations_with_replacement(lattice.divisors, 2):
        m, j = fuzzy_meet(family[d], family[e]), fuzzy_join(family[d], family[e])
        if m not in by_value or j not in by_value:
            raise IsoViolation(f"{g.spec}: family not closed for d={d}, d'={e}", (d, e))
        row = {"spec": g.spec, "d": d, "d2": e, "O_meet": orders[by_value[m]],
               "O_join": orders[by_value[j]]}
        rows.append(row)
        if row["O_meet"] != lattice.join(d, e) or row["O_join"] != lattice.meet(d, e):
            raise IsoViolation(f"{g.spec}: meet/join not sent to lcm/gcd for {d}, {e}", row)
    return SuiteReport("sublattice-iso", rows)


def verify_zm_bijection(m: int, n: int, r: int, cap: int = DEFAULT_CAP) -> SuiteReport:
    """Triples of the indexing set map one-to-one onto all subgroups of ZM(m, n, r)."""
    g = make_zm(m, n, r, cap=cap)
    triples = zm_triples(m, n, r)
    subgroups = enumerate_subgroups(g, cap)
    rows, image = [], {}
    for t in triples:
        h = zm_subgroup_from_triple(g, t)
        row = {
            "triple": [t.m1, t.n1, t.s],
            "order": h.order,
            "generators": [g.labels[x] for x in h.generators],
            "members": list(h.members),
        }
        rows.append(row)
        if h.order != (m // t.m1) * (n // t.n1):
            raise BijectionMismatch(f"{t}: order {h.order} != (m/m1)(n/n1)", row)
        if zm_subgroup_coset_union(g, t) != h.member_set:
            raise BijectionMismatch(f"{t}: coset-union form differs from generated subgroup", row)
        if h in image:
            raise BijectionMismatch(f"{t} and {image[h]} give the same subgroup", row)
        image[h] = t
    report = SuiteReport(f"zm-bijection ZM({m},{n},{r})", rows)
    report.summary = {"triples": len(triples), "brute_force_subgroups": len(subgroups),
                      "bijection": set(image) == set(subgroups)}
    if set(image) != set(subgroups):
        raise BijectionMismatch(
            f"ZM({m},{n},{r}): {len(triples)} triples but {len(subgroups)} subgroups",
            {"triples": len(triples), "subgroups": len(subgroups)})
    return report


@dataclass
class ComparisonReport:
    rows: list[dict]
    clt_not_cflt: list[str]
    cflt_not_clt: list[str]


def clt_vs_cflt_comparison(catalog: Catalog) -> ComparisonReport:
    """CLT and CFLT flags side by side; a CFLT group that is not CLT is an error."""
    rows, sep, bad = [], [], []
    for g in catalog:
        clt, cflt = satisfies_clt(g, catalog.cap), satisfies_cflt(g, catalog.cap).holds
        rows.append({"spec": g.spec, "order": g.order, "clt": clt, "cflt": cflt})
        if clt and not cflt:
            sep.append(g.spec)
        if cflt and not clt:
            bad.append(g.spec)
    if bad:
        raise ConsistencyError(f"CFLT but not CLT: {bad}", bad)
    return ComparisonReport(rows, sep, bad)


@dataclass
class OpenProblemRow:
    spec: str
    order: int
    image_of_O: list[int]
    gcd_closed: bool
    lcm_closed: bool
    gcd_counterexample: tuple[int, int] | None
    lcm_counterexample: tuple[int, int] | None
    indicator_injective: bool

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "image_of_O": self.image_of_O,
            "gcd_closed": self.gcd_closed,
            "lcm_closed": self.lcm_closed,
            "gcd_counterexample": list(self.gcd_counterexample) if self.gcd_counterexample else None,
            "lcm_counterexample": list(self.lcm_counterexample) if self.lcm_counterexample else None,
            "indicator_injective": self.indicator_injective,
        }


def open_problem_study(catalog: Catalog) -> list[OpenProblemRow]:
    """Is the image of O closed under gcd and lcm?  Evidence only, per group.

    ``indicator_injective`` says whether distinct subgroups always have
    distinct relative exponents, i.e. whether O is injective on indicators.
    """
    rows = []
    for g in catalog:
        pairs = subgroup_exponents(g, catalog.cap)
        image = sorted({e for _, e in pairs})
        fail = closure_failure(image)
        rows.append(OpenProblemRow(
            spec=g.spec, order=g.order, image_of_O=image,
            gcd_closed=fail["gcd"] is None, lcm_closed=fail["lcm"] is None,
            gcd_counterexample=fail["gcd"], lcm_counterexample=fail["lcm"],
            indicator_injective=len(image) == len(pairs),
        ))
    return rows


def verify_fuzzy_identities(catalog: Catalog, cases: int = 200, seed: int = 0) -> SuiteReport:
    """Random (group, subgroup, element) cases: fuzzy orders against relative orders.

    Checks the element identity, the group-level identity and that the fuzzy
    order divides the group order.
    """
    rng = random.Random(seed)
    groups = catalog.groups()
    rows = []
    for i in range(cases):
        g = rng.choice(groups)
        h = rng.choice(enumerate_subgroups(g, catalog.cap))
        x = rng.randrange(g.order)
        f = indicator(h)
        row = {
            "case": i, "spec": g.spec, "subgroup": list(h.members), "x": x,
            "fuzzy_order_of_element": fuzzy_order_of_element(f, x),
            "relative_order": relative_order(g, h, x),
            "fuzzy_order": fuzzy_order(f),
            "relative_exponent": relative_exponent(g, h),
        }
        rows.append(row)
        if (row["fuzzy_order_of_element"] != row["relative_order"]
                or row["fuzzy_order"] != row["relative_exponent"]
                or g.order % row["fuzzy_order"]):
            raise ConstructionViolation(f"fuzzy-order identity fails: {row}", row)
    report = SuiteReport("fuzzy-identities", rows)
    report.notes.append(f"seed={seed}")
    return report


def check_zm_catalog(max_order: int, cap: int = DEFAULT_CAP) -> list[SuiteReport]:
    out = []
    for m, n, r in zm_parameters(max_order):
        check_zm_parameters(m, n, r)
        out.append(verify_zm_bijection(m, n, r, cap))
    return out
