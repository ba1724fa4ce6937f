import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from fuzzylagrange.errors import EmptyLevelError, FuzzyAxiomError, UnsupportedFormError
from fuzzylagrange.fuzzy import (
    FuzzySubgroup,
    MembershipFunction,
    axiom_violation,
    constant,
    evaluate,
    fuzzy_join,
    fuzzy_meet,
    fuzzy_order,
    fuzzy_order_of_element,
    indicator,
    is_fuzzy_normal,
    level_sets_are_subgroups,
    level_subset,
    validate_fuzzy_subgroup,
)
from fuzzylagrange.groups import make_cyclic
from fuzzylagrange.notation import build_group
from fuzzylagrange.subgroups import (
    closure,
    enumerate_subgroups,
    relative_exponent,
    relative_order,
    trivial_subgroup,
    whole_group,
)

from oracles import naive_order

GROUPS = {s: build_group(s) for s in
          ["Z1", "Z2", "Z12", "Z2xZ2", "S3", "Q8", "A4", "D4", "ZM(3,4,2)", "Z2xZ6", "S4"]}
MU3_SET = (0, 3, 6, 9)


@pytest.fixture
def z12():
    return GROUPS["Z12"]


def mu3_raw(g):
    return MembershipFunction.from_mapping(g, {x: (1 if x in MU3_SET else 0) for x in g.elements()})


def test_mu3_validates(z12):
    f = validate_fuzzy_subgroup(mu3_raw(z12))
    assert f.top.members == MU3_SET
    assert [v for _, v in f.chain] == [1, 0]
    assert f == indicator(closure(z12, [3]))


def test_constant_single_link(z12):
    f = validate_fuzzy_subgroup(MembershipFunction(z12, [Fraction(2, 5)] * 12))
    assert len(f.chain) == 1 and f.chain[0][1] == Fraction(2, 5)


def test_identity_not_maximal_rejected():
    g = GROUPS["Z2"]
    with pytest.raises(FuzzyAxiomError):
        validate_fuzzy_subgroup(MembershipFunction(g, [0, 1]))


def test_rejection_names_witness():
    g = GROUPS["Z12"]
    # level set {0, 1} is not closed: 1 + 1 = 2 falls to value 0
    raw = MembershipFunction(g, [1, 1] + [0] * 10)
    with pytest.raises(FuzzyAxiomError) as exc:
        validate_fuzzy_subgroup(raw)
    assert exc.value.witness is not None


def test_inverse_axiom_witness():
    g = GROUPS["S3"]
    c = g.labels.index("(1 2 3)")
    values = [Fraction(0)] * 6
    values[0] = values[c] = Fraction(1)
    kind, witness = axiom_violation(MembershipFunction(g, values))
    assert kind in ("product", "inverse")


def test_membership_values_checked():
    g = GROUPS["Z2"]
    with pytest.raises(ValueError):
        MembershipFunction(g, [1, 2])
    with pytest.raises(TypeError):
        MembershipFunction(g, [1.0, 0.5])
    with pytest.raises(ValueError):
        MembershipFunction.from_mapping(g, {0: 1})


def test_chain_invariants_enforced(z12):
    h3, h6 = closure(z12, [3]), closure(z12, [6])
    g = whole_group(z12)
    with pytest.raises(ValueError):
        FuzzySubgroup(z12, [(h3, 1), (h6, 0)])        # not nested
    with pytest.raises(ValueError):
        FuzzySubgroup(z12, [(h6, 0), (g, 1)])         # values increase
    with pytest.raises(ValueError):
        FuzzySubgroup(z12, [(h6, 1), (h3, 0)])        # does not end at G
    with pytest.raises(ValueError):
        FuzzySubgroup(z12, [])


def test_indicator_forms(z12):
    assert indicator(closure(z12, [3])).membership().values == mu3_raw(z12).values
    full = indicator(whole_group(z12))
    assert len(full.chain) == 1 and all(evaluate(full, x) == 1 for x in z12.elements())
    triv = indicator(trivial_subgroup(z12))
    assert evaluate(triv, 0) == 1 and all(evaluate(triv, x) == 0 for x in range(1, 12))


def test_evaluate(z12):
    f = indicator(closure(z12, [3]))
    assert evaluate(f, 6) == 1
    assert evaluate(f, 5) == 0
    assert f(9) == 1
    c = constant(z12, Fraction(1, 3))
    assert {evaluate(c, x) for x in z12.elements()} == {Fraction(1, 3)}


def test_fuzzy_normality():
    for f in (indicator(h) for h in enumerate_subgroups(GROUPS["Z2xZ6"])):
        assert is_fuzzy_normal(f)
    s3 = GROUPS["S3"]
    assert is_fuzzy_normal(indicator(closure(s3, [s3.labels.index("(1 2 3)")])))
    assert not is_fuzzy_normal(indicator(closure(s3, [s3.labels.index("(1 2)")])))


def test_level_subsets(z12):
    f = indicator(closure(z12, [3]))
    assert level_subset(f, 1).members == MU3_SET
    assert level_subset(f, 0).order == 12
    assert level_subset(f, Fraction(1, 2)).members == MU3_SET
    c = constant(z12, Fraction(1, 2))
    assert level_subset(c, Fraction(1, 2)).order == 12
    with pytest.raises(EmptyLevelError):
        level_subset(c, Fraction(3, 4))
    with pytest.raises(ValueError):
        level_subset(f, 2)


def test_fuzzy_order_of_element_examples(z12):
    f = indicator(closure(z12, [3]))
    assert fuzzy_order_of_element(f, 1) == 3
    assert all(fuzzy_order_of_element(f, x) == 1 for x in MU3_SET)
    for g in GROUPS.values():
        triv = indicator(trivial_subgroup(g))
        assert [fuzzy_order_of_element(triv, x) for x in g.elements()] == \
               [naive_order(g, x) for x in g.elements()]


def test_fuzzy_order_examples(z12):
    assert fuzzy_order(indicator(closure(z12, [3]))) == 3
    assert fuzzy_order(constant(z12)) == 1
    for g in GROUPS.values():
        assert fuzzy_order(indicator(trivial_subgroup(g))) == g.exponent


def test_meet_and_join_in_z12(z12):
    mu = {d: indicator(closure(z12, [d % 12])) for d in (1, 2, 4, 6, 12)}
    assert fuzzy_meet(mu[4], mu[6]) == mu[12]
    assert fuzzy_join(mu[4], mu[6]) == mu[2]
    top = indicator(whole_group(z12))
    assert fuzzy_join(mu[4], top) == top


def test_meet_join_reject_non_indicators(z12):
    three = FuzzySubgroup(z12, [(closure(z12, [6]), 1), (closure(z12, [3]), Fraction(1, 2)),
                                (whole_group(z12), 0)])
    with pytest.raises(UnsupportedFormError):
        fuzzy_meet(three, indicator(whole_group(z12)))
    with pytest.raises(UnsupportedFormError):
        fuzzy_join(constant(z12, Fraction(1, 2)), indicator(whole_group(z12)))
    with pytest.raises(UnsupportedFormError):
        fuzzy_meet(indicator(whole_group(z12)), indicator(whole_group(make_cyclic(12))))


def test_json_roundtrip(z12):
    f = FuzzySubgroup(z12, [(closure(z12, [6]), 1), (closure(z12, [3]), Fraction(1, 2)),
                            (whole_group(z12), 0)])
    data = json.loads(json.dumps(f.to_json()))
    assert data["levels"][1] == {"members": [0, 3, 6, 9], "value": "1/2"}
    assert data["levels"][0]["value"] == "1/1"
    assert FuzzySubgroup.from_json(z12, data) == f


# ---------------------------------------------------------------------------
# properties


@st.composite
def chains(draw):
    """A random valid fuzzy subgroup: nested subgroups with decreasing values."""
    g = GROUPS[draw(st.sampled_from(sorted(GROUPS)))]
    subs = enumerate_subgroups(g)
    links = [draw(st.sampled_from(subs))]
    while links[-1].order != g.order:
        bigger = [k for k in subs if links[-1].member_set < k.member_set]
        links.append(draw(st.sampled_from(bigger)))
    nums = draw(st.lists(st.integers(0, 60), min_size=len(links), max_size=len(links), unique=True))
    values = sorted((Fraction(k, 60) for k in nums), reverse=True)
    return FuzzySubgroup(g, list(zip(links, values)))


@settings(max_examples=150, deadline=None)
@given(chains())
def test_fuzzy_order_identities(f):
    g = f.parent
    h0 = f.top
    for x in g.elements():
        assert fuzzy_order_of_element(f, x) == relative_order(g, h0, x)
    assert fuzzy_order(f) == relative_exponent(g, h0)
    assert g.order % fuzzy_order(f) == 0


@settings(max_examples=150, deadline=None)
@given(chains())
def test_axiom_consequences_and_round_trip(f):
    g = f.parent
    top = evaluate(f, 0)
    for x in g.elements():
        assert evaluate(f, g.inv(x)) == evaluate(f, x)
        assert evaluate(f, x) <= top
    assert validate_fuzzy_subgroup(f.membership()) == f
    for _, v in f.chain:
        level = level_subset(f, v)
        assert level.member_set == {x for x in g.elements() if evaluate(f, x) >= v}


@settings(max_examples=300, deadline=None)
@given(st.data())
def test_level_criterion_agrees_with_axioms(data):
    g = GROUPS[data.draw(st.sampled_from(["Z2", "Z12", "Z2xZ2", "S3", "Q8", "A4"]))]
    if data.draw(st.booleans()):
        # an indicator with one value perturbed: valid or barely invalid
        subs = enumerate_subgroups(g)
        h = data.draw(st.sampled_from(subs))
        values = list(indicator(h).values())
        x = data.draw(st.integers(0, g.order - 1))
        values[x] = Fraction(data.draw(st.integers(0, 4)), 4)
    else:
        values = [Fraction(data.draw(st.integers(0, 2)), 2) for _ in g.elements()]
    raw = MembershipFunction(g, values)
    assert (axiom_violation(raw) is None) == level_sets_are_subgroups(raw)
    if axiom_violation(raw) is None:
        validate_fuzzy_subgroup(raw)
    else:
        with pytest.raises(FuzzyAxiomError):
            validate_fuzzy_subgroup(raw)


@pytest.mark.parametrize("spec", sorted(GROUPS))
def test_fuzzy_lagrange_on_indicators(spec):
    g = GROUPS[spec]
    for h in enumerate_subgroups(g):
        f = indicator(h)
        assert g.order % fuzzy_order(f) == 0
        assert validate_fuzzy_subgroup(f.membership()) == f


@settings(max_examples=60, deadline=None)
@given(chains())
def test_normality_two_ways(f):
    g = f.parent
    pairwise = all(evaluate(f, g.mul(x, y)) == evaluate(f, g.mul(y, x))
                   for x in g.elements() for y in g.elements())
    assert is_fuzzy_normal(f) == pairwise
