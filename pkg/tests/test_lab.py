import math

import pytest

from fuzzylagrange import lab
from fuzzylagrange.arith import DivisorLattice, closure_failure, divisors, factorize, prime_divisors
from fuzzylagrange.errors import (
    ConsistencyError,
    InvalidParameterError,
    LemmaViolation,
    TheoremViolation,
)
from fuzzylagrange.fuzzy import fuzzy_order
from fuzzylagrange.groups import make_cyclic
from fuzzylagrange.lab import (
    Catalog,
    analyze_group,
    build_catalog,
    clt_vs_cflt_comparison,
    image_of_O,
    open_problem_study,
    satisfies_cflt,
    satisfies_clt,
    verify_lemma1,
    verify_main_theorem,
    verify_mu_d_construction,
    verify_sublattice_iso,
    verify_zm_bijection,
    zm_parameters,
)
from fuzzylagrange.notation import build_group
from fuzzylagrange.subgroups import enumerate_subgroups, relative_exponent


@pytest.fixture(scope="module")
def catalog():
    return build_catalog(36)


# ---------------------------------------------------------------------------
# divisor lattice


def test_divisors_and_factorization():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(1) == [1]
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    assert prime_divisors(60) == [2, 3, 5]
    with pytest.raises(ValueError):
        divisors(0)


@pytest.mark.parametrize("n", [1, 7, 12, 36, 60])
def test_divisor_lattice_closed(n):
    lat = DivisorLattice(n)
    assert lat.divisors[0] == 1 and lat.divisors[-1] == n
    for a in lat:
        for b in lat:
            assert lat.meet(a, b) in lat and lat.join(a, b) in lat
            assert lat.leq(lat.meet(a, b), a) and lat.leq(a, lat.join(a, b))


def test_closure_failure():
    assert closure_failure([1, 2, 6]) == {"gcd": None, "lcm": None}
    assert closure_failure([1, 4, 6, 12]) == {"gcd": (4, 6), "lcm": None}
    assert closure_failure([1, 2, 3]) == {"gcd": None, "lcm": (2, 3)}


# ---------------------------------------------------------------------------
# image of O, CFLT, CLT


@pytest.mark.parametrize("spec, image", [
    ("Z12", [1, 2, 3, 4, 6, 12]),
    ("Z2xZ2", [1, 2]),
    ("S3", [1, 2, 6]),
])
def test_image_of_O(spec, image):
    assert image_of_O(build_group(spec)) == image


@pytest.mark.parametrize("spec, holds, missing", [
    ("Z12", True, []),
    ("Z2xZ2", False, [4]),
    ("S3", False, [3]),
])
def test_cflt(spec, holds, missing):
    g = build_group(spec)
    res = satisfies_cflt(g)
    assert bool(res) is holds and res.missing == missing
    for d, f in res.witnesses.items():
        assert fuzzy_order(f) == d
        assert f.is_indicator


@pytest.mark.parametrize("spec, clt", [("S3", True), ("A4", False), ("Z30", True), ("Q8", True)])
def test_clt(spec, clt):
    assert satisfies_clt(build_group(spec)) is clt


def test_a4_has_no_subgroup_of_order_6():
    assert 6 not in {h.order for h in enumerate_subgroups(build_group("A4"))}


def test_group_report_invariants(catalog):
    for g in catalog:
        rep = analyze_group(g)
        assert set(rep.image_of_O) <= set(rep.divisors)
        assert rep.cflt == (not rep.missing_divisors)
        assert sorted(rep.witnesses) == rep.image_of_O
        for d, (members, e) in rep.witnesses.items():
            assert d == e
        data = rep.to_json()
        assert set(data) >= {"spec", "order", "divisors", "image_of_O", "cflt", "clt", "cyclic",
                             "sylow_all_cyclic", "missing_divisors", "witnesses"}


def test_fuzzy_lagrange_at_scale(catalog):
    for g in catalog:
        image = image_of_O(g)
        assert 1 in image and g.exponent in image
        for h in enumerate_subgroups(g):
            assert g.order % relative_exponent(g, h) == 0
        if g.cyclic:
            assert len(image) == len(divisors(g.order))


# ---------------------------------------------------------------------------
# catalog


def test_catalog_contents():
    cat = build_catalog(60)
    assert len(cat.entries) == len(set(cat.entries))
    for needed in ["Z1", "Z60", "D30", "Z2xZ2", "Z7xZ7", "S3", "S4", "A4", "A5", "Q8", "ZM(3,4,2)"]:
        assert needed in cat.entries
    assert all(g.order <= 60 for g in cat)
    assert "S5" not in cat.entries
    assert "S5" in build_catalog(120).entries


def test_catalog_bounds():
    with pytest.raises(InvalidParameterError):
        build_catalog(0)
    with pytest.raises(InvalidParameterError):
        build_catalog(200)
    assert build_catalog(1).entries == ["Z1"]


def test_zm_parameters_valid():
    for m, n, r in zm_parameters(60):
        assert m * n <= 60 and math.gcd(m, n) == 1 and math.gcd(m, r - 1) == 1
        assert pow(r, n, m) == 1 and r % m != 1


# ---------------------------------------------------------------------------
# suites


def test_main_theorem(catalog):
    rep = verify_main_theorem(catalog)
    assert len(rep.rows) == len(catalog)


def test_main_theorem_trivial_catalog():
    assert verify_main_theorem(Catalog(1, ["Z1"])).rows[0]["cflt"]


def test_zm_catalog_all_fail_cflt():
    cat = build_catalog(60, families=("zm",))
    rep = verify_main_theorem(cat)
    assert rep.rows and all(not r["cyclic"] and not r["cflt"] for r in rep.rows)


def test_main_theorem_mismatch_raises(monkeypatch):
    real = lab.satisfies_cflt

    def lying(g, cap=lab.DEFAULT_CAP):
        res = real(g, cap)
        if g.spec == "S3":
            res.holds = True
        return res

    monkeypatch.setattr(lab, "satisfies_cflt", lying)
    with pytest.raises(TheoremViolation) as exc:
        verify_main_theorem(Catalog(6, ["Z6", "S3"]))
    assert exc.value.witness["spec"] == "S3"


def test_lemma1(catalog):
    rep = verify_lemma1(catalog)
    rows = {r["spec"]: r for r in rep.rows}
    assert rows["Z12"]["sylow_cyclic"] == {"2": True, "3": True}
    assert rows["Q8"]["cflt"] is False and rows["Q8"]["sylow_cyclic"] == {"2": False}
    assert rows["Z7"]["sylow_cyclic"] == {"7": True}


def test_lemma1_violation_raises(monkeypatch):
    real = lab.satisfies_cflt

    def lying(g, cap=lab.DEFAULT_CAP):
        res = real(g, cap)
        res.holds = True
        return res

    monkeypatch.setattr(lab, "satisfies_cflt", lying)
    with pytest.raises(LemmaViolation):
        verify_lemma1(Catalog(8, ["Q8"]))


def test_mu_d_construction_z12():
    rep = verify_mu_d_construction(make_cyclic(12))
    row3 = next(r for r in rep.rows if r["d"] == 3)
    assert row3 == {"spec": "Z12", "d": 3, "index": 3, "relative_exponent": 3,
                    "quotient_exponent": 3, "fuzzy_order": 3}
    assert [r["d"] for r in rep.rows] == divisors(12)


def test_mu_d_rejects_noncyclic():
    with pytest.raises(InvalidParameterError):
        verify_mu_d_construction(build_group("S3"))


def test_sublattice_iso_z12():
    rep = verify_sublattice_iso(make_cyclic(12))
    row = next(r for r in rep.rows if (r["d"], r["d2"]) == (4, 6))
    assert row["O_meet"] == 12 and row["O_join"] == 2
    for r in rep.rows:
        if r["d"] == r["d2"]:
            assert r["O_meet"] == r["O_join"] == r["d"]


def test_sublattice_iso_prime():
    rep = verify_sublattice_iso(make_cyclic(7))
    assert {(r["d"], r["d2"]) for r in rep.rows} == {(1, 1), (1, 7), (7, 7)}


def test_zm_bijection_report():
    rep = verify_zm_bijection(3, 4, 2)
    assert rep.summary == {"triples": 8, "brute_force_subgroups": 8, "bijection": True}
    assert rep.rows[0]["triple"] == [1, 1, 0] and rep.rows[0]["order"] == 12


def test_open_problem_rows(catalog):
    rows = {r.spec: r for r in open_problem_study(catalog)}
    klein = rows["Z2xZ2"]
    assert klein.image_of_O == [1, 2] and klein.gcd_closed and klein.lcm_closed
    s3 = rows["S3"]
    assert s3.image_of_O == [1, 2, 6]
    fail = closure_failure([1, 2, 6])
    assert s3.gcd_closed == (fail["gcd"] is None) and s3.lcm_closed == (fail["lcm"] is None)
    for r in rows.values():
        if r.spec.startswith("Z") and build_group(r.spec).cyclic:
            assert r.gcd_closed and r.lcm_closed and r.indicator_injective
        data = r.to_json()
        assert data["gcd_closed"] == (data["gcd_counterexample"] is None)


def test_clt_vs_cflt(catalog):
    rep = clt_vs_cflt_comparison(catalog)
    rows = {r["spec"]: r for r in rep.rows}
    assert rows["S3"] == {"spec": "S3", "order": 6, "clt": True, "cflt": False}
    assert rows["Z12"]["clt"] and rows["Z12"]["cflt"]
    assert not rows["A4"]["clt"] and not rows["A4"]["cflt"]
    assert "S3" in rep.clt_not_cflt and rep.cflt_not_clt == []


def test_clt_vs_cflt_inconsistency_raises(monkeypatch):
    monkeypatch.setattr(lab, "satisfies_clt", lambda g, cap=lab.DEFAULT_CAP: False)
    with pytest.raises(ConsistencyError):
        clt_vs_cflt_comparison(Catalog(4, ["Z4"]))
