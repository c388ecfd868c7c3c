import json
import math

import pytest

from hyperschur.relationsuite import (
    FAMILIES,
    SUITES,
    RelationCase,
    check_counting_identities,
    check_functor_on_basis,
    check_numeric_identities,
    check_relation,
    generate_cases,
    report_json,
    run_suite,
)
from hyperschur.webdsl import make_expr, parse


def test_suites_cover_every_family():
    assert sorted(f for s in SUITES.values() for f in s) == sorted(FAMILIES)


def test_unknown_family():
    with pytest.raises(KeyError):
        generate_cases("nope", 6)


def _case(family, variant="id", **params):
    want = tuple(sorted(params.items()))
    return next(c for c in generate_cases(family, 8) if c.params == want and c.variant == variant)


def test_htrivial_axis_example():
    case = _case("htrivial-axis", a=1, b=1)
    assert check_relation(case).passed
    assert case.rhs.chains[0].coefficient == 2 * math.comb(2, 1)


def test_hsplitchoice_both_orientations():
    for variant in ("id", "v", "h", "hv"):
        assert check_relation(_case("hsplitchoice", variant, a=1, b=1, c=1, w=0)).passed


def test_hsymmetric_example():
    assert check_relation(_case("hsymmetric", a=1, b=1, c=1)).passed


def test_hmergesplit_axis_summands():
    case = _case("hmergesplit-axis", a=1, b=1)
    # one summand per matrix with margins (1,2,1) on both sides
    assert len(case.rhs.chains) == 3


def test_commute_and_braid_present_at_six():
    assert any(c.variant.startswith("plain") for c in generate_cases("commute", 6))
    assert any(c.params == (("a", 1), ("b", 1), ("c", 1), ("w", 0)) for c in generate_cases("braid", 6))


def test_bounds_respected():
    for family in FAMILIES:
        for case in generate_cases(family, 6):
            if not case.variant.startswith("plain"):
                assert case.lhs.source.size <= 6


@pytest.mark.parametrize("suite", sorted(SUITES))
def test_suites_pass_at_degree_six(suite):
    reports = run_suite(suite, 6)
    assert reports and all(r.passed for r in reports)


def test_wrong_relation_is_caught():
    lhs = parse("[S(1,2)] ; [M(1,2)]")
    wrong = make_expr([(3, [([], ("ID", 4))])])
    report = check_relation(RelationCase("bad", "htrivial-axis", "id", (), lhs, wrong))
    assert not report.passed
    data = report.to_json()
    assert "lhs_value" in data and "rhs_value" in data


def test_mismatched_sides_rejected():
    with pytest.raises(ValueError):
        RelationCase("bad", "x", "id", (), parse("[m(1,1)]"), parse("[x(1,1)]"))


def test_numeric_identities():
    reports = check_numeric_identities(20)
    assert len(reports) == 21 + 20 and all(r.passed for r in reports)
    values = {(r.name, r.params): r.detail["value"] for r in reports}
    assert values[("binom", (("s", 0),))] == 1
    assert values[("binom", (("s", 3),))] == 0
    assert values[("two-minus-one", (("a", 4),))] == 1


def test_functor_small():
    assert all(r.passed for r in check_functor_on_basis(2))


def test_counting_identities():
    assert all(r.passed for r in check_counting_identities(3))


def test_report_is_reproducible():
    a = report_json("defining", run_suite("defining", 4), "2026-01-01T00:00:00+00:00")
    b = report_json("defining", run_suite("defining", 4), "2026-01-01T00:00:00+00:00")
    assert a == b
    doc = json.loads(a)
    assert set(doc) == {"suite", "timestamp", "cases", "summary"}
    assert doc["summary"]["failed"] == 0
