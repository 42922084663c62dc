"""Genus-tree enumeration, claim checking, and the parallel harness."""

import json

import pytest

from numsgps import NumericalSemigroup, is_nearly_gorenstein, ng_vectors
from numsgps.verify import (
    ASSERTED_CLAIMS,
    CLAIM_NAMES,
    CheckReport,
    ClaimContext,
    HarnessConfig,
    check_all,
    check_semigroup,
    count_by_genus,
    run_claims,
    semigroups_up_to,
)
from numsgps.verify.claims import (
    FAIL,
    NA,
    PASS,
    _ngv_props_factored,
    _ngv_props_literal,
)
from oracles import gaps_to_generators, genus_tree_semigroups

KNOWN_COUNTS = [1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693]

WORKED = (13, 45, 72, 79, 99)


def test_count_by_genus_matches_census():
    counts = count_by_genus(14)
    assert [counts[g] for g in range(15)] == KNOWN_COUNTS


def test_enumeration_matches_backtracking_oracle():
    expected = {
        gaps_to_generators(gaps) for gaps in genus_tree_semigroups(9)
    }
    got = {S.generators for S in semigroups_up_to(9)}
    assert got == expected
    assert len(got) == sum(KNOWN_COUNTS[:10])


def test_enumeration_embdim_filter():
    all_gens = list(semigroups_up_to(8))
    filtered = list(semigroups_up_to(8, embdim={3}))
    assert {S.generators for S in filtered} == {
        S.generators for S in all_gens if S.embedding_dimension == 3
    }
    assert all(S.embedding_dimension == 3 for S in filtered)


def test_run_claims_rejects_unknown_name():
    S = NumericalSemigroup((3, 4, 5))
    with pytest.raises(ValueError):
        run_claims(S, names=("NO_SUCH_CLAIM",))


def test_run_claims_worked_example():
    S = NumericalSemigroup(WORKED)
    results, ctx = run_claims(S, names=CLAIM_NAMES)
    status = {name: results[name].status for name in CLAIM_NAMES}
    assert status["THM_MAIN"] == PASS
    assert status["THM_3DISTINCT"] == PASS
    assert status["PF1_BOUND"] == PASS
    assert status["PF2_BOUND"] == PASS
    assert status["MU_BOUND"] == PASS
    assert status["COPPIE"] == PASS
    assert status["FIRST_ZERO"] == PASS
    assert status["NGV_PROPS"] == PASS
    assert status["TRACE_EQ"] == PASS
    assert status["HERZOG3"] == NA
    assert status["NG4_TYPE3"] == NA
    assert status["AS4_TYPE3"] == NA
    assert status["AS_IMPLIES_NG"] == NA
    assert ctx.nearly_gorenstein


def test_no_failures_up_to_genus_ten():
    for S in semigroups_up_to(10):
        results, _ = run_claims(S, names=CLAIM_NAMES)
        bad = [n for n, r in results.items() if r.status == FAIL]
        assert not bad, (S.generators, bad)


def test_factored_routes_agree_with_literal_enumeration():
    # same semigroup, vectors forced present vs forced absent
    for S in semigroups_up_to(8):
        if S.is_full() or not is_nearly_gorenstein(S):
            continue
        lit = ClaimContext(S)
        lit.__dict__["vectors"] = ng_vectors(S)
        fac = ClaimContext(S)
        fac.__dict__["vectors"] = None
        a = _ngv_props_literal(lit)
        b = _ngv_props_factored(fac)
        assert a.status == b.status == PASS, S.generators


def test_check_semigroup_report_shape():
    report = check_semigroup(WORKED)
    assert isinstance(report, CheckReport)
    assert report.generators == WORKED
    assert report.genus == 126
    assert report.frobenius == 244
    assert report.type == 4
    assert report.nearly_gorenstein is True
    assert report.almost_symmetric is False
    assert report.vector_count == 2
    assert report.failures == ()
    d = report.as_dict()
    assert d["generators"] == [13, 45, 72, 79, 99]
    assert {c["claim"] for c in d["claims"]} == set(CLAIM_NAMES)
    assert "seconds" in d


def test_check_semigroup_accepts_semigroup_object():
    a = check_semigroup(WORKED)
    b = check_semigroup(NumericalSemigroup(WORKED))
    assert a.as_dict().keys() == b.as_dict().keys()
    assert a.generators == b.generators


def test_check_all_small_summary():
    cfg = HarnessConfig(genus_max=3)
    summary = check_all(cfg)
    assert summary["semigroups"] == 8
    assert summary["by_genus"] == {"0": 1, "1": 1, "2": 2, "3": 4}
    assert summary["total_failures"] == 0
    assert summary["failures"] == []
    assert summary["question_flags"] == []
    assert summary["classification_varies"] == []
    for name in ASSERTED_CLAIMS:
        assert summary["claims"][name]["fail"] == 0


def test_check_all_sink_streams_reports():
    seen = []
    summary = check_all(HarnessConfig(genus_max=3), sink=seen.append)
    assert len(seen) == summary["semigroups"] == 8
    assert all(isinstance(r, CheckReport) for r in seen)
    gens = {r.generators for r in seen}
    assert (1,) in gens and (2, 3) in gens


def test_check_all_sink_requires_single_worker():
    with pytest.raises(ValueError):
        check_all(HarnessConfig(genus_max=8, workers=2), sink=lambda r: None)


def test_harness_config_validation():
    with pytest.raises(ValueError):
        HarnessConfig(genus_max=-1)
    with pytest.raises(ValueError):
        HarnessConfig(genus_max=3, workers=0)
    with pytest.raises(ValueError):
        HarnessConfig(genus_max=3, claims=("BOGUS",))


def test_harness_claims_normalized_to_canonical_order():
    cfg = HarnessConfig(genus_max=2, claims=("TRACE_EQ", "HERZOG3"))
    assert cfg.claims == ("HERZOG3", "TRACE_EQ")
    summary = check_all(cfg)
    assert summary["claims_checked"] == ["HERZOG3", "TRACE_EQ"]
    assert set(summary["claims"]) == {"HERZOG3", "TRACE_EQ"}


def test_workers_summary_identical():
    # genus 8 exceeds the serial cutoff, so workers=2 really forks
    base = check_all(HarnessConfig(genus_max=8, workers=1))
    split = check_all(HarnessConfig(genus_max=8, workers=2))
    assert base == split
    assert json.dumps(base, sort_keys=True) == json.dumps(split, sort_keys=True)


def test_embdim_filter_summary():
    full = check_all(HarnessConfig(genus_max=7))
    only3 = check_all(HarnessConfig(genus_max=7, embdim_filter=frozenset({3})))
    expected = sum(
        1 for S in semigroups_up_to(7) if S.embedding_dimension == 3
    )
    assert only3["semigroups"] == expected
    assert only3["semigroups"] < full["semigroups"]
    assert set(only3["cells"]) <= {
        key for key in full["cells"] if key.startswith("nu=3|")
    }


def test_genus_zero_summary_is_trivial():
    summary = check_all(HarnessConfig(genus_max=0))
    assert summary["semigroups"] == 1
    assert summary["by_genus"] == {"0": 1}
    for name in CLAIM_NAMES:
        assert summary["claims"][name] == {
            "pass": 0,
            "fail": 0,
            "inapplicable": 1,
        }
