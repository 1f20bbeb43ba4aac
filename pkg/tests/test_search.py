"""Bounded-height searches: pruned two-variable enumeration against the
cubic brute-force oracle, canonical deduplication, partition determinism,
and the power-progression searches.
"""

import pytest

from freycheck.frey import canonical_triple
from freycheck.search import (
    SIGMA_PRIMES,
    SearchSpec,
    SolutionRecord,
    classify_ap_outcome,
    classify_search_outcome,
    search_ap_powers,
    search_star,
    verify_cubic_cases,
    verify_theorem_claims,
)

from oracles import brute_force_ap_powers, brute_force_star


class TestSearchSpec:
    def test_valid(self):
        spec = SearchSpec(p=5, alpha=2, height=10)
        assert spec.L == 2 and spec.require_primitive
        assert spec.reduced_alpha == 2

    def test_p_3_allowed(self):
        assert SearchSpec(p=3, alpha=1, height=5).p == 3

    def test_rejections(self):
        with pytest.raises(ValueError, match="odd prime"):
            SearchSpec(p=4, alpha=1, height=5)
        with pytest.raises(ValueError, match="odd prime"):
            SearchSpec(p=2, alpha=1, height=5)
        with pytest.raises(ValueError, match="alpha"):
            SearchSpec(p=5, alpha=-1, height=5)
        with pytest.raises(ValueError, match="L must be prime"):
            SearchSpec(p=5, alpha=1, height=5, L=6)
        with pytest.raises(ValueError, match="height"):
            SearchSpec(p=5, alpha=1, height=0)

    def test_reduced_alpha_marks_fermat_case(self):
        assert SearchSpec(p=5, alpha=10, height=5).reduced_alpha == 0

    def test_roundtrip(self):
        record = SolutionRecord(
            a=-1, b=1, c=-1, normalized_form=(-1, 1, -1), trivial=True
        )
        assert SolutionRecord.from_dict(record.to_dict()) == record


class TestSearchStar:
    def test_p5_alpha1_trivial_only(self):
        records = search_star(SearchSpec(p=5, alpha=1, height=25))
        assert len(records) == 1
        rec = records[0]
        assert (rec.a, rec.b, rec.c) == (-1, 1, -1)
        assert rec.trivial and rec.content == 1

    def test_p5_alpha2_empty(self):
        assert search_star(SearchSpec(p=5, alpha=2, height=25)) == []

    def test_p11_L3_alpha1_empty(self):
        assert search_star(SearchSpec(p=11, alpha=1, height=20, L=3)) == []

    def test_records_satisfy_equation(self):
        for spec in (
            SearchSpec(p=3, alpha=1, height=20),
            SearchSpec(p=3, alpha=1, height=12, require_primitive=False),
        ):
            coeff = spec.L**spec.alpha
            for rec in search_star(spec):
                assert rec.a**spec.p + coeff * rec.b**spec.p + rec.c**spec.p == 0

    def test_agrees_with_brute_force(self):
        grid = [
            (3, 1, 2, 15),
            (3, 2, 2, 15),
            (5, 1, 2, 12),
            (5, 2, 2, 12),
            (3, 1, 3, 10),
            (5, 3, 2, 10),
        ]
        for p, alpha, L, height in grid:
            spec = SearchSpec(p=p, alpha=alpha, height=height, L=L)
            records = search_star(spec)
            raw = brute_force_star(p, alpha, height, L=L)
            # Same orbit sets after canonicalization.
            expected_forms = {canonical_triple(a, b, c) for a, b, c in raw}
            assert {rec.normalized_form for rec in records} == expected_forms, (
                p,
                alpha,
                L,
                height,
            )

    def test_imprimitive_tagging(self):
        spec = SearchSpec(p=3, alpha=1, height=4, require_primitive=False)
        records = search_star(spec)
        contents = sorted(rec.content for rec in records)
        assert contents == [1, 2, 3, 4]
        for rec in records:
            assert (rec.a, rec.b, rec.c) == tuple(
                rec.content * x for x in rec.normalized_form
            )
            assert rec.normalized_form == (-1, 1, -1)

    def test_primitive_filter_default(self):
        records = search_star(SearchSpec(p=3, alpha=1, height=4))
        assert [rec.content for rec in records] == [1]

    def test_partition_determinism(self):
        for workers in (2, 3, 4):
            spec = SearchSpec(p=3, alpha=1, height=18, require_primitive=False)
            assert search_star(spec, workers=workers) == search_star(spec, workers=1)

    def test_sorted_output(self):
        spec = SearchSpec(p=3, alpha=1, height=10, require_primitive=False)
        records = search_star(spec)
        keys = [(rec.normalized_form, rec.content) for rec in records]
        assert keys == sorted(keys)

    def test_workers_validated(self):
        with pytest.raises(ValueError):
            search_star(SearchSpec(p=5, alpha=1, height=5), workers=0)


class TestClassification:
    def test_alpha1_expects_trivial_only(self):
        spec = SearchSpec(p=5, alpha=1, height=25)
        records = search_star(spec)
        outcome = classify_search_outcome(spec, records)
        assert outcome.claim == "established"
        assert outcome.expected == "trivial-only"
        assert outcome.conforms

    def test_alpha2_expects_empty(self):
        spec = SearchSpec(p=5, alpha=2, height=25)
        outcome = classify_search_outcome(spec, [])
        assert outcome.expected == "empty" and outcome.conforms

    def test_fermat_case_expects_empty(self):
        spec = SearchSpec(p=5, alpha=0, height=10)
        outcome = classify_search_outcome(spec, [])
        assert outcome.expected == "empty"
        assert classify_search_outcome(spec, search_star(spec)).conforms

    def test_nontrivial_record_is_a_counterexample(self):
        spec = SearchSpec(p=5, alpha=1, height=5)
        fake = SolutionRecord(a=3, b=2, c=7, normalized_form=(3, 2, 7), trivial=False)
        outcome = classify_search_outcome(spec, [fake])
        assert not outcome.conforms and outcome.counterexamples == [fake]

    def test_sigma_family_is_empirical(self):
        assert SIGMA_PRIMES == {3, 5, 7, 11, 13, 17, 19, 23, 29, 53, 59}
        spec = SearchSpec(p=11, alpha=1, height=10, L=3)
        outcome = classify_search_outcome(spec, [])
        assert outcome.claim == "empirical" and outcome.expected == "empty"
        small_p = SearchSpec(p=5, alpha=1, height=10, L=3)
        outcome_small = classify_search_outcome(small_p, [])
        assert outcome_small.claim == "empirical" and outcome_small.expected == "none"
        off_family = SearchSpec(p=11, alpha=1, height=10, L=31)
        assert classify_search_outcome(off_family, []).expected == "none"


class TestVerifyDrivers:
    def test_cubic_cases(self):
        cases = verify_cubic_cases(50)
        by_alpha = {case.spec.alpha: case for case in cases}
        assert set(by_alpha) == {1, 2}
        assert [
            (rec.a, rec.b, rec.c) for rec in by_alpha[1].records
        ] == [(-1, 1, -1)]
        assert by_alpha[2].records == []
        assert all(case.conforms for case in cases)

    def test_cubic_cases_height_1(self):
        cases = verify_cubic_cases(1)
        by_alpha = {case.spec.alpha: case for case in cases}
        assert [rec.normalized_form for rec in by_alpha[1].records] == [(-1, 1, -1)]

    def test_verify_theorem_claims_skips_alpha_at_least_p(self):
        cases = verify_theorem_claims([3, 5], [1, 2, 3, 4], 6)
        pairs = [(case.spec.p, case.spec.alpha) for case in cases]
        assert pairs == [(3, 1), (3, 2), (5, 1), (5, 2), (5, 3), (5, 4)]

    def test_verify_theorem_claims_empty_plist(self):
        assert verify_theorem_claims([], [1, 2], 10) == []

    def test_case_report_shape(self):
        case = verify_theorem_claims([5], [1], 8)[0]
        doc = case.to_dict()
        assert doc["conforms"] is True
        assert doc["expected"] == "trivial-only"
        assert doc["records"][0]["normalized_form"] == [-1, 1, -1]


class TestApPowers:
    def test_square_3ap_anchors(self):
        found = search_ap_powers(2, 3, 20)
        assert (7, 13, 17) in found
        assert (1, 5, 7) in found and (2, 10, 14) in found

    def test_square_3ap_matches_brute_force(self):
        for height in (10, 25):
            assert search_ap_powers(2, 3, height) == brute_force_ap_powers(
                2, 3, height
            )

    def test_square_4ap_empty(self):
        assert search_ap_powers(2, 4, 120) == []

    def test_fourth_power_3ap_empty(self):
        assert search_ap_powers(4, 3, 100) == []

    def test_cube_3ap_empty(self):
        assert search_ap_powers(3, 3, 100) == []

    def test_constant_progressions_when_allowed(self):
        found = search_ap_powers(2, 3, 5, distinct_only=False)
        assert (1, 1, 1) in found and (5, 5, 5) in found

    def test_progressions_are_sorted_tuples(self):
        found = search_ap_powers(2, 3, 30)
        assert found == sorted(found)
        for x1, x2, x3 in found:
            assert 0 < x1 < x2 < x3 <= 30
            assert x2**2 - x1**2 == x3**2 - x2**2

    def test_validation(self):
        with pytest.raises(ValueError):
            search_ap_powers(1, 3, 10)
        with pytest.raises(ValueError):
            search_ap_powers(2, 5, 10)
        with pytest.raises(ValueError):
            search_ap_powers(2, 3, 0)

    def test_classification(self):
        hits = search_ap_powers(2, 3, 20)
        assert classify_ap_outcome(2, 3, True, hits).conforms  # no claim broken
        assert classify_ap_outcome(2, 3, True, hits).claim == "empirical"
        bad = classify_ap_outcome(2, 4, True, [(1, 2, 3, 4)])
        assert not bad.conforms and bad.expected == "empty"
        assert classify_ap_outcome(4, 3, True, []).claim == "established"
        assert classify_ap_outcome(2, 4, False, [(1, 1, 1, 1)]).conforms
