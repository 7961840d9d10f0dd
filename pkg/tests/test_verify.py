"""Verification harness tests: verdicts on hand-checked instances,
deterministic reports, and parallel/serial agreement."""

import json

import pytest

from edgeideals.generators import FamilySpec, corona, cycle_graph, path_graph
from edgeideals.verify import (
    CHECK_NAMES,
    CheckResult,
    SweepParams,
    check_banerjee_recursion,
    check_bht_lower_bound,
    check_colon_squarefree_and_oddgirth,
    check_katzman,
    check_lemma_colon_iteration,
    check_main_theorem,
    check_main_theorem_hunter,
    check_vwc_preservation,
    derive_k,
    graph_code,
    run_sweep,
)


class TestCheckResult:
    def test_skip_requires_reason(self):
        with pytest.raises(ValueError):
            CheckResult("katzman", "x", "skipped", {})

    def test_bad_verdict(self):
        with pytest.raises(ValueError):
            CheckResult("katzman", "x", "maybe", {})

    def test_json_obj_sorted(self):
        r = CheckResult("katzman", "x", "pass", {"b": 1, "a": 2})
        obj = r.to_json_obj()
        assert obj["check"] == "katzman" and obj["verdict"] == "pass"
        assert "elapsed" not in obj


class TestDeriveK:
    def test_odd_girth_route(self):
        assert derive_k(cycle_graph(5), 1) == 2
        assert derive_k(cycle_graph(7), 1) == 3
        assert derive_k(corona(cycle_graph(7)), 1) == 3

    def test_bipartite_route(self):
        assert derive_k(cycle_graph(4), 1) == 3
        assert derive_k(path_graph(4), 2) == 4


class TestIndividualChecks:
    def test_katzman_passes(self):
        for G in (path_graph(4), cycle_graph(5), corona(cycle_graph(5))):
            assert check_katzman(G).verdict == "pass"

    def test_katzman_skips_edgeless(self):
        r = check_katzman(path_graph(1))
        assert r.verdict == "skipped" and "reason" in r.values

    def test_bht_passes(self):
        for s in (1, 2):
            assert check_bht_lower_bound(cycle_graph(5), s).verdict == "pass"

    def test_main_theorem_on_corona_c7(self):
        # corona(C7): odd-girth 7, so k = 3 and s = 1 is in range;
        # reg(I) = 2*1 + nu - 1 = nu + 1 = 4.
        G = corona(cycle_graph(7))
        r = check_main_theorem(G, 3, 1)
        assert r.verdict == "pass"
        assert r.values == {"reg": 4, "expected": 4}

    def test_main_theorem_skips(self):
        assert check_main_theorem(cycle_graph(6), 2, 1).verdict == "skipped"
        assert check_main_theorem(cycle_graph(6), 3, 2).verdict == "skipped"
        assert (
            check_main_theorem(cycle_graph(6), 3, 1).verdict == "skipped"
        )  # C6 is not very well-covered

    def test_hunter_is_observation(self):
        r = check_main_theorem_hunter(path_graph(4), 1)
        assert r.verdict == "observation"
        assert r.values["equal"] is True

    def test_colon_check_c5_tight(self):
        # C5, k = 2, s = 1: colon graph odd-girth is exactly 3 = 2(k-s)+1,
        # meeting the bound with no slack.
        r = check_colon_squarefree_and_oddgirth(cycle_graph(5), ((1, 2),), 2)
        assert r.verdict == "pass"
        assert r.values["colon_odd_girth"] == 3 and r.values["bound"] == 3

    def test_colon_check_skips_when_s_too_big(self):
        r = check_colon_squarefree_and_oddgirth(
            cycle_graph(5), ((1, 2), (3, 4)), 2
        )
        assert r.verdict == "skipped"

    def test_lemma_with_repeated_edge(self):
        G = cycle_graph(7)
        m = ((1, 2), (1, 2))
        r = check_lemma_colon_iteration(G, m, 0)
        assert r.verdict == "pass"

    def test_lemma_gates_on_odd_girth(self):
        r = check_lemma_colon_iteration(cycle_graph(3), ((1, 2),), 0)
        assert r.verdict == "skipped"

    def test_vwc_preservation_corona_c7(self):
        G = corona(cycle_graph(7))
        m = (tuple(sorted((0, 1))),)
        r = check_vwc_preservation(G, m, 3)
        assert r.verdict == "pass"
        assert r.values["nu_colon"] <= r.values["nu"]

    def test_banerjee(self):
        assert check_banerjee_recursion(cycle_graph(5), 1).verdict == "pass"


class TestSweep:
    def test_unknown_check_rejected(self):
        spec = FamilySpec(kind="named", names=("P4",))
        with pytest.raises(ValueError):
            run_sweep(spec, ["nonsense"])

    def test_summary_tallies(self):
        spec = FamilySpec(kind="named", names=("P4", "C5", "C6"))
        report = run_sweep(
            spec, ["katzman", "main_theorem"], SweepParams(s_values=(1,))
        )
        summary = report.summary
        assert summary["katzman"]["pass"] == 3
        assert summary["katzman"]["fail"] == 0
        # P4 meets the main-theorem hypotheses (bipartite vwc, so k=3);
        # C5 skips on k<3 and C6 on not being very well-covered.
        assert summary["main_theorem"]["pass"] == 1
        assert summary["main_theorem"]["skipped"] == 2
        assert report.fail_count == 0 and report.failures() == []

    def test_report_json_deterministic(self):
        spec = FamilySpec(kind="exhaustive-vwc", m=2)
        params = SweepParams(s_values=(1,), seed=5)
        a = run_sweep(spec, ["katzman", "colon_squarefree_oddgirth"], params)
        b = run_sweep(spec, ["katzman", "colon_squarefree_oddgirth"], params)
        assert a.to_json() == b.to_json()
        obj = json.loads(a.to_json())
        assert obj["field"] == "QQ" and "version" in obj

    def test_jobs_parallel_equals_serial(self):
        spec = FamilySpec(kind="named", names=("P4", "C5", "C4", "C7"))
        serial = run_sweep(
            spec, ["katzman", "bht"], SweepParams(s_values=(1,), jobs=1)
        )
        parallel = run_sweep(
            spec, ["katzman", "bht"], SweepParams(s_values=(1,), jobs=2)
        )
        assert serial.to_json() == parallel.to_json()

    def test_csv_shape(self):
        spec = FamilySpec(kind="named", names=("P4",))
        report = run_sweep(spec, ["katzman"], SweepParams(s_values=(1,)))
        lines = report.to_csv().splitlines()
        assert lines[0] == "check,instance,verdict,values"
        assert len(lines) == 2

    def test_all_check_names_runnable(self):
        spec = FamilySpec(kind="named", names=("C7",))
        report = run_sweep(
            spec, list(CHECK_NAMES), SweepParams(s_values=(1,))
        )
        assert report.fail_count == 0
        assert {r.check for r in report.results} == set(CHECK_NAMES)

    def test_graph_code_stable(self):
        assert graph_code(path_graph(4)) == graph_code(path_graph(4))
        assert graph_code(path_graph(4)) != graph_code(cycle_graph(4))
