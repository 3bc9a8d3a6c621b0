"""The golden-value regression suite: the frozen table itself, the runner,
tamper detection, and the exhaustive re-derivation hook."""

import dataclasses

import pytest

from mdimlab.verify import (
    CHECKS,
    GoldenRow,
    Report,
    RowResult,
    load_golden,
    oracle_rows,
    run_suite,
)


class TestGoldenTable:
    def test_loads_and_ids_are_unique(self):
        rows = load_golden()
        assert len(rows) > 50
        ids = [r.id for r in rows]
        assert len(ids) == len(set(ids))

    def test_every_row_is_fully_described(self):
        for row in load_golden():
            assert row.claim
            assert row.source in {"formula", "computed", "literature"}
            assert row.tier in {"default", "slow", "recorded"}

    def test_runnable_rows_name_registered_checks(self):
        for row in load_golden():
            if row.check is not None:
                assert row.check in CHECKS, row.id

    def test_recorded_rows_have_no_check(self):
        recorded = [r for r in load_golden() if r.tier == "recorded"]
        assert recorded, "the table should keep some literature-only rows"
        for row in recorded:
            assert row.check is None
            assert row.source == "literature"


class TestRunSuite:
    def test_default_tier_passes(self):
        report = run_suite()
        assert report.ok
        counts = report.counts
        assert counts["failed"] == 0
        assert counts["passed"] > 50

    def test_only_filters_rows(self):
        report = run_suite(only={"mu-petersen"})
        assert report.ok
        assert len(report.results) == 1
        assert report.results[0].row.id == "mu-petersen"

    def test_slow_rows_wait_for_the_flag(self):
        default = run_suite(only={"biplane-mu"})
        assert not default.results[0].ran
        slow = run_suite(only={"biplane-mu"}, include_slow=True)
        assert slow.results[0].ran and slow.ok

    def test_recorded_rows_render_without_running(self):
        report = run_suite(only={"recorded-gq33"})
        (result,) = report.results
        assert not result.ran
        assert report.counts == {"passed": 0, "failed": 0, "recorded": 1}
        assert "recorded" in report.render()

    def test_render_shows_one_line_per_row_plus_totals(self):
        report = run_suite(only={"mu-petersen", "mu-Q_3"})
        lines = report.render().splitlines()
        assert len(lines) == 3
        assert lines[-1] == "2 passed, 0 failed, 0 recorded"


class TestTamperDetection:
    def test_altered_expectation_fails_the_row(self, monkeypatch):
        rows = load_golden()
        tampered = [
            dataclasses.replace(r, expected=r.expected + 1)
            if r.id == "mu-petersen"
            else r
            for r in rows
        ]
        monkeypatch.setattr("mdimlab.verify.load_golden", lambda: tampered)
        report = run_suite(only={"mu-petersen"})
        assert not report.ok
        assert report.counts["failed"] == 1
        assert "FAIL" in report.render()

    def test_check_functions_recompute_rather_than_echo(self):
        (row,) = [r for r in load_golden() if r.id == "mu-petersen"]
        assert CHECKS[row.check](row.args, 1) == 3

    def test_json_report_carries_the_failure(self, monkeypatch):
        rows = load_golden()
        tampered = [
            dataclasses.replace(r, expected=99) if r.id == "mu-Q_3" else r
            for r in rows
        ]
        monkeypatch.setattr("mdimlab.verify.load_golden", lambda: tampered)
        payload = run_suite(only={"mu-Q_3"}).to_json()
        assert payload["ok"] is False
        assert payload["rows"][0]["pass"] is False
        assert payload["rows"][0]["computed"] == 3


class TestOracleRows:
    def test_small_instances_are_rederived_exhaustively(self):
        rows = oracle_rows(max_n=10)
        assert rows
        checked = {rid: agree for rid, _, value, agree in rows if value is not None}
        assert checked["mu-petersen"] is True
        assert all(checked.values())

    def test_large_instances_are_skipped_not_failed(self):
        rows = oracle_rows(max_n=4)
        assert all(agree for _, _, _, agree in rows)
        assert all(value is None for _, _, value, _ in rows)
