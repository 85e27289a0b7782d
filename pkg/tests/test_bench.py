import math

import pytest

from fastpinv.bench import (
    CSV_COLUMNS,
    BenchReport,
    BenchRow,
    BenchSpec,
    emit_report,
    parse_csv,
    run_bench,
)
from fastpinv.exceptions import SpecError
from fastpinv.verify import PenroseReport


@pytest.fixture(scope="module")
def small_report():
    return run_bench(BenchSpec(sizes=(16, 32), seeds=(3,), repetitions=3))


class TestBenchSpec:
    def test_defaults(self):
        spec = BenchSpec()
        assert spec.sizes == (32, 64, 128, 256)
        assert spec.algorithms == ("geninv", "greville", "gso-qr", "hyperpower", "svd")
        assert spec.repetitions == 5 and spec.bound == 2e-10

    def test_algorithm_names_normalised(self):
        assert BenchSpec(algorithms=["GenInv"]).algorithms == ("geninv",)

    @pytest.mark.parametrize("kwargs", [
        {"algorithms": ()}, {"sizes": ()}, {"seeds": ()}, {"repetitions": 0},
        {"repetitions": 2.5}, {"bound": 0.0}, {"algorithms": ("lu",)}, {"sizes": (0,)},
    ])
    def test_invalid(self, kwargs):
        with pytest.raises(SpecError):
            BenchSpec(**kwargs)


class TestRunBench:
    def test_single_geninv_row(self):
        report = run_bench(BenchSpec(sizes=(32,), algorithms=("geninv",), repetitions=1))
        assert len(report.rows) == 1
        row = report.rows[0]
        assert (row.algorithm, row.n, row.m, row.rank) == ("geninv", 32, 64, 28)
        assert row.passed and row.report.worst <= 2e-10
        assert row.median_seconds > 0
        assert row.detected_rank == 28
        assert math.isnan(row.oracle_diff)  # no svd in the run

    def test_all_algorithms_pass_and_agree(self, small_report):
        assert len(small_report.rows) == 10
        assert small_report.all_passed
        for row in small_report.rows:
            assert row.error is None
            assert row.oracle_diff <= 1e-8
        assert small_report.row("svd", 32).oracle_diff == 0.0

    def test_row_lookup(self, small_report):
        assert small_report.row("greville", 16, 3).n == 16
        with pytest.raises(KeyError):
            small_report.row("greville", 64)

    def test_residuals_deterministic(self, small_report):
        again = run_bench(BenchSpec(sizes=(16, 32), seeds=(3,), repetitions=3))
        for a, b in zip(small_report.rows, again.rows):
            assert a.report.as_tuple() == b.report.as_tuple()

    def test_convergence_failure_recorded(self, monkeypatch):
        from fastpinv.exceptions import ConvergenceError
        from fastpinv import algorithms

        def boom(g, cfg=None):
            raise ConvergenceError("hyper-power iteration did not converge", 1.0)

        monkeypatch.setitem(algorithms._FUNCS, algorithms.PinvAlgorithm.HYPERPOWER, boom)
        report = run_bench(BenchSpec(sizes=(16,), algorithms=("geninv", "hyperpower"), repetitions=1))
        row = report.row("hyperpower", 16)
        assert not row.passed and row.report is None and "converge" in row.error
        assert report.row("geninv", 16).passed
        assert not report.all_passed


def _row(alg, n, t, worst=1e-12, passed=True):
    return BenchRow(alg, n, 2 * n, 7 * n // 8, 1, t, PenroseReport(worst, 0.0, 0.0, 0.0), passed, 1e-13)


class TestEmit:
    def test_empty_csv_is_header_only(self):
        assert emit_report(BenchReport(), "csv") == ",".join(CSV_COLUMNS) + "\n"

    def test_one_row_csv(self):
        text = emit_report(BenchReport([_row("geninv", 32, 0.00123456789)]), "csv")
        lines = text.splitlines()
        assert len(lines) == 2
        assert lines[1] == "geninv,32,64,28,1,0.00123457,1e-12,0.0,0.0,0.0,true,1e-13"

    def test_markdown_structure(self):
        report = BenchReport([
            _row("geninv", 32, 0.001), _row("svd", 32, 0.01),
            _row("geninv", 64, 0.002), _row("svd", 64, 0.05, worst=1.0, passed=False),
        ])
        text = emit_report(report, "markdown")
        lines = text.splitlines()
        assert lines[0] == "| n | geninv | svd |"
        assert lines[2] == "| 32 | 0.001 | 0.01 |"
        assert lines[3] == "| 64 | 0.002 | 0.05 * |"
        assert "3/4" in lines[-1] and "marked *" in lines[-1]

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(BenchReport(), "json")

    def test_csv_round_trip(self, small_report):
        back = parse_csv(emit_report(small_report, "csv"))
        assert len(back.rows) == len(small_report.rows)
        for a, b in zip(small_report.rows, back.rows):
            assert (a.algorithm, a.n, a.m, a.rank, a.seed, a.passed) == (
                b.algorithm, b.n, b.m, b.rank, b.seed, b.passed)
            assert a.report.as_tuple() == b.report.as_tuple()
            assert a.oracle_diff == b.oracle_diff
            assert b.median_seconds == pytest.approx(a.median_seconds, rel=1e-5)

    def test_parse_rejects_bad_header(self):
        with pytest.raises(ValueError):
            parse_csv("a,b,c\n1,2,3\n")

    def test_failed_row_round_trip(self):
        row = BenchRow("hyperpower", 16, 32, 14, 1, 0.5, None, False, error="x")
        back = parse_csv(emit_report(BenchReport([row]), "csv")).rows[0]
        assert back.report is None and not back.passed and math.isnan(back.oracle_diff)
