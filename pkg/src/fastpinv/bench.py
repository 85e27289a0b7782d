"""Timing and accuracy benchmark over the rank-deficient matrix family."""

from dataclasses import dataclass, field
import csv
import io
import logging
import math
import statistics
import time

from threadpoolctl import threadpool_limits

from . import dense
from .algorithms import PinvAlgorithm
from .benchgen import MatrixFamilySpec, random_rank_deficient
from .exceptions import ConvergenceError, SpecError
from .geninv import geninv
from .verify import DEFAULT_BOUND, PenroseReport, is_valid_pinv, penrose_residuals

__all__ = [
    "DEFAULT_SEED",
    "CSV_COLUMNS",
    "BenchSpec",
    "BenchRow",
    "BenchReport",
    "run_bench",
    "emit_report",
    "parse_csv",
]

logger = logging.getLogger(__name__)

DEFAULT_SEED = 20060524
CSV_COLUMNS = (
    "algorithm", "n", "m", "rank", "seed", "median_seconds",
    "r1", "r2", "r3", "r4", "pass", "oracle_diff",
)


@dataclass(frozen=True)
class BenchSpec:
    sizes: tuple = (32, 64, 128, 256)
    algorithms: tuple = tuple(a.value for a in PinvAlgorithm)
    seeds: tuple = (DEFAULT_SEED,)
    repetitions: int = 5
    bound: float = DEFAULT_BOUND

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(n) for n in self.sizes))
        object.__setattr__(self, "seeds", tuple(int(s) for s in self.seeds))
        if not self.sizes:
            raise SpecError("sizes must not be empty")
        if not self.algorithms:
            raise SpecError("algorithms must not be empty")
        if not self.seeds:
            raise SpecError("seeds must not be empty")
        try:
            algs = tuple(PinvAlgorithm.parse(a) for a in self.algorithms)
        except ValueError as exc:
            raise SpecError(str(exc)) from None
        object.__setattr__(self, "algorithms", tuple(a.value for a in algs))
        if isinstance(self.repetitions, bool) or not isinstance(self.repetitions, int) or self.repetitions < 1:
            raise SpecError(f"repetitions must be an integer >= 1, got {self.repetitions!r}")
        if not self.bound > 0:
            raise SpecError(f"bound must be positive, got {self.bound!r}")
        for n in self.sizes:
            MatrixFamilySpec(n=n)  # validates the size


@dataclass
class BenchRow:
    algorithm: str
    n: int
    m: int
    rank: int
    seed: int
    median_seconds: float
    report: PenroseReport | None
    passed: bool
    oracle_diff: float = math.nan
    error: str | None = None
    # geninv only
    detected_rank: int | None = None
    ltl_condition: float | None = None


@dataclass
class BenchReport:
    rows: list = field(default_factory=list)
    bound: float = DEFAULT_BOUND

    @property
    def all_passed(self):
        return all(r.passed for r in self.rows)

    def row(self, algorithm, n, seed=None):
        for r in self.rows:
            if r.algorithm == algorithm and r.n == n and (seed is None or r.seed == seed):
                return r
        raise KeyError((algorithm, n, seed))


def _timed_runs(func, g, repetitions):
    times = []
    result = None
    for _ in range(repetitions):
        start = time.perf_counter()
        result = func(g)
        times.append(time.perf_counter() - start)
    if repetitions >= 3:
        times = times[1:]  # warm-up
    return result, statistics.median(times)


def run_bench(spec):
    """Run every (size, seed, algorithm) cell of ``spec``.

    Only the pseudoinverse call is timed, single-threaded.  A hyper-power
    convergence failure is recorded as a failed row and the run carries on.
    """
    report = BenchReport(bound=spec.bound)
    with threadpool_limits(limits=1):
        for n in spec.sizes:
            for seed in spec.seeds:
                fam = MatrixFamilySpec(n=n, seed=seed)
                g, _, _ = random_rank_deficient(fam)
                cell_rows = []
                results = {}
                for name in spec.algorithms:
                    alg = PinvAlgorithm.parse(name)
                    row = BenchRow(name, fam.n, fam.m, fam.rank, seed, math.nan, None, False)
                    func = geninv if alg is PinvAlgorithm.GENINV else alg
                    start = time.perf_counter()
                    try:
                        out, row.median_seconds = _timed_runs(func, g, spec.repetitions)
                    except ConvergenceError as exc:
                        row.median_seconds = time.perf_counter() - start
                        row.error = str(exc)
                        logger.warning("%s failed at n=%d seed=%d: %s", name, n, seed, exc)
                        cell_rows.append(row)
                        continue
                    if alg is PinvAlgorithm.GENINV:
                        row.detected_rank = out.rank
                        row.ltl_condition = out.ltl_condition
                        out = out.pinv
                    results[name] = out
                    row.report = penrose_residuals(g, out)
                    row.passed = is_valid_pinv(row.report, spec.bound)
                    logger.info("%s n=%d seed=%d: %.4gs worst residual %.3e",
                                name, n, seed, row.median_seconds, row.report.worst)
                    cell_rows.append(row)
                oracle = results.get(PinvAlgorithm.SVD.value)
                if oracle is not None:
                    for row in cell_rows:
                        if row.algorithm in results:
                            row.oracle_diff = dense.max_abs(results[row.algorithm] - oracle)
                report.rows.extend(cell_rows)
    return report


def _fmt_float(x):
    if x is None or (isinstance(x, float) and math.isnan(x)):
        return ""
    return repr(float(x))


def _to_csv(report):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.rows:
        residuals = r.report.as_tuple() if r.report is not None else (None,) * 4
        writer.writerow([
            r.algorithm, r.n, r.m, r.rank, r.seed,
            "" if math.isnan(r.median_seconds) else f"{r.median_seconds:.6g}",
            *(_fmt_float(v) for v in residuals),
            "true" if r.passed else "false",
            _fmt_float(r.oracle_diff),
        ])
    return buf.getvalue()


def _to_markdown(report):
    algs = list(dict.fromkeys(r.algorithm for r in report.rows))
    sizes = sorted({r.n for r in report.rows})
    lines = [
        "| n | " + " | ".join(algs) + " |",
        "|---|" + "|".join("---:" for _ in algs) + "|",
    ]
    for n in sizes:
        cells = []
        for alg in algs:
            rows = [r for r in report.rows if r.algorithm == alg and r.n == n]
            if not rows:
                cells.append("")
                continue
            t = statistics.median(r.median_seconds for r in rows)
            mark = "" if all(r.passed for r in rows) else " *"
            cells.append(f"{t:.4g}{mark}")
        lines.append(f"| {n} | " + " | ".join(cells) + " |")
    lines.append("")
    worst = [r.report.worst for r in report.rows if r.report is not None]
    passed = sum(r.passed for r in report.rows)
    note = f"Median seconds per call. {passed}/{len(report.rows)} results pass the Penrose check at {report.bound:g} per coefficient"
    if worst:
        note += f"; largest residual {max(worst):.3e}"
    note += "."
    if passed < len(report.rows):
        note += " Cells marked * contain a failure."
    lines.append(note)
    return "\n".join(lines) + "\n"


def emit_report(report, format="csv"):
    """Render ``report`` as ``"csv"`` or ``"markdown"`` text."""
    if format == "csv":
        return _to_csv(report)
    if format == "markdown":
        return _to_markdown(report)
    raise ValueError(f"format must be 'csv' or 'markdown', got {format!r}")


def parse_csv(text, bound=DEFAULT_BOUND):
    """Inverse of ``emit_report(report, "csv")``."""

    def num(s):
        return math.nan if s == "" else float(s)

    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"unexpected CSV header {reader.fieldnames}")
    rows = []
    for rec in reader:
        res = [rec[k] for k in ("r1", "r2", "r3", "r4")]
        report = None if all(v == "" for v in res) else PenroseReport(*(float(v) for v in res))
        rows.append(BenchRow(
            algorithm=rec["algorithm"],
            n=int(rec["n"]),
            m=int(rec["m"]),
            rank=int(rec["rank"]),
            seed=int(rec["seed"]),
            median_seconds=num(rec["median_seconds"]),
            report=report,
            passed=rec["pass"] == "true",
            oracle_diff=num(rec["oracle_diff"]),
        ))
    return BenchReport(rows=rows, bound=bound)
