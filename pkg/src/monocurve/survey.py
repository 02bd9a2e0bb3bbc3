"""Exhaustive survey over small semigroups with a resumable JSONL cache."""

from __future__ import annotations

import csv
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .config import EffortCaps
from .errors import EffortCapExceeded
from .extremal import AnalysisReport, koszul_witness, quadratic_gap_check, verify_theorem
from .semigroup import NumericalSemigroup, enumerate_semigroups
from .tangentcone import classify, graded_invariants, is_cohen_macaulay, tangent_cone
from .toric import defining_ideal

CSV_COLUMNS = ["generators", "n0", "c", "d", "e", "bound", "class", "cm", "theorem_ok",
               "extremal", "koszul", "elapsed_ms"]


def analyze(S: NumericalSemigroup, caps: EffortCaps | None = None) -> AnalysisReport:
    """:func:`verify_theorem`, extended to plane curves (``c = 1``) where no bound applies."""
    if S.embdim >= 3:
        return verify_theorem(S, caps)
    start = time.perf_counter()
    J = tangent_cone(defining_ideal(S, caps), caps)
    inv = graded_invariants(J, caps)
    return AnalysisReport(
        generators=S.generators, c=inv.codim, d=inv.max_gen_degree, e=inv.multiplicity,
        bound=None, classification=classify(J, inv), cohen_macaulay=is_cohen_macaulay(J, caps),
        theorem_ok=True, extremal=False, koszul_witness=koszul_witness(J),
        leading_ideal=str(J.leading), elapsed_ms=(time.perf_counter() - start) * 1000,
    )


@dataclass
class SurveyRow:
    generators: tuple[int, ...]
    report: AnalysisReport | None
    error: str = ""
    elapsed_ms: float = 0.0

    def csv_fields(self) -> list[str]:
        g = ",".join(map(str, self.generators))
        r = self.report
        if r is None:
            return [g, str(self.generators[0]), str(len(self.generators) - 1), "", "", "",
                    f"error:{self.error}", "", "", "", "", f"{self.elapsed_ms:.1f}"]
        d = r.to_dict()
        return [g, str(self.generators[0]), str(r.c), str(r.d), str(r.e),
                "" if r.bound is None else str(r.bound), d["class"], str(r.cohen_macaulay),
                str(r.theorem_ok), str(r.extremal), r.koszul_witness, f"{self.elapsed_ms:.1f}"]


@dataclass
class SurveySummary:
    total: int = 0
    cached: int = 0
    errors: int = 0
    violations: list[tuple[int, ...]] = field(default_factory=list)
    extremal: list[tuple[int, ...]] = field(default_factory=list)
    quadratic: int = 0
    gap_failures: list[tuple[int, ...]] = field(default_factory=list)
    by_class: dict[str, int] = field(default_factory=dict)

    def format(self) -> str:
        lines = [
            f"semigroups analyzed : {self.total} ({self.cached} from cache, {self.errors} capped)",
            "classes             : " + ", ".join(f"{k}={v}" for k, v in sorted(self.by_class.items())),
            f"theorem violations  : {len(self.violations)}",
            f"extremal instances  : {len(self.extremal)}",
            f"quadratic instances : {self.quadratic}, gap failures: {len(self.gap_failures)}",
        ]
        for g in self.violations:
            lines.append(f"  VIOLATION <{','.join(map(str, g))}>")
        for g in self.extremal[:20]:
            lines.append(f"  extremal <{','.join(map(str, g))}>")
        if len(self.extremal) > 20:
            lines.append(f"  ... {len(self.extremal) - 20} more extremal")
        return "\n".join(lines)


def load_cache(path: Path | None) -> dict[tuple[int, ...], dict]:
    if path is None or not path.exists():
        return {}
    out = {}
    for line in path.read_text().splitlines():
        line = line.strip()
        if line:
            entry = json.loads(line)
            out[tuple(entry["generators"])] = entry
    return out


def _work(args):
    gens, caps = args
    start = time.perf_counter()
    try:
        report = analyze(NumericalSemigroup(gens), caps)
        return gens, report.to_dict(), "", (time.perf_counter() - start) * 1000
    except EffortCapExceeded as exc:
        return gens, None, type(exc).__name__, (time.perf_counter() - start) * 1000


def run_survey(embdims: Iterable[int], max_generator: int, out: Path | None = None,
               cache: Path | None = None, jobs: int = 1, caps: EffortCaps | None = None,
               ) -> tuple[list[SurveyRow], SurveySummary]:
    """Analyze every semigroup with the given embedding dimensions and generators
    ``<= max_generator``.  Rows are sorted by generator tuple; new reports are
    appended to ``cache`` (JSONL), and the CSV is written to ``out``."""
    semigroups = sorted(
        (S.generators for e in embdims for S in enumerate_semigroups(e, max_generator)))
    cached = load_cache(cache)
    todo = [g for g in semigroups if g not in cached]
    results: dict[tuple[int, ...], tuple] = {}
    tasks = [(g, caps) for g in todo]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            done = list(pool.map(_work, tasks, chunksize=8))
    else:
        done = [_work(t) for t in tasks]
    fresh = []
    for gens, rep, err, ms in done:
        results[gens] = (rep, err, ms)
        if rep is not None:
            fresh.append({**rep, "elapsed_ms": round(ms, 1)})
    if cache is not None and fresh:
        # single writer: the parent process appends after workers finish
        with cache.open("a") as fh:
            for entry in sorted(fresh, key=lambda e: tuple(e["generators"])):
                fh.write(json.dumps(entry) + "\n")

    rows: list[SurveyRow] = []
    summary = SurveySummary()
    for g in semigroups:
        if g in cached:
            entry = cached[g]
            rows.append(SurveyRow(g, AnalysisReport.from_dict(entry), "", entry.get("elapsed_ms", 0.0)))
            summary.cached += 1
        else:
            rep, err, ms = results[g]
            rows.append(SurveyRow(g, AnalysisReport.from_dict(rep) if rep else None, err, round(ms, 1)))
    for row in rows:
        summary.total += 1
        r = row.report
        if r is None:
            summary.errors += 1
            continue
        short = r.to_dict()["class"]
        summary.by_class[short] = summary.by_class.get(short, 0) + 1
        if not r.theorem_ok:
            summary.violations.append(row.generators)
        if r.extremal:
            summary.extremal.append(row.generators)
        if r.d == 2 and r.c >= 2:
            summary.quadratic += 1
            if not quadratic_gap_check(r):
                summary.gap_failures.append(row.generators)
    if out is not None:
        out.write_text(rows_to_csv(rows))
    return rows, summary


def rows_to_csv(rows: Sequence[SurveyRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for row in rows:
        w.writerow(row.csv_fields())
    return buf.getvalue()
