"""Batch bound checking over graph streams, with JSONL / CSV / summary reports."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from typing import Iterable, Sequence, TextIO

from .broadcast import is_dominating
from .formats import from_graph6, to_graph6
from .graph import SubcubicGraph, omega
from .solver import DEFAULT_CAP, SizeLimitExceeded, SolveTimeout, gamma_exact

__all__ = [
    "CHECKS",
    "DEFAULT_TIMEOUT",
    "EXIT_OK",
    "EXIT_VIOLATION",
    "EXIT_PARTIAL",
    "IoFailure",
    "VerificationRecord",
    "Summary",
    "StreamResult",
    "verify_graph",
    "verify_stream",
    "summarize",
    "report",
]

CHECKS = frozenset({"subcubic", "cubic", "four_ninths", "certificate"})
DEFAULT_TIMEOUT = 30.0

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_PARTIAL = 3


class IoFailure(OSError):
    pass


@dataclass(frozen=True)
class VerificationRecord:
    """One graph's outcome.

    Bound flags are ``None`` when the bound does not apply (the cubic bound on
    a non-cubic graph, the 4n/9 bound on a disconnected one) or was not
    requested.  ``status`` is ``"ok"``, ``"violation"`` or ``"partial"``; a
    partial record has no ``gamma`` and carries the reason in ``error``.
    """

    graph6: str
    n: int
    m: int
    omega: int
    gamma: int | None
    slack: int | None
    cubic_bound_ok: bool | None
    subcubic_bound_ok: bool | None
    four_ninths_ok: bool | None
    certificate_ok: bool | None
    millis: float
    status: str
    error: str = ""

    @property
    def violated(self) -> bool:
        return self.status == "violation"


FIELD_ORDER = tuple(f.name for f in fields(VerificationRecord))


def verify_graph(
    g: SubcubicGraph,
    checks: Iterable[str] = CHECKS,
    cap: int = DEFAULT_CAP,
    timeout: float | None = DEFAULT_TIMEOUT,
) -> VerificationRecord:
    checks = frozenset(checks)
    unknown = checks - CHECKS
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    g6 = to_graph6(g)
    w = omega(g)
    t0 = time.perf_counter()
    try:
        sol = gamma_exact(g, cap=cap, timeout=timeout)
    except (SizeLimitExceeded, SolveTimeout) as exc:
        ms = (time.perf_counter() - t0) * 1000
        return VerificationRecord(
            g6, g.n, g.m, w, None, None, None, None, None, None, ms, "partial",
            f"{type(exc).__name__}: {exc}",
        )
    ms = (time.perf_counter() - t0) * 1000
    gamma = sol.gamma
    slack = w - 9 * gamma
    cubic_ok = (9 * gamma <= 3 * g.n) if "cubic" in checks and g.is_cubic else None
    sub_ok = slack >= 0 if "subcubic" in checks else None
    four_ok = (
        gamma <= math.ceil(4 * g.n / 9) if "four_ninths" in checks and g.is_connected else None
    )
    cert_ok = (
        is_dominating(sol.certificate) and sol.certificate.cost == gamma
        if "certificate" in checks
        else None
    )
    bad = any(flag is False for flag in (cubic_ok, sub_ok, four_ok, cert_ok))
    return VerificationRecord(
        g6, g.n, g.m, w, gamma, slack, cubic_ok, sub_ok, four_ok, cert_ok, ms,
        "violation" if bad else "ok",
    )


def _verify_g6(args: tuple[str, frozenset, int, float | None]) -> VerificationRecord:
    g6, checks, cap, timeout = args
    return verify_graph(from_graph6(g6), checks, cap, timeout)


@dataclass(frozen=True)
class Summary:
    count: int = 0
    verified: int = 0
    violations: int = 0
    partial: int = 0
    min_slack: int | None = None
    slack_histogram: dict[int, int] = field(default_factory=dict)
    tight: tuple[str, ...] = ()

    @property
    def exit_code(self) -> int:
        if self.violations:
            return EXIT_VIOLATION
        if self.partial:
            return EXIT_PARTIAL
        return EXIT_OK


@dataclass(frozen=True)
class StreamResult:
    records: list[VerificationRecord]
    summary: Summary


def summarize(records: Sequence[VerificationRecord], tight_slack: int = 0) -> Summary:
    """Counts, slack histogram, and the graph6 strings with slack at most ``tight_slack``."""
    slacks = [r.slack for r in records if r.slack is not None]
    hist = Counter(slacks)
    return Summary(
        count=len(records),
        verified=len(slacks),
        violations=sum(r.violated for r in records),
        partial=sum(r.status == "partial" for r in records),
        min_slack=min(slacks) if slacks else None,
        slack_histogram=dict(sorted(hist.items())),
        tight=tuple(r.graph6 for r in records if r.slack is not None and r.slack <= tight_slack),
    )


def verify_stream(
    graphs: Iterable[SubcubicGraph],
    checks: Iterable[str] = CHECKS,
    cap: int = DEFAULT_CAP,
    timeout: float | None = DEFAULT_TIMEOUT,
    threads: int = 1,
) -> StreamResult:
    """Verify each graph; records come back in input order.

    Graphs over the cap or over the time budget become ``partial`` records
    instead of stopping the stream.  ``threads > 1`` spreads the work over
    that many worker processes.
    """
    checks = frozenset(checks)
    graphs = list(graphs)
    if threads <= 1 or len(graphs) < 2:
        records = [verify_graph(g, checks, cap, timeout) for g in graphs]
    else:
        jobs = [(to_graph6(g), checks, cap, timeout) for g in graphs]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            records = list(pool.map(_verify_g6, jobs, chunksize=max(1, len(jobs) // (4 * threads))))
    return StreamResult(records, summarize(records))


# -- reports ------------------------------------------------------------------------


def _csv_cell(x: object) -> str:
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.3f}"
    return str(x)


def _json_row(r: VerificationRecord) -> dict:
    d = asdict(r)
    d["millis"] = round(d["millis"], 3)
    return {k: d[k] for k in FIELD_ORDER}


def _summary_text(s: Summary) -> str:
    lines = [
        f"graphs: {s.count}",
        f"verified: {s.verified}",
        f"violations: {s.violations}",
        f"partial: {s.partial}",
        f"min_slack: {'-' if s.min_slack is None else s.min_slack}",
        "slack histogram:",
    ]
    lines += [f"  {k:>4}: {v}" for k, v in s.slack_histogram.items()]
    lines.append(f"tight (slack 0): {len(s.tight)}")
    lines += [f"  {g6}" for g6 in s.tight]
    return "\n".join(lines) + "\n"


def report(
    records: Sequence[VerificationRecord], fmt: str = "jsonl", out: TextIO | str | None = None
) -> str:
    """Render ``records`` as ``jsonl``, ``csv`` or ``summary`` text.

    The text is returned and, when ``out`` is a stream or a path, also
    written there.  Write errors surface as ``IoFailure``.
    """
    if fmt == "jsonl":
        text = "".join(json.dumps(_json_row(r)) + "\n" for r in records)
    elif fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(FIELD_ORDER)
        for r in records:
            w.writerow([_csv_cell(getattr(r, k)) for k in FIELD_ORDER])
        text = buf.getvalue()
    elif fmt == "summary":
        text = _summary_text(summarize(records))
    else:
        raise ValueError(f"unknown report format {fmt!r}")
    if out is not None:
        try:
            if isinstance(out, str):
                with open(out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                out.write(text)
        except OSError as exc:
            raise IoFailure(str(exc)) from exc
    return text
