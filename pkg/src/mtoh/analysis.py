"""Color-crossing extraction, table regeneration, and efficiency curves.

A *color crossing* is a post's effective color passing from one color
through Neutral (dwelling there any number of moves) to the opposite
color. Crossings are counted per post over a trace's full color record,
initial state included; a record that starts or ends at Neutral does not
cross at the boundary.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import published
from .core import Trace
from .counts import decimal_string, duration_ratio, total
from .solvers import Algorithm, solve, trace_disk_counts, trace_length


@dataclass(frozen=True)
class ColorRecord:
    """Per-post color sequences, one entry per state (moves + 1 entries)."""

    s: "tuple[int, ...]"
    i: "tuple[int, ...]"
    d: "tuple[int, ...]"

    def post(self, index: int) -> "tuple[int, ...]":
        return (self.s, self.i, self.d)[index]


@dataclass(frozen=True)
class CrossingCount:
    s: int
    i: int
    d: int

    @property
    def total(self) -> int:
        return self.s + self.i + self.d


def color_record(trace: Trace) -> ColorRecord:
    cols = trace.colors
    return ColorRecord(
        tuple(c[0] for c in cols),
        tuple(c[1] for c in cols),
        tuple(c[2] for c in cols),
    )


def _crossings(seq: "tuple[int, ...]") -> int:
    count, prev = 0, 0
    for v in seq:
        if v:
            if prev and v == -prev:
                count += 1
            prev = v
    return count


def crossing_indices(seq: "tuple[int, ...]") -> "list[int]":
    """Move indexes at which the opposite color first appears."""
    hits, prev = [], 0
    for j, v in enumerate(seq):
        if v:
            if prev and v == -prev:
                hits.append(j)
            prev = v
    return hits


def count_crossings(record: ColorRecord) -> CrossingCount:
    return CrossingCount(
        _crossings(record.s), _crossings(record.i), _crossings(record.d)
    )


# --------------------------------------------------------------------------
# Crossing table


_CROSSING_ALGS = (
    ("67-down", Algorithm.F67_DOWN),
    ("67-up", Algorithm.F67_UP),
    ("62", Algorithm.F62),
)


def crossings_table(n_max: int) -> "dict[str, list[int]]":
    """Per-post crossing rows plus move totals for the free-tower schemes."""
    if n_max < 1:
        raise ValueError("need at least one column")
    rows: "dict[str, list[int]]" = {}
    for label, alg in _CROSSING_ALGS:
        per_post: "dict[str, list[int]]" = {"s": [], "i": [], "d": []}
        totals, moves = [], []
        for n in range(1, n_max + 1):
            cc = count_crossings(color_record(solve(alg, n)))
            per_post["s"].append(cc.s)
            per_post["i"].append(cc.i)
            per_post["d"].append(cc.d)
            totals.append(cc.total)
            moves.append(total(alg, n))
        rows[f"{label}-s"] = per_post["s"]
        rows[f"{label}-i"] = per_post["i"]
        rows[f"{label}-d"] = per_post["d"]
        rows[f"{label}-total"] = totals
        rows[f"{label}-moves"] = moves
    return rows


# --------------------------------------------------------------------------
# Table reports


@dataclass(frozen=True)
class Mismatch:
    table: str
    row: str
    column: str
    computed: int
    published: int


@dataclass(frozen=True)
class TableReport:
    table: str
    title: str
    rows: "list[dict]"
    mismatches: "list[Mismatch]"

    @property
    def ok(self) -> bool:
        return not self.mismatches


def _count_table_report(table_id: str) -> TableReport:
    spec = published.COUNT_TABLES[table_id]
    alg: Algorithm = spec["algorithm"]
    rows, mismatches = [], []
    for n in range(1, published.MAX_N + 1):
        trace_counts = trace_disk_counts(alg, n)
        computed = [trace_counts[k] for k in range(1, n + 1)]
        expected = spec["per_disk"][:n]
        row_total = trace_length(alg, n)
        rows.append({"n": n, "per_disk": computed, "total": row_total})
        for k, (got, want) in enumerate(zip(computed, expected), start=1):
            if got != want:
                mismatches.append(Mismatch(table_id, f"n={n}", f"k={k}", got, want))
        if row_total != spec["totals"][n - 1]:
            mismatches.append(
                Mismatch(table_id, f"n={n}", "total", row_total, spec["totals"][n - 1])
            )
        # The closed forms must agree with the trace-derived cells too.
        formula_total = total(alg, n)
        if formula_total != row_total:
            mismatches.append(
                Mismatch(table_id, f"n={n}", "total(closed-form)", formula_total, row_total)
            )
    return TableReport(table_id, spec["title"], rows, mismatches)


def _crossing_table_report() -> TableReport:
    computed = crossings_table(published.MAX_N)
    rows, mismatches = [], []
    for label, expected in published.CROSSING_ROWS:
        values = computed[label]
        rows.append({"row": label, "values": values})
        for n, (got, want) in enumerate(zip(values, expected), start=1):
            if got != want:
                mismatches.append(Mismatch("T10", label, f"n={n}", got, want))
    return TableReport("T10", "color crossings per post", rows, mismatches)


def table_report(table_id: str) -> TableReport:
    """Regenerate one reference table and flag any cell mismatch."""
    if table_id in published.COUNT_TABLES:
        return _count_table_report(table_id)
    if table_id == "T10":
        return _crossing_table_report()
    raise ValueError(f"unknown table id {table_id!r}; know {published.TABLE_IDS}")


def all_table_reports() -> "list[TableReport]":
    return [table_report(tid) for tid in published.TABLE_IDS]


# --------------------------------------------------------------------------
# Efficiency curves


@dataclass(frozen=True)
class EfficiencyRow:
    n: int
    total_100: int
    total_67: int
    total_sf: int
    total_62: int
    ratio_67: Fraction
    ratio_sf: Fraction
    ratio_62: Fraction

    def decimals(self, places: int = 12) -> "dict[str, str]":
        return {
            "67/100": decimal_string(self.ratio_67, places),
            "sf/100": decimal_string(self.ratio_sf, places),
            "62/100": decimal_string(self.ratio_62, places),
        }


def efficiency_series(n_max: int) -> "list[EfficiencyRow]":
    """Duration-ratio series for the three schemes against the 100 baseline."""
    if n_max < 2:
        raise ValueError("a series needs n_max >= 2")
    rows = []
    for n in range(1, n_max + 1):
        rows.append(
            EfficiencyRow(
                n=n,
                total_100=total(Algorithm.C100, n),
                total_67=total(Algorithm.F67_DOWN, n),
                total_sf=total(Algorithm.SEMIFREE, n),
                total_62=total(Algorithm.F62, n),
                ratio_67=duration_ratio(Algorithm.F67_DOWN, n),
                ratio_sf=duration_ratio(Algorithm.SEMIFREE, n),
                ratio_62=duration_ratio(Algorithm.F62, n),
            )
        )
    return rows
