"""Published parameter rows for each family and a runner that rebuilds them.

Each row is (q, m, family parameter, n, k, d).  ``reproduce`` builds the
code, compares length and dimension, and certifies d by a witness of the
stated weight (or by enumeration in ``exhaustive`` mode).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .families import FamilyReport, HypothesisError, run_family, tower_for

MAX_FIELD = 6561


@dataclass(frozen=True)
class TableRow:
    table: str
    family: str
    q: int
    m: int
    param: int
    n: int
    k: int
    d: int

    @property
    def label(self) -> str:
        return f"[{self.n},{self.k},{self.d}]_{self.q}"

    @property
    def field_size(self) -> int:
        return self.q**self.m

    def family_params(self) -> dict:
        key = "r" if self.family in ("wild", "norm_bch") else "t"
        return {"q": self.q, "m": self.m, key: self.param}


def _rows(table, family, data):
    return tuple(TableRow(table, family, *row) for row in data)


TABLE2 = _rows("table2", "wild", [
    (5, 2, 2, 25, 9, 13),
    (7, 2, 2, 49, 25, 17),
    (7, 2, 3, 49, 16, 25),
    (9, 2, 2, 81, 49, 21),
    (9, 2, 4, 81, 25, 41),
])

TABLE3 = _rows("table3", "xt_plus_A", [
    (3, 2, 2, 7, 3, 3),
    (3, 3, 2, 27, 21, 3),
    (3, 4, 4, 77, 61, 5),
    (3, 4, 8, 73, 42, 9),
    (3, 4, 10, 71, 37, 11),
    (5, 2, 2, 23, 19, 3),
    (5, 2, 4, 21, 13, 5),
    (5, 2, 6, 19, 10, 7),
    (5, 2, 8, 25, 10, 9),
    (5, 3, 2, 123, 117, 3),
    (5, 3, 4, 125, 113, 5),
    (7, 2, 2, 47, 43, 3),
    (7, 2, 3, 49, 43, 4),
    (7, 2, 4, 45, 37, 5),
    (7, 2, 8, 41, 28, 9),
    (7, 2, 12, 37, 14, 13),
    (9, 2, 2, 79, 75, 3),
    (9, 2, 4, 77, 69, 5),
    (9, 2, 8, 73, 57, 9),
    (9, 2, 10, 71, 54, 11),
])

TABLE4 = _rows("table4", "fractional", [
    (3, 2, 1, 8, 6, 2),
    (3, 2, 3, 8, 4, 4),
    (3, 3, 1, 26, 23, 2),
    (3, 3, 12, 27, 4, 13),
    (3, 4, 1, 80, 76, 2),
    (3, 4, 3, 80, 72, 4),
    (3, 4, 4, 81, 65, 5),
    (3, 4, 7, 80, 52, 8),
    (4, 2, 2, 15, 11, 3),
    (4, 2, 4, 15, 9, 5),
    (4, 3, 2, 63, 57, 3),
    (4, 3, 6, 64, 46, 7),
    (5, 2, 1, 24, 22, 2),
    (5, 2, 3, 25, 19, 4),
    (5, 2, 5, 24, 16, 6),
    (5, 2, 7, 24, 10, 8),
    (5, 3, 1, 124, 121, 2),
    (5, 3, 3, 124, 115, 4),
    (5, 3, 30, 125, 53, 31),
    (7, 2, 1, 48, 46, 2),
    (7, 2, 2, 49, 45, 3),
    (7, 2, 3, 49, 43, 4),
    (7, 2, 5, 48, 38, 6),
    (7, 2, 7, 48, 36, 8),
    (8, 2, 2, 63, 59, 3),
    (8, 2, 6, 64, 52, 7),
    (9, 2, 1, 80, 78, 2),
    (9, 2, 3, 80, 74, 4),
    (9, 2, 4, 81, 73, 5),
    (9, 2, 7, 80, 66, 8),
])

TABLE5 = _rows("table5", "norm_bch", [
    (3, 2, 1, 8, 3, 5),
    (3, 3, 1, 26, 7, 14),
    (3, 4, 1, 80, 15, 41),
    (3, 5, 1, 242, 31, 122),
    (4, 2, 1, 15, 8, 6),
    (4, 3, 1, 63, 26, 22),
    (4, 4, 1, 255, 80, 86),
    (5, 2, 1, 24, 15, 7),
    (5, 2, 2, 24, 8, 13),
    (5, 3, 1, 124, 63, 32),
    (5, 3, 2, 124, 26, 63),
    (7, 2, 1, 48, 35, 9),
    (7, 2, 2, 48, 24, 17),
    (7, 2, 3, 48, 15, 25),
    (7, 3, 1, 342, 215, 58),
    (7, 3, 2, 342, 124, 115),
    (7, 3, 3, 342, 63, 172),
    (8, 2, 1, 63, 48, 10),
    (8, 3, 1, 511, 342, 74),
    (9, 2, 1, 80, 63, 11),
    (9, 2, 2, 80, 48, 21),
    (9, 2, 4, 80, 24, 41),
])

TABLES = {"table2": TABLE2, "table3": TABLE3, "table4": TABLE4, "table5": TABLE5}
ALL_ROWS = TABLE2 + TABLE3 + TABLE4 + TABLE5


def find_row(table: str, q: int, m: int, param: int) -> TableRow:
    for row in TABLES[table]:
        if (row.q, row.m, row.param) == (q, m, param):
            return row
    raise KeyError(f"no row ({q}, {m}, {param}) in {table}")


@dataclass
class RowResult:
    row: TableRow
    n: int | None = None
    k: int | None = None
    d_lower: int | None = None
    d_upper: int | None = None
    checks: dict = field(default_factory=dict)
    error: str | None = None
    seconds: float = 0.0
    report: FamilyReport | None = field(default=None, repr=False)

    @property
    def passed(self) -> bool:
        return self.error is None and bool(self.checks) and all(self.checks.values())

    @property
    def computed_label(self) -> str:
        if self.n is None:
            return "-"
        d = str(self.d_lower) if self.d_lower == self.d_upper else f"{self.d_lower}..{self.d_upper}"
        return f"[{self.n},{self.k},{d}]_{self.row.q}"

    def as_dict(self, timing: bool = False) -> dict:
        out = {
            "table": self.row.table, "family": self.row.family,
            "q": self.row.q, "m": self.row.m, "param": self.row.param,
            "expected": self.row.label, "computed": self.computed_label,
            "checks": dict(self.checks), "pass": self.passed,
        }
        if self.error:
            out["error"] = self.error
        if timing:
            out["seconds"] = round(self.seconds, 3)
        return out


def reproduce_row(row: TableRow, mode: str = "witness", budget: int | None = None) -> RowResult:
    """Rebuild one row; every comparison is recorded under ``checks``."""
    res = RowResult(row)
    start = time.perf_counter()
    try:
        ctx = tower_for(row.q, row.m)
        report = run_family(row.family, ctx=ctx, **{k: v for k, v in row.family_params().items()
                                                    if k not in ("q", "m")})
        res.report = report
        code = report.code
        res.n, res.k = code.n, code.k
        member = report.membership()
        dist = report.distance(mode, budget)
        res.d_lower, res.d_upper = dist.lower, dist.upper
        res.checks = {
            "n": code.n == row.n,
            "k": code.k == row.k,
            "witness_weight": report.witness.weight == row.d,
            "membership_congruence": member["congruence"],
            "membership_syndrome": member["syndrome"],
            "d_exact": dist.exact and dist.lower == row.d,
        }
    except (HypothesisError, ValueError) as exc:
        res.error = f"{type(exc).__name__}: {exc}"
    res.seconds = time.perf_counter() - start
    return res


def select_rows(table: str | None = None, max_length: int | None = None,
                max_field: int | None = MAX_FIELD) -> list[TableRow]:
    rows = TABLES[table] if table else ALL_ROWS
    return [r for r in rows
            if (max_length is None or r.n <= max_length)
            and (max_field is None or r.field_size <= max_field)]


def reproduce(table: str | None = None, max_length: int | None = None,
              max_field: int | None = MAX_FIELD, mode: str = "witness",
              budget: int | None = None) -> list[RowResult]:
    return [reproduce_row(r, mode, budget) for r in select_rows(table, max_length, max_field)]


def format_results(results: list[RowResult], timing: bool = False) -> str:
    """Aligned text table, one line per row."""
    header = ["table", "q", "m", "param", "expected", "computed", "status"]
    if timing:
        header.append("seconds")
    lines = [header]
    for r in results:
        line = [r.row.table, str(r.row.q), str(r.row.m), str(r.row.param), r.row.label,
                r.computed_label, "PASS" if r.passed else "FAIL"]
        if timing:
            line.append(f"{r.seconds:.2f}")
        lines.append(line)
    widths = [max(len(line[i]) for line in lines) for i in range(len(header))]
    out = ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in lines]
    for r in results:
        failed = [k for k, ok in r.checks.items() if not ok]
        if r.error or failed:
            out.append(f"# {r.row.table} {r.row.label}: {r.error or 'failed ' + ', '.join(failed)}")
    return "\n".join(out)
