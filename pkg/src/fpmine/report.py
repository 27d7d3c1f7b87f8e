"""Side-by-side Apriori/DHP statistics and their text, CSV and JSON renderings."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, replace

from .apriori import Level, MiningResult, mine_apriori
from .dhp import HashConfig, mine_dhp
from .errors import FPMError, MinerDisagreement
from .model import CountedItemset, TransactionDatabase, as_threshold

SCHEMA_VERSION = 1
FORMATS = ("text", "csv", "json")


class ReportInvariantError(FPMError):
    """DHP produced more candidates than Apriori, or candidates Apriori never generated."""


@dataclass(frozen=True)
class SideStats:
    candidates: int
    frequent: int
    db_rows_after: int
    candidate_itemsets: tuple | None = None
    frequent_itemsets: tuple | None = None

    @classmethod
    def from_level(cls, level: Level) -> "SideStats":
        return cls(
            level.candidate_count,
            level.frequent_count,
            level.db_rows_after,
            tuple(level.candidates.members),
            tuple(level.frequent.members),
        )

    def without_itemsets(self) -> "SideStats":
        return replace(self, candidate_itemsets=None, frequent_itemsets=None)


@dataclass(frozen=True)
class ReportLevel:
    k: int
    apriori: SideStats | None
    dhp: SideStats | None


@dataclass(frozen=True)
class ComparisonReport:
    transactions: int
    items: int
    min_sup: int
    buckets: int
    levels: tuple = ()

    def without_itemsets(self) -> "ComparisonReport":
        return replace(self, levels=tuple(
            ReportLevel(
                lv.k,
                lv.apriori.without_itemsets() if lv.apriori else None,
                lv.dhp.without_itemsets() if lv.dhp else None,
            )
            for lv in self.levels
        ))


def _check_agreement(apriori: MiningResult, dhp: MiningResult):
    a_levels = {lv.k: lv for lv in apriori.levels}
    d_levels = {lv.k: lv for lv in dhp.levels}
    for k in sorted(set(a_levels) | set(d_levels)):
        a = a_levels[k].frequent.as_dict() if k in a_levels else {}
        d = d_levels[k].frequent.as_dict() if k in d_levels else {}
        if a != d:
            only_a = [CountedItemset(i, s) for i, s in sorted(a.items()) if d.get(i) != s]
            only_d = [CountedItemset(i, s) for i, s in sorted(d.items()) if a.get(i) != s]
            raise MinerDisagreement(k, [str(c) for c in only_a], [str(c) for c in only_d])
        if k >= 2 and k in d_levels:
            a_cands = set(a_levels[k].candidates.itemsets) if k in a_levels else set()
            extra = set(d_levels[k].candidates.itemsets) - a_cands
            if extra:
                raise ReportInvariantError(f"k={k}: DHP candidates outside Apriori's: {sorted(extra)}")


def compare(db: TransactionDatabase, threshold, config: HashConfig = HashConfig()) -> ComparisonReport:
    threshold = as_threshold(threshold)
    apriori = mine_apriori(db, threshold)
    dhp = mine_dhp(db, threshold, config)
    _check_agreement(apriori, dhp)
    a_levels = {lv.k: lv for lv in apriori.levels}
    d_levels = {lv.k: lv for lv in dhp.levels}
    levels = tuple(
        ReportLevel(
            k,
            SideStats.from_level(a_levels[k]) if k in a_levels else None,
            SideStats.from_level(d_levels[k]) if k in d_levels else None,
        )
        for k in sorted(set(a_levels) | set(d_levels))
    )
    return ComparisonReport(len(db), len(db.universe), threshold.min_sup, config.bucket_count, levels)


# -- shared formatting -------------------------------------------------------

def _noun(n, singular, plural):
    return singular if n == 1 else plural


def _c_label(n, k):
    return f"{n} - {_noun(n, 'itemset', 'itemsets')} for C{k}"


def _l_label(n, k):
    return f"{n} - {_noun(n, 'itemset', 'itemsets')} selected for L{k}"


def _listing(members) -> str:
    return "  ".join(str(m) for m in members)


def _wrap(text, width):
    """Greedy wrap on the double-space separators used by ``_listing``."""
    if not text:
        return []
    lines, current = [], ""
    for chunk in text.split("  "):
        candidate = f"{current}  {chunk}" if current else chunk
        if current and len(candidate) > width:
            lines.append(current)
            current = chunk
        else:
            current = candidate
    lines.append(current)
    return lines


def _counted_json(members):
    return [{"items": list(m.items), "support": m.support} for m in members]


def _counted_from_json(rows):
    return tuple(CountedItemset(tuple(r["items"]), int(r["support"])) for r in rows)


def _csv_itemsets(members):
    if members is None:
        return ""
    return ";".join(f"{','.join(m.items)}/{m.support}" for m in members)


_CSV_HEADER = ["k", "algorithm", "candidates", "frequent", "db_rows_after",
               "candidate_itemsets", "frequent_itemsets"]


def _csv_row(k, algorithm, side: SideStats | None, list_itemsets):
    if side is None:
        return [k, algorithm, "", "", "", "", ""]
    return [
        k, algorithm, side.candidates, side.frequent, side.db_rows_after,
        _csv_itemsets(side.candidate_itemsets) if list_itemsets else "",
        _csv_itemsets(side.frequent_itemsets) if list_itemsets else "",
    ]


def _csv_bytes(rows) -> bytes:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(_CSV_HEADER)
    writer.writerows(rows)
    return buf.getvalue().encode("utf-8")


def _side_json(side: SideStats | None, list_itemsets):
    if side is None:
        return None
    out = {"candidates": side.candidates, "frequent": side.frequent, "db_rows_after": side.db_rows_after}
    if list_itemsets and side.candidate_itemsets is not None:
        out["candidate_itemsets"] = _counted_json(side.candidate_itemsets)
        out["frequent_itemsets"] = _counted_json(side.frequent_itemsets)
    return out


def _side_from_json(obj):
    if obj is None:
        return None
    cands = obj.get("candidate_itemsets")
    freq = obj.get("frequent_itemsets")
    return SideStats(
        int(obj["candidates"]),
        int(obj["frequent"]),
        int(obj["db_rows_after"]),
        _counted_from_json(cands) if cands is not None else None,
        _counted_from_json(freq) if freq is not None else None,
    )


def _dump(obj) -> bytes:
    return (json.dumps(obj, indent=2) + "\n").encode("utf-8")


def _bold(text, color):
    return f"\x1b[1m{text}\x1b[0m" if color else text


# -- comparison report -------------------------------------------------------

def _text_table(report: ComparisonReport, list_itemsets, color):
    rows = [("", f"{report.transactions} - transactions considered for study", str(report.transactions),
             f"{report.transactions} - transactions considered for study", str(report.transactions))]
    listings = {}
    for lv in report.levels:
        for kind in ("C", "L"):
            cells = [str(lv.k) if kind == "C" else ""]
            for side in (lv.apriori, lv.dhp):
                if side is None:
                    cells += ["-", "-"]
                    continue
                if kind == "C":
                    cells.append(_c_label(side.candidates, lv.k))
                else:
                    cells.append(_l_label(side.frequent, lv.k))
                cells.append(str(side.db_rows_after))
            rows.append(tuple(cells))
            if list_itemsets:
                listings[len(rows) - 1] = tuple(
                    _listing(getattr(side, "candidate_itemsets" if kind == "C" else "frequent_itemsets") or ())
                    if side is not None else ""
                    for side in (lv.apriori, lv.dhp)
                )
    header = ("K", "Apriori", "Rows", "DHP", "Rows")
    widths = [max(len(r[i]) for r in rows + [header]) for i in range(5)]
    if list_itemsets:
        widths[1] = max(widths[1], 36)
        widths[3] = max(widths[3], 36)

    def line(cells):
        k, a, ar, d, dr = cells
        return (f"{k:>{widths[0]}} | {a:<{widths[1]}} | {ar:>{widths[2]}} | "
                f"{d:<{widths[3]}} | {dr:>{widths[4]}}").rstrip()

    out = [
        _bold(f"Apriori vs DHP: {report.transactions} transactions, {report.items} items, "
              f"min_sup={report.min_sup}, buckets={report.buckets}", color),
        "",
        _bold(line(header), color),
        "-+-".join("-" * w for w in widths),
    ]
    for idx, cells in enumerate(rows):
        out.append(line(cells))
        if idx in listings:
            left = _wrap(listings[idx][0], widths[1])
            right = _wrap(listings[idx][1], widths[3])
            for j in range(max(len(left), len(right))):
                out.append(line(("", left[j] if j < len(left) else "", "",
                                 right[j] if j < len(right) else "", "")))
    return ("\n".join(out) + "\n").encode("utf-8")


def render(report: ComparisonReport, fmt: str = "text", list_itemsets: bool = False,
           color: bool = False) -> bytes:
    if fmt == "text":
        return _text_table(report, list_itemsets, color)
    if fmt == "csv":
        rows = []
        for lv in report.levels:
            rows.append(_csv_row(lv.k, "apriori", lv.apriori, list_itemsets))
            rows.append(_csv_row(lv.k, "dhp", lv.dhp, list_itemsets))
        return _csv_bytes(rows)
    if fmt == "json":
        return _dump({
            "schema": SCHEMA_VERSION,
            "input": {"transactions": report.transactions, "items": report.items,
                      "min_sup": report.min_sup, "buckets": report.buckets},
            "levels": [
                {"k": lv.k, "apriori": _side_json(lv.apriori, list_itemsets),
                 "dhp": _side_json(lv.dhp, list_itemsets)}
                for lv in report.levels
            ],
        })
    raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")


def report_from_json(payload) -> ComparisonReport:
    obj = json.loads(payload) if isinstance(payload, (str, bytes)) else payload
    if obj.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported report schema {obj.get('schema')!r}")
    inp = obj["input"]
    return ComparisonReport(
        int(inp["transactions"]),
        int(inp["items"]),
        int(inp["min_sup"]),
        int(inp["buckets"]),
        tuple(
            ReportLevel(int(lv["k"]), _side_from_json(lv["apriori"]), _side_from_json(lv["dhp"]))
            for lv in obj["levels"]
        ),
    )


# -- single-miner output -------------------------------------------------------

def render_result(result: MiningResult, db: TransactionDatabase, fmt: str = "text",
                  list_itemsets: bool = False, config: HashConfig | None = None,
                  color: bool = False) -> bytes:
    sides = [(lv.k, SideStats.from_level(lv)) for lv in result.levels]
    if fmt == "csv":
        return _csv_bytes([_csv_row(k, result.algorithm, side, list_itemsets) for k, side in sides])
    if fmt == "json":
        inp = {"transactions": len(db), "items": len(db.universe), "min_sup": result.threshold.min_sup}
        if config is not None:
            inp["buckets"] = config.bucket_count
        return _dump({
            "schema": SCHEMA_VERSION,
            "algorithm": result.algorithm,
            "input": inp,
            "levels": [dict(k=k, **_side_json(side, list_itemsets)) for k, side in sides],
        })
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    out = [_bold(f"{result.algorithm}: {len(db)} transactions, {len(db.universe)} items, "
                 f"min_sup={result.threshold.min_sup}", color), ""]
    out.append(f"{'K':>3} | {'Candidates':>10} | {'Frequent':>8} | {'Rows':>6}")
    out.append("----+------------+----------+-------")
    for k, side in sides:
        out.append(f"{k:>3} | {side.candidates:>10} | {side.frequent:>8} | {side.db_rows_after:>6}")
    if list_itemsets:
        for k, side in sides:
            out.append("")
            out.append(f"===== C{k} =====")
            out.extend(str(m) for m in side.candidate_itemsets)
            out.append(f"===== L{k} =====")
            out.extend(str(m) for m in side.frequent_itemsets)
    return ("\n".join(out) + "\n").encode("utf-8")
