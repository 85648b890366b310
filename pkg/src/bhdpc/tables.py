"""The embedded BH_2 base-case tables: loading, validation, repair.

The four tables enumerate, for four canonical (t1, t2) headers, a witness
3-DPC of BH_2 for each choice of sources and a suitable t3.  The data file is
kept byte-exact as published, typographical defects included (duplicated
letters, stray '.' separators, one path that walks through another pair's
source), and pinned by checksum.  Defective rows are detected by the
independent verifier and repaired by exhaustive search over the same
terminals, escalating to every alternative t3 before giving up.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from importlib import resources
from typing import Optional

from .errors import TableChecksumError, TableDecodeError, UnrepairableRow
from .pathengine import solve_kdpc
from .topology import NodeId
from .verify_oracle import Report, oracle_find_t3, verify_kdpc

_DATA_SHA256 = "b33b7fa0b0c3e38af90cd7850e53fbdc80ffe4f0cf1eaf3cdfd253cc01cd59b1"

# header sinks (t1, t2) per table id
TABLE_HEADERS: dict[int, tuple[NodeId, NodeId]] = {
    1: ((0, 0), (2, 0)),
    2: ((0, 0), (0, 1)),
    3: ((0, 0), (0, 2)),
    4: ((0, 0), (0, 3)),
}

# the published letter names for the 16 vertices of BH_2
LETTER_MAP: dict[str, NodeId] = {
    "a": (0, 0), "b": (1, 0), "c": (2, 0), "d": (3, 0),
    "e": (0, 1), "f": (1, 1), "g": (2, 1), "h": (3, 1),
    "i": (0, 2), "j": (1, 2), "k": (2, 2), "l": (3, 2),
    "m": (0, 3), "n": (1, 3), "o": (2, 3), "p": (3, 3),
}
NODE_TO_LETTER = {v: k for k, v in LETTER_MAP.items()}

EXPECTED_ROW_COUNT = 240  # frozen at first ingest


@dataclass(frozen=True)
class TableRow:
    table: int
    index: int  # position within its table, 0-based
    s_letters: tuple[str, str, str]
    t3_letter: str
    path_letters: tuple[tuple[str, ...], ...]

    @property
    def t1t2(self) -> tuple[NodeId, NodeId]:
        return TABLE_HEADERS[self.table]

    @property
    def pairs(self) -> tuple[tuple[NodeId, NodeId], ...]:
        t1, t2 = self.t1t2
        s1, s2, s3 = (LETTER_MAP[x] for x in self.s_letters)
        return ((s1, t1), (s2, t2), (s3, LETTER_MAP[self.t3_letter]))

    @property
    def paths(self) -> tuple[tuple[NodeId, ...], ...]:
        return tuple(
            tuple(LETTER_MAP[x] for x in p) for p in self.path_letters
        )


@dataclass(frozen=True)
class RowVerdict:
    row: TableRow
    status: str  # "valid" | "corrupted"
    report: Report
    replacement: Optional[tuple[tuple[NodeId, ...], ...]] = None
    replacement_t3: Optional[NodeId] = None


def _decode_letter(ch: str, where: str) -> str:
    if ch not in LETTER_MAP:
        raise TableDecodeError(f"letter {ch!r} outside a..p in {where}")
    return ch


def _split_path(field: str, where: str) -> tuple[str, ...]:
    # the published rows occasionally use '.' where ',' was meant; both split
    letters = [p for p in field.replace(".", ",").split(",") if p]
    if not letters:
        raise TableDecodeError(f"empty path in {where}")
    return tuple(_decode_letter(x, where) for x in letters)


def load_tables(text: Optional[str] = None) -> list[TableRow]:
    """Decode the embedded table file (or the given text) into rows."""
    if text is None:
        data = resources.files("bhdpc").joinpath("data/bh2_tables.txt").read_bytes()
        digest = hashlib.sha256(data).hexdigest()
        if digest != _DATA_SHA256:
            raise TableChecksumError(
                f"table data checksum mismatch: {digest} != {_DATA_SHA256}"
            )
        text = data.decode("ascii")
    rows = []
    seen_per_table: dict[int, int] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 8:
            raise TableDecodeError(f"line {lineno}: expected 8 fields, got {len(parts)}")
        where = f"line {lineno}"
        table = int(parts[0])
        if table not in TABLE_HEADERS:
            raise TableDecodeError(f"{where}: unknown table id {parts[0]!r}")
        s_letters = tuple(_decode_letter(x, where) for x in parts[1:4])
        t3 = _decode_letter(parts[4], where)
        paths = tuple(_split_path(p, where) for p in parts[5:8])
        idx = seen_per_table.get(table, 0)
        seen_per_table[table] = idx + 1
        rows.append(
            TableRow(
                table=table,
                index=idx,
                s_letters=s_letters,
                t3_letter=t3,
                path_letters=paths,
            )
        )
    if not rows:
        raise TableDecodeError("no table rows found")
    return rows


def _repair(row: TableRow) -> tuple[tuple[tuple[NodeId, ...], ...], NodeId]:
    """A fresh witness for a defective row: first with the printed t3, then
    scanning every alternative t3."""
    pairs = list(row.pairs)
    sol = solve_kdpc(2, pairs, budget=10**12)
    if sol is not None:
        return tuple(sol), pairs[2][1]
    (s1, t1), (s2, t2), (s3, _) = pairs
    for t3 in oracle_find_t3((s1, s2, s3), t1, t2):
        sol = solve_kdpc(2, [(s1, t1), (s2, t2), (s3, t3)], budget=10**12)
        if sol is not None:
            return tuple(sol), t3
    raise UnrepairableRow(f"table {row.table} row {row.index}: no cover for any t3")


def validate_all(rows: Optional[list[TableRow]] = None) -> list[RowVerdict]:
    if rows is None:
        rows = load_tables()
    verdicts = []
    for row in rows:
        report = verify_kdpc(row.paths, 2, row.pairs)
        if report.ok:
            verdicts.append(RowVerdict(row=row, status="valid", report=report))
        else:
            repl, t3 = _repair(row)
            verdicts.append(
                RowVerdict(
                    row=row,
                    status="corrupted",
                    report=report,
                    replacement=repl,
                    replacement_t3=t3,
                )
            )
    return verdicts
