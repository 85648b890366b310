import pytest

from bhdpc import tables
from bhdpc.errors import TableChecksumError, TableDecodeError
from bhdpc.verify_oracle import verify_kdpc

# rows that ship with defects (duplicated letters, non-edges, vertices reused
# across paths); each must be detected and repaired, never accepted as-is
KNOWN_CORRUPTED = {
    (1, 39),
    (2, 2),
    (2, 23),
    (2, 46),
    (3, 12),
    (3, 26),
    (3, 40),
    (4, 18),
    (4, 23),
}


def test_letter_map_roundtrip():
    assert len(tables.LETTER_MAP) == 16
    for letter, node in tables.LETTER_MAP.items():
        assert tables.NODE_TO_LETTER[node] == letter


def test_load_row_count_and_shape():
    rows = tables.load_tables()
    assert len(rows) == tables.EXPECTED_ROW_COUNT == 240
    per_table = {}
    for row in rows:
        per_table[row.table] = per_table.get(row.table, 0) + 1
        assert len(row.pairs) == 3
        assert len(row.paths) == 3
    assert set(per_table) == {1, 2, 3, 4}


def test_embedded_data_checksum_pinned():
    import hashlib
    from importlib import resources

    data = resources.files("bhdpc").joinpath("data/bh2_tables.txt").read_bytes()
    assert hashlib.sha256(data).hexdigest() == tables._DATA_SHA256


def test_tampered_data_rejected(monkeypatch):
    monkeypatch.setattr(tables, "_DATA_SHA256", "0" * 64)
    with pytest.raises(TableChecksumError):
        tables.load_tables()


@pytest.mark.parametrize("bad", ["1\ta\tb\tc\n", "9\ta\tb\tc\td\ta\tb\tc\n",
                                 "1\ta\tb\tz\td\ta\tb\tc\n"])
def test_malformed_row_rejected(bad):
    with pytest.raises(TableDecodeError):
        tables.load_tables(text=bad)


def test_validate_all_census():
    verdicts = tables.validate_all()
    corrupted = {
        (v.row.table, v.row.index) for v in verdicts if v.status == "corrupted"
    }
    assert corrupted == KNOWN_CORRUPTED
    for v in verdicts:
        if v.status == "valid":
            assert verify_kdpc(v.row.paths, 2, v.row.pairs).ok
        else:
            assert v.replacement is not None
            pairs = (
                v.row.pairs[0],
                v.row.pairs[1],
                (v.row.pairs[2][0], v.replacement_t3),
            )
            assert verify_kdpc(v.replacement, 2, pairs).ok


def test_stray_period_row_is_not_corrupted():
    # one row prints a path separator as "." instead of ","; after
    # normalization it decodes to a perfectly valid cover
    verdicts = tables.validate_all()
    v = next(
        v for v in verdicts
        if v.row.table == 2 and tuple(v.row.s_letters) == ("f", "p", "n")
    )
    assert v.status == "valid"
