import pytest

from bhdpc.errors import InvalidTerminals
from bhdpc.tables import load_tables
from bhdpc.verify_oracle import (
    oracle_exists_3dpc,
    oracle_find_t3,
    verify_kdpc,
)

# a known-good cover of the 16-vertex graph, taken from the first row of
# the first embedded base-case table
GOOD_PAIRS = (((1, 0), (0, 0)), ((3, 0), (2, 0)), ((1, 2), (2, 2)))


def good_cover():
    row = load_tables()[0]
    return row.paths, row.pairs


def test_accepts_valid_cover():
    paths, pairs = good_cover()
    report = verify_kdpc(paths, 2, pairs)
    assert report.ok
    assert report.failures() == []


def test_rejects_swapped_endpoints():
    paths, pairs = good_cover()
    swapped = (pairs[1], pairs[0], pairs[2])
    report = verify_kdpc(paths, 2, swapped)
    assert not report.ok
    assert any(c.name == "pairing" for c in report.failures())


def test_rejects_missing_vertex_and_names_it():
    paths, pairs = good_cover()
    broken = [list(p) for p in paths]
    dropped = broken[0].pop()  # no longer ends at its sink either
    report = verify_kdpc(broken, 2, pairs)
    assert not report.ok
    names = {c.name for c in report.failures()}
    assert "coverage" in names
    cov = next(c for c in report.failures() if c.name == "coverage")
    assert str(dropped) in cov.detail


def test_rejects_non_edge():
    paths, pairs = good_cover()
    broken = [list(p) for p in paths]
    longest = max(range(3), key=lambda j: len(broken[j]))
    broken[longest][1], broken[longest][2] = broken[longest][2], broken[longest][1]
    report = verify_kdpc(broken, 2, pairs)
    assert not report.ok
    assert any(c.name == "adjacency" for c in report.failures())


def test_oracle_positive():
    S = [(1, 0), (3, 0), (1, 2)]
    T = [(0, 0), (2, 0), (2, 2)]
    witness = oracle_exists_3dpc(2, S, T)
    assert witness is not None
    assert verify_kdpc(witness, 2, tuple(zip(S, T))).ok


def test_oracle_known_negative():
    S = [(1, 0), (3, 0), (1, 2)]
    T = [(0, 0), (2, 0), (0, 1)]
    assert oracle_exists_3dpc(2, S, T) is None


def test_oracle_rejects_big_n():
    with pytest.raises(InvalidTerminals):
        oracle_exists_3dpc(3, [(1, 0, 0)] * 3, [(0, 0, 0)] * 3)


def test_find_t3_results_are_exactly_the_solvable_ones():
    S = ((1, 0), (3, 0), (1, 2))
    t1, t2 = (0, 0), (2, 0)
    found = set(oracle_find_t3(S, t1, t2))
    whites = [
        (a, b) for a in (0, 2) for b in range(4)
        if (a, b) not in (t1, t2)
    ]
    for t3 in whites:
        ok = oracle_exists_3dpc(2, list(S), [t1, t2, t3]) is not None
        assert ((t3 in found) == ok), t3
    assert found  # at least one completion exists for this pairing
