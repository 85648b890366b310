"""End-to-end acceptance checks.

Each test below is one acceptance criterion and prints a single PASS line
with its measured runtime; run with -v (or -s) to see them.  Time limits
are asserted, not advisory.
"""

import itertools
import random
import time

import pytest

from bhdpc import pathengine as pe
from bhdpc import tables
from bhdpc import topology as tp
from bhdpc.dpc3 import TerminalSpec, build_3dpc, compute_profile
from bhdpc.errors import BHDPCError, UnreachableCase, UnrepairableRow
from bhdpc.verify_oracle import oracle_exists_3dpc, oracle_find_t3, verify_kdpc


def _stamp(name, t0, detail=""):
    dt = time.monotonic() - t0
    print(f"[{name}] PASS ({dt:.2f}s) {detail}")
    return dt


# ---------------------------------------------------------------- sample


def _components_after_cut(n, l):
    parent = {u: u for u in tp.all_nodes(n)}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u in tp.all_nodes(n):
        for v in tp.neighbors(u):
            if tp.edge_dimension(u, v) != l:
                parent[find(u)] = find(v)
    comps = {}
    for u in tp.all_nodes(n):
        comps.setdefault(find(u), []).append(u)
    return list(comps.values())


def _uniform_specs(rng, n, count):
    nodes = list(tp.all_nodes(n))
    blacks = [u for u in nodes if tp.is_black(u)]
    whites = [u for u in nodes if tp.is_white(u)]
    out = []
    for _ in range(count):
        S = rng.sample(blacks, 3)
        T = rng.sample(whites, 3)
        out.append(TerminalSpec(n, tuple(zip(S, T))))
    return out


def _targeted_23_specs(rng, count):
    # sources all in ring position 1, sinks split between positions 2 and 3
    # (along dimension 1): that forces an empty position and a full one
    nodes = list(tp.all_nodes(3))
    blacks = [u for u in nodes if tp.is_black(u) and u[1] == 1]
    w2 = [u for u in nodes if tp.is_white(u) and u[1] == 2]
    w3 = [u for u in nodes if tp.is_white(u) and u[1] == 3]
    out = []
    while len(out) < count:
        S = rng.sample(blacks, 3)
        k = rng.choice([1, 2])
        T = rng.sample(w2, k) + rng.sample(w3, 3 - k)
        rng.shuffle(T)
        spec = TerminalSpec(3, tuple(zip(S, T)))
        if compute_profile(spec).subcase == "2.3":
            out.append(spec)
    return out


@pytest.fixture(scope="module")
def sample_specs():
    rng = random.Random(20240817)
    specs = _uniform_specs(rng, 3, 1000)
    by_case = {"1.1": [], "1.2": [], "1.3": [], "2.3": []}
    for s in specs:
        by_case[compute_profile(s).subcase].append(s)
    extra = []
    if len(by_case["2.3"]) < 20:
        extra = _targeted_23_specs(rng, 20 - len(by_case["2.3"]))
        for s in extra:
            by_case["2.3"].append(s)
    return specs + extra, by_case


# ------------------------------------------------------------- criteria


def test_criterion_1_topology_suite():
    t0 = time.monotonic()
    for n in range(1, 5):
        nodes = list(tp.all_nodes(n))
        assert len(nodes) == 4 ** n
        whites = sum(1 for u in nodes if tp.is_white(u))
        assert whites * 2 == len(nodes)
        for u in nodes:
            nbrs = tp.neighbors(u)
            assert len(set(nbrs)) == 2 * n
            assert all(tp.is_white(u) != tp.is_white(v) for v in nbrs)
        for l in range(1, n):
            comps = _components_after_cut(n, l)
            assert len(comps) == 4
            pt = tp.partition_along(l, n)
            small = {v: set(tp.neighbor_set(v)) for v in tp.all_nodes(n - 1)}
            for comp in comps:
                assert len(comp) == 4 ** (n - 1)
                # projecting away the cut coordinate is an isomorphism onto
                # the next smaller graph
                for u in comp:
                    down = {
                        pt.to_local(v)
                        for v in tp.neighbors(u)
                        if tp.edge_dimension(u, v) != l
                    }
                    assert down == small[pt.to_local(u)]
    dt = _stamp("criterion 1", t0, "n=1..4 structure checks")
    assert dt < 5.0


def test_criterion_2_tables_validate_and_repair():
    t0 = time.monotonic()
    try:
        verdicts = tables.validate_all()
    except UnrepairableRow as ex:  # pragma: no cover
        pytest.fail(f"unrepairable row: {ex}")
    assert len(verdicts) == 240
    corrupted = {
        (v.row.table, v.row.index) for v in verdicts if v.status == "corrupted"
    }
    expected = {
        (1, 39), (2, 2), (2, 23), (2, 46),
        (3, 12), (3, 26), (3, 40), (4, 18), (4, 23),
    }
    assert corrupted == expected
    for v in verdicts:
        if v.status == "valid":
            assert verify_kdpc(v.row.paths, 2, v.row.pairs).ok
        else:
            assert v.replacement is not None
    dt = _stamp("criterion 2", t0, f"240 rows, {len(corrupted)} repaired")
    assert dt < 30.0


def test_criterion_3_exhaustive_completion_sweep():
    t0 = time.monotonic()
    blacks = [u for u in tp.all_nodes(2) if tp.is_black(u)]
    whites = [u for u in tp.all_nodes(2) if tp.is_white(u)]
    checked = 0
    for S in itertools.permutations(blacks, 3):
        for t1, t2 in itertools.permutations(whites, 2):
            assert oracle_find_t3(S, t1, t2), (S, t1, t2)
            checked += 1
    assert checked == 8 * 7 * 6 * 8 * 7 == 18816
    dt = _stamp("criterion 3", t0, f"{checked} ordered configurations")
    assert dt < 300.0


def test_criterion_4_known_nonexistence():
    t0 = time.monotonic()
    S = [(1, 0), (3, 0), (1, 2)]
    T = [(0, 0), (2, 0), (0, 1)]
    assert oracle_exists_3dpc(2, S, T) is None
    dt = _stamp("criterion 4", t0, "pairing correctly refused")
    assert dt < 1.0


def test_criterion_5_construction_sample(sample_specs):
    specs, by_case = sample_specs
    t0 = time.monotonic()
    assert len(specs) >= 1000
    for case in ("1.1", "1.2", "1.3", "2.3"):
        assert len(by_case[case]) >= 20, f"too few {case} specs"
    built = 0
    for spec in specs:
        try:
            cover = build_3dpc(spec)
        except UnreachableCase as ex:
            pytest.fail(f"unreachable dispatch hit for {spec.pairs}: {ex}")
        assert verify_kdpc(cover.paths, 3, spec.pairs).ok
        built += 1
    counts = {k: len(v) for k, v in by_case.items()}
    dt = _stamp("criterion 5", t0, f"{built}/{len(specs)} built, {counts}")
    assert dt < 120.0


def test_criterion_6_excluded_profiles_never_occur(sample_specs):
    specs, _ = sample_specs
    t0 = time.monotonic()
    for spec in specs:
        prof = compute_profile(spec)
        f0, f3 = prof.f[0], prof.f[3]
        assert not (f0 == 2 and f3 == 2), spec.pairs
        assert (f0, f3) != (1, 3), spec.pairs
    _stamp("criterion 6", t0, f"{len(specs)} profiles, none in excluded shapes")


def test_criterion_7_five_path_certificates():
    t0 = time.monotonic()
    c1, c2 = pe.five_path_pair((1, 0), 2)
    assert c1.path == ((1, 0), (0, 0), (1, 1), (2, 0), (3, 1))
    assert c2.path == ((1, 0), (0, 3), (3, 3), (2, 3), (1, 3))
    total = 0
    for n in (2, 3):
        for s in tp.all_nodes(n):
            if tp.is_white(s):
                continue
            a, b = pe.five_path_pair(s, n)
            a.validate(n)
            b.validate(n)
            assert not set(a.four_cycle) & set(b.four_cycle)
            total += 1
    dt = _stamp("criterion 7", t0, f"{total} sources certified")
    assert dt < 60.0


def test_criterion_8_anchor_cycles():
    t0 = time.monotonic()

    def check(edge, pt):
        cyc = pe.find_8cycle(edge, pt)
        assert len(cyc) == 8 and len(set(cyc)) == 8
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            assert tp.adjacent(a, b)
        intra = [0, 0, 0, 0]
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if tp.edge_dimension(a, b) != pt.dim:
                intra[pt.cube_of(a)] += 1
        assert intra == [1, 1, 1, 1]
        assert edge[0] in cyc and edge[1] in cyc

    pt2 = tp.partition_along(1, 2)
    seen = set()
    for u in tp.all_nodes(2):
        for v in tp.neighbors(u):
            if (v, u) in seen:
                continue
            seen.add((u, v))
            check((u, v), pt2)
    count2 = len(seen)

    rng = random.Random(5)
    pt3 = tp.partition_along(2, 3)
    nodes3 = list(tp.all_nodes(3))
    for _ in range(200):
        u = rng.choice(nodes3)
        v = rng.choice(tp.neighbors(u))
        check((u, v), pt3)
    dt = _stamp("criterion 8", t0, f"{count2} edges at n=2, 200 sampled at n=3")
    assert dt < 60.0


def test_criterion_9_stretch_n4():
    t0 = time.monotonic()
    rng = random.Random(4242)
    specs = _uniform_specs(rng, 4, 50)
    failures = []
    for spec in specs:
        try:
            cover = build_3dpc(spec)
            assert verify_kdpc(cover.paths, 4, spec.pairs).ok
        except (BHDPCError, AssertionError) as ex:
            failures.append((spec.pairs, repr(ex)))
    dt = time.monotonic() - t0
    if failures:
        # report, but the stretch goal must not take the suite down
        print(f"[criterion 9] PARTIAL ({dt:.2f}s) "
              f"{50 - len(failures)}/50 built; failures: {failures[:3]}")
    else:
        print(f"[criterion 9] PASS ({dt:.2f}s) 50/50 built and verified at n=4")
