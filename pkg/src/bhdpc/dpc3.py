"""Recursive construction of paired disjoint path covers of BH_n.

construct_cover builds a paired k-DPC (k = 1, 2, 3) of BH_n for n >= 3 by
splitting the graph into four BH_{n-1} subcubes along a dimension l >= 1 and
working on the 4-cube ring:

  * every pair is routed upward through the cyclic interval of subcubes from
    its source's cube to its sink's cube, hopping on crossing edges through
    freshly chosen chain vertices (a white exit, then one of its two crossing
    blacks as the next entry);
  * each subcube then owes a small cover (Hamiltonian path, 2-DPC or 3-DPC of
    BH_{n-1}) joining its entry/exit vertices, solved recursively, or by the
    exact engine at BH_2;
  * if some subcube is touched by no interval, one solved path is cut at an
    edge and a detour threaded downward around the whole ring, handing every
    empty subcube a covering Hamiltonian path;
  * the one remaining shape (an untouched subcube next to two fully loaded
    ones, only possible with three pairs) gets a dedicated construction that
    anchors a five-path certificate in the source cube.

At BH_2 a three-pair subproblem can be genuinely unsolvable; whenever one of
its sinks is a free chain vertex the repair loop re-chooses that white, which
the structure theory guarantees will succeed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import islice, product
from typing import Iterator, Optional, Sequence

from .errors import (
    ChoiceExhausted,
    ConstructionFailed,
    DetourInfeasible,
    DimensionTooSmall,
    InvalidTerminals,
    SearchExhausted,
    StitchingError,
    UnreachableCase,
)
from .pathengine import five_path_pair, solve_kdpc
from .topology import (
    NodeId,
    Partition,
    choose_split_dimension,
    is_black,
    is_white,
    partition_along,
)
from .verify_oracle import verify_kdpc

Pair = tuple[NodeId, NodeId]
Path = tuple[NodeId, ...]

_MAX_REPAIRS = 64
_MAX_THREADS = 256
_MAX_FREE_COMBOS = 256


@dataclass(frozen=True)
class TerminalSpec:
    """Three (black source, white sink) pairs in BH_n."""

    n: int
    pairs: tuple[Pair, Pair, Pair]

    def __post_init__(self):
        if len(self.pairs) != 3:
            raise InvalidTerminals("exactly three pairs required")
        seen = set()
        for s, t in self.pairs:
            for x in (s, t):
                if len(x) != self.n or any(not 0 <= d <= 3 for d in x):
                    raise InvalidTerminals(f"bad vertex {x} for n={self.n}")
                seen.add(x)
            if not is_black(s):
                raise InvalidTerminals(f"source {s} must be black")
            if not is_white(t):
                raise InvalidTerminals(f"sink {t} must be white")
        if len(seen) != 6:
            raise InvalidTerminals("terminals must be six distinct vertices")

    @property
    def sources(self) -> tuple[NodeId, ...]:
        return tuple(s for s, _ in self.pairs)

    @property
    def sinks(self) -> tuple[NodeId, ...]:
        return tuple(t for _, t in self.pairs)


@dataclass(frozen=True)
class CaseProfile:
    """Interval bookkeeping for the case dispatch.

    For pair j with source cube g_j and sink cube h_j, M[j][i] = 1 exactly on
    the cyclic interval g_j..h_j; beta[i] sums the column, f[k] counts cubes
    with beta = k.
    """

    dim: int
    g: tuple[int, ...]
    h: tuple[int, ...]
    M: tuple[tuple[int, int, int, int], ...]
    beta: tuple[int, int, int, int]
    f: tuple[int, int, int, int]

    @property
    def intervals(self) -> tuple[tuple[int, ...], ...]:
        return tuple(_interval(g, h) for g, h in zip(self.g, self.h))

    @property
    def subcase(self) -> str:
        f0, f3 = self.f[0], self.f[3]
        if f0 == 0:
            return "1.2" if f3 >= 1 else "1.1"
        if f3 >= 2:
            if f0 == 2 and f3 == 2:
                return "2.1"
            if f3 == 3:
                return "2.2"
            return "2.3"
        return "1.3"


@dataclass(frozen=True)
class CrossingChain:
    """Alternating helper vertices routing pair j across its cube interval:
    a white exit in each cube but the last, each followed by one of its two
    crossing neighbors in the next cube."""

    pair_index: int
    links: tuple[tuple[NodeId, NodeId], ...]

    @property
    def nodes(self) -> tuple[NodeId, ...]:
        return tuple(x for link in self.links for x in link)


@dataclass(frozen=True)
class PathCover:
    spec: TerminalSpec
    paths: tuple[Path, Path, Path]


def _interval(g: int, h: int) -> tuple[int, ...]:
    out = [g]
    while out[-1] != h:
        out.append((out[-1] + 1) % 4)
    return tuple(out)


def _profile(pairs: Sequence[Pair], pt: Partition) -> CaseProfile:
    g = tuple(pt.cube_of(s) for s, _ in pairs)
    h = tuple(pt.cube_of(t) for _, t in pairs)
    M = []
    for gj, hj in zip(g, h):
        row = [0, 0, 0, 0]
        for i in _interval(gj, hj):
            row[i] = 1
        M.append(tuple(row))
    beta = tuple(sum(row[i] for row in M) for i in range(4))
    f = tuple(sum(1 for b in beta if b == k) for k in range(4))
    return CaseProfile(dim=pt.dim, g=g, h=h, M=tuple(M), beta=beta, f=f)


def compute_profile(spec: TerminalSpec, dim: Optional[int] = None) -> CaseProfile:
    if dim is None:
        dim = choose_split_dimension(*spec.sinks)
    return _profile(spec.pairs, partition_along(dim, spec.n))


class _CubeUnsat(Exception):
    def __init__(self, cube: int):
        self.cube = cube


def _whites(pt: Partition, cube: int) -> Iterator[NodeId]:
    for u in pt.vertices(cube):
        if is_white(u):
            yield u


def _blacks(pt: Partition, cube: int) -> Iterator[NodeId]:
    for u in pt.vertices(cube):
        if is_black(u):
            yield u


def _select_chains(
    pairs: Sequence[Pair], pt: Partition, profile: CaseProfile
) -> list[list[tuple[NodeId, NodeId]]]:
    """Greedy disjoint chain choice; every white has two crossing candidates,
    so collisions just move to the next vertex in the global order."""
    used = {x for p in pairs for x in p}
    chains = []
    for j in range(len(pairs)):
        links = []
        for c in profile.intervals[j][:-1]:
            pick = None
            for w in _whites(pt, c):
                if w in used:
                    continue
                for b in pt.crossing_neighbors(w):
                    if b not in used:
                        pick = (w, b)
                        break
                if pick:
                    break
            if pick is None:
                raise ChoiceExhausted(f"no free crossing link out of cube {c}")
            used.update(pick)
            links.append(pick)
        chains.append(links)
    return chains


def select_chains(
    spec: TerminalSpec, profile: CaseProfile, pt: Partition
) -> tuple[CrossingChain, CrossingChain, CrossingChain]:
    raw = _select_chains(spec.pairs, pt, profile)
    return tuple(
        CrossingChain(pair_index=j, links=tuple(links)) for j, links in enumerate(raw)
    )


def _cube_items(
    pairs: Sequence[Pair],
    profile: CaseProfile,
    chains: Sequence[Sequence[tuple[NodeId, NodeId]]],
) -> dict[int, list[tuple[object, NodeId, NodeId]]]:
    """Per cube, the (tag, entry black, exit white) jobs induced by the
    chains: pair j enters cube i at its source or the chain black, and leaves
    at its sink or the chain white."""
    items: dict[int, list[tuple[object, NodeId, NodeId]]] = {}
    for j, (s, t) in enumerate(pairs):
        iv = profile.intervals[j]
        links = chains[j]
        for idx, c in enumerate(iv):
            black = s if idx == 0 else links[idx - 1][1]
            white = t if idx == len(iv) - 1 else links[idx][0]
            items.setdefault(c, []).append((j, black, white))
    return items


def _solve_cube(
    pt: Partition, cube: int, items: Sequence[tuple[object, NodeId, NodeId]]
) -> dict[object, Path]:
    lpairs = [(pt.to_local(b), pt.to_local(w)) for _, b, w in items]
    k = pt.n - 1
    if k == 2:
        sol = solve_kdpc(2, lpairs)
        if sol is None:
            raise _CubeUnsat(cube)
    else:
        sol = construct_cover(k, lpairs)
    return {
        item[0]: tuple(pt.to_global(x, cube) for x in path)
        for item, path in zip(items, sol)
    }


def _cube_solvable(
    pt: Partition, items: Sequence[tuple[object, NodeId, NodeId]]
) -> bool:
    if pt.n - 1 != 2:
        return True
    lpairs = [(pt.to_local(b), pt.to_local(w)) for _, b, w in items]
    return solve_kdpc(2, lpairs) is not None


def _repair_chains(
    pairs: Sequence[Pair],
    pt: Partition,
    profile: CaseProfile,
    chains: list[list[tuple[NodeId, NodeId]]],
    bad_cube: int,
    tried: set,
    frozen_cubes: frozenset = frozenset(),
    extra_used: frozenset = frozenset(),
    extra_items: Optional[dict] = None,
) -> list[list[tuple[NodeId, NodeId]]]:
    """Re-choose one chain link touching bad_cube so that its BH_2 subproblem
    becomes solvable.  White freedom in the failing cube is what the theory
    guarantees to be enough; links whose partner lands in a frozen cube are
    left alone."""
    used = {x for p in pairs for x in p} | set(extra_used)
    for links in chains:
        for link in links:
            used.update(link)

    candidates = []  # (j, link index, white cube, black cube)
    for j in range(len(pairs)):
        iv = profile.intervals[j]
        for li in range(len(chains[j])):
            wc, bc = iv[li], iv[li + 1]
            if bad_cube in (wc, bc) and wc not in frozen_cubes and bc not in frozen_cubes:
                candidates.append((j, li, wc, bc))

    for j, li, wc, bc in candidates:
        old = chains[j][li]
        for w2 in _whites(pt, wc):
            if w2 != old[0] and w2 in used:
                continue
            for b2 in pt.crossing_neighbors(w2):
                if (w2, b2) == old or (b2 != old[1] and b2 in used):
                    continue
                key = (j, li, w2, b2)
                if key in tried:
                    continue
                trial = [list(links) for links in chains]
                trial[j][li] = (w2, b2)
                items = _cube_items(pairs, profile, trial)
                probe = items.get(bad_cube, [])
                if extra_items:
                    probe = probe + extra_items.get(bad_cube, [])
                if _cube_solvable(pt, probe):
                    tried.add(key)
                    return trial
    raise ChoiceExhausted(f"chain repair options exhausted for cube {bad_cube}")


def _stitch(
    pairs: Sequence[Pair],
    profile: CaseProfile,
    sols: dict[int, dict[object, Path]],
) -> list[Path]:
    paths = []
    for j, (s, t) in enumerate(pairs):
        seq: list[NodeId] = []
        for c in profile.intervals[j]:
            seq.extend(sols[c][j])
        if seq[0] != s or seq[-1] != t:
            raise StitchingError(f"pair {j} stitched to wrong endpoints")
        paths.append(tuple(seq))
    return paths


def _case1(
    pairs: Sequence[Pair],
    pt: Partition,
    profile: CaseProfile,
    chains: Optional[list[list[tuple[NodeId, NodeId]]]] = None,
) -> list[Path]:
    """Every cube is on some interval: solve each cube's job list directly
    and concatenate along the chains."""
    if chains is None:
        chains = _select_chains(pairs, pt, profile)
    tried: set = set()
    for _ in range(_MAX_REPAIRS):
        items = _cube_items(pairs, profile, chains)
        sols = {}
        bad = None
        for c in sorted(items):
            try:
                sols[c] = _solve_cube(pt, c, items[c])
            except _CubeUnsat as ex:
                bad = ex.cube
                break
        if bad is None:
            return _stitch(pairs, profile, sols)
        chains = _repair_chains(pairs, pt, profile, chains, bad, tried)
    raise ChoiceExhausted("cube repairs did not converge")


def _threads(
    pt: Partition,
    ring: Sequence[int],
    v0: NodeId,
    u0: NodeId,
    used: set,
) -> Iterator[list[tuple[int, NodeId, NodeId]]]:
    """Enumerate detour routes: entering each ring cube on a crossing edge
    from the previous exit, leaving at a free black; the last exit must cross
    back onto the split edge's white endpoint u0."""

    def rec(i, prev_black, acc, local_used):
        if i == len(ring):
            yield acc
            return
        c = ring[i]
        for e in pt.crossing_neighbors(prev_black):
            if e in used or e in local_used:
                continue
            if i == len(ring) - 1:
                exits = [
                    b
                    for b in pt.crossing_neighbors(u0)
                    if b not in used and b not in local_used
                ]
            else:
                exits = [
                    b for b in _blacks(pt, c) if b not in used and b not in local_used
                ]
            for x in exits:
                yield from rec(i + 1, x, acc + [(c, e, x)], local_used | {e, x})

    yield from rec(0, v0, [], set())


def _case1_detour(
    pairs: Sequence[Pair], pt: Partition, profile: CaseProfile
) -> list[Path]:
    """Some cube is on no interval.  Solve the loaded cubes as in the plain
    case, cut a (black, white) edge of a path inside the fullest cube, and
    splice in a detour running once around the ring; untouched cubes
    contribute a full Hamiltonian path, loaded ones an extra pair."""
    beta = profile.beta
    i_star = max(range(4), key=lambda i: (beta[i], -i))
    ring = [(i_star - 1) % 4, (i_star - 2) % 4, (i_star - 3) % 4]

    chains = _select_chains(pairs, pt, profile)
    tried: set = set()
    for _ in range(_MAX_REPAIRS):
        items = _cube_items(pairs, profile, chains)
        try:
            sol_star = _solve_cube(pt, i_star, items[i_star])
        except _CubeUnsat:
            chains = _repair_chains(pairs, pt, profile, chains, i_star, tried)
            continue

        used = {x for p in pairs for x in p}
        for links in chains:
            for link in links:
                used.update(link)

        for owner in sorted(sol_star):
            path = sol_star[owner]
            for idx in range(0, len(path) - 1, 2):
                v0, u0 = path[idx], path[idx + 1]
                for thread in islice(
                    _threads(pt, ring, v0, u0, used), _MAX_THREADS
                ):
                    cover = _detour_attempt(
                        pairs, pt, profile, chains, items, sol_star, i_star,
                        owner, v0, u0, thread, tried,
                    )
                    if cover is not None:
                        return cover
        # every split edge and route failed with these chains; re-choosing
        # a link in the split cube reshuffles everything downstream
        chains = _repair_chains(pairs, pt, profile, chains, i_star, tried)
    raise DetourInfeasible("no split edge admitted a ring detour")


def _detour_attempt(
    pairs, pt, profile, chains, items, sol_star, i_star, owner, v0, u0, thread, tried
) -> Optional[list[Path]]:
    detour_items: dict[int, list] = {}
    for c, entry, exit_ in thread:
        detour_items.setdefault(c, []).append(("detour", exit_, entry))

    sols = {i_star: sol_star}
    local_tried: set = set()
    work_chains = chains
    for _ in range(8):
        items2 = _cube_items(pairs, profile, work_chains)
        for c, extra in detour_items.items():
            items2.setdefault(c, [])
            items2[c] = items2[c] + extra
        bad = None
        for c in sorted(items2):
            if c == i_star:
                continue
            try:
                sols[c] = _solve_cube(pt, c, items2[c])
            except _CubeUnsat as ex:
                bad = ex.cube
                break
        if bad is None:
            return _splice_detour(pairs, profile, sols, owner, v0, u0, thread)
        try:
            work_chains = _repair_chains(
                pairs, pt, profile, work_chains, bad, local_tried,
                frozen_cubes=frozenset([i_star]),
                extra_used=frozenset(x for _, e, x_ in thread for x in (e, x_)),
                extra_items=detour_items,
            )
        except ChoiceExhausted:
            return None
    return None


def _splice_detour(pairs, profile, sols, owner, v0, u0, thread) -> list[Path]:
    dseq: list[NodeId] = []
    for c, entry, exit_ in thread:
        seg = sols[c]["detour"]
        if seg[0] != exit_ or seg[-1] != entry:
            raise StitchingError("detour segment endpoints mismatch")
        dseq.extend(reversed(seg))
    base = _stitch(pairs, profile, sols)
    out = []
    for j, p in enumerate(base):
        if j != owner:
            out.append(p)
            continue
        pos = None
        for i in range(len(p) - 1):
            if p[i] == v0 and p[i + 1] == u0:
                pos = i
                break
        if pos is None:
            raise StitchingError("split edge vanished from the owner path")
        out.append(p[: pos + 1] + tuple(dseq) + p[pos + 1 :])
    return out


def _translate(u: NodeId, dim: int, c: int) -> NodeId:
    v = list(u)
    v[dim] = (v[dim] + c) % 4
    return tuple(v)


def _free_white_plans(
    pt: Partition,
    need: list,  # tags needing a (free white in cube 2, crossing black in cube 3)
    sinks2: set,
    reserved3: set,
) -> Iterator[dict]:
    """Assignments tag -> (w2, v3): distinct free whites of cube 2 paired with
    distinct crossing blacks in cube 3."""

    def rec(i, acc, used2, used3):
        if i == len(need):
            yield dict(acc)
            return
        tag = need[i]
        for w in _whites(pt, 2):
            if w in sinks2 or w in used2:
                continue
            for v3 in pt.crossing_neighbors(w):
                if v3 in reserved3 or v3 in used3:
                    continue
                yield from rec(
                    i + 1, acc + [(tag, (w, v3))], used2 | {w}, used3 | {v3}
                )

    yield from rec(0, [], set(), set())


def _case23(pairs: Sequence[Pair], pt: Partition, profile: CaseProfile) -> list[Path]:
    """The untouched-cube-with-two-full-cubes shape.  After rotating the ring
    so the untouched cube is 0, all sources sit in cube 1 and the sinks split
    between cubes 2 and 3.  One source anchors a five-path certificate whose
    Hamiltonian cycle covers cube 1; the cycle is carved into three arcs at
    the sources.  The arc ending at the certificate's corner path dips into
    cube 2 through the common crossing neighbor of the white corners, sweeps
    cube 0 with a Hamiltonian path and part of cube 3, then rejoins cube 2;
    the other two arcs exit upward on crossing edges.  Every helper vertex
    has at least two candidates, and failed BH_2 subproblems are retried with
    the next free-white assignment."""
    n = pt.n
    k = n - 1
    e_idx = profile.beta.index(0)
    shift = (-e_idx) % 4
    tp = [( _translate(s, pt.dim, shift), _translate(t, pt.dim, shift)) for s, t in pairs]
    S = [s for s, _ in tp]
    sink_of = {s: t for s, t in tp}

    if any(pt.cube_of(s) != 1 for s in S):
        raise UnreachableCase("sources not confined to one cube in the 2.3 shape")
    sink_cubes = {pt.cube_of(t) for _, t in tp}
    if sink_cubes != {2, 3}:
        raise UnreachableCase("sinks not split across the two far cubes")

    sinks2 = {t for _, t in tp if pt.cube_of(t) == 2}
    sinks3 = {t for _, t in tp if pt.cube_of(t) == 3}

    for anchor in sorted(S):
        for cert in five_path_pair(pt.to_local(anchor), k):
            cyc = [pt.to_global(x, 1) for x in cert.cycle]
            a, b, c, d = cyc[1:5]
            if b in S:
                continue
            others = sorted(cyc.index(s) for s in S if s != anchor)
            i1, i2 = others
            if i1 < 4:
                raise UnreachableCase("source inside the certificate corner path")
            sig1, sig2 = cyc[i1], cyc[i2]
            seg1 = list(reversed(cyc[4 : i1 + 1]))  # sig1 .. d
            u1 = cyc[i1 + 1]
            seg2 = list(reversed(cyc[i1 + 1 : i2 + 1]))  # sig2 .. u1
            v1 = cyc[i2 + 1]
            seg3 = [anchor] + list(reversed(cyc[i2 + 1 :]))  # anchor .. v1

            for a2, u2, v2 in product(
                pt.crossing_neighbors(a),
                pt.crossing_neighbors(u1),
                pt.crossing_neighbors(v1),
            ):
                if len({a2, u2, v2}) != 3:
                    continue
                entry2 = {"weave": a2, "mid": u2, "anchor": v2}
                tag_sink = {
                    "weave": sink_of[sig1],
                    "mid": sink_of[sig2],
                    "anchor": sink_of[anchor],
                }
                need_pass = [tag for tag in ("weave", "mid", "anchor")
                             if pt.cube_of(tag_sink[tag]) == 3]
                plans = _free_white_plans(
                    pt, need_pass, sinks2, reserved3=set()
                )
                for plan in islice(plans, _MAX_FREE_COMBOS):
                    cover = _case23_attempt(
                        pt, k, tp, pairs, shift, cyc,
                        a, b, c, d, sig1, sig2, anchor,
                        seg1, seg2, seg3, entry2, tag_sink, plan,
                        sinks2, sinks3,
                    )
                    if cover is not None:
                        return cover
    raise ChoiceExhausted("no certificate/helper combination produced a cover")


def _case23_attempt(
    pt, k, tp, pairs, shift, cyc, a, b, c, d, sig1, sig2, anchor,
    seg1, seg2, seg3, entry2, tag_sink, plan, sinks2, sinks3,
) -> Optional[list[Path]]:
    # cube 2: always exactly three jobs
    items2 = []
    for tag in ("weave", "mid", "anchor"):
        white = plan[tag][0] if tag in plan else tag_sink[tag]
        items2.append((tag, entry2[tag], white))
    try:
        sol2 = _solve_cube(pt, 2, items2)
    except _CubeUnsat:
        return None

    weave2 = sol2["weave"]
    b2 = weave2[1]

    reserved3 = {v3 for _, v3 in plan.values()}
    for b3 in pt.crossing_neighbors(b2):
        if b3 in reserved3:
            continue
        for a3 in _whites(pt, 3):
            if a3 in sinks3:
                continue
            items3 = [("ret", b3, a3)]
            for tag, (_, v3) in plan.items():
                items3.append((tag, v3, tag_sink[tag]))
            try:
                sol3 = _solve_cube(pt, 3, items3)
            except _CubeUnsat:
                continue

            ret3 = sol3["ret"]
            for a0 in pt.crossing_neighbors(b):
                for b0 in pt.crossing_neighbors(a3):
                    w1 = solve_kdpc(
                        2, [(pt.to_local(b0), pt.to_local(a0))]
                    ) if k == 2 else construct_cover(
                        k, [(pt.to_local(b0), pt.to_local(a0))]
                    )
                    if w1 is None:
                        continue
                    ham0 = [pt.to_global(x, 0) for x in reversed(w1[0])]

                    a2 = entry2["weave"]
                    weave = (
                        seg1 + [a, a2, c, b]
                        + ham0
                        + list(reversed(ret3))
                        + list(weave2[1:])
                    )
                    mid = seg2 + list(sol2["mid"])
                    anc = seg3 + list(sol2["anchor"])
                    for tag, path in (("weave", weave), ("mid", mid), ("anchor", anc)):
                        if tag in plan:
                            path.extend(sol3[tag])

                    by_source = {sig1: weave, sig2: mid, anchor: anc}
                    out = []
                    for s, t in tp:
                        p = [
                            _translate(x, pt.dim, (-shift) % 4)
                            for x in by_source[s]
                        ]
                        out.append(tuple(p))
                    if verify_kdpc(out, pt.n, pairs).ok:
                        return out
    return None


def construct_cover(n: int, pairs: Sequence[Pair]) -> list[Path]:
    """Paired k-DPC of BH_n for 1 <= k <= 3 pairs, n >= 2.  For n >= 3 a
    cover always exists and is built recursively; n = 2 goes straight to the
    exact engine (callers own the three-pair unsolvable case there)."""
    pairs = list(pairs)
    if not 1 <= len(pairs) <= 3:
        raise InvalidTerminals("1 to 3 pairs supported")
    if n == 2:
        sol = solve_kdpc(2, pairs)
        if sol is None:
            raise SearchExhausted(f"no cover of BH_2 for {pairs}")
        return sol
    if n < 2:
        raise DimensionTooSmall(f"n={n}")

    if len(pairs) == 3:
        dim = choose_split_dimension(*(t for _, t in pairs))
    else:
        dim = 1
    pt = partition_along(dim, n)
    profile = _profile(pairs, pt)

    if len(pairs) == 3 and profile.f[0] >= 1 and profile.f[3] >= 2:
        if profile.subcase in ("2.1", "2.2"):
            raise UnreachableCase(
                f"profile {profile.beta} reached the impossible shape {profile.subcase}"
            )
        return _case23(pairs, pt, profile)
    if profile.f[0] == 0:
        return _case1(pairs, pt, profile)
    return _case1_detour(pairs, pt, profile)


def build_3dpc(spec: TerminalSpec) -> PathCover:
    """Verified paired 3-DPC of BH_n, n >= 3."""
    if spec.n < 3:
        raise DimensionTooSmall(
            f"paired 3-DPC construction needs n >= 3, got n={spec.n}"
        )
    paths = construct_cover(spec.n, spec.pairs)
    report = verify_kdpc(paths, spec.n, spec.pairs)
    if not report.ok:
        raise ConstructionFailed(f"cover failed verification: {report.failures()}")
    return PathCover(spec=spec, paths=tuple(paths))
