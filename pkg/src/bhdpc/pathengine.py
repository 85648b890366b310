"""Deterministic exact search for disjoint path covers of small BH_k.

solve_kdpc decides whether BH_k has k' vertex-disjoint paths joining given
(black source, white sink) pairs that together cover every vertex, and returns
one such cover or None.  The search is a depth-first extension of the paths in
order, with two pruning rules that are necessary conditions for any completion
(so pruned search is still exact):

  * color balance: in a bipartite graph, a path system covering the remaining
    vertices forces #unvisited_white - #unvisited_black to equal 1 when the
    active endpoint is black and 0 when it is white;
  * residual connectivity: every connected component of the unvisited
    subgraph must be reachable, i.e. be the component of the active sink or
    contain the source of a not-yet-started pair, the active sink's component
    must touch the active endpoint, and each unstarted pair must have source
    and sink in one component.

Vertices are encoded as base-4 integers internally; the public API speaks
NodeId tuples.
"""

from __future__ import annotations

import os
from functools import lru_cache
from typing import Optional, Sequence

from dataclasses import dataclass

from .errors import BudgetExceeded, InvalidTerminals, NotFound, SearchExhausted
from .topology import (
    NodeId,
    Partition,
    is_black,
    is_white,
    neighbors,
    partition_along,
    symmetric_node,
)

DEFAULT_BUDGET = 10_000_000

Pair = tuple[NodeId, NodeId]


def encode(u: NodeId) -> int:
    code = 0
    for d in reversed(u):
        code = code * 4 + d
    return code


def decode(code: int, k: int) -> NodeId:
    digits = []
    for _ in range(k):
        digits.append(code % 4)
        code //= 4
    return tuple(digits)


@lru_cache(maxsize=None)
def _graph(k: int) -> tuple[tuple[tuple[int, ...], ...], tuple[int, ...]]:
    """Adjacency lists and colors over encoded vertices of BH_k.

    Neighbor lists are deduplicated (relevant only for k == 1) and sorted, so
    the search order is a pure function of the instance.
    """
    size = 4**k
    adj = []
    colors = []
    for code in range(size):
        u = decode(code, k)
        adj.append(tuple(sorted({encode(v) for v in neighbors(u)})))
        colors.append(u[0] % 2)
    return tuple(adj), tuple(colors)


def _check_pairs(k: int, pairs: Sequence[Pair]) -> None:
    seen = set()
    for s, t in pairs:
        if len(s) != k or len(t) != k:
            raise InvalidTerminals(f"terminal length mismatch for k={k}: {s}, {t}")
        if not is_black(s):
            raise InvalidTerminals(f"source {s} must be black")
        if not is_white(t):
            raise InvalidTerminals(f"sink {t} must be white")
        seen.add(s)
        seen.add(t)
    if len(seen) != 2 * len(pairs):
        raise InvalidTerminals(f"terminals must be distinct: {pairs}")


def solve_kdpc(
    k: int,
    pairs: Sequence[Pair],
    budget: Optional[int] = None,
    prune: bool = True,
) -> Optional[list[tuple[NodeId, ...]]]:
    """Find a disjoint path cover of BH_k for the given pairs, or prove none.

    Returns the list of paths (path j from pairs[j][0] to pairs[j][1]) or
    None when no cover exists.  Raises BudgetExceeded if the node-expansion
    budget runs out first; the default budget is 10**7 expansions and can be
    overridden by the BHDPC_BUDGET environment variable.  prune=False disables
    the pruning rules and is only useful as a slow reference in tests.
    """
    _check_pairs(k, pairs)
    if budget is None:
        budget = int(os.environ.get("BHDPC_BUDGET", DEFAULT_BUDGET))
    adj, colors = _graph(k)
    size = 4**k
    np = len(pairs)
    src = [encode(s) for s, _ in pairs]
    dst = [encode(t) for _, t in pairs]
    if np == 0:
        return [] if size == 0 else None

    visited = bytearray(size)
    visited[src[0]] = 1
    # unvisited color counts; whites = even coordinate-0
    unw = sum(1 for c in range(size) if colors[c] == 0)
    unb = size - unw - 1  # src[0] is black and already visited
    paths: list[list[int]] = [[src[0]]]
    expansions = 0

    # terminals a path may not wander through: every sink except its own, and
    # sources of pairs that have not started yet
    blocked = bytearray(size)
    for c in dst:
        blocked[c] = 1
    for c in src[1:]:
        blocked[c] = 1

    # pending[x] = last stage j at which x is still a path endpoint awaiting
    # connection (its sink while its path runs, its source before it starts)
    pending = [-1] * size
    for jj in range(np):
        pending[dst[jj]] = jj
        if jj > 0:
            pending[src[jj]] = jj - 1

    def residual_ok(j: int, e: int) -> bool:
        # component labels over unvisited vertices
        comp = [-1] * size
        ncomp = 0
        for start in range(size):
            if visited[start] or comp[start] >= 0:
                continue
            stack = [start]
            comp[start] = ncomp
            while stack:
                x = stack.pop()
                for y in adj[x]:
                    if not visited[y] and comp[y] < 0:
                        comp[y] = ncomp
                        stack.append(y)
            ncomp += 1
        target_comp = comp[dst[j]]
        # the active path must be able to step into its sink's component
        if not any(comp[y] == target_comp for y in adj[e] if not visited[y]):
            return False
        allowed = {target_comp}
        for jj in range(j + 1, np):
            if comp[src[jj]] != comp[dst[jj]]:
                return False
            allowed.add(comp[src[jj]])
        # every component must be covered by the active path or a future pair
        return ncomp == len(allowed)

    def extend(j: int, e: int) -> bool:
        nonlocal expansions, unw, unb
        if e == dst[j]:
            if j + 1 == np:
                return unw == 0 and unb == 0
            nxt = src[j + 1]
            visited[nxt] = 1
            blocked[nxt] = 0
            unb -= 1
            paths.append([nxt])
            if extend(j + 1, nxt):
                return True
            paths.pop()
            unb += 1
            blocked[nxt] = 1
            visited[nxt] = 0
            return False
        forced = -1
        if prune:
            want = 1 if colors[e] == 1 else 0
            if unw - unb != want:
                return False
            # degree bound: every unvisited vertex still needs enough usable
            # cover-neighbors (2 if it will be interior, 1 if it is a pending
            # terminal); the active endpoint e can serve as a neighbor for at
            # most one vertex, so two vertices relying on e is a dead end
            tight = 0
            for x in range(size):
                if visited[x]:
                    continue
                udeg = 0
                for y in adj[x]:
                    if not visited[y]:
                        udeg += 1
                needs = 1 if j <= pending[x] else 2
                if udeg >= needs:
                    continue
                usable_e = (not blocked[x] or x == dst[j]) and e in adj[x]
                if udeg + (1 if usable_e else 0) < needs:
                    return False
                tight += 1
                if tight > 1:
                    return False
                forced = x
            if not residual_ok(j, e):
                return False
        # prefer tight vertices (fewest unvisited continuations); stable, so
        # the search stays deterministic
        if forced >= 0:
            cands = [forced]
        else:
            cands = [
                v
                for v in adj[e]
                if not visited[v] and (not blocked[v] or v == dst[j])
            ]
            if prune and len(cands) > 1:
                cands.sort(
                    key=lambda v: (sum(1 for w in adj[v] if not visited[w]), v)
                )
        for v in cands:
            expansions += 1
            if expansions > budget:
                raise BudgetExceeded(
                    f"solve_kdpc exceeded {budget} expansions on k={k}, pairs={pairs}"
                )
            visited[v] = 1
            if colors[v] == 0:
                unw -= 1
            else:
                unb -= 1
            paths[j].append(v)
            if extend(j, v):
                return True
            paths[j].pop()
            if colors[v] == 0:
                unw += 1
            else:
                unb += 1
            visited[v] = 0
        return False

    if extend(0, src[0]):
        return [tuple(decode(c, k) for c in p) for p in paths]
    return None


def ham_path(k: int, u: NodeId, v: NodeId, budget: Optional[int] = None) -> list[NodeId]:
    """Hamiltonian path of BH_k between a white and a black vertex, oriented
    from u to v.  Such a path always exists; SearchExhausted means a bug.
    Scopes of dimension >= 3 are built recursively via the ring construction
    rather than searched, since plain backtracking does not see that a
    Hamiltonian path must revisit one subcube of the 4-ring."""
    if is_black(u):
        return list(_ham_local(k, u, v))
    return list(reversed(_ham_local(k, v, u)))


def two_dpc(
    k: int, pairs: Sequence[Pair], budget: Optional[int] = None
) -> list[tuple[NodeId, ...]]:
    """Paired 2-disjoint path cover of BH_k (k >= 2); always exists."""
    if len(pairs) != 2:
        raise InvalidTerminals("two_dpc needs exactly two pairs")
    if k >= 3:
        from .dpc3 import construct_cover

        return [tuple(p) for p in construct_cover(k, pairs)]
    sol = solve_kdpc(k, pairs, budget=budget)
    if sol is None:
        raise SearchExhausted(f"no 2-DPC in BH_{k} for {pairs}")
    return sol


def _intra_neighbors(pt: Partition, u: NodeId) -> list[NodeId]:
    cube = pt.cube_of(u)
    return sorted(v for v in set(neighbors(u)) if pt.cube_of(v) == cube)


def find_8cycle(edge, pt: Partition) -> tuple[NodeId, ...]:
    """An 8-cycle through the given edge holding exactly one edge inside each
    of the partition's four subcubes (the other four edges are crossing).

    The cycle is returned as (w0, b1, w1, b2, w2, b3, w3, b0) where (w_i, b_i)
    is the subcube-i edge and each w_i crosses up to b_{i+1}.  Accepts either
    an intra-subcube edge (which becomes (w0, b0)) or a crossing edge (which
    becomes (w0, b1))."""
    u, v = (edge.u, edge.v) if hasattr(edge, "u") else edge
    if v not in neighbors(u):
        raise NotFound(f"{u}-{v} is not an edge")
    w = u if is_white(u) else v
    bk = v if is_white(u) else u

    if pt.cube_of(w) == pt.cube_of(bk):
        # intra edge: fixed (w0, b0); walk up around the ring
        w0, b0 = w, bk
        for b1 in pt.crossing_neighbors(w0):
            for w1 in _intra_neighbors(pt, b1):
                for b2 in pt.crossing_neighbors(w1):
                    for w2 in _intra_neighbors(pt, b2):
                        for b3 in pt.crossing_neighbors(w2):
                            for w3 in _intra_neighbors(pt, b3):
                                if b0 in pt.crossing_neighbors(w3):
                                    return (w0, b1, w1, b2, w2, b3, w3, b0)
    else:
        # crossing edge: fixed (w0, b1); the subcube-0 edge closes the ring
        w0, b1 = w, bk
        for w1 in _intra_neighbors(pt, b1):
            for b2 in pt.crossing_neighbors(w1):
                for w2 in _intra_neighbors(pt, b2):
                    for b3 in pt.crossing_neighbors(w2):
                        for w3 in _intra_neighbors(pt, b3):
                            for b0 in pt.crossing_neighbors(w3):
                                if b0 in _intra_neighbors(pt, w0):
                                    return (w0, b1, w1, b2, w2, b3, w3, b0)
    raise NotFound(f"no one-edge-per-subcube 8-cycle through {u}-{v}")


@dataclass(frozen=True)
class FivePathCertificate:
    """A 5-path <s,a,b,c,d> sitting as a prefix of a Hamiltonian cycle, whose
    last four vertices also form a 4-cycle with symmetric opposite corners."""

    s: NodeId
    path: tuple[NodeId, ...]
    cycle: tuple[NodeId, ...]

    @property
    def four_cycle(self) -> tuple[NodeId, ...]:
        return self.path[1:5]

    def validate(self, n: int) -> None:
        a, b, c, d = self.four_cycle
        assert is_black(self.s) and len(self.path) == 5
        assert self.path[0] == self.s
        assert self.cycle[:5] == self.path, "5-path must head the cycle"
        assert len(self.cycle) == 4**n
        assert len(set(self.cycle)) == len(self.cycle)
        ring = list(self.cycle) + [self.cycle[0]]
        for x, y in zip(ring, ring[1:]):
            assert y in neighbors(x), f"cycle edge {x}-{y} missing"
        assert a == symmetric_node(c) and b == symmetric_node(d)
        for x, y in ((a, b), (b, c), (c, d), (d, a)):
            assert y in neighbors(x), f"4-cycle edge {x}-{y} missing"


# the two certificates for s = (1,0) in BH_2; every other black vertex is a
# translate of this one (shift coordinate 1 freely, coordinate 0 by an even
# amount), so the base case is a table plus a relabeling
_BASE_S = (1, 0)
_BASE_CYCLES = (
    ((1, 0), (0, 0), (1, 1), (2, 0), (3, 1), (0, 1), (1, 2), (2, 1),
     (3, 2), (2, 2), (1, 3), (0, 2), (3, 3), (2, 3), (3, 0), (0, 3)),
    ((1, 0), (0, 3), (3, 3), (2, 3), (1, 3), (2, 2), (3, 2), (0, 2),
     (1, 2), (2, 1), (3, 1), (0, 1), (1, 1), (2, 0), (3, 0), (0, 0)),
)


def _normalize_cycle(
    cyc: list[NodeId], s: NodeId, head: tuple[NodeId, ...]
) -> tuple[NodeId, ...]:
    """Rotate (and reflect if needed) so the cycle starts with the 5-path."""
    for seq in (cyc, list(reversed(cyc))):
        i = seq.index(s)
        rot = tuple(seq[i:] + seq[:i])
        if rot[:5] == head:
            return rot
    raise SearchExhausted("5-path lost while reassembling the cycle")


def five_path_pair(s: NodeId, n: int) -> tuple[FivePathCertificate, FivePathCertificate]:
    """Two certificates for the black vertex s whose 4-cycles are disjoint.

    Base n = 2 is the fixed table above, relabeled by the translation taking
    (1,0) to s.  For n >= 3, recurse inside s's last-dimension subcube, open
    each certificate's cycle at an edge clear of the five protected vertices,
    and reroute through the other three subcubes: an 8-cycle supplies one
    (black, white) edge per subcube, and a Hamiltonian path of each subcube
    between those two vertices replaces the edge."""
    if not is_black(s):
        raise InvalidTerminals(f"five_path_pair needs a black vertex, got {s}")
    if n == 2:
        d0 = (s[0] - _BASE_S[0]) % 4
        d1 = (s[1] - _BASE_S[1]) % 4
        out = []
        for base in _BASE_CYCLES:
            cyc = tuple(((x0 + d0) % 4, (x1 + d1) % 4) for x0, x1 in base)
            out.append(FivePathCertificate(s=s, path=cyc[:5], cycle=cyc))
        return tuple(out)

    pt = partition_along(n - 1, n)
    i0 = s[n - 1]
    certs = []
    for cert in five_path_pair(s[:-1], n - 1):
        cyc = [x + (i0,) for x in cert.cycle]
        protected = set(cyc[:5])
        L = len(cyc)
        cut = None
        for i in range(L):
            x, y = cyc[i], cyc[(i + 1) % L]
            if x not in protected and y not in protected:
                cut = (i, x, y)
                break
        if cut is None:
            raise SearchExhausted("no free edge on the certificate cycle")
        i, x, y = cut
        u_t = x if is_white(x) else y
        v_t = y if is_white(x) else x
        ring8 = find_8cycle((u_t, v_t), pt)
        tour: list[NodeId] = [u_t]
        for j in range(3):
            bnode, wnode = ring8[1 + 2 * j], ring8[2 + 2 * j]
            seg = _ham_local(n - 1, bnode[:-1], wnode[:-1])
            tour.extend(z + (bnode[-1],) for z in seg)
        # path through cube i0 from v_t back around to u_t
        opened = cyc[(i + 1) % L :] + cyc[: (i + 1) % L]
        if opened[0] != v_t:
            opened = list(reversed(opened))
        if opened[0] != v_t or opened[-1] != u_t:
            raise SearchExhausted("opened cycle has wrong endpoints")
        big = tour + opened[:-1]
        head = tuple(z + (i0,) for z in cert.path)
        cyc_norm = _normalize_cycle(big, s, head)
        certs.append(FivePathCertificate(s=s, path=head, cycle=cyc_norm))
    c1, c2 = certs
    if set(c1.four_cycle) & set(c2.four_cycle):
        raise SearchExhausted("certificate 4-cycles overlap")
    return c1, c2


def _ham_local(k: int, u: NodeId, v: NodeId) -> list[NodeId]:
    """Hamiltonian path of BH_k from black u to white v (local coordinates)."""
    if k >= 3:
        from .dpc3 import construct_cover

        return list(construct_cover(k, [(u, v)])[0])
    sol = solve_kdpc(k, [(u, v)])
    if sol is None:
        raise SearchExhausted(f"no hamiltonian path {u} -> {v} in BH_{k}")
    return list(sol[0])
