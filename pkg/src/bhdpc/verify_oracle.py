"""Independent cover verification and exhaustive small-scale oracles.

verify_kdpc recomputes adjacency from the definition (inner index steps by
+-1, at most one other digit steps by (-1)**a0) instead of reusing the
topology helpers, so a bug in neighbor generation or stitching cannot
vouch for itself.  The oracles run the exact solver with an effectively
unbounded budget on BH_1/BH_2, where exhaustive search is instantaneous,
and their No answers are proofs at that scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .errors import InvalidTerminals
from .pathengine import solve_kdpc
from .topology import NodeId

Pair = tuple[NodeId, NodeId]

_ORACLE_BUDGET = 10**12


def _independent_adjacent(u: NodeId, v: NodeId) -> bool:
    """Definition-level adjacency check, written from scratch on purpose."""
    if len(u) != len(v) or u == v:
        return False
    if (v[0] - u[0]) % 4 not in (1, 3):
        return False
    diff = [i for i in range(1, len(u)) if u[i] != v[i]]
    if not diff:
        return True
    if len(diff) > 1:
        return False
    i = diff[0]
    step = 1 if u[0] % 2 == 0 else -1
    return (v[i] - u[i]) % 4 == step % 4


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Report:
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "detail": c.detail}
                for c in self.checks
            ],
        }


def verify_kdpc(paths: Sequence[Sequence[NodeId]], n: int, pairs: Sequence[Pair]) -> Report:
    """Check a claimed paired k-DPC of BH_n: per-path adjacency, endpoint and
    color pairing, pairwise disjointness, and full vertex coverage."""
    checks = []

    bad_edges = []
    for j, p in enumerate(paths):
        for x, y in zip(p, p[1:]):
            if not _independent_adjacent(x, y):
                bad_edges.append((j, x, y))
    checks.append(
        CheckResult(
            "adjacency",
            not bad_edges,
            "" if not bad_edges else f"non-edges: {bad_edges[:4]}",
        )
    )

    pairing_bad = []
    for j, (p, (s, t)) in enumerate(zip(paths, pairs)):
        if not p or p[0] != s or p[-1] != t:
            pairing_bad.append((j, "endpoints"))
        if s[0] % 2 != 1:
            pairing_bad.append((j, "source color"))
        if t[0] % 2 != 0:
            pairing_bad.append((j, "sink color"))
    if len(paths) != len(pairs):
        pairing_bad.append(("count", len(paths)))
    checks.append(
        CheckResult("pairing", not pairing_bad, str(pairing_bad[:4]) if pairing_bad else "")
    )

    seen: dict[NodeId, int] = {}
    dupes = []
    for j, p in enumerate(paths):
        for x in p:
            if x in seen:
                dupes.append((x, seen[x], j))
            else:
                seen[x] = j
    checks.append(
        CheckResult(
            "disjointness",
            not dupes,
            "" if not dupes else f"repeated vertices: {dupes[:4]}",
        )
    )

    universe = {tuple(reversed(rest)) for rest in product(range(4), repeat=n)}
    missing = universe - set(seen)
    extra = set(seen) - universe
    detail = ""
    if missing:
        detail += f"missing: {sorted(missing)[:4]} "
    if extra:
        detail += f"foreign: {sorted(extra)[:4]}"
    checks.append(CheckResult("coverage", not missing and not extra, detail.strip()))

    return Report(tuple(checks))


def oracle_exists_3dpc(
    n: int, S: Sequence[NodeId], T: Sequence[NodeId]
) -> Optional[list[tuple[NodeId, ...]]]:
    """Exhaustively decide whether BH_n (n <= 2) has a paired 3-DPC for the
    pairing s_j -> t_j.  Returns a witness cover or None; None is a proof of
    nonexistence at this scale."""
    if n not in (1, 2):
        raise InvalidTerminals(f"oracle scope is n <= 2, got n={n}")
    if len(S) != 3 or len(T) != 3:
        raise InvalidTerminals("oracle takes exactly three sources and three sinks")
    return solve_kdpc(n, list(zip(S, T)), budget=_ORACLE_BUDGET)


_find_t3_cache: dict[frozenset, bool] = {}


def _cached_solvable(pairs: frozenset) -> bool:
    hit = _find_t3_cache.get(pairs)
    if hit is None:
        hit = solve_kdpc(2, sorted(pairs), budget=_ORACLE_BUDGET) is not None
        _find_t3_cache[pairs] = hit
    return hit


def oracle_find_t3(
    S: Sequence[NodeId], t1: NodeId, t2: NodeId
) -> list[NodeId]:
    """All whites t3 of BH_2 completing (s1,t1),(s2,t2),(s3,t3) to a paired
    3-DPC.  The structure theory says this list is never empty.  Results are
    memoized on the unordered pair set, which collapses the ordered
    configuration space about sixfold."""
    s1, s2, s3 = S
    taken = {s1, s2, s3, t1, t2}
    if len(taken) != 5:
        raise InvalidTerminals("terminals must be distinct")
    out = []
    for a0 in (0, 2):
        for a1 in range(4):
            t3 = (a0, a1)
            if t3 in taken:
                continue
            if _cached_solvable(frozenset([(s1, t1), (s2, t2), (s3, t3)])):
                out.append(t3)
    return out
