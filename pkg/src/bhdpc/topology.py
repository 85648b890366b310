"""Balanced hypercube BH_n: vertices, adjacency, colors, and ring partitions.

A vertex of BH_n is a length-n tuple of digits mod 4.  The inner index is
coordinate 0; a vertex is white when coordinate 0 is even, black when odd.
Every vertex has 2n neighbors: two obtained by stepping coordinate 0 by +-1,
and for each i >= 1 two obtained by stepping coordinate 0 by +-1 while adding
(-1)**a0 to coordinate i.  The graph is bipartite and vertex-transitive, and
fixing any coordinate l >= 1 splits it into four copies of BH_{n-1} arranged
in a ring.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import BadDimension, InvalidNode, NoSplit, NotAdjacent, ParseError

NodeId = tuple[int, ...]

WHITE = "white"
BLACK = "black"


def check_node(u: NodeId, n: int) -> None:
    """Raise InvalidNode unless u is a valid BH_n vertex."""
    if not isinstance(u, tuple) or len(u) != n:
        raise InvalidNode(f"expected a length-{n} tuple, got {u!r}")
    if any(not isinstance(d, int) or not 0 <= d <= 3 for d in u):
        raise InvalidNode(f"digits must be integers in 0..3, got {u!r}")


def all_nodes(n: int) -> Iterator[NodeId]:
    """All 4**n vertices of BH_n, coordinate 0 varying fastest."""
    for rest in product(range(4), repeat=n):
        yield tuple(reversed(rest))


def color(u: NodeId) -> str:
    return WHITE if u[0] % 2 == 0 else BLACK


def is_white(u: NodeId) -> bool:
    return u[0] % 2 == 0


def is_black(u: NodeId) -> bool:
    return u[0] % 2 == 1


def neighbors(u: NodeId) -> list[NodeId]:
    """The 2n neighbors of u, in a fixed deterministic order.

    For n == 1 the two entries are distinct (BH_1 is the 4-cycle); for n >= 2
    all 2n entries are distinct.
    """
    n = len(u)
    step = 1 if u[0] % 2 == 0 else -1  # (-1)**a0
    out = [(u[0] + 1) % 4, (u[0] - 1) % 4]
    result = [(a0,) + u[1:] for a0 in out]
    for i in range(1, n):
        bumped = list(u)
        bumped[i] = (u[i] + step) % 4
        for a0 in out:
            bumped[0] = a0
            result.append(tuple(bumped))
    return result


def neighbor_set(u: NodeId) -> set[NodeId]:
    return set(neighbors(u))


def adjacent(u: NodeId, v: NodeId) -> bool:
    return v in neighbors(u)


def symmetric_node(u: NodeId) -> NodeId:
    """The partner sharing u's entire neighborhood (coordinate 0 shifted by 2)."""
    return ((u[0] + 2) % 4,) + u[1:]


def edge_dimension(u: NodeId, v: NodeId) -> int:
    """Dimension of edge (u, v): 0 if only coordinate 0 differs, else the
    unique other differing coordinate.  Raises NotAdjacent when (u, v) is
    not an edge."""
    if not adjacent(u, v):
        raise NotAdjacent(f"{u} and {v} are not adjacent")
    diffs = [i for i in range(1, len(u)) if u[i] != v[i]]
    return diffs[0] if diffs else 0


def parse_node(text: str) -> NodeId:
    """Parse the canonical form '(a0,a1,...)' into a vertex tuple."""
    raw = text.strip()
    if raw.startswith("(") and raw.endswith(")"):
        raw = raw[1:-1]
    parts = [p.strip() for p in raw.split(",")] if raw else []
    try:
        u = tuple(int(p) for p in parts)
    except ValueError:
        raise ParseError(f"cannot parse vertex from {text!r}") from None
    if not u or any(not 0 <= d <= 3 for d in u):
        raise ParseError(f"digits out of range in {text!r}")
    return u


def format_node(u: NodeId) -> str:
    return "(" + ",".join(str(d) for d in u) + ")"


def choose_split_dimension(t1: NodeId, t2: NodeId, t3: NodeId) -> int:
    """Smallest coordinate l >= 1 on which the three sinks do not all agree.

    Three distinct white vertices can share at most two distinct values of
    coordinate 0 (both even), so such an l always exists for valid input;
    NoSplitDimension is defensive.
    """
    for l in range(1, len(t1)):
        if not (t1[l] == t2[l] == t3[l]):
            return l
    raise NoSplit(f"sinks {t1}, {t2}, {t3} agree on every coordinate >= 1")


@dataclass(frozen=True)
class DimEdge:
    """An edge labelled with its dimension."""

    u: NodeId
    v: NodeId
    dim: int

    @classmethod
    def of(cls, u: NodeId, v: NodeId) -> "DimEdge":
        return cls(u, v, edge_dimension(u, v))


@dataclass(frozen=True)
class Partition:
    """The split of BH_n along coordinate dim >= 1 into four BH_{n-1} cubes.

    Cube i holds the vertices with u[dim] == i.  Dropping coordinate dim is an
    isomorphism from cube i onto BH_{n-1}.  Crossing edges (dimension == dim)
    run between consecutive cubes: a white vertex in cube i has both its
    crossing neighbors in cube i+1, a black vertex has both in cube i-1, and
    the two crossing neighbors of a vertex form a symmetric pair.
    """

    n: int
    dim: int

    def __post_init__(self):
        if not 1 <= self.dim < self.n:
            raise BadDimension(f"split dimension {self.dim} out of range for n={self.n}")

    def cube_of(self, u: NodeId) -> int:
        return u[self.dim]

    def to_local(self, u: NodeId) -> NodeId:
        """Drop the split coordinate, giving the image in BH_{n-1}."""
        return u[: self.dim] + u[self.dim + 1 :]

    def to_global(self, local: NodeId, cube: int) -> NodeId:
        return local[: self.dim] + (cube,) + local[self.dim :]

    def vertices(self, cube: int) -> Iterator[NodeId]:
        for local in all_nodes(self.n - 1):
            yield self.to_global(local, cube)

    def crossing_neighbors(self, u: NodeId) -> tuple[NodeId, NodeId]:
        """The two dimension-dim neighbors of u (a symmetric pair, both in the
        cube above u if u is white, below if u is black)."""
        step = 1 if u[0] % 2 == 0 else -1
        bumped = list(u)
        bumped[self.dim] = (u[self.dim] + step) % 4
        a = list(bumped)
        a[0] = (u[0] + 1) % 4
        b = list(bumped)
        b[0] = (u[0] - 1) % 4
        return tuple(a), tuple(b)


def partition_along(dim: int, n: int) -> Partition:
    return Partition(n=n, dim=dim)
