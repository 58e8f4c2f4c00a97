"""Linear 3-uniform hypergraphs: construction, validation, primitive queries, I/O.

Vertices are dense 0-based indices.  Edges are strictly increasing triples,
the edge list is lexicographically sorted and duplicate-free, and any two
edges share at most one vertex (linearity).  A pair index mapping each
unordered vertex pair to the unique edge containing it is built eagerly so
pair-occupancy queries are O(1).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

Triple = tuple[int, int, int]


class LinearityError(ValueError):
    """Raised when a raw triple list fails validation as a linear 3-graph."""


@dataclass(frozen=True)
class DegreeVector:
    """Non-increasing degree triple (x, y, z) of an edge's endpoints."""

    x: int
    y: int
    z: int

    def __post_init__(self):
        if not (self.x >= self.y >= self.z >= 0):
            raise ValueError(f"degree vector must be non-increasing: {self}")

    @property
    def s(self) -> int:
        return self.x + self.y + self.z

    def dominates(self, other: "DegreeVector") -> bool:
        """Componentwise partial order: self >= other in all coordinates."""
        return self.x >= other.x and self.y >= other.y and self.z >= other.z

    def as_tuple(self) -> Triple:
        return (self.x, self.y, self.z)


def dominates(d1: DegreeVector | Triple, d2: DegreeVector | Triple) -> bool:
    """True iff d1 >= d2 in all three coordinates."""
    a = d1.as_tuple() if isinstance(d1, DegreeVector) else tuple(d1)
    b = d2.as_tuple() if isinstance(d2, DegreeVector) else tuple(d2)
    return a[0] >= b[0] and a[1] >= b[1] and a[2] >= b[2]


@dataclass(frozen=True)
class LinearThreeGraph:
    """An immutable linear 3-graph on vertices 0..n-1.

    Do not call the constructor directly with unvalidated data; use
    validate_linear() for raw input.  pair_index maps each unordered pair
    (a, b) with a < b to the index of the unique edge containing it.
    """

    n: int
    edges: tuple[Triple, ...]
    pair_index: dict[tuple[int, int], int] = field(
        compare=False, hash=False, repr=False, default_factory=dict
    )

    def __post_init__(self):
        if not self.pair_index and self.edges:
            object.__setattr__(self, "pair_index", _build_pair_index(self.edges))

    # -- primitive queries -------------------------------------------------

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return sum(1 for e in self.edges if v in e)

    def degrees(self) -> list[int]:
        d = [0] * self.n
        for a, b, c in self.edges:
            d[a] += 1
            d[b] += 1
            d[c] += 1
        return d

    def degree_vector(self, e: int) -> DegreeVector:
        """Non-increasing triple of endpoint degrees of edge e."""
        a, b, c = self.edge(e)
        d = self.degrees()
        x, y, z = sorted((d[a], d[b], d[c]), reverse=True)
        return DegreeVector(x, y, z)

    def edge(self, e: int) -> Triple:
        if not (0 <= e < len(self.edges)):
            raise IndexError(f"edge id {e} out of range (m={len(self.edges)})")
        return self.edges[e]

    def edges_covering(self, xs: Iterable[int]) -> set[int]:
        """E_X: ids of all edges containing at least one vertex of X."""
        xset = set(xs)
        for v in xset:
            self._check_vertex(v)
        return {i for i, e in enumerate(self.edges) if xset & set(e)}

    def edges_at(self, v: int) -> list[int]:
        self._check_vertex(v)
        return [i for i, e in enumerate(self.edges) if v in e]

    def remove_vertices(self, xs: Iterable[int]) -> tuple["LinearThreeGraph", dict[int, int]]:
        """Delete X and E_X, reindex the rest; returns (graph, old->new map)."""
        xset = set(xs)
        for v in xset:
            self._check_vertex(v)
        if len(xset) == self.n:
            raise ValueError("cannot remove all vertices: vertex set must stay non-empty")
        keep = [v for v in range(self.n) if v not in xset]
        relabel = {v: i for i, v in enumerate(keep)}
        drop = self.edges_covering(xset)
        new_edges = sorted(
            tuple(sorted((relabel[a], relabel[b], relabel[c])))
            for i, (a, b, c) in enumerate(self.edges)
            if i not in drop
        )
        return LinearThreeGraph(len(keep), tuple(new_edges)), relabel

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise IndexError(f"vertex {v} out of range (n={self.n})")

    # -- serialization -----------------------------------------------------

    def to_l3g(self) -> str:
        lines = [f"{self.n} {len(self.edges)}"]
        lines.extend(f"{a} {b} {c}" for a, b, c in self.edges)
        return "\n".join(lines) + "\n"

    def to_json_obj(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def _build_pair_index(edges: Sequence[Triple]) -> dict[tuple[int, int], int]:
    idx: dict[tuple[int, int], int] = {}
    for i, e in enumerate(edges):
        for p in combinations(e, 2):
            idx[p] = i
    return idx


def validate_linear(triples: Iterable[Sequence[int]], n: int) -> LinearThreeGraph:
    """Validate and normalize a raw triple list into a LinearThreeGraph.

    Raises LinearityError naming the first offending triple or pair of
    edges: out-of-range index, repeated vertex within a triple, duplicate
    edge, or two edges sharing two vertices.
    """
    if n < 1:
        raise LinearityError("vertex set must be non-empty (n >= 1)")
    norm: list[Triple] = []
    for t in triples:
        t = list(t)
        if len(t) != 3:
            raise LinearityError(f"edge {t} does not have 3 vertices")
        for v in t:
            if not isinstance(v, int) or isinstance(v, bool):
                raise LinearityError(f"edge {t} has a non-integer vertex")
            if not (0 <= v < n):
                raise LinearityError(f"edge {t}: vertex {v} out of range [0, {n})")
        if len(set(t)) != 3:
            raise LinearityError(f"edge {t} repeats a vertex")
        norm.append(tuple(sorted(t)))
    norm.sort()
    pair_seen: dict[tuple[int, int], int] = {}
    for i, e in enumerate(norm):
        if i > 0 and norm[i - 1] == e:
            raise LinearityError(f"duplicate edge {list(e)}")
        for p in combinations(e, 2):
            j = pair_seen.get(p)
            if j is not None:
                raise LinearityError(
                    f"edges #{j} {list(norm[j])} and #{i} {list(e)} share pair {set(p)}"
                )
            pair_seen[p] = i
    return LinearThreeGraph(n, tuple(norm), pair_seen)


def from_edges_trusted(n: int, edges: Iterable[Sequence[int]]) -> LinearThreeGraph:
    """Build a graph from triples known to be linear (sorted/normalized here).

    Used by internal generators on the hot path; callers guarantee linearity.
    """
    norm = tuple(sorted(tuple(sorted(e)) for e in edges))
    return LinearThreeGraph(n, norm)


# -- L3G text format ---------------------------------------------------------

def parse_l3g(text: str) -> LinearThreeGraph:
    """Parse the L3G text format; errors carry 1-based line numbers."""
    data: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        data.append((lineno, line))
    if not data:
        raise LinearityError("empty L3G input: missing 'n m' header")
    lineno, header = data[0]
    parts = header.split()
    if len(parts) != 2:
        raise LinearityError(f"line {lineno}: header must be 'n m', got {header!r}")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise LinearityError(f"line {lineno}: header must be two integers") from None
    body = data[1:]
    if len(body) != m:
        raise LinearityError(f"expected {m} edge lines, found {len(body)}")
    triples: list[Triple] = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise LinearityError(f"line {lineno}: expected 3 integers, got {line!r}")
        try:
            a, b, c = (int(p) for p in parts)
        except ValueError:
            raise LinearityError(f"line {lineno}: expected 3 integers, got {line!r}") from None
        if not (a < b < c):
            raise LinearityError(f"line {lineno}: triple must be strictly increasing")
        triples.append((a, b, c))
    for i in range(1, len(triples)):
        if triples[i - 1] >= triples[i]:
            raise LinearityError(f"edge lines not in strict lexicographic order near line {body[i][0]}")
    return validate_linear(triples, n)


def parse_json_graph(text: str) -> LinearThreeGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise LinearityError(f"invalid JSON: {exc}") from None
    if not isinstance(obj, dict) or "n" not in obj or "edges" not in obj:
        raise LinearityError("JSON graph must be an object with 'n' and 'edges'")
    return validate_linear(obj["edges"], obj["n"])
