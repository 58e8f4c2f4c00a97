"""Isomorph-free exact computation of the crown Turán number for small n.

Generation is canonical augmentation: a child H+e is accepted only when
deleting the canonical-deletion edge of H+e (the edge mapped to the
lexicographically last canonical edge) lands back on the parent's
isomorphism class; candidate additions are filtered down to one per
Aut(H)-orbit and accepted children are deduplicated per parent, so each
class is visited exactly once.  exact search additionally prunes by an
edge-capacity bound and maintains an incumbent seeded from the
lower-bound gadget.
"""

from __future__ import annotations

import random
import threading
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterator

from .canon import CanonResult, canonical_edges
from .crowns import crown_oracle, find_crown, find_crown_with_base
from .graphs import LinearThreeGraph, Triple, from_edges_trusted, validate_linear


class BudgetExceeded(Exception):
    pass


@dataclass
class ExtremalCertificate:
    """Exact value of the crown Turán number with witnesses and evidence."""

    n: int
    value: int
    witnesses: list[tuple[Triple, ...]]  # canonical edge lists, sorted, capped
    nodes_explored: int
    exhaustive: bool
    elapsed_seconds: float
    params: dict = field(default_factory=dict)

    def witness_graphs(self) -> list[LinearThreeGraph]:
        return [from_edges_trusted(self.n, w) for w in self.witnesses]

    def to_json_obj(self) -> dict:
        return {
            "n": self.n,
            "value": self.value,
            "witnesses": [[list(e) for e in w] for w in self.witnesses],
            "witnesses_l3g": [g.to_l3g() for g in self.witness_graphs()],
            "nodes_explored": self.nodes_explored,
            "exhaustive": self.exhaustive,
            "elapsed_seconds": self.elapsed_seconds,
            "params": dict(self.params),
        }


# -- internal node state -------------------------------------------------------


class _Node:
    """Mutable-free search node: edges plus cheap derived state."""

    __slots__ = ("edges", "cov", "pairs", "degs", "canon")

    def __init__(self, edges: tuple[Triple, ...], cov: int, pairs: frozenset,
                 degs: tuple[int, ...], canon: CanonResult):
        self.edges = edges
        self.cov = cov
        self.pairs = pairs
        self.degs = degs
        self.canon = canon

    def graph(self) -> LinearThreeGraph:
        return from_edges_trusted(self.cov if self.cov else 1, self.edges)


def _root() -> _Node:
    return _Node((), 0, frozenset(), (), canonical_edges(1, ()))


def _extend(node: _Node, e: Triple) -> _Node | None:
    """Child node for edge e, without canonical form (filled by caller)."""
    cov = max(node.cov, e[2] + 1)
    edges = tuple(sorted(node.edges + (e,)))
    degs = list(node.degs) + [0] * (cov - node.cov)
    for v in e:
        degs[v] += 1
    pairs = node.pairs | {(e[0], e[1]), (e[0], e[2]), (e[1], e[2])}
    return _Node(edges, cov, pairs, tuple(degs), None)


def _candidate_edges(node: _Node, max_vertices: int) -> list[Triple]:
    """Feasible additions: free pairs only, new vertices taken consecutively."""
    cov = node.cov
    out: list[Triple] = []
    pairs = node.pairs
    for t in combinations(range(cov), 3):
        if (t[0], t[1]) in pairs or (t[0], t[2]) in pairs or (t[1], t[2]) in pairs:
            continue
        out.append(t)
    if cov + 1 <= max_vertices:
        for p in combinations(range(cov), 2):
            if p not in pairs:
                out.append((p[0], p[1], cov))
    if cov + 2 <= max_vertices:
        for i in range(cov):
            out.append((i, cov, cov + 1))
    if cov + 3 <= max_vertices:
        out.append((cov, cov + 1, cov + 2))
    return out


def _orbit_reps(candidates: list[Triple], auts) -> list[Triple]:
    """One representative per Aut(H)-orbit (identity on not-yet-used labels)."""
    if len(auts) <= 1:
        return candidates
    seen: set[Triple] = set()
    reps: list[Triple] = []
    for e in candidates:
        if e in seen:
            continue
        reps.append(e)
        for alpha in auts:
            img = tuple(sorted(alpha.get(v, v) for v in e))
            seen.add(img)
    return reps


def _creates_crown(node: _Node, child: _Node, e: Triple) -> bool:
    """Assuming the parent is crown-free, check only bases touching e."""
    H = child.graph()
    new_id = H.edges.index(e)
    es = set(e)
    for i, f in enumerate(H.edges):
        if i == new_id or es.intersection(f):
            if find_crown_with_base(H, i) is not None:
                return True
    return False


def _invariant(edges: tuple[Triple, ...]) -> tuple:
    """Cheap isomorphism invariant used to fast-reject parent mismatches."""
    deg: dict[int, int] = {}
    for a, b, c in edges:
        deg[a] = deg.get(a, 0) + 1
        deg[b] = deg.get(b, 0) + 1
        deg[c] = deg.get(c, 0) + 1
    dvs = sorted(
        tuple(sorted((deg[a], deg[b], deg[c]), reverse=True)) for a, b, c in edges
    )
    return (tuple(sorted(deg.values())), tuple(dvs))


def _accept(node: _Node, child: _Node, e: Triple) -> bool:
    """Canonical-augmentation test: canonical deletion must recover the parent."""
    child.canon = canonical_edges(max(child.cov, 1), child.edges)
    last = child.canon.edges[-1]
    perm = child.canon.perm
    d = None
    for f in child.edges:
        if tuple(sorted((perm[f[0]], perm[f[1]], perm[f[2]]))) == last:
            d = f
            break
    assert d is not None
    if d == e:
        return True
    rest = tuple(f for f in child.edges if f != d)
    if _invariant(rest) != _invariant(node.edges):
        return False
    return canonical_edges(max(child.cov, 1), rest).edges == node.canon.edges


# -- generation ----------------------------------------------------------------

def generate_all(
    max_vertices: int,
    crown_free_only: bool = False,
    prune: Callable[[_Node], bool] | None = None,
    visit: Callable[[_Node], None] | None = None,
) -> Iterator[LinearThreeGraph]:
    """Yield one representative per isomorphism class of linear 3-graphs
    whose covered vertices fit in max_vertices labels.

    With crown_free_only, subtrees containing a crown are cut (crown-free
    graphs are closed under edge deletion, so this loses nothing).  prune
    may cut subtrees; visit observes every node (used by exact search).
    """
    stack = [_root()]
    while stack:
        node = stack.pop()
        if visit is not None:
            visit(node)
        if node.edges:
            yield node.graph()
        if prune is not None and prune(node):
            continue
        cands = _orbit_reps(_candidate_edges(node, max_vertices), node.canon.auts)
        seen_children: set[tuple[Triple, ...]] = set()
        children = []
        for e in cands:
            child = _extend(node, e)
            if crown_free_only and len(child.edges) >= 4 and _creates_crown(node, child, e):
                continue
            if not _accept(node, child, e):
                continue
            if child.canon.edges in seen_children:
                continue
            seen_children.add(child.canon.edges)
            children.append(child)
        stack.extend(children)


# -- exact Turán number ----------------------------------------------------------

def _capacity_bound(node: _Node, n: int) -> int:
    """Upper bound on the number of edges any extension within n vertices
    can reach: free pairs per vertex, two per edge per endpoint."""
    total_pairs = n * (n - 1) // 2 - 3 * len(node.edges)
    cap_pairs = len(node.edges) + total_pairs // 3
    free_slots = 0
    for v in range(n):
        d = node.degs[v] if v < node.cov else 0
        free_slots += ((n - 1) - 2 * d) // 2
    cap_vertex = len(node.edges) + free_slots // 3
    return min(cap_pairs, cap_vertex)


@dataclass
class _Incumbent:
    value: int
    witnesses: set
    lock: threading.Lock = field(default_factory=threading.Lock)

    def offer(self, m: int, canon_edges_t) -> None:
        with self.lock:
            if m > self.value:
                self.value = m
                self.witnesses = set()
            if m == self.value and canon_edges_t is not None:
                self.witnesses.add(canon_edges_t)


def exact_ex(
    n: int,
    max_seconds: float | None = None,
    max_nodes: int | None = None,
    threads: int = 1,
    witness_cap: int = 10,
    unsafe_5n3_prune: bool = False,
    recheck_witnesses: bool = True,
) -> ExtremalCertificate:
    """Exact crown Turán number on n vertices by isomorph-free search.

    The incumbent is seeded with the lower-bound gadget.  The theorem-level
    5n/3 cap is never used for pruning unless unsafe_5n3_prune is set (it
    would be circular in any run meant as evidence).  On budget exhaustion
    the best incumbent is returned with exhaustive=False.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    t0 = time.monotonic()
    seed_graph = lower_bound_construction(n)
    inc = _Incumbent(len(seed_graph.edges), set())
    if seed_graph.edges:
        inc.witnesses.add(canonical_edges(n, seed_graph.edges).edges)
    nodes = [0]
    deadline = t0 + max_seconds if max_seconds is not None else None
    aborted = [False]

    hard_cap = (5 * n - 1) // 3 if unsafe_5n3_prune else None

    def visit(node: _Node) -> None:
        nodes[0] += 1
        if max_nodes is not None and nodes[0] > max_nodes:
            raise BudgetExceeded
        if deadline is not None and nodes[0] % 256 == 0 and time.monotonic() > deadline:
            raise BudgetExceeded
        m = len(node.edges)
        if m >= inc.value:
            inc.offer(m, node.canon.edges if m > 0 else None)

    def prune(node: _Node) -> bool:
        bound = _capacity_bound(node, n)
        if hard_cap is not None:
            bound = min(bound, hard_cap)
        return bound < inc.value

    def run_subtree(start: _Node) -> None:
        stack = [start]
        while stack:
            node = stack.pop()
            visit(node)
            if prune(node):
                continue
            cands = _orbit_reps(_candidate_edges(node, n), node.canon.auts)
            seen: set = set()
            for e in cands:
                child = _extend(node, e)
                if len(child.edges) >= 4 and _creates_crown(node, child, e):
                    continue
                if not _accept(node, child, e):
                    continue
                if child.canon.edges in seen:
                    continue
                seen.add(child.canon.edges)
                stack.append(child)

    try:
        root = _root()
        if threads <= 1:
            run_subtree(root)
        else:
            # expand the root once, then farm out first-level subtrees
            visit(root)
            cands = _orbit_reps(_candidate_edges(root, n), root.canon.auts)
            tops = []
            for e in cands:
                child = _extend(root, e)
                if _accept(root, child, e):
                    tops.append(child)
            with ThreadPoolExecutor(max_workers=threads) as pool:
                for fut in [pool.submit(run_subtree, t) for t in tops]:
                    fut.result()
        exhaustive = True
    except BudgetExceeded:
        exhaustive = False

    witnesses = sorted(inc.witnesses)[:witness_cap]
    if recheck_witnesses:
        for w in witnesses:
            g = from_edges_trusted(n, w)
            assert len(g.edges) == inc.value
            validate_linear(g.edges, n)
            assert crown_oracle(g) is None, "witness fails the crown oracle"
    return ExtremalCertificate(
        n=n,
        value=inc.value,
        witnesses=witnesses,
        nodes_explored=nodes[0],
        exhaustive=exhaustive,
        elapsed_seconds=time.monotonic() - t0,
        params={
            "threads": threads,
            "max_seconds": max_seconds,
            "max_nodes": max_nodes,
            "unsafe_5n3_prune": unsafe_5n3_prune,
        },
    )


# -- constructions and generators -------------------------------------------------

def lower_bound_construction(n: int) -> LinearThreeGraph:
    """Crown-free linear graph on n vertices with 6*floor((n-3)/4) edges.

    Three hub vertices; each group of four fresh vertices contributes the
    six pairs of a K4, properly 3-colored into perfect matchings, each pair
    joined to the hub of its color.  Every edge contains a hub, and the two
    candidate jewels at the non-hub vertices of any base always intersect,
    so no crown exists; both properties are re-verified before returning.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    k = (n - 3) // 4
    edges: list[Triple] = []
    for g in range(k):
        p, q, r, s = (3 + 4 * g + i for i in range(4))
        edges += [(0, p, q), (0, r, s), (1, p, r), (1, q, s), (2, p, s), (2, q, r)]
    H = validate_linear(edges, n)
    if crown_oracle(H) is not None:
        raise AssertionError("lower-bound gadget failed self-certification")
    return H


def random_linear_graph(n: int, m: int, seed: int, retry_budget: int = 2000) -> LinearThreeGraph:
    """Seeded random linear graph: rejection-sample triples avoiding pair reuse.

    Returns fewer than m edges if the budget runs out before saturation.
    """
    if m > n * (n - 1) // 6:
        raise ValueError(f"m = {m} exceeds the linearity cap n(n-1)/6 = {n * (n - 1) // 6}")
    rng = random.Random(seed)
    pairs: set[tuple[int, int]] = set()
    edges: list[Triple] = []
    misses = 0
    while len(edges) < m and misses < retry_budget:
        t = tuple(sorted(rng.sample(range(n), 3)))
        ps = [(t[0], t[1]), (t[0], t[2]), (t[1], t[2])]
        if any(p in pairs for p in ps):
            misses += 1
            continue
        pairs.update(ps)
        edges.append(t)
    return from_edges_trusted(n, edges)


def densify_crown_free(n: int, seed: int, iterations: int = 2000) -> LinearThreeGraph:
    """Heuristic dense crown-free witness: add-if-legal with random removal kicks.

    Starts from the lower-bound gadget so the result never falls below it;
    returns the best graph seen.  Never claims optimality.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    rng = random.Random(seed)
    cur = list(lower_bound_construction(n).edges)
    best = list(cur)

    def legal_additions(edges: list[Triple]) -> list[Triple]:
        pairs = {p for e in edges for p in combinations(e, 2)}
        out = []
        for t in combinations(range(n), 3):
            if (t[0], t[1]) in pairs or (t[0], t[2]) in pairs or (t[1], t[2]) in pairs:
                continue
            H2 = from_edges_trusted(n, edges + [t])
            new_id = H2.edges.index(t)
            ts = set(t)
            ok = True
            for i, f in enumerate(H2.edges):
                if i == new_id or ts.intersection(f):
                    if find_crown_with_base(H2, i) is not None:
                        ok = False
                        break
            if ok:
                out.append(t)
        return out

    for _ in range(iterations):
        adds = legal_additions(cur)
        if adds:
            cur.append(rng.choice(adds))
        else:
            if len(cur) > len(best):
                best = list(cur)
            drop = rng.randrange(1, min(3, len(cur)) + 1) if cur else 0
            for _ in range(drop):
                cur.pop(rng.randrange(len(cur)))
        if len(cur) > len(best):
            best = list(cur)
    H = from_edges_trusted(n, best)
    assert find_crown(H) is None
    return H
