"""Exact canonical labeling for linear 3-graphs.

Iterative color refinement on vertices (colors propagated through the
triples) plus backtracking individualization.  All branches of the
individualization tree are explored and the lexicographically least edge
list over its leaves is the canonical form; the tree itself is an
isomorphism invariant, so isomorphic graphs get identical canonical edge
lists.  Graphs here are tiny (n <= ~25), so no automorphism pruning is
needed; the full automorphism group falls out of the minimal leaves for
free and is used by the search engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graphs import LinearThreeGraph, Triple


@dataclass(frozen=True)
class CanonResult:
    """Canonical edge list, the relabeling achieving it, and Aut(H).

    edges: canonical edge list over covered vertices relabeled 0..k-1
      (isolated vertices do not affect it).
    perm: full permutation old label -> new label on all n vertices;
      isolated vertices get the labels k..n-1 in ascending original order.
    auts: automorphisms of the covered part, as tuples indexed by covered
      position (see cover list); identity always included.
    cover: sorted list of covered vertices (original labels).
    """

    edges: tuple[Triple, ...]
    perm: tuple[int, ...]
    auts: tuple[dict[int, int], ...]
    cover: tuple[int, ...]


def canonical_form(H: LinearThreeGraph) -> CanonResult:
    return canonical_edges(H.n, H.edges)


def canonical_edges(n: int, edges: Sequence[Triple]) -> CanonResult:
    if not edges:
        return CanonResult((), tuple(range(n)), ({},), ())

    cover = sorted({v for e in edges for v in e})
    k = len(cover)
    pos = {v: i for i, v in enumerate(cover)}
    # co-pairs per covered vertex: the other two endpoints of each incident edge
    copairs: list[list[tuple[int, int]]] = [[] for _ in range(k)]
    for a, b, c in edges:
        pa, pb, pc = pos[a], pos[b], pos[c]
        copairs[pa].append((pb, pc))
        copairs[pb].append((pa, pc))
        copairs[pc].append((pa, pb))

    edge_pos = [(pos[a], pos[b], pos[c]) for a, b, c in edges]

    def refine(colors: list[int]) -> list[int]:
        ncells = len(set(colors))
        while True:
            sigs = []
            for v in range(k):
                cv = colors[v]
                sig = sorted(
                    (colors[u], colors[w]) if colors[u] <= colors[w] else (colors[w], colors[u])
                    for u, w in copairs[v]
                )
                sigs.append((cv, tuple(sig)))
            order = {s: i for i, s in enumerate(sorted(set(sigs)))}
            if len(order) == ncells:
                return [order[s] for s in sigs]
            colors = [order[s] for s in sigs]
            ncells = len(order)

    best_img: tuple[Triple, ...] | None = None
    best_labs: list[list[int]] = []

    def dfs(colors: list[int]) -> None:
        nonlocal best_img
        colors = refine(colors)
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            # discrete: colors are exactly the labels 0..k-1
            img = tuple(sorted(
                tuple(sorted((colors[a], colors[b], colors[c]))) for a, b, c in edge_pos
            ))
            if best_img is None or img < best_img:
                best_img = img
                best_labs.clear()
                best_labs.append(colors)
            elif img == best_img:
                best_labs.append(colors)
            return
        base = colors
        for v in target:
            branch = [2 * c for c in base]
            branch[v] -= 1
            dfs(branch)

    dfs([0] * k)
    assert best_img is not None

    lab0 = best_labs[0]
    # automorphisms: compose each minimal labeling with the inverse of the first
    inv0 = [0] * k
    for v in range(k):
        inv0[lab0[v]] = v
    auts = []
    seen = set()
    for lab in best_labs:
        alpha = tuple(inv0[lab[v]] for v in range(k))
        if alpha not in seen:
            seen.add(alpha)
            auts.append({cover[v]: cover[alpha[v]] for v in range(k)})

    perm = [0] * n
    for v in range(k):
        perm[cover[v]] = lab0[v]
    nxt = k
    for v in range(n):
        if v not in pos:
            perm[v] = nxt
            nxt += 1
    return CanonResult(best_img, tuple(perm), tuple(auts), tuple(cover))
