"""Mechanized replays of the structural lemmas on concrete instances.

Each suite returns a ReplayReport whose failure list is empty iff the
suite passes; reports are deterministic given their seed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations

from .canon import canonical_edges
from .crowns import (
    ColoredLinkGraph,
    CrownWitness,
    crown_oracle,
    find_crown,
    find_crown_with_base,
    find_rainbow_matching,
    greedy_crown_642,
)
from .graphs import LinearThreeGraph, Triple, dominates, validate_linear
from .search import random_linear_graph

import random


@dataclass
class ReplayReport:
    suite: str
    instances: int = 0
    failures: list[tuple[str, str]] = field(default_factory=list)
    elapsed_ms: float = 0.0
    seed: int | None = None

    @property
    def passed(self) -> bool:
        return not self.failures

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "instances": self.instances,
            "failures": [list(f) for f in self.failures],
            "elapsed_ms": self.elapsed_ms,
            "seed": self.seed,
            "passed": self.passed,
        }

    def summary(self) -> str:
        status = "PASS" if self.passed else f"FAIL ({len(self.failures)} failures)"
        return f"{self.suite}: {self.instances} instances, {status}, {self.elapsed_ms:.0f} ms"


# -- the fixed rainbow-free link graph of a (5,5,5) base -------------------------

# Vertex conventions for the fixed graph: base vertices a,b,c = 0,1,2 and
# link vertices v1..v8 = 3..10.  The labeling is pinned so that the edges
# {v1,v4,a}, {v2,v4,c}, {v6,v7,a} all exist in the induced 3-graph.
A, B, C = 0, 1, 2
V = [None] + list(range(3, 11))  # V[i] is v_i


def canonical_link_graph_G() -> ColoredLinkGraph:
    """Two 4-cycles alternating in colors a/b, with the c-edges as diagonals."""
    edges = [
        (V[1], V[4], A), (V[2], V[3], A),
        (V[1], V[2], B), (V[3], V[4], B),
        (V[1], V[3], C), (V[2], V[4], C),
        (V[6], V[7], A), (V[5], V[8], A),
        (V[5], V[6], B), (V[7], V[8], B),
        (V[5], V[7], C), (V[6], V[8], C),
    ]
    colored = tuple(sorted((min(u, w), max(u, w), x) for u, w, x in edges))
    return ColoredLinkGraph((A, B, C), frozenset(range(3, 11)), colored)


def induced_graph_of_G() -> LinearThreeGraph:
    """The 13-edge 3-graph: base {a,b,c} plus one edge per colored link edge."""
    G = canonical_link_graph_G()
    triples = [(A, B, C)] + [tuple(sorted((x, u, w))) for u, w, x in G.colored_edges]
    return validate_linear(triples, 11)


def _encode_colored(G_edges, n_hint: int = 0) -> tuple:
    """Canonical form of a 3-edge-colored graph up to vertex relabeling and
    color permutation, by encoding color classes as three extra vertices.

    Each colored edge {u,w}/c becomes the triple {u, w, X_c}.  Color
    vertices have degree 4 and ordinary vertices at most 3, so 3-graph
    isomorphisms are exactly the color-permuting graph isomorphisms.
    """
    verts = sorted({v for u, w, _ in G_edges for v in (u, w)})
    colors = sorted({c for _, _, c in G_edges})
    relabel = {v: i for i, v in enumerate(verts)}
    base = len(verts)
    cmap = {c: base + i for i, c in enumerate(colors)}
    triples = [tuple(sorted((relabel[u], relabel[w], cmap[c]))) for u, w, c in G_edges]
    return canonical_edges(base + len(colors), tuple(sorted(triples))).edges


def _matchings4(existing_pairs: set, n_used: int, rainbow_veto=None):
    """All size-4 matchings over the current vertices 0..n_used-1 plus fresh
    vertices introduced consecutively, pairs listed in increasing order.

    rainbow_veto(pair), when given, prunes a pair that already completes a
    rainbow triple with the previously fixed color classes.
    """
    out = []

    def rec(cur: list, used_v: set, n_cur: int, last_pair):
        if len(cur) == 4:
            out.append((list(cur), n_cur))
            return
        for u in range(n_cur + 1):
            if u in used_v:
                continue
            wmax = n_cur + 1 if u == n_cur else n_cur
            for w in range(u + 1, wmax + 1):
                if w in used_v:
                    continue
                pr = (u, w)
                if last_pair is not None and pr <= last_pair:
                    continue
                if pr in existing_pairs:
                    continue
                if rainbow_veto is not None and rainbow_veto(pr):
                    continue
                rec(cur + [pr], used_v | {u, w}, max(n_cur, w + 1), pr)

    rec([], set(), n_used, None)
    return out


def enumerate_555_link_graphs() -> list[tuple]:
    """All rainbow-matching-free link graphs of a (5,5,5) base, up to
    color-permuting isomorphism, returned as canonical encodings.

    Each color class is a matching of four edges; underlying pairs are
    distinct across colors (the ambient 3-graph is linear).  The first
    class is pinned to four fixed disjoint pairs (any matching relabels to
    it); two-class prefixes are deduplicated up to isomorphism before the
    third class is enumerated, and a partial third class is pruned as soon
    as one of its pairs completes a rainbow triple.
    """
    first = [(0, 1), (2, 3), (4, 5), (6, 7)]
    pairs_a = set(first)

    two_color_reps: dict[tuple, tuple[list, int]] = {}
    for b_class, n_after_b in _matchings4(pairs_a, 8):
        colored_ab = [(u, w, 0) for u, w in first] + [(u, w, 1) for u, w in b_class]
        key = _encode_colored(colored_ab)
        two_color_reps.setdefault(key, (b_class, n_after_b))

    results: set[tuple] = set()
    for b_class, n_after_b in two_color_reps.values():
        pairs_ab = pairs_a | set(b_class)

        def veto(pr, _b=b_class):
            s = set(pr)
            for ea in first:
                if s & set(ea):
                    continue
                sa = s | set(ea)
                for eb in _b:
                    if not (sa & set(eb)):
                        return True
            return False

        for c_class, _ in _matchings4(pairs_ab, n_after_b, rainbow_veto=veto):
            colored = (
                [(u, w, 0) for u, w in first]
                + [(u, w, 1) for u, w in b_class]
                + [(u, w, 2) for u, w in c_class]
            )
            G = ColoredLinkGraph(
                (0, 1, 2),
                frozenset(v for u, w, _ in colored for v in (u, w)),
                tuple(sorted(colored)),
            )
            if find_rainbow_matching(G) is not None:
                continue
            results.add(_encode_colored(G.colored_edges))
    return sorted(results)


def encode_canonical_G() -> tuple:
    return _encode_colored(canonical_link_graph_G().colored_edges)


# -- suite replays ----------------------------------------------------------------

def replay_section3() -> ReplayReport:
    """Replay the crown-extension argument around a (5,5,5) base edge."""
    t0 = time.monotonic()
    rep = ReplayReport(suite="replay3")

    def check(name: str, ok: bool, detail: str = "") -> None:
        rep.instances += 1
        if not ok:
            rep.failures.append((name, detail))

    H0 = induced_graph_of_G()
    base_id = H0.edges.index((A, B, C))
    check("base degree vector", H0.degree_vector(base_id).as_tuple() == (5, 5, 5))
    check("|E| = 13", len(H0.edges) == 13)
    check("H0 crown-free (oracle)", crown_oracle(H0) is None)
    X = set(range(11))
    ex_count = len(H0.edges_covering(X))
    check("|E_X| = 13", ex_count == 13, f"got {ex_count}")
    check("13 < 5|X|/3", 3 * ex_count < 5 * len(X))
    degs = H0.degrees()
    check("degrees in {3,5}", sorted(set(degs)) == [3, 5]
          and all(degs[v] == 5 for v in (A, B, C))
          and all(degs[v] == 3 for v in range(3, 11)))

    v1, v2, v4, v5, v6, v7 = V[1], V[2], V[4], V[5], V[6], V[7]
    for case, (w1, w2, n2) in (
        ("w1 = v5", (v5, 11, 12)),
        ("w1 fresh", (11, 12, 13)),
    ):
        f = tuple(sorted((v1, w1, w2)))
        H = validate_linear(list(H0.edges) + [f], n2)
        check(f"{case}: extension is linear", True)
        check(f"{case}: crown found", find_crown(H) is not None)
        base = H.edges.index(tuple(sorted((v1, v4, A))))
        jewels = (
            H.edges.index(f),
            H.edges.index(tuple(sorted((v2, v4, C)))),
            H.edges.index(tuple(sorted((v6, v7, A)))),
        )
        try:
            CrownWitness(base, jewels).validate(H)
            check(f"{case}: stated witness validates", True)
        except ValueError as exc:
            check(f"{case}: stated witness validates", False, str(exc))
        check(f"{case}: crown with stated base", find_crown_with_base(H, base) is not None)

    rep.elapsed_ms = (time.monotonic() - t0) * 1000
    return rep


def verify_links555() -> ReplayReport:
    t0 = time.monotonic()
    rep = ReplayReport(suite="links555")
    classes = enumerate_555_link_graphs()
    rep.instances = len(classes)
    if len(classes) != 1:
        rep.failures.append(("class count", f"expected 1, got {len(classes)}"))
    elif classes[0] != encode_canonical_G():
        rep.failures.append(("class identity", "sole class differs from the fixed graph"))
    G = canonical_link_graph_G()
    if find_rainbow_matching(G) is not None:
        rep.failures.append(("fixed graph", "has a rainbow matching"))
    for col in (A, B, C):
        cl = G.color_class(col)
        if len(cl) != 4 or len({v for e in cl for v in e}) != 8:
            rep.failures.append(("fixed graph", f"color {col} is not a perfect matching"))
    # every edge of one color meets exactly two edges of each other color
    for col in (A, B, C):
        for u, w in G.color_class(col):
            for other in (A, B, C):
                if other == col:
                    continue
                hits = sum(1 for x, y in G.color_class(other) if {u, w} & {x, y})
                if hits != 2:
                    rep.failures.append(
                        ("intersection pattern", f"edge ({u},{w}) color {col} hits {hits} of {other}")
                    )
    rep.elapsed_ms = (time.monotonic() - t0) * 1000
    return rep


def plant_642_instance(rng: random.Random) -> tuple[LinearThreeGraph, int]:
    """Random linear graph with a planted edge whose degree vector dominates
    (6,4,2): a sunflower through a base edge plus random linear noise."""
    da = rng.randint(6, 9)
    db = rng.randint(4, min(da, 8))
    dc = rng.randint(2, min(db, 6))
    edges: list[Triple] = [(0, 1, 2)]
    nxt = 3
    for v, dv in ((0, da), (1, db), (2, dc)):
        for _ in range(dv - 1):
            edges.append(tuple(sorted((v, nxt, nxt + 1))))
            nxt += 2
    n = nxt + rng.randint(0, 6)
    # random noise edges that keep linearity (pair-reuse rejected)
    pairs = {p for e in edges for p in combinations(e, 2)}
    for _ in range(rng.randint(0, 12)):
        t = tuple(sorted(rng.sample(range(n), 3)))
        ps = list(combinations(t, 2))
        if any(p in pairs for p in ps):
            continue
        pairs.update(ps)
        edges.append(t)
    H = validate_linear(edges, n)
    return H, H.edges.index((0, 1, 2))


def verify_lemma1_on_corpus(seed: int = 0, count: int = 1000) -> ReplayReport:
    """Planted-(6,4,2) corpus: the crown must always be found, and the
    greedy witness must always validate."""
    t0 = time.monotonic()
    rep = ReplayReport(suite="lemma1", seed=seed)
    rng = random.Random(seed)
    for i in range(count):
        H, e = plant_642_instance(rng)
        rep.instances += 1
        if not dominates(H.degree_vector(e), (6, 4, 2)):
            rep.failures.append((f"instance {i}", "planted edge lost domination"))
            continue
        if find_crown_with_base(H, e) is None:
            rep.failures.append((f"instance {i}", "no crown found with planted base"))
            continue
        try:
            greedy_crown_642(H, e)
        except (ValueError, AssertionError) as exc:
            rep.failures.append((f"instance {i}", f"greedy failed: {exc}"))
    rep.elapsed_ms = (time.monotonic() - t0) * 1000
    return rep


def min_counterexample_order() -> int:
    """Least n >= 1 where the linearity cap n(n-1)/6 reaches the 5n/3
    counter-example threshold; pure integer arithmetic."""
    n = 1
    while 3 * n * (n - 1) < 30 * n:  # n(n-1)/6 >= 5n/3, cross-multiplied
        n += 1
    return n


def verify_order11() -> ReplayReport:
    t0 = time.monotonic()
    rep = ReplayReport(suite="order11")
    got = min_counterexample_order()
    rep.instances = 1
    if got != 11:
        rep.failures.append(("order", f"expected 11, got {got}"))
    rep.elapsed_ms = (time.monotonic() - t0) * 1000
    return rep


def verify_discharge_suite(seed: int = 0, count: int = 200) -> ReplayReport:
    """Random valid degree functions through the builder and the verifier,
    including planted large degrees; the Delta_v bound is checked for every
    vertex of final degree >= 9."""
    from .discharging import build_discharge_sequence, delta_v_bound_check, verify_discharge_trace

    t0 = time.monotonic()
    rep = ReplayReport(suite="discharge", seed=seed)
    rng = random.Random(seed)
    for i in range(count):
        d = random_degree_function(rng)
        rep.instances += 1
        try:
            trace = build_discharge_sequence(d)
        except (ValueError, AssertionError) as exc:
            rep.failures.append((f"instance {i}", f"builder failed: {exc}"))
            continue
        ok, bad = verify_discharge_trace(trace, d)
        if not ok:
            rep.failures.append((f"instance {i}", "; ".join(bad)))
            continue
        for v, dv in enumerate(d):
            if dv >= 9:
                got, bound, holds = delta_v_bound_check(trace, v, dv)
                if not holds:
                    rep.failures.append(
                        (f"instance {i}", f"Delta_v = {got} < {bound} at vertex {v}")
                    )
    rep.elapsed_ms = (time.monotonic() - t0) * 1000
    return rep


def random_degree_function(rng: random.Random) -> list[int]:
    """Seeded degree function with sum 5n + l, min >= 2, n <= 40, and an
    occasional planted degree in 9..15."""
    n = rng.randint(3, 40)
    l = rng.randint(0, 2)
    target = 5 * n + l
    d = [2] * n
    if rng.random() < 0.7:
        d[rng.randrange(n)] = rng.randint(9, 15)
    remaining = target - sum(d)
    while remaining < 0:  # planted degree overshot on a tiny n
        d = [2] * n
        remaining = target - sum(d)
    for _ in range(remaining):
        d[rng.randrange(n)] += 1
    return d


ALL_SUITES = {
    "lemma1": verify_lemma1_on_corpus,
    "links555": verify_links555,
    "replay3": replay_section3,
    "discharge": verify_discharge_suite,
    "order11": verify_order11,
}


def run_suite(name: str, seed: int = 0, count: int = 1000) -> ReplayReport:
    if name == "lemma1":
        return verify_lemma1_on_corpus(seed=seed, count=count)
    if name == "discharge":
        return verify_discharge_suite(seed=seed, count=count)
    if name in ALL_SUITES:
        return ALL_SUITES[name]()
    raise KeyError(f"unknown suite {name!r}")
