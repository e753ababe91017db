"""Shared test utilities: exhaustive enumerators, independent brute-force
oracles, and seeded random generators for the class sweeps.

Everything here is deliberately naive; these are the second routes that the
package code is checked against."""

from __future__ import annotations

import itertools
import random

from bchromatic.graphs import (Colouring, Graph, analyze_tight, bits,
                               complete_join, disjoint_union,
                               is_fall_colouring, proper_violation)
from bchromatic.patterns import is_free, pattern_graph


def all_graphs(n: int):
    """Every labeled graph on n vertices."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])


def all_graphs_up_to(n: int):
    for k in range(1, n + 1):
        yield from all_graphs(k)


def brute_max_matching_size(g: Graph) -> int:
    edges = g.edges()
    best = 0

    def rec(i: int, used: int, k: int) -> None:
        nonlocal best
        best = max(best, k)
        if i >= len(edges) or k + (len(edges) - i) <= best:
            return
        u, v = edges[i]
        if not ((used >> u) & 1) and not ((used >> v) & 1):
            rec(i + 1, used | (1 << u) | (1 << v), k + 1)
        rec(i + 1, used, k)

    rec(0, 0, 0)
    return best


def is_isomorphic(a: Graph, b: Graph) -> bool:
    from bchromatic.patterns import contains_induced
    return a.n == b.n and a.edge_count() == b.edge_count() \
        and contains_induced(a, b) is not None


def naive_contains_induced(g: Graph, h: Graph) -> bool:
    """All-subsets, all-bijections induced subgraph check."""
    if h.n > g.n:
        return False
    for subset in itertools.combinations(range(g.n), h.n):
        for perm in itertools.permutations(subset):
            if all(g.has_edge(perm[a], perm[b]) == h.has_edge(a, b)
                   for a in range(h.n) for b in range(a + 1, h.n)):
                return True
    return False


def independent_set_partitions(g: Graph):
    """All partitions of V into non-empty independent sets, as lists of
    masks (canonical enumeration: each vertex joins an existing class or
    opens the next one)."""
    classes: list[int] = []

    def rec(v: int):
        if v == g.n:
            yield list(classes)
            return
        for i in range(len(classes)):
            if not g.adj[v] & classes[i]:
                classes[i] |= 1 << v
                yield from rec(v + 1)
                classes[i] &= ~(1 << v)
        classes.append(1 << v)
        yield from rec(v + 1)
        classes.pop()

    yield from rec(0)


def masks_to_colouring(g: Graph, masks: list[int]) -> Colouring:
    colour = [0] * g.n
    for i, m in enumerate(masks, start=1):
        for v in bits(m):
            colour[v] = i
    return Colouring.from_values(colour)


def naive_fall_spectrum(g: Graph) -> set[int]:
    """Fall-colouring sizes via enumeration of all independent-set
    partitions (independent of the maximal-set exact-cover route)."""
    out = set()
    for masks in independent_set_partitions(g):
        c = masks_to_colouring(g, masks)
        if is_fall_colouring(g, c):
            out.add(len(masks))
    return out


def naive_tight_b_colourings(g: Graph):
    """All tight b-colourings via unpruned partition enumeration."""
    from bchromatic.graphs import is_tight_b_colouring
    info = analyze_tight(g)
    assert info.is_tight
    for masks in independent_set_partitions(g):
        if len(masks) != info.m:
            continue
        c = masks_to_colouring(g, masks)
        if is_tight_b_colouring(g, c):
            yield c


def check_dense_structure(g: Graph, c: Colouring) -> None:
    """Invariants every tight b-colouring must satisfy: the dense vertices
    are exactly the b-chromatic ones, each class holds exactly one of them
    with one neighbour per other class, and no dominating dense vertex
    shares a class with a boundary vertex."""
    from bchromatic.graphs import is_b_chromatic_vertex
    info = analyze_tight(g)
    assert proper_violation(g, c) is None
    bchrom = {v for v in range(g.n) if is_b_chromatic_vertex(g, c, v)}
    assert bchrom == info.dense
    dense_mask = sum(1 << v for v in info.dense)
    t1 = {u for u in info.dense if g.adj[u] & dense_mask == dense_mask & ~(1 << u)}
    for members in c.classes().values():
        inside = [v for v in members if v in info.dense]
        assert len(inside) == 1
        u = inside[0]
        for col, mask in c.class_masks().items():
            if col != c.colours[u]:
                assert (g.adj[u] & mask).bit_count() == 1
        if any(v in t1 for v in members):
            assert not any(v in info.boundary for v in members)


# -- seeded random generators -------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def random_3p1_free(rng: random.Random, n: int, p: float) -> Graph:
    """Complement of a random triangle-free graph."""
    adj = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    rng.shuffle(pairs)
    for u, v in pairs:
        if rng.random() < p and not (adj[u] & adj[v]):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph(n, tuple(adj)).complement()


def random_clique_union(rng: random.Random, n: int) -> Graph:
    g = Graph.empty(0)
    left = n
    while left:
        s = rng.randint(1, left)
        left -= s
        g = disjoint_union(g, pattern_graph(f"K{s}") if s > 1 else Graph.empty(1))
    return g


def random_p3p1_free(rng: random.Random, n: int) -> Graph:
    """Complete join of co-components that are 3P1-free or clique unions;
    such graphs are exactly the (P3+P1)-free ones."""
    parts = []
    left = n
    while left:
        k = rng.randint(1, left)
        left -= k
        if rng.random() < 0.5:
            parts.append(random_3p1_free(rng, k, rng.uniform(0.2, 0.8)))
        else:
            parts.append(random_clique_union(rng, k))
    g = parts[0]
    for part in parts[1:]:
        g = complete_join(g, part)
    return g


def sample_tight_in_class(rng: random.Random, count: int, pattern: str,
                          n_range=(7, 10)) -> list[Graph]:
    """Seeded rejection sampling of tight graphs in the given H-free class,
    mixing unconstrained and structured generators for coverage."""
    out: list[Graph] = []
    while len(out) < count:
        n = rng.randint(*n_range)
        style = rng.random()
        if pattern == "P3+P1":
            g = random_p3p1_free(rng, n)
        elif style < 0.5:
            g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        else:
            g = random_3p1_free(rng, n, rng.uniform(0.2, 0.8))
        if not analyze_tight(g).is_tight:
            continue
        if is_free(g, pattern):
            out.append(g)
    return out


def sample_in_class_p3p1(rng: random.Random, count: int, n_range=(7, 10)) -> list[Graph]:
    return [random_p3p1_free(rng, rng.randint(*n_range)) for _ in range(count)]


def sample_tight(rng: random.Random, count: int, n: int) -> list[Graph]:
    out: list[Graph] = []
    while len(out) < count:
        g = random_graph(rng, n, rng.uniform(0.3, 0.9))
        if analyze_tight(g).is_tight:
            out.append(g)
    return out


# -- named fixtures --------------------------------------------------------------


def footnote_graph() -> Graph:
    """Join of an edgeless pair with (K3 + isolated vertex): tight with
    m = 5 but no b-colouring with five colours."""
    return complete_join(Graph.empty(2), disjoint_union(pattern_graph("K3"), Graph.empty(1)))
