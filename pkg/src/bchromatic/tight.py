"""Tight b-colourings via partial colourings and precolouring extension.

For a tight graph G with dense set T (|T| = m, all of degree m-1) the solver
machinery works with *partial b-colourings*: a colouring c' of G[T + S'] for
some subset S' of the outer boundary of T such that

1. the vertices of T get pairwise distinct colours, and
2. whenever a boundary vertex s in S' shares its colour with u in T, every
   other vertex of T has exactly one neighbour in that colour.

A *b-precolouring extension* of c' is a b-colouring of G that extends c' and
in which no colour class holding two or more boundary vertices contains a
vertex of the untouched boundary.  Such an extension is automatically a
tight b-colouring (it can use no new colours beyond the m on T).

Whether an extension exists is decidable in polynomial time: split T into
the dominating vertices T1 of G[T], the vertices T' that share a colour with
S', and the rest T2.  If T2 is empty, an extension exists iff S' already
covers the whole boundary, and then a greedy completion works.  Otherwise
pair T2 against the uncoloured boundary S with an auxiliary bipartite graph
(u and s are pairable iff non-adjacent with no common neighbour inside
(T2 + T') - u) and test for a perfect matching.

On top of the extension test sit the two polynomial solvers: the
(2P2+P1)-free algorithm, which forces boundary colours through the T(u,s)
completeness rule, and the (P3+P1)-free algorithm, which decomposes into
co-components and solves each one as either a (2P2+P1)-free graph or a
disjoint union of cliques.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (Colouring, Graph, GraphError, TightAnalysis,
                     analyze_tight, bits, co_components)
from .matching import max_bipartite_matching
from .oracles import NotTightError
from .patterns import CoComponentKind, cocomponent_kind, is_free


class PreconditionError(GraphError):
    """Solver called outside its graph class."""


@dataclass(frozen=True)
class PartialBColouring:
    host: Graph
    s_prime: frozenset[int]
    colours: dict[int, int]
    analysis: TightAnalysis

    @property
    def m(self) -> int:
        return self.analysis.m


@dataclass(frozen=True)
class PartialViolation:
    clause: str  # "properness" | "t-distinct" | "colour-range" | "unique-neighbour"
    detail: str


@dataclass(frozen=True)
class DensePartition:
    t1: frozenset[int]
    t2: frozenset[int]
    t_prime: frozenset[int]
    s: frozenset[int]


def validate_partial(g: Graph, s_prime, colours: dict[int, int]) -> PartialBColouring | PartialViolation:
    """Check the two partial-b-colouring conditions.

    Returns the validated value, or the violated clause.  Domain errors
    (host not tight, S' outside the boundary, colours not covering T + S')
    raise instead: they are misuse, not "no" answers.
    """
    info = analyze_tight(g)
    if not info.is_tight:
        raise NotTightError("partial b-colourings are defined on tight graphs")
    s_prime = frozenset(s_prime)
    if not s_prime <= info.boundary:
        raise GraphError(f"S' must lie inside the dense boundary {sorted(info.boundary)}")
    domain = info.dense | s_prime
    if set(colours) != domain:
        raise GraphError("colours must be defined on exactly T and S'")

    m = info.m
    if any(not 1 <= colours[v] <= m for v in domain):
        return PartialViolation("colour-range", f"colours must lie in 1..{m}")
    t_cols = [colours[u] for u in sorted(info.dense)]
    if len(set(t_cols)) != m:
        return PartialViolation("t-distinct", "dense vertices must get pairwise distinct colours")
    for u in sorted(domain):
        for w in bits(g.adj[u]):
            if w in domain and w > u and colours[u] == colours[w]:
                return PartialViolation("properness", f"edge ({u}, {w}) is monochromatic")

    shared = {colours[s] for s in s_prime}
    for u in sorted(info.dense):
        if colours[u] not in shared:
            continue
        for w in sorted(info.dense - {u}):
            hits = sum(1 for x in bits(g.adj[w]) if x in domain and colours[x] == colours[u])
            if hits != 1:
                return PartialViolation(
                    "unique-neighbour",
                    f"dense vertex {w} has {hits} neighbours of colour {colours[u]}, needs exactly 1",
                )
    return PartialBColouring(g, s_prime, dict(colours), info)


def dense_partition(p: PartialBColouring) -> DensePartition:
    """Split T into dominating vertices, colour-shared vertices and the rest."""
    g, info = p.host, p.analysis
    dense = info.dense
    dense_mask = sum(1 << v for v in dense)
    t1 = frozenset(u for u in dense if g.adj[u] & dense_mask == dense_mask & ~(1 << u))
    shared_cols = {p.colours[s] for s in p.s_prime}
    t_prime = frozenset(u for u in dense if p.colours[u] in shared_cols)
    if t1 & t_prime:
        raise AssertionError("dominating dense vertices can never share a colour with the boundary")
    t2 = dense - t1 - t_prime
    return DensePartition(t1, t2, t_prime, info.boundary - p.s_prime)


def _greedy_complete(g: Graph, colour: list[int], m: int) -> None:
    # every uncoloured vertex is non-dense, hence has degree <= m-2
    for v in range(g.n):
        if colour[v]:
            continue
        taken = {colour[w] for w in bits(g.adj[v]) if colour[w]}
        for c in range(1, m + 1):
            if c not in taken:
                colour[v] = c
                break
        else:
            raise AssertionError("a non-dense vertex always has a free colour")


def extend_partial(p: PartialBColouring) -> Colouring | None:
    """Decide and construct a b-precolouring extension of ``p``.

    Returns a tight b-colouring extending the partial colouring, or None if
    no extension in the sense above exists.
    """
    g, info = p.host, p.analysis
    m = info.m
    part = dense_partition(p)
    colour = [0] * g.n
    for v, c in p.colours.items():
        colour[v] = c

    if not part.t2:
        if part.s:
            return None
        _greedy_complete(g, colour, m)
        return Colouring.from_values(colour)

    t2 = sorted(part.t2)
    s = sorted(part.s)
    if len(t2) != len(s):
        return None

    # Pairing graph: u in T2 may share its class with s iff they are
    # non-adjacent and no vertex of (T2 + T') - u sees both.
    t2t_mask = 0
    for v in part.t2 | part.t_prime:
        t2t_mask |= 1 << v
    aux_edges = []
    for i, u in enumerate(t2):
        for j, w in enumerate(s):
            if g.has_edge(u, w):
                continue
            if g.adj[u] & g.adj[w] & (t2t_mask & ~(1 << u)):
                continue
            aux_edges.append((i, len(t2) + j))
    aux = Graph.from_edges(len(t2) + len(s), aux_edges)
    matching = max_bipartite_matching(aux, set(range(len(t2))), set(range(len(t2), aux.n)))
    if len(matching) != len(t2):
        return None
    for a, b in matching.edges:
        if a > b:
            a, b = b, a
        colour[s[b - len(t2)]] = colour[t2[a]]
    _greedy_complete(g, colour, m)
    return Colouring.from_values(colour)


def is_b_precolouring_extension(p: PartialBColouring, c: Colouring) -> bool:
    """Check the two extension conditions against a full colouring: it must
    extend the partial colouring as a b-colouring, and no colour class with
    two or more boundary vertices may contain an uncoloured-boundary vertex."""
    from .graphs import is_b_colouring

    g = p.host
    if c.k != p.m or any(c.colours[v] != col for v, col in p.colours.items()):
        return False
    if not is_b_colouring(g, c):
        return False
    s_rest = p.analysis.boundary - p.s_prime
    for members in c.classes().values():
        in_boundary = [v for v in members if v in p.analysis.boundary]
        if len(in_boundary) >= 2 and any(v in s_rest for v in in_boundary):
            return False
    return True


# -- (2P2+P1)-free tight graphs ---------------------------------------------


def boundary_forcings(g: Graph, info: TightAnalysis) -> dict[int, int] | None:
    """Colour forcings implied by the T(u,s) completeness rule.

    For non-adjacent u in T and s in the boundary, T(u,s) holds the
    neighbours of s in T avoiding u.  When that set is non-empty and complete
    to the rest of T (minus u), s can only ever take u's colour.  Returns
    {boundary vertex: colour}, or None when two forcings clash, which already
    refutes the existence of a tight b-colouring.
    """
    dense = sorted(info.dense)
    dense_mask = sum(1 << v for v in dense)
    col_of = {u: i + 1 for i, u in enumerate(dense)}
    forced: dict[int, int] = {}
    for u in dense:
        for s in sorted(info.boundary):
            if g.has_edge(u, s):
                continue
            t_us = g.adj[s] & dense_mask & ~g.adj[u] & ~(1 << u)
            if not t_us:
                continue
            rest = dense_mask & ~t_us & ~(1 << u)
            if all(g.adj[v] & rest == rest for v in bits(t_us)):
                if s in forced and forced[s] != col_of[u]:
                    return None
                forced[s] = col_of[u]
    return forced


def tight_b_2p2p1_free(g: Graph) -> Colouring | None:
    """Tight b-colouring of a tight (2P2+P1)-free graph, or None.

    Colour T by 1..m, force boundary colours via the completeness rule,
    validate the resulting partial colouring, then run the extension test.
    """
    info = analyze_tight(g)
    if not info.is_tight:
        raise PreconditionError("input graph is not tight")
    if not is_free(g, "2P2+P1"):
        raise PreconditionError("input graph is not (2P2+P1)-free")

    forced = boundary_forcings(g, info)
    if forced is None:
        return None
    colours = {u: i + 1 for i, u in enumerate(sorted(info.dense))}
    colours.update(forced)
    partial = validate_partial(g, frozenset(forced), colours)
    if isinstance(partial, PartialViolation):
        return None
    return extend_partial(partial)


# -- (P3+P1)-free tight graphs -------------------------------------------------


def tight_b_clique_union(g: Graph) -> Colouring | None:
    """Tight b-colouring when every component of ``g`` is complete.

    Tightness forces a unique largest clique of size m; colouring it rainbow
    and reusing colours 1.. inside the smaller cliques keeps every class
    b-chromatic through the large clique.
    """
    info = analyze_tight(g)
    if not info.is_tight:
        raise PreconditionError("input graph is not tight")
    comps = g.component_masks()
    for mask in comps:
        for v in bits(mask):
            if g.adj[v] != mask & ~(1 << v):
                raise PreconditionError("a component is not a complete graph")
    m = info.m
    colour = [0] * g.n
    for mask in comps:
        for c, v in enumerate(bits(mask), start=1):
            colour[v] = c
    top = max(comps, key=lambda mask: mask.bit_count())
    assert top.bit_count() == m
    return Colouring.from_values(colour)


def tight_b_p3p1_free(g: Graph) -> Colouring | None:
    """Tight b-colouring of a tight (P3+P1)-free graph, or None.

    Splits into co-components G_i with dense parts T_i.  Since distinct
    co-components are complete to each other, |T_i| >= p_i + 1 always holds
    for p_i the maximum degree inside G_i, and any strict excess already
    refutes the colouring.  Otherwise every G_i is itself tight and the
    answers combine with disjoint colour ranges.
    """
    info = analyze_tight(g)
    if not info.is_tight:
        raise PreconditionError("input graph is not tight")
    if not is_free(g, "P3+P1"):
        raise PreconditionError("input graph is not (P3+P1)-free")

    parts = co_components(g)
    subs = [(vs, g.subgraph(vs)) for vs in parts]
    for vs, sub in subs:
        t_i = [v for v in vs if v in info.dense]
        p_i = sub.max_degree()
        if len(t_i) < p_i + 1:
            raise AssertionError("dense count below max inner degree + 1 is impossible in a tight graph")
        if len(t_i) > p_i + 1:
            return None

    colour = [0] * g.n
    offset = 0
    for vs, sub in subs:
        kind = cocomponent_kind(sub)
        if kind is CoComponentKind.THREE_P1_FREE:
            # no independent triple: in particular (2P2+P1)-free
            local = tight_b_2p2p1_free(sub)
        elif kind is CoComponentKind.CLIQUE_UNION:
            local = tight_b_clique_union(sub)
        else:
            raise PreconditionError("co-component is neither 3P1-free nor a union of cliques")
        if local is None:
            return None
        for idx, v in enumerate(vs):
            colour[v] = local.colours[idx] + offset
        offset += local.k
    assert offset == info.m
    return Colouring.from_values(colour)
