"""Maximum matching: augmenting paths on bipartite graphs and Edmonds'
blossom contraction on general graphs.

The bipartite matcher feeds the precolouring-extension test (the auxiliary
graph built there is bipartite by construction); the general matcher is
needed for perfect matchings in complements, which are usually not
bipartite.  Both scan vertices in index order so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .graphs import Graph, GraphError, bits


@dataclass(frozen=True)
class Matching:
    """Set of pairwise disjoint edges, each an edge of the host graph."""

    edges: frozenset[tuple[int, int]]

    def __len__(self) -> int:
        return len(self.edges)

    def covered(self) -> frozenset[int]:
        return frozenset(v for e in self.edges for v in e)

    def partner(self) -> dict[int, int]:
        out = {}
        for u, v in self.edges:
            out[u] = v
            out[v] = u
        return out


def check_matching(g: Graph, m: Matching) -> None:
    seen: set[int] = set()
    for u, v in m.edges:
        if not g.has_edge(u, v):
            raise GraphError(f"matching pair ({u}, {v}) is not an edge")
        if u in seen or v in seen:
            raise GraphError(f"matching pair ({u}, {v}) shares a vertex")
        seen.update((u, v))


def _matching_from_partner(match: list[int]) -> Matching:
    return Matching(frozenset((u, match[u]) for u in range(len(match)) if match[u] > u))


def max_bipartite_matching(g: Graph, left: frozenset[int] | set[int],
                           right: frozenset[int] | set[int]) -> Matching:
    """Maximum matching of a bipartite graph given its bipartition.

    Raises GraphError unless left and right partition the vertex set and
    every edge crosses the partition.
    """
    left = frozenset(left)
    right = frozenset(right)
    if left & right or left | right != set(g.vertices()):
        raise GraphError("left and right must partition the vertex set")
    lmask = sum(1 << v for v in left)
    for u in left:
        if g.adj[u] & lmask:
            raise GraphError("edge inside the left class: graph is not bipartitioned as given")

    match = [-1] * g.n

    def try_augment(u: int, visited: set[int]) -> bool:
        for w in bits(g.adj[u]):
            if w in visited:
                continue
            visited.add(w)
            if match[w] == -1 or try_augment(match[w], visited):
                match[u] = w
                match[w] = u
                return True
        return False

    for u in sorted(left):
        if match[u] == -1:
            try_augment(u, set())
    return _matching_from_partner(match)


def maximum_matching(g: Graph) -> Matching:
    """Maximum matching in an arbitrary graph (blossom contraction)."""
    n = g.n
    match = [-1] * n
    # Greedy seed keeps the number of augmenting phases small.
    for u in range(n):
        if match[u] == -1:
            for w in bits(g.adj[u]):
                if match[w] == -1:
                    match[u] = w
                    match[w] = u
                    break

    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def lca(a: int, b: int) -> int:
        on_path = [False] * n
        v = a
        while True:
            v = base[v]
            on_path[v] = True
            if match[v] == -1:
                break
            v = p[match[v]]
        v = b
        while True:
            v = base[v]
            if on_path[v]:
                return v
            v = p[match[v]]

    def find_augmenting(root: int) -> int:
        for i in range(n):
            p[i] = -1
            base[i] = i
            used[i] = False
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in bits(g.adj[v]):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # Odd cycle through the root of the tree: contract it.
                    curbase = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, curbase, to)
                    mark_path(to, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    q.append(match[to])
        return -1

    for v in range(n):
        if match[v] != -1:
            continue
        to = find_augmenting(v)
        while to != -1:
            pv = p[to]
            ppv = match[pv]
            match[to] = pv
            match[pv] = to
            to = ppv

    return _matching_from_partner(match)


def perfect_matching(g: Graph) -> Matching | None:
    """A perfect matching if one exists, else None (odd order included)."""
    if g.n % 2 == 1:
        return None
    m = maximum_matching(g)
    return m if 2 * len(m) == g.n else None
