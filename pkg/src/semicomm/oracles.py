"""Slow brute-force reference computations.

Nothing here shares code with the fast paths in ``commgraph``, ``semigroup``
or ``enumeration``; they exist to cross-check them on small inputs.
"""

from __future__ import annotations

import random
from itertools import combinations, permutations, product

from .commgraph import SimpleGraph


def associativity_violation(table) -> tuple[int, int, int] | None:
    n = len(table)
    for a in range(n):
        for b in range(n):
            for c in range(n):
                if table[table[a][b]][c] != table[a][table[b][c]]:
                    return a, b, c
    return None


def _neighbour_sets(G: SimpleGraph) -> list[set[int]]:
    return [set(G.neighbours(v)) for v in range(G.vertex_count)]


def girth(G: SimpleGraph) -> int | None:
    """Try cycle lengths 3, 4, ... by extending simple paths from their least vertex."""
    nbrs = _neighbour_sets(G)
    n = G.vertex_count

    def has_cycle(length: int) -> bool:
        def extend(path: list[int]) -> bool:
            last = path[-1]
            if len(path) == length:
                return path[0] in nbrs[last]
            for w in nbrs[last]:
                if w > path[0] and w not in path and extend(path + [w]):
                    return True
            return False
        return any(extend([s]) for s in range(n))

    for length in range(3, n + 1):
        if has_cycle(length):
            return length
    return None


def clique_number(G: SimpleGraph) -> int:
    nbrs = _neighbour_sets(G)
    for size in range(G.vertex_count, 0, -1):
        for sub in combinations(range(G.vertex_count), size):
            if all(v in nbrs[u] for u, v in combinations(sub, 2)):
                return size
    return 0


def chromatic_number(G: SimpleGraph) -> int:
    """Fewest independent sets covering the vertices, by subset dynamic programming."""
    n = G.vertex_count
    if n == 0:
        return 0
    nbr_mask = [0] * n
    for u, v in G.edges():
        nbr_mask[u] |= 1 << v
        nbr_mask[v] |= 1 << u
    full = (1 << n) - 1
    independent = [True] * (1 << n)
    for mask in range(1, 1 << n):
        low = (mask & -mask).bit_length() - 1
        rest = mask & (mask - 1)
        independent[mask] = independent[rest] and not (nbr_mask[low] & rest)
    best = [0] + [n + 1] * full
    for mask in range(1, 1 << n):
        low = mask & -mask
        sub = mask
        while sub:
            if sub & low and independent[sub]:
                cand = best[mask ^ sub] + 1
                if cand < best[mask]:
                    best[mask] = cand
            sub = (sub - 1) & mask
    return best[full]


def is_proper_colouring(G: SimpleGraph, colours) -> bool:
    return all(colours[u] != colours[v] for u, v in G.edges())


def random_graph(rng: random.Random, max_vertices: int = 12) -> SimpleGraph:
    n = rng.randint(1, max_vertices)
    p = rng.random()
    edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p]
    return SimpleGraph.from_edges(n, edges)


def semigroup_tables(n: int) -> list[tuple[int, ...]]:
    """Every associative flat table of order ``n`` by exhausting all ``n^(n^2)``."""
    out = []
    for flat in product(range(n), repeat=n * n):
        t = [flat[i * n:(i + 1) * n] for i in range(n)]
        if associativity_violation(t) is None:
            out.append(flat)
    return out


def isomorphism_classes(n: int) -> int:
    """Number of associative tables of order ``n`` up to relabelling (not anti-isomorphism)."""
    seen: set[tuple[int, ...]] = set()
    classes = 0
    perms = list(permutations(range(n)))
    for flat in semigroup_tables(n):
        if flat in seen:
            continue
        classes += 1
        for p in perms:
            inv = [0] * n
            for i, v in enumerate(p):
                inv[v] = i
            seen.add(tuple(p[flat[inv[a] * n + inv[b]]] for a in range(n) for b in range(n)))
    return classes


def knit_degree(table, vertices, edges) -> int | None:
    """Shortest left path found by walking every simple path of the graph."""
    nbrs: dict[int, set[int]] = {v: set() for v in vertices}
    for u, v in edges:
        nbrs[u].add(v)
        nbrs[v].add(u)
    best: int | None = None

    def walk(path: list[int]) -> None:
        nonlocal best
        if best is not None and len(path) - 1 >= best:
            return
        first, last = path[0], path[-1]
        if len(path) > 1 and all(table[first][x] == table[last][x] for x in path):
            best = len(path) - 1
            return
        for w in nbrs[last]:
            if w not in path:
                walk(path + [w])

    for v in vertices:
        walk([v])
    return best
