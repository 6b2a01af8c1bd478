"""Commuting graphs and exact invariants of small simple graphs.

Adjacency is stored as Python ``int`` bitsets, one per vertex, which keeps the
branch-and-bound solvers cheap at a few hundred vertices.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import CommutativeSemigroup, UnknownFormat
from .semigroup import FiniteSemigroup, commutation_matrix


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class SimpleGraph:
    """Undirected loopless graph on ``0..V-1``.

    ``vertex_labels[v]`` is the semigroup element behind vertex ``v`` and
    ``names[v]`` its display name.
    """

    __slots__ = ("adj", "vertex_labels", "names")

    def __init__(self, adj: Sequence[int], vertex_labels: Sequence[int] | None = None,
                 names: Sequence[str] | None = None):
        self.adj = tuple(int(a) for a in adj)
        v = len(self.adj)
        for i, row in enumerate(self.adj):
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            for j in _bits(row):
                if j >= v or not self.adj[j] >> i & 1:
                    raise ValueError(f"adjacency not symmetric at ({i}, {j})")
        self.vertex_labels = tuple(vertex_labels) if vertex_labels is not None else tuple(range(v))
        if len(set(self.vertex_labels)) != v:
            raise ValueError("vertex labels must be distinct")
        self.names = tuple(names) if names is not None else tuple(str(x) for x in self.vertex_labels)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], **kwargs) -> "SimpleGraph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError("loops are not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(adj, **kwargs)

    @classmethod
    def from_matrix(cls, matrix, **kwargs) -> "SimpleGraph":
        m = np.asarray(matrix, dtype=bool)
        adj = [sum(1 << int(j) for j in np.flatnonzero(row)) for row in m]
        return cls(adj, **kwargs)

    @property
    def vertex_count(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return bin(self.adj[v]).count("1")

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(len(self.adj)) for v in _bits(self.adj[u]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(bin(a).count("1") for a in self.adj) // 2

    def to_matrix(self) -> np.ndarray:
        n = len(self.adj)
        m = np.zeros((n, n), dtype=bool)
        for u, v in self.edges():
            m[u, v] = m[v, u] = True
        return m

    def induced(self, vertices: Iterable[int]) -> "SimpleGraph":
        keep = sorted(set(vertices))
        pos = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(sum(1 << pos[u] for u in _bits(self.adj[v]) if u in pos))
        return SimpleGraph(adj, [self.vertex_labels[v] for v in keep],
                           [self.names[v] for v in keep])

    def __repr__(self) -> str:
        return f"<SimpleGraph V={self.vertex_count} E={self.edge_count}>"


def commuting_graph(S: FiniteSemigroup) -> SimpleGraph:
    """Graph on the non-central elements; ``x ~ y`` iff ``x != y`` and ``xy = yx``."""
    comm = commutation_matrix(S)
    central = comm.all(axis=1)
    verts = np.flatnonzero(~central)
    if verts.size == 0:
        raise CommutativeSemigroup(f"{S!r} is commutative: its commuting graph is empty")
    sub = comm[np.ix_(verts, verts)].copy()
    np.fill_diagonal(sub, False)
    return SimpleGraph.from_matrix(sub, vertex_labels=verts.tolist(),
                                   names=[S.label(int(x)) for x in verts])


# --------------------------------------------------------------------------
# Connectivity and distances


def _bfs_distances(G: SimpleGraph, root: int, allowed: int | None = None) -> dict[int, int]:
    dist = {root: 0}
    frontier = 1 << root
    seen = frontier
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for v in _bits(frontier):
            nxt |= G.adj[v]
        nxt &= ~seen
        if allowed is not None:
            nxt &= allowed
        for v in _bits(nxt):
            dist[v] = d
        seen |= nxt
        frontier = nxt
    return dist


def components(G: SimpleGraph) -> list[list[int]]:
    left = set(range(G.vertex_count))
    out = []
    while left:
        root = min(left)
        comp = sorted(_bfs_distances(G, root))
        left.difference_update(comp)
        out.append(comp)
    return out


def component_count(G: SimpleGraph) -> int:
    return len(components(G))


def cycle_space_dimension(G: SimpleGraph) -> int:
    """``E - V + C``: the number of independent cycles."""
    return G.edge_count - G.vertex_count + component_count(G)


def diameter(G: SimpleGraph) -> int | None:
    """Largest distance between two vertices; ``None`` if disconnected."""
    best = 0
    for v in range(G.vertex_count):
        dist = _bfs_distances(G, v)
        if len(dist) != G.vertex_count:
            return None
        best = max(best, max(dist.values()))
    return best


def girth(G: SimpleGraph) -> int | None:
    """Length of a shortest cycle, ``None`` for a forest.

    One BFS per root; a non-tree edge between depths ``d1`` and ``d2`` closes a
    closed walk of length ``d1 + d2 + 1`` through the root, which contains a
    cycle no longer than that.  The minimum over roots is attained by the root
    lying on a shortest cycle.
    """
    best: int | None = None
    n = G.vertex_count
    for root in range(n):
        depth = [-1] * n
        parent = [-1] * n
        depth[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            # every cycle closed from depth d has length at least 2d
            if best is not None and 2 * depth[u] >= best:
                break
            for w in _bits(G.adj[u]):
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif w != parent[u]:
                    length = depth[u] + depth[w] + 1
                    if best is None or length < best:
                        best = length
        if best == 3:
            break
    return best


# --------------------------------------------------------------------------
# Maximum clique


def _degeneracy_order(G: SimpleGraph) -> list[int]:
    """Vertices in smallest-last order (reversed removal order)."""
    n = G.vertex_count
    deg = [bin(a).count("1") for a in G.adj]
    alive = (1 << n) - 1
    removed = []
    for _ in range(n):
        v = min(_bits(alive), key=lambda u: (deg[u], u))
        removed.append(v)
        alive &= ~(1 << v)
        for w in _bits(G.adj[v] & alive):
            deg[w] -= 1
    return removed[::-1]


def max_clique(G: SimpleGraph) -> list[int]:
    """An exact maximum clique (vertex indices, ascending).

    Branch and bound in the style of Tomita's MCQ: candidates are greedily
    colour-classed and a branch is cut once ``|clique| + colour`` cannot beat
    the incumbent.
    """
    n = G.vertex_count
    if n == 0:
        return []
    order = _degeneracy_order(G)
    rank = {v: i for i, v in enumerate(order)}
    adj = G.adj
    best: list[int] = [order[0]]

    def colour_sort(cand: int) -> list[tuple[int, int]]:
        out = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                # lowest-rank vertex first keeps the ordering deterministic
                v = min(_bits(avail), key=rank.__getitem__)
                avail &= ~adj[v] & ~(1 << v)
                uncoloured &= ~(1 << v)
                out.append((v, colour))
        return out

    def expand(clique: list[int], cand: int) -> None:
        nonlocal best
        for v, colour in reversed(colour_sort(cand)):
            if len(clique) + colour <= len(best):
                return
            clique.append(v)
            sub = cand & adj[v]
            if sub:
                expand(clique, sub)
            elif len(clique) > len(best):
                best = list(clique)
            clique.pop()
            cand &= ~(1 << v)

    expand([], (1 << n) - 1)
    return sorted(best)


def clique_number(G: SimpleGraph) -> int:
    return len(max_clique(G))


# --------------------------------------------------------------------------
# Colouring


def dsatur_colouring(G: SimpleGraph) -> list[int]:
    """Greedy DSATUR colouring (upper bound for the chromatic number)."""
    n = G.vertex_count
    colours = [-1] * n
    seen: list[set[int]] = [set() for _ in range(n)]
    deg = [bin(a).count("1") for a in G.adj]
    for _ in range(n):
        v = max((u for u in range(n) if colours[u] < 0),
                key=lambda u: (len(seen[u]), deg[u], -u))
        c = 0
        while c in seen[v]:
            c += 1
        colours[v] = c
        for w in _bits(G.adj[v]):
            seen[w].add(c)
    return colours


def k_colouring(G: SimpleGraph, k: int, seed: Sequence[int] = ()) -> list[int] | None:
    """A proper colouring with at most ``k`` colours, or ``None``.

    Backtracking with saturation-degree branching.  ``seed`` vertices (usually a
    clique) are pre-coloured ``0, 1, ...`` to break colour symmetry.
    """
    n = G.vertex_count
    if n == 0:
        return []
    if k <= 0:
        return None
    adj = G.adj
    colours = [-1] * n
    # counts[v][c]: coloured neighbours of v using colour c
    counts = [[0] * k for _ in range(n)]
    deg = [bin(a).count("1") for a in adj]

    def assign(v: int, c: int) -> None:
        colours[v] = c
        for w in _bits(adj[v]):
            counts[w][c] += 1

    def unassign(v: int) -> None:
        c = colours[v]
        colours[v] = -1
        for w in _bits(adj[v]):
            counts[w][c] -= 1

    for c, v in enumerate(seed):
        if c >= k:
            return None
        if any(colours[w] == c for w in _bits(adj[v])):
            return None
        assign(v, c)

    uncoloured = n - len(seed)

    def solve(remaining: int, used: int) -> bool:
        if remaining == 0:
            return True
        best_v, best_key = -1, None
        for v in range(n):
            if colours[v] >= 0:
                continue
            sat = sum(1 for c in range(k) if counts[v][c])
            if sat == k:
                return False
            key = (sat, deg[v])
            if best_key is None or key > best_key:
                best_v, best_key = v, key
        v = best_v
        # a colour never used so far is interchangeable with any other unused one
        for c in range(min(k, used + 1)):
            if counts[v][c]:
                continue
            assign(v, c)
            if solve(remaining - 1, max(used, c + 1)):
                return True
            unassign(v)
        return False

    if solve(uncoloured, len(seed)):
        return colours
    return None


def chromatic_colouring(G: SimpleGraph) -> list[int]:
    """An optimal colouring, found by raising ``k`` from the clique number."""
    if G.vertex_count == 0:
        return []
    clique = max_clique(G)
    greedy = dsatur_colouring(G)
    upper = max(greedy) + 1
    for k in range(len(clique), upper):
        found = k_colouring(G, k, seed=clique)
        if found is not None:
            return found
    return greedy


def chromatic_number(G: SimpleGraph) -> int:
    colours = chromatic_colouring(G)
    return max(colours) + 1 if colours else 0


# --------------------------------------------------------------------------
# Left paths and knit degree


@dataclass(frozen=True)
class LeftPathWitness:
    """A path ``x_1 - ... - x_k`` of semigroup elements with ``x_1 x_i = x_k x_i``."""

    vertices: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    def is_valid(self, S: FiniteSemigroup) -> bool:
        xs = self.vertices
        if len(xs) < 2 or xs[0] == xs[-1] or len(set(xs)) != len(xs):
            return False
        t = S.table
        comm = commutation_matrix(S)
        central = comm.all(axis=1)
        if any(central[x] for x in xs):
            return False
        for a, b in zip(xs, xs[1:]):
            if t[a, b] != t[b, a]:
                return False
        first, last = xs[0], xs[-1]
        return all(t[first, x] == t[last, x] for x in xs)


def _shortest_path(G: SimpleGraph, src: int, dst: int, allowed: int) -> list[int] | None:
    parent = {src: -1}
    frontier = [src]
    seen = 1 << src
    while frontier:
        nxt = []
        for u in frontier:
            for w in _bits(G.adj[u] & allowed & ~seen):
                seen |= 1 << w
                parent[w] = u
                if w == dst:
                    path = [w]
                    while parent[path[-1]] >= 0:
                        path.append(parent[path[-1]])
                    return path[::-1]
                nxt.append(w)
        frontier = nxt
    return None


def knit_degree(S: FiniteSemigroup, G: SimpleGraph | None = None
                ) -> tuple[int, LeftPathWitness] | None:
    """Length of a shortest left path of the commuting graph, with a witness.

    Endpoints ``a, b`` need ``aa = ba`` and ``ab = bb``; every vertex ``z`` of a
    left path between them satisfies ``az = bz``, so the search is a BFS inside
    the subgraph induced by those ``z``.  ``None`` when no left path exists.
    """
    if G is None:
        G = commuting_graph(S)
    verts = np.asarray(G.vertex_labels, dtype=np.int64)
    t = S.table
    sub = t[np.ix_(verts, verts)]
    diag = np.diagonal(sub)
    # ok[a, b]: aa = ba and ab = bb (vertex positions)
    ok = (diag[:, None] == sub.T) & (sub == diag[None, :])
    np.fill_diagonal(ok, False)
    pairs = [(int(a), int(b)) for a, b in np.argwhere(np.triu(ok))]
    if not pairs:
        return None
    for a, b in pairs:
        if G.has_edge(a, b):
            return 1, LeftPathWitness((int(verts[a]), int(verts[b])))
    rows = t[verts][:, verts]
    best: list[int] | None = None
    for a, b in pairs:
        same = np.flatnonzero(rows[a] == rows[b])
        allowed = sum(1 << int(z) for z in same)
        path = _shortest_path(G, a, b, allowed)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
            if len(best) == 3:
                break
    if best is None:
        return None
    return len(best) - 1, LeftPathWitness(tuple(int(verts[v]) for v in best))


# --------------------------------------------------------------------------
# Summary and export


@dataclass(frozen=True)
class GraphMetrics:
    vertex_count: int
    edge_count: int
    component_count: int
    cycle_space_dim: int
    girth: int | None
    clique_number: int
    chromatic_number: int
    diameter: int | None

    def as_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": self.edge_count,
            "components": self.component_count,
            "cycle_space_dim": self.cycle_space_dim,
            "girth": self.girth,
            "clique_number": self.clique_number,
            "chromatic_number": self.chromatic_number,
            "diameter": self.diameter,
        }


def graph_metrics(G: SimpleGraph) -> GraphMetrics:
    comps = component_count(G)
    return GraphMetrics(
        vertex_count=G.vertex_count,
        edge_count=G.edge_count,
        component_count=comps,
        cycle_space_dim=G.edge_count - G.vertex_count + comps,
        girth=girth(G),
        clique_number=clique_number(G),
        chromatic_number=chromatic_number(G),
        diameter=diameter(G),
    )


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export(G: SimpleGraph, fmt: str, metrics: GraphMetrics | None = None,
           name: str = "G") -> bytes:
    """Serialise as ``dot`` or ``json``; vertices keep element order, edges are sorted."""
    fmt = fmt.lower()
    if fmt == "dot":
        lines = [f"graph {_dot_quote(name)} {{"]
        for v, label in enumerate(G.names):
            lines.append(f"  v{v} [label={_dot_quote(label)}];")
        for u, v in G.edges():
            lines.append(f"  v{u} -- v{v};")
        lines.append("}")
        return ("\n".join(lines) + "\n").encode()
    if fmt == "json":
        doc = {
            "vertices": list(G.names),
            "edges": [list(e) for e in G.edges()],
            "metrics": (metrics or graph_metrics(G)).as_dict(),
        }
        return json.dumps(doc, sort_keys=False).encode()
    raise UnknownFormat(f"unknown export format {fmt!r} (expected dot or json)")
