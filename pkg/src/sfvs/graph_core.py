"""Small immutable string-labeled graph type plus the handful of graph
algorithms the package needs: forest checking, cycle extraction, edge
contraction, relabeling, and a flat-file edge list format.

LabeledGraph stores a sorted adjacency map of tuples and is hashable-free
but equality-comparable; all mutation happens through build_graph.  The
int-indexed Multigraph at the bottom is the scratch structure used by the
exact solver and is deliberately mutable.
"""

from __future__ import annotations

from collections import deque

__all__ = [
    "GraphError",
    "LabeledGraph",
    "Multigraph",
    "build_graph",
    "contract_edges",
    "export_dot",
    "export_edgelist",
    "find_cycle",
    "import_edgelist",
    "is_forest",
    "relabel",
]


class GraphError(ValueError):
    pass


class LabeledGraph:
    """Immutable undirected simple graph over string vertex labels."""

    __slots__ = ("_adj", "_size")

    def __init__(self, adj, size):
        # internal: use build_graph
        self._adj = adj
        self._size = size

    @property
    def order(self) -> int:
        return len(self._adj)

    @property
    def size(self) -> int:
        return self._size

    def vertices(self) -> list:
        """All labels in sorted order."""
        return list(self._adj)

    def neighbors(self, v: str):
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"no such vertex: {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def __contains__(self, v) -> bool:
        return v in self._adj

    def has_edge(self, u: str, v: str) -> bool:
        return v in set(self.neighbors(u))

    def edges(self):
        """All edges as sorted (u, v) pairs with u < v, in sorted order."""
        out = []
        for u, nbrs in self._adj.items():
            for v in nbrs:
                if u < v:
                    out.append((u, v))
        return out

    def induced(self, subset) -> "LabeledGraph":
        keep = set(subset)
        missing = keep - self._adj.keys()
        if missing:
            raise GraphError(f"no such vertex: {min(missing)!r}")
        adj = {}
        size = 0
        for u in sorted(keep):
            nbrs = tuple(v for v in self._adj[u] if v in keep)
            adj[u] = nbrs
            size += len(nbrs)
        return LabeledGraph(adj, size // 2)

    def components(self):
        """Connected components as sorted lists of labels, sorted by their
        first label."""
        seen = set()
        out = []
        for start in self._adj:
            if start in seen:
                continue
            comp = []
            queue = deque([start])
            seen.add(start)
            while queue:
                u = queue.popleft()
                comp.append(u)
                for v in self._adj[u]:
                    if v not in seen:
                        seen.add(v)
                        queue.append(v)
            out.append(sorted(comp))
        out.sort(key=lambda c: c[0])
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabeledGraph):
            return NotImplemented
        return self._adj == other._adj

    def __ne__(self, other) -> bool:
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    __hash__ = None

    def __repr__(self):
        return f"<LabeledGraph order={self.order} size={self.size}>"


def build_graph(vertices, edges) -> LabeledGraph:
    """Construct a LabeledGraph.  Duplicate edges collapse; loops and edges
    touching undeclared vertices are rejected."""
    adj = {str(v): set() for v in vertices}
    for u, v in edges:
        u, v = str(u), str(v)
        if u == v:
            raise GraphError(f"self-loop at {u!r}")
        for x in (u, v):
            if x not in adj:
                raise GraphError(f"edge endpoint {x!r} is not a declared vertex")
        adj[u].add(v)
        adj[v].add(u)
    final = {u: tuple(sorted(nbrs)) for u, nbrs in sorted(adj.items())}
    size = sum(len(nbrs) for nbrs in final.values()) // 2
    return LabeledGraph(final, size)


def _subset_vertices(g: LabeledGraph, subset):
    if subset is None:
        return set(g.vertices())
    keep = set(subset)
    missing = keep - set(g.vertices())
    if missing:
        raise GraphError(f"no such vertex: {min(missing)!r}")
    return keep


def is_forest(g: LabeledGraph, subset=None) -> bool:
    """True when the subgraph induced by subset (default: all of g) is
    acyclic.  Union-find, so near-linear."""
    keep = _subset_vertices(g, subset)
    parent = {v: v for v in keep}

    def find(x):
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for u in keep:
        for v in g.neighbors(u):
            if u < v and v in keep:
                ru, rv = find(u), find(v)
                if ru == rv:
                    return False
                parent[ru] = rv
    return True


def find_cycle(g: LabeledGraph, subset=None):
    """A cycle in the induced subgraph as a closed vertex list
    [v0, v1, ..., v0], or None if the subgraph is a forest."""
    keep = _subset_vertices(g, subset)
    parent = {}
    for start in sorted(keep):
        if start in parent:
            continue
        parent[start] = start
        stack = [(start, start)]
        while stack:
            u, from_v = stack.pop()
            for v in g.neighbors(u):
                if v not in keep or v == from_v:
                    continue
                if v in parent:
                    # non-tree edge; join the two ancestries at their
                    # lowest common vertex
                    up_u = [u]
                    while parent[up_u[-1]] != up_u[-1]:
                        up_u.append(parent[up_u[-1]])
                    up_v = [v]
                    while parent[up_v[-1]] != up_v[-1]:
                        up_v.append(parent[up_v[-1]])
                    i, j = len(up_u) - 1, len(up_v) - 1
                    while i > 0 and j > 0 and up_u[i - 1] == up_v[j - 1]:
                        i -= 1
                        j -= 1
                    cycle = up_u[: i + 1] + up_v[:j][::-1] + [u]
                    assert len(cycle) >= 4
                    return cycle
                parent[v] = u
                stack.append((v, u))
    return None


def contract_edges(g: LabeledGraph, contraction, merged_name) -> LabeledGraph:
    """Contract a set of pairwise disjoint edges.

    contraction is an iterable of (u, v) pairs that must form a matching in
    g; merged_name(u, v) names the merged vertex.  Name collisions with
    surviving vertices or between merged vertices raise GraphError.
    """
    mapping = {}
    for u, v in contraction:
        u, v = str(u), str(v)
        if not g.has_edge(u, v):
            raise GraphError(f"cannot contract non-edge ({u!r}, {v!r})")
        if u in mapping or v in mapping:
            raise GraphError(f"contraction is not a matching at ({u!r}, {v!r})")
        name = str(merged_name(u, v))
        mapping[u] = name
        mapping[v] = name

    def image(x):
        return mapping.get(x, x)

    # every merged name must absorb exactly its own two endpoints
    counts = {}
    for x in g.vertices():
        counts[image(x)] = counts.get(image(x), 0) + 1
    merged = set(mapping.values())
    for name, cnt in counts.items():
        if cnt != (2 if name in merged else 1):
            raise GraphError(f"contracted name {name!r} collides")

    edges = set()
    for u, v in g.edges():
        iu, iv = image(u), image(v)
        if iu != iv:
            edges.add((min(iu, iv), max(iu, iv)))
    return build_graph(counts.keys(), edges)


def relabel(g: LabeledGraph, func) -> LabeledGraph:
    """Apply an injective renaming function to every vertex."""
    mapping = {v: str(func(v)) for v in g.vertices()}
    if len(set(mapping.values())) != len(mapping):
        raise GraphError("relabeling is not injective")
    return build_graph(
        mapping.values(),
        ((mapping[u], mapping[v]) for u, v in g.edges()),
    )


def export_edgelist(g: LabeledGraph) -> str:
    """Plain text form: one tab-separated edge per line, isolated vertices
    as bare single-field lines, everything sorted."""
    lines = [f"{u}\t{v}" for u, v in g.edges()]
    lines.extend(v for v in g.vertices() if g.degree(v) == 0)
    lines.sort()
    return "\n".join(lines) + ("\n" if lines else "")


def import_edgelist(text: str) -> LabeledGraph:
    vertices = set()
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) == 1:
            vertices.add(parts[0])
        elif len(parts) == 2:
            vertices.update(parts)
            edges.append((parts[0], parts[1]))
        else:
            raise GraphError(f"line {lineno}: expected 1 or 2 fields, got {len(parts)}")
    return build_graph(vertices, edges)


def export_dot(g: LabeledGraph, name: str = "g") -> str:
    def q(s: str) -> str:
        return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'

    lines = [f"graph {q(name)} {{"]
    for v in g.vertices():
        if g.degree(v) == 0:
            lines.append(f"  {q(v)};")
    for u, v in g.edges():
        lines.append(f"  {q(u)} -- {q(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


class Multigraph:
    """Mutable int-indexed multigraph used by the exact solver.

    adj[v] maps neighbor -> multiplicity; a loop at v is stored once at
    adj[v][v] and contributes 2 to the degree per copy.  Vertices are
    never removed from the list, only marked dead in alive.
    """

    __slots__ = ("adj", "alive")

    def __init__(self, n: int):
        self.adj = [dict() for _ in range(n)]
        self.alive = [True] * n

    @classmethod
    def from_labeled(cls, g: LabeledGraph):
        """Build a Multigraph plus the index -> label table, indices in
        label order."""
        labels = sorted(g.vertices())
        index = {v: i for i, v in enumerate(labels)}
        mg = cls(len(labels))
        for u, v in g.edges():
            mg.add_edge(index[u], index[v])
        return mg, labels

    def add_edge(self, u: int, v: int, mult: int = 1):
        if u == v:
            self.adj[u][u] = self.adj[u].get(u, 0) + mult
        else:
            self.adj[u][v] = self.adj[u].get(v, 0) + mult
            self.adj[v][u] = self.adj[v].get(u, 0) + mult

    def remove_vertex(self, v: int):
        for u in list(self.adj[v]):
            if u != v:
                del self.adj[u][v]
        self.adj[v].clear()
        self.alive[v] = False

    def degree(self, v: int) -> int:
        d = 0
        for u, mult in self.adj[v].items():
            d += 2 * mult if u == v else mult
        return d

    def has_loop(self, v: int) -> bool:
        return v in self.adj[v]

    def live_vertices(self):
        return [v for v in range(len(self.alive)) if self.alive[v]]

    def copy(self) -> "Multigraph":
        out = Multigraph(0)
        out.adj = [dict(d) for d in self.adj]
        out.alive = list(self.alive)
        return out

    def edge_count(self) -> int:
        total = 0
        for v, nbrs in enumerate(self.adj):
            for u, mult in nbrs.items():
                if u == v:
                    total += 2 * mult
                else:
                    total += mult
        return total // 2
