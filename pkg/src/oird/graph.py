"""Simple undirected graphs stored as per-vertex neighbour bitsets.

Vertices are the integers ``0..n-1``.  ``adj[v]`` is an int whose bit ``u`` is
set iff ``uv`` is an edge.  Every graph the package handles has at most 62
vertices (the short graph6 form), so neighbourhood tests are single integer
operations.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 62

GRAPH_CLASSES = ("path", "cycle", "complete", "star", "empty")


class GraphFormatError(ValueError):
    """Raised for malformed graph6 input.  ``offset`` is the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency length must equal n")
        full = (1 << self.n) - 1
        for v, nb in enumerate(self.adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour id >= n")
            if nb >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in bits(nb):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"edge {v}-{u} is not symmetric")

    # -- construction -------------------------------------------------------

    @classmethod
    def unchecked(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Skip validation; for enumeration loops whose adjacency is symmetric
        by construction."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", adj)
        return g

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    # -- basic queries -------------------------------------------------------

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def degrees(self) -> list[int]:
        return [popcount(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(popcount(nb) for nb in self.adj) // 2

    def is_independent(self, vertices: Iterable[int]) -> bool:
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return all(not (self.adj[v] & mask) for v in bits(mask))

    # -- derived graphs --------------------------------------------------------

    def induced_subgraph(self, vertices: Sequence[int]) -> tuple["Graph", tuple[int, ...]]:
        """Return ``G[vertices]`` relabelled ``0..k-1`` in the given order, plus
        the index map from new ids back to ids of ``self``."""
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            nb = 0
            for u in bits(self.adj[v]):
                if u in index:
                    nb |= 1 << index[u]
            adj.append(nb)
        return Graph(len(vertices), tuple(adj)), tuple(vertices)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Vertex ``v`` of ``self`` becomes vertex ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges()))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(self.adj)))

    def union(self, other: "Graph") -> "Graph":
        """Disjoint union; vertices of ``other`` are shifted by ``self.n``."""
        shift = self.n
        return Graph(self.n + other.n, self.adj + tuple(nb << shift for nb in other.adj))

    # -- serialisation ---------------------------------------------------------

    def to_graph6(self) -> str:
        return to_graph6(self)

    @classmethod
    def from_graph6(cls, text: str) -> "Graph":
        return from_graph6(text)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


# -- graph6 ---------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    if g.n > MAX_ORDER:
        raise ValueError(f"graph6 short form supports n <= {MAX_ORDER}, got {g.n}")
    out = [chr(g.n + 63)]
    acc = nbits = 0
    for j in range(1, g.n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc = nbits = 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    line = text.strip("\r\n")
    start = 0
    if line.startswith(">>graph6<<"):
        start = 10
    elif line.startswith(">>sparse6<<") or line.startswith(":"):
        raise GraphFormatError("sparse6 input is not supported", 0)
    elif line.startswith(">>digraph6<<") or line.startswith("&"):
        raise GraphFormatError("digraph6 input is not supported", 0)
    if len(line) <= start:
        raise GraphFormatError("missing order byte", start)
    for pos in range(start, len(line)):
        if not 63 <= ord(line[pos]) <= 126:
            raise GraphFormatError(f"character {line[pos]!r} outside graph6 range", pos)
    n = ord(line[start]) - 63
    if n == 63:
        raise GraphFormatError(f"orders above {MAX_ORDER} are not supported", start)
    body = line[start + 1:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) < need:
        raise GraphFormatError(f"truncated body: expected {need} bytes, got {len(body)}",
                               start + 1 + len(body))
    if len(body) > need:
        raise GraphFormatError("trailing bytes after graph body", start + 1 + need)
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    if k % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - k % 6)) - 1)
        if pad:
            raise GraphFormatError("nonzero padding bits", start + len(body))
    return Graph(n, tuple(adj))


def read_graph6_lines(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield from_graph6(line.strip())


# -- generators -----------------------------------------------------------------


def generate(kind: str, n: int) -> Graph:
    """Standard labelled graphs.  Paths and cycles are labelled in walk order;
    the star centre is vertex 0 and ``n`` counts all vertices."""
    minimum = 3 if kind == "cycle" else 1
    if kind not in GRAPH_CLASSES:
        raise ValueError(f"unknown graph class {kind!r}; expected one of {GRAPH_CLASSES}")
    if n < minimum:
        raise ValueError(f"{kind} requires n >= {minimum}, got {n}")
    if n > MAX_ORDER:
        raise ValueError(f"n must be <= {MAX_ORDER}")
    if kind == "path":
        return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))
    if kind == "complete":
        return Graph.from_edges(n, combinations(range(n), 2))
    if kind == "star":
        return Graph.from_edges(n, ((0, i) for i in range(1, n)))
    return Graph.empty(n)


def path(n: int) -> Graph:
    return generate("path", n)


def cycle(n: int) -> Graph:
    return generate("cycle", n)


def complete(n: int) -> Graph:
    return generate("complete", n)


def star(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return generate("star", leaves + 1)


# -- classical parameters -------------------------------------------------------


def _clique_cover_bound(adj: Sequence[int], cand: int) -> int:
    # greedy clique partition of the candidate set; upper-bounds its independence number
    count = 0
    while cand:
        low = cand & -cand
        clique = low
        common = adj[low.bit_length() - 1] & cand
        while common:
            nxt = common & -common
            clique |= nxt
            common &= adj[nxt.bit_length() - 1]
        cand &= ~clique
        count += 1
    return count


def independence_number(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Exact independence number with a witness set.

    Branches on the lowest candidate vertex, taking it before excluding it,
    and prunes with a greedy clique cover.  Only strict improvements replace
    the incumbent, so the witness is the lexicographically least maximum
    independent set.
    """
    adj = g.adj
    best_mask = 0
    best_size = -1

    def search(cand: int, chosen: int, size: int) -> None:
        nonlocal best_mask, best_size
        if not cand:
            if size > best_size:
                best_size, best_mask = size, chosen
            return
        if size + _clique_cover_bound(adj, cand) <= best_size:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        search(cand & ~low & ~adj[v], chosen | low, size + 1)
        # a vertex with no remaining candidate neighbours is in some optimum
        if adj[v] & cand:
            search(cand & ~low, chosen, size)

    search(g.vertex_mask, 0, 0)
    return best_size, tuple(bits(best_mask))


def vertex_cover_number(g: Graph) -> int:
    """beta(G) = n - alpha(G)."""
    return g.n - independence_number(g)[0]


def minimum_vertex_cover(g: Graph) -> tuple[int, ...]:
    _, indep = independence_number(g)
    chosen = set(indep)
    return tuple(v for v in range(g.n) if v not in chosen)


def find_induced_star(g: Graph, r: int) -> tuple[int, ...] | None:
    """Return ``(centre, leaf_1, ..., leaf_r)`` of an induced K_{1,r}, or None."""
    if r < 1:
        raise ValueError("r must be >= 1")
    for c in range(g.n):
        nb = g.adj[c]
        if popcount(nb) < r:
            continue
        local, index = g.induced_subgraph(list(bits(nb)))
        alpha, witness = independence_number(local)
        if alpha >= r:
            return (c,) + tuple(index[i] for i in witness[:r])
    return None


def find_claw(g: Graph) -> tuple[int, int, int, int] | None:
    """Return ``(centre, a, b, c)`` of an induced claw, or None if claw-free."""
    adj = g.adj
    for c in range(g.n):
        nb = adj[c]
        for a in bits(nb):
            rest_a = nb & ~adj[a] & ~((2 << a) - 1)
            for b in bits(rest_a):
                rest_b = rest_a & ~adj[b] & ~((2 << b) - 1)
                if rest_b:
                    return (c, a, b, (rest_b & -rest_b).bit_length() - 1)
    return None


def is_claw_free(g: Graph) -> bool:
    return find_claw(g) is None


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(component_masks(g)) == 1


def components(g: Graph) -> list[tuple[Graph, tuple[int, ...]]]:
    """Connected components as induced subgraphs, each with its index map into ``g``."""
    return [g.induced_subgraph(list(bits(mask))) for mask in component_masks(g)]


def bfs_order(g: Graph) -> list[int]:
    """Breadth-first vertex order, starting from the least unvisited vertex of
    each component and visiting neighbours by increasing id."""
    order: list[int] = []
    seen = 0
    for root in range(g.n):
        if seen >> root & 1:
            continue
        seen |= 1 << root
        queue = [root]
        i = 0
        while i < len(queue):
            v = queue[i]
            i += 1
            for u in bits(g.adj[v] & ~seen):
                seen |= 1 << u
                queue.append(u)
        order.extend(queue)
    return order


def leaves(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if popcount(g.adj[v]) == 1)


def strong_support_vertices(g: Graph) -> tuple[int, ...]:
    """Vertices adjacent to at least two leaves."""
    leaf_mask = 0
    for v in leaves(g):
        leaf_mask |= 1 << v
    return tuple(v for v in range(g.n) if popcount(g.adj[v] & leaf_mask) >= 2)


def strong_support_count(g: Graph) -> int:
    return len(strong_support_vertices(g))


def isolated_vertices(g: Graph) -> tuple[int, ...]:
    return tuple(v for v in range(g.n) if not g.adj[v])


def remove_isolated(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    return g.induced_subgraph([v for v in range(g.n) if g.adj[v]])
