"""Outer-independent rainbow dominating functions.

A label is a bitmask over the colours: bit ``c - 1`` set means colour ``c``
is present, so for two colours ``0`` is the empty set, ``1`` is {1}, ``2`` is
{2} and ``3`` is {1, 2}.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .graph import Graph, bfs_order, bits, components, from_graph6, popcount

BRUTE_FORCE_MAX_ORDER = 12
ENUMERATION_MAX_ORDER = 12

CERTIFICATE_SCHEMA = {
    "type": "object",
    "properties": {
        "graph6": {"type": "string"},
        "k": {"type": "integer", "minimum": 1},
        "labels": {
            "type": "array",
            "items": {"type": "array", "items": {"type": "integer", "minimum": 1}},
        },
        "weight": {"type": "integer", "minimum": 0},
    },
    "required": ["graph6", "k", "labels", "weight"],
    "additionalProperties": False,
}


class OrderTooLarge(ValueError):
    """The requested exhaustive computation exceeds its hard size cap."""


def label_colors(mask: int) -> list[int]:
    return [c + 1 for c in bits(mask)]


def colors_label(colors: Sequence[int]) -> int:
    mask = 0
    for c in colors:
        if c < 1:
            raise ValueError(f"colours are positive integers, got {c}")
        mask |= 1 << (c - 1)
    return mask


@dataclass(frozen=True)
class RainbowAssignment:
    labels: tuple[int, ...]
    k: int = 2

    def __post_init__(self):
        top = 1 << self.k
        for v, lab in enumerate(self.labels):
            if not 0 <= lab < top:
                raise ValueError(f"label {lab} at vertex {v} is not a subset of 1..{self.k}")

    @classmethod
    def from_sets(cls, sets: Sequence[Sequence[int]], k: int = 2) -> "RainbowAssignment":
        return cls(tuple(colors_label(s) for s in sets), k)

    def __len__(self) -> int:
        return len(self.labels)

    @property
    def weight(self) -> int:
        return sum(popcount(lab) for lab in self.labels)

    def parts(self) -> dict[int, tuple[int, ...]]:
        """Vertices grouped by label, e.g. ``parts()[0]`` is the empty class."""
        out: dict[int, list[int]] = {lab: [] for lab in range(1 << self.k)}
        for v, lab in enumerate(self.labels):
            out[lab].append(v)
        return {lab: tuple(vs) for lab, vs in out.items()}

    def empty_set(self) -> tuple[int, ...]:
        return tuple(v for v, lab in enumerate(self.labels) if lab == 0)

    def as_lists(self) -> list[list[int]]:
        return [label_colors(lab) for lab in self.labels]

    def __str__(self) -> str:
        return "(" + ", ".join("{" + ",".join(map(str, s)) + "}" if s else "∅"
                               for s in self.as_lists()) + ")"


@dataclass(frozen=True)
class Violation:
    kind: str  # "rainbow-deficit" or "adjacent-empty"
    vertices: tuple[int, ...]
    missing: tuple[int, ...] = ()

    def __str__(self) -> str:
        if self.kind == "rainbow-deficit":
            return f"vertex {self.vertices[0]} is empty but its neighbourhood lacks colours {list(self.missing)}"
        return f"empty vertices {self.vertices[0]} and {self.vertices[1]} are adjacent"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.valid


def verify(g: Graph, f: RainbowAssignment | Sequence[int], k: int | None = None) -> Verdict:
    """Check the rainbow condition on every empty vertex and independence of
    the empty class.  Every failure is reported, not just the first."""
    if not isinstance(f, RainbowAssignment):
        f = RainbowAssignment(tuple(f), 2 if k is None else k)
    k = f.k if k is None else k
    if len(f.labels) != g.n:
        raise ValueError(f"assignment has {len(f.labels)} labels for a graph of order {g.n}")
    if not 1 <= k <= 3:
        raise ValueError(f"k must be 1, 2 or 3, got {k}")
    full = (1 << k) - 1
    labels = f.labels
    if any(lab & ~full for lab in labels):
        raise ValueError(f"labels use colours outside 1..{k}")
    violations = []
    empty = 0
    for v, lab in enumerate(labels):
        if lab == 0:
            empty |= 1 << v
    for v in bits(empty):
        seen = 0
        for u in bits(g.adj[v]):
            seen |= labels[u]
        if seen != full:
            violations.append(Violation("rainbow-deficit", (v,), tuple(label_colors(full & ~seen))))
        for u in bits(g.adj[v] & empty):
            if u > v:
                violations.append(Violation("adjacent-empty", (v, u)))
    return Verdict(not violations, tuple(violations))


@dataclass
class Certificate:
    graph: Graph
    assignment: RainbowAssignment
    weight: int
    verdict: Verdict = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.weight != self.assignment.weight:
            raise ValueError(f"stated weight {self.weight} != label weight {self.assignment.weight}")
        if self.verdict is None:
            self.verdict = verify(self.graph, self.assignment)

    @classmethod
    def build(cls, g: Graph, f: RainbowAssignment | Sequence[int]) -> "Certificate":
        if not isinstance(f, RainbowAssignment):
            f = RainbowAssignment(tuple(f))
        return cls(g, f, f.weight)

    @property
    def valid(self) -> bool:
        return self.verdict.valid

    def to_dict(self) -> dict:
        return {
            "graph6": self.graph.to_graph6(),
            "k": self.assignment.k,
            "labels": self.assignment.as_lists(),
            "weight": self.weight,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "Certificate":
        """Load a certificate; the stored weight must match the labels, the
        verdict is always recomputed."""
        for key in ("graph6", "k", "labels", "weight"):
            if key not in data:
                raise ValueError(f"certificate is missing {key!r}")
        g = from_graph6(data["graph6"])
        f = RainbowAssignment.from_sets(data["labels"], int(data["k"]))
        return cls(g, f, int(data["weight"]))

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        return cls.from_dict(json.loads(text))


# -- exact solver -----------------------------------------------------------------


def _clique_cover(adj: Sequence[int], cand: int) -> int:
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


FRONTIER_MAX_WIDTH = 5
FRONTIER_MIN_ORDER = 16
SOLVER_METHODS = ("auto", "search", "frontier")


def solve_exact(g: Graph, method: str = "auto") -> tuple[int, Certificate]:
    """Exact OI2RD number with a certificate.

    Components are solved one at a time, by one of two exact methods.

    ``search`` is a depth-first branch and bound over the vertices in BFS
    order, trying labels in the order empty, {1}, {2}, {1,2}; isolated
    vertices are fixed to {1}.  Each component gets the first optimum met in
    that order.  Colour symmetry is broken by requiring the first singleton
    label to be {1}, which never excludes that first optimum.

    ``frontier`` is a dynamic program along a vertex order of small frontier
    width.  Its cost grows with the width rather than the order, so it wins
    on long sparse graphs such as rooted products, where the clique bound of
    the search is weak.

    ``auto`` uses the frontier method for components with at least
    ``FRONTIER_MIN_ORDER`` vertices and an order of width at most
    ``FRONTIER_MAX_WIDTH``, and the search otherwise.
    """
    if method not in SOLVER_METHODS:
        raise ValueError(f"unknown solver method {method!r}")
    parts = components(g)
    if len(parts) <= 1:
        return _solve_component(g, method)
    labels = [0] * g.n
    total = 0
    for comp, index in parts:
        value, cert = _solve_component(comp, method)
        total += value
        for local, v in enumerate(index):
            labels[v] = cert.assignment.labels[local]
    return total, Certificate.build(g, RainbowAssignment(tuple(labels)))


def _solve_component(g: Graph, method: str) -> tuple[int, Certificate]:
    if method == "search":
        return _solve_connected(g)
    if method == "frontier":
        return _solve_frontier(g, frontier_order(g)[1])
    if g.n >= FRONTIER_MIN_ORDER:
        width, order = frontier_order(g, FRONTIER_MAX_WIDTH)
        if width <= FRONTIER_MAX_WIDTH:
            return _solve_frontier(g, order)
    return _solve_connected(g)


def frontier_order(g: Graph, cap: int | None = None) -> tuple[int, list[int]]:
    """A vertex order of small frontier width, with that width.

    After each prefix of the order, the frontier is the set of placed
    vertices that still have an unplaced neighbour.  The order is built
    greedily: each step places the vertex giving the smallest frontier,
    preferring the vertex with more placed neighbours, then the smaller id.
    Every start vertex is tried (the eight of least degree on graphs above
    24 vertices).  A start is abandoned once its width exceeds both ``cap``
    and the best width so far.
    """
    n = g.n
    adj = g.adj
    if n == 0:
        return 0, []
    starts = sorted(range(n), key=lambda v: (popcount(adj[v]), v))
    if n > 24:
        starts = starts[:8]
    best_width = n + 1
    best_order: list[int] = []
    for start in starts:
        limit = best_width if cap is None else max(best_width - 1, cap)
        done = 1 << start
        order = [start]
        width = 1 if adj[start] else 0
        while len(order) < n and width <= limit:
            pick = None
            for v in range(n):
                if done >> v & 1:
                    continue
                placed = done | 1 << v
                size = sum(1 for u in bits(placed) if adj[u] & ~placed)
                key = (size, -popcount(adj[v] & done), v)
                if pick is None or key < pick:
                    pick = key
            size, _, v = pick
            done |= 1 << v
            order.append(v)
            width = max(width, size)
        if len(order) == n and width < best_width:
            best_width, best_order = width, order
    if not best_order:
        return n + 1, []
    return best_width, best_order


def _solve_frontier(g: Graph, order: Sequence[int]) -> tuple[int, Certificate]:
    # Each frontier vertex carries a code: 1, 2 or 3 for its label, or
    # 4 | received for an empty vertex, where received is the mask of colours
    # it already sees.  Per layer, each frontier code tuple keeps its lightest
    # prefix, with a back pointer to the previous layer.
    n = g.n
    adj = g.adj
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    last = [max([pos[v]] + [pos[u] for u in bits(adj[v])]) for v in range(n)]
    frontier: list[int] = []
    layer: dict[tuple[int, ...], tuple[int, tuple[int, ...], int]] = {(): (0, (), 0)}
    layers = []
    for i, v in enumerate(order):
        if not adj[v]:
            choices: tuple[int, ...] = (1,)
        else:
            choices = (0, 1, 2, 3)
        near = [j for j, u in enumerate(frontier) if adj[v] >> u & 1]
        grown = frontier + [v]
        closing = [j for j, u in enumerate(grown) if last[u] == i]
        keep = [j for j, u in enumerate(grown) if last[u] > i]
        nxt: dict[tuple[int, ...], tuple[int, tuple[int, ...], int]] = {}
        for state, (w, _, _) in layer.items():
            for lab in choices:
                codes = list(state)
                if lab == 0:
                    seen = 0
                    for j in near:
                        if codes[j] & 4:
                            break
                        seen |= codes[j]
                    else:
                        codes.append(4 | seen)
                    if len(codes) == len(state):
                        continue
                else:
                    for j in near:
                        if codes[j] & 4:
                            codes[j] |= lab
                    codes.append(lab)
                if any(codes[j] & 4 and codes[j] != 7 for j in closing):
                    continue
                key = tuple(codes[j] for j in keep)
                weight = w + popcount(lab)
                held = nxt.get(key)
                if held is None or weight < held[0]:
                    nxt[key] = (weight, state, lab)
        layers.append(nxt)
        layer = nxt
        frontier = [grown[j] for j in keep]
    gamma = layer[()][0]
    labels = [0] * n
    key: tuple[int, ...] = ()
    for i in range(n - 1, -1, -1):
        _, key, labels[order[i]] = layers[i][key]
    return gamma, Certificate.build(g, RainbowAssignment(tuple(labels)))


def _solve_connected(g: Graph) -> tuple[int, Certificate]:
    n = g.n
    adj = g.adj
    labels = [0] * n
    fixed = 0
    for v in range(n):
        if not adj[v]:
            labels[v] = 1
            fixed += 1
    order = [v for v in bfs_order(g) if adj[v]]
    m = len(order)
    best_w = m + 1
    best: list[int] = []

    def dfs(i: int, Z: int, NZ: int, C1: int, C2: int, U: int, w: int, seen1: bool) -> None:
        nonlocal best_w, best
        if i == m:
            if w < best_w:
                best_w = w
                best = labels[:]
            return
        forced = U & NZ
        free = U & ~NZ
        if w + popcount(forced) + popcount(free) - _clique_cover(adj, free) >= best_w:
            return
        v = order[i]
        bit = 1 << v
        a = adj[v]
        U2 = U & ~bit
        if not (a & Z) and a & (C1 | U2) and a & (C2 | U2):
            labels[v] = 0
            dfs(i + 1, Z | bit, NZ | a, C1, C2, U2, w, seen1)
        zn = list(bits(Z & a))
        # {1}: empty neighbours may still get colour 2 elsewhere
        if all(adj[z] & (C2 | U2) for z in zn):
            labels[v] = 1
            dfs(i + 1, Z, NZ, C1 | bit, C2, U2, w + 1, True)
        if seen1 and all(adj[z] & (C1 | U2) for z in zn):
            labels[v] = 2
            dfs(i + 1, Z, NZ, C1, C2 | bit, U2, w + 1, True)
        labels[v] = 3
        dfs(i + 1, Z, NZ, C1 | bit, C2 | bit, U2, w + 2, seen1)
        labels[v] = 0

    unassigned = 0
    for v in order:
        unassigned |= 1 << v
    dfs(0, 0, 0, 0, 0, unassigned, 0, False)
    for v in range(n):
        if not adj[v]:
            best[v] = 1
    gamma = best_w + fixed
    return gamma, Certificate.build(g, RainbowAssignment(tuple(best)))


def gamma_oir2(g: Graph) -> int:
    return solve_exact(g)[0]


def component_decompose_solve(g: Graph) -> int:
    """Sum of the OI2RD numbers of the connected components."""
    return sum(solve_exact(comp)[0] for comp, _ in components(g))


# -- brute-force oracle ------------------------------------------------------------


def brute_force(g: Graph, k: int = 2, outer_independent: bool = True) -> int:
    """Minimum weight over all (2^k)^n assignments, by exhaustive vectorised
    scan.  With ``outer_independent=False`` the empty class need not be
    independent (plain k-rainbow domination).  Test oracle only."""
    n = g.n
    if n > BRUTE_FORCE_MAX_ORDER:
        raise OrderTooLarge(f"brute force is capped at n <= {BRUTE_FORCE_MAX_ORDER}, got {n}")
    if n == 0:
        return 0
    base = 1 << k
    full = base - 1
    total = base ** n
    chunk = 1 << 20
    best = None
    adj = np.array(g.adj, dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        labs = [(idx // base ** v) % base for v in range(n)]
        empty = np.zeros_like(idx)
        weight = np.zeros_like(idx)
        color_sets = [np.zeros_like(idx) for _ in range(k)]
        for v, lab in enumerate(labs):
            empty |= (lab == 0).astype(np.int64) << v
            for c in range(k):
                color_sets[c] |= ((lab >> c) & 1) << v
            for c in range(k):
                weight += (lab >> c) & 1
        ok = np.ones(idx.shape, dtype=bool)
        for v in range(n):
            is_empty = labs[v] == 0
            good = np.ones(idx.shape, dtype=bool)
            for c in range(k):
                good &= (color_sets[c] & adj[v]) != 0
            if outer_independent:
                good &= (empty & adj[v]) == 0
            ok &= ~is_empty | good
        if ok.any():
            w = int(weight[ok].min())
            best = w if best is None else min(best, w)
    assert best is not None and best <= n * full
    return best


# -- all optimal functions ---------------------------------------------------------


def enumerate_optimal(g: Graph, gamma: int | None = None) -> Iterator[RainbowAssignment]:
    """Yield every OI2RD function of minimum weight exactly once, in
    lexicographic order of the label vector (vertex 0 most significant,
    labels ordered empty < {1} < {2} < {1,2})."""
    n = g.n
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(f"enumeration is capped at n <= {ENUMERATION_MAX_ORDER}, got {n}")
    if gamma is None:
        gamma = solve_exact(g)[0]
    adj = g.adj
    labels = [0] * n

    def dfs(v: int, Z: int, NZ: int, C1: int, C2: int, U: int, w: int) -> Iterator[RainbowAssignment]:
        if w + popcount(U & NZ) > gamma:
            return
        if v == n:
            if w == gamma:
                yield RainbowAssignment(tuple(labels))
            return
        bit = 1 << v
        a = adj[v]
        U2 = U & ~bit
        if not (a & Z) and a & (C1 | U2) and a & (C2 | U2):
            labels[v] = 0
            yield from dfs(v + 1, Z | bit, NZ | a, C1, C2, U2, w)
        zn = list(bits(Z & a))
        for lab in (1, 2, 3):
            nC1 = C1 | bit if lab & 1 else C1
            nC2 = C2 | bit if lab & 2 else C2
            if all(adj[z] & (nC1 | U2) and adj[z] & (nC2 | U2) for z in zn):
                labels[v] = lab
                yield from dfs(v + 1, Z, NZ, nC1, nC2, U2, w + popcount(lab))
        labels[v] = 0

    yield from dfs(0, 0, 0, 0, 0, (1 << n) - 1, 0)
