"""Connected claw-free graphs whose OI2RD number is half their order.

Every member of the extremal family is built the same way: a cyclic sequence
of spine vertices ``s_0 .. s_{K-1}`` and one pendant vertex ``p_j`` adjacent
to ``s_j`` and ``s_{j+1 mod K}``.  The families differ only in which spine
pairs are also joined by an edge:

* ``g1`` -- consecutive spine vertices inside the same unit (a k-unit is a
  path of k spine vertices, so the pendant between them closes a triangle);
  the pendant between two units is a degree-2 connector.
* ``g2`` -- a single unit closed by one connector (``g1`` with one unit).
* ``g3`` -- every consecutive pair, so the spine is a cycle.

Labelling the spine ``{1}, {2}, {1}, ...`` and every pendant empty certifies
weight n/2 whenever K is even.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .graph import (Graph, bits, find_claw, find_induced_star, is_connected, popcount,
                    strong_support_count)
from .rainbow import RainbowAssignment, solve_exact, components

FAMILY_KINDS = ("g1", "g2", "g3")


@dataclass(frozen=True)
class FamilyDescriptor:
    """``g1`` carries the unit sizes; ``g2`` and ``g3`` carry ``(t,)``."""

    kind: str
    sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(k) for k in self.sizes))

    def validate(self) -> None:
        kind, sizes = self.kind, self.sizes
        if kind not in FAMILY_KINDS:
            raise ValueError(f"unknown family {kind!r}; expected one of {FAMILY_KINDS}")
        if kind == "g1":
            if not sizes:
                raise ValueError("g1 needs at least one unit")
            if min(sizes) < 1:
                raise ValueError("g1 unit sizes must be >= 1")
            if sum(sizes) % 2:
                raise ValueError(f"g1 requires an even total spine length, got {sum(sizes)}")
            return
        if len(sizes) != 1:
            raise ValueError(f"{kind} takes exactly one parameter t")
        t = sizes[0]
        if t % 2:
            raise ValueError(f"{kind} requires t even, got {t}")
        if kind == "g2" and t < 2:
            raise ValueError(f"g2 requires t >= 2, got {t}")
        if kind == "g3" and t < 4:
            raise ValueError(f"g3 requires t >= 4, got {t}")

    @property
    def spine_length(self) -> int:
        return sum(self.sizes)

    @property
    def order(self) -> int:
        return 2 * self.spine_length

    @classmethod
    def parse(cls, text: str) -> "FamilyDescriptor":
        """Parse ``"g1:2,3,1"``, ``"g2:4"`` or ``"g3:6"``."""
        kind, sep, rest = text.strip().lower().partition(":")
        if not sep or not rest:
            raise ValueError(f"descriptor {text!r} is not of the form KIND:N[,N...]")
        try:
            sizes = tuple(int(x) for x in rest.split(","))
        except ValueError:
            raise ValueError(f"descriptor {text!r} has a non-integer parameter") from None
        d = cls(kind, sizes)
        d.validate()
        return d

    def __str__(self) -> str:
        return f"{self.kind}:{','.join(map(str, self.sizes))}"


@dataclass(frozen=True)
class SpinePartition:
    """A family member's layout inside a concrete graph.

    ``spine[j]`` and ``spine[j+1 mod K]`` are the two neighbours of
    ``pendants[j]``.
    """

    descriptor: FamilyDescriptor
    spine: tuple[int, ...]
    pendants: tuple[int, ...]


def make_k_unit(k: int) -> Graph:
    """Spine path ``0..k-1`` plus triangle vertex ``k+i`` on spine pair (i, i+1)."""
    if k < 1:
        raise ValueError(f"a k-unit needs k >= 1, got {k}")
    edges = [(i, i + 1) for i in range(k - 1)]
    edges += [(k + i, i) for i in range(k - 1)] + [(k + i, i + 1) for i in range(k - 1)]
    return Graph.from_edges(2 * k - 1, edges)


def _spine_edges(d: FamilyDescriptor) -> list[int]:
    # j is listed when spine j and spine j+1 (mod K) are adjacent
    if d.kind == "g3":
        return list(range(d.sizes[0]))
    joined = []
    start = 0
    for k in d.sizes:
        joined += range(start, start + k - 1)
        start += k
    return joined


def make_family(d: FamilyDescriptor) -> Graph:
    """Spine vertices get ids ``0..K-1`` in cyclic order, pendant ``p_j`` gets
    id ``K + j``."""
    d.validate()
    K = d.spine_length
    edges = [(j, (j + 1) % K) for j in _spine_edges(d)]
    edges += [(K + j, j) for j in range(K)] + [(K + j, (j + 1) % K) for j in range(K)]
    return Graph.from_edges(2 * K, edges)


def family_partition(d: FamilyDescriptor) -> SpinePartition:
    """The layout of ``make_family(d)`` itself."""
    d.validate()
    K = d.spine_length
    return SpinePartition(d, tuple(range(K)), tuple(range(K, 2 * K)))


def equality_assignment(g: Graph, layout: FamilyDescriptor | SpinePartition | None = None
                        ) -> RainbowAssignment:
    """{1} and {2} alternately along the spine, empty on every pendant.

    ``layout`` may be a descriptor (then ``g`` must be exactly
    ``make_family(layout)``), a partition, or None to recognise ``g`` first.
    """
    if layout is None:
        layout = find_spine_partition(g)
        if layout is None:
            raise ValueError("graph is not a member of the extremal family")
    elif isinstance(layout, FamilyDescriptor):
        if make_family(layout) != g:
            raise ValueError(f"graph is not make_family({layout})")
        layout = family_partition(layout)
    if len(layout.spine) % 2:
        raise AssertionError("odd spine length cannot alternate")
    labels = [0] * g.n
    for j, v in enumerate(layout.spine):
        labels[v] = 1 if j % 2 == 0 else 2
    return RainbowAssignment(tuple(labels))


# -- recognition --------------------------------------------------------------------


def _partitions(g: Graph):
    """Yield pendant masks T with: T independent, every vertex of T of degree
    exactly two, every other vertex with exactly two neighbours in T."""
    n = g.n
    adj = g.adj
    deg = [popcount(a) for a in adj]
    half = n // 2

    def ok_spine(v: int, T: int, undecided: int) -> bool:
        inside = popcount(adj[v] & T)
        return inside <= 2 and inside + popcount(adj[v] & undecided) >= 2

    def rec(v: int, T: int, S: int) -> object:
        if v == n:
            if popcount(T) == half and all(popcount(adj[s] & T) == 2 for s in bits(S)):
                yield T
            return
        undecided = ((1 << n) - 1) & ~(T | S) & ~(1 << v)
        bit = 1 << v
        # as pendant
        if deg[v] == 2 and not adj[v] & T and popcount(T) < half:
            T2 = T | bit
            if all(ok_spine(s, T2, undecided) for s in bits(adj[v] & S)):
                yield from rec(v + 1, T2, S)
        S2 = S | bit
        if ok_spine(v, T, undecided) and all(ok_spine(s, T, undecided) for s in bits(adj[v] & S)):
            yield from rec(v + 1, T, S2)

    yield from rec(0, 0, 0)


def _spine_walks(spine_adj: dict[int, int]) -> tuple[list[list[int]], list[list[int]]]:
    """Split the spine (max degree 2) into paths and cycles, each as a walk
    from its least end (paths) or least vertex (cycles)."""
    seen: set[int] = set()
    paths, cycles = [], []
    for s in sorted(spine_adj):
        if s in seen:
            continue
        comp, stack = {s}, [s]
        while stack:
            for u in bits(spine_adj[stack.pop()]):
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        ends = sorted(u for u in comp if popcount(spine_adj[u]) < 2)
        walk = [ends[0] if ends else s]
        done = {walk[0]}
        while True:
            nxt = [u for u in bits(spine_adj[walk[-1]]) if u not in done]
            if not nxt:
                break
            walk.append(nxt[0])
            done.add(nxt[0])
        (paths if ends else cycles).append(walk)
    return paths, cycles


def _classify(g: Graph, T: int) -> SpinePartition | None:
    adj = g.adj
    S = g.vertex_mask & ~T
    spine_adj = {s: adj[s] & S for s in bits(S)}
    if any(popcount(a) > 2 for a in spine_adj.values()):
        return None
    pend = {s: adj[s] & T for s in bits(S)}
    paths, cycles = _spine_walks(spine_adj)

    if cycles:
        if paths or len(cycles) != 1:
            return None
        ring = cycles[0]
        t = len(ring)
        pendants = []
        for j in range(t):
            common = pend[ring[j]] & pend[ring[(j + 1) % t]]
            if popcount(common) != 1:
                return None
            pendants.append(common.bit_length() - 1)
        if t % 2 or t < 4:
            return None
        return _checked(g, FamilyDescriptor("g3", (t,)), ring, pendants)

    # one triangle pendant per spine edge; what is left over are connectors
    triangle: dict[tuple[int, int], int] = {}
    used = 0
    for p in paths:
        for a, b in zip(p, p[1:]):
            common = pend[a] & pend[b] & ~used
            if not common:
                return None
            low = common & -common
            used |= low
            triangle[(a, b)] = triangle[(b, a)] = low.bit_length() - 1
    free = {s: pend[s] & ~used for s in bits(S)}

    unit_of = {s: i for i, p in enumerate(paths) for s in p}
    visited = [0]
    spine: list[int] = []
    pendants: list[int] = []
    unit = paths[0]
    entry = -1
    while True:
        spine.extend(unit)
        pendants.extend(triangle[(a, b)] for a, b in zip(unit, unit[1:]))
        slots = [c for c in bits(free[unit[-1]]) if c != entry]
        if not slots:
            return None
        conn = slots[0]
        pendants.append(conn)
        ends = [u for u in bits(adj[conn]) if u != unit[-1]]
        if len(ends) != 1:
            return None
        target = ends[0]
        if target == spine[0]:
            break
        i = unit_of[target]
        if i in visited or target not in (paths[i][0], paths[i][-1]):
            return None
        visited.append(i)
        unit = paths[i] if paths[i][0] == target else paths[i][::-1]
        entry = conn
    if len(visited) != len(paths):
        return None
    sizes = tuple(len(paths[i]) for i in visited)
    if sum(sizes) % 2:
        return None
    kind = "g2" if len(sizes) == 1 else "g1"
    return _checked(g, FamilyDescriptor(kind, sizes), spine, pendants)


def _checked(g: Graph, d: FamilyDescriptor, spine: Sequence[int], pendants: Sequence[int]
             ) -> SpinePartition | None:
    # the layout must map g exactly onto make_family(d)
    layout = list(spine) + list(pendants)
    if len(layout) != g.n or len(set(layout)) != g.n:
        return None
    perm = [0] * g.n
    for new, old in enumerate(layout):
        perm[old] = new
    if g.relabel(perm) != make_family(d):
        return None
    return SpinePartition(d, tuple(spine), tuple(pendants))


def find_spine_partition(g: Graph) -> SpinePartition | None:
    """Locate a family layout inside ``g``, or None if ``g`` is not a member."""
    if g.n < 4 or g.n % 2 or not is_connected(g):
        return None
    if min(g.degrees()) < 2 or find_claw(g) is not None:
        return None
    for T in _partitions(g):
        found = _classify(g, T)
        if found is not None:
            return found
    return None


def recognize(g: Graph) -> FamilyDescriptor | None:
    part = find_spine_partition(g)
    return None if part is None else part.descriptor


# -- bound checks ---------------------------------------------------------------------


@dataclass(frozen=True)
class BoundCheck:
    value: int
    bound: Fraction

    @property
    def margin(self) -> Fraction:
        return self.value - self.bound

    @property
    def holds(self) -> bool:
        return self.value >= self.bound

    @property
    def tight(self) -> bool:
        return self.value == self.bound


def check_lower_bound(g: Graph, value: int | None = None) -> BoundCheck:
    """OI2RD number against n/2 for a connected claw-free graph."""
    if not is_connected(g):
        raise ValueError("lower bound n/2 needs a connected graph")
    claw = find_claw(g)
    if claw is not None:
        raise ValueError(f"graph has an induced claw at {claw}")
    if value is None:
        value = solve_exact(g)[0]
    return BoundCheck(value, Fraction(g.n, 2))


def check_k1r_bound(g: Graph, r: int, value: int | None = None) -> BoundCheck:
    """OI2RD number against 2(n + s')/(1 + r) for a K_{1,r}-free graph."""
    star = find_induced_star(g, r)
    if star is not None:
        raise ValueError(f"graph has an induced K_1,{r}: centre {star[0]}, leaves {star[1:]}")
    if value is None:
        value = solve_exact(g)[0]
    return BoundCheck(value, Fraction(2 * (g.n + strong_support_count(g)), 1 + r))


def _is_p3(g: Graph) -> bool:
    return g.n == 3 and sorted(g.degrees()) == [1, 1, 2]


def recognize_equality_general(g: Graph) -> bool:
    """Structural test for gamma = (n + s')/2 on a claw-free graph: every
    component is P_3 or a family member."""
    claw = find_claw(g)
    if claw is not None:
        raise ValueError(f"graph has an induced claw at {claw}")
    return all(_is_p3(comp) or recognize(comp) is not None for comp, _ in components(g))


def equality_bound_general(g: Graph) -> Fraction:
    return Fraction(g.n + strong_support_count(g), 2)


def family_descriptors(max_spine: int = 10, max_g2: int = 10, max_g3: int = 8
                       ) -> list[FamilyDescriptor]:
    """All descriptors with g1 total spine <= max_spine (unit sequences as
    compositions), g2 t <= max_g2, g3 t <= max_g3."""
    out = []

    def compositions(total: int) -> list[tuple[int, ...]]:
        if total == 0:
            return [()]
        return [(k,) + rest for k in range(1, total + 1) for rest in compositions(total - k)]

    for total in range(2, max_spine + 1, 2):
        out += [FamilyDescriptor("g1", c) for c in compositions(total)]
    out += [FamilyDescriptor("g2", (t,)) for t in range(2, max_g2 + 1, 2)]
    out += [FamilyDescriptor("g3", (t,)) for t in range(4, max_g3 + 1, 2)]
    return out
