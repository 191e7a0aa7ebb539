"""Cartesian, direct, rooted and corona products with their OI2RD bounds.

Products of ``g`` and ``h`` use a row-major layout, vertex ``(a, b)`` having
id ``a * h.n + b``.  The corona is the exception: the ``g`` vertices keep ids
``0..g.n-1`` and the copy of ``h`` attached to ``a`` occupies
``g.n + a * h.n + b``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .graph import (Graph, bits, independence_number, isolated_vertices, popcount,
                    remove_isolated)
from .rainbow import Certificate, OrderTooLarge, enumerate_optimal, solve_exact

ROOTED_MAX_FIBER = 12


@dataclass(frozen=True)
class ProductVertexMap:
    """``pairs[id]`` is the factor pair of product vertex ``id``; a corona's
    own ``g`` vertices appear as ``(a, None)``."""

    pairs: tuple[tuple[int, Optional[int]], ...]

    def __post_init__(self):
        object.__setattr__(self, "_index", {p: i for i, p in enumerate(self.pairs)})

    def __len__(self) -> int:
        return len(self.pairs)

    def pair(self, vid: int) -> tuple[int, Optional[int]]:
        return self.pairs[vid]

    def id(self, a: int, b: Optional[int]) -> int:
        return self._index[(a, b)]  # type: ignore[attr-defined]


def _grid_map(ng: int, nh: int) -> ProductVertexMap:
    return ProductVertexMap(tuple((a, b) for a in range(ng) for b in range(nh)))


def cartesian(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    nh = h.n
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * nh + b, a * nh + c))
    for a, a2 in g.edges():
        for b in range(nh):
            edges.append((a * nh + b, a2 * nh + b))
    return Graph.from_edges(g.n * nh, edges), _grid_map(g.n, nh)


def direct(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    nh = h.n
    edges = []
    for a, a2 in g.edges():
        for b, b2 in h.edges():
            edges.append((a * nh + b, a2 * nh + b2))
            edges.append((a * nh + b2, a2 * nh + b))
    return Graph.from_edges(g.n * nh, edges), _grid_map(g.n, nh)


@dataclass(frozen=True)
class RootedSpec:
    base: Graph
    fiber: Graph
    root: int

    def __post_init__(self):
        if not 0 <= self.root < self.fiber.n:
            raise ValueError(f"root {self.root} out of range for a fiber of order {self.fiber.n}")


def rooted(spec: RootedSpec) -> tuple[Graph, ProductVertexMap]:
    g, h, v = spec.base, spec.fiber, spec.root
    nh = h.n
    edges = []
    for a in range(g.n):
        for b, c in h.edges():
            edges.append((a * nh + b, a * nh + c))
    for a, a2 in g.edges():
        edges.append((a * nh + v, a2 * nh + v))
    return Graph.from_edges(g.n * nh, edges), _grid_map(g.n, nh)


def corona(g: Graph, h: Graph) -> tuple[Graph, ProductVertexMap]:
    ng, nh = g.n, h.n
    edges = list(g.edges())
    for a in range(ng):
        off = ng + a * nh
        edges += [(off + b, off + c) for b, c in h.edges()]
        edges += [(a, off + b) for b in range(nh)]
    pairs = [(a, None) for a in range(ng)] + [(a, b) for a in range(ng) for b in range(nh)]
    return Graph.from_edges(ng * (1 + nh), edges), ProductVertexMap(tuple(pairs))


def _require_no_isolated(**graphs: Graph) -> None:
    for name, gr in graphs.items():
        iso = isolated_vertices(gr)
        if iso:
            raise ValueError(f"{name} has isolated vertices {list(iso)}; use the decomposition instead")


# -- direct product -------------------------------------------------------------


def direct_bound_and_certificate(g: Graph, h: Graph) -> tuple[int, Certificate]:
    """min{gamma(H)|V(G)|, gamma(G)|V(H)|}, certified by lifting an optimal
    function of one factor constantly along the other (H on ties)."""
    _require_no_isolated(g=g, h=h)
    gamma_g, cert_g = solve_exact(g)
    gamma_h, cert_h = solve_exact(h)
    prod, pmap = direct(g, h)
    labels = [0] * prod.n
    if gamma_h * g.n <= gamma_g * h.n:
        bound = gamma_h * g.n
        for vid, (a, b) in enumerate(pmap.pairs):
            labels[vid] = cert_h.assignment.labels[b]
    else:
        bound = gamma_g * h.n
        for vid, (a, b) in enumerate(pmap.pairs):
            labels[vid] = cert_g.assignment.labels[a]
    return bound, Certificate.build(prod, labels)


def isolated_product_count(g: Graph, h: Graph) -> int:
    """Number of isolated vertices of the direct product."""
    ig, ih = len(isolated_vertices(g)), len(isolated_vertices(h))
    return ig * h.n + ih * g.n - ig * ih


def direct_isolated_decomposition(g: Graph, h: Graph) -> int:
    g_core, _ = remove_isolated(g)
    h_core, _ = remove_isolated(h)
    core = solve_exact(direct(g_core, h_core)[0])[0]
    return core + isolated_product_count(g, h)


# -- Cartesian product ------------------------------------------------------------


def cartesian_bound(g: Graph, h: Graph) -> int:
    alpha_g, _ = independence_number(g)
    alpha_h, _ = independence_number(h)
    beta_g, beta_h = g.n - alpha_g, h.n - alpha_h
    return alpha_g * beta_h + beta_g * h.n - min(beta_g, beta_h)


def cartesian_bound_and_certificate(g: Graph, h: Graph) -> tuple[int, Certificate]:
    """alpha(G)beta(H) + beta(G)|V(H)| - min{beta(G), beta(H)}, certified.

    With A the factor of smaller vertex cover number and I, J maximum
    independent sets of A and of the other factor B: the empty class is
    I x J plus one pair (a_i, b_i) for each a_i outside I, matched in
    increasing id order to the b_i outside J; I x (B - J) gets {1} and every
    other vertex {2}.
    """
    _require_no_isolated(g=g, h=h)
    swap = (g.n - independence_number(g)[0]) > (h.n - independence_number(h)[0])
    A, B = (h, g) if swap else (g, h)
    _, I = independence_number(A)
    _, J = independence_number(B)
    in_I, in_J = set(I), set(J)
    rest_a = [a for a in range(A.n) if a not in in_I]
    rest_b = [b for b in range(B.n) if b not in in_J]
    matched = set(zip(rest_a, rest_b))
    prod, _ = cartesian(g, h)
    labels = [0] * prod.n
    for a in range(A.n):
        for b in range(B.n):
            if (a, b) in matched or (a in in_I and b in in_J):
                lab = 0
            elif a in in_I:
                lab = 1
            else:
                lab = 2
            vid = b * h.n + a if swap else a * h.n + b
            labels[vid] = lab
    return cartesian_bound(g, h), Certificate.build(prod, labels)


def cartesian_isolated_decomposition(g: Graph, h: Graph) -> int:
    ig, ih = len(isolated_vertices(g)), len(isolated_vertices(h))
    g_core, _ = remove_isolated(g)
    h_core, _ = remove_isolated(h)
    core = solve_exact(cartesian(g_core, h_core)[0])[0]
    return core + ig * solve_exact(h)[0] + ih * solve_exact(g)[0] - ig * ih


# -- rooted product -----------------------------------------------------------------


@dataclass(frozen=True)
class TrichotomyCase:
    """Predicted OI2RD number of a rooted product.

    ``case`` is ``"low"`` (n*gamma(H) - alpha(G)), ``"mid"`` (n*gamma(H)) or
    ``"high"`` (n*gamma(H) + beta(G)); ``"outside"`` marks the degenerate
    inputs (isolated root, or a base with isolated vertices that is not
    edgeless) whose exact value misses all three.
    """

    case: str
    value: int
    evidence: str
    low: int
    mid: int
    high: int

    @property
    def candidates(self) -> tuple[int, int, int]:
        return self.low, self.mid, self.high


def _match_case(value: int, low: int, mid: int, high: int) -> str:
    # Mid before High: an edgeless base makes them equal
    for name, target in (("mid", mid), ("low", low), ("high", high)):
        if value == target:
            return name
    return "outside"


def rooted_predict(spec: RootedSpec) -> TrichotomyCase:
    """Decide which of the three rooted-product values applies, from the
    optimal functions of the fiber alone (no search on the product)."""
    g, h, v = spec.base, spec.fiber, spec.root
    if h.n > ROOTED_MAX_FIBER:
        raise OrderTooLarge(f"fiber order {h.n} exceeds the enumeration cap {ROOTED_MAX_FIBER}")
    n = g.n
    gamma_h = solve_exact(h)[0]
    alpha = independence_number(g)[0]
    beta = n - alpha
    low, mid, high = n * gamma_h - alpha, n * gamma_h, n * gamma_h + beta
    if not any(g.adj):
        return TrichotomyCase("mid", mid, "base graph is edgeless", low, mid, high)
    if not h.adj[v]:
        # isolated root: G plus n copies of H - v
        value = solve_exact(g)[0] + n * (gamma_h - 1)
        return TrichotomyCase(_match_case(value, low, mid, high), value,
                              "root is isolated in the fiber", low, mid, high)
    iso = isolated_vertices(g)
    if iso:
        core, _ = remove_isolated(g)
        inner = rooted_predict(RootedSpec(core, h, v))
        value = inner.value + len(iso) * gamma_h
        return TrichotomyCase(_match_case(value, low, mid, high), value,
                              f"base has isolated vertices; core case {inner.case}", low, mid, high)
    root_empty_always = True
    free_root = False
    for f in enumerate_optimal(h, gamma_h):
        if f.labels[v]:
            root_empty_always = False
            if not any(f.labels[u] == 0 for u in bits(h.adj[v])):
                free_root = True
                break
    if root_empty_always:
        return TrichotomyCase("high", high, "every optimal fiber function leaves the root empty",
                              low, mid, high)
    if free_root:
        return TrichotomyCase("low", low, "an optimal fiber function labels the root and "
                              "no root neighbour is empty", low, mid, high)
    return TrichotomyCase("mid", mid, "the root is labelled by some optimal fiber function, "
                          "always beside an empty neighbour", low, mid, high)


def rooted_certificate(spec: RootedSpec) -> tuple[TrichotomyCase, Certificate]:
    """An assignment of the predicted weight, built from one optimal fiber
    function (no search on the product).  Only for bases without isolated
    vertices or edgeless bases, with a non-isolated root."""
    g, h, v = spec.base, spec.fiber, spec.root
    pred = rooted_predict(spec)
    if pred.case == "outside" or not h.adj[v] or (any(g.adj) and isolated_vertices(g)):
        raise ValueError("no fiber-lifted construction for this degenerate rooted product")
    prod, pmap = rooted(spec)
    optimal = list(enumerate_optimal(h))
    if pred.case == "high":
        f = optimal[0]
        cover = set(range(g.n)) - set(independence_number(g)[1])
        root_label = {x: (1 if x in cover else 0) for x in range(g.n)}
    elif pred.case == "low":
        f = next(f for f in optimal if popcount(f.labels[v]) == 1
                 and all(f.labels[u] for u in bits(h.adj[v])))
        seen = 0
        for u in bits(h.adj[v]):
            seen |= f.labels[u]
        other = 2 if seen & 1 else 1
        indep = set(independence_number(g)[1])
        root_label = {x: (0 if x in indep else other) for x in range(g.n)}
    else:
        labelled = [f for f in optimal if f.labels[v]]
        f = labelled[0] if labelled else optimal[0]
        root_label = {x: f.labels[v] for x in range(g.n)}
    labels = [0] * prod.n
    for vid, (x, y) in enumerate(pmap.pairs):
        labels[vid] = root_label[x] if y == v else f.labels[y]
    return pred, Certificate.build(prod, labels)


# -- corona product ----------------------------------------------------------------


def corona_formula(g: Graph, h: Graph) -> int:
    """n + beta(G) when H = K_1; otherwise n(beta(H) + 1) if H has no isolated
    vertex and n(beta(H) + 2) if it has one."""
    _require_no_isolated(g=g)
    if h.n < 1:
        raise ValueError("corona needs a non-empty fiber")
    n = g.n
    if h.n == 1:
        return n + (n - independence_number(g)[0])
    beta_h = h.n - independence_number(h)[0]
    return n * (beta_h + 1) if not isolated_vertices(h) else n * (beta_h + 2)


def corona_certificate(g: Graph, h: Graph) -> Certificate:
    value = corona_formula(g, h)
    prod, _ = corona(g, h)
    ng, nh = g.n, h.n
    labels = [0] * prod.n
    if nh == 1:
        indep = set(independence_number(g)[1])
        for a in range(ng):
            labels[a] = 0 if a in indep else 1
            labels[ng + a] = 2
    else:
        indep = set(independence_number(h)[1])
        has_isolated = bool(isolated_vertices(h))
        centre, fiber = (3, 1) if has_isolated else (1, 2)
        for a in range(ng):
            labels[a] = centre
            for b in range(nh):
                labels[ng + a * nh + b] = 0 if b in indep else fiber
    cert = Certificate.build(prod, labels)
    assert cert.weight == value
    return cert
