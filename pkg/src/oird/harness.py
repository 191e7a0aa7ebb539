"""Exhaustive and seeded sweeps that check each theorem instance by instance.

Every sweep produces a list of instances (tuples of graph6 strings and small
integers) and runs them through :func:`check_instance`, so any failure in a
report can be replayed by handing its ``inputs`` back to the same function.
"""
from __future__ import annotations

import json
import os
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .clawfree import (FamilyDescriptor, check_k1r_bound, check_lower_bound,
                       equality_assignment, family_descriptors, find_spine_partition,
                       make_family, recognize, recognize_equality_general)
from .graph import (Graph, complete, cycle, from_graph6, is_claw_free, is_connected, path,
                    star)
from .products import (RootedSpec, cartesian, cartesian_bound_and_certificate,
                       cartesian_isolated_decomposition, corona, corona_certificate,
                       corona_formula, direct, direct_bound_and_certificate,
                       direct_isolated_decomposition, rooted, rooted_predict)
from .rainbow import OrderTooLarge, brute_force, solve_exact, verify

THEOREMS = ("clawfree", "k1r", "direct", "cartesian", "rooted", "corona",
            "decomposition", "oracle", "cycles", "family")

ENUMERATION_MAX_ORDER = 7

Instance = tuple  # graph6 strings and ints, JSON-friendly


@dataclass
class Budget:
    max_n: int = 7
    max_instances: Optional[int] = None
    seconds: Optional[float] = None
    seed: int = 0
    workers: int = 1
    corpus: Optional[list[Graph]] = None


@dataclass
class Failure:
    inputs: list
    expected: object
    got: object


@dataclass
class TheoremReport:
    theorem: str
    instances: int = 0
    failures: list[Failure] = field(default_factory=list)
    wall_time: float = 0.0
    complete: bool = True
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.complete and not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def table(self) -> str:
        status = "PASS" if self.passed else ("INCOMPLETE" if not self.complete else "FAIL")
        rows = [
            f"theorem    {self.theorem}",
            f"status     {status}",
            f"instances  {self.instances}",
            f"failures   {len(self.failures)}",
            f"wall time  {self.wall_time:.2f}s",
        ]
        for key in sorted(self.info):
            rows.append(f"{key:<10} {self.info[key]}")
        for f in self.failures[:20]:
            rows.append(f"  FAIL {f.inputs}: expected {f.expected}, got {f.got}")
        return "\n".join(rows)


# -- enumeration ----------------------------------------------------------------------


def enumerate_labeled(n: int, keep: Callable[[Graph], bool] | None = None,
                      start: int = 0, stop: int | None = None) -> Iterator[Graph]:
    """All labelled graphs on ``n`` vertices in increasing edge-mask order,
    bit ``i`` of the mask being the i-th pair of ``combinations(range(n), 2)``.
    ``start``/``stop`` select a slice of the mask range."""
    if n > ENUMERATION_MAX_ORDER:
        raise OrderTooLarge(f"labelled enumeration is capped at n <= {ENUMERATION_MAX_ORDER}; "
                            "supply larger graphs as a graph6 corpus")
    if n < 0:
        raise ValueError("n must be >= 0")
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    low_bits = min(m, 10)

    def table(edge_ids: Sequence[int]) -> list[tuple[int, ...]]:
        out = []
        for mask in range(1 << len(edge_ids)):
            adj = [0] * n
            for i, e in enumerate(edge_ids):
                if mask >> i & 1:
                    u, v = pairs[e]
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
            out.append(tuple(adj))
        return out

    low = table(range(low_bits))
    high = table(range(low_bits, m))
    stop = 1 << m if stop is None else min(stop, 1 << m)
    for mask in range(start, stop):
        lo = low[mask & ((1 << low_bits) - 1)]
        hi = high[mask >> low_bits]
        g = Graph.unchecked(n, tuple(a | b for a, b in zip(lo, hi)))
        if keep is None or keep(g):
            yield g


def connected_claw_free(g: Graph) -> bool:
    return is_connected(g) and is_claw_free(g)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < p])


# -- instance checks ------------------------------------------------------------------


def _g(s: str) -> Graph:
    return from_graph6(s)


def _frac(x: Fraction) -> str:
    return str(x)


def check_instance(theorem: str, inputs: Sequence) -> tuple[bool, object, object]:
    """Evaluate one instance; returns ``(ok, expected, got)``."""
    if theorem == "clawfree":
        g = _g(inputs[0])
        gamma = solve_exact(g)[0]
        bound = check_lower_bound(g, gamma)
        member = recognize(g) is not None
        ok = bound.holds and (bound.tight == member)
        if ok and member:
            f = equality_assignment(g)
            ok = verify(g, f).valid and 2 * f.weight == g.n
        return ok, {"bound": _frac(bound.bound), "member": member}, {"gamma": gamma, "tight": bound.tight}
    if theorem == "k1r":
        g, r = _g(inputs[0]), int(inputs[1])
        gamma = solve_exact(g)[0]
        res = check_k1r_bound(g, r, gamma)
        structural = recognize_equality_general(g)
        ok = res.holds and res.tight == structural
        return ok, {"bound": _frac(res.bound), "tight": structural}, {"gamma": gamma, "tight": res.tight}
    if theorem == "direct":
        g, h = _g(inputs[0]), _g(inputs[1])
        bound, cert = direct_bound_and_certificate(g, h)
        exact = solve_exact(direct(g, h)[0])[0]
        ok = exact <= bound and cert.valid and cert.weight == bound
        return ok, {"bound": bound}, {"exact": exact, "cert_valid": cert.valid, "cert_weight": cert.weight}
    if theorem == "direct-complete":
        m, k = int(inputs[0]), int(inputs[1])
        exact = solve_exact(direct(complete(m), complete(k))[0])[0]
        expected = min(m * (k - 1), k * (m - 1))
        return exact == expected, expected, exact
    if theorem == "cartesian":
        g, h = _g(inputs[0]), _g(inputs[1])
        bound, cert = cartesian_bound_and_certificate(g, h)
        exact = solve_exact(cartesian(g, h)[0])[0]
        ok = exact <= bound and cert.valid and cert.weight == bound
        return ok, {"bound": bound}, {"exact": exact, "cert_valid": cert.valid, "cert_weight": cert.weight}
    if theorem == "path-complete":
        m, k = int(inputs[0]), int(inputs[1])
        exact = solve_exact(cartesian(path(m), complete(k))[0])[0]
        return exact == m * (k - 1), m * (k - 1), exact
    if theorem == "rooted":
        spec = RootedSpec(_g(inputs[0]), _g(inputs[1]), int(inputs[2]))
        pred = rooted_predict(spec)
        exact = solve_exact(rooted(spec)[0])[0]
        ok = exact == pred.value and pred.value in pred.candidates
        return ok, {"case": pred.case, "value": pred.value}, exact
    if theorem == "corona":
        g, h = _g(inputs[0]), _g(inputs[1])
        value = corona_formula(g, h)
        exact = solve_exact(corona(g, h)[0])[0]
        cert = corona_certificate(g, h)
        ok = exact == value and cert.valid and cert.weight == value
        return ok, value, {"exact": exact, "cert_valid": cert.valid}
    if theorem == "decomposition":
        g, h = _g(inputs[0]), _g(inputs[1])
        d_direct = direct_isolated_decomposition(g, h)
        d_cart = cartesian_isolated_decomposition(g, h)
        e_direct = solve_exact(direct(g, h)[0])[0]
        e_cart = solve_exact(cartesian(g, h)[0])[0]
        ok = d_direct == e_direct and d_cart == e_cart
        return ok, {"direct": e_direct, "cartesian": e_cart}, {"direct": d_direct, "cartesian": d_cart}
    if theorem == "oracle":
        g = _g(inputs[0])
        exact, cert = solve_exact(g)
        oracle = brute_force(g)
        ok = exact == oracle and cert.valid and cert.weight == exact
        return ok, oracle, exact
    if theorem == "cycles":
        p = int(inputs[0])
        expected = p // 2 + -(-p // 4) - p // 4
        exact = solve_exact(cycle(p))[0]
        return exact == expected, expected, exact
    if theorem == "family":
        d = FamilyDescriptor.parse(inputs[0])
        g = make_family(d)
        f = equality_assignment(g, d)
        found = find_spine_partition(g)
        ok = verify(g, f).valid and 2 * f.weight == g.n and found is not None
        if ok:
            # rebuilding from the recognised descriptor must give the same graph up to the found layout
            ok = make_family(found.descriptor).n == g.n and _same_up_to_layout(g, found)
        return ok, {"weight": g.n // 2}, {"weight": f.weight, "recognised": str(found.descriptor) if found else None}
    raise ValueError(f"unknown theorem {theorem!r}")


def _same_up_to_layout(g: Graph, part) -> bool:
    layout = list(part.spine) + list(part.pendants)
    perm = [0] * g.n
    for new, old in enumerate(layout):
        perm[old] = new
    return g.relabel(perm) == make_family(part.descriptor)


# -- instance streams -----------------------------------------------------------------


def pair_family() -> list[Graph]:
    """P_2..P_4, C_3..C_5, K_2..K_4."""
    return ([path(k) for k in (2, 3, 4)] + [cycle(k) for k in (3, 4, 5)]
            + [complete(k) for k in (2, 3, 4)])


def rooted_family() -> list[tuple[Graph, Graph, int]]:
    bases = [complete(1), complete(2), path(3), path(4), cycle(4), complete(3)]
    fibers = [(complete(2), 0), (path(3), 0), (path(3), 1), (path(4), 0), (path(4), 1),
              (star(3), 0), (star(3), 1), (cycle(4), 0), (complete(3), 0)]
    return [(g, h, v) for g in bases for h, v in fibers]


def corona_family() -> list[tuple[Graph, Graph]]:
    bases = [complete(2), path(3), path(4), cycle(4), complete(3)]
    fibers = [complete(1), complete(2), path(3), Graph.empty(2),
              complete(1).union(complete(2)), complete(3)]
    return [(g, h) for g in bases for h in fibers]


def decomposition_pairs(count: int, seed: int, max_order: int = 20) -> list[tuple[Graph, Graph]]:
    """Random factor pairs with planted isolated vertices, product order <= max_order."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        ng = rng.randint(1, 10)
        nh = rng.randint(1, max(1, max_order // ng))
        if ng * nh > max_order:
            continue
        iso_g = rng.randint(0, min(2, ng))
        iso_h = rng.randint(0, min(2, nh))
        if iso_g + iso_h == 0:
            iso_g = 1 if ng > 0 else 0
        g = random_graph(ng - iso_g, 0.5, rng).union(Graph.empty(iso_g))
        h = random_graph(nh - iso_h, 0.5, rng).union(Graph.empty(iso_h))
        out.append((g, h))
    return out


def _census(n_max: int, keep, corpus: Optional[list[Graph]]) -> Iterator[Graph]:
    if corpus is not None:
        yield from (g for g in corpus if keep(g))
        return
    for n in range(1, n_max + 1):
        yield from enumerate_labeled(n, keep)


def _instances(theorem: str, budget: Budget) -> Iterator[Instance]:
    if theorem == "clawfree":
        for g in _census(budget.max_n, connected_claw_free, budget.corpus):
            yield ("clawfree", g.to_graph6())
    elif theorem == "k1r":
        for g in _census(budget.max_n, is_claw_free, budget.corpus):
            yield ("k1r", g.to_graph6(), 3)
    elif theorem in ("direct", "cartesian"):
        fam = budget.corpus if budget.corpus is not None else pair_family()
        for g in fam:
            for h in fam:
                yield (theorem, g.to_graph6(), h.to_graph6())
        if theorem == "direct":
            for m in (3, 4):
                for k in (3, 4):
                    yield ("direct-complete", m, k)
        else:
            for m in (2, 3, 4):
                for k in range(max(2, m // 2 + 1), 5):
                    yield ("path-complete", m, k)
    elif theorem == "rooted":
        for g, h, v in rooted_family():
            yield ("rooted", g.to_graph6(), h.to_graph6(), v)
    elif theorem == "corona":
        for g, h in corona_family():
            yield ("corona", g.to_graph6(), h.to_graph6())
    elif theorem == "decomposition":
        for g, h in decomposition_pairs(100, budget.seed):
            yield ("decomposition", g.to_graph6(), h.to_graph6())
    elif theorem == "oracle":
        if budget.corpus is not None:
            for g in budget.corpus:
                yield ("oracle", g.to_graph6())
            return
        for n in range(1, min(budget.max_n, 6) + 1):
            for g in enumerate_labeled(n):
                yield ("oracle", g.to_graph6())
        rng = random.Random(budget.seed)
        for _ in range(200):
            n = rng.randint(7, 10)
            yield ("oracle", random_graph(n, rng.uniform(0.2, 0.8), rng).to_graph6())
    elif theorem == "cycles":
        for p in range(3, 21):
            yield ("cycles", p)
    elif theorem == "family":
        for d in family_descriptors():
            yield ("family", str(d))
    else:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")


def _check_batch(batch: list[Instance]) -> tuple[int, list[Failure], dict]:
    failures = []
    stats: dict = {}
    for inst in batch:
        kind, args = inst[0], list(inst[1:])
        ok, expected, got = check_instance(kind, args)
        if kind == "rooted":
            stats[expected["case"]] = stats.get(expected["case"], 0) + 1
        if kind in ("clawfree", "k1r") and got["tight"]:
            stats["tight"] = stats.get("tight", 0) + 1
        if not ok:
            failures.append(Failure([kind] + args, expected, got))
    return len(batch), failures, stats


def _batched(items: Iterable[Instance], size: int) -> Iterator[list[Instance]]:
    batch = []
    for item in items:
        batch.append(item)
        if len(batch) == size:
            yield batch
            batch = []
    if batch:
        yield batch


def default_workers() -> int:
    env = os.environ.get("OIRD_THREADS")
    if env:
        return max(1, int(env))
    return 1


def run_theorem(theorem: str, budget: Budget | None = None) -> TheoremReport:
    """Run one theorem's sweep and collect every failing instance.

    Exceeding ``max_instances`` or ``seconds`` stops the sweep and marks the
    report incomplete.  Failures are sorted by their inputs so the report does
    not depend on how the stream was split across workers.
    """
    budget = budget or Budget()
    if theorem not in THEOREMS:
        raise ValueError(f"unknown theorem {theorem!r}; expected one of {THEOREMS}")
    report = TheoremReport(theorem)
    if theorem == "rooted":
        report.info["cases"] = {"low": 0, "mid": 0, "high": 0}
    if theorem in ("oracle", "decomposition"):
        report.info["seed"] = budget.seed
    start = time.perf_counter()
    stream = _instances(theorem, budget)
    batches = _batched(stream, 500)

    def absorb(result: tuple[int, list[Failure], dict]) -> None:
        count, failures, stats = result
        report.instances += count
        report.failures.extend(failures)
        for key, val in stats.items():
            if theorem == "rooted":
                report.info["cases"][key] = report.info["cases"].get(key, 0) + val
            else:
                report.info[key] = report.info.get(key, 0) + val

    def over_budget() -> bool:
        if budget.max_instances is not None and report.instances >= budget.max_instances:
            return True
        return budget.seconds is not None and time.perf_counter() - start > budget.seconds

    if budget.workers > 1:
        with ProcessPoolExecutor(max_workers=budget.workers) as pool:
            pending = []
            for batch in batches:
                if over_budget():
                    report.complete = False
                    break
                pending.append(pool.submit(_check_batch, batch))
                if len(pending) >= 2 * budget.workers:
                    absorb(pending.pop(0).result())
            for fut in pending:
                absorb(fut.result())
    else:
        for inst in stream:
            if over_budget():
                report.complete = False
                break
            absorb(_check_batch([inst]))
    report.failures.sort(key=lambda f: json.dumps(f.inputs))
    report.wall_time = time.perf_counter() - start
    return report


def replay(failure: Failure) -> tuple[bool, object, object]:
    """Re-run a report's failing instance."""
    return check_instance(failure.inputs[0], failure.inputs[1:])
