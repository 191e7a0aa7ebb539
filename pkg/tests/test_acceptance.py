"""The ten acceptance criteria, each under its time budget.

Every test prints one ``PASS``/``FAIL`` line to the terminal, even when
pytest captures output.
"""
import time

import pytest

from oird.clawfree import FamilyDescriptor, equality_assignment, family_descriptors, make_family
from oird.graph import complete, cycle, path, star
from oird.harness import Budget, check_instance, corona_family, run_theorem
from oird.products import RootedSpec, cartesian, direct, rooted, rooted_predict
from oird.rainbow import solve_exact, verify


@pytest.fixture
def announce(capsys):
    def emit(number: int, title: str, ok: bool, elapsed: float, limit: float, detail: str = ""):
        status = "PASS" if ok and elapsed < limit else "FAIL"
        budget = "no limit" if limit == float("inf") else f"{limit:.0f}s"
        line = f"[criterion {number:>2}] {status}  {title}  ({elapsed:.1f}s / {budget})"
        if detail:
            line += f"  {detail}"
        with capsys.disabled():
            print("\n" + line)
    return emit


def timed(fn):
    start = time.perf_counter()
    result = fn()
    return result, time.perf_counter() - start


def summary(report) -> str:
    return f"instances={report.instances} failures={len(report.failures)}"


def test_01_cycle_closed_form(announce):
    def work():
        return [(p, solve_exact(cycle(p))[0], p // 2 + -(-p // 4) - p // 4) for p in range(3, 21)]
    rows, elapsed = timed(work)
    bad = [r for r in rows if r[1] != r[2]]
    announce(1, "cycle closed form, p = 3..20", not bad, elapsed, 5)
    assert not bad
    assert elapsed < 5


def test_02_claw_free_characterisation(announce):
    report, elapsed = timed(lambda: run_theorem("clawfree", Budget(max_n=7)))
    ok = report.passed and report.instances == 332809
    announce(2, "claw-free n/2 bound and equality iff family, n <= 7", ok, elapsed, 600,
             summary(report))
    assert report.passed, report.failures[:5]
    assert report.instances == 332809
    assert elapsed < 600


def test_03_family_closure(announce):
    def work():
        failures = []
        for d in family_descriptors(max_spine=10, max_g2=10, max_g3=8):
            ok, expected, got = check_instance("family", [str(d)])
            if not ok:
                failures.append((str(d), expected, got))
        return failures
    failures, elapsed = timed(work)
    count = len(family_descriptors())
    announce(3, "family closure over all descriptors in range", not failures, elapsed, 600,
             f"descriptors={count} failures={len(failures)}")
    assert not failures
    # spot checks on the worked members
    for text in ("g2:2", "g1:1,1,1,1", "g3:4"):
        d = FamilyDescriptor.parse(text)
        g = make_family(d)
        f = equality_assignment(g, d)
        assert verify(g, f).valid and 2 * f.weight == g.n


def test_04_direct_product(announce):
    def work():
        report = run_theorem("direct")
        closed = {(m, n): solve_exact(direct(complete(m), complete(n))[0])[0]
                  for m in (3, 4) for n in (3, 4)}
        return report, closed
    (report, closed), elapsed = timed(work)
    ok = report.passed and all(v == min(m * (n - 1), n * (m - 1)) for (m, n), v in closed.items())
    announce(4, "direct product bound and K_m x K_n closed form", ok, elapsed, 120,
             summary(report))
    assert ok, report.failures[:5]
    assert elapsed < 120


def test_05_cartesian_product(announce):
    def work():
        report = run_theorem("cartesian")
        sharp = {(m, n): solve_exact(cartesian(path(m), complete(n))[0])[0]
                 for m in (2, 3, 4) for n in range(m // 2 + 1, 5) if n >= 2}
        return report, sharp
    (report, sharp), elapsed = timed(work)
    ok = report.passed and all(v == m * (n - 1) for (m, n), v in sharp.items())
    announce(5, "Cartesian product bound and P_m x K_n sharpness", ok, elapsed, 300,
             summary(report))
    assert ok, (report.failures[:5], sharp)
    assert elapsed < 300


def test_06_rooted_trichotomy(announce):
    def work():
        report = run_theorem("rooted")
        witnesses = []
        for fiber, root, case, value in ((complete(2), 0, "low", 3), (path(3), 0, "mid", 4),
                                         (star(3), 1, "high", 5)):
            spec = RootedSpec(complete(2), fiber, root)
            pred = rooted_predict(spec)
            exact = solve_exact(rooted(spec)[0])[0]
            witnesses.append((pred.case, pred.value, exact) == (case, value, value))
        return report, witnesses
    (report, witnesses), elapsed = timed(work)
    cases = report.info["cases"]
    ok = report.passed and all(witnesses) and all(cases[c] > 0 for c in ("low", "mid", "high"))
    announce(6, "rooted product trichotomy and its three witnesses", ok, elapsed, 300,
             f"{summary(report)} cases={cases}")
    assert ok, (report.failures[:5], witnesses)
    assert elapsed < 300


def test_07_corona_formula(announce):
    report, elapsed = timed(lambda: run_theorem("corona"))
    fibers = {h for _, h in corona_family()}
    branches = {"single": any(h.n == 1 for h in fibers),
                "no isolated": any(h.n > 1 and all(h.adj) for h in fibers),
                "isolated": any(h.n > 1 and not all(h.adj) for h in fibers)}
    ok = report.passed and all(branches.values())
    announce(7, "corona formula on all three branches", ok, elapsed, 300, summary(report))
    assert ok, (report.failures[:5], branches)
    assert elapsed < 300


def test_08_isolated_vertex_decompositions(announce):
    report, elapsed = timed(lambda: run_theorem("decomposition", Budget(seed=0)))
    ok = report.passed and report.instances == 100
    announce(8, "isolated-vertex decompositions on 100 seeded pairs", ok, elapsed, 300,
             summary(report))
    assert ok, report.failures[:5]
    assert elapsed < 300


def test_09_oracle_equivalence(announce):
    report, elapsed = timed(lambda: run_theorem("oracle", Budget(max_n=6, seed=0)))
    expected = sum(2 ** (n * (n - 1) // 2) for n in range(1, 7)) + 200
    ok = report.passed and report.instances == expected
    announce(9, "exact solver equals brute force", ok, elapsed, 600, summary(report))
    assert ok, report.failures[:5]
    assert elapsed < 600


def test_10_k1r_bound(announce):
    report, elapsed = timed(lambda: run_theorem("k1r", Budget(max_n=7)))
    announce(10, "K_1,3-free bound with tightness on P_3 and family members", report.passed,
             elapsed, float("inf"), summary(report))
    assert report.passed, report.failures[:5]
