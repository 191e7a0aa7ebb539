"""
Products: bounds, formulas and the rooted trichotomy
====================================================
"""

from oird.graph import Graph, complete, cycle, path, star
from oird.products import (RootedSpec, cartesian, cartesian_bound_and_certificate, corona,
                           corona_certificate, corona_formula, direct,
                           direct_bound_and_certificate, rooted, rooted_certificate)
from oird.rainbow import solve_exact

# direct product: lift an optimal labelling of the cheaper factor
for m, n in ((3, 3), (3, 4), (4, 4)):
    bound, cert = direct_bound_and_certificate(complete(m), complete(n))
    exact = solve_exact(direct(complete(m), complete(n))[0])[0]
    print(f"K_{m} x K_{n}: bound {bound}, exact {exact}, certificate valid {cert.valid}")

# Cartesian product: a three-class labelling from two maximum independent sets
for m, n in ((3, 3), (4, 3), (4, 4)):
    bound, cert = cartesian_bound_and_certificate(path(m), complete(n))
    exact = solve_exact(cartesian(path(m), complete(n))[0])[0]
    print(f"P_{m} [] K_{n}: bound {bound}, exact {exact}")

# rooted product: one of three values, decided from the fiber alone
for fiber, root, name in ((complete(2), 0, "K_2"), (path(3), 0, "P_3 at a leaf"),
                          (star(3), 1, "K_1,3 at a leaf"), (cycle(5), 0, "C_5")):
    spec = RootedSpec(path(4), fiber, root)
    pred, cert = rooted_certificate(spec)
    exact = solve_exact(rooted(spec)[0])[0]
    print(f"P_4 rooted {name:<16} case {pred.case:<5} predicted {pred.value:<3} exact {exact}")

# corona: closed form in the vertex cover number
for h, name in ((complete(1), "K_1"), (complete(3), "K_3"), (Graph.empty(2), "2K_1")):
    value = corona_formula(cycle(4), h)
    exact = solve_exact(corona(cycle(4), h)[0])[0]
    print(f"C_4 corona {name:<4} formula {value}, exact {exact}, "
          f"certificate weight {corona_certificate(cycle(4), h).weight}")
