"""
Solving a graph and checking the answer
=======================================

The solver returns a number together with a labelling that anyone can
re-check without trusting the search.
"""

from oird.graph import cycle, from_graph6, path
from oird.rainbow import Certificate, brute_force, solve_exact, verify

# cycles follow a closed form in their length
for p in range(3, 13):
    value, cert = solve_exact(cycle(p))
    print(f"C_{p:<2} value {value}  labels {cert.assignment}")

# a certificate is plain JSON: graph6, number of colours, labels, weight
value, cert = solve_exact(path(5))
text = cert.to_json()
print(text)

# reload it and verify from scratch
again = Certificate.from_json(text)
print("reloaded certificate valid:", again.valid)

# blank one non-empty label and the verifier names the vertex that lost a colour
labels = list(again.assignment.labels)
v = next(i for i, lab in enumerate(labels) if lab)
labels[v] = 0
for problem in verify(path(5), labels).violations:
    print("violation:", problem)

# the exhaustive oracle agrees on anything small enough to scan
g = from_graph6("D?{")
print("D?{ solver", solve_exact(g)[0], "oracle", brute_force(g))
