"""
Building and recognising the extremal family
============================================

Three constructions, all on a cyclic spine with one degree-two pendant per
spine step.  Alternating {1}, {2} on the spine and leaving pendants empty
reaches n/2.
"""

import random

from oird.clawfree import FamilyDescriptor, equality_assignment, make_family, recognize
from oird.rainbow import solve_exact, verify

for text in ("g2:2", "g1:1,1,1,1", "g1:2,3,1", "g3:4", "g3:6"):
    d = FamilyDescriptor.parse(text)
    g = make_family(d)
    f = equality_assignment(g, d)
    print(f"{text:<12} n={g.n:<3} edges={g.size:<3} solver={solve_exact(g)[0]:<3} "
          f"construction={f.weight} valid={verify(g, f).valid}")

# shuffle vertex ids; recognition recovers a descriptor for the same graph
g = make_family(FamilyDescriptor.parse("g1:2,3,1"))
perm = list(range(g.n))
random.Random(1).shuffle(perm)
print("shuffled g1:2,3,1 recognised as", recognize(g.relabel(perm)))

# descriptors that break a parity rule are refused with the rule named
for bad in ("g1:1,2", "g3:5"):
    try:
        FamilyDescriptor.parse(bad)
    except ValueError as exc:
        print(f"{bad}: {exc}")
