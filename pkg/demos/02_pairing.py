"""
The canonical pairing on the quantum matrix bialgebra, evaluated on a few
words, and the induced action on V and V (x) V.

Run:  python3 demos/02_pairing.py
"""

from heckesym.pairing import CanonicalPairing, act, relators, t, well_definedness_check
from heckesym.tlhecke import example_instance

inst = example_instance(2)
f = inst.field
P = CanonicalPairing(inst.S, c=1)

for a, b in [(t(1, 1), t(1, 1)), (t(2, 2), t(1, 1)), (t(1, 1) * t(2, 2), t(1, 1))]:
    print("<<%s, %s>> = %s" % (a.fmt(f.fmt), b.fmt(f.fmt), f.fmt(f(P(a, b)))))

rels = relators(inst.S)
print("number of RTT relators:", len(rels))
print("pairing kills every relator against words of length <= 3:",
      bool(well_definedness_check(inst.S, L=3)))

# words act on tensors; the product of words acts as the composite
xi = {(1, 2): f.one}
step = act(P, t(2, 2), xi)
print("t[2,2] acting on x[1,2]:", {k: f.fmt(v) for k, v in step.items()})
both = act(P, t(1, 1) * t(2, 2), xi)
print("t[1,1]*t[2,2] acting on x[1,2]:", {k: f.fmt(v) for k, v in both.items()})
print("agrees with acting one after the other:", both == act(P, t(1, 1), step))
