"""
The quantum determinant: its pairings with the generators, when it is
central, and the normalization c that makes it pair like the unit.

Run:  python3 demos/03_determinant.py
"""

from heckesym.pairing import CanonicalPairing, t
from heckesym.qdet import (build_det, centrality_criterion, compute_c, eq2_check, eq3_check,
                           ideal_membership_check)
from heckesym.tlhecke import example_instance

for scalar in (True, False):
    inst = example_instance(3, scalar_m=scalar)
    f = inst.field
    crit = centrality_criterion(inst)
    print("n = 3, scalar M requested:", scalar)
    print("  pairings with det t match the M, N formula:", bool(eq3_check(inst)))
    print("  M, N scalar:", crit is not None,
          "  det t central (degree-3 ideal membership):", bool(ideal_membership_check(inst)))
    if crit is None:
        continue
    c = compute_c(inst)
    print("  c =", f.fmt(c))
    P = CanonicalPairing(inst.S, c)
    det = build_det(inst)
    print("  <<t[1,1], det>> =", f.fmt(f(P(t(1, 1), det))),
          "  <<t[1,2], det>> =", f.fmt(f(P(t(1, 2), det))))
    print("  det pairs like the unit up to degree 2:", bool(eq2_check(inst, L=2, pairing=P)))
