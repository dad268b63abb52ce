"""
Build a Temperley-Lieb type Hecke symmetry for n = 3 and check the operator
identities it must satisfy.

Run:  python3 demos/01_construct_and_verify.py
"""

from heckesym.tensorop import hecke_check, ybe_check
from heckesym.tlhecke import example_instance, scalarM_condition_check, tl_projectors, tl_relations_check

inst = example_instance(3)
f = inst.field
print("field:", f)
print("spectrum z:", [f.fmt(z) for z in inst.z])
print("sum of z =", f.fmt(sum(inst.z, f.zero)), "  (should be 1+q)")
print("z_1 z_3  =", f.fmt(inst.z[0] * inst.z[2]), "  (should be q)")

# S = q id - (1+q) u (x) v has eigenvalues q and -1
print("nonzero entries of S:", inst.S.nnz)
print("braid relation:", bool(ybe_check(inst.S)))
print("Hecke relation:", bool(hecke_check(inst.S, inst.q)))

# the rank-one projectors on V^(x)4 generate a TL algebra
T = tl_projectors(inst.S, 4, inst.q)
print("TL relations on V^(x)4:", bool(tl_relations_check(T, inst.lam)))
print("M, N scalar:", bool(scalarM_condition_check(inst)), " m =", f.fmt(inst.m))
