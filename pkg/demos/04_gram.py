"""
The Gram matrix of the pairing on the generators: block structure, exact
determinant, the closed form for its square, and where it degenerates.

Run:  python3 demos/04_gram.py
"""

from heckesym.gram import (block_decompose, build_gram, closed_form_sq, degeneracy_factors,
                           gram_det, prop4_check)
from heckesym.tlhecke import example_instance, specialize_instance

for n in (2, 3, 4):
    inst = example_instance(n)
    f = inst.field
    G = build_gram(inst)
    blocks, _, _ = block_decompose(G)
    d = gram_det(G)
    print("n = %d: %d blocks of size 1, %d of size 2" %
          (n, sum(b.size == 1 for b in blocks), sum(b.size == 2 for b in blocks)))
    print("  det G =", f.fmt(d) if n < 4 else "(%d characters)" % len(f.fmt(d)))
    print("  (det G)^2 equals the closed form:", d * d == closed_form_sq(inst),
          " block identities:", bool(prop4_check(inst)))
    print("  vanishing factors:", degeneracy_factors(inst))
    at_one = specialize_instance(inst, 1)
    print("  at q = 1: det G =", at_one.field.fmt(gram_det(build_gram(at_one))))
