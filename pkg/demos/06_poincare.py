"""
Graded dimensions of the quadratic algebras attached to S, and the integer
identities they satisfy.

Run:  python3 demos/06_poincare.py
"""

from heckesym.poincare import clebsch_gordan_dim_check, dim_table, series_product_check, sym_dim
from heckesym.tlhecke import example_instance

for n in (2, 3, 4):
    table = dim_table(example_instance(n), 5)
    print("n = %d  plus: %s  minus: %s" % (n, list(table.plus), list(table.minus)))
    print("       d_m recursion: %s  series product is 1: %s"
          % ([sym_dim(n, m) for m in range(6)], bool(series_product_check(table))))

for step in (2, 1):
    chk = clebsch_gordan_dim_check(3, 5, step=step)
    print("product rule d_i d_j = sum d_k, k in steps of %d:" % step, bool(chk),
          "" if chk else chk.witness)
