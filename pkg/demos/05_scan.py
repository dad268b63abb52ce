"""
A seeded numerical scan of det G at random complex parameters, and the same
scan with a degeneracy planted in every sample.

Run:  python3 demos/05_scan.py
"""

from heckesym.gram import n3_roots_check, scan

for n in (3, 4, 5):
    r = scan(n, samples=50, seed=1)
    print("n = %d: %d/%d flagged, smallest |det G| / Hadamard bound = %.2e, "
          "smallest |det G| / max^(n^2) = %.2e"
          % (n, r["degenerate_count"], r["samples"], r["min_reldet"], r["min_reldet_max_entry"]))

for n, plant in ((3, "q^2=zz"), (4, "z=q")):
    r = scan(n, samples=10, seed=1, plant=plant)
    print("n = %d with %s planted: %d/%d flagged, e.g. %s"
          % (n, plant, r["degenerate_count"], r["samples"], r["flagged"][0]["factors"]))

for rec in n3_roots_check(complex(0.95, 0.4)):
    print("n = 3 branch %s root %+d: relative det %.3e" % (rec["branch"], rec["root"], rec["reldet"]))
