from fractions import Fraction

import pytest

from heckesym.gram import (block_decompose, build_gram, closed_form_sq, degeneracy_factors,
                           gram_det, in_pattern, index_set, n3_roots_check, permuted,
                           prop4_check, scan)
from heckesym.linalg import det_exact
from heckesym.scalar import QS
from heckesym.tlhecke import gauge, specialize_instance
from tests.conftest import fleet, n2_plain

s, q = QS.sigma, QS.q


def test_index_set_size():
    for n in (2, 3, 4, 5):
        assert len(index_set(n)) == n * n - n


def test_support_and_count():
    for n in (2, 3, 4):
        G = build_gram(fleet(n))
        nz = [(a, b) for a in G.labels for b in G.labels if G[a, b]]
        assert all(in_pattern(a, b, n) for a, b in nz)
        assert len(nz) <= 2 * n * n - n
    assert sum(1 for a in build_gram(fleet(3)).labels for b in build_gram(fleet(3)).labels
               if in_pattern(a, b, 3)) == 15


def test_n2_gram_explicit():
    G = build_gram(n2_plain())
    assert G[(1, 1), (1, 1)] == q
    assert G[(1, 2), (2, 1)] == 0          # S_{21}^{21}
    assert G[(2, 1), (1, 2)] == q - 1      # S_{12}^{12}
    assert G[(2, 2), (1, 1)] == -1


def test_block_counts():
    for n in (2, 3, 4):
        blocks, rows, cols = block_decompose(build_gram(fleet(n)))
        assert sum(b.size == 1 for b in blocks) == n
        assert sum(b.size == 2 for b in blocks) == (n * n - n) // 2


def test_permuted_is_block_diagonal():
    G = build_gram(fleet(3))
    blocks, rows, cols = block_decompose(G)
    P = permuted(G, rows, cols)
    off, pos = 0, []
    for b in blocks:
        pos.append(range(off, off + b.size))
        off += b.size
    owner = {k: i for i, r in enumerate(pos) for k in r}
    for a in range(9):
        for b in range(9):
            if owner[a] != owner[b]:
                assert P[a, b] == 0
    # a permutation changes det G by a sign only
    d = gram_det(G)
    assert det_exact(P) in (d, -d)


def test_gram_closed_form_and_blocks():
    for n in (2, 3, 4):
        chk = prop4_check(fleet(n))
        assert chk, n
    assert prop4_check(n2_plain())
    assert prop4_check(fleet(3, scalar_m=False))


def test_c_scaling():
    inst = fleet(2)
    d1 = gram_det(build_gram(inst, 1))
    assert d1 == 0
    inst3 = fleet(3)
    d1 = gram_det(build_gram(inst3, 1))
    d2 = gram_det(build_gram(inst3, 2))
    assert d2 == 2 ** 9 * d1
    assert prop4_check(inst3, s)


def test_gauge_invariance():
    inst = fleet(3)
    g = gauge(inst, [2, s, Fraction(-1, 3)])
    assert gram_det(build_gram(g)) == gram_det(build_gram(inst))


def test_n3_closed_form_value():
    d = gram_det(build_gram(fleet(3)))
    assert d * d == closed_form_sq(fleet(3))
    expect = (s ** 34 + 2 * s ** 32 + s ** 30 - s ** 24 - 2 * s ** 22 - s ** 20)
    assert d in (expect, -expect)


def test_degenerate_cases():
    assert gram_det(build_gram(fleet(2))) == 0
    types = {f["type"] for f in degeneracy_factors(fleet(2))}
    assert "z_i = q" in types
    for n in (3, 4):
        sp = specialize_instance(fleet(n), 1)
        assert gram_det(build_gram(sp)) == 0
        assert "q in {0,1}" in {f["type"] for f in degeneracy_factors(sp)}
    assert degeneracy_factors(fleet(3)) == []


def test_scan_generic_and_deterministic():
    a = scan(3, samples=20, seed=7)
    b = scan(3, samples=20, seed=7)
    assert a == b
    assert a["degenerate_count"] == 0
    assert scan(4, samples=5, seed=1)["degenerate_count"] == 0


def test_scan_planted():
    r = scan(4, samples=5, seed=3, plant="z=q")
    assert r["degenerate_count"] == 5
    assert all(any(f["type"] == "z_i = q" for f in x["factors"]) for x in r["flagged"])
    r = scan(3, samples=5, seed=3, plant="q^2=zz")
    assert r["degenerate_count"] == 5


def test_scan_refuses_n2():
    with pytest.raises(ValueError, match="always degenerate"):
        scan(2)
    with pytest.raises(ValueError):
        scan(3, samples=1, plant="z=q")


def test_n3_roots():
    recs = n3_roots_check(complex(1.05, 0.3))
    assert len(recs) == 4
    assert all(r["nondegenerate"] for r in recs)
