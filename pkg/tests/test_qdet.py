import pytest

from heckesym.pairing import CanonicalPairing, counit, t
from heckesym.qdet import (MAX_IDEAL_N, MN_matrices, build_det, c_squared, centrality_criterion,
                           compute_c, eq2_check, eq3_check, ideal_membership_check)
from heckesym.scalar import QS, FieldError
from tests.conftest import fleet, n2_plain

s, q = QS.sigma, QS.q


def test_det_n2_explicit():
    inst = n2_plain()
    u, v = inst.u, inst.v
    det = build_det(inst)
    expect = (u[0] * v[0] * t(1, 1) * t(2, 2) + u[0] * v[1] * t(2, 1) * t(1, 2)
              + u[1] * v[0] * t(1, 2) * t(2, 1) + u[1] * v[1] * t(2, 2) * t(1, 1))
    assert det == expect


def test_det_counit_is_one():
    for inst in (n2_plain(), fleet(2), fleet(3), fleet(4), fleet(2, 1)):
        assert counit(build_det(inst)) == 1


def test_M_N_diagonal_and_product():
    for inst in (n2_plain(), fleet(3), fleet(4, scalar_m=False)):
        M, N = MN_matrices(inst)
        n = inst.n
        for a in range(n):
            assert M[a, a] * N[a, a] == inst.lam
            for b in range(n):
                if a != b:
                    assert M[a, b] == 0 and N[a, b] == 0


def test_centrality_criterion():
    assert centrality_criterion(n2_plain()) is None
    assert centrality_criterion(fleet(4, scalar_m=False)) is None
    m, m2 = centrality_criterion(fleet(2))
    assert m == m2 == -s ** 2 / (1 + q)
    m, _ = centrality_criterion(fleet(2, 1))
    assert m == s ** 2 / (1 + q)


def test_c_values():
    inst = fleet(2)
    assert c_squared(inst, centrality_criterion(inst)[0]) == 1 / s ** 6
    c = compute_c(inst)
    assert c == 1 / s ** 3 and compute_c(inst, -1) == -c
    for n in (3, 4):
        c = compute_c(fleet(n))
        assert c * c == 1 / s ** 6
    with pytest.raises(ValueError):
        compute_c(n2_plain())


def test_c_plus_branch_needs_extension():
    from heckesym.tlhecke import example_instance
    with pytest.raises(FieldError) as err:
        compute_c(example_instance(2, branch=1, field=QS))
    assert "delta = -1" in str(err.value)
    inst = fleet(2, 1)
    c = compute_c(inst)
    assert c * c == -1 / s ** 6


def test_det_pairings_match_M_and_N():
    for inst in (n2_plain(), fleet(2), fleet(3), fleet(4), fleet(3, scalar_m=False),
                 fleet(4, scalar_m=False)):
        assert eq3_check(inst, 1)
        assert eq3_check(inst, s)


def test_det_pairing_sign_is_fixed():
    inst = fleet(2)
    P = CanonicalPairing(inst.S, 1)
    det = build_det(inst)
    M, _ = MN_matrices(inst)
    assert P(t(1, 1), det) == -q * (1 + q) * M[0, 0]
    assert P(t(1, 1), det) != q * (1 + q) * M[0, 0]


def test_det_pairs_like_unit_on_scalar_instances():
    for inst in (fleet(2), fleet(3), fleet(2, 1)):
        assert eq2_check(inst, L=2)
    assert eq2_check(fleet(4), L=1)


def test_det_unit_pairing_fails_with_wrong_c():
    inst = fleet(2)
    chk = eq2_check(inst, L=1, c=1)
    assert not chk and "word" in chk.witness


def test_ideal_membership_matches_criterion():
    for inst in (n2_plain(), fleet(2), fleet(3), fleet(3, scalar_m=False)):
        assert bool(ideal_membership_check(inst)) == (centrality_criterion(inst) is not None)


def test_ideal_membership_limit():
    with pytest.raises(ValueError):
        ideal_membership_check(fleet(MAX_IDEAL_N + 1))
