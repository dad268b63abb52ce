from fractions import Fraction
import random

import pytest
from hypothesis import given, settings, strategies as st

from heckesym.scalar import QS, FieldError
from heckesym.tensorop import hecke_check, ybe_check
from heckesym.tlhecke import (ConstraintError, build_instance, gauge, instance_from_dict,
                              instance_to_dict, prop2_spectrum_check, scalarM_condition_check,
                              simple_spectrum_check, solve_v_from_z, solve_z, tl_projectors,
                              tl_relations_check, instance_from_z)
from tests.conftest import fleet, n2_plain

s, q = QS.sigma, QS.q


def test_n2_example_spectrum():
    inst = n2_plain()
    assert inst.z == (1, q)
    assert inst.m == -s ** 2 / (1 + q)
    assert inst.lam == q / (1 + q) ** 2


def test_trace_error():
    with pytest.raises(ConstraintError) as err:
        build_instance(2, [1, 1], [1, 1])
    assert "sum of z_i" in str(err.value)


def test_pairing_error_names_index():
    # trace fine (z = (2, q - 1)) but z_1 z_2 != q
    with pytest.raises(ConstraintError) as err:
        build_instance(2, [2 / (1 + q), (q - 1) / (1 + q)], [1, 1])
    assert "i=1" in str(err.value)


def test_zero_entries_rejected():
    with pytest.raises(ConstraintError):
        build_instance(2, [0, 1], [1, 1])


def test_odd_middle_value_enforced():
    z, F = solve_z(3, (), -1)
    with pytest.raises(ConstraintError):
        instance_from_z(z, 1, F)   # middle value belongs to the other branch


def test_S_entries_n2():
    S = n2_plain().S
    assert S[(1, 1), (1, 1)] == q
    assert S[(1, 2), (1, 2)] == q - 1
    assert S[(1, 2), (2, 1)] == -1
    assert S[(2, 1), (1, 2)] == -q
    assert S[(2, 1), (2, 1)] == 0
    assert S[(2, 2), (2, 2)] == q


def test_S_support():
    for n in (2, 3, 4):
        S = fleet(n).S
        for (i, j), (k, l), _ in S.entries():
            assert (i, j) == (k, l) or (i + j == n + 1 and k + l == n + 1)


def test_n3_instance():
    inst = fleet(3)
    z1, z2, z3 = inst.z
    assert z2 == -s ** 2
    assert z1 * z3 == q
    assert z1 + z2 + z3 == 1 + q
    assert z1 not in (z2, z3)          # needs the extension: z1 is not in Q(s)
    assert inst.field.fmt(z1).count("th") == 1
    assert ybe_check(inst.S)


def test_fleet_yb_hecke():
    for n in (2, 3, 4, 5):
        for branch in (-1, 1):
            inst = fleet(n, branch)
            assert ybe_check(inst.S), (n, branch)
            assert hecke_check(inst.S, inst.q), (n, branch)


def test_scalar_m_condition():
    assert not scalarM_condition_check(n2_plain())
    inst = fleet(2)
    assert inst.v == (1, -s ** 2)
    assert scalarM_condition_check(inst)
    assert scalarM_condition_check(fleet(3))
    assert scalarM_condition_check(fleet(5))


def test_spectrum_checks():
    assert simple_spectrum_check(n2_plain())
    assert prop2_spectrum_check((s ** 2, s ** 2), q)
    assert not prop2_spectrum_check((1, 1, q), q)
    assert prop2_spectrum_check(fleet(4).z, q)


def test_tl_relations():
    inst = n2_plain()
    for m in (2, 3, 4):
        assert tl_relations_check(tl_projectors(inst.S, m, inst.q), inst.lam)
    chk = tl_relations_check(tl_projectors(inst.S, 3, inst.q), inst.lam + 1)
    assert not chk and chk.witness["relation"] == "braid-like"


def test_gauge_covariance():
    inst = fleet(3)
    w = [2, s, Fraction(-1, 3)]
    g = gauge(inst, w)
    assert g.z == inst.z
    assert ybe_check(g.S) and hecke_check(g.S, g.q)


@given(st.lists(st.fractions(min_value=-5, max_value=5, max_denominator=4)
                .filter(lambda x: x != 0), min_size=2, max_size=2),
       st.sampled_from([-1, 1]))
@settings(max_examples=15, deadline=None)
def test_scalar_m_solvable_from_any_free_values(free_v, branch):
    z, F = solve_z(4, (Fraction(3),), branch)
    u, v = solve_v_from_z(z, branch, F, free_v)
    inst = build_instance(4, u, v, branch, F)
    assert scalarM_condition_check(inst)


def test_instance_file_round_trip():
    for inst in (fleet(2), fleet(3), fleet(2, 1), n2_plain()):
        again = instance_from_dict(instance_to_dict(inst))
        assert again.u == inst.u and again.v == inst.v and again.branch == inst.branch


def test_solve_z_creates_extension_only_when_needed():
    z, F = solve_z(2, ())
    assert F is QS
    z, F = solve_z(4, (2,))
    assert F is not QS and F.base is QS
