from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from heckesym.pairing import (CanonicalPairing, LinComb, act, axiom_iii_check, coproduct, counit,
                              parse_lincomb, relators, rtt_relator, t, well_definedness_check,
                              words_upto)
from heckesym.scalar import QS
from heckesym.tensorop import TensorOperator, flip
from tests.conftest import fleet, n2_plain

q = QS.q


def test_counit_and_unit():
    P = CanonicalPairing(n2_plain().S)
    assert counit(((1, 1), (2, 2))) == 1
    assert counit(((1, 2),)) == 0
    assert P((), ()) == 1
    assert P(LinComb.unit(), t(1, 1) * t(2, 2)) == 1
    assert P(t(1, 2), LinComb.unit()) == 0


def test_generator_values():
    P = CanonicalPairing(n2_plain().S, 1)
    assert P(t(2, 2), t(1, 1)) == -1       # c S_{12}^{21}
    assert P(t(1, 2), t(2, 1)) == 0        # c S_{21}^{21}
    assert P(t(1, 1), t(1, 1)) == q
    assert P(t(1, 1), t(2, 2)) == -q      # c S_{21}^{12}
    P3 = CanonicalPairing(n2_plain().S, 3)
    assert P3(t(1, 1), t(1, 1)) == 3 * q


def test_coproduct():
    assert coproduct(((1, 2),), 2) == [(((1, 1),), ((1, 2),)), (((1, 2),), ((2, 2),))]
    assert len(coproduct(((1, 2), (2, 1)), 3)) == 9
    assert coproduct((), 2) == [((), ())]


def test_axiom_i_oracle():
    # <<t_x^y, b1 b2>> = sum_p <<t_x^p, b2>> <<t_p^y, b1>>
    S = fleet(3).S
    P = CanonicalPairing(S)
    n = 3
    for x, y, b1, b2 in product(range(1, 4), range(1, 4), [(1, 2), (2, 2)], [(3, 1), (1, 1)]):
        expect = sum((P.generators((x, p), b2) * P.generators((p, y), b1)
                      for p in range(1, n + 1)), 0)
        assert P(t(x, y), t(*b1) * t(*b2)) == expect


def test_unit_pairs_to_counit():
    P = CanonicalPairing(fleet(2).S)
    for w in words_upto(2, 3):
        assert P((), w) == counit(w) == P(w, ())


def test_square_of_diagonal_generator():
    # only the p = (1, 1) term of Delta(t_1^1 t_1^1) survives: q^2 * q^2
    P = CanonicalPairing(n2_plain().S)
    assert P(t(1, 1) * t(1, 1), t(1, 1)) == q * q
    assert P(t(1, 1) * t(1, 1), t(1, 1) * t(1, 1)) == q ** 4


def independent_pairing(S, c, A, B):
    """Recursion that always splits B first (axiom (i) with Delta of A)."""
    n = S.n
    if not A:
        return counit(B)
    if not B:
        return counit(A)
    if len(B) == 1:
        if len(A) == 1:
            (i, j), (k, l) = A[0], B[0]
            return c * S.table.get((k, i), {}).get((j, l), 0)
        # <<A' a, b>> = sum <<A', b_(1)>> <<a, b_(2)>> with b = t_k^l
        (k, l), = B
        return sum((independent_pairing(S, c, A[:-1], ((k, p),))
                    * independent_pairing(S, c, A[-1:], ((p, l),)) for p in range(1, n + 1)), 0)
    # <<A, B' b>> = sum <<A_(1), b>> <<A_(2), B'>>
    total = 0
    for left, right in coproduct(A, n):
        total = total + independent_pairing(S, c, left, B[-1:]) * independent_pairing(S, c, right, B[:-1])
    return total


def test_independent_recursion_agrees():
    for inst in (n2_plain(), fleet(3)):
        P = CanonicalPairing(inst.S, 2)
        words = words_upto(inst.n, 2)[1:]
        for A in words[:: max(1, len(words) // 25)]:
            for B in words[:: max(1, len(words) // 25)]:
                assert P.words(A, B) == independent_pairing(inst.S, 2, A, B), (A, B)


def test_relators_have_zero_counit():
    for idx, rel in relators(fleet(3).S).items():
        assert counit(rel) == 0, idx


def test_flip_relators_are_commutators():
    rel = rtt_relator(flip(2), 1, 2, 1, 2)
    assert rel == t(2, 1) * t(1, 2) - t(1, 2) * t(2, 1)


def test_well_defined():
    for inst in (n2_plain(), fleet(2), fleet(2, 1)):
        assert well_definedness_check(inst.S, L=3)
    assert well_definedness_check(fleet(3).S, L=2)


def test_perturbed_pairing_not_well_defined():
    S = n2_plain().S
    bad = S + TensorOperator(2, 2, {(1, 2): {(1, 2): QS.one}})
    chk = well_definedness_check(bad, L=2)
    assert not chk and set(chk.witness) >= {"relator", "word", "side"}


def test_axiom_iii():
    for inst in (n2_plain(), fleet(3), fleet(4)):
        assert axiom_iii_check(inst.S, 1)
        assert axiom_iii_check(inst.S, QS.sigma)
    assert axiom_iii_check(flip(3), 1)
    with pytest.raises(ValueError):
        axiom_iii_check(n2_plain().S, 0)


def test_act_examples():
    inst = n2_plain()
    P = CanonicalPairing(inst.S, 1)
    assert act(P, LinComb.unit(), {(1,): 1, (2,): 3}) == {(1,): 1, (2,): 3}
    assert act(P, t(1, 1), {(1,): 1}) == {(1,): q}
    assert act(P, t(1, 1), {(2,): 1}) == {(2,): -1}


def test_act_kills_relators():
    P = CanonicalPairing(fleet(3).S)
    basis = [{I: 1} for I in product(range(1, 4), repeat=2)]
    for rel in list(relators(fleet(3).S).values())[:20]:
        for xi in basis[:4]:
            assert act(P, rel, xi) == {}


def test_action_is_a_module():
    # concatenation reading: (ab) |> xi = a |> (b |> xi); equivalently the
    # right-to-left composition of the A^op product
    inst = fleet(3)
    P = CanonicalPairing(inst.S)
    gens = [t(1, 1), t(1, 3), t(2, 2), t(3, 1)]
    vecs = [{(1,): 1}, {(2,): 1, (3,): 2}, {(1, 3): 1}, {(2, 2): 1}]
    for a, b, xi in product(gens, gens, vecs):
        assert act(P, a * b, xi) == act(P, a, act(P, b, xi))
    # the reversed order is not an identity
    assert any(act(P, a * b, xi) != act(P, b, act(P, a, xi))
               for a, b, xi in product(gens, gens, vecs))


def test_cache_does_not_change_values():
    S = fleet(3).S
    cached, fresh = CanonicalPairing(S), CanonicalPairing(S, cache=False)
    for A in words_upto(3, 2)[::7]:
        for B in words_upto(3, 2)[::11]:
            assert cached.words(A, B) == fresh.words(A, B)


gen = st.tuples(st.integers(1, 2), st.integers(1, 2))
word = st.lists(gen, max_size=3).map(tuple)
small = st.integers(-3, 3)


@given(word, word, word, small, small)
@settings(max_examples=60, deadline=None)
def test_bilinear(a, b, w, x, y):
    P = CanonicalPairing(n2_plain().S)
    combo = LinComb(a) * x + LinComb(b) * y
    assert P(combo, w) == x * P(a, w) + y * P(b, w)
    assert P(w, combo) == x * P(w, a) + y * P(w, b)


def test_parse_lincomb():
    e = parse_lincomb("q*t[1,1]*t[2,2] - t[1,2]*t[2,1] + 2", QS, 2)
    assert e == q * t(1, 1) * t(2, 2) - t(1, 2) * t(2, 1) + 2
    with pytest.raises(ValueError):
        parse_lincomb("t[1,3]", QS, 2)
