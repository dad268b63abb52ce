"""
The rank-2 quantum determinant of a TL-type instance, the contractions M, N,
the normalization constant c and the descent of the pairing to det t = 1.

    det t = u_{ij} t_k^i t_l^j v^{kl}
    M_k^l = u_{ik} v^{li},   N_k^l = u_{ki} v^{il}
    c^2   = -1 / (q (1+q) m)          when M = N = m id
"""

from itertools import product

from heckesym.checks import Check
from heckesym.linalg import SparseEchelon, is_scalar_matrix, matmul, zeros
from heckesym.pairing import CanonicalPairing, LinComb, counit, relators, words_upto
from heckesym.scalar import FieldError


def build_det(inst):
    n = inst.n
    out = {}
    for i, k in product(range(1, n + 1), repeat=2):
        j, l = n + 1 - i, n + 1 - k
        coeff = inst.u2(i, j) * inst.v2(k, l)
        if coeff:
            w = ((k, i), (l, j))
            out[w] = out.get(w, 0) + coeff
    return LinComb(out)


def UV_matrices(inst):
    """Dense U[i][j] = u_{ij} and V[k][l] = v^{kl} (0-based)."""
    f, n = inst.field, inst.n
    U, V = zeros(n, n, f.zero), zeros(n, n, f.zero)
    for i in range(1, n + 1):
        U[i - 1, n - i] = inst.u[i - 1]
        V[i - 1, n - i] = inst.v[i - 1]
    return U, V


def MN_matrices(inst):
    """
    M[k][l] = M_k^l = sum_i u_{ik} v^{li},  N[k][l] = N_k^l = sum_i u_{ki} v^{il}.

    Both are also checked against the products V U and U V: M_k^l is the
    (l, k) entry of V U and N_k^l the (k, l) entry of U V.
    """
    f, n = inst.field, inst.n
    rng = range(1, n + 1)
    M, N = zeros(n, n, f.zero), zeros(n, n, f.zero)
    for k, l in product(rng, repeat=2):
        M[k - 1, l - 1] = sum((inst.u2(i, k) * inst.v2(l, i) for i in rng), f.zero)
        N[k - 1, l - 1] = sum((inst.u2(k, i) * inst.v2(i, l) for i in rng), f.zero)
    U, V = UV_matrices(inst)
    VU, UV = matmul(V, U), matmul(U, V)
    if any(M[k, l] != VU[l, k] or N[k, l] != UV[k, l]
           for k, l in product(range(n), repeat=2)):
        raise AssertionError("index formula for M, N disagrees with the matrix products")
    return M, N


def centrality_criterion(inst):
    """
    (m, n_scalar) when M and N are both scalar, else None.

    Also asserts MN = q (1+q)^-2 id, and m = n_scalar when scalar.
    """
    f = inst.field
    M, N = MN_matrices(inst)
    MN = matmul(M, N)
    target = inst.lam
    for a in range(inst.n):
        for b in range(inst.n):
            want = target if a == b else f.zero
            if not f.close(MN[a, b], want):
                raise AssertionError("MN != q(1+q)^-2 id at (%d, %d)" % (a + 1, b + 1))
    m, nn = is_scalar_matrix(M), is_scalar_matrix(N)
    if m is None or nn is None:
        return None
    if not f.close(m, nn):
        raise AssertionError("scalar M and N differ: %s vs %s" % (f.fmt(m), f.fmt(nn)))
    if not f.close(m * m, inst.lam):
        raise AssertionError("scalar m violates m^2 = q (1+q)^-2")
    return m, nn


def c_squared(inst, m):
    return -1 / (inst.q * (inst.field.one + inst.q) * m)


def compute_c(inst, sign=1):
    """
    c with c^2 = -1 / (q (1+q) m), m the scalar value of M.
    ``sign`` picks between the two roots (+1 is the principal root of the field).
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    crit = centrality_criterion(inst)
    if crit is None:
        raise ValueError("M is not scalar: det t is not central and c is undefined")
    m = crit[0]
    c2 = c_squared(inst, m)
    try:
        c = inst.field.sqrt(c2)
    except FieldError as exc:
        raise FieldError(
            "field %s cannot represent c (c^2 = %s); use a quadratic extension with delta = -1"
            % (inst.field, inst.field.fmt(c2))) from exc
    return sign * c


def _pairing(inst, c, pairing):
    return pairing or CanonicalPairing(inst.S, c)


def eq3_check(inst, c=1, pairing=None):
    """
    <<t_k^l, det t>> = -c^2 q (1+q) M_k^l and <<det t, t_k^l>> = -c^2 q (1+q) N_k^l.
    """
    P = _pairing(inst, c, pairing)
    f, n = inst.field, inst.n
    det = build_det(inst)
    M, N = MN_matrices(inst)
    factor = -P.c * P.c * inst.q * (f.one + inst.q)
    for k, l in product(range(1, n + 1), repeat=2):
        g = LinComb.gen(k, l)
        left, right = P(g, det), P(det, g)
        if not f.close(left, factor * M[k - 1, l - 1]):
            return Check.failed(side="left", k=k, l=l, value=left)
        if not f.close(right, factor * N[k - 1, l - 1]):
            return Check.failed(side="right", k=k, l=l, value=right)
    return Check.passed()


def eq2_check(inst, L=2, c=None, pairing=None):
    """<<det t, a>> = eps(a) = <<a, det t>> for every word |a| <= L (c from compute_c by default)."""
    if pairing is None:
        if c is None:
            c = compute_c(inst)
        pairing = CanonicalPairing(inst.S, c)
    f = inst.field
    det = build_det(inst)
    for w in words_upto(inst.n, L):
        e = counit(w)
        left, right = pairing(det, w), pairing(w, det)
        if not f.close(left, f(e)):
            return Check.failed(side="det-left", word=w, value=left)
        if not f.close(right, f(e)):
            return Check.failed(side="det-right", word=w, value=right)
    return Check.passed(degree=L)


# ---------------------------------------------------------------------------
# centrality by linear algebra in degree 3

MAX_IDEAL_N = 4


def _bidegree(word, n):
    return (sum(2 * i - n - 1 for i, _ in word), sum(2 * j - n - 1 for _, j in word))


def _word_index(word, n):
    k = 0
    for i, j in word:
        k = k * n * n + (i - 1) * n + (j - 1)
    return k


def ideal_membership_check(inst=None, S=None, det=None):
    """
    For each generator g, is det t * g - g * det t in the degree-3 part of the
    ideal generated by the RTT relators?  Exact sparse elimination, done
    separately in each bidegree (charges 2i - n - 1 of lower and upper indices)
    when the relators are homogeneous.
    """
    S = S if S is not None else inst.S
    n = S.n
    if n > MAX_IDEAL_N:
        raise ValueError("ideal membership is limited to n <= %d (got n = %d)" % (MAX_IDEAL_N, n))
    if det is None:
        det = build_det(inst)
    rels = list(relators(S).values())
    gens = [LinComb.gen(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]

    homogeneous = all(len({_bidegree(w, n) for w in r.terms}) == 1 for r in rels)

    def key(word):
        return _bidegree(word, n) if homogeneous else None

    rows = {}
    for r in rels:
        for g in gens:
            for prod in (r * g, g * r):
                if not prod:
                    continue
                k = key(next(iter(prod.terms)))
                rows.setdefault(k, []).append(
                    {_word_index(w, n): c for w, c in prod.terms.items()})
    echelons = {}
    for k, rs in rows.items():
        ech = SparseEchelon()
        for row in sorted(rs, key=len):
            ech.add(row)
        echelons[k] = ech

    for g in gens:
        comm = det * g - g * det
        parts = {}
        for w, c in comm.terms.items():
            parts.setdefault(key(w), {})[_word_index(w, n)] = c
        for k, vec in parts.items():
            ech = echelons.get(k)
            if ech is None or not ech.contains(vec):
                (i, j), = next(iter(g.terms))
                return Check.failed(generator=(i, j), bidegree=k)
    return Check.passed()
