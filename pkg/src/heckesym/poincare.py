"""
Dimensions of the quadratic algebras

    Lambda_+ = T(V) / (Im(q id - S)),    Lambda_- = T(V) / (Im(id + S)),

the identity P_+(t) P_-(-t) = 1 between their Poincare series, and the integer
bookkeeping d_m = n d_{m-1} - d_{m-2} for the symmetric side.
"""

from dataclasses import dataclass
from itertools import product

from heckesym.checks import Check
from heckesym.linalg import SparseEchelon
from heckesym.tensorop import TensorOperator

MAX_TENSOR_DIM = 1 << 16


@dataclass(frozen=True)
class DimTable:
    n: int
    lmax: int
    plus: tuple
    minus: tuple


def _quadratic_image_basis(K):
    """Echelon basis of Im K in V (x) V, as sparse vectors keyed by pairs."""
    ech = SparseEchelon()
    n = K.n
    idx = list(product(range(1, n + 1), repeat=2))
    pos = {J: a for a, J in enumerate(idx)}
    rows = []
    for I in idx:
        img = K.apply({I: 1})
        if img:
            rows.append({pos[J]: c for J, c in img.items()})
    for r in sorted(rows, key=len):
        ech.add(r)
    return [{idx[a]: c for a, c in row.items()} for row in ech.pivots.values()]


def _flat(I, n):
    k = 0
    for i in I:
        k = k * n + (i - 1)
    return k


def relation_rank(K, l):
    """dim of sum_i V^{i-1} (x) Im K (x) V^{l-i-1} inside V^{(x)l}."""
    n = K.n
    if l < 2:
        return 0
    basis = _quadratic_image_basis(K)
    rows = []
    for i in range(l - 1):
        for pre in product(range(1, n + 1), repeat=i):
            for post in product(range(1, n + 1), repeat=l - i - 2):
                for vec in basis:
                    rows.append({_flat(pre + J + post, n): c for J, c in vec.items()})
    ech = SparseEchelon()
    for r in sorted(rows, key=len):
        ech.add(r)
    return ech.rank


def lambda_dims(S, sign, lmax, q=None):
    """dim Lambda_sign^l for l = 0..lmax (sign '+' needs q)."""
    n = S.n
    if n ** lmax > MAX_TENSOR_DIM:
        raise ValueError("V^(x)%d has dimension %d, above the limit %d"
                         % (lmax, n ** lmax, MAX_TENSOR_DIM))
    one = None
    for _, _, c in S.entries():
        one = c ** 0
        break
    ident = TensorOperator.identity(n, 2, one if one is not None else 1)
    if sign in ("+", 1):
        if q is None:
            raise ValueError("the plus side needs q")
        K = ident.scale(q) - S
    elif sign in ("-", -1):
        K = ident + S
    else:
        raise ValueError("sign must be '+' or '-'")
    return tuple(n ** l - relation_rank(K, l) for l in range(lmax + 1))


def dim_table(inst, lmax):
    S = inst.S
    return DimTable(inst.n, lmax, lambda_dims(S, "+", lmax, inst.q), lambda_dims(S, "-", lmax))


def series_product_check(table):
    """sum_k (-1)^k plus[l-k] minus[k] = [l == 0] for l <= lmax."""
    for l in range(table.lmax + 1):
        total = sum((-1) ** k * table.plus[l - k] * table.minus[k] for k in range(l + 1))
        if total != (1 if l == 0 else 0):
            return Check.failed(l=l, value=total)
    return Check.passed()


def sym_dim(n, m):
    """d_m with d_0 = 1, d_1 = n, d_m = n d_{m-1} - d_{m-2}."""
    if m < 0:
        raise ValueError("m must be >= 0")
    a, b = 1, n
    if m == 0:
        return 1
    for _ in range(m - 1):
        a, b = b, n * b - a
    return b


def clebsch_gordan_dim_check(n, imax, step=2):
    """
    d_i d_j = sum d_k over |i-j| <= k <= i+j in steps of ``step``, for all
    i, j <= imax.  step=2 is the parity-matching rule; step=1 is the other
    reading, which already fails at i = j = 1.
    """
    if step not in (1, 2):
        raise ValueError("step must be 1 or 2")
    d = [sym_dim(n, k) for k in range(2 * imax + 1)]
    for i in range(imax + 1):
        for j in range(imax + 1):
            rhs = sum(d[k] for k in range(abs(i - j), i + j + 1, step))
            if d[i] * d[j] != rhs:
                return Check.failed(i=i, j=j, lhs=d[i] * d[j], rhs=rhs)
    return Check.passed()
