"""
Sparse linear operators on tensor powers V^{(x)m}, dim V = n.

Basis vectors are multi-indices (i1, ..., im) with entries in 1..n, flattened
lexicographically.  A TensorOperator A stores A(x_I) = sum_J A[I, J] x_J as
{I: {J: coeff}}; only nonzero coefficients are kept.
"""

from itertools import product

from heckesym.checks import Check
from heckesym.linalg import inverse_exact, zeros


def multi_indices(n, m):
    return list(product(range(1, n + 1), repeat=m))


def _flat(I, n):
    k = 0
    for i in I:
        k = k * n + (i - 1)
    return k


class TensorOperator:

    def __init__(self, n, arity, table=None):
        self.n = n
        self.arity = arity
        clean = {}
        for I, row in (table or {}).items():
            if len(I) != arity or any(not 1 <= i <= n for i in I):
                raise ValueError("bad multi-index %r for n=%d, arity=%d" % (I, n, arity))
            r = {J: c for J, c in row.items() if c}
            for J in r:
                if len(J) != arity or any(not 1 <= j <= n for j in J):
                    raise ValueError("bad multi-index %r for n=%d, arity=%d" % (J, n, arity))
            if r:
                clean[tuple(I)] = r
        self.table = clean

    @classmethod
    def from_entries(cls, n, arity, entries):
        """entries: {(I, J): coeff} with A(x_I) = sum_J coeff x_J."""
        table = {}
        for (I, J), c in entries.items():
            table.setdefault(tuple(I), {})[tuple(J)] = c
        return cls(n, arity, table)

    @classmethod
    def identity(cls, n, arity, one=1):
        return cls(n, arity, {I: {I: one} for I in multi_indices(n, arity)})

    @classmethod
    def zero(cls, n, arity):
        return cls(n, arity, {})

    def __getitem__(self, key):
        I, J = key
        return self.table.get(tuple(I), {}).get(tuple(J), 0)

    def entries(self):
        for I, row in self.table.items():
            for J, c in row.items():
                yield I, J, c

    @property
    def nnz(self):
        return sum(len(r) for r in self.table.values())

    def _check(self, other):
        if not isinstance(other, TensorOperator):
            raise TypeError("expected a TensorOperator")
        if (self.n, self.arity) != (other.n, other.arity):
            raise ValueError("operator mismatch: (n=%d, arity=%d) vs (n=%d, arity=%d)"
                             % (self.n, self.arity, other.n, other.arity))

    def compose(self, other):
        """self o other: apply ``other`` first."""
        self._check(other)
        out = {}
        for I, row in other.table.items():
            acc = {}
            for K, b in row.items():
                arow = self.table.get(K)
                if not arow:
                    continue
                for J, a in arow.items():
                    acc[J] = acc.get(J, 0) + b * a
            out[I] = acc
        return TensorOperator(self.n, self.arity, out)

    __matmul__ = compose

    def __add__(self, other):
        self._check(other)
        out = {I: dict(r) for I, r in self.table.items()}
        for I, J, c in other.entries():
            row = out.setdefault(I, {})
            row[J] = row.get(J, 0) + c
        return TensorOperator(self.n, self.arity, out)

    def scale(self, c):
        if not c:
            return TensorOperator.zero(self.n, self.arity)
        return TensorOperator(self.n, self.arity,
                              {I: {J: c * a for J, a in r.items()} for I, r in self.table.items()})

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, TensorOperator):
            return NotImplemented
        return (self.n, self.arity) == (other.n, other.arity) and self.table == other.table

    def is_zero(self):
        return not self.table

    def apply(self, vec):
        """Image of a vector {multi-index: coeff}."""
        out = {}
        for I, c in vec.items():
            if not c:
                continue
            for J, a in self.table.get(tuple(I), {}).items():
                out[J] = out.get(J, 0) + c * a
        return {J: c for J, c in out.items() if c}

    def __repr__(self):
        return "TensorOperator(n=%d, arity=%d, nnz=%d)" % (self.n, self.arity, self.nnz)


def flip(n, one=1):
    """The classical flip x_i (x) x_j -> x_j (x) x_i."""
    return TensorOperator(n, 2, {(i, j): {(j, i): one} for i in range(1, n + 1)
                                 for j in range(1, n + 1)})


def lift(S, i, m):
    """S acting on tensor factors i, i+1 (1-based) of V^{(x)m}."""
    if S.arity != 2:
        raise ValueError("lift needs an operator on V (x) V")
    if not 1 <= i <= m - 1:
        raise ValueError("position %d out of range 1..%d" % (i, m - 1))
    out = {}
    for I in multi_indices(S.n, m):
        row = S.table.get(I[i - 1:i + 1])
        if row:
            out[I] = {I[:i - 1] + K + I[i + 1:]: c for K, c in row.items()}
    return TensorOperator(S.n, m, out)


def _exact_zero(x):
    return not x


def first_difference(A, B, is_zero=None):
    """First (input, output, a, b) where A and B differ (per ``is_zero`` of a - b), or None."""
    is_zero = is_zero or _exact_zero
    keys = set(A.table) | set(B.table)
    for I in sorted(keys):
        ra, rb = A.table.get(I, {}), B.table.get(I, {})
        for J in sorted(set(ra) | set(rb)):
            a, b = ra.get(J, 0), rb.get(J, 0)
            if not is_zero(a - b):
                return I, J, a, b
    return None


def ybe_check(S, is_zero=None):
    """S12 S23 S12 == S23 S12 S23, exactly unless a tolerant ``is_zero`` is given."""
    if S.arity != 2:
        raise ValueError("ybe_check needs an operator on V (x) V")
    S12, S23 = lift(S, 1, 3), lift(S, 2, 3)
    lhs = S12 @ S23 @ S12
    rhs = S23 @ S12 @ S23
    diff = first_difference(lhs, rhs, is_zero)
    if diff is None:
        return Check.passed()
    I, J, a, b = diff
    return Check.failed(input=I, output=J, lhs=a, rhs=b)


def hecke_check(S, q, is_zero=None):
    """(id + S)(q id - S) == 0."""
    if S.arity != 2:
        raise ValueError("hecke_check needs an operator on V (x) V")
    one = q ** 0
    ident = TensorOperator.identity(S.n, 2, one)
    prod = (ident + S) @ (ident.scale(q) - S)
    diff = first_difference(prod, TensorOperator.zero(S.n, 2), is_zero)
    if diff is None:
        return Check.passed()
    I, J, c, _ = diff
    return Check.failed(input=I, output=J, value=c)


def as_matrix(A, zero=0):
    """Dense n^m x n^m matrix M with M[flat(J), flat(I)] = A[I, J] (so M e_I = A x_I)."""
    N = A.n ** A.arity
    M = zeros(N, N, zero)
    for I, J, c in A.entries():
        M[_flat(J, A.n), _flat(I, A.n)] = c
    return M


def from_matrix(M, n, arity):
    idx = multi_indices(n, arity)
    table = {}
    for a, I in enumerate(idx):
        for b, J in enumerate(idx):
            c = M[b][a]
            if c:
                table.setdefault(I, {})[J] = c
    return TensorOperator(n, arity, table)


def conjugate(S, W):
    """
    Change of basis x_i -> sum_k W[k][i] x_k applied to S:  (W(x)W)^-1 S (W(x)W).
    W is an n x n invertible matrix (nested lists or object array).
    """
    n = S.n
    Winv = inverse_exact(W)
    idx = multi_indices(n, 2)

    def ww(M, I, J):
        return M[J[0] - 1][I[0] - 1] * M[J[1] - 1][I[1] - 1]

    # (W(x)W) x_I = sum_J ww(W, I, J) x_J
    WW = TensorOperator(n, 2, {I: {J: ww(W, I, J) for J in idx} for I in idx})
    WWinv = TensorOperator(n, 2, {I: {J: ww(Winv, I, J) for J in idx} for I in idx})
    return WWinv @ S @ WW
