"""
Exact linear algebra over the scalar fields.

Dense matrices are numpy object arrays (or nested lists) of field elements.
det_exact and rank_exact use fraction-free (Bareiss) elimination; the sparse
echelon form is used for span/membership questions in tensor powers and the
free algebra, where rows have a handful of nonzeros.
"""

from fractions import Fraction

import numpy


def _exact_div(a, b):
    if isinstance(a, int) and isinstance(b, int):
        q, r = divmod(a, b)
        assert r == 0, (a, b)
        return q
    return a / b


def _rows(M):
    if isinstance(M, numpy.ndarray):
        if M.ndim != 2:
            raise ValueError("expected a 2-dimensional matrix")
        return [list(r) for r in M]
    rows = [list(r) for r in M]
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged matrix")
    return rows


def zeros(nrows, ncols, zero=0):
    M = numpy.empty((nrows, ncols), dtype=object)
    M[:, :] = zero
    return M


def identity(n, one=1, zero=0):
    M = zeros(n, n, zero)
    for i in range(n):
        M[i, i] = one
    return M


def det_exact(M):
    """Determinant by Bareiss elimination with row pivoting."""
    A = _rows(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("det_exact needs a square matrix, got %dx%d"
                         % (n, len(A[0]) if A else 0))
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not A[k][k]:
            for p in range(k + 1, n):
                if A[p][k]:
                    A[k], A[p] = A[p], A[k]
                    sign = -sign
                    break
            else:
                return A[k][k] * 0
        akk = A[k][k]
        rowk = A[k]
        for i in range(k + 1, n):
            rowi = A[i]
            aik = rowi[k]
            if aik:
                for j in range(k + 1, n):
                    rowi[j] = _exact_div(rowi[j] * akk - aik * rowk[j], prev)
            elif not (isinstance(prev, int) and prev == 1):
                for j in range(k + 1, n):
                    rowi[j] = _exact_div(rowi[j] * akk, prev)
            else:
                for j in range(k + 1, n):
                    rowi[j] = rowi[j] * akk
            rowi[k] = akk * 0
        prev = akk
    d = A[n - 1][n - 1]
    return -d if sign < 0 else d


def rank_exact(M):
    """Rank by fraction-free row echelon reduction."""
    A = _rows(M)
    if not A:
        return 0
    nrows, ncols = len(A), len(A[0])
    r = 0
    prev = 1
    for col in range(ncols):
        if r == nrows:
            break
        piv = None
        for p in range(r, nrows):
            if A[p][col]:
                piv = p
                break
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        arc = A[r][col]
        rowr = A[r]
        for i in range(r + 1, nrows):
            rowi = A[i]
            aic = rowi[col]
            for j in range(col + 1, ncols):
                rowi[j] = _exact_div(rowi[j] * arc - aic * rowr[j], prev)
            rowi[col] = arc * 0
        prev = arc
        r += 1
    return r


def is_scalar_matrix(M):
    """Return m if M == m * identity entrywise, else None."""
    A = _rows(M)
    n = len(A)
    if n == 0 or any(len(r) != n for r in A):
        return None
    m = A[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if A[i][j] != m:
                    return None
            elif A[i][j]:
                return None
    return m


def inverse_exact(M):
    """Inverse by Gauss-Jordan elimination over the field of the entries."""
    A = _rows(M)
    n = len(A)
    if any(len(r) != n for r in A):
        raise ValueError("inverse_exact needs a square matrix")
    one = None
    for r in A:
        for x in r:
            if x:
                one = x / x
                break
        if one is not None:
            break
    if one is None:
        raise ZeroDivisionError("matrix is not invertible")
    zero = one * 0
    B = [[one if i == j else zero for j in range(n)] for i in range(n)]
    for k in range(n):
        piv = next((p for p in range(k, n) if A[p][k]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is not invertible")
        A[k], A[piv] = A[piv], A[k]
        B[k], B[piv] = B[piv], B[k]
        inv = one / A[k][k]
        A[k] = [x * inv for x in A[k]]
        B[k] = [x * inv for x in B[k]]
        for i in range(n):
            if i != k and A[i][k]:
                f = A[i][k]
                A[i] = [a - f * b for a, b in zip(A[i], A[k])]
                B[i] = [a - f * b for a, b in zip(B[i], B[k])]
    out = numpy.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = B[i][j]
    return out


def matmul(A, B):
    """Exact product of object matrices (numpy.dot also works; this avoids float coercion)."""
    A = _rows(A)
    B = _rows(B)
    n, k, m = len(A), len(B), len(B[0]) if B else 0
    if A and len(A[0]) != k:
        raise ValueError("shape mismatch")
    out = numpy.empty((n, m), dtype=object)
    for i in range(n):
        for j in range(m):
            acc = 0
            for t in range(k):
                a = A[i][t]
                if a:
                    b = B[t][j]
                    if b:
                        acc = acc + a * b
            out[i, j] = acc
    return out


class SparseEchelon:
    """
    Incremental row echelon form of sparse vectors {column: value}.

    Each stored row is normalized to leading coefficient 1 at its smallest
    column; reduction only ever introduces larger columns, so it terminates.
    """

    def __init__(self):
        self.pivots = {}

    @property
    def rank(self):
        return len(self.pivots)

    def reduce(self, row):
        row = {k: v for k, v in row.items() if v}
        pivots = self.pivots
        done = set()
        while row:
            lead = None
            for k in row:
                if k not in done and (lead is None or k < lead):
                    lead = k
            if lead is None:
                break
            prow = pivots.get(lead)
            if prow is None:
                # leading column is free; later columns may still reduce
                done.add(lead)
                continue
            f = row.pop(lead)
            for k, v in prow.items():
                if k == lead:
                    continue
                w = row.get(k, 0) - f * v
                if w:
                    row[k] = w
                else:
                    row.pop(k, None)
        return row

    def add(self, row):
        """Insert a row; True if it was independent of the rows so far."""
        row = self.reduce(row)
        if not row:
            return False
        lead = min(row)
        x = row[lead]
        inv = Fraction(1, x) if isinstance(x, int) else 1 / x
        self.pivots[lead] = {k: v * inv for k, v in row.items()}
        return True

    def contains(self, row):
        return not self.reduce(row)


def sparse_rank(rows):
    """Rank of a collection of sparse rows; shorter rows are eliminated first."""
    ech = SparseEchelon()
    for row in sorted(rows, key=len):
        ech.add(row)
    return ech.rank
