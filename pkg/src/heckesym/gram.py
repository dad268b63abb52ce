"""
Gram matrix of the canonical pairing on span(t_i^j).

Rows and columns are labeled by (i, j) in the order (1,1), ..., (1,n), (2,1),
..., (n,n); the entry at row (i,j), column (k,l) is <<t_i^j, t_k^l>> =
c S_{ki}^{jl}.  For a TL-type instance the matrix splits into n one-dimensional
blocks, row (i, n+1-i) against column (n+1-i, i), and two-dimensional blocks
indexed by I(n) = {(i,j) : i+j != n+1}:

    rows (i,j), (n+1-j,n+1-i)   x   columns (j,i), (n+1-i,n+1-j)

so that

    (det G)^2 = prod_i (q - z_i)^2  prod_{I(n)} (q^2 - z_{n+1-i} z_j)      (c = 1).
"""

from dataclasses import dataclass
from itertools import product

import numpy

from heckesym.checks import Check
from heckesym.linalg import det_exact, zeros
from heckesym.pairing import CanonicalPairing
from heckesym.scalar import ComplexNumbers
from heckesym.tlhecke import numeric_instance, solve_z


def bi_indices(n):
    return [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]


def _pos(ij, n):
    return (ij[0] - 1) * n + (ij[1] - 1)


def in_pattern(ij, kl, n):
    (i, j), (k, l) = ij, kl
    # q delta part of S_{ki}^{jl}: k = j, l = i; rank-one part: k+i = j+l = n+1
    return (k == j and l == i) or (i + k == n + 1 and j + l == n + 1)


@dataclass(frozen=True, eq=False)
class GramMatrix:
    n: int
    c: object
    entries: numpy.ndarray
    labels: tuple

    def __getitem__(self, key):
        ij, kl = key
        return self.entries[_pos(ij, self.n), _pos(kl, self.n)]


def build_gram(inst, c=1):
    n = inst.n
    f = inst.field
    P = CanonicalPairing(inst.S, c)
    labels = bi_indices(n)
    G = zeros(n * n, n * n, f.zero)
    for a, ij in enumerate(labels):
        for b, kl in enumerate(labels):
            x = P.generators(ij, kl)
            if x:
                if not in_pattern(ij, kl, n):
                    raise AssertionError("entry at %r, %r lies outside the block pattern" % (ij, kl))
                G[a, b] = f(x)
    return GramMatrix(n, c, G, tuple(labels))


def index_set(n):
    """I(n) = {(i, j) : 1 <= i, j <= n, i + j != n + 1}."""
    return [(i, j) for i, j in product(range(1, n + 1), repeat=2) if i + j != n + 1]


def _partner(ij, n):
    i, j = ij
    return (n + 1 - j, n + 1 - i)


@dataclass(frozen=True)
class Block:
    rows: tuple
    cols: tuple
    matrix: tuple        # tuple of row tuples
    labels: tuple = ()   # elements of I(n) producing this block (2x2 only)

    @property
    def size(self):
        return len(self.rows)

    def det(self):
        M = self.matrix
        if self.size == 1:
            return M[0][0]
        return M[0][0] * M[1][1] - M[0][1] * M[1][0]


def block_decompose(G):
    """
    One-dimensional blocks (i = 1..n) followed by the distinct two-dimensional
    blocks, together with the row and column orderings (lists of bi-indices)
    that make G block diagonal.  Raises ValueError if G violates the pattern.
    """
    n = G.n
    blocks = []
    for i in range(1, n + 1):
        r, c = (i, n + 1 - i), (n + 1 - i, i)
        blocks.append(Block((r,), (c,), ((G[r, c],),)))
    seen = set()
    for ij in index_set(n):
        if ij in seen:
            continue
        partner = _partner(ij, n)
        seen.update((ij, partner))
        i, j = ij
        rows = (ij, partner)
        cols = ((j, i), (n + 1 - i, n + 1 - j))
        mat = tuple(tuple(G[r, c] for c in cols) for r in rows)
        blocks.append(Block(rows, cols, mat, (ij, partner)))
    row_order = [r for b in blocks for r in b.rows]
    col_order = [c for b in blocks for c in b.cols]
    if sorted(row_order) != bi_indices(n) or sorted(col_order) != bi_indices(n):
        raise AssertionError("block rows/columns do not cover all bi-indices")
    # everything outside the diagonal blocks must vanish
    owner_col = {}
    for b_idx, b in enumerate(blocks):
        for c in b.cols:
            owner_col[c] = b_idx
    for b_idx, b in enumerate(blocks):
        for r in b.rows:
            for c in bi_indices(n):
                if owner_col[c] != b_idx and G[r, c]:
                    raise ValueError("Gram matrix violates the block pattern at row %r, column %r"
                                     % (r, c))
    return blocks, row_order, col_order


def permuted(G, row_order, col_order):
    n = G.n
    rows = [_pos(r, n) for r in row_order]
    cols = [_pos(c, n) for c in col_order]
    return G.entries[numpy.ix_(rows, cols)]


def gram_det(G):
    """Exact determinant of the full n^2 x n^2 matrix (fraction-free elimination)."""
    return det_exact(G.entries)


def closed_form_sq(inst):
    """prod_i (q - z_i)^2 * prod_{I(n)} (q^2 - z_{n+1-i} z_j)."""
    n, q, z = inst.n, inst.q, inst.z
    out = inst.field.one
    for zi in z:
        out = out * (q - zi) ** 2
    for i, j in index_set(n):
        out = out * (q * q - z[n - i] * z[j - 1])
    return out


def one_by_one_identity(G, inst, blocks=None):
    """Product of the one-dimensional blocks equals prod_i (q - z_i)."""
    blocks = blocks or block_decompose(G)[0]
    f = inst.field
    lhs = f.one
    for b in blocks:
        if b.size == 1:
            lhs = lhs * b.det()
    rhs = f.one
    for zi in inst.z:
        rhs = rhs * (inst.q - zi)
    return f.close(lhs, rhs * G.c ** inst.n)


def two_by_two_identity(G, inst, blocks=None):
    """
    Over I(n) (each distinct block counted once per label),
    prod det(block) = prod (q^2 - z_{n+1-i} z_j); also checked block by block.
    """
    blocks = blocks or block_decompose(G)[0]
    f, n, q, z = inst.field, inst.n, inst.q, inst.z
    c2 = G.c * G.c
    lhs, rhs = f.one, f.one
    for b in blocks:
        if b.size != 2:
            continue
        d = b.det()
        for i, j in b.labels:
            expect = (q * q - z[n - i] * z[j - 1]) * c2
            if not f.close(d, expect):
                return False
            lhs = lhs * d
            rhs = rhs * expect
    return f.close(lhs, rhs)


def prop4_check(inst, c=1):
    """(det G)^2 = c^{2n^2} * closed_form_sq, plus both block sub-identities."""
    f = inst.field
    G = build_gram(inst, c)
    blocks, rows, cols = block_decompose(G)
    d = gram_det(G)
    closed = closed_form_sq(inst) * G.c ** (2 * inst.n * inst.n)
    ok_sq = f.close(d * d, closed)
    ok1 = one_by_one_identity(G, inst, blocks)
    ok2 = two_by_two_identity(G, inst, blocks)
    info = dict(det=d, squared=ok_sq, one_by_one=ok1, two_by_two=ok2)
    if ok_sq and ok1 and ok2:
        return Check.passed(**info)
    return Check.failed(**info)


def degeneracy_factors(inst, scale=1):
    """
    Closed-form factors that vanish, each labeled by type:
      'z_i = q'                  (q - z_i) = 0
      'q^2 = z_{n+1-i} z_j'      for i != j, (i, j) in I(n)
      'q in {0,1}'               the factors with j = i, equal to q^2 - q
    Each 2x2 factor is reported once per pair {(i,j), (n+1-j, n+1-i)}.
    """
    f, n, q, z = inst.field, inst.n, inst.q, inst.z
    if isinstance(f, ComplexNumbers):
        def zero(x, s):
            return f.is_zero(x, s)
    else:
        def zero(x, s):
            return f.is_zero(x)
    out = []
    for i, zi in enumerate(z, 1):
        if zero(q - zi, max(abs_(q), abs_(zi)) * scale):
            out.append({"type": "z_i = q", "i": i})
    for i, j in index_set(n):
        if (i, j) > _partner((i, j), n):
            continue
        x = q * q - z[n - i] * z[j - 1]
        if zero(x, abs_(q * q) * scale):
            kind = "q in {0,1}" if i == j else "q^2 = z_{n+1-i} z_j"
            out.append({"type": kind, "i": i, "j": j})
    return out


def abs_(x):
    try:
        return abs(x)
    except TypeError:
        return 1


# ---------------------------------------------------------------------------
# numerical scan

def _numeric_det(G, ctx):
    """|det G| by LU decomposition with partial pivoting."""
    M = ctx.matrix(G.entries.tolist())
    return abs(ctx.det(M))


def _max_abs(G):
    return max(abs(x) for x in G.entries.flat)


def _row_norm_product(G, ctx):
    out = ctx.mpf(1)
    for row in G.entries:
        out *= ctx.sqrt(sum(abs(x) ** 2 for x in row))
    return out


def relative_det(G, ctx, scale="hadamard", absdet=None):
    """
    |det G| divided by a matrix scale:
      'hadamard'   product of the row norms (Hadamard's bound, so the ratio is in [0, 1])
      'max-entry'  (max |entry|)^(n^2)
    Returns (|det G|, ratio); a zero scale (zero row or matrix) gives ratio 0.
    """
    ad = _numeric_det(G, ctx) if absdet is None else absdet
    if scale == "hadamard":
        den = _row_norm_product(G, ctx)
    elif scale == "max-entry":
        den = _max_abs(G) ** (G.n * G.n)
    else:
        raise ValueError("unknown scale %r" % (scale,))
    return ad, (ad / den if den else ctx.mpf(0))


# sampling ranges (log-uniform moduli, uniform phases); kept near the unit
# circle so that the scale-relative threshold compares quantities of similar size
SIGMA_RADIUS = (0.9, 1.1)
FREE_RADIUS = (0.8, 1.25)


def random_spectrum(n, field, rng, branch, plant=None):
    """
    A random z with z_i z_{n+1-i} = q, trace 1+q.  Free values are
    sqrt(q) * r * e^{i phi}, r in FREE_RADIUS; the last pair is a random root
    of its quadratic.  plant='z=q' forces z_1 = q.
    """
    ctx = field.ctx
    r = n // 2
    free = []
    for k in range(r - 1):
        rad = float(numpy.exp(rng.uniform(numpy.log(FREE_RADIUS[0]), numpy.log(FREE_RADIUS[1]))))
        phi = float(rng.uniform(0, 2 * numpy.pi))
        free.append(field.sqrt_q * rad * ctx.expjpi(phi / numpy.pi))
    if plant == "z=q":
        if n < 4:
            raise ValueError("z_i = q is impossible for n = %d" % n)
        free[0] = field.q
    root = 1 if rng.integers(2) else -1
    z, _ = solve_z(n, tuple(free), branch, field, root=root)
    return z


def _planted_sigmas_n3(branch, field):
    """
    sigma with q^2 = z_3 z_2 for n = 3: z = eps (s^-2, s^2, s^6), which needs
    eps s^8 - s^6 + eps s^4 - s^2 + eps = 0.
    """
    ctx = field.ctx
    eps = branch
    roots = ctx.polyroots([eps, -1, eps, -1, eps], maxsteps=200, extraprec=2 * field.bits)
    out = []
    for w in roots:             # w = s^2
        s = ctx.sqrt(w)
        if abs(s ** 4 - 1) > 1e-6 and abs(s) > 1e-6:
            out.append(s)
    return out


def scan(n, samples=100, seed=0, sigma=None, tol=1e-8, bits=64, branch=None, plant=None,
         scale="hadamard"):
    """
    Numerical nondegeneracy scan of det G over random spectra.

    sigma: fixed complex sigma, or None for a fresh random sigma per sample
    (|sigma| in SIGMA_RADIUS, uniform phase).  branch: +1/-1 or None for random.
    plant: None, 'z=q' (n >= 4) or 'q^2=zz' (n = 3) to plant a degeneracy in
    every sample.  A sample is flagged when relative_det(G, scale) < tol.
    """
    if n == 2:
        raise ValueError("n = 2 is always degenerate: the factor q - z_2 vanishes "
                         "because z = (1, q); nothing to scan")
    if n < 3:
        raise ValueError("scan needs n >= 3")
    rng = numpy.random.default_rng(seed)
    flagged = []
    min_abs = min_rel = min_rel_max = None
    max_abs = None
    for k in range(samples):
        eps = branch if branch is not None else (1 if rng.integers(2) else -1)
        if sigma is not None:
            s = complex(sigma)
        else:
            s = complex(numpy.exp(rng.uniform(numpy.log(SIGMA_RADIUS[0]), numpy.log(SIGMA_RADIUS[1])))
                        * numpy.exp(1j * rng.uniform(0, 2 * numpy.pi)))
        field = ComplexNumbers(bits, s)
        if plant == "q^2=zz":
            if n != 3:
                raise ValueError("the q^2 = z z planting is implemented for n = 3")
            cands = _planted_sigmas_n3(eps, field)
            s0 = cands[int(rng.integers(len(cands)))]
            field = ComplexNumbers(bits, s0)
            z = tuple(eps * field.sigma ** p for p in (-2, 2, 6))
        else:
            z = random_spectrum(n, field, rng, eps, plant)
        # balanced gauge u_i = v^i keeps all entries of G of comparable size;
        # det G depends on z only
        v = [field.ctx.sqrt(zi / (field.one + field.q)) for zi in z]
        inst = numeric_instance(z, field, eps, v)
        G = build_gram(inst, 1)
        ad, rel = relative_det(G, field.ctx, scale)
        _, rel_max = relative_det(G, field.ctx, "max-entry", absdet=ad)
        min_abs = ad if min_abs is None else min(min_abs, ad)
        max_abs = ad if max_abs is None else max(max_abs, ad)
        min_rel = rel if min_rel is None else min(min_rel, rel)
        min_rel_max = rel_max if min_rel_max is None else min(min_rel_max, rel_max)
        if rel < tol:
            flagged.append({
                "sample": k,
                "sigma": field.fmt(field.sigma),
                "branch": "+" if eps > 0 else "-",
                "absdet": float(ad),
                "reldet": float(rel),
                "factors": degeneracy_factors(inst, scale=1e8),
            })
    return {
        "n": n,
        "samples": samples,
        "seed": seed,
        "tol": tol,
        "plant": plant,
        "min_absdet": float(min_abs),
        "max_absdet": float(max_abs),
        "scale": scale,
        "min_reldet": float(min_rel),
        "min_reldet_max_entry": float(min_rel_max),
        "degenerate_count": len(flagged),
        "flagged": flagged,
    }


def n3_roots_check(sigma, bits=64, tol=1e-8):
    """
    For n = 3 the spectrum is fixed by the branch and by the choice of root
    z_1 of z + q/z = 1 + q - eps sqrt(q): four spectra in all.  Returns one
    record per (branch, root) with its relative determinant.
    """
    out = []
    for eps in (-1, 1):
        for root in (1, -1):
            field = ComplexNumbers(bits, complex(sigma))
            z, _ = solve_z(3, (), eps, field, root=root)
            v = [field.ctx.sqrt(zi / (field.one + field.q)) for zi in z]
            G = build_gram(numeric_instance(z, field, eps, v), 1)
            ad, rel = relative_det(G, field.ctx)
            out.append({"branch": "+" if eps > 0 else "-", "root": root,
                        "z1": field.fmt(z[0]), "reldet": float(rel),
                        "nondegenerate": bool(rel >= tol)})
    return out
