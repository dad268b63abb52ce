"""
The canonical pairing on the quantum matrix bialgebra A(S).

Generators t_i^j are written (i, j); a word is a tuple of generators and the
empty tuple is the unit.  The pairing is fixed on generators by

    <<t_i^j, t_k^l>> = c S_{ki}^{jl}

and extended with
    <<a, bc>> = <<a_(1), c>> <<a_(2), b>>      (products on the right)
    <<ab, c>> = <<a, c_(1)>> <<b, c_(2)>>      (products on the left)
    <<1, a>> = eps(a) = <<a, 1>>
where Delta(t_i^j) = sum_p t_i^p (x) t_p^j and eps(t_i^j) = delta_i^j.
"""

from fractions import Fraction
from itertools import product

from heckesym.checks import Check
from heckesym.scalar import evaluate


class LinComb:
    """Element of the free algebra on the t_i^j: {word: coeff}, no zero coefficients."""

    __slots__ = ("terms",)
    # lets field elements defer to our reflected operators
    is_algebra_element = True

    def __init__(self, terms=None):
        if isinstance(terms, tuple):
            terms = {terms: 1}
        self.terms = {w: c for w, c in (terms or {}).items() if c}

    @classmethod
    def gen(cls, i, j):
        return cls({((i, j),): 1})

    @classmethod
    def unit(cls, one=1):
        return cls({(): one})

    def __add__(self, other):
        other = _lc(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return LinComb(out)

    __radd__ = __add__

    def __neg__(self):
        return LinComb({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lc(other))

    def __rsub__(self, other):
        return _lc(other) - self

    def __mul__(self, other):
        if isinstance(other, LinComb):
            out = {}
            for w1, c1 in self.terms.items():
                for w2, c2 in other.terms.items():
                    w = w1 + w2
                    out[w] = out.get(w, 0) + c1 * c2
            return LinComb(out)
        return LinComb({w: c * other for w, c in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, LinComb):  # pragma: no cover - handled by __mul__
            return other.__mul__(self)
        return LinComb({w: other * c for w, c in self.terms.items()})

    def __truediv__(self, other):
        if isinstance(other, LinComb):
            raise TypeError("cannot divide by an element of the free algebra")
        inv = Fraction(1, other) if isinstance(other, int) else 1 / other
        return self * inv

    def __eq__(self, other):
        if not isinstance(other, LinComb):
            if other == 0:
                return not self.terms
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def degrees(self):
        return {len(w) for w in self.terms}

    def fmt(self, fmt=str):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms):
            c = fmt(self.terms[w])
            word = "*".join("t[%d,%d]" % g for g in w)
            if not word:
                parts.append("(%s)" % c)
            elif c == "1":
                parts.append(word)
            else:
                parts.append("(%s)*%s" % (c, word))
        return " + ".join(parts)

    def __repr__(self):
        return "LinComb(%s)" % self.fmt()


def _lc(x):
    if isinstance(x, LinComb):
        return x
    if isinstance(x, tuple):
        return LinComb({x: 1})
    return LinComb({(): x})


def t(i, j):
    return LinComb.gen(i, j)


def parse_lincomb(text, field, n=None):
    """Parse e.g. 'q*t[1,1]*t[2,2] - t[1,2]*t[2,1]' over ``field``."""
    def gen(name, idx):
        if name != "t" or len(idx) != 2:
            raise ValueError("generators are written t[i,j]")
        if n is not None and not all(1 <= k <= n for k in idx):
            raise ValueError("generator index out of range 1..%d" % n)
        return LinComb.gen(*idx)

    value = _lc(evaluate(text, field.names(), subscript=gen))
    return LinComb({w: field(c) for w, c in value.terms.items()})


def words_upto(n, L):
    """All words of length <= L in the n^2 generators."""
    gens = [(i, j) for i in range(1, n + 1) for j in range(1, n + 1)]
    out = []
    for length in range(L + 1):
        out.extend(product(gens, repeat=length))
    return out


def counit(x):
    """eps on a word or LinComb."""
    if isinstance(x, tuple):
        return 1 if all(i == j for i, j in x) else 0
    total = 0
    for w, c in _lc(x).terms.items():
        if all(i == j for i, j in w):
            total = total + c
    return total


def coproduct(word, n):
    """Delta(word) as a list of (left word, right word), each with coefficient 1."""
    out = []
    for p in product(range(1, n + 1), repeat=len(word)):
        left = tuple((g[0], pk) for g, pk in zip(word, p))
        right = tuple((pk, g[1]) for g, pk in zip(word, p))
        out.append((left, right))
    return out


class CanonicalPairing:
    """<< , >>_c for the operator S, memoized on pairs of words."""

    def __init__(self, S, c=1, cache=True):
        if S.arity != 2:
            raise ValueError("need an operator on V (x) V")
        self.S = S
        self.n = S.n
        self.c = c
        self._memo = {} if cache else None

    def generators(self, a, b):
        """<<t_i^j, t_k^l>> = c S_{ki}^{jl} for a = (i, j), b = (k, l)."""
        (i, j), (k, l) = a, b
        s = self.S.table.get((k, i), {}).get((j, l), 0)
        return self.c * s if s else 0

    def words(self, A, B):
        if self._memo is not None:
            key = (A, B)
            v = self._memo.get(key)
            if v is None:
                v = self._words(A, B)
                self._memo[key] = v
            return v
        return self._words(A, B)

    def _words(self, A, B):
        if not A:
            return counit(B)
        if not B:
            return counit(A)
        n = self.n
        if len(A) == 1:
            if len(B) == 1:
                return self.generators(A[0], B[0])
            # <<t_x^y, B' b>> = sum_p <<t_x^p, b>> <<t_p^y, B'>>
            x, y = A[0]
            last, rest = B[-1], B[:-1]
            total = 0
            for p in range(1, n + 1):
                f = self.generators((x, p), last)
                if f:
                    g = self.words(((p, y),), rest)
                    if g:
                        total = total + f * g
            return total
        # <<a A', B>> = sum <<a, B_(1)>> <<A', B_(2)>>
        a, rest = A[:1], A[1:]
        total = 0
        for left, right in coproduct(B, n):
            f = self.words(a, left)
            if f:
                g = self.words(rest, right)
                if g:
                    total = total + f * g
        return total

    def __call__(self, a, b):
        a, b = _lc(a), _lc(b)
        total = 0
        for wa, ca in a.terms.items():
            for wb, cb in b.terms.items():
                v = self.words(wa, wb)
                if v:
                    total = total + ca * cb * v
        return total


def pair_generators(S, a, b, c=1):
    return CanonicalPairing(S, c).generators(a, b)


def pair_words(S, a, b, c=1):
    return CanonicalPairing(S, c)(a, b)


def rtt_relator(S, i, j, p, r):
    """S_{ij}^{mn} t_m^p t_n^r - t_i^u t_j^v S_{uv}^{pr} as a degree-2 LinComb."""
    n = S.n
    out = {}
    for (m, k), s in S.table.get((i, j), {}).items():
        w = ((m, p), (k, r))
        out[w] = out.get(w, 0) + s
    for u in range(1, n + 1):
        for v in range(1, n + 1):
            s = S.table.get((u, v), {}).get((p, r), 0)
            if s:
                w = ((i, u), (j, v))
                out[w] = out.get(w, 0) - s
    return LinComb(out)


def relators(S):
    """All nonzero RTT relators, keyed by (i, j, p, r)."""
    n = S.n
    out = {}
    for idx in product(range(1, n + 1), repeat=4):
        rel = rtt_relator(S, *idx)
        if rel:
            out[idx] = rel
    return out


def well_definedness_check(S, L=2, c=1, pairing=None):
    """<<relator, w>> = 0 = <<w, relator>> for every relator and every word |w| <= L."""
    if L < 2:
        raise ValueError("need L >= 2")
    P = pairing or CanonicalPairing(S, c)
    words = words_upto(S.n, L)
    for idx, rel in relators(S).items():
        for w in words:
            left = P(rel, w)
            if left:
                return Check.failed(relator=idx, word=w, side="left", value=left)
            right = P(w, rel)
            if right:
                return Check.failed(relator=idx, word=w, side="right", value=right)
    return Check.passed(words=len(words))


def axiom_iii_check(S, c=1):
    """
    For a = t_i^j, b = t_k^l, the free-algebra element
    <<a_(1), b_(1)>> a_(2) b_(2) - b_(1) a_(1) <<a_(2), b_(2)>>
    equals c * rtt_relator(k, i, j, l).
    """
    if not c:
        raise ValueError("c = 0 makes the pairing trivial; nothing to check")
    P = CanonicalPairing(S, c)
    n = S.n
    rng = range(1, n + 1)
    for i, j, k, l in product(rng, repeat=4):
        out = {}
        for p, r in product(rng, repeat=2):
            f = P.generators((i, p), (k, r))
            if f:
                w = ((p, j), (r, l))
                out[w] = out.get(w, 0) + f
            g = P.generators((p, j), (r, l))
            if g:
                w = ((k, r), (i, p))
                out[w] = out.get(w, 0) - g
        lhs = LinComb(out)
        expected = rtt_relator(S, k, i, j, l) * c
        if lhs != expected:
            return Check.failed(a=(i, j), b=(k, l))
    return Check.passed()


def act(P, a, xi):
    """
    a |> xi on V^{(x)m}: x_K -> sum_M x_M <<t_{k1}^{m1} ... t_{km}^{mm}, a>>.
    P is a CanonicalPairing, xi a dict {multi-index: coeff}.
    """
    a = _lc(a)
    n = P.n
    out = {}
    for K, coeff in xi.items():
        if not coeff:
            continue
        for M in product(range(1, n + 1), repeat=len(K)):
            w = tuple(zip(K, M))
            v = P(w, a)
            if v:
                out[M] = out.get(M, 0) + coeff * v
    return {M: c for M, c in out.items() if c}
