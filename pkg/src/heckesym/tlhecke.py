"""
Hecke symmetries of Temperley-Lieb type in the normalized basis.

The instance is given by skew-diagonal tensors U, V (u_i = u_{i,n+1-i},
v^i = v^{i,n+1-i}) and a branch sign for sqrt(q).  Then

    S_{ij}^{kl} = q delta_i^k delta_j^l - (1+q) u_{ij} v^{kl},
    z_i = (1+q) u_i v^i,

and S is a Hecke symmetry iff sum z_i = 1+q and z_i z_{n+1-i} = q.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from flint import fmpq_poly, fmpz

from heckesym.checks import Check
from heckesym.scalar import (QS, ComplexNumbers, FieldError, QuadraticExtension,
                             RatFunc, RationalFunctions, Specialization, field_from_config)
from heckesym.tensorop import TensorOperator, first_difference, lift


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class TLInstance:
    n: int
    u: tuple
    v: tuple
    branch: int
    field: object
    q: object
    sqrt_q: object
    z: tuple
    m: object
    lam: object

    def u2(self, i, j):
        """Entry u_{ij} of the covariant tensor U."""
        return self.u[i - 1] if i + j == self.n + 1 else 0

    def v2(self, k, l):
        """Entry v^{kl} of the contravariant tensor V."""
        return self.v[k - 1] if k + l == self.n + 1 else 0

    @cached_property
    def S(self):
        return build_S(self)

    def __repr__(self):
        return "TLInstance(n=%d, branch=%s, field=%s)" % (
            self.n, "+" if self.branch > 0 else "-", self.field)


def build_instance(n, u, v, branch=-1, field=None):
    if field is None:
        field = QS
    if n < 2:
        raise ConstraintError("n must be at least 2")
    if branch not in (1, -1):
        raise ConstraintError("branch must be +1 or -1")
    if len(u) != n or len(v) != n:
        raise ConstraintError("u and v must have length n = %d" % n)
    if field.sigma is None:
        raise FieldError("field %s does not fix the quantum parameter" % field)
    u = tuple(field(x) for x in u)
    v = tuple(field(x) for x in v)
    for name, vec in (("u", u), ("v", v)):
        for i, x in enumerate(vec, 1):
            if field.is_zero(x):
                raise ConstraintError("%s_%d must be nonzero" % (name, i))
    q, sqrt_q = field.q, field.sqrt_q
    one = field.one
    z = tuple((one + q) * a * b for a, b in zip(u, v))
    total = sum(z, field.zero)
    if not field.close(total, one + q):
        raise ConstraintError(
            "trace constraint: sum of z_i = %s, expected 1+q = %s"
            % (field.fmt(total), field.fmt(one + q)))
    for i in range(1, n + 1):
        zz = z[i - 1] * z[n - i]
        if not field.close(zz, q):
            raise ConstraintError(
                "pairing constraint fails at i=%d: z_%d * z_%d = %s, expected q = %s"
                % (i, i, n + 1 - i, field.fmt(zz), field.fmt(q)))
    if n % 2 == 1:
        mid = z[n // 2]
        if not field.close(mid, branch * sqrt_q):
            raise ConstraintError(
                "middle value z_%d = %s must equal branch*sqrt(q) = %s"
                % (n // 2 + 1, field.fmt(mid), field.fmt(branch * sqrt_q)))
    m = branch * sqrt_q / (one + q)
    lam = q / (one + q) ** 2
    return TLInstance(n, u, v, branch, field, q, sqrt_q, z, m, lam)


def build_S(inst):
    n, q = inst.n, inst.q
    one = inst.field.one
    table = {}
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            row = {(i, j): q}
            if i + j == n + 1:
                ui = inst.u[i - 1]
                for k in range(1, n + 1):
                    row[(k, n + 1 - k)] = row.get((k, n + 1 - k), 0) \
                        - (one + q) * ui * inst.v[k - 1]
            table[(i, j)] = row
    return TensorOperator(n, 2, table)


def scalarM_condition_check(inst):
    """m(1+q) v^i / v^{n+1-i} == z_i for all i, with the instance's branch of m."""
    n, f = inst.n, inst.field
    factor = inst.m * (f.one + inst.q)
    for i in range(1, n + 1):
        lhs = factor * inst.v[i - 1] / inst.v[n - i]
        if not f.close(lhs, inst.z[i - 1]):
            return Check.failed(i=i, lhs=lhs, z=inst.z[i - 1])
    return Check.passed()


def simple_spectrum_check(inst):
    z = inst.z
    f = inst.field
    return all(not f.close(z[a], z[b]) for a in range(len(z)) for b in range(a))


def prop2_spectrum_check(zs, q, close=None):
    """Is the multiset zs invariant under x -> q/x (multiplicities included)?"""
    close = close or (lambda a, b: a == b)
    pool = list(zs)
    images = [q / x for x in zs]
    for y in images:
        for k, x in enumerate(pool):
            if close(x, y):
                del pool[k]
                break
        else:
            return False
    return True


def tl_projectors(S, m, q):
    """P^i = (q id - S^{i,i+1}) / (q+1) on V^{(x)m}, i = 1..m-1."""
    if m < 2:
        raise ValueError("need m >= 2")
    one = q ** 0
    ident = TensorOperator.identity(S.n, m, one)
    inv = one / (one + q)
    return [(ident.scale(q) - lift(S, i, m)).scale(inv) for i in range(1, m)]


def tl_relations_check(projectors, lam, is_zero=None):
    """t_i^2 = t_i, t_i t_{i+-1} t_i = lam t_i, t_i t_j = t_j t_i for |i-j| > 1."""
    t = projectors

    def same(A, B):
        return first_difference(A, B, is_zero) is None

    for i, ti in enumerate(t, 1):
        if not same(ti @ ti, ti):
            return Check.failed(relation="idempotent", i=i)
    for i, ti in enumerate(t, 1):
        for j in (i - 1, i + 1):
            if 1 <= j <= len(t):
                if not same(ti @ t[j - 1] @ ti, ti.scale(lam)):
                    return Check.failed(relation="braid-like", i=i, j=j)
    for i, ti in enumerate(t, 1):
        for j, tj in enumerate(t, 1):
            if abs(i - j) > 1 and not same(ti @ tj, tj @ ti):
                return Check.failed(relation="distant-commute", i=i, j=j)
    return Check.passed()


# ---------------------------------------------------------------------------
# parametrizations

def _squarefree_int(k):
    """(s, core) with k = s^2 * core, core square-free."""
    if k == 0:
        return 0, 0
    sign = -1 if k < 0 else 1
    s, core = 1, sign
    for p, e in fmpz(abs(k)).factor():
        p = int(p)
        s *= p ** (e // 2)
        if e % 2:
            core *= p
    return s, core


def _sqrt_over_extension(D):
    """
    For D in Q(s), write sqrt(D) = R * th with th^2 = delta square-free.
    Returns (delta, R), both in Q(s).
    """
    P = D.num * D.den
    content, factors = P.factor_squarefree()
    a, b = int(content.p), int(content.q)
    s, core = _squarefree_int(a * b)
    delta = fmpq_poly([core])
    root = fmpq_poly([1])
    for f, e in factors:
        if e % 2:
            delta = delta * f
        root = root * f ** (e // 2)
    return RatFunc(delta), RatFunc(root) * Fraction(s, b) / RatFunc(D.den)


def solve_z(n, free_z=(), branch=-1, field=None, root=1):
    """
    Complete a diagonal spectrum from its free values.

    free_z holds z_1..z_{r-1} (r = floor(n/2)); z_r is the chosen root of
    z + q/z = 1 + q - (other contributions), odd n get the middle value
    branch*sqrt(q), the rest follow from z_i z_{n+1-i} = q.  When the root
    leaves ``field`` a quadratic extension of Q(s) is created.
    Returns (z, field).
    """
    field = field or QS
    r = n // 2
    if len(free_z) != r - 1:
        raise ValueError("n=%d needs %d free values, got %d" % (n, r - 1, len(free_z)))
    q, one = field.q, field.one
    free = [field(x) for x in free_z]
    w = one + q - sum((x + q / x for x in free), field.zero)
    if n % 2:
        w = w - branch * field.sqrt_q
    D = w * w - 4 * q
    try:
        sq = field.sqrt(D)
    except FieldError:
        sq = None
    if sq is None:
        if not isinstance(field, RationalFunctions):
            raise FieldError("spectrum needs a second quadratic extension over %s" % field)
        delta, R = _sqrt_over_extension(D)
        field = QuadraticExtension(QS, delta)
        sq = R * field.theta
        free = [field(x) for x in free]
        w = field(w)
        q, one = field.q, field.one
    zr = (w + root * sq) / 2
    head = free + [zr]
    z = list(head)
    if n % 2:
        z.append(field(branch * field.sqrt_q))
    z.extend(q / x for x in reversed(head))
    return tuple(field(x) for x in z), field


def solve_v_from_z(z, branch=-1, field=None, free_v=None):
    """
    Solve m(1+q) v^i / v^{n+1-i} = z_i for v (free values v^1..v^{ceil(n/2)},
    default 1) and return (u, v) with u_i = z_i / ((1+q) v^i).
    """
    field = field or QS
    n = len(z)
    half = (n + 1) // 2
    free_v = list(free_v) if free_v is not None else [1] * half
    if len(free_v) != half:
        raise ValueError("need %d free values of v" % half)
    q, one = field.q, field.one
    factor = branch * field.sqrt_q  # m(1+q)
    v = [None] * n
    for i in range(1, half + 1):
        v[i - 1] = field(free_v[i - 1])
    for i in range(1, n // 2 + 1):
        v[n - i] = factor * v[i - 1] / field(z[i - 1])
    u = [field(z[i]) / ((one + q) * v[i]) for i in range(n)]
    return tuple(u), tuple(v)


def instance_from_z(z, branch=-1, field=None, scalar_m=True, free_v=None):
    """Instance with spectrum z; v solves the scalar-M system when scalar_m, else v = free_v or 1."""
    field = field or QS
    n = len(z)
    if scalar_m:
        u, v = solve_v_from_z(z, branch, field, free_v)
    else:
        v = tuple(field(x) for x in (free_v or [1] * n))
        u = tuple(field(zi) / ((field.one + field.q) * vi) for zi, vi in zip(z, v))
    return build_instance(n, u, v, branch, field)


# default free spectrum values for the example fleet
_FREE_Z = {2: (), 3: (), 4: (2,), 5: (2,), 6: (2, 3)}


def example_instance(n, branch=-1, scalar_m=True, field=None, free_z=None, root=-1):
    """A representative instance of dimension n (see README for the fleet)."""
    if free_z is None:
        free_z = _FREE_Z.get(n, tuple(range(2, n // 2 + 1)))
    z, fld = solve_z(n, free_z, branch, field, root=root)
    return instance_from_z(z, branch, fld, scalar_m)


def gauge(inst, w):
    """Rescale v^i -> w_i v^i, u_i -> u_i / w_i."""
    f = inst.field
    w = [f(x) for x in w]
    u = [a / b for a, b in zip(inst.u, w)]
    v = [a * b for a, b in zip(inst.v, w)]
    return build_instance(inst.n, u, v, inst.branch, f)


def specialize_instance(inst, s0, root_sign=1, bits=106):
    """The same instance with s set to s0 (exactly when s0 is rational)."""
    sp = Specialization(inst.field, s0, root_sign=root_sign, bits=bits)
    return build_instance(inst.n, [sp(x) for x in inst.u], [sp(x) for x in inst.v],
                          inst.branch, sp.target)


# ---------------------------------------------------------------------------
# instance files

def instance_to_dict(inst):
    f = inst.field
    return {
        "n": inst.n,
        "field": f.config(),
        "u": [f.fmt(x) for x in inst.u],
        "v": [f.fmt(x) for x in inst.v],
        "branch": "+" if inst.branch > 0 else "-",
    }


def instance_from_dict(d):
    for key in ("n", "u", "v"):
        if key not in d:
            raise ConstraintError("instance is missing %r" % key)
    field = field_from_config(d.get("field"))
    branch = d.get("branch", "-")
    if branch not in ("+", "-", 1, -1):
        raise ConstraintError("branch must be '+' or '-'")
    branch = 1 if branch in ("+", 1) else -1
    u = [field.parse(x) if isinstance(x, str) else field(x) for x in d["u"]]
    v = [field.parse(x) if isinstance(x, str) else field(x) for x in d["v"]]
    return build_instance(int(d["n"]), u, v, branch, field)


def numeric_instance(z, q_field, branch=-1, v=None):
    """Instance over a ComplexNumbers field from a numeric spectrum z."""
    if not isinstance(q_field, ComplexNumbers):
        raise FieldError("numeric_instance needs a complex field")
    return instance_from_z(tuple(q_field(x) for x in z), branch, q_field,
                           scalar_m=False, free_v=v)
