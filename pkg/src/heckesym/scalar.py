"""
Exact scalar fields used throughout the package.

Tower of fields, all carrying a distinguished element ``sigma`` with the
quantum parameter q = sigma^4 (so sqrt(q) = sigma^2 is always available):

    Rationals            Q, elements are fractions.Fraction
    RationalFunctions    Q(s), elements are RatFunc
    QuadraticExtension   K(th) with th^2 = delta, elements are QuadElem
    ComplexNumbers       arbitrary precision complex floats (mpmath)

Elements of a subfield are accepted wherever an element of the bigger
field is expected (ints and Fractions mix freely with RatFunc, RatFunc with
QuadElem over Q(s)).  Anything else raises FieldMismatchError.
"""

import ast
from fractions import Fraction
from math import isqrt

import mpmath
from flint import fmpq, fmpq_poly
from flint.utils.flint_exceptions import FlintError


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError, TypeError):
    pass


class PoleError(ZeroDivisionError):
    pass


class ParseError(ValueError):
    def __init__(self, msg, line=1, col=0):
        super().__init__("line %d, column %d: %s" % (line, col, msg))
        self.line = line
        self.col = col


_RATIONAL = (int, Fraction)


def _fmpq(x):
    if isinstance(x, fmpq):
        return x
    x = Fraction(x)
    return fmpq(x.numerator, x.denominator)


def _frac(c):
    return Fraction(int(c.p), int(c.q))


def _rational_sqrt(x):
    x = Fraction(x)
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None


# ---------------------------------------------------------------------------
# Q(s)

_ONE_POLY = fmpq_poly([1])


class RatFunc:
    """
    Reduced fraction num/den of polynomials in s over Q.
    Invariants: gcd(num, den) = 1, den monic, zero is 0/1.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None):
        if not isinstance(num, fmpq_poly):
            num = fmpq_poly([_fmpq(num)])
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, fmpq_poly):
            den = fmpq_poly([_fmpq(den)])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator in Q(s)")
        if num.is_zero():
            num, den = fmpq_poly(0), _ONE_POLY
        elif den.degree() == 0:
            num = num / den.leading_coefficient()
            den = _ONE_POLY
        else:
            g = num.gcd(den)
            if g.degree() > 0:
                num = num // g
                den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def gen(cls):
        return cls(fmpq_poly([0, 1]))

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, _RATIONAL) or isinstance(other, fmpq):
            return RatFunc(other)
        if isinstance(other, QuadElem) or getattr(other, "is_algebra_element", False):
            return NotImplemented
        raise FieldMismatchError(
            "cannot combine element of Q(s) with %r" % type(other).__name__)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.den == other.den:
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den,
                       self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den, r._hash = -self.num, self.den, None
        return r

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(s)")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(s)")
        return RatFunc(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise FieldError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k)

    def __eq__(self, other):
        if isinstance(other, RatFunc):
            return self.num == other.num and self.den == other.den
        if isinstance(other, _RATIONAL) or isinstance(other, fmpq):
            return self.den.degree() == 0 and self.num == fmpq_poly([_fmpq(other)])
        return NotImplemented

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        if self._hash is None:
            if self.num.degree() <= 0 and self.den.degree() == 0:
                self._hash = hash(self.constant())
            else:
                self._hash = hash((tuple(self.num.coeffs()), tuple(self.den.coeffs())))
        return self._hash

    def is_constant(self):
        return self.num.degree() <= 0 and self.den.degree() == 0

    def constant(self):
        if not self.is_constant():
            raise FieldError("%s is not a constant" % self)
        if self.num.is_zero():
            return Fraction(0)
        return _frac(self.num.coeffs()[0])

    def is_polynomial(self):
        return self.den.degree() == 0

    def evaluate(self, x, ctx=None):
        """Value at s = x; x a rational number or an mpmath number (in ``ctx``)."""
        if isinstance(x, _RATIONAL):
            xq = _fmpq(x)
            d = self.den(xq)
            if d == 0:
                raise PoleError("pole at s = %s: denominator %s vanishes"
                                % (x, _poly_str(self.den)))
            return _frac(self.num(xq)) / _frac(d)
        ctx = ctx or mpmath.mp
        d = _horner(self.den, x, ctx)
        if d == 0:
            raise PoleError("pole at s = %s: denominator %s vanishes"
                            % (x, _poly_str(self.den)))
        return _horner(self.num, x, ctx) / d

    def __str__(self):
        return _ratfunc_str(self)

    def __repr__(self):
        return "RatFunc(%s)" % self


def _horner(p, x, ctx):
    acc = ctx.mpf(0)
    for c in reversed(p.coeffs()):
        acc = acc * x + ctx.mpf(int(c.p)) / int(c.q)
    return acc


def _poly_str(p, var="s"):
    if p.is_zero():
        return "0"
    parts = []
    coeffs = p.coeffs()
    for e in range(len(coeffs) - 1, -1, -1):
        c = _frac(coeffs[e])
        if c == 0:
            continue
        neg = c < 0
        c = abs(c)
        if e == 0:
            body = str(c)
        else:
            mono = var if e == 1 else "%s^%d" % (var, e)
            body = mono if c == 1 else "%s*%s" % (c, mono)
        if not parts:
            parts.append("-" + body if neg else body)
        else:
            parts.append(("- " if neg else "+ ") + body)
    return " ".join(parts)


def _is_atom(text):
    # a bare monomial like "s^3", "s" or an unsigned integer
    return " " not in text and "*" not in text and "/" not in text and not text.startswith("-")


def _ratfunc_str(x):
    num = _poly_str(x.num)
    if x.den.degree() == 0:
        return num
    den = _poly_str(x.den)
    if not _is_atom(num):
        if num.startswith("-") and _is_atom(num[1:]):
            pass
        else:
            num = "(%s)" % num
    if not _is_atom(den):
        den = "(%s)" % den
    return "%s/%s" % (num, den)


def _ratfunc_sqrt(x):
    """Principal square root in Q(s) (numerator with positive leading coefficient), or None."""
    if not x:
        return x
    if x.num.leading_coefficient() < 0:
        return None
    try:
        rn = x.num.sqrt()
        rd = x.den.sqrt()
    except (FlintError, ValueError):
        return None
    if rn.leading_coefficient() < 0:
        rn = -rn
    return RatFunc(rn, rd)


# ---------------------------------------------------------------------------
# K(th), th^2 = delta

class QuadElem:
    """a + b*th with a, b in the base field of ``field``."""

    __slots__ = ("field", "a", "b", "_hash")

    def __init__(self, field, a, b=0):
        self.field = field
        self.a = a
        self.b = b
        self._hash = None

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(
                    "quadratic extensions differ: th^2 = %s vs %s"
                    % (self.field.delta_str, other.field.delta_str))
            return other
        if getattr(other, "is_algebra_element", False):
            return NotImplemented
        return QuadElem(self.field, self.field.base(other), 0)

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.field, self.a + o.a, self.b + o.b)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem(self.field, -self.a, -self.b)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.field, self.a - o.a, self.b - o.b)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadElem(self.field, o.a - self.a, o.b - self.b)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        a1, b1, a2, b2 = self.a, self.b, o.a, o.b
        if not b1:
            return QuadElem(self.field, a1 * a2, a1 * b2)
        if not b2:
            return QuadElem(self.field, a1 * a2, b1 * a2)
        return QuadElem(self.field, a1 * a2 + b1 * b2 * self.field.delta,
                        a1 * b2 + a2 * b1)

    __rmul__ = __mul__

    def norm(self):
        return self.a * self.a - self.b * self.b * self.field.delta

    def conjugate(self):
        return QuadElem(self.field, self.a, -self.b)

    def inverse(self):
        if not self.b:
            if not self.a:
                raise ZeroDivisionError("division by zero in %s" % self.field)
            return QuadElem(self.field, 1 / self.a, self.b)
        nrm = self.norm()
        return QuadElem(self.field, self.a / nrm, -self.b / nrm)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o.b:
            if not o.a:
                raise ZeroDivisionError("division by zero in %s" % self.field)
            return QuadElem(self.field, self.a / o.a, self.b / o.a)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if not isinstance(k, int):
            raise FieldError("only integer powers are supported")
        if k < 0:
            return self.inverse() ** (-k)
        result = QuadElem(self.field, self.field.base.one, 0)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadElem):
            if other.field != self.field:
                return False
            return self.a == other.a and self.b == other.b
        try:
            o = self.field.base(other)
        except FieldError:
            return NotImplemented
        return not self.b and self.a == o

    def __ne__(self, other):
        r = self.__eq__(other)
        return r if r is NotImplemented else not r

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.a) if not self.b else hash((self.a, self.b, self.field))
        return self._hash

    def __str__(self):
        return self.field.fmt(self)

    def __repr__(self):
        return "QuadElem(%s)" % self


# ---------------------------------------------------------------------------
# fields

class _Field:
    kind = None
    theta = None

    def names(self):
        if self.sigma is None:
            return {}
        return {"s": self.sigma, "q": self.sigma ** 4}

    @property
    def q(self):
        return self.sigma ** 4

    @property
    def sqrt_q(self):
        return self.sigma ** 2

    def parse(self, text):
        return self(evaluate(text, self.names(), allow_complex=self.kind == "complex"))

    def is_zero(self, x):
        return not x

    def close(self, x, y):
        return x == y

    def __repr__(self):
        return str(self)


class Rationals(_Field):
    kind = "rational"

    def __init__(self, sigma=None):
        self.sigma = None if sigma is None else Fraction(sigma)
        self.zero = Fraction(0)
        self.one = Fraction(1)

    def __call__(self, x):
        if isinstance(x, _RATIONAL):
            return Fraction(x)
        if isinstance(x, RatFunc) and x.is_constant():
            return x.constant()
        if isinstance(x, QuadElem) and not x.b:
            return self(x.a)
        raise FieldMismatchError("%r is not a rational number" % (x,))

    def sqrt(self, x):
        r = _rational_sqrt(x)
        if r is None:
            raise FieldError("%s has no square root in Q" % x)
        return r

    def fmt(self, x):
        return str(Fraction(x))

    def config(self):
        d = {"kind": self.kind}
        if self.sigma is not None:
            d["sigma"] = str(self.sigma)
        return d

    def __eq__(self, other):
        return isinstance(other, Rationals) and other.sigma == self.sigma

    def __hash__(self):
        return hash(("Q", self.sigma))

    def __str__(self):
        return "Q" if self.sigma is None else "Q[s=%s]" % self.sigma


class RationalFunctions(_Field):
    kind = "ratfunc-sigma"

    def __init__(self):
        self.sigma = RatFunc.gen()
        self.zero = RatFunc(0)
        self.one = RatFunc(1)

    def __call__(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, _RATIONAL) or isinstance(x, fmpq):
            return RatFunc(x)
        if isinstance(x, QuadElem) and not x.b:
            return self(x.a)
        raise FieldMismatchError("%r is not an element of Q(s)" % (x,))

    def sqrt(self, x):
        r = _ratfunc_sqrt(self(x))
        if r is None:
            raise FieldError("%s is not a square in Q(s)" % x)
        return r

    def fmt(self, x):
        return str(self(x))

    def config(self):
        return {"kind": self.kind}

    def __eq__(self, other):
        return isinstance(other, RationalFunctions)

    def __hash__(self):
        return hash("Q(s)")

    def __str__(self):
        return "Q(s)"


QS = RationalFunctions()
QQ = Rationals()


class QuadraticExtension(_Field):
    """base(th) with th^2 = delta; delta a non-square of the base field."""

    kind = "quadext"

    def __init__(self, base, delta):
        if isinstance(base, QuadraticExtension) or isinstance(base, ComplexNumbers):
            raise FieldError("quadratic extensions are single level over Q or Q(s)")
        delta = base(delta)
        if not delta:
            raise FieldError("delta must be nonzero")
        try:
            base.sqrt(delta)
        except FieldError:
            pass
        else:
            raise FieldError("delta = %s is a square in %s" % (delta, base))
        if isinstance(base, RationalFunctions):
            if not delta.is_polynomial():
                raise FieldError("delta must be a polynomial in s")
            content, factors = delta.num.factor_squarefree()
            if any(e > 1 for _, e in factors):
                raise FieldError("delta = %s is not square-free" % delta)
        self.base = base
        self.delta = delta
        self.delta_str = base.fmt(delta)
        self.sigma = None if base.sigma is None else base.sigma
        self.theta = QuadElem(self, base.zero, base.one)
        self.zero = QuadElem(self, base.zero, base.zero)
        self.one = QuadElem(self, base.one, base.zero)

    def __call__(self, x):
        if isinstance(x, QuadElem):
            if x.field != self:
                raise FieldMismatchError(
                    "quadratic extensions differ: th^2 = %s vs %s"
                    % (self.delta_str, x.field.delta_str))
            return x
        return QuadElem(self, self.base(x), self.base.zero)

    def names(self):
        d = super().names()
        d["th"] = self.theta
        return d

    def sqrt(self, x):
        x = self(x)
        base = self.base
        if not x.b:
            try:
                return QuadElem(self, base.sqrt(x.a), base.zero)
            except FieldError:
                pass
            try:
                return QuadElem(self, base.zero, base.sqrt(x.a / self.delta))
            except FieldError:
                pass
        else:
            # (u + w th)^2 = x  <=>  u^2 + w^2 delta = a, 2 u w = b
            try:
                r = base.sqrt(x.norm())
            except FieldError:
                r = None
            if r is not None:
                for sgn in (1, -1):
                    try:
                        u = base.sqrt((x.a + sgn * r) / 2)
                    except FieldError:
                        continue
                    if u:
                        return QuadElem(self, u, x.b / (2 * u))
        raise FieldError("%s is not a square in %s" % (self.fmt(x), self))

    def fmt(self, x):
        x = self(x)
        a = self.base.fmt(x.a)
        if not x.b:
            return a
        b = self.base.fmt(x.b)
        if b == "1":
            bt = "th"
        elif b == "-1":
            bt = "-th"
        elif " " in b:
            bt = "(%s)*th" % b
        else:
            bt = "%s*th" % b
        if not x.a:
            return bt
        if bt.startswith("-"):
            return "%s - %s" % (_paren(a), bt[1:])
        return "%s + %s" % (_paren(a), bt)

    def config(self):
        d = {"kind": self.kind, "delta": self.delta_str}
        if isinstance(self.base, Rationals):
            d["base"] = self.base.config()
        return d

    def __eq__(self, other):
        return (isinstance(other, QuadraticExtension) and other.base == self.base
                and other.delta == self.delta)

    def __hash__(self):
        return hash(("quad", self.base, self.delta))

    def __str__(self):
        return "%s(th), th^2 = %s" % (self.base, self.delta_str)


def _paren(text):
    if " " in text:
        return "(%s)" % text
    return text


class ComplexNumbers(_Field):
    """Complex floats with ``bits`` of working precision (mpmath)."""

    kind = "complex"

    def __init__(self, bits=53, sigma=None):
        self.bits = int(bits)
        self.ctx = mpmath.MPContext()
        self.ctx.prec = self.bits
        self.zero = self.ctx.mpc(0)
        self.one = self.ctx.mpc(1)
        self.sigma = None if sigma is None else self(sigma)
        # relative tolerance used by close() and is_zero()
        self.tol = self.ctx.mpf(2) ** (-(self.bits * 3 // 4))

    def __call__(self, x):
        if isinstance(x, Fraction):
            return self.ctx.mpc(self.ctx.mpf(x.numerator) / x.denominator)
        if isinstance(x, (int, float, complex)):
            return self.ctx.mpc(x)
        if hasattr(x, "_mpc_") or hasattr(x, "_mpf_"):
            return self.ctx.mpc(x)
        if isinstance(x, RatFunc) and x.is_constant():
            return self(x.constant())
        if isinstance(x, str):
            return self.parse(x)
        raise FieldMismatchError("%r is not a complex number" % (x,))

    def sqrt(self, x):
        return self.ctx.sqrt(self(x))

    def is_zero(self, x, scale=1):
        return abs(x) <= self.tol * max(1, scale)

    def close(self, x, y):
        return abs(x - y) <= self.tol * max(1, abs(x), abs(y))

    def fmt(self, x):
        x = self(x)
        digits = max(5, int(self.bits * 0.30103))
        return "(%s%s%sj)" % (
            self.ctx.nstr(x.real, digits),
            "+" if x.imag >= 0 else "-",
            self.ctx.nstr(abs(x.imag), digits))

    def config(self):
        d = {"kind": self.kind, "bits": self.bits}
        if self.sigma is not None:
            d["sigma"] = "%s,%s" % (self.ctx.nstr(self.sigma.real, 17),
                                    self.ctx.nstr(self.sigma.imag, 17))
        return d

    def __eq__(self, other):
        return (isinstance(other, ComplexNumbers) and other.bits == self.bits
                and other.sigma == self.sigma)

    def __hash__(self):
        return hash(("C", self.bits))

    def __str__(self):
        return "C[%d bits]" % self.bits


def field_from_config(cfg):
    """Build a field from the instance-file dictionary."""
    if cfg is None:
        return QS
    kind = cfg.get("kind")
    if kind == "ratfunc-sigma":
        return QS
    if kind == "quadext":
        if "delta" not in cfg:
            raise FieldError("quadext field needs a 'delta'")
        base = field_from_config(cfg["base"]) if "base" in cfg else QS
        return QuadraticExtension(base, base.parse(cfg["delta"]))
    if kind == "rational":
        if "sigma" not in cfg:
            raise FieldError("rational field needs a rational 'sigma'")
        return Rationals(Fraction(str(cfg["sigma"])))
    if kind == "complex":
        sigma = cfg.get("sigma")
        if isinstance(sigma, str):
            re_, _, im_ = sigma.partition(",")
            sigma = complex(float(re_), float(im_ or 0))
        return ComplexNumbers(cfg.get("bits", 53), sigma)
    raise FieldError("unknown field kind %r" % (kind,))


# ---------------------------------------------------------------------------
# specialization s -> s0

class Specialization:
    """
    Ring map sending s to a concrete value s0.

    Rational s0 maps Q(s) into Q.  A quadratic extension over Q(s) maps into
    Q when delta(s0) is a rational square, into Q(th) with th^2 = delta(s0)
    otherwise.  Complex s0 maps everything into ComplexNumbers.  The image of
    th is root_sign * sqrt(delta(s0)) (principal square root); it is stored
    as ``theta_image``.
    """

    def __init__(self, field, s0, root_sign=1, bits=106):
        if root_sign not in (1, -1):
            raise ValueError("root_sign must be +1 or -1")
        self.source = field
        self.root_sign = root_sign
        exact = isinstance(s0, _RATIONAL) or (isinstance(s0, str) and "j" not in s0)
        if exact:
            s0 = Fraction(s0)
        self.s0 = s0
        if isinstance(field, Rationals) or isinstance(field, ComplexNumbers):
            raise FieldError("%s has no free parameter to specialize" % field)
        if exact:
            base = Rationals(s0)
        else:
            base = ComplexNumbers(bits, complex(s0))
        self.theta_image = None
        if isinstance(field, QuadraticExtension):
            if not isinstance(field.base, RationalFunctions):
                raise FieldError("only extensions of Q(s) can be specialized")
            d0 = field.delta.evaluate(s0) if exact else field.delta.evaluate(base.sigma, base.ctx)
            if exact:
                r = _rational_sqrt(d0)
                if r is not None:
                    self.target = base
                    self.theta_image = root_sign * r
                else:
                    self.target = QuadraticExtension(base, d0)
                    self.theta_image = root_sign * self.target.theta
            else:
                self.target = base
                self.theta_image = root_sign * base.ctx.sqrt(d0)
        else:
            self.target = base

    def __call__(self, x):
        if isinstance(x, _RATIONAL):
            return self.target(x)
        if isinstance(x, RatFunc):
            if isinstance(self.s0, Fraction):
                return self.target(x.evaluate(self.s0))
            return x.evaluate(self.target.sigma, self.target.ctx)
        if isinstance(x, QuadElem):
            if x.field != self.source:
                raise FieldMismatchError("element is not in %s" % self.source)
            return self(x.a) + self(x.b) * self.theta_image
        raise FieldMismatchError("cannot specialize %r" % (x,))


def specialize(x, s0, root_sign=1, bits=106):
    """Value of x at s = s0 (see Specialization)."""
    if isinstance(x, _RATIONAL):
        return Fraction(x)
    field = x.field if isinstance(x, QuadElem) else QS
    return Specialization(field, s0, root_sign=root_sign, bits=bits)(x)


# ---------------------------------------------------------------------------
# expression strings

def evaluate(text, names, subscript=None, allow_complex=False):
    """
    Evaluate an arithmetic expression over the given names.

    Grammar: numbers, names, + - * / and ^ (or **) with integer exponents,
    parentheses.  ``subscript(name, indices)`` handles ``t[1,2]`` style atoms.
    """
    src = text.strip().replace("^", "**")
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as e:
        col = e.offset or 0
        # map back over the ^ -> ** rewrite
        col -= text.strip()[:max(col - 1, 0)].count("^")
        raise ParseError(e.msg, e.lineno or 1, col) from None
    return _Eval(names, subscript, allow_complex).visit(tree.body)


class _Eval:
    def __init__(self, names, subscript, allow_complex):
        self.names = names
        self.subscript = subscript
        self.allow_complex = allow_complex

    def fail(self, node, msg):
        raise ParseError(msg, getattr(node, "lineno", 1), getattr(node, "col_offset", 0) + 1)

    def visit(self, node):
        if isinstance(node, ast.BinOp):
            a = self.visit(node.left)
            if isinstance(node.op, ast.Pow):
                k = self.visit(node.right)
                if not isinstance(k, int):
                    self.fail(node.right, "exponent must be an integer")
                if isinstance(a, int) and k < 0:
                    if a == 0:
                        self.fail(node, "division by zero")
                    a = Fraction(a)
                return a ** k
            b = self.visit(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                if isinstance(a, int) and isinstance(b, int):
                    return Fraction(a, b)
                return a / b
            self.fail(node, "unsupported operator")
        if isinstance(node, ast.UnaryOp):
            v = self.visit(node.operand)
            if isinstance(node.op, ast.USub):
                return -v
            if isinstance(node.op, ast.UAdd):
                return v
            self.fail(node, "unsupported operator")
        if isinstance(node, ast.Constant):
            v = node.value
            if isinstance(v, bool):
                self.fail(node, "unexpected boolean")
            if isinstance(v, int):
                return v
            if isinstance(v, float):
                if self.allow_complex:
                    return v
                return Fraction(repr(v))
            if isinstance(v, complex) and self.allow_complex:
                return v
            self.fail(node, "unexpected literal %r" % (v,))
        if isinstance(node, ast.Name):
            if node.id not in self.names:
                self.fail(node, "unknown name %r" % node.id)
            return self.names[node.id]
        if isinstance(node, ast.Subscript) and self.subscript is not None:
            if not isinstance(node.value, ast.Name):
                self.fail(node, "bad subscript")
            sl = node.slice
            if isinstance(sl, ast.Index):  # pragma: no cover - py<3.9
                sl = sl.value
            elts = sl.elts if isinstance(sl, ast.Tuple) else [sl]
            idx = []
            for e in elts:
                v = self.visit(e)
                if not isinstance(v, int):
                    self.fail(e, "indices must be integers")
                idx.append(v)
            try:
                return self.subscript(node.value.id, tuple(idx))
            except (ValueError, KeyError) as e:
                self.fail(node, str(e))
        self.fail(node, "unsupported syntax")
