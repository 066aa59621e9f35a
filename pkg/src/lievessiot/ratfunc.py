"""The differential field K = C(t): polynomials and reduced rational
functions over the Gaussian rationals, with derivation d/dt.

Canonical form of a RatFunc: gcd(num, den) = 1 and den monic.  Equality
is structural equality of canonical forms, so every solution check in
the package reduces to ==.
"""

from __future__ import annotations

import math

from .errors import DivisionByZero, PoleAtPoint
from .scalars import GaussianRational, ONE, ZERO


def _as_gauss(c) -> GaussianRational:
    if isinstance(c, GaussianRational):
        return c
    return GaussianRational(c)


class Poly:
    """Dense univariate polynomial over Q(i); coeffs[k] is the t**k coefficient."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_as_gauss(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs = tuple(cs)

    @staticmethod
    def const(c) -> "Poly":
        return Poly([_as_gauss(c)])

    @staticmethod
    def t() -> "Poly":
        return Poly([0, 1])

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial assigned -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussianRational:
        if self.is_zero():
            return ZERO
        return self.coeffs[-1]

    def __add__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] = out[k] + c
        return Poly(out)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return Poly([c * other for c in self.coeffs])
        if not isinstance(other, Poly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Poly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for j, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for k, b in enumerate(other.coeffs):
                out[j + k] = out[j + k] + a * b
        return Poly(out)

    def __rmul__(self, other):
        if isinstance(other, GaussianRational):
            return self * other
        return NotImplemented

    def divmod(self, other):
        """Exact Euclidean division: self = q*other + r, deg r < deg other."""
        if other.is_zero():
            raise DivisionByZero("polynomial division by zero")
        q = [ZERO] * max(len(self.coeffs) - len(other.coeffs) + 1, 0)
        rem = list(self.coeffs)
        lead = other.leading()
        d = other.degree
        while len(rem) - 1 >= d and rem:
            k = len(rem) - 1 - d
            c = rem[-1] / lead
            q[k] = c
            for j, oc in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * oc
            while rem and rem[-1].is_zero():
                rem.pop()
        return Poly(q), Poly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        lead = self.leading()
        return Poly([c / lead for c in self.coeffs])

    def gcd(self, other: "Poly") -> "Poly":
        """Monic gcd via a primitive remainder sequence over Z[i][t].

        Clearing denominators and dividing out Gaussian-integer contents
        at every step keeps the intermediate coefficients small; the
        naive monic Euclidean algorithm over Q(i) blows up badly on the
        operand sizes produced by the matrix layer.
        """
        if self.is_zero():
            return other.monic()
        if other.is_zero():
            return self.monic()
        a = _int_coeffs(self)
        b = _int_coeffs(other)
        if len(a) < len(b):
            a, b = b, a
        while True:
            r = _pseudo_rem(a, b)
            if not r:
                break
            a, b = b, _primitive(r)
        return Poly([GaussianRational(re, im) for re, im in b]).monic()

    def derivative(self) -> "Poly":
        return Poly([self.coeffs[k] * GaussianRational(k) for k in range(1, len(self.coeffs))])

    def eval(self, p: GaussianRational) -> GaussianRational:
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * p + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, Poly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r})"


# -- gcd helpers over the Gaussian integers ---------------------------------
# Gaussian integers are (re, im) pairs of ints; polynomials are dense
# lowest-first coefficient lists without trailing zeros.


def _gi_mul(x, y):
    a, b = x
    c, d = y
    return (a * c - b * d, a * d + b * c)


def _gi_sub(x, y):
    return (x[0] - y[0], x[1] - y[1])


def _round_div(a, n):
    # nearest integer to a/n for n > 0
    return (2 * a + n) // (2 * n)


def _gi_gcd(x, y):
    # Euclidean algorithm with nearest-Gaussian-integer division
    while y != (0, 0):
        n = y[0] * y[0] + y[1] * y[1]
        p = _gi_mul(x, (y[0], -y[1]))
        q = (_round_div(p[0], n), _round_div(p[1], n))
        x, y = y, _gi_sub(x, _gi_mul(q, y))
    return x


def _gi_divexact(x, g):
    n = g[0] * g[0] + g[1] * g[1]
    p = _gi_mul(x, (g[0], -g[1]))
    return (p[0] // n, p[1] // n)


def _primitive(coeffs):
    g = (0, 0)
    for c in coeffs:
        g = _gi_gcd(g, c)
        if g in ((1, 0), (0, 1), (-1, 0), (0, -1)):
            return coeffs
    return [_gi_divexact(c, g) for c in coeffs]


def _int_coeffs(p: "Poly"):
    scale = 1
    for c in p.coeffs:
        scale = math.lcm(scale, c.re.denominator, c.im.denominator)
    return _primitive([(int(c.re * scale), int(c.im * scale)) for c in p.coeffs])


def _pseudo_rem(a, b):
    """Pseudo-remainder of the integer-coefficient lists a by b."""
    lb = b[-1]
    db = len(b) - 1
    r = list(a)
    while len(r) - 1 >= db:
        c = r[-1]
        k = len(r) - 1 - db
        r = [_gi_mul(lb, x) for x in r[:-1]]
        for j in range(db):
            r[k + j] = _gi_sub(r[k + j], _gi_mul(c, b[j]))
        while r and r[-1] == (0, 0):
            r.pop()
    return r


_ONE_POLY = Poly([1])


class RatFunc:
    """Element of K = C(t) in canonical reduced form."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _canonical=False):
        if isinstance(num, (int, GaussianRational)):
            num = Poly.const(num)
        if den is None:
            den = _ONE_POLY
        elif isinstance(den, (int, GaussianRational)):
            den = Poly.const(den)
        if den.is_zero():
            raise DivisionByZero("rational function with zero denominator")
        if not _canonical:
            num, den = self._reduce(num, den)
        self.num = num
        self.den = den

    @staticmethod
    def _reduce(num: Poly, den: Poly):
        if num.is_zero():
            return Poly(), _ONE_POLY
        g = num.gcd(den)
        if g.degree > 0:
            num = num.divmod(g)[0]
            den = den.divmod(g)[0]
        lead = den.leading()
        if not (lead.re == 1 and lead.im == 0):
            num = Poly([c / lead for c in num.coeffs])
            den = den.monic()
        return num, den

    @staticmethod
    def const(c) -> "RatFunc":
        return RatFunc(Poly.const(c))

    @staticmethod
    def t() -> "RatFunc":
        return RatFunc(Poly.t())

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.degree <= 0 and self.den.degree == 0

    def constant_value(self) -> GaussianRational:
        if not self.is_constant():
            raise ValueError("not a constant")
        if self.num.is_zero():
            return ZERO
        return self.num.coeffs[0]

    @staticmethod
    def _coerce(x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, (int, GaussianRational)):
            return RatFunc.const(x)
        if isinstance(x, Poly):
            return RatFunc(x)
        return NotImplemented

    def _add_signed(self, other, negate: bool):
        # Henrici's algorithm: both operands are canonical, so the only
        # possible cancellation sits inside g = gcd of the denominators
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        if negate:
            bn = -bn
        if ad.degree == 0 and bd.degree == 0:
            return RatFunc(an + bn, _ONE_POLY, _canonical=True)
        g = ad.gcd(bd)
        if g.degree == 0:
            num = an * bd + bn * ad
            if num.is_zero():
                return RF_ZERO
            return RatFunc(num, ad * bd, _canonical=True)
        ad_r = ad.divmod(g)[0]
        bd_r = bd.divmod(g)[0]
        num = an * bd_r + bn * ad_r
        if num.is_zero():
            return RF_ZERO
        h = num.gcd(g)
        if h.degree > 0:
            num = num.divmod(h)[0]
            g = g.divmod(h)[0]
        return RatFunc(num, ad_r * bd_r * g, _canonical=True)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add_signed(other, False)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add_signed(other, True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return RF_ZERO
        # cross-cancel: the factors inside each numerator/denominator pair
        # are already coprime, so the product below is canonical
        an, ad = self.num, self.den
        bn, bd = other.num, other.den
        g1 = an.gcd(bd)
        if g1.degree > 0:
            an = an.divmod(g1)[0]
            bd = bd.divmod(g1)[0]
        g2 = bn.gcd(ad)
        if g2.degree > 0:
            bn = bn.divmod(g2)[0]
            ad = ad.divmod(g2)[0]
        return RatFunc(an * bn, ad * bd, _canonical=True)

    __rmul__ = __mul__

    def _inv(self) -> "RatFunc":
        if self.is_zero():
            raise DivisionByZero("division by the zero function")
        lead = self.num.leading()
        num = Poly([c / lead for c in self.den.coeffs])
        return RatFunc(num, self.num.monic(), _canonical=True)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other._inv()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def __neg__(self):
        return RatFunc(-self.num, self.den, _canonical=True)

    def __pow__(self, n: int):
        if n < 0:
            return (RatFunc.const(1) / self) ** (-n)
        out = RatFunc.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def derive(self) -> "RatFunc":
        """d/dt by the quotient rule; constants map to 0."""
        return RatFunc(
            self.num.derivative() * self.den - self.num * self.den.derivative(),
            self.den * self.den,
        )

    def logderiv(self) -> "RatFunc":
        """The logarithmic derivative x'/x (x nonzero)."""
        if self.is_zero():
            raise DivisionByZero("logarithmic derivative of 0")
        return self.derive() / self

    def eval(self, p) -> GaussianRational:
        p = _as_gauss(p)
        d = self.den.eval(p)
        if d.is_zero():
            raise PoleAtPoint(f"pole at t = {p}")
        return self.num.eval(p) / d

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __repr__(self):
        from .parsing import format_ratfunc

        return f"RatFunc({format_ratfunc(self)!r})"

    def __str__(self):
        from .parsing import format_ratfunc

        return format_ratfunc(self)


RF_ZERO = RatFunc.const(0)
RF_ONE = RatFunc.const(1)
RF_T = RatFunc.t()


def check_integral_solution(a: RatFunc, b: RatFunc) -> bool:
    """True iff b' = a exactly, i.e. b is a rational antiderivative of a."""
    return b.derive() == a


def check_exponential_solution(a: RatFunc, b: RatFunc) -> bool:
    """True iff b'/b = a exactly (b nonzero)."""
    return b.logderiv() == a
