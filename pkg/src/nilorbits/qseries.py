"""Exact polynomials and rational functions in one variable q with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import DivideByZero, NotExpandable


def _trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class QPoly:
    """Integer polynomial stored densely, lowest power first."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=()):
        if isinstance(coeffs, dict):
            size = max(coeffs, default=-1) + 1
            dense = [0] * size
            for e, v in coeffs.items():
                if e < 0:
                    raise ValueError("negative exponent")
                dense[e] += v
            coeffs = dense
        c = _trim(coeffs)
        if any(not isinstance(x, int) for x in c):
            raise TypeError("QPoly coefficients must be integers")
        object.__setattr__(self, "_c", c)

    def __setattr__(self, name, value):
        raise AttributeError("QPoly is immutable")

    @classmethod
    def const(cls, a: int) -> "QPoly":
        return cls((a,))

    @classmethod
    def monomial(cls, e: int, a: int = 1) -> "QPoly":
        return cls((0,) * e + (a,))

    @property
    def dense(self) -> tuple:
        return self._c

    @property
    def coefficients(self) -> dict:
        return {e: v for e, v in enumerate(self._c) if v}

    @property
    def degree(self) -> int:
        """-1 for the zero polynomial."""
        return len(self._c) - 1

    @property
    def low_degree(self) -> int:
        for e, v in enumerate(self._c):
            if v:
                return e
        return -1

    @property
    def leading(self) -> int:
        return self._c[-1] if self._c else 0

    def coeff(self, e: int) -> int:
        return self._c[e] if 0 <= e < len(self._c) else 0

    def is_zero(self) -> bool:
        return not self._c

    def content(self) -> int:
        g = 0
        for v in self._c:
            g = gcd(g, v)
        return g

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPoly.const(other)
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, QRational):
            return QRational(self) == other
        return NotImplemented

    def __hash__(self):
        return hash(("QPoly", self._c))

    @staticmethod
    def _lift(x):
        if isinstance(x, QPoly):
            return x
        if isinstance(x, int):
            return QPoly.const(x)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        return QPoly(tuple(self.coeff(i) + o.coeff(i) for i in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return QPoly(tuple(-v for v in self._c))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if not self._c or not o._c:
            return QPoly()
        out = [0] * (len(self._c) + len(o._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(o._c):
                    out[i + j] += a * b
        return QPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        out, base = QPoly.const(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __truediv__(self, other):
        return QRational(self) / other

    def __rtruediv__(self, other):
        return QRational(other) / QRational(self)

    def __call__(self, x):
        acc = 0
        for v in reversed(self._c):
            acc = acc * x + v
        return acc

    def exact_div(self, other: "QPoly") -> "QPoly":
        """Quotient over Z; raises ValueError unless the division is exact."""
        quo, rem = _divmod_Q(self._c, other._c)
        if any(rem) or any(x.denominator != 1 for x in quo):
            raise ValueError(f"{other} does not divide {self} over Z")
        return QPoly(tuple(int(x) for x in quo))

    def render(self) -> str:
        return render_poly(self)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QPoly({self.render()})"

    def to_json(self):
        return {str(e): v for e, v in sorted(self.coefficients.items(), reverse=True)}

    @classmethod
    def from_json(cls, obj) -> "QPoly":
        return cls({int(e): int(v) for e, v in obj.items()})


Q = QPoly.monomial(1)
ONE = QPoly.const(1)


def _divmod_Q(f, g):
    """Long division of dense coefficient tuples over the rationals."""
    g = _trim(g)
    if not g:
        raise DivideByZero("division by the zero polynomial")
    rem = [Fraction(x) for x in f]
    dg = len(g) - 1
    lead = Fraction(g[-1])
    if len(rem) - 1 < dg:
        return (), tuple(rem)
    quo = [Fraction(0)] * (len(rem) - dg)
    for i in range(len(rem) - 1, dg - 1, -1):
        c = rem[i] / lead
        if c:
            quo[i - dg] = c
            for j, b in enumerate(g):
                rem[i - dg + j] -= c * b
    return tuple(quo), _trim(rem[:dg])


def _primitive(coeffs) -> tuple:
    """Scale rational coefficients to a primitive integer vector, leading term positive."""
    c = _trim(coeffs)
    if not c:
        return ()
    den = 1
    for x in c:
        den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in c]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if ints[-1] < 0:
        g = -g
    return tuple(v // g for v in ints)


def poly_gcd(f: QPoly, g: QPoly) -> QPoly:
    """Primitive gcd over Q, normalized to a positive leading coefficient."""
    a, b = _primitive(f.dense), _primitive(g.dense)
    while b:
        _, r = _divmod_Q(a, b)
        a, b = b, _primitive(r)
    return QPoly(a) if a else QPoly()


class QRational:
    """num/den in lowest terms: primitive gcd removed, shared content cleared, den leading > 0."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = QPoly._lift(num) if not isinstance(num, QRational) else num
        den = QPoly._lift(den) if not isinstance(den, QRational) else den
        if isinstance(num, QRational) or isinstance(den, QRational):
            a = num if isinstance(num, QRational) else QRational(num)
            b = den if isinstance(den, QRational) else QRational(den)
            num, den = a.num * b.den, a.den * b.num
        if num is None or den is None:
            raise TypeError("QRational needs integers or polynomials")
        if den.is_zero():
            raise DivideByZero("zero denominator")
        if num.is_zero():
            num, den = QPoly(), ONE
        else:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exact_div(g), den.exact_div(g)
            c = gcd(num.content(), den.content())
            if den.leading < 0:
                c = -c
            num = QPoly(tuple(v // c for v in num.dense))
            den = QPoly(tuple(v // c for v in den.dense))
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("QRational is immutable")

    @staticmethod
    def _lift(x):
        if isinstance(x, QRational):
            return x
        if isinstance(x, (QPoly, int)):
            return QRational(x)
        return None

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def __hash__(self):
        return hash(("QRational", self.num.dense, self.den.dense))

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QRational(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return QRational(-self.num, self.den)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return QRational(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise DivideByZero("division by zero")
        return QRational(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k >= 0:
            return QRational(self.num**k, self.den**k)
        return QRational(self.den ** (-k), self.num ** (-k))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise DivideByZero(f"denominator vanishes at {x}")
        return Fraction(self.num(x)) / d

    @property
    def is_polynomial(self) -> bool:
        return self.den == ONE

    def render(self) -> str:
        if self.is_polynomial:
            return render_poly(self.num)
        return f"({render_poly(self.num)}) / ({render_poly(self.den)})"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"QRational({self.render()})"

    def to_json(self):
        return {"num": self.num.to_json(), "den": self.den.to_json()}

    @classmethod
    def from_json(cls, obj) -> "QRational":
        return cls(QPoly.from_json(obj["num"]), QPoly.from_json(obj["den"]))


class NotPolynomial:
    """Returned by as_polynomial when the denominator is not a unit."""

    __slots__ = ("value",)

    def __init__(self, value=None):
        self.value = value

    def __bool__(self):
        return False

    def __eq__(self, other):
        return isinstance(other, NotPolynomial)

    def __hash__(self):
        return hash("NotPolynomial")

    def __repr__(self):
        return "NotPolynomial"


def as_polynomial(r):
    if isinstance(r, QPoly):
        return r
    r = QRational(r) if not isinstance(r, QRational) else r
    if r.is_polynomial:
        return r.num
    return NotPolynomial(r)


def leading_terms(r, count: int) -> list:
    """First `count` nonzero terms of the expansion in descending powers of q."""
    r = QRational(r) if not isinstance(r, QRational) else r
    if count < 1:
        raise ValueError("count must be positive")
    num, den = r.num, r.den
    if num.is_zero():
        return []
    if num.degree < den.degree:
        raise NotExpandable(f"degree {num.degree} below denominator degree {den.degree}")
    rem = {e: Fraction(v) for e, v in num.coefficients.items()}
    lead_e, lead = den.degree, den.leading
    terms = []
    while len(terms) < count and rem:
        top = max(rem)
        c = rem[top] / lead
        shift = top - lead_e
        for e, v in den.coefficients.items():
            key = shift + e
            val = rem.get(key, 0) - c * v
            if val:
                rem[key] = val
            else:
                rem.pop(key, None)
        terms.append((shift, int(c) if c.denominator == 1 else c))
    return terms


def is_palindromic(p: QPoly, low: int, high: int) -> bool:
    return all(p.coeff(low + k) == p.coeff(high - k) for k in range(high - low + 1))


def _mono(e: int, v: int, first: bool) -> str:
    mag = abs(v)
    if e == 0:
        body = str(mag)
    else:
        body = ("" if mag == 1 else str(mag)) + ("q" if e == 1 else f"q^{e}")
    if first:
        return ("-" if v < 0 else "") + body
    return (" - " if v < 0 else " + ") + body


def render_poly(p: QPoly) -> str:
    items = sorted(p.coefficients.items(), reverse=True)
    if not items:
        return "0"
    return "".join(_mono(e, v, i == 0) for i, (e, v) in enumerate(items))


def render_terms(terms) -> str:
    """Render a truncated expansion, marking the omitted tail."""
    if not terms:
        return "0"
    return "".join(_mono(e, v, i == 0) for i, (e, v) in enumerate(terms)) + " + ..."
