"""Exact arithmetic in Q(q): sparse Laurent polynomials and reduced rational functions.

Coefficients are arbitrary-precision rationals.  Every RatFunc is kept in a
canonical reduced form (coprime numerator/denominator, denominator a primitive
integer polynomial with positive leading coefficient and nonzero constant
term), so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd
from math import comb


class OutOfRange(ValueError):
    """q-combinatorics argument outside its domain."""


class NotRegular(ArithmeticError):
    """Evaluation at q=1 hit a pole."""


class ParseError(ValueError):
    """Malformed rational-function string."""


def _cnorm(c):
    # keep integral values as int (much faster than Fraction)
    if type(c) is Fraction and c.denominator == 1:
        return c.numerator
    return c


class LaurentPoly:
    """Sparse Laurent polynomial in q, exponent -> rational coefficient."""

    __slots__ = ("coeffs", "_hash", "_key")

    def __init__(self, coeffs=None):
        if coeffs:
            self.coeffs = {e: _cnorm(c) for e, c in coeffs.items() if c != 0}
        else:
            self.coeffs = {}
        self._hash = None
        self._key = None

    @staticmethod
    def const(c) -> "LaurentPoly":
        return LaurentPoly({0: c})

    @staticmethod
    def q_power(n: int) -> "LaurentPoly":
        return LaurentPoly({n: 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.coeffs == {0: 1}

    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return max(self.coeffs)

    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no valuation")
        return min(self.coeffs)

    def key(self):
        if self._key is None:
            self._key = tuple(sorted((e, Fraction(c)) for e, c in self.coeffs.items()))
        return self._key

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.key())
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __add__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) + c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            s = out.get(e, 0) - c
            if s == 0:
                out.pop(e, None)
            else:
                out[e] = s
        return LaurentPoly(out)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other):
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return LP_ZERO
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s == 0:
                    out.pop(e, None)
                else:
                    out[e] = s
        return LaurentPoly(out)

    def scale(self, c) -> "LaurentPoly":
        if c == 0:
            return LP_ZERO
        if c == 1:
            return self
        return LaurentPoly({e: v * c for e, v in self.coeffs.items()})

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by q^k."""
        if k == 0:
            return self
        return LaurentPoly({e + k: c for e, c in self.coeffs.items()})

    def bar(self) -> "LaurentPoly":
        """Substitute q -> q^{-1}."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def eval_one(self) -> Fraction:
        return Fraction(sum(self.coeffs.values()))

    def __repr__(self):
        return f"LaurentPoly({poly_str(self)!r})"


LP_ZERO = LaurentPoly()
LP_ONE = LaurentPoly({0: 1})


def _dense(p: LaurentPoly):
    """Dense Fraction list of the polynomial part; requires valuation >= 0."""
    d = [Fraction(0)] * (p.degree() + 1)
    for e, c in p.coeffs.items():
        d[e] = Fraction(c)
    return d


def _int_primitive(u):
    """Primitive integer version of a dense int list, positive leading coeff."""
    while u and u[-1] == 0:
        u.pop()
    if not u:
        return u
    g = 0
    for c in u:
        g = _int_gcd(g, abs(c))
    if u[-1] < 0:
        g = -g
    return [c // g for c in u]


def _dense_int(p: LaurentPoly):
    """Clear denominators of a valuation-0 poly into a primitive int list."""
    d = _dense(p)
    lcm = 1
    for c in d:
        lcm = lcm * c.denominator // _int_gcd(lcm, c.denominator)
    return _int_primitive([int(c * lcm) for c in d])


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd of the polynomial parts (q-power units ignored), primitive integer,
    positive leading coefficient.  Primitive PRS with pseudo-remainders."""
    u = _dense_int(a.shift(-a.valuation()))
    v = _dense_int(b.shift(-b.valuation()))
    if len(u) < len(v):
        u, v = v, u
    while v:
        if len(v) == 1:
            return LP_ONE
        lv = v[-1]
        r = list(u)
        while r and len(r) >= len(v):
            shift = len(r) - len(v)
            lr = r[-1]
            r = [lv * c for c in r]
            for j, cv in enumerate(v):
                r[shift + j] -= lr * cv
            while r and r[-1] == 0:
                r.pop()
        u, v = v, _int_primitive(r)
    return LaurentPoly({e: c for e, c in enumerate(u)})


def _divexact_int_lists(u, v):
    """Exact division of dense int lists; returns quotient or None if inexact."""
    lv = v[-1]
    u = list(u)
    out = [0] * (len(u) - len(v) + 1)
    while u and len(u) >= len(v):
        shift = len(u) - len(v)
        c, rem = divmod(u[-1], lv)
        if rem:
            return None
        out[shift] = c
        if c:
            for j, cv in enumerate(v):
                u[shift + j] -= c * cv
        else:
            return None
        while u and u[-1] == 0:
            u.pop()
    return None if u else out


def _content_and_int(p: LaurentPoly):
    """(content, dense int list) with p = content * q^val * primitive-int-part."""
    v = p.valuation()
    q = p.shift(-v) if v else p
    c = _content_signed(q)
    d = [Fraction(0)] * (q.degree() + 1)
    for e, cc in q.coeffs.items():
        d[e] = Fraction(cc)
    return v, c, [int(x / c) for x in d]


def _poly_divexact(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Exact division of Laurent polynomials (raises on nonzero remainder)."""
    va, ca, u = _content_and_int(a)
    vb, cb, v = _content_and_int(b)
    out = _divexact_int_lists(u, v)
    if out is None:
        raise ArithmeticError("inexact polynomial division")
    scale = ca / cb
    return LaurentPoly({e + va - vb: c * scale for e, c in enumerate(out) if c})


def _content_signed(p: LaurentPoly) -> Fraction:
    """Rational c with p/c a primitive integer polynomial, positive leading."""
    num = 0
    den = 1
    for c in p.coeffs.values():
        f = Fraction(c)
        num = _int_gcd(num, abs(f.numerator))
        den = den * f.denominator // _int_gcd(den, f.denominator)
    c = Fraction(num, den)
    if p.coeffs[p.degree()] < 0:
        c = -c
    return c


class RatFunc:
    """Element of Q(q) in canonical reduced form.  Immutable."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _canonical=False):
        if not _canonical:
            raise TypeError("use the rf/ratfunc constructors")
        self.num = num
        self.den = den
        self._hash = None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_one(self) -> bool:
        return self.den.is_one() and self.num.is_one()

    def __bool__(self):
        return not self.num.is_zero()

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num.key(), self.den.key()))
        return self._hash

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __add__(self, other):
        if self.num.is_zero():
            return other
        if other.num.is_zero():
            return self
        if self.den is other.den or self.den == other.den:
            return _make(self.num + other.num, self.den)
        return _make(self.num * other.den + other.num * self.den,
                     self.den * other.den)

    def __sub__(self, other):
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return -other
        if self.den is other.den or self.den == other.den:
            return _make(self.num - other.num, self.den)
        return _make(self.num * other.den - other.num * self.den,
                     self.den * other.den)

    def __neg__(self):
        if self.num.is_zero():
            return self
        return RatFunc(-self.num, self.den, _canonical=True)

    def __mul__(self, other):
        if self.num.is_zero() or other.num.is_zero():
            return RF_ZERO
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, LP_ONE, _canonical=True)
        return _make(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if other.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        if self.num.is_zero():
            return RF_ZERO
        return _make(self.num * other.den, self.den * other.num)

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("division by the zero rational function")
        return _make(self.den, self.num)

    def __pow__(self, n: int):
        if n == 0:
            return RF_ONE
        base = self if n > 0 else self.inverse()
        out = RF_ONE
        for _ in range(abs(n)):
            out = out * base
        return out

    def bar(self) -> "RatFunc":
        """Apply q -> q^{-1}."""
        return _make(self.num.bar(), self.den.bar())

    def __str__(self):
        if self.den.is_one():
            return poly_str(self.num)
        return f"({poly_str(self.num)})/({poly_str(self.den)})"

    def __repr__(self):
        return f"rf({str(self)!r})"


def _make(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return RF_ZERO
    vd = den.valuation()
    if vd:
        den = den.shift(-vd)
        num = num.shift(-vd)
    if len(den.coeffs) == 1:
        c = den.coeffs[0]
        if c != 1:
            num = num.scale(Fraction(1, 1) / c)
        return RatFunc(num, LP_ONE, _canonical=True)
    vn = num.valuation()
    base = num.shift(-vn) if vn else num
    g = _poly_gcd(base, den)
    if not g.is_one():
        base = _poly_divexact(base, g)
        den = _poly_divexact(den, g)
        if len(den.coeffs) == 1:
            c = den.coeffs[0]
            base = base.scale(Fraction(1, 1) / c)
            return RatFunc(base.shift(vn), LP_ONE, _canonical=True)
    c = _content_signed(den)
    if c != 1:
        den = den.scale(1 / c)
        base = base.scale(1 / c)
    return RatFunc(base.shift(vn), den, _canonical=True)


RF_ZERO = RatFunc(LP_ZERO, LP_ONE, _canonical=True)
RF_ONE = RatFunc(LP_ONE, LP_ONE, _canonical=True)


def rf(value) -> RatFunc:
    """Coerce an int, Fraction, string, or LaurentPoly into a RatFunc."""
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, LaurentPoly):
        return _make(value, LP_ONE)
    if isinstance(value, str):
        return parse(value)
    if isinstance(value, int):
        return _make(LaurentPoly.const(value), LP_ONE)
    if isinstance(value, Fraction):
        return _make(LaurentPoly.const(value), LP_ONE)
    raise TypeError(f"cannot coerce {type(value).__name__} to RatFunc")


def q_power(n: int) -> RatFunc:
    """q^n as a RatFunc."""
    return RatFunc(LaurentPoly.q_power(n), LP_ONE, _canonical=True)


Q = q_power(1)
QM1 = q_power(1) - RF_ONE          # q - 1


def q_int(n: int, r: int = 1) -> RatFunc:
    """[n] at q^r: q^{r(n-1)} + q^{r(n-3)} + ... + q^{-r(n-1)}."""
    if n < 0 or r < 1:
        raise OutOfRange(f"q_int requires n >= 0 and r >= 1, got n={n}, r={r}")
    return rf(LaurentPoly({r * (n - 1 - 2 * j): 1 for j in range(n)}))


def q_factorial(n: int, r: int = 1) -> RatFunc:
    if n < 0 or r < 1:
        raise OutOfRange(f"q_factorial requires n >= 0 and r >= 1, got n={n}, r={r}")
    out = RF_ONE
    for k in range(1, n + 1):
        out = out * q_int(k, r)
    return out


def q_binom(n: int, k: int, r: int = 1) -> RatFunc:
    if n < 0 or k < 0 or k > n or r < 1:
        raise OutOfRange(f"q_binom requires 0 <= k <= n and r >= 1, got n={n}, k={k}, r={r}")
    out = q_factorial(n, r) / (q_factorial(k, r) * q_factorial(n - k, r))
    assert out.den.is_one(), "q-binomial must be a Laurent polynomial"
    return out


def limit_at_one(f: RatFunc) -> Fraction:
    """Evaluate f at q=1; raises NotRegular on a pole."""
    d = f.den.eval_one()
    if d == 0:
        raise NotRegular(f"pole at q=1: {f}")
    return f.num.eval_one() / d


def is_regular_at_one(f: RatFunc) -> bool:
    return f.den.eval_one() != 0


def eval_at(f: RatFunc, c: Fraction) -> Fraction:
    """Evaluate at a nonzero rational point; raises ZeroDivisionError on a pole."""
    num = sum(Fraction(v) * Fraction(c) ** e for e, v in f.num.coeffs.items())
    den = sum(Fraction(v) * Fraction(c) ** e for e, v in f.den.coeffs.items())
    return Fraction(num) / den


def _order_at_one_poly(p: LaurentPoly) -> int:
    """Multiplicity of the root q=1 (valuation-insensitive)."""
    k = 0
    p = p.shift(-p.valuation())
    while p.eval_one() == 0:
        p = _poly_divexact(p, LP_QM1)
        k += 1
    return k


LP_QM1 = LaurentPoly({1: 1, 0: -1})


def order_at_one(f: RatFunc) -> int:
    """Order of vanishing of f at q=1 (negative for a pole); f must be nonzero."""
    if f.is_zero():
        raise ValueError("order_at_one of zero")
    return _order_at_one_poly(f.num) - _order_at_one_poly(f.den)


def series_coefficients(f: RatFunc, count: int):
    """First `count` power-series coefficients of f at q=0.

    Requires the numerator to have valuation >= 0 (f regular at q=0, which the
    canonical denominator already guarantees on its side).
    """
    if f.is_zero():
        return [Fraction(0)] * count
    if f.num.valuation() < 0:
        raise NotRegular(f"not a power series at q=0: {f}")
    num = [Fraction(f.num.coeffs.get(e, 0)) for e in range(count)]
    den = [Fraction(f.den.coeffs.get(e, 0)) for e in range(count)]
    inv0 = 1 / den[0]
    out = []
    for n in range(count):
        c = num[n]
        for j in range(1, n + 1):
            c -= den[j] * out[n - j]
        out.append(c * inv0)
    return out


# ---------------------------------------------------------------------------
# printing and parsing
# ---------------------------------------------------------------------------

def poly_str(p: LaurentPoly) -> str:
    if p.is_zero():
        return "0"
    parts = []
    for e in sorted(p.coeffs, reverse=True):
        c = Fraction(p.coeffs[e])
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            qpart = "q" if e == 1 else f"q^{e}"
            body = qpart if mag == 1 else f"{mag}*{qpart}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append((" + " if c > 0 else " - ") + body)
    return "".join(parts)


class _Tokens:
    def __init__(self, text):
        self.toks = []
        i, n = 0, len(text)
        while i < n:
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < n and text[j].isdigit():
                    j += 1
                self.toks.append(("int", int(text[i:j])))
                i = j
            elif ch in "+-*/^()q":
                self.toks.append((ch, ch))
                i += 1
            else:
                raise ParseError(f"unexpected character {ch!r} at position {i}")
        self.pos = 0

    def peek(self):
        return self.toks[self.pos][0] if self.pos < len(self.toks) else None

    def take(self, kind=None):
        if self.pos >= len(self.toks):
            raise ParseError("unexpected end of input")
        k, v = self.toks[self.pos]
        if kind is not None and k != kind:
            raise ParseError(f"expected {kind!r}, found {k!r}")
        self.pos += 1
        return v


def parse(text: str) -> RatFunc:
    """Parse integer literals, q, ^ integer exponents, + - * /, parentheses."""
    toks = _Tokens(text)
    out = _parse_expr(toks)
    if toks.peek() is not None:
        raise ParseError(f"trailing input at token {toks.pos}")
    return out


def _parse_expr(toks) -> RatFunc:
    neg = False
    while toks.peek() in ("+", "-"):
        if toks.take() == "-":
            neg = not neg
    out = _parse_term(toks)
    if neg:
        out = -out
    while toks.peek() in ("+", "-"):
        op = toks.take()
        t = _parse_term(toks)
        out = out + t if op == "+" else out - t
    return out


def _parse_term(toks) -> RatFunc:
    out = _parse_factor(toks)
    while toks.peek() in ("*", "/"):
        op = toks.take()
        f = _parse_factor(toks)
        out = out * f if op == "*" else out / f
    return out


def _parse_factor(toks) -> RatFunc:
    neg = False
    while toks.peek() == "-":
        toks.take()
        neg = not neg
    k = toks.peek()
    if k == "int":
        base = rf(toks.take())
    elif k == "q":
        toks.take()
        base = Q
    elif k == "(":
        toks.take()
        base = _parse_expr(toks)
        toks.take(")")
    else:
        raise ParseError(f"expected a value, found {k!r}")
    if toks.peek() == "^":
        toks.take()
        sign = 1
        while toks.peek() == "-":
            toks.take()
            sign = -sign
        base = base ** (sign * toks.take("int"))
    return -base if neg else base


def binom_int(n: int, k: int) -> int:
    """Ordinary binomial coefficient (classical-limit comparison oracle)."""
    return comb(n, k)
