"""Exact coefficient arithmetic: Laurent polynomials and reduced rational
functions in the formal variable v = q^(1/2), with arbitrary-precision
integer coefficients.

Both engine backends share this field.  The U_q(sl2) side only ever
produces even powers of v (i.e. integer powers of q); the osp_q(1|2) side
needs genuine half-integer powers of q, which is why v is the variable.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd as _int_gcd


class LaurentPoly:
    """Laurent polynomial in v with integer coefficients, stored as a
    sparse exponent -> coefficient map (no zero coefficients kept)."""

    __slots__ = ("d", "_hash")

    def __init__(self, d=None, _trusted=False):
        if d is None:
            d = {}
        if not _trusted:
            d = {e: c for e, c in d.items() if c}
        self.d = d
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero():
        return _LP_ZERO

    @staticmethod
    def one():
        return _LP_ONE

    @staticmethod
    def const(c):
        if c == 0:
            return _LP_ZERO
        return LaurentPoly({0: int(c)}, _trusted=True)

    @staticmethod
    def mono(exp, coeff=1):
        """coeff * v^exp"""
        if coeff == 0:
            return _LP_ZERO
        return LaurentPoly({int(exp): int(coeff)}, _trusted=True)

    # -- predicates --------------------------------------------------------

    def is_zero(self):
        return not self.d

    def is_one(self):
        return self.d == {0: 1}

    def __bool__(self):
        return bool(self.d)

    # -- ring operations ---------------------------------------------------

    def __add__(self, other):
        a, b = self.d, other.d
        if not a:
            return other
        if not b:
            return self
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly(out, _trusted=True)

    def __sub__(self, other):
        if not other.d:
            return self
        out = dict(self.d)
        for e, c in other.d.items():
            s = out.get(e, 0) - c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly(out, _trusted=True)

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self.d.items()}, _trusted=True)

    def __mul__(self, other):
        a, b = self.d, other.d
        if not a or not b:
            return _LP_ZERO
        if len(a) == 1:
            (ea, ca), = a.items()
            return LaurentPoly({ea + e: ca * c for e, c in b.items()}, _trusted=True)
        if len(b) == 1:
            (eb, cb), = b.items()
            return LaurentPoly({eb + e: cb * c for e, c in a.items()}, _trusted=True)
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = ea + eb
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        return LaurentPoly(out, _trusted=True)

    def shift(self, k):
        """Multiply by v^k."""
        if k == 0 or not self.d:
            return self
        return LaurentPoly({e + k: c for e, c in self.d.items()}, _trusted=True)

    def scale(self, c):
        c = int(c)
        if c == 0:
            return _LP_ZERO
        if c == 1:
            return self
        return LaurentPoly({e: c * x for e, x in self.d.items()}, _trusted=True)

    # -- structure ---------------------------------------------------------

    def degree(self):
        return max(self.d) if self.d else None

    def valuation(self):
        return min(self.d) if self.d else None

    def leading_coeff(self):
        return self.d[max(self.d)] if self.d else 0

    def content(self):
        """gcd of the integer coefficients, nonnegative."""
        g = 0
        for c in self.d.values():
            g = _int_gcd(g, abs(c))
        return g

    def substitute_inverse(self):
        """v -> v^(-1)."""
        return LaurentPoly({-e: c for e, c in self.d.items()}, _trusted=True)

    def evaluate(self, r: Fraction) -> Fraction:
        acc = Fraction(0)
        for e, c in self.d.items():
            acc += c * r ** e
        return acc

    # -- comparison / hashing -----------------------------------------------

    def __eq__(self, other):
        return isinstance(other, LaurentPoly) and self.d == other.d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(tuple(sorted(self.d.items())))
        return self._hash

    # -- division ----------------------------------------------------------

    def divexact(self, g: "LaurentPoly") -> "LaurentPoly":
        """Exact division by g.  Raises ValueError if g does not divide
        self over the integers."""
        if g.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero():
            return _LP_ZERO
        if len(g.d) == 1:
            (eg, cg), = g.d.items()
            out = {}
            for e, c in self.d.items():
                q, r = divmod(c, cg)
                if r:
                    raise ValueError("not an exact division")
                out[e - eg] = q
            return LaurentPoly(out, _trusted=True)
        sv, gv = self.valuation(), g.valuation()
        quo = _int_divexact(_idense(self, -sv), _idense(g, -gv))
        out = {}
        for i, c in enumerate(quo):
            if c:
                out[i + sv - gv] = c
        return LaurentPoly(out, _trusted=True)

    def __repr__(self):
        return f"LaurentPoly({self.pretty()})"

    def pretty(self, half_powers=False):
        """Render in powers of q: even v-exponents as integer q powers, odd
        ones (which only appear in half-power contexts) as q^(k/2)."""
        if not self.d:
            return "0"
        bits = [_term_str(self.d[e], e) for e in sorted(self.d, reverse=True)]
        return " + ".join(bits).replace("+ -", "- ")


def _term_str(c, e):
    if e == 0:
        return str(c)
    if e % 2 == 0:
        var = "q" if e == 2 else f"q^{e // 2}"
    else:
        var = f"q^({e}/2)"
    if c == 1:
        return var
    if c == -1:
        return f"-{var}"
    return f"{c}*{var}"


def _idense(p: LaurentPoly, shift: int):
    """Dense integer list of p * v^shift, which must be an ordinary poly."""
    out = [0] * (p.degree() + shift + 1)
    for e, c in p.d.items():
        out[e + shift] = c
    return out


def _int_trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _int_content(a):
    g = 0
    for c in a:
        if c:
            g = _int_gcd(g, abs(c))
    return g or 1


def _int_primitive(a):
    g = _int_content(a)
    if a[-1] < 0:
        g = -g
    return [c // g for c in a] if g != 1 else a


def _int_divexact(a, b):
    """Synthetic division of integer polys; ValueError unless b divides a
    over the integers."""
    b = _int_trim(list(b))
    r = list(a)
    lb = b[-1]
    db = len(b) - 1
    if len(r) - 1 < db:
        raise ValueError("not an exact division")
    out = [0] * (len(r) - db)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db]
        if c % lb:
            raise ValueError("not an exact division")
        qc = c // lb
        out[k] = qc
        if qc:
            for i, bc in enumerate(b):
                r[k + i] -= qc * bc
    if any(r):
        raise ValueError("not an exact division")
    return out


_GCD_P = (1 << 31) - 1


def _coprime_modp(a, b):
    """True when the polys are provably coprime over Q, by a gcd
    computation modulo a fixed prime.  False is inconclusive."""
    if a[-1] % _GCD_P == 0 or b[-1] % _GCD_P == 0:
        return False
    p = _GCD_P
    fa = [c % p for c in a]
    fb = [c % p for c in b]
    while True:
        fb = _int_trim(fb)
        if not fb:
            return len(_int_trim(fa)) == 1
        if len(fb) == 1:
            return True
        inv = pow(fb[-1], p - 2, p)
        db = len(fb) - 1
        for k in range(len(fa) - 1 - db, -1, -1):
            c = fa[k + db]
            if c:
                c = c * inv % p
                for i, bc in enumerate(fb):
                    fa[k + i] = (fa[k + i] - c * bc) % p
        fa, fb = fb, fa[:db]


def _int_gcd_poly(a, b):
    """gcd of primitive integer polys by a primitive pseudo-remainder
    sequence; returns a primitive poly with positive leading coefficient."""
    a = _int_primitive(_int_trim(list(a)))
    b = _int_primitive(_int_trim(list(b)))
    if len(a) < len(b):
        a, b = b, a
    while True:
        if not b:
            return _int_primitive(a)
        if len(b) == 1:
            return [1]
        # primitive pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db:
            lr = r[-1]
            if lr:
                r = [c * lb for c in r]
                shift = len(r) - 1 - db
                for i, bc in enumerate(b):
                    r[shift + i] -= lr * bc
            del r[-1]
            r = _int_trim(r)
            if not r:
                break
        a, b = b, (_int_primitive(r) if r else [])


def _poly_gcd(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """gcd of the primitive parts over Q, returned as a primitive integer
    polynomial with valuation 0 and positive leading coefficient."""
    if a.is_zero():
        return _primitive(b)
    if b.is_zero():
        return _primitive(a)
    if len(a.d) == 1 or len(b.d) == 1:
        return _LP_ONE
    da = _idense(a, -a.valuation())
    db = _idense(b, -b.valuation())
    if _coprime_modp(da, db):
        return _LP_ONE
    g = _int_gcd_poly(da, db)
    return LaurentPoly({i: c for i, c in enumerate(g) if c}, _trusted=True)


def _primitive(p: LaurentPoly) -> LaurentPoly:
    if p.is_zero():
        return _LP_ZERO
    c = p.content()
    if p.leading_coeff() < 0:
        c = -c
    q = p.shift(-p.valuation())
    if c != 1:
        q = LaurentPoly({e: x // c for e, x in q.d.items()}, _trusted=True)
    return q


_LP_ZERO = LaurentPoly({}, _trusted=True)
_LP_ONE = LaurentPoly({0: 1}, _trusted=True)


class RatQ:
    """Reduced quotient of two Laurent polynomials: an element of the
    coefficient field Q(v).

    Canonical representative: gcd(num, den) is a unit, shared integer
    content removed, den has valuation 0 and positive leading coefficient.
    Equality is then plain structural equality.
    """

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: LaurentPoly, den: LaurentPoly, _trusted=False):
        if not _trusted:
            num, den = _reduce(num, den)
        self.num = num
        self.den = den
        self._hash = None

    # -- constructors ------------------------------------------------------

    @staticmethod
    def make(num: LaurentPoly, den: LaurentPoly) -> "RatQ":
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        return RatQ(num, den)

    @staticmethod
    def from_int(c) -> "RatQ":
        if c == 0:
            return ZERO
        if c == 1:
            return ONE
        return RatQ(LaurentPoly.const(c), _LP_ONE, _trusted=True)

    @staticmethod
    def from_poly(p: LaurentPoly) -> "RatQ":
        return RatQ(p, _LP_ONE, _trusted=True)

    # -- predicates ---------------------------------------------------------

    def is_zero(self):
        return not self.num.d

    def is_one(self):
        return self.num.is_one() and self.den.is_one()

    def __bool__(self):
        return bool(self.num.d)

    # -- field operations ---------------------------------------------------

    def __add__(self, other):
        if not other.num.d:
            return self
        if not self.num.d:
            return other
        if self.den.is_one() and other.den.is_one():
            n = self.num + other.num
            if not n.d:
                return ZERO
            return RatQ(n, _LP_ONE, _trusted=True)
        if self.den == other.den:
            return RatQ(self.num + other.num, self.den)
        return RatQ(self.num * other.den + other.num * self.den,
                    self.den * other.den)

    def __sub__(self, other):
        if not other.num.d:
            return self
        if self.den.is_one() and other.den.is_one():
            n = self.num - other.num
            if not n.d:
                return ZERO
            return RatQ(n, _LP_ONE, _trusted=True)
        if self.den == other.den:
            return RatQ(self.num - other.num, self.den)
        return RatQ(self.num * other.den - other.num * self.den,
                    self.den * other.den)

    def __neg__(self):
        if not self.num.d:
            return self
        return RatQ(-self.num, self.den, _trusted=True)

    def __mul__(self, other):
        if not self.num.d or not other.num.d:
            return ZERO
        if self.den.is_one() and other.den.is_one():
            return RatQ(self.num * other.num, _LP_ONE, _trusted=True)
        return RatQ(self.num * other.num, self.den * other.den)

    def __truediv__(self, other):
        if not other.num.d:
            raise ZeroDivisionError("division by zero")
        if not self.num.d:
            return ZERO
        return RatQ(self.num * other.den, self.den * other.num)

    def inv(self):
        return ONE / self

    # -- comparison / hashing ------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, RatQ)
                and self.num == other.num and self.den == other.den)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    # -- evaluation / rendering ----------------------------------------------

    def evaluate(self, r: Fraction) -> Fraction:
        dv = self.den.evaluate(r)
        if dv == 0:
            raise ZeroDivisionError(f"denominator vanishes at v = {r}")
        return self.num.evaluate(r) / dv

    def pretty(self, half_powers=False):
        if self.den.is_one():
            n = self.num.pretty(half_powers)
            return n if len(self.num.d) == 1 else f"({n})"
        return f"({self.num.pretty(half_powers)})/({self.den.pretty(half_powers)})"

    def __repr__(self):
        return f"RatQ({self.pretty()})"

    def to_json(self):
        return {
            "num": [[e, str(c)] for e, c in sorted(self.num.d.items())],
            "den": [[e, str(c)] for e, c in sorted(self.den.d.items())],
        }

    @staticmethod
    def from_json(obj) -> "RatQ":
        num = LaurentPoly({int(e): int(c) for e, c in obj["num"]})
        den = LaurentPoly({int(e): int(c) for e, c in obj["den"]})
        return RatQ.make(num, den)


def _reduce(num: LaurentPoly, den: LaurentPoly):
    if den.is_zero():
        raise ZeroDivisionError("zero denominator")
    if num.is_zero():
        return _LP_ZERO, _LP_ONE
    if not den.is_one():
        if len(den.d) > 1 or len(num.d) > 1:
            g = _poly_gcd(num, den)
            if not g.is_one():
                num = num.divexact(g)
                den = den.divexact(g)
        s = den.valuation()
        if s:
            num = num.shift(-s)
            den = den.shift(-s)
    c = _int_gcd(num.content(), den.content())
    if den.leading_coeff() < 0:
        c = -c
    if c != 1:
        num = LaurentPoly({e: x // c for e, x in num.d.items()}, _trusted=True)
        den = LaurentPoly({e: x // c for e, x in den.d.items()}, _trusted=True)
    return num, den


ZERO = RatQ(_LP_ZERO, _LP_ONE, _trusted=True)
ONE = RatQ(_LP_ONE, _LP_ONE, _trusted=True)

_VPOW_CACHE: dict[int, RatQ] = {}


def vpow(k) -> RatQ:
    """v^k as a field element (v = q^(1/2), so q^a is vpow(2a))."""
    r = _VPOW_CACHE.get(k)
    if r is None:
        r = RatQ(LaurentPoly.mono(k), _LP_ONE, _trusted=True)
        _VPOW_CACHE[k] = r
    return r


def qpow(a) -> RatQ:
    return vpow(2 * a)


def lp(*pairs) -> LaurentPoly:
    """LaurentPoly from (exp, coeff) pairs; exponents in v."""
    d = {}
    for e, c in pairs:
        d[e] = d.get(e, 0) + c
    return LaurentPoly(d)


def rq(*pairs) -> RatQ:
    """Polynomial field element from (v-exp, coeff) pairs."""
    return RatQ.from_poly(lp(*pairs))
