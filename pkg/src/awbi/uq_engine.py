"""U_q(sl2) backend: PBW normal-form arithmetic in tensor powers, the
coproduct and counit, the Casimir element, and the two coactions on the
coideal subalgebras generated by {EK^-1, F, K^-1, Casimir} (right) and
{E, FK, K, Casimir} (left).

Presentation: generators E, F, K, K^-1 with
    K K^-1 = 1,   K E = q^2 E K,   K F = q^-2 F K,
    E F - F E = (K - K^-1) / (q - q^-1).
Monomials are normal-ordered as F^f K^k E^e.
"""

from __future__ import annotations

from .pbw import AlgElem, Alphabet, Backend, CoidealWord, EdgeElem, acc_term, bracket_q
from .qcoeff import ONE, ZERO, RatQ, lp, vpow

# Packed factor layout: f (10 bits) | k+2048 (12 bits) | e (10 bits).
_KOFF = 2048


def _pack(f, k, e):
    return (f << 22) | ((k + _KOFF) << 10) | e


def _unpack(m):
    return (m >> 22, ((m >> 10) & 0xFFF) - _KOFF, m & 0x3FF)


# frequently used scalars, all in v = q^(1/2)
Q1 = vpow(2)                                   # q
QI = vpow(-2)                                  # q^-1
QM = RatQ.from_poly(lp((2, 1), (-2, -1)))      # q - q^-1
QP = RatQ.from_poly(lp((2, 1), (-2, 1)))       # q + q^-1
QM2 = QM * QM                                  # (q - q^-1)^2
DINV = ONE / QM                                # 1 / (q - q^-1)

_EF_CACHE = {}
_EF1_CACHE = {}


def _ef_single(f):
    """E F^f in normal form (arity-1 term dict), by one straightening step
    and recursion: E F^f = F (E F^{f-1}) + C F^{f-1} with
    C = (K - K^-1)/(q - q^-1)."""
    r = _EF1_CACHE.get(f)
    if r is not None:
        return r
    if f == 0:
        r = {_pack(0, 0, 1): ONE}
    else:
        out = {}
        for m, c in _ef_single(f - 1).items():
            a, b, e = _unpack(m)
            acc_term(out, _pack(a + 1, b, e), c)
        m0 = f - 1
        acc_term(out, _pack(m0, 1, 0), vpow(-4 * m0) * DINV)
        acc_term(out, _pack(m0, -1, 0), -(vpow(4 * m0) * DINV))
        r = out
    _EF1_CACHE[f] = r
    return r


def _ef(e, f):
    """E^e F^f in normal form."""
    key = (e, f)
    r = _EF_CACHE.get(key)
    if r is not None:
        return r
    if e == 0 or f == 0:
        r = {_pack(f, 0, e): ONE}
    elif e == 1:
        r = _ef_single(f)
    else:
        out = {}
        for m, c in _ef_single(f).items():
            a, b, ee = _unpack(m)
            for m2, c2 in _ef(e - 1, a).items():
                a2, b2, e3 = _unpack(m2)
                acc_term(out, _pack(a2, b2 + b, e3 + ee),
                         c * c2 * vpow(-4 * e3 * b))
        r = out
    _EF_CACHE[key] = r
    return r


def _mul_mono(m1, m2):
    f1, k1, e1 = _unpack(m1)
    f2, k2, e2 = _unpack(m2)
    if e1 == 0:
        return ((_pack(f1 + f2, k1 + k2, e2), vpow(-4 * k1 * f2)),)
    if f2 == 0:
        return ((_pack(f1, k1 + k2, e1 + e2), vpow(-4 * e1 * k2)),)
    # move K^k1 right past E^e1 then F^f2, rewrite E^e1 F^f2, then move
    # each E^e past K^(k1+k2)
    base = vpow(4 * k1 * e1 - 4 * k1 * f2)
    k12 = k1 + k2
    out = []
    for m, c in _ef(e1, f2).items():
        a, b, e = _unpack(m)
        out.append((_pack(f1 + a, b + k12, e + e2),
                    base * c * vpow(-4 * e * k12)))
    return tuple(out)


# -- coproduct on monomials --------------------------------------------------

_ID = _pack(0, 0, 0)
_DPOW_CACHE = {}


def _mul2(d1, d2):
    out = {}
    for (a1, b1), c1 in d1.items():
        for (a2, b2), c2 in d2.items():
            c12 = c1 * c2
            for ma, ca in _mul_mono(a1, a2):
                cca = c12 * ca
                for mb, cb in _mul_mono(b1, b2):
                    acc_term(out, (ma, mb), cca * cb)
    return out


def _delta_gen_pow(name, p):
    key = (name, p)
    r = _DPOW_CACHE.get(key)
    if r is not None:
        return r
    if p == 0:
        r = {(_ID, _ID): ONE}
    else:
        if name == "E":
            base = {(_pack(0, 0, 1), _ID): ONE,
                    (_pack(0, 1, 0), _pack(0, 0, 1)): ONE}
        else:
            base = {(_pack(1, 0, 0), _pack(0, -1, 0)): ONE,
                    (_ID, _pack(1, 0, 0)): ONE}
        r = _mul2(_delta_gen_pow(name, p - 1), base)
    _DPOW_CACHE[key] = r
    return r


def _delta_mono(m):
    f, k, e = _unpack(m)
    d = _delta_gen_pow("F", f)
    if k:
        mk = _pack(0, k, 0)
        d = _mul2(d, {(mk, mk): ONE})
    if e:
        d = _mul2(d, _delta_gen_pow("E", e))
    return tuple((a, b, c) for (a, b), c in d.items())


def _counit_mono(m):
    f, k, e = _unpack(m)
    return ONE if f == 0 and e == 0 else ZERO


def _mono_pretty(m):
    f, k, e = _unpack(m)
    bits = []
    if f:
        bits.append("F" if f == 1 else f"F^{f}")
    if k:
        bits.append("K" if k == 1 else f"K^{k}")
    if e:
        bits.append("E" if e == 1 else f"E^{e}")
    return ".".join(bits) if bits else "1"


# -- the Casimir and the coideal tables ---------------------------------------

# Casimir in normal form: (q-q^-1)^2 F E + q K + q^-1 K^-1
_CASIMIR = {
    _pack(1, 0, 1): QM2,
    _pack(0, 1, 0): Q1,
    _pack(0, -1, 0): QI,
}


def _d(*pairs):
    out = {}
    for m, c in pairs:
        acc_term(out, m, c)
    return out


_mE = _pack(0, 0, 1)
_mF = _pack(1, 0, 0)
_mK = _pack(0, 1, 0)
_mKi = _pack(0, -1, 0)
_mFK = _pack(1, 1, 0)
_mF2K = _pack(2, 1, 0)
_mKiE = _pack(0, -1, 1)

# E K^-1 = q^2 K^-1 E
_EKi_PBW = _d((_mKiE, vpow(4)))

_R_PBW = {
    "EKi": _EKi_PBW,
    "F": _d((_mF, ONE)),
    "Ki": _d((_mKi, ONE)),
    "Lam": dict(_CASIMIR),
}
_L_PBW = {
    "E": _d((_mE, ONE)),
    "FK": _d((_mFK, ONE)),
    "K": _d((_mK, ONE)),
    "Lam": dict(_CASIMIR),
}

# right coaction on {EK^-1, F, K^-1, Casimir}
_R_TAU = {
    "EKi": ((_d((_mKi, ONE)), "EKi"),),
    "F": (
        (_d((_mK, ONE)), "F"),
        (_d((_mF2K, -(vpow(-6) * QM2))), "EKi"),
        (_d((_mFK, QI * QP)), "Ki"),
        (_d((_mFK, -QI)), "Lam"),
    ),
    "Ki": (
        (_d((_ID, ONE)), "Ki"),
        (_d((_mF, -(QI * QM2))), "EKi"),
    ),
    "Lam": ((_d((_ID, ONE)), "Lam"),),
}

# left coaction on {E, FK, K, Casimir}
_L_TAU = {
    "E": ((_d((_mK, ONE)), "E"),),
    "FK": (
        (_d((_mKi, ONE)), "FK"),
        (_d((_mF2K, -(QI * QM2))), "E"),
        (_d((_mF, Q1 * QP)), "K"),
        (_d((_mF, -Q1)), "Lam"),
    ),
    "K": (
        (_d((_ID, ONE)), "K"),
        (_d((_mFK, -(QI * QM2))), "E"),
    ),
    "Lam": ((_d((_ID, ONE)), "Lam"),),
}

# coproducts of the alphabet letters, retained leg kept in the alphabet
_R_DELTA = {
    "EKi": ((dict(_EKi_PBW), "Ki"), (_d((_ID, ONE)), "EKi")),
    "F": ((_d((_mF, ONE)), "Ki"), (_d((_ID, ONE)), "F")),
    "Ki": ((_d((_mKi, ONE)), "Ki"),),
    "Lam": (
        (dict(_CASIMIR), "Ki"),
        (_d((_mK, ONE)), "Lam"),
        (_d((_mK, -QP)), "Ki"),
        (_d((_mE, QM2)), "F"),
        (_d((_mFK, vpow(-4) * QM2)), "EKi"),
    ),
}
# q^-2 (q-q^-1)^2 FK (x) EK^-1 has ambient right leg
# q^-2 (q-q^-1)^2 EK^-1 = (q-q^-1)^2 K^-1 E
_L_DELTA = {
    "E": ((_d((_ID, ONE)), "E"), (_d((_mE, ONE)), "K")),
    "FK": ((_d((_ID, ONE)), "FK"), (_d((_mFK, ONE)), "K")),
    "K": ((_d((_mK, ONE)), "K"),),
    "Lam": (
        (_d((_mKi, ONE)), "Lam"),
        (dict(_CASIMIR), "K"),
        (_d((_mKi, -QP)), "K"),
        (_d((_mF, QM2)), "E"),
        (_d((_mKiE, QM2)), "FK"),
    ),
}

# coproduct of the Casimir with both legs in alphabet letters
_CAS_DELTA = (
    ("Lam", "Ki", ONE),
    ("K", "Lam", ONE),
    ("K", "Ki", -QP),
    ("E", "F", QM2),
    ("FK", "EKi", vpow(-4) * QM2),
)

AW = Backend(
    name="aw",
    nfields=3,
    pack=_pack,
    unpack=_unpack,
    mul_mono=_mul_mono,
    delta_mono=_delta_mono,
    counit_mono=_counit_mono,
    casimir=_CASIMIR,
    casimir_counit=QP,
    alphabets={
        "R": Alphabet("R", ("EKi", "F", "Ki", "Lam"), _R_PBW, _R_TAU, _R_DELTA),
        "L": Alphabet("L", ("E", "FK", "K", "Lam"), _L_PBW, _L_TAU, _L_DELTA),
    },
    casimir_delta=_CAS_DELTA,
    mono_pretty=_mono_pretty,
    half_powers=False,
    parity=None,
)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def element(mono_exps, coeff=ONE) -> AlgElem:
    """Arity-1 element coeff * F^f K^k E^e from (f, k, e)."""
    return AlgElem(AW, 1, {(_pack(*mono_exps),): coeff})


def gen(name: str) -> AlgElem:
    """One of the generators E, F, K, Ki as an arity-1 element."""
    exps = {"E": (0, 0, 1), "F": (1, 0, 0), "K": (0, 1, 0), "Ki": (0, -1, 0)}[name]
    return element(exps)


def casimir() -> AlgElem:
    return AlgElem.casimir(AW)


def mul(x: AlgElem, y: AlgElem) -> AlgElem:
    return x * y


def q_comm(x: AlgElem, y: AlgElem, sign: str = "q") -> AlgElem:
    """[x,y]_q = q x y - q^-1 y x, or the plain commutator for sign="inv"."""
    if sign == "q":
        return bracket_q(x, y, Q1, -QI)
    if sign == "inv":
        return bracket_q(x, y, ONE, -ONE)
    raise ValueError(f"unknown sign {sign!r}")


def coproduct(x: AlgElem, pos: int) -> AlgElem:
    return x.coproduct(pos)


def counit(x: AlgElem, pos: int) -> AlgElem:
    return x.counit(pos)


def coideal_word(side: str, name: str) -> CoidealWord:
    return CoidealWord.letter(AW, side, name)


def tau_R(x: CoidealWord) -> EdgeElem:
    """Right coaction; returns an arity-2 element whose second leg is
    retained as a coideal word."""
    if x.side != "R":
        raise ValueError("tau_R needs a right-alphabet word")
    return EdgeElem.from_word(x).tau_r()


def tau_L(x: CoidealWord) -> EdgeElem:
    if x.side != "L":
        raise ValueError("tau_L needs a left-alphabet word")
    return EdgeElem.from_word(x).tau_l()
