"""osp_q(1|2) backend: normal forms with the parity generator P, the
Casimir, coproduct, and the coideal coactions for the q-Bannai-Ito family.

Presentation: generators A+, A-, K, K^-1, P with
    K A+ K^-1 = q^(1/2) A+,   K A- K^-1 = q^(-1/2) A-,
    A+ A- + A- A+ = (K^2 - K^-2) / (q^(1/2) - q^(-1/2)),
    {P, A+-} = 0,   [P, K] = 0,   P^2 = 1.
Monomials are normal-ordered as A-^a A+^c K^k P^p with p in {0, 1}.

The tensor product is the ordinary, ungraded one: every sign lives in P.
Right coideal alphabet: {A+K, A-K, K^2 P, Casimir}; left coideal alphabet:
{A+K^-1 P, A-K^-1 P, K^-2 P, Casimir}.
"""

from __future__ import annotations

from .pbw import AlgElem, Alphabet, Backend, CoidealWord, EdgeElem, acc_term, bracket_q
from .qcoeff import ONE, ZERO, RatQ, lp, vpow

# Packed factor layout: a- (10 bits) | a+ (10 bits) | k+2048 (12 bits) | p (1 bit).
_KOFF = 2048


def _pack(am, ap, k, p):
    return (am << 23) | (ap << 13) | ((k + _KOFF) << 1) | p


def _unpack(m):
    return (m >> 23, (m >> 13) & 0x3FF, ((m >> 1) & 0xFFF) - _KOFF, m & 1)


VH = vpow(1)                                    # q^(1/2)
VHI = vpow(-1)                                  # q^(-1/2)
SM = RatQ.from_poly(lp((1, 1), (-1, -1)))       # q^(1/2) - q^(-1/2)
SP = RatQ.from_poly(lp((1, 1), (-1, 1)))        # q^(1/2) + q^(-1/2)
QM = RatQ.from_poly(lp((2, 1), (-2, -1)))       # q - q^-1
SINV = ONE / SM

_APAM_CACHE = {}
_AP1_CACHE = {}


def _ap_single(a):
    """A+ A-^a in normal form: A+ A-^a = -A-(A+ A-^{a-1}) + S A-^{a-1},
    with S = (K^2 - K^-2)/(q^(1/2) - q^(-1/2))."""
    r = _AP1_CACHE.get(a)
    if r is not None:
        return r
    if a == 0:
        r = {_pack(0, 1, 0, 0): ONE}
    else:
        out = {}
        for m, c in _ap_single(a - 1).items():
            am, ap, k, _ = _unpack(m)
            acc_term(out, _pack(am + 1, ap, k, 0), -c)
        m0 = a - 1
        acc_term(out, _pack(m0, 0, 2, 0), vpow(-2 * m0) * SINV)
        acc_term(out, _pack(m0, 0, -2, 0), -(vpow(2 * m0) * SINV))
        r = out
    _AP1_CACHE[a] = r
    return r


def _apam(c, a):
    """A+^c A-^a in normal form."""
    key = (c, a)
    r = _APAM_CACHE.get(key)
    if r is not None:
        return r
    if c == 0 or a == 0:
        r = {_pack(a, c, 0, 0): ONE}
    elif c == 1:
        r = _ap_single(a)
    else:
        out = {}
        for m, coef in _ap_single(a).items():
            a1, c1, b1, _ = _unpack(m)
            for m2, coef2 in _apam(c - 1, a1).items():
                a2, c2, b2, _ = _unpack(m2)
                acc_term(out, _pack(a2, c2 + c1, b2 + b1, 0),
                         coef * coef2 * vpow(b2 * c1))
        r = out
    _APAM_CACHE[key] = r
    return r


def _mul_mono(m1, m2):
    a1, c1, b1, p1 = _unpack(m1)
    a2, c2, b2, p2 = _unpack(m2)
    neg = p1 and (a2 + c2) & 1
    p = (p1 + p2) & 1
    base = vpow(b1 * (c2 - a2))
    if neg:
        base = -base
    if c1 == 0 or a2 == 0:
        return ((_pack(a1 + a2, c1 + c2, b1 + b2, p), base),)
    out = []
    for m, c in _apam(c1, a2).items():
        am, ap, b, _ = _unpack(m)
        out.append((_pack(a1 + am, ap + c2, b + b1 + b2, p),
                    base * c * vpow(b * c2)))
    return tuple(out)


# -- coproduct on monomials ---------------------------------------------------

_ID = _pack(0, 0, 0, 0)
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
        if name == "A-":
            g, kp, ki = _pack(1, 0, 0, 0), _pack(0, 0, 1, 1), _pack(0, 0, -1, 0)
        else:
            g, kp, ki = _pack(0, 1, 0, 0), _pack(0, 0, 1, 1), _pack(0, 0, -1, 0)
        base = {(g, kp): ONE, (ki, g): ONE}
        r = _mul2(_delta_gen_pow(name, p - 1), base)
    _DPOW_CACHE[key] = r
    return r


def _delta_mono(m):
    am, ap, k, p = _unpack(m)
    d = _delta_gen_pow("A-", am)
    if ap:
        d = _mul2(d, _delta_gen_pow("A+", ap))
    if k:
        mk = _pack(0, 0, k, 0)
        d = _mul2(d, {(mk, mk): ONE})
    if p:
        mp = _pack(0, 0, 0, 1)
        d = _mul2(d, {(mp, mp): ONE})
    return tuple((a, b, c) for (a, b), c in d.items())


def _counit_mono(m):
    am, ap, k, p = _unpack(m)
    return ONE if am == 0 and ap == 0 else ZERO


def _parity(m):
    am, ap, _, _ = _unpack(m)
    return (am + ap) & 1


def _mono_pretty(m):
    am, ap, k, p = _unpack(m)
    bits = []
    if am:
        bits.append("A-" if am == 1 else f"A-^{am}")
    if ap:
        bits.append("A+" if ap == 1 else f"A+^{ap}")
    if k:
        bits.append("K" if k == 1 else f"K^{k}")
    if p:
        bits.append("P")
    return ".".join(bits) if bits else "1"


# -- the Casimir and the coideal tables ----------------------------------------

# Casimir in normal form:
#   A- A+ P - q^(1/2)/(q - q^-1) K^2 P + q^(-1/2)/(q - q^-1) K^-2 P
_CASIMIR = {
    _pack(1, 1, 0, 1): ONE,
    _pack(0, 0, 2, 1): -(VH / QM),
    _pack(0, 0, -2, 1): VHI / QM,
}

# counit of the Casimir; also the empty-set scalar for this family
_CAS_COUNIT = -(ONE / SP)


def _d(*pairs):
    out = {}
    for m, c in pairs:
        acc_term(out, m, c)
    return out


_mApK = _pack(0, 1, 1, 0)       # A+ K
_mAmK = _pack(1, 0, 1, 0)       # A- K
_mK2P = _pack(0, 0, 2, 1)       # K^2 P
_mKi2P = _pack(0, 0, -2, 1)     # K^-2 P
_mAp2P = _pack(0, 2, 0, 1)      # A+^2 P
_mApKiP = _pack(0, 1, -1, 1)    # A+ K^-1 P
_mAmKiP = _pack(1, 0, -1, 1)    # A- K^-1 P

_R_PBW = {
    "A+K": _d((_mApK, ONE)),
    "A-K": _d((_mAmK, ONE)),
    "K2P": _d((_mK2P, ONE)),
    "Gam": dict(_CASIMIR),
}
_L_PBW = {
    "A+KiP": _d((_mApKiP, ONE)),
    "A-KiP": _d((_mAmKiP, ONE)),
    "Ki2P": _d((_mKi2P, ONE)),
    "Gam": dict(_CASIMIR),
}

_R_TAU = {
    "A-K": ((_d((_mK2P, ONE)), "A-K"),),
    "A+K": (
        (_d((_mKi2P, ONE)), "A+K"),
        (_d((_mAp2P, VHI * QM)), "A-K"),
        (_d((_mApKiP, VHI * SM)), "K2P"),
        (_d((_mApKiP, VHI * QM)), "Gam"),
    ),
    "K2P": (
        (_d((_ID, ONE)), "K2P"),
        (_d((_mApK, -QM)), "A-K"),
    ),
    "Gam": ((_d((_ID, ONE)), "Gam"),),
}

_L_TAU = {
    "A-KiP": ((_d((_mKi2P, ONE)), "A-KiP"),),
    "A+KiP": (
        (_d((_mK2P, ONE)), "A+KiP"),
        (_d((_mAp2P, -(VH * QM))), "A-KiP"),
        (_d((_mApK, -(VH * SM))), "Ki2P"),
        (_d((_mApK, -(VH * QM))), "Gam"),
    ),
    "Ki2P": (
        (_d((_ID, ONE)), "Ki2P"),
        (_d((_mApKiP, -QM)), "A-KiP"),
    ),
    "Gam": ((_d((_ID, ONE)), "Gam"),),
}

_R_DELTA = {
    "A+K": ((_d((_mApK, ONE)), "K2P"), (_d((_ID, ONE)), "A+K")),
    "A-K": ((_d((_mAmK, ONE)), "K2P"), (_d((_ID, ONE)), "A-K")),
    "K2P": ((_d((_mK2P, ONE)), "K2P"),),
    "Gam": (
        (dict(_CASIMIR), "K2P"),
        (_d((_mKi2P, ONE)), "Gam"),
        (_d((_mApKiP, VHI)), "A-K"),
        (_d((_mAmKiP, -VH)), "A+K"),
        (_d((_mKi2P, ONE / SP)), "K2P"),
    ),
}
_L_DELTA = {
    "A+KiP": ((_d((_ID, ONE)), "A+KiP"), (_d((_mApKiP, ONE)), "Ki2P")),
    "A-KiP": ((_d((_ID, ONE)), "A-KiP"), (_d((_mAmKiP, ONE)), "Ki2P")),
    "Ki2P": ((_d((_mKi2P, ONE)), "Ki2P"),),
    "Gam": (
        (_d((_mK2P, ONE)), "Gam"),
        (dict(_CASIMIR), "Ki2P"),
        (_d((_mAmK, VHI)), "A+KiP"),
        (_d((_mApK, -VH)), "A-KiP"),
        (_d((_mK2P, ONE / SP)), "Ki2P"),
    ),
}

# coproduct of the Casimir, both legs in alphabet letters
_CAS_DELTA = (
    ("Gam", "K2P", ONE),
    ("Ki2P", "Gam", ONE),
    ("A+KiP", "A-K", VHI),
    ("A-KiP", "A+K", -VH),
    ("Ki2P", "K2P", ONE / SP),
)

BI = Backend(
    name="bi",
    nfields=4,
    pack=_pack,
    unpack=_unpack,
    mul_mono=_mul_mono,
    delta_mono=_delta_mono,
    counit_mono=_counit_mono,
    casimir=_CASIMIR,
    casimir_counit=_CAS_COUNIT,
    alphabets={
        "R": Alphabet("R", ("A+K", "A-K", "K2P", "Gam"), _R_PBW, _R_TAU, _R_DELTA),
        "L": Alphabet("L", ("A+KiP", "A-KiP", "Ki2P", "Gam"), _L_PBW, _L_TAU, _L_DELTA),
    },
    casimir_delta=_CAS_DELTA,
    mono_pretty=_mono_pretty,
    half_powers=True,
    parity=_parity,
)


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------

def element(mono_exps, coeff=ONE) -> AlgElem:
    """Arity-1 element coeff * A-^a A+^c K^k P^p from (a, c, k, p)."""
    return AlgElem(BI, 1, {(_pack(*mono_exps),): coeff})


def gen(name: str) -> AlgElem:
    exps = {"A+": (0, 1, 0, 0), "A-": (1, 0, 0, 0),
            "K": (0, 0, 1, 0), "Ki": (0, 0, -1, 0), "P": (0, 0, 0, 1)}[name]
    return element(exps)


def gamma_casimir() -> AlgElem:
    return AlgElem.casimir(BI)


def osp_mul(x: AlgElem, y: AlgElem) -> AlgElem:
    return x * y


def q_comm(x: AlgElem, y: AlgElem, sign: str = "inv") -> AlgElem:
    """Plain commutator (sign="inv") or [x,y]_q with q-weights."""
    if sign == "inv":
        return bracket_q(x, y, ONE, -ONE)
    if sign == "q":
        return bracket_q(x, y, vpow(2), -vpow(-2))
    raise ValueError(f"unknown sign {sign!r}")


def q_anticomm(x: AlgElem, y: AlgElem) -> AlgElem:
    """{x,y}_q = q^(1/2) x y + q^(-1/2) y x."""
    return bracket_q(x, y, VH, VHI)


def osp_coproduct(x: AlgElem, pos: int) -> AlgElem:
    return x.coproduct(pos)


def osp_counit(x: AlgElem, pos: int) -> AlgElem:
    return x.counit(pos)


def coideal_word(side: str, name: str) -> CoidealWord:
    return CoidealWord.letter(BI, side, name)


def osp_tau_R(x: CoidealWord) -> EdgeElem:
    if x.side != "R":
        raise ValueError("tau_R needs a right-alphabet word")
    return EdgeElem.from_word(x).tau_r()


def osp_tau_L(x: CoidealWord) -> EdgeElem:
    if x.side != "L":
        raise ValueError("tau_L needs a left-alphabet word")
    return EdgeElem.from_word(x).tau_l()
