"""osp_q(1|2) engine: parity bookkeeping, Hopf structure, coactions."""

import random

from awbi import osp_engine as osp
from awbi.pbw import AlgElem, CoidealWord, EdgeElem, acc_term
from awbi.qcoeff import ONE, vpow

BI = osp.BI
AP, AM, K, KI, P = (osp.gen(g) for g in ("A+", "A-", "K", "Ki", "P"))
GAM = osp.gamma_casimir()


def test_defining_relations():
    S = (K * K - KI * KI).scale(osp.SINV)
    assert AP * AM + AM * AP == S
    assert P * AP == -(AP * P)
    assert P * AM == -(AM * P)
    assert P * P == AlgElem.one(BI, 1)
    assert P * K == K * P
    assert K * AP == (AP * K).scale(osp.VH)
    assert K * AM == (AM * K).scale(osp.VHI)
    assert K * KI == AlgElem.one(BI, 1)


def test_parity_exponent_stays_in_range():
    rng = random.Random(3)
    for _ in range(200):
        m1 = BI.pack(rng.randint(0, 2), rng.randint(0, 2), rng.randint(-2, 2),
                     rng.randint(0, 1))
        m2 = BI.pack(rng.randint(0, 2), rng.randint(0, 2), rng.randint(-2, 2),
                     rng.randint(0, 1))
        for m, _ in BI.mul_mono(m1, m2):
            assert BI.unpack(m)[3] in (0, 1)


def test_casimir():
    # definition: (-A+A- + (q^-1/2 K^2 - q^1/2 K^-2)/(q - q^-1)) P
    built = (-(AP * AM)
             + (K * K).scale(osp.VHI / osp.QM)
             - (KI * KI).scale(osp.VH / osp.QM)) * P
    assert built == GAM
    for g in (AP, AM, K, P):
        assert osp.q_comm(GAM, g).is_zero()
    assert osp.q_comm(GAM * GAM, AP).is_zero()
    assert all(BI.unpack(k[0])[3] == 1 for k in GAM.terms)
    assert GAM.counit(1) == AlgElem.scalar(BI, 0, BI.casimir_counit)


def test_coproduct_generators():
    assert P.coproduct(1) == AlgElem(BI, 2, {(BI.pack(0, 0, 0, 1),) * 2: ONE})
    # Delta(A+ K) = A+K (x) K^2 P + 1 (x) A+K
    apk = AP * K
    expected = (apk.pad(0, 1) * (K * K * P).pad(1, 0)) + apk.pad(1, 0)
    assert apk.coproduct(1) == expected


def test_coproduct_is_algebra_morphism():
    # the anticommutator relation survives the coproduct under the
    # ordinary, ungraded tensor product; this pins the sign convention
    S = (K * K - KI * KI).scale(osp.SINV)
    dAp, dAm = AP.coproduct(1), AM.coproduct(1)
    assert dAp * dAm + dAm * dAp == S.coproduct(1)
    dP = P.coproduct(1)
    assert dP * dAp == -(dAp * dP)
    assert dP * dP == AlgElem.one(BI, 2)
    rng = random.Random(11)
    for _ in range(50):
        x = osp.element((rng.randint(0, 2), rng.randint(0, 2),
                         rng.randint(-2, 2), rng.randint(0, 1)))
        y = osp.element((rng.randint(0, 2), rng.randint(0, 2),
                         rng.randint(-2, 2), rng.randint(0, 1)))
        assert (x * y).coproduct(1) == x.coproduct(1) * y.coproduct(1)


def test_graded_tensor_convention_fails():
    # negative control: with Koszul signs between the factors the
    # coproduct would NOT respect the anticommutator relation
    def koszul_mul(x, y):
        out = {}
        parity = BI.parity
        for k1, c1 in x.terms.items():
            for k2, c2 in y.terms.items():
                sign = parity(k1[1]) * parity(k2[0])
                c = c1 * c2
                if sign:
                    c = -c
                parts = [((), c)]
                for i in range(2):
                    fr = BI.mul_mono(k1[i], k2[i])
                    parts = [(kk + (m,), cc * fc) for kk, cc in parts
                             for m, fc in fr]
                for kk, cc in parts:
                    acc_term(out, kk, cc)
        return AlgElem(BI, 2, out)

    S = (K * K - KI * KI).scale(osp.SINV)
    dAp, dAm = AP.coproduct(1), AM.coproduct(1)
    graded = koszul_mul(dAp, dAm) + koszul_mul(dAm, dAp)
    assert graded != S.coproduct(1)


def test_coassociativity_and_counit_axioms():
    for g in (AP, AM, K, KI, P, GAM):
        d = g.coproduct(1)
        assert d.coproduct(2) == d.coproduct(1)
        assert d.counit(1) == g
        assert d.counit(2) == g


def test_counit_values():
    assert AP.counit(1).is_zero()
    assert P.counit(1) == AlgElem.one(BI, 0)
    assert KI.counit(1) == AlgElem.one(BI, 0)


def test_casimir_coproduct_in_coideal_alphabets():
    # the display used as the construction seed must match the engine, and
    # both its legs must be expressible in the coideal alphabets
    seed = EdgeElem.casimir_delta(BI)
    assert seed.finalize() == GAM.coproduct(1)
    for (lw, _, rw) in seed.terms:
        assert all(g in BI.alphabets["L"].letters for g in lw)
        assert all(g in BI.alphabets["R"].letters for g in rw)


def test_tau_images():
    t = osp.osp_tau_R(osp.coideal_word("R", "Gam")).finalize()
    assert t == GAM.pad(1, 0)
    # tau_R(K^2 P) = 1 (x) K^2P - (q - q^-1) A+K (x) A-K
    t = osp.osp_tau_R(osp.coideal_word("R", "K2P")).finalize()
    k2p = K * K * P
    expected = k2p.pad(1, 0) - ((AP * K).pad(0, 1) * (AM * K).pad(1, 0)).scale(osp.QM)
    assert t == expected
    # (eps (x) 1) tau_R = id on A+K
    w = osp.coideal_word("R", "A+K")
    assert osp.osp_tau_R(w).counit_mid(1).finalize() == w.expand()
    # tau_L(A- K^-1 P) = A-K^-1P (x) K^-2P
    t = osp.osp_tau_L(osp.coideal_word("L", "A-KiP")).finalize()
    amkip = AM * KI * P
    assert t == amkip.pad(0, 1) * (KI * KI * P).pad(1, 0)


def test_comodule_axioms():
    for g in BI.alphabets["R"].letters:
        t = osp.osp_tau_R(osp.coideal_word("R", g))
        assert t.tau_r().finalize() == t.delta_mid(1).finalize()
        assert t.counit_mid(1).finalize() == osp.coideal_word("R", g).expand()
    for g in BI.alphabets["L"].letters:
        t = osp.osp_tau_L(osp.coideal_word("L", g))
        assert t.tau_l().finalize() == t.delta_mid(2).finalize()
        assert t.counit_mid(2).finalize() == osp.coideal_word("L", g).expand()


def test_coideal_property_tables():
    for side in ("R", "L"):
        alpha = BI.alphabets[side]
        for g in alpha.letters:
            w = CoidealWord.letter(BI, side, g)
            st = EdgeElem.from_word(w)
            table = st.delta_r() if side == "R" else st.delta_l()
            for key in table.terms:
                word = key[2] if side == "R" else key[0]
                assert all(letter in alpha.letters for letter in word)
            assert table.finalize() == w.expand().coproduct(1)


def test_tau_well_defined_on_relations():
    W = lambda g: osp.coideal_word("R", g)
    unit = CoidealWord(BI, "R", {(): ONE})
    q1, qi = vpow(2), vpow(-2)
    rels = [
        W("K2P") * W("A+K") + (W("A+K") * W("K2P")).scale(q1),
        W("K2P") * W("A-K") + (W("A-K") * W("K2P")).scale(qi),
        # A+K.A-K + q^-1 A-K.A+K = q^-1/2 (K2P.K2P - 1)/(q^1/2 - q^-1/2)
        W("A+K") * W("A-K") + (W("A-K") * W("A+K")).scale(qi)
        - (W("K2P") * W("K2P") - unit).scale(osp.VHI * osp.SINV),
    ]
    rels += [W("Gam") * W(g) - W(g) * W("Gam") for g in ("A+K", "A-K", "K2P")]
    for r in rels:
        assert r.expand().is_zero()
        assert EdgeElem.from_word(r).tau_r().finalize().is_zero()

    WL = lambda g: osp.coideal_word("L", g)
    unitL = CoidealWord(BI, "L", {(): ONE})
    rels = [
        WL("Ki2P") * WL("A+KiP") + (WL("A+KiP") * WL("Ki2P")).scale(qi),
        WL("Ki2P") * WL("A-KiP") + (WL("A-KiP") * WL("Ki2P")).scale(q1),
        # A+KiP.A-KiP + q A-KiP.A+KiP = -q^1/2 (1 - Ki2P.Ki2P)/(q^1/2 - q^-1/2)
        WL("A+KiP") * WL("A-KiP") + (WL("A-KiP") * WL("A+KiP")).scale(q1)
        + (unitL - WL("Ki2P") * WL("Ki2P")).scale(osp.VH * osp.SINV),
    ]
    rels += [WL("Gam") * WL(g) - WL(g) * WL("Gam")
             for g in ("A+KiP", "A-KiP", "Ki2P")]
    for r in rels:
        assert r.expand().is_zero()
        assert EdgeElem.from_word(r).tau_l().finalize().is_zero()


def test_cotensor_property():
    seed = EdgeElem.casimir_delta(BI)
    assert seed.tau_r().finalize() == seed.tau_l().finalize()


def test_associativity_randomized():
    rng = random.Random(13)
    for _ in range(40):
        def r_elem():
            terms = {}
            for _ in range(rng.randint(1, 2)):
                key = tuple(BI.pack(rng.randint(0, 2), rng.randint(0, 2),
                                    rng.randint(-2, 2), rng.randint(0, 1))
                            for _ in range(2))
                terms[key] = vpow(rng.randint(-2, 2))
            return AlgElem(BI, 2, terms)
        a, b, c = r_elem(), r_elem(), r_elem()
        assert (a * b) * c == a * (b * c)


def test_json_uses_four_field_monomials():
    obj = GAM.to_json()
    assert all(len(t["mono"][0]) == 4 for t in obj["terms"])
    assert AlgElem.from_json(BI, obj) == GAM
