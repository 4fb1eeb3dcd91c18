"""Relation checks, the pattern decider, suites, and the scanner."""

from awbi import osp_engine as osp
from awbi import uq_engine as uq
from awbi.relations import (check_comm, check_star, fundamental_families,
                            predict_pattern, q_identities_regression, scan,
                            suite_commute, suite_fundamental,
                            suite_named_lemmas, suite_theorem_B,
                            theorem_pairs, EXPLICIT_COMM_PAIRS)

AW, BI = uq.AW, osp.BI


def test_rank_one_relations():
    for backend in (AW, BI):
        assert check_star((1, 2), (2, 3), 3, backend).holds_star
        assert check_star((2, 3), (1, 3), 3, backend).holds_star
        assert check_star((1, 3), (1, 2), 3, backend).holds_star


def test_reversed_rank_one_fails_with_residual():
    rep = check_star((1, 2), (1, 3), 3, AW)
    assert not rep.holds_star
    assert rep.residual_star.term_count() > 0


def test_check_comm_examples():
    assert check_comm((1, 2, 3), (1, 3), 3, AW).holds_comm
    assert check_comm((1, 2), (1, 2), 2, AW).holds_comm
    assert check_comm((2, 4), (1, 5), 5, AW).holds_comm
    assert check_comm((1, 2, 3), (2,), 3, AW).holds_comm


def test_comm_symmetry():
    for A, B in (((1, 2), (2, 3)), ((1, 3), (1, 2, 3))):
        assert (check_comm(A, B, 3, AW).holds_comm
                == check_comm(B, A, 3, AW).holds_comm)


def test_predict_pattern_examples():
    ok, wit = predict_pattern((1, 2), (2, 3))
    assert ok and wit[0] == 1 and wit[1] == ((1,), (2,), (3,), ())
    ok, _ = predict_pattern((1, 2), (1, 3))
    assert not ok
    ok, wit = predict_pattern((2,), (1, 3))
    assert ok and wit[0] == 2
    # empty sets are always admissible on either side
    assert predict_pattern((), ())[0]
    assert predict_pattern((1, 3), ())[0]
    assert predict_pattern((1, 2), (1, 2))[0]


def test_star_empty_set_degenerations():
    for backend in (AW, BI):
        assert check_star((), (), 2, backend).holds_star
        assert check_star((1, 2), (), 2, backend).holds_star
        assert check_star((), (1,), 2, backend).holds_star
        assert check_star((1, 2), (1, 2), 2, backend).holds_star


def test_suite_commute_counts_and_passes():
    reports = suite_commute(3, AW)
    assert len(reports) == 27
    assert all(r.holds_comm for r in reports)
    reports = suite_commute(2, BI)
    assert len(reports) == 9
    assert all(r.holds_comm for r in reports)


def test_theorem_pairs_contains_rank_one():
    pairs = theorem_pairs(3)
    assert ((1, 2), (2, 3)) in pairs
    assert ((2, 3), (1, 3)) in pairs
    assert ((1, 3), (1, 2)) in pairs
    assert ((1, 2), (1, 3)) not in pairs


def test_suite_theorem_B_n3():
    for backend in (AW, BI):
        reports = suite_theorem_B(3, backend)
        assert all(r.holds_star for r in reports)


def test_quadruple_form_example_n4():
    # quadruple ({1},{2},{3},{4}), first form: A = {1,2,4}, B = {2,3}
    pairs = theorem_pairs(4)
    assert ((1, 2, 4), (2, 3)) in pairs
    assert check_star((1, 2, 4), (2, 3), 4, AW).holds_star


def test_fundamental_families_instances():
    fams = {(name, k, ell): (A, B, n)
            for name, k, ell, A, B, n in fundamental_families(7)}
    assert fams[("C1", 1, None)] == ((1, 2), (2, 3), 3)
    assert fams[("C2", 1, None)] == ((2, 3), (1, 3), 3)
    assert fams[("C4'", 1, 0)] == ((1, 2, 5), (2, 4), 5)
    assert fams[("C6", 1, 0)] == ((1, 3, 4), (1, 2, 4), 4)
    # arity bound respected
    assert all(n <= 7 for (_, _, n) in fams.values())


def test_suite_fundamental_small():
    for backend in (AW, BI):
        reports = suite_fundamental(backend, arity_limit=5)
        assert reports and all(r.holds_star for r in reports)


def test_named_lemmas_pass_small():
    reports = suite_named_lemmas(AW)
    for r in reports:
        ok = r.holds_comm if r.holds_comm is not None else r.holds_star
        assert ok, (r.label, r.A, r.B)


def test_explicit_comm_list_entries():
    assert len(EXPLICIT_COMM_PAIRS) == 15
    assert check_comm((1, 3, 4), (1, 3), 4, AW).holds_comm
    assert check_comm((1, 2, 3, 5, 6, 7), (2, 6), 7, AW).holds_comm


def test_q_identities():
    for backend in (AW, BI):
        reports = q_identities_regression(backend)
        assert len(reports) == 8
        assert all(r.holds_comm for r in reports)


def test_scan_n2():
    reports, summary = scan(2, AW)
    assert summary["pairs"] == 16
    assert summary["star_holds"] == 16
    assert summary["pattern_predicted"] == 16
    assert not summary["pattern_disagreements"]
    assert not summary["containment_comm_failures"]
    by_pair = {(r.A, r.B): r for r in reports}
    assert by_pair[((1,), (2,))].holds_star
    assert by_pair[((1,), (2,))].pattern_predicted


def test_scan_n3_agreement():
    for backend in (AW, BI):
        reports, summary = scan(3, backend)
        assert summary["pairs"] == 64
        assert summary["star_holds"] == 61
        assert not summary["pattern_disagreements"]
        assert not summary["containment_comm_failures"]
        star_set = {(r.A, r.B) for r in reports if r.holds_star}
        predicted = {(r.A, r.B) for r in reports if r.pattern_predicted}
        assert star_set == predicted


def test_scan_residuals_recomputed_not_shortcircuited():
    rep = check_star((1, 2), (1, 3), 3, AW)
    assert rep.holds_star == rep.residual_star.is_zero()
    rep2 = check_star((1, 2), (2, 3), 3, AW)
    assert rep2.holds_star and rep2.residual_star.is_zero()


def test_report_json():
    rep = check_star((1, 2), (2, 3), 3, AW)
    rep.pattern_predicted, rep.witness = predict_pattern(rep.A, rep.B)
    obj = rep.to_json()
    assert obj["holds_star"] and obj["residual_star_terms"] == 0
    assert obj["pattern_predicted"]
    assert "elapsed_ms" not in obj
    obj = rep.to_json(include_timing=True)
    assert "elapsed_ms" in obj


def test_backend_parallelism_same_verdicts_n3():
    # the two families are isomorphic algebras: verdicts must agree
    # pair for pair, and any split would be a first-class finding
    r_aw, _ = scan(3, AW)
    r_bi, _ = scan(3, BI)
    split = [(a.A, a.B) for a, b in zip(r_aw, r_bi)
             if (a.holds_star, a.holds_comm) != (b.holds_star, b.holds_comm)]
    assert split == []


def test_scan_parallel_workers_match_serial():
    serial, s1 = scan(3, AW, workers=1)
    parallel, s2 = scan(3, AW, workers=2)
    assert [(r.A, r.B, r.holds_star, r.holds_comm, r.pattern_predicted)
            for r in serial] == \
           [(r.A, r.B, r.holds_star, r.holds_comm, r.pattern_predicted)
            for r in parallel]
    assert s1["star_holds"] == s2["star_holds"]
