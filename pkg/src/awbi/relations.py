"""Relation checking: the standard q-commutation relation and the plain
commutation relation between two set-indexed generators, the structural
pattern that predicts when the standard relation holds, curated regression
suites, and the exhaustive pair scanner.

A failing relation is informative, not an error: the report keeps the
residual (left minus right side in normal form) for inspection.
"""

from __future__ import annotations

import itertools
import threading
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .pbw import AlgElem, Backend, bracket_q
from .qcoeff import ONE, RatQ, lp, vpow
from . import extension
from .extension import generator, prec_chain


def get_backend(name: str) -> Backend:
    if name == "aw":
        from .uq_engine import AW
        return AW
    if name == "bi":
        from .osp_engine import BI
        return BI
    raise ValueError(f"unknown backend {name!r}")


def relation_scalars(backend):
    """Scalars (w, s, plus, minus) of the standard relation
        plus*G_A*G_B + minus*G_B*G_A = w*G_sym + s*(G_int*G_uni + G_AmB*G_BmA),
    i.e. a q-commutator bracket on the first backend and a q-anticommutator
    on the second."""
    if backend.name == "aw":
        w = RatQ.from_poly(lp((-4, 1), (4, -1)))          # q^-2 - q^2
        s = RatQ.from_poly(lp((2, 1), (-2, -1)))          # q - q^-1
        plus, minus = vpow(2), -vpow(-2)
    else:
        w = ONE
        s = RatQ.from_poly(lp((1, 1), (-1, 1)))           # q^(1/2) + q^(-1/2)
        plus, minus = vpow(1), vpow(-1)
    return w, s, plus, minus


# -- cached generator products (reused heavily across suites) -----------------

_PROD_CACHE: dict = {}
_PROD_LOCK = threading.Lock()


def _prod(backend, n, ea, eb) -> AlgElem:
    key = (backend.name, n, tuple(sorted(set(ea))), tuple(sorted(set(eb))))
    p = _PROD_CACHE.get(key)
    if p is None:
        p = generator(backend, n, ea) * generator(backend, n, eb)
        with _PROD_LOCK:
            _PROD_CACHE.setdefault(key, p)
    return p


def clear_caches():
    with _PROD_LOCK:
        _PROD_CACHE.clear()
    extension.clear_cache()


# -- reports -------------------------------------------------------------------

@dataclass
class RelationReport:
    """Verdict for one ordered pair of index sets."""

    A: tuple
    B: tuple
    n: int
    backend: str
    holds_star: bool | None = None
    holds_comm: bool | None = None
    residual_star: AlgElem | None = None
    residual_comm: AlgElem | None = None
    pattern_predicted: bool | None = None
    witness: tuple | None = None
    elapsed: float = 0.0
    label: str = ""

    def to_json(self, include_residual=True, include_timing=False):
        obj = {
            "A": list(self.A),
            "B": list(self.B),
            "n": self.n,
            "backend": self.backend,
        }
        if self.label:
            obj["label"] = self.label
        if self.holds_star is not None:
            obj["holds_star"] = self.holds_star
            obj["residual_star_terms"] = (
                0 if self.residual_star is None else self.residual_star.term_count())
            if include_residual and self.residual_star is not None and not self.holds_star:
                obj["residual_star"] = self.residual_star.to_json()
        if self.holds_comm is not None:
            obj["holds_comm"] = self.holds_comm
            obj["residual_comm_terms"] = (
                0 if self.residual_comm is None else self.residual_comm.term_count())
            if include_residual and self.residual_comm is not None and not self.holds_comm:
                obj["residual_comm"] = self.residual_comm.to_json()
        if self.pattern_predicted is not None:
            obj["pattern_predicted"] = self.pattern_predicted
            if self.witness is not None:
                obj["witness"] = {"form": self.witness[0],
                                  "parts": [list(p) for p in self.witness[1]]}
        if include_timing:
            obj["elapsed_ms"] = round(self.elapsed * 1000.0, 3)
        return obj


def _setops(A, B):
    sa, sb = set(A), set(B)
    return (tuple(sorted(sa & sb)), tuple(sorted(sa | sb)),
            tuple(sorted(sa ^ sb)), tuple(sorted(sa - sb)), tuple(sorted(sb - sa)))


def star_sides(A, B, n, backend):
    """Left and right sides of the standard relation for the ordered pair.
    All generator products go through the shared cache, so the commutation
    check of the same pair reuses them."""
    w, s, plus, minus = relation_scalars(backend)
    inter, union, sym, amb, bma = _setops(A, B)
    lhs = (_prod(backend, n, A, B).scale(plus)
           + _prod(backend, n, B, A).scale(minus))
    rhs = (generator(backend, n, sym).scale(w)
           + (_prod(backend, n, inter, union) + _prod(backend, n, amb, bma)).scale(s))
    return lhs, rhs


def check_star(A, B, n, backend) -> RelationReport:
    """Does the standard relation hold for (A, B)?  The holds flag is
    recomputed from the residual normal form, never short-circuited."""
    A = tuple(sorted(set(A)))
    B = tuple(sorted(set(B)))
    t0 = time.perf_counter()
    lhs, rhs = star_sides(A, B, n, backend)
    residual = lhs - rhs
    return RelationReport(A, B, n, backend.name,
                          holds_star=residual.is_zero(), residual_star=residual,
                          elapsed=time.perf_counter() - t0)


def check_comm(A, B, n, backend) -> RelationReport:
    A = tuple(sorted(set(A)))
    B = tuple(sorted(set(B)))
    t0 = time.perf_counter()
    residual = _prod(backend, n, A, B) - _prod(backend, n, B, A)
    return RelationReport(A, B, n, backend.name,
                          holds_comm=residual.is_zero(), residual_comm=residual,
                          elapsed=time.perf_counter() - t0)


# -- the structural pattern ------------------------------------------------------

def _splits(rest):
    """All prefix/suffix splits of a sorted tuple."""
    for c in range(len(rest) + 1):
        yield rest[:c], rest[c:]


def predict_pattern(A, B):
    """Decide whether (A, B) arises from an ordered quadruple
    A1 < A2 < A3 < A4 of separated (possibly empty) sets via one of the
    three admissible forms; returns (bool, witness or None).

    Form 1: A = A1|A2|A4, B = A2|A3;
    Form 2: A = A2|A3,    B = A1|A3|A4;
    Form 3: A = A1|A3|A4, B = A1|A2|A4.
    In each form the constituents are forced by intersections and
    differences, up to the prefix/suffix split of the leftover set.
    """
    A = tuple(sorted(set(A)))
    B = tuple(sorted(set(B)))
    inter, _, _, amb, bma = _setops(A, B)

    for a1, a4 in _splits(amb):                     # form 1
        if prec_chain(a1, inter, bma, a4):
            return True, (1, (a1, inter, bma, a4))
    for a1, a4 in _splits(bma):                     # form 2
        if prec_chain(a1, amb, inter, a4):
            return True, (2, (a1, amb, inter, a4))
    for a1, a4 in _splits(inter):                   # form 3
        if prec_chain(a1, bma, amb, a4):
            return True, (3, (a1, bma, amb, a4))
    return False, None


# -- suites ------------------------------------------------------------------------

def subsets(n):
    items = range(1, n + 1)
    for r in range(n + 1):
        yield from itertools.combinations(items, r)


def suite_commute(n, backend, extra_pairs=()):
    """Containment commutation: every ordered pair B <= A <= [1;n], plus any
    curated extras given as (A, B, n) triples."""
    reports = []
    for A in subsets(n):
        for r in range(len(A) + 1):
            for B in itertools.combinations(A, r):
                rep = check_comm(A, B, n, backend)
                rep.label = "containment"
                reports.append(rep)
    for (A, B, nn) in extra_pairs:
        rep = check_comm(A, B, nn, backend)
        rep.label = "containment-curated"
        reports.append(rep)
    return reports


def quadruples(n):
    """All ordered quadruples of separated (possibly empty) subsets of [1;n]:
    a subset of [1;n] cut into four consecutive blocks."""
    for S in subsets(n):
        for c1 in range(len(S) + 1):
            for c2 in range(c1, len(S) + 1):
                for c3 in range(c2, len(S) + 1):
                    yield S[:c1], S[c1:c2], S[c2:c3], S[c3:]


def theorem_pairs(n):
    """Deduplicated (A, B) pairs generated by the three admissible forms."""
    seen = {}
    for a1, a2, a3, a4 in quadruples(n):
        forms = (
            (tuple(sorted(a1 + a2 + a4)), tuple(sorted(a2 + a3))),
            (tuple(sorted(a2 + a3)), tuple(sorted(a1 + a3 + a4))),
            (tuple(sorted(a1 + a3 + a4)), tuple(sorted(a1 + a2 + a4))),
        )
        for i, pair in enumerate(forms):
            seen.setdefault(pair, (i + 1, (a1, a2, a3, a4)))
    return seen


def suite_theorem_B(n, backend):
    """The standard relation on every pair produced by the admissible
    quadruple forms inside [1;n]."""
    reports = []
    for (A, B), (form, quad) in sorted(theorem_pairs(n).items()):
        rep = check_star(A, B, n, backend)
        rep.label = f"quadruple-form-{form}"
        rep.witness = (form, quad)
        reports.append(rep)
    return reports


def fundamental_families(arity_limit=7):
    """The nine two-parameter families of fundamental pairs, instantiated
    for every (k, l) whose ambient arity stays within the limit."""
    out = []

    def evens(k):
        return tuple(range(2, 2 * k + 1, 2))

    for k in range(1, arity_limit // 2 + 1):
        n = 2 * k + 1
        if n > arity_limit:
            continue
        out.append(("C1", k, None, (1, 2) + evens(k)[1:], evens(k) + (2 * k + 1,), n))
        out.append(("C2", k, None, evens(k) + (2 * k + 1,), (1, 2 * k + 1), n))
        out.append(("C3", k, None, (1, 2 * k + 1), (1, 2) + evens(k)[1:], n))
    for k in range(1, arity_limit):
        for ell in range(0, arity_limit):
            mid = tuple(range(2 * k + 1, 2 * k + 2 * ell + 2, 2))
            mid_g = tuple(range(2 * k + 2, 2 * k + 2 * ell + 3, 2))
            n0 = 2 * k + 2 * ell + 2
            n1 = 2 * k + 2 * ell + 3
            if n0 <= arity_limit:
                out.append(("C4", k, ell,
                            (1, 2) + evens(k)[1:] + (2 * k + 2 * ell + 2,),
                            evens(k) + mid, n0))
                out.append(("C5", k, ell,
                            evens(k) + mid,
                            (1,) + mid + (2 * k + 2 * ell + 2,), n0))
                out.append(("C6", k, ell,
                            (1,) + mid + (2 * k + 2 * ell + 2,),
                            (1, 2) + evens(k)[1:] + (2 * k + 2 * ell + 2,), n0))
            if n1 <= arity_limit:
                out.append(("C4'", k, ell,
                            (1, 2) + evens(k)[1:] + (2 * k + 2 * ell + 3,),
                            evens(k) + mid_g, n1))
                out.append(("C5'", k, ell,
                            evens(k) + mid_g,
                            (1,) + mid_g + (2 * k + 2 * ell + 3,), n1))
                out.append(("C6'", k, ell,
                            (1,) + mid_g + (2 * k + 2 * ell + 3,),
                            (1, 2) + evens(k)[1:] + (2 * k + 2 * ell + 3,), n1))
    return out


def suite_fundamental(backend, arity_limit=7):
    reports = []
    for name, k, ell, A, B, n in fundamental_families(arity_limit):
        rep = check_star(A, B, n, backend)
        rep.label = f"{name} k={k}" + ("" if ell is None else f" l={ell}")
        reports.append(rep)
    return reports


# the fifteen explicit two-interval commutation relations
EXPLICIT_COMM_PAIRS = (
    ((1, 3, 4), (1, 3)), ((1, 3, 4), (1, 4)), ((1, 3, 4, 5), (1, 4)),
    ((1, 2, 4), (1, 4)), ((1, 2, 4, 5), (1, 4)), ((1, 2, 4, 5), (1, 5)),
    ((1, 2, 4, 5, 6), (1, 5)), ((1, 2, 4), (2, 4)), ((1, 2, 4, 5), (2, 4)),
    ((1, 2, 4, 5), (2, 5)), ((1, 2, 4, 5, 6), (2, 5)), ((1, 2, 3, 5), (2, 5)),
    ((1, 2, 3, 5, 6), (2, 5)), ((1, 2, 3, 5, 6), (2, 6)),
    ((1, 2, 3, 5, 6, 7), (2, 6)),
)


def named_commutation_cases(k_even=3, k_odd=2):
    """Curated commutation regressions: the fifteen explicit two-interval
    pairs, the even-set versus bracket pairs, and the interval families."""
    cases = []
    for A, B in EXPLICIT_COMM_PAIRS:
        cases.append(("explicit-list", A, B, max(A)))
    for k in range(1, k_even + 1):
        evens = tuple(range(2, 2 * k + 1, 2))
        cases.append((f"evens-vs-bracket k={k}", evens, (1, 2 * k + 1), 2 * k + 1))
    for k in range(1, k_odd + 1):
        full = tuple(range(1, 2 * k + 2))
        cases.append((f"bracket-vs-filled k={k}",
                      (1, 2 * k + 1), (1, 2) + tuple(range(4, 2 * k + 1, 2)) + (2 * k + 1,),
                      2 * k + 1))
        odds = tuple(range(1, 2 * k, 2))
        evens = tuple(range(2, 2 * k + 1, 2))
        cases.append((f"odds-vs-interval k={k}", odds, tuple(range(1, 2 * k + 1)), 2 * k))
        cases.append((f"odds-vs-interval-short k={k}", odds, tuple(range(1, 2 * k)), 2 * k - 1 if k > 1 else 1))
        cases.append((f"evens-vs-interval k={k}", evens, tuple(range(1, 2 * k + 1)), 2 * k))
        cases.append((f"evens-vs-interval-long k={k}", evens, full, 2 * k + 1))
        cases.append((f"evens-vs-filled k={k}", evens,
                      (1, 2) + tuple(range(4, 2 * k + 1, 2)) + (2 * k + 1,), 2 * k + 1))
        cases.append((f"pair-vs-filled k={k}", (1, 2 * k),
                      (1, 2) + tuple(range(4, 2 * k + 1, 2)), 2 * k))
        cases.append((f"pair-vs-odds k={k}", (1, 2 * k),
                      tuple(range(1, 2 * k, 2)) + (2 * k,), 2 * k))
    return cases


def named_star_cases():
    """Curated standard-relation regressions: separated triple couples."""
    cases = []
    triples = (((1,), 2, (3,)), ((1,), 3, (5,)), ((1, 2), 3, (4, 5)))
    for a1, i, a2 in triples:
        n = max(a2) if a2 else i
        mid = (i,)
        cases.append((f"couple-left {a1}|{i}|{a2}",
                      tuple(sorted(a1 + mid)), tuple(sorted(mid + a2)), n))
        cases.append((f"couple-mid {a1}|{i}|{a2}",
                      tuple(sorted(mid + a2)), tuple(sorted(a1 + a2)), n))
        cases.append((f"couple-right {a1}|{i}|{a2}",
                      tuple(sorted(a1 + a2)), tuple(sorted(a1 + mid)), n))
    return cases


def suite_named_lemmas(backend):
    """Fixed regression list of commutation and standard-relation
    statements at small parameters."""
    reports = []
    for label, A, B, n in named_commutation_cases():
        rep = check_comm(A, B, n, backend)
        rep.label = label
        reports.append(rep)
    for label, A, B, n in named_star_cases():
        rep = check_star(A, B, n, backend)
        rep.label = label
        reports.append(rep)
    return reports


# -- nested q-commutator identities -------------------------------------------------

def q_identities_regression(backend):
    """The four nested-bracket exchange identities, instantiated with
    generators that satisfy the commutation hypotheses:
        [a,[c,d]_q]_q = [[a,c]_q,d]_q    when [a,d] = 0,
        [a,[c,d]_q]_q = [c,[a,d]_q]_q    when [a,c] = 0,
        [[c,d]_q,b]_q = [[c,b]_q,d]_q    when [b,d] = 0,
        [[c,d]_q,b]_q = [c,[d,b]_q]_q    when [b,c] = 0.
    """
    qq = vpow(2) if backend.name == "aw" else vpow(1)
    qi = vpow(-2) if backend.name == "aw" else vpow(-1)

    def br(x, y):
        return bracket_q(x, y, qq, -qi)

    def comm(x, y):
        return bracket_q(x, y, ONE, -ONE)

    n = 3
    g = lambda *elems: generator(backend, n, elems)
    one = AlgElem.one(backend, n)
    c, d = g(1, 2), g(2, 3)
    out = []
    for label, a, hypot, lhs_fn, rhs_fn in (
        ("exchange-1", g(1), lambda a: comm(a, d),
         lambda a: br(a, br(c, d)), lambda a: br(br(a, c), d)),
        ("exchange-2", g(3), lambda a: comm(a, c),
         lambda a: br(a, br(c, d)), lambda a: br(c, br(a, d))),
        ("exchange-3", g(1), lambda b: comm(b, d),
         lambda b: br(br(c, d), b), lambda b: br(br(c, b), d)),
        ("exchange-4", g(3), lambda b: comm(b, c),
         lambda b: br(br(c, d), b), lambda b: br(c, br(d, b))),
    ):
        for x, tag in ((a, ""), (one, " scalar")):
            rep = RelationReport(tuple(), tuple(), n, backend.name, label=label + tag)
            hyp = hypot(x)
            res = lhs_fn(x) - rhs_fn(x)
            rep.holds_comm = hyp.is_zero() and res.is_zero()
            rep.residual_comm = res if not res.is_zero() else hyp
            out.append(rep)
    return out


# -- the exhaustive pair scanner ------------------------------------------------------

def _scan_pair(backend, n, A, B) -> RelationReport:
    t0 = time.perf_counter()
    rep = check_star(A, B, n, backend)
    comm = check_comm(A, B, n, backend)
    rep.holds_comm = comm.holds_comm
    rep.residual_comm = comm.residual_comm
    rep.pattern_predicted, rep.witness = predict_pattern(A, B)
    rep.elapsed = time.perf_counter() - t0
    return rep


def _scan_chunk(args):
    backend_name, n, pairs = args
    backend = get_backend(backend_name)
    out = []
    for A, B in pairs:
        rep = _scan_pair(backend, n, A, B)
        rep.residual_star = None
        rep.residual_comm = None
        out.append(rep)
    return out


def scan(n, backend, workers=1, progress=None):
    """Classify every ordered pair of subsets of [1;n]: does the standard
    relation hold, does the commutator vanish, and does the structural
    pattern predict the former.  Returns (reports, summary)."""
    t0 = time.perf_counter()
    pairs = [(A, B) for A in subsets(n) for B in subsets(n)]
    reports = []
    if workers > 1:
        chunks = [pairs[i::workers] for i in range(workers)]
        order = {}
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_scan_chunk, [(backend.name, n, c) for c in chunks]):
                for rep in part:
                    order[(rep.A, rep.B)] = rep
        reports = [order[p] for p in pairs]
    else:
        for A, B in pairs:
            rep = _scan_pair(backend, n, A, B)
            reports.append(rep)
            if progress is not None:
                progress(rep)
    disagreements = [r for r in reports if r.holds_star != r.pattern_predicted]
    containment_failures = [
        r for r in reports
        if set(r.B) <= set(r.A) and not r.holds_comm
    ]
    summary = {
        "n": n,
        "backend": backend.name,
        "pairs": len(reports),
        "star_holds": sum(r.holds_star for r in reports),
        "comm_holds": sum(r.holds_comm for r in reports),
        "pattern_predicted": sum(r.pattern_predicted for r in reports),
        "pattern_disagreements": [
            {"A": list(r.A), "B": list(r.B),
             "holds_star": r.holds_star, "pattern_predicted": r.pattern_predicted,
             "containment_degenerate": bool(
                 r.holds_star and (set(r.B) <= set(r.A) or set(r.A) <= set(r.B)))}
            for r in disagreements
        ],
        "containment_comm_failures": [
            {"A": list(r.A), "B": list(r.B)} for r in containment_failures
        ],
        "elapsed_s": round(time.perf_counter() - t0, 3),
    }
    return reports, summary
