"""Construction of the generator attached to an arbitrary index set, by the
right, left, mixed and derived-order extension processes.

A plan is explicit data: the ordered list of morphism applications
(coproduct or coaction, with the target leg at application time).  Building
executes a plan starting from the backend Casimir, keeping the edge legs as
coideal words for as long as coactions may still hit them, then normalizes
and pads with identity legs.

Equality of the elements produced by different plans for the same set is a
theorem (and a first-class test here), not an assumption.
"""

from __future__ import annotations

import re
import threading
from dataclasses import dataclass

from .pbw import AlgElem, Backend, CoactionError, EdgeElem
from .qcoeff import RatQ


@dataclass(frozen=True)
class IndexSet:
    """Subset of [1;n], kept sorted, with its ambient arity."""

    n: int
    elements: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("arity must be positive")
        elems = tuple(sorted(set(self.elements)))
        object.__setattr__(self, "elements", elems)
        if elems and not (1 <= elems[0] and elems[-1] <= self.n):
            raise ValueError(f"elements {elems} out of range [1;{self.n}]")

    @staticmethod
    def parse(expr: str, n: int) -> "IndexSet":
        """Parse comma/range syntax like "1,3-5,8"."""
        elems = []
        expr = expr.strip()
        if expr:
            for chunk in expr.split(","):
                chunk = chunk.strip()
                m = re.fullmatch(r"(\d+)-(\d+)", chunk)
                if m:
                    a, b = int(m.group(1)), int(m.group(2))
                    if a > b:
                        raise ValueError(f"bad range {chunk!r}")
                    elems.extend(range(a, b + 1))
                elif re.fullmatch(r"\d+", chunk):
                    elems.append(int(chunk))
                else:
                    raise ValueError(f"cannot parse set chunk {chunk!r}")
        return IndexSet(n, tuple(elems))

    def intervals(self):
        """Decomposition into maximal discrete intervals [i;j].  Adjacent
        input intervals are merged by construction since elements is a set."""
        out = []
        for a in self.elements:
            if out and a == out[-1][1] + 1:
                out[-1] = (out[-1][0], a)
            else:
                out.append((a, a))
        return tuple(out)

    def prec(self, other: "IndexSet") -> bool:
        """max(self) < min(other), or either set is empty."""
        if not self.elements or not other.elements:
            return True
        return self.elements[-1] < other.elements[0]

    def __str__(self):
        return "{" + ",".join(map(str, self.elements)) + "}"


def prec_chain(*sets) -> bool:
    """True when every pair of nonempty sets, in order, is separated."""
    nonempty = [s for s in sets if s]
    return all(max(a) < min(b) for a, b in zip(nonempty, nonempty[1:]))


# ---------------------------------------------------------------------------
# plans
# ---------------------------------------------------------------------------

DELTA, TAU_R, TAU_L = "Delta", "TauR", "TauL"


@dataclass(frozen=True)
class MorphismPlan:
    """Ordered steps (kind, position), with positions counted at application
    time on the core element (leg 1 = min(A)).  Coactions only ever target
    the current outermost leg on their side; enforced at construction."""

    steps: tuple

    def __post_init__(self):
        arity = 1
        for kind, pos in self.steps:
            if kind == TAU_R and pos != arity:
                raise ValueError("right coaction must target the rightmost leg")
            if kind == TAU_L and pos != 1:
                raise ValueError("left coaction must target the leftmost leg")
            if kind == DELTA and not 1 <= pos <= arity:
                raise ValueError(f"coproduct position {pos} out of range")
            arity += 1

    def final_arity(self):
        return 1 + len(self.steps)

    def render(self) -> str:
        """Composition notation, rightmost factor applied first."""
        bits = []
        arity = 1
        for kind, pos in self.steps:
            sym = {DELTA: "Delta", TAU_R: "tauR", TAU_L: "tauL"}[kind]
            left, right = pos - 1, arity - pos
            s = sym
            if left:
                s = f"1^{left} (x) {s}" if left > 1 else f"1 (x) {s}"
            if right:
                s = f"{s} (x) 1^{right}" if right > 1 else f"{s} (x) 1"
            bits.append(f"({s})")
            arity += 1
        return " ".join(reversed(bits)) if bits else "(id)"


def _core(A: IndexSet):
    if not A.elements:
        raise ValueError("extension plans need a nonempty set")
    base = A.elements[0]
    return tuple(a - base + 1 for a in A.elements)


def plan_right(A: IndexSet) -> MorphismPlan:
    """Ascending pass: each element after the minimum contributes a
    coproduct; right coactions open the gap before it."""
    a = _core(A)
    steps = []
    for i in range(1, len(a)):
        steps.append((DELTA, a[i - 1]))
        for ell in range(a[i - 1], a[i] - 1):
            steps.append((TAU_R, ell + 1))
    return MorphismPlan(tuple(steps))


def plan_left(A: IndexSet) -> MorphismPlan:
    """Descending pass: coproducts at the leftmost leg, left coactions open
    the gaps."""
    a = _core(A)
    m = len(a)
    steps = []
    for i in range(m - 2, -1, -1):
        steps.append((DELTA, 1))
        for _ in range(a[i] + 1, a[i + 1]):
            steps.append((TAU_L, 1))
    return MorphismPlan(tuple(steps))


def plan_mixed(A: IndexSet, j: int) -> MorphismPlan:
    """Split at the j-th element (1-based): right process above the split,
    then left process below it.  j=1 is the right process, j=|A| the left."""
    a = _core(A)
    m = len(a)
    if not 1 <= j <= m:
        raise ValueError(f"split index {j} out of range 1..{m}")
    aj = a[j - 1]
    steps = []
    for i in range(j, m):
        steps.append((DELTA, a[i - 1] - aj + 1))
        for ell in range(a[i - 1] - aj + 1, a[i] - aj):
            steps.append((TAU_R, ell + 1))
    for i in range(j - 2, -1, -1):
        steps.append((DELTA, 1))
        for _ in range(a[i] + 1, a[i + 1]):
            steps.append((TAU_L, 1))
    return MorphismPlan(tuple(steps))


def plan_derived(A: IndexSet) -> MorphismPlan:
    """Hole-first order: build the alternating set {1,3,...,2k-1} (one leg
    per interval, one hole between each), then enlarge all holes and
    intervals with a fixed schedule of coproducts."""
    a = _core(A)
    ivs = IndexSet(a[-1], a).intervals()
    k = len(ivs)
    i_vec = [iv[0] for iv in ivs]
    j_vec = [iv[1] for iv in ivs]
    jk = j_vec[-1]
    base = IndexSet(2 * k - 1, tuple(range(1, 2 * k, 2)))
    steps = list(plan_right(base).steps)
    for nn in range(2 * k - 2, -1, -1):
        if nn % 2 == 0:
            m = nn // 2 + 1
            alpha = jk - j_vec[m - 1]
            beta = jk - i_vec[m - 1] - 1
        else:
            m = (nn + 3) // 2
            alpha = jk - i_vec[m - 1] + 1
            beta = jk - j_vec[m - 2] - 2
        for _ in range(alpha, beta + 1):
            steps.append((DELTA, nn + 1))
    return MorphismPlan(tuple(steps))


def make_plan(A: IndexSet, process: str) -> MorphismPlan:
    if process == "right":
        return plan_right(A)
    if process == "left":
        return plan_left(A)
    if process == "derived":
        return plan_derived(A)
    m = re.fullmatch(r"mixed:(\d+)", process)
    if m:
        return plan_mixed(A, int(m.group(1)))
    raise ValueError(f"unknown process {process!r}")


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

def _execute(backend: Backend, plan: MorphismPlan) -> AlgElem:
    """Run a plan on the backend Casimir.  Edge coactions act on word legs;
    once a coproduct hits an interior leg the element is normalized for
    good and only further coproducts are allowed."""
    state = None
    alg = None
    for kind, pos in plan.steps:
        if alg is None and state is None:
            if kind != DELTA or pos != 1:
                raise CoactionError("a construction must start with the coproduct")
            state = EdgeElem.casimir_delta(backend)
            continue
        if alg is None:
            if kind == TAU_R:
                state = state.tau_r()
            elif kind == TAU_L:
                state = state.tau_l()
            elif pos == state.arity:
                state = state.delta_r()
            elif pos == 1:
                state = state.delta_l()
            else:
                alg = state.finalize()
                state = None
                alg = alg.coproduct(pos)
        else:
            if kind != DELTA:
                raise CoactionError("coaction requested on a normalized leg")
            alg = alg.coproduct(pos)
    if alg is not None:
        return alg
    if state is not None:
        return state.finalize()
    return AlgElem.casimir(backend)


def build(A: IndexSet, backend: Backend, plan: MorphismPlan | None = None) -> AlgElem:
    """The generator for A inside the n-fold tensor power."""
    if not A.elements:
        return empty_generator(backend, A.n)
    if plan is None:
        plan = plan_right(A)
    core = _execute(backend, plan)
    lo, hi = A.elements[0], A.elements[-1]
    if core.arity != hi - lo + 1:
        raise ValueError("plan arity does not match the set span")
    return core.pad(lo - 1, A.n - hi)


def empty_generator(backend: Backend, n: int) -> AlgElem:
    """The scalar assigned to the empty set, times the identity."""
    return AlgElem.scalar(backend, n, backend.casimir_counit)


# ---------------------------------------------------------------------------
# generator cache
# ---------------------------------------------------------------------------

_CACHE: dict = {}
_CACHE_LOCK = threading.Lock()


def generator(backend: Backend, n: int, elements) -> AlgElem:
    """Cached right-process generator for the given subset of [1;n]."""
    key = (backend.name, n, tuple(sorted(set(elements))))
    g = _CACHE.get(key)
    if g is None:
        g = build(IndexSet(n, key[2]), backend)
        with _CACHE_LOCK:
            _CACHE.setdefault(key, g)
    return g


def clear_cache():
    with _CACHE_LOCK:
        _CACHE.clear()


# ---------------------------------------------------------------------------
# the empty-set scalar, derived rather than assumed
# ---------------------------------------------------------------------------

def derive_empty_scalar(backend: Backend) -> RatQ:
    """Unique scalar c for which the standard relation holds for the
    disjoint pair A={1}, B={2} at n=2, solved linearly in the engine.

    The relation with A cap B empty reads
        bracket(G_A, G_B) = w * G_{AB} + s * (c * G_{AB} + G_A G_B),
    so c = (bracket - w * G_AB - s * G_A G_B) / (s * G_AB).
    """
    from .relations import relation_scalars

    w, s, plus, minus = relation_scalars(backend)
    g1 = generator(backend, 2, (1,))
    g2 = generator(backend, 2, (2,))
    g12 = generator(backend, 2, (1, 2))
    num = ((g1 * g2).scale(plus) + (g2 * g1).scale(minus)
           - g12.scale(w) - (g1 * g2).scale(s))
    den = g12.scale(s)
    key = next(iter(den.terms))
    c = num.terms.get(key)
    if c is None:
        raise ValueError("no consistent scalar exists")
    c = c / den.terms[key]
    if num != den.scale(c):
        raise ValueError("no consistent scalar exists")
    return c
