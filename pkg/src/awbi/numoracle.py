"""Independent numeric cross-validation: evaluate symbolic identities in
finite-dimensional representations at exact rational parameter values.

Everything is exact Fraction arithmetic; equality checks are decisive, no
tolerances.  This module deliberately shares nothing with the symbolic
normal-form path except the element data structure, so agreement between
the two is a genuine audit of the straightening engine.

Only the U_q(sl2) backend has representations here; conventions for the
super side vary and the symbolic checks remain the ground truth there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .pbw import AlgElem


@dataclass(frozen=True)
class RepSpec:
    """Per-leg module dimensions and the exact evaluation point.

    v_value is the value of v = q^(1/2); the evaluation uses q = v_value^2,
    which keeps every integer power of q rational.
    """

    dims: tuple
    v_value: Fraction

    def __post_init__(self):
        if any(d < 1 for d in self.dims):
            raise ValueError("dimensions must be >= 1")
        q = self.v_value ** 2
        if q in (0, 1, -1):
            raise ValueError("evaluation point must have q outside {0, 1, -1}")


# -- tiny exact matrix helpers -------------------------------------------------

def mat_identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_mul(a, b):
    n, m, p = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(m)) for j in range(p))
        for i in range(n)
    )


def mat_add(a, b, ca=1, cb=1):
    return tuple(
        tuple(ca * x + cb * y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_scale(a, c):
    return tuple(tuple(c * x for x in row) for row in a)


def mat_kron(a, b):
    nb = len(b)
    return tuple(
        tuple(a[i // nb][j // nb] * b[i % nb][j % nb]
              for j in range(len(a[0]) * len(b[0])))
        for i in range(len(a) * nb)
    )


def mat_is_zero(a):
    return all(all(x == 0 for x in row) for row in a)


# -- representations ------------------------------------------------------------

def rep_matrices(dim: int, q: Fraction):
    """The dim-dimensional weight module: K diagonal with weights
    q^(dim-1-2j), F the shift down the weight ladder, E the shift up with
    the q-integer products that make the defining relations exact."""
    if q in (0, 1, -1):
        raise ValueError("degenerate q value")
    d = dim - 1
    K = tuple(tuple(q ** (d - 2 * j) if i == j else Fraction(0)
                    for j in range(dim)) for i in range(dim))
    Ki = tuple(tuple(q ** (2 * j - d) if i == j else Fraction(0)
                     for j in range(dim)) for i in range(dim))

    def qint(m):
        return (q ** m - q ** (-m)) / (q - q ** -1)

    F = tuple(tuple(Fraction(1) if i == j + 1 else Fraction(0)
                    for j in range(dim)) for i in range(dim))
    E = tuple(tuple(qint(j) * qint(d - j + 1) if i == j - 1 else Fraction(0)
                    for j in range(dim)) for i in range(dim))
    return {"E": E, "F": F, "K": K, "Ki": Ki}


class _LegCache:
    """Monomial matrices F^f K^k E^e per leg, with cached powers."""

    def __init__(self, dim, q):
        self.dim = dim
        self.gens = rep_matrices(dim, q)
        self._pow = {}
        self._mono = {}

    def power(self, name, p):
        key = (name, p)
        m = self._pow.get(key)
        if m is None:
            if p == 0:
                m = mat_identity(self.dim)
            else:
                m = mat_mul(self.power(name, p - 1), self.gens[name])
            self._pow[key] = m
        return m

    def mono(self, fke):
        m = self._mono.get(fke)
        if m is None:
            f, k, e = fke
            m = self.power("F", f)
            m = mat_mul(m, self.power("K", k) if k >= 0 else self.power("Ki", -k))
            m = mat_mul(m, self.power("E", e))
            self._mono[fke] = m
        return m


def evaluate(x: AlgElem, spec: RepSpec):
    """Evaluate a symbolic element to an exact rational matrix: each tensor
    monomial becomes a Kronecker product of per-leg monomial matrices."""
    if x.backend.name != "aw":
        raise ValueError("numeric evaluation is only defined for the aw backend")
    if x.arity != len(spec.dims):
        raise ValueError(f"arity {x.arity} does not match dims {spec.dims}")
    q = spec.v_value ** 2
    legs = [_LegCache(d, q) for d in spec.dims]
    size = 1
    for d in spec.dims:
        size *= d
    acc = [[Fraction(0)] * size for _ in range(size)]
    unpack = x.backend.unpack
    for key, coeff in x.terms.items():
        m = legs[0].mono(unpack(key[0]))
        for i in range(1, len(key)):
            m = mat_kron(m, legs[i].mono(unpack(key[i])))
        c = coeff.evaluate(spec.v_value)
        for i in range(size):
            row, mrow = acc[i], m[i]
            for j in range(size):
                if mrow[j]:
                    row[j] += c * mrow[j]
    return tuple(tuple(row) for row in acc)


def crosscheck(lhs: AlgElem, rhs: AlgElem, spec: RepSpec) -> bool:
    """Exact matrix equality of the two sides under the representation."""
    return evaluate(lhs, spec) == evaluate(rhs, spec)


DEFAULT_POINTS = (Fraction(3, 2), Fraction(5, 7))


def crosscheck_points(lhs: AlgElem, rhs: AlgElem, dims,
                      points=DEFAULT_POINTS) -> bool:
    """Cross-check at several evaluation points; a second point guards
    against accidental vanishing at the first."""
    return all(crosscheck(lhs, rhs, RepSpec(tuple(dims), r)) for r in points)
