"""Rank-level duality: rectangle flip, weight transpose, matrix transpose."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .partitions import Abacus, AbacusRow, core_from_column, beta_set, residue_counts
from .weights import CylindricalWeight, sum_fundamental


class RowCountMismatch(ValueError):
    pass


class NotDominant(ValueError):
    pass


def flip(a: Abacus, e: int, ell: Optional[int] = None) -> Abacus:
    """Cut the plane into l x e rectangles [ke, (k+1)e) x rows and transpose each.

    Bead (ke + c, row r) goes to (k*l + r - 1, row c + 1); the result has e
    rows and is an abacus of period l, so flip(flip(a, e), l) == a.
    """
    ell = a.level if ell is None else ell
    if a.level != ell:
        raise RowCountMismatch("abacus has %d rows, expected %d" % (a.level, ell))
    if e < 1 or ell < 1:
        raise ValueError("e and l must be positive")
    lo, hi = a.window()
    k_lo = lo // e
    k_hi = -(-hi // e)
    beads = [set() for _ in range(e)]
    for r in range(1, ell + 1):
        row = a.rows[r - 1]
        for x in range(k_lo * e, k_hi * e):
            if row.occupied(x):
                k, c = divmod(x, e)
                beads[c].add(k * ell + r - 1)
    floor = k_lo * ell
    return Abacus(tuple(AbacusRow.from_beads(b, floor) for b in beads))


# ---------------------------------------------------------------------------
# weights

def _energy(x: int, p: int) -> Fraction:
    """Quadratic energy of a single charge x for period p."""
    r = x % p
    return Fraction(x * x + r * (p - r), 2 * p)


def balanced(n: int, k: int) -> tuple:
    """The dominant k-tuple of total n whose entries differ by at most one."""
    q, r = divmod(n, k)
    return (q + 1,) * r + (q,) * (k - r)


def _raw_transpose(e: int, ell: int, wt: CylindricalWeight) -> tuple:
    bound = max(abs(x) for x in wt.t) + ell
    s = []
    for k in range(1, ell + 1):
        m = e * (2 * bound // ell + 2)
        while wt.t_ext(m) < k:
            m -= 1
        s.append(m)
    return tuple(s)


def _odometer(e: int, ell: int, t: tuple) -> int:
    s = _raw_transpose(e, ell, CylindricalWeight(e, ell, t, 0))
    total = sum(_energy(x, ell) for x in t) + sum(_energy(x, e) for x in s)
    return math.floor(total / 2)


def odometer_correction(wt: CylindricalWeight) -> int:
    """Shift of the delta coordinate that makes the transpose reverse root order.

    Moving a box across the seam of the cylinder changes eta on one side and
    a different coordinate on the other, so phi = -eta alone is only right up
    to a t-dependent integer.  The correction is the floor of half the summed
    quadratic energies of t and its transpose, normalized to vanish on
    balanced tuples.
    """
    e, ell = wt.e, wt.level
    return _odometer(e, ell, wt.t) - _odometer(e, ell, balanced(sum(wt.t), e))


def transpose_weight(wt: CylindricalWeight, literal: bool = False) -> CylindricalWeight:
    """s_k = largest m with t(m) >= k for k = 1..l, and phi = -eta - correction.

    With literal=True the correction is dropped (phi = -eta exactly); that
    variant is an involution but does not reverse the root order.
    """
    if not wt.is_dominant():
        raise NotDominant("transpose needs a dominant weight, got %s" % (wt,))
    e, ell = wt.e, wt.level
    if ell < 1:
        raise ValueError("transpose needs positive level")
    s = _raw_transpose(e, ell, wt)
    phi = -wt.eta if literal else -wt.eta - odometer_correction(wt)
    return CylindricalWeight(ell, e, s, phi)


def weight_dual(nu: CylindricalWeight, w: int) -> CylindricalWeight:
    """Transpose followed by eta -> w - eta."""
    t = transpose_weight(nu)
    return t.shift_delta(w)


def strata_dual(label: tuple, w: int) -> tuple:
    """(nu, n) -> (nu^! + n delta, n)."""
    nu, n = label
    if not isinstance(n, int) or n < 0:
        raise ValueError("stratum depth must be a nonnegative integer")
    return weight_dual(nu, w).shift_delta(n), n


# ---------------------------------------------------------------------------
# charge matrices

@dataclass(frozen=True)
class ChargeMatrix:
    """An l x e integer matrix U together with the global constant w."""
    entries: tuple
    w: int = 0

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.entries)
        if not rows or not rows[0]:
            raise ValueError("charge matrix must be non-empty")
        if any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("charge matrix rows must have equal length")
        object.__setattr__(self, "entries", rows)

    @property
    def ell(self) -> int:
        return len(self.entries)

    @property
    def e(self) -> int:
        return len(self.entries[0])

    @property
    def s(self) -> tuple:
        return tuple(sum(r) for r in self.entries)

    @property
    def t(self) -> tuple:
        return tuple(sum(r[j] for r in self.entries) for j in range(self.e))

    def transpose(self) -> "ChargeMatrix":
        return ChargeMatrix(tuple(zip(*self.entries)), self.w)

    def cores(self) -> list:
        return [core_from_column(r, self.e) for r in self.entries]

    def abacus(self) -> Abacus:
        return Abacus(tuple(beta_set(c) for c in self.cores()))

    def residue_vector(self) -> tuple:
        """Residue counts of the boxes of all cores (index 0..e-1)."""
        v = [0] * self.e
        for c in self.cores():
            for i, x in enumerate(residue_counts(c.parts, c.charge, self.e)):
                v[i] += x
        return tuple(v)

    def to_json(self) -> dict:
        return {"U": [list(r) for r in self.entries], "w": self.w}


def matrix_dual(u: ChargeMatrix) -> ChargeMatrix:
    return u.transpose()


def weights_from_matrix(u: ChargeMatrix) -> tuple:
    """(lambda, mu): lambda = sum omega_{s_i}, mu = lambda - sum (w + boxes_i) alpha_i."""
    lam = sum_fundamental(u.e, u.s)
    v = [u.w + x for x in u.residue_vector()]
    return lam, lam.sub_roots(v)


@dataclass(frozen=True)
class DualPair:
    """Indexing data for a matrix U and its transpose."""
    matrix: ChargeMatrix

    def descriptor(self) -> dict:
        from .weightings import uglov
        lam, mu = weights_from_matrix(self.matrix)
        return {"lambda": lam, "mu": mu, "theta": uglov(self.matrix.s, self.matrix.e)}

    def dual(self) -> "DualPair":
        return DualPair(self.matrix.transpose())

    def dual_descriptor(self) -> dict:
        """(mu^!, lambda^!, -theta_{U^!}) read off the transposed matrix."""
        d = self.dual().descriptor()
        return {"lambda": d["mu"], "mu": d["lambda"], "theta": d["theta"].negate()}
