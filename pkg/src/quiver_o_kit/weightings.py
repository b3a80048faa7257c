"""Weightings of the affine type A quiver with framing, walls and the u_s map.

A weighting is a tuple theta = (theta_1, ..., theta_l) of rationals (the
weights of the new edges) and a rational kappa (the weight of every cycle
edge), together with the residues r_i mod e of the framed vertices.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .duality import ChargeMatrix, flip
from .partitions import (
    Abacus,
    EnumerationCapExceeded,
    Multipartition,
    RibbonSpec,
    beta_set,
    multipartitions_with_residues,
    removable_ribbons,
)
from .weights import CylindricalWeight, cartan_matrix, root_certificate, sum_fundamental


class OnWall(ValueError):
    pass


class TensorCase(ValueError):
    """kappa = 0: the weighting sits in the tensor-product regime."""


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Weighting:
    theta: tuple
    kappa: Fraction
    e: int
    residues: tuple

    def __post_init__(self):
        theta = tuple(_frac(x) for x in self.theta)
        residues = tuple(int(r) % self.e for r in self.residues)
        if len(theta) != len(residues):
            raise ValueError("need one residue per theta entry")
        if not theta:
            raise ValueError("empty weighting")
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "kappa", _frac(self.kappa))
        object.__setattr__(self, "residues", residues)

    @property
    def ell(self) -> int:
        return len(self.theta)

    def negate(self) -> "Weighting":
        return Weighting(tuple(-x for x in self.theta), -self.kappa, self.e, self.residues)

    def scale(self, c) -> "Weighting":
        c = _frac(c)
        return Weighting(tuple(c * x for x in self.theta), c * self.kappa, self.e, self.residues)

    def translate(self, c) -> "Weighting":
        c = _frac(c)
        return Weighting(tuple(x + c for x in self.theta), self.kappa, self.e, self.residues)

    def permute(self, perm: Sequence[int]) -> "Weighting":
        """New position k takes old position perm[k] (0-indexed)."""
        return Weighting(tuple(self.theta[p] for p in perm), self.kappa, self.e,
                         tuple(self.residues[p] for p in perm))

    def m_bound(self) -> int:
        if self.kappa == 0:
            raise TensorCase("kappa = 0 has no finite m-range")
        spread = max(self.theta) - min(self.theta)
        return math.ceil(spread / (abs(self.kappa) * self.e)) + 1

    def m_range(self) -> range:
        m = self.m_bound()
        return range(-m, m + 1)

    def is_generic(self) -> bool:
        """No theta_i - theta_j - kappa (r_i - r_j) is divisible by e*kappa."""
        if self.kappa == 0:
            return len(set(self.theta)) == len(self.theta)
        ek = self.e * self.kappa
        for i in range(self.ell):
            for j in range(self.ell):
                if i != j:
                    q = (self.theta[i] - self.theta[j] - self.kappa * (self.residues[i] - self.residues[j])) / ek
                    if q.denominator == 1:
                        return False
        return True

    def to_json(self) -> dict:
        return {"theta": [str(x) for x in self.theta], "kappa": str(self.kappa), "e": self.e,
                "residues": list(self.residues)}

    @classmethod
    def from_json(cls, d: dict) -> "Weighting":
        return cls(tuple(Fraction(x) for x in d["theta"]), Fraction(d["kappa"]), int(d["e"]), tuple(d["residues"]))


def uglov(u, e: Optional[int] = None) -> Weighting:
    """kappa = l and theta_i = s_i l + i e, from a ChargeMatrix or a charge tuple."""
    if isinstance(u, ChargeMatrix):
        s, e = u.s, u.e
    else:
        s = tuple(int(x) for x in u)
        if e is None:
            raise ValueError("e is required with a bare charge tuple")
    ell = len(s)
    theta = tuple(Fraction(s[i] * ell + (i + 1) * e) for i in range(ell))
    return Weighting(theta, Fraction(ell), e, tuple(x % e for x in s))


# ---------------------------------------------------------------------------
# walls

@dataclass(frozen=True)
class WallForm:
    """theta_i - theta_j - kappa (r_i - r_j + m e), 0-indexed i != j."""
    i: int
    j: int
    m: int
    ri: int
    rj: int
    e: int

    def evaluate(self, theta: Sequence, kappa) -> Fraction:
        return _frac(theta[self.i]) - _frac(theta[self.j]) - _frac(kappa) * (self.ri - self.rj + self.m * self.e)

    def sign(self, wt: Weighting) -> int:
        v = self.evaluate(wt.theta, wt.kappa)
        return (v > 0) - (v < 0)

    def __str__(self):
        return "theta_%d - theta_%d - kappa*(%d)" % (self.i + 1, self.j + 1, self.ri - self.rj + self.m * self.e)


def wall_forms(e: int, ell: int, residues: Sequence[int], m_range: Iterable[int]) -> list:
    if len(residues) != ell:
        raise ValueError("need l residues")
    ms = list(m_range)
    out = []
    for i in range(ell):
        for j in range(ell):
            if i != j:
                for m in ms:
                    out.append(WallForm(i, j, m, residues[i] % e, residues[j] % e, e))
    return out


def wall_signs(wt: Weighting, m_range: Optional[Iterable[int]] = None) -> tuple:
    ms = wt.m_range() if m_range is None else m_range
    return tuple(f.sign(wt) for f in wall_forms(wt.e, wt.ell, wt.residues, ms))


def on_wall(wt: Weighting, m_range: Optional[Iterable[int]] = None) -> bool:
    return 0 in wall_signs(wt, m_range)


def same_chamber(a: Weighting, b: Weighting, m_range: Optional[Iterable[int]] = None) -> bool:
    if m_range is None:
        bound = max(a.m_bound(), b.m_bound())
        m_range = range(-bound, bound + 1)
    ms = list(m_range)
    sa, sb = wall_signs(a, ms), wall_signs(b, ms)
    return 0 not in sa and sa == sb


# ---------------------------------------------------------------------------
# normalize

def canonical_row(s: int, e: int) -> tuple:
    """Level one runner levels with sum s: (q+1)^r followed by q^(e-r)."""
    q, r = divmod(s, e)
    return tuple([q + 1] * r + [q] * (e - r))


def matrix_for_charges(s: Sequence[int], e: int, w: int = 0) -> ChargeMatrix:
    return ChargeMatrix(tuple(canonical_row(x, e) for x in s), w)


@dataclass(frozen=True)
class Normalized:
    sign: int
    matrix: ChargeMatrix
    permutation: tuple  # output position k holds input position permutation[k]

    def weighting(self) -> Weighting:
        u = uglov(self.matrix)
        return u if self.sign > 0 else u.negate()


def normalize(theta: Weighting) -> Normalized:
    """Find (sign, U) with theta in the chamber of sign * theta_U, up to reindexing.

    Scale so kappa = l, write theta_i = s_i l + theta_i' with s_i = r_i mod e
    and 0 < theta_i' <= l e, then sort by theta_i'. The half-open window is
    chosen so that Uglov weightings are fixed points.
    """
    if theta.kappa == 0:
        raise TensorCase("kappa = 0: use the violating-loading regime")
    if on_wall(theta):
        raise OnWall("weighting lies on a wall")
    ell, e = theta.ell, theta.e
    sign = 1 if theta.kappa > 0 else -1
    sc = theta.scale(Fraction(ell) / theta.kappa)
    data = []
    for idx, (t, r) in enumerate(zip(sc.theta, sc.residues)):
        # s = r + e k with 0 < t - s l <= l e
        k = math.ceil((t - r * ell) / (ell * e)) - 1
        s = r + e * k
        frac_part = t - s * ell
        assert 0 < frac_part <= ell * e
        data.append((frac_part, idx, s))
    data.sort()
    perm = tuple(d[1] for d in data)
    s_out = tuple(d[2] for d in data)
    out = Normalized(sign, matrix_for_charges(s_out, e), perm)
    if not same_chamber(theta.permute(perm), out.weighting()):
        raise AssertionError("normalize produced a weighting in a different chamber")
    return out


# ---------------------------------------------------------------------------
# u_s map

@dataclass(frozen=True)
class SllWeight:
    """Coefficients of omega_0, ..., omega_{l-1} (affine sl_l, modulo delta)."""
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_frac(x) for x in self.coeffs))

    @property
    def ell(self) -> int:
        return len(self.coeffs)

    def pairing(self, j: int) -> Fraction:
        return self.coeffs[j % self.ell]

    def reflect(self, j: int) -> "SllWeight":
        j %= self.ell
        a = cartan_matrix(self.ell)
        c = self.coeffs[j]
        return SllWeight(tuple(x - c * a[j][k] for k, x in enumerate(self.coeffs)))

    def __add__(self, other):
        return SllWeight(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def to_json(self) -> list:
        return [str(x) for x in self.coeffs]


def u_s_map(theta: Weighting, s: Sequence[int]) -> SllWeight:
    """kappa e omega_0 + sum_i D_i (omega_i - omega_{i+1}), vertex l read as 0.

    D_i = theta_i - kappa s_i for 1 <= i < l and D_0 = theta_l - kappa (s_l + e).
    """
    ell = theta.ell
    if len(s) != ell:
        raise ValueError("need l charges")
    k, e = theta.kappa, theta.e
    d = [theta.theta[ell - 1] - k * (s[ell - 1] + e)] + [theta.theta[i - 1] - k * s[i - 1] for i in range(1, ell)]
    c = [Fraction(0)] * ell
    c[0] += k * e
    for i in range(ell):
        c[i] += d[i]
        c[(i + 1) % ell] -= d[i]
    return SllWeight(tuple(c))


def act_on_charge_data(j: int, s: Sequence[int], theta: Weighting) -> tuple:
    """Affine sl_l generator tau_j on (s, theta).

    tau_j (1 <= j < l) swaps positions j, j+1; tau_0 swaps positions 1 and l
    with new s_1 = s_l + e and new s_l = s_1 - e.
    """
    ell, e = theta.ell, theta.e
    s = list(s)
    th = list(theta.theta)
    res = list(theta.residues)
    j %= ell
    if ell == 1:
        return tuple(s), theta
    if j == 0:
        a, b = 0, ell - 1
        s[a], s[b] = s[b] + e, s[a] - e
    else:
        a, b = j - 1, j
        s[a], s[b] = s[b], s[a]
    th[a], th[b] = th[b], th[a]
    res[a], res[b] = res[b], res[a]
    return tuple(s), Weighting(tuple(th), theta.kappa, e, tuple(res))


# ---------------------------------------------------------------------------
# Weyl actions on charge matrices

def _level1_row(u: list, k: int, n: int) -> list:
    u = list(u)
    k %= n
    if n == 1:
        return u
    if k == 0:
        u[0], u[n - 1] = u[n - 1] + 1, u[0] - 1
    else:
        u[k - 1], u[k] = u[k], u[k - 1]
    return u


def weyl_act_on_matrix(row_word: Iterable[int], col_word: Iterable[int], u: ChargeMatrix) -> ChargeMatrix:
    """Level one affine Weyl action of W_e on every row and W_l on every column.

    Words are applied rightmost letter first.
    """
    rows = [list(r) for r in u.entries]
    for k in reversed(list(row_word)):
        rows = [_level1_row(r, k, u.e) for r in rows]
    for k in reversed(list(col_word)):
        cols = [_level1_row([rows[i][j] for i in range(u.ell)], k, u.ell) for j in range(u.e)]
        rows = [[cols[j][i] for j in range(u.e)] for i in range(u.ell)]
    return ChargeMatrix(tuple(tuple(r) for r in rows), u.w)


# ---------------------------------------------------------------------------
# GIT and Hamiltonian walls

def root_coefficients(root: RibbonSpec, e: int) -> tuple:
    """Simple-root coefficients of the root a ribbon spec stands for."""
    if root.residue is None:
        raise ValueError("root needs a start residue")
    v = [0] * e
    for k in range(root.length):
        v[(root.residue + k) % e] += 1
    return tuple(v)


def root_from_coefficients(v: Sequence[int]) -> Optional[RibbonSpec]:
    """Inverse of root_coefficients for positive roots (None for non-roots)."""
    e = len(v)
    if any(x < 0 for x in v):
        if all(x <= 0 for x in v):
            v = [-x for x in v]
        else:
            return None
    n = sum(v)
    if n == 0:
        return None
    for a in range(e):
        cand = RibbonSpec(a, n, e)
        if root_coefficients(cand, e) == tuple(v):
            return cand
    return None


def reflect_root(root: RibbonSpec, i: int, e: int) -> Optional[RibbonSpec]:
    """s_i applied to a root, returned as a positive root (walls ignore sign)."""
    v = list(root_coefficients(root, e))
    a = cartan_matrix(e)
    i %= e
    c = sum(a[i][j] * v[j] for j in range(e))
    v[i] -= c
    return root_from_coefficients(v)


def fixed_points(charges: Sequence[int], e: int, mu: CylindricalWeight, cap: int = 200) -> list:
    """Multipartitions with the given charges whose weight is mu."""
    lam = sum_fundamental(e, charges)
    v = root_certificate(lam, mu)
    if v is None or any(x < 0 for x in v):
        return []
    return multipartitions_with_residues(tuple(charges), e, v, cap=cap)


def git_wall_test(charges: Sequence[int], e: int, mu: CylindricalWeight, root: RibbonSpec, cap: int = 200) -> bool:
    """Some fixed point has a removable ribbon of the root's length and start residue."""
    for mp in fixed_points(charges, e, mu, cap):
        for comp in mp.components:
            if removable_ribbons(comp, root.length, root.residue, e):
                return True
    return False


def hamiltonian_offsets(root: RibbonSpec, ell: int) -> tuple:
    """(source row, target row, D) for a sl_l root acting on l-row abaci.

    A bead at (x, R) moving to (x - D e, R') flips to the removal of a ribbon
    of the root's length and start residue on the flipped abacus.
    """
    a, length = root.residue, root.length
    if a is None:
        raise ValueError("root needs a start residue")
    src = (a + length - 1) % ell + 1
    dst = (a - 1) % ell + 1
    num = length - (src - 1) + (dst - 1)
    assert num % ell == 0
    return src, dst, num // ell


def hamiltonian_wall_test(charges: Sequence[int], e: int, mu: CylindricalWeight, root: RibbonSpec,
                          cap: int = 200) -> bool:
    """Bead criterion: a bead in row R can drop D e slots into an empty slot of row R'."""
    ell = len(charges)
    src, dst, d = hamiltonian_offsets(root, ell)
    for mp in fixed_points(charges, e, mu, cap):
        ab = mp.abacus()
        lo, hi = ab.window()
        for x in range(lo, hi + 1):
            if ab.occupied(x, src) and not ab.occupied(x - d * e, dst):
                return True
    return False


def dual_wall_data(charges: Sequence[int], e: int, mu: CylindricalWeight, cap: int = 200) -> tuple:
    """(dual charges, dual e, dual mu, flipped fixed points) for the rank-level dual instance.

    The dual charges are the runner charges mu.t; the dual weight is read off a
    flipped fixed point and checked to be the same for every fixed point.
    """
    ell = len(charges)
    fps = fixed_points(charges, e, mu, cap)
    dual_charges = tuple(mu.t)
    if not fps:
        return dual_charges, ell, None, []
    flipped = [flip(m.abacus(), e) for m in fps]
    weights = set()
    for ab in flipped:
        if ab.charges() != dual_charges:
            raise AssertionError("flipped fixed point has charges %r, expected %r" % (ab.charges(), dual_charges))
        v = [0] * ell
        for row in ab.rows:
            for c in row.to_charged_partition().contents():
                v[c % ell] += 1
        weights.add(sum_fundamental(ell, dual_charges).sub_roots(v))
    if len(weights) != 1:
        raise AssertionError("flipped fixed points have different weights")
    return dual_charges, ell, weights.pop(), flipped
