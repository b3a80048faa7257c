"""Affine sl_e weights in cylindrical (level l) coordinates.

A weight of level l is stored as an e-tuple t = (t_1, ..., t_e) plus a delta
coefficient eta. The tuple extends to all integers by
t(i + e) = t(i) - l, and the pairing with the coroot alpha_i^vee is
t_i - t_{i+1}.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional


def cartan_matrix(e: int) -> list:
    """Cartan matrix of affine sl_e, indexed 0..e-1 (0 is the affine node)."""
    if e < 1:
        raise ValueError("e must be >= 1")
    if e == 1:
        return [[0]]
    if e == 2:
        return [[2, -2], [-2, 2]]
    a = [[0] * e for _ in range(e)]
    for i in range(e):
        a[i][i] = 2
        a[i][(i + 1) % e] = -1
        a[i][(i - 1) % e] = -1
    return a


class IncompatibleWeights(ValueError):
    pass


@dataclass(frozen=True)
class CylindricalWeight:
    e: int
    level: int
    t: tuple
    eta: int = 0

    def __post_init__(self):
        t = tuple(int(x) for x in self.t)
        if self.e < 1 or len(t) != self.e:
            raise ValueError("t must have e=%d entries, got %r" % (self.e, t))
        object.__setattr__(self, "t", t)
        object.__setattr__(self, "eta", int(self.eta))

    # -- basic data --------------------------------------------------------

    def t_ext(self, i: int) -> int:
        q, r = divmod(i - 1, self.e)
        return self.t[r] - self.level * q

    def pairing(self, i: int) -> int:
        """<nu, alpha_i^vee> for i mod e (i = 0 and i = e agree)."""
        i = i % self.e
        if i == 0:
            i = self.e
        return self.t_ext(i) - self.t_ext(i + 1)

    def pairings(self) -> tuple:
        """Pairings in the order alpha_1, ..., alpha_{e-1}, alpha_0."""
        return tuple(self.pairing(i) for i in range(1, self.e + 1))

    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.pairings())

    def total(self) -> int:
        return sum(self.t)

    def key(self) -> tuple:
        return (self.e, self.level, self.t, self.eta)

    def __str__(self):
        return "(%s; eta=%d)" % (",".join(map(str, self.t)), self.eta)

    # -- arithmetic ---------------------------------------------------------

    def _check(self, other: "CylindricalWeight"):
        if self.e != other.e or self.level != other.level:
            raise IncompatibleWeights("weights with different e or level: %s vs %s" % (
                (self.e, self.level), (other.e, other.level)))

    def add(self, other: "CylindricalWeight") -> "CylindricalWeight":
        if self.e != other.e:
            raise IncompatibleWeights("weights with different e")
        return CylindricalWeight(self.e, self.level + other.level,
                                 tuple(a + b for a, b in zip(self.t, other.t)), self.eta + other.eta)

    def sub_root(self, i: int, times: int = 1) -> "CylindricalWeight":
        """self - times * alpha_i, i taken mod e."""
        e = self.e
        t = list(self.t)
        eta = self.eta
        i = i % e
        if e == 1:
            return CylindricalWeight(e, self.level, tuple(t), eta - times)
        if i == 0:
            t[e - 1] -= times
            t[0] += times
            eta -= times
        else:
            t[i - 1] -= times
            t[i] += times
        return CylindricalWeight(e, self.level, tuple(t), eta)

    def add_root(self, i: int, times: int = 1) -> "CylindricalWeight":
        return self.sub_root(i, -times)

    def sub_roots(self, v) -> "CylindricalWeight":
        """self - sum_i v[i] alpha_i with v indexed by residue 0..e-1."""
        out = self
        for i, c in enumerate(v):
            if c:
                out = out.sub_root(i, c)
        return out

    def shift_delta(self, n: int) -> "CylindricalWeight":
        return CylindricalWeight(self.e, self.level, self.t, self.eta + n)

    # -- Weyl group -----------------------------------------------------------

    def reflect(self, i: int) -> "CylindricalWeight":
        """Simple reflection s_i (the identity when e = 1: delta is not a real root)."""
        if self.e == 1:
            return self
        c = self.pairing(i)
        return self.sub_root(i, c) if c else self

    def weyl_act(self, word: Iterable[int]) -> "CylindricalWeight":
        """Apply simple reflections, rightmost first."""
        out = self
        for i in reversed(list(word)):
            out = out.reflect(i)
        return out

    def dominant_representative(self, max_steps: int = 100000) -> "CylindricalWeight":
        """The dominant weight in the Weyl orbit (positive level only)."""
        if self.level <= 0:
            raise ValueError("dominant representatives need positive level")
        cur = self
        for _ in range(max_steps):
            for i in range(1, self.e + 1):
                if cur.pairing(i) < 0:
                    cur = cur.reflect(i)
                    break
            else:
                return cur
        raise RuntimeError("dominant representative did not converge")


def zero_weight(e: int, level: int = 0) -> CylindricalWeight:
    return CylindricalWeight(e, level, (0,) * e, 0)


def fundamental(e: int, s: int) -> CylindricalWeight:
    """Level one weight omega_{s mod e} with t_j = floor((s - j)/e) + 1."""
    return CylindricalWeight(e, 1, tuple((s - j) // e + 1 for j in range(1, e + 1)), 0)


def sum_fundamental(e: int, charges: Iterable[int]) -> CylindricalWeight:
    charges = list(charges)
    t = [0] * e
    for s in charges:
        f = fundamental(e, s)
        t = [a + b for a, b in zip(t, f.t)]
    return CylindricalWeight(e, len(charges), tuple(t), 0)


def root_certificate(a: CylindricalWeight, b: CylindricalWeight) -> Optional[tuple]:
    """Coefficients v (indexed by residue 0..e-1) with a - b = sum v_i alpha_i.

    Returns None when a - b is not in the root lattice.
    """
    a._check(b)
    e = a.e
    d = [x - y for x, y in zip(a.t, b.t)]
    if sum(d) != 0:
        return None
    v0 = a.eta - b.eta
    if e == 1:
        return (v0,)
    v = [0] * e
    v[0] = v0
    run = v0
    for i in range(1, e):
        run += d[i - 1]
        v[i] = run
    return tuple(v)


def root_order_compare(a: CylindricalWeight, b: CylindricalWeight) -> bool:
    """True iff a >= b, i.e. a - b is a nonnegative sum of simple roots."""
    v = root_certificate(a, b)
    return v is not None and all(x >= 0 for x in v)


def weyl_orbit_ball(w: CylindricalWeight, length: int) -> set:
    """All weights x.w for Weyl words x of length <= length."""
    seen = {w}
    frontier = [w]
    for _ in range(length):
        nxt = []
        for x in frontier:
            for i in range(w.e):
                y = x.reflect(i)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen
