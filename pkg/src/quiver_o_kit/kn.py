"""Kirwan-Ness cocharacters for box diagrams plus multisegments, loadings and predicates.

The grading model: a multipartition xi (components k = 1..l) and a
multisegment m give a vector space with one basis vector per box. Box
(i, j) of component k sits over vertex r_k + j - i (mod e) with eigenvalue

    theta_k + kappa (i - j) + i + j - 1,

and position p = 0..n-1 of a segment (r, n) sits over vertex r + p with
eigenvalue u + (1 - kappa)(p - (n - 1)/2). The maps are

    x    : box (i, j) -> (i, j - 1), segment position p -> p - 1
    xbar : box (i, j) -> (i - 1, j), zero on segments
    q    : box (1, 1) of component k -> the framing vector w_k (value theta_k)

and a grading destabilizes in the limit iff for every nonzero coefficient
value(src) - value(tgt) >= c with c_q = 1, c_x = 1 - kappa, c_xbar = 1 + kappa.
The model needs kappa < 0.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .partitions import Multipartition
from .weightings import Weighting


class KNError(ValueError):
    pass


class Collision(KNError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class Multisegment:
    segments: tuple = ()  # (residue r, length n)

    def __post_init__(self):
        segs = tuple((int(r), int(n)) for r, n in self.segments)
        if any(n <= 0 for _, n in segs):
            raise KNError("segment lengths must be positive")
        object.__setattr__(self, "segments", tuple(sorted(segs)))

    def box_count(self, e: int) -> list:
        v = [0] * e
        for r, n in self.segments:
            for p in range(n):
                v[(r + p) % e] += 1
        return v


@dataclass(frozen=True)
class Loading:
    support: tuple  # sorted ((position, vertex), ...)

    def __post_init__(self):
        sup = tuple(sorted((_frac(p), int(v)) for p, v in self.support))
        if any(sup[i][0] == sup[i + 1][0] for i in range(len(sup) - 1)):
            raise Collision("two support points at the same position")
        object.__setattr__(self, "support", sup)

    def positions(self) -> list:
        return [p for p, _ in self.support]

    def vertex_counts(self, e: int) -> list:
        v = [0] * e
        for _, x in self.support:
            v[x % e] += 1
        return v

    def translate(self, c) -> "Loading":
        c = _frac(c)
        return Loading(tuple((p + c, v) for p, v in self.support))

    def to_json(self) -> dict:
        return {"support": [[str(p), v] for p, v in self.support]}

    @classmethod
    def from_json(cls, d: dict) -> "Loading":
        return cls(tuple((Fraction(p), int(v)) for p, v in d["support"]))


@dataclass(frozen=True)
class Lift:
    """Eigenvalues per basis vector; entries are (label, vertex, value)."""
    entries: tuple
    nu: Fraction = Fraction(1)

    def values(self) -> dict:
        return {lab: val for lab, _, val in self.entries}

    def vertex_counts(self, e: int) -> list:
        v = [0] * e
        for _, x, _ in self.entries:
            v[x % e] += 1
        return v

    def by_vertex(self, e: int) -> dict:
        out = {i: [] for i in range(e)}
        for _, x, val in self.entries:
            out[x % e].append(val)
        return {i: sorted(vals) for i, vals in out.items()}


def _check_kappa(theta: Weighting):
    if theta.kappa >= 0:
        raise KNError("the box-diagram model needs kappa < 0, got %s" % theta.kappa)


def box_eigenvalue(theta: Weighting, k: int, i: int, j: int) -> Fraction:
    return theta.theta[k - 1] + theta.kappa * (i - j) + i + j - 1


def box_labels(mp: Multipartition) -> list:
    return [("box", k, i, j) for k, comp in enumerate(mp.components, start=1) for (i, j) in comp.boxes()]


def segment_labels(m: Multisegment) -> list:
    return [("seg", idx, p) for idx, (_, n) in enumerate(m.segments) for p in range(n)]


def lift_from(mp: Multipartition, m: Multisegment, theta: Weighting, u) -> Lift:
    _check_kappa(theta)
    if mp.level != theta.ell:
        raise KNError("multipartition level does not match the weighting")
    e = theta.e
    u = _frac(u)
    entries = []
    for (_, k, i, j) in box_labels(mp):
        entries.append((("box", k, i, j), (theta.residues[k - 1] + j - i) % e, box_eigenvalue(theta, k, i, j)))
    for idx, (r, n) in enumerate(m.segments):
        for p in range(n):
            val = u + (1 - theta.kappa) * (p - Fraction(n - 1, 2))
            entries.append((("seg", idx, p), (r + p) % e, val))
    return Lift(tuple(entries))


def documented_u(mp: Multipartition, theta: Weighting) -> int:
    """u = -(1 + 2 ceil(max |box eigenvalue|)), far below every box eigenvalue."""
    vals = [abs(box_eigenvalue(theta, k, i, j)) for (_, k, i, j) in box_labels(mp)]
    top = math.ceil(max(vals)) if vals else 0
    return -(1 + 2 * top)


def norm_u(lift: Lift, u) -> Fraction:
    """Squared norm nu^2 + sum (value - u nu)^2."""
    u = _frac(u)
    return lift.nu ** 2 + sum((val - u * lift.nu) ** 2 for _, _, val in lift.entries)


def loading_from_lift(lift: Lift) -> Loading:
    seen = {}
    for lab, v, val in lift.entries:
        pos = -val
        if pos in seen:
            raise Collision("eigenvalue %s appears twice (%r and %r)" % (val, seen[pos], lab))
        seen[pos] = lab
    return Loading(tuple((-val, v) for _, v, val in lift.entries))


# ---------------------------------------------------------------------------
# predicates on loadings

def is_violating(loading: Loading, theta: Weighting) -> bool:
    """Tensor case only: some support point lies left of every theta_j."""
    if theta.kappa != 0:
        raise KNError("violating loadings are defined for kappa = 0")
    lo = min(theta.theta)
    return any(p < lo for p in loading.positions())


def unsteadiness(loading: Loading, theta: Weighting) -> int:
    """Largest j such that some a < min theta has [a - |kappa|, a] empty and j points below it."""
    if theta.kappa == 0:
        raise KNError("unsteadiness needs kappa != 0")
    k = abs(theta.kappa)
    lo = min(theta.theta)
    pos = loading.positions()
    best = 0
    for c in range(1, len(pos) + 1):
        nxt = pos[c] if c < len(pos) else None
        bound = lo if nxt is None else min(nxt, lo)
        if pos[c - 1] + k < bound:
            best = c
    return best


def induce(i: Loading, j: Loading, theta: Weighting) -> Loading:
    """Disjoint union with j translated far to the left of i and of every theta."""
    if not j.support:
        return i
    k = abs(theta.kappa)
    left = min(i.positions() + list(theta.theta))
    shift = left - k - 1 - max(j.positions()) - 1
    return Loading(i.support + j.translate(shift).support)


@dataclass(frozen=True)
class LoadingSignature:
    vertices: tuple
    gap_classes: tuple
    proxy: bool = True


def critical_values(theta: Weighting, size: int) -> list:
    vals = {abs(a - b) for a in theta.theta for b in theta.theta}
    vals |= {abs(theta.kappa) * n for n in range(size + 1)}
    return sorted(vals)


def loading_signature(loading: Loading, theta: Weighting) -> LoadingSignature:
    """Proxy for loading equivalence: vertex sequence and gap classes against critical values."""
    pos = loading.positions()
    crit = critical_values(theta, len(pos))

    def cls(d):
        return tuple((d > c) - (d < c) for c in crit)

    gaps = tuple(cls(pos[a + 1] - pos[a]) for a in range(len(pos) - 1))
    ends = tuple(cls(t - pos[0]) for t in theta.theta) if pos else ()
    return LoadingSignature(tuple(v for _, v in loading.support), gaps + ends)


# ---------------------------------------------------------------------------
# representation and limit check

@dataclass
class Representation:
    basis: list  # (label, vertex)
    framing: list  # (label, vertex, value) for w_k
    x: list = field(default_factory=list)  # (src label, tgt label)
    xbar: list = field(default_factory=list)
    q: list = field(default_factory=list)

    def dimension_vector(self, e: int) -> list:
        v = [0] * e
        for _, x in self.basis:
            v[x % e] += 1
        return v

    def matrix(self, name: str, labels: Optional[list] = None) -> list:
        """Dense 0/1 matrix of an endomorphism (x or xbar) on the given labels."""
        labels = labels if labels is not None else [b for b, _ in self.basis]
        idx = {b: n for n, b in enumerate(labels)}
        mat = [[0] * len(labels) for _ in labels]
        for s, t in getattr(self, name):
            if s in idx and t in idx:
                mat[idx[t]][idx[s]] = 1
        return mat


def build_representation(mp: Multipartition, m: Multisegment, theta: Weighting) -> Representation:
    e = theta.e
    basis = []
    for (_, k, i, j) in box_labels(mp):
        basis.append((("box", k, i, j), (theta.residues[k - 1] + j - i) % e))
    for idx, (r, n) in enumerate(m.segments):
        for p in range(n):
            basis.append((("seg", idx, p), (r + p) % e))
    framing = [(("w", k), theta.residues[k - 1] % e, theta.theta[k - 1]) for k in range(1, mp.level + 1)]
    rep = Representation(basis, framing)
    present = {b for b, _ in basis}
    for (_, k, i, j) in box_labels(mp):
        if ("box", k, i, j - 1) in present:
            rep.x.append((("box", k, i, j), ("box", k, i, j - 1)))
        if ("box", k, i - 1, j) in present:
            rep.xbar.append((("box", k, i, j), ("box", k, i - 1, j)))
        if (i, j) == (1, 1):
            rep.q.append((("box", k, 1, 1), ("w", k)))
    for idx, (_, n) in enumerate(m.segments):
        for p in range(1, n):
            rep.x.append((("seg", idx, p), ("seg", idx, p - 1)))
    return rep


@dataclass
class LimitReport:
    ok: bool
    offending: list  # (map, src, tgt, value(src) - value(tgt), required)
    checked: int = 0


def limit_check(rep: Representation, lift: Lift, theta: Weighting) -> LimitReport:
    """Every coefficient must satisfy value(src) - value(tgt) >= c_map."""
    vals = lift.values()
    basis_labels = {b for b, _ in rep.basis}
    if set(vals) != basis_labels:
        raise KNError("lift does not grade the representation basis")
    targets = dict(vals)
    for lab, _, val in rep.framing:
        targets[lab] = val
    bounds = {"q": Fraction(1), "x": 1 - theta.kappa, "xbar": 1 + theta.kappa}
    bad = []
    n = 0
    for name in ("q", "x", "xbar"):
        for s, t in getattr(rep, name):
            n += 1
            diff = targets[s] - targets[t]
            if diff < bounds[name]:
                bad.append((name, s, t, diff, bounds[name]))
    return LimitReport(not bad, bad, n)


# ---------------------------------------------------------------------------
# alternative gradings

def perturbed_gradings(mp: Multipartition, m: Multisegment, theta: Weighting, u, count: int,
                       seed: int = 0, scale: int = 3) -> list:
    """Random valid gradings of build_representation(mp, m) other than lift_from.

    Half are structured (minimal box grading plus a monotone nonnegative
    slack, segments shifted with spacings >= 1 - kappa); the rest are random
    perturbations of the base lift kept only when limit_check passes.
    """
    rng = random.Random(seed)
    base = lift_from(mp, m, theta, u)
    rep = build_representation(mp, m, theta)
    step = 1 - theta.kappa
    out = []
    attempts = 0
    while len(out) < count:
        attempts += 1
        if attempts > 50 * count + 1000:
            break
        entries = []
        if attempts % 2 == 1:
            for k, comp in enumerate(mp.components, start=1):
                slack = {}
                for (i, j) in comp.boxes():
                    prev = max(slack.get((i - 1, j), 0), slack.get((i, j - 1), 0))
                    slack[(i, j)] = prev + Fraction(rng.randint(0, scale * 4), 4) * rng.choice((0, 1))
                    entries.append((("box", k, i, j), (theta.residues[k - 1] + j - i) % theta.e,
                                    box_eigenvalue(theta, k, i, j) + slack[(i, j)]))
            for idx, (r, n) in enumerate(m.segments):
                gaps = [step + Fraction(rng.randint(0, scale * 4), 4) * rng.choice((0, 1)) for _ in range(n - 1)]
                vals = [Fraction(0)]
                for g in gaps:
                    vals.append(vals[-1] + g)
                centre = sum(vals) / n
                shift = _frac(u) + Fraction(rng.randint(-scale * 4, scale * 4), 4) - centre
                for p in range(n):
                    entries.append((("seg", idx, p), (r + p) % theta.e, vals[p] + shift))
        else:
            for lab, v, val in base.entries:
                entries.append((lab, v, val + Fraction(rng.randint(-scale * 4, scale * 4), 4)))
        cand = Lift(tuple(entries))
        if cand.values() == base.values():
            continue
        if limit_check(rep, cand, theta).ok:
            out.append(cand)
    return out
