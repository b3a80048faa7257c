"""Polarized hyperplane arrangements over the rationals.

An arrangement is given by an n x k integer matrix G whose columns span a
subspace g of Q^n, a vector xi in Q^n (a lift of xi in Q^n / g) and a
functional eta on g written in coordinates against the columns of G.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional, Sequence


class CapExceeded(RuntimeError):
    pass


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


# ---------------------------------------------------------------------------
# exact linear algebra

def rref(rows: list) -> tuple:
    """Reduced row echelon form; returns (matrix, pivot columns)."""
    m = [[_frac(x) for x in r] for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        m[r] = [x / piv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows: list) -> int:
    return len(rref(rows)[1]) if rows and rows[0] else 0


def nullspace(rows: list, ncols: int) -> list:
    """Integer basis vectors of {x : rows . x = 0}."""
    if not rows:
        return [[1 if i == j else 0 for i in range(ncols)] for j in range(ncols)]
    m, piv = rref(rows)
    free = [c for c in range(ncols) if c not in piv]
    out = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, c in enumerate(piv):
            v[c] = -m[r][f]
        den = 1
        for x in v:
            den = den * x.denominator // _gcd(den, x.denominator)
        ints = [int(x * den) for x in v]
        g = 0
        for x in ints:
            g = _gcd(g, abs(x))
        out.append([x // g for x in ints])
    return out


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def solve(rows: list, rhs: list) -> Optional[list]:
    """One rational solution of rows . x = rhs, or None."""
    if not rows:
        return None if any(_frac(b) != 0 for b in rhs) else []
    ncols = len(rows[0])
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    m, piv = rref(aug)
    if ncols in piv:
        return None
    x = [Fraction(0)] * ncols
    for r, c in enumerate(piv):
        x[c] = m[r][ncols]
    return x


def det(m: list) -> Fraction:
    n = len(m)
    a = [[_frac(x) for x in r] for r in m]
    d = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if a[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            a[c], a[p] = a[p], a[c]
            d = -d
        d *= a[c][c]
        for i in range(c + 1, n):
            f = a[i][c] / a[c][c]
            a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return d


# ---------------------------------------------------------------------------
# exact simplex (Bland's rule) for feasibility with strict inequalities

def _simplex(t: list, basis: list, cost: list) -> Optional[Fraction]:
    """Maximize cost . y over the tableau t (rows [coeffs..., rhs], rhs >= 0); None if unbounded.

    The objective row z holds reduced costs and, in its last entry, minus the value.
    """
    ncol = len(cost)
    z = list(cost) + [Fraction(0)]
    for i, b in enumerate(basis):
        if cost[b] != 0:
            f = cost[b]
            z = [a - f * c if c else a for a, c in zip(z, t[i])]
    while True:
        enter = next((j for j in range(ncol) if z[j] > 0), None)
        if enter is None:
            return -z[-1]
        best = None
        for i, row in enumerate(t):
            if row[enter] > 0:
                key = (row[-1] / row[enter], basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return None
        r = best[1]
        _pivot(t, basis, r, enter)
        f = z[enter]
        z = [a - f * c if c else a for a, c in zip(z, t[r])]


def _pivot(t: list, basis: list, r: int, c: int):
    piv = t[r][c]
    if piv != 1:
        t[r] = [x / piv if x else x for x in t[r]]
    pr = t[r]
    for i in range(len(t)):
        if i != r and t[i][c] != 0:
            f = t[i][c]
            t[i] = [x - f * y if y else x for x, y in zip(t[i], pr)]
    basis[r] = c


def _max_slack(rows: list, rhs: list) -> Optional[Fraction]:
    """Maximize the last variable s over {A y <= rhs, y >= 0}; None if infeasible.

    Phase one uses a single artificial variable x0 entering on the most
    violated row.
    """
    nv, m = len(rows[0]), len(rows)
    x0 = nv + m
    t = [list(rows[i]) + [Fraction(1 if j == i else 0) for j in range(m)] + [Fraction(-1), rhs[i]]
         for i in range(m)]
    basis = [nv + i for i in range(m)]
    low = min(range(m), key=lambda i: rhs[i])
    if rhs[low] < 0:
        _pivot(t, basis, low, x0)
        if _simplex(t, basis, [Fraction(0)] * x0 + [Fraction(-1)]) < 0:
            return None
        if x0 in basis:
            r = basis.index(x0)
            c = next((j for j in range(x0) if t[r][j] != 0), None)
            if c is not None:
                _pivot(t, basis, r, c)
    # x0 is now zero: drop its column
    t = [row[:x0] + [Fraction(0)] + row[x0 + 1:] for row in t]
    cost = [Fraction(0)] * (x0 + 1)
    cost[nv - 1] = Fraction(1)
    return _simplex(t, basis, cost)


def lp_feasible(constraints: list, nvars: int) -> bool:
    """Constraints are (coeffs, const, strict) meaning coeffs . x + const (> if strict else >=) 0.

    A slack s <= 1 is subtracted from every strict row and maximized; the
    system is feasible iff that LP is feasible with s > 0. When the rows
    have full rank, nvars independent rows become the (nonnegative) LP
    variables, which keeps the tableau small.
    """
    cons = [([_frac(a) for a in co], _frac(b), bool(st)) for co, b, st in constraints]
    any_strict = any(st for _, _, st in cons)
    one, zero = Fraction(1), Fraction(0)
    # one rref of the matrix whose columns are the constraint rows: pivot columns
    # are a greedy independent set, other columns their coordinates in it
    rows, rhs = [], []
    red, chosen = rref([[co[v] for co, _, _ in cons] for v in range(nvars)]) if nvars and cons else ([], [])
    if nvars and len(chosen) == nvars:
        bp = [cons[p][1] for p in chosen]
        for i, (co, b, st) in enumerate(cons):
            if i in chosen:
                if st:
                    rows.append([-one if p == i else zero for p in chosen] + [one])
                    rhs.append(zero)
                continue
            c = [red[r][i] for r in range(nvars)]
            rows.append([-x for x in c] + [one if st else zero])
            rhs.append(b - sum(x * y for x, y in zip(c, bp)))
        width = nvars + 1
    else:
        # free variables split as x+ - x-
        for co, b, st in cons:
            rows.append([-a for a in co] + list(co) + [one if st else zero])
            rhs.append(b)
        width = 2 * nvars + 1
    rows.append([zero] * (width - 1) + [one])
    rhs.append(one)
    best = _max_slack(rows, rhs)
    if best is None:
        return False
    return not any_strict or best > 0


# ---------------------------------------------------------------------------
# arrangements

@dataclass(frozen=True)
class PolarizedArrangement:
    n: int
    k: int
    G: tuple  # n rows of length k
    xi: tuple
    eta: tuple

    def __post_init__(self):
        g = tuple(tuple(_frac(x) for x in r) for r in self.G)
        if len(g) != self.n or any(len(r) != self.k for r in g):
            raise ValueError("G must be n x k")
        xi = tuple(_frac(x) for x in self.xi)
        eta = tuple(_frac(x) for x in self.eta)
        if len(xi) != self.n or len(eta) != self.k:
            raise ValueError("xi needs n entries and eta needs k entries")
        if self.k and rank([list(r) for r in g]) != self.k:
            raise ValueError("G must have full column rank")
        object.__setattr__(self, "G", g)
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], xi: Sequence, eta: Sequence) -> "PolarizedArrangement":
        cols = [list(c) for c in cols]
        n = len(xi)
        k = len(cols)
        g = tuple(tuple(cols[j][i] for j in range(k)) for i in range(n))
        return cls(n, k, g, tuple(xi), tuple(eta))

    def columns(self) -> list:
        return [[self.G[i][j] for i in range(self.n)] for j in range(self.k)]

    def to_json(self) -> dict:
        return {"n": self.n, "G_basis": [[str(x) for x in c] for c in self.columns()],
                "xi": [str(x) for x in self.xi], "eta": [str(x) for x in self.eta]}

    @classmethod
    def from_json(cls, d: dict) -> "PolarizedArrangement":
        cols = [[Fraction(x) for x in c] for c in d["G_basis"]]
        return cls.from_columns(cols, [Fraction(x) for x in d["xi"]], [Fraction(x) for x in d["eta"]])


def _check_sigma(a: PolarizedArrangement, sigma: str):
    if len(sigma) != a.n or any(ch not in "+-" for ch in sigma):
        raise ValueError("sign vector must be a string of n '+'/'-' characters")


def _feasible_prefix(a: PolarizedArrangement, sigma: str) -> bool:
    """Feasibility of the constraints for the first len(sigma) coordinates."""
    cons = []
    for i, ch in enumerate(sigma):
        row, b = list(a.G[i]), a.xi[i]
        if ch == "+":
            cons.append((row, b, False))
        else:
            cons.append(([-x for x in row], -b, True))
    return lp_feasible(cons, a.k)


def _bounded_prefix(a: PolarizedArrangement, sigma: str) -> bool:
    """No direction sign-weak for the first len(sigma) coordinates pairs positively with eta."""
    cons = []
    for i, ch in enumerate(sigma):
        row = list(a.G[i])
        cons.append((row if ch == "+" else [-x for x in row], Fraction(0), False))
    cons.append((list(a.eta), Fraction(0), True))
    return not lp_feasible(cons, a.k)


def is_feasible(a: PolarizedArrangement, sigma: str) -> bool:
    """Some point of xi + g has (.)_i >= 0 where sigma_i = + and < 0 where sigma_i = -."""
    _check_sigma(a, sigma)
    return _feasible_prefix(a, sigma)


def is_bounded(a: PolarizedArrangement, sigma: str) -> bool:
    """No direction in g that is sign-weak for sigma and pairs positively with eta."""
    _check_sigma(a, sigma)
    return _bounded_prefix(a, sigma)


def gale_dual(a: PolarizedArrangement) -> PolarizedArrangement:
    """Subspace g^perp; xi' = -eta~ with G^T eta~ = eta; eta'_j = <-xi, w_j>."""
    gt = a.columns()
    w = nullspace(gt, a.n) if a.k else [[1 if i == j else 0 for i in range(a.n)] for j in range(a.n)]
    if a.k:
        lift = solve(gt, list(a.eta))
        assert lift is not None
    else:
        lift = [Fraction(0)] * a.n
    xi2 = tuple(-x for x in lift)
    eta2 = tuple(-sum(a.xi[i] * wj[i] for i in range(a.n)) for wj in w)
    return PolarizedArrangement.from_columns(w, xi2, eta2) if w else PolarizedArrangement(a.n, 0, tuple(() for _ in range(a.n)), xi2, ())


def sign_vectors(n: int) -> list:
    return ["".join(p) for p in product("+-", repeat=n)]


def _feasible_set(a: PolarizedArrangement) -> set:
    # an infeasible prefix has no feasible extension
    out = set()
    stack = [""]
    while stack:
        pre = stack.pop()
        if pre and not _feasible_prefix(a, pre):
            continue
        if len(pre) == a.n:
            out.add(pre)
        else:
            stack.extend((pre + "+", pre + "-"))
    return out


def _bounded_set(a: PolarizedArrangement) -> set:
    # every extension of a bounded prefix is bounded
    out = set()
    stack = [""]
    while stack:
        pre = stack.pop()
        if _bounded_prefix(a, pre):
            out.update(pre + "".join(p) for p in product("+-", repeat=a.n - len(pre)))
        elif len(pre) < a.n:
            stack.extend((pre + "+", pre + "-"))
    return out


def enumerate_chambers(a: PolarizedArrangement, predicate: str = "both", cap: int = 16) -> list:
    """Sign vectors satisfying the predicate, in the order of sign_vectors(n)."""
    if predicate not in ("feasible", "bounded", "both"):
        raise ValueError("predicate must be feasible, bounded or both")
    if a.n > cap:
        raise CapExceeded("n = %d exceeds the enumeration cap %d" % (a.n, cap))
    if predicate == "feasible":
        keep = _feasible_set(a)
    elif predicate == "bounded":
        keep = _bounded_set(a)
    else:
        keep = _feasible_set(a) & _bounded_set(a)
    return [s for s in sign_vectors(a.n) if s in keep]


def is_unimodular(a: PolarizedArrangement) -> bool:
    """All nonzero k x k minors of G share one absolute value."""
    if any(x.denominator != 1 for r in a.G for x in r):
        raise ValueError("unimodularity needs an integer basis")
    vals = set()
    for rows in combinations(range(a.n), a.k):
        d = det([list(a.G[i]) for i in rows])
        if d != 0:
            vals.add(abs(d))
    return len(vals) <= 1


def is_regular(a: PolarizedArrangement) -> bool:
    """Hyperplanes {(xi + g)_i = 0} meet in general position."""
    for size in range(1, a.n + 1):
        for rows in combinations(range(a.n), size):
            sub = [list(a.G[i]) for i in rows]
            rhs = [-a.xi[i] for i in rows]
            if a.k == 0:
                if all(r == 0 for r in rhs):
                    return False
                continue
            if solve(sub, rhs) is not None and rank(sub) < size:
                return False
    return True


def is_eta_generic(a: PolarizedArrangement) -> bool:
    """eta does not vanish on any nonzero intersection of coordinate hyperplanes in g."""
    for size in range(0, a.n + 1):
        for rows in combinations(range(a.n), size):
            sub = [list(a.G[i]) for i in rows]
            basis = nullspace(sub, a.k) if sub else [[1 if i == j else 0 for i in range(a.k)] for j in range(a.k)]
            if len(basis) == 1 and sum(e * x for e, x in zip(a.eta, basis[0])) == 0:
                return False
    return True


def change_basis(a: PolarizedArrangement, m: Sequence[Sequence]) -> PolarizedArrangement:
    """Replace G by G M (M invertible k x k); eta transforms as M^T eta."""
    m = [[_frac(x) for x in r] for r in m]
    g = tuple(tuple(sum(a.G[i][t] * m[t][j] for t in range(a.k)) for j in range(a.k)) for i in range(a.n))
    eta = tuple(sum(m[t][j] * a.eta[t] for t in range(a.k)) for j in range(a.k))
    return PolarizedArrangement(a.n, a.k, g, a.xi, eta)


def shift_xi(a: PolarizedArrangement, c: Sequence) -> PolarizedArrangement:
    """xi -> xi + G c."""
    c = [_frac(x) for x in c]
    xi = tuple(a.xi[i] + sum(a.G[i][t] * c[t] for t in range(a.k)) for i in range(a.n))
    return PolarizedArrangement(a.n, a.k, a.G, xi, a.eta)
