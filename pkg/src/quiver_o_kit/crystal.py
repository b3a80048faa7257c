"""Kashiwara operators on l-row abaci.

Two families act on the same abacus:

* sl_e ("sle"): push a bead one step right within its row. Operator i adds a
  box of residue i, i.e. moves a bead from x = i-1 (mod e) to x+1.
* sl_l ("sll"): push a bead one row up at the same x. Operator j (1 <= j < l)
  moves a bead from row j to row j+1; operator 0 moves a bead off the top row
  back to row 1, e steps to the right.

A family of rank one (e = 1, or l = 1 for sl_l) has no operators.

Both use the same signature rule. Slots are listed in reading order, a close
cancels the nearest preceding unmatched open, f acts on the leftmost surviving
open and e on the rightmost surviving close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .partitions import Abacus, AbacusRow
from .weights import CylindricalWeight, sum_fundamental

SLE = "sle"
SLL = "sll"


@dataclass(frozen=True)
class Slot:
    kind: str  # "open" or "close"
    key: tuple  # reading-order key
    src: tuple  # (x, row) of the bead that moves
    dst: tuple  # (x, row) it moves to


@dataclass(frozen=True)
class CrystalNode:
    abacus: Abacus
    e: int

    @classmethod
    def vacuum(cls, charges: Iterable[int], e: int) -> "CrystalNode":
        return cls(Abacus.vacuum(tuple(charges)), e)

    @property
    def level(self) -> int:
        return self.abacus.level

    def key(self) -> str:
        return self.abacus.key()

    def total_charge(self) -> int:
        return self.abacus.total_charge()

    @cached_property
    def sle_weight(self) -> CylindricalWeight:
        return _abacus_weight(self.abacus, self.e)

    @cached_property
    def sll_weight(self) -> CylindricalWeight:
        from .duality import flip
        return _abacus_weight(flip(self.abacus, self.e), self.level)

    def weight(self, algebra: str) -> CylindricalWeight:
        return self.sle_weight if algebra == SLE else self.sll_weight

    def rank(self, algebra: str) -> int:
        return self.e if algebra == SLE else self.level


def _abacus_weight(ab: Abacus, e: int) -> CylindricalWeight:
    lam = sum_fundamental(e, ab.charges())
    v = [0] * e
    for row in ab.rows:
        for c in row.to_charged_partition().contents():
            v[c % e] += 1
    return lam.sub_roots(v)


# ---------------------------------------------------------------------------
# slots

def _moves(node: CrystalNode, algebra: str, i: int) -> list:
    """(src, dst, key) for every potential move of operator i, plus the
    reverse geometry; returns a list of Slot in reading order."""
    ab = node.abacus
    e = node.e
    ell = node.level
    lo, hi = ab.window()
    slots = []
    if algebra not in (SLE, SLL):
        raise ValueError("unknown algebra %r" % algebra)
    if node.rank(algebra) == 1:
        # sl_1 hat has no real simple root, so no Kashiwara operators
        return slots
    if algebra == SLE:
        i %= e
        for r in range(1, ell + 1):
            row = ab.rows[r - 1]
            start = lo - 1 - ((lo - 1 - (i - 1)) % e)
            for x in range(start, hi + 1, e):
                a, b = row.occupied(x), row.occupied(x + 1)
                if a and not b:
                    slots.append(Slot("open", (x, r), (x, r), (x + 1, r)))
                elif b and not a:
                    slots.append(Slot("close", (x, r), (x + 1, r), (x, r)))
    elif algebra == SLL:
        i %= ell
        if i == 0:
            src_row, dst_row, dx = ell, 1, e
        else:
            src_row, dst_row, dx = i, i + 1, 0
        for x in range(lo - dx - 1, hi + 1):
            a = ab.occupied(x, src_row)
            b = ab.occupied(x + dx, dst_row)
            if src_row == dst_row and dx == 0:
                continue
            if a and not b:
                slots.append(Slot("open", (x,), (x, src_row), (x + dx, dst_row)))
            elif b and not a:
                slots.append(Slot("close", (x,), (x + dx, dst_row), (x, src_row)))
    else:
        raise ValueError("unknown algebra %r" % algebra)
    slots.sort(key=lambda s: s.key)
    return slots


def slots(node: CrystalNode, i: int, algebra: str = SLE) -> list:
    return _moves(node, algebra, i)


def signature(node: CrystalNode, i: int, algebra: str = SLE) -> tuple:
    """(unmatched closes, unmatched opens) in reading order."""
    stack = []
    closes = []
    for s in _moves(node, algebra, i):
        if s.kind == "open":
            stack.append(s)
        elif stack:
            stack.pop()
        else:
            closes.append(s)
    return closes, stack


def _apply(node: CrystalNode, s: Slot) -> CrystalNode:
    (x0, r0), (x1, r1) = s.src, s.dst
    rows = list(node.abacus.rows)
    if r0 == r1:
        rows[r0 - 1] = rows[r0 - 1].move(x0, x1)
    else:
        rows[r0 - 1] = rows[r0 - 1].toggled({x0: False})
        rows[r1 - 1] = rows[r1 - 1].toggled({x1: True})
    return CrystalNode(Abacus(tuple(rows)), node.e)


def tilde_f(node: CrystalNode, i: int, algebra: str = SLE) -> Optional[CrystalNode]:
    _, opens = signature(node, i, algebra)
    return _apply(node, opens[0]) if opens else None


def tilde_e(node: CrystalNode, i: int, algebra: str = SLE) -> Optional[CrystalNode]:
    closes, _ = signature(node, i, algebra)
    return _apply(node, closes[-1]) if closes else None


def tilde_f_sle(node, i):
    return tilde_f(node, i, SLE)


def tilde_e_sle(node, i):
    return tilde_e(node, i, SLE)


def tilde_f_sll(node, j):
    return tilde_f(node, j, SLL)


def tilde_e_sll(node, j):
    return tilde_e(node, j, SLL)


def epsilon_phi(node: CrystalNode, i: int, algebra: str = SLE) -> tuple:
    """(epsilon_i, phi_i) from the reduced signature."""
    closes, opens = signature(node, i, algebra)
    return len(closes), len(opens)


def epsilon_phi_by_iteration(node: CrystalNode, i: int, algebra: str = SLE, limit: int = 10000) -> tuple:
    """(epsilon_i, phi_i) by applying the operators until null."""
    out = []
    for op in (tilde_e, tilde_f):
        n = 0
        cur = op(node, i, algebra)
        while cur is not None:
            n += 1
            if n > limit:
                raise RuntimeError("string longer than %d" % limit)
            cur = op(cur, i, algebra)
        out.append(n)
    return tuple(out)


def default_schedule(rank: int) -> tuple:
    """One pass 1, 2, ..., rank-1, 0."""
    return tuple(range(1, rank)) + (0,)


def string_parameterization(node: CrystalNode, algebra: str = SLE, index_order: Optional[Iterable[int]] = None,
                            max_passes: int = 10000) -> tuple:
    """(string, terminal node).

    The schedule `index_order` is one pass and is repeated. Passes continue
    until a full pass produces only zeros; that final pass is dropped.
    """
    rank = node.rank(algebra)
    order = tuple(index_order) if index_order is not None else default_schedule(rank)
    if not order:
        raise ValueError("empty schedule")
    out = []
    cur = node
    for _ in range(max_passes):
        chunk = []
        for i in order:
            a, _ = epsilon_phi(cur, i, algebra)
            for _ in range(a):
                cur = tilde_e(cur, i, algebra)
            chunk.append(a)
        if not any(chunk):
            return tuple(out), cur
        out.extend(chunk)
    raise RuntimeError("string parameterization did not stabilize")


# ---------------------------------------------------------------------------
# graph

class NodeCapExceeded(RuntimeError):
    pass


@dataclass
class CrystalGraph:
    nodes: list
    edges: list  # (src key, dst key, label)
    depth: dict = field(default_factory=dict)
    by_key: dict = field(default_factory=dict)

    def to_dot(self, name: str = "crystal") -> str:
        lines = ["digraph %s {" % name]
        for n in self.nodes:
            lines.append('  "%s";' % n.key())
        for a, b, lab in self.edges:
            lines.append('  "%s" -> "%s" [label="%s"];' % (a, b, lab))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "nodes": [{"id": n.key(), "depth": self.depth[n.key()], "abacus": n.abacus.to_json()} for n in self.nodes],
            "edges": [{"src": a, "dst": b, "label": lab} for a, b, lab in self.edges],
        }


def crystal_graph(seed: CrystalNode, max_depth: int, algebras=(SLE,), cap: int = 100000) -> CrystalGraph:
    """All nodes reachable from seed by at most max_depth f-arrows."""
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    depth = {seed.key(): 0}
    by_key = {seed.key(): seed}
    edges = set()
    frontier = [seed]
    for d in range(1, max_depth + 1):
        nxt = []
        for node in frontier:
            for alg in algebras:
                for i in range(node.rank(alg)):
                    m = tilde_f(node, i, alg)
                    if m is None:
                        continue
                    k = m.key()
                    edges.add((node.key(), k, "%s:f_%d" % (alg, i)))
                    if k not in depth:
                        depth[k] = d
                        by_key[k] = m
                        nxt.append(m)
                        if len(depth) > cap:
                            raise NodeCapExceeded("crystal graph exceeds %d nodes at depth %d" % (cap, d))
        frontier = nxt
    keys = sorted(depth, key=lambda k: (depth[k], k))
    return CrystalGraph([by_key[k] for k in keys], sorted(edges), depth, by_key)
