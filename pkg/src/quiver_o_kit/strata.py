"""Special strata labels (nu, n), their order, and conjectural cells."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Optional

from .crystal import SLE, SLL, CrystalNode, string_parameterization
from .duality import strata_dual, weight_dual
from .weights import CylindricalWeight, root_certificate, root_order_compare


class NotInRootCone(ValueError):
    pass


@dataclass(frozen=True)
class StratumLabel:
    nu: CylindricalWeight
    n: int

    def lower(self) -> CylindricalWeight:
        """nu - n delta."""
        return self.nu.shift_delta(-self.n)

    def __str__(self):
        return "(%s, %d)" % (self.nu, self.n)


def stratum_leq(a: StratumLabel, b: StratumLabel) -> bool:
    """(nu, n) <= (nu', n') iff nu >= nu' and nu - n delta >= nu' - n' delta."""
    return root_order_compare(a.nu, b.nu) and root_order_compare(a.lower(), b.lower())


def _certificate(lam: CylindricalWeight, mu: CylindricalWeight) -> tuple:
    if not lam.is_dominant():
        raise ValueError("lambda must be dominant")
    mu_plus = mu.dominant_representative()
    c = root_certificate(lam, mu_plus)
    if c is None or any(x < 0 for x in c):
        raise NotInRootCone("lambda - mu+ is not a nonnegative sum of simple roots")
    return c


def dominant_interval(lam: CylindricalWeight, mu: CylindricalWeight) -> list:
    """Dominant nu with lambda >= nu >= mu+ (equivalently >= every w.mu)."""
    c = _certificate(lam, mu)
    out = []
    for v in product(*(range(x + 1) for x in c)):
        nu = lam.sub_roots(v)
        if nu.is_dominant():
            out.append(nu)
    return sorted(out, key=lambda w: (sum(root_certificate(lam, w)), w.t, w.eta))


@dataclass
class StrataPoset:
    labels: list
    order: dict = field(default_factory=dict)  # (i, j) -> True when labels[i] <= labels[j]

    def leq(self, i: int, j: int) -> bool:
        return self.order[(i, j)]

    def hasse(self) -> list:
        """Covering pairs (i, j) with labels[i] < labels[j]."""
        n = len(self.labels)
        out = []
        for i in range(n):
            for j in range(n):
                if i == j or not self.order[(i, j)]:
                    continue
                if not any(k not in (i, j) and self.order[(i, k)] and self.order[(k, j)] for k in range(n)):
                    out.append((i, j))
        return out

    def to_dot(self, name: str = "strata") -> str:
        lines = ["digraph %s {" % name]
        for i, lab in enumerate(self.labels):
            lines.append('  s%d [label="%s"];' % (i, lab))
        for i, j in self.hasse():
            lines.append("  s%d -> s%d;" % (i, j))
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {
            "labels": [{"nu": {"t": list(l.nu.t), "eta": l.nu.eta}, "n": l.n} for l in self.labels],
            "hasse": [list(p) for p in self.hasse()],
        }


def special_strata(lam: CylindricalWeight, mu: CylindricalWeight) -> StrataPoset:
    """All (nu, n) with lambda >= nu >= nu - n delta >= mu+ and nu dominant."""
    c = _certificate(lam, mu)
    labels = []
    for v in product(*(range(x + 1) for x in c)):
        nu = lam.sub_roots(v)
        if not nu.is_dominant():
            continue
        slack = min(a - b for a, b in zip(c, v))
        for n in range(slack + 1):
            labels.append(StratumLabel(nu, n))
    labels.sort(key=lambda l: (sum(root_certificate(lam, l.nu)), l.nu.t, l.nu.eta, l.n))
    order = {(i, j): stratum_leq(a, b) for i, a in enumerate(labels) for j, b in enumerate(labels)}
    return StrataPoset(labels, order)


def dual_instance(lam: CylindricalWeight, mu: CylindricalWeight, w: int = 0) -> tuple:
    """(lambda^d, mu^d) = ((mu+)^!, lambda^!)."""
    return weight_dual(mu.dominant_representative(), w), weight_dual(lam, w)


def dual_label(label: StratumLabel, w: int = 0) -> StratumLabel:
    nu, n = strata_dual((label.nu, label.n), w)
    return StratumLabel(nu, n)


# ---------------------------------------------------------------------------
# cells (conjectural)

@dataclass
class CellPartition:
    side: str
    cells: list  # list of lists of node keys
    conjectural: bool = True


def cell_label(node: CrystalNode, side: str, schedule: Optional[Iterable[int]] = None) -> tuple:
    algebra = SLL if side == "left" else SLE
    string, _ = string_parameterization(node, algebra, schedule)
    return (node.sle_weight, node.sll_weight), string


def cell_partition(nodes: Iterable[CrystalNode], side: str = "right",
                   schedule: Optional[Iterable[int]] = None) -> CellPartition:
    """Group nodes by (joint weight, string): sl_l strings for left cells, sl_e for right."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    sched = tuple(schedule) if schedule is not None else None
    groups = {}
    for node in nodes:
        groups.setdefault(cell_label(node, side, sched), set()).add(node.key())
    cells = sorted(sorted(g) for g in groups.values())
    return CellPartition(side, cells, True)


def sle_highest_companion(node: CrystalNode, schedule: Optional[Iterable[int]] = None) -> tuple:
    """(b+, wt(b+)) by running the string schedule to exhaustion."""
    _, top = string_parameterization(node, SLE, schedule)
    return top, top.sle_weight
