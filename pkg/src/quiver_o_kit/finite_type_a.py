"""Finite type A specialization (v_0 = 0): 0/1 charge matrices and dual descriptors."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product

from .duality import ChargeMatrix, weights_from_matrix
from .partitions import Multipartition, core_from_column, dimension_vector


class NotZeroOne(ValueError):
    pass


def check_zero_one(u: ChargeMatrix) -> ChargeMatrix:
    if any(x not in (0, 1) for r in u.entries for x in r):
        raise NotZeroOne("expected a matrix with entries 0 and 1")
    return u


def multipartition_from_matrix(u: ChargeMatrix) -> Multipartition:
    """Row i is the bead pattern of the interesting rectangle of component i."""
    check_zero_one(u)
    return Multipartition(tuple(core_from_column(r, u.e) for r in u.entries), u.e)


def fits_box(mp: Multipartition) -> bool:
    """Component i fits inside an s_i x (e - s_i) box."""
    for comp in mp.components:
        s = comp.charge
        parts = comp.parts
        if len(parts) > s or (parts and parts[0] > mp.e - s):
            return False
    return True


def finite_dimension_vector(u: ChargeMatrix) -> tuple:
    """(v_1, ..., v_{e-1}) of the finite type A quiver; v_0 must vanish."""
    v = dimension_vector(multipartition_from_matrix(u))
    if v[0] != 0:
        raise ValueError("vertex 0 carries boxes; not a finite type A datum")
    return tuple(v[i] for i in range(1, u.e))


def zero_one_matrices(ell: int, e: int, s=None):
    """All l x e 0/1 matrices, optionally with prescribed row sums."""
    rows_by_sum = {}
    for k in range(e + 1):
        rows_by_sum[k] = [tuple(1 if j in c else 0 for j in range(e)) for c in combinations(range(e), k)]
    if s is None:
        choices = [sum(rows_by_sum.values(), []) for _ in range(ell)]
    else:
        choices = [rows_by_sum[x] for x in s]
    for rows in product(*choices):
        yield ChargeMatrix(rows)


def reversal(u: ChargeMatrix) -> ChargeMatrix:
    """U with rows and columns reversed, so s and t are both reversed."""
    return ChargeMatrix(tuple(tuple(reversed(r)) for r in reversed(u.entries)), u.w)


def longest_element(t) -> tuple:
    """w_0 on finite sl_e weights in t-coordinates: reverse the entries."""
    return tuple(reversed(tuple(t)))


@dataclass(frozen=True)
class Presentation:
    kind: str  # "quiver", "s3", "slice"
    params: tuple
    chamber: str  # "preferred" or "opposite"


@dataclass(frozen=True)
class FiniteDualDescriptor:
    matrix: ChargeMatrix
    chamber: str
    presentations: tuple
    reversed_presentations: tuple

    def to_json(self) -> dict:
        def pres(p):
            return {"kind": p.kind, "params": [list(x) if isinstance(x, tuple) else x for x in p.params],
                    "chamber": p.chamber}
        return {
            "U": [list(r) for r in self.matrix.entries],
            "w": self.matrix.w,
            "s": list(self.matrix.s),
            "t": list(self.matrix.t),
            "chamber": self.chamber,
            "dimension_vector": [dimension_vector(multipartition_from_matrix(self.matrix))[i]
                                 for i in range(self.matrix.e)],
            "presentations": [pres(p) for p in self.presentations],
            "reversed_presentations": [pres(p) for p in self.reversed_presentations],
        }


def _presentations(u: ChargeMatrix, chamber: str) -> tuple:
    lam, mu = weights_from_matrix(u)
    return (
        Presentation("quiver", (lam.t, mu.t), chamber),
        Presentation("s3", (u.t, u.s), chamber),
        Presentation("slice", (tuple(sorted(u.s, reverse=True)), u.t), chamber),
    )


def describe(u: ChargeMatrix, chamber: str = "preferred") -> FiniteDualDescriptor:
    check_zero_one(u)
    other = "opposite" if chamber == "preferred" else "preferred"
    # the reversed data carry the other chamber marker
    return FiniteDualDescriptor(u, chamber, _presentations(u, chamber), _presentations(reversal(u), other))


def finite_dual(d) -> FiniteDualDescriptor:
    """Transpose the matrix and swap the chamber marker."""
    if isinstance(d, ChargeMatrix):
        d = describe(d)
    other = "opposite" if d.chamber == "preferred" else "preferred"
    return describe(d.matrix.transpose(), other)
