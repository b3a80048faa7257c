"""Partitions, charges, abaci and ribbons.

Conventions used throughout the package:

* box (i, j) sits in row i, column j (both 1-indexed);
* the content of a box in a component of charge s is s + j - i;
* the beta-set of a charged partition is {p_i + s - i : i >= 1}, so adding a
  box of content c moves a bead from c - 1 to c.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Optional


@dataclass(frozen=True)
class Partition:
    parts: tuple = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        if any(p <= 0 for p in parts):
            raise ValueError("parts must be positive: %r" % (parts,))
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError("parts must be weakly decreasing: %r" % (parts,))
        object.__setattr__(self, "parts", parts)

    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def part(self, i: int) -> int:
        """Row length of row i (1-indexed); zero past the end."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def boxes(self) -> Iterator[tuple]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def conjugate(self) -> "Partition":
        if not self.parts:
            return self
        return Partition(tuple(sum(1 for p in self.parts if p >= j) for j in range(1, self.parts[0] + 1)))

    def contains(self, other: "Partition") -> bool:
        return len(other) <= len(self) and all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))


@dataclass(frozen=True)
class ChargedPartition:
    partition: Partition = Partition()
    charge: int = 0

    @classmethod
    def of(cls, parts=(), charge: int = 0) -> "ChargedPartition":
        return cls(Partition(tuple(parts)), int(charge))

    @property
    def parts(self) -> tuple:
        return self.partition.parts

    def content(self, box: tuple) -> int:
        i, j = box
        return self.charge + j - i

    def residue(self, box: tuple, e: int) -> int:
        return self.content(box) % e

    def size(self) -> int:
        return self.partition.size()

    def boxes(self):
        return self.partition.boxes()

    def contents(self) -> list:
        return [self.content(b) for b in self.boxes()]

    def beta_set(self) -> "AbacusRow":
        return beta_set(self)


@dataclass(frozen=True)
class Multipartition:
    components: tuple
    e: int

    def __post_init__(self):
        comps = tuple(self.components)
        if not comps:
            raise ValueError("a multipartition needs at least one component")
        if self.e < 1:
            raise ValueError("e must be >= 1")
        object.__setattr__(self, "components", comps)

    @classmethod
    def of(cls, parts_list, charges, e: int) -> "Multipartition":
        if len(parts_list) != len(charges):
            raise ValueError("one charge per component is required")
        return cls(tuple(ChargedPartition.of(p, s) for p, s in zip(parts_list, charges)), e)

    @property
    def level(self) -> int:
        return len(self.components)

    @property
    def charges(self) -> tuple:
        return tuple(c.charge for c in self.components)

    def size(self) -> int:
        return sum(c.size() for c in self.components)

    def abacus(self) -> "Abacus":
        return Abacus(tuple(beta_set(c) for c in self.components))


def dimension_vector(m: Multipartition, w: int = 0) -> dict:
    """Number of boxes of each residue mod e, shifted by w."""
    v = {i: w for i in range(m.e)}
    for comp in m.components:
        for c in comp.contents():
            v[c % m.e] += 1
    return v


# ---------------------------------------------------------------------------
# abacus rows

@dataclass(frozen=True)
class AbacusRow:
    """A bead configuration on one runner of integers.

    Occupied set = ({x < offset} minus removed) union added. The form is
    normalized: added lies in [offset, inf), removed in (-inf, offset), and
    the offset equals the charge, so |added| == |removed|.
    """
    offset: int
    added: frozenset = frozenset()
    removed: frozenset = frozenset()

    def __post_init__(self):
        added = frozenset(int(x) for x in self.added)
        removed = frozenset(int(x) for x in self.removed)
        if any(x < self.offset for x in added) or any(x >= self.offset for x in removed):
            raise ValueError("row is not in normal form")
        if len(added) != len(removed):
            raise ValueError("row is not in normal form (offset must be the charge)")
        object.__setattr__(self, "added", added)
        object.__setattr__(self, "removed", removed)

    @classmethod
    def vacuum(cls, charge: int = 0) -> "AbacusRow":
        return cls(charge)

    @classmethod
    def from_beads(cls, beads: Iterable[int], floor: int) -> "AbacusRow":
        """Row occupied by `beads` together with every position < floor."""
        occ = set(int(b) for b in beads if b >= floor)

        def filled(x):
            return x < floor or x in occ

        lo = min(floor, 0)
        hi = max(max(occ, default=floor), floor, 0) + 1
        # charge = (#beads at x >= 0) - (#gaps at x < 0)
        charge = sum(1 for x in range(0, hi) if filled(x)) - sum(1 for x in range(lo, 0) if not filled(x))
        added = frozenset(x for x in range(charge, hi) if filled(x))
        removed = frozenset(x for x in range(min(floor, charge), charge) if not filled(x))
        return cls(charge, added, removed)

    @property
    def charge(self) -> int:
        return self.offset

    def occupied(self, x: int) -> bool:
        if x < self.offset:
            return x not in self.removed
        return x in self.added

    def min_interesting(self) -> int:
        """Every position below this is occupied."""
        return min(self.removed, default=self.offset)

    def max_interesting(self) -> int:
        """Every position at or above this is empty."""
        return max(self.added, default=self.offset - 1) + 1

    def beads_from(self, lower: int) -> list:
        """Occupied positions >= lower, decreasing."""
        hi = self.max_interesting()
        return [x for x in range(hi - 1, lower - 1, -1) if self.occupied(x)]

    def beads(self, count: int) -> list:
        """The `count` largest bead positions."""
        out = []
        x = self.max_interesting() - 1
        while len(out) < count:
            if self.occupied(x):
                out.append(x)
            x -= 1
        return out

    def displaced(self) -> int:
        return len(self.added)

    def move(self, src: int, dst: int) -> "AbacusRow":
        if not self.occupied(src) or self.occupied(dst):
            raise ValueError("illegal bead move %d -> %d" % (src, dst))
        return self.toggled({src: False, dst: True})

    def toggled(self, changes: dict) -> "AbacusRow":
        """Set occupancy of some positions; the charge may change."""
        lo = min([self.min_interesting()] + list(changes))
        hi = max([self.max_interesting()] + [x + 1 for x in changes])
        occ = {x for x in range(lo, hi) if self.occupied(x)}
        for x, flag in changes.items():
            if flag:
                occ.add(x)
            else:
                occ.discard(x)
        return AbacusRow.from_beads(occ, lo)

    def to_charged_partition(self) -> ChargedPartition:
        s = self.offset
        beads = self.beads_from(self.min_interesting())
        parts = []
        for i, b in enumerate(beads, start=1):
            p = b - s + i
            if p <= 0:
                break
            parts.append(p)
        return ChargedPartition(Partition(tuple(parts)), s)

    def to_json(self) -> dict:
        return {"offset": self.offset, "added": sorted(self.added), "removed": sorted(self.removed)}

    @classmethod
    def from_json(cls, d: dict) -> "AbacusRow":
        return cls(int(d["offset"]), frozenset(d.get("added", ())), frozenset(d.get("removed", ())))


def beta_set(p: ChargedPartition, row_count_hint: Optional[int] = None) -> AbacusRow:
    """Abacus row of a charged partition: beads at p_i + s - i.

    With `row_count_hint` the bead list is not needed; the hint is accepted
    for callers that want to force at least that many explicit beads via
    AbacusRow.beads.
    """
    s = p.charge
    n = len(p.parts)
    beads = {p.partition.part(i) + s - i for i in range(1, n + 1)}
    return AbacusRow.from_beads(beads, s - n)


def beta_numbers(p: ChargedPartition, count: int) -> list:
    """The first `count` beta numbers, decreasing."""
    return [p.partition.part(i) + p.charge - i for i in range(1, count + 1)]


@dataclass(frozen=True)
class Abacus:
    """An l-row abacus; rows[0] is row 1 (the bottom row)."""
    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))

    @classmethod
    def vacuum(cls, charges) -> "Abacus":
        return cls(tuple(AbacusRow.vacuum(c) for c in charges))

    @property
    def level(self) -> int:
        return len(self.rows)

    def occupied(self, x: int, r: int) -> bool:
        """Occupancy of position x in row r (1-indexed)."""
        return self.rows[r - 1].occupied(x)

    def charges(self) -> tuple:
        return tuple(row.offset for row in self.rows)

    def total_charge(self) -> int:
        return sum(self.charges())

    def window(self) -> tuple:
        lo = min(row.min_interesting() for row in self.rows)
        hi = max(row.max_interesting() for row in self.rows)
        return lo, hi

    def to_multipartition(self, e: int) -> Multipartition:
        return Multipartition(tuple(row.to_charged_partition() for row in self.rows), e)

    def key(self) -> str:
        """Canonical text serialization, used as a node id."""
        return "|".join(
            "%d:%s:%s" % (r.offset, ",".join(map(str, sorted(r.added))), ",".join(map(str, sorted(r.removed))))
            for r in self.rows
        )

    def to_json(self) -> dict:
        return {"rows": [r.to_json() for r in self.rows]}

    @classmethod
    def from_json(cls, d: dict) -> "Abacus":
        return cls(tuple(AbacusRow.from_json(r) for r in d["rows"]))

    def render(self, lo: Optional[int] = None, hi: Optional[int] = None) -> str:
        """Text picture, top row first; '*' bead, '.' gap."""
        wlo, whi = self.window()
        lo = wlo if lo is None else lo
        hi = whi if hi is None else hi
        lines = []
        for r in range(self.level, 0, -1):
            lines.append("".join("*" if self.occupied(x, r) else "." for x in range(lo, hi)))
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# boxes and ribbons

def addable_boxes(p: Partition) -> list:
    out = []
    n = len(p)
    for i in range(1, n + 2):
        j = p.part(i) + 1
        if i == 1 or p.part(i - 1) >= j:
            out.append((i, j))
    return out


def removable_boxes(p: Partition) -> list:
    return [(i, p.part(i)) for i in range(1, len(p) + 1) if p.part(i + 1) < p.part(i)]


def addable_removable(p: ChargedPartition, i: int, e: int) -> tuple:
    """Addable and removable boxes of p whose residue is i mod e."""
    add = [b for b in addable_boxes(p.partition) if p.residue(b, e) == i % e]
    rem = [b for b in removable_boxes(p.partition) if p.residue(b, e) == i % e]
    return add, rem


@dataclass(frozen=True)
class RibbonSpec:
    """A ribbon of `length` boxes whose lowest content has the given residue.

    The residue may be None to allow any starting residue. A ribbon with
    start residue a and length L = k - a + 1 + m*e corresponds to the affine
    root alpha_a + ... + alpha_k + m*delta.
    """
    residue: Optional[int]
    length: int
    e: Optional[int] = None

    def __post_init__(self):
        if self.length < 1:
            raise ValueError("ribbon length must be positive")

    @classmethod
    def from_root(cls, k_start: int, k_end: int, m: int, e: int) -> "RibbonSpec":
        """Ribbon for alpha_{k_start} + ... + alpha_{k_end} + m delta."""
        return cls(k_start % e, k_end - k_start + 1 + m * e, e)

    def matches(self, start_content: int) -> bool:
        if self.residue is None:
            return True
        if self.e is None:
            return start_content == self.residue
        return (start_content - self.residue) % self.e == 0


def removable_ribbons(p: ChargedPartition, length: int, residue: Optional[int] = None, e: Optional[int] = None) -> list:
    """All results of removing a ribbon of the given length (bead slides).

    Returns a list of (start_content, resulting ChargedPartition), highest
    bead first.
    """
    spec = RibbonSpec(residue, length, e)
    row = beta_set(p)
    out = []
    for b in row.beads_from(row.min_interesting() - length):
        if not row.occupied(b - length):
            start = b - length + 1
            if spec.matches(start):
                out.append((start, row.move(b, b - length).to_charged_partition()))
    return out


def remove_ribbon(p: ChargedPartition, spec: RibbonSpec) -> Optional[ChargedPartition]:
    """Remove one ribbon matching spec, or None when there is none."""
    found = removable_ribbons(p, spec.length, spec.residue, spec.e)
    return found[0][1] if found else None


def addable_ribbons(p: ChargedPartition, length: int) -> list:
    """(start_content, result) for every ribbon of the given length that can be added."""
    row = beta_set(p)
    out = []
    for b in row.beads_from(row.min_interesting() - length):
        if not row.occupied(b + length):
            out.append((b + 1, row.move(b, b + length).to_charged_partition()))
    return out


def e_core(p: ChargedPartition, e: int) -> ChargedPartition:
    """Strip e-ribbons until none remain."""
    if e < 1:
        raise ValueError("e must be >= 1")
    cur = p
    while True:
        nxt = remove_ribbon(cur, RibbonSpec(None, e))
        if nxt is None:
            return cur
        cur = nxt


def e_weight(p: ChargedPartition, e: int) -> int:
    return (p.size() - e_core(p, e).size()) // e


def core_from_column(u: Iterable[int], e: Optional[int] = None) -> ChargedPartition:
    """The charged e-core whose runner k (positions = k-1 mod e) is full below level u_k."""
    u = tuple(int(x) for x in u)
    if e is None:
        e = len(u)
    if len(u) != e:
        raise ValueError("expected %d runner levels" % e)
    lo = min(min(u), 0) * e - e
    beads = {m * e + (k - 1) for k in range(1, e + 1) for m in range(lo // e - 1, u[k - 1])}
    return AbacusRow.from_beads(beads, lo).to_charged_partition()


def runner_levels(p: ChargedPartition, e: int) -> tuple:
    """Inverse of core_from_column on e-cores: bead count per runner relative to vacuum."""
    row = beta_set(p)
    lo = min(row.min_interesting(), 0)
    lo -= lo % e
    hi = max(row.max_interesting(), 0) + e
    out = []
    for k in range(1, e + 1):
        level = 0
        for x in range(lo + (k - 1), hi, e):
            if x >= 0 and row.occupied(x):
                level += 1
            elif x < 0 and not row.occupied(x):
                level -= 1
        out.append(level)
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration helpers

@lru_cache(maxsize=None)
def partitions_of(n: int, max_part: Optional[int] = None) -> tuple:
    """All partitions of n (as tuples), largest part first."""
    if max_part is None:
        max_part = n
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def partitions_up_to(n: int) -> Iterator[tuple]:
    for k in range(n + 1):
        yield from partitions_of(k)


def residue_counts(parts: tuple, charge: int, e: int) -> tuple:
    v = [0] * e
    for i, p in enumerate(parts, start=1):
        for j in range(1, p + 1):
            v[(charge + j - i) % e] += 1
    return tuple(v)


class EnumerationCapExceeded(RuntimeError):
    pass


def multipartitions_with_residues(charges, e: int, v, cap: Optional[int] = None) -> list:
    """All multipartitions with the given charges and residue counts v (v[i] for i mod e)."""
    v = tuple(v)
    if any(x < 0 for x in v):
        return []
    total = sum(v)
    per_comp = []
    for s in charges:
        opts = []
        for parts in partitions_up_to(total):
            rc = residue_counts(parts, s, e)
            if all(a <= b for a, b in zip(rc, v)):
                opts.append((parts, rc))
        per_comp.append(opts)
    out = []

    def rec(k, remaining, chosen):
        if k == len(per_comp):
            if not any(remaining):
                out.append(Multipartition.of(chosen, charges, e))
                if cap is not None and len(out) > cap:
                    raise EnumerationCapExceeded("more than %d fixed points" % cap)
            return
        for parts, rc in per_comp[k]:
            if all(a <= b for a, b in zip(rc, remaining)):
                rec(k + 1, tuple(b - a for a, b in zip(rc, remaining)), chosen + [parts])

    rec(0, v, [])
    return out


def all_multipartitions(charges, e: int, max_boxes: int) -> Iterator[Multipartition]:
    n = len(charges)
    for sizes in product(range(max_boxes + 1), repeat=n):
        if sum(sizes) > max_boxes:
            continue
        for combo in product(*(partitions_of(k) for k in sizes)):
            yield Multipartition.of(combo, charges, e)
