"""Finite groups as full multiplication tables, with 0-based element ids.

Element 0 is always the identity.  Every group in this package is small
(order at most 16 for the classification work, at most a few dozen for
anything else), so the full n x n table is the canonical representation
and all operations are plain table walks.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence


class GroupError(Exception):
    """Base class for all errors raised by this package."""


class TableValidationError(GroupError):
    """A raw multiplication table violates one of the group axioms."""

    axiom = "table"


class NotIdentityError(TableValidationError):
    """Row or column 0 is not the identity permutation."""

    axiom = "identity"

    def __init__(self, index: int):
        self.witness = (index,)
        super().__init__(f"element 0 is not an identity: failure at index {index}")


class NotLatinError(TableValidationError):
    """Some row or column repeats a value."""

    axiom = "latin"

    def __init__(self, kind: str, index: int, value: int):
        self.witness = (kind, index, value)
        super().__init__(f"{kind} {index} repeats value {value}")


class NotAssociativeError(TableValidationError):
    """(a*b)*c != a*(b*c) for the witness triple."""

    axiom = "associativity"

    def __init__(self, a: int, b: int, c: int):
        self.witness = (a, b, c)
        super().__init__(f"associativity fails at ({a}, {b}, {c})")


class NoInverseError(TableValidationError):
    """An element has no two-sided inverse."""

    axiom = "inverse"

    def __init__(self, a: int):
        self.witness = (a,)
        super().__init__(f"element {a} has no two-sided inverse")


class NotNormalError(GroupError):
    """A quotient was requested by a subgroup that is not normal."""


@dataclass(frozen=True)
class CayleyTable:
    """Immutable finite group: ``table[a][b]`` is the product a*b.

    Invariants (enforced by ``validate_table`` and preserved by every
    constructor in this package): element 0 is the identity, every row and
    column is a permutation of range(order), and the operation is
    associative.
    """

    order: int
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] | None = None

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.table[a].index(0)

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv(a), -k
        acc = 0
        for _ in range(k):
            acc = self.table[acc][a]
        return acc

    def elements(self) -> range:
        return range(self.order)

    def label(self, a: int) -> str:
        if self.labels is None:
            return str(a)
        return self.labels[a]

    def relabeled(self, perm: Sequence[int]) -> "CayleyTable":
        """Conjugate the table by a permutation of element ids (perm[0] must be 0)."""
        if perm[0] != 0:
            raise ValueError("relabeling must fix the identity")
        n = self.order
        rows = [[0] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                rows[perm[a]][perm[b]] = perm[self.table[a][b]]
        labels = None
        if self.labels is not None:
            out = [""] * n
            for a in range(n):
                out[perm[a]] = self.labels[a]
            labels = tuple(out)
        return CayleyTable(n, tuple(tuple(r) for r in rows), labels)


@dataclass(frozen=True)
class SubgroupMask:
    """A subgroup of a fixed parent group, stored as a bit mask of element ids."""

    parent_order: int
    mask: int

    @classmethod
    def from_elements(cls, parent_order: int, elems: Iterable[int]) -> "SubgroupMask":
        m = 0
        for a in elems:
            m |= 1 << a
        return cls(parent_order, m)

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def members(self) -> tuple[int, ...]:
        return tuple(a for a in range(self.parent_order) if self.mask >> a & 1)

    def __contains__(self, a: int) -> bool:
        return bool(self.mask >> a & 1)

    def union_elements(self, other: "SubgroupMask") -> tuple[int, ...]:
        m = self.mask | other.mask
        return tuple(a for a in range(self.parent_order) if m >> a & 1)

    def intersection(self, other: "SubgroupMask") -> "SubgroupMask":
        return SubgroupMask(self.parent_order, self.mask & other.mask)


@dataclass(frozen=True)
class CosetPartition:
    """Partition of a group into the cosets of a subgroup."""

    blocks: tuple[tuple[int, ...], ...]
    side: str  # "left" or "right"
    subgroup: SubgroupMask


@dataclass(frozen=True)
class GroupHom:
    """A map between groups given by the image of every source element."""

    source_order: int
    target_order: int
    image: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_homomorphism(self, source: CayleyTable, target: CayleyTable) -> bool:
        if self.image[0] != 0:
            return False
        for a in source.elements():
            for b in source.elements():
                if self.image[source.mul(a, b)] != target.mul(self.image[a], self.image[b]):
                    return False
        return True

    def is_bijective(self) -> bool:
        return (
            self.source_order == self.target_order
            and len(set(self.image)) == self.source_order
        )


def validate_table(raw: Sequence[Sequence[int]]) -> CayleyTable:
    """Check the group axioms on a raw table and wrap it.

    Axioms are checked in a fixed order (identity, Latin square,
    associativity, inverse) and the first violation is raised with a
    witness: NotIdentityError, NotLatinError, NotAssociativeError or
    NoInverseError.
    """
    n = len(raw)
    if n < 1:
        raise ValueError("table must have at least one row")
    rows = []
    for r, row in enumerate(raw):
        if len(row) != n:
            raise ValueError(f"row {r} has length {len(row)}, expected {n}")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"entry {v} in row {r} out of range [0, {n})")
        rows.append(tuple(int(v) for v in row))
    table = tuple(rows)

    for a in range(n):
        if table[0][a] != a or table[a][0] != a:
            raise NotIdentityError(a)
    for r in range(n):
        seen = 0
        for v in table[r]:
            if seen >> v & 1:
                raise NotLatinError("row", r, v)
            seen |= 1 << v
    for c in range(n):
        seen = 0
        for r in range(n):
            v = table[r][c]
            if seen >> v & 1:
                raise NotLatinError("col", c, v)
            seen |= 1 << v
    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            row_a = table[a]
            for c in range(n):
                if table[ab][c] != row_a[table[b][c]]:
                    raise NotAssociativeError(a, b, c)
    # Unreachable once the first three axioms hold on a finite table, but the
    # axiom is part of the validation contract.
    for a in range(n):
        if not any(table[a][x] == 0 and table[x][a] == 0 for x in range(n)):
            raise NoInverseError(a)
    return CayleyTable(n, table)


def multiply(g: CayleyTable, a: int, b: int) -> int:
    return g.table[a][b]


def element_order(g: CayleyTable, a: int) -> int:
    k, acc = 1, a
    while acc != 0:
        acc = g.table[acc][a]
        k += 1
    return k


def is_abelian(g: CayleyTable) -> bool:
    t = g.table
    return all(t[a][b] == t[b][a] for a in range(g.order) for b in range(a))


def is_cyclic(g: CayleyTable) -> bool:
    return any(element_order(g, a) == g.order for a in g.elements())


def subgroup_generated(g: CayleyTable, seeds: Iterable[int]) -> SubgroupMask:
    """Least subgroup containing the seeds (closure under product and inverse)."""
    members = {0}
    frontier = sorted(set(seeds) | {0})
    for a in frontier:
        members.add(a)
        members.add(g.inv(a))
    changed = True
    while changed:
        changed = False
        current = sorted(members)
        for a in current:
            row = g.table[a]
            for b in current:
                p = row[b]
                if p not in members:
                    members.add(p)
                    changed = True
    return SubgroupMask.from_elements(g.order, members)


def is_subgroup(g: CayleyTable, h: SubgroupMask) -> bool:
    if h.parent_order != g.order or 0 not in h:
        return False
    elems = h.members()
    return all(g.table[a][b] in h for a in elems for b in elems)


def is_normal(g: CayleyTable, h: SubgroupMask) -> bool:
    for x in g.elements():
        xi = g.inv(x)
        for a in h.members():
            if g.table[g.table[x][a]][xi] not in h:
                return False
    return True


def cosets(g: CayleyTable, h: SubgroupMask, side: str = "left") -> CosetPartition:
    """Partition into left cosets aH or right cosets Ha, blocks ordered by minimum."""
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    elems = h.members()
    seen = 0
    blocks = []
    for a in g.elements():
        if seen >> a & 1:
            continue
        if side == "left":
            block = sorted(g.table[a][x] for x in elems)
        else:
            block = sorted(g.table[x][a] for x in elems)
        for b in block:
            seen |= 1 << b
        blocks.append(tuple(block))
    return CosetPartition(tuple(blocks), side, h)


def quotient(g: CayleyTable, nsub: SubgroupMask) -> tuple[CayleyTable, GroupHom]:
    """Quotient by a normal subgroup, with the canonical projection.

    Coset representatives are the minimum element id of each coset; the
    coset of the identity gets index 0.  Labels are "<representative>N".
    """
    if not is_normal(g, nsub):
        raise NotNormalError("subgroup is not normal")
    part = cosets(g, nsub, "left")
    reps = [block[0] for block in part.blocks]
    block_of = [0] * g.order
    for i, block in enumerate(part.blocks):
        for a in block:
            block_of[a] = i
    m = len(reps)
    rows = tuple(
        tuple(block_of[g.table[reps[i]][reps[j]]] for j in range(m)) for i in range(m)
    )
    labels = tuple(f"{g.label(r)}N" for r in reps)
    q = CayleyTable(m, rows, labels)
    hom = GroupHom(g.order, m, tuple(block_of))
    return q, hom


def product_set(g: CayleyTable, h: SubgroupMask, k: SubgroupMask) -> frozenset[int]:
    """The raw product set HK = {h*k}, which need not be a subgroup."""
    return frozenset(g.table[a][b] for a in h.members() for b in k.members())


def subgroup_table(g: CayleyTable, h: SubgroupMask) -> CayleyTable:
    """The subgroup as a group in its own right (members renumbered in order)."""
    elems = h.members()
    index = {a: i for i, a in enumerate(elems)}
    rows = tuple(tuple(index[g.table[a][b]] for b in elems) for a in elems)
    labels = tuple(g.label(a) for a in elems) if g.labels is not None else None
    return CayleyTable(len(elems), rows, labels)


def trivial_group() -> CayleyTable:
    return CayleyTable(1, ((0,),), ("e",))


def generator_tree(
    g: CayleyTable, gens: Sequence[int]
) -> tuple[list[tuple[int, int]], list[int]]:
    """Spanning tree of the group over a generating set.

    Returns, per element, a (parent element, generator position) pair plus
    the breadth-first discovery order; the identity's entry is (-1, -1).
    Raises ValueError when the given elements do not generate.
    """
    n = g.order
    tree: list[tuple[int, int] | None] = [None] * n
    tree[0] = (-1, -1)
    queue = [0]
    discovery = [0]
    while queue:
        cur = queue.pop(0)
        for pos, gen in enumerate(gens):
            child = g.table[cur][gen]
            if tree[child] is None:
                tree[child] = (cur, pos)
                queue.append(child)
                discovery.append(child)
    if any(t is None for t in tree):
        raise ValueError("generators do not generate the group")
    return tree, discovery  # type: ignore[return-value]


def to_json_dict(g: CayleyTable) -> dict:
    """Serialize to the interchange format: order, row-major flat table, labels."""
    flat = [v for row in g.table for v in row]
    return {
        "order": g.order,
        "table": flat,
        "labels": list(g.labels) if g.labels is not None else None,
    }


def from_json_dict(data: dict) -> CayleyTable:
    n = int(data["order"])
    flat = data["table"]
    if len(flat) != n * n:
        raise ValueError(f"table has {len(flat)} entries, expected {n * n}")
    raw = [flat[r * n : (r + 1) * n] for r in range(n)]
    g = validate_table(raw)
    labels = data.get("labels")
    if labels is not None:
        if len(labels) != n:
            raise ValueError(f"labels has {len(labels)} entries, expected {n}")
        g = CayleyTable(g.order, g.table, tuple(str(s) for s in labels))
    return g


def to_json(g: CayleyTable) -> str:
    return json.dumps(to_json_dict(g), sort_keys=True, separators=(",", ":"))


def from_json(text: str) -> CayleyTable:
    return from_json_dict(json.loads(text))
