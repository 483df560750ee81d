"""Structural invariants: center, conjugacy, derived subgroup, subgroup lattice.

Everything here is a pure function of an immutable ``CayleyTable``; the
expensive ones are memoized, keyed on the table itself.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .core import (
    CayleyTable,
    SubgroupMask,
    element_order,
    is_abelian,
    quotient,
    subgroup_generated,
)
from .core import is_normal as _is_normal


@dataclass(frozen=True)
class ClassEquation:
    """|G| = center_size + sum of the conjugation orbit sizes above 1."""

    center_size: int
    orbit_sizes: tuple[int, ...]


@dataclass(frozen=True, order=True)
class Fingerprint:
    """Isomorphism-invariant summary; equality is necessary, never sufficient.

    Field order is fixed and comparison is lexicographic, so fingerprints can
    serve as deterministic pre-filter keys.  Histograms are ascending
    (value, count) tuples.
    """

    order: int
    element_orders: tuple[tuple[int, int], ...]
    center_size: int
    center_orders: tuple[tuple[int, int], ...]
    derived_size: int
    abelianization_orders: tuple[tuple[int, int], ...]
    class_sizes: tuple[int, ...]
    subgroup_counts: tuple[tuple[int, int], ...]


@lru_cache(maxsize=None)
def center(g: CayleyTable) -> SubgroupMask:
    t = g.table
    members = [
        h
        for h in g.elements()
        if all(t[h][x] == t[x][h] for x in g.elements())
    ]
    return SubgroupMask.from_elements(g.order, members)


def centralizer(g: CayleyTable, h: int) -> SubgroupMask:
    t = g.table
    return SubgroupMask.from_elements(
        g.order, (x for x in g.elements() if t[x][h] == t[h][x])
    )


@lru_cache(maxsize=None)
def conjugacy_classes(g: CayleyTable) -> tuple[tuple[tuple[int, ...], ...], ClassEquation]:
    """Orbits of conjugation, ordered by minimum element; plus the class equation."""
    t = g.table
    seen = 0
    classes = []
    for a in g.elements():
        if seen >> a & 1:
            continue
        orbit = sorted({t[t[x][a]][g.inv(x)] for x in g.elements()})
        for b in orbit:
            seen |= 1 << b
        classes.append(tuple(orbit))
    center_size = sum(1 for c in classes if len(c) == 1)
    orbit_sizes = tuple(sorted(len(c) for c in classes if len(c) > 1))
    return tuple(classes), ClassEquation(center_size, orbit_sizes)


@lru_cache(maxsize=None)
def derived_subgroup(g: CayleyTable) -> SubgroupMask:
    """Smallest subgroup containing all commutators a*b*a^-1*b^-1."""
    t = g.table
    comms = {
        t[t[t[a][b]][g.inv(a)]][g.inv(b)]
        for a in g.elements()
        for b in g.elements()
    }
    return subgroup_generated(g, comms)


def verify_derived_minimal(g: CayleyTable) -> tuple[bool, tuple[SubgroupMask, ...]]:
    """Check the derived subgroup sits inside every normal subgroup with
    abelian quotient; the certificate lists those subgroups."""
    d = derived_subgroup(g)
    witnesses = []
    ok = True
    for h in all_subgroups(g):
        if not _is_normal(g, h):
            continue
        q, _ = quotient(g, h)
        if not is_abelian(q):
            continue
        witnesses.append(h)
        if d.mask & ~h.mask:
            ok = False
    return ok, tuple(witnesses)


@lru_cache(maxsize=None)
def all_subgroups(g: CayleyTable) -> tuple[SubgroupMask, ...]:
    """Every subgroup, by join saturation from the cyclic subgroups.

    Starts with all <a>, then repeatedly closes unions of pairs until no new
    subgroup appears; complete because every subgroup is a join of cyclic
    ones.  Result is sorted by (order, mask).
    """
    found = {subgroup_generated(g, (a,)).mask for a in g.elements()}
    frontier = set(found)
    while frontier:
        fresh = set()
        current = sorted(found)
        for m1 in sorted(frontier):
            for m2 in current:
                if m1 | m2 in found or m1 | m2 in fresh:
                    continue
                joined = subgroup_generated(
                    g, (a for a in g.elements() if (m1 | m2) >> a & 1)
                ).mask
                if joined not in found:
                    fresh.add(joined)
        found |= fresh
        frontier = fresh
    masks = sorted(found, key=lambda m: (m.bit_count(), m))
    return tuple(SubgroupMask(g.order, m) for m in masks)


def subgroups_containing(g: CayleyTable, h: SubgroupMask) -> tuple[SubgroupMask, ...]:
    return tuple(s for s in all_subgroups(g) if h.mask & ~s.mask == 0)


def correspondence_check(g: CayleyTable, nsub: SubgroupMask) -> bool:
    """Subgroups of G over nsub must biject with subgroups of G/nsub,
    verified extensionally in both directions."""
    q, hom = quotient(g, nsub)
    over = subgroups_containing(g, nsub)
    below = all_subgroups(q)
    below_masks = {s.mask for s in below}
    over_masks = {s.mask for s in over}
    images = set()
    for s in over:
        image = 0
        for a in s.members():
            image |= 1 << hom(a)
        if image not in below_masks:
            return False
        images.add(image)
    if len(images) != len(over):
        return False
    for s in below:
        pre_mask = 0
        for a in g.elements():
            if hom(a) in s:
                pre_mask |= 1 << a
        if pre_mask not in over_masks:
            return False
    return len(over) == len(below)


@lru_cache(maxsize=None)
def order_profile(g: CayleyTable) -> tuple[tuple[int, int], ...]:
    """Histogram of element orders, as ascending (order, count) pairs."""
    counts: dict[int, int] = {}
    for a in g.elements():
        k = element_order(g, a)
        counts[k] = counts.get(k, 0) + 1
    return tuple(sorted(counts.items()))


def order_profile_dict(g: CayleyTable) -> dict[int, int]:
    return dict(order_profile(g))


@lru_cache(maxsize=None)
def fingerprint(g: CayleyTable) -> Fingerprint:
    from .core import subgroup_table

    z = center(g)
    d = derived_subgroup(g)
    classes, _ = conjugacy_classes(g)
    ab, _ = quotient(g, d)
    subs = all_subgroups(g)
    sub_counts: dict[int, int] = {}
    for s in subs:
        sub_counts[s.size] = sub_counts.get(s.size, 0) + 1
    class_sizes = tuple(sorted(len(c) for c in classes))
    return Fingerprint(
        order=g.order,
        element_orders=order_profile(g),
        center_size=z.size,
        center_orders=order_profile(subgroup_table(g, z)),
        derived_size=d.size,
        abelianization_orders=order_profile(ab),
        class_sizes=class_sizes,
        subgroup_counts=tuple(sorted(sub_counts.items())),
    )


def small_group_type(g: CayleyTable, h: SubgroupMask) -> str:
    """Isomorphism class name of a subgroup of order at most 4.

    At these orders the class is determined by the size and the presence of
    an element of order 4.
    """
    size = h.size
    if size == 1:
        return "Z₁"
    if size == 2:
        return "Z₂"
    if size == 3:
        return "Z₃"
    if size == 4:
        if any(element_order(g, a) == 4 for a in h.members()):
            return "Z₄"
        return "Z₂×Z₂"
    raise ValueError(f"no small-type name for a subgroup of order {size}")


def center_type(g: CayleyTable) -> str:
    """Name of the center's isomorphism class; "G" when the group is abelian."""
    z = center(g)
    if z.size == g.order:
        return "G"
    return small_group_type(g, z)


def invariant_report(g: CayleyTable) -> dict:
    """JSON-ready summary of the invariants of one group."""
    z = center(g)
    d = derived_subgroup(g)
    _, eq = conjugacy_classes(g)
    subs = all_subgroups(g)
    sub_counts: dict[int, int] = {}
    for s in subs:
        sub_counts[s.size] = sub_counts.get(s.size, 0) + 1
    return {
        "order": g.order,
        "center": {
            "size": z.size,
            "type": center_type(g),
            "members": list(z.members()),
        },
        "derived": {"size": d.size, "members": list(d.members())},
        "class_equation": {
            "center_size": eq.center_size,
            "orbit_sizes": list(eq.orbit_sizes),
        },
        "order_profile": {str(k): v for k, v in order_profile(g)},
        "subgroup_counts": {str(k): v for k, v in sorted(sub_counts.items())},
    }
