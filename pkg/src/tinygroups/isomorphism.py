"""Isomorphism testing by invariant pruning plus generator-image backtracking."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .core import (
    CayleyTable,
    GroupHom,
    element_order,
    generator_tree,
    subgroup_generated,
)
from .core import is_normal as _is_normal
from .invariants import all_subgroups, center, fingerprint


@dataclass(frozen=True)
class IsoWitness:
    """A bijective homomorphism witnessing isomorphism."""

    mapping: GroupHom


@lru_cache(maxsize=None)
def minimal_generating_set(g: CayleyTable) -> tuple[int, ...]:
    """Smallest generating set, lexicographically first among the smallest.

    The identity is never part of a minimal set, so candidates are drawn
    from elements 1..n-1 in combination order.
    """
    n = g.order
    full = (1 << n) - 1
    for k in range(n):
        for combo in combinations(range(1, n), k):
            if subgroup_generated(g, combo).mask == full:
                return combo
    return tuple(range(1, n))  # unreachable: the whole set always generates


def find_isomorphism(g1: CayleyTable, g2: CayleyTable) -> IsoWitness | None:
    """First isomorphism in deterministic search order, or None.

    Fast path: unequal fingerprints cannot be isomorphic.  Otherwise
    backtrack over images of a minimal generating set of g1, restricted to
    g2 elements of matching order and centrality, in lexicographic order of
    the image tuple.
    """
    if g1.order != g2.order:
        return None
    if fingerprint(g1) != fingerprint(g2):
        return None
    n = g1.order
    gens = minimal_generating_set(g1)
    if not gens:
        return IsoWitness(GroupHom(1, 1, (0,)))
    tree, discovery = generator_tree(g1, gens)

    z1 = center(g1)
    z2 = center(g2)
    candidates = []
    for gen in gens:
        k = element_order(g1, gen)
        central = gen in z1
        candidates.append(
            tuple(
                b
                for b in range(1, n)
                if element_order(g2, b) == k and (b in z2) == central
            )
        )

    t1, t2 = g1.table, g2.table
    for images in product(*candidates):
        img = [-1] * n
        img[0] = 0
        for a in discovery[1:]:
            p, pos = tree[a]
            img[a] = t2[img[p]][images[pos]]
        if len(set(img)) != n:
            continue
        if all(
            img[t1[a][b]] == t2[img[a]][img[b]] for a in range(n) for b in range(n)
        ):
            return IsoWitness(GroupHom(n, n, tuple(img)))
    return None


def are_isomorphic(g1: CayleyTable, g2: CayleyTable) -> bool:
    return find_isomorphism(g1, g2) is not None


def is_nontrivial_semidirect(
    g: CayleyTable,
) -> tuple[bool, tuple | None]:
    """Split-extension test over the full subgroup lattice.

    Looks for proper nontrivial subgroups N (normal) and H with trivial
    intersection and |N|*|H| = |G|; the first witness in lattice order is
    returned as a (N, H) pair of subgroup masks.
    """
    n = g.order
    subs = all_subgroups(g)
    proper = [s for s in subs if 1 < s.size < n]
    for nsub in proper:
        if not _is_normal(g, nsub):
            continue
        want = n // nsub.size
        for h in proper:
            if h.size == want and nsub.mask & h.mask == 1:
                return True, (nsub, h)
    return False, None
