"""Group constructions without presentations: cyclic groups, direct and
semidirect products, and automorphism-group computation."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product as iproduct

from .core import CayleyTable, GroupError, element_order, generator_tree
from .isomorphism import minimal_generating_set


class ActionNotHomomorphismError(GroupError):
    """The acting map of a semidirect product is not a homomorphism."""

    def __init__(self, h1: int, h2: int):
        self.witness = (h1, h2)
        super().__init__(
            f"action is not a homomorphism: fails on acting pair ({h1}, {h2})"
        )


@dataclass(frozen=True)
class AutMap:
    """An automorphism of a fixed group, as a permutation of element ids."""

    group_order: int
    perm: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.perm[a]

    def compose(self, other: "AutMap") -> "AutMap":
        return AutMap(self.group_order, tuple(self.perm[x] for x in other.perm))

    def inverse(self) -> "AutMap":
        inv = [0] * self.group_order
        for i, j in enumerate(self.perm):
            inv[j] = i
        return AutMap(self.group_order, tuple(inv))

    @classmethod
    def identity(cls, group_order: int) -> "AutMap":
        return cls(group_order, tuple(range(group_order)))


def is_automorphism(g: CayleyTable, perm: tuple[int, ...]) -> bool:
    if len(perm) != g.order or len(set(perm)) != g.order or perm[0] != 0:
        return False
    t = g.table
    return all(
        perm[t[a][b]] == t[perm[a]][perm[b]]
        for a in g.elements()
        for b in g.elements()
    )


@dataclass(frozen=True)
class SdpSpec:
    """Data of a semidirect product N x| H: the acting group H, the normal
    part N, and one automorphism of N per element of H."""

    normal_part: CayleyTable
    acting_part: CayleyTable
    action: tuple[AutMap, ...]

    def validate(self) -> None:
        h = self.acting_part
        if len(self.action) != h.order:
            raise ValueError("action must assign one automorphism per acting element")
        for phi in self.action:
            if not is_automorphism(self.normal_part, phi.perm):
                raise ValueError("action value is not an automorphism of the normal part")
        if self.action[0].perm != AutMap.identity(self.normal_part.order).perm:
            raise ActionNotHomomorphismError(0, 0)
        for h1 in h.elements():
            for h2 in h.elements():
                if self.action[h.mul(h1, h2)].perm != self.action[h1].compose(self.action[h2]).perm:
                    raise ActionNotHomomorphismError(h1, h2)


def cyclic(n: int) -> CayleyTable:
    """Addition mod n, element k at index k."""
    if n < 1:
        raise ValueError(f"cyclic group order must be positive, got {n}")
    rows = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return CayleyTable(n, rows, tuple(str(k) for k in range(n)))


def direct_product(g1: CayleyTable, g2: CayleyTable) -> CayleyTable:
    """Componentwise product; the pair (a, b) sits at index a*|G2| + b."""
    n1, n2 = g1.order, g2.order
    n = n1 * n2
    rows = [[0] * n for _ in range(n)]
    for a1 in range(n1):
        for b1 in range(n2):
            i = a1 * n2 + b1
            for a2 in range(n1):
                for b2 in range(n2):
                    rows[i][a2 * n2 + b2] = g1.table[a1][a2] * n2 + g2.table[b1][b2]
    labels = tuple(
        f"({g1.label(a)},{g2.label(b)})" for a in range(n1) for b in range(n2)
    )
    return CayleyTable(n, tuple(tuple(r) for r in rows), labels)


def semidirect_product(spec: SdpSpec) -> CayleyTable:
    """Product on N x H twisted by the action:
    (n1, h1)*(n2, h2) = (n1 * action[h1](n2), h1*h2), index (n, h) = n*|H| + h."""
    spec.validate()
    gn, gh = spec.normal_part, spec.acting_part
    nn, nh = gn.order, gh.order
    n = nn * nh
    rows = [[0] * n for _ in range(n)]
    for n1 in range(nn):
        for h1 in range(nh):
            i = n1 * nh + h1
            phi = spec.action[h1]
            for n2 in range(nn):
                twisted = gn.table[n1][phi(n2)]
                for h2 in range(nh):
                    rows[i][n2 * nh + h2] = twisted * nh + gh.table[h1][h2]
    labels = tuple(
        f"({gn.label(a)},{gh.label(b)})" for a in range(nn) for b in range(nh)
    )
    return CayleyTable(n, tuple(tuple(r) for r in rows), labels)


@lru_cache(maxsize=None)
def automorphism_group(g: CayleyTable) -> tuple[AutMap, ...]:
    """All automorphisms, by backtracking over images of a minimal generating
    set; returned in lexicographic order of the permutation arrays."""
    gens = minimal_generating_set(g)
    if not gens:
        return (AutMap.identity(1),)
    tree, discovery = generator_tree(g, gens)
    n = g.order
    candidates = []
    for gen in gens:
        k = element_order(g, gen)
        candidates.append(
            tuple(b for b in range(1, n) if element_order(g, b) == k)
        )
    t = g.table
    found = []
    for images in iproduct(*candidates):
        img = [-1] * n
        img[0] = 0
        for a in discovery[1:]:
            p, pos = tree[a]
            img[a] = t[img[p]][images[pos]]
        if len(set(img)) != n:
            continue
        if all(img[t[a][b]] == t[img[a]][img[b]] for a in range(n) for b in range(n)):
            found.append(tuple(img))
    return tuple(AutMap(n, perm) for perm in sorted(found))


def aut_from_images(g: CayleyTable, images: dict[int, int]) -> AutMap:
    """Complete generator images to a full automorphism permutation.

    ``images`` maps a generating set of g (element ids) to element ids; the
    extension must be a bijective homomorphism or ValueError is raised.
    """
    gens = tuple(sorted(images))
    tree, discovery = generator_tree(g, gens)
    n = g.order
    t = g.table
    img = [-1] * n
    img[0] = 0
    for a in discovery[1:]:
        p, pos = tree[a]
        img[a] = t[img[p]][images[gens[pos]]]
    perm = tuple(img)
    if not is_automorphism(g, perm):
        raise ValueError(f"generator images {images} do not extend to an automorphism")
    return AutMap(n, perm)


def cyclic_action_spec(normal_part: CayleyTable, h_order: int, phi: AutMap) -> SdpSpec:
    """Action of a cyclic acting group generated by one automorphism: the
    acting element k acts by phi^k."""
    action = [AutMap.identity(normal_part.order)]
    for _ in range(1, h_order):
        action.append(phi.compose(action[-1]))
    return SdpSpec(normal_part, cyclic(h_order), tuple(action))


def klein_group() -> CayleyTable:
    return direct_product(cyclic(2), cyclic(2))


def catalog_actions() -> dict[str, SdpSpec]:
    """The five twisting actions used by the order-16 catalog constructions.

    Keys name the resulting products:
      klein_by_z4      Z4 acting on Z2xZ2, generator fixes (1,0), sends (0,1) to (1,1)
      z4xz2_by_z2      Z2 acting on Z4xZ2, generator fixes (1,0), sends (0,1) to (2,1)
      z8_by_times5     Z2 acting on Z8 by k -> 5k
      z8_by_inversion  Z2 acting on Z8 by k -> 7k = -k
      z8_by_times3     Z2 acting on Z8 by k -> 3k
    Each is validated as a homomorphism on construction.
    """
    z8 = cyclic(8)
    z4xz2 = direct_product(cyclic(4), cyclic(2))
    klein = klein_group()
    # Pair (a, b) of a direct product Z_m x Z_k sits at index a*k + b.
    klein_gen = aut_from_images(klein, {2: 2, 1: 3})  # (1,0)->(1,0), (0,1)->(1,1)
    z4xz2_gen = aut_from_images(z4xz2, {2: 2, 1: 5})  # (1,0)->(1,0), (0,1)->(2,1)
    specs = {
        "klein_by_z4": cyclic_action_spec(klein, 4, klein_gen),
        "z4xz2_by_z2": cyclic_action_spec(z4xz2, 2, z4xz2_gen),
        "z8_by_times5": cyclic_action_spec(z8, 2, aut_from_images(z8, {1: 5})),
        "z8_by_inversion": cyclic_action_spec(z8, 2, aut_from_images(z8, {1: 7})),
        "z8_by_times3": cyclic_action_spec(z8, 2, aut_from_images(z8, {1: 3})),
    }
    for spec in specs.values():
        spec.validate()
    return specs
