"""Exhaustive enumeration of all groups of a given small order.

Independent of the catalog machinery by design: groups are found by
backtracking directly over multiplication tables, so the result can serve
as a completeness check for anything built from presentations.
"""

from __future__ import annotations

from .core import CayleyTable, GroupError, element_order, validate_table
from .invariants import center, conjugacy_classes, order_profile
from .isomorphism import find_isomorphism

MAX_ORACLE_ORDER = 8


class OrderOutOfRangeError(GroupError):
    def __init__(self, n: int):
        super().__init__(
            f"oracle enumeration supports orders 1..{MAX_ORACLE_ORDER}, got {n}"
        )


def _search_tables(n: int) -> list[tuple[tuple[int, ...], ...]]:
    """All complete tables with 0 as identity, Latin rows/columns, full
    associativity, and the canonical labeling below, in search order.

    Canonical labeling: element 1 has maximal order d in the group and its
    powers occupy 1..d-1 in sequence (1^k = k).  Every group of order n has
    exactly such a labeling, so no isomorphism class is lost.
    """
    if n == 1:
        return [((0,),)]

    table: list[list[int]] = [[-1] * n for _ in range(n)]
    for a in range(n):
        table[0][a] = a
        table[a][0] = a
    row_used = [1 << r for r in range(n)]
    col_used = [1 << c for c in range(n)]
    row_used[0] = col_used[0] = (1 << n) - 1
    # preimage[v] lists the (x, y) pairs with table[x][y] == v, so that a new
    # entry can be checked against every associativity triple it completes.
    preimage: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for a in range(n):
        preimage[a].append((0, a))
        if a:
            preimage[a].append((a, 0))

    cells = [(r, c) for r in range(1, n) for c in range(1, n)]
    results: list[tuple[tuple[int, ...], ...]] = []

    def consistent(a: int, b: int, v: int) -> bool:
        ta, tb, tv = table[a], table[b], table[v]
        for z in range(1, n):
            w = tb[z]
            if w >= 0:
                lhs = tv[z]
                if lhs >= 0:
                    rhs = ta[w]
                    if rhs >= 0 and lhs != rhs:
                        return False
        for x in range(1, n):
            u = table[x][a]
            if u >= 0:
                lhs = table[u][b]
                if lhs >= 0:
                    rhs = table[x][v]
                    if rhs >= 0 and lhs != rhs:
                        return False
        for x, y in preimage[a]:
            w = table[y][b]
            if w >= 0:
                rhs = table[x][w]
                if rhs >= 0 and rhs != v:
                    return False
        for y, z in preimage[b]:
            u = table[a][y]
            if u >= 0:
                lhs = table[u][z]
                if lhs >= 0 and lhs != v:
                    return False
        return True

    def orders_bounded_by(d: int) -> bool:
        for a in range(1, n):
            k, acc = 1, a
            while acc != 0:
                acc = table[acc][a]
                k += 1
            if k > d:
                return False
        return True

    def fill(idx: int, chain_order: int | None):
        if idx == len(cells):
            if chain_order is not None and orders_bounded_by(chain_order):
                results.append(tuple(tuple(row) for row in table))
            return
        r, c = cells[idx]
        if table[r][c] >= 0:
            fill(idx + 1, chain_order)
            return
        for v in range(n):
            bit = 1 << v
            if row_used[r] & bit or col_used[c] & bit:
                continue
            order_now = chain_order
            if r == 1 and chain_order is None:
                # Row 1 is still tracing the powers of element 1: at column c
                # the value is 1^(c+1), which must be c+1 or close the cycle.
                if v == 0:
                    if n % (c + 1):
                        continue
                    order_now = c + 1
                elif v == c + 1:
                    order_now = None
                else:
                    continue
            if not consistent(r, c, v):
                continue
            table[r][c] = v
            row_used[r] |= bit
            col_used[c] |= bit
            preimage[v].append((r, c))
            fill(idx + 1, order_now)
            preimage[v].pop()
            table[r][c] = -1
            row_used[r] &= ~bit
            col_used[c] &= ~bit

    fill(0, None)
    return results


def enumerate_groups_oracle(n: int) -> list[CayleyTable]:
    """All groups of order n up to isomorphism, in first-found table order."""
    if not 1 <= n <= MAX_ORACLE_ORDER:
        raise OrderOutOfRangeError(n)
    reps: list[CayleyTable] = []
    buckets: dict[tuple, list[CayleyTable]] = {}
    for raw in _search_tables(n):
        g = validate_table(raw)
        key = (order_profile(g), center(g).size, conjugacy_classes(g)[1].orbit_sizes)
        bucket = buckets.setdefault(key, [])
        if any(find_isomorphism(g, seen) is not None for seen in bucket):
            continue
        bucket.append(g)
        reps.append(g)
    return reps
