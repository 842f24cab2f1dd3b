"""Independent brute-force oracles used by the tests.

Everything here recomputes quantities by naive enumeration, deliberately
avoiding the code paths under test.
"""

from __future__ import annotations

import itertools


def partitions_by_filter(m: int) -> list[tuple[int, ...]]:
    """All partitions of m found by filtering raw tuples."""
    if m == 0:
        return [()]
    found = set()
    for k in range(1, m + 1):
        for tup in itertools.combinations_with_replacement(range(1, m + 1), k):
            if sum(tup) == m:
                found.add(tuple(sorted(tup, reverse=True)))
    return sorted(found, reverse=True)


def count_standard_tableaux(shape: tuple[int, ...]) -> int:
    """Standard Young tableaux of `shape`, counted by direct placement."""
    n = sum(shape)
    if n == 0:
        return 1
    rows = [[] for _ in shape]

    def place(v: int) -> int:
        if v > n:
            return 1
        total = 0
        for i, row in enumerate(rows):
            if len(row) >= shape[i]:
                continue
            j = len(row)
            if i > 0 and len(rows[i - 1]) <= j:
                continue
            row.append(v)
            total += place(v + 1)
            row.pop()
        return total

    return place(1)


def naive_skew_ssyt(outer, inner, type_):
    """All semistandard fillings found by filtering every raw filling."""
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    boxes = [(i, inner[i] + j + 1) for i in range(len(outer))
             for j in range(outer[i] - inner[i])]
    if sum(type_) != len(boxes):
        return []
    maxe = len(type_)
    out = []
    for values in itertools.product(range(1, maxe + 1), repeat=len(boxes)):
        counts = [0] * maxe
        for v in values:
            counts[v - 1] += 1
        if tuple(counts) != tuple(type_):
            continue
        grid = dict(zip(boxes, values))
        ok = True
        for (i, c), v in grid.items():
            if (i, c + 1) in grid and grid[(i, c + 1)] < v:
                ok = False
                break
            above = None
            for k in range(i - 1, -1, -1):
                if (k, c) in grid:
                    above = grid[(k, c)]
                    break
            if above is not None and above >= v:
                ok = False
                break
        if ok:
            rows = []
            for i in range(len(outer)):
                rows.append(tuple(grid[(i, inner[i] + j + 1)]
                                  for j in range(outer[i] - inner[i])))
            out.append(tuple(rows))
    return out
