"""Branching multiplicities for Specht modules of S_m wr S_n.

The first rule (restriction to S_{m-1} wr S_n) is computed two ways: by
summing coefficients over good labellings of the two-layer Young graph
slice, and by the multipartition-matrix formula; the two must agree.
The second rule (restriction to S_m wr S_{n-1}) removes one box from one
component, weighted by a hook-length dimension.
"""

from __future__ import annotations

import itertools
from functools import cache
from math import factorial
from typing import NamedTuple

from .lr import lr_multi
from .shapes import (Composition, Multipartition, Partition, compositions,
                     enumerate_partitions, multipartitions, removable_boxes,
                     size_composition, specht_dimension)

# A multipartition matrix is a tuple of rows; each cell is a tuple of
# partitions.  A multiplicity map is a dict multipartition -> positive int.


class YoungLayer(NamedTuple):
    """Partitions of m and m-1 with the one-box-removal edges between them."""
    m: int
    upper: tuple[Partition, ...]
    lower: tuple[Partition, ...]
    edges: tuple[tuple[int, int], ...]  # 0-based (upper index, lower index)
    adjacency: tuple[tuple[int, ...], ...]


@cache
def young_layer(m: int) -> YoungLayer:
    if m < 1:
        raise ValueError("m must be at least 1")
    upper = enumerate_partitions(m)
    lower = enumerate_partitions(m - 1)
    index = {p: j for j, p in enumerate(lower)}
    edges = tuple((i, index[q])
                  for i, p in enumerate(upper)
                  for q in removable_boxes(p))
    edge_set = set(edges)
    adjacency = tuple(tuple(1 if (i, j) in edge_set else 0
                            for j in range(len(lower)))
                      for i in range(len(upper)))
    return YoungLayer(m, upper, lower, edges, adjacency)


class GoodLabelling(NamedTuple):
    """An edge labelling of a relabelled layer, aligned with layer.edges."""
    layer: YoungLayer
    lam: Multipartition
    nu: Multipartition
    labels: tuple[Partition, ...]


def _size_flows(support, row_sums, col_sums):
    """0-patterned integer matrices with the given row and column sums.

    `support` is a 0/1 (or counts) matrix; a zero entry forces a zero.
    Enumerated row by row with column-budget pruning.
    """
    s = len(support)
    t = len(support[0]) if s else len(col_sums)

    def rows(i, budgets):
        if i == s:
            if all(b == 0 for b in budgets):
                yield ()
            return
        for row in _row_choices(support[i], row_sums[i], budgets):
            nxt = tuple(b - v for b, v in zip(budgets, row))
            for rest in rows(i + 1, nxt):
                yield (row,) + rest

    yield from rows(0, tuple(col_sums))


def _row_choices(support_row, total, budgets):
    t = len(support_row)

    def go(j, remaining):
        if j == t:
            if remaining == 0:
                yield ()
            return
        hi = min(remaining, budgets[j]) if support_row[j] else 0
        for v in range(hi, -1, -1):
            for rest in go(j + 1, remaining - v):
                yield (v,) + rest

    yield from go(0, total)


def _cell_multipartitions(length: int, size: int):
    """All multipartitions with `length` components of total size `size`."""
    return tuple(multipartitions(size, length))


def enumerate_good_labellings(layer: YoungLayer, lam: Multipartition,
                              nu: Multipartition) -> list[GoodLabelling]:
    """All partition labellings of the edges with matching sizes at nodes.

    At each upper node the incident label sizes must sum to the size of
    the corresponding component of `lam`, and likewise for `nu` below.
    """
    lam = tuple(tuple(p) for p in lam)
    nu = tuple(tuple(p) for p in nu)
    if len(lam) != len(layer.upper) or len(nu) != len(layer.lower):
        raise ValueError("component count does not match the layer")
    row_sums = size_composition(lam)
    col_sums = size_composition(nu)
    out = []
    for flow in _size_flows(layer.adjacency, row_sums, col_sums):
        sizes = [flow[i][j] for (i, j) in layer.edges]
        for labels in itertools.product(*(enumerate_partitions(s)
                                          for s in sizes)):
            out.append(GoodLabelling(layer, lam, nu, labels))
    return out


def labelling_coefficient(gl: GoodLabelling) -> int:
    """Product over all nodes of the generalized LR coefficient.

    At an upper node the incident edge labels are taken in ascending
    order of the lower endpoint, and vice versa; empty labels are kept
    (they only matter through the degree filter).
    """
    layer = gl.layer
    coeff = 1
    for i, part in enumerate(gl.lam):
        incident = [lbl for (a, _), lbl in zip(layer.edges, gl.labels) if a == i]
        coeff *= lr_multi(part, [p for p in incident if p != ()])
        if coeff == 0:
            return 0
    for j, part in enumerate(gl.nu):
        incident = [lbl for (_, b), lbl in zip(layer.edges, gl.labels) if b == j]
        coeff *= lr_multi(part, [p for p in incident if p != ()])
        if coeff == 0:
            return 0
    return coeff


def mat_lambda(L, alpha: Composition, beta: Composition) -> list:
    """All multipartition matrices with entry lengths L and given sums.

    Row i must contain integers summing to alpha[i], column j to
    beta[j], and cell (i, j) must have exactly L[i][j] components.
    """
    L = tuple(tuple(row) for row in L)
    alpha, beta = tuple(alpha), tuple(beta)
    if len(alpha) != len(L) or any(len(row) != len(beta) for row in L):
        raise ValueError("dimension mismatch between L, alpha and beta")
    if sum(alpha) != sum(beta):
        return []
    out = []
    for flow in _size_flows(tuple(tuple(1 if v else 0 for v in row) for row in L),
                            alpha, beta):
        cell_pools = [[_cell_multipartitions(L[i][j], flow[i][j])
                       for j in range(len(beta))] for i in range(len(alpha))]
        for choice in itertools.product(*(pool for row in cell_pools
                                          for pool in row)):
            rows = tuple(tuple(choice[i * len(beta) + j]
                               for j in range(len(beta)))
                         for i in range(len(alpha)))
            out.append(rows)
    return out


def row_tuple(M, i: int) -> tuple[Partition, ...]:
    """Concatenate the entries along row i, dropping empty partitions."""
    return tuple(p for cell in M[i] for p in cell if p != ())


def col_tuple(M, j: int) -> tuple[Partition, ...]:
    """Concatenate the entries along column j, dropping empty partitions."""
    return tuple(p for row in M for p in row[j] if p != ())


def _nonzero_row_fillings(A_row, eta_i: Partition):
    """Cell fillings for one row with a nonzero row LR coefficient.

    Yields (cells, coeff) where cells is a tuple of multipartitions, one
    per column, the row content totals |eta_i|, and coeff is
    lr_multi(eta_i, concatenated nonempty content).
    """
    t = len(A_row)
    slots = [(j, k) for j in range(t) for k in range(A_row[j])]
    target = sum(eta_i)
    for sizes in compositions(target, len(slots)):
        pools = [enumerate_partitions(s) for s in sizes]
        for parts in itertools.product(*pools):
            coeff = lr_multi(eta_i, [p for p in parts if p != ()])
            if coeff == 0:
                continue
            cells = [[] for _ in range(t)]
            for (j, _), p in zip(slots, parts):
                cells[j].append(p)
            yield tuple(tuple(c) for c in cells), coeff


def filtration_multiplicities(A, eta: Multipartition, t: int) -> dict:
    """The multiplicity map of the matrix-sum formula.

    For each t-multipartition nu of n, sums over matrices in
    Mat(A; |eta| x |nu|) the product of row coefficients
    lr_multi(eta^i, R_i) and column coefficients lr_multi(nu^j, C_j).
    Zero entries are omitted.
    """
    A = tuple(tuple(row) for row in A)
    eta = tuple(tuple(p) for p in eta)
    if len(eta) != len(A):
        raise ValueError("eta must have one component per row of A")
    if any(len(row) != t for row in A):
        raise ValueError("A must have t columns")

    per_row = [list(_nonzero_row_fillings(A[i], eta[i]))
               for i in range(len(eta))]
    result: dict[Multipartition, int] = {}
    for combo in itertools.product(*per_row):
        row_coeff = 1
        for _, c in combo:
            row_coeff *= c
        # distribute over nu: independent choice of nu^j per column
        col_maps = []
        for j in range(t):
            col_parts = tuple(p for cells, _ in combo for p in cells[j]
                              if p != ())
            col_maps.append(_column_expansion(col_parts))
        for nu_choice in itertools.product(*(cm.items() for cm in col_maps)):
            nu = tuple(k for k, _ in nu_choice)
            w = row_coeff
            for _, v in nu_choice:
                w *= v
            result[nu] = result.get(nu, 0) + w
    return {k: v for k, v in result.items() if v}


@cache
def _column_expansion(col_parts) -> dict:
    """Map nu -> lr_multi(nu, col_parts) over partitions of the total size."""
    size = sum(map(sum, col_parts))
    cm = {nu: lr_multi(nu, col_parts) for nu in enumerate_partitions(size)}
    return {k: v for k, v in cm.items() if v}


def branch_first(m: int, lam: Multipartition, method: str = "matrices") -> dict:
    """Multiplicities of the restriction from S_m wr S_n to S_{m-1} wr S_n.

    Returns a map from p(m-1)-component multipartitions of n to positive
    multiplicities.  ``method`` selects the matrix-sum formula or the
    good-labelling sum; both give the same map.
    """
    layer = young_layer(m)
    lam = tuple(tuple(p) for p in lam)
    if len(lam) != len(layer.upper):
        raise ValueError(f"lambda must have {len(layer.upper)} components")
    if method == "matrices":
        return filtration_multiplicities(layer.adjacency, lam, len(layer.lower))
    if method == "labellings":
        n = sum(map(sum, lam))
        result: dict[Multipartition, int] = {}
        for nu in multipartitions(n, len(layer.lower)):
            total = sum(labelling_coefficient(gl)
                        for gl in enumerate_good_labellings(layer, lam, nu))
            if total:
                result[nu] = total
        return result
    raise ValueError(f"unknown method {method!r}")


def wreath_specht_dimension(m: int, lam: Multipartition) -> int:
    """Dimension of the Specht module of S_m wr S_n indexed by `lam`."""
    upper = enumerate_partitions(m)
    lam = tuple(tuple(p) for p in lam)
    if len(lam) != len(upper):
        raise ValueError(f"lambda must have {len(upper)} components")
    n = sum(map(sum, lam))
    dim = factorial(n)
    for mu, part in zip(upper, lam):
        dim //= factorial(sum(part))
        dim *= specht_dimension(mu) ** sum(part) * specht_dimension(part)
    return dim


def branch_second(m: int, n: int, lam: Multipartition) -> dict:
    """Multiplicities of the restriction from S_m wr S_n to S_m wr S_{n-1}.

    One entry per single-box removal: removing a box from component i
    contributes the hook-length dimension of the i-th partition of m.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    upper = enumerate_partitions(m)
    lam = tuple(tuple(p) for p in lam)
    if len(lam) != len(upper):
        raise ValueError(f"lambda must have {len(upper)} components")
    if sum(map(sum, lam)) != n:
        raise ValueError("lambda must be a multipartition of n")
    result: dict[Multipartition, int] = {}
    for i, part in enumerate(lam):
        if not part:
            continue
        for delta in removable_boxes(part):
            key = lam[:i] + (delta,) + lam[i + 1:]
            result[key] = result.get(key, 0) + specht_dimension(upper[i])
    return result


def verify_branch_dimensions(m: int, n: int, rule: str) -> dict:
    """Check that restriction preserves dimension for every multipartition.

    Returns {"checked": count, "failures": [description, ...]}.
    """
    r = len(enumerate_partitions(m))
    checked = 0
    failures = []
    for lam in multipartitions(n, r):
        expected = wreath_specht_dimension(m, lam)
        if rule == "first":
            mults = branch_first(m, lam)
            total = sum(mult * wreath_specht_dimension(m - 1, nu)
                        for nu, mult in mults.items())
        elif rule == "second":
            mults = branch_second(m, n, lam)
            total = sum(mult * wreath_specht_dimension(m, delta)
                        for delta, mult in mults.items())
        else:
            raise ValueError(f"unknown rule {rule!r}")
        checked += 1
        if total != expected:
            failures.append(f"m={m} n={n} rule={rule} lambda={lam}: "
                            f"{total} != {expected}")
    return {"checked": checked, "failures": failures}
