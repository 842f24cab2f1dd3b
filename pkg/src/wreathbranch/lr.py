"""Littlewood-Richardson coefficients and a Schur-polynomial oracle.

``lr_coefficient`` counts lattice-word semistandard skew tableaux
directly.  ``lr_multi`` extends it to a tuple of partitions by peeling
off the first one and recursing.  ``schur_product_oracle`` computes the
same coefficients by a completely different route (multiplying explicit
Schur polynomial expansions and peeling lex-leading terms) and exists
solely to cross-check the rule.
"""

from __future__ import annotations

from functools import cache

from .shapes import Partition, enumerate_partitions
from .tableaux import (enumerate_skew_ssyt, is_lattice_word,
                       reverse_reading_word, skew_fits)

SCHUR_ORACLE_BOUND = 10


@cache
def lr_coefficient(lam: Partition, alpha: Partition, beta: Partition) -> int:
    """The coefficient c^lam_{alpha,beta} via lattice-word counting."""
    lam, alpha, beta = tuple(lam), tuple(alpha), tuple(beta)
    if not skew_fits(lam, alpha):
        return 0
    if sum(beta) != sum(lam) - sum(alpha):
        return 0
    return sum(1 for t in enumerate_skew_ssyt(lam, alpha, beta)
               if is_lattice_word(reverse_reading_word(t)))


def lr_multi(lam: Partition, parts) -> int:
    """The generalized coefficient c(lam; (alpha^1, ..., alpha^t)).

    t = 0 gives 1 exactly for the empty lam; t = 1 is a Kronecker
    delta; t = 2 is lr_coefficient; larger tuples recurse through all
    intermediate partitions.  The value is invariant under reordering
    the tuple (checked in the test suite), so the memo key is sorted.
    """
    lam = tuple(lam)
    parts = tuple(tuple(p) for p in parts)
    if sum(map(sum, parts)) != sum(lam):
        return 0
    return _lr_multi_sorted(lam, tuple(sorted(parts)))


@cache
def _lr_multi_sorted(lam: Partition, parts) -> int:
    if len(parts) == 0:
        return 1 if lam == () else 0
    if len(parts) == 1:
        return 1 if parts[0] == lam else 0
    if len(parts) == 2:
        return lr_coefficient(lam, parts[0], parts[1])
    head, tail = parts[0], parts[1:]
    total = 0
    for beta in enumerate_partitions(sum(lam) - sum(head)):
        c = lr_coefficient(lam, head, beta)
        if c:
            total += c * _lr_multi_sorted(beta, tail)
    return total


@cache
def schur_monomials(shape: Partition, nvars: int) -> dict:
    """The Schur polynomial s_shape in `nvars` variables.

    Returned as a map from exponent vectors (length nvars) to
    coefficients, built by summing x^content over all semistandard
    tableaux of the shape with entries at most nvars.
    """
    shape = tuple(shape)
    poly: dict[tuple[int, ...], int] = {}
    remaining = sum(shape)
    if len(shape) > nvars > 0 or (shape and nvars == 0):
        return {}
    if remaining == 0:
        return {(0,) * nvars: 1}

    boxes = [(i, j) for i in range(len(shape)) for j in range(shape[i])]
    content = [0] * nvars

    def backtrack(pos: int, filling: dict):
        if pos == len(boxes):
            key = tuple(content)
            poly[key] = poly.get(key, 0) + 1
            return
        i, j = boxes[pos]
        lo = max(filling.get((i, j - 1), 1), filling.get((i - 1, j), 0) + 1)
        for v in range(lo, nvars + 1):
            filling[(i, j)] = v
            content[v - 1] += 1
            backtrack(pos + 1, filling)
            content[v - 1] -= 1
            del filling[(i, j)]

    backtrack(0, {})
    return poly


def _poly_mul(a: dict, b: dict) -> dict:
    out: dict[tuple[int, ...], int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def schur_product_oracle(alpha: Partition, beta: Partition,
                         bound: int = SCHUR_ORACLE_BOUND) -> dict:
    """Expand s_alpha * s_beta in the Schur basis without the LR rule.

    Works in exactly |alpha|+|beta| variables: multiply the monomial
    expansions, then repeatedly subtract off the Schur polynomial of the
    lexicographically greatest surviving exponent vector (which is
    always a partition, and each Schur polynomial is monic there).
    Returns a map partition -> positive coefficient.
    """
    alpha, beta = tuple(alpha), tuple(beta)
    n = sum(alpha) + sum(beta)
    if n > bound:
        raise ValueError("oracle bound exceeded")
    nvars = n
    if nvars == 0:
        return {(): 1}
    product = _poly_mul(schur_monomials(alpha, nvars),
                        schur_monomials(beta, nvars))
    expansion: dict[Partition, int] = {}
    while product:
        lead = max(product)
        coeff = product[lead]
        shape = tuple(p for p in lead if p > 0)
        assert all(lead[i] >= lead[i + 1] for i in range(len(lead) - 1))
        expansion[shape] = coeff
        for exp, c in schur_monomials(shape, nvars).items():
            v = product.get(exp, 0) - coeff * c
            if v:
                product[exp] = v
            else:
                product.pop(exp, None)
    return expansion
