"""Integer partitions, compositions and multipartitions as plain tuples.

Conventions used throughout the package:

- a *partition* is a weakly decreasing tuple of positive ints, stored
  without trailing zeros; ``()`` is the unique partition of 0;
- a *composition* is a tuple of non-negative ints (zero parts are kept,
  they carry positional information);
- a *multipartition* is a tuple of partitions.

All values are immutable and every function here is pure.
"""

from __future__ import annotations

import itertools
from functools import cache
from math import factorial

Partition = tuple[int, ...]
Composition = tuple[int, ...]
Multipartition = tuple[Partition, ...]


def is_partition(parts) -> bool:
    """True iff `parts` is weakly decreasing with all parts positive."""
    parts = tuple(parts)
    if any(p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def is_composition(parts) -> bool:
    return all(isinstance(p, int) and p >= 0 for p in parts)


def check_partition(parts) -> Partition:
    parts = tuple(parts)
    if not is_partition(parts):
        raise ValueError(f"not a partition: {parts}")
    return parts


@cache
def enumerate_partitions(m: int) -> tuple[Partition, ...]:
    """All partitions of m in strictly descending lexicographic order.

    The first entry is (m) and the last is (1,...,1); for m = 0 the
    result is ((),).
    """
    if m < 0:
        raise ValueError("m must be non-negative")

    def gen(remaining: int, max_part: int):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, max_part), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(gen(m, m))


def removable_boxes(lam: Partition) -> list[Partition]:
    """Partitions obtained from `lam` by removing one box, by row index.

    A box is removable from row i when the result is still weakly
    decreasing; a part that drops to zero is deleted.
    """
    lam = tuple(lam)
    if not lam:
        raise ValueError("no removable boxes")
    out = []
    for i in range(len(lam)):
        below = lam[i + 1] if i + 1 < len(lam) else 0
        if lam[i] - 1 >= below:
            smaller = lam[:i] + ((lam[i] - 1,) if lam[i] > 1 else ()) + lam[i + 1:]
            out.append(smaller)
    return out


def conjugate(lam: Partition) -> Partition:
    lam = tuple(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


@cache
def specht_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape `lam` (hook lengths)."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    dim, rem = divmod(factorial(sum(lam)), hooks)
    assert rem == 0
    return dim


def remove_part_at(gamma: Composition, i: int) -> Composition:
    """Decrement the i-th part (1-based) of `gamma`, keeping its length."""
    gamma = tuple(gamma)
    if not 1 <= i <= len(gamma) or gamma[i - 1] == 0:
        raise ValueError("part not removable")
    return gamma[:i - 1] + (gamma[i - 1] - 1,) + gamma[i:]


def concat_parts(components) -> Composition:
    """Concatenate the parts of a multicomposition into one composition."""
    return tuple(itertools.chain.from_iterable(components))


def size_composition(mp: Multipartition) -> Composition:
    """The composition of component sizes of a multipartition."""
    return tuple(sum(c) for c in mp)


def compositions(n: int, length: int):
    """Yield all compositions of n into exactly `length` parts (zeros allowed).

    Order: lexicographic with the first part largest first.
    """
    if length == 0:
        if n == 0:
            yield ()
        return
    if length == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, length - 1):
            yield (first,) + rest


def multipartitions(n: int, components: int):
    """Yield all multipartitions of n with the given number of components.

    Components of size 0 are the empty partition.  The order is
    deterministic: by size composition, then componentwise.
    """
    for sizes in compositions(n, components):
        pools = [enumerate_partitions(s) for s in sizes]
        yield from itertools.product(*pools)
