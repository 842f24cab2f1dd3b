import itertools

import pytest

from wreathbranch.lr import (lr_coefficient, lr_multi, schur_monomials,
                             schur_product_oracle)
from wreathbranch.shapes import enumerate_partitions, specht_dimension


def test_lr_coefficient_examples():
    assert lr_coefficient((3,), (2,), (1,)) == 1
    assert lr_coefficient((2, 1), (1,), (1, 1)) == 1
    assert lr_coefficient((2, 1), (2,), (2,)) == 0  # size mismatch
    assert lr_coefficient((1,), (2,), (1,)) == 0    # alpha does not fit
    assert lr_coefficient((2, 2), (1,), (2, 1)) == 1


def test_lr_coefficient_worked_product_values():
    # the five coefficients multiplied in the 3-wr-6 worked example
    assert lr_multi((2,), ((2,),)) == 1
    assert lr_multi((1, 1), ((1,), (1,))) == 1
    assert lr_multi((1, 1), ((1, 1),)) == 1
    assert lr_multi((3,), ((2,), (1,))) == 1
    assert lr_multi((2, 1), ((1,), (1, 1))) == 1


def test_lr_multi_base_cases():
    assert lr_multi((2,), ((2,),)) == 1
    assert lr_multi((2,), ((1, 1),)) == 0
    assert lr_multi((), ()) == 1
    assert lr_multi((1,), ()) == 0
    assert lr_multi((3, 2, 1), ((1,),) * 6) == 16


def test_lr_multi_degree_filter():
    assert lr_multi((3,), ((1,), (1,))) == 0
    assert lr_multi((2, 1), ((2,), (2,))) == 0


@pytest.mark.parametrize("m", range(8))
def test_lr_multi_dimension_identity(m):
    for lam in enumerate_partitions(m):
        assert lr_multi(lam, ((1,),) * m) == specht_dimension(lam)


def test_lr_multi_order_invariance():
    for n in range(1, 6):
        for lam in enumerate_partitions(n):
            pools = []
            for sizes in _compositions_upto(n, 3):
                tup = tuple(itertools.product(
                    *(enumerate_partitions(s) for s in sizes)))
                pools.extend(tup)
            for parts in pools:
                base = lr_multi(lam, parts)
                for perm in itertools.permutations(parts):
                    assert lr_multi(lam, perm) == base


def _compositions_upto(n, max_len):
    for length in range(1, max_len + 1):
        for cuts in itertools.combinations(range(1, n), length - 1):
            bounds = (0,) + cuts + (n,)
            yield tuple(bounds[i + 1] - bounds[i] for i in range(length))


def test_schur_monomials_basics():
    assert schur_monomials((1,), 2) == {(1, 0): 1, (0, 1): 1}
    assert schur_monomials((1, 1), 1) == {}
    assert schur_monomials((), 3) == {(0, 0, 0): 1}
    # s_(2,1) in 3 vars has 8 monomials (x1^2 x2 type: 6, x1x2x3: 2)
    poly = schur_monomials((2, 1), 3)
    assert sum(poly.values()) == 8
    assert poly[(1, 1, 1)] == 2


def test_schur_product_oracle_pieri():
    assert schur_product_oracle((1,), (1,)) == {(2,): 1, (1, 1): 1}
    assert schur_product_oracle((2,), (1,)) == {(3,): 1, (2, 1): 1}
    assert schur_product_oracle((), ()) == {(): 1}


def test_schur_product_oracle_two_one_squared():
    expansion = schur_product_oracle((2, 1), (2, 1))
    assert len(expansion) == 7
    assert sum(expansion.values()) == 8
    assert expansion[(3, 2, 1)] == 2
    assert all(sum(p) == 6 for p in expansion)


def test_schur_product_oracle_bound():
    with pytest.raises(ValueError, match="oracle bound exceeded"):
        schur_product_oracle((6,), (5,))


def test_lr_symmetry_small():
    for total in range(0, 7):
        for a in range(total + 1):
            for alpha in enumerate_partitions(a):
                for beta in enumerate_partitions(total - a):
                    for lam in enumerate_partitions(total):
                        assert (lr_coefficient(lam, alpha, beta)
                                == lr_coefficient(lam, beta, alpha))
