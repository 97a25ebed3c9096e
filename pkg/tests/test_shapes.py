import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imbalance import poset, shapes
from imbalance.polynomials import QPoly, q_binomial
from imbalance.promotion import is_consistent
from imbalance.shapes import (
    ShapeError, SkewShape, b_stat, conjugate, content, content_sum, corners, count_series,
    d_stat, imbalance, inv_poly_shape, partitions, r_stat, shape_poset, two_core,
    two_core_abacus, v_stat,
)

from conftest import small_partitions


def test_partition_validation():
    assert shapes.partition([3, 1, 0]) == (3, 1)
    with pytest.raises(ShapeError):
        shapes.partition([1, 2])
    with pytest.raises(ShapeError):
        shapes.partition([2, -1])
    with pytest.raises(ShapeError):
        SkewShape((2, 1), (3,))


def test_parsing():
    assert shapes.parse_partition("3,3") == (3, 3)
    sk = shapes.parse_shape("4,3,1/2,1")
    assert sk.outer == (4, 3, 1) and sk.inner == (2, 1) and sk.size == 5
    assert str(sk) == "4,3,1/2,1"
    with pytest.raises(ShapeError):
        shapes.parse_partition("3,a")


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(10)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]
    assert shapes.partition_numbers(9) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30]


def test_conjugate_and_contents():
    assert conjugate((3, 1)) == (2, 1, 1)
    assert content((1, 1)) == 0
    assert content((2, 4)) == 2
    assert content_sum((3, 1)) == 2


def test_shape_posets():
    P, omega = shape_poset((1,))
    assert P.n == 1 and omega == (1,)
    P, omega = shape_poset((2, 2))
    # cells (1,1),(1,2),(2,1),(2,2)
    assert P.covers == {(0, 1), (0, 2), (1, 3), (2, 3)}
    assert omega == (1, 2, 3, 4)
    P, _ = shape_poset(SkewShape((2, 2), (1,)))
    # cells (1,2),(2,1),(2,2): (1,2) < (2,2) and (2,1) < (2,2)
    assert P.covers == {(0, 2), (1, 2)}


@pytest.mark.parametrize("lam, core", [((2, 1), (2, 1)), ((3, 1), ()), ((2, 2, 1), (1,)), ((4, 3, 1), ()), ((3, 2, 1), (3, 2, 1)), ((5,), (1,))])
def test_two_core_examples(lam, core):
    assert two_core(lam) == core
    assert two_core_abacus(lam) == core


@given(small_partitions(max_n=14), st.randoms(use_true_random=False))
def test_two_core_independent_of_removal_order(lam, rng):
    core = two_core(lam)
    assert two_core(lam, rng) == core == two_core_abacus(lam)
    assert shapes.is_staircase(core)
    assert (sum(lam) - sum(core)) % 2 == 0


def test_v_d_r_examples():
    assert v_stat((1, 1)) == 1
    assert d_stat((4, 3, 1)) == 1
    assert v_stat((4, 3, 1)) == 3
    assert r_stat((4, 3, 1)) == 0
    assert r_stat((2,)) == 0
    with pytest.raises(ShapeError):
        r_stat((2, 1))


@pytest.mark.parametrize("m", range(1, 5))
def test_r_equals_d_on_doubled_shapes(m):
    for mu in partitions(m):
        lam = tuple(2 * x for x in mu)
        assert r_stat(lam) == d_stat(lam)


@given(small_partitions(max_n=20))
def test_d_symmetry_and_hooks(lam):
    assert d_stat(lam) == d_stat(conjugate(lam))
    assert (d_stat(lam) == 0) == shapes.is_hook(lam)


def test_corners():
    assert corners((2, 1)) == [(1, 2), (2, 1)]
    assert b_stat((2, 1), (1, 2)) == 1
    assert b_stat((2, 1), (2, 1)) == 0
    with pytest.raises(ShapeError):
        b_stat((2, 1), (1, 1))


@given(small_partitions(max_n=12))
def test_lowest_corner_has_nothing_below(lam):
    if lam:
        assert b_stat(lam, corners(lam)[-1]) == 0


def test_inv_poly_shape_examples():
    assert inv_poly_shape((2, 1)) == QPoly([1, 1])
    assert inv_poly_shape((5,)) == 1
    assert inv_poly_shape((3, 3)) == QPoly([1, 1, 2, 1])
    assert imbalance((3, 3)) == 1
    for n in range(1, 8):
        for k in range(n):
            assert inv_poly_shape((n - k,) + (1,) * k) == q_binomial(n - 1, k)


@given(small_partitions(max_n=7))
def test_recursion_matches_enumeration(lam):
    P, omega = shape_poset(lam)
    assert inv_poly_shape(lam) == poset.inv_poly(P, omega)
    assert imbalance(lam) == inv_poly_shape(lam)(-1)


@given(small_partitions(max_n=12))
def test_hook_recursion_at_one(lam):
    f = inv_poly_shape(lam)(1)
    if lam:
        assert f == sum(inv_poly_shape(shapes.remove_cell(lam, t))(1) for t in corners(lam))


def test_quadruple_examples():
    assert shapes.a_lambda_quadruple((3, 1)) == (4, 2, 0, 2)
    assert shapes.a_lambda_quadruple((1,)) == (0, 0, 0, 0)
    assert shapes.a_lambda_quadruple((2, 1)) == (2, 0, 0, 0)


@given(small_partitions(max_n=12))
def test_quadruple_parities_agree(lam):
    assert len({x % 2 for x in shapes.a_lambda_quadruple(lam)}) == 1


@given(small_partitions(max_n=9))
def test_shape_posets_are_consistent(lam):
    assert is_consistent(shape_poset(lam)[0])


def test_series_examples():
    assert count_series("core_le_1", 4) == [1, 1, 2, 2, 5]
    assert count_series("t_n", 1)[1] == 1
    assert sum(1 for lam in partitions(4) if sum(two_core(lam)) <= 1) == 5
    with pytest.raises(ValueError):
        count_series("core_le_1", 65)
    with pytest.raises(ValueError):
        count_series("nope", 3)


def test_series_against_direct_counts():
    f = count_series("core_le_1", 14)
    t = count_series("t_n", 14)
    p = shapes.partition_numbers(14)
    fa = count_series("a_even_f", 14)
    for n in range(15):
        lams = list(partitions(n))
        assert f[n] == sum(1 for lam in lams if sum(two_core(lam)) <= 1)
        assert t[n] == sum(1 for lam in lams if content_sum(lam) % 2 == 0)
        assert 2 * t[n] == p[n] + fa[n]


def test_add_and_remove_cells():
    assert shapes.addable((2, 1)) == [(1, 3), (2, 2), (3, 1)]
    assert shapes.add_cell((2, 1), (2, 2)) == (2, 2)
    assert shapes.remove_cell((2, 2), (2, 2)) == (2, 1)
    rng = random.Random(0)
    lam = (4, 2, 1)
    for _ in range(10):
        t = rng.choice(shapes.addable(lam))
        assert shapes.remove_cell(shapes.add_cell(lam, t), t) == lam
