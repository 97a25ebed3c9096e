from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imbalance import balance, poset, promotion
from imbalance.balance import (
    RegionError, bw_check, cell_hooks, dcmb_check, dual_shape_poset, forest_hooks,
    hlsb_imbalance, hook_product_poly, majdom_check, make_region, postorder_labeling,
    region_poset, region_sign, schur_labeling, slabps_check,
)
from imbalance.domino import count_p_domino
from imbalance.polynomials import QPoly
from imbalance.poset import PosetError, antichain, chain, make_poset, maj_poly, natural_labeling
from imbalance.shapes import partitions, shape_poset

from conftest import posets

V = make_poset(3, [(0, 2), (1, 2)])


@st.composite
def forests(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    parent = [draw(st.one_of(st.none(), st.integers(i + 1, n - 1))) if i < n - 1 else None for i in range(n)]
    return make_poset(n, [(t, p) for t, p in enumerate(parent) if p is not None])


def test_majdom_examples():
    assert majdom_check(antichain(2)) == (0, 0)
    assert majdom_check(chain(3)) == (1, 1)
    assert majdom_check(shape_poset((2, 2))[0]) == (2, 2)


@given(posets(min_n=1, max_n=8))
def test_majdom_random(P):
    W, count = majdom_check(P)
    assert W == count


@given(posets(min_n=1, max_n=6), st.randoms(use_true_random=False))
def test_no_tableau_means_maj_balanced_for_any_labeling(P, rng):
    if count_p_domino(P) == 0:
        omega = poset.random_labeling(P.n, rng)
        assert maj_poly(P, omega)(-1) == 0


def test_converse_fails():
    from imbalance.verify import find_converse_witness

    P, omega = find_converse_witness()
    assert count_p_domino(P) > 0
    assert maj_poly(P, omega)(-1) == 0


def test_dcmb_examples():
    assert dcmb_check(antichain(2))
    assert dcmb_check(chain(3)) and maj_poly(chain(3), (1, 2, 3))(-1) == 1
    with pytest.raises(PosetError):
        # dual of the smallest inconsistent poset
        dcmb_check(poset.dual(make_poset(4, [(0, 1), (1, 3), (2, 3)])))


@pytest.mark.parametrize("n", range(1, 9))
def test_dcmb_on_dual_shapes(n):
    for lam in partitions(n):
        P = dual_shape_poset(lam)
        assert promotion.is_dual_consistent(P)
        assert dcmb_check(P)


class TestRegions:
    def test_single_cell(self):
        assert region_poset(make_region([(1, 1)])).n == 1

    def test_young_diagram_region_matches_shape_poset(self):
        S = make_region([(1, 1), (1, 2), (2, 1), (2, 2)])
        assert region_poset(S) == shape_poset((2, 2))[0]

    def test_l_shapes(self):
        top_left = region_poset(make_region([(1, 1), (1, 2), (2, 1)]))
        assert top_left.covers == {(0, 1), (0, 2)}
        bottom_right = region_poset(make_region([(1, 2), (2, 1), (2, 2)]))
        assert bottom_right.covers == {(0, 2), (1, 2)}
        hook = region_poset(make_region([(1, 1), (2, 1), (2, 2)]))
        assert hook.covers == {(0, 1), (1, 2)}

    def test_rejects_bad_regions(self):
        ring = [(i, j) for i in range(3) for j in range(3) if (i, j) != (1, 1)]
        with pytest.raises(RegionError):
            make_region(ring)
        with pytest.raises(RegionError):
            make_region([(1, 1), (2, 2)])
        with pytest.raises(RegionError):
            make_region([])

    def test_schur_labeling_examples(self):
        S = make_region([(1, 1), (1, 2), (2, 1), (2, 2)])
        # cells in reading order (1,1),(1,2),(2,1),(2,2)
        assert schur_labeling(S) == (3, 4, 1, 2)
        assert schur_labeling(make_region([(1, j) for j in range(1, 5)])) == (1, 2, 3, 4)
        assert schur_labeling(make_region([(i, 1) for i in range(1, 5)])) == (4, 3, 2, 1)

    def test_signs(self):
        assert region_sign(make_region([(1, 1), (1, 2), (2, 1), (2, 2)])) == 1
        assert region_sign(make_region([(1, 1), (1, 2)])) == 1
        assert region_sign(make_region([(1, 1), (2, 1)])) == -1
        with pytest.raises(RegionError):
            region_sign(make_region([(1, 1), (1, 2), (1, 3)]))

    def test_slabps_examples(self):
        assert slabps_check(make_region([(1, 1), (1, 2), (2, 1), (2, 2)])) == (2, 2)
        assert slabps_check(make_region([(1, j) for j in range(1, 5)])) == (1, 1)

    def test_parse_region(self):
        S = balance.parse_region("# square\n1 1\n1 2\n2 1\n2 2\n")
        assert len(S) == 4
        with pytest.raises(RegionError):
            balance.parse_region("1 x\n")

    def test_region_enumeration_size(self):
        regions = list(balance.regions_in_frame(2, 2, 4, even_only=False))
        # 4 singles, 4 dominoes, 4 L-trominoes, the square
        assert len(regions) == 13

    @pytest.mark.parametrize("size", [2, 4, 6])
    def test_sign_is_tiling_independent(self, size):
        for S in balance.regions_in_frame(3, 4, size):
            parities = {balance.vertical_count(T) % 2 for T in balance.tilings(S)}
            assert len(parities) <= 1


class TestHooks:
    def test_chain(self):
        assert forest_hooks(chain(3)) == (1, 2, 3)
        assert hook_product_poly(3, (1, 2, 3)) == 1

    def test_v(self):
        # roots maximal: V has one root over two leaves
        assert forest_hooks(V) == (1, 1, 3)
        assert hook_product_poly(3, (1, 1, 3)) == QPoly([1, 1]) == maj_poly(V, (1, 2, 3))
        assert hlsb_imbalance(3, (1, 1, 3)) == 0

    def test_dual_square(self):
        P = dual_shape_poset((2, 2))
        assert cell_hooks((2, 2)) == (3, 2, 2, 1)
        assert hook_product_poly(4, cell_hooks((2, 2))) == maj_poly(P, natural_labeling(P))

    def test_non_forest_rejected(self):
        with pytest.raises(PosetError):
            forest_hooks(make_poset(3, [(0, 1), (0, 2)]))
        with pytest.raises(ArithmeticError):
            hook_product_poly(3, (2, 2, 2))

    def test_hlsb_is_exact(self):
        assert isinstance(hlsb_imbalance(4, (3, 2, 2, 1)), Fraction)
        assert hlsb_imbalance(4, (3, 2, 2, 1)) == 2

    @given(forests())
    def test_forest_hook_formula(self, P):
        h = forest_hooks(P)
        W = maj_poly(P, natural_labeling(P))
        assert hook_product_poly(P.n, h) == W
        assert hlsb_imbalance(P.n, h) == W(-1)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_dual_shape_hook_formula(self, n):
        for lam in partitions(n):
            P = dual_shape_poset(lam)
            W = maj_poly(P, natural_labeling(P))
            assert hook_product_poly(n, cell_hooks(lam)) == W
            assert hlsb_imbalance(n, cell_hooks(lam)) == W(-1)

    def test_forest_counts(self):
        assert [len(balance.all_forests(n)) for n in range(1, 8)] == [1, 2, 4, 9, 20, 48, 115]


class TestPostorder:
    def test_chain(self):
        assert postorder_labeling(chain(4)) == (1, 2, 3, 4)
        assert bw_check(chain(4))

    def test_v(self):
        assert postorder_labeling(V) == (1, 2, 3)
        _, I, W = poset.extension_stats(V, (1, 2, 3))
        assert I == W == QPoly([1, 1])

    def test_subtrees_are_consecutive(self):
        # root 4 over 1 and 3; 3 over 0 and 2
        P = make_poset(5, [(1, 4), (3, 4), (0, 3), (2, 3)])
        omega = postorder_labeling(P)
        assert omega == (2, 1, 3, 4, 5)

    @given(forests())
    def test_inv_equals_maj(self, P):
        assert bw_check(P)


def test_palindromic_iff_graded_dual_ideals():
    from imbalance.verify import _chain_lengths_up

    for n in range(1, 6):
        for P in poset.all_posets(n):
            W = maj_poly(P, natural_labeling(P))
            D = comb(n, 2) - promotion.delta_stat(P)
            graded = all(len(_chain_lengths_up(P, t)) == 1 for t in range(n))
            assert graded == W.is_palindromic(D)
