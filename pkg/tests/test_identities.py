from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from imbalance import identities as ident
from imbalance.identities import (
    PartitionVector, du_commutator_check, du_commutator_holds, eg_check, eg_instances,
    eg_three_row_check, g_shifted, hooksum_identity, kcor_a_sum, kcor_b_sum, op_A, op_D, op_U,
    q_plus_x_power, rectangle_imbalance, rectangle_row, shifted_syt_count, survivor_formula,
    survivor_involution, sytimb_b_sum, sytimb_sum, u_power_expansion, white_magnitude,
)
from imbalance.polynomials import MultiPoly, QPoly
from imbalance.shapes import ShapeError, hooks, imbalance, inv_poly_shape, partitions


def strict_partitions(n, max_part=None):
    max_part = n if max_part is None else max_part
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in strict_partitions(n - k, k - 1):
            yield (k,) + rest


class TestShifted:
    def test_examples(self):
        assert g_shifted((4,)) == 1
        assert g_shifted((2, 1)) == 1
        assert g_shifted((1, 1)) == 0
        assert g_shifted((1, 2)) == -1
        assert g_shifted((3, 1, 0, 0)) == g_shifted((3, 1))
        assert g_shifted((2, -1)) == 0
        # interior zero: (0, 1) -> (1, 0), one transposition
        assert g_shifted((0, 1)) == -1

    @pytest.mark.parametrize("n", range(1, 11))
    def test_recursion_matches_brute_force(self, n):
        for mu in strict_partitions(n):
            assert g_shifted(mu) == shifted_syt_count(mu)

    def test_brute_force_rejects_non_strict(self):
        with pytest.raises(ShapeError):
            shifted_syt_count((2, 2))

    @given(st.lists(st.integers(0, 5), min_size=1, max_size=4))
    def test_sign_rule(self, mu):
        val = g_shifted(mu)
        trimmed = list(mu)
        while trimmed and trimmed[-1] == 0:
            trimmed.pop()
        if len(set(trimmed)) < len(trimmed):
            assert val == 0
        else:
            strict = tuple(sorted((x for x in trimmed if x), reverse=True))
            assert abs(val) == g_shifted(strict)


class TestWhite:
    def test_examples(self):
        assert all(rectangle_imbalance(1, n) == 1 for n in range(1, 7))
        assert rectangle_imbalance(2, 2) == 0
        assert white_magnitude(2, 3) == g_shifted((2, 1)) == 1
        assert rectangle_imbalance(2, 3) == 1
        assert rectangle_imbalance(3, 2) == -1
        assert ident.white_staircase(3, 4) == (3, 2, 1)

    def test_table(self):
        for m in range(1, 13):
            for n in range(1, 12 // m + 1):
                row = rectangle_row(m, n)
                assert row.passed, (m, n)
                assert abs(row.observed) == abs(imbalance((n,) * m))

    def test_observed_signs(self):
        # the theorem fixes only |I|; these signs come from the recursion
        signs = {(m, n): rectangle_row(m, n).sign for m, n in [(3, 2), (3, 4), (4, 3), (2, 3), (2, 5), (5, 2)]}
        assert signs == {(3, 2): -1, (3, 4): -1, (4, 3): -1, (2, 3): 1, (2, 5): 1, (5, 2): 1}


class TestEremenkoGabrielov:
    def test_examples(self):
        assert eg_check((2, 2, 2)) == (-1, -1)
        assert eg_check((4, 3, 2)) == (0, 0)
        assert eg_check((3, 2, 1)) == (0, 0)
        assert eg_three_row_check(1, 1, 1, "(2a,2b,2c)") == (-1, -1)

    def test_family_names(self):
        assert ident.eg_family((5, 3, 2)) == "(2a+1,2b+1,2c)"
        assert ident.eg_family((4, 2, 2, 2)) == "(2a,2b,2c,2d)"
        with pytest.raises(ValueError):
            ident.eg_family((3, 2, 2, 2))

    def test_bad_family_inputs(self):
        with pytest.raises(ValueError):
            eg_three_row_check(1, 1, 1, "(2a,2b)")
        with pytest.raises(ShapeError):
            eg_three_row_check(0, 1, 0, "(2a,2b,2c)")

    @pytest.mark.parametrize("family", [f for f in ident.EG_FAMILIES if f != "(2a+1,2b+1,2c+1)"])
    def test_seven_families_hold(self, family):
        found = 0
        for lam in eg_instances(3, 18):
            if ident.eg_family(lam) == family:
                lhs, rhs = eg_check(lam)
                assert lhs == rhs, lam
                found += 1
        assert found > 0

    def test_all_odd_line_as_printed_misses_a_term(self):
        # smallest instances: the printed two-term line is off by 2 g^(a+1,b,c)
        assert eg_check((1, 1, 1)) == (1, -1)
        assert eg_check((3, 1, 1)) == (2, 0)
        for lam in eg_instances(3, 18):
            if all(x % 2 for x in lam):
                lhs, rhs = eg_check(lam)
                a, b, c = (x // 2 for x in lam)
                assert lhs - rhs == 2 * g_shifted((a + 1, b, c))

    def test_four_row_line_as_printed(self):
        assert eg_check((2, 2, 2, 2)) == (0, 0)
        assert eg_check((4, 2, 2, 2)) == (-2, -2)
        assert eg_check((6, 2, 2, 2)) == (-7, -5)
        assert eg_check((4, 4, 2, 2)) == (0, -2)

    def test_amended_lines_hold(self):
        for rows, size in ((3, 18), (4, 20)):
            for lam in eg_instances(rows, size):
                lhs, rhs = eg_check(lam, amended=True)
                assert lhs == rhs, lam

    def test_instances(self):
        three = eg_instances(3, 6)
        assert (1, 1, 1) in three and (4, 1, 1) in three
        assert all(len(lam) == 3 for lam in three)
        four = eg_instances(4, 12)
        assert all(len(lam) == 4 and all(x % 2 == 0 for x in lam) for lam in four)
        assert four[0] == (2, 2, 2, 2)


class TestSums:
    def test_kcor_examples(self):
        assert imbalance((4,)) + imbalance((2, 2)) == 1 == kcor_a_sum(2)
        assert imbalance((2,)) == 1 == kcor_a_sum(1)
        assert kcor_b_sum(1) == 0

    @pytest.mark.parametrize("m", range(1, 6))
    def test_kcor(self, m):
        assert kcor_a_sum(m) == 1
        assert kcor_b_sum(m) == 0

    def test_sytimb_examples(self):
        assert sytimb_sum(2) == q_plus_x_power(2)
        q, x = MultiPoly.variable(4, ident.Q_), MultiPoly.variable(4, ident.X_)
        assert sytimb_sum(2) == q + x
        assert sytimb_sum(4) == (q + x) ** 2
        assert sytimb_b_sum(2).is_zero()

    @pytest.mark.parametrize("n", range(0, 10))
    def test_sytimb(self, n):
        F = sytimb_sum(n)
        assert F == q_plus_x_power(n)
        assert not F.uses_variable(ident.T_) and not F.uses_variable(ident.Y_)
        if n % 4 != 1 and n > 0:
            assert sytimb_b_sum(n).is_zero()

    def test_sytimb_b_at_one_mod_four_need_not_vanish(self):
        assert not sytimb_b_sum(1).is_zero()


class TestHooks:
    def test_examples(self):
        q, x = MultiPoly.variable(2, 0), MultiPoly.variable(2, 1)
        assert hooksum_identity(4) == q * q + (q * x).scale(2) + x * x
        assert hooksum_identity(1) == MultiPoly.const(2, 1)
        assert hooksum_identity(3) == q + x

    @pytest.mark.parametrize("route", ["qbinomial", "survivor", "recursion"])
    def test_routes(self, route):
        for n in range(11):
            assert hooksum_identity(n, route) == q_plus_x_power(n, 2, 0, 1)

    def test_survivor_counts(self):
        for m in range(1, 6):
            for j in range(m):
                assert survivor_involution((2 * m - 2 * j,) + (1,) * (2 * j)) == comb(m - 1, j)
            for j in range(m):
                assert survivor_involution((2 * m + 1 - (2 * j + 1),) + (1,) * (2 * j + 1)) == 0
        assert survivor_involution((2, 1)) == 0 == imbalance((2, 1))

    @pytest.mark.parametrize("n", range(1, 12))
    def test_survivors_match_formula_and_imbalance(self, n):
        for lam in hooks(n):
            s = survivor_involution(lam)
            assert s == survivor_formula(lam)
            assert s == abs(imbalance(lam))

    def test_non_hook_rejected(self):
        with pytest.raises(ShapeError):
            survivor_involution((2, 2))


class TestOperators:
    def test_examples(self):
        empty = PartitionVector.basis(())
        assert op_U(empty) == PartitionVector.basis((1,))
        s1 = PartitionVector.basis((1,))
        du = op_D(op_U(s1, -1), -1)
        ud = op_U(op_D(s1, -1), -1)
        assert du.at(-1) == {(1,): 2} and ud.at(-1) == {(1,): 1}
        assert (du + ud) == op_A(s1) == s1.scale(3)
        assert u_power_expansion(2) == PartitionVector.basis((2,)) + PartitionVector.basis((1, 1))
        assert du_commutator_holds(())
        assert u_power_expansion(3).coefficient((2, 1)) == QPoly([1, 1])

    def test_commutator(self):
        assert du_commutator_check(6)

    def test_commutator_fails_for_generic_q(self):
        s = PartitionVector.basis((2, 1))
        lhs = op_D(op_U(s, 2), 2) + op_U(op_D(s, 2), 2)
        assert lhs != op_A(s)

    @pytest.mark.parametrize("n", range(8))
    def test_u_power(self, n):
        v = u_power_expansion(n)
        assert set(v.terms) == set(partitions(n))
        for lam in partitions(n):
            assert v.coefficient(lam) == inv_poly_shape(lam)
