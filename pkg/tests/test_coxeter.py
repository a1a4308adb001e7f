"""
Test `tilings.coxeter` module.

Author: Tilings developers
"""


import math

import pytest

from tilings.coxeter import (
    CoxeterMatrix, classify_subdiagram, enumerate_finite_group, group_order,
    is_spherical, longest_element_symmetry, spherical_poset
)
from tilings.errors import CapExceededError


class TestCoxeterMatrix:
    """Tests for `CoxeterMatrix` class."""

    def test_from_rows_with_infinity(self) -> None:
        matrix = CoxeterMatrix.from_rows(['s', 't'], [[1, 'inf'], ['inf', 1]])
        assert matrix.m('s', 't') == math.inf
        assert matrix.rows() == [[1, math.inf], [math.inf, 1]]

    @pytest.mark.parametrize(
        "rows",
        [
            [[1, 3], [4, 1]],
            [[2, 3], [3, 1]],
            [[1, 1], [1, 1]],
        ]
    )
    def test_from_rows_rejects_bad_tables(self, rows: list) -> None:
        with pytest.raises(ValueError):
            CoxeterMatrix.from_rows(['s', 't'], rows)

    def test_from_schlafli(self) -> None:
        matrix = CoxeterMatrix.from_schlafli([4, 3, 5])
        assert matrix.gens == (1, 2, 3, 4)
        assert matrix.m(1, 2) == 4
        assert matrix.m(3, 4) == 5
        assert matrix.m(1, 3) == 2
        assert matrix.m(2, 2) == 1

    def test_restrict(self) -> None:
        matrix = CoxeterMatrix.from_schlafli([4, 3, 5])
        restricted = matrix.restrict([2, 3, 4])
        assert restricted.gens == (2, 3, 4)
        assert restricted.m(3, 4) == 5

    def test_unknown_generator(self) -> None:
        with pytest.raises(ValueError):
            CoxeterMatrix.from_schlafli([3]).m(1, 7)


class TestClassifySubdiagram:
    """Tests for `classify_subdiagram` and `group_order` functions."""

    @pytest.mark.parametrize(
        "symbol, names, order",
        [
            ([3, 3], ['A3'], 24),
            ([4, 3], ['B3'], 48),
            ([5, 3], ['H3'], 120),
            ([3, 4, 3], ['F4'], 1152),
            ([5, 3, 3], ['H4'], 14400),
            ([6], ['I2(6)'], 12),
            ([3, 2, 3], ['A2', 'A2'], 36),
            ([2, 2, 2], ['A1', 'A1', 'A1', 'A1'], 16),
            ([4, 4], ['NonSpherical'], math.inf),
            ([3, 6], ['NonSpherical'], math.inf),
        ]
    )
    def test_paths(self, symbol: list, names: list, order: float) -> None:
        coxeter_type = classify_subdiagram(CoxeterMatrix.from_schlafli(symbol))
        assert coxeter_type.names == names
        assert group_order(coxeter_type) == order

    def test_d4_and_e6(self) -> None:
        d4 = CoxeterMatrix(['a', 'b', 'c', 'd'], {('a', 'c'): 3, ('b', 'c'): 3, ('c', 'd'): 3})
        assert classify_subdiagram(d4).names == ['D4']
        assert group_order(classify_subdiagram(d4)) == 192
        e6 = CoxeterMatrix(
            range(6), {(0, 1): 3, (1, 2): 3, (2, 3): 3, (3, 4): 3, (2, 5): 3}
        )
        assert classify_subdiagram(e6).names == ['E6']

    def test_cycle_is_not_spherical(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'b'): 3, ('b', 'c'): 3, ('a', 'c'): 3})
        assert not is_spherical(matrix, 'abc')
        assert is_spherical(matrix, 'ab')


class TestLongestElementSymmetry:
    """Tests for `longest_element_symmetry` function."""

    def test_a3_reverses_path(self) -> None:
        matrix = CoxeterMatrix.from_schlafli([3, 3])
        permutation, antipodal = longest_element_symmetry(classify_subdiagram(matrix))
        assert permutation(1) == 3 and permutation(2) == 2
        assert not antipodal

    @pytest.mark.parametrize("symbol", [[4, 3], [5, 3], [4], [6]])
    def test_antipodal_types(self, symbol: list) -> None:
        matrix = CoxeterMatrix.from_schlafli(symbol)
        permutation, antipodal = longest_element_symmetry(classify_subdiagram(matrix))
        assert antipodal and permutation.is_identity()

    def test_agrees_with_root_model(self) -> None:
        matrix = CoxeterMatrix.from_schlafli([3, 3, 3])
        model = enumerate_finite_group(matrix)
        permutation, _ = longest_element_symmetry(classify_subdiagram(matrix))
        assert model.longest_element_action(matrix.gens) == permutation

    def test_rejects_infinite_type(self) -> None:
        with pytest.raises(ValueError):
            longest_element_symmetry(classify_subdiagram(CoxeterMatrix.from_schlafli([4, 4])))


class TestSphericalPoset:
    """Tests for `spherical_poset` function."""

    def test_affine_a2(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'b'): 3, ('b', 'c'): 3, ('a', 'c'): 3})
        subsets = spherical_poset(matrix)
        assert len(subsets) == 7
        assert frozenset('abc') not in subsets
        assert subsets[0] == frozenset()

    def test_cap(self) -> None:
        with pytest.raises(CapExceededError):
            spherical_poset(CoxeterMatrix.from_schlafli([2] * 5), max_generators=4)


class TestEnumerateFiniteGroup:
    """Tests for `enumerate_finite_group` function."""

    @pytest.mark.parametrize(
        "symbol, order, longest_length",
        [
            ([3, 3], 24, 6),
            ([4, 3], 48, 9),
            ([5], 10, 5),
            ([2], 4, 2),
        ]
    )
    def test_orders(self, symbol: list, order: int, longest_length: int) -> None:
        model = enumerate_finite_group(CoxeterMatrix.from_schlafli(symbol))
        assert model.order == order
        word = model.longest_word()
        assert len(word) == longest_length

    def test_relations_hold(self) -> None:
        model = enumerate_finite_group(CoxeterMatrix.from_schlafli([3, 3]))
        assert model.is_identity((1, 2) * 3)
        assert model.is_identity((1, 3) * 2)
        assert not model.is_identity((1, 2))

    def test_infinite_group(self) -> None:
        with pytest.raises(ValueError):
            enumerate_finite_group(CoxeterMatrix.from_schlafli([3, 6]))

    def test_order_cap(self) -> None:
        with pytest.raises(CapExceededError):
            enumerate_finite_group(CoxeterMatrix.from_schlafli([3, 3, 3]), max_order=100)
