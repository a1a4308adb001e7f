"""
Test `tilings.polytopes` module.

Author: Tilings developers
"""


from typing import Callable

import pytest

from tilings.coxeter import CoxeterMatrix
from tilings.errors import CapExceededError
from tilings.polytopes import (
    DiagonalModel, assoc_automorphisms, chain_complex, classify_family, face_type,
    iso_tests, max_symmetry_test, permutohedron_checks, symm_presentation,
    tiling_gluing_data
)


class TestDiagonalModel:
    """Tests for `DiagonalModel` class."""

    @pytest.mark.parametrize("n, expected", [(1, 2), (2, 5), (3, 9), (4, 14)])
    def test_number_of_diagonals(self, n: int, expected: int) -> None:
        assert len(DiagonalModel(n).diagonals) == expected

    def test_intervals(self) -> None:
        model = DiagonalModel(3)
        assert model.interval_of((0, 2)) == frozenset({1})
        assert model.interval_of((4, 0)) == frozenset({1, 2, 3})
        assert model.diagonal_of({2, 3}) == (1, 4)
        assert set(model.intervals) == {
            frozenset(range(k, l + 1)) for k in range(1, 5) for l in range(k, 5)
            if (k, l) != (1, 4)
        }
        with pytest.raises(ValueError):
            model.diagonal_of({1, 2, 3, 4})

    def test_crossing(self) -> None:
        model = DiagonalModel(2)
        assert model.crosses((0, 2), (1, 3))
        assert not model.crosses((0, 2), (0, 3))
        assert not model.crosses((0, 2), (2, 4))
        with pytest.raises(ValueError):
            model.crosses((0, 1), (1, 3))

    def test_vertex_cutting(self) -> None:
        model = DiagonalModel(2)
        assert model.vertex_cutting(0) == (1, 4)
        assert model.vertex_cutting(2) == (1, 3)

    def test_pentagon(self) -> None:
        complex_ = DiagonalModel(2).noncrossing_complex()
        assert len(complex_) == 5
        assert len(complex_.facets) == 5
        assert complex_.dimension == 1
        assert DiagonalModel(2).crossing_graph().number_of_edges() == 5

    def test_faces_of_k3(self) -> None:
        assert face_type(3, (0, 2)) == (0, 2)
        assert face_type(3, (0, 3)) == (1, 1)

    def test_nonpositive_dimension(self) -> None:
        with pytest.raises(ValueError):
            DiagonalModel(0)


class TestAssocAutomorphisms:
    """Tests for `assoc_automorphisms` function."""

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_faithful_action(self, n: int) -> None:
        action = assoc_automorphisms(n)
        assert action.order == 2 * (n + 3)
        assert action.kernel == ('rotation 0',)
        assert action.image[0].is_identity()

    def test_square_has_kernel(self) -> None:
        action = assoc_automorphisms(1)
        assert action.order == 2
        assert 'rotation 2' in action.kernel


class TestTilingGluingData:
    """Tests for `TilingGluingData` class."""

    @pytest.mark.parametrize(
        "symbol, expected",
        [
            ((3, 3, 3), 3),
            ((4, 3, 3), 2),
            ((3, 4, 3), 2),
            ((4, 3, 4), 1),
            ((3, 5, 3), 3),
            ((5, 3, 4), 2),
            ((5, 3, 5), 3),
            ((3, 3, 3, 3), 7),
            ((4, 3, 3, 3), 5),
            ((4, 3, 3, 4), 3),
            ((3, 4, 3, 3), 4),
            ((5, 3, 3, 3), 6),
            ((5, 3, 3, 4), 4),
            ((5, 3, 3, 5), 5),
        ]
    )
    def test_t_invariant(self, symbol: tuple, expected: int) -> None:
        assert tiling_gluing_data(symbol).t == expected

    def test_extension_search_agrees_with_t(self) -> None:
        data = tiling_gluing_data((4, 3, 3))
        found = data.extension_search()
        assert frozenset(T for T, flag in found.items() if not flag) == data.nonextendable

    def test_short_symbol(self) -> None:
        with pytest.raises(ValueError):
            tiling_gluing_data((3,))

    def test_nonspherical_interval(self) -> None:
        with pytest.raises(ValueError):
            tiling_gluing_data((6, 3, 3))


class TestIsomorphisms:
    """Tests for `iso_tests` and `classify_family` functions."""

    def test_different_t(self) -> None:
        verdict = iso_tests(tiling_gluing_data((3, 3, 3)), tiling_gluing_data((4, 3, 4)))
        assert not verdict.necessary
        assert not verdict.sufficient
        assert verdict.witness is None

    def test_tiling_is_isomorphic_to_itself(self) -> None:
        data = tiling_gluing_data((4, 3, 3))
        verdict = iso_tests(data, data)
        assert verdict.necessary and verdict.conjugate and verdict.sufficient

    def test_different_dimensions(self) -> None:
        with pytest.raises(ValueError):
            iso_tests(tiling_gluing_data((3, 3)), tiling_gluing_data((3, 3, 3)))

    @pytest.mark.parametrize(
        "name, expected", [('assoc_dim2', 1), ('assoc_dim3', 4), ('assoc_dim4', 9), ('assoc_dim5', 3)]
    )
    def test_number_of_classes(self, load_corpus: Callable, name: str, expected: int) -> None:
        symbols = load_corpus(name).payload['symbols']
        classification = classify_family(symbols)
        assert len(classification.classes) == expected
        assert sum(len(c) for c in classification.classes) == len(symbols)

    @pytest.mark.parametrize(
        "first, second",
        [
            ((4, 3, 3), (3, 4, 3)),
            ((4, 3, 5), (3, 4, 3)),
            ((4, 3, 3), (4, 3, 5)),
        ]
    )
    def test_tilings_with_two_nonextendable_mirrors(
            self, first: tuple[int, ...], second: tuple[int, ...]
    ) -> None:
        verdict = iso_tests(tiling_gluing_data(first), tiling_gluing_data(second))
        assert verdict.necessary
        assert verdict.sufficient
        assert verdict.witness is not None

    def test_gluing_maps_are_changed_on_other_side(self) -> None:
        verdict = iso_tests(tiling_gluing_data((4, 3, 3)), tiling_gluing_data((3, 4, 3)))
        assert not verdict.conjugate
        assert verdict.reframed
        assert all(len(T) == 2 for T in verdict.reframed)

    def test_three_dimensional_family(self) -> None:
        symbols = [
            (4, 2, 4), (2, 4, 2),
            (4, 3, 4), (2, 4, 3),
            (4, 3, 3), (4, 3, 5), (3, 4, 3),
            (3, 3, 3), (5, 3, 3), (3, 5, 3), (5, 3, 5),
        ]
        classification = classify_family(symbols)
        assert classification.classes == (
            ((4, 2, 4), (2, 4, 2)),
            ((4, 3, 4), (2, 4, 3)),
            ((4, 3, 3), (4, 3, 5), (3, 4, 3)),
            ((3, 3, 3), (5, 3, 3), (3, 5, 3), (5, 3, 5)),
        )
        assert classification.flagged == ()
        assert [classification.t[c[0]] for c in classification.classes] == [0, 1, 2, 3]

    def test_four_dimensional_family(self) -> None:
        symbols = [
            (2, 4, 2, 4), (4, 2, 2, 4), (3, 4, 2, 4), (4, 3, 3, 4), (2, 4, 3, 3),
            (3, 3, 4, 3), (5, 3, 3, 4), (4, 3, 3, 3), (5, 3, 3, 5), (5, 3, 3, 3),
            (3, 3, 3, 3),
        ]
        classification = classify_family(symbols)
        assert len(classification.classes) == 9
        assert ((2, 4, 2, 4), (4, 2, 2, 4)) in classification.classes
        assert ((4, 3, 3, 4), (2, 4, 3, 3)) in classification.classes
        assert classification.flagged == ()

    def test_mixed_lengths(self) -> None:
        with pytest.raises(ValueError):
            classify_family([(3, 3), (3, 3, 3)])

    def test_export(self) -> None:
        classification = classify_family([(3, 3), (4, 4)])
        result = classification.as_dict(DiagonalModel(2))
        assert result['classes'] == [[[3, 3], [4, 4]]]
        assert len(result['t']) == 2
        assert result['flagged'] == []


class TestSymmetry:
    """Tests for `max_symmetry_test` and `symm_presentation` functions."""

    def test_all_threes_is_maximally_symmetric(self) -> None:
        assert max_symmetry_test(tiling_gluing_data((3, 3))).holds

    @pytest.mark.parametrize("n", [2, 3])
    def test_psi_kills_relators(self, n: int) -> None:
        result = symm_presentation(n)
        assert result.verified
        diagonals = len(DiagonalModel(n).diagonals)
        assert result.families['beta squares'] == 2 * diagonals
        assert result.families['rho squares'] == diagonals
        assert len(result.presentation.gens) == 3 * diagonals

    def test_bounds(self) -> None:
        with pytest.raises(ValueError):
            symm_presentation(1)
        with pytest.raises(CapExceededError):
            symm_presentation(4, max_dimension=3)


class TestPermutohedron:
    """Tests for `chain_complex` and `permutohedron_checks` functions."""

    def test_chain_complex(self) -> None:
        complex_ = chain_complex('abc')
        assert len(complex_) == 6
        assert len(complex_.facets) == 6
        assert complex_.dimension == 1

    def test_a3_cell(self) -> None:
        report = permutohedron_checks(CoxeterMatrix.from_schlafli([3, 3]))
        assert report.n == 2
        assert report.vertex_count == 6
        assert report.chains_match
        assert report.automorphism_order == 12

    def test_cubical_honeycomb(self) -> None:
        report = permutohedron_checks(CoxeterMatrix.from_schlafli([4, 3, 4]), 'simplicial')
        assert report.n == 3
        assert report.vertex_count == 14
        assert report.chains_match
        assert report.automorphism_order == 48

    def test_mode_mismatch(self) -> None:
        with pytest.raises(ValueError):
            permutohedron_checks(CoxeterMatrix.from_schlafli([4, 3, 4]), 'spherical')
        with pytest.raises(ValueError):
            permutohedron_checks(CoxeterMatrix.from_schlafli([3, 3]), 'simplicial')
        with pytest.raises(ValueError):
            permutohedron_checks(CoxeterMatrix.from_schlafli([3, 3]), 'cubical')
