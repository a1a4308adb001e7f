"""
Test `tilings.blowup` module.

Author: Tilings developers
"""


import math
import random

import pytest

from tilings.blowup import (
    BlowupProblem, check_admissible, condition_f, conjugate_subset, framing_conditions,
    gluing_involution, is_nested, mock_presentation, natural_gluing_system, nested_complex,
    pair_case, r_decomposition
)
from tilings.coxeter import CoxeterMatrix
from tilings.errors import InadmissibleError


def fs(*labels) -> frozenset:
    return frozenset(labels)


def boundary_blowup(symbol: list, maximal: bool = True) -> BlowupProblem:
    matrix = CoxeterMatrix.from_schlafli(symbol)
    constructor = BlowupProblem.maximal if maximal else BlowupProblem.minimal
    return constructor(matrix, BlowupProblem.boundary_complex(matrix))


class TestBlowupProblem:
    """Tests for `BlowupProblem` class."""

    def test_minimal_collection(self, a3_minimal: BlowupProblem) -> None:
        assert a3_minimal.collection == {fs('a', 'b'), fs('b', 'c')}
        assert a3_minimal.s_sharp == (
            fs('a'), fs('b'), fs('c'), fs('a', 'b'), fs('b', 'c')
        )

    def test_maximal_collection(self, a3_matrix: CoxeterMatrix) -> None:
        problem = BlowupProblem.maximal(a3_matrix, BlowupProblem.boundary_complex(a3_matrix))
        assert problem.collection == {fs('a', 'b'), fs('b', 'c'), fs('a', 'c')}

    def test_default_complex_has_all_spherical_subsets(self, a3_matrix: CoxeterMatrix) -> None:
        problem = BlowupProblem(a3_matrix)
        assert problem.complex.has_face('abc')
        assert not BlowupProblem.boundary_complex(a3_matrix).has_face('abc')

    def test_rejects_singletons_and_non_simplices(self, a3_matrix: CoxeterMatrix) -> None:
        boundary = BlowupProblem.boundary_complex(a3_matrix)
        with pytest.raises(ValueError):
            BlowupProblem(a3_matrix, boundary, [['a']])
        with pytest.raises(ValueError):
            BlowupProblem(a3_matrix, boundary, [['a', 'b', 'c']])


class TestAdmissibility:
    """Tests for `r_decomposition`, `conjugate_subset` and `check_admissible` functions."""

    def test_conjugate_subset(self, a3_matrix: CoxeterMatrix) -> None:
        assert conjugate_subset(a3_matrix, 'abc', 'a') == fs('c')
        assert conjugate_subset(a3_matrix, 'abc', 'b') == fs('b')
        assert conjugate_subset(a3_matrix, 'ab', 'a') == fs('b')
        with pytest.raises(ValueError):
            conjugate_subset(a3_matrix, 'ab', 'c')

    def test_r_decomposition(self, a3_minimal: BlowupProblem) -> None:
        decomposition = r_decomposition(a3_minimal, 'ab')
        assert decomposition.factors == (fs('a', 'b'),)
        assert decomposition.fixed == frozenset()
        decomposition = r_decomposition(a3_minimal, 'ac')
        assert decomposition.factors == ()
        assert decomposition.completely_disjoint
        with pytest.raises(ValueError):
            r_decomposition(a3_minimal, 'abc')

    def test_a3_minimal_is_fully_admissible(self, a3_minimal: BlowupProblem) -> None:
        verdict = check_admissible(a3_minimal)
        assert verdict.admissible and verdict.fully_admissible

    def test_failed_decomposition(self, a3_matrix: CoxeterMatrix) -> None:
        problem = BlowupProblem(a3_matrix, None, [['a', 'b']])
        verdict = check_admissible(problem)
        assert not verdict.admissible
        assert verdict.witness == fs('a', 'b', 'c')
        with pytest.raises(InadmissibleError):
            nested_complex(problem)

    def test_unstable_collection(self, a3_matrix: CoxeterMatrix) -> None:
        problem = BlowupProblem(a3_matrix, None, [['a', 'b'], ['a', 'b', 'c']])
        verdict = check_admissible(problem)
        assert not verdict.admissible
        assert verdict.violation == 'R below T is not stable under j_T'

    def test_empty_collection_is_not_fully_admissible(self) -> None:
        verdict = check_admissible(BlowupProblem(CoxeterMatrix.from_schlafli([3])))
        assert verdict.admissible
        assert not verdict.fully_admissible


class TestNestedComplex:
    """Tests for `pair_case`, `is_nested` and `nested_complex` functions."""

    def test_pair_cases(self, a3_minimal: BlowupProblem) -> None:
        assert pair_case(a3_minimal, fs('a'), fs('c')) == 1
        assert pair_case(a3_minimal, fs('a'), fs('b')) is None
        assert pair_case(a3_minimal, fs('a'), fs('a', 'b')) == 3
        assert pair_case(a3_minimal, fs('a', 'b'), fs('b', 'c')) is None

    def test_is_nested(self, a3_minimal: BlowupProblem) -> None:
        assert is_nested(a3_minimal, [fs('a'), fs('c')])
        assert is_nested(a3_minimal, [fs('a'), fs('a', 'b')])
        assert not is_nested(a3_minimal, [fs('a'), fs('b')])

    def test_a3_minimal_is_pentagon(self, a3_minimal: BlowupProblem) -> None:
        nested = nested_complex(a3_minimal)
        graph = nested.complex.one_skeleton()
        assert graph.number_of_nodes() == 5
        assert graph.number_of_edges() == 5
        assert all(degree == 2 for _, degree in graph.degree)
        assert nested.complex.dimension == 1

    def test_a3_minimal_matrix(self, a3_minimal: BlowupProblem) -> None:
        m_sharp = nested_complex(a3_minimal).m_sharp
        assert m_sharp.m(fs('a'), fs('c')) == 2
        assert m_sharp.m(fs('a'), fs('b')) == math.inf
        assert m_sharp.m(fs('a', 'b'), fs('b', 'c')) == math.inf
        assert m_sharp.m(fs('a'), fs('a', 'b')) == 2

    def test_maximal_a3_is_hexagon(self) -> None:
        nested = nested_complex(boundary_blowup([3, 3]))
        graph = nested.complex.one_skeleton()
        assert graph.number_of_nodes() == 6
        assert all(degree == 2 for _, degree in graph.degree)

    @pytest.mark.parametrize("symbol", [[3], [5], [2]])
    def test_boundary_of_rank_two_cell(self, symbol: list) -> None:
        matrix = CoxeterMatrix.from_schlafli(symbol)
        problem = BlowupProblem.minimal(matrix, BlowupProblem.boundary_complex(matrix))
        assert problem.collection == frozenset()
        nested = nested_complex(problem)
        assert nested.m_sharp.m(fs(1), fs(2)) == math.inf
        assert list(nested.complex.edges()) == []
        assert pair_case(problem, fs(1), fs(2)) is None
        g = natural_gluing_system(problem, nested)
        assert g.star(fs(1)) == {fs(1)}

    def test_random_instances(self) -> None:
        rng = random.Random(2024)
        checked = 0
        for _ in range(40):
            n = rng.randint(2, 5)
            symbol = [rng.choice([2, 3, 3, 4]) for _ in range(n - 1)]
            matrix = CoxeterMatrix.from_schlafli(symbol)
            problem = BlowupProblem.minimal(matrix, BlowupProblem.boundary_complex(matrix))
            if not check_admissible(problem).admissible:
                continue
            nested = nested_complex(problem)
            for face in nested.faces:
                assert all(face - {x} in nested.faces for x in face if len(face) > 1)
            for first, second in nested.complex.edges():
                assert pair_case(problem, first, second) is not None
            for T in nested.s_sharp:
                involution = gluing_involution(problem, nested, T)
                assert (involution * involution).is_identity()
            checked += 1
        assert checked > 0


class TestConditionF:
    """Tests for `condition_f` function."""

    def test_a3_minimal(self, a3_minimal: BlowupProblem) -> None:
        assert condition_f(a3_minimal).holds

    @pytest.mark.parametrize("symbol", [[3, 3], [4, 3], [2, 2, 2], [3, 2, 3]])
    def test_maximal_blowups(self, symbol: list) -> None:
        assert condition_f(boundary_blowup(symbol)).holds

    def test_three_a2(self) -> None:
        gens = ['a1', 'b1', 'a2', 'b2', 'a3', 'b3']
        matrix = CoxeterMatrix(gens, {('a1', 'b1'): 3, ('a2', 'b2'): 3, ('a3', 'b3'): 3})
        problem = BlowupProblem.minimal(matrix, BlowupProblem.boundary_complex(matrix))
        verdict = condition_f(problem)
        assert not verdict.holds
        assert verdict.witness == frozenset(gens)
        assert set(verdict.blocks) == {fs('a1', 'b1'), fs('a2', 'b2'), fs('a3', 'b3')}

    def test_requires_full_admissibility(self) -> None:
        with pytest.raises(InadmissibleError):
            condition_f(BlowupProblem(CoxeterMatrix.from_schlafli([3])))


class TestGluingSystemOfBlowup:
    """Tests for `gluing_involution`, `natural_gluing_system` and `framing_conditions`."""

    def test_involution_of_a3_minimal(self, a3_minimal: BlowupProblem) -> None:
        nested = nested_complex(a3_minimal)
        involution = gluing_involution(a3_minimal, nested, fs('a', 'b'))
        assert involution(fs('a')) == fs('b')
        assert involution(fs('a', 'b')) == fs('a', 'b')
        assert gluing_involution(a3_minimal, nested, fs('a')).is_identity()

    def test_natural_system_is_ordered_by_inclusion(self, a3_minimal: BlowupProblem) -> None:
        g = natural_gluing_system(a3_minimal)
        assert g.has_order and g.is_homogeneous()
        assert g.less(fs('a'), fs('a', 'b'))
        assert not g.comparable(fs('a'), fs('c'))

    def test_a3_minimal_framing(self, a3_minimal: BlowupProblem) -> None:
        report = framing_conditions(natural_gluing_system(a3_minimal))
        assert report.m1.holds and report.m2.holds

    @pytest.mark.parametrize("symbol", [[3, 3], [4, 3], [2, 2, 2]])
    def test_maximal_blowups_are_covered(self, symbol: list) -> None:
        report = framing_conditions(natural_gluing_system(boundary_blowup(symbol)))
        assert report.m1.holds and report.m2.holds
        assert report.e.holds and report.h.holds


class TestMockPresentation:
    """Tests for `mock_presentation` function."""

    def test_a3_minimal(self, a3_minimal: BlowupProblem) -> None:
        presentation = mock_presentation(a3_minimal)
        relators = set(presentation.relators)
        assert len(presentation.gens) == 5
        assert (fs('a'), fs('c')) * 2 in relators
        assert (fs('a'), fs('b')) * 3 not in relators
        assert (fs('a', 'b'), fs('a'), fs('a', 'b'), fs('b')) in relators
        assert len(relators) == 10
        assert presentation.verified

    def test_empty_collection(self) -> None:
        matrix = CoxeterMatrix.from_rows(['a', 'b'], [[1, 3], [3, 1]])
        presentation = mock_presentation(BlowupProblem(matrix))
        assert set(presentation.relators) == {
            (fs('a'), fs('a')), (fs('b'), fs('b')), (fs('a'), fs('b')) * 3
        }

    def test_images_are_longest_words(self, a3_minimal: BlowupProblem) -> None:
        images = mock_presentation(a3_minimal).images
        assert images[fs('a')] == ('a',)
        assert len(images[fs('a', 'b')]) == 3
