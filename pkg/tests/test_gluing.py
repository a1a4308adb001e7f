"""
Test `tilings.gluing` module.

Author: Tilings developers
"""


import pytest

from tilings.complexes import SimplicialComplex
from tilings.coxeter import CoxeterMatrix
from tilings.gluing import (
    GluingSystem, cell_domain, check_inverse_pairs, check_matrix_preserved,
    check_periodicity, derived_sequence, holonomy, relation_words
)


class TestGluingSystem:
    """Tests for `GluingSystem` class."""

    def test_missing_entries_are_fixed(self, counterexample: GluingSystem) -> None:
        assert counterexample.j('d') == {x: x for x in 'abcd'}
        assert counterexample.apply('a', 'c') == 'c'
        assert counterexample.is_homogeneous()
        assert not counterexample.has_order

    def test_edges_must_match_matrix(self) -> None:
        matrix = CoxeterMatrix('ab', {('a', 'b'): 'inf'})
        with pytest.raises(ValueError):
            GluingSystem(matrix, SimplicialComplex('ab', ['ab']), {})

    def test_map_must_stay_in_star(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'c'): 'inf'})
        complex_ = SimplicialComplex('abc', ['ab', 'bc'])
        with pytest.raises(ValueError):
            GluingSystem(matrix, complex_, {'a': {'c': 'b'}})

    def test_map_must_be_bijection(self) -> None:
        matrix = CoxeterMatrix('abc')
        complex_ = SimplicialComplex('abc', ['abc'])
        with pytest.raises(ValueError):
            GluingSystem(matrix, complex_, {'a': {'b': 'c'}})

    def test_bar_must_be_involution(self) -> None:
        matrix = CoxeterMatrix('abc')
        complex_ = SimplicialComplex('abc', ['abc'])
        with pytest.raises(ValueError):
            GluingSystem(matrix, complex_, {}, bar={'a': 'b', 'b': 'c', 'c': 'a'})

    def test_order_is_transitively_closed(self) -> None:
        matrix = CoxeterMatrix('abc')
        complex_ = SimplicialComplex('abc', ['abc'])
        g = GluingSystem(matrix, complex_, {}, order=[('a', 'b'), ('b', 'c')])
        assert g.less('a', 'c')
        assert g.below('c') == frozenset('ab')
        with pytest.raises(ValueError):
            GluingSystem(matrix, complex_, {}, order=[('a', 'b'), ('b', 'a')])


class TestDerivedSequence:
    """Tests for `derived_sequence` and `relation_words` functions."""

    def test_counterexample_pair(self, counterexample: GluingSystem) -> None:
        sequence = derived_sequence(counterexample, 'b', 'a')
        assert sequence.vertices == ('b', 'a', 'd', 'a', 'b', 'a')
        assert sequence.word == ('a', 'd', 'a', 'b')
        assert sequence.periodic

    def test_trivial_gluing_gives_coxeter_relations(self) -> None:
        matrix = CoxeterMatrix('ab', {('a', 'b'): 3})
        g = GluingSystem(matrix, SimplicialComplex('ab', ['ab']), {})
        assert relation_words(g) == {('a', 'b'): ('b', 'a') * 3, ('b', 'a'): ('a', 'b') * 3}

    def test_nonadjacent_pair(self) -> None:
        matrix = CoxeterMatrix('ab', {('a', 'b'): 'inf'})
        g = GluingSystem(matrix, SimplicialComplex('ab'), {})
        with pytest.raises(ValueError):
            derived_sequence(g, 'a', 'b')
        assert relation_words(g) == {}


class TestConditions:
    """Tests for conditions (1)-(3) and holonomy."""

    def test_counterexample_satisfies_first_three(self, counterexample: GluingSystem) -> None:
        assert check_inverse_pairs(counterexample).holds
        assert check_matrix_preserved(counterexample).holds
        assert check_periodicity(counterexample).holds

    def test_holonomy_of_counterexample_cycle(self, counterexample: GluingSystem) -> None:
        domain = cell_domain(counterexample, 'b', 'a')
        loop = holonomy(counterexample, ('a', 'd', 'a', 'b'), domain)
        assert loop.cycles() == [('c', 'd')]

    def test_matrix_change_is_detected(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'b'): 3})
        complex_ = SimplicialComplex('abc', ['abc'])
        g = GluingSystem(matrix, complex_, {'c': {'a': 'b', 'b': 'a'}})
        assert check_matrix_preserved(g).holds
        g = GluingSystem(matrix, complex_, {'a': {'b': 'c', 'c': 'b'}})
        verdict = check_matrix_preserved(g, include_center=True)
        assert not verdict.holds
        assert verdict.witness[0] == 'a'
