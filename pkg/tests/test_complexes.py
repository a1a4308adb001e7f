"""
Test `tilings.complexes` module.

Author: Tilings developers
"""


import pytest

from tilings.complexes import SimplicialComplex, automorphism_group, flag_check
from tilings.coxeter import CoxeterMatrix
from tilings.errors import CapExceededError
from tilings.polytopes import diagonal_model


def cycle(n: int) -> SimplicialComplex:
    return SimplicialComplex(range(n), [(i, (i + 1) % n) for i in range(n)])


class TestSimplicialComplex:
    """Tests for `SimplicialComplex` class."""

    def test_closure_and_facets(self) -> None:
        complex_ = SimplicialComplex('abcd', ['abc', 'cd'])
        assert complex_.has_face('ab')
        assert not complex_.has_face('ad')
        assert complex_.facets == [frozenset('abc'), frozenset('cd')]
        assert complex_.dimension == 2

    def test_star_and_link(self) -> None:
        complex_ = SimplicialComplex('abcd', ['abc', 'cd'])
        assert complex_.star_vertices('c') == frozenset('abcd')
        assert complex_.link('c') == SimplicialComplex('abd', ['ab', 'd'])
        assert complex_.star('d') == SimplicialComplex('cd', ['cd'])

    def test_unknown_vertex(self) -> None:
        with pytest.raises(ValueError):
            SimplicialComplex('ab', ['ac'])
        with pytest.raises(ValueError):
            SimplicialComplex('ab').neighbors('c')

    def test_relabel(self) -> None:
        relabelled = cycle(3).relabel({0: 'x', 1: 'y', 2: 'z'})
        assert relabelled.has_face('xz')
        with pytest.raises(ValueError):
            cycle(3).relabel({0: 'x', 1: 'x', 2: 'z'})


class TestAutomorphismGroup:
    """Tests for `automorphism_group` function."""

    def test_pentagon(self) -> None:
        automorphisms = automorphism_group(cycle(5))
        assert len(automorphisms) == 10
        assert automorphisms[0].is_identity()

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_noncrossing_complex_has_dihedral_symmetry(self, n: int) -> None:
        complex_ = diagonal_model(n).noncrossing_complex()
        assert len(automorphism_group(complex_)) == 2 * (n + 3)

    def test_matrix_restricts_symmetries(self) -> None:
        matrix = CoxeterMatrix(range(5), {(0, 1): 3})
        automorphisms = automorphism_group(cycle(5), preserve=matrix)
        assert len(automorphisms) == 2

    def test_vertex_cap(self) -> None:
        with pytest.raises(CapExceededError):
            automorphism_group(cycle(6), max_vertices=5)

    def test_automorphism_cap(self) -> None:
        with pytest.raises(CapExceededError):
            automorphism_group(cycle(6), max_automorphisms=3)


class TestFlagCheck:
    """Tests for `flag_check` function."""

    def test_empty_triangle(self) -> None:
        verdict = flag_check(cycle(3))
        assert not verdict.holds
        assert verdict.witness == frozenset(range(3))

    def test_filled_triangle(self) -> None:
        assert flag_check(SimplicialComplex(range(3), [range(3)])).holds

    def test_metric_flag_ignores_nonspherical_cliques(self) -> None:
        matrix = CoxeterMatrix(range(3), {(0, 1): 3, (1, 2): 3, (0, 2): 3})
        assert flag_check(cycle(3), matrix).holds

    def test_metric_flag_detects_spherical_cliques(self) -> None:
        matrix = CoxeterMatrix(range(3), {(0, 1): 3, (1, 2): 3})
        verdict = flag_check(cycle(3), matrix)
        assert not verdict.holds
