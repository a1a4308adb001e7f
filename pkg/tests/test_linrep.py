"""
Test `tilings.linrep` module.

Author: Tilings developers
"""


import math
from fractions import Fraction

import numpy as np
import pytest

from tilings.blowup import BlowupProblem, natural_gluing_system
from tilings.complexes import SimplicialComplex
from tilings.coxeter import CoxeterMatrix
from tilings.gluing import GluingSystem
from tilings.linrep import (
    build_representation, check_order_conditions, determinant, gram_matrix,
    inverse_matrix, minkowski_fixtures, minkowski_form, minkowski_reflect,
    reflection_matrix, select_parameter, verify_representation
)


def exact(rows: list) -> np.ndarray:
    return np.array([[Fraction(x) for x in row] for row in rows], dtype=object)


class TestExactArithmetic:
    """Tests for exact matrix helpers."""

    def test_inverse_and_determinant(self) -> None:
        x = exact([[2, 1], [1, 1]])
        assert determinant(x) == 1
        assert np.all(x @ inverse_matrix(x) == exact([[1, 0], [0, 1]]))

    def test_singular_matrix(self) -> None:
        with pytest.raises(ZeroDivisionError):
            inverse_matrix(exact([[1, 2], [2, 4]]))


class TestGramMatrix:
    """Tests for `gram_matrix` function."""

    @pytest.mark.parametrize("t", [2, 3])
    def test_a3_minimal(self, a3_minimal: BlowupProblem, t: int) -> None:
        g = natural_gluing_system(a3_minimal)
        expected = exact([
            [1, -t, 0, 0, -t],
            [-t, 1, -t, 0, 0],
            [0, -t, 1, -t, 0],
            [0, 0, -t, 1, -t],
            [-t, 0, 0, -t, 1],
        ])
        gram = gram_matrix(g.matrix, t)
        assert gram.dtype == object
        assert np.all(gram == expected)

    def test_float_mode(self) -> None:
        matrix = CoxeterMatrix.from_schlafli([4])
        assert gram_matrix(matrix, 2).dtype == float
        assert gram_matrix(matrix, 2)[0, 1] == pytest.approx(-2 ** -0.5)
        with pytest.raises(ValueError):
            gram_matrix(matrix, 2, exact=True)


class TestOrderConditions:
    """Tests for `check_order_conditions` function."""

    def test_natural_system_of_a3_minimal(self, a3_minimal: BlowupProblem) -> None:
        report = check_order_conditions(natural_gluing_system(a3_minimal))
        assert report.p_holds
        assert report.c_holds

    def test_comparable_pair_must_be_adjacent(self) -> None:
        matrix = CoxeterMatrix('ab', {('a', 'b'): 'inf'})
        g = GluingSystem(matrix, SimplicialComplex('ab'), {}, order=[('a', 'b')])
        report = check_order_conditions(g)
        assert not report.p['P(i)'].holds
        assert report.p['P(i)'].witness == ('a', 'b')
        assert report.c['C(v)'].holds

    def test_representation_skips_pairs_outside_star(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'b'): 'inf'})
        complex_ = SimplicialComplex('abc', [('a', 'c'), ('b', 'c')])
        g = GluingSystem(matrix, complex_, {}, order=[('a', 'b')])
        report = verify_representation(build_representation(g, 2), g)
        assert report.checks['relation_c'].holds
        assert report.checks['epsilon_images'].holds

    def test_requires_order(self, counterexample: GluingSystem) -> None:
        with pytest.raises(ValueError):
            check_order_conditions(counterexample)


class TestRepresentation:
    """Tests for `select_parameter`, `build_representation` and `verify_representation`."""

    def test_selected_parameter(self, a3_minimal: BlowupProblem) -> None:
        assert select_parameter(natural_gluing_system(a3_minimal)) == 2

    @pytest.mark.parametrize("t", [2, 3])
    def test_a3_minimal_matrices(self, a3_minimal: BlowupProblem, t: int) -> None:
        g = natural_gluing_system(a3_minimal)
        rep = build_representation(g, t)
        a, b, c, ab, bc = g.vertices
        q = Fraction(t, 1 + t)
        assert np.all(rep.matrix(a) == exact([
            [-1, 2 * t, 0, 0, 2 * t],
            [0, 1, 0, 0, 0],
            [0, 0, 1, 0, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 0, 1],
        ]))
        assert np.all(rep.matrix(b)[1] == exact([[2 * t, -1, 2 * t, 0, 0]])[0])
        assert np.all(rep.matrix(c)[2] == exact([[0, 2 * t, -1, 2 * t, 0]])[0])
        assert np.all(rep.matrix(ab) == exact([
            [0, 1, -q, 0, q],
            [1, 0, q, 0, -q],
            [0, 0, 1, 0, 0],
            [0, 0, 2 * t, -1, 2 * t],
            [0, 0, 0, 0, 1],
        ]))
        assert np.all(rep.matrix(bc) == exact([
            [1, 0, 0, 0, 0],
            [q, 0, 1, -q, 0],
            [-q, 1, 0, q, 0],
            [0, 0, 0, 1, 0],
            [2 * t, 0, 0, 2 * t, -1],
        ]))

    @pytest.mark.parametrize("t", [2, 3])
    def test_a3_minimal_verification(self, a3_minimal: BlowupProblem, t: int) -> None:
        g = natural_gluing_system(a3_minimal)
        report = verify_representation(build_representation(g, t), g)
        assert report.exact
        assert report.holds, {k: v for k, v in report.checks.items() if not v.holds}

    def test_float_mode_for_label_four(self) -> None:
        matrix = CoxeterMatrix('abc', {('a', 'b'): 4, ('b', 'c'): 'inf'})
        g = GluingSystem(matrix, SimplicialComplex('abc', [('a', 'b'), ('a', 'c')]), {})
        rep = build_representation(g, 2)
        assert not rep.exact
        assert rep.gram[0, 1] == pytest.approx(-math.sqrt(2) / 2)
        assert rep.gram[1, 2] == pytest.approx(-2.0)
        report = verify_representation(rep, g, tolerance=1e-9)
        assert not report.exact
        assert report.checks['form'].holds
        assert report.checks['involution'].holds
        assert report.checks['orders'].holds
        assert report.checks['relation_b'].holds
        assert report.holds, {k: v for k, v in report.checks.items() if not v.holds}
        with pytest.raises(ValueError):
            build_representation(g, 2, exact=True)


class TestMinkowski:
    """Tests for Minkowski reflections."""

    def test_form(self) -> None:
        assert minkowski_form((1, 1, 1, 1), (1, 1, 1, 1)) == 2
        assert minkowski_form((1, 0, 0, 0), (0, 0, 0, 1)) == 0

    def test_double_pyramid_vertices(self) -> None:
        fixtures = minkowski_fixtures()
        u1 = fixtures['pyramid']['u1']
        for i in (1, 2, 3):
            v = fixtures['double_pyramid'][f'v{i}']
            assert minkowski_reflect(u1, v) == fixtures['double_pyramid'][f"v{i}'"]
        assert fixtures['double_pyramid']["v1'"] == (0, -1, -1, -1)

    def test_all_fixture_reflections_are_integral(self) -> None:
        for vectors in minkowski_fixtures().values():
            for v in vectors.values():
                assert minkowski_form(v, v) in (1, 2)
                assert all(Fraction(x).denominator == 1 for x in reflection_matrix(v).flatten())

    def test_norm_four_has_half_integers(self) -> None:
        w = (2, 1, 0, 1)
        assert minkowski_form(w, w) == 4
        denominators = {Fraction(x).denominator for x in reflection_matrix(w).flatten()}
        assert denominators == {1, 2}

    def test_reflection_is_involution(self) -> None:
        matrix = reflection_matrix((1, 1, 1, 1))
        assert np.all(matrix @ matrix == exact(np.eye(4, dtype=int).tolist()))

    def test_lightlike_vector(self) -> None:
        with pytest.raises(ValueError):
            minkowski_reflect((1, 0, 0, 1), (1, 0, 0, 0))
