"""
Shared fixtures.

Author: Tilings developers
"""


import os

import pytest

from tilings.blowup import BlowupProblem
from tilings.complexes import SimplicialComplex
from tilings.coxeter import CoxeterMatrix
from tilings.documents import ProblemDocument
from tilings.gluing import GluingSystem


CORPUS_DIR = os.path.join(os.path.dirname(__file__), os.pardir, 'docs', 'corpus')


def corpus_path(name: str) -> str:
    """Return path to a corpus document."""
    return os.path.join(CORPUS_DIR, f'{name}.json')


@pytest.fixture
def load_corpus():
    """Read corpus document by its name."""

    def load(name: str) -> ProblemDocument:
        return ProblemDocument.load(corpus_path(name))

    return load


@pytest.fixture
def a3_matrix() -> CoxeterMatrix:
    return CoxeterMatrix.from_rows(['a', 'b', 'c'], [[1, 3, 2], [3, 1, 3], [2, 3, 1]])


@pytest.fixture
def a3_minimal(a3_matrix: CoxeterMatrix) -> BlowupProblem:
    return BlowupProblem.minimal(a3_matrix, BlowupProblem.boundary_complex(a3_matrix))


@pytest.fixture
def counterexample() -> GluingSystem:
    """Right-angled gluing data on four vertices whose group is dihedral of order 14."""
    gens = ['a', 'b', 'c', 'd']
    matrix = CoxeterMatrix(gens)
    faces = [frozenset(gens)]
    complex_ = SimplicialComplex(gens, faces)
    involutions = {
        'a': {'b': 'd', 'd': 'b'},
        'b': {'c': 'd', 'd': 'c'},
        'c': {'a': 'd', 'd': 'a'},
    }
    return GluingSystem(matrix, complex_, involutions)
