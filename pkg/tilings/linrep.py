"""
Build linear representations of mock reflection groups.

Given a homogeneous gluing system with a partial order satisfying
Conditions (P) and (C), every generator v acts on E = R^V by the
involution that is -1 on the span of e_v and E_v and +1 on their
B_t-orthogonal complement. Matrices act on column vectors, so the
column of u holds the image of e_u.

Author: Tilings developers
"""


import itertools
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Hashable, Optional, Sequence, Union

import numpy as np

from tilings.constants import FLOAT_TOLERANCE, INFINITY, T_SCAN_CAP
from tilings.coxeter import CoxeterMatrix, is_spherical
from tilings.errors import CapExceededError
from tilings.gluing import ConditionVerdict, GluingSystem, check_matrix_preserved
from tilings.labels import format_label


logger = logging.getLogger(__name__)

Vertex = Hashable
Scalar = Union[Fraction, float]
Vector = tuple

EXACT_COSINES = {1: Fraction(-1), 2: Fraction(0), 3: Fraction(1, 2)}


def identity_matrix(n: int) -> np.ndarray:
    """Return exact identity matrix."""
    return np.array([[Fraction(int(i == j)) for j in range(n)] for i in range(n)], dtype=object)


def _pivot_row(x: np.ndarray, column: int, exact: bool, tolerance: float) -> Optional[int]:
    for row in range(column, x.shape[0]):
        if (x[row, column] != 0) if exact else (abs(x[row, column]) > tolerance):
            return row
    return None


def inverse_matrix(x: np.ndarray, tolerance: float = FLOAT_TOLERANCE) -> np.ndarray:
    """
    Invert square matrix by Gauss-Jordan elimination.

    :param x:
        matrix of `Fraction` objects or floats
    :param tolerance:
        pivots below this absolute value count as zero in float mode
    :return:
        inverse matrix with entries of the same kind
    """
    n = x.shape[0]
    if x.shape != (n, n):
        raise ValueError(f"Matrix of shape {x.shape} is not square.")
    exact = x.dtype == object
    x = x.copy()
    y = identity_matrix(n) if exact else np.eye(n)
    for i in range(n):
        pivot = _pivot_row(x, i, exact, tolerance)
        if pivot is None:
            raise ZeroDivisionError("Matrix is not invertible.")
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            y[[i, pivot]] = y[[pivot, i]]
        y[i, :] = y[i, :] / x[i, i]
        x[i, :] = x[i, :] / x[i, i]
        for j in range(n):
            if j != i and x[j, i] != 0:
                y[j, :] = y[j, :] - x[j, i] * y[i, :]
                x[j, :] = x[j, :] - x[j, i] * x[i, :]
    return y


def determinant(x: np.ndarray) -> Scalar:
    """Compute determinant exactly for `Fraction` matrices, with numpy otherwise."""
    if x.dtype != object:
        return float(np.linalg.det(x)) if x.size else 1.0
    x = x.copy()
    n = x.shape[0]
    result = Fraction(1)
    for i in range(n):
        pivot = _pivot_row(x, i, True, 0.0)
        if pivot is None:
            return Fraction(0)
        if pivot != i:
            x[[i, pivot]] = x[[pivot, i]]
            result = -result
        result *= x[i, i]
        for j in range(i + 1, n):
            if x[j, i] != 0:
                x[j, :] = x[j, :] - (x[j, i] / x[i, i]) * x[i, :]
    return result


def _equal(first: np.ndarray, second: np.ndarray, tolerance: float) -> bool:
    if first.dtype == object and second.dtype == object:
        return bool(np.all(first == second))
    return bool(np.allclose(first.astype(float), second.astype(float), atol=tolerance))


def matrix_to_json(x: np.ndarray) -> list[list[str]]:
    """Export matrix as rows of rational strings "p/q" (or floats in float mode)."""
    return [[str(entry) if isinstance(entry, Fraction) else repr(float(entry)) for entry in row]
            for row in x]


def _needs_float(matrix: CoxeterMatrix) -> bool:
    return any(m != INFINITY and m not in EXACT_COSINES for _, _, m in matrix.edges())


def gram_matrix(
        matrix: CoxeterMatrix, t: Union[int, Fraction, float], exact: Optional[bool] = None
) -> np.ndarray:
    """
    Compute matrix of the bilinear form B_t.

    :param matrix:
        Coxeter matrix M on V
    :param t:
        value used for infinite entries, which become -t
    :param exact:
        `True` to demand exact rationals, `False` to force floats;
        by default exact mode is used whenever all finite entries are 1, 2 or 3
    :return:
        symmetric matrix indexed by generators in their order
    """
    if exact is None:
        exact = not _needs_float(matrix)
    elif exact and _needs_float(matrix):
        raise ValueError(
            "Exact Gram matrix requires finite entries in {1, 2, 3}; "
            "use float mode for other labels."
        )
    n = len(matrix)
    gram = np.empty((n, n), dtype=object if exact else float)
    for i, s in enumerate(matrix.gens):
        for j, u in enumerate(matrix.gens):
            m = matrix.m(s, u)
            if m == INFINITY:
                gram[i, j] = -Fraction(t) if exact else -float(t)
            elif exact:
                gram[i, j] = -EXACT_COSINES[m]
            else:
                gram[i, j] = -math.cos(math.pi / m)
    return gram


@dataclass(frozen=True)
class OrderConditionsReport:
    """Verdicts of clauses of Conditions (P) and (C)."""

    p: dict
    c: dict

    @property
    def p_holds(self) -> bool:
        return all(verdict.holds for verdict in self.p.values())

    @property
    def c_holds(self) -> bool:
        return all(verdict.holds for verdict in self.c.values())


def _check_p(g: GluingSystem) -> dict:
    matrix = g.matrix
    minimal = {v for v in g.vertices if not g.below(v)}
    verdicts = {'P(i)': ConditionVerdict(True)}
    for u, v in g.order_pairs():
        if matrix.m(u, v) == INFINITY:
            verdicts['P(i)'] = ConditionVerdict(False, (u, v), 'comparable pair is not adjacent')
            break

    verdicts['P(ii)'] = ConditionVerdict(True)
    for u, v, m in matrix.edges():
        if m != INFINITY and not (u in minimal and v in minimal):
            verdicts['P(ii)'] = ConditionVerdict(False, (u, v), f'm = {m} on nonminimal pair')
            break

    verdicts['P(iii)'] = ConditionVerdict(True)
    for u, v in g.adjacent_pairs():
        if g.comparable(u, v):
            continue
        for u2 in matrix.ordered(g.below(u) | {u}):
            for v2 in matrix.ordered(g.below(v) | {v}):
                if u2 == v2 or g.comparable(u2, v2) or matrix.m(u2, v2) == INFINITY:
                    verdicts['P(iii)'] = ConditionVerdict(
                        False, (u, v, u2, v2), 'lower pair is not noncomparable and adjacent'
                    )
                    break
            if not verdicts['P(iii)'].holds:
                break
        if not verdicts['P(iii)'].holds:
            break

    bar_matrix = matrix.replace_infinity(2)
    verdicts['P(iv)'] = ConditionVerdict(True)
    for v in g.vertices:
        if not is_spherical(bar_matrix, g.below(v)):
            verdicts['P(iv)'] = ConditionVerdict(False, v, 'lower set is not spherical')
            break
    return verdicts


def _check_c(g: GluingSystem) -> dict:
    verdicts = {}
    verdicts['C(i)'] = ConditionVerdict(True)
    for v in g.vertices:
        if any(g.apply(v, g.apply(v, x)) != x for x in g.star(v)):
            verdicts['C(i)'] = ConditionVerdict(False, v, 'j_v is not an involution')
            break

    verdicts['C(ii)'] = check_matrix_preserved(g)

    verdicts['C(iii)'] = ConditionVerdict(True)
    for v in g.vertices:
        star = g.star(v)
        for x, y in itertools.permutations(star, 2):
            if g.less(x, y) != g.less(g.apply(v, x), g.apply(v, y)):
                verdicts['C(iii)'] = ConditionVerdict(False, (v, x, y), 'j_v breaks the order')
                break
        if not verdicts['C(iii)'].holds:
            break

    verdicts['C(iv)'] = ConditionVerdict(True)
    for v in g.vertices:
        moved = [u for u in g.star(v) if g.apply(v, u) != u and u != v]
        outside = [u for u in moved if not g.less(u, v)]
        if outside:
            verdicts['C(iv)'] = ConditionVerdict(False, (v, outside[0]), 'j_v moves a vertex not below v')
            break

    verdicts['C(v)'] = ConditionVerdict(True)
    for u, v in g.order_pairs():
        if u not in g.star(v):
            continue
        u_image = g.apply(v, u)
        for y in g.below(u):
            try:
                result = g.apply(u, g.apply(v, g.apply(u_image, g.apply(v, y))))
            except ValueError as e:
                verdicts['C(v)'] = ConditionVerdict(False, (u, v, y), str(e))
                break
            if result != y:
                verdicts['C(v)'] = ConditionVerdict(False, (u, v, y), 'composition moves y')
                break
        if not verdicts['C(v)'].holds:
            break
    return verdicts


def check_order_conditions(g: GluingSystem) -> OrderConditionsReport:
    """
    Check every clause of Conditions (P) and (C).

    :param g:
        homogeneous gluing system with a partial order
    :return:
        report with one verdict per clause
    """
    if not g.has_order:
        raise ValueError("Conditions (P) and (C) need a partial order.")
    if not g.is_homogeneous():
        raise ValueError("Conditions (P) and (C) need a trivial bar involution.")
    return OrderConditionsReport(_check_p(g), _check_c(g))


def _moved_basis(g: GluingSystem, v: Vertex) -> list[tuple[Vertex, Vertex]]:
    pairs = []
    for u in g.matrix.ordered(g.star(v)):
        image = g.apply(v, u)
        if g.matrix.index(u) < g.matrix.index(image):
            pairs.append((u, image))
    return pairs


def _block_basis(g: GluingSystem, v: Vertex, exact: bool) -> np.ndarray:
    n = len(g.vertices)
    one, zero = (Fraction(1), Fraction(0)) if exact else (1.0, 0.0)
    columns = []
    column = [zero] * n
    column[g.matrix.index(v)] = one
    columns.append(column)
    for u, image in _moved_basis(g, v):
        column = [zero] * n
        column[g.matrix.index(u)] = one
        column[g.matrix.index(image)] = -one
        columns.append(column)
    return np.array(columns, dtype=object if exact else float).T


def select_parameter(
        g: GluingSystem,
        cap: int = T_SCAN_CAP,
        exact: Optional[bool] = None,
        tolerance: float = FLOAT_TOLERANCE
) -> int:
    """
    Find smallest integer t >= 2 making B_t nondegenerate on every R e_v + E_v.

    :param g:
        homogeneous gluing system
    :param cap:
        largest value of t to try
    :param exact:
        arithmetic mode passed to `gram_matrix`
    :param tolerance:
        determinants below this absolute value count as zero in float mode
    :return:
        selected t
    """
    for t in range(2, cap + 1):
        gram = gram_matrix(g.matrix, t, exact)
        is_exact = gram.dtype == object
        for v in g.vertices:
            x = _block_basis(g, v, is_exact)
            value = determinant(x.T @ gram @ x)
            if (value == 0) if is_exact else (abs(value) <= tolerance):
                break
        else:
            logger.debug("Selected t = %d.", t)
            return t
    raise CapExceededError(f"No t up to {cap} makes B_t nondegenerate on every E_v.")


@dataclass(frozen=True)
class Representation:
    """Matrices of generators together with the invariant form."""

    vertices: tuple
    t: Scalar
    gram: np.ndarray = field(repr=False)
    matrices: dict = field(repr=False)

    @property
    def exact(self) -> bool:
        return self.gram.dtype == object

    def matrix(self, v: Vertex) -> np.ndarray:
        return self.matrices[v]

    def product(self, word: Sequence[Vertex]) -> np.ndarray:
        """Multiply matrices of a word from left to right."""
        n = len(self.vertices)
        result = identity_matrix(n) if self.exact else np.eye(n)
        for v in word:
            result = result @ self.matrices[v]
        return result

    def as_dict(self) -> dict:
        return {
            't': str(self.t),
            'exact': self.exact,
            'basis': [format_label(v) for v in self.vertices],
            'gram': matrix_to_json(self.gram),
            'matrices': {format_label(v): matrix_to_json(x) for v, x in self.matrices.items()},
        }


def build_representation(
        g: GluingSystem,
        t: Union[int, Fraction, float],
        exact: Optional[bool] = None,
        tolerance: float = FLOAT_TOLERANCE
) -> Representation:
    """
    Compute matrices rho_v = Id - 2 * (B_t-orthogonal projection onto R e_v + E_v).

    :param g:
        homogeneous gluing system
    :param t:
        parameter of the bilinear form
    :param exact:
        arithmetic mode passed to `gram_matrix`
    :param tolerance:
        pivot tolerance in float mode
    :return:
        representation
    """
    gram = gram_matrix(g.matrix, t, exact)
    is_exact = gram.dtype == object
    n = len(g.vertices)
    identity = identity_matrix(n) if is_exact else np.eye(n)
    matrices = {}
    for v in g.vertices:
        x = _block_basis(g, v, is_exact)
        try:
            block_inverse = inverse_matrix(x.T @ gram @ x, tolerance)
        except ZeroDivisionError:
            raise RuntimeError(
                f"B_t is degenerate on the block of {format_label(v)} at t = {t}."
            ) from None
        matrices[v] = identity - 2 * (x @ block_inverse @ x.T @ gram)
    if not is_exact:
        logger.warning("Representation is computed in float mode.")
    return Representation(tuple(g.vertices), Fraction(t) if is_exact else float(t), gram, matrices)


@dataclass(frozen=True)
class RepresentationReport:
    """Verdicts of matrix identities with the arithmetic mode used."""

    checks: dict
    exact: bool

    @property
    def holds(self) -> bool:
        return all(verdict.holds for verdict in self.checks.values())


def _order(product: np.ndarray, identity: np.ndarray, limit: int, tolerance: float) -> Optional[int]:
    power = product
    for k in range(1, limit + 1):
        if _equal(power, identity, tolerance):
            return k
        power = power @ product
    return None


def verify_representation(
        rep: Representation, g: GluingSystem, tolerance: float = FLOAT_TOLERANCE
) -> RepresentationReport:
    """
    Check that matrices define a representation of the mock reflection group.

    :param rep:
        matrices from `build_representation`
    :param g:
        gluing system with a partial order
    :param tolerance:
        absolute tolerance for comparisons in float mode
    :return:
        report with verdicts on form, involutions, relations, orders,
        distinctness, images of basis vectors and positivity on minimal pairs
    """
    n = len(rep.vertices)
    identity = identity_matrix(n) if rep.exact else np.eye(n)
    index = {v: i for i, v in enumerate(rep.vertices)}
    minimal = {v for v in g.vertices if not g.below(v)}
    rho = rep.matrices
    glued = [(u, v) for u, v in g.order_pairs() if u in g.star(v)]

    def first_failure(cases, note):
        for witness, holds in cases:
            if not holds:
                return ConditionVerdict(False, witness, note)
        return ConditionVerdict(True)

    checks = {}
    checks['form'] = first_failure(
        ((v, _equal(rho[v].T @ rep.gram @ rho[v], rep.gram, tolerance)) for v in g.vertices),
        'rho_v does not preserve B_t'
    )
    checks['involution'] = first_failure(
        ((v, _equal(rho[v] @ rho[v], identity, tolerance)) for v in g.vertices),
        'rho_v is not an involution'
    )
    adjacent = [
        (u, v) for u, v in itertools.combinations(g.vertices, 2)
        if g.matrix.m(u, v) != INFINITY
    ]
    checks['relation_b'] = first_failure(
        (
            ((u, v), _equal(rep.product((u, v) * g.matrix.m(u, v)), identity, tolerance))
            for u, v in adjacent if u in minimal and v in minimal
        ),
        '(rho_u rho_v)^m is not identity'
    )
    checks['relation_c'] = first_failure(
        (
            ((u, v), _equal(rep.product((u, v, g.apply(v, u), v)), identity, tolerance))
            for u, v in glued
        ),
        'rho_u rho_v rho_u\' rho_v is not identity'
    )
    checks['relation_d'] = first_failure(
        (
            ((u, v), _equal(rep.product((u, v, u, v)), identity, tolerance))
            for u, v in adjacent if not g.comparable(u, v) and g.matrix.m(u, v) == 2
        ),
        '(rho_u rho_v)^2 is not identity'
    )
    checks['orders'] = first_failure(
        (
            ((u, v), _order(rho[u] @ rho[v], identity, g.matrix.m(u, v), tolerance)
             == g.matrix.m(u, v))
            for u, v in adjacent if not g.comparable(u, v)
        ),
        'order of rho_u rho_v differs from m(u, v)'
    )

    def distinct(matrices):
        return all(
            not _equal(first, second, tolerance)
            for first, second in itertools.combinations(matrices, 2)
        )

    checks['distinct'] = first_failure(
        itertools.chain(
            ((v, not _equal(rho[v], identity, tolerance)) for v in g.vertices),
            (((u, v), not _equal(rho[u], rho[v], tolerance))
             for u, v in itertools.combinations(g.vertices, 2)),
            (
                ((u, v), distinct([
                    identity, rho[u], rep.product((u, v)), rep.product((u, v, g.apply(v, u)))
                ]))
                for u, v in glued
            ),
        ),
        'elements are not distinct'
    )
    checks['epsilon_images'] = first_failure(
        (
            ((u, v), _equal(rho[v][:, index[u]], identity[:, index[g.apply(v, u)]], tolerance))
            for u, v in glued
        ),
        'rho_v(e_u) differs from e_u\''
    )
    checks['positive_minors'] = first_failure(
        (
            ((u, v), 1 - rep.gram[index[u], index[v]] ** 2 > 0)
            for u, v in adjacent if u in minimal and v in minimal
        ),
        'B_t is not positive definite on a minimal pair'
    )
    return RepresentationReport(checks, rep.exact)


def minkowski_form(x: Sequence, y: Sequence) -> Fraction:
    """Evaluate x1 y1 + x2 y2 + x3 y3 - x4 y4."""
    if len(x) != 4 or len(y) != 4:
        raise ValueError("Minkowski vectors have four coordinates.")
    x = [Fraction(a) for a in x]
    y = [Fraction(b) for b in y]
    return x[0] * y[0] + x[1] * y[1] + x[2] * y[2] - x[3] * y[3]


def minkowski_reflect(v: Sequence, x: Sequence) -> Vector:
    """
    Reflect a vector across the hyperplane orthogonal to a spacelike vector.

    :param v:
        spacelike normal vector
    :param x:
        vector to reflect
    :return:
        x - 2 <x, v> / <v, v> v
    """
    norm = minkowski_form(v, v)
    if norm <= 0:
        raise ValueError(f"Vector {tuple(v)} is not spacelike: <v, v> = {norm}.")
    coefficient = 2 * minkowski_form(x, v) / norm
    return tuple(Fraction(a) - coefficient * Fraction(b) for a, b in zip(x, v))


def reflection_matrix(v: Sequence) -> np.ndarray:
    """Return exact 4x4 matrix of reflection r_v acting on columns."""
    columns = [minkowski_reflect(v, basis) for basis in identity_matrix(4)]
    return np.array(columns, dtype=object).T


def minkowski_fixtures() -> dict[str, dict[str, Vector]]:
    """Return normal vectors of faces of the four right-angled hyperbolic polyhedra."""
    u1, v1, w1, t1 = (1, 1, 1, 1), (1, 0, 0, 0), (1, -1, 0, 0), (0, 1, -1, 0)
    v2, v3 = (0, 1, 0, 0), (0, 0, 1, 0)
    octahedron = {
        'n' + ''.join('+' if sign > 0 else '-' for sign in signs): (*signs, 1)
        for signs in itertools.product((1, -1), repeat=3)
    }
    return {
        'simplex': {'u1': u1, 'v1': v1, 'w1': w1, 't1': t1},
        'pyramid': {'u1': u1, 'v1': v1, 'v2': v2, 'v3': v3},
        'double_pyramid': {
            'v1': v1, 'v2': v2, 'v3': v3,
            "v1'": minkowski_reflect(u1, v1),
            "v2'": minkowski_reflect(u1, v2),
            "v3'": minkowski_reflect(u1, v3),
        },
        'octahedron': octahedron,
    }
