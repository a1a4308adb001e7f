"""
Describe framing systems with gluing data and check their local consistency.

A gluing system is a framing system (V, M, L) together with an
involution v -> bar(v) of V and maps j_v from the star of v onto the star
of bar(v). From such data, each pair of adjacent vertices produces a
relation word by the recursion

    v_0 = bar(u), v_1 = v, v_k = j_{v_{k-1}}(bar(v_{k-2})),

and composing the gluing maps along a relation word gives the holonomy
around the corresponding 2-cell.

Author: Tilings developers
"""


import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Hashable, Iterable, Mapping, Optional, Sequence

from tilings.complexes import SimplicialComplex
from tilings.constants import INFINITY
from tilings.coxeter import CoxeterMatrix, is_spherical
from tilings.labels import format_label, label_key
from tilings.permutation import Permutation


logger = logging.getLogger(__name__)

Vertex = Hashable


@dataclass(frozen=True)
class ConditionVerdict:
    """Outcome of a combinatorial condition; `holds` is `None` when undecided."""

    holds: Optional[bool]
    witness: Any = None
    note: str = ''


class GluingSystem:
    """Framing system with bar involution, gluing maps and optional partial order."""

    def __init__(
            self,
            matrix: CoxeterMatrix,
            complex_: SimplicialComplex,
            involutions: Mapping[Vertex, Mapping[Vertex, Vertex]],
            bar: Optional[Mapping[Vertex, Vertex]] = None,
            order: Optional[Iterable[tuple[Vertex, Vertex]]] = None
    ):
        """
        Initialize an instance.

        :param matrix:
            Coxeter matrix M on vertex set V
        :param complex_:
            simplicial complex L on V whose edges are exactly pairs with m < inf
        :param involutions:
            for every vertex v, map j_v from star of v to star of bar(v);
            star vertices missing from a map are sent to themselves and
            missing vertices get identity maps
        :param bar:
            involution of V; identity by default
        :param order:
            pairs (u, v) meaning u < v; transitive closure is taken
        :return:
            freshly created instance of `GluingSystem` class
        """
        self.matrix = matrix
        self.complex = complex_
        self.vertices = matrix.gens
        if set(complex_.vertices) != set(self.vertices):
            raise ValueError("Complex and matrix have different vertex sets.")
        for u, v in itertools.combinations(self.vertices, 2):
            is_edge = complex_.has_face((u, v))
            if is_edge != (matrix.m(u, v) != INFINITY):
                raise ValueError(
                    f"Edge {{{format_label(u)}, {format_label(v)}}} of L does not match "
                    f"m = {matrix.m(u, v)}."
                )

        bar = dict(bar or {})
        self._bar = {v: bar.get(v, v) for v in self.vertices}
        for v, image in self._bar.items():
            if image not in self._bar or self._bar[image] != v:
                raise ValueError(f"Bar map is not an involution at {format_label(v)}.")

        self._stars = {v: complex_.star_vertices(v) for v in self.vertices}
        self._maps = {}
        for v in self.vertices:
            given = dict(involutions.get(v, {}))
            unknown = set(given) - self._stars[v]
            if unknown:
                raise ValueError(
                    f"j_{format_label(v)} is defined outside of its star: "
                    f"{[format_label(x) for x in unknown]}"
                )
            given.setdefault(v, self._bar[v])
            mapping = {x: given.get(x, x) for x in self._stars[v]}
            if mapping[v] != self._bar[v]:
                raise ValueError(f"j_{format_label(v)} must send the vertex to its bar.")
            if set(mapping.values()) != self._stars[self._bar[v]]:
                raise ValueError(
                    f"j_{format_label(v)} is not a bijection onto the star of "
                    f"{format_label(self._bar[v])}."
                )
            self._maps[v] = mapping

        self._less = set()
        if order is not None:
            pairs = {(u, v) for u, v in order}
            for u, v in pairs:
                matrix.index(u)
                matrix.index(v)
            changed = True
            while changed:
                extra = {(u, w) for u, v in pairs for v2, w in pairs if v == v2}
                changed = not extra <= pairs
                pairs |= extra
            if any(u == v for u, v in pairs):
                raise ValueError("Partial order has a cycle.")
            self._less = pairs
        self.has_order = order is not None

    def __repr__(self) -> str:
        return f'GluingSystem({len(self.vertices)} vertices)'

    def bar(self, v: Vertex) -> Vertex:
        """Return paired vertex."""
        return self._bar[v]

    def star(self, v: Vertex) -> frozenset:
        """Return star vertex set V_v."""
        return self._stars[v]

    def j(self, v: Vertex) -> dict[Vertex, Vertex]:
        """Return gluing map of `v` as a dictionary."""
        return dict(self._maps[v])

    def apply(self, v: Vertex, x: Vertex) -> Vertex:
        """
        Apply gluing map j_v.

        :param v:
            vertex whose map is used
        :param x:
            vertex of the star of `v`
        :return:
            image of `x`
        """
        try:
            return self._maps[v][x]
        except KeyError:
            raise ValueError(
                f"j_{format_label(v)} is undefined on {format_label(x)}."
            ) from None

    def is_homogeneous(self) -> bool:
        """Check that bar is identity."""
        return all(v == w for v, w in self._bar.items())

    def involution(self, v: Vertex) -> Permutation:
        """Return j_v as a permutation of the star (homogeneous vertices only)."""
        if self._bar[v] != v:
            raise ValueError(f"j_{format_label(v)} does not act on a single star.")
        return Permutation(self._maps[v])

    def less(self, u: Vertex, v: Vertex) -> bool:
        """Check u < v."""
        return (u, v) in self._less

    def comparable(self, u: Vertex, v: Vertex) -> bool:
        """Check u < v or v < u."""
        return self.less(u, v) or self.less(v, u)

    def below(self, v: Vertex) -> frozenset:
        """Return {u : u < v}."""
        return frozenset(u for u, w in self._less if w == v)

    def order_pairs(self) -> list[tuple[Vertex, Vertex]]:
        """Return all pairs u < v in label order."""
        return sorted(self._less, key=lambda p: (label_key(p[0]), label_key(p[1])))

    def adjacent_pairs(self) -> list[tuple[Vertex, Vertex]]:
        """Return ordered pairs of distinct vertices with m < inf."""
        return [
            (u, v) for u in self.vertices for v in self.vertices
            if u != v and self.matrix.m(u, v) != INFINITY
        ]


@dataclass(frozen=True)
class DerivedSequence:
    """Sequence v_0, ..., v_{2m+1} with its relation word."""

    u: Vertex
    v: Vertex
    m: int
    vertices: tuple
    word: tuple = field(init=False)
    periodic: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, 'word', self.vertices[1:2 * self.m + 1])
        periodic = (
            self.vertices[2 * self.m] == self.vertices[0]
            and self.vertices[2 * self.m + 1] == self.vertices[1]
        )
        object.__setattr__(self, 'periodic', periodic)


def derived_sequence(g: GluingSystem, u: Vertex, v: Vertex) -> DerivedSequence:
    """
    Derive vertex sequence and relation word r(u, v) of an adjacent pair.

    :param g:
        gluing system
    :param u:
        first vertex
    :param v:
        second vertex, adjacent to `u`
    :return:
        derived sequence of length 2m + 2
    """
    m = g.matrix.m(u, v)
    if u == v or m == INFINITY:
        raise ValueError(
            f"Vertices {format_label(u)} and {format_label(v)} are not adjacent."
        )
    sequence = [g.bar(u), v]
    for _ in range(2, 2 * m + 2):
        sequence.append(g.apply(sequence[-1], g.bar(sequence[-2])))
    return DerivedSequence(u, v, m, tuple(sequence))


def relation_words(g: GluingSystem) -> dict[tuple[Vertex, Vertex], tuple]:
    """
    Compute relation words r(u, v) for all ordered adjacent pairs.

    :param g:
        gluing system
    :return:
        mapping from pairs to words; pairs with undefined recursion are skipped
    """
    words = {}
    for u, v in g.adjacent_pairs():
        try:
            words[(u, v)] = derived_sequence(g, u, v).word
        except ValueError:
            logger.debug("Recursion is undefined for pair (%s, %s).", u, v)
    return words


def holonomy(g: GluingSystem, word: Sequence[Vertex], domain: Iterable[Vertex]) -> Permutation:
    """
    Compose gluing maps along a closed word.

    The first letter of the word is applied first.

    :param g:
        gluing system
    :param word:
        vertices whose gluing maps are composed
    :param domain:
        vertices on which the composition is evaluated
    :return:
        composition as a permutation of `domain`
    """
    mapping = {}
    for y in domain:
        image = y
        for x in word:
            image = g.apply(x, image)
        mapping[y] = image
    if set(mapping.values()) != set(mapping):
        raise ValueError("Holonomy does not preserve its domain.")
    return Permutation(mapping)


def cell_domain(g: GluingSystem, u: Vertex, v: Vertex) -> list[Vertex]:
    """Return vertices y with {u, v, y} spherical, in vertex order."""
    return [y for y in g.vertices if is_spherical(g.matrix, {u, v, y})]


def check_inverse_pairs(g: GluingSystem) -> ConditionVerdict:
    """Check that j_{bar(v)} is inverse of j_v for every vertex."""
    for v in g.vertices:
        for x in g.star(v):
            if g.apply(g.bar(v), g.apply(v, x)) != x:
                return ConditionVerdict(False, (v, x), 'j_bar(v) is not inverse of j_v')
    return ConditionVerdict(True)


def check_matrix_preserved(g: GluingSystem, include_center: bool = False) -> ConditionVerdict:
    """
    Check m(j_v(x), j_v(y)) = m(x, y) on pairs of star vertices.

    :param g:
        gluing system
    :param include_center:
        if set, pairs containing v itself are checked too
    :return:
        verdict with (v, x, y) as witness
    """
    for v in g.vertices:
        star = sorted(g.star(v) if include_center else g.star(v) - {v}, key=label_key)
        for x, y in itertools.combinations(star, 2):
            if g.matrix.m(g.apply(v, x), g.apply(v, y)) != g.matrix.m(x, y):
                return ConditionVerdict(False, (v, x, y), 'j_v changes matrix entry')
    return ConditionVerdict(True)


def check_periodicity(g: GluingSystem) -> ConditionVerdict:
    """Check that every derived sequence closes up after 2m steps."""
    for u, v in g.adjacent_pairs():
        try:
            sequence = derived_sequence(g, u, v)
        except ValueError as e:
            return ConditionVerdict(False, (u, v), str(e))
        if not sequence.periodic:
            return ConditionVerdict(False, (u, v), 'derived sequence is not periodic')
    return ConditionVerdict(True)
