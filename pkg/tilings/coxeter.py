"""
Recognize finite Coxeter types and enumerate finite Coxeter groups.

Author: Tilings developers
"""


import logging
import math
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Hashable, Iterable, Mapping, Optional, Sequence, Union

import networkx as nx
import numpy as np

from tilings.constants import (
    INFINITY, MAX_GENERATORS, MAX_GROUP_ORDER, ROOT_ROUNDING_DIGITS
)
from tilings.errors import CapExceededError
from tilings.labels import format_label, label_key
from tilings.permutation import Permutation


logger = logging.getLogger(__name__)

Label = Hashable
Subset = frozenset
Entry = Union[int, float]


def _normalize_entry(value: Union[int, float, str]) -> Entry:
    """Convert matrix entry to `int` or `math.inf`."""
    if isinstance(value, str):
        value = value.strip().lower()
        if value in ('inf', 'infinity', '∞'):
            return INFINITY
        value = int(value)
    if isinstance(value, float):
        if math.isinf(value) and value > 0:
            return INFINITY
        if not value.is_integer():
            raise ValueError(f"Coxeter matrix entry must be integral, got {value}.")
        value = int(value)
    return value


class CoxeterMatrix:
    """Symmetric table of orders m(s, t) over an ordered generator set."""

    def __init__(self, gens: Iterable[Label], entries: Optional[Mapping] = None):
        """
        Initialize an instance.

        :param gens:
            generator labels in their canonical order
        :param entries:
            mapping from pairs of distinct generators to m(s, t);
            missing pairs default to 2, `math.inf` or 'inf' means no relation
        :return:
            freshly created instance of `CoxeterMatrix` class
        """
        self.gens = tuple(gens)
        if len(set(self.gens)) != len(self.gens):
            raise ValueError(f"Generator labels are not unique: {self.gens}")
        self._index = {s: i for i, s in enumerate(self.gens)}
        self._entries = {}
        for (s, t), value in (entries or {}).items():
            if s not in self._index or t not in self._index:
                raise ValueError(f"Unknown generator in pair ({s!r}, {t!r}).")
            value = _normalize_entry(value)
            if s == t:
                if value != 1:
                    raise ValueError(f"Diagonal entry m({s!r}, {s!r}) must be 1.")
                continue
            if value < 2:
                raise ValueError(f"Off-diagonal entry m({s!r}, {t!r}) must be at least 2.")
            pair = frozenset((s, t))
            if self._entries.get(pair, value) != value:
                raise ValueError(f"Matrix is not symmetric at ({s!r}, {t!r}).")
            if value != 2:
                self._entries[pair] = value
        self._hash = hash((self.gens, frozenset(self._entries.items())))

    @classmethod
    def from_rows(cls, gens: Sequence[Label], rows: Sequence[Sequence]) -> 'CoxeterMatrix':
        """
        Create matrix from full square table.

        :param gens:
            generator labels
        :param rows:
            square table with 1 on the diagonal
        :return:
            Coxeter matrix
        """
        if len(rows) != len(gens) or any(len(row) != len(gens) for row in rows):
            raise ValueError("Matrix shape does not match number of generators.")
        entries = {}
        for i, s in enumerate(gens):
            for j, t in enumerate(gens):
                value = _normalize_entry(rows[i][j])
                if i == j and value != 1:
                    raise ValueError(f"Diagonal entry m({s!r}, {s!r}) must be 1.")
                if i < j:
                    if _normalize_entry(rows[j][i]) != value:
                        raise ValueError(f"Matrix is not symmetric at ({s!r}, {t!r}).")
                    entries[(s, t)] = value
        return cls(gens, entries)

    @classmethod
    def from_schlafli(cls, symbol: Sequence[int]) -> 'CoxeterMatrix':
        """
        Create path-shaped matrix on generators 1, ..., n+1.

        :param symbol:
            labels (m_1, ..., m_n), `m_i` being the order of `s_i s_{i+1}`
        :return:
            Coxeter matrix
        """
        if len(symbol) == 0:
            raise ValueError("Schläfli symbol must be nonempty.")
        gens = list(range(1, len(symbol) + 2))
        entries = {(i + 1, i + 2): m for i, m in enumerate(symbol)}
        return cls(gens, entries)

    def __len__(self) -> int:
        return len(self.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CoxeterMatrix):
            return NotImplemented
        return self.gens == other.gens and self._entries == other._entries

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        entries = ', '.join(
            f'{format_label(s)}-{format_label(t)}:{m}' for s, t, m in self.edges()
        )
        return f'CoxeterMatrix([{", ".join(map(format_label, self.gens))}]; {entries})'

    def index(self, s: Label) -> int:
        """Return position of generator."""
        try:
            return self._index[s]
        except KeyError:
            raise ValueError(f"Unknown generator: {s!r}") from None

    def m(self, s: Label, t: Label) -> Entry:
        """Return order of `st`."""
        self.index(s)
        self.index(t)
        if s == t:
            return 1
        return self._entries.get(frozenset((s, t)), 2)

    def subset(self, labels: Iterable[Label]) -> Subset:
        """Validate labels and return them as a subset of generators."""
        subset = frozenset(labels)
        unknown = subset - set(self.gens)
        if unknown:
            raise ValueError(f"Unknown generators: {sorted(map(format_label, unknown))}")
        return subset

    def ordered(self, subset: Iterable[Label]) -> tuple:
        """Return elements of subset in generator order."""
        return tuple(sorted(subset, key=self.index))

    def restrict(self, subset: Iterable[Label]) -> 'CoxeterMatrix':
        """Return matrix of the induced Coxeter system on `subset`."""
        subset = self.subset(subset)
        gens = self.ordered(subset)
        entries = {tuple(pair): m for pair, m in self._entries.items() if pair <= subset}
        return CoxeterMatrix(gens, entries)

    def replace_infinity(self, value: int) -> 'CoxeterMatrix':
        """Return matrix with every infinite entry replaced by `value`."""
        entries = {
            tuple(pair): (value if m == INFINITY else m) for pair, m in self._entries.items()
        }
        return CoxeterMatrix(self.gens, entries)

    def edges(self) -> list[tuple[Label, Label, Entry]]:
        """Return pairs with m > 2 (infinite ones included) in generator order."""
        result = []
        for pair, m in self._entries.items():
            s, t = self.ordered(pair)
            result.append((s, t, m))
        return sorted(result, key=lambda x: (self.index(x[0]), self.index(x[1])))

    def diagram(self, subset: Optional[Iterable[Label]] = None) -> nx.Graph:
        """
        Build Coxeter diagram.

        :param subset:
            generators to keep; all of them by default
        :return:
            graph with an edge labelled `m` for every pair with m > 2
        """
        subset = set(self.gens) if subset is None else self.subset(subset)
        graph = nx.Graph()
        graph.add_nodes_from(self.ordered(subset))
        for s, t, m in self.edges():
            if s in subset and t in subset:
                graph.add_edge(s, t, m=m)
        return graph

    def rows(self) -> list[list[Entry]]:
        """Return full square table."""
        return [[self.m(s, t) for t in self.gens] for s in self.gens]


@dataclass(frozen=True)
class Component:
    """
    Irreducible component of a Coxeter diagram.

    Vertices are stored in a layout fixed per family: path order for
    A, B, F, H and I2 (special end first); tips, branch point and long
    arm for D; short arm, branch point and interleaved long arms for E.
    """

    family: str
    rank: int
    vertices: tuple
    p: Optional[Entry] = None

    @property
    def spherical(self) -> bool:
        return self.family != 'NonSpherical'

    @property
    def name(self) -> str:
        if self.family == 'I':
            return f'I2({self.p})'
        if self.family == 'NonSpherical':
            return 'NonSpherical'
        return f'{self.family}{self.rank}'


@dataclass(frozen=True)
class CoxeterType:
    """Decomposition of a diagram into irreducible components."""

    components: tuple[Component, ...]

    @property
    def spherical(self) -> bool:
        return all(component.spherical for component in self.components)

    @property
    def names(self) -> list[str]:
        return [component.name for component in self.components]

    @property
    def vertices(self) -> frozenset:
        return frozenset(v for component in self.components for v in component.vertices)

    def __str__(self) -> str:
        return ' x '.join(self.names) if self.components else 'empty'


def _walk_path(graph: nx.Graph) -> list:
    ends = sorted((v for v in graph if graph.degree(v) == 1), key=label_key)
    path = [ends[0]]
    previous = None
    while len(path) < graph.number_of_nodes():
        current = path[-1]
        following = [v for v in graph.neighbors(current) if v != previous]
        previous = current
        path.append(following[0])
    return path


def _classify_path(graph: nx.Graph) -> Component:
    path = _walk_path(graph)
    labels = [graph.edges[path[i], path[i + 1]]['m'] for i in range(len(path) - 1)]
    n = len(path)
    if labels[-1] in (4, 5) and labels[0] == 3:
        path.reverse()
        labels.reverse()
    if all(m == 3 for m in labels):
        return Component('A', n, tuple(path))
    if labels[0] == 4 and all(m == 3 for m in labels[1:]):
        return Component('B', n, tuple(path))
    if n == 4 and labels == [3, 4, 3]:
        return Component('F', 4, tuple(path))
    if n in (3, 4) and labels[0] == 5 and all(m == 3 for m in labels[1:]):
        return Component('H', n, tuple(path))
    return Component('NonSpherical', n, tuple(path))


def _classify_fork(graph: nx.Graph) -> Component:
    branches = [v for v in graph if graph.degree(v) == 3]
    n = graph.number_of_nodes()
    if len(branches) != 1 or any(graph.degree(v) > 3 for v in graph):
        return Component('NonSpherical', n, tuple(sorted(graph, key=label_key)))
    if any(m != 3 for _, _, m in graph.edges(data='m')):
        return Component('NonSpherical', n, tuple(sorted(graph, key=label_key)))
    center = branches[0]
    arms = []
    for start in graph.neighbors(center):
        arm = [start]
        previous = center
        while graph.degree(arm[-1]) == 2:
            following = [v for v in graph.neighbors(arm[-1]) if v != previous]
            previous = arm[-1]
            arm.append(following[0])
        arms.append(tuple(arm))
    arms.sort(key=lambda arm: (len(arm), label_key(arm[0])))
    lengths = tuple(len(arm) for arm in arms)
    if lengths[:2] == (1, 1):
        vertices = (arms[0][0], arms[1][0], center) + arms[2]
        return Component('D', n, vertices)
    if lengths in ((1, 2, 2), (1, 2, 3), (1, 2, 4)):
        interleaved = tuple(v for pair in zip(arms[1], arms[2]) for v in pair)
        rest = arms[2][len(arms[1]):]
        vertices = (arms[0][0], center) + interleaved + rest
        return Component('E', n, vertices)
    return Component('NonSpherical', n, tuple(sorted(graph, key=label_key)))


def _classify_component(graph: nx.Graph) -> Component:
    n = graph.number_of_nodes()
    if n == 1:
        return Component('A', 1, tuple(graph.nodes))
    labels = [m for _, _, m in graph.edges(data='m')]
    if any(m == INFINITY for m in labels):
        return Component('NonSpherical', n, tuple(sorted(graph, key=label_key)))
    if n == 2:
        vertices = tuple(sorted(graph, key=label_key))
        m = labels[0]
        if m == 3:
            return Component('A', 2, vertices)
        if m == 4:
            return Component('B', 2, vertices)
        return Component('I', 2, vertices, p=m)
    if not nx.is_tree(graph):
        return Component('NonSpherical', n, tuple(sorted(graph, key=label_key)))
    if max(degree for _, degree in graph.degree) <= 2:
        return _classify_path(graph)
    return _classify_fork(graph)


def classify_subdiagram(
        matrix: CoxeterMatrix, subset: Optional[Iterable[Label]] = None
) -> CoxeterType:
    """
    Split the diagram of a subset into components and recognize each one.

    :param matrix:
        Coxeter matrix
    :param subset:
        generators to classify; all of them by default
    :return:
        type with one entry per connected component
    """
    graph = matrix.diagram(subset)
    parts = sorted(nx.connected_components(graph), key=lambda c: min(map(matrix.index, c)))
    return CoxeterType(tuple(_classify_component(graph.subgraph(part)) for part in parts))


def is_spherical(matrix: CoxeterMatrix, subset: Iterable[Label]) -> bool:
    """Check that the special subgroup of `subset` is finite."""
    return classify_subdiagram(matrix, subset).spherical


_ORDERS_OF_EXCEPTIONAL_GROUPS = {
    'E6': 51840, 'E7': 2903040, 'E8': 696729600, 'F4': 1152, 'H3': 120, 'H4': 14400
}


def group_order(coxeter_type: CoxeterType) -> Union[int, float]:
    """
    Compute order of Coxeter group of given type.

    :param coxeter_type:
        recognized type
    :return:
        product of component orders, `math.inf` for non-spherical types
    """
    order = 1
    for component in coxeter_type.components:
        n = component.rank
        if component.family == 'NonSpherical':
            return INFINITY
        elif component.family == 'A':
            order *= math.factorial(n + 1)
        elif component.family == 'B':
            order *= 2 ** n * math.factorial(n)
        elif component.family == 'D':
            order *= 2 ** (n - 1) * math.factorial(n)
        elif component.family == 'I':
            order *= 2 * component.p
        else:
            order *= _ORDERS_OF_EXCEPTIONAL_GROUPS[component.name]
    return order


def _component_symmetry(component: Component) -> dict:
    vertices = component.vertices
    mapping = {v: v for v in vertices}
    if component.family == 'A' and component.rank > 1:
        mapping = dict(zip(vertices, reversed(vertices)))
    elif component.family == 'I' and component.p % 2 == 1:
        mapping = {vertices[0]: vertices[1], vertices[1]: vertices[0]}
    elif component.family == 'D' and component.rank % 2 == 1:
        mapping[vertices[0]], mapping[vertices[1]] = vertices[1], vertices[0]
    elif component.family == 'E' and component.rank == 6:
        for first, second in ((2, 3), (4, 5)):
            mapping[vertices[first]] = vertices[second]
            mapping[vertices[second]] = vertices[first]
    return mapping


def longest_element_symmetry(coxeter_type: CoxeterType) -> tuple[Permutation, bool]:
    """
    Find diagram automorphism induced by conjugation with longest element.

    :param coxeter_type:
        spherical type
    :return:
        permutation of the type's vertices and flag whether longest element
        acts as the antipodal map
    """
    if not coxeter_type.spherical:
        raise ValueError(f"Type {coxeter_type} is not spherical.")
    mapping = {}
    for component in coxeter_type.components:
        mapping.update(_component_symmetry(component))
    permutation = Permutation(mapping)
    return permutation, permutation.is_identity()


@lru_cache(maxsize=256)
def _spherical_poset(matrix: CoxeterMatrix) -> tuple[Subset, ...]:
    spherical = {frozenset()}
    level = [frozenset((s,)) for s in matrix.gens]
    result = [frozenset()]
    while level:
        spherical.update(level)
        result.extend(level)
        candidates = set()
        for subset in level:
            last = max(map(matrix.index, subset))
            for s in matrix.gens[last + 1:]:
                candidate = subset | {s}
                if all(candidate - {t} in spherical for t in candidate):
                    candidates.add(candidate)
        level = sorted(
            (c for c in candidates if is_spherical(matrix, c)),
            key=lambda c: sorted(map(matrix.index, c))
        )
    logger.debug("Found %d spherical subsets for %r.", len(result), matrix)
    return tuple(result)


def spherical_poset(
        matrix: CoxeterMatrix, max_generators: int = MAX_GENERATORS
) -> list[Subset]:
    """
    List all spherical subsets.

    :param matrix:
        Coxeter matrix
    :param max_generators:
        maximum allowed number of generators
    :return:
        spherical subsets (empty one included) ordered by size, then by generator order
    """
    if len(matrix) > max_generators:
        raise CapExceededError(
            f"{len(matrix)} generators exceed the cap of {max_generators}."
        )
    return list(_spherical_poset(matrix))


@dataclass(frozen=True, eq=False)
class FiniteGroupModel:
    """Finite Coxeter group realized as permutations of its root system."""

    matrix: CoxeterMatrix
    roots: tuple[tuple[float, ...], ...]
    positive: tuple[bool, ...]
    generator_permutations: dict
    simple_roots: dict
    elements: tuple[tuple[int, ...], ...]
    lengths: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.elements)

    def simple_root(self, s: Label) -> int:
        """Return index of simple root of generator `s`."""
        return self.simple_roots[s]

    def evaluate(self, word: Iterable[Label]) -> tuple[int, ...]:
        """
        Compute product of generators.

        :param word:
            generators, leftmost applied last
        :return:
            product as permutation of roots
        """
        element = self.elements[0]
        for s in word:
            permutation = self.generator_permutations[s]
            element = tuple(element[j] for j in permutation)
        return element

    def is_identity(self, word: Iterable[Label]) -> bool:
        """Check whether word represents the identity."""
        return self.evaluate(word) == self.elements[0]

    def longest_word(self, subset: Optional[Iterable[Label]] = None) -> tuple:
        """
        Find reduced word of longest element of a special subgroup.

        :param subset:
            generators of the special subgroup; all of them by default
        :return:
            reduced word
        """
        subset = self.matrix.gens if subset is None else self.matrix.ordered(subset)
        element = self.elements[0]
        word = []
        while True:
            for s in subset:
                if self.positive[element[self.simple_root(s)]]:
                    permutation = self.generator_permutations[s]
                    element = tuple(element[j] for j in permutation)
                    word.append(s)
                    break
            else:
                return tuple(word)

    def longest_element_action(self, subset: Iterable[Label]) -> Permutation:
        """
        Compute conjugation action of longest element on generators of subset.

        :param subset:
            generators of a special subgroup
        :return:
            permutation `s -> w_T s w_T` of the subset
        """
        subset = self.matrix.ordered(subset)
        element = self.evaluate(self.longest_word(subset))
        by_root = {self.roots[self.simple_root(s)]: s for s in subset}
        mapping = {}
        for s in subset:
            image = self.roots[element[self.simple_root(s)]]
            mapping[s] = by_root[tuple(-x + 0.0 for x in image)]
        return Permutation(mapping)


def _reflect(vector: np.ndarray, gram: np.ndarray, i: int) -> np.ndarray:
    image = vector.copy()
    image[i] -= 2 * gram[i] @ vector
    return image


@lru_cache(maxsize=64)
def enumerate_finite_group(
        matrix: CoxeterMatrix,
        max_order: int = MAX_GROUP_ORDER,
        rounding_digits: int = ROOT_ROUNDING_DIGITS
) -> FiniteGroupModel:
    """
    Enumerate a finite Coxeter group through its action on roots.

    :param matrix:
        Coxeter matrix of a finite group
    :param max_order:
        maximum allowed group order
    :param rounding_digits:
        number of decimals kept when identifying roots
    :return:
        model with roots, generator permutations and all elements
    """
    coxeter_type = classify_subdiagram(matrix)
    if not coxeter_type.spherical:
        raise ValueError(f"Group of type {coxeter_type} is infinite.")
    expected_order = group_order(coxeter_type)
    if expected_order > max_order:
        raise CapExceededError(
            f"Group of type {coxeter_type} has order {expected_order} above cap {max_order}."
        )

    k = len(matrix)
    gram = np.array([
        [-math.cos(math.pi / matrix.m(s, t)) if s != t else 1.0 for t in matrix.gens]
        for s in matrix.gens
    ])

    def key(vector: np.ndarray) -> tuple[float, ...]:
        return tuple(float(x) + 0.0 for x in np.round(vector, rounding_digits))

    roots = []
    index = {}
    queue = deque(np.eye(k))
    while queue:
        vector = queue.popleft()
        vector_key = key(vector)
        if vector_key in index:
            continue
        index[vector_key] = len(roots)
        roots.append(vector)
        if len(roots) > max_order:
            raise CapExceededError("Root system grew beyond the group order cap.")
        queue.extend(_reflect(vector, gram, i) for i in range(k))

    action = {}
    for i, s in enumerate(matrix.gens):
        action[s] = tuple(index[key(_reflect(root, gram, i))] for root in roots)
    simple = {s: index[key(np.eye(k)[i])] for i, s in enumerate(matrix.gens)}
    positive = tuple(bool(np.all(root >= -0.5 * 10 ** -rounding_digits)) for root in roots)

    identity = tuple(range(len(roots)))
    elements = [identity]
    lengths = [0]
    seen = {identity}
    queue = deque([(identity, 0)])
    while queue:
        element, length = queue.popleft()
        for s in matrix.gens:
            product = tuple(element[j] for j in action[s])
            if product not in seen:
                seen.add(product)
                elements.append(product)
                lengths.append(length + 1)
                queue.append((product, length + 1))
        if len(elements) > max_order:
            raise CapExceededError(f"Group order exceeds cap {max_order}.")
    if len(elements) != expected_order:
        raise RuntimeError(
            f"Enumerated {len(elements)} elements, expected {expected_order} "
            f"for type {coxeter_type}."
        )
    logger.debug(
        "Enumerated group of type %s: %d roots, %d elements.",
        coxeter_type, len(roots), len(elements)
    )
    return FiniteGroupModel(
        matrix=matrix,
        roots=tuple(key(root) for root in roots),
        positive=positive,
        generator_permutations=action,
        simple_roots=simple,
        elements=tuple(elements),
        lengths=tuple(lengths),
    )
