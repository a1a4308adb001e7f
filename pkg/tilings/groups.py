"""
Check gluing data for conditions (1)-(4) and enumerate finite quotients.

Author: Tilings developers
"""


import functools
import logging
import operator
from collections import deque
from dataclasses import dataclass, field
from typing import Hashable, Optional, Sequence, Union

import networkx as nx
from sympy.combinatorics.coset_table import coset_enumeration_r
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from tilings.blowup import Presentation
from tilings.constants import (
    FLOAT_TOLERANCE, INFINITY, MAX_COSETS, MAX_GROUP_ORDER, ROOT_ROUNDING_DIGITS, T_SCAN_CAP
)
from tilings.coxeter import classify_subdiagram, group_order, is_spherical
from tilings.errors import CapExceededError
from tilings.gluing import (
    ConditionVerdict, GluingSystem, check_inverse_pairs, check_matrix_preserved,
    check_periodicity, derived_sequence, relation_words
)
from tilings.labels import format_label
from tilings.linrep import (
    Representation, build_representation, check_order_conditions, select_parameter,
    verify_representation
)


logger = logging.getLogger(__name__)

Vertex = Hashable

CLOSED = 'closed'
CAPPED = 'capped'


@dataclass(frozen=True)
class CosetTable:
    """Action of generators on cosets of the trivial subgroup."""

    gens: tuple
    rows: tuple[tuple[Optional[int], ...], ...] = field(repr=False)
    size: int
    status: str

    @property
    def closed(self) -> bool:
        return self.status == CLOSED

    def act(self, coset: int, word: Sequence[Vertex]) -> int:
        """
        Apply word to a coset, first letter first.

        :param coset:
            coset index
        :param word:
            generator labels
        :return:
            resulting coset index
        """
        if not self.closed:
            raise ValueError("Coset table is not closed.")
        index = {x: i for i, x in enumerate(self.gens)}
        for x in word:
            coset = self.rows[coset][index[x]]
        return coset

    def as_dict(self) -> dict:
        return {
            'gens': [format_label(x) for x in self.gens],
            'size': self.size,
            'status': self.status,
            'rows': [list(row) for row in self.rows] if self.closed else None,
        }


def todd_coxeter(presentation: Presentation, max_cosets: int = MAX_COSETS) -> CosetTable:
    """
    Enumerate cosets of the trivial subgroup by relator scanning.

    :param presentation:
        group presentation with nonempty relator list
    :param max_cosets:
        maximum number of cosets defined before giving up
    :return:
        coset table; its status is `capped` if enumeration did not close
    """
    if not presentation.relators:
        raise ValueError("Coset enumeration needs at least one relator.")
    names = ', '.join(f'g{i}' for i in range(len(presentation.gens)))
    free, *symbols = free_group(names)
    by_label = dict(zip(presentation.gens, symbols))
    relators = []
    for relator in presentation.relators:
        word = functools.reduce(operator.mul, (by_label[x] for x in relator), free.identity)
        if not word.is_identity:
            relators.append(word)
    group = FpGroup(free, relators)
    table = coset_enumeration_r(group, [], max_cosets=max_cosets, incomplete=True)
    if not table.is_complete():
        size = len(table.omega)
        logger.warning("Coset enumeration stopped at %d cosets.", size)
        return CosetTable(tuple(presentation.gens), (), size, CAPPED)
    table.compress()
    table.standardize()
    columns = [table.A_dict[symbol] for symbol in symbols]
    rows = tuple(tuple(row[j] for j in columns) for row in table.table)
    logger.debug("Coset enumeration closed with %d cosets.", len(rows))
    return CosetTable(tuple(presentation.gens), rows, len(rows), CLOSED)


@dataclass(frozen=True)
class CayleyBall:
    """Ball in a Cayley graph with its growth by radius."""

    graph: nx.Graph = field(repr=False)
    sizes: tuple[int, ...]
    float_mode: bool = False


def _matrix_key(matrix, exact: bool, digits: int) -> tuple:
    if exact:
        return tuple(matrix.flatten())
    return tuple(round(float(x), digits) + 0.0 for x in matrix.flatten())


def cayley_ball(
        presentation: Presentation,
        radius: int,
        identifier: Union[CosetTable, Representation],
        rounding_digits: int = ROOT_ROUNDING_DIGITS
) -> CayleyBall:
    """
    Grow ball around identity in the Cayley graph of a presentation.

    :param presentation:
        group presentation whose generators label edges
    :param radius:
        maximal word length
    :param identifier:
        closed coset table or matrix representation deciding equality of elements
    :param rounding_digits:
        number of decimals compared in float mode
    :return:
        ball with nodes numbered in discovery order; each node keeps a
        shortest word and each edge its generator
    """
    if isinstance(identifier, CosetTable):
        if not identifier.closed:
            raise ValueError("Capped coset table cannot identify group elements.")
        start = 0
        index = {x: i for i, x in enumerate(identifier.gens)}

        def multiply(element, x):
            return identifier.rows[element][index[x]]

        def key(element):
            return element

        float_mode = False
    else:
        start = identifier.product(())

        def multiply(element, x):
            return element @ identifier.matrix(x)

        def key(element):
            return _matrix_key(element, identifier.exact, rounding_digits)

        float_mode = not identifier.exact

    graph = nx.Graph()
    nodes = {key(start): 0}
    graph.add_node(0, word=())
    frontier = deque([(start, 0)])
    sizes = [1]
    for _ in range(radius):
        next_frontier = deque()
        while frontier:
            element, node = frontier.popleft()
            for x in presentation.gens:
                image = multiply(element, x)
                image_key = key(image)
                if image_key not in nodes:
                    nodes[image_key] = len(nodes)
                    graph.add_node(nodes[image_key], word=graph.nodes[node]['word'] + (x,))
                    next_frontier.append((image, nodes[image_key]))
                if not graph.has_edge(node, nodes[image_key]):
                    graph.add_edge(node, nodes[image_key], generator=x)
        frontier = next_frontier
        sizes.append(graph.number_of_nodes())
    if float_mode:
        logger.warning("Cayley ball uses floating point identification of elements.")
    return CayleyBall(graph, tuple(sizes), float_mode)


def gluing_presentation(g: GluingSystem) -> Presentation:
    """
    Write presentation of the group A of a gluing system.

    :param g:
        gluing system satisfying conditions (1)-(3)
    :return:
        generators V, relators v bar(v) and r(u, v) for all ordered adjacent pairs
    """
    relators = [(v, g.bar(v)) for v in g.vertices]
    relators.extend(relation_words(g).values())
    return Presentation(tuple(g.vertices), tuple(relators))


def _condition_4_from_table(g: GluingSystem, table: CosetTable) -> ConditionVerdict:
    cosets = {}
    for v in g.vertices:
        coset = table.act(0, (v,))
        if coset == 0:
            return ConditionVerdict(False, v, 'generator is trivial')
        if coset in cosets:
            return ConditionVerdict(False, (cosets[coset], v), 'generators coincide')
        cosets[coset] = v
    for u, v in g.adjacent_pairs():
        sequence = derived_sequence(g, u, v)
        prefixes = [table.act(0, sequence.word[:k]) for k in range(2 * sequence.m)]
        if len(set(prefixes)) != len(prefixes):
            return ConditionVerdict(False, (u, v), 'partial products are not distinct')
    return ConditionVerdict(True, note=f'group of order {table.size}')


@dataclass(frozen=True)
class GluingReport:
    """Conditions (1)-(4) with evidence used for condition (4)."""

    c1: ConditionVerdict
    c2: ConditionVerdict
    c3: ConditionVerdict
    c4: ConditionVerdict
    certificate: Optional[str] = None
    group_order: Optional[int] = None
    t: Optional[int] = None
    relation_words: dict = field(default_factory=dict, repr=False)
    notes: tuple[str, ...] = ()


def check_gluing_conditions(
        g: GluingSystem,
        max_cosets: int = MAX_COSETS,
        t_scan_cap: int = T_SCAN_CAP,
        float_tolerance: float = FLOAT_TOLERANCE,
        max_order: int = MAX_GROUP_ORDER
) -> GluingReport:
    """
    Check conditions (1)-(4) for gluing data.

    Condition (4) is reported true only with a certificate: either the
    representation built from Conditions (P) and (C), or a closed coset
    enumeration of the group A. Otherwise its verdict is unknown.

    :param g:
        gluing system
    :param max_cosets:
        cap for coset enumeration
    :param t_scan_cap:
        cap for the parameter scan of the representation
    :param float_tolerance:
        tolerance for float-mode representations
    :param max_order:
        largest Coxeter group order used for the completion comparison
    :return:
        report
    """
    c1 = check_inverse_pairs(g)
    c2 = check_matrix_preserved(g)
    c3 = check_periodicity(g)
    words = relation_words(g)
    notes = []
    if not (c1.holds and c2.holds and c3.holds):
        c4 = ConditionVerdict(None, note='group A is undefined')
        return GluingReport(c1, c2, c3, c4, relation_words=words)

    c4 = ConditionVerdict(None, note='unknown')
    certificate = None
    t = None
    if g.has_order and g.is_homogeneous():
        order_report = check_order_conditions(g)
        if order_report.p_holds and order_report.c_holds:
            try:
                t = select_parameter(g, t_scan_cap, tolerance=float_tolerance)
            except CapExceededError as e:
                notes.append(str(e))
            else:
                rep = build_representation(g, t, tolerance=float_tolerance)
                verdict = verify_representation(rep, g, float_tolerance)
                if verdict.holds:
                    c4 = ConditionVerdict(True, note=f'certified by representation at t = {t}')
                    certificate = 'representation'
                    if not verdict.exact:
                        notes.append('representation verified in float mode')

    size = None
    everything_spherical = is_spherical(g.matrix, g.vertices)
    if certificate is None or everything_spherical:
        table = todd_coxeter(gluing_presentation(g), max_cosets)
        if table.closed:
            size = table.size
            if certificate is None:
                c4 = _condition_4_from_table(g, table)
                certificate = 'enumeration'
        else:
            notes.append(f'coset enumeration capped at {table.size} cosets')

    if size is not None and everything_spherical:
        coxeter_type = classify_subdiagram(g.matrix)
        expected = group_order(coxeter_type)
        if expected <= max_order and expected != INFINITY and size != expected:
            relation = '<' if size < expected else '>'
            notes.append(
                f'group order {size} {relation} {expected} vertices of the Coxeter cell '
                f'of type {coxeter_type}; no completion exists'
            )
    return GluingReport(c1, c2, c3, c4, certificate, size, t, words, tuple(notes))
