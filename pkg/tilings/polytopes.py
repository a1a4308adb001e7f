"""
Study tilings by associahedra and permutohedra.

Facets of the associahedron K^n are indexed by diagonals of a convex
(n+3)-gon with vertices 0, ..., n+2. A diagonal {k-1, l+1} corresponds
to the subinterval [k, l] of [1, n+1], and two facets meet if and only if
their diagonals do not cross. Minimal blow-ups of Coxeter cells of
path-shaped diagrams (given by Schläfli symbols) are tiled by copies of
K^n; this module computes their gluing data, t-invariants, isomorphism
verdicts and the symmetric presentation of the automorphism group of
X(3, ..., 3). Maximal blow-ups, tiled by permutohedra, are checked too.

Author: Tilings developers
"""


import itertools
import logging
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Optional, Sequence

import networkx as nx

from tilings.blowup import (
    BlowupProblem, FramingReport, NestedComplex, Presentation, check_admissible,
    conjugate_subset, framing_conditions, natural_gluing_system, nested_complex
)
from tilings.complexes import SimplicialComplex, automorphism_group
from tilings.constants import (
    MAX_AUTOMORPHISMS, MAX_COMPLEX_VERTICES, MAX_SYMMETRIC_PRESENTATION_DIM
)
from tilings.coxeter import CoxeterMatrix, is_spherical
from tilings.errors import CapExceededError, InadmissibleError
from tilings.gluing import GluingSystem, relation_words
from tilings.labels import format_label
from tilings.permutation import Permutation


logger = logging.getLogger(__name__)

Diagonal = tuple[int, int]
Interval = frozenset


class DiagonalModel:
    """Diagonals of the (n+3)-gon together with the interval bijection."""

    def __init__(self, n: int):
        """
        Initialize an instance.

        :param n:
            dimension of the associahedron
        :return:
            freshly created instance of `DiagonalModel` class
        """
        if n < 1:
            raise ValueError(f"Dimension must be positive, got {n}.")
        self.n = n
        self.size = n + 3
        self.diagonals = tuple(
            (i, j)
            for i in range(self.size) for j in range(i + 2, self.size)
            if j - i != self.size - 1
        )
        self._intervals = {d: frozenset(range(d[0] + 1, d[1])) for d in self.diagonals}
        self._diagonals = {T: d for d, T in self._intervals.items()}

    def __repr__(self) -> str:
        return f'DiagonalModel(n={self.n})'

    def normalize(self, d: Sequence[int]) -> Diagonal:
        """Return diagonal as a sorted pair, checking its endpoints."""
        i, j = sorted(x % self.size for x in d)
        if (i, j) not in self._intervals:
            raise ValueError(f"{tuple(d)} is not a diagonal of the {self.size}-gon.")
        return i, j

    def crosses(self, first: Sequence[int], second: Sequence[int]) -> bool:
        """Check whether interiors of two diagonals intersect."""
        a, b = self.normalize(first)
        c, d = self.normalize(second)
        return a < c < b < d or c < a < d < b

    def interval_of(self, d: Sequence[int]) -> Interval:
        """Return subinterval [k, l] of [1, n+1] of diagonal {k-1, l+1}."""
        return self._intervals[self.normalize(d)]

    def diagonal_of(self, interval: Iterable[int]) -> Diagonal:
        """Return diagonal of a proper subinterval of [1, n+1]."""
        interval = frozenset(interval)
        try:
            return self._diagonals[interval]
        except KeyError:
            raise ValueError(
                f"{format_label(interval)} is not a proper subinterval of [1, {self.n + 1}]."
            ) from None

    @property
    def intervals(self) -> tuple[Interval, ...]:
        """Return subintervals of all diagonals in diagonal order."""
        return tuple(self._intervals[d] for d in self.diagonals)

    def vertex_cutting(self, i: int) -> Diagonal:
        """Return diagonal cutting off vertex `i`."""
        return self.normalize(((i - 1) % self.size, (i + 1) % self.size))

    def noncrossing_complex(self) -> SimplicialComplex:
        """Build complex L(K^n) of noncrossing sets of diagonals."""
        graph = nx.Graph()
        graph.add_nodes_from(self.diagonals)
        graph.add_edges_from(
            (d, e) for d, e in itertools.combinations(self.diagonals, 2)
            if not self.crosses(d, e)
        )
        return SimplicialComplex(self.diagonals, nx.enumerate_all_cliques(graph))

    def crossing_graph(self) -> nx.Graph:
        """Return graph joining crossing diagonals."""
        graph = nx.Graph()
        graph.add_nodes_from(self.diagonals)
        graph.add_edges_from(
            (d, e) for d, e in itertools.combinations(self.diagonals, 2) if self.crosses(d, e)
        )
        return graph

    def polygon_symmetries(self) -> list[tuple[str, Permutation]]:
        """List rotations and reflections of the polygon as vertex permutations."""
        vertices = range(self.size)
        rotations = [
            (f'rotation {k}', Permutation({v: (v + k) % self.size for v in vertices}))
            for k in range(self.size)
        ]
        reflections = [
            (f'reflection {k}', Permutation({v: (k - v) % self.size for v in vertices}))
            for k in range(self.size)
        ]
        return rotations + reflections

    def act(self, symmetry: Permutation, d: Sequence[int]) -> Diagonal:
        """Apply polygon symmetry to a diagonal."""
        return self.normalize((symmetry(d[0]), symmetry(d[1])))


def diagonal_model(n: int) -> DiagonalModel:
    """Create diagonal model of K^n."""
    return DiagonalModel(n)


def face_type(n: int, d: Sequence[int]) -> tuple[int, int]:
    """
    Find dimensions of the factors of the facet F(d) of K^n.

    :param n:
        dimension of the associahedron
    :param d:
        diagonal of the (n+3)-gon
    :return:
        pair (m(Q), m(Q')) with m(Q) <= m(Q'); F(d) is K^m(Q) x K^m(Q')
    """
    model = DiagonalModel(n)
    i, j = model.normalize(d)
    first = j - i - 2
    second = model.size - (j - i) - 2
    return min(first, second), max(first, second)


@dataclass(frozen=True)
class AutomorphismAction:
    """Action of the dihedral group D_{n+3} on diagonals."""

    model: DiagonalModel
    symmetries: tuple[tuple[str, Permutation], ...] = field(repr=False)
    on_diagonals: tuple[Permutation, ...] = field(repr=False)
    image: tuple[Permutation, ...]
    kernel: tuple[str, ...]

    @property
    def order(self) -> int:
        return len(self.image)


def assoc_automorphisms(n: int) -> AutomorphismAction:
    """
    Compute the action of D_{n+3} on diagonals of the (n+3)-gon.

    :param n:
        dimension of the associahedron
    :return:
        action with its distinct images (identity first) and the names of
        polygon symmetries acting trivially
    """
    model = DiagonalModel(n)
    symmetries = model.polygon_symmetries()
    on_diagonals = tuple(
        Permutation({d: model.act(symmetry, d) for d in model.diagonals})
        for _, symmetry in symmetries
    )
    image = sorted(
        set(on_diagonals),
        key=lambda p: tuple(model.diagonals.index(p(d)) for d in model.diagonals)
    )
    kernel = tuple(name for (name, _), p in zip(symmetries, on_diagonals) if p.is_identity())
    logger.debug(
        "D_%d acts on %d diagonals with image of order %d.",
        model.size, len(model.diagonals), len(image)
    )
    return AutomorphismAction(model, tuple(symmetries), on_diagonals, tuple(image), kernel)


def _find_extension(
        automorphisms: Sequence[Permutation], domain: Iterable, target: dict
) -> Optional[Permutation]:
    domain = list(domain)
    for a in automorphisms:
        if all(a(x) == target[x] for x in domain):
            return a
    return None


class TilingGluingData:
    """Gluing data of the minimal blow-up of a Coxeter cell with path-shaped diagram."""

    def __init__(self, symbol: Sequence[int], check: bool = True):
        """
        Initialize an instance.

        :param symbol:
            Schläfli symbol (m_1, ..., m_n), n >= 2
        :param check:
            if set, admissibility of the interval collection is verified
        :return:
            freshly created instance of `TilingGluingData` class
        """
        symbol = tuple(int(m) for m in symbol)
        if len(symbol) < 2:
            raise ValueError("Tilings by associahedra need a symbol of length at least 2.")
        if any(m < 2 for m in symbol):
            raise ValueError(f"Labels of a Schläfli symbol must be at least 2: {symbol}")
        self.symbol = symbol
        self.n = len(symbol)
        self.matrix = CoxeterMatrix.from_schlafli(symbol)
        self.model = DiagonalModel(self.n)
        self.intervals = tuple(sorted(self.model.intervals, key=lambda T: (len(T), min(T))))
        self.collection = tuple(T for T in self.intervals if len(T) >= 2)

        self.symmetries = {}
        for T in self.intervals:
            if not is_spherical(self.matrix, T):
                raise ValueError(f"Subinterval {format_label(T)} of {symbol} is not spherical.")
            self.symmetries[T] = Permutation({
                s: next(iter(conjugate_subset(self.matrix, T, {s}))) for s in T
            })
        self.extendable = {
            T: self.symmetries[T].is_identity() or len(T) in (1, self.n)
            for T in self.intervals
        }
        self.nonextendable = frozenset(T for T, flag in self.extendable.items() if not flag)
        if check:
            verdict = check_admissible(self.problem)
            if not verdict.admissible:
                raise InadmissibleError(
                    f"Symbol {symbol} is not admissible: {verdict.violation} at "
                    f"{format_label(verdict.witness)}.",
                    verdict.witness
                )

    def __repr__(self) -> str:
        return f'TilingGluingData({self.symbol}, t={self.t})'

    @property
    def t(self) -> int:
        return len(self.nonextendable)

    @cached_property
    def problem(self) -> BlowupProblem:
        boundary = BlowupProblem.boundary_complex(self.matrix)
        return BlowupProblem(self.matrix, boundary, self.collection)

    @cached_property
    def nested(self) -> NestedComplex:
        return nested_complex(self.problem)

    @cached_property
    def gluing_system(self) -> GluingSystem:
        return natural_gluing_system(self.problem, self.nested)

    @cached_property
    def automorphisms(self) -> list[Permutation]:
        """Return D_{n+3} image acting on intervals, identity first."""
        action = assoc_automorphisms(self.n)
        m_sharp = self.nested.m_sharp
        result = []
        for p in action.image:
            mapping = {
                self.model.interval_of(d): self.model.interval_of(p(d)) for d in self.model.diagonals
            }
            if all(
                    m_sharp.m(u, v) == m_sharp.m(mapping[u], mapping[v])
                    for u, v in itertools.combinations(self.intervals, 2)
            ):
                result.append(Permutation(mapping))
        return result

    def extension_search(self) -> dict[Interval, bool]:
        """Decide extendability of every gluing map by searching D_{n+3}."""
        g = self.gluing_system
        return {
            T: _find_extension(self.automorphisms, g.star(T), g.j(T)) is not None
            for T in self.intervals
        }


def tiling_gluing_data(symbol: Sequence[int], check: bool = True) -> TilingGluingData:
    """
    Build gluing data of the tiling X(m_1, ..., m_n) by associahedra.

    :param symbol:
        Schläfli symbol
    :param check:
        if set, admissibility of the interval collection is verified
    :return:
        gluing data; the blow-up itself is built on first access
    """
    return TilingGluingData(symbol, check)


@dataclass(frozen=True)
class IsomorphismVerdict:
    """Outcome of isomorphism tests between two tilings by associahedra."""

    necessary: bool
    conjugate: bool
    sufficient: bool
    witness: Optional[Permutation] = None
    necessary_witness: Optional[Permutation] = None
    reframed: tuple = ()


def _reframings(d: TilingGluingData) -> Iterator[dict]:
    """
    Yield gluing maps of `d` with nonextendable maps composed with symmetries.

    Each nonextendable j_w may be replaced by j_w o a, where a is a
    symmetry of K^n fixing w, as long as the result is an involution of
    the star of w. The unchanged maps come first.
    """
    g = d.gluing_system
    mirrors = [T for T in d.intervals if T in d.nonextendable]
    options = []
    for w in mirrors:
        j = g.j(w)
        variants = [j]
        for a in d.automorphisms:
            if a(w) != w:
                continue
            changed = {x: j[a(x)] for x in g.star(w)}
            if changed not in variants and all(changed[y] == x for x, y in changed.items()):
                variants.append(changed)
        options.append(variants)
    for choice in itertools.product(*options):
        maps = {v: g.j(v) for v in g.vertices}
        maps.update(zip(mirrors, choice))
        yield maps


def _transitions(d1: TilingGluingData, start: Permutation, maps2: dict) -> Optional[dict]:
    g1 = d1.gluing_system
    transitions = {}
    seen = {start}
    queue = deque([start])
    while queue:
        phi = queue.popleft()
        for v in g1.vertices:
            star = g1.star(v)
            target = {x: maps2[phi(v)][phi(g1.apply(v, x))] for x in star}
            following = _find_extension(d1.automorphisms, star, target)
            if following is None:
                return None
            transitions[(phi, v)] = following
            if following not in seen:
                seen.add(following)
                queue.append(following)
    return transitions


def _develops(d1: TilingGluingData, start: Permutation, maps2: dict) -> bool:
    transitions = _transitions(d1, start, maps2)
    if transitions is None:
        return False
    states = {phi for phi, _ in transitions}
    words = relation_words(d1.gluing_system)
    for phi in states:
        for word in words.values():
            state = phi
            for x in word:
                state = transitions[(state, x)]
            if state != phi:
                return False
    return True


def _is_conjugating(d1: TilingGluingData, d2: TilingGluingData, phi: Permutation) -> bool:
    g1, g2 = d1.gluing_system, d2.gluing_system
    return all(
        g2.apply(phi(v), phi(x)) == phi(g1.apply(v, x))
        for v in g1.vertices for x in g1.star(v)
    )


def iso_tests(d1: TilingGluingData, d2: TilingGluingData) -> IsomorphismVerdict:
    """
    Compare two tilings by associahedra of the same dimension.

    The necessary test looks for a symmetry of K^n moving the
    nonextendable mirrors of the first tiling onto those of the second.
    The sufficient test develops both tilings from their base tiles:
    crossing mirror v replaces the identification phi of base tiles by
    the symmetry agreeing with j2_phi(v) o phi o j1_v on the star of v,
    and the identification must close up around every 2-cell. When the
    gluing maps of the second tiling fail, its framing is changed by
    symmetries fixing the nonextendable mirrors and the development is
    tried again.

    :param d1:
        gluing data of the first tiling
    :param d2:
        gluing data of the second tiling
    :return:
        verdict; witnesses are the first symmetries found in the order of
        `TilingGluingData.automorphisms`, `reframed` lists mirrors of the
        second tiling whose gluing maps were changed
    """
    if d1.n != d2.n:
        raise ValueError(f"Dimensions differ: {d1.n} and {d2.n}.")
    necessary_witness = next(
        (
            phi for phi in d1.automorphisms
            if frozenset(map(phi, d1.nonextendable)) == d2.nonextendable
        ),
        None
    )
    if necessary_witness is None:
        return IsomorphismVerdict(False, False, False)
    conjugate = any(_is_conjugating(d1, d2, phi) for phi in d1.automorphisms)
    g2 = d2.gluing_system
    for maps2 in _reframings(d2):
        witness = next(
            (phi for phi in d1.automorphisms if _develops(d1, phi, maps2)), None
        )
        if witness is not None:
            reframed = tuple(w for w in d2.intervals if maps2[w] != g2.j(w))
            return IsomorphismVerdict(
                True, conjugate, True, witness, necessary_witness, reframed
            )
    return IsomorphismVerdict(True, conjugate, False, None, necessary_witness)



@dataclass(frozen=True)
class Classification:
    """Partition of a family of tilings into isomorphism classes."""

    symbols: tuple[tuple[int, ...], ...]
    t: dict
    classes: tuple[tuple[tuple[int, ...], ...], ...]
    witnesses: dict = field(repr=False)
    flagged: tuple = ()

    def as_dict(self, model: Optional[DiagonalModel] = None) -> dict:
        """Export classification as JSON-ready dictionary."""

        def render(phi: Optional[Permutation]):
            if phi is None:
                return None
            if model is None:
                return {format_label(x): format_label(y) for x, y in phi.items()}
            return {
                format_label(model.diagonal_of(x)): format_label(model.diagonal_of(y))
                for x, y in phi.items()
            }

        return {
            'symbols': [list(s) for s in self.symbols],
            't': {format_label(s): t for s, t in self.t.items()},
            'classes': [[list(s) for s in cls] for cls in self.classes],
            'witnesses': {
                f'{format_label(a)} ~ {format_label(b)}': render(phi)
                for (a, b), phi in self.witnesses.items()
            },
            'flagged': [[list(a), list(b)] for a, b in self.flagged],
        }


def classify_family(symbols: Iterable[Sequence[int]]) -> Classification:
    """
    Split tilings given by Schläfli symbols into isomorphism classes.

    :param symbols:
        admissible symbols of one length
    :return:
        classes of the sufficient test in input order; pairs passing the
        necessary test but failing the sufficient one are flagged
    """
    symbols = list(dict.fromkeys(tuple(s) for s in symbols))
    if not symbols:
        raise ValueError("Family of symbols is empty.")
    data = [tiling_gluing_data(s) for s in symbols]
    if len({d.n for d in data}) > 1:
        raise ValueError("Symbols of a family must have the same length.")

    parents = list(range(len(symbols)))

    def find(i: int) -> int:
        while parents[i] != i:
            parents[i] = parents[parents[i]]
            i = parents[i]
        return i

    witnesses = {}
    flagged = []
    for i, j in itertools.combinations(range(len(symbols)), 2):
        verdict = iso_tests(data[i], data[j])
        witnesses[(symbols[i], symbols[j])] = verdict.witness
        if verdict.sufficient:
            parents[find(j)] = find(i)
        elif verdict.necessary:
            flagged.append((symbols[i], symbols[j]))
    groups = {}
    for i, symbol in enumerate(symbols):
        groups.setdefault(find(i), []).append(symbol)
    classes = tuple(tuple(group) for group in groups.values())
    logger.debug("Family of %d symbols splits into %d classes.", len(symbols), len(classes))
    return Classification(
        tuple(symbols), {d.symbol: d.t for d in data}, classes, witnesses, tuple(flagged)
    )


@dataclass(frozen=True)
class SymmetryVerdict:
    """Outcome of the maximal symmetry test."""

    holds: bool
    witness: Optional[tuple] = None


def max_symmetry_test(d: TilingGluingData) -> SymmetryVerdict:
    """
    Check that every symmetry of the base tile lifts to the tiling.

    :param d:
        gluing data
    :return:
        verdict with (phi, v) for which phi o j_v o phi^-1 o j_phi(v)
        does not extend to a symmetry of K^n
    """
    g = d.gluing_system
    for phi in d.automorphisms:
        inverse = phi.inverse()
        for v in g.vertices:
            w = phi(v)
            target = {y: phi(g.apply(v, inverse(g.apply(w, y)))) for y in g.star(w)}
            if _find_extension(d.automorphisms, g.star(w), target) is None:
                return SymmetryVerdict(False, (phi, v))
    return SymmetryVerdict(True)


@dataclass(frozen=True, order=True)
class Subpolygon:
    """Arc of polygon vertices start, start + 1, ..., end taken modulo size."""

    start: int
    end: int
    size: int

    @property
    def vertices(self) -> tuple[int, ...]:
        length = (self.end - self.start) % self.size
        return tuple((self.start + k) % self.size for k in range(length + 1))

    @property
    def edges(self) -> tuple[int, ...]:
        """Return sides of the arc, side k joining vertices k and k + 1."""
        return self.vertices[:-1]

    @property
    def diagonal(self) -> Diagonal:
        return tuple(sorted((self.start, self.end)))

    @property
    def other(self) -> 'Subpolygon':
        return Subpolygon(self.end, self.start, self.size)

    def contains(self, d: Sequence[int]) -> bool:
        vertices = set(self.vertices)
        return d[0] in vertices and d[1] in vertices

    def label(self) -> tuple:
        return 'beta', self.start, self.end


def _reflection(d: Diagonal, size: int) -> Permutation:
    return Permutation({v: (d[0] + d[1] - v) % size for v in range(size)})


def _reflect_subpolygon(r: Permutation, q: Subpolygon) -> Subpolygon:
    return Subpolygon(r(q.end), r(q.start), q.size)


def _side_without(d: Diagonal, other: Diagonal, size: int) -> Subpolygon:
    side = Subpolygon(d[0], d[1], size)
    return side.other if side.contains(other) else side


def _arc_reversal(q: Subpolygon) -> Permutation:
    edges = q.edges
    mapping = {k: k for k in range(q.size)}
    mapping.update(zip(edges, reversed(edges)))
    return Permutation(mapping)


def _edge_reflection(d: Diagonal, size: int) -> Permutation:
    return Permutation({k: (d[0] + d[1] - k - 1) % size for k in range(size)})


@dataclass(frozen=True)
class SymmetricPresentation:
    """Presentation of Aut(X(3, ..., 3)) with its homomorphism to S_{n+3}."""

    n: int
    presentation: Presentation = field(repr=False)
    psi: dict = field(repr=False)
    families: dict
    verified: bool

    def as_dict(self) -> dict:
        result = self.presentation.as_dict()
        result['psi'] = {
            format_label(x): [p(k) for k in range(self.n + 3)] for x, p in self.psi.items()
        }
        result['families'] = dict(self.families)
        result['verified'] = self.verified
        return result


def _r_i_word(
        b: Diagonal, c: Diagonal, flags: Sequence[int], size: int,
        reflections: dict
) -> tuple:
    diagonals = [b, c]
    sides = [_side_without(b, c, size), _side_without(c, b, size)]
    used = []
    for k, flag in enumerate(flags, start=1):
        side = sides[k] if not flag else sides[k].other
        used.append(side)
        r = reflections[diagonals[k]] if flag else None
        previous_diagonal, previous_side = diagonals[k - 1], sides[k - 1]
        if r is not None:
            previous_diagonal = tuple(sorted((r(previous_diagonal[0]), r(previous_diagonal[1]))))
            previous_side = _reflect_subpolygon(r, previous_side)
        diagonals.append(previous_diagonal)
        sides.append(previous_side)
    tail = [
        ('rho',) + d for d, flag in zip((c, b, c, b), flags) if flag
    ]
    return tuple(q.label() for q in used) + tuple(tail)


def symm_presentation(
        n: int, max_dimension: int = MAX_SYMMETRIC_PRESENTATION_DIM
) -> SymmetricPresentation:
    """
    Write presentation of Aut(X(3, ..., 3)) by subpolygon involutions.

    Generators are beta_Q for subpolygons Q, one for each side of each
    diagonal, and rho_d for diagonals d. Going around a codimension-two
    face b, c of the base tile, the flag i_k chooses the side of the k-th
    crossed diagonal that contains the previous one, and the product of
    the four beta's equals rho_c^i1 rho_b^i2 rho_c^i3 rho_b^i4.

    The homomorphism psi to the symmetric group of the n + 3 sides of the
    polygon sends beta_Q to the reversal of the sides of Q and rho_d to the
    reflection of the polygon exchanging the endpoints of d.

    :param n:
        dimension, at least 2
    :param max_dimension:
        largest dimension for which relators are generated
    :return:
        presentation with psi images; `verified` tells that psi kills every relator
    """
    if n < 2:
        raise ValueError("Symmetric presentation needs dimension at least 2.")
    if n > max_dimension:
        raise CapExceededError(f"Dimension {n} exceeds the cap of {max_dimension}.")
    model = DiagonalModel(n)
    size = model.size
    subpolygons = []
    for d in model.diagonals:
        side = Subpolygon(d[0], d[1], size)
        subpolygons.extend((side, side.other))
    reflections = {d: _reflection(d, size) for d in model.diagonals}

    gens = tuple(q.label() for q in subpolygons) + tuple(('rho',) + d for d in model.diagonals)
    psi = {q.label(): _arc_reversal(q) for q in subpolygons}
    psi.update({('rho',) + d: _edge_reflection(d, size) for d in model.diagonals})

    families = {}
    relators = []

    def add(family: str, words: list) -> None:
        families[family] = len(words)
        relators.extend(words)

    add('beta squares', [(x, x) for x in gens if x[0] == 'beta'])
    add('rho squares', [(x, x) for x in gens if x[0] == 'rho'])
    add('opposite sides', [
        (q.label(), q.other.label()) * 2 for q in subpolygons if q.start < q.end
    ])
    add('side and reflection', [(q.label(), ('rho',) + q.diagonal) * 2 for q in subpolygons])
    dihedral = []
    for b, c in itertools.combinations(model.diagonals, 2):
        rotation = reflections[b] * reflections[c]
        power, order = rotation, 1
        while not power.is_identity():
            power, order = rotation * power, order + 1
        dihedral.append((('rho',) + b, ('rho',) + c) * order)
    add('dihedral', dihedral)
    cells = []
    for b, c in itertools.permutations(model.diagonals, 2):
        if model.crosses(b, c):
            continue
        for flags in itertools.product((0, 1), repeat=4):
            cells.append(_r_i_word(b, c, flags, size, reflections))
    add('codimension two', cells)

    identity = Permutation.identity(range(size))
    verified = True
    for relator in relators:
        product = identity
        for x in relator:
            product = product * psi[x]
        if not product.is_identity():
            logger.warning("Relator %s survives in S_%d.", [format_label(x) for x in relator], size)
            verified = False
    logger.debug("Symmetric presentation for n = %d has %d relators.", n, len(relators))
    return SymmetricPresentation(n, Presentation(gens, tuple(relators)), psi, families, verified)


@dataclass(frozen=True)
class PermutohedronReport:
    """Checks of a maximal blow-up tiled by permutohedra."""

    n: int
    mode: str
    vertex_count: int
    chains_match: bool
    automorphism_order: Optional[int]
    rigid: Optional[bool]
    framing: FramingReport = field(repr=False)
    covering: bool

    @property
    def conclusion(self) -> str:
        if self.covering:
            return 'covering of the tiling by the Coxeter complex of the permutohedron exists'
        return 'no covering certified'


def chain_complex(gens: Sequence) -> SimplicialComplex:
    """Build complex N(P^n) of chains of proper nonempty subsets."""
    subsets = [
        frozenset(c) for size in range(1, len(gens))
        for c in itertools.combinations(gens, size)
    ]
    graph = nx.Graph()
    graph.add_nodes_from(subsets)
    graph.add_edges_from(
        (U, T) for U, T in itertools.combinations(subsets, 2) if U < T or T < U
    )
    return SimplicialComplex(subsets, nx.enumerate_all_cliques(graph))


def permutohedron_checks(
        matrix: CoxeterMatrix,
        mode: str = 'spherical',
        max_vertices: int = MAX_COMPLEX_VERTICES,
        max_automorphisms: int = MAX_AUTOMORPHISMS
) -> PermutohedronReport:
    """
    Check the maximal blow-up of a Coxeter cell against the permutohedron.

    :param matrix:
        Coxeter matrix on n + 1 generators
    :param mode:
        'spherical' for the boundary of a Coxeter cell of a finite group,
        'simplicial' for a group whose proper subsets are all spherical
    :param max_vertices:
        maximum number of vertices for the automorphism search; larger
        complexes are reported without automorphism order
    :param max_automorphisms:
        maximum number of automorphisms
    :return:
        report
    """
    if mode not in ('spherical', 'simplicial'):
        raise ValueError(f"Unknown mode: {mode}")
    gens = matrix.gens
    everything = frozenset(gens)
    proper_spherical = all(
        is_spherical(matrix, c)
        for size in range(1, len(gens)) for c in itertools.combinations(gens, size)
    )
    if not proper_spherical:
        raise ValueError("Every proper subset of generators must be spherical.")
    whole = is_spherical(matrix, everything)
    if mode == 'spherical' and not whole:
        raise ValueError("Spherical mode needs a finite Coxeter group.")
    if mode == 'simplicial' and whole:
        raise ValueError("Simplicial mode needs an infinite Coxeter group.")

    problem = BlowupProblem.maximal(matrix, BlowupProblem.boundary_complex(matrix))
    nested = nested_complex(problem)
    chains = chain_complex(gens)
    chains_match = nested.complex == chains

    automorphism_order = None
    rigid = None
    automorphisms = None
    if len(chains) <= max_vertices:
        automorphisms = automorphism_group(
            nested.complex, preserve=nested.m_sharp,
            max_vertices=max_vertices, max_automorphisms=max_automorphisms
        )
        automorphism_order = len(automorphisms)

    g = natural_gluing_system(problem, nested)
    extensions = {}
    for T in nested.s_sharp:
        lifted = {s: next(iter(conjugate_subset(matrix, T, {s}))) if s in T else s for s in gens}
        extensions[T] = Permutation({U: frozenset(lifted[s] for s in U) for U in nested.s_sharp})
    framing = framing_conditions(g, extensions)
    if automorphisms is not None:
        rigid = all(
            a.is_identity()
            for a in automorphisms for v in g.vertices
            if all(a(x) == x for x in g.star(v))
        )
    covering = all(
        verdict.holds for verdict in (framing.m1, framing.m2, framing.e, framing.h)
    )
    return PermutohedronReport(
        len(gens) - 1, mode, len(nested.s_sharp), chains_match,
        automorphism_order, rigid, framing, covering
    )
