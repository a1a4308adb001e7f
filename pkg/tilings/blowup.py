"""
Blow up Coxeter cell complexes along admissible collections of spherical subsets.

The module computes R-decompositions, the nested complex L_# with its
Coxeter matrix M_#, gluing involutions j_T, Condition (F), framing
conditions of gluing systems and the presentation of the mock
reflection group.

Author: Tilings developers
"""


import itertools
import logging
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Hashable, Iterable, Optional, Sequence

import networkx as nx

from tilings.complexes import SimplicialComplex, automorphism_group
from tilings.constants import (
    INFINITY, MAX_AUTOMORPHISMS, MAX_COMPLEX_VERTICES, MAX_CONDITION_F_GENERATORS,
    MAX_GENERATORS, MAX_GROUP_ORDER
)
from tilings.coxeter import (
    CoxeterMatrix, classify_subdiagram, enumerate_finite_group,
    longest_element_symmetry, spherical_poset
)
from tilings.errors import CapExceededError, InadmissibleError
from tilings.gluing import (
    ConditionVerdict, GluingSystem, cell_domain, check_matrix_preserved,
    derived_sequence, holonomy
)
from tilings.labels import format_label
from tilings.permutation import Permutation


logger = logging.getLogger(__name__)

Label = Hashable
Vertex = Hashable
Subset = frozenset


class BlowupProblem:
    """Coxeter matrix with a complex L of spherical subsets and a blow-up collection R."""

    def __init__(
            self,
            matrix: CoxeterMatrix,
            complex_: Optional[SimplicialComplex] = None,
            collection: Iterable[Iterable[Label]] = (),
            max_generators: int = MAX_GENERATORS
    ):
        """
        Initialize an instance.

        :param matrix:
            Coxeter matrix on S
        :param complex_:
            simplicial complex L on S; all nonempty spherical subsets by default
        :param collection:
            blow-up collection R, a set of simplices of L with at least two elements
        :param max_generators:
            maximum allowed number of generators
        :return:
            freshly created instance of `BlowupProblem` class
        """
        self.matrix = matrix
        spherical = spherical_poset(matrix, max_generators)
        self.spherical = frozenset(spherical)
        if complex_ is None:
            complex_ = SimplicialComplex(matrix.gens, [T for T in spherical if T])
        if set(complex_.vertices) != set(matrix.gens):
            raise ValueError("Vertices of L must be the generators.")
        non_spherical = [face for face in complex_.faces if face not in self.spherical]
        if non_spherical:
            raise ValueError(f"L has a non-spherical simplex: {format_label(non_spherical[0])}")
        self.complex = complex_
        self.collection = frozenset(matrix.subset(T) for T in collection)
        for T in self.collection:
            if len(T) < 2:
                raise ValueError(f"Blow-up collection contains a singleton {format_label(T)}.")
            if T not in complex_.faces:
                raise ValueError(f"{format_label(T)} is not a simplex of L.")

    @classmethod
    def maximal(
            cls, matrix: CoxeterMatrix, complex_: Optional[SimplicialComplex] = None, **kwargs
    ) -> 'BlowupProblem':
        """Create problem with R consisting of all simplices of L with at least two vertices."""
        problem = cls(matrix, complex_, **kwargs)
        collection = [T for T in problem.complex.faces if len(T) >= 2]
        return cls(matrix, problem.complex, collection, **kwargs)

    @classmethod
    def minimal(
            cls, matrix: CoxeterMatrix, complex_: Optional[SimplicialComplex] = None, **kwargs
    ) -> 'BlowupProblem':
        """Create problem with R consisting of simplices of L with connected diagram."""
        problem = cls(matrix, complex_, **kwargs)
        collection = [
            T for T in problem.complex.faces
            if len(T) >= 2 and nx.is_connected(matrix.diagram(T))
        ]
        return cls(matrix, problem.complex, collection, **kwargs)

    @staticmethod
    def boundary_complex(
            matrix: CoxeterMatrix, max_generators: int = MAX_GENERATORS
    ) -> SimplicialComplex:
        """Build complex of all proper nonempty spherical subsets."""
        everything = frozenset(matrix.gens)
        faces = [T for T in spherical_poset(matrix, max_generators) if T and T != everything]
        return SimplicialComplex(matrix.gens, faces)

    def __repr__(self) -> str:
        return (
            f'BlowupProblem({len(self.matrix)} generators, {len(self.complex.faces)} simplices, '
            f'|R| = {len(self.collection)})'
        )

    def subset_key(self, subset: Iterable[Label]) -> tuple:
        """Return sort key ordering subsets by size, then by generator positions."""
        positions = sorted(map(self.matrix.index, subset))
        return len(positions), tuple(positions)

    def in_p(self, subset: Subset) -> bool:
        """Check whether subset is empty or a simplex of L."""
        return not subset or subset in self.complex.faces

    @cached_property
    def s_sharp(self) -> tuple[Subset, ...]:
        """Return S_#: singletons in generator order, then R by size and position."""
        singletons = [frozenset((s,)) for s in self.matrix.gens]
        return tuple(singletons + sorted(self.collection, key=self.subset_key))

    def below(self, subset: Subset) -> list[Subset]:
        """Return members of R contained in subset."""
        return sorted((U for U in self.collection if U <= subset), key=self.subset_key)


@dataclass(frozen=True)
class RDecomposition:
    """Blow-up factors and fixed part of a simplex."""

    subset: Subset
    fixed: Subset
    factors: tuple[Subset, ...]
    completely_disjoint: bool

    @property
    def parts(self) -> frozenset:
        """Return factors together with nonempty fixed part."""
        parts = set(self.factors)
        if self.fixed:
            parts.add(self.fixed)
        return frozenset(parts)


def _completely_disjoint(matrix: CoxeterMatrix, parts: Sequence[Subset]) -> bool:
    for first, second in itertools.combinations(parts, 2):
        if first & second:
            return False
        if any(matrix.m(s, t) != 2 for s in first for t in second):
            return False
    return True


def r_decomposition(p: BlowupProblem, subset: Iterable[Label]) -> RDecomposition:
    """
    Split a simplex into R-maximals and R-fixed part.

    :param p:
        blow-up problem
    :param subset:
        simplex T of L
    :return:
        decomposition with flag whether its parts are pairwise completely disjoint
    """
    subset = p.matrix.subset(subset)
    if not p.in_p(subset):
        raise ValueError(f"{format_label(subset)} is not a simplex of L.")
    below = p.below(subset)
    factors = tuple(U for U in below if not any(U < V for V in below))
    covered = frozenset().union(*factors)
    fixed = subset - covered
    parts = list(factors) + ([fixed] if fixed else [])
    return RDecomposition(subset, fixed, factors, _completely_disjoint(p.matrix, parts))


@lru_cache(maxsize=4096)
def _longest_element_permutation(matrix: CoxeterMatrix, subset: Subset) -> Permutation:
    coxeter_type = classify_subdiagram(matrix, subset)
    return longest_element_symmetry(coxeter_type)[0]


def conjugate_subset(matrix: CoxeterMatrix, subset: Iterable[Label], part: Iterable[Label]) -> Subset:
    """
    Conjugate part of a spherical subset by its longest element.

    :param matrix:
        Coxeter matrix
    :param subset:
        spherical subset T
    :param part:
        subset T' of T
    :return:
        w_T T' w_T
    """
    subset = matrix.subset(subset)
    part = matrix.subset(part)
    if not part <= subset:
        raise ValueError(f"{format_label(part)} is not contained in {format_label(subset)}.")
    permutation = _longest_element_permutation(matrix, subset)
    return frozenset(permutation(s) for s in part)


@dataclass(frozen=True)
class AdmissibilityVerdict:
    """Admissibility of R with the first violation found."""

    admissible: bool
    fully_admissible: bool
    violation: Optional[str] = None
    witness: Optional[Subset] = None


def check_admissible(p: BlowupProblem) -> AdmissibilityVerdict:
    """
    Check that R is admissible and whether it is fully admissible.

    :param p:
        blow-up problem
    :return:
        verdict
    """
    violation = None
    witness = None
    for T in sorted(p.collection, key=p.subset_key):
        below = set(p.below(T))
        if {conjugate_subset(p.matrix, T, U) for U in below} != below:
            violation, witness = 'R below T is not stable under j_T', T
            break
    if violation is None:
        for T in sorted(p.complex.faces, key=p.subset_key):
            if not r_decomposition(p, T).completely_disjoint:
                violation, witness = 'R-decomposition is not a decomposition', T
                break
    fully = all(
        frozenset((s, t)) in p.collection
        for s, t, m in p.matrix.edges() if m != INFINITY and p.in_p(frozenset((s, t)))
    )
    if violation is not None:
        logger.debug("Collection is inadmissible: %s at %s.", violation, format_label(witness))
    return AdmissibilityVerdict(violation is None, violation is None and fully, violation, witness)


def pair_case(p: BlowupProblem, first: Subset, second: Subset) -> Optional[int]:
    """
    Classify pair of elements of S_# by the nested-pair criterion.

    :param p:
        blow-up problem with admissible R
    :param first:
        element of S_#
    :param second:
        another element of S_#
    :return:
        1 for singletons spanning an edge of L outside R, 2 when the pair is
        the R-decomposition of its union, 3 for a strict inclusion, `None`
        if the pair is not nested
    """
    if first == second:
        return None
    if first < second or second < first:
        return 3
    union = first | second
    if len(first) == 1 and len(second) == 1:
        s, t = tuple(first)[0], tuple(second)[0]
        if p.matrix.m(s, t) != INFINITY and p.in_p(union) and union not in p.collection:
            return 1
        return None
    if first & second or not p.in_p(union):
        return None
    decomposition = r_decomposition(p, union)
    if decomposition.parts == {first, second} and decomposition.completely_disjoint:
        return 2
    return None


def is_nested(p: BlowupProblem, family: Iterable[Subset]) -> bool:
    """
    Check recursively whether a family of elements of S_# is R-nested.

    :param p:
        blow-up problem with admissible R
    :param family:
        elements of S_#
    :return:
        `True` if the family is R-nested
    """
    family = frozenset(family)
    if len(family) <= 1:
        return True
    support = frozenset().union(*family)
    if not p.in_p(support):
        return False
    in_r = [X for X in family if X in p.collection]
    maximal = {X for X in in_r if not any(X < Y for Y in in_r)}
    if maximal != set(r_decomposition(p, support).factors):
        return False
    return all(is_nested(p, [X for X in family if X < T]) for T in maximal)


@dataclass(frozen=True, eq=False)
class NestedComplex:
    """Vertex set S_#, complex L_# of R-nested sets and matrix M_#."""

    problem: BlowupProblem
    s_sharp: tuple[Subset, ...]
    complex: SimplicialComplex
    m_sharp: CoxeterMatrix
    cases: dict = field(repr=False)

    @property
    def faces(self) -> frozenset:
        return self.complex.faces


def nested_complex(p: BlowupProblem) -> NestedComplex:
    """
    Build the complex of R-nested sets.

    :param p:
        blow-up problem
    :return:
        nested complex
    """
    verdict = check_admissible(p)
    if not verdict.admissible:
        raise InadmissibleError(
            f"Collection is not admissible: {verdict.violation} at "
            f"{format_label(verdict.witness)}.",
            verdict.witness
        )
    s_sharp = p.s_sharp
    cases = {}
    graph = nx.Graph()
    graph.add_nodes_from(s_sharp)
    for first, second in itertools.combinations(s_sharp, 2):
        case = pair_case(p, first, second)
        if case is not None:
            cases[frozenset((first, second))] = case
            graph.add_edge(first, second)

    faces = [clique for clique in nx.enumerate_all_cliques(graph) if is_nested(p, clique)]
    complex_ = SimplicialComplex(s_sharp, faces)

    entries = {}
    for first, second in itertools.combinations(s_sharp, 2):
        case = cases.get(frozenset((first, second)))
        if case is None:
            entries[(first, second)] = INFINITY
        elif case == 1:
            entries[(first, second)] = p.matrix.m(next(iter(first)), next(iter(second)))
    m_sharp = CoxeterMatrix(s_sharp, entries)
    logger.debug(
        "Nested complex: %d vertices, %d edges, %d faces.",
        len(s_sharp), len(cases), len(complex_.faces)
    )
    return NestedComplex(p, s_sharp, complex_, m_sharp, cases)


def gluing_involution(p: BlowupProblem, nested: NestedComplex, subset: Subset) -> Permutation:
    """
    Compute gluing involution j_T on the star of T in L_#.

    :param p:
        blow-up problem
    :param nested:
        its nested complex
    :param subset:
        element T of S_#
    :return:
        permutation of the star vertex set sending T' inside T to w_T T' w_T
        and fixing the others
    """
    subset = frozenset(subset)
    if subset not in nested.m_sharp.gens:
        raise ValueError(f"{format_label(subset)} is not an element of S_#.")
    star = nested.complex.star_vertices(subset)
    mapping = {
        U: conjugate_subset(p.matrix, subset, U) if U <= subset else U
        for U in star
    }
    involution = Permutation(mapping)
    for face in nested.faces:
        if subset in face and frozenset(involution(U) for U in face) not in nested.faces:
            raise ValueError(
                f"j_{format_label(subset)} does not preserve nested sets: {format_label(face)}"
            )
    return involution


def natural_gluing_system(p: BlowupProblem, nested: Optional[NestedComplex] = None) -> GluingSystem:
    """
    Assemble homogeneous gluing system of a blow-up ordered by inclusion.

    :param p:
        blow-up problem
    :param nested:
        precomputed nested complex
    :return:
        gluing system on S_#
    """
    nested = nested or nested_complex(p)
    involutions = {T: gluing_involution(p, nested, T).as_dict() for T in nested.s_sharp}
    order = [(U, T) for U in nested.s_sharp for T in nested.s_sharp if U < T]
    return GluingSystem(nested.m_sharp, nested.complex, involutions, order=order)


@dataclass(frozen=True)
class ConditionFVerdict:
    """Outcome of Condition (F) with offending decomposition."""

    holds: bool
    witness: Optional[Subset] = None
    blocks: tuple = ()


def _component_blocks(p: BlowupProblem, components: list[Subset]) -> list[Subset]:
    s_sharp = set(p.s_sharp)
    blocks = []
    for size in range(1, len(components) + 1):
        for chosen in itertools.combinations(components, size):
            union = frozenset().union(*chosen)
            if union in s_sharp:
                blocks.append(union)
    return blocks


def condition_f(
        p: BlowupProblem, max_generators: int = MAX_CONDITION_F_GENERATORS
) -> ConditionFVerdict:
    """
    Check Condition (F) for every nonempty spherical subset.

    Decompositions are searched as exact covers of the diagram components
    of T by blocks from S_# whose pairwise unions lie in P - R.

    :param p:
        fully admissible blow-up problem
    :param max_generators:
        maximum allowed number of generators
    :return:
        verdict with a subset T violating the condition and its decomposition
    """
    if len(p.matrix) > max_generators:
        raise CapExceededError(
            f"Condition (F) search over {len(p.matrix)} generators exceeds cap {max_generators}."
        )
    verdict = check_admissible(p)
    if not verdict.fully_admissible:
        raise InadmissibleError("Condition (F) requires a fully admissible collection.")

    def good_pair(first: Subset, second: Subset) -> bool:
        union = first | second
        return p.in_p(union) and union not in p.collection

    def search(remaining: frozenset, chosen: list, blocks: list) -> Optional[list]:
        if not remaining:
            return list(chosen) if len(chosen) >= 3 else None
        pivot = min(remaining, key=lambda c: min(map(p.matrix.index, c)))
        for block in blocks:
            if pivot <= block and block <= frozenset().union(*remaining):
                if any(not good_pair(block, other) for other in chosen):
                    continue
                parts = frozenset(c for c in remaining if c <= block)
                chosen.append(block)
                found = search(remaining - parts, chosen, blocks)
                chosen.pop()
                if found:
                    return found
        return None

    for T in sorted(p.spherical, key=p.subset_key):
        if not T:
            continue
        components = [frozenset(c) for c in nx.connected_components(p.matrix.diagram(T))]
        if len(components) < 3 or (p.in_p(T) and T not in p.collection):
            continue
        blocks = _component_blocks(p, components)
        found = search(frozenset(components), [], blocks)
        if found:
            ordered = tuple(sorted(found, key=p.subset_key))
            return ConditionFVerdict(False, T, ordered)
    return ConditionFVerdict(True)


@dataclass(frozen=True)
class FramingReport:
    """Verdicts of Conditions (M1), (M2), (E) and (H)."""

    m1: ConditionVerdict
    m2: ConditionVerdict
    e: ConditionVerdict
    h: ConditionVerdict
    rigid: Optional[bool] = None
    extensions: dict = field(default_factory=dict, repr=False)


def _is_automorphism(g: GluingSystem, permutation: Permutation) -> bool:
    mapping = permutation.as_dict()
    if not g.complex.maps_faces_to_faces(mapping):
        return False
    return all(
        g.matrix.m(u, v) == g.matrix.m(mapping[u], mapping[v])
        for u, v in itertools.combinations(g.vertices, 2)
    )


def _find_extensions(
        g: GluingSystem, max_vertices: int, max_automorphisms: int
) -> tuple[dict, Optional[Vertex], bool]:
    automorphisms = automorphism_group(
        g.complex, preserve=g.matrix,
        max_vertices=max_vertices, max_automorphisms=max_automorphisms
    )
    extensions = {}
    missing = None
    for v in g.vertices:
        star = g.star(v)
        candidates = [a for a in automorphisms if all(a(x) == g.apply(v, x) for x in star)]
        if not candidates:
            missing = v
            break
        extensions[v] = candidates[0]
    rigid = all(
        a.is_identity()
        for a in automorphisms
        for v in g.vertices
        if all(a(x) == x for x in g.star(v))
    )
    return extensions, missing, rigid


def check_trivial_holonomy(g: GluingSystem) -> ConditionVerdict:
    """
    Check Condition (M2): gluing maps compose to identity around every 2-cell.

    :param g:
        homogeneous gluing system
    :return:
        verdict with (u, v, word, holonomy) for the first nontrivial loop
    """
    for u, v in g.adjacent_pairs():
        try:
            word = derived_sequence(g, u, v).word
            loop = holonomy(g, word, cell_domain(g, u, v))
        except ValueError as e:
            return ConditionVerdict(False, (u, v), str(e))
        if not loop.is_identity():
            return ConditionVerdict(False, (u, v, word, loop), 'nontrivial holonomy')
    return ConditionVerdict(True)


def framing_conditions(
        g: GluingSystem,
        extensions: Optional[dict] = None,
        max_vertices: int = MAX_COMPLEX_VERTICES,
        max_automorphisms: int = MAX_AUTOMORPHISMS
) -> FramingReport:
    """
    Check Conditions (M1), (M2), (E) and (H) of a gluing system.

    :param g:
        homogeneous gluing system
    :param extensions:
        candidate extensions of gluing maps to automorphisms of (V, M, L);
        they are searched among all automorphisms if omitted
    :param max_vertices:
        maximum number of vertices for automorphism search
    :param max_automorphisms:
        maximum number of automorphisms for automorphism search
    :return:
        report
    """
    if not g.is_homogeneous():
        raise ValueError("Framing conditions are defined for homogeneous gluing systems.")
    m1 = check_matrix_preserved(g, include_center=True)
    m2 = check_trivial_holonomy(g)

    rigid = None
    if extensions is None:
        extensions, missing, rigid = _find_extensions(g, max_vertices, max_automorphisms)
    else:
        extensions = dict(extensions)
        missing = None
        for v in g.vertices:
            candidate = extensions.get(v)
            if (
                    candidate is None
                    or not _is_automorphism(g, candidate)
                    or any(candidate(x) != g.apply(v, x) for x in g.star(v))
            ):
                missing = v
                break
    if missing is not None:
        e = ConditionVerdict(False, missing, 'gluing map has no extension')
        h = ConditionVerdict(False, None, 'requires Condition (E)')
        return FramingReport(m1, m2, e, h, rigid, {})
    e = ConditionVerdict(True)

    h = ConditionVerdict(True)
    for v in g.vertices:
        if extensions[g.bar(v)] * extensions[v] != Permutation.identity(g.vertices):
            h = ConditionVerdict(False, (v,), 'extension is not an involution')
            break
    else:
        for u, v in g.adjacent_pairs():
            word = derived_sequence(g, u, v).word
            product = Permutation.identity(g.vertices)
            for x in word:
                product = extensions[x] * product
            if not product.is_identity():
                h = ConditionVerdict(False, (u, v, word, product), 'holonomy of extensions')
                break
    return FramingReport(m1, m2, e, h, rigid, extensions)


@dataclass(frozen=True)
class Presentation:
    """Generators and relator words, optionally with images in a Coxeter group."""

    gens: tuple
    relators: tuple[tuple, ...]
    images: Optional[dict] = None
    verified: Optional[bool] = None

    def __post_init__(self):
        known = set(self.gens)
        for relator in self.relators:
            unknown = set(relator) - known
            if unknown:
                raise ValueError(f"Relator uses unknown generators: {sorted(map(str, unknown))}")

    def as_dict(self) -> dict:
        """Export presentation as JSON-ready dictionary."""
        result = {
            'gens': [format_label(x) for x in self.gens],
            'relators': [[format_label(x) for x in relator] for relator in self.relators],
        }
        if self.images is not None:
            result['images'] = {
                format_label(x): [format_label(s) for s in word]
                for x, word in self.images.items()
            }
        return result


def mock_presentation(
        p: BlowupProblem,
        nested: Optional[NestedComplex] = None,
        max_order: int = MAX_GROUP_ORDER
) -> Presentation:
    """
    Write presentation of the mock reflection group of a blow-up.

    :param p:
        admissible blow-up problem
    :param nested:
        precomputed nested complex
    :param max_order:
        maximum order of W used to verify relators
    :return:
        presentation with generator images w_T in W
    """
    nested = nested or nested_complex(p)
    relators = [(T, T) for T in nested.s_sharp]
    for first, second in itertools.combinations(nested.s_sharp, 2):
        case = nested.cases.get(frozenset((first, second)))
        if case == 1:
            m = nested.m_sharp.m(first, second)
            relators.append((first, second) * m)
        elif case == 2:
            relators.append((first, second) * 2)
        elif case == 3:
            big, small = (first, second) if second < first else (second, first)
            image = conjugate_subset(p.matrix, big, small)
            relators.append((big, small, big, image))

    images = {}
    for T in nested.s_sharp:
        model = enumerate_finite_group(p.matrix.restrict(T), max_order)
        images[T] = model.longest_word()

    verified = None
    if frozenset(p.matrix.gens) in p.spherical:
        try:
            model = enumerate_finite_group(p.matrix, max_order)
        except CapExceededError:
            logger.warning("Group is too large to verify relators of mock presentation.")
        else:
            for relator in relators:
                word = [s for T in relator for s in images[T]]
                if not model.is_identity(word):
                    raise RuntimeError(
                        f"Relator {[format_label(T) for T in relator]} is nontrivial in W."
                    )
            verified = True
    return Presentation(tuple(nested.s_sharp), tuple(relators), images, verified)
