"""
Handle abstract simplicial complexes, their automorphisms and flag conditions.

Author: Tilings developers
"""


import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Hashable, Iterable, Mapping, Optional

import networkx as nx
from networkx.algorithms.isomorphism import (
    GraphMatcher, categorical_edge_match, categorical_node_match
)

from tilings.constants import MAX_AUTOMORPHISMS, MAX_COMPLEX_VERTICES
from tilings.coxeter import CoxeterMatrix, is_spherical
from tilings.errors import CapExceededError
from tilings.labels import format_label, label_key, sort_labels
from tilings.permutation import Permutation


logger = logging.getLogger(__name__)

Vertex = Hashable
Face = frozenset


class SimplicialComplex:
    """Downward closed family of finite vertex sets."""

    def __init__(self, vertices: Iterable[Vertex], faces: Iterable[Iterable[Vertex]] = ()):
        """
        Initialize an instance.

        :param vertices:
            vertex labels; each of them becomes a 0-dimensional face
        :param faces:
            generating faces; all their nonempty subsets are added
        :return:
            freshly created instance of `SimplicialComplex` class
        """
        self.vertices = tuple(dict.fromkeys(vertices))
        vertex_set = set(self.vertices)
        closure = {frozenset((v,)) for v in self.vertices}
        for face in faces:
            face = frozenset(face)
            if not face <= vertex_set:
                unknown = sort_labels(face - vertex_set)
                raise ValueError(f"Face uses unknown vertices: {unknown}")
            if face in closure:
                continue
            items = sorted(face, key=label_key)
            for size in range(2, len(items) + 1):
                closure.update(frozenset(c) for c in itertools.combinations(items, size))
        self.faces = frozenset(closure)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.faces == other.faces

    def __hash__(self) -> int:
        return hash(self.faces)

    def __len__(self) -> int:
        return len(self.vertices)

    def __repr__(self) -> str:
        return f'SimplicialComplex({len(self.vertices)} vertices, {len(self.faces)} faces)'

    def has_face(self, face: Iterable[Vertex]) -> bool:
        """Check whether vertex set spans a face."""
        return frozenset(face) in self.faces

    @cached_property
    def facets(self) -> list[Face]:
        """Return maximal faces sorted by size and labels."""
        by_vertex = {v: [] for v in self.vertices}
        for face in self.faces:
            for v in face:
                by_vertex[v].append(face)
        facets = [
            face for face in self.faces
            if not any(
                len(other) > len(face) and face < other
                for other in by_vertex[next(iter(face))]
            )
        ]
        return sorted(facets, key=lambda f: (-len(f), sorted(map(label_key, f))))

    @property
    def dimension(self) -> int:
        return max((len(face) for face in self.faces), default=0) - 1

    def edges(self) -> list[tuple[Vertex, Vertex]]:
        """Return 1-dimensional faces as sorted pairs."""
        pairs = [tuple(sorted(face, key=label_key)) for face in self.faces if len(face) == 2]
        return sorted(pairs, key=lambda pair: (label_key(pair[0]), label_key(pair[1])))

    @cached_property
    def _neighbors(self) -> dict[Vertex, frozenset]:
        neighbors = {v: set() for v in self.vertices}
        for u, v in self.edges():
            neighbors[u].add(v)
            neighbors[v].add(u)
        return {v: frozenset(others) for v, others in neighbors.items()}

    def neighbors(self, v: Vertex) -> frozenset:
        """Return vertices joined with `v` by an edge."""
        self._check_vertex(v)
        return self._neighbors[v]

    def _check_vertex(self, v: Vertex) -> None:
        if v not in self._neighbors:
            raise ValueError(f"Unknown vertex: {format_label(v)}")

    def star_vertices(self, v: Vertex) -> frozenset:
        """Return vertex set V_v of the star of `v`, `v` itself included."""
        return self.neighbors(v) | {v}

    def star(self, v: Vertex) -> 'SimplicialComplex':
        """
        Build closed star of a vertex.

        :param v:
            vertex
        :return:
            complex of faces containing `v` and their subfaces;
            its vertex list is the star vertex set V_v
        """
        self._check_vertex(v)
        faces = [face for face in self.faces if v in face]
        vertices = [u for u in self.vertices if u == v or u in self._neighbors[v]]
        return SimplicialComplex(vertices, faces)

    def link(self, v: Vertex) -> 'SimplicialComplex':
        """Build link of a vertex."""
        self._check_vertex(v)
        faces = [face - {v} for face in self.faces if v in face and len(face) > 1]
        vertices = [u for u in self.vertices if u in self._neighbors[v]]
        return SimplicialComplex(vertices, faces)

    def one_skeleton(self) -> nx.Graph:
        """Return graph of vertices and edges."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph

    def relabel(self, mapping: Mapping[Vertex, Vertex]) -> 'SimplicialComplex':
        """Rename vertices with a bijection."""
        if len(set(mapping[v] for v in self.vertices)) != len(self.vertices):
            raise ValueError("Relabelling is not injective.")
        return SimplicialComplex(
            [mapping[v] for v in self.vertices],
            [[mapping[v] for v in face] for face in self.faces]
        )

    def maps_faces_to_faces(self, mapping: Mapping[Vertex, Vertex]) -> bool:
        """Check that a vertex bijection sends every facet onto a face."""
        return all(frozenset(mapping[v] for v in face) in self.faces for face in self.facets)


def automorphism_group(
        complex_: SimplicialComplex,
        preserve: Optional[CoxeterMatrix] = None,
        max_vertices: int = MAX_COMPLEX_VERTICES,
        max_automorphisms: int = MAX_AUTOMORPHISMS
) -> list[Permutation]:
    """
    Find all automorphisms of a complex, optionally preserving a Coxeter matrix.

    Candidates come from VF2 matching of 1-skeletons with vertices
    coloured by the number of faces through them; each candidate is then
    checked on all faces and, if requested, on all matrix entries.

    :param complex_:
        simplicial complex
    :param preserve:
        Coxeter matrix on the vertex set whose entries must be kept
    :param max_vertices:
        maximum allowed number of vertices
    :param max_automorphisms:
        maximum allowed number of automorphisms
    :return:
        automorphisms sorted by their images, identity first
    """
    if len(complex_) > max_vertices:
        raise CapExceededError(
            f"Complex with {len(complex_)} vertices exceeds the cap of {max_vertices}."
        )
    graph = complex_.one_skeleton()
    for v in complex_.vertices:
        profile = [0] * (complex_.dimension + 1)
        for face in complex_.faces:
            if v in face:
                profile[len(face) - 1] += 1
        graph.nodes[v]['profile'] = tuple(profile)
    edge_match = None
    if preserve is not None:
        for u, v in graph.edges:
            graph.edges[u, v]['m'] = preserve.m(u, v)
        edge_match = categorical_edge_match('m', None)
    matcher = GraphMatcher(
        graph, graph,
        node_match=categorical_node_match('profile', None),
        edge_match=edge_match
    )
    pairs = list(itertools.combinations(complex_.vertices, 2))
    automorphisms = []
    for mapping in matcher.isomorphisms_iter():
        if not complex_.maps_faces_to_faces(mapping):
            continue
        if preserve is not None and any(
                preserve.m(u, v) != preserve.m(mapping[u], mapping[v]) for u, v in pairs
        ):
            continue
        automorphisms.append(Permutation(mapping))
        if len(automorphisms) > max_automorphisms:
            raise CapExceededError(
                f"More than {max_automorphisms} automorphisms; raise the cap to continue."
            )
    order = [v for v in complex_.vertices]
    automorphisms.sort(key=lambda p: tuple(label_key(p(v)) for v in order))
    automorphisms.sort(key=lambda p: not p.is_identity())
    logger.debug("Found %d automorphisms of %r.", len(automorphisms), complex_)
    return automorphisms


@dataclass(frozen=True)
class FlagVerdict:
    """Outcome of flag test with the first missing clique."""

    holds: bool
    witness: Optional[frozenset] = None


def flag_check(
        complex_: SimplicialComplex, matrix: Optional[CoxeterMatrix] = None
) -> FlagVerdict:
    """
    Check flag or metric flag condition.

    :param complex_:
        simplicial complex
    :param matrix:
        Coxeter matrix on the vertex set; if given, only cliques spanning
        spherical subsets must be faces
    :return:
        verdict with a smallest offending clique as witness
    """
    graph = complex_.one_skeleton()
    for clique in nx.enumerate_all_cliques(graph):
        if len(clique) < 3:
            continue
        clique = frozenset(clique)
        if clique in complex_.faces:
            continue
        if matrix is None or is_spherical(matrix, clique):
            return FlagVerdict(False, clique)
    return FlagVerdict(True)
