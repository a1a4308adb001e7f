"""
Read and write declarative problem documents.

A problem document is a JSON object with fields `schema`, `kind`, an
optional `name` and kind-specific payload fields. Matrix entries are
integers or the string "inf"; subsets are arrays of generator labels.

Author: Tilings developers
"""


import json
import logging
from dataclasses import dataclass, field
from typing import Any, Hashable, Optional

from tilings.blowup import BlowupProblem, Presentation, natural_gluing_system
from tilings.complexes import SimplicialComplex
from tilings.constants import MAX_GENERATORS, SCHEMA_VERSION
from tilings.coxeter import CoxeterMatrix, spherical_poset
from tilings.gluing import GluingSystem
from tilings.labels import format_label


logger = logging.getLogger(__name__)

KINDS = (
    'blowup', 'gluing-system', 'classify-assoc', 'permutohedron', 'represent',
    'enumerate', 'minkowski'
)
REQUIRED_FIELDS = {
    'blowup': (),
    'gluing-system': (),
    'classify-assoc': ('symbols',),
    'permutohedron': (),
    'represent': (),
    'enumerate': (),
    'minkowski': (),
}
MATRIX_KINDS = ('blowup', 'gluing-system', 'permutohedron', 'represent')


@dataclass(frozen=True)
class ProblemDocument:
    """Validated problem document."""

    kind: str
    payload: dict = field(default_factory=dict)
    name: Optional[str] = None
    schema: int = SCHEMA_VERSION

    @classmethod
    def from_dict(cls, raw: Any) -> 'ProblemDocument':
        """
        Validate raw JSON object and wrap it.

        :param raw:
            decoded JSON value
        :return:
            document
        """
        if not isinstance(raw, dict):
            raise ValueError("Problem document must be a JSON object.")
        schema = raw.get('schema')
        if schema != SCHEMA_VERSION:
            raise ValueError(f"Unsupported schema {schema!r}; expected {SCHEMA_VERSION}.")
        kind = raw.get('kind')
        if kind not in KINDS:
            raise ValueError(f"Unknown kind {kind!r}; expected one of {', '.join(KINDS)}.")
        payload = {k: v for k, v in raw.items() if k not in ('schema', 'kind', 'name')}
        missing = [key for key in REQUIRED_FIELDS[kind] if key not in payload]
        if missing:
            raise ValueError(f"Document of kind {kind} misses fields: {', '.join(missing)}")
        document = cls(kind, payload, raw.get('name'), schema)
        if kind in MATRIX_KINDS or 'generators' in payload or 'symbol' in payload:
            parse_matrix(payload)
        return document

    @classmethod
    def load(cls, path: str) -> 'ProblemDocument':
        """Read document from JSON file."""
        with open(path) as input_file:
            raw = json.load(input_file)
        logger.debug("Loaded %s document from %s.", raw.get('kind'), path)
        return cls.from_dict(raw)

    def to_dict(self) -> dict:
        """Serialize document into JSON-ready dictionary."""
        result = {'schema': self.schema, 'kind': self.kind}
        if self.name is not None:
            result['name'] = self.name
        result.update(self.payload)
        return result

    def dump(self, path: str) -> None:
        """Write document to JSON file."""
        with open(path, 'w') as output_file:
            json.dump(self.to_dict(), output_file, indent=2)
            output_file.write('\n')


def _lookup(matrix: CoxeterMatrix) -> dict[str, Hashable]:
    return {format_label(s): s for s in matrix.gens}


def resolve_label(matrix: CoxeterMatrix, label: Any) -> Hashable:
    """
    Find generator given by its JSON spelling.

    :param matrix:
        Coxeter matrix whose generators are searched
    :param label:
        label as written in a document
    :return:
        generator
    """
    if label in matrix.gens:
        return label
    try:
        return _lookup(matrix)[str(label)]
    except KeyError:
        raise ValueError(f"Unknown generator: {label!r}") from None


def parse_subsets(matrix: CoxeterMatrix, raw: Any) -> list[frozenset]:
    """Convert arrays of labels into subsets of generators."""
    if not isinstance(raw, list):
        raise ValueError("Subsets must be given as a list of label arrays.")
    return [frozenset(resolve_label(matrix, x) for x in subset) for subset in raw]


def parse_matrix(payload: dict) -> CoxeterMatrix:
    """
    Build Coxeter matrix from `symbol` or from `generators` and `matrix`.

    :param payload:
        document payload
    :return:
        Coxeter matrix
    """
    if 'symbol' in payload:
        return CoxeterMatrix.from_schlafli([int(m) for m in payload['symbol']])
    try:
        gens = payload['generators']
        rows = payload['matrix']
    except KeyError as e:
        raise ValueError(f"Missing field {e.args[0]!r}: give `symbol` or `generators` and `matrix`.")
    if len(set(map(str, gens))) != len(gens):
        raise ValueError("Generator labels must be unique.")
    if len(rows) != len(gens) or any(len(row) != len(gens) for row in rows):
        raise ValueError("Matrix must be square with one row per generator.")
    return CoxeterMatrix.from_rows(gens, rows)


def parse_complex(
        matrix: CoxeterMatrix, raw: Any, max_generators: int = MAX_GENERATORS
) -> Optional[SimplicialComplex]:
    """
    Build complex L from its document form.

    :param matrix:
        Coxeter matrix
    :param raw:
        `None` for all spherical subsets, "boundary" for proper spherical
        subsets, or a list of facets
    :param max_generators:
        maximum allowed number of generators
    :return:
        complex, or `None` for the default one
    """
    if raw is None:
        return None
    if raw == 'boundary':
        return BlowupProblem.boundary_complex(matrix, max_generators)
    return SimplicialComplex(matrix.gens, parse_subsets(matrix, raw))


def build_problem(payload: dict, max_generators: int = MAX_GENERATORS) -> BlowupProblem:
    """
    Build blow-up problem from `complex` and `collection` fields.

    :param payload:
        document payload; `collection` is "minimal", "maximal" or a list of subsets
    :param max_generators:
        maximum allowed number of generators
    :return:
        blow-up problem
    """
    matrix = parse_matrix(payload)
    complex_ = parse_complex(matrix, payload.get('complex'), max_generators)
    collection = payload.get('collection', [])
    if collection == 'maximal':
        return BlowupProblem.maximal(matrix, complex_, max_generators=max_generators)
    if collection == 'minimal':
        return BlowupProblem.minimal(matrix, complex_, max_generators=max_generators)
    return BlowupProblem(matrix, complex_, parse_subsets(matrix, collection), max_generators)


def build_gluing_system(
        payload: dict, max_generators: int = MAX_GENERATORS
) -> tuple[GluingSystem, Optional[BlowupProblem]]:
    """
    Build gluing system given explicitly or as the natural system of a blow-up.

    :param payload:
        document payload; explicit systems carry `involutions` and
        optionally `bar` and `order`, other payloads describe a blow-up
    :param max_generators:
        maximum allowed number of generators
    :return:
        gluing system and the blow-up problem it comes from, if any
    """
    if 'involutions' not in payload:
        problem = build_problem(payload, max_generators)
        return natural_gluing_system(problem), problem

    matrix = parse_matrix(payload)
    complex_ = parse_complex(matrix, payload.get('complex'), max_generators)
    if complex_ is None:
        faces = [T for T in spherical_poset(matrix, max_generators) if T]
        complex_ = SimplicialComplex(matrix.gens, faces)
    involutions = {}
    for v, mapping in payload['involutions'].items():
        involutions[resolve_label(matrix, v)] = {
            resolve_label(matrix, x): resolve_label(matrix, y) for x, y in mapping.items()
        }
    bar = {
        resolve_label(matrix, v): resolve_label(matrix, w)
        for v, w in payload.get('bar', {}).items()
    }
    order = payload.get('order')
    if order is not None:
        order = [(resolve_label(matrix, u), resolve_label(matrix, v)) for u, v in order]
    return GluingSystem(matrix, complex_, involutions, bar, order), None


def parse_presentation(raw: dict) -> Presentation:
    """Build presentation from `gens` and `relators` arrays."""
    try:
        gens = tuple(raw['gens'])
        relators = tuple(tuple(relator) for relator in raw['relators'])
    except (KeyError, TypeError):
        raise ValueError("Presentation needs `gens` and `relators` arrays.") from None
    if len(set(gens)) != len(gens):
        raise ValueError("Generator labels must be unique.")
    return Presentation(gens, relators)
