"""
Render results of a command to JSON and DOT.

Author: Tilings developers
"""


import json
import math
from fractions import Fraction
from typing import Any, Optional

import networkx as nx
import numpy as np

from tilings.constants import SCHEMA_VERSION
from tilings.labels import format_label, label_key
from tilings.permutation import Permutation


EDGE_COLORS = (
    'black', 'red', 'blue', 'darkgreen', 'orange', 'purple', 'brown', 'magenta',
    'cyan', 'gold', 'gray', 'navy'
)


def to_jsonable(value: Any) -> Any:
    """
    Convert results into values that `json` can encode.

    :param value:
        number, label, permutation, array or container
    :return:
        equivalent value made of dicts, lists, strings and numbers;
        infinity becomes "inf" and fractions become "p/q"
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (float, np.floating)):
        return 'inf' if math.isinf(value) and value > 0 else float(value)
    if isinstance(value, np.ndarray):
        return [to_jsonable(x) for x in value.tolist()]
    if isinstance(value, Permutation):
        return {format_label(x): format_label(y) for x, y in value.items()}
    if isinstance(value, dict):
        return {
            key if isinstance(key, str) else format_label(key): to_jsonable(item)
            for key, item in value.items()
        }
    if isinstance(value, (frozenset, set)):
        return format_label(frozenset(value))
    if isinstance(value, (list, tuple)):
        return [to_jsonable(x) for x in value]
    return str(value)


class Report:
    """Outcome of a command with verdicts, certificates and an optional graph."""

    def __init__(
            self,
            kind: str,
            inputs: dict,
            results: dict,
            verdicts: Optional[dict[str, Optional[bool]]] = None,
            certificates: Optional[dict] = None,
            warnings: Optional[list[str]] = None,
            graph: Optional[nx.Graph] = None
    ):
        """
        Initialize an instance.

        :param kind:
            name of the command that produced the report
        :param inputs:
            echo of the problem document
        :param results:
            computed values
        :param verdicts:
            named conditions with `True`, `False` or `None` for unknown
        :param certificates:
            evidence such as witnesses, group orders and matrices
        :param warnings:
            messages about float mode and caps
        :param graph:
            graph exported by `render_to_dot`
        :return:
            freshly created instance of `Report` class
        """
        self.kind = kind
        self.inputs = inputs
        self.results = results
        self.verdicts = verdicts or {}
        self.certificates = certificates or {}
        self.warnings = warnings or []
        self.graph = graph

    def as_dict(self) -> dict:
        """Return JSON-ready content."""
        return {
            'schema': SCHEMA_VERSION,
            'kind': self.kind,
            'inputs': to_jsonable(self.inputs),
            'results': to_jsonable(self.results),
            'verdicts': to_jsonable(self.verdicts),
            'certificates': to_jsonable(self.certificates),
            'warnings': list(self.warnings),
        }

    def render_to_json(self, output_path: Optional[str] = None) -> str:
        """
        Render report to JSON text.

        :param output_path:
            path to output file; nothing is written if it is `None`
        :return:
            JSON text
        """
        text = json.dumps(self.as_dict(), indent=2, sort_keys=True) + '\n'
        if output_path is not None:
            with open(output_path, 'w') as output_file:
                output_file.write(text)
        return text

    def render_to_dot(self, output_path: Optional[str] = None) -> str:
        """
        Render graph of the report in DOT format.

        Vertices are written in label order; edges carrying a `generator`
        attribute are coloured by generator.

        :param output_path:
            path to output file; nothing is written if it is `None`
        :return:
            DOT text
        """
        if self.graph is None:
            raise ValueError(f"Report of `{self.kind}` has no graph to render.")
        nodes = sorted(self.graph.nodes, key=label_key)
        names = {node: format_label(node) for node in nodes}
        generators = sorted(
            {data['generator'] for _, _, data in self.graph.edges(data=True) if 'generator' in data},
            key=label_key
        )
        colors = {x: EDGE_COLORS[i % len(EDGE_COLORS)] for i, x in enumerate(generators)}

        lines = [f'graph "{self.kind}" {{']
        for node in nodes:
            label = names[node]
            word = self.graph.nodes[node].get('word')
            if word is not None:
                label = ' '.join(format_label(x) for x in word) or '1'
            lines.append(f'\t"{names[node]}" [label="{label}"];')
        edges = []
        for u, v, data in self.graph.edges(data=True):
            u, v = sorted((u, v), key=label_key)
            edges.append((label_key(u), label_key(v), u, v, data))
        for _, _, u, v, data in sorted(edges, key=lambda e: (e[0], e[1])):
            if 'generator' in data:
                x = data['generator']
                attributes = f' [color={colors[x]}, label="{format_label(x)}"]'
            else:
                attributes = ''
            lines.append(f'\t"{names[u]}" -- "{names[v]}"{attributes};')
        lines.append('}')
        text = '\n'.join(lines) + '\n'
        if output_path is not None:
            with open(output_path, 'w') as output_file:
                output_file.write(text)
        return text
