"""
Evaluate Minkowski reflections of right-angled hyperbolic polyhedra.

Author: Tilings developers
"""


from fractions import Fraction

import numpy as np

from tilings.documents import ProblemDocument
from tilings.linrep import minkowski_fixtures, minkowski_form, reflection_matrix
from tilings.report import Report
from tilings.settings import Settings
from .command import Command


def _largest_denominator(matrix: np.ndarray) -> int:
    return max(Fraction(x).denominator for x in matrix.flatten())


class Minkowski(Command):
    """Report norms and integrality of reflections in face normals."""

    name = 'minkowski'
    accepts = ('minkowski',)

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            document with optional `fixtures` (names to evaluate) and
            `vectors` (extra named vectors)
        :param settings:
            caps and tolerances
        :return:
            report with norms, reflection matrices and integrality verdicts
        """
        payload = document.payload
        fixtures = minkowski_fixtures()
        names = payload.get('fixtures', sorted(fixtures))
        unknown = set(names) - set(fixtures)
        if unknown:
            raise ValueError(f"Unknown fixtures: {', '.join(sorted(unknown))}")
        selected = {name: fixtures[name] for name in names}
        if 'vectors' in payload:
            selected['custom'] = {
                key: tuple(Fraction(str(x)) for x in value)
                for key, value in payload['vectors'].items()
            }

        results = {}
        verdicts = {}
        for name, vectors in selected.items():
            entries = {}
            for key, v in vectors.items():
                matrix = reflection_matrix(v)
                denominator = _largest_denominator(matrix)
                entries[key] = {
                    'vector': [Fraction(x) for x in v],
                    'norm': minkowski_form(v, v),
                    'largest_denominator': denominator,
                    'reflection': matrix,
                }
            results[name] = entries
            verdicts[f'integral {name}'] = all(
                entry['largest_denominator'] == 1 for entry in entries.values()
            )

        if 'double_pyramid' in selected:
            u1 = fixtures['pyramid']['u1']
            matrix = reflection_matrix(u1)
            double = fixtures['double_pyramid']
            verdicts['double_pyramid_images'] = all(
                tuple(matrix @ np.array([Fraction(x) for x in double[f'v{i}']], dtype=object))
                == tuple(double[f"v{i}'"])
                for i in (1, 2, 3)
            )
        verdicts['integral'] = all(
            value for key, value in verdicts.items() if key.startswith('integral ')
        )
        return Report(self.name, document.to_dict(), results, verdicts)
