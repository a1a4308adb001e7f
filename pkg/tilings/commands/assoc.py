"""
Classify framed tilings by associahedra.

Author: Tilings developers
"""


from tilings.documents import ProblemDocument
from tilings.errors import CapExceededError
from tilings.labels import format_label
from tilings.polytopes import (
    classify_family, diagonal_model, max_symmetry_test, symm_presentation, tiling_gluing_data
)
from tilings.report import Report
from tilings.settings import Settings
from .command import Command


class ClassifyAssoc(Command):
    """Compute t-invariants and isomorphism classes of a family of Schläfli symbols."""

    name = 'classify-assoc'
    accepts = ('classify-assoc',)

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            document with `symbols` of one length and optional flags
            `max_symmetry` and `symmetric_presentation`
        :param settings:
            caps and tolerances
        :return:
            report whose graph is the crossing graph of diagonals
        """
        payload = document.payload
        symbols = [tuple(int(m) for m in symbol) for symbol in payload['symbols']]
        if not symbols:
            raise ValueError("Family of symbols is empty.")
        lengths = {len(symbol) for symbol in symbols}
        if len(lengths) != 1:
            raise ValueError("All symbols of a family must have the same length.")
        n = lengths.pop()
        model = diagonal_model(n)

        classification = classify_family(symbols)
        results = classification.as_dict(model)
        results['class_count'] = len(classification.classes)
        verdicts = {}
        warnings = []
        if classification.flagged:
            warnings.append(
                f'{len(classification.flagged)} pairs pass the necessary test only'
            )

        if payload.get('max_symmetry', False):
            symmetry = {}
            for symbol in symbols:
                verdict = max_symmetry_test(tiling_gluing_data(symbol))
                symmetry[format_label(symbol)] = {'holds': verdict.holds, 'witness': verdict.witness}
                verdicts[f'max_symmetry {format_label(symbol)}'] = verdict.holds
            results['max_symmetry'] = symmetry

        if payload.get('symmetric_presentation', False):
            try:
                presentation = symm_presentation(n, settings.max_symmetric_presentation_dim)
            except CapExceededError as e:
                warnings.append(str(e))
            else:
                results['symmetric_presentation'] = presentation.as_dict()
                verdicts['psi_kills_relators'] = presentation.verified

        return Report(
            self.name, document.to_dict(), results, verdicts, warnings=warnings,
            graph=model.crossing_graph()
        )
