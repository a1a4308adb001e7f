"""
Blow up a Coxeter cell: nested complex, mock presentation and Conditions (F) and (M).

Author: Tilings developers
"""


import logging

from tilings.blowup import (
    check_admissible, check_trivial_holonomy, condition_f, framing_conditions,
    mock_presentation, natural_gluing_system, nested_complex
)
from tilings.complexes import flag_check
from tilings.documents import ProblemDocument, build_problem
from tilings.errors import CapExceededError
from tilings.gluing import ConditionVerdict, check_matrix_preserved
from tilings.labels import format_label
from tilings.report import Report
from tilings.settings import Settings
from .command import Command, describe_verdict


logger = logging.getLogger(__name__)


class Blowup(Command):
    """Compute S_#, M_#, L_# and the mock reflection group of a blow-up."""

    name = 'blowup'
    accepts = ('blowup',)

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            document with Coxeter matrix, optional `complex` and `collection`
        :param settings:
            caps and tolerances
        :return:
            report whose graph is the 1-skeleton of L_#
        """
        payload = document.payload
        problem = build_problem(payload, settings.max_generators)
        admissibility = check_admissible(problem)
        verdicts = {
            'admissible': admissibility.admissible,
            'fully_admissible': admissibility.fully_admissible,
        }
        certificates = {
            'admissible': {
                'holds': admissibility.admissible,
                'witness': admissibility.witness,
                'note': admissibility.violation or '',
            }
        }
        results = {'collection': sorted(problem.collection, key=problem.subset_key)}
        if not admissibility.admissible:
            return Report(self.name, document.to_dict(), results, verdicts, certificates)

        warnings = []
        nested = nested_complex(problem)
        presentation = mock_presentation(problem, nested, settings.max_group_order)
        results.update({
            's_sharp': list(nested.s_sharp),
            'm_sharp': {
                'generators': [format_label(T) for T in nested.m_sharp.gens],
                'matrix': nested.m_sharp.rows(),
            },
            'l_sharp': {
                'facets': list(nested.complex.facets),
                'face_count': len(nested.faces),
                'dimension': nested.complex.dimension,
            },
            'sizes': {'s_sharp': len(nested.s_sharp), 'l_sharp_faces': len(nested.faces)},
            'presentation': presentation.as_dict(),
        })
        verdicts['presentation_verified'] = presentation.verified

        flag = flag_check(nested.complex, nested.m_sharp)
        verdicts['metric_flag'] = flag.holds
        certificates['metric_flag'] = describe_verdict(flag)

        f = ConditionVerdict(None, note='requires full admissibility')
        if admissibility.fully_admissible:
            try:
                f_verdict = condition_f(problem, settings.max_condition_f_generators)
            except CapExceededError as e:
                warnings.append(str(e))
                f = ConditionVerdict(None, note=str(e))
            else:
                f = ConditionVerdict(f_verdict.holds, (f_verdict.witness, f_verdict.blocks))
        verdicts['F'] = f.holds
        certificates['F'] = describe_verdict(f)

        if payload.get('framing', True):
            g = natural_gluing_system(problem, nested)
            try:
                framing = framing_conditions(
                    g,
                    max_vertices=settings.max_complex_vertices,
                    max_automorphisms=settings.max_automorphisms
                )
                conditions = {'M1': framing.m1, 'M2': framing.m2, 'E': framing.e, 'H': framing.h}
                results['rigid'] = framing.rigid
            except CapExceededError as e:
                logger.warning("Automorphism search is capped: %s", e)
                warnings.append(str(e))
                unknown = ConditionVerdict(None, note=str(e))
                conditions = {
                    'M1': check_matrix_preserved(g, include_center=True),
                    'M2': check_trivial_holonomy(g),
                    'E': unknown,
                    'H': unknown,
                }
            for key, verdict in conditions.items():
                verdicts[key] = verdict.holds
                certificates[key] = describe_verdict(verdict)

        return Report(
            self.name, document.to_dict(), results, verdicts, certificates, warnings,
            nested.complex.one_skeleton()
        )
