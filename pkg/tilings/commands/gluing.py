"""
Check gluing data for conditions (1)-(4), (P), (C) and (M).

Author: Tilings developers
"""


import logging

from tilings.blowup import framing_conditions
from tilings.documents import ProblemDocument, build_gluing_system
from tilings.errors import CapExceededError
from tilings.gluing import cell_domain, derived_sequence, holonomy
from tilings.groups import check_gluing_conditions
from tilings.linrep import check_order_conditions
from tilings.report import Report
from tilings.settings import Settings
from .command import Command, describe_verdict


logger = logging.getLogger(__name__)


class CheckGluing(Command):
    """Decide the conditions of a gluing system and collect holonomy witnesses."""

    name = 'check-gluing'
    accepts = ('gluing-system', 'blowup')

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            document with explicit `involutions` or with a blow-up
        :param settings:
            caps and tolerances
        :return:
            report whose graph is the 1-skeleton of L
        """
        g, _ = build_gluing_system(document.payload, settings.max_generators)
        report = check_gluing_conditions(
            g,
            max_cosets=settings.max_cosets,
            t_scan_cap=settings.t_scan_cap,
            float_tolerance=settings.float_tolerance,
            max_order=settings.max_group_order
        )
        warnings = list(report.notes)
        conditions = {'c1': report.c1, 'c2': report.c2, 'c3': report.c3, 'c4': report.c4}

        holonomies = []
        if report.c1.holds and report.c2.holds and report.c3.holds:
            for u, v in g.adjacent_pairs():
                word = derived_sequence(g, u, v).word
                loop = holonomy(g, word, cell_domain(g, u, v))
                if not loop.is_identity():
                    holonomies.append({'pair': (u, v), 'word': word, 'holonomy': loop.cycles()})

        if g.has_order and g.is_homogeneous():
            order_report = check_order_conditions(g)
            conditions.update(order_report.p)
            conditions.update(order_report.c)
        if g.is_homogeneous():
            try:
                framing = framing_conditions(
                    g,
                    max_vertices=settings.max_complex_vertices,
                    max_automorphisms=settings.max_automorphisms
                )
            except CapExceededError as e:
                logger.warning("Automorphism search is capped: %s", e)
                warnings.append(str(e))
            else:
                conditions.update({
                    'M1': framing.m1, 'M2': framing.m2, 'E': framing.e, 'H': framing.h
                })

        verdicts = {key: verdict.holds for key, verdict in conditions.items()}
        if g.has_order and g.is_homogeneous():
            verdicts['P'] = all(v for k, v in verdicts.items() if k.startswith('P('))
            verdicts['C'] = all(v for k, v in verdicts.items() if k.startswith('C('))
        certificates = {key: describe_verdict(verdict) for key, verdict in conditions.items()}
        certificates['c4_certificate'] = report.certificate
        results = {
            'vertices': list(g.vertices),
            'relation_words': [
                {'pair': pair, 'word': word} for pair, word in report.relation_words.items()
            ],
            'group_order': report.group_order,
            't': report.t,
            'holonomies': holonomies,
            'notes': list(report.notes),
        }
        return Report(
            self.name, document.to_dict(), results, verdicts, certificates, warnings,
            g.complex.one_skeleton()
        )
