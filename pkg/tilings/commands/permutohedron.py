"""
Check maximal blow-ups tiled by permutohedra.

Author: Tilings developers
"""


from tilings.documents import ProblemDocument, parse_matrix
from tilings.polytopes import chain_complex, permutohedron_checks
from tilings.report import Report
from tilings.settings import Settings
from .command import Command, describe_verdict


class Permutohedron(Command):
    """Compare L_# with the chain complex and decide the covering conditions."""

    name = 'permutohedron'
    accepts = ('permutohedron',)

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        matrix = parse_matrix(document.payload)
        mode = document.payload.get('mode', 'spherical')
        report = permutohedron_checks(
            matrix, mode,
            max_vertices=settings.max_complex_vertices,
            max_automorphisms=settings.max_automorphisms
        )
        framing = report.framing
        conditions = {'M1': framing.m1, 'M2': framing.m2, 'E': framing.e, 'H': framing.h}
        verdicts = {key: verdict.holds for key, verdict in conditions.items()}
        verdicts.update({
            'chains_match': report.chains_match,
            'rigid': report.rigid,
            'covering': report.covering,
        })
        results = {
            'n': report.n,
            'mode': report.mode,
            'vertex_count': report.vertex_count,
            'automorphism_order': report.automorphism_order,
            'conclusion': report.conclusion,
        }
        certificates = {key: describe_verdict(verdict) for key, verdict in conditions.items()}
        warnings = []
        if report.automorphism_order is None:
            warnings.append('automorphism search skipped: complex exceeds the vertex cap')
        return Report(
            self.name, document.to_dict(), results, verdicts, certificates, warnings,
            chain_complex(matrix.gens).one_skeleton()
        )
