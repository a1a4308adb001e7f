"""
Enumerate a finitely presented group by cosets.

Author: Tilings developers
"""


from tilings.documents import ProblemDocument, build_gluing_system, parse_presentation
from tilings.groups import cayley_ball, gluing_presentation, todd_coxeter
from tilings.report import Report
from tilings.settings import Settings
from .command import Command


class Enumerate(Command):
    """Run Todd-Coxeter on a presentation or on the group of a gluing system."""

    name = 'enumerate'
    accepts = ('enumerate', 'gluing-system', 'blowup')

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            document with `presentation` or with a gluing system, and
            optional `radius` of the Cayley ball to export
        :param settings:
            caps and tolerances
        :return:
            report with coset table; its graph is the Cayley ball if requested
        """
        payload = document.payload
        if 'presentation' in payload:
            presentation = parse_presentation(payload['presentation'])
        else:
            g, _ = build_gluing_system(payload, settings.max_generators)
            presentation = gluing_presentation(g)
        table = todd_coxeter(presentation, settings.max_cosets)
        results = {
            'presentation': presentation.as_dict(),
            'size': table.size if table.closed else None,
            'coset_table': table.as_dict(),
        }
        warnings = []
        if not table.closed:
            warnings.append(f'coset enumeration capped at {table.size} cosets')

        graph = None
        radius = payload.get('radius')
        if radius is not None and table.closed:
            ball = cayley_ball(presentation, int(radius), table, settings.root_rounding_digits)
            results['ball_sizes'] = list(ball.sizes)
            graph = ball.graph
        return Report(
            self.name, document.to_dict(), results, {'closed': table.closed},
            {'size': table.size, 'status': table.status}, warnings, graph
        )
