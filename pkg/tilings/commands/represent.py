"""
Build the linear representation of a mock reflection group.

Author: Tilings developers
"""


from fractions import Fraction

from tilings.documents import ProblemDocument, build_gluing_system
from tilings.linrep import (
    build_representation, check_order_conditions, select_parameter, verify_representation
)
from tilings.report import Report
from tilings.settings import Settings
from .command import Command, describe_verdict


class Represent(Command):
    """Compute B_t and matrices rho_v and verify the group relations."""

    name = 'represent'
    accepts = ('represent', 'gluing-system', 'blowup')

    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """
        Run the command.

        :param document:
            gluing system with partial order; optional `t` (integer or "p/q")
            and `exact` flag
        :param settings:
            caps and tolerances
        :return:
            report with matrices and verdicts
        """
        payload = document.payload
        g, _ = build_gluing_system(payload, settings.max_generators)
        if not g.has_order:
            raise ValueError("Representation needs a partial order on generators.")
        if not g.is_homogeneous():
            raise ValueError("Representation needs a homogeneous gluing system.")
        exact = payload.get('exact')
        order_report = check_order_conditions(g)
        conditions = {**order_report.p, **order_report.c}

        warnings = []
        if 't' in payload:
            t = Fraction(str(payload['t']))
            t = int(t) if t.denominator == 1 else t
        else:
            t = select_parameter(g, settings.t_scan_cap, exact, settings.float_tolerance)
        rep = build_representation(g, t, exact, settings.float_tolerance)
        if not rep.exact:
            warnings.append('representation computed in float mode')
        verification = verify_representation(rep, g, settings.float_tolerance)
        conditions.update(verification.checks)

        verdicts = {key: verdict.holds for key, verdict in conditions.items()}
        verdicts['P'] = order_report.p_holds
        verdicts['C'] = order_report.c_holds
        verdicts['representation'] = verification.holds
        certificates = {key: describe_verdict(verdict) for key, verdict in conditions.items()}
        return Report(self.name, document.to_dict(), rep.as_dict(), verdicts, certificates, warnings)
