"""
Define abstract command.

Author: Tilings developers
"""


from abc import ABC, abstractmethod
from typing import Any

from tilings.documents import ProblemDocument
from tilings.gluing import ConditionVerdict
from tilings.report import Report
from tilings.settings import Settings


class Command(ABC):
    """Abstract command turning a problem document into a report."""

    name: str = ''
    accepts: tuple[str, ...] = ()

    @abstractmethod
    def run(self, document: ProblemDocument, settings: Settings) -> Report:
        """Run the command."""
        pass

    def check_kind(self, document: ProblemDocument) -> None:
        """Reject documents of kinds the command does not read."""
        if document.kind not in self.accepts:
            raise ValueError(
                f"Command `{self.name}` does not accept documents of kind {document.kind}."
            )


def describe_verdict(verdict: Any) -> dict:
    """
    Convert verdict of a condition into a certificate entry.

    :param verdict:
        `ConditionVerdict` or any verdict with `holds` and `witness` attributes
    :return:
        dictionary with fields `holds`, `witness` and `note`
    """
    return {
        'holds': verdict.holds,
        'witness': verdict.witness,
        'note': verdict.note if isinstance(verdict, ConditionVerdict) else '',
    }
