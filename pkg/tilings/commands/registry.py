"""
Map subcommand names to command classes.

Author: Tilings developers
"""


from .assoc import ClassifyAssoc
from .blowup import Blowup
from .command import Command
from .enumerate import Enumerate
from .gluing import CheckGluing
from .minkowski import Minkowski
from .permutohedron import Permutohedron
from .represent import Represent


def create_commands_registry() -> dict[str, type(Command)]:
    """
    Create registry of implemented commands.

    :return:
        mapping from subcommand name to command class
    """
    registry = {
        'blowup': Blowup,
        'check-gluing': CheckGluing,
        'classify-assoc': ClassifyAssoc,
        'enumerate': Enumerate,
        'minkowski': Minkowski,
        'permutohedron': Permutohedron,
        'represent': Represent,
    }
    return registry
