"""
Subcommands of the command-line interface.

Author: Tilings developers
"""


from .assoc import ClassifyAssoc
from .blowup import Blowup
from .command import Command
from .enumerate import Enumerate
from .gluing import CheckGluing
from .minkowski import Minkowski
from .permutohedron import Permutohedron
from .registry import create_commands_registry
from .represent import Represent


__all__ = [
    'Blowup',
    'CheckGluing',
    'ClassifyAssoc',
    'Command',
    'Enumerate',
    'Minkowski',
    'Permutohedron',
    'Represent',
    'create_commands_registry',
]
