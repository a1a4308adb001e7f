"""
Order and format generator labels of mixed kinds.

Labels are strings, integers, tuples (diagonals) or frozensets
(elements of S_#). Sorting them needs a key that never compares
values of different kinds directly.

Author: Tilings developers
"""


from typing import Hashable


def label_key(label: Hashable) -> tuple:
    """
    Return sort key that totally orders labels of all supported kinds.

    :param label:
        string, integer, tuple or frozenset of labels
    :return:
        key suitable for `sorted`
    """
    if isinstance(label, bool):
        return (0, int(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, (frozenset, set)):
        return (2, len(label), tuple(sorted(label_key(x) for x in label)))
    if isinstance(label, tuple):
        return (3, len(label), tuple(label_key(x) for x in label))
    raise ValueError(f"Unsupported label: {label!r}")


def sort_labels(labels) -> list:
    """Sort labels with `label_key`."""
    return sorted(labels, key=label_key)


def format_label(label: Hashable) -> str:
    """
    Render label as a short string for reports and DOT files.

    :param label:
        string, integer, tuple or frozenset of labels
    :return:
        text form; frozensets become `{a,b}`, tuples become `(0,2)`
    """
    if isinstance(label, str):
        return label
    if isinstance(label, (frozenset, set)):
        return '{' + ','.join(format_label(x) for x in sort_labels(label)) + '}'
    if isinstance(label, tuple):
        return '(' + ','.join(format_label(x) for x in label) + ')'
    return str(label)
