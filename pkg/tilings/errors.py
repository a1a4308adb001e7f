"""
Define exceptions raised by the package.

Author: Tilings developers
"""


class CapExceededError(RuntimeError):
    """Raised when a computation would grow beyond a configured cap."""


class InadmissibleError(ValueError):
    """Raised when a blow-up collection is not (fully) admissible but must be."""

    def __init__(self, message: str, violation: object = None):
        """
        Initialize an instance.

        :param message:
            human-readable description of the failure
        :param violation:
            offending subset or pair, if known
        :return:
            freshly created instance of `InadmissibleError` class
        """
        super().__init__(message)
        self.violation = violation
