"""
Collect computational caps and tolerances into one configuration object.

Author: Tilings developers
"""


import dataclasses
import logging
from dataclasses import dataclass
from typing import Any, Optional

import yaml

from tilings import constants


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Settings:
    """Caps and tolerances used by commands."""

    max_generators: int = constants.MAX_GENERATORS
    max_group_order: int = constants.MAX_GROUP_ORDER
    max_complex_vertices: int = constants.MAX_COMPLEX_VERTICES
    max_automorphisms: int = constants.MAX_AUTOMORPHISMS
    max_cosets: int = constants.MAX_COSETS
    t_scan_cap: int = constants.T_SCAN_CAP
    max_condition_f_generators: int = constants.MAX_CONDITION_F_GENERATORS
    max_symmetric_presentation_dim: int = constants.MAX_SYMMETRIC_PRESENTATION_DIM
    root_rounding_digits: int = constants.ROOT_ROUNDING_DIGITS
    float_tolerance: float = constants.FLOAT_TOLERANCE

    def override(self, **kwargs: Any) -> 'Settings':
        """
        Return copy with some fields replaced.

        :param kwargs:
            new values; `None` values are ignored
        :return:
            updated settings
        """
        updates = {key: value for key, value in kwargs.items() if value is not None}
        return dataclasses.replace(self, **updates)

    def as_dict(self) -> dict[str, Any]:
        """Return settings as plain dictionary."""
        return dataclasses.asdict(self)


def load_settings(config_path: Optional[str] = None) -> Settings:
    """
    Read settings from YAML file.

    :param config_path:
        path to configuration file; defaults are used if it is `None`
    :return:
        settings
    """
    if config_path is None:
        return Settings()
    with open(config_path) as config_file:
        raw_settings = yaml.load(config_file, Loader=yaml.FullLoader) or {}
    if not isinstance(raw_settings, dict):
        raise ValueError(f"Configuration file {config_path} must contain a mapping.")
    known_fields = {field.name for field in dataclasses.fields(Settings)}
    unknown_fields = set(raw_settings) - known_fields
    if unknown_fields:
        raise ValueError(f"Unknown settings: {', '.join(sorted(unknown_fields))}")
    logger.debug("Loaded settings from %s: %s", config_path, raw_settings)
    return Settings(**raw_settings)
