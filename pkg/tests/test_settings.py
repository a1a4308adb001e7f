"""
Test `tilings.settings` module.

Author: Tilings developers
"""


import os

import pytest

from tilings.constants import MAX_COSETS
from tilings.settings import Settings, load_settings


DEFAULT_SETTINGS_PATH = os.path.join(
    os.path.dirname(__file__), os.pardir, 'docs', 'demo_configs', 'default_settings.yml'
)


def test_defaults() -> None:
    assert load_settings() == Settings()
    assert load_settings(DEFAULT_SETTINGS_PATH) == Settings()


def test_partial_file(tmp_path) -> None:
    path = tmp_path / 'settings.yml'
    path.write_text('max_cosets: 10\n')
    settings = load_settings(str(path))
    assert settings.max_cosets == 10
    assert settings.t_scan_cap == Settings().t_scan_cap


@pytest.mark.parametrize("content", ['max_cosets: 10\nunknown_cap: 3\n', '- 1\n- 2\n'])
def test_invalid_file(tmp_path, content: str) -> None:
    path = tmp_path / 'settings.yml'
    path.write_text(content)
    with pytest.raises(ValueError):
        load_settings(str(path))


def test_override() -> None:
    settings = Settings().override(max_cosets=7, t_scan_cap=None)
    assert settings.max_cosets == 7
    assert settings.t_scan_cap == Settings().t_scan_cap
    assert Settings().max_cosets == MAX_COSETS
    assert settings.as_dict()['max_cosets'] == 7
