import logging
from pathlib import Path

import pytest

from src.config_builder import (
    CONFIG_ENV_VAR,
    Settings,
    SettingsError,
    load_settings,
    resolve_settings,
)

SHIPPED_TEMPLATE = Path(__file__).parents[1] / "config" / "settings.yml.j2"


def test_defaults():
    settings = Settings()
    assert settings.census_day_cap == 2
    assert settings.antichain_cap == 24
    assert settings.quotient_element_cap == 4096
    assert settings.quotient_bound == 12
    assert settings.day3_sample_size == 500
    assert settings.seed is None


def test_load_yaml(tmp_path):
    path = tmp_path / "settings.yml"
    path.write_text("quotient_bound: 6\nseed: 42\n", encoding="utf-8")
    settings = load_settings(path)
    assert settings.quotient_bound == 6
    assert settings.seed == 42
    assert settings.census_day_cap == 2


def test_load_template(tmp_path, monkeypatch):
    monkeypatch.setenv("SAMPLE_SIZE", "50")
    path = tmp_path / "settings.yml.j2"
    path.write_text(
        "day3_sample_size: {{ os.getenv('SAMPLE_SIZE') }}\n", encoding="utf-8"
    )
    assert load_settings(path).day3_sample_size == 50


def test_shipped_template(monkeypatch):
    for name in ("QUOTIENT_ELEMENT_CAP", "DAY3_SAMPLE_SIZE", "MISERE_GAMES_SEED"):
        monkeypatch.delenv(name, raising=False)
    assert load_settings(SHIPPED_TEMPLATE) == Settings()

    monkeypatch.setenv("DAY3_SAMPLE_SIZE", "40")
    monkeypatch.setenv("MISERE_GAMES_SEED", "7")
    settings = load_settings(SHIPPED_TEMPLATE)
    assert settings.day3_sample_size == 40
    assert settings.seed == 7


def test_unknown_keys_are_ignored(tmp_path, caplog):
    path = tmp_path / "settings.yml"
    path.write_text("colour: blue\nantichain_cap: 20\n", encoding="utf-8")
    with caplog.at_level(logging.WARNING):
        settings = load_settings(path)
    assert settings.antichain_cap == 20
    assert "colour" in caplog.text


@pytest.mark.parametrize(
    "content",
    ["quotient_bound: -1\n", "quotient_bound: many\n", "- 1\n- 2\n", "seed: true\n"],
)
def test_invalid_settings(tmp_path, content):
    path = tmp_path / "settings.yml"
    path.write_text(content, encoding="utf-8")
    with pytest.raises(SettingsError):
        load_settings(path)


def test_missing_and_unsupported_files(tmp_path):
    with pytest.raises(SettingsError):
        load_settings(tmp_path / "missing.yml")
    path = tmp_path / "settings.toml"
    path.write_text("", encoding="utf-8")
    with pytest.raises(SettingsError):
        load_settings(path)


def test_resolve_settings(tmp_path, monkeypatch):
    monkeypatch.delenv(CONFIG_ENV_VAR, raising=False)
    assert resolve_settings() == Settings()

    path = tmp_path / "settings.yml"
    path.write_text("census_day_cap: 1\n", encoding="utf-8")
    monkeypatch.setenv(CONFIG_ENV_VAR, str(path))
    assert resolve_settings().census_day_cap == 1
    assert resolve_settings(path).census_day_cap == 1
