"""Copyright (C) 2026 Network RADIUS SAS (legal@networkradius.com)

This software may not be redistributed in any form without the prior
written consent of Network RADIUS.

THIS SOFTWARE IS PROVIDED BY THE AUTHOR AND CONTRIBUTORS ``AS IS'' AND
ANY EXPRESS OR IMPLIED WARRANTIES, INCLUDING, BUT NOT LIMITED TO, THE
IMPLIED WARRANTIES OF MERCHANTABILITY AND FITNESS FOR A PARTICULAR PURPOSE
ARE DISCLAIMED.  IN NO EVENT SHALL THE AUTHOR OR CONTRIBUTORS BE LIABLE
FOR ANY DIRECT, INDIRECT, INCIDENTAL, SPECIAL, EXEMPLARY, OR CONSEQUENTIAL
DAMAGES (INCLUDING, BUT NOT LIMITED TO, PROCUREMENT OF SUBSTITUTE GOODS
OR SERVICES; LOSS OF USE, DATA, OR PROFITS; OR BUSINESS INTERRUPTION)
HOWEVER CAUSED AND ON ANY THEORY OF LIABILITY, WHETHER IN CONTRACT, STRICT
LIABILITY, OR TORT (INCLUDING NEGLIGENCE OR OTHERWISE) ARISING IN ANY WAY
OUT OF THE USE OF THIS SOFTWARE, EVEN IF ADVISED OF THE POSSIBILITY OF
SUCH DAMAGE."""

"""config_builder.py
Settings loader for the game engine.
Settings come from a YAML file, or from a Jinja2 template that renders to
YAML, and override the built-in limits of the enumerations.
"""

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

import jinja2
import yaml

from src import logging_helper

logger = logging_helper.get_logger()

CONFIG_ENV_VAR = "MISERE_GAMES_CONFIG"


class SettingsError(ValueError):
    """
    Exception raised when a settings file cannot be read or holds invalid
    values.
    """

    def __init__(self, message: str, path: Path | None = None) -> None:
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


@dataclass(frozen=True)
class Settings:
    """
    Limits and defaults for the enumerations.
    """

    census_day_cap: int = 2
    antichain_cap: int = 24
    quotient_element_cap: int = 4096
    quotient_bound: int = 12
    day3_sample_size: int = 500
    seed: int | None = None


def _read_config(file_path: Path) -> dict:
    # If the settings file is already rendered, just parse it
    if file_path.suffix in (".yml", ".yaml"):
        with open(file_path, "r", encoding="utf-8") as file:
            return yaml.safe_load(file) or {}

    if file_path.suffix == ".j2":
        template_loader = jinja2.FileSystemLoader(searchpath=file_path.parent)
        template_env = jinja2.Environment(loader=template_loader)
        template_env.globals.update(
            os=os,
        )
        template = template_env.get_template(file_path.name)
        try:
            rendered_config = template.render()
        except jinja2.TemplateError as e:
            raise SettingsError(f"Error rendering template: {e}", file_path) from e
        return yaml.safe_load(rendered_config) or {}

    raise SettingsError(
        "Unsupported file type. Only .yml and .j2 are supported.", file_path
    )


def load_settings(file_path: Path | str) -> Settings:
    """
    Load settings from a file, keeping the defaults for missing keys.

    Args:
        file_path (Path | str): The path to a .yml file or a .yml.j2 template.

    Returns:
        Settings: The defaults overridden by the file.

    Raises:
        SettingsError: If the file does not exist, does not parse, is not a
            mapping or holds a value of the wrong type.
    """
    file_path = Path(file_path)
    if not file_path.exists():
        raise SettingsError("Settings file does not exist.", file_path)

    try:
        config = _read_config(file_path)
    except yaml.YAMLError as e:
        raise SettingsError(f"Invalid YAML: {e}", file_path) from e

    if not isinstance(config, dict):
        raise SettingsError("Settings must be a mapping.", file_path)

    known = {f.name for f in dataclasses.fields(Settings)}
    values = {}
    for key, value in config.items():
        if key not in known:
            logger.warning("Ignoring unknown setting %s in %s", key, file_path)
            continue
        if key == "seed" and value is None:
            values[key] = None
            continue
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise SettingsError(
                f"Setting {key} must be a non-negative integer, got {value!r}",
                file_path,
            )
        values[key] = value

    logger.debug("Loaded settings from %s: %s", file_path, values)
    return dataclasses.replace(Settings(), **values)


def resolve_settings(file_path: Path | str | None = None) -> Settings:
    """
    Find the settings to use: the given file, else the file named by the
    MISERE_GAMES_CONFIG environment variable, else the defaults.
    """
    if file_path is None:
        file_path = os.getenv(CONFIG_ENV_VAR)
    if not file_path:
        return Settings()
    return load_settings(file_path)
