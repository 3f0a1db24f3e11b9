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

"""
Tools to load verification suites and run them.
"""

import logging
import re
from dataclasses import dataclass, field
from pathlib import Path

import yaml

from src import logging_helper
from src.arena import Arena, get_arena
from src.checks.check_tools import generate_checks
from src.checks.checks import CheckContext
from src.config_builder import Settings
from src.suites.suite import Stage


@dataclass
class SuiteResult:
    name: str
    seed: int
    passed: bool
    results: list[str] = field(default_factory=list)


def parse_suite_configs(
    config: Path | dict, logger: logging.Logger
) -> tuple[str, int | None, list[dict]]:
    """
    Parse a suite file.

    Args:
        config (Path | dict): Path to the suite file or a dictionary holding
            the suite.
        logger (logging.Logger): Logger for debugging.

    Returns:
        str: Description of the suite.
        int | None: Seed for the random samples, if the suite fixes one.
        list[dict]: One dictionary per stage with keys:
            - name (str): Name of the stage.
            - description (str): Description of the stage.
            - checks (list[callable]): The checks to run.

    Raises:
        ValueError: If the suite file is missing or malformed.
    """
    logger.debug("Parsing suite: %s", config)

    if isinstance(config, Path):
        if not config.exists():
            raise ValueError(f"Suite file does not exist: {config}")
        try:
            with open(config, "r", encoding="utf-8") as f:
                raw_configs = yaml.safe_load(f)
        except yaml.YAMLError as e:
            raise ValueError(f"Invalid YAML in {config}: {e}") from e
    else:
        raw_configs = config

    if not isinstance(raw_configs, dict) or not isinstance(
        raw_configs.get("stages"), dict
    ):
        raise ValueError("A suite needs a 'stages' mapping")

    description: str = raw_configs.get("description", "")
    seed = raw_configs.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ValueError(f"Suite seed must be an integer, got {seed!r}")

    configs = []
    for stage_name, stage in raw_configs["stages"].items():
        stage = stage or {}
        configs.append(
            {
                "name": stage_name,
                "description": stage.get("description", ""),
                "checks": generate_checks(stage, logger),
            }
        )
    return description, seed, configs


def generate_stages(
    config: Path | dict, suite_name: str, logger: logging.Logger
) -> tuple[int | None, list[Stage]]:
    """
    Build the stages of a suite.

    Returns:
        int | None: The suite's seed.
        list[Stage]: Stage objects in file order.

    Raises:
        ValueError: If the suite file is invalid.
    """
    try:
        description, seed, stage_configs = parse_suite_configs(config, logger)
    except ValueError as e:
        raise ValueError(f"Invalid suite {suite_name}: {e}") from e

    logger.debug("Suite %s: %s", suite_name, description)
    stages = [
        Stage(
            name=stage_config["name"],
            description=stage_config["description"],
            checks=stage_config["checks"],
            logger=logger,
        )
        for stage_config in stage_configs
    ]
    return seed, stages


def strip_ansi(text: str) -> str:
    """
    Remove the colouring from results, marking coloured lines with a text
    prefix instead.
    """
    ansi_escape = re.compile(r"\x1B\[[0-?]*[ -/]*[@-~]")

    color_prefixes = {
        "31": "[Failed]",
        "32": "[Passed]",
        "33": "[Mixed]",
    }

    formatted_text = ""
    for line in text.splitlines():
        prefix = ""

        # Detect color codes and replace with text prefixes to the line
        for code, label in color_prefixes.items():
            if f"\x1b[{code}m" in line:
                prefix = label + " "
                break

        clean_line = ansi_escape.sub("", line)
        formatted_text += f"{prefix}{clean_line}\n"

    return formatted_text


def run_suite(
    config: Path | dict,
    suite_name: str,
    settings: Settings | None = None,
    arena: Arena | None = None,
    detailed: bool = False,
    logger: logging.Logger = logging_helper.get_logger(),
) -> SuiteResult:
    """
    Run every stage of a suite and report the results.

    Args:
        config (Path | dict): Path to the suite file or the suite itself.
        suite_name (str): Name used in the reports.
        settings (Settings | None): Limits for the checks.
        arena (Arena | None): The arena to work in.
        detailed (bool): List every check in the reports.
        logger (logging.Logger): Logger for the suite.

    Returns:
        SuiteResult: Whether every check passed, with one report per stage.

    Raises:
        ValueError: If the suite file is invalid.
    """
    seed, stages = generate_stages(config, suite_name, logger)
    context = CheckContext(arena or get_arena(), settings or Settings(), seed)
    logger.info("Running suite %s with seed %d", suite_name, context.seed)

    file_logger = logging_helper.get_file_logger()
    file_logger.info("Suite %s seed: %d", suite_name, context.seed)

    result = SuiteResult(suite_name, context.seed, True)
    for stage in stages:
        passed = stage.run(context)
        result.passed = result.passed and passed
        report = stage.validator.get_results_str(stage.name, detailed)
        result.results.append(report)
        logger.info(" %s %s", f"Suite.{suite_name}", report)
        file_logger.info("%s %s", f"Suite.{suite_name}", strip_ansi(report))

    logger.info("Suite completed: %s", suite_name)
    return result
