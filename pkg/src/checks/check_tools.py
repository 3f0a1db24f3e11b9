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
Tools to build checks from names and parameters.
"""

import logging
from collections.abc import Callable

from src import logging_helper
from src.checks import checks
from src.Validator import MissingCheckError


def build_check(
    name: str, params: dict | None, logger: logging.Logger
) -> Callable[[checks.CheckContext], bool]:
    """
    Build a check function that can be run against a check context.

    Args:
        name (str): The name of the check.
        params (dict | None): The parameters for the check.
        logger (logging.Logger): Logger for debugging.

    Returns:
        Callable[[CheckContext], bool]: A function that takes a check context
            and returns True if the check passes. Unknown names give a
            function that raises MissingCheckError.
    """
    known_checks = checks.check_methods()
    normalized_name = name.lower()
    check_params = dict(params or {})

    logger.debug("Normalized check name: %s", normalized_name)

    if normalized_name in known_checks:
        func = known_checks[normalized_name]
        method = lambda context: func(
            context, logger=logging_helper.get_logger("checks"), **check_params
        )
    else:

        def method(context):
            raise MissingCheckError(name)

    method.check_params = check_params
    if check_params:
        method.friendly_str = f"{normalized_name}: {', '.join(f'{k}={v}' for k, v in check_params.items())}"
    else:
        method.friendly_str = normalized_name
    return method


def generate_checks(stage: dict, logger: logging.Logger) -> list[Callable]:
    """
    Build the checks listed under a stage's verify key.

    Returns:
        list[Callable]: One check function per entry, in file order.
    """
    built = []
    for entry in stage.get("verify", []) or []:
        if isinstance(entry, str):
            entry = {entry: {}}
        for name, params in entry.items():
            built.append(build_check(name, params, logger))
            logger.debug("Added check %s", name)
    return built
