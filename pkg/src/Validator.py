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
Validator object
"""

import logging

from termcolor import colored

from src import logging_helper


class MissingCheckError(Exception):
    """
    Exception raised when a suite names a check that does not exist.
    """

    def __init__(self, name: str) -> None:
        super().__init__(f"No check named: {name}")
        self.name = name


class Validator:
    """
    Validator class that runs the checks of one stage and keeps their
    results.
    """

    def __init__(
        self,
        checks: list,
        logger: logging.Logger = logging_helper.get_logger(),
    ) -> None:
        self.__checks = checks
        self.__passed_checks: list[str] = []
        self.__failed_checks: dict[str, str] = {}
        self.__logger = logger

    @property
    def passed_checks(self) -> list[str]:
        return list(self.__passed_checks)

    @property
    def failed_checks(self) -> dict[str, str]:
        """
        Get the checks that failed.

        Returns:
            dict: The reason of each failure, keyed by check.
        """
        return dict(self.__failed_checks)

    @property
    def total(self) -> int:
        return len(self.__checks)

    @property
    def all_passed(self) -> bool:
        return len(self.__passed_checks) == len(self.__checks)

    def get_results_str(self, name: str, detailed: bool = False) -> str:
        """
        Get a string representation of the validation results.

        Args:
            name (str): The stage the results belong to.
            detailed (bool, optional): Whether to list passed checks and
                failure reasons. Defaults to False.

        Returns:
            str: A string representation of the validation results.
        """
        header = "Validation Results\n"
        output = "\n"
        output += "-" * (len(header) - 1) + "\n"
        output += header
        output += "-" * (len(header) - 1) + "\n"

        total = self.total
        matched = len(self.__passed_checks)

        key_color = "green"
        if self.__failed_checks:
            key_color = "red" if matched == 0 else "yellow"

        if detailed:
            output += f"{colored(name, key_color)}:\n"
            for check in self.__passed_checks:
                output += f"{' ' * 4}{colored(check, 'green')}\n"
            for check, reason in self.__failed_checks.items():
                output += f"{' ' * 4}{colored(check, 'red')}: {reason}\n"
        else:
            output += f"{colored(name, key_color)}: {colored(f'{matched}/{total}', key_color)}\n"
            for check in self.__failed_checks:
                output += f"{' ' * 4}{colored(check, 'red')}\n"

        output += "-" * (len(header) - 1) + "\n"
        output += f"Matched: {colored(matched, 'green') if matched > 0 else matched} / {total} "
        output += f"(Failures: {colored(total - matched, 'red') if total - matched > 0 else total - matched})\n"
        output += "-" * (len(header) - 1) + "\n"
        return output

    def validate(self, check, context) -> bool:
        """
        Run one check and record its result.

        Args:
            check (callable): A check built by build_check.
            context (CheckContext): The state shared by the suite's checks.

        Returns:
            bool: True if the check passed.
        """
        friendly_str = getattr(check, "friendly_str", repr(check))
        self.__logger.debug("Running check: %s", friendly_str)

        try:
            result = bool(check(context))
            reason = "check returned False"
        except MissingCheckError as e:
            self.__logger.warning("%s", e)
            result, reason = False, str(e)
        except Exception as e:
            # CheckFailure and errors raised by the engine both fail the check
            self.__logger.debug("Check %s raised: %s", friendly_str, e)
            result, reason = False, f"{type(e).__name__}: {e}"

        if result:
            self.__passed_checks.append(friendly_str)
        else:
            self.__failed_checks[friendly_str] = reason

        self.__logger.debug(
            "Check result: %s",
            colored("PASSED" if result else "FAILED", "green" if result else "red"),
        )
        return result

    def validate_all(self, context) -> bool:
        """
        Run every check of the stage.

        Returns:
            bool: True if all checks passed.
        """
        for check in self.__checks:
            self.validate(check, context)
        return self.all_passed
