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

"""cli.py
Command line front end for the game engine.
Results are written to stdout, diagnostics to stderr.
"""

import argparse
import sys
from pathlib import Path

from src import logging_helper
from src.arena import MalformedReferenceError, get_arena
from src.canonical import canonicalize
from src.census import (
    BooleanLattice,
    InfeasibleError,
    build_poset,
    check_component_isomorphisms,
    check_generation,
    classify_day2,
    count_antichains,
    day3_bound,
    games_born_by,
)
from src.config_builder import Settings, SettingsError, resolve_settings
from src.notation.export_tools import export_dot, export_json
from src.notation.parser import GameSyntaxError, parse_game
from src.notation.printer import print_game
from src.order import ContractError, compare
from src.outcomes import sum_outcome
from src.quotient import bounded_quotient
from src.suites.suite_tools import run_suite
from src.witnesses import WitnessVerificationError, witness_a, witness_b

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_PARSE = 2
EXIT_INFEASIBLE = 3
EXIT_PRECONDITION = 4
EXIT_INTERNAL = 5
EXIT_VERIFY_FAILED = 6

logger = logging_helper.get_logger()


def split_expressions(text: str) -> list[str]:
    """Split a comma separated list of expressions at top-level commas."""
    parts, depth, current = [], 0, ""
    for char in text:
        if char in "{(":
            depth += 1
        elif char in "})":
            depth -= 1
        if char == "," and depth == 0:
            parts.append(current)
            current = ""
        else:
            current += char
    parts.append(current)
    return [p.strip() for p in parts if p.strip()]


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as file:
        file.write(text)
    logger.debug("Wrote %s", path)


def cmd_outcome(args: argparse.Namespace, settings: Settings) -> int:
    game = parse_game(args.expr)
    print(sum_outcome((game,), normal=args.normal).value)
    return EXIT_OK


def cmd_compare(args: argparse.Namespace, settings: Settings) -> int:
    print(compare(parse_game(args.lhs), parse_game(args.rhs), normal=args.normal))
    return EXIT_OK


def cmd_canonize(args: argparse.Namespace, settings: Settings) -> int:
    form, trace = canonicalize(parse_game(args.expr))
    print(print_game(form))
    if args.trace:
        for step in trace:
            print(
                f"{step.kind.value} {print_game(step.target)} "
                f"via {print_game(step.via)}"
            )
    return EXIT_OK


def cmd_adjoint(args: argparse.Namespace, settings: Settings) -> int:
    print(print_game(get_arena().adjoint(parse_game(args.expr))))
    return EXIT_OK


def cmd_witness(args: argparse.Namespace, settings: Settings) -> int:
    g, h = parse_game(args.lhs), parse_game(args.rhs)
    for witness in (witness_a(g, h), witness_b(g, h)):
        facts = ", ".join(
            f"{print_game(game)} + T {bound.value}"
            for game, bound in witness.certified
        )
        print(f"{witness.kind.value}: {print_game(witness.context)}  ({facts})")
    return EXIT_OK


def cmd_census(args: argparse.Namespace, settings: Settings) -> int:
    census = games_born_by(args.day, day_cap=settings.census_day_cap)
    for day, games in enumerate(census.per_day):
        print(f"day {day}: {len(games)} games")
    if args.json:
        _write(args.json, export_json(census))
    return EXIT_OK


def cmd_poset(args: argparse.Namespace, settings: Settings) -> int:
    census = games_born_by(args.day, day_cap=settings.census_day_cap)
    with logging_helper.timed(f"Day {args.day} poset", logger):
        poset = build_poset(census.per_day[args.day])
    print(f"{len(poset)} elements, {len(poset.pairs())} related pairs")
    if args.dot:
        _write(args.dot, export_dot(poset, name=f"day{args.day}"))

    if not args.check_structure:
        return EXIT_OK
    if args.day != 2:
        raise ContractError("--check-structure needs --day 2")

    partition = classify_day2(census)
    passed = True
    for report in check_component_isomorphisms(partition, poset):
        status = "pass" if report.passed else "FAIL"
        passed = passed and report.passed
        print(
            f"{report.component}: {status} "
            f"({report.size} elements against {report.target_size})"
        )
    generation = check_generation(partition, poset)
    passed = passed and generation.passed
    print(
        f"generation: {'pass' if generation.passed else 'FAIL'} "
        f"({generation.closure_pairs} of {generation.relation_pairs} pairs)"
    )
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


def cmd_antichains(args: argparse.Namespace, settings: Settings) -> int:
    if args.b4:
        poset = BooleanLattice(4)
    else:
        census = games_born_by(2, day_cap=settings.census_day_cap)
        partition = classify_day2(census)
        members = partition.plus if args.component == "plus" else partition.minus
        poset = build_poset(members)
    print(count_antichains(poset, cap=settings.antichain_cap))
    return EXIT_OK


def cmd_bound(args: argparse.Namespace, settings: Settings) -> int:
    bound = day3_bound()
    print(f"M = {bound.m}")
    print(f"M^2 = {bound.m_squared}")
    print(f"floor(log2(M^2)) = {bound.log2_floor}")
    return EXIT_OK


def cmd_quotient(args: argparse.Namespace, settings: Settings) -> int:
    generators = [parse_game(e) for e in split_expressions(args.generators)]
    bound = args.bound if args.bound is not None else settings.quotient_bound
    if bound < 1:
        raise ContractError(f"--bound must be at least 1, got {bound}")
    presentation = bounded_quotient(
        generators, bound, element_cap=settings.quotient_element_cap
    )
    print(f"{len(presentation.classes)} classes ({presentation.caveat})")
    for index, members in enumerate(presentation.classes):
        print(
            f"class {index}: {presentation.outcome_of_class[index].value}, "
            f"{len(members)} elements, least {min(members)}"
        )
    if args.json:
        _write(args.json, export_json(presentation))
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    logging_helper.setup_file_logging(args.output)

    path = Path(args.path)
    if path.is_dir():
        suite_files = sorted(path.glob("*.yml"))
    elif path.is_file():
        suite_files = [path]
    else:
        raise FileNotFoundError(f"Suite path {path} does not exist.")

    passed = True
    try:
        for suite_file in suite_files:
            result = run_suite(
                suite_file,
                suite_file.stem,
                settings=settings,
                detailed=bool(args.verbose),
            )
            passed = passed and result.passed
    finally:
        logging_helper.close_file_logging()

    print(f"{len(suite_files)} suites {'passed' if passed else 'failed'}")
    return EXIT_OK if passed else EXIT_VERIFY_FAILED


COMMANDS = {
    "outcome": cmd_outcome,
    "compare": cmd_compare,
    "canonize": cmd_canonize,
    "adjoint": cmd_adjoint,
    "witness": cmd_witness,
    "census": cmd_census,
    "poset": cmd_poset,
    "antichains": cmd_antichains,
    "bound": cmd_bound,
    "quotient": cmd_quotient,
    "verify": cmd_verify,
}


def parse_args(args=None, prog=__package__) -> argparse.Namespace:
    """
    Parses command line arguments.

    Args:
        args (list, optional): List of command line arguments. Defaults to None.
        prog (str, optional): Program name. Defaults to the package name.

    Returns:
        argparse.Namespace: Parsed command line arguments.
    """
    parser = argparse.ArgumentParser(
        prog=prog,
        description="Explore partizan games under misère play.",
    )
    parser.add_argument(
        "-c",
        "--config",
        dest="config_file",
        type=str,
        help="Path to a settings file (.yml or .j2).",
        default=None,
    )
    parser.add_argument(
        "--debug",
        "-x",
        dest="debug",
        action="count",
        help="Enable debug logging.",
    )
    parser.add_argument(
        "--verbose",
        "-v",
        dest="verbose",
        action="count",
        help="Enable verbose output.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    outcome = commands.add_parser("outcome", help="Print the outcome class.")
    outcome.add_argument("expr")
    outcome.add_argument("--normal", action="store_true")

    compare_parser = commands.add_parser("compare", help="Compare two games.")
    compare_parser.add_argument("lhs")
    compare_parser.add_argument("rhs")
    compare_parser.add_argument("--normal", action="store_true")

    canonize = commands.add_parser("canonize", help="Print the canonical form.")
    canonize.add_argument("expr")
    canonize.add_argument("--trace", action="store_true")

    adjoint = commands.add_parser("adjoint", help="Print the adjoint.")
    adjoint.add_argument("expr")

    witness = commands.add_parser(
        "witness", help="Print contexts showing G >= H fails."
    )
    witness.add_argument("lhs")
    witness.add_argument("rhs")

    census = commands.add_parser("census", help="Count the games born by a day.")
    census.add_argument("--day", type=int, required=True)
    census.add_argument("--json", default=None, help="Write the census as JSON.")

    poset = commands.add_parser("poset", help="Build the order on a day.")
    poset.add_argument("--day", type=int, default=2)
    poset.add_argument("--dot", default=None, help="Write the Hasse diagram.")
    poset.add_argument("--check-structure", action="store_true")

    antichains = commands.add_parser("antichains", help="Count antichains.")
    target = antichains.add_mutually_exclusive_group(required=True)
    target.add_argument("--b4", action="store_true")
    target.add_argument("--component", choices=["plus", "minus"])

    bound = commands.add_parser("bound", help="Print the day-3 bound.")
    bound.add_argument("--day3", action="store_true", required=True)

    quotient = commands.add_parser("quotient", help="Explore a bounded quotient.")
    quotient.add_argument(
        "--generators", required=True, help="Comma separated expressions."
    )
    quotient.add_argument("--bound", type=int, default=None)
    quotient.add_argument("--json", default=None)

    verify = commands.add_parser("verify", help="Run verification suites.")
    verify.add_argument(
        "path", nargs="?", default=str(Path(Path.cwd(), "tests"))
    )
    verify.add_argument(
        "-o",
        "--output",
        dest="output",
        type=str,
        help="Path to output log file.",
        default=str(Path(Path.cwd(), "misere_games.log")),
    )
    return parser.parse_args(args)


def run(argv: list[str] | None = None) -> int:
    """
    Run one command.

    Args:
        argv (list[str] | None): The arguments, without the program name.

    Returns:
        int: The exit status.
    """
    parsed_args = parse_args(argv)
    logging_helper.setup_logging()

    if parsed_args.debug:
        logging_helper.add_debug_logging()
        logger.debug("Debug mode enabled. Debug level: %d", parsed_args.debug)

    try:
        settings = resolve_settings(parsed_args.config_file)
        return COMMANDS[parsed_args.command](parsed_args, settings)
    except GameSyntaxError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return EXIT_PARSE
    except InfeasibleError as e:
        print(f"infeasible: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except ContractError as e:
        print(f"precondition error: {e}", file=sys.stderr)
        return EXIT_PRECONDITION
    except WitnessVerificationError as e:
        print(f"internal error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (MalformedReferenceError, SettingsError, OSError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR


def interface() -> None:
    """
    Interface function to parse arguments and run the command.
    """
    sys.exit(run())


if __name__ == "__main__":
    interface()
