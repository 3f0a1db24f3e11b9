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

"""Named checks that verification suites can run."""

import functools
import logging
import random

from src.arena import Arena, GameId
from src.canonical import canonicalize, is_canonical, simplify
from src.census import (
    BooleanLattice,
    Census,
    Day2Partition,
    Poset,
    build_poset,
    check_component_isomorphisms,
    check_generation,
    classify_day2,
    count_antichains,
    day3_bound,
    formal_games,
    games_born_by,
    generator_relations,
    impartial_games_born_by,
    sample_formal_games,
)
from src.census import impartial_gap as find_impartial_gap
from src.config_builder import Settings
from src.notation.parser import parse_game
from src.order import _ge, _ge_normal, compare as compare_games, ge_trivial
from src.outcomes import Outcome, outcome_ge, sum_outcome
from src.quotient import bounded_quotient, refines, verify_z_presentation
from src.witnesses import witness_a, witness_b

# All check methods return True if the check passes, False otherwise.
# They may raise CheckFailure to report what went wrong.

CHECKS_MAP = {}  # A mapping of check names to their functions.


class CheckFailure(Exception):
    """Exception raised when a check fails with a counterexample to report."""

    def __init__(self, message: str) -> None:
        super().__init__(message)
        self.message = message


class CheckContext:
    """
    Shared state for the checks of one suite: the arena, the settings, a
    seeded random source and the day-2 data, built on first use.
    """

    def __init__(
        self, arena: Arena, settings: Settings, seed: int | None = None
    ) -> None:
        self.arena = arena
        self.settings = settings
        self.seed = seed if seed is not None else settings.seed
        if self.seed is None:
            self.seed = random.randint(0, 2**32 - 1)
        self.rng = random.Random(self.seed)

    def census(self, day: int = 2) -> Census:
        return games_born_by(
            day, day_cap=self.settings.census_day_cap, arena=self.arena
        )

    @functools.cached_property
    def partition(self) -> Day2Partition:
        return classify_day2(self.census(2), arena=self.arena)

    @functools.cached_property
    def poset(self) -> Poset:
        return build_poset(self.census(2).per_day[2], arena=self.arena)

    @functools.cached_property
    def formal_day2(self) -> list[GameId]:
        return list(formal_games(self.arena.day1, arena=self.arena))

    @functools.cached_property
    def day3_sample(self) -> list[GameId]:
        return sample_formal_games(
            self.census(2).per_day[2],
            self.settings.day3_sample_size,
            random.Random(self.seed),
            arena=self.arena,
        )


def _fail(counterexamples: list, what: str) -> bool:
    if counterexamples:
        raise CheckFailure(
            f"{len(counterexamples)} {what}, first: {counterexamples[0]}"
        )
    return True


def census_size(
    context: CheckContext, logger: logging.Logger, day: int, expected: int
) -> bool:
    """Number of canonical games born by a day."""
    size = len(context.census(day).per_day[day])
    logger.debug("Day %d census has %d games", day, size)
    if size != expected:
        raise CheckFailure(f"day {day} has {size} games, expected {expected}")
    return True


CHECKS_MAP.update({"census_size": census_size})


def partition_sizes(
    context: CheckContext, logger: logging.Logger, expected: list[int]
) -> bool:
    """Sizes of the plus, minus, zero and origin parts of day 2."""
    sizes = list(context.partition.sizes())
    if sizes != list(expected):
        raise CheckFailure(f"partition sizes {sizes}, expected {expected}")
    reports = check_component_isomorphisms(
        context.partition, context.poset, arena=context.arena
    )
    return _fail(
        [r.component for r in reports if not r.passed],
        "components fail their lattice isomorphism",
    )


CHECKS_MAP.update({"partition_sizes": partition_sizes})


def day1_incomparable(context: CheckContext, logger: logging.Logger) -> bool:
    """The four games born by day 1 are pairwise incomparable."""
    day1 = context.arena.day1
    return _fail(
        [(g, h) for g in day1 for h in day1 if g != h and _ge(context.arena, g, h)],
        "comparable day-1 pairs",
    )


CHECKS_MAP.update({"day1_incomparable": day1_incomparable})


def trivial_order_coincides(
    context: CheckContext, logger: logging.Logger
) -> bool:
    """Within each day-2 component the order is the trivial order."""
    arena = context.arena
    games = context.poset.elements
    partition = context.partition
    counterexamples = [
        (g, h)
        for g in games
        for h in games
        if partition.component_of(g) == partition.component_of(h)
        and context.poset.ge(g, h) != ge_trivial(g, h, arena=arena)
    ]
    return _fail(counterexamples, "pairs where the orders differ")


CHECKS_MAP.update({"trivial_order_coincides": trivial_order_coincides})


def generation_closure(
    context: CheckContext, logger: logging.Logger, omit_first: bool = False
) -> bool:
    """
    The day-2 order is generated by the component orders and the four
    cross-component relations. With omit_first the closure must fall short.
    """
    omit = generator_relations(context.arena)[:1] if omit_first else ()
    report = check_generation(
        context.partition, context.poset, omit=omit, arena=context.arena
    )
    logger.debug(
        "Closure has %d of %d pairs", report.closure_pairs, report.relation_pairs
    )
    if omit_first:
        return bool(report.missing) and not report.extra
    if not report.relations_hold:
        raise CheckFailure("a generating relation does not hold")
    _fail(report.missing, "pairs missing from the closure")
    return _fail(report.extra, "closure pairs outside the order")


CHECKS_MAP.update({"generation_closure": generation_closure})


def antichain_count(
    context: CheckContext, logger: logging.Logger, poset: str, expected: int
) -> bool:
    """Antichains of the lattice b4 or of the plus or minus component."""
    match poset:
        case "b4":
            target = BooleanLattice(4)
        case "plus":
            target = context.poset.restrict(context.partition.plus)
        case "minus":
            target = context.poset.restrict(context.partition.minus)
        case _:
            raise CheckFailure(f"unknown poset {poset}")
    count = count_antichains(target, cap=context.settings.antichain_cap)
    if count != expected:
        raise CheckFailure(f"{poset} has {count} antichains, expected {expected}")
    return True


CHECKS_MAP.update({"antichain_count": antichain_count})


def day3_bound_check(
    context: CheckContext, logger: logging.Logger, log2_floor: list[int]
) -> bool:
    """The day-3 bound, its square and the size of the square."""
    bound = day3_bound()
    logger.debug("M = %d, floor(log2(M^2)) = %d", bound.m, bound.log2_floor)
    return (
        bound.m == 2 * 167 * 167 * 56130437228687557907788
        and bound.m_squared == bound.m * bound.m
        and bound.log2_floor in log2_floor
        and bound.m_squared < 2**512
    )


CHECKS_MAP.update({"day3_bound": day3_bound_check})


def adjoint_law(
    context: CheckContext, logger: logging.Logger, day3_sample: bool = True
) -> bool:
    """Every game plus its adjoint is a misère P-position."""
    arena = context.arena
    games = list(context.formal_day2)
    if day3_sample:
        logger.debug("Adding %d day-3 games, seed %d", len(context.day3_sample), context.seed)
        games += context.day3_sample
    counterexamples = [
        g
        for g in games
        if sum_outcome((g, arena.adjoint(g)), arena=arena) != Outcome.P
    ]
    return _fail(counterexamples, "games whose adjoint sum is not P")


CHECKS_MAP.update({"adjoint_law": adjoint_law})


def coarsening(context: CheckContext, logger: logging.Logger) -> bool:
    """The misère order refines the normal-play order on day 2."""
    arena = context.arena
    games = context.poset.elements
    return _fail(
        [
            (g, h)
            for g in games
            for h in games
            if context.poset.ge(g, h) and not _ge_normal(arena, g, h)
        ],
        "misère relations missing from normal play",
    )


CHECKS_MAP.update({"coarsening": coarsening})


def nonzero_inequivalent(context: CheckContext, logger: logging.Logger) -> bool:
    """No nonzero day-2 game equals 0."""
    zero = context.arena.zero
    return _fail(
        [
            g
            for g in context.poset.elements
            if g != zero and context.poset.ge(g, zero) and context.poset.ge(zero, g)
        ],
        "nonzero games equal to 0",
    )


CHECKS_MAP.update({"nonzero_inequivalent": nonzero_inequivalent})


def witness_soundness(
    context: CheckContext, logger: logging.Logger, day: int = 2
) -> bool:
    """Both witness forms exist and verify for every unordered pair."""
    arena = context.arena
    games = arena.sorted(context.census(day).per_day[day])
    checked = 0
    for g in games:
        for h in games:
            if _ge(arena, g, h):
                continue
            witness_a(g, h, arena=arena)
            witness_b(g, h, arena=arena)
            checked += 1
    logger.debug("Verified witnesses for %d pairs", checked)
    return True


CHECKS_MAP.update({"witness_soundness": witness_soundness})


def order_soundness(context: CheckContext, logger: logging.Logger) -> bool:
    """G >= H implies o-(G+X) >= o-(H+X) for every formal day-2 context X."""
    arena = context.arena
    contexts = context.formal_day2
    counterexamples = []
    for g, h in context.poset.pairs():
        if g == h:
            continue
        for x in contexts:
            if not outcome_ge(
                sum_outcome((g, x), arena=arena), sum_outcome((h, x), arena=arena)
            ):
                counterexamples.append((g, h, x))
                break
    return _fail(counterexamples, "relations refuted by a context")


CHECKS_MAP.update({"order_soundness": order_soundness})


def impartial_gap(
    context: CheckContext, logger: logging.Logger, day: int = 4
) -> bool:
    """
    * + * differs from 0 globally, yet no impartial game born by the day
    tells them apart.
    """
    arena = context.arena
    double_star = arena.sum(arena.star, arena.star)
    form, _ = canonicalize(double_star, arena=arena)
    equal = _ge(arena, double_star, arena.zero) and _ge(arena, arena.zero, double_star)
    if form == arena.zero or equal:
        raise CheckFailure("* + * equals 0")
    games = impartial_games_born_by(day, arena=arena)
    logger.debug("Checking %d impartial games born by day %d", len(games), day)
    return _fail(find_impartial_gap(games, arena=arena), "impartial games separating * + * from 0")


CHECKS_MAP.update({"impartial_gap": impartial_gap})


def quotient_certificate(
    context: CheckContext,
    logger: logging.Logger,
    bound: int | None = None,
    coarse_bound: int = 6,
) -> bool:
    """Bounded quotient of [1, ~1] behaves like the integers."""
    arena = context.arena
    if bound is None:
        bound = context.settings.quotient_bound
    generators = [arena.one, arena.one_bar]
    fine = bounded_quotient(
        generators, bound, element_cap=context.settings.quotient_element_cap, arena=arena
    )
    report = verify_z_presentation(fine, arena=arena)
    _fail(report.violations, "integer presentation violations")
    coarse = bounded_quotient(
        generators, coarse_bound, element_cap=context.settings.quotient_element_cap, arena=arena
    )
    if not refines(fine, coarse):
        raise CheckFailure(f"bound {bound} merges classes separated at {coarse_bound}")
    # ~1 beats 0 in the quotient but not in the global order
    return (
        not _ge(arena, arena.one_bar, arena.zero)
        and fine.ge((0, 1), (0, 0))
        and not fine.ge((0, 0), (0, 1))
        and fine.ge((0, 0), (1, 0))
        and not fine.ge((1, 0), (0, 0))
        and fine.class_of((1, 1)) == fine.class_of((0, 0))
    )


CHECKS_MAP.update({"quotient_certificate": quotient_certificate})


def canonical_laws(
    context: CheckContext, logger: logging.Logger, day3_sample: bool = True
) -> bool:
    """
    Canonical forms are equal to their input, fixed, simplification free,
    unique on day 2 and independent of the simplification order.
    """
    arena = context.arena
    games = list(context.formal_day2)
    if day3_sample:
        games += context.day3_sample

    failures = []
    for g in games:
        form, _ = canonicalize(g, arena=arena)
        if not (_ge(arena, form, g) and _ge(arena, g, form)):
            failures.append(("unsound", g))
        elif canonicalize(form, arena=arena)[0] != form:
            failures.append(("not idempotent", g))
        elif not is_canonical(form, arena=arena):
            failures.append(("not simplification free", g))
    _fail(failures, "canonical form failures")

    day2 = context.formal_day2
    forms = {g: canonicalize(g, arena=arena)[0] for g in day2}
    _fail(
        [
            (g, h)
            for g in day2
            for h in day2
            if (_ge(arena, g, h) and _ge(arena, h, g)) != (forms[g] == forms[h])
        ],
        "day-2 pairs where equality and canonical identity disagree",
    )

    if day3_sample:
        rng = context.rng
        _fail(
            [
                g
                for g in context.day3_sample
                if simplify(g, rng, arena=arena) != canonicalize(g, arena=arena)[0]
            ],
            "games whose simplification depends on step order",
        )
    return True


CHECKS_MAP.update({"canonical_laws": canonical_laws})


def compare(
    context: CheckContext,
    logger: logging.Logger,
    lhs: str,
    rhs: str,
    expected: str,
    normal: bool = False,
) -> bool:
    """Comparison of two game expressions."""
    arena = context.arena
    result = compare_games(
        parse_game(lhs, arena=arena),
        parse_game(rhs, arena=arena),
        normal=normal,
        arena=arena,
    )
    if result != expected:
        raise CheckFailure(f"{lhs} {result} {rhs}, expected {expected}")
    return True


CHECKS_MAP.update({"compare": compare})


def outcome(
    context: CheckContext,
    logger: logging.Logger,
    expr: str,
    expected: str,
    normal: bool = False,
) -> bool:
    """Outcome class of a game expression."""
    arena = context.arena
    result = sum_outcome((parse_game(expr, arena=arena),), normal=normal, arena=arena)
    if result.value != expected:
        raise CheckFailure(f"{expr} has outcome {result.value}, expected {expected}")
    return True


CHECKS_MAP.update({"outcome": outcome})


def check_methods() -> dict:
    """
    Get the mapping of check names to their functions.

    Returns:
        dict: A mapping of check names to their functions.
    """
    return CHECKS_MAP
