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
Canonical forms under misère play.

A game is canonical when no subposition has a dominated or a reversible
option. Canonicalization first replaces every option by its canonical form,
then applies one simplification at a time until none applies, recording
each step so the result can be replayed from the input.
"""

import random
from collections.abc import Callable, Iterable
from dataclasses import dataclass, field
from enum import Enum

from src import logging_helper
from src.arena import Arena, GameId, get_arena
from src.order import ContractError, _ge

logger = logging_helper.get_logger("canonical")


class StepKind(Enum):
    REPLACED_LEFT = "replaced_left"
    REPLACED_RIGHT = "replaced_right"
    REMOVED_DOMINATED_LEFT = "removed_dominated_left"
    REMOVED_DOMINATED_RIGHT = "removed_dominated_right"
    BYPASSED_LEFT = "bypassed_left"
    BYPASSED_RIGHT = "bypassed_right"


@dataclass(frozen=True)
class SimplificationStep:
    """
    One rewrite of the top level of a game.

    For replacements `via` is the canonical form put in place of `target`,
    for removals it is the option dominating `target`, and for bypasses it
    is the reversing response whose options replace `target`.
    """

    kind: StepKind
    target: GameId
    via: GameId


@dataclass
class SimplificationTrace:
    steps: list[SimplificationStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)

    def count(self, kind: StepKind) -> int:
        return sum(1 for step in self.steps if step.kind == kind)


def dominated_left(g: GameId, arena: Arena | None = None) -> set[GameId]:
    """
    Left options bettered by another Left option.

    Returns:
        set[GameId]: Every G^L with G^L' >= G^L for some other G^L'.
    """
    arena = arena or get_arena()
    options = arena.left_options(arena.check(g))
    return {
        x for x in options if any(y != x and _ge(arena, y, x) for y in options)
    }


def dominated_right(g: GameId, arena: Arena | None = None) -> set[GameId]:
    """
    Right options bettered, for Right, by another Right option.

    Returns:
        set[GameId]: Every G^R with G^R' <= G^R for some other G^R'.
    """
    arena = arena or get_arena()
    options = arena.right_options(arena.check(g))
    return {
        x for x in options if any(y != x and _ge(arena, x, y) for y in options)
    }


def reversible_left(
    g: GameId, arena: Arena | None = None
) -> set[tuple[GameId, GameId]]:
    """
    Reversible Left options.

    Returns:
        set[tuple[GameId, GameId]]: Pairs (G^L, G^LR) with G^LR <= G.
    """
    arena = arena or get_arena()
    g = arena.check(g)
    return {
        (option, through)
        for option in arena.left_options(g)
        for through in arena.right_options(option)
        if _ge(arena, g, through)
    }


def reversible_right(
    g: GameId, arena: Arena | None = None
) -> set[tuple[GameId, GameId]]:
    """
    Reversible Right options.

    Returns:
        set[tuple[GameId, GameId]]: Pairs (G^R, G^RL) with G^RL >= G.
    """
    arena = arena or get_arena()
    g = arena.check(g)
    return {
        (option, through)
        for option in arena.right_options(g)
        for through in arena.left_options(option)
        if _ge(arena, through, g)
    }


def formal_size(g: GameId, arena: Arena | None = None) -> int:
    """Number of nodes of the game tree, shared subtrees counted each time."""
    arena = arena or get_arena()
    return _formal_size(arena, arena.check(g))


def _formal_size(arena: Arena, g: GameId) -> int:
    cache = arena.cache("canonical.size")
    found = cache.get(g)
    if found is None:
        found = 1 + sum(
            _formal_size(arena, x)
            for x in arena.left_options(g) + arena.right_options(g)
        )
        cache[g] = found
    return found


def bypass_left(
    g: GameId, option: GameId, through: GameId, arena: Arena | None = None
) -> GameId:
    """
    Replace a reversible Left option by the Left options of its reversing
    response.

    Args:
        g (GameId): The game.
        option (GameId): A reversible Left option G^L.
        through (GameId): A Right option of G^L with G^LR <= G.

    Returns:
        GameId: {G^LRL, other G^L | G^R}.

    Raises:
        ContractError: If (option, through) does not reverse.
    """
    arena = arena or get_arena()
    g = arena.check(g)
    if (
        option not in arena.left_options(g)
        or through not in arena.right_options(option)
        or not _ge(arena, g, through)
    ):
        raise ContractError(
            f"Left option {option} of {g} is not reversible through {through}",
            (g, option, through),
        )
    return _apply(arena, g, SimplificationStep(StepKind.BYPASSED_LEFT, option, through))


def bypass_right(
    g: GameId, option: GameId, through: GameId, arena: Arena | None = None
) -> GameId:
    """
    Replace a reversible Right option by the Right options of its reversing
    response.

    Raises:
        ContractError: If (option, through) does not reverse.
    """
    arena = arena or get_arena()
    g = arena.check(g)
    if (
        option not in arena.right_options(g)
        or through not in arena.left_options(option)
        or not _ge(arena, through, g)
    ):
        raise ContractError(
            f"Right option {option} of {g} is not reversible through {through}",
            (g, option, through),
        )
    return _apply(arena, g, SimplificationStep(StepKind.BYPASSED_RIGHT, option, through))


def _apply(arena: Arena, g: GameId, step: SimplificationStep) -> GameId:
    left = set(arena.left_options(g))
    right = set(arena.right_options(g))

    match step.kind:
        case StepKind.REPLACED_LEFT:
            left.discard(step.target)
            left.add(step.via)
        case StepKind.REPLACED_RIGHT:
            right.discard(step.target)
            right.add(step.via)
        case StepKind.REMOVED_DOMINATED_LEFT:
            left.discard(step.target)
        case StepKind.REMOVED_DOMINATED_RIGHT:
            right.discard(step.target)
        case StepKind.BYPASSED_LEFT:
            left.discard(step.target)
            left.update(arena.left_options(step.via))
        case StepKind.BYPASSED_RIGHT:
            right.discard(step.target)
            right.update(arena.right_options(step.via))

    return arena.intern(left, right)


def _candidate_steps(arena: Arena, g: GameId) -> list[SimplificationStep]:
    # Priority order: Left bypasses, Right bypasses, then dominated options
    steps = [
        SimplificationStep(StepKind.BYPASSED_LEFT, option, through)
        for option in arena.left_options(g)
        for through in arena.right_options(option)
        if _ge(arena, g, through)
    ]
    steps += [
        SimplificationStep(StepKind.BYPASSED_RIGHT, option, through)
        for option in arena.right_options(g)
        for through in arena.left_options(option)
        if _ge(arena, through, g)
    ]
    left = arena.left_options(g)
    steps += [
        SimplificationStep(StepKind.REMOVED_DOMINATED_LEFT, x, y)
        for x in left
        for y in left
        if y != x and _ge(arena, y, x)
    ]
    right = arena.right_options(g)
    steps += [
        SimplificationStep(StepKind.REMOVED_DOMINATED_RIGHT, x, y)
        for x in right
        for y in right
        if y != x and _ge(arena, x, y)
    ]
    return steps


def _first_step(arena: Arena, g: GameId) -> SimplificationStep | None:
    for option in arena.left_options(g):
        for through in arena.right_options(option):
            if _ge(arena, g, through):
                return SimplificationStep(StepKind.BYPASSED_LEFT, option, through)
    for option in arena.right_options(g):
        for through in arena.left_options(option):
            if _ge(arena, through, g):
                return SimplificationStep(StepKind.BYPASSED_RIGHT, option, through)
    left = arena.left_options(g)
    for x in left:
        for y in left:
            if y != x and _ge(arena, y, x):
                return SimplificationStep(StepKind.REMOVED_DOMINATED_LEFT, x, y)
    right = arena.right_options(g)
    for x in right:
        for y in right:
            if y != x and _ge(arena, x, y):
                return SimplificationStep(StepKind.REMOVED_DOMINATED_RIGHT, x, y)
    return None


def _canonical_children(
    arena: Arena, g: GameId, steps: list[SimplificationStep]
) -> GameId:
    for kind, options in (
        (StepKind.REPLACED_LEFT, arena.left_options(g)),
        (StepKind.REPLACED_RIGHT, arena.right_options(g)),
    ):
        for option in options:
            form, _ = _canonicalize(arena, option)
            if form != option:
                steps.append(SimplificationStep(kind, option, form))

    current = g
    for step in steps:
        current = _apply(arena, current, step)
    return current


def _fixpoint(
    arena: Arena,
    current: GameId,
    steps: list[SimplificationStep],
    choose: Callable[[Arena, GameId], SimplificationStep | None],
) -> GameId:
    while (step := choose(arena, current)) is not None:
        before = _formal_size(arena, current)
        current = _apply(arena, current, step)
        assert _formal_size(arena, current) < before, (
            f"simplification step {step} did not shrink game {current}"
        )
        steps.append(step)
    return current


def _canonicalize(
    arena: Arena, g: GameId
) -> tuple[GameId, SimplificationTrace]:
    cache = arena.cache("canonical.form")
    found = cache.get(g)
    if found is not None:
        return found

    steps: list[SimplificationStep] = []
    current = _canonical_children(arena, g, steps)
    current = _fixpoint(arena, current, steps, _first_step)

    result = (current, SimplificationTrace(steps))
    cache[g] = result
    if current not in cache:
        cache[current] = (current, SimplificationTrace())
    return result


def canonicalize(
    g: GameId, arena: Arena | None = None
) -> tuple[GameId, SimplificationTrace]:
    """
    Compute the canonical form of a game.

    Args:
        g (GameId): The game.
        arena (Arena | None): The arena the id belongs to.

    Returns:
        tuple[GameId, SimplificationTrace]: The canonical form, misère equal
            to g, and the top-level steps that turn g into it.
    """
    arena = arena or get_arena()
    form, trace = _canonicalize(arena, arena.check(g))
    if trace.steps:
        logger.debug(
            "Canonical form of %d is %d after %d steps", g, form, len(trace)
        )
    return form, trace


def canonical_form(g: GameId, arena: Arena | None = None) -> GameId:
    """The canonical form of a game, without its trace."""
    return canonicalize(g, arena=arena)[0]


def replay(
    g: GameId,
    trace: SimplificationTrace | Iterable[SimplificationStep],
    arena: Arena | None = None,
) -> GameId:
    """
    Apply recorded steps to a game.

    Returns:
        GameId: The game the steps lead to.
    """
    arena = arena or get_arena()
    current = arena.check(g)
    for step in trace:
        current = _apply(arena, current, step)
    return current


def simplify(
    g: GameId, rng: random.Random, arena: Arena | None = None
) -> GameId:
    """
    Simplify a game choosing a random applicable step each round.

    The options are brought to canonical form first. The result is
    expected to be the same GameId whatever order the steps are taken in.

    Args:
        g (GameId): The game.
        rng (random.Random): Source of the step choices.
        arena (Arena | None): The arena the id belongs to.

    Returns:
        GameId: The fully simplified game.
    """
    arena = arena or get_arena()

    def choose(arena: Arena, current: GameId) -> SimplificationStep | None:
        steps = _candidate_steps(arena, current)
        return rng.choice(steps) if steps else None

    steps: list[SimplificationStep] = []
    current = _canonical_children(arena, arena.check(g), steps)
    return _fixpoint(arena, current, steps, choose)


def is_canonical(g: GameId, arena: Arena | None = None) -> bool:
    """True if no subposition of the game can be simplified."""
    arena = arena or get_arena()
    return all(
        _first_step(arena, x) is None for x in arena.subpositions((g,))
    )
