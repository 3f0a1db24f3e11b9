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
Constructive witnesses for the misère order.

When G >= H fails, a context game T can be built that exposes the failure:

    form_a:    o-(G+T) <= P  and  o-(H+T) >= N
    form_b:    o-(G+U) <= N  and  o-(H+U) >= P
    downlink:  o-(G+T) <= P  and  o-(H+T) >= P

Contexts are assembled from adjoints and from the contexts of smaller pairs,
following whichever condition of the recursive order test fails first. Each
context is checked by direct outcome evaluation before it is handed out.
"""

from dataclasses import dataclass
from enum import Enum

from src import logging_helper
from src.arena import Arena, GameId, get_arena
from src.order import ContractError, _downlinked, _ge
from src.outcomes import Outcome, OutcomeBound, outcome_ge, sum_outcome

logger = logging_helper.get_logger("witnesses")


class WitnessVerificationError(RuntimeError):
    """
    Exception raised when a constructed context does not certify the bounds
    it was built for.
    """

    def __init__(self, kind: str, games: tuple, context: GameId) -> None:
        super().__init__(
            f"Context {context} does not certify {kind} for games {games}"
        )
        self.kind = kind
        self.games = games
        self.context = context


class WitnessKind(Enum):
    FORM_A = "form_a"
    FORM_B = "form_b"
    DISTINGUISHING_CONTEXT = "distinguishing_context"
    DOWNLINK_CONTEXT = "downlink_context"
    UPLINK_CONTEXT = "uplink_context"


@dataclass(frozen=True)
class Witness:
    """
    A context game together with the outcome bounds it certifies, one
    (game, bound) fact per compared game.
    """

    kind: WitnessKind
    context: GameId
    certified: tuple[tuple[GameId, OutcomeBound], ...]

    def outcomes(self, arena: Arena | None = None) -> tuple[Outcome, ...]:
        """Outcome of each certified game plus the context."""
        return tuple(
            sum_outcome((game, self.context), arena=arena)
            for game, _ in self.certified
        )

    def verify(self, arena: Arena | None = None) -> bool:
        """
        Re-evaluate the certified facts.

        Returns:
            bool: True if every bound holds, and for distinguishing contexts
                the outcome order is violated as well.
        """
        outcomes = self.outcomes(arena)
        if not all(
            bound.holds(outcome)
            for (_, bound), outcome in zip(self.certified, outcomes)
        ):
            return False
        if self.kind == WitnessKind.DISTINGUISHING_CONTEXT:
            return not outcome_ge(outcomes[0], outcomes[1])
        return True


FACTS = {
    WitnessKind.FORM_A: (OutcomeBound.AT_MOST_P, OutcomeBound.AT_LEAST_N),
    WitnessKind.FORM_B: (OutcomeBound.AT_MOST_N, OutcomeBound.AT_LEAST_P),
    WitnessKind.DOWNLINK_CONTEXT: (
        OutcomeBound.AT_MOST_P,
        OutcomeBound.AT_LEAST_P,
    ),
    WitnessKind.DISTINGUISHING_CONTEXT: (
        OutcomeBound.AT_MOST_P,
        OutcomeBound.AT_LEAST_N,
    ),
    WitnessKind.UPLINK_CONTEXT: (
        OutcomeBound.AT_LEAST_P,
        OutcomeBound.AT_MOST_P,
    ),
}


def _witness(
    arena: Arena, kind: WitnessKind, g: GameId, h: GameId, context: GameId
) -> Witness:
    g_bound, h_bound = FACTS[kind]
    witness = Witness(kind, context, ((g, g_bound), (h, h_bound)))
    if not witness.verify(arena):
        raise WitnessVerificationError(kind.value, (g, h), context)
    return witness


def _checked(
    arena: Arena, kind: WitnessKind, g: GameId, h: GameId, context: GameId
) -> GameId:
    _witness(arena, kind, g, h, context)
    return context


def failing_condition(
    g: GameId, h: GameId, arena: Arena | None = None
) -> tuple[str, GameId | None] | None:
    """
    Find the first condition of the recursive order test that fails.

    Conditions are searched in the order (i) G downlinked to some H^L,
    (ii) some G^R downlinked to H, (iii) H a Left end but G not,
    (iv) G a Right end but H not.

    Returns:
        tuple[str, GameId | None] | None: The condition name and the option
            that breaks it (None for the end conditions), or None if G >= H.
    """
    arena = arena or get_arena()
    for h_l in arena.left_options(h):
        if _downlinked(arena, g, h_l):
            return "i", h_l
    for g_r in arena.right_options(g):
        if _downlinked(arena, g_r, h):
            return "ii", g_r
    if arena.is_left_end(h) and not arena.is_left_end(g):
        return "iii", None
    if arena.is_right_end(g) and not arena.is_right_end(h):
        return "iv", None
    return None


def _adjoints(arena: Arena, games: tuple[GameId, ...]) -> list[GameId]:
    return [arena.adjoint(x) for x in games]


def _a_to_b(arena: Arena, h: GameId, t: GameId) -> GameId:
    # U = {(H^R)° | T}
    return arena.intern(_adjoints(arena, arena.right_options(h)), (t,))


def _b_to_a(arena: Arena, g: GameId, u: GameId) -> GameId:
    # T = {U | (G^L)°}
    return arena.intern((u,), _adjoints(arena, arena.left_options(g)))


def _end_context(arena: Arena, g: GameId, h: GameId) -> GameId:
    """
    Context for H a Left end and G not: {(H^R)° | {. | (G^L)°}}. It gives
    o-(G+T) <= N and o-(H+T) >= P.
    """
    inner = arena.intern((), _adjoints(arena, arena.left_options(g)))
    return arena.intern(_adjoints(arena, arena.right_options(h)), (inner,))


def _context_a(arena: Arena, g: GameId, h: GameId) -> GameId:
    cache = arena.cache("witness.form_a")
    found = cache.get((g, h))
    if found is not None:
        return found

    failure = failing_condition(g, h, arena=arena)
    if failure is None:
        raise ContractError(f"{g} >= {h}, no form_a context exists", (g, h))

    condition, option = failure
    match condition:
        case "i":
            context = _downlink_context(arena, g, option)
        case "ii":
            context = _b_to_a(arena, g, _downlink_context(arena, option, h))
        case "iii":
            context = _b_to_a(arena, g, _end_context(arena, g, h))
        case _:
            mirrored = _end_context(
                arena, arena.conjugate(h), arena.conjugate(g)
            )
            context = arena.conjugate(mirrored)

    context = _checked(arena, WitnessKind.FORM_A, g, h, context)
    cache[(g, h)] = context
    return context


def _context_b(arena: Arena, g: GameId, h: GameId) -> GameId:
    cache = arena.cache("witness.form_b")
    found = cache.get((g, h))
    if found is not None:
        return found

    failure = failing_condition(g, h, arena=arena)
    if failure is None:
        raise ContractError(f"{g} >= {h}, no form_b context exists", (g, h))

    condition, option = failure
    match condition:
        case "ii":
            context = _downlink_context(arena, option, h)
        case "iii":
            context = _end_context(arena, g, h)
        case _:
            context = _a_to_b(arena, h, _context_a(arena, g, h))

    context = _checked(arena, WitnessKind.FORM_B, g, h, context)
    cache[(g, h)] = context
    return context


def _downlink_context(arena: Arena, g: GameId, h: GameId) -> GameId:
    cache = arena.cache("witness.downlink")
    found = cache.get((g, h))
    if found is not None:
        return found

    if not _downlinked(arena, g, h):
        raise ContractError(f"{g} is not downlinked to {h}", (g, h))

    zero = arena.zero
    if g == zero and h == zero:
        context = arena.star
    elif g == zero and arena.is_right_end(h):
        context = arena.intern(
            (zero,), _adjoints(arena, arena.left_options(h))
        )
    elif h == zero and arena.is_left_end(g):
        context = arena.intern(
            _adjoints(arena, arena.right_options(g)), (zero,)
        )
    else:
        # {Y_j, (G^R)° | X_i, (H^L)°}
        left = [_context_b(arena, g, h_r) for h_r in arena.right_options(h)]
        left += _adjoints(arena, arena.right_options(g))
        right = [_context_a(arena, g_l, h) for g_l in arena.left_options(g)]
        right += _adjoints(arena, arena.left_options(h))
        context = arena.intern(left, right)

    context = _checked(arena, WitnessKind.DOWNLINK_CONTEXT, g, h, context)
    cache[(g, h)] = context
    return context


def _require_not_ge(arena: Arena, g: GameId, h: GameId) -> None:
    if _ge(arena, arena.check(g), arena.check(h)):
        raise ContractError(
            f"Game {g} >= game {h}, so no context can separate them", (g, h)
        )


def witness_a(g: GameId, h: GameId, arena: Arena | None = None) -> Witness:
    """
    Build T with o-(G+T) <= P and o-(H+T) >= N.

    Args:
        g (GameId): A game with G >= H false.
        h (GameId): The other game.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        Witness: A verified form_a witness.

    Raises:
        ContractError: If G >= H.
        WitnessVerificationError: If the construction fails its check.
    """
    arena = arena or get_arena()
    _require_not_ge(arena, g, h)
    context = _context_a(arena, g, h)
    logger.debug("form_a context for (%d, %d): %d", g, h, context)
    return _witness(arena, WitnessKind.FORM_A, g, h, context)


def witness_b(g: GameId, h: GameId, arena: Arena | None = None) -> Witness:
    """
    Build U with o-(G+U) <= N and o-(H+U) >= P.

    Args:
        g (GameId): A game with G >= H false.
        h (GameId): The other game.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        Witness: A verified form_b witness.

    Raises:
        ContractError: If G >= H.
        WitnessVerificationError: If the construction fails its check.
    """
    arena = arena or get_arena()
    _require_not_ge(arena, g, h)
    context = _context_b(arena, g, h)
    logger.debug("form_b context for (%d, %d): %d", g, h, context)
    return _witness(arena, WitnessKind.FORM_B, g, h, context)


def downlink_witness(
    g: GameId, h: GameId, arena: Arena | None = None
) -> Witness:
    """
    Build T with o-(G+T) <= P and o-(H+T) >= P.

    Raises:
        ContractError: If G is not downlinked to H.
    """
    arena = arena or get_arena()
    context = _downlink_context(arena, arena.check(g), arena.check(h))
    return _witness(arena, WitnessKind.DOWNLINK_CONTEXT, g, h, context)


def uplink_witness(
    g: GameId, h: GameId, arena: Arena | None = None
) -> Witness:
    """
    Build T with o-(G+T) >= P and o-(H+T) <= P, the downlink context of
    H to G.

    Raises:
        ContractError: If G is not uplinked to H.
    """
    arena = arena or get_arena()
    context = _downlink_context(arena, arena.check(h), arena.check(g))
    return _witness(arena, WitnessKind.UPLINK_CONTEXT, g, h, context)


def distinguish(g: GameId, h: GameId, arena: Arena | None = None) -> Witness:
    """
    Build X with o-(G+X) not >= o-(H+X), refuting G >= H directly from the
    definition. The form_a context already does this, since neither P nor
    R is >= N.

    Raises:
        ContractError: If G >= H.
    """
    arena = arena or get_arena()
    _require_not_ge(arena, g, h)
    context = _context_a(arena, g, h)
    return _witness(arena, WitnessKind.DISTINGUISHING_CONTEXT, g, h, context)
