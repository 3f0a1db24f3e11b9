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
Bounded misère quotients of a set of generator games.

Sums of generators are identified by their multiplicity vectors. Two sums
fall in the same class when no context from the explored window, i.e. no sum
with every multiplicity at most the bound, tells them apart by outcome. The
classes are therefore a certificate of bounded indistinguishability only.
"""

import itertools
from collections.abc import Sequence
from dataclasses import dataclass, field

from src import logging_helper
from src.arena import Arena, GameId, get_arena
from src.census import InfeasibleError
from src.order import ContractError
from src.outcomes import Outcome, outcome_ge, sum_outcome

logger = logging_helper.get_logger("quotient")

DEFAULT_BOUND = 12
DEFAULT_ELEMENT_CAP = 4096


class QuotientInfeasibleError(InfeasibleError):
    """
    Exception raised when the window of explored sums is above the element
    cap.
    """


@dataclass(frozen=True, order=True)
class MonoidElement:
    """A sum of generators, as one multiplicity per generator."""

    multiplicities: tuple[int, ...]

    def __add__(self, other: "MonoidElement") -> "MonoidElement":
        return MonoidElement(
            tuple(a + b for a, b in zip(self.multiplicities, other.multiplicities))
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(m) for m in self.multiplicities) + ")"

    def components(self, generators: Sequence[GameId]) -> list[GameId]:
        """The generators repeated by their multiplicities."""
        return [
            g for g, m in zip(generators, self.multiplicities) for _ in range(m)
        ]


def element_game(
    generators: Sequence[GameId], m: MonoidElement, arena: Arena | None = None
) -> GameId:
    """
    The interned disjunctive sum of the generator copies.

    Raises:
        ContractError: If the multiplicity vector does not match the
            generators.
    """
    if len(m.multiplicities) != len(generators):
        raise ContractError(
            f"Element {m} has {len(m.multiplicities)} multiplicities "
            f"for {len(generators)} generators",
            tuple(generators),
        )
    arena = arena or get_arena()
    return arena.sum_all(m.components(generators))


@dataclass
class QuotientPresentation:
    """
    The explored window split into bounded-indistinguishability classes.

    order[i][j] is set when class i does at least as well as class j against
    every context in the window.
    """

    generators: tuple[GameId, ...]
    bound: int
    classes: list[frozenset[MonoidElement]]
    outcome_of_class: list[Outcome]
    order: list[list[bool]]
    membership: dict[MonoidElement, int] = field(repr=False, default_factory=dict)

    @property
    def caveat(self) -> str:
        return (
            f"bounded certificate: contexts with every multiplicity <= {self.bound}"
        )

    def class_of(self, element: MonoidElement | tuple[int, ...]) -> int:
        if not isinstance(element, MonoidElement):
            element = MonoidElement(tuple(element))
        return self.membership[element]

    def ge(self, x: MonoidElement | tuple, y: MonoidElement | tuple) -> bool:
        return self.order[self.class_of(x)][self.class_of(y)]


def window(size: int, bound: int) -> list[MonoidElement]:
    """Every multiplicity vector of the given length with entries <= bound."""
    return [
        MonoidElement(m)
        for m in itertools.product(range(bound + 1), repeat=size)
    ]


def bounded_quotient(
    generators: Sequence[GameId],
    bound: int = DEFAULT_BOUND,
    element_cap: int = DEFAULT_ELEMENT_CAP,
    arena: Arena | None = None,
) -> QuotientPresentation:
    """
    Explore the quotient of the sums of the generators within a window.

    Args:
        generators (Sequence[GameId]): The generator games.
        bound (int): Largest multiplicity explored, for elements and
            contexts alike.
        element_cap (int): Largest window that may be explored.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        QuotientPresentation: Classes in order of their first element, their
            outcomes and the induced order.

    Raises:
        ValueError: If `bound` is below 1.
        QuotientInfeasibleError: If the window is above `element_cap`.
    """
    if bound < 1:
        raise ValueError(f"Quotient bound must be at least 1: {bound}")
    size = (bound + 1) ** len(generators)
    if size > element_cap:
        raise QuotientInfeasibleError(
            "Quotient window is above the element cap", size, element_cap
        )

    arena = arena or get_arena()
    generators = tuple(arena.check(g) for g in generators)
    elements = window(len(generators), bound)

    signatures: dict[tuple, list[MonoidElement]] = {}
    for x in elements:
        signature = tuple(
            sum_outcome((x + z).components(generators), arena=arena)
            for z in elements
        )
        signatures.setdefault(signature, []).append(x)

    keys = list(signatures)
    classes = [frozenset(signatures[key]) for key in keys]
    membership = {x: i for i, key in enumerate(keys) for x in signatures[key]}
    # The first context of the window is the empty sum
    outcomes = [key[0] for key in keys]
    order = [
        [all(outcome_ge(a, b) for a, b in zip(ki, kj)) for kj in keys]
        for ki in keys
    ]

    logger.debug(
        "Quotient window of %d elements at bound %d has %d classes",
        len(elements),
        bound,
        len(classes),
    )
    return QuotientPresentation(
        generators, bound, classes, outcomes, order, membership
    )


def refines(finer: QuotientPresentation, coarser: QuotientPresentation) -> bool:
    """
    True if elements separated in the coarser presentation stay separated
    in the finer one, over the elements both windows contain.
    """
    shared = [x for x in coarser.membership if x in finer.membership]
    return all(
        finer.class_of(x) != finer.class_of(y)
        for x in shared
        for y in shared
        if coarser.class_of(x) != coarser.class_of(y)
    )


@dataclass
class IntegerPresentationReport:
    """Bounded check that a quotient of [1, ~1] behaves like the integers."""

    bound: int
    difference_indexed: bool = True
    product_law: bool = True
    integer_order: bool = True
    outcome_law: bool = True
    violations: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (
            self.difference_indexed
            and self.product_law
            and self.integer_order
            and self.outcome_law
        )


def _difference(x: MonoidElement) -> int:
    a, b = x.multiplicities
    return b - a


def verify_z_presentation(
    presentation: QuotientPresentation, arena: Arena | None = None
) -> IntegerPresentationReport:
    """
    Check the explored quotient of the sums of 1 and ~1 against the
    integers, indexing the sum of a copies of 1 and b copies of ~1 by b - a.

    Raises:
        ContractError: If the generators are not [1, ~1].
    """
    arena = arena or get_arena()
    if presentation.generators != (arena.one, arena.one_bar):
        raise ContractError(
            "The integer presentation check needs the generators [1, ~1]",
            presentation.generators,
        )

    report = IntegerPresentationReport(presentation.bound)
    by_difference: dict[int, int] = {}

    for index, members in enumerate(presentation.classes):
        differences = {_difference(x) for x in members}
        if len(differences) != 1:
            report.difference_indexed = False
            report.violations.append(
                f"class {index} mixes differences {sorted(differences)}"
            )
            continue
        (d,) = differences
        if d in by_difference:
            report.difference_indexed = False
            report.violations.append(
                f"difference {d} is split between classes "
                f"{by_difference[d]} and {index}"
            )
        by_difference[d] = index

    if not report.difference_indexed:
        return report

    elements = list(presentation.membership)
    for x in elements:
        for y in elements:
            product = x + y
            if product not in presentation.membership:
                continue
            expected = by_difference[_difference(x) + _difference(y)]
            if presentation.class_of(product) != expected:
                report.product_law = False
                report.violations.append(f"class of {x} + {y} is not additive")

    for d, i in by_difference.items():
        for e, j in by_difference.items():
            if presentation.order[i][j] != (d >= e):
                report.integer_order = False
                report.violations.append(
                    f"order between differences {d} and {e} is not the integer order"
                )

    for d, i in by_difference.items():
        expected = Outcome.N if d == 0 else Outcome.L if d > 0 else Outcome.R
        if presentation.outcome_of_class[i] != expected:
            report.outcome_law = False
            report.violations.append(
                f"difference {d} has outcome "
                f"{presentation.outcome_of_class[i].value}, expected {expected.value}"
            )

    return report
