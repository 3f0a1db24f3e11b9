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
Census of the games born by small days and the structure of the day-2 order.
"""

import itertools
import random
from collections.abc import Hashable, Iterable, Iterator
from dataclasses import dataclass, field

import networkx as nx

from src import logging_helper
from src.arena import Arena, GameId, get_arena
from src.canonical import canonicalize
from src.order import _ge
from src.outcomes import sum_outcome

logger = logging_helper.get_logger("census")

DEFAULT_DAY_CAP = 2
DEFAULT_ANTICHAIN_CAP = 24
IMPARTIAL_DAY_CAP = 4

# Antichains of the Boolean lattice of dimension 8, taken as input data
B8_ANTICHAINS = 56130437228687557907788
PLUS_COMPONENT_ANTICHAINS = 167


class InfeasibleError(ValueError):
    """
    Exception raised when a request exceeds the size the engine will
    enumerate.
    """

    def __init__(self, message: str, requested: int, cap: int) -> None:
        super().__init__(f"{message} (requested {requested}, cap {cap})")
        self.requested = requested
        self.cap = cap


@dataclass
class Census:
    """
    Canonical games born by each day: per_day[k] holds every game born by
    day k.
    """

    per_day: list[frozenset[GameId]]
    simplified: int = 0

    @property
    def day(self) -> int:
        return len(self.per_day) - 1

    def games(self, arena: Arena | None = None) -> list[GameId]:
        """The games born by the last day, in structural order."""
        arena = arena or get_arena()
        return arena.sorted(self.per_day[-1])


@dataclass
class Day2Partition:
    plus: frozenset[GameId]
    minus: frozenset[GameId]
    zero_part: frozenset[GameId]
    origin: GameId

    def sizes(self) -> tuple[int, int, int, int]:
        return len(self.plus), len(self.minus), len(self.zero_part), 1

    def component_of(self, g: GameId) -> str:
        if g == self.origin:
            return "origin"
        if g in self.plus:
            return "plus"
        if g in self.minus:
            return "minus"
        return "zero_part"


class Poset:
    """
    A finite poset stored as a boolean matrix, relation[i][j] meaning
    elements[i] >= elements[j].
    """

    def __init__(self, elements: list, relation: list[list[bool]]) -> None:
        self.elements = list(elements)
        self.relation = relation
        self._index = {e: i for i, e in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element: Hashable) -> bool:
        return element in self._index

    def index(self, element: Hashable) -> int:
        return self._index[element]

    def ge(self, a: Hashable, b: Hashable) -> bool:
        return self.relation[self._index[a]][self._index[b]]

    def pairs(self) -> set[tuple]:
        """Every related pair (a, b) with a >= b, reflexive pairs included."""
        n = len(self.elements)
        return {
            (self.elements[i], self.elements[j])
            for i in range(n)
            for j in range(n)
            if self.relation[i][j]
        }

    def restrict(self, elements: Iterable) -> "Poset":
        wanted = set(elements)
        keep = [e for e in self.elements if e in wanted]
        return Poset(
            keep,
            [[self.ge(a, b) for b in keep] for a in keep],
        )

    def copy(self) -> "Poset":
        return Poset(self.elements, [list(row) for row in self.relation])

    def is_reflexive(self) -> bool:
        return all(self.relation[i][i] for i in range(len(self)))

    def is_antisymmetric(self) -> bool:
        n = len(self)
        return not any(
            self.relation[i][j] and self.relation[j][i]
            for i in range(n)
            for j in range(i + 1, n)
        )

    def is_transitive(self) -> bool:
        n = len(self)
        rows = [
            {j for j in range(n) if self.relation[i][j]} for i in range(n)
        ]
        return all(rows[j] <= rows[i] for i in range(n) for j in rows[i])

    def graph(self) -> nx.DiGraph:
        """Strict relation as a directed graph, edges pointing downwards."""
        graph = nx.DiGraph()
        graph.add_nodes_from(self.elements)
        graph.add_edges_from((a, b) for a, b in self.pairs() if a != b)
        return graph

    def cover_graph(self) -> nx.DiGraph:
        """The Hasse diagram: the transitive reduction of the order."""
        return nx.transitive_reduction(self.graph())


class BooleanLattice(Poset):
    """All subsets of range(dimension), ordered by inclusion."""

    def __init__(self, dimension: int) -> None:
        if dimension < 1:
            raise ValueError(f"Lattice dimension must be positive: {dimension}")
        ground = range(dimension)
        elements = [
            frozenset(c)
            for size in range(dimension + 1)
            for c in itertools.combinations(ground, size)
        ]
        super().__init__(
            elements, [[a >= b for b in elements] for a in elements]
        )
        self.dimension = dimension


def boolean_lattice(dimension: int) -> BooleanLattice:
    return BooleanLattice(dimension)


def formal_games(
    options: Iterable[GameId], arena: Arena | None = None
) -> Iterator[GameId]:
    """
    Every game whose Left and Right options are subsets of the given set.

    Args:
        options (Iterable[GameId]): The available options.
        arena (Arena | None): The arena the ids belong to.

    Yields:
        GameId: One game per (Left subset, Right subset) pair, Left subset
            varying slowest.
    """
    arena = arena or get_arena()
    ordered = arena.sorted(set(options))
    subsets = [
        [x for bit, x in enumerate(ordered) if mask >> bit & 1]
        for mask in range(1 << len(ordered))
    ]
    for left in subsets:
        for right in subsets:
            yield arena.intern(left, right)


def games_born_by(
    day: int, day_cap: int = DEFAULT_DAY_CAP, arena: Arena | None = None
) -> Census:
    """
    Enumerate the canonical games born by a day.

    Args:
        day (int): The last day to enumerate.
        day_cap (int): The largest day that may be requested.
        arena (Arena | None): The arena the games are interned in.

    Returns:
        Census: The canonical games born by each day up to `day`.

    Raises:
        InfeasibleError: If `day` is above `day_cap`.
    """
    if day < 0:
        raise ValueError(f"Day must be non-negative: {day}")
    if day > day_cap:
        raise InfeasibleError("Census day is above the enumeration cap", day, day_cap)

    arena = arena or get_arena()
    cache = arena.cache("census.per_day")
    per_day = cache.setdefault("days", [frozenset((arena.zero,))])
    simplified = cache.setdefault("simplified", [0])

    while len(per_day) <= day:
        forms = set()
        changed = 0
        with logging_helper.timed(f"Day {len(per_day)} census", logger):
            for game in formal_games(per_day[-1], arena=arena):
                form, _ = canonicalize(game, arena=arena)
                if form != game:
                    changed += 1
                forms.add(form)
        per_day.append(frozenset(forms))
        simplified.append(changed)
        logger.debug(
            "Day %d: %d canonical games, %d formal games simplified",
            len(per_day) - 1,
            len(forms),
            changed,
        )

    return Census(list(per_day[: day + 1]), sum(simplified[: day + 1]))


def classify_day2(census: Census, arena: Arena | None = None) -> Day2Partition:
    """
    Split the day-2 games by their end flags.

    Raises:
        ValueError: If the census does not reach day 2.
    """
    if census.day < 2:
        raise ValueError("Census must be complete through day 2")
    arena = arena or get_arena()

    plus, minus, zero_part = set(), set(), set()
    for g in census.per_day[2]:
        if g == arena.zero:
            continue
        if arena.is_left_end(g):
            plus.add(g)
        elif arena.is_right_end(g):
            minus.add(g)
        else:
            zero_part.add(g)
    return Day2Partition(
        frozenset(plus), frozenset(minus), frozenset(zero_part), arena.zero
    )


def build_poset(elements: Iterable[GameId], arena: Arena | None = None) -> Poset:
    """
    Materialize the misère order on a set of games.

    Returns:
        Poset: Elements in structural order with relation[i][j] set to
            G_i >= G_j.
    """
    arena = arena or get_arena()
    ordered = arena.sorted(set(elements))
    return Poset(
        ordered, [[_ge(arena, g, h) for h in ordered] for g in ordered]
    )


@dataclass
class IsomorphismReport:
    """
    Result of checking one component against its lattice model.
    """

    component: str
    size: int
    target_size: int
    injective: bool = True
    onto: bool = True
    violations: list[tuple[GameId, GameId]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.injective and self.onto and not self.violations


def _component_models(arena: Arena) -> dict:
    day1 = frozenset(arena.day1)
    proper = [
        frozenset(c)
        for size in range(1, 5)
        for c in itertools.combinations(arena.day1, size)
    ]
    lattice_minus_top = [day1 - s for s in proper]
    lattice_minus_bottom = proper

    def complement_right(g: GameId) -> frozenset:
        return day1 - frozenset(arena.right_options(g))

    def left_set(g: GameId) -> frozenset:
        return frozenset(arena.left_options(g))

    def set_ge(a: frozenset, b: frozenset) -> bool:
        return a >= b

    def pair_ge(a: tuple, b: tuple) -> bool:
        return a[0] >= b[0] and a[1] >= b[1]

    return {
        "plus": (complement_right, set(lattice_minus_top), set_ge),
        "minus": (left_set, set(lattice_minus_bottom), set_ge),
        "zero_part": (
            lambda g: (complement_right(g), left_set(g)),
            set(itertools.product(lattice_minus_top, lattice_minus_bottom)),
            pair_ge,
        ),
    }


def check_component_isomorphisms(
    partition: Day2Partition, poset: Poset, arena: Arena | None = None
) -> list[IsomorphismReport]:
    """
    Check that each day-2 component is order isomorphic to its lattice model.

    The plus component maps to the Boolean lattice of the day-1 games minus
    its top through the complement of the Right option set, the minus
    component to the lattice minus its bottom through the Left option set,
    and the zero part to the product of the two through both maps.

    Returns:
        list[IsomorphismReport]: One report per component, in the order
            plus, minus, zero_part.
    """
    arena = arena or get_arena()
    models = _component_models(arena)
    reports = []

    for name, members in (
        ("plus", partition.plus),
        ("minus", partition.minus),
        ("zero_part", partition.zero_part),
    ):
        to_model, target, model_ge = models[name]
        ordered = arena.sorted(members)
        images = {g: to_model(g) for g in ordered}
        report = IsomorphismReport(name, len(ordered), len(target))
        report.injective = len(set(images.values())) == len(ordered)
        report.onto = set(images.values()) == target
        for g in ordered:
            for h in ordered:
                if poset.ge(g, h) != model_ge(images[g], images[h]):
                    report.violations.append((g, h))
        logger.debug(
            "Component %s: %d elements, %d violations",
            name,
            report.size,
            len(report.violations),
        )
        reports.append(report)

    return reports


def generator_relations(arena: Arena | None = None) -> list[tuple[GameId, GameId]]:
    """
    The four cross-component relations (G, H) with G >= H that, with the
    order inside each component and their conjugates, generate the day-2
    order.
    """
    arena = arena or get_arena()
    star, one, one_bar = arena.star, arena.one, arena.one_bar
    return [
        (arena.intern((), (star, one)), arena.zero),
        (arena.intern((star,), (star, one)), arena.intern((star,), ())),
        (arena.intern((one_bar,), (star, one)), arena.intern((one_bar,), ())),
        (
            arena.intern((star, one_bar), (star, one)),
            arena.intern((star, one_bar), ()),
        ),
    ]


@dataclass
class GenerationReport:
    generator_pairs: int
    closure_pairs: int
    relation_pairs: int
    relations_hold: bool
    missing: list[tuple[GameId, GameId]] = field(default_factory=list)
    extra: list[tuple[GameId, GameId]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.relations_hold and not self.missing and not self.extra


def check_generation(
    partition: Day2Partition,
    poset: Poset,
    omit: Iterable[tuple[GameId, GameId]] = (),
    arena: Arena | None = None,
) -> GenerationReport:
    """
    Compare the reflexive-transitive closure of the generating relations
    with the full day-2 order.

    Args:
        partition (Day2Partition): The day-2 components.
        poset (Poset): The day-2 order.
        omit (Iterable[tuple[GameId, GameId]]): Cross-component relations to
            leave out of the generators.
        arena (Arena | None): The arena the ids belong to.

    Returns:
        GenerationReport: Pair counts, plus the pairs in the order but not in
            the closure and the other way round.
    """
    arena = arena or get_arena()
    omitted = set(omit)
    relations = generator_relations(arena)

    generators = set()
    for members in (
        partition.plus,
        partition.minus,
        partition.zero_part,
        {partition.origin},
    ):
        generators.update(
            (g, h) for g in members for h in members if poset.ge(g, h)
        )
    for g, h in relations:
        if (g, h) in omitted:
            continue
        generators.add((g, h))
        generators.add((arena.conjugate(h), arena.conjugate(g)))

    graph = nx.DiGraph()
    graph.add_nodes_from(poset.elements)
    graph.add_edges_from(generators)
    closure = set(nx.transitive_closure(graph, reflexive=True).edges())
    relation = poset.pairs()

    report = GenerationReport(
        generator_pairs=len(generators),
        closure_pairs=len(closure),
        relation_pairs=len(relation),
        relations_hold=all(_ge(arena, g, h) for g, h in relations),
        missing=sorted(relation - closure),
        extra=sorted(closure - relation),
    )
    logger.debug(
        "Generation closure: %d of %d pairs", report.closure_pairs, report.relation_pairs
    )
    return report


def count_antichains(poset: Poset, cap: int = DEFAULT_ANTICHAIN_CAP) -> int:
    """
    Count the antichains of a poset, the empty set included.

    Args:
        poset (Poset): The poset.
        cap (int): The largest poset that may be scanned.

    Returns:
        int: The number of sets of pairwise incomparable elements.

    Raises:
        InfeasibleError: If the poset has more than `cap` elements.
    """
    n = len(poset)
    if n > cap:
        raise InfeasibleError("Poset is too large to scan for antichains", n, cap)

    # Bit j of blocked[i] is set when j comes after i or is comparable to it
    blocked = []
    for i in range(n):
        mask = (1 << (i + 1)) - 1
        for j in range(n):
            if poset.relation[i][j] or poset.relation[j][i]:
                mask |= 1 << j
        blocked.append(mask)

    def count(candidates: int) -> int:
        total = 1
        while candidates:
            low = candidates & -candidates
            i = low.bit_length() - 1
            total += count(candidates & ~blocked[i])
            candidates &= ~low
        return total

    return count((1 << n) - 1)


@dataclass(frozen=True)
class Day3Bound:
    m: int
    m_squared: int
    log2_floor: int


def day3_bound() -> Day3Bound:
    """
    Upper bound on the number of games born by day 3.

    M counts the antichain choices per day-2 component: two for the origin,
    167 for each of the plus and minus components and the dimension-8
    lattice count for the zero part. A game born by day 3 is fixed by one
    antichain of Left options and one of Right options, giving M squared.
    """
    m = 2 * PLUS_COMPONENT_ANTICHAINS * PLUS_COMPONENT_ANTICHAINS * B8_ANTICHAINS
    m_squared = m * m
    return Day3Bound(m, m_squared, m_squared.bit_length() - 1)


def impartial_games_born_by(
    day: int, arena: Arena | None = None
) -> list[GameId]:
    """
    Every formal impartial game tree born by a day: 1, 2, 4, 16 and 65536
    games for days 0 to 4.

    Raises:
        InfeasibleError: If `day` is above 4.
    """
    if day > IMPARTIAL_DAY_CAP:
        raise InfeasibleError(
            "Impartial enumeration day is above the cap", day, IMPARTIAL_DAY_CAP
        )
    arena = arena or get_arena()
    games = [arena.zero]
    for _ in range(day):
        previous = games
        games = []
        for mask in range(1 << len(previous)):
            options = [x for bit, x in enumerate(previous) if mask >> bit & 1]
            games.append(arena.intern(options, options))
    return games


def sample_formal_games(
    options: Iterable[GameId],
    count: int,
    rng: random.Random,
    arena: Arena | None = None,
) -> list[GameId]:
    """
    Draw formal games uniformly from those with options in the given set:
    each option is kept on each side with probability one half.
    """
    arena = arena or get_arena()
    ordered = arena.sorted(set(options))
    sample = []
    for _ in range(count):
        left = [x for x in ordered if rng.getrandbits(1)]
        right = [x for x in ordered if rng.getrandbits(1)]
        sample.append(arena.intern(left, right))
    return sample


def compares_with_zero(
    census: Census, arena: Arena | None = None
) -> tuple[set[GameId], set[GameId]]:
    """
    Split out the census games comparable with 0.

    Returns:
        tuple[set[GameId], set[GameId]]: The games >= 0 and the games <= 0.
    """
    arena = arena or get_arena()
    games = census.per_day[-1]
    above = {g for g in games if _ge(arena, g, arena.zero)}
    below = {g for g in games if _ge(arena, arena.zero, g)}
    return above, below


def impartial_gap(
    x_games: Iterable[GameId], arena: Arena | None = None
) -> list[GameId]:
    """
    Games X telling * + * apart from 0 in their own sum.

    Returns:
        list[GameId]: Every X with o-(* + * + X) != o-(X).
    """
    arena = arena or get_arena()
    star = arena.star
    return [
        x
        for x in x_games
        if sum_outcome((star, star, x), arena=arena) != sum_outcome((x,), arena=arena)
    ]
