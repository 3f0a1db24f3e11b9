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
JSON and DOT serialization of censuses, posets and quotient presentations.

Exported node ids are positions in the structural order of the exported
games and their subpositions, not arena ids, so an export does not depend on
what else the arena holds. Options always precede the games they belong to.
"""

import json
from collections.abc import Iterable
from pathlib import Path

import jinja2

from src import logging_helper
from src.arena import Arena, GameId, get_arena
from src.census import Census, Poset, build_poset
from src.notation.printer import print_game
from src.quotient import QuotientPresentation

logger = logging_helper.get_logger("export")

TEMPLATE_DIR = Path(__file__).parent / "templates"


def _node_table(
    arena: Arena, games: Iterable[GameId]
) -> tuple[list[dict], dict[GameId, int]]:
    ordered = arena.sorted(arena.subpositions(games))
    index = {g: i for i, g in enumerate(ordered)}
    nodes = [
        {
            "id": index[g],
            "left": [index[x] for x in arena.left_options(g)],
            "right": [index[x] for x in arena.right_options(g)],
        }
        for g in ordered
    ]
    return nodes, index


def _poset_document(arena: Arena, poset: Poset) -> dict:
    nodes, index = _node_table(arena, poset.elements)
    return {
        "nodes": nodes,
        "elements": [index[g] for g in poset.elements],
        "relation": [[int(bit) for bit in row] for row in poset.relation],
    }


def _presentation_document(
    arena: Arena, presentation: QuotientPresentation
) -> dict:
    nodes, index = _node_table(arena, presentation.generators)
    return {
        "generators": [index[g] for g in presentation.generators],
        "nodes": nodes,
        "bound": presentation.bound,
        "caveat": presentation.caveat,
        "classes": [
            [list(x.multiplicities) for x in sorted(members)]
            for members in presentation.classes
        ],
        "outcomes": [o.value for o in presentation.outcome_of_class],
        "order": [[int(bit) for bit in row] for row in presentation.order],
    }


def export_json(
    item: Census | Poset | QuotientPresentation, arena: Arena | None = None
) -> str:
    """
    Serialize a census, a poset of games or a quotient presentation.

    Censuses and posets share one schema: "nodes" (id, left, right),
    "elements" (the node ids of the poset elements, in row order) and
    "relation" (0/1 rows, element i >= element j).

    Args:
        item (Census | Poset | QuotientPresentation): What to export.
        arena (Arena | None): The arena the games belong to.

    Returns:
        str: Compact JSON with a fixed key order.

    Raises:
        TypeError: If the item cannot be exported.
    """
    arena = arena or get_arena()
    match item:
        case Census():
            document = _poset_document(
                arena, build_poset(item.per_day[-1], arena=arena)
            )
        case QuotientPresentation():
            document = _presentation_document(arena, item)
        case Poset() if all(e in arena for e in item.elements):
            document = _poset_document(arena, item)
        case _:
            raise TypeError(f"Cannot export {type(item).__name__} as JSON")
    return json.dumps(document, separators=(",", ":"))


def import_json(text: str, arena: Arena | None = None) -> list[GameId]:
    """
    Intern the node table of an export.

    Args:
        text (str): JSON produced by export_json.
        arena (Arena | None): The arena to intern in.

    Returns:
        list[GameId]: The game of each node, in node id order.

    Raises:
        ValueError: If the document is not JSON or a node refers to a node
            that does not precede it.
    """
    arena = arena or get_arena()
    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"Not a JSON export: {e}") from e

    games: list[GameId] = []
    for record in sorted(document.get("nodes", []), key=lambda r: r["id"]):
        options = []
        for side in ("left", "right"):
            refs = record.get(side, [])
            if any(not 0 <= ref < len(games) for ref in refs):
                raise ValueError(
                    f"Node {record['id']} refers to a node that does not precede it"
                )
            options.append([games[ref] for ref in refs])
        games.append(arena.intern(*options))
    return games


def _label(arena: Arena, element) -> str:
    if element in arena:
        return print_game(element, arena=arena)
    return "{" + ",".join(str(x) for x in sorted(element)) + "}"


def export_dot(
    poset: Poset, name: str = "hasse", arena: Arena | None = None
) -> str:
    """
    Render the Hasse diagram of a poset as a DOT digraph.

    Only the cover relation is drawn, each edge pointing from the lower
    element to the one covering it.

    Args:
        poset (Poset): The poset, of games or of sets.
        name (str): The graph name.
        arena (Arena | None): The arena used to print game labels.

    Returns:
        str: The DOT source.
    """
    arena = arena or get_arena()
    index = {e: i for i, e in enumerate(poset.elements)}
    nodes = [
        {"id": i, "label": _label(arena, e)} for i, e in enumerate(poset.elements)
    ]
    edges = sorted(
        (index[lower], index[upper])
        for upper, lower in poset.cover_graph().edges()
    )

    template_env = jinja2.Environment(
        loader=jinja2.FileSystemLoader(searchpath=TEMPLATE_DIR),
        trim_blocks=True,
        lstrip_blocks=True,
        keep_trailing_newline=True,
    )
    template = template_env.get_template("hasse.dot.j2")
    logger.debug("Rendering %d nodes and %d cover edges", len(nodes), len(edges))
    return template.render(name=name, nodes=nodes, edges=edges)
