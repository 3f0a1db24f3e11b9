import json

import pytest

from src.arena import Arena
from src.census import BooleanLattice, Poset, build_poset, games_born_by
from src.notation.export_tools import export_dot, export_json, import_json
from src.notation.parser import (
    Braces,
    Conjugate,
    GameSyntaxError,
    Sum,
    parse,
    parse_game,
)
from src.notation.printer import print_game
from src.quotient import bounded_quotient


def test_parse_constants(arena):
    assert parse_game("0", arena) == arena.zero
    assert parse_game("*", arena) == arena.star
    assert parse_game("∗", arena) == arena.star
    assert parse_game("1", arena) == arena.one
    assert parse_game("~1", arena) == arena.one_bar


def test_parse_braces(arena):
    assert parse_game("{0|0}", arena) == arena.star
    assert parse_game("{ 0 , * | }", arena) == arena.intern(
        [arena.zero, arena.star], []
    )
    assert parse_game("{.|·}", arena) == arena.zero
    assert parse_game("{|}", arena) == arena.zero


def test_parse_tree():
    tree = parse("~{0|} + (*)")
    assert isinstance(tree, Sum)
    assert isinstance(tree.terms[0], Conjugate)
    assert isinstance(tree.terms[0].operand, Braces)
    assert tree.terms[0].position == 1


def test_parse_sum_and_conjugate(arena):
    assert parse_game("*+*", arena) == arena.sum(arena.star, arena.star)
    assert parse_game("~(1 + *)", arena) == arena.sum(arena.one_bar, arena.star)
    assert parse_game("~~1", arena) == arena.one


@pytest.mark.parametrize(
    "text, position",
    [
        ("{0||0}", 4),
        ("{0|0", 5),
        ("0|1", 2),
        ("", 1),
        ("{0,|}", 4),
        ("(0", 3),
        ("2", 1),
    ],
)
def test_syntax_errors(text, position):
    with pytest.raises(GameSyntaxError) as e:
        parse(text)
    assert e.value.position == position


def test_syntax_error_lists_expected_tokens():
    with pytest.raises(GameSyntaxError) as e:
        parse("{0||0}")
    assert "}" in e.value.expected
    assert "position 4" in str(e.value)


def test_print(arena):
    assert print_game(arena.star, arena) == "*"
    assert print_game(arena.one_bar, arena) == "~1"
    assert print_game(arena.intern([arena.star], [arena.star]), arena) == "{*|*}"
    assert print_game(arena.intern([], [arena.star, arena.one]), arena) == "{|1,*}"


def test_print_round_trip(day2):
    arena = day2.arena
    printed = {print_game(g, arena) for g in day2.games}
    assert len(printed) == 256
    for g in day2.games:
        assert parse_game(print_game(g, arena), arena) == g


def test_export_day0():
    arena = Arena()
    text = export_json(games_born_by(0, arena=arena), arena=arena)
    assert text == '{"nodes":[{"id":0,"left":[],"right":[]}],"elements":[0],"relation":[[1]]}'


def test_export_day2(day2):
    document = json.loads(export_json(day2.census, arena=day2.arena))
    assert len(document["relation"]) == 256
    assert len(document["nodes"]) == 256
    for node in document["nodes"]:
        assert all(ref < node["id"] for ref in node["left"] + node["right"])


def test_import_reproduces_ids(day2):
    text = export_json(day2.census, arena=day2.arena)
    first, second = Arena(), Arena()
    assert import_json(text, first) == import_json(text, second)
    assert export_json(build_poset(import_json(text, first), arena=first), arena=first) == text


def test_import_rejects_forward_references():
    with pytest.raises(ValueError):
        import_json('{"nodes":[{"id":0,"left":[1],"right":[]}]}', Arena())
    with pytest.raises(ValueError):
        import_json("not json", Arena())


def test_export_presentation(arena):
    presentation = bounded_quotient([arena.star], 3, arena=arena)
    document = json.loads(export_json(presentation, arena=arena))
    assert list(document) == [
        "generators",
        "nodes",
        "bound",
        "caveat",
        "classes",
        "outcomes",
        "order",
    ]
    assert document["classes"] == [[[0], [2]], [[1], [3]]]
    assert document["outcomes"] == ["N", "P"]


def test_export_dot_day1(arena):
    dot = export_dot(build_poset(arena.day1, arena=arena), name="day1", arena=arena)
    assert dot.startswith("digraph day1 {")
    assert dot.count("[label=") == 4
    assert "->" not in dot


def test_export_dot_chain():
    chain = Poset(
        [frozenset(), frozenset({0})], [[True, False], [True, True]]
    )
    dot = export_dot(chain, arena=Arena())
    assert dot.count("->") == 1
    assert '"0" -> "1";' in dot


def test_export_dot_plus_component(day2):
    poset = day2.poset.restrict(day2.partition.plus)
    dot = export_dot(poset, arena=day2.arena)
    assert dot.count("[label=") == 15
    assert dot.count("->") == BooleanLattice(4).cover_graph().number_of_edges() - 4
