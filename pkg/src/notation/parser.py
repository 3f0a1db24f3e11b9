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
Recursive descent parser for game expressions.

    expr  := term ('+' term)*
    term  := '~' term | atom
    atom  := '0' | '*' | '1' | '{' list '|' list '}' | '(' expr ')'
    list  := empty | '.' | expr (',' expr)*

Whitespace is insignificant, '·' may be written for '.', and '~' is the
conjugate. Positions in errors are 1-based character offsets.
"""

from dataclasses import dataclass

from src.arena import Arena, GameId, get_arena

END = "end of input"

CONSTANTS = {"0": "zero", "*": "star", "∗": "star", "1": "one"}
EMPTY_MARKERS = {".", "·"}
TERM_START = frozenset({"0", "*", "∗", "1", "{", "(", "~"})


class GameSyntaxError(ValueError):
    """
    Exception raised when a game expression cannot be parsed.
    """

    def __init__(self, position: int, expected: frozenset, found: str) -> None:
        super().__init__(
            f"at position {position}: expected one of "
            f"{', '.join(repr(t) for t in sorted(expected))}, found {found}"
        )
        self.position = position
        self.expected = expected
        self.found = found


@dataclass(frozen=True)
class Constant:
    name: str
    position: int


@dataclass(frozen=True)
class Braces:
    left: tuple
    right: tuple
    position: int


@dataclass(frozen=True)
class Conjugate:
    operand: object
    position: int


@dataclass(frozen=True)
class Sum:
    terms: tuple
    position: int


GameExpression = Constant | Braces | Conjugate | Sum


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.index = 0

    def peek(self) -> str:
        while self.index < len(self.text) and self.text[self.index].isspace():
            self.index += 1
        return self.text[self.index] if self.index < len(self.text) else ""

    @property
    def position(self) -> int:
        return self.index + 1

    def error(self, expected) -> GameSyntaxError:
        found = self.peek()
        return GameSyntaxError(
            self.position, frozenset(expected), repr(found) if found else END
        )

    def expect(self, token: str, alternatives=()) -> None:
        if self.peek() != token:
            raise self.error({token, *alternatives})
        self.index += 1

    def expr(self) -> GameExpression:
        self.peek()
        start = self.position
        terms = [self.term()]
        while self.peek() == "+":
            self.index += 1
            terms.append(self.term())
        return terms[0] if len(terms) == 1 else Sum(tuple(terms), start)

    def term(self) -> GameExpression:
        if self.peek() == "~":
            start = self.position
            self.index += 1
            return Conjugate(self.term(), start)
        return self.atom()

    def atom(self) -> GameExpression:
        token = self.peek()
        start = self.position

        if token in CONSTANTS:
            self.index += 1
            return Constant(CONSTANTS[token], start)

        if token == "{":
            self.index += 1
            left = self.option_list()
            self.expect("|", self._list_followers(left))
            right = self.option_list()
            self.expect("}", self._list_followers(right))
            return Braces(left, right, start)

        if token == "(":
            self.index += 1
            inner = self.expr()
            self.expect(")", {"+"})
            return inner

        raise self.error(TERM_START)

    def option_list(self) -> tuple:
        token = self.peek()
        if token in EMPTY_MARKERS:
            self.index += 1
            return ()
        if token not in TERM_START:
            return ()

        items = [self.expr()]
        while self.peek() == ",":
            self.index += 1
            items.append(self.expr())
        return tuple(items)

    @staticmethod
    def _list_followers(items: tuple) -> set:
        # Tokens that could have continued the list just read
        return {",", "+"} if items else set(TERM_START) | {"."}


def parse(text: str) -> GameExpression:
    """
    Parse a game expression.

    Args:
        text (str): The expression, e.g. "{0,*|~1} + *".

    Returns:
        GameExpression: The parse tree.

    Raises:
        GameSyntaxError: If the text is not a well formed expression.
    """
    parser = _Parser(text)
    tree = parser.expr()
    if parser.peek():
        raise parser.error({"+"})
    return tree


def elaborate(tree: GameExpression, arena: Arena | None = None) -> GameId:
    """
    Intern the game a parse tree denotes.

    Args:
        tree (GameExpression): A tree returned by parse.
        arena (Arena | None): The arena to intern in.

    Returns:
        GameId: The game. Sums are formal, not simplified.
    """
    arena = arena or get_arena()
    match tree:
        case Constant(name=name):
            return getattr(arena, name)
        case Braces(left=left, right=right):
            return arena.intern(
                [elaborate(x, arena) for x in left],
                [elaborate(x, arena) for x in right],
            )
        case Conjugate(operand=operand):
            return arena.conjugate(elaborate(operand, arena))
        case Sum(terms=terms):
            return arena.sum_all(elaborate(x, arena) for x in terms)
    raise TypeError(f"Not a game expression: {tree!r}")


def parse_game(text: str, arena: Arena | None = None) -> GameId:
    """Parse and elaborate in one step."""
    return elaborate(parse(text), arena=arena)
