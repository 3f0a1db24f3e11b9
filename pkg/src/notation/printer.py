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
Printer for game expressions, the inverse of the parser on GameIds.
"""

from src.arena import Arena, GameId, get_arena


def print_game(g: GameId, arena: Arena | None = None) -> str:
    """
    Render a game in brace notation.

    The day-1 games print as 0, *, 1 and ~1; every other game prints as
    {left|right} with options in structural order.

    Args:
        g (GameId): The game.
        arena (Arena | None): The arena the id belongs to.

    Returns:
        str: Text that parses back to the same GameId.
    """
    arena = arena or get_arena()
    return _print(arena, arena.check(g))


def _print(arena: Arena, g: GameId) -> str:
    cache = arena.cache("notation.print")
    found = cache.get(g)
    if found is not None:
        return found

    aliases = {
        arena.zero: "0",
        arena.star: "*",
        arena.one: "1",
        arena.one_bar: "~1",
    }
    text = aliases.get(g)
    if text is None:
        left = ",".join(_print(arena, x) for x in arena.left_options(g))
        right = ",".join(_print(arena, x) for x in arena.right_options(g))
        text = f"{{{left}|{right}}}"

    cache[g] = text
    return text
