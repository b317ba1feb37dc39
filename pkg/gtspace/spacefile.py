"""
Line-oriented space files:

    space E1
    points a b c d
    open
    open a b

`#` starts a comment and a bare `open` is the empty set. Several blocks may
follow each other in one file; each starts with its own `space` line.
"""
from pathlib import Path

from gtspace.bitset import Subset
from gtspace.core import GTSpace, make_space
from gtspace.errors import DuplicatePoint, GTSpaceError, NotUnionClosed, SpaceSyntaxError, UnknownPoint


def _content_lines(text: str):
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split('#', 1)[0].strip()
        if line:
            yield number, line.split()


def _located(error: GTSpaceError, line: int) -> GTSpaceError:
    message = str(error).removeprefix("Error: ")
    error.line = line
    error.args = (f"Error: line {line}: {message}",)
    return error


def _build(block: list[tuple[int, list[str]]]) -> GTSpace:
    (start, header), rest = block[0], block[1:]
    if len(header) != 2:
        raise SpaceSyntaxError(start, "expected 'space <name>'")
    name = header[1]

    if not rest or rest[0][1][0] != 'points':
        raise SpaceSyntaxError(rest[0][0] if rest else start, "expected 'points <p1> <p2> ...'")
    points_line, points = rest[0][0], rest[0][1][1:]
    if not points:
        raise SpaceSyntaxError(points_line, "a space needs at least one point")
    if len(set(points)) != len(points):
        duplicate = next(point for point in points if points.count(point) > 1)
        raise _located(DuplicatePoint(duplicate), points_line)

    opens = []
    for number, tokens in rest[1:]:
        if tokens[0] != 'open':
            raise SpaceSyntaxError(number, f"unexpected '{tokens[0]}', expected 'open'")
        unknown = [token for token in tokens[1:] if token not in points]
        if unknown:
            raise _located(UnknownPoint(unknown[0]), number)
        opens.append(tokens[1:])

    try:
        return make_space(points, opens, name)
    except NotUnionClosed as e:
        raise _located(e, start)


def parse_spaces(text: str) -> list[GTSpace]:
    blocks = []
    for number, tokens in _content_lines(text):
        if tokens[0] == 'space':
            blocks.append([(number, tokens)])
        elif not blocks:
            raise SpaceSyntaxError(number, "expected 'space <name>'")
        else:
            blocks[-1].append((number, tokens))
    if not blocks:
        raise SpaceSyntaxError(1, "no space block found")
    return [_build(block) for block in blocks]


def parse_space(text: str) -> GTSpace:
    spaces = parse_spaces(text)
    if len(spaces) != 1:
        raise SpaceSyntaxError(1, f"expected one space block, found {len(spaces)}")
    return spaces[0]


def parse_witness(text: str) -> tuple[GTSpace, dict[str, Subset]]:
    """A space block followed by `set <name> {p,q}` lines, as printed with witnesses."""
    body, named = [], []
    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split('#', 1)[0].split()
        if tokens and tokens[0] == 'set':
            if len(tokens) != 3:
                raise SpaceSyntaxError(number, "expected 'set <name> {p,q}'")
            named.append((number, tokens[1], tokens[2]))
            # keep line numbers aligned for space errors
            body.append("")
        else:
            body.append(raw)
    space = parse_space("\n".join(body))

    sets = {}
    for number, name, value in named:
        members = value.strip('{}')
        try:
            sets[name] = space.ground.subset(members.split(',') if members else [])
        except UnknownPoint as e:
            raise _located(e, number)
    return space, sets


def read_space(path: Path) -> GTSpace:
    path = Path(path)
    if not path.exists():
        raise FileNotFoundError(f"Error: space file '{path}' not found")
    try:
        text = path.read_text(encoding='utf-8')
    except UnicodeDecodeError as e:
        line = e.object.count(b"\n", 0, e.start) + 1
        raise SpaceSyntaxError(line, f"not valid UTF-8 (byte {e.start})") from e
    return parse_space(text)


def render_space(space: GTSpace, name: str = "") -> str:
    lines = [f"space {name or space.name or 'X'}", "points " + " ".join(space.ground.labels)]
    for member in space.gamma:
        lines.append(" ".join(["open"] + space.ground.names(member)))
    return "\n".join(lines) + "\n"
