"""Rook placements, pattern avoidance, and the border increasing-chain statistic."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .board import Board, Vertex
from .errors import InvalidPlacement, ParseError


@dataclass(frozen=True)
class Pattern:
    """A permutation word used as the avoidance target, e.g. (2, 3, 1)."""

    word: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(self.word))
        k = len(self.word)
        if k == 0 or sorted(self.word) != list(range(1, k + 1)):
            raise ParseError(f"{self.word!r} is not a permutation of 1..{k}")

    def __str__(self) -> str:
        return "".join(str(v) for v in self.word)

    @classmethod
    def parse(cls, text: str) -> Pattern:
        if not text.isdigit():
            raise ParseError(f"bad pattern {text!r}")
        return cls(tuple(int(ch) for ch in text))


PATTERN_231 = Pattern((2, 3, 1))
PATTERN_312 = Pattern((3, 1, 2))


@dataclass(frozen=True)
class Placement:
    """A rook placement: marker squares, at most one per row and per column."""

    markers: frozenset[tuple[int, int]]

    def __post_init__(self):
        object.__setattr__(self, "markers", frozenset(self.markers))

    def validate_on(self, board: Board) -> None:
        cols = [c for c, _ in self.markers]
        rows = [r for _, r in self.markers]
        if len(set(cols)) != len(cols):
            raise InvalidPlacement("two markers share a column")
        if len(set(rows)) != len(rows):
            raise InvalidPlacement("two markers share a row")
        for c, r in self.markers:
            if not board.contains_square(c, r):
                raise InvalidPlacement(f"marker ({c},{r}) is outside the board")

    def is_full_on(self, board: Board) -> bool:
        n = board.n_cols
        return (board.n_rows == n and len(self.markers) == n
                and {c for c, _ in self.markers} == set(range(1, n + 1))
                and {r for _, r in self.markers} == set(range(1, n + 1)))


@dataclass(frozen=True)
class FullPlacement:
    """A full rook placement; ``perm[i]`` is the marker row of column i+1."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidPlacement(f"{self.perm!r} is not a permutation of 1..{n}")

    def __str__(self) -> str:
        return "".join(str(v) for v in self.perm)

    @property
    def markers(self) -> frozenset[tuple[int, int]]:
        return frozenset((c, r) for c, r in enumerate(self.perm, start=1))

    def validate_on(self, board: Board) -> None:
        n = len(self.perm)
        if board.n_cols != n or board.n_rows != n:
            raise InvalidPlacement(
                f"full placement of size {n} does not fit a {board.n_cols}x{board.n_rows} board")
        for col, row in enumerate(self.perm, start=1):
            if row > board.heights[col - 1]:
                raise InvalidPlacement(f"marker ({col},{row}) is outside the board")

    @classmethod
    def from_markers(cls, markers) -> FullPlacement:
        by_col = dict(sorted(markers))
        if sorted(by_col) != list(range(1, len(by_col) + 1)):
            raise InvalidPlacement("markers do not cover consecutive columns")
        return cls(tuple(by_col[c] for c in sorted(by_col)))


def _validated_markers(board: Board, placement) -> frozenset[tuple[int, int]]:
    placement.validate_on(board)
    return placement.markers


def pattern_witness(board: Board, placement, pattern: Pattern):
    """First marker tuple order-isomorphic to ``pattern`` with its bounding
    vertex on the board, or None when the placement avoids the pattern.

    Using the bounding vertex (max column, max row) is equivalent to checking
    the restriction to R(V) for every border vertex V, since the rectangles
    R(V) are exactly the maximal rectangles inside the board.
    """
    markers = sorted(_validated_markers(board, placement))
    k = len(pattern.word)
    for combo in combinations(markers, k):
        rows = tuple(r for _, r in combo)
        if not board.contains_square(combo[-1][0], max(rows)):
            continue
        order = sorted(rows)
        if tuple(order.index(r) + 1 for r in rows) == pattern.word:
            return combo
    return None


def avoids(board: Board, placement, pattern: Pattern) -> bool:
    return pattern_witness(board, placement, pattern) is None


def s_grid(board: Board, placement) -> dict[Vertex, int]:
    """Longest increasing marker chain inside R(V), for every vertex V of the board.

    Computed by the local growth rule: zero along the left and bottom edges;
    a marked square forces NE = SW + 1, an unmarked square NE = max(NW, SE).
    """
    markers = _validated_markers(board, placement)
    values: dict[Vertex, int] = {}
    for x in range(board.n_cols + 1):
        values[Vertex(x, 0)] = 0
    for y in range(board.n_rows + 1):
        values[Vertex(0, y)] = 0
    for col in range(1, board.n_cols + 1):
        for row in range(1, board.heights[col - 1] + 1):
            if (col, row) in markers:
                v = values[Vertex(col - 1, row - 1)] + 1
            else:
                v = max(values[Vertex(col - 1, row)], values[Vertex(col, row - 1)])
            values[Vertex(col, row)] = v
    return values


def s_sequence(board: Board, placement) -> tuple[int, ...]:
    """The chain statistic read along the border, top-left corner first."""
    grid = s_grid(board, placement)
    return tuple(grid[v] for v in board.border_path.vertices)


def inverse_placement(board: Board, placement: FullPlacement) -> FullPlacement:
    """Reflect a full placement across the main diagonal, onto the conjugate board."""
    placement.validate_on(board)
    inverse = [0] * len(placement.perm)
    for col, row in enumerate(placement.perm, start=1):
        inverse[row - 1] = col
    out = FullPlacement(tuple(inverse))
    out.validate_on(board.conjugate())
    return out


def parse_placement(text: str, board: Board):
    """Parse a placement: a permutation word (``312``) or ``col:row`` pairs.

    The word form is only accepted on boards with at most 9 columns.  An
    empty string parses as the empty placement.
    """
    text = text.strip()
    if not text:
        return Placement(frozenset())
    if ":" in text:
        markers = set()
        for chunk in text.split(","):
            try:
                c, r = chunk.split(":")
                marker = (int(c), int(r))
            except ValueError as exc:
                raise ParseError(f"bad marker {chunk!r}: expected col:row") from exc
            if marker in markers:
                raise ParseError(f"duplicate marker {chunk.strip()!r}")
            markers.add(marker)
        placement = Placement(frozenset(markers))
        placement.validate_on(board)
        return placement
    if not text.isdigit():
        raise ParseError(f"bad placement {text!r}")
    if board.n_cols > 9:
        raise ParseError("permutation words are ambiguous beyond 9 columns; use col:row pairs")
    if len(text) != board.n_cols:
        raise ParseError(
            f"placement word {text!r} has {len(text)} letters, board has {board.n_cols} columns")
    placement = FullPlacement(tuple(int(ch) for ch in text))
    placement.validate_on(board)
    return placement


def format_placement(placement, board: Board | None = None) -> str:
    """Render a placement: permutation word when full and small, else col:row pairs."""
    if isinstance(placement, FullPlacement):
        if len(placement.perm) <= 9:
            return str(placement)
        return ",".join(f"{c}:{r}" for c, r in sorted(placement.markers))
    markers = sorted(placement.markers)
    if board is not None and placement.is_full_on(board) and board.n_cols <= 9:
        return "".join(str(r) for _, r in markers)
    return ",".join(f"{c}:{r}" for c, r in markers)
