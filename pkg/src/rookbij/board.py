"""Ferrers board geometry: borders, marker-count profiles, diagonals, conjugation.

A board is stored as its weakly decreasing column heights (a partition).
Columns and rows are 1-indexed; lattice vertices are 0-indexed with the
origin at the bottom-left corner of the board, so square (c, r) occupies
the unit square whose NE corner is the vertex (c, r).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import ParseError

RIGHT = "R"
DOWN = "D"


class Vertex(NamedTuple):
    x: int
    y: int


def format_vertex(v: Vertex) -> str:
    return f"({v.x},{v.y})"


@dataclass(frozen=True)
class BorderPath:
    """The right/up border walked from the top-left corner down to (n_cols, 0).

    ``steps[i]`` is the direction taken from ``vertices[i]`` to ``vertices[i+1]``.
    """

    vertices: tuple[Vertex, ...]
    steps: tuple[str, ...]

    def __len__(self) -> int:
        return len(self.vertices)

    def index_of(self, v: Vertex) -> int:
        return self.vertices.index(v)


@dataclass(frozen=True)
class Board:
    """A Ferrers board given by weakly decreasing, positive column heights."""

    heights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "heights", tuple(self.heights))
        if not self.heights:
            raise ParseError("a board needs at least one column")
        if any(h < 1 for h in self.heights):
            raise ParseError("column heights must be positive")
        if any(a < b for a, b in zip(self.heights, self.heights[1:])):
            raise ParseError("column heights must be weakly decreasing")

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.heights)

    @property
    def n_cols(self) -> int:
        return len(self.heights)

    @property
    def n_rows(self) -> int:
        return self.heights[0]

    def square_bounded(self) -> bool:
        """True when the longest row and longest column have the same length."""
        return self.n_rows == self.n_cols

    def contains_square(self, col: int, row: int) -> bool:
        return 1 <= col <= self.n_cols and 1 <= row <= self.heights[col - 1]

    def contains_vertex(self, v: Vertex) -> bool:
        x, y = v
        if not (0 <= x <= self.n_cols and 0 <= y <= self.n_rows):
            return False
        return x == 0 or y == 0 or y <= self.heights[x - 1]

    @cached_property
    def border_path(self) -> BorderPath:
        """The unique monotone lattice path along the right/up border."""
        x, y = 0, self.n_rows
        vertices = [Vertex(x, y)]
        steps = []
        while (x, y) != (self.n_cols, 0):
            if x < self.n_cols and self.heights[x] == y:
                x += 1
                steps.append(RIGHT)
            else:
                y -= 1
                steps.append(DOWN)
            vertices.append(Vertex(x, y))
        return BorderPath(tuple(vertices), tuple(steps))

    @cached_property
    def marker_count_profile(self) -> tuple[int, ...]:
        """Markers of any full placement inside R(V), per border vertex.

        Pure geometry: 0 at the top-left corner, +1 per rightward step, -1 per
        downward step.  Entries can go negative exactly when the board admits
        no full placement.
        """
        values = [0]
        for step in self.border_path.steps:
            values.append(values[-1] + (1 if step == RIGHT else -1))
        return tuple(values)

    def conjugate(self) -> Board:
        """Reflect the board across the main diagonal."""
        return Board(tuple(sum(1 for h in self.heights if h >= y)
                           for y in range(1, self.n_rows + 1)))

    @cached_property
    def diagonal_pairs(self) -> tuple[tuple[int, int], ...]:
        """Pairs of border indices (i, j), i < j, joined by an in-board diagonal.

        The open slope -1 segment from vertices[i] to vertices[j] must cross
        only squares of the board; endpoints may touch the border.  Includes
        non-maximal diagonals.
        """
        verts = self.border_path.vertices
        pairs = []
        for i, (x1, y1) in enumerate(verts):
            for j in range(i + 1, len(verts)):
                x2, y2 = verts[j]
                d = x2 - x1
                if d >= 1 and y1 - y2 == d and all(
                    self.contains_square(x1 + k + 1, y1 - k) for k in range(d)
                ):
                    pairs.append((i, j))
        return tuple(pairs)

    def admits_full_placement(self) -> bool:
        """Existence of a full rook placement (Hall-type distinct-representatives test)."""
        n = self.n_cols
        if self.n_rows != n:
            return False
        return all(self.heights[i] >= n - i for i in range(n))


def parse_board(text: str) -> Board:
    """Parse comma-separated column heights, e.g. ``3,2,1``."""
    parts = [p.strip() for p in text.split(",") if p.strip()]
    if not parts:
        raise ParseError("empty board")
    try:
        heights = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ParseError(f"bad board {text!r}: heights must be integers") from exc
    return Board(heights)
