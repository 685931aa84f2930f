"""The sequence bijection between 231-avoiding and 312-avoiding placements.

The border sequence of an avoiding full placement determines the placement,
so transforming sequences transforms placements: ``plus_transform`` flips a
231-style sequence into a 312-style one (and back), and the reconstruction
routines rebuild the unique avoiding placement from its sequence.  ``alpha``
and ``beta`` chain the two and are mutually inverse; ``compact``/``expand``
extend them to arbitrary (partial) rook placements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .board import Board
from .conditions import check_231, check_312
from .errors import (
    ConditionViolation,
    InvalidPlacement,
    LengthMismatch,
    NotAvoider,
    OutOfRange,
    ReconstructionFailure,
)
from .placement import (
    PATTERN_231,
    PATTERN_312,
    FullPlacement,
    Placement,
    inverse_placement,
    pattern_witness,
    s_sequence,
)


def plus_transform(board: Board, seq) -> tuple[int, ...]:
    """Send the value s at a border vertex to 0 if s == 0, else N + 1 - s,
    where N is the board's marker-count profile at that vertex.

    An involution on the sequences realized by full placements.
    """
    seq = tuple(seq)
    profile = board.marker_count_profile
    if len(seq) != len(profile):
        raise LengthMismatch(f"sequence has {len(seq)} values, board needs {len(profile)}")
    for i, (s, n) in enumerate(zip(seq, profile)):
        if not 0 <= s <= n:
            raise OutOfRange(f"value {s} at border index {i} outside [0, {n}]")
    return tuple(0 if s == 0 else n + 1 - s for s, n in zip(seq, profile))


def reconstruct_231(board: Board, seq, *, check: bool = True,
                    verify: bool = True) -> FullPlacement:
    """Rebuild the unique 231-avoiding full placement with the given border sequence.

    Works right to left.  With b_r..b_0 the values down the right-hand column's
    vertex line and a_r the value just left of the column top, the column's
    marker sits in the highest row j with b_j > b_{j-1}.  Deleting that column
    and row leaves a smaller board whose sequence keeps the prefix through a_r
    and continues with a_r repeated down to row j, then b_{j-1}..b_0.

    ``check`` runs the 231-conditions up front; ``verify`` re-derives the
    sequence of the result as a self-check.
    """
    seq = tuple(seq)
    expected = board.n_cols + board.n_rows + 1
    if len(seq) != expected:
        raise LengthMismatch(f"sequence has {len(seq)} values, board needs {expected}")
    if check:
        if not board.square_bounded():
            raise ConditionViolation(
                "board's longest row and column differ; no full placement exists")
        report = check_231(board, seq)
        if not report.verdict:
            raise ConditionViolation("; ".join(report.lines()))

    heights = list(board.heights)
    work = list(seq)
    rows_alive = list(range(1, board.n_rows + 1))
    marker_rows: dict[int, int] = {}
    while heights:
        n = len(heights)
        r = heights[-1]
        if len(work) != n + heights[0] + 1 or len(rows_alive) != heights[0]:
            raise ReconstructionFailure("working sequence out of step with working board")
        tail = work[-(r + 1):]  # tail[i] = value at vertex (n, r - i)
        a_top = work[-(r + 2)]
        j = next((jj for jj in range(r, 0, -1) if tail[r - jj] > tail[r - jj + 1]), 0)
        if j == 0:
            raise ReconstructionFailure(f"no admissible marker row for column {n}")
        marker_rows[n] = rows_alive.pop(j - 1)
        new_heights = [h - 1 if h >= j else h for h in heights[:-1]]
        if any(h < 1 for h in new_heights):
            raise ReconstructionFailure("row deletion empties a column; sequence not realizable")
        new_tail = [a_top if y >= j else tail[r - y] for y in range(r - 2, -1, -1)]
        work = work[:-(r + 1)] + new_tail
        heights = new_heights

    if work != [0] or rows_alive:
        raise ReconstructionFailure("sequence does not reduce to the empty board")
    try:
        result = FullPlacement(tuple(marker_rows[c] for c in range(1, board.n_cols + 1)))
        result.validate_on(board)
    except InvalidPlacement as exc:
        raise ReconstructionFailure(str(exc)) from exc
    if verify and s_sequence(board, result) != seq:
        raise ReconstructionFailure("reconstructed placement does not reproduce the sequence")
    return result


def reconstruct_312(board: Board, seq, *, check: bool = True,
                    verify: bool = True) -> FullPlacement:
    """Rebuild the unique 312-avoiding full placement with the given border sequence.

    Runs the 231 reconstruction on the conjugate board with the reversed
    sequence and reflects the result back.
    """
    seq = tuple(seq)
    expected = board.n_cols + board.n_rows + 1
    if len(seq) != expected:
        raise LengthMismatch(f"sequence has {len(seq)} values, board needs {expected}")
    if check:
        if not board.square_bounded():
            raise ConditionViolation(
                "board's longest row and column differ; no full placement exists")
        report = check_312(board, seq)
        if not report.verdict:
            raise ConditionViolation("; ".join(report.lines()))
    conj = board.conjugate()
    mirror = reconstruct_231(conj, tuple(reversed(seq)), check=False, verify=False)
    result = inverse_placement(conj, mirror)
    if verify and s_sequence(board, result) != seq:
        raise ReconstructionFailure("reconstructed placement does not reproduce the sequence")
    return result


def alpha(board: Board, placement: FullPlacement, *, check: bool = True,
          verify: bool = True) -> FullPlacement:
    """Map a 231-avoiding full placement to the 312-avoiding one whose border
    sequence is the plus_transform of the input's."""
    if check:
        witness = pattern_witness(board, placement, PATTERN_231)
        if witness is not None:
            raise NotAvoider(f"placement contains 231 at markers {_witness_text(witness)}")
    image_seq = plus_transform(board, s_sequence(board, placement))
    return reconstruct_312(board, image_seq, check=False, verify=verify)


def beta(board: Board, placement: FullPlacement, *, check: bool = True,
         verify: bool = True) -> FullPlacement:
    """Inverse of ``alpha``: 312-avoiders to 231-avoiders via plus_transform."""
    if check:
        witness = pattern_witness(board, placement, PATTERN_312)
        if witness is not None:
            raise NotAvoider(f"placement contains 312 at markers {_witness_text(witness)}")
    image_seq = plus_transform(board, s_sequence(board, placement))
    return reconstruct_231(board, image_seq, check=False, verify=verify)


def _witness_text(witness) -> str:
    return ",".join(f"({c},{r})" for c, r in witness)


@dataclass(frozen=True)
class CompactionContext:
    """Occupied columns/rows of a placement and the board they compact to.

    ``compact_board`` is None exactly for the empty placement.
    """

    occupied_cols: tuple[int, ...]
    occupied_rows: tuple[int, ...]
    compact_board: Board | None


def compact(board: Board, placement) -> tuple[CompactionContext, FullPlacement]:
    """Delete unoccupied rows and columns, sliding the rest down and left.

    The surviving squares form a smaller Ferrers board on which the re-indexed
    markers are a full placement.  Compaction preserves 231- and 312-avoidance
    in both directions.
    """
    placement.validate_on(board)
    markers = sorted(placement.markers)
    if not markers:
        return CompactionContext((), (), None), FullPlacement(())
    cols = tuple(sorted(c for c, _ in markers))
    rows = tuple(sorted(r for _, r in markers))
    heights = tuple(sum(1 for r in rows if r <= board.heights[c - 1]) for c in cols)
    compact_board = Board(heights)
    row_rank = {r: i for i, r in enumerate(rows, start=1)}
    full = FullPlacement(tuple(row_rank[r] for _, r in markers))
    full.validate_on(compact_board)
    return CompactionContext(cols, rows, compact_board), full


def expand(context: CompactionContext, placement: FullPlacement) -> Placement:
    """Undo ``compact``: re-index a full placement through the recorded rows/columns."""
    return Placement(frozenset(
        (context.occupied_cols[c - 1], context.occupied_rows[r - 1])
        for c, r in enumerate(placement.perm, start=1)))


def alpha_general(board: Board, placement, *, check: bool = True) -> Placement:
    """Apply ``alpha`` to any 231-avoiding rook placement via compaction.

    The image occupies the same rows and columns as the input and avoids 312;
    ``beta_general`` inverts it.
    """
    if check:
        witness = pattern_witness(board, placement, PATTERN_231)
        if witness is not None:
            raise NotAvoider(f"placement contains 231 at markers {_witness_text(witness)}")
    if not placement.markers:
        return Placement(frozenset())
    context, full = compact(board, placement)
    return expand(context, alpha(context.compact_board, full, check=False))


def beta_general(board: Board, placement, *, check: bool = True) -> Placement:
    """Inverse of ``alpha_general`` on 312-avoiding rook placements."""
    if check:
        witness = pattern_witness(board, placement, PATTERN_312)
        if witness is not None:
            raise NotAvoider(f"placement contains 312 at markers {_witness_text(witness)}")
    if not placement.markers:
        return Placement(frozenset())
    context, full = compact(board, placement)
    return expand(context, beta(context.compact_board, full, check=False))
