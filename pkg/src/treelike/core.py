"""Diagrams, tableaux and their statistics.

A border path walks from the top-right corner to the bottom-left one; its
steps are labeled 1..n in walking order. South steps are rows (top to
bottom), west steps are columns (right to left), so column labels decrease
from left to right. Cell (i, j) exists exactly when row label i is smaller
than column label j.

Fillings are stored as one bitmask per row, top to bottom; bit c is the
cell at column index c, counted from the left.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterator, NamedTuple

SOUTH = "S"
WEST = "W"


class Cell(NamedTuple):
    """A cell addressed by (row label, column label)."""

    row: int
    col: int


class StatRecord(NamedTuple):
    corners: int
    occupiedCorners: int
    nonOccupiedCorners: int
    top: int
    left: int
    firstColumnPoints: int
    firstRowPoints: int


@dataclass(frozen=True)
class BorderPath:
    """Southeast border of a diagram, as a string over {S, W}."""

    steps: str

    def __post_init__(self):
        if not self.steps:
            raise ValueError("empty step sequence")
        bad = set(self.steps) - {SOUTH, WEST}
        if bad:
            raise ValueError(f"invalid steps: {sorted(bad)!r}")

    @property
    def length(self) -> int:
        return len(self.steps)

    @cached_property
    def row_labels(self) -> tuple[int, ...]:
        """Labels of the south steps, increasing = top to bottom."""
        return tuple(i + 1 for i, ch in enumerate(self.steps) if ch == SOUTH)

    @cached_property
    def col_labels(self) -> tuple[int, ...]:
        """Labels of the west steps, in increasing label order."""
        return tuple(i + 1 for i, ch in enumerate(self.steps) if ch == WEST)

    @property
    def num_rows(self) -> int:
        return len(self.row_labels)

    @property
    def num_cols(self) -> int:
        return len(self.col_labels)

    @cached_property
    def row_lengths(self) -> tuple[int, ...]:
        """Cells per row; row i holds the columns with labels above i."""
        cols = self.col_labels
        out = []
        for r in self.row_labels:
            lo, hi = 0, len(cols)
            while lo < hi:
                mid = (lo + hi) // 2
                if cols[mid] > r:
                    hi = mid
                else:
                    lo = mid + 1
            out.append(len(cols) - lo)
        return tuple(out)

    def row_index(self, row_label: int) -> int:
        return self.row_labels.index(row_label)

    def col_index(self, col_label: int) -> int:
        # columns run left to right by decreasing label
        return sum(1 for c in self.col_labels if c > col_label)

    def col_label_at(self, col_index: int) -> int:
        return sorted(self.col_labels, reverse=True)[col_index]

    def cell_exists(self, row_label: int, col_label: int) -> bool:
        return (
            row_label in set(self.row_labels)
            and col_label in set(self.col_labels)
            and row_label < col_label
        )

    @cached_property
    def corner_cells(self) -> tuple[Cell, ...]:
        s = self.steps
        return tuple(
            Cell(i + 1, i + 2)
            for i in range(len(s) - 1)
            if s[i] == SOUTH and s[i + 1] == WEST
        )

    @cached_property
    def corner_grid_positions(self) -> tuple[tuple[int, int], ...]:
        """Corners as (row index, column index); each is the last cell of its row."""
        out = []
        for cell in self.corner_cells:
            r = self.row_index(cell.row)
            out.append((r, self.row_lengths[r] - 1))
        return tuple(out)


def build_path(steps: str) -> BorderPath:
    return BorderPath(steps)


def corners(path: BorderPath) -> list[Cell]:
    return list(path.corner_cells)


def _popcount(x: int) -> int:
    return x.bit_count()


@dataclass(frozen=True)
class TreeLikeTableau:
    """A dotted diagram: root dot, one-parent rule, full row/column coverage.

    Two degenerate size-0 values exist so that corner cutting is total: a
    single empty row (path "S") and a single empty column (path "W").
    """

    path: BorderPath
    rows: tuple[int, ...]

    def __post_init__(self):
        steps = self.path.steps
        if steps == SOUTH:
            if self.rows != (0,):
                raise ValueError("single-row degenerate tableau must be empty")
            return
        if steps == WEST:
            if self.rows != ():
                raise ValueError("single-column degenerate tableau must be empty")
            return
        if steps[0] != SOUTH:
            raise ValueError("first step must be South")
        if steps[-1] != WEST:
            raise ValueError("last step must be West")
        lengths = self.path.row_lengths
        if len(self.rows) != len(lengths):
            raise ValueError("row count does not match path")
        for mask, lam in zip(self.rows, lengths):
            if mask < 0 or mask >> lam:
                raise ValueError("dot outside its row")
        if not self.rows or not (self.rows[0] & 1):
            raise ValueError("top-left root cell must be dotted")
        width = self.path.num_cols
        above = 0
        total = 0
        for r, mask in enumerate(self.rows):
            if mask == 0:
                raise ValueError(f"row {r + 1} has no dot")
            m = mask
            while m:
                c = (m & -m).bit_length() - 1
                m &= m - 1
                total += 1
                if r == 0 and c == 0:
                    continue
                has_left = bool(mask & ((1 << c) - 1))
                has_above = bool((above >> c) & 1)
                if has_left == has_above:
                    where = "both a left and an above dot" if has_left else "no parent dot"
                    raise ValueError(f"cell at row {r + 1}, column index {c} has {where}")
            above |= mask
        if above != (1 << width) - 1:
            raise ValueError("some column has no dot")
        if total != len(steps) - 1:
            raise ValueError("dot count must equal path length minus one")

    @property
    def size(self) -> int:
        return sum(_popcount(m) for m in self.rows)

    @property
    def is_degenerate(self) -> bool:
        return self.size == 0

    @cached_property
    def dots(self) -> frozenset[Cell]:
        out = []
        cols_desc = sorted(self.path.col_labels, reverse=True)
        for r, mask in enumerate(self.rows):
            row_label = self.path.row_labels[r]
            m = mask
            while m:
                c = (m & -m).bit_length() - 1
                m &= m - 1
                out.append(Cell(row_label, cols_desc[c]))
        return frozenset(out)

    def has_dot(self, cell: Cell) -> bool:
        r = self.path.row_index(cell.row)
        return bool((self.rows[r] >> self.path.col_index(cell.col)) & 1)


@dataclass(frozen=True)
class PermutationTableau:
    """A 0/1-filled diagram: every column holds a 1, and no 0 has a 1
    above it together with a 1 to its left. Rows of length zero are fine."""

    path: BorderPath
    rows: tuple[int, ...]  # bitmask of the 1s per row

    def __post_init__(self):
        steps = self.path.steps
        if steps[0] != SOUTH:
            raise ValueError("first step must be South")
        lengths = self.path.row_lengths
        if len(self.rows) != len(lengths):
            raise ValueError("row count does not match path")
        for mask, lam in zip(self.rows, lengths):
            if mask < 0 or mask >> lam:
                raise ValueError("1 outside its row")
        width = self.path.num_cols
        above = 0
        for r, mask in enumerate(self.rows):
            lam = lengths[r]
            for c in range(lam):
                if (mask >> c) & 1:
                    continue
                if (above >> c) & 1 and mask & ((1 << c) - 1):
                    raise ValueError(
                        f"cell at row {r + 1}, column index {c} is 0 with a 1 above and a 1 to its left"
                    )
            above |= mask
        if above != (1 << width) - 1:
            raise ValueError("some column has no 1")

    @property
    def size(self) -> int:
        return self.path.length


@dataclass(frozen=True)
class NonAmbiguousTree:
    """A rectangular tree-like tableau; height/width count rows/columns minus one."""

    tableau: TreeLikeTableau

    def __post_init__(self):
        t = self.tableau
        if t.is_degenerate:
            raise ValueError("tree must have at least one dot")
        lengths = set(t.path.row_lengths)
        if len(lengths) != 1:
            raise ValueError("shape is not rectangular")

    @property
    def height(self) -> int:
        return self.tableau.path.num_rows - 1

    @property
    def width(self) -> int:
        return self.tableau.path.num_cols - 1


def stats_of(t: TreeLikeTableau) -> StatRecord:
    """All corner and first-row/first-column statistics of a tableau."""
    occ = 0
    cor = len(t.path.corner_cells)
    for r, c in t.path.corner_grid_positions:
        if (t.rows[r] >> c) & 1:
            occ += 1
    fr = _popcount(t.rows[0]) if t.rows else 0
    fc = sum(1 for m in t.rows if m & 1)
    return StatRecord(
        corners=cor,
        occupiedCorners=occ,
        nonOccupiedCorners=cor - occ,
        top=fr - 1,
        left=fc - 1,
        firstColumnPoints=fc,
        firstRowPoints=fr,
    )


NOC_CLASS_AB = "AB"
NOC_CLASS_A1 = "A1"
NOC_CLASS_1B = "1B"
NOC_CLASS_ONE_ONE = "OneOne"


def noc_class(t: TreeLikeTableau, c: Cell) -> str:
    """Classify an undotted corner by where the dots of its row and column sit.

    Column test: every dot above the corner in its column is in row 1.
    Row test: every dot to the corner's left in its row is in the first
    column. Both, only the column test, only the row test, or neither give
    AB, A1, 1B, OneOne respectively.
    """
    if c not in t.path.corner_cells:
        raise ValueError(f"{c} is not a corner")
    r = t.path.row_index(c.row)
    ci = t.path.col_index(c.col)
    if (t.rows[r] >> ci) & 1:
        raise ValueError(f"{c} is an occupied corner")
    col_ok = not any((t.rows[rr] >> ci) & 1 for rr in range(1, r))
    row_ok = t.rows[r] & ~1 == 0
    if col_ok and row_ok:
        return NOC_CLASS_AB
    if col_ok:
        return NOC_CLASS_A1
    if row_ok:
        return NOC_CLASS_1B
    return NOC_CLASS_ONE_ONE


EMPTY_ROW_TABLEAU = None  # assigned after class definitions
EMPTY_COL_TABLEAU = None


def transpose(t: TreeLikeTableau) -> TreeLikeTableau:
    """Reflect across the main diagonal; swaps rows with columns."""
    steps = "".join(SOUTH if ch == WEST else WEST for ch in reversed(t.path.steps))
    heights = [0] * t.path.num_cols
    for r, mask in enumerate(t.rows):
        m = mask
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            heights[c] |= 1 << r
    return TreeLikeTableau(BorderPath(steps), tuple(heights))


def transpose_nat(nat: NonAmbiguousTree) -> NonAmbiguousTree:
    return NonAmbiguousTree(transpose(nat.tableau))


# ---------------------------------------------------------------------------
# enumeration


def _tlt_paths(n: int) -> Iterator[str]:
    # lexicographic with S < W; first step S and last step W are forced
    if n == 1:
        yield SOUTH + WEST
        return
    for mid in range(1 << (n - 1)):
        inner = "".join(WEST if (mid >> (n - 2 - j)) & 1 else SOUTH for j in range(n - 1))
        yield SOUTH + inner + WEST


def _pt_paths(n: int) -> Iterator[str]:
    if n == 1:
        yield SOUTH
        return
    for mid in range(1 << (n - 1)):
        inner = "".join(WEST if (mid >> (n - 2 - j)) & 1 else SOUTH for j in range(n - 1))
        yield SOUTH + inner


def _col_last_rows(lengths: tuple[int, ...], width: int) -> list[int]:
    # bottom-most row holding each column index
    last = [-1] * width
    for r, lam in enumerate(lengths):
        for c in range(lam):
            last[c] = r
    return last


def tlt_fillings(lengths: tuple[int, ...], width: int) -> Iterator[tuple[int, ...]]:
    """All valid dot placements for a tree-like shape, in row-major order
    with empty before dot. Yields one bitmask per row."""
    k = len(lengths)
    col_last = _col_last_rows(lengths, width)
    rows: list[int] = [0] * k

    def fill(r: int, c: int, above: int, covered: int) -> Iterator[tuple[int, ...]]:
        if c == lengths[r]:
            if r + 1 == k:
                if covered == (1 << width) - 1:
                    yield tuple(rows)
            else:
                yield from fill(r + 1, 0, above | rows[r], covered)
            return
        mask = rows[r]
        root = r == 0 and c == 0
        if root:
            can_dot = True
        else:
            can_dot = bool(mask & ((1 << c) - 1)) != bool((above >> c) & 1)
        must_dot = (c == lengths[r] - 1 and mask == 0) or (
            col_last[c] == r and not (covered >> c) & 1
        )
        if not must_dot and not root:
            yield from fill(r, c + 1, above, covered)
        if can_dot:
            rows[r] = mask | (1 << c)
            yield from fill(r, c + 1, above, covered | (1 << c))
            rows[r] = mask

    yield from fill(0, 0, 0, 0)


def pt_fillings(lengths: tuple[int, ...], width: int) -> Iterator[tuple[int, ...]]:
    """All valid 0/1 fillings for a permutation-tableau shape, row-major,
    0 before 1."""
    k = len(lengths)
    col_last = _col_last_rows(lengths, width)
    rows: list[int] = [0] * k

    def fill(r: int, c: int, above: int, covered: int) -> Iterator[tuple[int, ...]]:
        if c == lengths[r]:
            if r + 1 == k:
                if covered == (1 << width) - 1:
                    yield tuple(rows)
            else:
                yield from fill(r + 1, 0, above | rows[r], covered)
            return
        mask = rows[r]
        zero_ok = not ((above >> c) & 1 and mask & ((1 << c) - 1))
        if zero_ok and not (col_last[c] == r and not (covered >> c) & 1):
            yield from fill(r, c + 1, above, covered)
        rows[r] = mask | (1 << c)
        yield from fill(r, c + 1, above, covered | (1 << c))
        rows[r] = mask

    yield from fill(0, 0, 0, 0)


def enumerate_tlt(n: int) -> Iterator[TreeLikeTableau]:
    """Every tree-like tableau of size n, once, in canonical order
    (paths lexicographic with S < W, then fillings row-major with
    empty < dot). There are n! of them."""
    if n < 1:
        raise ValueError("size must be positive")
    for steps in _tlt_paths(n):
        path = BorderPath(steps)
        for rows in tlt_fillings(path.row_lengths, path.num_cols):
            yield TreeLikeTableau(path, rows)


def enumerate_pt(n: int) -> Iterator[PermutationTableau]:
    """Every permutation tableau of length n, once, in canonical order.
    There are n! of them."""
    if n < 1:
        raise ValueError("length must be positive")
    for steps in _pt_paths(n):
        path = BorderPath(steps)
        for rows in pt_fillings(path.row_lengths, path.num_cols):
            yield PermutationTableau(path, rows)


def enumerate_nat(h: int, w: int) -> Iterator[NonAmbiguousTree]:
    """Every non-ambiguous tree of the exact height and width, once."""
    if h < 0 or w < 0:
        raise ValueError("height and width must be nonnegative")
    path = BorderPath(SOUTH * (h + 1) + WEST * (w + 1))
    for rows in tlt_fillings(path.row_lengths, path.num_cols):
        yield NonAmbiguousTree(TreeLikeTableau(path, rows))


# ---------------------------------------------------------------------------
# serialization

_TLT_CHARS = (".", "o")
_PT_CHARS = ("0", "1")


def _rows_to_lines(rows: tuple[int, ...], lengths: tuple[int, ...], chars) -> list[str]:
    empty, full = chars
    return [
        "".join(full if (mask >> c) & 1 else empty for c in range(lam))
        for mask, lam in zip(rows, lengths)
    ]


def to_text(obj) -> str:
    """One path line then one line per row; dots are 'o', ones are '1'."""
    if isinstance(obj, NonAmbiguousTree):
        obj = obj.tableau
    chars = _PT_CHARS if isinstance(obj, PermutationTableau) else _TLT_CHARS
    lines = [obj.path.steps]
    lines += _rows_to_lines(obj.rows, obj.path.row_lengths, chars)
    return "\n".join(lines)


def _lines_to_rows(lines: list[str], lengths: tuple[int, ...], chars) -> tuple[int, ...]:
    empty, full = chars
    if len(lines) != len(lengths):
        raise ValueError(f"expected {len(lengths)} row lines, got {len(lines)}")
    rows = []
    for line, lam in zip(lines, lengths):
        if len(line) != lam:
            raise ValueError(f"row line {line!r} should have length {lam}")
        mask = 0
        for c, ch in enumerate(line):
            if ch == full:
                mask |= 1 << c
            elif ch != empty:
                raise ValueError(f"bad character {ch!r} in row line")
        rows.append(mask)
    return tuple(rows)


def _split_object_lines(text: str) -> tuple[BorderPath, list[str]]:
    # rows of length zero are empty lines, so trailing blanks are data:
    # keep exactly as many row lines as the path demands, padding short input
    lines = text.split("\n")
    path = BorderPath(lines[0])
    body = lines[1:]
    need = path.num_rows
    while len(body) > need and body[-1] == "":
        body.pop()
    while len(body) < need:
        body.append("")
    return path, body


def parse_tlt(text: str) -> TreeLikeTableau:
    path, body = _split_object_lines(text)
    rows = _lines_to_rows(body, path.row_lengths, _TLT_CHARS)
    return TreeLikeTableau(path, rows)


def parse_pt(text: str) -> PermutationTableau:
    path, body = _split_object_lines(text)
    rows = _lines_to_rows(body, path.row_lengths, _PT_CHARS)
    return PermutationTableau(path, rows)


def parse_nat(text: str) -> NonAmbiguousTree:
    return NonAmbiguousTree(parse_tlt(text))


def to_json_obj(obj) -> dict:
    if isinstance(obj, NonAmbiguousTree):
        obj = obj.tableau
    chars = _PT_CHARS if isinstance(obj, PermutationTableau) else _TLT_CHARS
    return {
        "path": obj.path.steps,
        "rows": _rows_to_lines(obj.rows, obj.path.row_lengths, chars),
    }


def to_json(obj) -> str:
    return json.dumps(to_json_obj(obj), separators=(",", ":"))


# the two size-0 tableaux used by corner cutting
EMPTY_ROW_TABLEAU = TreeLikeTableau(BorderPath(SOUTH), (0,))
EMPTY_COL_TABLEAU = TreeLikeTableau(BorderPath(WEST), ())


@lru_cache(maxsize=None)
def tlt_count(n: int) -> int:
    return sum(1 for _ in enumerate_tlt(n))
