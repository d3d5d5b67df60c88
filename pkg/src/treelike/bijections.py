"""Maps between the tableau families and their permutation-side images.

The column-deletion map and its inverse pair tree-like tableaux of size n
with permutation tableaux of length n. Cutting at a corner splits a
tableau into a left piece, a right piece and a rectangular middle; gluing
reverses it. The corner-to-run map composes cutting with a rank-preserving
recoding through cycle forms and colored words, landing on permutations
with a marked run of size 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from typing import Iterator, NamedTuple

from .core import (
    EMPTY_COL_TABLEAU,
    EMPTY_ROW_TABLEAU,
    SOUTH,
    WEST,
    BorderPath,
    Cell,
    NonAmbiguousTree,
    PermutationTableau,
    TreeLikeTableau,
    enumerate_nat,
    enumerate_tlt,
    transpose_nat,
)

# ---------------------------------------------------------------------------
# column deletion


def tlt_to_pt(t: TreeLikeTableau) -> PermutationTableau:
    """Delete the leftmost column, turning dots into a 0/1 filling.

    A column's topmost dot becomes a 1, every other dot a 0. An empty cell
    becomes 0 when some dot-0 sits to its right in its row or its column's
    topmost dot sits strictly below it; otherwise it becomes 1.
    """
    if t.is_degenerate:
        raise ValueError("no column to delete in a size-0 tableau")
    path = t.path
    width = path.num_cols
    top_row = [-1] * width
    for r, mask in enumerate(t.rows):
        m = mask
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            if top_row[c] < 0:
                top_row[c] = r
    new_rows = []
    for r, mask in enumerate(t.rows):
        lam = path.row_lengths[r]
        zero_dot_right = [False] * (lam + 1)
        for c in range(lam - 1, -1, -1):
            zero_dot_right[c] = zero_dot_right[c + 1] or (
                bool((mask >> c) & 1) and top_row[c] != r
            )
        out = 0
        for c in range(1, lam):
            if (mask >> c) & 1:
                one = top_row[c] == r
            else:
                one = not (zero_dot_right[c + 1] or top_row[c] > r)
            if one:
                out |= 1 << (c - 1)
        new_rows.append(out)
    return PermutationTableau(BorderPath(path.steps[:-1]), tuple(new_rows))


def pt_to_tlt(p: PermutationTableau) -> TreeLikeTableau:
    """Grow back the leftmost column. Topmost 1s become dots; each row adds
    one dot at its rightmost restricted 0, or in the new column if it has
    none."""
    path = p.path
    width = path.num_cols
    k = path.num_rows
    new_rows = [0] * k
    top_one = [-1] * width
    for r, mask in enumerate(p.rows):
        m = mask
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            if top_one[c] < 0:
                top_one[c] = r
                new_rows[r] |= 1 << (c + 1)
    above = 0
    for r, mask in enumerate(p.rows):
        lam = path.row_lengths[r]
        spot = -1
        for c in range(lam):
            if not (mask >> c) & 1 and (above >> c) & 1:
                spot = c
        new_rows[r] |= 1 << (spot + 1) if spot >= 0 else 1
        above |= mask
    return TreeLikeTableau(BorderPath(path.steps + WEST), tuple(new_rows))


def corner_transfer_delta(t: TreeLikeTableau) -> int:
    """Corners lost by deleting the leftmost column: 1 when border step n
    is South, else 0."""
    n = t.size
    if n < 1:
        raise ValueError("size must be positive")
    return 1 if t.path.steps[n - 1] == SOUTH else 0


# ---------------------------------------------------------------------------
# cutting and gluing at a corner


def cut_at_corner(
    t: TreeLikeTableau, corner: Cell
) -> tuple[TreeLikeTableau, TreeLikeTableau, NonAmbiguousTree]:
    """Split at corner (i, i+1) into the part below, the part to the right,
    and the rectangle above-left of the corner squeezed to a tree.

    The left piece keeps the rows after i behind a fresh first row marking
    which of its columns met the rectangle; the right piece keeps the
    columns before i behind a fresh first column marking the rows that met
    it. Either piece may be one of the two size-0 tableaux.
    """
    if corner not in t.path.corner_cells:
        raise ValueError(f"{corner} is not a corner")
    i = corner.row
    n = t.size
    steps = t.path.steps
    r_c = t.path.row_index(i) + 1
    w_head = t.path.col_index(i + 1) + 1
    w_l = w_head - 1
    m_mask = (1 << w_head) - 1
    m_rows = [t.rows[r] & m_mask for r in range(r_c)]

    if n - i == 0:
        t_l = EMPTY_ROW_TABLEAU
    else:
        first = 0
        for m in m_rows:
            first |= m
        first &= (1 << w_l) - 1
        t_l = TreeLikeTableau(
            BorderPath(SOUTH + steps[i + 1 :]), (first,) + t.rows[r_c:]
        )

    if i - 1 == 0:
        t_r = EMPTY_COL_TABLEAU
    else:
        rows_r = tuple(
            ((t.rows[r] >> w_head) << 1) | (1 if m_rows[r] else 0)
            for r in range(r_c - 1)
        )
        t_r = TreeLikeTableau(BorderPath(steps[: i - 1] + WEST), rows_r)

    kept_rows = [r for r in range(r_c) if m_rows[r]]
    col_union = 0
    for m in m_rows:
        col_union |= m
    kept_cols = [c for c in range(w_head) if (col_union >> c) & 1]
    col_pos = {c: j for j, c in enumerate(kept_cols)}
    nat_rows = []
    for r in kept_rows:
        m = m_rows[r]
        out = 0
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            out |= 1 << col_pos[c]
        nat_rows.append(out)
    nat_path = BorderPath(SOUTH * len(kept_rows) + WEST * len(kept_cols))
    nat = NonAmbiguousTree(TreeLikeTableau(nat_path, tuple(nat_rows)))
    return t_l, t_r, nat


def glue(
    t_l: TreeLikeTableau, t_r: TreeLikeTableau, nat: NonAmbiguousTree
) -> tuple[TreeLikeTableau, Cell]:
    """Inverse of cutting: rebuild the tableau and report its cut corner."""
    if t_l.is_degenerate and t_l.path.steps != SOUTH:
        raise ValueError("degenerate left piece must be the empty-row tableau")
    if t_r.is_degenerate and t_r.path.steps != WEST:
        raise ValueError("degenerate right piece must be the empty-column tableau")
    fr_l = t_l.rows[0].bit_count() if t_l.rows else 0
    fc_r = sum(1 for m in t_r.rows if m & 1)
    if nat.width != fr_l:
        raise ValueError(
            f"tree width {nat.width} does not match left first-row dots {fr_l}"
        )
    if nat.height != fc_r:
        raise ValueError(
            f"tree height {nat.height} does not match right first-column dots {fc_r}"
        )
    i = t_r.size + 1
    steps = t_r.path.steps[:-1] + SOUTH + WEST + t_l.path.steps[1:]
    w_l = t_l.path.num_cols
    w_head = w_l + 1
    r_c = len(t_r.rows) + 1

    designated_rows = [r for r in range(len(t_r.rows)) if t_r.rows[r] & 1]
    designated_rows.append(r_c - 1)
    designated_cols = [c for c in range(w_l) if (t_l.rows[0] >> c) & 1] if t_l.rows else []
    designated_cols.append(w_l)

    row_m: dict[int, int] = {}
    for a, r in enumerate(designated_rows):
        m = nat.tableau.rows[a]
        out = 0
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            out |= 1 << designated_cols[c]
        row_m[r] = out

    masks = []
    for r in range(r_c - 1):
        masks.append(row_m.get(r, 0) | ((t_r.rows[r] >> 1) << w_head))
    masks.append(row_m[r_c - 1])
    masks.extend(t_l.rows[1:])
    t = TreeLikeTableau(BorderPath(steps), tuple(masks))
    return t, Cell(i, i + 1)


# ---------------------------------------------------------------------------
# colored words and cycle forms


class ColoredLetter(NamedTuple):
    value: int
    pointed: bool

    @property
    def token(self) -> str:
        return f"{self.value}*" if self.pointed else str(self.value)


@dataclass(frozen=True)
class ColoredWord:
    """An arrangement of pointed letters 0..h and unpointed letters 1..w.

    The constructor checks the alphabet only; `is_valid` adds the order
    conditions (last letter pointed, consecutive letters of one kind
    increasing), which the block-swap map deliberately breaks.
    """

    letters: tuple[ColoredLetter, ...]
    h: int
    w: int

    def __post_init__(self):
        pointed = sorted(l.value for l in self.letters if l.pointed)
        plain = sorted(l.value for l in self.letters if not l.pointed)
        if self.h < 0 or pointed != list(range(self.h + 1)):
            raise ValueError(f"pointed letters must be exactly 0..{self.h}")
        if plain != list(range(1, self.w + 1)):
            raise ValueError(f"unpointed letters must be exactly 1..{self.w}")

    def is_valid(self) -> bool:
        if not self.letters[-1].pointed:
            return False
        for x, y in zip(self.letters, self.letters[1:]):
            if x.pointed == y.pointed and x.value >= y.value:
                return False
        return True

    def text(self) -> str:
        return " ".join(l.token for l in self.letters)


def parse_colored_word(s: str) -> ColoredWord:
    letters = []
    for tok in s.split():
        if tok.endswith("*"):
            letters.append(ColoredLetter(int(tok[:-1]), True))
        else:
            letters.append(ColoredLetter(int(tok), False))
    if not letters:
        raise ValueError("empty word")
    h = sum(1 for l in letters if l.pointed) - 1
    w = sum(1 for l in letters if not l.pointed)
    return ColoredWord(tuple(letters), h, w)


def enumerate_colored_words(h: int, w: int) -> Iterator[ColoredWord]:
    """All valid words on the (h, w) alphabet, ordered lexicographically by
    letter keys (value first, unpointed before pointed)."""
    if h < 0 or w < 0:
        raise ValueError("bad alphabet")
    alphabet = sorted(
        [ColoredLetter(v, True) for v in range(h + 1)]
        + [ColoredLetter(v, False) for v in range(1, w + 1)],
        key=lambda l: (l.value, l.pointed),
    )
    total = len(alphabet)
    picked: list[ColoredLetter] = []
    used = [False] * total

    def rec() -> Iterator[ColoredWord]:
        if len(picked) == total:
            yield ColoredWord(tuple(picked), h, w)
            return
        last_slot = len(picked) == total - 1
        for idx, letter in enumerate(alphabet):
            if used[idx]:
                continue
            if last_slot and not letter.pointed:
                continue
            if picked and picked[-1].pointed == letter.pointed and picked[-1].value >= letter.value:
                continue
            used[idx] = True
            picked.append(letter)
            yield from rec()
            picked.pop()
            used[idx] = False

    yield from rec()


def count_colored_words(h: int, w: int) -> int:
    return sum(1 for _ in enumerate_colored_words(h, w))


@dataclass(frozen=True)
class CycleForm:
    """Cycles written largest element first, listed by increasing maxima."""

    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        seen = sorted(v for cyc in self.cycles for v in cyc)
        if seen != list(range(1, len(seen) + 1)):
            raise ValueError("cycles must partition 1..m")
        prev = 0
        for cyc in self.cycles:
            if not cyc or cyc[0] != max(cyc):
                raise ValueError("each cycle must start with its maximum")
            if cyc[0] <= prev:
                raise ValueError("cycle maxima must increase")
            prev = cyc[0]

    @property
    def size(self) -> int:
        return sum(len(c) for c in self.cycles)

    @staticmethod
    def from_permutation(p: tuple[int, ...]) -> "CycleForm":
        n = len(p)
        seen = [False] * (n + 1)
        cycles = []
        for s in range(1, n + 1):
            if seen[s]:
                continue
            cyc = []
            j = s
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = p[j - 1]
            top = cyc.index(max(cyc))
            cycles.append(tuple(cyc[top:] + cyc[:top]))
        cycles.sort(key=lambda c: c[0])
        return CycleForm(tuple(cycles))

    def to_permutation(self) -> tuple[int, ...]:
        n = self.size
        out = [0] * n
        for cyc in self.cycles:
            for j, v in enumerate(cyc):
                out[v - 1] = cyc[(j + 1) % len(cyc)]
        return tuple(out)

    def text(self) -> str:
        return "".join("(" + " ".join(map(str, cyc)) + ")" for cyc in self.cycles)


def parse_cycle_form(s: str) -> CycleForm:
    s = s.strip()
    if not s:
        return CycleForm(())
    if not (s.startswith("(") and s.endswith(")")):
        raise ValueError(f"bad cycle form {s!r}")
    inner = s[1:-1].split(")(")
    cycles = []
    for part in inner:
        vals = tuple(int(x) for x in part.split())
        if not vals:
            raise ValueError("empty cycle")
        cycles.append(vals)
    return CycleForm(tuple(cycles))


@dataclass(frozen=True)
class MarkedRun:
    """A permutation with a marked position that is a run of size 1:
    strictly between larger-left and smaller-right, with sentinels n+1
    before the word and 0 after it."""

    perm: tuple[int, ...]
    k: int

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(1, n + 1)):
            raise ValueError("not a permutation of 1..n")
        if not 1 <= self.k <= n:
            raise ValueError(f"mark {self.k} out of range")
        v = self.perm[self.k - 1]
        prev = self.perm[self.k - 2] if self.k > 1 else n + 1
        nxt = self.perm[self.k] if self.k < n else 0
        if not prev > v > nxt:
            raise ValueError(f"position {self.k} is not a run of size 1")


# ---------------------------------------------------------------------------
# the block swap


def _r0_index(letters: tuple[ColoredLetter, ...]) -> int:
    for idx, l in enumerate(letters):
        if l.pointed and l.value == 0:
            return idx
    raise ValueError("word has no pointed 0")


def _blocks(letters) -> list[list[ColoredLetter]]:
    out: list[list[ColoredLetter]] = []
    for l in letters:
        if out and out[-1][-1].pointed == l.pointed:
            out[-1].append(l)
        else:
            out.append([l])
    return out


def m_star(m: ColoredWord) -> ColoredWord:
    """Swap each unpointed/pointed block pair after the pointed 0; identity
    when the pointed 0 is last or followed by a pointed letter."""
    idx = _r0_index(m.letters)
    if idx == len(m.letters) - 1 or m.letters[idx + 1].pointed:
        return m
    head = list(m.letters[: idx + 1])
    blocks = _blocks(m.letters[idx + 1 :])
    assert len(blocks) % 2 == 0
    for j in range(0, len(blocks), 2):
        head.extend(blocks[j + 1])
        head.extend(blocks[j])
    return ColoredWord(tuple(head), m.h, m.w)


def m_star_inverse(m: ColoredWord) -> ColoredWord:
    """Undo the block swap; the swapped branch is recognized by the last
    letter being unpointed."""
    if m.letters[-1].pointed:
        return m
    idx = _r0_index(m.letters)
    head = list(m.letters[: idx + 1])
    blocks = _blocks(m.letters[idx + 1 :])
    assert len(blocks) % 2 == 0
    for j in range(0, len(blocks), 2):
        head.extend(blocks[j + 1])
        head.extend(blocks[j])
    return ColoredWord(tuple(head), m.h, m.w)


# ---------------------------------------------------------------------------
# triplet <-> marked run


def triplet_to_run(
    l_cycles: CycleForm, r_cycles: CycleForm, m: ColoredWord
) -> MarkedRun:
    """Substitute cycles for letters: pointed i becomes the i-th left
    cycle, unpointed j the j-th right cycle shifted up, and the pointed 0
    the split value itself, after the block swap."""
    if m.h != len(l_cycles.cycles) or m.w != len(r_cycles.cycles):
        raise ValueError("word alphabet does not match the cycle counts")
    if not m.is_valid():
        raise ValueError("not a valid colored word")
    v = l_cycles.size + 1
    ms = m_star(m)
    out: list[int] = []
    k = -1
    for letter in ms.letters:
        if letter.pointed and letter.value == 0:
            k = len(out) + 1
            out.append(v)
        elif letter.pointed:
            out.extend(l_cycles.cycles[letter.value - 1])
        else:
            out.extend(x + v for x in r_cycles.cycles[letter.value - 1])
    return MarkedRun(tuple(out), k)


def run_to_triplet(mr: MarkedRun) -> tuple[CycleForm, CycleForm, ColoredWord]:
    """Cut the permutation around the marked value into maximal blocks of
    smaller and larger values, break each block at its left-to-right
    maxima, and record the block order as a colored word."""
    p, k = mr.perm, mr.k
    v = p[k - 1]

    appearance: list[tuple[bool, tuple[int, ...] | None]] = []
    small_cycles: list[tuple[int, ...]] = []
    big_cycles: list[tuple[int, ...]] = []
    j = 0
    while j < len(p):
        if p[j] == v:
            appearance.append((True, None))
            j += 1
            continue
        small = p[j] < v
        block = []
        while j < len(p) and p[j] != v and (p[j] < v) == small:
            block.append(p[j])
            j += 1
        cur: list[int] = []
        for e in block:
            if not cur or e > cur[0]:
                if cur:
                    cyc = tuple(cur)
                    (small_cycles if small else big_cycles).append(cyc)
                    appearance.append((small, cyc))
                cur = [e]
            else:
                cur.append(e)
        cyc = tuple(cur)
        (small_cycles if small else big_cycles).append(cyc)
        appearance.append((small, cyc))

    l_sorted = sorted(small_cycles, key=lambda c: c[0])
    l_rank = {c: idx + 1 for idx, c in enumerate(l_sorted)}
    big_shifted = [tuple(x - v for x in c) for c in big_cycles]
    r_sorted = sorted(big_shifted, key=lambda c: c[0])
    r_rank = {c: idx + 1 for idx, c in enumerate(r_sorted)}

    letters = []
    for small, cyc in appearance:
        if cyc is None:
            letters.append(ColoredLetter(0, True))
        elif small:
            letters.append(ColoredLetter(l_rank[cyc], True))
        else:
            letters.append(ColoredLetter(r_rank[tuple(x - v for x in cyc)], False))
    word = ColoredWord(tuple(letters), len(l_sorted), len(r_sorted))
    word = m_star_inverse(word)
    assert word.is_valid()
    return CycleForm(tuple(l_sorted)), CycleForm(tuple(r_sorted)), word


# ---------------------------------------------------------------------------
# rank tables and the corner-to-run map


def _first_row_points(t: TreeLikeTableau) -> int:
    return t.rows[0].bit_count() if t.rows else 0


def _first_col_points(t: TreeLikeTableau) -> int:
    return sum(1 for m in t.rows if m & 1)


@lru_cache(maxsize=None)
def _tlts_by_fr(n: int):
    if n == 0:
        return {0: [EMPTY_ROW_TABLEAU]}, {EMPTY_ROW_TABLEAU: 0}
    buckets: dict[int, list] = {}
    for t in enumerate_tlt(n):
        buckets.setdefault(_first_row_points(t), []).append(t)
    ranks = {t: i for lst in buckets.values() for i, t in enumerate(lst)}
    return buckets, ranks


@lru_cache(maxsize=None)
def _tlts_by_fc(n: int):
    if n == 0:
        return {0: [EMPTY_COL_TABLEAU]}, {EMPTY_COL_TABLEAU: 0}
    buckets: dict[int, list] = {}
    for t in enumerate_tlt(n):
        buckets.setdefault(_first_col_points(t), []).append(t)
    ranks = {t: i for lst in buckets.values() for i, t in enumerate(lst)}
    return buckets, ranks


@lru_cache(maxsize=None)
def _perms_by_cycles(n: int):
    if n == 0:
        return {0: [()]}, {(): 0}
    from .counting import cycle_count

    buckets: dict[int, list] = {}
    for p in permutations(range(1, n + 1)):
        buckets.setdefault(cycle_count(p), []).append(p)
    ranks = {p: i for lst in buckets.values() for i, p in enumerate(lst)}
    return buckets, ranks


@lru_cache(maxsize=None)
def _nats(h: int, w: int):
    lst = list(enumerate_nat(h, w))
    return lst, {nat: i for i, nat in enumerate(lst)}


@lru_cache(maxsize=None)
def _words(h: int, w: int):
    lst = list(enumerate_colored_words(h, w))
    return lst, {word: i for i, word in enumerate(lst)}


def corner_to_run(t: TreeLikeTableau, corner: Cell) -> MarkedRun:
    """Cut at the corner, recode each piece by its rank inside its
    statistic class, and substitute into a marked-run permutation."""
    t_l, t_r, nat = cut_at_corner(t, corner)
    fr_l = _first_row_points(t_l)
    fc_r = _first_col_points(t_r)

    _, ranks_l = _tlts_by_fr(t_l.size)
    perms_l, _ = _perms_by_cycles(t_l.size)
    l_cycles = CycleForm.from_permutation(perms_l[fr_l][ranks_l[t_l]])

    _, ranks_r = _tlts_by_fc(t_r.size)
    perms_r, _ = _perms_by_cycles(t_r.size)
    r_cycles = CycleForm.from_permutation(perms_r[fc_r][ranks_r[t_r]])

    _, nat_ranks = _nats(fr_l, fc_r)
    words, _ = _words(fr_l, fc_r)
    m = words[nat_ranks[transpose_nat(nat)]]
    return triplet_to_run(l_cycles, r_cycles, m)


def run_to_corner(mr: MarkedRun) -> tuple[TreeLikeTableau, Cell]:
    """Inverse of the corner-to-run map."""
    l_cycles, r_cycles, m = run_to_triplet(mr)

    buckets_l, _ = _tlts_by_fr(l_cycles.size)
    _, perm_ranks_l = _perms_by_cycles(l_cycles.size)
    t_l = buckets_l[m.h][perm_ranks_l[l_cycles.to_permutation()]]

    buckets_r, _ = _tlts_by_fc(r_cycles.size)
    _, perm_ranks_r = _perms_by_cycles(r_cycles.size)
    t_r = buckets_r[m.w][perm_ranks_r[r_cycles.to_permutation()]]

    nats, _ = _nats(m.h, m.w)
    _, word_ranks = _words(m.h, m.w)
    nat = transpose_nat(nats[word_ranks[m]])
    return glue(t_l, t_r, nat)
