"""Partitions, permutations, skew shapes and set-valued tableaux.

Partitions are canonical tuples of weakly decreasing positive integers,
permutations are one-line windows with trailing fixed points trimmed.
Everything here is immutable and safe to share between threads.
"""

from dataclasses import dataclass
from itertools import count
from typing import Iterator

Partition = tuple[int, ...]
Permutation = tuple[int, ...]


# ---------------------------------------------------------------------------
# partitions


def partition(parts) -> Partition:
    """Canonicalize an iterable of row lengths into a partition tuple."""
    p = tuple(int(x) for x in parts)
    while p and p[-1] == 0:
        p = p[:-1]
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or any(x < 0 for x in p):
        raise ValueError(f"not weakly decreasing and positive: {list(parts)}")
    return p


def weight(lam: Partition) -> int:
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part >= j) for j in range(1, lam[0] + 1))


def contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained in lam."""

    def rec(i: int, prev: int) -> Iterator[tuple[int, ...]]:
        if i == len(lam):
            yield ()
            return
        for part in range(min(lam[i], prev), -1, -1):
            if part == 0:
                yield ()
                return
            for tail in rec(i + 1, part):
                yield (part,) + tail

    if not lam:
        yield ()
        return
    yield from rec(0, lam[0])


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """All partitions of weight n, largest part first in lex-descending order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n
    if n == 0:
        yield ()
        return
    if max_len == 0 or max_part == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions_of(n - first, first, max_len - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# skew shapes


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner; row i occupies columns inner_i .. outer_i - 1."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if len(self.inner) > len(self.outer) or not all(
            self.inner[i] <= self.outer[i] for i in range(len(self.inner))
        ):
            raise ValueError(f"inner {self.inner} not contained in outer {self.outer}")

    def row_bounds(self) -> list[tuple[int, int]]:
        """(start, end) column pairs per row; rows may be empty."""
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return [(inner[i], self.outer[i]) for i in range(len(self.outer))]

    def cells(self) -> list[tuple[int, int]]:
        """All (row, col) cells in row-major order."""
        return [(i, j) for i, (a, b) in enumerate(self.row_bounds()) for j in range(a, b)]

    def size(self) -> int:
        return sum(b - a for a, b in self.row_bounds())


def skew(outer, inner=()) -> SkewShape:
    return SkewShape(partition(outer), partition(inner))


def star(lam: Partition, mu: Partition) -> SkewShape:
    """The shape lam * mu: mu in the bottom-left corner, lam attached top-right."""
    shift = mu[0] if mu else 0
    outer = tuple(x + shift for x in lam) + mu
    inner = (shift,) * len(lam)
    return SkewShape(partition(outer), partition(inner))


def strip_kind(s: SkewShape) -> str:
    """Classify a skew diagram as 'horizontal', 'vertical', 'rook' or 'none'.

    A rook strip has at most one box in any row or column and is both a
    horizontal and a vertical strip.
    """
    bounds = s.row_bounds()
    horizontal = True
    vertical = True
    for i in range(len(bounds) - 1):
        a0, b0 = bounds[i]
        a1, b1 = bounds[i + 1]
        if a0 < b0 and a1 < b1 and a0 < b1:  # columns overlap
            horizontal = False
    for a, b in bounds:
        if b - a > 1:
            vertical = False
    if horizontal and vertical:
        return "rook"
    if horizontal:
        return "horizontal"
    if vertical:
        return "vertical"
    return "none"


# ---------------------------------------------------------------------------
# permutations


def perm(window) -> Permutation:
    """Canonical permutation: validate the window and trim trailing fixed points."""
    w = tuple(int(x) for x in window)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"not a permutation window: {list(window)}")
    while w and w[-1] == len(w):
        w = w[:-1]
    return w


def perm_in_window(w: Permutation, n: int) -> tuple[int, ...]:
    """Extend w by fixed points to a window of size n."""
    if n < len(w):
        raise ValueError(f"window {n} smaller than {w}")
    return w + tuple(range(len(w) + 1, n + 1))


def perm_apply(w: Permutation, i: int) -> int:
    return w[i - 1] if i <= len(w) else i


def perm_length(w: Permutation) -> int:
    """Number of inversions, equal to the reduced word length."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def perm_mul_s(w: Permutation, i: int) -> Permutation:
    """w * s_i (swap the values in positions i, i+1 of the window)."""
    n = max(len(w), i + 1)
    full = list(perm_in_window(w, n))
    full[i - 1], full[i] = full[i], full[i - 1]
    return perm(full)


def shift_perm(w: Permutation, m: int) -> Permutation:
    """1^m x w: identity on 1..m, then w shifted by m."""
    return perm(tuple(range(1, m + 1)) + tuple(x + m for x in w))


def longest_perm(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def ascents(w: tuple[int, ...]) -> list[int]:
    """Positions i with w(i) < w(i+1) inside the given window."""
    return [i for i in range(1, len(w)) if w[i - 1] < w[i]]


def rank_fn(w: Permutation, p: int, q: int) -> int:
    """r_w(p, q), the number of i <= p with w(i) <= q."""
    return sum(1 for i in range(1, p + 1) if perm_apply(w, i) <= q)


def grassmannian_perm(lam: Partition, p: int) -> Permutation:
    """The unique permutation with descent at p whose first p values encode lam."""
    if p < len(lam):
        raise ValueError(f"descent position {p} < length of {lam}")
    padded = lam + (0,) * (p - len(lam))
    head = tuple(i + padded[p - i] for i in range(1, p + 1))
    rest = tuple(sorted(set(range(1, p + weight(lam) + 1)) - set(head)))
    return perm(head + rest)


# ---------------------------------------------------------------------------
# set-valued tableaux


@dataclass(frozen=True)
class SetValuedTableau:
    shape: SkewShape
    boxes: tuple[frozenset[int], ...]  # aligned with shape.cells()

    def entries(self) -> dict[tuple[int, int], frozenset[int]]:
        return dict(zip(self.shape.cells(), self.boxes))

    def degree(self) -> int:
        return sum(len(b) for b in self.boxes)


def word_of(t: SetValuedTableau) -> tuple[int, ...]:
    """Reading word: rows left to right, bottom row first, box entries ascending."""
    grid = t.entries()
    out: list[int] = []
    for i, (a, b) in reversed(list(enumerate(t.shape.row_bounds()))):
        for j in range(a, b):
            out.extend(sorted(grid[i, j]))
    return tuple(out)


def content_of(word: tuple[int, ...]) -> tuple[int, ...]:
    if not word:
        return ()
    c = [0] * max(word)
    for v in word:
        c[v - 1] += 1
    return tuple(c)


def is_reverse_lattice(word: tuple[int, ...]) -> bool:
    """Every suffix of the word has weakly decreasing letter counts."""
    cnt: dict[int, int] = {}
    for v in reversed(word):
        cnt[v] = cnt.get(v, 0) + 1
        if v > 1 and cnt[v] > cnt.get(v - 1, 0):
            return False
    return True


def word_content(t: SetValuedTableau) -> tuple[tuple[int, ...], tuple[int, ...], bool]:
    w = word_of(t)
    return w, content_of(w), is_reverse_lattice(w)


def enumerate_svt(
    shape: SkewShape, max_entry: int, lattice_only: bool = False
) -> Iterator[SetValuedTableau]:
    """All set-valued tableaux of the shape with entries in 1..max_entry.

    Cells are filled in reverse reading order (top row first, right to left)
    so the reverse-lattice suffix condition can prune as soon as it fails;
    emission order is lexicographic on that canonical cell order.
    """
    bounds = shape.row_bounds()
    cells = [(i, j) for i, (a, b) in enumerate(bounds) for j in range(b - 1, a - 1, -1)]
    grid: dict[tuple[int, int], frozenset[int]] = {}
    cnt = [0] * (max_entry + 1)

    def box_choices(i: int, j: int) -> Iterator[frozenset[int]]:
        above = grid.get((i - 1, j))
        right = grid.get((i, j + 1))
        lo = max(above) + 1 if above else 1
        hi = min(right) if right else max_entry
        if lo > hi:
            return
        values = list(range(lo, hi + 1))
        for mask in range(1, 1 << len(values)):
            yield frozenset(values[k] for k in range(len(values)) if mask >> k & 1)

    def place(box: frozenset[int]) -> bool:
        for v in sorted(box, reverse=True):
            cnt[v] += 1
            if lattice_only and v > 1 and cnt[v] > cnt[v - 1]:
                for u in sorted(box, reverse=True):
                    cnt[u] -= 1
                    if u == v:
                        return False
        return True

    def unplace(box: frozenset[int]) -> None:
        for v in box:
            cnt[v] -= 1

    def rec(k: int) -> Iterator[SetValuedTableau]:
        if k == len(cells):
            ordered = tuple(grid[c] for c in shape.cells())
            yield SetValuedTableau(shape, ordered)
            return
        i, j = cells[k]
        for box in sorted(box_choices(i, j), key=lambda b: tuple(sorted(b))):
            if not place(box):
                continue
            grid[i, j] = box
            yield from rec(k + 1)
            del grid[i, j]
            unplace(box)

    yield from rec(0)


def enumerate_ssyt(shape: SkewShape, max_entry: int) -> Iterator[tuple[int, ...]]:
    """Plain semistandard fillings (one value per box), as row-major value tuples.

    Independent of the set-valued enumerator; used as a counting oracle.
    """
    cells = shape.cells()
    grid: dict[tuple[int, int], int] = {}

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == len(cells):
            yield tuple(grid[c] for c in cells)
            return
        i, j = cells[k]
        lo = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(lo, max_entry + 1):
            grid[i, j] = v
            yield from rec(k + 1)
            del grid[i, j]

    yield from rec(0)
