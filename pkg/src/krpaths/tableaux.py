"""Words, tableaux, tabloids, transportation matrices and plane partitions.

Every object is a plain tuple so values are immutable and hashable:

* a partition / composition is ``tuple[int, ...]``;
* a tableau, tabloid or plane partition is a tuple of rows;
* a transportation matrix is a tuple of row tuples.

Row and column indices in this module are 0-based.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .poly import QPoly

Tableau = tuple[tuple[int, ...], ...]
Word = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class TableauError(ValueError):
    pass


# -- shapes -----------------------------------------------------------------

def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 1 for p in parts) and all(a >= b for a, b in zip(parts, parts[1:]))


def shape(t: Tableau) -> tuple[int, ...]:
    return tuple(len(row) for row in t)


def size(t: Tableau) -> int:
    return sum(len(row) for row in t)


def conjugate(parts: Sequence[int]) -> tuple[int, ...]:
    parts = [p for p in parts if p]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def content(letters: Iterable[int], n: int | None = None) -> tuple[int, ...]:
    """Multiplicities of 1, 2, ..., n (n defaults to the largest letter)."""
    letters = list(letters)
    top = max(letters, default=0) if n is None else n
    out = [0] * top
    for x in letters:
        out[x - 1] += 1
    return tuple(out)


def tableau_content(t: Tableau, n: int | None = None) -> tuple[int, ...]:
    return content((x for row in t for x in row), n)


def partitions(n: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n in reverse lexicographic order (a linear extension of dominance)."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n: int, parts: int | None = None) -> Iterator[tuple[int, ...]]:
    """Compositions of n: positive parts, or exactly ``parts`` nonnegative parts."""
    if parts is None:
        if n == 0:
            yield ()
            return
        for first in range(1, n + 1):
            for rest in compositions(n - first):
                yield (first,) + rest
        return
    if parts == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, parts - 1):
            yield (first,) + rest


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    if sum(lam) != sum(mu):
        return False
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


# -- semistandard tableaux --------------------------------------------------

def is_semistandard(t: Tableau) -> bool:
    if not is_partition(shape(t)) and t:
        return False
    for row in t:
        if any(a > b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(t, t[1:]):
        if any(a >= b for a, b in zip(upper, lower)):
            return False
    return all(x >= 1 for row in t for x in row)


def row_word(t: Tableau) -> Word:
    """Rows concatenated from the bottom row up, each read left to right."""
    return tuple(x for row in reversed(t) for x in row)


def insert_letter(t: Tableau, x: int) -> tuple[Tableau, tuple[int, int]]:
    """Schensted row insertion of one letter; returns the tableau and the new cell."""
    rows = [list(r) for r in t]
    i = 0
    while True:
        if i == len(rows):
            rows.append([x])
            return tuple(tuple(r) for r in rows), (i, 0)
        row = rows[i]
        # leftmost entry strictly greater than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] > x:
                hi = mid
            else:
                lo = mid + 1
        if lo == len(row):
            row.append(x)
            return tuple(tuple(r) for r in rows), (i, lo)
        row[lo], x = x, row[lo]
        i += 1


def row_insert(t: Tableau, w: Iterable[int]) -> Tableau:
    """(t <- w): insert the letters of w from left to right."""
    for x in w:
        t, _ = insert_letter(t, x)
    return t


def is_corner(t: Tableau, cell: tuple[int, int]) -> bool:
    i, j = cell
    if i >= len(t) or j != len(t[i]) - 1:
        return False
    return i + 1 == len(t) or len(t[i + 1]) <= j


def inverse_bump(t: Tableau, cell: tuple[int, int]) -> tuple[Tableau, int]:
    """Undo one row insertion ending at ``cell``; returns (t', u) with (t' <- u) == t."""
    if not is_corner(t, cell):
        raise TableauError(f"cell {cell} is not a removable corner of {t}")
    rows = [list(r) for r in t]
    i, _ = cell
    x = rows[i].pop()
    if not rows[i]:
        rows.pop()
    for k in range(i - 1, -1, -1):
        row = rows[k]
        # rightmost entry strictly smaller than x
        lo, hi = 0, len(row)
        while lo < hi:
            mid = (lo + hi) // 2
            if row[mid] < x:
                lo = mid + 1
            else:
                hi = mid
        j = lo - 1
        row[j], x = x, row[j]
    return tuple(tuple(r) for r in rows), x


def ssyt_from_word(w: Iterable[int]) -> Tableau:
    return row_insert((), w)


def rsk(m: Sequence[Sequence[int]]) -> tuple[Tableau, Tableau]:
    """RSK on a transportation matrix read as a two-line array (row index over column index)."""
    p: Tableau = ()
    q: Tableau = ()
    for i, row in enumerate(m, start=1):
        for j, mult in enumerate(row, start=1):
            for _ in range(mult):
                p, (a, b) = insert_letter(p, j)
                q = _place(q, a, b, i)
    return p, q


def _place(t: Tableau, i: int, j: int, x: int) -> Tableau:
    rows = [list(r) for r in t]
    if i == len(rows):
        rows.append([])
    assert len(rows[i]) == j
    rows[i].append(x)
    return tuple(tuple(r) for r in rows)


def enumerate_ssyt(shape_: Sequence[int], weight: Sequence[int]) -> Iterator[Tableau]:
    """All SSYT of the given shape and content, each exactly once."""
    shape_ = tuple(shape_)
    weight = tuple(weight)
    if sum(shape_) != sum(weight):
        raise TableauError(f"|shape|={sum(shape_)} differs from |weight|={sum(weight)}")
    if not is_partition(shape_):
        raise TableauError(f"{shape_} is not a partition")
    yield from _ssyt(shape_, weight)


@lru_cache(maxsize=None)
def _ssyt(shape_: tuple[int, ...], weight: tuple[int, ...]) -> tuple[Tableau, ...]:
    # remove the largest letter as a horizontal strip
    while weight and weight[-1] == 0:
        weight = weight[:-1]
    if not weight:
        return ((),) if not shape_ else ()
    k = len(weight)
    m = weight[-1]
    out = []
    for inner in _horizontal_strip_inner(shape_, m):
        if len(inner) > k - 1:
            continue
        for sub in _ssyt(inner, weight[:-1]):
            rows = [list(r) for r in sub] + [[] for _ in range(len(shape_) - len(sub))]
            for i, length in enumerate(shape_):
                rows[i].extend([k] * (length - len(rows[i])))
            out.append(tuple(tuple(r) for r in rows))
    return tuple(out)


def _horizontal_strip_inner(outer: tuple[int, ...], m: int) -> Iterator[tuple[int, ...]]:
    """Partitions inner <= outer with outer/inner a horizontal strip of size m."""
    n = len(outer)

    def rec(i: int, left: int, acc: list[int]):
        if i == n:
            if left == 0:
                yield tuple(p for p in acc if p)
            return
        nxt = outer[i + 1] if i + 1 < n else 0
        for take in range(min(left, outer[i] - nxt), -1, -1):
            acc.append(outer[i] - take)
            yield from rec(i + 1, left - take, acc)
            acc.pop()

    yield from rec(0, m, [])


@lru_cache(maxsize=None)
def all_ssyt(shape_: tuple[int, ...], n: int) -> tuple[Tableau, ...]:
    """All SSYT of a shape over the alphabet 1..n."""
    out = []
    for w in compositions(sum(shape_), n):
        out.extend(_ssyt(tuple(shape_), w))
    return tuple(sorted(out))


# -- Gelfand-Tsetlin patterns and plane partitions ---------------------------

def gt_from_ssyt(t: Tableau, n: int | None = None) -> tuple[tuple[int, ...], ...]:
    """Gelfand-Tsetlin pattern, longest row first.

    Row k (0-based) is the shape of the entries <= n - k, padded with zeros to
    length n - k; the first row is the shape of t.
    """
    top = max((x for row in t for x in row), default=0)
    if n is None:
        n = max(top, len(t))
    if top > n or len(t) > n:
        raise TableauError(f"tableau does not fit in alphabet 1..{n}")
    rows = []
    for k in range(n, 0, -1):
        sh = [sum(1 for x in row if x <= k) for row in t]
        sh = (sh + [0] * k)[:k]
        rows.append(tuple(sh))
    return tuple(rows)


def is_gt_pattern(pattern: Sequence[Sequence[int]]) -> bool:
    for upper, lower in zip(pattern, pattern[1:]):
        if len(lower) != len(upper) - 1:
            return False
        for i, x in enumerate(lower):
            if not upper[i] >= x >= upper[i + 1]:
                return False
    return True


def glued_array(p: Tableau, q: Tableau) -> list[list[int]]:
    """Square array from gluing the GT patterns of p (on/below diagonal) and q (above)."""
    if shape(p) != shape(q):
        raise TableauError(f"shape mismatch {shape(p)} vs {shape(q)}")
    n = max([len(p)] + [x for row in p + q for x in row])
    gp = gt_from_ssyt(p, n)
    gq = gt_from_ssyt(q, n)
    a = [[0] * n for _ in range(n)]
    for k, row in enumerate(gp):
        for j, x in enumerate(row):
            a[j + k][j] = x
    for k, row in enumerate(gq):
        for i, x in enumerate(row):
            if k:
                a[i][i + k] = x
    return a


def plane_partition_from_pair(p: Tableau, q: Tableau) -> Tableau:
    """Plane partition of an RSK pair; zero entries are trimmed."""
    a = glued_array(p, q)
    rows = [tuple(x for x in row if x) for row in a]
    return tuple(r for r in rows if r)


def is_plane_partition(pi: Tableau) -> bool:
    if not is_partition(shape(pi)) and pi:
        return False
    for row in pi:
        if any(a < b for a, b in zip(row, row[1:])):
            return False
    for upper, lower in zip(pi, pi[1:]):
        if any(a < b for a, b in zip(upper, lower)):
            return False
    return True


def diagonal_sums(a: Sequence[Sequence[int]]) -> tuple[list[int], list[int]]:
    """(below, above): sums along the diagonals at offsets 0, 1, ... of a square array."""
    n = len(a)
    below = [sum(a[j + k][j] for j in range(n - k)) for k in range(n)]
    above = [sum(a[i][i + k] for i in range(n - k)) for k in range(n)]
    return below, above


def macmahon_count(l: int, m: int, n: int, max_cells: int = 20) -> QPoly:
    """Sum of q^|pi| over plane partitions inside an l x m x n box, by enumeration."""
    if min(l, m, n) < 1:
        raise ValueError("box side lengths must be positive")
    if l * m * n > max_cells:
        raise ValueError(f"box {l}x{m}x{n} exceeds enumeration bound l*m*n <= {max_cells}")
    counts: dict[int, int] = {}
    grid = [[0] * m for _ in range(l)]

    def fill(idx: int, total: int):
        if idx == l * m:
            counts[total] = counts.get(total, 0) + 1
            return
        i, j = divmod(idx, m)
        cap = n
        if i:
            cap = min(cap, grid[i - 1][j])
        if j:
            cap = min(cap, grid[i][j - 1])
        for v in range(cap + 1):
            grid[i][j] = v
            fill(idx + 1, total + v)
        grid[i][j] = 0

    fill(0, 0)
    return QPoly(counts)


def macmahon_product(l: int, m: int, n: int) -> QPoly:
    """The box product formula, evaluated by exact polynomial division."""
    num = QPoly.one()
    den = QPoly.one()
    for i, j, k in itertools.product(range(1, l + 1), range(1, m + 1), range(1, n + 1)):
        num = num * QPoly({0: 1, i + j + k - 1: -1})
        den = den * QPoly({0: 1, i + j + k - 2: -1})
    return num.exact_div(den)


# -- tabloids and transportation matrices ------------------------------------

def tabloid_reading_word(t: Tableau) -> Word:
    """Rows top to bottom, each read right to left."""
    return tuple(x for row in t for x in reversed(row))


def tabloid_from_factors(factors: Sequence[Sequence[int]], n: int | None = None) -> Tableau:
    """Tabloid of a path of single-row factors: row k collects position i once per letter k in factor i."""
    top = max((x for f in factors for x in f), default=0)
    n = top if n is None else n
    rows: list[list[int]] = [[] for _ in range(n)]
    for i, factor in enumerate(factors, start=1):
        for x in sorted(factor):
            rows[x - 1].append(i)
    return tuple(tuple(r) for r in rows)


def tabloid_from_matrix(m: Sequence[Sequence[int]]) -> Tableau:
    return tuple(tuple(j for j, c in enumerate(row, start=1) for _ in range(c)) for row in m)


def matrix_from_tabloid(t: Tableau, ncols: int | None = None) -> Matrix:
    for row in t:
        if any(a > b for a, b in zip(row, row[1:])):
            raise TableauError(f"row {row} is not weakly increasing")
    top = max((x for row in t for x in row), default=0)
    ncols = top if ncols is None else ncols
    return tuple(tuple(row.count(j) for j in range(1, ncols + 1)) for row in t)


def is_transportation_matrix(m: Sequence[Sequence[int]]) -> bool:
    return all(isinstance(x, int) and x >= 0 for row in m for x in row) and len({len(r) for r in m}) <= 1


def transportation_matrices(rows: Sequence[int], cols: Sequence[int]) -> Iterator[Matrix]:
    """All nonnegative integer matrices with the given row and column sums."""
    rows, cols = tuple(rows), tuple(cols)
    if sum(rows) != sum(cols):
        return

    def rec(i: int, remaining: tuple[int, ...]):
        if i == len(rows) - 1:
            if sum(remaining) == rows[i]:
                yield (remaining,)
            return
        for r in _bounded_vectors(rows[i], remaining):
            rest = tuple(a - b for a, b in zip(remaining, r))
            for tail in rec(i + 1, rest):
                yield (r,) + tail

    if not rows:
        yield ()
        return
    yield from rec(0, cols)


def _bounded_vectors(total: int, caps: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    if not caps:
        if total == 0:
            yield ()
        return
    for x in range(min(total, caps[0]), -1, -1):
        for rest in _bounded_vectors(total - x, caps[1:]):
            yield (x,) + rest


# -- text serialisation -------------------------------------------------------

def format_tableau(t: Tableau) -> str:
    return "[" + ",".join("[" + ",".join(map(str, row)) + "]" for row in t) + "]"


def parse_tableau(text: str) -> Tableau:
    import json

    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise TableauError(f"malformed tableau literal {text!r}") from exc
    if not isinstance(data, list) or not all(isinstance(r, list) for r in data):
        raise TableauError(f"malformed tableau literal {text!r}")
    if not all(isinstance(x, int) and not isinstance(x, bool) for r in data for x in r):
        raise TableauError(f"malformed tableau literal {text!r}")
    return tuple(tuple(r) for r in data)


def format_word(w: Sequence[int]) -> str:
    if all(1 <= x <= 9 for x in w):
        return "".join(map(str, w))
    return " ".join(map(str, w))


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    if " " in text or "," in text:
        parts = text.replace(",", " ").split()
    else:
        parts = list(text)
    try:
        w = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise TableauError(f"malformed word {text!r}") from exc
    if any(x < 1 for x in w):
        raise TableauError(f"letters must be positive in {text!r}")
    return w
