"""Kirillov-Reshetikhin crystals B^{r,s} of type A, tensor paths and the combinatorial R.

An element of B^{r,s} is an r x s semistandard tableau stored as a tuple of
rows. A path is a tensor product b_1 (x) ... (x) b_L of such elements; the
:class:`TensorPath` wrapper carries the alphabet bound, while the functions
below also accept a bare tuple of factors.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence, Union

from .tableaux import (
    Tableau,
    TableauError,
    all_ssyt,
    format_tableau,
    format_word,
    inverse_bump,
    is_semistandard,
    parse_tableau,
    parse_word,
    row_insert,
    row_word,
    shape,
)


class CrystalError(ValueError):
    pass


def rect_shape(b: Tableau) -> tuple[int, int]:
    """(r, s) of a rectangular tableau."""
    return len(b), len(b[0])


def is_rectangular(b: Tableau) -> bool:
    return bool(b) and len(set(map(len, b))) == 1 and len(b[0]) > 0


def highest_element(r: int, s: int) -> Tableau:
    """u^{(r)}_s: the tableau whose i-th row is filled with i."""
    return tuple((i,) * s for i in range(1, r + 1))


@dataclass(frozen=True)
class TensorPath:
    factors: tuple[Tableau, ...]
    alphabet: int = 0
    _checked: bool = field(default=False, repr=False, compare=False)

    def __post_init__(self):
        factors = tuple(tuple(tuple(row) for row in f) for f in self.factors)
        object.__setattr__(self, "factors", factors)
        if not factors:
            raise CrystalError("a path needs at least one factor")
        top = max(x for f in factors for row in f for x in row)
        if self.alphabet == 0:
            object.__setattr__(self, "alphabet", top)
        elif top > self.alphabet:
            raise CrystalError(f"letter {top} exceeds alphabet bound {self.alphabet}")
        if not self._checked:
            for f in factors:
                if not is_rectangular(f) or not is_semistandard(f):
                    raise CrystalError(f"factor {f} is not a rectangular semistandard tableau")

    @classmethod
    def from_word(cls, word: Iterable[int], alphabet: int = 0) -> "TensorPath":
        return cls(tuple(((x,),) for x in word), alphabet, _checked=True)

    @classmethod
    def parse(cls, text: str, alphabet: int = 0) -> "TensorPath":
        text = text.strip()
        if text.startswith("["):
            return cls(tuple(parse_tableau(part) for part in text.split("|")), alphabet)
        return cls.from_word(parse_word(text), alphabet)

    def __str__(self) -> str:
        if self.is_word():
            return format_word(self.word())
        return "|".join(format_tableau(f) for f in self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    @property
    def shapes(self) -> tuple[tuple[int, int], ...]:
        return tuple(rect_shape(f) for f in self.factors)

    def is_word(self) -> bool:
        return all(len(f) == 1 and len(f[0]) == 1 for f in self.factors)

    def word(self) -> tuple[int, ...]:
        if not self.is_word():
            raise CrystalError("path has factors other than B^{1,1}")
        return tuple(f[0][0] for f in self.factors)

    def max_letter(self) -> int:
        return max(x for f in self.factors for row in f for x in row)


PathLike = Union[TensorPath, Sequence[Tableau]]


def factors_of(p: PathLike) -> tuple[Tableau, ...]:
    if isinstance(p, TensorPath):
        return p.factors
    return tuple(p)


def weight(p: PathLike, n: int | None = None) -> tuple[int, ...]:
    """Number of letters i over all factors, for i = 1..n."""
    fs = factors_of(p)
    if n is None:
        n = p.alphabet if isinstance(p, TensorPath) else max(x for f in fs for row in f for x in row)
    out = [0] * n
    for f in fs:
        for row in f:
            for x in row:
                out[x - 1] += 1
    return tuple(out)


# -- Kashiwara operators -----------------------------------------------------

def _reading_cells(fs: tuple[Tableau, ...]) -> list[tuple[int, int, int]]:
    # factors left to right; inside a factor rows top to bottom, each row right to left
    cells = []
    for k, f in enumerate(fs):
        for i, row in enumerate(f):
            for j in range(len(row) - 1, -1, -1):
                cells.append((k, i, j))
    return cells


def _unpaired(letters: Sequence[int], i: int) -> tuple[list[int], list[int]]:
    """Positions of unbracketed i+1 ('-') and i ('+') letters under the tensor rule."""
    minus: list[int] = []
    plus: list[int] = []
    for pos, x in enumerate(letters):
        if x == i:
            plus.append(pos)
        elif x == i + 1:
            if plus:
                plus.pop()
            else:
                minus.append(pos)
    return minus, plus


def kashiwara(p: PathLike, i: int, direction: str):
    """Apply e_i (``direction='raise'``) or f_i (``'lower'``); returns None when killed."""
    if direction not in ("raise", "lower"):
        raise ValueError(f"direction must be 'raise' or 'lower', not {direction!r}")
    fs = factors_of(p)
    alphabet = p.alphabet if isinstance(p, TensorPath) else None
    if i < 1 or (alphabet is not None and i >= alphabet):
        raise CrystalError(f"operator index {i} outside 1..{(alphabet or 0) - 1}")
    cells = _reading_cells(fs)
    letters = [fs[k][a][b] for k, a, b in cells]
    minus, plus = _unpaired(letters, i)
    if direction == "raise":
        if not minus:
            return None
        pos, new = minus[-1], i
    else:
        if not plus:
            return None
        pos, new = plus[0], i + 1
    k, a, b = cells[pos]
    f = [list(row) for row in fs[k]]
    f[a][b] = new
    out = fs[:k] + (tuple(tuple(row) for row in f),) + fs[k + 1:]
    if isinstance(p, TensorPath):
        return TensorPath(out, p.alphabet, _checked=True)
    return out


def epsilon(p: PathLike, i: int) -> int:
    fs = factors_of(p)
    letters = [fs[k][a][b] for k, a, b in _reading_cells(fs)]
    return len(_unpaired(letters, i)[0])


def phi(p: PathLike, i: int) -> int:
    fs = factors_of(p)
    letters = [fs[k][a][b] for k, a, b in _reading_cells(fs)]
    return len(_unpaired(letters, i)[1])


def is_highest(p: PathLike, n: int | None = None) -> bool:
    """True iff every raising operator e_1..e_{n} kills the path."""
    fs = factors_of(p)
    letters = [fs[k][a][b] for k, a, b in _reading_cells(fs)]
    if n is None:
        n = max(letters) - 1
    return all(not _unpaired(letters, i)[0] for i in range(1, n + 1))


def is_yamanouchi(word: Sequence[int]) -> bool:
    """Every prefix contains at least as many i's as (i+1)'s."""
    counts: dict[int, int] = {}
    for x in word:
        counts[x] = counts.get(x, 0) + 1
        if x > 1 and counts[x] > counts.get(x - 1, 0):
            return False
    return True


# -- combinatorial R and energy ------------------------------------------------

class RResult(NamedTuple):
    left: Tableau
    right: Tableau
    energy: int


def _choose_strip(lam: list[int], inner: list[int], k: int) -> tuple[int, ...]:
    """Uppermost set of k rows whose last cells form a removable vertical strip."""
    candidates = [i for i in range(len(lam)) if lam[i] > inner[i]]
    for rows in itertools.combinations(candidates, k):
        chosen = set(rows)
        if all(
            lam[i] - 1 >= (lam[i + 1] if i + 1 < len(lam) else 0) - (1 if i + 1 in chosen else 0)
            for i in rows
        ):
            return rows
    raise CrystalError(f"no vertical {k}-strip in shape {lam} over {inner}")


@lru_cache(maxsize=1 << 20)
def combinatorial_R(b: Tableau, b2: Tableau) -> RResult:
    """R: b (x) b2 -> b2~ (x) b~ together with the energy H(b (x) b2)."""
    r, s = rect_shape(b)
    r2, s2 = rect_shape(b2)
    y = row_insert(b2, row_word(b))
    lam = list(shape(y))
    depth = len(lam)
    inner = [s if i < r else 0 for i in range(depth)]
    concat = [(s if i < r else 0) + (s2 if i < r2 else 0) for i in range(depth)]
    h = sum(max(0, a - c) for a, c in zip(lam, concat))
    ejected = []
    cur = y
    for _ in range(s2):
        rows = _choose_strip(lam, inner, r2)
        for i in reversed(rows):
            cur, u = inverse_bump(cur, (i, lam[i] - 1))
            lam[i] -= 1
            ejected.append(u)
    left = row_insert((), reversed(ejected))
    if shape(left) != (s2,) * r2 or shape(cur) != (s,) * r:
        raise CrystalError(f"R algorithm produced wrong shapes for {b} (x) {b2}")
    return RResult(left, cur, h)


def energy_H(b: Tableau, b2: Tableau) -> int:
    return combinatorial_R(b, b2).energy


def energy_Hbar(b: Tableau, b2: Tableau) -> int:
    r, s = rect_shape(b)
    r2, s2 = rect_shape(b2)
    return min(r, r2) * min(s, s2) - energy_H(b, b2)


class AffineElement(NamedTuple):
    b: Tableau
    d: int


def affine_R(x: AffineElement, y: AffineElement) -> tuple[AffineElement, AffineElement]:
    left, right, h = combinatorial_R(x.b, y.b)
    return AffineElement(left, y.d - h), AffineElement(right, x.d + h)


def r_propagate(p: PathLike, j: int) -> tuple[Tableau, ...]:
    """Images of factor j carried leftwards by R.

    Returns ``out`` of length j + 1 (0-based positions) where ``out[k]`` is the
    factor-j image once it sits at position k; ``out[j]`` is factor j itself.
    """
    fs = factors_of(p)
    if not 0 <= j < len(fs):
        raise IndexError(f"position {j} outside path of length {len(fs)}")
    out = [None] * (j + 1)
    x = fs[j]
    out[j] = x
    for k in range(j - 1, -1, -1):
        x = combinatorial_R(fs[k], x).left
        out[k] = x
    return tuple(out)


def pairwise_energies(p: PathLike) -> Iterator[tuple[int, int, int, int]]:
    """Yield (i, j, H, Hbar) for i < j using H(b_i (x) b_j^{(i+1)})."""
    fs = factors_of(p)
    for j in range(1, len(fs)):
        x = fs[j]
        rj, sj = rect_shape(x)
        for i in range(j - 1, -1, -1):
            res = combinatorial_R(fs[i], x)
            ri, si = rect_shape(fs[i])
            yield i, j, res.energy, min(ri, rj) * min(si, sj) - res.energy
            x = res.left


# -- path enumeration ------------------------------------------------------------

Rect = tuple[int, int]


def all_paths(rects: Sequence[Rect], n: int) -> Iterator[tuple[Tableau, ...]]:
    """Every path of B^{r_1,s_1} (x) ... over the alphabet 1..n."""
    pools = [all_ssyt((s,) * r, n) for r, s in rects]
    return itertools.product(*pools)


def paths_of_weight(rects: Sequence[Rect], wt: Sequence[int]) -> Iterator[tuple[Tableau, ...]]:
    """Every path of the given rectangles whose weight is ``wt``."""
    wt = tuple(wt)
    n = len(wt)
    if sum(r * s for r, s in rects) != sum(wt):
        return
    pools = []
    for r, s in rects:
        if r > n:
            return
        pools.append([(b, _content(b, n)) for b in all_ssyt((s,) * r, n)])

    def rec(k: int, remaining: tuple[int, ...], acc: list[Tableau]):
        if k == len(pools):
            yield tuple(acc)
            return
        for b, c in pools[k]:
            if all(a <= m for a, m in zip(c, remaining)):
                acc.append(b)
                yield from rec(k + 1, tuple(m - a for a, m in zip(c, remaining)), acc)
                acc.pop()

    yield from rec(0, wt, [])


def highest_paths(rects: Sequence[Rect], wt: Sequence[int]) -> Iterator[tuple[Tableau, ...]]:
    n = len(wt)
    for p in paths_of_weight(rects, wt):
        if is_highest(p, n - 1):
            yield p


@lru_cache(maxsize=None)
def _content(b: Tableau, n: int) -> tuple[int, ...]:
    out = [0] * n
    for row in b:
        for x in row:
            out[x - 1] += 1
    return tuple(out)


def parse_rects(text: str) -> tuple[Rect, ...]:
    """'3x2,2x2' -> ((3, 2), (2, 2)); each token is rows x columns."""
    out = []
    for tok in text.split(","):
        tok = tok.strip().lower()
        try:
            r, s = tok.split("x")
            r, s = int(r), int(s)
        except ValueError as exc:
            raise TableauError(f"malformed rectangle token {tok!r}") from exc
        if r < 1 or s < 1:
            raise TableauError(f"rectangle {tok!r} must have positive sides")
        out.append((r, s))
    return tuple(out)
