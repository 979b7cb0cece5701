"""Box-ball system: carrier time evolutions, their stable limit and the ball-moving rule.

Letter 1 is an empty box; letters 2, 3, ... are balls of different colours.
"""
from __future__ import annotations

from typing import Sequence

from .crystal import combinatorial_R, highest_element
from .statistics import as_factors, as_word
from .tableaux import Tableau, Word, format_word


class BBSError(ValueError):
    pass


class BBSOverflowError(BBSError):
    """A ball found no empty box to its right; pad the path with trailing 1's."""


def carrier_step(p, a: int, l: int) -> tuple[tuple[Tableau, ...], tuple[Tableau, ...]]:
    """T_l^{(a)}: thread the carrier u^{(a)}_l through the path from left to right.

    Returns the new path and the carrier trace u_0, u_1, ..., u_L.
    """
    if a < 1 or l < 1:
        raise BBSError("carrier dimensions must be positive")
    fs = as_factors(p)
    u = highest_element(a, l)
    out = []
    trace = [u]
    for b in fs:
        res = combinatorial_R(u, b)
        out.append(res.left)
        u = res.right
        trace.append(u)
    return tuple(out), tuple(trace)


def t_infinity(p, a: int = 1) -> tuple[Tableau, ...]:
    """Stable limit of T_l^{(a)} as l grows."""
    fs = as_factors(p)
    cap = max(1, len(fs) * max(len(f[0]) for f in fs))
    stable = carrier_step(fs, a, cap)[0]
    prev = carrier_step(fs, a, 1)[0]
    for l in range(2, cap + 1):
        cur = carrier_step(fs, a, l)[0]
        if cur == prev and cur == stable:
            return cur
        prev = cur
    return stable


def stable_length(p, a: int = 1) -> int:
    """Smallest l from which T_l^{(a)} agrees with the stable image."""
    fs = as_factors(p)
    target = t_infinity(fs, a)
    l = cap = max(1, len(fs) * max(len(f[0]) for f in fs))
    while l > 1 and carrier_step(fs, a, l - 1)[0] == target:
        l -= 1
    return min(l, cap)


def _word_image(p) -> Word:
    return tuple(f[0][0] for f in t_infinity(p, 1))


def takahashi_satsuma(p, overflow: str = "drop") -> Word:
    """Move balls of the largest colour first, leftmost first, each once, to the nearest empty box on its right.

    A ball with no empty box to its right leaves the system when ``overflow``
    is ``"drop"`` (the same as padding with 1's and truncating) and raises
    :class:`BBSOverflowError` when it is ``"error"``.
    """
    if overflow not in ("drop", "error"):
        raise BBSError(f"overflow must be 'drop' or 'error', not {overflow!r}")
    w = list(as_word(p))
    for colour in range(max(w, default=1), 1, -1):
        for i in [k for k, x in enumerate(w) if x == colour]:
            try:
                j = w.index(1, i + 1)
            except ValueError:
                if overflow == "error":
                    raise BBSOverflowError(
                        f"ball {colour} at position {i + 1} has no empty box to its right"
                    ) from None
                w[i] = 1
                continue
            w[j], w[i] = colour, 1
    return tuple(w)


def step(p, alg: str = "carrier") -> Word:
    if alg == "carrier":
        return _word_image(p)
    if alg == "ts":
        return takahashi_satsuma(p)
    raise BBSError(f"unknown algorithm {alg!r}")


def evolution_table(p, steps: int, alg: str = "carrier") -> tuple[Word, ...]:
    """Rows p, T(p), ..., T^{steps-1}(p)."""
    if steps < 0:
        raise BBSError("steps must be nonnegative")
    w = as_word(p)
    rows = []
    for _ in range(steps):
        rows.append(w)
        w = step(w, alg)
    return tuple(rows)


def soliton_tau(p) -> int:
    """Total number of balls seen in p, T(p), ..., T^{L-1}(p)."""
    w = as_word(p)
    return sum(sum(1 for x in row if x != 1) for row in evolution_table(w, len(w)))


def format_table(rows: Sequence[Sequence[int]]) -> str:
    return "\n".join(" ".join(str(x) for x in row) for row in rows)


def solitons(w: Sequence[int]) -> list[Word]:
    """Maximal runs of balls (letters other than 1)."""
    out, cur = [], []
    for x in w:
        if x == 1:
            if cur:
                out.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        out.append(tuple(cur))
    return out


__all__ = [
    "BBSError",
    "BBSOverflowError",
    "carrier_step",
    "evolution_table",
    "format_table",
    "format_word",
    "soliton_tau",
    "solitons",
    "stable_length",
    "step",
    "t_infinity",
    "takahashi_satsuma",
]
