"""Path statistics: charge, energy-type maj/ebar/tau, Haglund's inv and maj, regularization.

Single-box paths (all factors in B^{1,1}) may be passed as words: a tuple of
ints, a digit string, or a :class:`TensorPath` of single boxes.
"""
from __future__ import annotations

from math import comb
from typing import Sequence, Union

from .crystal import (
    TensorPath,
    combinatorial_R,
    factors_of,
    highest_element,
    pairwise_energies,
    r_propagate,
    rect_shape,
)
from .tableaux import Tableau, Word, content, is_partition, parse_word, tabloid_from_factors, tabloid_reading_word


class StatisticError(ValueError):
    pass


WordLike = Union[str, Sequence[int], TensorPath]


def as_word(p: WordLike) -> Word:
    if isinstance(p, str):
        return parse_word(p)
    if isinstance(p, TensorPath):
        return p.word()
    p = tuple(p)
    if p and not isinstance(p[0], int):
        if not all(len(f) == 1 and len(f[0]) == 1 for f in p):
            raise StatisticError("expected a path of single boxes")
        return tuple(f[0][0] for f in p)
    return p


def as_factors(p) -> tuple[Tableau, ...]:
    if isinstance(p, str):
        return tuple(((x,),) for x in parse_word(p))
    fs = factors_of(p)
    if fs and isinstance(fs[0], int):
        return tuple(((x,),) for x in fs)
    return fs


def _is_word_path(fs: tuple[Tableau, ...]) -> bool:
    return all(len(f) == 1 and len(f[0]) == 1 for f in fs)


# -- charge ----------------------------------------------------------------------

def _standard_charge(w: Sequence[int]) -> int:
    # index(k+1) = index(k) when k+1 sits right of k, else index(k) + 1
    pos = {x: i for i, x in enumerate(w)}
    idx = total = 0
    for k in range(2, len(w) + 1):
        if pos[k] < pos[k - 1]:
            idx += 1
        total += idx
    return total


def standard_subwords(w: Sequence[int]) -> list[list[int]]:
    """Split a word of partition content into standard subwords.

    Each subword is extracted by scanning from the right end leftwards,
    cyclically, picking 1, then 2, ...; letters keep their relative order.
    """
    w = list(w)
    if not w:
        return []
    c = content(w)
    if min(w) < 1 or not is_partition(c) or 0 in c:
        raise StatisticError(f"content {c} of word {tuple(w)} is not a partition")
    alive = [True] * len(w)
    out = []
    remaining = len(w)
    while remaining:
        picked = []
        pos = len(w)
        k = 1
        while True:
            found = None
            for step in range(1, len(w) + 1):
                i = (pos - step) % len(w)
                if alive[i] and w[i] == k:
                    found = i
                    break
            if found is None:
                break
            picked.append(found)
            alive[found] = False
            pos = found
            k += 1
        remaining -= len(picked)
        out.append([w[i] for i in sorted(picked)])
    return out


def charge(w: WordLike) -> int:
    """Charge with index(1)=0, raised by one whenever k+1 lies left of k."""
    return sum(_standard_charge(sub) for sub in standard_subwords(as_word(w)))


def n_of(mu: Sequence[int]) -> int:
    return sum(i * m for i, m in enumerate(mu))


def cocharge(w: WordLike) -> int:
    w = as_word(w)
    return n_of(sorted(content(w), reverse=True)) - charge(w)


def path_tabloid_word(p: WordLike) -> Word:
    """Reading word of the tabloid whose k-th row lists the positions of letter k."""
    w = as_word(p)
    return tabloid_reading_word(tabloid_from_factors([(x,) for x in w]))


def path_charge(p: WordLike) -> int:
    return charge(path_tabloid_word(p))


def blocks(p: WordLike, mu: Sequence[int]) -> list[Word]:
    w = as_word(p)
    if sum(mu) != len(w):
        raise StatisticError(f"path length {len(w)} differs from |mu| = {sum(mu)}")
    out, start = [], 0
    for m in mu:
        out.append(w[start:start + m])
        start += m
    return out


def c_mu(p: WordLike, mu: Sequence[int]) -> int:
    return sum(path_charge(b) for b in blocks(p, mu) if b)


# -- energy statistics --------------------------------------------------------------

def maj_word(w: Sequence[int]) -> int:
    L = len(w)
    return sum(L - i for i in range(1, L) if w[i - 1] < w[i])


def maj(p) -> int:
    """Sum over i < j of H(b_i (x) b_j^{(i+1)})."""
    fs = as_factors(p)
    if _is_word_path(fs):
        return maj_word([f[0][0] for f in fs])
    return sum(h for _, _, h, _ in pairwise_energies(fs))


def maj_generic(p) -> int:
    """maj through the R-propagation route even for single-box paths."""
    return sum(h for _, _, h, _ in pairwise_energies(as_factors(p)))


def pair_bound(p) -> int:
    """Sum over i < j of min(r_i, r_j) min(s_i, s_j)."""
    shapes = [rect_shape(f) for f in as_factors(p)]
    return sum(
        min(a[0], b[0]) * min(a[1], b[1])
        for i, a in enumerate(shapes) for b in shapes[i + 1:]
    )


def ebar(p) -> int:
    fs = as_factors(p)
    return sum(hb for _, _, _, hb in pairwise_energies(fs))


def tau_rs(p, r: int, s: int) -> int:
    """maj of the path with the highest r x s rectangle prepended."""
    if r < 1 or s < 1:
        raise StatisticError("r and s must be positive")
    fs = as_factors(p)
    u = highest_element(r, s)
    extra = 0
    for j in range(len(fs)):
        extra += combinatorial_R(u, r_propagate(fs, j)[0]).energy
    return maj(fs) + extra


def tau_rs_literal(p, r: int, s: int) -> int:
    fs = as_factors(p)
    return maj_generic((highest_element(r, s),) + fs)


def tau(p: WordLike) -> int:
    w = as_word(p)
    if not w:
        return 0
    return maj_word(w) + (len(w) if w[0] != 1 else 0)


def tau_mu(p: WordLike, mu: Sequence[int]) -> int:
    return sum(tau(b) for b in blocks(p, mu))


def block_maj(p: WordLike, mu: Sequence[int]) -> int:
    """Sum of maj over the mu-blocks of the path."""
    return sum(maj_word(b) for b in blocks(p, mu))


def lemma_tau_charge_bound(p: WordLike, mu: Sequence[int]) -> int:
    """Value predicted for tau_mu + c_mu: sum of binom(mu_i+1, 2) - mu_i [block i starts with 1]."""
    return sum(comb(len(b) + 1, 2) - (len(b) if b and b[0] == 1 else 0) for b in blocks(p, mu))


# -- Haglund statistics -----------------------------------------------------------

def haglund_tabloid(p: WordLike, mu: Sequence[int]) -> tuple[Word, ...]:
    """Filling of shape mu whose i-th row is the i-th mu-block written right to left."""
    if not is_partition(mu):
        raise StatisticError(f"{tuple(mu)} is not a partition")
    return tuple(tuple(reversed(b)) for b in blocks(p, mu))


def inv_count_tableau(t: Sequence[Sequence[int]]) -> int:
    total = 0
    for i, row in enumerate(t):
        below = t[i + 1] if i + 1 < len(t) else ()
        for j, x in enumerate(row):
            total += sum(1 for y in row[:j] if y > x)
            total += sum(1 for y in below[j + 1:] if y > x)
    return total


def des_tableau(t: Sequence[Sequence[int]]) -> int:
    total = 0
    for i in range(1, len(t)):
        for j, x in enumerate(t[i]):
            if t[i - 1][j] < x:
                total += len(t[i]) - 1 - j
    return total


def maj_tableau(t: Sequence[Sequence[int]]) -> int:
    return sum(
        maj_word([row[j] for row in t if len(row) > j]) for j in range(len(t[0]))
    ) if t else 0


def haglund_inv(p: WordLike, mu: Sequence[int]) -> int:
    return inv_count_tableau(haglund_tabloid(p, mu))


def haglund_des(p: WordLike, mu: Sequence[int]) -> int:
    return des_tableau(haglund_tabloid(p, mu))


def inv_mu(p: WordLike, mu: Sequence[int]) -> int:
    t = haglund_tabloid(p, mu)
    return inv_count_tableau(t) - des_tableau(t)


def maj_mu(p: WordLike, mu: Sequence[int]) -> int:
    return maj_tableau(haglund_tabloid(p, mu))


def _inv_pair_path(upper: Sequence[int], lower: Sequence[int]) -> int:
    # lower block is left-padded with 1's up to the upper block's length
    m = len(upper)
    a = list(upper) + [1] * (m - len(lower)) + list(lower)
    return sum(1 for k in range(m) for i in range(k + 1, k + m) if a[k] < a[i])


def _des_pair_path(upper: Sequence[int], lower: Sequence[int]) -> int:
    m1, m2 = len(upper), len(lower)
    a = list(upper) + list(lower)
    return sum(
        (k - (m1 - m2) - 1) for k in range(m1 - m2 + 1, m1 + 1) if a[k - 1] < a[k + m2 - 1]
    )


def haglund_inv_path(p: WordLike, mu: Sequence[int]) -> int:
    bs = blocks(p, mu) + [()]
    return sum(_inv_pair_path(bs[i], bs[i + 1]) for i in range(len(mu)))


def haglund_des_path(p: WordLike, mu: Sequence[int]) -> int:
    bs = blocks(p, mu)
    return sum(_des_pair_path(bs[i], bs[i + 1]) for i in range(len(bs) - 1))


# -- regularization -------------------------------------------------------------------

def regularize(p: WordLike, n: int | None = None) -> Word:
    """Prepend (1..n-1)^{lam_n} ... (1 2)^{lam_3} 1^{lam_2} to the path."""
    w = as_word(p)
    lam = content(w, n)
    prefix: list[int] = []
    for k in range(len(lam), 1, -1):
        prefix.extend(list(range(1, k)) * lam[k - 1])
    return tuple(prefix) + w


STATISTICS = {
    "charge": lambda p, mu=None: charge(p),
    "cocharge": lambda p, mu=None: cocharge(p),
    "maj": lambda p, mu=None: maj(p),
    "ebar": lambda p, mu=None: ebar(p),
    "tau": lambda p, mu=None: tau(p),
    "tau_mu": lambda p, mu: tau_mu(p, mu),
    "c_mu": lambda p, mu: c_mu(p, mu),
    "inv_mu": lambda p, mu: inv_mu(p, mu),
    "maj_mu": lambda p, mu: maj_mu(p, mu),
}
