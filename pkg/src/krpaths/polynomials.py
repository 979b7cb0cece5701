"""Kostka-type polynomials built from path and tableau enumeration.

Schur coefficients are extracted from monomial coefficients at partition
weights by peeling off the unitriangular Kostka matrix, so no symmetric
function algebra is needed.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .crystal import Rect, highest_paths, is_yamanouchi
from .poly import QPoly, QTPoly
from .statistics import cocharge, ebar, inv_mu, maj_mu, n_of
from .tableaux import compositions, enumerate_ssyt, is_partition, partitions, row_word

__all__ = [
    "QPoly",
    "QTPoly",
    "PolynomialError",
    "kostka_number",
    "kostka_foulkes",
    "parabolic_kostka",
    "hhl_monomial_gf",
    "modified_macdonald",
    "kostka_macdonald",
    "macdonald_schur_expansion",
    "multiset_words",
    "n_of",
    "n_of_R",
    "dual_rectangles",
]


class PolynomialError(ValueError):
    pass


def _check_partition(lam: Sequence[int], name: str) -> tuple[int, ...]:
    lam = tuple(lam)
    if not is_partition(lam) or any(x <= 0 for x in lam):
        raise PolynomialError(f"{name}={lam} is not a partition")
    return lam


def _check_sizes(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise PolynomialError(f"size mismatch: |{tuple(a)}| = {sum(a)} but |{tuple(b)}| = {sum(b)}")


@lru_cache(maxsize=None)
def _kostka(lam: tuple[int, ...], alpha: tuple[int, ...]) -> int:
    return sum(1 for _ in enumerate_ssyt(lam, alpha))


def kostka_number(lam: Sequence[int], alpha: Sequence[int]) -> int:
    lam = _check_partition(lam, "lambda")
    _check_sizes(lam, alpha)
    return _kostka(lam, tuple(alpha))


@lru_cache(maxsize=None)
def _kostka_foulkes(lam: tuple[int, ...], mu: tuple[int, ...]) -> QPoly:
    return QPoly.from_exponents(cocharge(row_word(t)) for t in enumerate_ssyt(lam, mu))


def kostka_foulkes(lam: Sequence[int], mu: Sequence[int]) -> QPoly:
    """K_{lam,mu}(q): sum over SSYT(lam, mu) of q to the Lascoux-Schutzenberger charge.

    In the index convention of :func:`krpaths.statistics.charge` that
    exponent is the cocharge of the row reading word.
    """
    lam = _check_partition(lam, "lambda")
    mu = _check_partition(mu, "mu")
    _check_sizes(lam, mu)
    return _kostka_foulkes(lam, mu)


@lru_cache(maxsize=None)
def _parabolic(lam: tuple[int, ...], rects: tuple[Rect, ...]) -> QPoly:
    return QPoly.from_exponents(ebar(p) for p in highest_paths(rects, lam))


def parabolic_kostka(lam: Sequence[int], rects: Sequence[Rect]) -> QPoly:
    """Sum of q^{Ebar} over highest paths of weight lam in the given tensor product."""
    lam = _check_partition(lam, "lambda")
    rects = tuple((int(r), int(s)) for r, s in rects)
    if sum(lam) != sum(r * s for r, s in rects):
        raise PolynomialError(f"|lambda| = {sum(lam)} differs from the total rectangle size")
    return _parabolic(lam, rects)


def n_of_R(rects: Sequence[Rect]) -> int:
    return sum(
        min(a[0], b[0]) * min(a[1], b[1])
        for i, a in enumerate(rects) for b in rects[i + 1:]
    )


def dual_rectangles(rects: Sequence[Rect]) -> tuple[Rect, ...]:
    """Transpose every rectangle and sort by width, then height, both descending."""
    return tuple(sorted(((s, r) for r, s in rects), key=lambda x: (x[1], x[0]), reverse=True))


def multiset_words(alpha: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All words with alpha[i] copies of letter i+1, in lexicographic order."""
    counts = list(alpha)
    n = sum(counts)
    word = [0] * n

    def rec(k: int):
        if k == n:
            yield tuple(word)
            return
        for letter, c in enumerate(counts):
            if c:
                counts[letter] -= 1
                word[k] = letter + 1
                yield from rec(k + 1)
                counts[letter] += 1

    yield from rec(0)


@lru_cache(maxsize=None)
def _hhl(mu: tuple[int, ...], alpha: tuple[int, ...], highest: bool) -> QTPoly:
    return QTPoly.from_exponents(
        (inv_mu(w, mu), maj_mu(w, mu))
        for w in multiset_words(alpha)
        if not highest or is_yamanouchi(w)
    )


def hhl_monomial_gf(mu: Sequence[int], alpha: Sequence[int], highest: bool = False) -> QTPoly:
    """Sum of q^{inv_mu} t^{maj_mu} over paths of weight alpha (highest paths only if asked)."""
    mu = _check_partition(mu, "mu")
    _check_sizes(mu, alpha)
    return _hhl(mu, tuple(alpha), highest)


def modified_macdonald(mu: Sequence[int], nvars: int | None = None) -> dict[tuple[int, ...], QTPoly]:
    """Monomial coefficients of the modified Macdonald polynomial in nvars variables."""
    mu = _check_partition(mu, "mu")
    n = sum(mu)
    nvars = n if nvars is None else nvars
    out = {}
    for alpha in compositions(n, nvars):
        gf = _hhl(mu, _strip(alpha), False)
        if gf:
            out[alpha] = gf
    return out


def _strip(alpha: tuple[int, ...]) -> tuple[int, ...]:
    # the statistics only see relative order of letters, so zero parts can be dropped
    return tuple(a for a in alpha if a)


@lru_cache(maxsize=None)
def macdonald_schur_expansion(mu: tuple[int, ...]) -> dict[tuple[int, ...], QTPoly]:
    """Map lambda -> K~_{lambda,mu}(q,t) for all partitions lambda of |mu|."""
    mu = _check_partition(mu, "mu")
    parts = list(partitions(sum(mu)))
    out: dict[tuple[int, ...], QTPoly] = {}
    for nu in parts:
        if _kostka(nu, nu) != 1:
            raise PolynomialError(f"Kostka matrix is not unitriangular at {nu}")
        acc = _hhl(mu, nu, False)
        for eta, val in out.items():
            k = _kostka(eta, nu)
            if k:
                acc = acc - val * k
        out[nu] = acc
    return out


def kostka_macdonald(lam: Sequence[int], mu: Sequence[int]) -> QTPoly:
    lam = _check_partition(lam, "lambda")
    mu = _check_partition(mu, "mu")
    _check_sizes(lam, mu)
    return macdonald_schur_expansion(mu)[lam]


def schur_to_monomial(coeffs: dict[tuple[int, ...], QPoly | QTPoly], alpha: Sequence[int]):
    """Sum over eta of K_{eta,alpha} * coeffs[eta]."""
    total = None
    for eta, val in coeffs.items():
        k = _kostka(eta, tuple(alpha))
        if k:
            total = val * k if total is None else total + val * k
    return total
