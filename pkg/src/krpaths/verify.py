"""Checkers for the generating-function identities relating path statistics to Kostka-type polynomials.

Each checker returns a :class:`VerificationReport` carrying both sides of the
identity. Checks of conjectural identities may fit an integer power shift;
the report records it and says whether equality needed the shift.
"""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .crystal import Rect, factors_of, is_yamanouchi, paths_of_weight, rect_shape
from .poly import QPoly, QTPoly
from .polynomials import (
    PolynomialError,
    _kostka,
    hhl_monomial_gf,
    kostka_macdonald,
    macdonald_schur_expansion,
    multiset_words,
    parabolic_kostka,
)
from .statistics import block_maj, ebar, maj_mu, pair_bound, regularize, tau, tau_mu, tau_rs
from .tableaux import compositions, conjugate, dominates, partitions

PASS, FAIL = "PASS", "FAIL"


@dataclass
class VerificationReport:
    identity: str
    parameters: dict
    lhs: QPoly | QTPoly
    rhs: QPoly | QTPoly
    verdict: str
    shift: int | None = None
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_json(self) -> dict:
        out = {
            "identity": self.identity,
            "parameters": {k: _jsonable(v) for k, v in self.parameters.items()},
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
            "verdict": self.verdict,
        }
        if self.shift is not None:
            out["shift"] = self.shift
        if self.extra:
            out["extra"] = {k: _jsonable(v) for k, v in self.extra.items()}
        return out

    def summary(self) -> str:
        params = " ".join(f"{k}={_compact(v)}" for k, v in self.parameters.items())
        line = f"{self.verdict} {self.identity} {params}"
        if self.shift is not None:
            line += f" shift={self.shift}"
        return line


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    return v


def _compact(v) -> str:
    if isinstance(v, (list, tuple)):
        if v and isinstance(v[0], (list, tuple)):
            return ",".join(f"{a}x{b}" for a, b in v)
        return ",".join(map(str, v))
    return str(v)


def _verdict(ok: bool) -> str:
    return PASS if ok else FAIL


def _fit_shift(lhs: QPoly, rhs: QPoly) -> tuple[int | None, bool]:
    """Shift k with lhs == q^k rhs, or (None, False) when no shift works."""
    if not lhs and not rhs:
        return 0, True
    if not lhs or not rhs:
        return None, False
    k = lhs.min_degree() - rhs.min_degree()
    return k, lhs == rhs.shift(k)


def _size_check(a: Sequence[int], b: Sequence[int]) -> None:
    if sum(a) != sum(b):
        raise PolynomialError(f"size mismatch between {tuple(a)} and {tuple(b)}")


def _schur_side_at_t1(alpha: Sequence[int], mu: Sequence[int]) -> QPoly:
    """Sum over eta of K_{eta,alpha} K~_{eta,mu}(q,1)."""
    expansion = macdonald_schur_expansion(tuple(mu))
    total = QPoly.zero()
    for eta, val in expansion.items():
        k = _kostka(eta, tuple(alpha))
        if k:
            total = total + val.specialize_t(1) * k
    return total


# -- Macdonald-type identities ------------------------------------------------------

def check_theorem_main(alpha: Sequence[int], mu: Sequence[int], statistic: str = "block") -> VerificationReport:
    """Sum over paths of weight alpha of q^{maj} against sum_eta K_{eta,alpha} K_{eta,mu}(q,1).

    ``statistic="block"`` sums maj over the mu-blocks of the path;
    ``"column"`` uses Haglund's column maj for the conjugate shape.
    """
    alpha, mu = tuple(alpha), tuple(mu)
    _size_check(alpha, mu)
    if statistic == "block":
        stat = lambda w: block_maj(w, mu)
    elif statistic == "column":
        mu_c = conjugate(mu)
        stat = lambda w: maj_mu(w, mu_c)
    else:
        raise ValueError(f"unknown statistic {statistic!r}")
    lhs = QPoly.from_exponents(stat(w) for w in multiset_words(alpha))
    rhs = _schur_side_at_t1(alpha, mu)
    return VerificationReport("theorem-main", {"alpha": alpha, "mu": mu, "statistic": statistic},
                              lhs, rhs, _verdict(lhs == rhs))


def check_conjecture_main(alpha: Sequence[int], mu: Sequence[int]) -> VerificationReport:
    alpha, mu = tuple(alpha), tuple(mu)
    _size_check(alpha, mu)
    balls = sum(alpha[1:])
    lhs = QPoly.from_exponents(tau_mu(w, mu) - balls for w in multiset_words(alpha))
    rhs = _schur_side_at_t1(alpha, mu)
    return VerificationReport("conjecture-main", {"alpha": alpha, "mu": mu}, lhs, rhs, _verdict(lhs == rhs))


def is_hook(lam: Sequence[int]) -> bool:
    return len(lam) < 2 or all(x == 1 for x in lam[1:])


def hhl_condition(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """(mu_1 <= 3 and mu_2 <= 2) or lam is a hook."""
    mu2 = mu[1] if len(mu) > 1 else 0
    return (mu[0] <= 3 and mu2 <= 2) or is_hook(lam)


def check_hhl_kostka(lam: Sequence[int], mu: Sequence[int]) -> VerificationReport:
    """K~_{lam,mu}(q,t) against the (inv, maj) generating function of highest paths of weight lam."""
    lam, mu = tuple(lam), tuple(mu)
    _size_check(lam, mu)
    lhs = kostka_macdonald(lam, mu)
    rhs = hhl_monomial_gf(mu, lam, highest=True)
    ok = lhs == rhs
    predicted = hhl_condition(lam, mu)
    return VerificationReport("hhl-kostka", {"lambda": lam, "mu": mu}, lhs, rhs, _verdict(ok),
                              extra={"predicted_equal": predicted, "prediction_holds": predicted == ok})


# -- rectangle identities ----------------------------------------------------------------

def _dominating(lam: Sequence[int]) -> list[tuple[int, ...]]:
    base = tuple(sorted((x for x in lam if x), reverse=True))
    return [eta for eta in partitions(sum(base)) if dominates(eta, base)]


def _parabolic_sum(lam: Sequence[int], rects: Sequence[Rect], invert: bool) -> QPoly:
    total = QPoly.zero()
    for eta in _dominating(lam):
        k = _kostka(eta, tuple(lam))
        if not k:
            continue
        kp = parabolic_kostka(eta, rects)
        total = total + (kp.invert() if invert else kp) * k
    return total


def check_conj_tau(rects: Sequence[Rect], lam: Sequence[int], r: int, s: int) -> VerificationReport:
    rects, lam = tuple(map(tuple, rects)), tuple(lam)
    lhs = QPoly.from_exponents(tau_rs(p, r, s) for p in paths_of_weight(rects, lam))
    base = _parabolic_sum(lam, rects, invert=True)
    shift, ok = _fit_shift(lhs, base)
    return VerificationReport("conj-tau", {"rects": rects, "weight": lam, "r": r, "s": s},
                              lhs, base.shift(shift) if shift is not None else base, _verdict(ok), shift,
                              extra={"exact_without_shift": ok and shift == 0})


def check_conj_ebar(rects: Sequence[Rect], lam: Sequence[int]) -> VerificationReport:
    rects, lam = tuple(map(tuple, rects)), tuple(lam)
    lhs = QPoly.from_exponents(ebar(p) for p in paths_of_weight(rects, lam))
    rhs = _parabolic_sum(lam, rects, invert=False)
    return VerificationReport("conj-ebar", {"rects": rects, "weight": lam}, lhs, rhs, _verdict(lhs == rhs))


def check_e_tau(paths: Iterable, r: int, s: int) -> VerificationReport:
    """Ebar(p) = C - tau^{r,s}(p) with C the sum of pairwise min(r)min(s), for each path."""
    lhs_exps, rhs_exps = [], []
    for p in paths:
        fs = factors_of(p)
        top = max(x for f in fs for row in f for x in row)
        widest = max(rect_shape(f)[1] for f in fs)
        if r < top or s < widest:
            raise ValueError(f"need r >= {top} and s >= {widest}, got r={r}, s={s}")
        lhs_exps.append(ebar(fs))
        rhs_exps.append(pair_bound(fs) - tau_rs(fs, r, s))
    ok = lhs_exps == rhs_exps
    lhs, rhs = QPoly.from_exponents(lhs_exps), QPoly.from_exponents(rhs_exps)
    return VerificationReport("e-tau", {"r": r, "s": s, "paths": len(lhs_exps)}, lhs, rhs, _verdict(ok))


def check_regularization(lam: Sequence[int], length: int | None = None) -> VerificationReport:
    """tau(reg(p)) - tau(p) is the same for every single-box path of weight lam."""
    lam = tuple(lam)
    if length is not None and length != sum(lam):
        raise ValueError(f"length {length} differs from |lambda| = {sum(lam)}")
    diffs, before, after = set(), [], []
    for w in multiset_words(lam):
        t0, t1 = tau(w), tau(regularize(w, len(lam)))
        before.append(t0)
        after.append(t1)
        diffs.add(t1 - t0)
    lhs = QPoly.from_exponents(after)
    rhs = QPoly.from_exponents(before)
    const = diffs.pop() if len(diffs) == 1 else None
    ok = const is not None
    return VerificationReport("regularization", {"weight": lam}, lhs, rhs.shift(const) if ok else rhs,
                              _verdict(ok), const, extra={"highest_after_reg": all(
                                  is_yamanouchi(regularize(w, len(lam))) for w in multiset_words(lam))})


def genmain_sides(r1: Sequence[Rect], r2: Sequence[Rect]) -> tuple[QPoly, QPoly]:
    """(sum_eta K_{eta,R1}(1) K_{eta,R2}(q), K_{Lambda,(kappa,R2)}(q^{-1}))."""
    r1, r2 = tuple(map(tuple, r1)), tuple(map(tuple, r2))
    n = sum(r * s for r, s in r1)
    if n != sum(r * s for r, s in r2):
        raise PolynomialError("rectangle sequences have different sizes")
    lhs = QPoly.zero()
    for eta in partitions(n):
        a = parabolic_kostka(eta, r1).total()
        if a:
            lhs = lhs + parabolic_kostka(eta, r2) * a
    big: list[int] = []
    kappa: list[Rect] = []
    widths = [s for _, s in r1]
    for i, (r, _) in enumerate(r1):
        big.extend([sum(widths[i:])] * r)
        tail = sum(widths[i + 1:])
        if tail:
            kappa.append((r, tail))
    rhs = parabolic_kostka(tuple(sorted(big, reverse=True)), tuple(kappa) + r2).invert()
    return lhs, rhs


def check_genmain(r1: Sequence[Rect], r2: Sequence[Rect]) -> VerificationReport:
    lhs, base = genmain_sides(r1, r2)
    shift, ok = _fit_shift(lhs, base)
    return VerificationReport("conj-genmain", {"R1": tuple(r1), "R2": tuple(r2)}, lhs,
                              base.shift(shift) if shift is not None else base, _verdict(ok), shift)


def check_duality(lam: Sequence[int], rects: Sequence[Rect]) -> VerificationReport:
    """K_{lam,R}(q) = q^{n(R)} K_{lam',R'}(q^{-1}) for a dominant sequence R."""
    from .polynomials import dual_rectangles, n_of_R

    lam, rects = tuple(lam), tuple(map(tuple, rects))
    lhs = parabolic_kostka(lam, rects)
    rhs = parabolic_kostka(conjugate(lam), dual_rectangles(rects)).invert().shift(n_of_R(rects))
    return VerificationReport("duality", {"lambda": lam, "rects": rects}, lhs, rhs, _verdict(lhs == rhs))


# -- sweeps -----------------------------------------------------------------------------

def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("KRPATHS_JOBS", "1")))
    except ValueError:
        return 1


def _apply(task):
    fn, args = task
    return fn(*args)


def run_tasks(fn: Callable[..., VerificationReport], arglist: Sequence[tuple], jobs: int | None = None) -> list[VerificationReport]:
    """Evaluate fn on each argument tuple; results keep the input order regardless of jobs."""
    jobs = default_jobs() if jobs is None else jobs
    tasks = [(fn, args) for args in arglist]
    if jobs <= 1 or len(tasks) < 2:
        return [_apply(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_apply, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


def theorem_main_grid(max_size: int) -> list[tuple]:
    return [(alpha, mu) for n in range(1, max_size + 1)
            for alpha in compositions(n) for mu in partitions(n)]


def sweep_theorem_main(max_size: int, jobs: int | None = None) -> list[VerificationReport]:
    return run_tasks(check_theorem_main, theorem_main_grid(max_size), jobs)


def sweep_conjecture_main(max_size: int, jobs: int | None = None) -> list[VerificationReport]:
    return run_tasks(check_conjecture_main, theorem_main_grid(max_size), jobs)


def sweep_hhl_kostka(max_size: int, jobs: int | None = None, mu_first_max: int | None = None) -> list[VerificationReport]:
    grid = [(lam, mu) for n in range(1, max_size + 1) for mu in partitions(n)
            if mu_first_max is None or mu[0] <= mu_first_max for lam in partitions(n)]
    return run_tasks(check_hhl_kostka, grid, jobs)


def sweep_regularization(max_size: int, jobs: int | None = None) -> list[VerificationReport]:
    grid = [(lam,) for n in range(1, max_size + 1) for lam in compositions(n)]
    return run_tasks(check_regularization, grid, jobs)


def rectangle_sequences(total: int, max_len: int = 3) -> list[tuple[Rect, ...]]:
    """Sequences of rectangles of total size ``total`` with weakly decreasing widths, then heights."""
    out = []

    def rec(remaining: int, acc: list[Rect]):
        if remaining == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_len:
            return
        for r in range(1, remaining + 1):
            for s in range(1, remaining // r + 1):
                if acc and (s, r) > (acc[-1][1], acc[-1][0]):
                    continue
                acc.append((r, s))
                rec(remaining - r * s, acc)
                acc.pop()

    rec(total, [])
    return out


def sweep_conj_ebar(max_size: int, jobs: int | None = None, max_len: int = 3) -> list[VerificationReport]:
    grid = []
    for n in range(1, max_size + 1):
        for rects in rectangle_sequences(n, max_len):
            for lam in partitions(n):
                grid.append((rects, lam))
    return run_tasks(check_conj_ebar, grid, jobs)


def sweep_genmain(max_size: int, jobs: int | None = None, max_len: int = 2) -> list[VerificationReport]:
    grid = []
    for n in range(1, max_size + 1):
        seqs = rectangle_sequences(n, max_len)
        for r1 in seqs:
            for r2 in seqs:
                grid.append((r1, r2))
    return run_tasks(check_genmain, grid, jobs)


def sweep_conj_tau(rects: Sequence[Rect], lam: Sequence[int], rs: Iterable[int], ss: Iterable[int],
                   jobs: int | None = None) -> list[VerificationReport]:
    grid = [(tuple(rects), tuple(lam), r, s) for r in rs for s in ss]
    return run_tasks(check_conj_tau, grid, jobs)


def format_summary(reports: Sequence[VerificationReport]) -> str:
    lines = [rep.summary() for rep in reports]
    passed = sum(rep.passed for rep in reports)
    lines.append(f"{passed}/{len(reports)} passed")
    return "\n".join(lines)
