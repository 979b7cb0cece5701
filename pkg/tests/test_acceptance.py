"""Acceptance criteria 1-9, one PASS/FAIL line each (shown in the terminal summary)."""
import itertools
import time

from krpaths.bbs import soliton_tau, t_infinity, takahashi_satsuma
from krpaths.crystal import (
    all_paths,
    combinatorial_R,
    paths_of_weight,
)
from krpaths.poly import QPoly, QTPoly
from krpaths.polynomials import _hhl, _kostka, kostka_macdonald, macdonald_schur_expansion, parabolic_kostka
from krpaths.statistics import (
    c_mu,
    ebar,
    lemma_tau_charge_bound,
    pair_bound,
    tau,
    tau_mu,
    tau_rs,
)
from krpaths.tableaux import (
    all_ssyt,
    compositions,
    gt_from_ssyt,
    is_gt_pattern,
    macmahon_count,
    macmahon_product,
    partitions,
    rsk,
    transportation_matrices,
)
from krpaths.verify import (
    check_regularization,
    check_theorem_main,
    hhl_condition,
    sweep_hhl_kostka,
    theorem_main_grid,
)


def test_criterion_1_r_matrix_example(criterion):
    left, right = ((1, 1, 4), (2, 3, 5)), ((2, 3), (3, 4), (4, 5))
    combinatorial_R.cache_clear()
    start = time.perf_counter()
    res = combinatorial_R(left, right)
    elapsed = time.perf_counter() - start
    ok = (res.left == ((1, 1), (2, 2), (3, 4)) and res.right == ((3, 3, 4), (4, 5, 5))
          and res.energy == 3 and elapsed < 1e-3)
    criterion(1, ok, f"R example exact, H={res.energy}, {elapsed * 1e3:.3f} ms")


def test_criterion_2_theorem_main_exhaustive(criterion):
    anchor = check_theorem_main((4, 1, 1), (4, 2))
    expected = QPoly.parse("q^5 + 4 q^4 + 7 q^3 + 7 q^2 + 7 q + 4")
    start = time.perf_counter()
    reports = [check_theorem_main(a, m) for a, m in theorem_main_grid(6)]
    elapsed = time.perf_counter() - start
    failed = [r.summary() for r in reports if not r.passed]
    ok = anchor.passed and anchor.lhs == expected and not failed and elapsed < 120
    criterion(2, ok, f"{len(reports) - len(failed)}/{len(reports)} cells up to size 6 in {elapsed:.1f} s")


def test_criterion_3_dynamics_exhaustive(criterion):
    anchors = soliton_tau("4312111") == tau("4312111") == 11 and soliton_tau("4321111") == tau("4321111") == 7
    start = time.perf_counter()
    bad, count = [], 0
    for length in range(1, 9):
        for w in itertools.product(range(1, 5), repeat=length):
            count += 1
            image = tuple(f[0][0] for f in t_infinity(w))
            if takahashi_satsuma(w) != image or soliton_tau(w) != tau(w):
                bad.append(w)
    elapsed = time.perf_counter() - start
    ok = anchors and not bad and elapsed < 300
    criterion(3, ok, f"{count - len(bad)}/{count} paths of length <= 8 over 4 letters in {elapsed:.1f} s")


def test_criterion_4_ebar_example(criterion):
    rects = ((2, 2), (2, 2), (3, 2))
    values = sorted(ebar(p) for p in paths_of_weight(rects, (4, 6, 3, 1)))
    gf = QPoly.from_exponents(values)
    table = {
        (6, 4, 3, 1): "q^9 + q^10",
        (6, 5, 2, 1): "q^10 + q^11",
        (6, 4, 4): "q^10",
        (6, 5, 3): "q^11",
        (6, 6, 2): "q^12",
    }
    table_ok = all(parabolic_kostka(lam, rects) == QPoly.parse(v) for lam, v in table.items())
    ok = (values == [9, 10, 10, 10, 11, 11, 11, 12, 12]
          and gf == QPoly.parse("q^9 + 3 q^10 + 3 q^11 + 2 q^12") and table_ok)
    criterion(4, ok, f"Ebar multiset {values}, parabolic table {'matches' if table_ok else 'differs'}")


def test_criterion_5_macdonald_values(criterion):
    macdonald_schur_expansion.cache_clear()
    _hhl.cache_clear()
    start = time.perf_counter()
    a = kostka_macdonald((2, 2, 2), (4, 2))
    b = kostka_macdonald((2, 2, 2), (3, 3))
    elapsed = time.perf_counter() - start
    ok = (a == QTPoly.parse("q^6 + q^4 t + q^5 t + q^2 t^2 + q^4 t^2")
          and b == QTPoly.parse("q^6 + q^4 t^2 + q^3 t^3 + q^3 t^2 + q^2 t^2") and elapsed < 10)
    criterion(5, ok, f"two modified Kostka-Macdonald values exact in {elapsed:.2f} s")


def test_criterion_6_highest_hhl(criterion):
    small = sweep_hhl_kostka(6, mu_first_max=2)
    small_ok = all(r.passed for r in small)
    full = sweep_hhl_kostka(6)
    failing = {(r.parameters["lambda"], r.parameters["mu"]) for r in full if not r.passed}
    named = {((2, 2, 2), (4, 2)), ((3, 2, 1), (4, 2))}
    # every other failure lies outside the region where the sufficient condition guarantees equality
    rest_ok = all(not hhl_condition(lam, mu) for lam, mu in failing)
    ok = small_ok and named <= failing and rest_ok
    criterion(6, ok, f"{len(small)}/{len(small)} cells with mu_1 <= 2 pass; both named pairs FAIL; "
                     f"{len(failing)} failures in the full size-6 grid, all outside the predicted region")


E_TAU_TABLE = {
    "b1": ([((1, 1), (2, 2), (4, 5)), ((2, 3), (3, 4)), ((1, 1), (3, 5))], [5, 7, 9, 6, 3, 3, 3, 3, 3, 3]),
    "b2": ([((1, 1), (2, 3), (5, 5)), ((1, 2), (3, 4)), ((1, 2), (3, 4))], [4, 9, 8, 8, 2, 2, 2, 2, 2, 2]),
    "b3": ([((1, 2), (2, 4), (3, 5)), ((1, 2), (3, 3)), ((1, 1), (4, 5))], [7, 7, 6, 3, 2, 2, 2, 2, 2, 2]),
    "b4": ([((2, 2), (3, 3), (4, 4)), ((1, 1), (2, 5)), ((1, 1), (3, 5))], [9, 9, 5, 3, 3, 3, 3, 3, 3, 3]),
}


def test_criterion_7_energy_tau_and_stabilization(criterion):
    bad = 0
    paths = list(all_paths(((2, 1), (1, 2), (1, 1)), 3))
    for p in paths:
        c = pair_bound(p)
        base = tau_rs(p, 3, 2)
        if ebar(p) != c - base or any(tau_rs(p, r, s) != base for r in range(3, 6) for s in range(2, 4)):
            bad += 1
    entries = sum(
        tau_rs(path, r, 5) == row[r - 1] for path, row in E_TAU_TABLE.values() for r in range(1, 11)
    )
    ok = bad == 0 and entries == 40
    criterion(7, ok, f"{len(paths) - bad}/{len(paths)} paths satisfy Ebar = C - tau and stabilize; "
                     f"{entries}/40 table entries")


def test_criterion_8_tau_rs_generating_functions(criterion):
    rects = ((3, 2), (2, 2), (2, 2))
    paths = list(paths_of_weight(rects, (4, 3, 3, 2, 2)))
    base = QPoly.parse("q^8 + 8 q^7 + 33 q^6 + 89 q^5 + 161 q^4 + 198 q^3 + 163 q^2 + 82 q + 24")
    shifts = {1: 2, 2: 5, 3: 4, 4: 2}
    start = time.perf_counter()
    mismatches = []
    for r in range(1, 11):
        for s in range(2, 6):
            gf = QPoly.from_exponents(tau_rs(p, r, s) for p in paths)
            if gf != base.shift(shifts.get(r, 0)):
                mismatches.append((r, s))
    elapsed = time.perf_counter() - start
    ok = len(paths) == 759 and not mismatches and elapsed < 60
    criterion(8, ok, f"{len(paths)} paths, {40 - len(mismatches)}/40 (r, s) generating functions exact "
                     f"in {elapsed:.1f} s")


def _property_suite() -> dict[str, bool]:
    checks = {}
    ok = True
    for rows in [(2, 1), (2, 2), (3, 1, 1), (2, 2, 1)]:
        for cols in [(1, 2), (2, 2), (1, 1, 3), (3, 2)]:
            if sum(rows) != sum(cols):
                continue
            mats = list(transportation_matrices(rows, cols))
            images = {rsk(m) for m in mats}
            expected = sum(_kostka(lam, rows) * _kostka(lam, cols) for lam in partitions(sum(rows)))
            ok &= len(images) == len(mats) == expected
    checks["rsk"] = ok

    ok = True
    for lam_a, lam_b in [((2,), (2, 2)), ((1, 2), (2, 1)), ((2, 2), (1, 3))]:
        for a in all_ssyt(lam_a, 3):
            for b in all_ssyt(lam_b, 3):
                res = combinatorial_R(a, b)
                back = combinatorial_R(res.left, res.right)
                ok &= (back.left, back.right) == (a, b) and back.energy == res.energy
    checks["r-involution"] = ok

    ok = True
    boxes = [all_ssyt((1,), 3), all_ssyt((2,), 3), all_ssyt((1, 1), 3)]
    for a, b, c in itertools.product(*boxes):
        # R12 R23 R12 = R23 R12 R23
        def r12(x, y, z):
            res = combinatorial_R(x, y)
            return res.left, res.right, z

        def r23(x, y, z):
            res = combinatorial_R(y, z)
            return x, res.left, res.right

        ok &= r12(*r23(*r12(a, b, c))) == r23(*r12(*r23(a, b, c)))
    checks["yang-baxter"] = ok

    checks["gt-interlacing"] = all(
        is_gt_pattern(gt_from_ssyt(t, 4)) for lam in [(3, 1), (2, 2, 1), (3, 2, 1)] for t in all_ssyt(lam, 4)
    )
    checks["macmahon"] = all(
        macmahon_count(l, m, n) == macmahon_product(l, m, n)
        for l in range(1, 4) for m in range(1, 4) for n in range(1, 4) if l * m * n <= 18
    )
    ok = True
    for n in range(1, 7):
        for mu in compositions(n):
            for w in set(itertools.permutations(range(1, n + 1))):
                ok &= tau_mu(w, mu) + c_mu(w, mu) == lemma_tau_charge_bound(w, mu)
    checks["tau-charge-identity"] = ok
    rep = check_regularization((1, 3, 3))
    checks["regularization-39"] = rep.passed and rep.shift == 39
    return checks


def test_criterion_9_property_suites(criterion):
    checks = _property_suite()
    failed = [k for k, v in checks.items() if not v]
    criterion(9, not failed, f"{len(checks) - len(failed)}/{len(checks)} suites "
                             f"({', '.join(failed) if failed else ', '.join(checks)})")
