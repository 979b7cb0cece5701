import itertools

import pytest

from krpaths.crystal import highest_paths
from krpaths.poly import QPoly, QTPoly, q_integer
from krpaths.polynomials import (
    PolynomialError,
    dual_rectangles,
    hhl_monomial_gf,
    kostka_foulkes,
    kostka_macdonald,
    kostka_number,
    macdonald_schur_expansion,
    modified_macdonald,
    n_of,
    n_of_R,
    parabolic_kostka,
)
from krpaths.tableaux import conjugate, partitions

Q = QPoly.parse
QT = QTPoly.parse


def test_kostka_numbers():
    assert kostka_number((2, 1), (1, 1, 1)) == 2
    assert [kostka_number(l, (4, 1, 1)) for l in [(4, 1, 1), (5, 1), (6,), (4, 2)]] == [1, 2, 1, 1]
    assert kostka_number((3, 1), (1, 3)) == kostka_number((3, 1), (3, 1)) == 1
    for lam in partitions(5):
        assert kostka_number(lam, lam) == 1
    with pytest.raises(PolynomialError):
        kostka_number((2, 1), (2, 2))


def test_kostka_foulkes_values():
    assert kostka_foulkes((2, 1), (1, 1, 1)) == Q("q + q^2")
    assert kostka_foulkes((3, 1), (2, 2)) == Q("q")
    assert kostka_foulkes((2, 2), (2, 1, 1)) == Q("q")
    assert kostka_foulkes((3, 1), (2, 1, 1)) == Q("q + q^2")


def _hooks(lam):
    lc = conjugate(lam)
    return [lam[i] - j + lc[j] - i - 1 for i in range(len(lam)) for j in range(lam[i])]


def _q_factorial(n):
    out = QPoly.one()
    for k in range(1, n + 1):
        out = out * q_integer(k)
    return out


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_standard_content_hook_formula(n):
    # K_{lam,1^n}(q) = q^{n(lam')} [n]_q! / prod over cells of [hook]_q
    for lam in partitions(n):
        den = QPoly.one()
        for h in _hooks(lam):
            den = den * q_integer(h)
        expected = _q_factorial(n).exact_div(den).shift(n_of(conjugate(lam)))
        assert kostka_foulkes(lam, (1,) * n) == expected


@pytest.mark.parametrize("n", range(1, 7))
def test_kostka_foulkes_structure(n):
    for mu in partitions(n):
        assert kostka_foulkes(mu, mu) == QPoly.one()
        assert kostka_foulkes((n,), mu) == QPoly.monomial(n_of(mu))
        for lam in partitions(n):
            assert kostka_foulkes(lam, mu).total() == kostka_number(lam, mu)


@pytest.mark.parametrize("n", range(1, 6))
def test_kostka_foulkes_is_parabolic_with_single_rows(n):
    for mu in partitions(n):
        rows = tuple((1, m) for m in mu)
        for lam in partitions(n):
            assert parabolic_kostka(lam, rows) == kostka_foulkes(lam, mu)


def test_parabolic_example_table():
    rects = ((2, 2), (2, 2), (3, 2))
    assert parabolic_kostka((6, 4, 3, 1), rects) == Q("q^9 + q^10")
    assert parabolic_kostka((6, 5, 2, 1), rects) == Q("q^10 + q^11")
    assert parabolic_kostka((6, 4, 4), rects) == Q("q^10")
    assert parabolic_kostka((6, 5, 3), rects) == Q("q^11")
    assert parabolic_kostka((6, 6, 2), rects) == Q("q^12")
    assert parabolic_kostka((2, 2, 2), ((3, 2),)) == QPoly.one()


@pytest.mark.parametrize("rects", [((1, 2), (1, 1), (1, 1)), ((2, 1), (1, 2)), ((2, 2), (1, 1)), ((1, 3), (2, 1)), ((1, 2), (2, 1), (1, 1))])
def test_parabolic_duality_and_count(rects):
    dominant = tuple(sorted(rects, key=lambda x: (x[1], x[0]), reverse=True))
    n = sum(r * s for r, s in rects)
    for lam in partitions(n):
        val = parabolic_kostka(lam, dominant)
        assert val.total() == sum(1 for _ in highest_paths(dominant, lam))
        dual = parabolic_kostka(conjugate(lam), dual_rectangles(dominant))
        assert val == dual.invert().shift(n_of_R(dominant))


def test_n_statistics():
    assert n_of((4, 2)) == 2
    assert n_of((1,) * 5) == 10
    assert n_of_R(((2, 2), (2, 2), (3, 2))) == 12
    assert dual_rectangles(((3, 2), (2, 2))) == ((2, 3), (2, 2))


def test_macdonald_examples():
    assert kostka_macdonald((2, 2, 2), (4, 2)) == QT("q^6 + q^4 t + q^5 t + q^2 t^2 + q^4 t^2")
    assert kostka_macdonald((2, 2, 2), (3, 3)) == QT("q^6 + q^4 t^2 + q^3 t^3 + q^3 t^2 + q^2 t^2")
    assert kostka_macdonald((3, 2, 1), (4, 2)) == QT(
        "q^6 + q^5 t + 2 q^5 + 3 q^4 t + q^4 + q^3 t^2 + 3 q^3 t + 2 q^2 t^2 + q^2 t + q t^2")
    assert kostka_macdonald((5, 1), (4, 2)) == QT("q^3 + q^2 + q t + q + t")
    assert kostka_macdonald((4, 2), (4, 2)) == QT("2 q^4 + q^3 t + q^3 + 2 q^2 t + q^2 + q t + t^2")
    assert kostka_macdonald((4, 1, 1), (4, 2)) == QT("q^5 + q^4 t + q^4 + 2 q^3 t + q^3 + 2 q^2 t + q t^2 + q t")
    assert kostka_macdonald((6,), (4, 2)) == QTPoly.one()


def test_highest_hhl_examples():
    assert hhl_monomial_gf((4, 2), (2, 2, 2), highest=True) == QT("q^6 + q^4 t + q^5 t + q^3 t^2 + q^4 t^2")
    assert hhl_monomial_gf((3, 3), (2, 2, 2), highest=True) == QT("q^6 + q^3 t^3 + q^3 t^2 + 2 q^2 t^3")
    assert hhl_monomial_gf((3, 2), (5,)) == QTPoly.one()


def _specialize(p: QTPoly, q_value: int) -> QPoly:
    # q = 0 keeps the q-free terms, q = 1 sums over q
    out = {}
    for (a, b), c in p.terms().items():
        if q_value == 0 and a:
            continue
        out[(b,)] = out.get((b,), 0) + c
    return QPoly(out)


@pytest.mark.parametrize("n", range(1, 7))
def test_macdonald_specializations(n):
    for mu in partitions(n):
        table = macdonald_schur_expansion(mu)
        for lam in partitions(n):
            k = table[lam]
            # q = 0 gives the cocharge Kostka-Foulkes polynomial t^{n(mu)} K(1/t)
            assert _specialize(k, 0) == kostka_foulkes(lam, mu).invert().shift(n_of(mu))
            # q = t = 1 counts standard tableaux of shape lam
            assert k.total() == kostka_number(lam, (1,) * n)
            # q <-> t symmetry under conjugation
            assert k.swap() == macdonald_schur_expansion(conjugate(mu))[lam]


@pytest.mark.parametrize("n", range(1, 6))
def test_modified_macdonald_is_symmetric(n):
    for mu in partitions(n):
        coeffs = modified_macdonald(mu, n)
        for alpha, val in coeffs.items():
            for perm in set(itertools.permutations(alpha)):
                assert coeffs.get(perm) == val


def test_single_box_macdonald():
    coeffs = modified_macdonald((1,), 4)
    assert sorted(coeffs) == [(0, 0, 0, 1), (0, 0, 1, 0), (0, 1, 0, 0), (1, 0, 0, 0)]
    assert all(v == QTPoly.one() for v in coeffs.values())


def test_rejects_bad_input():
    with pytest.raises(PolynomialError):
        kostka_macdonald((2, 1), (2, 2))
    with pytest.raises(PolynomialError):
        parabolic_kostka((1, 2), ((1, 3),))
