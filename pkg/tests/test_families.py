from itertools import product
from math import comb

import pytest

from lrcex.families import (
    D_ORDER,
    Check,
    RectangleSequence,
    construct_D,
    construct_E,
    counterexample_report,
    exponent_vectors,
    family_value,
    horn_count_two_rows,
    horn_monomial,
    horn_nonvanishing_two_rows,
    horn_triples,
    kostka_family,
    log_concavity_check,
    okounkov_family,
    parabolic_kostka,
    remark_identity_check,
    remark_identity_sides,
    rows_5_6_completions,
)
from lrcex.lr import enumerate_lr_fillings, is_lr_filling, lr_coefficient, multi_lr_coefficient
from lrcex.partition import Partition, conjugate, partitions_in_box, rectangle, skew, stretch
from lrcex.quiver import kronecker_si_dim

P = Partition


def box_triples(n, m):
    """Triples of partitions in the m x n box with total size n*m."""
    box = list(partitions_in_box(m, n))
    for t in product(box, repeat=3):
        if sum(p.size for p in t) == n * m:
            yield t


def e_shape(n):
    lam, mu = okounkov_family(n)
    return skew(conjugate(lam), conjugate(mu)), conjugate(mu)


def d_shape(n):
    lam, mu = okounkov_family(n)
    return skew(conjugate(stretch(2, lam)), conjugate(stretch(2, mu))), conjugate(stretch(2, mu))


# -- families ---------------------------------------------------------------------


def test_okounkov_family():
    lam, mu = okounkov_family(1)
    assert lam == (4, 3, 3, 2) and mu == (3, 2, 1)
    lam, mu = okounkov_family(3)
    assert lam.size == 36 and mu.size == 18
    assert lam.size == 2 * mu.size
    with pytest.raises(ValueError):
        okounkov_family(0)


def test_kostka_family():
    lam, rects = kostka_family(2)
    assert lam == (2, 2, 1, 1, 1, 1)
    assert rects.partitions() == (P((1, 1)),) * 4
    assert rects.stretch(3).rectangles == ((3, 2),) * 4
    assert lam.size == rects.size


def test_rectangle_sequence_validation():
    with pytest.raises(ValueError):
        RectangleSequence(((0, 2),))
    assert RectangleSequence(((2, 3),)).partitions() == (rectangle(2, 3),)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_parabolic_kostka_first_formula(n):
    lam, rects = kostka_family(n)
    assert parabolic_kostka(lam, rects) == comb(n + 2, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_parabolic_kostka_second_formula(n):
    lam, rects = kostka_family(n)
    assert parabolic_kostka(stretch(2, lam), rects.stretch(2)) == comb(n + 5, 5)


def test_parabolic_kostka_edge_cases():
    assert parabolic_kostka((2, 1), RectangleSequence(((1, 1),) * 2)) == 0
    assert parabolic_kostka((), RectangleSequence(())) == 1
    # all single boxes: standard tableaux of (2, 1)
    assert parabolic_kostka((2, 1), RectangleSequence(((1, 1),) * 3)) == 2


@pytest.mark.parametrize("m, n, sides", [(1, 1, (3, 3)), (1, 2, (6, 6)), (2, 1, (6, 6))])
def test_remark_identity(m, n, sides):
    assert remark_identity_sides(m, n) == sides
    assert remark_identity_check(m, n)


# -- log-concavity -----------------------------------------------------------------


def test_log_concavity_check_records():
    rec = log_concavity_check(lambda k: [1, 3, 6][k], 1, family="x")
    assert (rec.lhs, rec.rhs, rec.holds) == (6, 9, True)
    assert rec.context["family"] == "x" and rec.context["values"] == (1, 3, 6)
    bad = log_concavity_check(lambda k: [1, 2, 5][k], 1)
    assert not bad.holds
    with pytest.raises(ValueError):
        log_concavity_check(lambda k: 1, 0)


def test_family_value_routes_agree():
    for n in range(1, 6):
        assert family_value(n, 0) == 1
        assert family_value(n, 1) == comb(n + 2, 2)
        assert family_value(n, 2) == comb(n + 5, 5) == kronecker_si_dim(3, n, 2)


@pytest.mark.parametrize("n", [1, 2])
def test_family_value_matches_direct_counting(n):
    lam, mu = okounkov_family(n)
    for N in (1, 2):
        assert family_value(n, N) == lr_coefficient(stretch(N, lam), stretch(N, mu), stretch(N, mu))


def test_log_concavity_fails_for_large_n_only():
    # binom(n+5,5) <= binom(n+2,2)^2 exactly when n <= 20
    for n in range(1, 30):
        assert (comb(n + 5, 5) <= comb(n + 2, 2) ** 2) == (n <= 20)


def test_counterexample_report_threshold():
    recs = counterexample_report(20, 22)
    assert [r.holds for r in recs] == [True, False, False]
    assert (recs[1].lhs, recs[1].rhs) == (65780, 64009)
    assert recs[1].context["n"] == 21
    for r in recs:
        assert r.checks and all(c.passed for c in r.checks)


def test_counterexample_report_cross_checks_small_n():
    recs = counterexample_report(1, 2, verify_direct=True)
    names = {c.name for r in recs for c in r.checks}
    assert "N=1 direct okounkov" in names and "N=2 direct okounkov" in names
    assert "N=2 horn count vs Cauchy sum" in names
    assert all(c.passed for r in recs for c in r.checks)
    assert all(r.holds for r in recs)


def test_counterexample_report_kostka_and_threads():
    one = counterexample_report(1, 3, family="kostka", verify_direct=True)
    many = counterexample_report(1, 3, family="kostka", verify_direct=True, threads=3)
    assert one == many
    assert all(c.passed for r in one for c in r.checks)
    with pytest.raises(ValueError):
        counterexample_report(1, 2, family="nope")
    with pytest.raises(ValueError):
        counterexample_report(3, 2)


def test_check_passed():
    assert Check("a", 1, 1).passed
    assert not Check("a", 1, 2).passed


# -- two-row Horn system -------------------------------------------------------------


@pytest.mark.parametrize("m", [1, 2])
@pytest.mark.parametrize("n", range(1, 6))
def test_multi_lr_on_rectangle_at_most_one(n, m):
    target = rectangle(n, m)
    for t in box_triples(n, m):
        assert multi_lr_coefficient(target, t) <= 1


@pytest.mark.parametrize("n", range(1, 6))
def test_horn_system_characterizes_nonvanishing(n):
    target = rectangle(n, 2)
    for t in box_triples(n, 2):
        assert horn_nonvanishing_two_rows(n, t) == (multi_lr_coefficient(target, t) >= 1)


@pytest.mark.parametrize("n", range(0, 8))
def test_horn_triples_match_exhaustive_filter(n):
    pool = [P((a, b)) for a in range(n + 1) for b in range(a + 1)]
    brute = {t for t in product(pool, repeat=3) if horn_nonvanishing_two_rows(n, t)}
    got = list(horn_triples(n))
    assert len(got) == len(set(got))
    assert set(got) == brute


def test_horn_count_closed_form():
    for n in range(31):
        assert horn_count_two_rows(n) == comb(n + 5, 5)
    assert horn_count_two_rows(21) == 65780


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_horn_monomials_biject_onto_degree_n(n):
    images = [horn_monomial(n, t) for t in horn_triples(n)]
    assert len(set(images)) == len(images)
    assert set(images) == set(exponent_vectors(6, n))


def test_horn_rejects_long_partitions():
    with pytest.raises(ValueError):
        horn_nonvanishing_two_rows(3, [(1, 1, 1), (), (3,)])
    assert not horn_nonvanishing_two_rows(2, [(1,), (1,), (1,)])


# -- bijections ---------------------------------------------------------------------


def test_exponent_vectors():
    assert list(exponent_vectors(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    for k, n in [(3, 4), (6, 2), (6, 3)]:
        got = list(exponent_vectors(k, n))
        assert len(got) == len(set(got)) == comb(n + k - 1, k - 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_E_is_a_bijection_onto_fillings(n):
    shape, content = e_shape(n)
    images = [construct_E(n, a) for a in exponent_vectors(3, n)]
    assert all(is_lr_filling(f, content) for f in images)
    rows = {f.rows for f in images}
    assert len(rows) == comb(n + 2, 2)
    assert rows == {f.rows for f in enumerate_lr_fillings(shape, content)}


def test_E_small_case():
    f = construct_E(1, (0, 1, 0))
    assert f.rows == ((1,), (1, 2), (1, 3), (2,))
    with pytest.raises(ValueError):
        construct_E(2, (1, 0, 0))


@pytest.mark.parametrize("n", [1, 2])
def test_D_is_a_bijection_onto_fillings(n):
    shape, content = d_shape(n)
    images = [construct_D(n, a) for a in exponent_vectors(6, n)]
    assert all(is_lr_filling(f, content) for f in images)
    rows = {f.rows for f in images}
    assert len(rows) == comb(n + 5, 5)
    assert rows == {f.rows for f in enumerate_lr_fillings(shape, content)}


def test_D_injective_at_three():
    images = {construct_D(3, a).rows for a in exponent_vectors(6, 3)}
    assert len(images) == comb(8, 5)


def test_D_single_monomials():
    # one column of each type in the last two rows
    for k, (top, bottom) in enumerate(D_ORDER):
        a = [0] * 6
        a[k] = 1
        f = construct_D(1, a)
        assert f.rows[6:] == ((top,), (bottom,))
        assert len(f.rows[4]) == len(f.rows[5]) == 2


def test_D_two_columns_sorted():
    f = construct_D(2, (0, 0, 1, 1, 0, 0))
    assert f.rows[6:] == ((2, 3), (4, 6))
    with pytest.raises(ValueError):
        construct_D(2, (1, 0, 0, 0, 0, 0))


@pytest.mark.parametrize("n", [1, 2])
def test_rows_5_6_completion_unique(n):
    for a in exponent_vectors(6, n):
        found = rows_5_6_completions(n, a)
        assert len(found) == 1
        assert found[0].rows == construct_D(n, a).rows
