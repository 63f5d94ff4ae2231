from __future__ import annotations

import itertools

import pytest

from kcatalan.algebra import (
    SymFun,
    TPoly,
    kschur_basis,
    mul,
    pad,
    partition,
    partitions_in_box,
    partitions_of,
    specialize_t,
)
from kcatalan.catalan import catalan_function
from kcatalan.cores import creading
from kcatalan.expansions import (
    HypothesisViolated,
    atilde,
    catalan_flagged_expand,
    crop,
    ctab,
    flagged_data,
    hl_to_kschur,
    is_pseudopartition,
    ksplit,
    ksplit_polynomial,
    ksplit_to_kschur,
    schur_times_kschur,
    schur_times_kschur_vertex,
    ssyt_skew,
    to_g_basis,
)
from kcatalan.kschur import apply_word, kschur, to_kschur_basis
from kcatalan.rootideal import RootIdeal, delta_k, empty_ideal, uplus
from kcatalan.vertexops import hall_littlewood, jing_b

t = TPoly([0, 1])
FLAGGED_A = (RootIdeal((4, 3, 4, 5, 4, 3, 2, 1, 0)), (3, 2, 1, 2), (2, 2, 2, 2, 1))
FLAGGED_B = (RootIdeal((3, 2, 2, 2, 2, 1, 0)), (5, 4, 4, 2), (2, 1, 1))


def word(s):
    return tuple(int(ch) for ch in s)


def kterms(k, d):
    return SymFun({partition(lam): TPoly.monomial(e) if isinstance(e, int) else e for lam, e in d.items()},
                  kschur_basis(k))


def rows_of(T, n):
    """Tableau as n row tuples, read left to right."""
    out = {}
    for (r, c), x in sorted(T.items()):
        out.setdefault(r, []).append(x)
    return tuple(tuple(out.get(r, ())) for r in range(1, n + 1))


def test_hl_to_kschur_example():
    expected = kterms(3, {(3, 3): 4, (3, 2, 1): TPoly([0, 0, 1, 1]), (3, 1, 1, 1): 1,
                          (2, 2, 2): 1, (2, 2, 1, 1): 0})
    assert hl_to_kschur((2, 2, 1, 1), 3) == expected
    assert hl_to_kschur((3, 3, 3), 3) == SymFun.basis_element((3, 3, 3), kschur_basis(3))
    with pytest.raises(HypothesisViolated):
        hl_to_kschur((4,), 3)


def test_hl_to_kschur_two_routes():
    for k in range(1, 5):
        for n in range(9):
            for mu in partitions_of(n, k):
                f = hl_to_kschur(mu, k)
                assert f == to_kschur_basis(hall_littlewood(mu), k), (k, mu)
                assert f.is_nonneg()


def test_hl_to_kschur_padding():
    for k in range(1, 4):
        for mu in partitions_of(4, k):
            assert hl_to_kschur(mu, k, len(mu) + 1) == hl_to_kschur(mu, k)


def test_ssyt_skew():
    tabs = ssyt_skew((4, 4, 4), (4, 3, 2), range(1, 4))
    words = ["".join(map(str, creading(T))) for T in tabs]
    assert sorted(words) == ["121", "131", "132", "221", "231", "232", "331", "332"]
    assert ssyt_skew((2, 1), (2, 1), range(1, 3)) == [{}]
    assert len(ssyt_skew((2, 2), (), range(1, 3))) == 1
    with pytest.raises(ValueError):
        ssyt_skew((2,), (3,), range(1, 3))


B432_ON_K211111 = {(4, 4, 3, 1, 1, 1, 1, 1): 3, (4, 4, 2, 2, 1, 1, 1, 1): 2, (4, 3, 3, 2, 1, 1, 1, 1): 2,
        (4, 4, 2, 1, 1, 1, 1, 1, 1): 1, (4, 3, 3, 1, 1, 1, 1, 1, 1): 1, (4, 3, 2, 2, 1, 1, 1, 1, 1): 0}


def test_schur_times_kschur_example():
    mu, nu = (4, 3, 2), (2, 1, 1, 1, 1, 1)
    f = schur_times_kschur(mu, nu, 6)
    assert f == kterms(6, B432_ON_K211111)
    assert schur_times_kschur_vertex(mu, nu, 6) == f


def test_pieri_case():
    for k in range(1, 5):
        for d in range(1, k + 1):
            for n in range(5):
                for nu in partitions_of(n, d):
                    lhs = to_kschur_basis(jing_b(d, kschur(nu, k)), k)
                    start = SymFun.basis_element((k,) + nu, kschur_basis(k))
                    assert lhs == apply_word(start, (1,) * (k - d), k)


def schur_kschur_grid(max_k, max_total):
    for k in range(1, max_k + 1):
        for r in range(1, k + 1):
            for mu in partitions_in_box(k - r + 1, r):
                mu = pad(mu, r)
                for n in range(max_total - sum(mu) + 1):
                    for nu in partitions_of(n, min(k, mu[-1])):
                        yield k, mu, nu


def test_schur_times_kschur_grid():
    for k, mu, nu in schur_kschur_grid(4, 9):
        f = schur_times_kschur(mu, nu, k)
        assert f == schur_times_kschur_vertex(mu, nu, k), (k, mu, nu)
        assert f.is_nonneg()


def test_schur_times_kschur_at_one():
    for k, mu, nu in schur_kschur_grid(3, 6):
        lhs = specialize_t(schur_times_kschur(mu, nu, k), 1)
        lhs_schur = SymFun()
        for lam, c in lhs.terms.items():
            lhs_schur = lhs_schur + specialize_t(kschur(lam, k), 1).scale(c)
        assert lhs_schur == mul(SymFun.basis_element(partition(mu)), specialize_t(kschur(nu, k), 1))


def test_schur_times_kschur_hypotheses():
    with pytest.raises(HypothesisViolated):
        schur_times_kschur((1, 2), (), 3)
    with pytest.raises(HypothesisViolated):
        schur_times_kschur((1,), (2,), 3)
    with pytest.raises(HypothesisViolated):
        schur_times_kschur((4,), (), 3)


def test_crop():
    assert crop((4, 5, 6, 5, 3, 2, 1, 3)) == (4, 4, 4, 4, 3, 2, 1, 1)
    for mu in partitions_of(6):
        assert crop(mu) == mu
    for beta in itertools.product(range(4), repeat=4):
        assert crop(crop(beta)) == crop(beta)


def test_ctab_examples():
    tabs = ctab((2, 1, 2, 1), (1, 2, 2, 4))
    assert sorted(creading(T) for T in tabs) == [word("214321"), word("314321")]
    assert len(ctab((0, 1, 1, 3), (1, 1, 2, 4))) == 3
    words = sorted("".join(map(str, creading(T))) for T in ctab((0, 1, 1, 3), (1, 1, 2, 3)))
    assert words == sorted(["33321", "33421", "33431", "33432", "34421",
                            "34431", "34432", "44421", "44431", "44432"])
    words = sorted("".join(map(str, creading(T))) for T in ctab((1, 2, 3, 1), (1, 1, 3, 4)))
    assert words == ["3314321", "3324321"]
    assert ctab((0, 0, 0), (3, 1, 2)) == [{}]


def test_ctab_decomposition():
    """removing the leftmost box of row i splits the flagged set in two"""
    n_checked = 0
    for r in range(1, 5):
        for alpha in itertools.product(range(4), repeat=r):
            if not is_pseudopartition(alpha):
                continue
            for i in range(1, r + 1):
                if alpha[i - 1] == 0 or (i > 1 and alpha[i - 1] < alpha[i - 2]):
                    continue
                minus = tuple(a - (j == i - 1) for j, a in enumerate(alpha))
                if not is_pseudopartition(minus):
                    continue
                for n in itertools.combinations_with_replacement(range(1, r + 1), r):
                    if n[i - 1] == r or (i < r and n[i - 1] + 1 > n[i]):
                        continue
                    plus = tuple(x + (j == i - 1) for j, x in enumerate(n))
                    whole = sorted(rows_of(T, r) for T in ctab(alpha, n))
                    first = [rows_of(T, r) for T in ctab(alpha, plus)]
                    second = []
                    for U in ctab(minus, n):
                        rows = list(rows_of(U, r))
                        rows[i - 1] = (n[i - 1],) + rows[i - 1]
                        second.append(tuple(rows))
                    assert whole == sorted(first + second), (alpha, n, i)
                    n_checked += 1
    assert n_checked > 100


def test_flagged_examples():
    psi, mu, nu = FLAGGED_A
    data = flagged_data(psi, mu, nu, 8)
    assert (data.zeta, data.lam, data.alpha, data.flags) == ((4, 5, 4, 3), (4, 4, 4, 3), (1, 2, 3, 1), (1, 1, 3, 4))
    start = SymFun.basis_element((4, 4, 4, 3, 2, 2, 2, 2, 1), kschur_basis(8))
    expected = apply_word(start, word("3324321"), 8) + apply_word(start, word("3314321"), 8)
    f = catalan_flagged_expand(psi, mu, nu, 8)
    assert f == expected
    assert f == to_kschur_basis(catalan_function(psi, mu + nu), 8)

    psi, mu, nu = FLAGGED_B
    data = flagged_data(psi, mu, nu, 8)
    assert (data.zeta, data.lam, data.alpha, data.flags) == ((5, 6, 6, 6), (5, 5, 5, 5), (0, 1, 1, 3), (1, 1, 2, 3))
    f = catalan_flagged_expand(psi, mu, nu, 8)
    assert f == to_kschur_basis(catalan_function(psi, mu + nu), 8)


def test_flagged_specializes_to_schur_times_kschur():
    for k, mu, nu in schur_kschur_grid(4, 7):
        psi = uplus(empty_ideal(len(mu)), delta_k(nu, k, len(nu)))
        try:
            f = catalan_flagged_expand(psi, mu, nu, k)
        except HypothesisViolated:
            continue
        assert f == schur_times_kschur(mu, nu, k)


def test_flagged_hypotheses_reported():
    psi, mu, nu = FLAGGED_B
    with pytest.raises(HypothesisViolated, match="style"):
        flagged_data(psi, mu, nu, 5)


def test_ksplit():
    assert str(ksplit((3, 2, 2, 2, 1, 1), 3)) == "(3,22,21,100)"
    sp = ksplit((3, 2, 2, 2, 1, 1), 4)
    assert sp.pieces == ((3, 2), (2, 2, 1), (1, 0, 0, 0))
    assert ksplit((), 3).pieces == ()
    with pytest.raises(HypothesisViolated):
        ksplit((4,), 3)


def hook_max(piece):
    lam = partition(piece)
    return lam[0] + len(lam) - 1 if lam else 0


def test_ksplit_blocks():
    for k in range(1, 5):
        for n in range(10):
            for lam in partitions_of(n, k):
                sp = ksplit(lam, k)
                flat = partition(x for p in sp.pieces for x in p)
                assert flat == lam
                for piece in sp.pieces:
                    assert len(piece) == k - piece[0] + 1
                for piece in sp.pieces[:-1]:
                    assert hook_max(piece) == k


def test_ksplit_polynomial():
    assert ksplit_polynomial((), 3) == SymFun.one()
    for k in range(1, 4):
        for n in range(7):
            for lam in partitions_of(n, k):
                if len(ksplit(lam, k).pieces) == 1:
                    assert ksplit_polynomial(lam, k) == SymFun.basis_element(lam)
                    assert ksplit_to_kschur(lam, k) == SymFun.basis_element(lam, kschur_basis(k))


def test_ksplit_two_routes():
    for k in (1, 2, 3):
        for n in range(9):
            for lam in partitions_of(n, k):
                f = ksplit_to_kschur(lam, k)
                assert f == to_kschur_basis(ksplit_polynomial(lam, k), k), (k, lam)
                assert f.is_nonneg()


def test_g_basis_unitriangular():
    for k in (2, 3):
        for n in range(7):
            for lam in partitions_of(n, k):
                assert to_g_basis(ksplit_polynomial(lam, k), k) == {lam: TPoly([1])}


def test_atilde():
    assert atilde((), 3) == SymFun.one()
    for k in (1, 2, 3):
        for n in range(8):
            for mu in partitions_of(n, k):
                assert atilde(mu, k) == kschur(mu, k)


def test_discarded_part_has_larger_first_parts():
    for k in (2, 3, 4):
        for n in range(1, 7):
            for mu in partitions_of(n, k):
                f = to_kschur_basis(jing_b(mu[0], kschur(mu[1:], k)), k)
                rest = f - SymFun.basis_element(mu, kschur_basis(k))
                assert all(nu[0] > mu[0] for nu in rest.terms), (k, mu)


def test_flagged_expansion_grid():
    from kcatalan.rootideal import all_ideals

    n = 0
    for k in (2, 3, 4):
        for ell in range(1, 6):
            for psi in all_ideals(ell):
                for r in range(1, ell + 1):
                    for mu in itertools.product(range(k + 1), repeat=r):
                        if not is_pseudopartition(mu):
                            continue
                        for nu in partitions_in_box(min(k, mu[-1]), ell - r):
                            nu = pad(nu, ell - r)
                            try:
                                f = catalan_flagged_expand(psi, mu, nu, k)
                            except HypothesisViolated:
                                continue
                            assert f == to_kschur_basis(catalan_function(psi, mu + nu), k), (psi, mu, nu, k)
                            n += 1
    assert n > 500
