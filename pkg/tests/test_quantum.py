from __future__ import annotations

import itertools
import random
from collections import Counter
from functools import lru_cache

import pytest

from kcatalan.algebra import conjugate, partitions_of
from kcatalan.expansions import HypothesisViolated
from kcatalan.quantum import (
    all_perms,
    compose,
    cyclic_factorization,
    descent_vector,
    descents,
    dtilde,
    dtilde_solve,
    format_class,
    from_cyclic,
    gw_invariant,
    gw_tableau,
    inv_seq,
    is_irreducible,
    length,
    longest,
    parse_perm,
    quantum_product,
    rect_compose,
    rect_decompose,
    tableau_hypotheses,
    theta,
    theta_fibre,
    zeta,
    zeta_conjugate,
)

U7 = (1, 2, 4, 6, 3, 5, 7)
V7 = (1, 7, 3, 4, 5, 6, 2)
Q = (0, 1, 1, 1, 1, 1)
U7_TIMES_V7 = {((1, 7, 4, 6, 3, 5, 2), (0,) * 6): 1, ((2, 7, 4, 5, 3, 6, 1), (0,) * 6): 1,
            ((2, 7, 3, 6, 4, 5, 1), (0,) * 6): 1, ((1, 2, 4, 5, 3, 6, 7), Q): 1,
            ((1, 2, 3, 6, 4, 5, 7), Q): 1, ((2, 1, 3, 5, 4, 6, 7), Q): 1}


@lru_cache(maxsize=None)
def qp(u, v, k):
    return quantum_product(u, v, k)


def times(cls, w, k):
    out = Counter()
    for (x, d), c in cls.items():
        for (y, e), c2 in qp(x, w, k).items():
            out[(y, tuple(a + b for a, b in zip(d, e)))] += c * c2
    return {key: c for key, c in out.items() if c}


def test_statistics():
    ident = tuple(range(1, 8))
    assert inv_seq(ident) == (0,) * 7 and descents(ident) == ()
    assert descents(U7) == (4,)
    assert descent_vector(U7) == (0, 0, 0, 1, 0, 0)
    rng = random.Random(1)
    for _ in range(30):
        w = tuple(rng.sample(range(1, 8), 7))
        inversions = sum(1 for i in range(7) for j in range(i + 1, 7) if w[i] > w[j])
        assert length(w) == inversions
    assert parse_perm("1246357") == U7
    with pytest.raises(ValueError):
        parse_perm("1224")


def test_zeta_theta_example():
    assert zeta_conjugate(U7, 6) == (21, 15, 9, 4, 3, 1)
    assert zeta(U7, 6) == conjugate((21, 15, 9, 4, 3, 1))
    assert theta(U7, 6) == (4, 3, 2)
    assert theta(V7, 6) == (2, 1, 1, 1, 1, 1)


def test_zeta_of_longest():
    for k in range(1, 6):
        assert zeta_conjugate(longest(k), k) == tuple((k + 1 - i) * (k - i) // 2 for i in range(1, k + 1))


def test_rectangles():
    lam = (4, 4, 2, 1, 1, 1, 1, 1, 1)
    irr, a = rect_decompose(lam, 6)
    assert irr == (4, 4, 2) and a == (1, 0, 0, 0, 0, 0)
    assert rect_compose(irr, a, 6) == lam
    assert rect_compose(irr, (-1, 0, 0, 0, 0, 0), 6) is None
    for k in range(1, 5):
        for n in range(12):
            for mu in partitions_of(n, k):
                irr, a = rect_decompose(mu, k)
                assert is_irreducible(irr, k)
                assert rect_compose(irr, a, k) == mu
                if is_irreducible(mu, k):
                    assert (irr, a) == (mu, (0,) * k)


def test_multiplicity_formula():
    for k in range(1, 5):
        for w in all_perms(k):
            I = inv_seq(compose(longest(k), w))
            D = set(descents(w))
            counts = Counter(theta(w, k))
            ms = cyclic_factorization(w, k)
            for i in range(1, k):
                n = I[i - 1] - I[i] - 1 if i not in D else k - i + I[i - 1] - I[i]
                assert counts[i] == n == ms[i]


def test_cyclic_factorization():
    for k in range(1, 5):
        assert cyclic_factorization(tuple(range(1, k + 2)), k) == (0,) * k
        for w in all_perms(k):
            ms = cyclic_factorization(w, k)
            assert all(0 <= m <= k - i for i, m in enumerate(ms))
            assert from_cyclic(ms, k) == w
    assert (1, 2, 4, 5, 3, 6, 7) in theta_fibre((4, 4, 2), 6)
    for w in theta_fibre((4, 4, 2), 6):
        assert theta(w, 6) == (4, 4, 2)
    with pytest.raises(ValueError):
        theta_fibre((1, 1, 1, 1, 1, 1), 6)


def test_fibres_partition_the_group():
    for k in range(1, 5):
        seen = Counter(theta(w, k) for w in all_perms(k))
        assert all(c == k + 1 for c in seen.values())


def test_dtilde():
    d = (0, 1, 1, 1, 1, 1)
    assert dtilde(d) == (1, -1, 0, 0, 0, -1)
    assert dtilde((0,) * 4) == (0,) * 4
    rng = random.Random(2)
    for _ in range(100):
        k = rng.randint(1, 6)
        d = tuple(rng.randint(-3, 3) for _ in range(k))
        assert dtilde_solve(dtilde(d)) == d
    assert dtilde_solve((1, 0)) is None


def test_gw_examples():
    assert gw_invariant(U7, V7, (1, 7, 4, 6, 3, 5, 2), (0,) * 6, 6) == 1
    assert gw_invariant(U7, V7, (1, 2, 4, 5, 3, 6, 7), Q, 6) == 1
    assert gw_invariant(U7, V7, (1, 2, 4, 5, 3, 6, 7), (0,) * 6, 6) == 0


def test_quantum_product_example():
    cls = quantum_product(U7, V7, 6)
    assert cls == U7_TIMES_V7
    assert format_class(cls)[3] == "q^[0,1,1,1,1,1] * sigma[1236457] : 1"


def test_identity_axiom():
    for k in range(1, 4):
        ident = tuple(range(1, k + 2))
        for v in all_perms(k):
            assert quantum_product(ident, v, k) == {(v, (0,) * k): 1}
            for w in all_perms(k):
                for d in itertools.product(range(2), repeat=k):
                    expected = int(w == v and not any(d))
                    assert gw_invariant(ident, v, w, d, k) == expected


def test_commutative_and_graded():
    for k in range(1, 4):
        perms = all_perms(k)
        for u in perms:
            for v in perms:
                cls = quantum_product(u, v, k)
                assert cls == quantum_product(v, u, k)
                for (w, d), c in cls.items():
                    assert c > 0
                    assert length(u) + length(v) == length(w) + 2 * sum(d)


def test_associative_k3():
    perms = all_perms(3)
    for u in perms:
        for v in perms:
            uv = qp(u, v, 3)
            for w in perms:
                assert times(uv, w, 3) == times(qp(v, w, 3), u, 3)


def test_associative_k4_sample():
    rng = random.Random(4)
    perms = all_perms(4)
    for _ in range(15):
        u, v, w = (rng.choice(perms) for _ in range(3))
        assert times(quantum_product(u, v, 4), w, 4) == times(quantum_product(v, w, 4), u, 4)


def test_tableau_formula_example():
    assert gw_tableau(U7, V7, (1, 2, 4, 5, 3, 6, 7), Q, 6) == 1
    assert tableau_hypotheses(U7, V7, 6) == (4, 3)


def test_tableau_hypotheses_reported():
    with pytest.raises(HypothesisViolated, match="descent"):
        tableau_hypotheses((2, 1, 4, 3), (1, 2, 3, 4), 3)
    with pytest.raises(HypothesisViolated, match="cyclically"):
        tableau_hypotheses((1, 3, 2, 4), (1, 3, 2, 4), 3)


def test_theta_of_single_descent_from_inversions():
    for k in range(1, 6):
        for u in all_perms(k):
            ds = descents(u)
            if len(ds) != 1:
                continue
            j = ds[0]
            inv = inv_seq(u)
            assert conjugate(theta(u, k)) == tuple(x for x in (k + 1 - j - inv[i] for i in range(j)) if x)


def test_tableau_formula_k3():
    for u in all_perms(3):
        for v in all_perms(3):
            try:
                tableau_hypotheses(u, v, 3)
            except HypothesisViolated:
                continue
            for w in all_perms(3):
                for d in itertools.product(range(2), repeat=3):
                    assert gw_tableau(u, v, w, d, 3) == gw_invariant(u, v, w, d, 3)
