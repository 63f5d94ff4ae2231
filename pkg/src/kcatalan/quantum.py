"""Quantum cohomology of the complete flag variety of C^{k+1} through
k-Schur Catalan functions.

Permutations are tuples in one-line notation on 1..k+1.  Classes in
the quantum ring are dicts mapping (permutation, d) to integers, with
d a length-k tuple of nonnegative exponents of q_1, ..., q_k.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterable, Sequence

from .algebra import conjugate, partition, specialize_t
from .catalan import catalan_function
from .cores import creading
from .expansions import HypothesisViolated, ssyt_skew
from .kschur import to_kschur_basis
from .rootideal import delta_k, uplus


def check_perm(w: Sequence[int]) -> tuple:
    w = tuple(int(x) for x in w)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise ValueError(f"{w} is not a permutation")
    return w


def parse_perm(s: str) -> tuple:
    s = s.strip()
    if "," in s or " " in s:
        return check_perm(int(x) for x in s.strip("[]()").replace(",", " ").split())
    return check_perm(int(ch) for ch in s)


def perm_str(w: Sequence[int]) -> str:
    if len(w) <= 9:
        return "".join(map(str, w))
    return ",".join(map(str, w))


def inv_seq(w: Sequence[int]) -> tuple:
    """Inv_i(w) = #{j > i : w_i > w_j}."""
    return tuple(sum(1 for j in range(i + 1, len(w)) if w[i] > w[j]) for i in range(len(w)))


def length(w: Sequence[int]) -> int:
    return sum(inv_seq(w))


def descents(w: Sequence[int]) -> tuple:
    return tuple(i for i in range(1, len(w)) if w[i - 1] > w[i])


def descent_vector(w: Sequence[int]) -> tuple:
    """The 0/1 vector of length k with a 1 at every descent of w."""
    return tuple(1 if w[i - 1] > w[i] else 0 for i in range(1, len(w)))


def longest(k: int) -> tuple:
    return tuple(range(k + 1, 0, -1))


def compose(u: Sequence[int], v: Sequence[int]) -> tuple:
    """(u v)(i) = u(v(i))."""
    return tuple(u[x - 1] for x in v)


def zeta_conjugate(w: Sequence[int], k: int) -> tuple:
    """Columns of zeta(w): binom(k+1-i, 2) + Inv_i(w0 w) for i = 1..k."""
    w = check_perm(w)
    if len(w) != k + 1:
        raise ValueError(f"{w} is not in S_{k + 1}")
    inv = inv_seq(compose(longest(k), w))
    return tuple((k + 1 - i) * (k - i) // 2 + inv[i - 1] for i in range(1, k + 1))


def zeta(w: Sequence[int], k: int) -> tuple:
    return conjugate(zeta_conjugate(w, k))


def rectangle(i: int, k: int) -> tuple:
    """The k-rectangle R_i = (i^{k+1-i})."""
    return (i,) * (k + 1 - i)


def is_irreducible(mu: Iterable[int], k: int) -> bool:
    c = Counter(partition(mu))
    return all(c[i] <= k - i for i in range(1, k + 1)) and all(x <= k for x in c)


def rect_decompose(mu: Iterable[int], k: int) -> tuple:
    """Split mu into its irreducible part and rectangle multiplicities a_1..a_k."""
    mu = partition(mu)
    if mu and mu[0] > k:
        raise ValueError(f"{mu} is not {k}-bounded")
    c = Counter(mu)
    a = []
    for i in range(1, k + 1):
        q, rem = divmod(c[i], k + 1 - i)
        a.append(q)
        c[i] = rem
    irr = tuple(sorted(c.elements(), reverse=True))
    assert is_irreducible(irr, k)
    return irr, tuple(a)


def rect_compose(irr: Iterable[int], a: Sequence[int], k: int):
    """Inverse of rect_decompose; None when some multiplicity is negative."""
    if any(x < 0 for x in a):
        return None
    parts = list(partition(irr))
    for i, m in enumerate(a, start=1):
        parts += [i] * (m * (k + 1 - i))
    return tuple(sorted(parts, reverse=True))


def theta(w: Sequence[int], k: int) -> tuple:
    return rect_decompose(zeta(w, k), k)[0]


def _rotate(seq: list, start: int, m: int) -> None:
    """Left-rotate seq[start:] by m places."""
    tail = seq[start:]
    if tail:
        m %= len(tail)
        seq[start:] = tail[m:] + tail[:m]


def from_cyclic(ms: Sequence[int], k: int) -> tuple:
    """w = c_k^{m_0} c_{k-1}^{m_1} ... c_1^{m_{k-1}} with c_i = s_{k+1-i} ... s_k."""
    w = list(range(1, k + 2))
    for i, m in enumerate(ms):
        # right multiplication by c_{k-i} rotates positions i+1..k+1 to the left
        _rotate(w, i, m)
    return tuple(w)


def cyclic_factorization(w: Sequence[int], k: int) -> tuple:
    w = check_perm(w)
    cur = list(range(1, k + 2))
    ms = []
    for i in range(k):
        m = cur.index(w[i]) - i
        assert 0 <= m <= k - i
        ms.append(m)
        _rotate(cur, i, m)
    assert tuple(cur) == w
    return tuple(ms)


def theta_fibre(nu: Iterable[int], k: int) -> list:
    """All w in S_{k+1} with theta(w) = nu."""
    nu = partition(nu)
    if not is_irreducible(nu, k):
        raise ValueError(f"{nu} is not irreducible for k={k}")
    c = Counter(nu)
    tail = [c[i] for i in range(1, k)]
    return [from_cyclic([m0] + tail, k) for m0 in range(k + 1)]


def dtilde(d: Sequence[int]) -> tuple:
    """sum_i d_i (e_{i-1} - 2 e_i + e_{i+1}), truncated to indices 1..k."""
    k = len(d)
    ext = [0] + list(d) + [0]
    return tuple(ext[i - 1] - 2 * ext[i] + ext[i + 1] for i in range(1, k + 1))


def dtilde_solve(target: Sequence[int]):
    """Exact inverse of dtilde; None unless the solution is integral."""
    k = len(target)
    if k == 0:
        return ()
    # tridiagonal elimination over the rationals
    diag = [Fraction(-2)] * k
    rhs = [Fraction(x) for x in target]
    for i in range(1, k):
        f = Fraction(1) / diag[i - 1]
        diag[i] -= f
        rhs[i] -= f * rhs[i - 1]
    sol = [Fraction(0)] * k
    sol[-1] = rhs[-1] / diag[-1]
    for i in range(k - 2, -1, -1):
        sol[i] = (rhs[i] - sol[i + 1]) / diag[i]
    if any(x.denominator != 1 for x in sol):
        return None
    return tuple(int(x) for x in sol)


def all_perms(k: int) -> list:
    return [tuple(p) for p in permutations(range(1, k + 2))]


@lru_cache(maxsize=None)
def _product_kostka(mu: tuple, nu: tuple, k: int) -> tuple:
    """k-Schur coefficients at t = 1 of the Catalan function for mu and nu side by side."""
    psi = uplus(delta_k(mu, k), delta_k(nu, k))
    f = catalan_function(psi, mu + nu)
    g = specialize_t(to_kschur_basis(f, k), 1)
    return tuple((lam, c(1)) for lam, c in g.items())


def kostka_at_one(u: Sequence[int], v: Sequence[int], k: int) -> dict:
    return dict(_product_kostka(theta(u, k), theta(v, k), k))


def _lambda_for(w, d, u, v, k, extra):
    a = tuple(x + y for x, y in zip(dtilde(d), extra))
    return rect_compose(theta(w, k), a, k)


def gw_invariant(u, v, w, d, k: int) -> int:
    """Gromov-Witten invariant as a k-Catalan-Kostka coefficient at t = 1."""
    u, v, w = check_perm(u), check_perm(v), check_perm(w)
    d = tuple(d)
    if len(d) != k or any(x < 0 for x in d):
        raise ValueError(f"d={d} must be a nonnegative vector of length {k}")
    Du, Dv, Dw = descent_vector(u), descent_vector(v), descent_vector(w)
    lam = _lambda_for(w, d, u, v, k, tuple(x + y - z for x, y, z in zip(Du, Dv, Dw)))
    if lam is None:
        return 0
    return kostka_at_one(u, v, k).get(lam, 0)


def quantum_product(u, v, k: int) -> dict:
    """sigma_u * sigma_v as a map (w, d) -> coefficient."""
    u, v = check_perm(u), check_perm(v)
    Du, Dv = descent_vector(u), descent_vector(v)
    out = {}
    for lam, c in kostka_at_one(u, v, k).items():
        if not c:
            continue
        irr, a = rect_decompose(lam, k)
        hits = []
        for w in theta_fibre(irr, k):
            Dw = descent_vector(w)
            d = dtilde_solve(tuple(ai - x - y + z for ai, x, y, z in zip(a, Du, Dv, Dw)))
            if d is not None and all(x >= 0 for x in d):
                hits.append((w, d))
        if len(hits) != 1:
            raise AssertionError(f"k-Schur term {lam} matched {len(hits)} (w, d) pairs")
        if c < 0:
            raise AssertionError(f"negative coefficient {c} at {lam}")
        out[hits[0]] = out.get(hits[0], 0) + c
    return out


def format_class(cls: dict) -> list:
    """Lines 'q^[d] * sigma[w] : c' in canonical order."""
    lines = []
    for (w, d), c in sorted(cls.items(), key=lambda kv: (sum(kv[0][1]), kv[0][1], kv[0][0])):
        lines.append(f"q^[{','.join(map(str, d))}] * sigma[{perm_str(w)}] : {c}")
    return lines


def single_descent(u: Sequence[int]):
    ds = descents(u)
    return ds[0] if len(ds) == 1 else None


def cyclically_increasing(seq: Sequence[int]) -> bool:
    """Some rotation of seq is increasing."""
    n = len(seq)
    drops = sum(1 for i in range(n - 1) if seq[i] > seq[i + 1])
    if drops == 0:
        return True
    return drops == 1 and seq[-1] < seq[0]


def tableau_hypotheses(u, v, k: int) -> tuple:
    """Return (j, r) for the tableau formula or raise HypothesisViolated."""
    u, v = check_perm(u), check_perm(v)
    j = single_descent(u)
    if j is None:
        raise HypothesisViolated(f"u={perm_str(u)} does not have exactly one descent")
    inv = inv_seq(u)
    m = 1
    while m < len(inv) and inv[m] == inv[0]:
        m += 1
    if not cyclically_increasing(v[m:]):
        raise HypothesisViolated(f"v_{m + 1}...v_{k + 1} = {v[m:]} is not cyclically increasing")
    r = k + 1 - j - inv[0]
    return j, r


@lru_cache(maxsize=None)
def _tableau_counts(u: tuple, v: tuple, k: int) -> tuple:
    from .cores import strong_tableaux

    j, r = tableau_hypotheses(u, v, k)
    U = rectangle(k + 1 - r, k)
    outside = partition(U + theta(v, k))
    acc: Counter = Counter()
    for T in ssyt_skew(U, theta(u, k), range(1, r + 1)):
        for S in strong_tableaux(creading(T), outside, k):
            acc[S.inside] += 1
    return tuple(sorted(acc.items()))


def tableau_counts(u, v, k: int) -> dict:
    """Number of tableau pairs (T, S) with each inside shape, under the tableau hypotheses."""
    return dict(_tableau_counts(check_perm(u), check_perm(v), k))


def gw_tableau(u, v, w, d, k: int) -> int:
    """Gromov-Witten invariant counted by strong tableaux."""
    u, v, w = check_perm(u), check_perm(v), check_perm(w)
    d = tuple(d)
    j, _ = tableau_hypotheses(u, v, k)
    ext = [0] * k
    ext[j - 1] = 1
    Dv, Dw = descent_vector(v), descent_vector(w)
    lam = _lambda_for(w, d, u, v, k, tuple(e + x - z for e, x, z in zip(ext, Dv, Dw)))
    if lam is None:
        return 0
    return tableau_counts(u, v, k).get(lam, 0)
