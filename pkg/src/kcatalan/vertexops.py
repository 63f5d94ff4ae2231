"""Garsia-Jing creation operators and Catalan operators.

b_m = sum_{i,j >= 0} (-1)^i t^j h_{m+i+j} e_i^perp h_j^perp.

The sum over i collapses through Bernstein's operator
S_a = sum_i (-1)^i h_{a+i} e_i^perp, which sends s_lam to s_{(a, lam)}
(straightened).  So b_m s_lam = sum_j t^j sum_{lam/nu horizontal j-strip}
s_{(m+j, nu)}.  The uncollapsed triple sum is kept in jing_b_literal.
"""

from __future__ import annotations

from collections import defaultdict
from functools import lru_cache
from typing import Iterable

from .algebra import (
    ONE,
    SymFun,
    _require_schur,
    horizontal_strips_down,
    horizontal_strips_up,
    partition,
    perp,
    straighten_schur,
)
from .rootideal import RootIdeal


@lru_cache(maxsize=None)
def _jing_on_schur(m: int, lam: tuple) -> tuple:
    acc: dict = defaultdict(int)
    for j in range(sum(lam) + 1):
        for nu in horizontal_strips_down(lam, j):
            sgn, kappa = straighten_schur((m + j,) + nu)
            if sgn:
                acc[(kappa, j)] += sgn
    return tuple((key, c) for key, c in acc.items() if c)


def jing_b(m: int, f: SymFun) -> SymFun:
    """Apply the Garsia-Jing operator b_m to a Schur expansion."""
    _require_schur(f)
    out: dict = {}
    for lam, c in f.terms.items():
        for (kappa, j), n in _jing_on_schur(m, lam):
            term = c.shift(j) * n
            out[kappa] = out[kappa] + term if kappa in out else term
    return SymFun(out)


def jing_b_literal(m: int, f: SymFun) -> SymFun:
    """b_m by the defining double sum, without the Bernstein shortcut."""
    _require_schur(f)
    deg = max((sum(lam) for lam in f.terms), default=0)
    out = SymFun()
    for j in range(deg + 1):
        hj = perp(f, j, "H")
        if not hj:
            continue
        for i in range(deg - j + 1):
            g = perp(hj, i, "E")
            if not g or m + i + j < 0:
                continue
            prod: dict = {}
            for lam, c in g.terms.items():
                for mu in horizontal_strips_up(lam, m + i + j):
                    prod[mu] = prod[mu] + c if mu in prod else c
            sign = -1 if i & 1 else 1
            out = out + SymFun(prod).scale(ONE.shift(j) * sign)
    return out


@lru_cache(maxsize=None)
def _bseq_one(alpha: tuple) -> SymFun:
    if not alpha:
        return SymFun.one()
    return jing_b(alpha[0], _bseq_one(alpha[1:]))


def jing_b_seq(alpha: Iterable[int], f: SymFun) -> SymFun:
    """b_{alpha_1} ... b_{alpha_ell} f, rightmost operator applied first."""
    alpha = tuple(alpha)
    if len(f.terms) == 1 and () in f.terms and f.terms[()] == ONE:
        return _bseq_one(alpha)
    for m in reversed(alpha):
        f = jing_b(m, f)
    return f


def hall_littlewood(mu: Iterable[int]) -> SymFun:
    """Modified Hall-Littlewood function H_mu = b_{mu_1} ... b_{mu_ell} 1."""
    return _bseq_one(partition(mu))


def operator_expr(psi: RootIdeal, gamma: Iterable[int]) -> list:
    """Expand prod over nonroots of (1 - t R_ij) applied to gamma.

    Returns (t-power, sign, alpha) triples with like terms combined.
    """
    gamma = tuple(gamma)
    if len(gamma) != psi.ell:
        raise ValueError("length mismatch")
    terms = {(0, gamma): 1}
    for i, j in psi.nonroots():
        nxt: dict = defaultdict(int)
        for (e, a), c in terms.items():
            nxt[(e, a)] += c
            b = list(a)
            b[i - 1] += 1
            b[j - 1] -= 1
            nxt[(e + 1, tuple(b))] -= c
        terms = {key: c for key, c in nxt.items() if c}
    return sorted((e, c, a) for (e, a), c in terms.items())


def catalan_operator(psi: RootIdeal, gamma: Iterable[int], f: SymFun) -> SymFun:
    """Apply the Catalan operator for (psi, gamma) to f."""
    out = SymFun()
    for e, c, alpha in operator_expr(psi, gamma):
        out = out + jing_b_seq(alpha, f).scale(ONE.shift(e) * c)
    return out


def b_schur(mu: Iterable[int], f: SymFun) -> SymFun:
    """The operator attached to the empty ideal: at t = 1 it multiplies by s_mu."""
    from .rootideal import empty_ideal

    mu = tuple(mu)
    return catalan_operator(empty_ideal(len(mu)), mu, f)
