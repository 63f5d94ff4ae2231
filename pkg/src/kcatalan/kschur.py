"""k-Schur Catalan functions, change of basis, and strong Pieri operators."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .algebra import ONE, SymFun, TPoly, kschur_basis, partition, perp
from .catalan import catalan_function
from .cores import core_of_partition, strong_covers_down
from .rootideal import RootIdeal, delta_k, style


class NotInLambdaK(ValueError):
    def __init__(self, msg, lam=None):
        super().__init__(msg)
        self.partition = lam


_memo: dict = {}


def kschur(mu: Iterable[int], k: int) -> SymFun:
    """The k-Schur Catalan function in the Schur basis."""
    mu = partition(mu)
    if mu and mu[0] > k:
        raise ValueError(f"{mu} is not {k}-bounded")
    key = (k, mu)
    f = _memo.get(key)
    if f is None:
        f = catalan_function(delta_k(mu, k), mu)
        _memo[key] = f
    return f


def _cache_path(k: int) -> str | None:
    d = os.environ.get("CATALAN_CACHE_DIR")
    if not d:
        return None
    return os.path.join(d, f"kschur_k{k}.json")


def load_cache(k: int) -> int:
    """Load memoized k-Schur expansions for level k; returns the count loaded."""
    path = _cache_path(k)
    if not path or not os.path.exists(path):
        return 0
    with open(path) as fh:
        data = json.load(fh)
    for entry in data:
        mu = tuple(entry["mu"])
        terms = {tuple(lam): TPoly(c) for lam, c in entry["terms"]}
        _memo.setdefault((k, mu), SymFun(terms))
    return len(data)


def save_cache(k: int) -> None:
    path = _cache_path(k)
    if not path:
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    data = [{"mu": list(mu), "terms": [[list(lam), list(c.coeffs)] for lam, c in f.items()]}
            for (kk, mu), f in sorted(_memo.items()) if kk == k]
    with open(path, "w") as fh:
        json.dump(data, fh, sort_keys=True)


def to_kschur_basis(f: SymFun, k: int) -> SymFun:
    """Rewrite an element of Lambda^k in the k-Schur basis.

    The Schur expansion of a k-Schur function is s_mu plus terms strictly
    dominating mu, so the lexicographically smallest partition in the
    support of any combination is the index of its lowest k-Schur term.
    """
    if f.basis != "schur":
        raise ValueError("expected a Schur expansion")
    rem = dict(f.terms)
    out = {}
    while rem:
        lam = min(rem, key=lambda p: (sum(p), p))
        c = rem[lam]
        if lam and lam[0] > k:
            raise NotInLambdaK(f"{list(lam)} is not {k}-bounded; input is not in Lambda^{k}", lam)
        out[lam] = c
        for nu, a in kschur(lam, k).terms.items():
            v = rem.get(nu)
            v = -(a * c) if v is None else v - a * c
            if v:
                rem[nu] = v
            else:
                rem.pop(nu, None)
    return SymFun(out, kschur_basis(k))


def to_schur(f: SymFun) -> SymFun:
    """Expand a k-Schur combination back into Schur functions."""
    if f.basis == "schur":
        return f
    k = f.basis[1]
    out = SymFun()
    for lam, c in f.terms.items():
        out = out + kschur(lam, k).scale(c)
    return out


def _kbasis_check(f: SymFun, k: int):
    if f.basis != kschur_basis(k):
        raise ValueError(f"expected k-Schur basis at level {k}, got {f.basis}")


@lru_cache(maxsize=None)
def _pieri_u_single(mu: tuple, p: int, k: int) -> tuple:
    kappa = core_of_partition(mu, k)
    acc: dict = {}
    for cv in strong_covers_down(kappa, k):
        if cv.mark != p:
            continue
        from .cores import p_of_core

        lam = p_of_core(cv.inner, k)
        acc[lam] = acc.get(lam, TPoly()) + TPoly.monomial(cv.spin)
    return tuple(acc.items())


def pieri_u_combinatorial(f: SymFun, p: int, k: int) -> SymFun:
    """Right action of u_p on a k-Schur combination, summing over strong covers."""
    _kbasis_check(f, k)
    if p < 1:
        raise ValueError("marks are positive")
    out: dict = {}
    for mu, c in f.terms.items():
        for lam, poly in _pieri_u_single(mu, p, k):
            term = c * poly
            out[lam] = out[lam] + term if lam in out else term
    return SymFun(out, f.basis)


def apply_word(f: SymFun, word: Iterable[int], k: int) -> SymFun:
    """f . u_{w_1} u_{w_2} ... with u_{w_1} applied first."""
    for p in word:
        f = pieri_u_combinatorial(f, p, k)
    return f


def pieri_u_catalan(mu: Iterable[int], p: int, k: int, ell: int | None = None) -> SymFun:
    """The k-Schur function of mu acted on by u_p, as the Catalan function with weight mu - e_p."""
    mu = tuple(mu)
    if ell is None:
        ell = len(mu)
    mu = mu + (0,) * (ell - len(mu))
    if not 1 <= p <= ell:
        raise ValueError(f"p={p} out of range 1..{ell}")
    gamma = list(mu)
    gamma[p - 1] -= 1
    return catalan_function(delta_k(mu, k, ell), gamma)


@dataclass(frozen=True)
class KostkaTable:
    psi: RootIdeal
    mu: tuple
    k: int
    coeffs: dict

    @property
    def positive(self) -> bool:
        return all(c.is_nonneg() for c in self.coeffs.values())

    def negatives(self) -> list:
        return [(lam, c) for lam, c in sorted(self.coeffs.items()) if not c.is_nonneg()]

    def as_symfun(self) -> SymFun:
        return SymFun(self.coeffs, kschur_basis(self.k))


def catalan_kostka(psi: RootIdeal, mu: Iterable[int], k: int, check_style: bool = True) -> KostkaTable:
    """k-Schur expansion of H(psi; mu)."""
    mu = tuple(mu)
    if check_style:
        st = style(psi, mu)
        if any(x > k for x in st):
            raise NotInLambdaK(f"style {list(st)} exceeds k={k}")
    f = to_kschur_basis(catalan_function(psi, mu), k)
    return KostkaTable(psi, mu, k, dict(f.terms))


def u_eperp_identity_check(f: SymFun, ell: int, k: int) -> bool:
    """Compare f . e_ell^perp with f . u_ell u_{ell-1} ... u_1."""
    _kbasis_check(f, k)
    if any(len(mu) > ell for mu in f.terms):
        raise ValueError(f"support of f is not inside Par^k_{ell}")
    lhs = perp(to_schur(f), ell, "E")
    rhs = to_schur(apply_word(f, range(ell, 0, -1), k))
    return lhs == rhs
