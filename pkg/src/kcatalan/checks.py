"""Invariant suites run by the `check` and `conjecture-scan` commands."""

from __future__ import annotations

from itertools import product
from typing import Callable, Iterator

from .algebra import SymFun, kschur_basis, partitions_in_box, partitions_of, pad
from .catalan import catalan_function, downpath_expand, hall_littlewood_catalan
from .cores import core_of_partition, p_of_core
from .expansions import (
    atilde,
    hl_to_kschur,
    ksplit_polynomial,
    ksplit_to_kschur,
)
from .kschur import (
    catalan_kostka,
    kschur,
    pieri_u_catalan,
    pieri_u_combinatorial,
    to_kschur_basis,
    u_eperp_identity_check,
)
from .quantum import all_perms, quantum_product
from .rootideal import all_ideals, style
from .vertexops import catalan_operator, hall_littlewood


def _bounded(max_k: int, max_size: int) -> Iterator[tuple]:
    for k in range(1, max_k + 1):
        for n in range(max_size + 1):
            for mu in partitions_of(n, k):
                yield k, mu


def suite_catalan(max_k: int, max_size: int) -> Iterator[tuple]:
    for ell in range(1, min(4, max_size) + 1):
        for psi in all_ideals(ell):
            for gamma in product(range(max_k + 1), repeat=ell):
                if sum(gamma) > max_size:
                    continue
                h = catalan_function(psi, gamma)
                for p in range(1, ell + 1):
                    tot = SymFun()
                    for e, ideal, w in downpath_expand(psi, gamma, p):
                        tot = tot + catalan_function(ideal, w).scale(SymFun.one().terms[()].shift(e))
                    yield f"downpath {psi.nr} {gamma} p={p}", tot == h


def suite_vertexops(max_k: int, max_size: int) -> Iterator[tuple]:
    for n in range(max_size + 1):
        for mu in partitions_of(n):
            yield f"hall-littlewood {mu}", hall_littlewood(mu) == hall_littlewood_catalan(mu)
    for ell in range(1, 4):
        for psi in all_ideals(ell):
            for gamma in partitions_in_box(max_k, ell):
                g = pad(gamma, ell)
                yield f"operator {psi.nr} {g}", catalan_operator(psi, g, SymFun.one()) == catalan_function(psi, g)


def suite_kschur(max_k: int, max_size: int) -> Iterator[tuple]:
    for k, mu in _bounded(max_k, max_size):
        f = to_kschur_basis(kschur(mu, k), k)
        yield f"round trip k={k} {mu}", f == SymFun.basis_element(mu, kschur_basis(k))
    for k in range(1, max_k + 1):
        for ell in range(1, 4):
            for mu in partitions_in_box(k, ell):
                if sum(mu) > max_size:
                    continue
                m = pad(mu, ell)
                base = SymFun.basis_element(mu, kschur_basis(k))
                for p in range(1, ell + 1):
                    comb = pieri_u_combinatorial(base, p, k)
                    cat = to_kschur_basis(pieri_u_catalan(m, p, k), k)
                    yield f"strong pieri k={k} {m} p={p}", comb == cat
                yield f"e-perp k={k} {m}", u_eperp_identity_check(base, ell, k)


def suite_cores(max_k: int, max_size: int) -> Iterator[tuple]:
    for k, mu in _bounded(max_k, max_size):
        yield f"p round trip k={k} {mu}", p_of_core(core_of_partition(mu, k), k) == mu


def suite_expansions(max_k: int, max_size: int) -> Iterator[tuple]:
    for k, mu in _bounded(max_k, max_size):
        yield f"hl route k={k} {mu}", hl_to_kschur(mu, k) == to_kschur_basis(hall_littlewood(mu), k)
        yield f"ksplit route k={k} {mu}", ksplit_to_kschur(mu, k) == to_kschur_basis(ksplit_polynomial(mu, k), k)
        yield f"atilde k={k} {mu}", atilde(mu, k) == kschur(mu, k)


def suite_quantum(max_k: int, max_size: int) -> Iterator[tuple]:
    for k in range(1, min(max_k, 3) + 1):
        perms = all_perms(k)
        ident = tuple(range(1, k + 2))
        for u in perms:
            for v in perms:
                a, b = quantum_product(u, v, k), quantum_product(v, u, k)
                yield f"commute k={k} {u} {v}", a == b
            yield f"unit k={k} {u}", quantum_product(ident, u, k) == {(u, (0,) * k): 1}


SUITES: dict[str, Callable] = {
    "catalan": suite_catalan,
    "cores": suite_cores,
    "kschur": suite_kschur,
    "vertexops": suite_vertexops,
    "expansions": suite_expansions,
    "quantum": suite_quantum,
}


def scan_items(max_ell: int, max_k: int) -> Iterator[tuple]:
    """Indexed root ideals (k, psi, mu) with mu in Par^k_ell and style at most k."""
    for k in range(1, max_k + 1):
        for ell in range(1, max_ell + 1):
            for psi in all_ideals(ell):
                for mu in partitions_in_box(k, ell):
                    m = pad(mu, ell)
                    if max(style(psi, m)) <= k:
                        yield k, psi, m


def scan_one(k, psi, mu) -> list:
    """Negative coefficients of the k-Schur expansion (empty when positive)."""
    return catalan_kostka(psi, mu, k).negatives()
