"""Catalan functions H(Psi; gamma) via the raising operator series.

Each factor (1 - t R_ij)^{-1} is expanded as a geometric series.  Work in
shifted coordinates v = gamma + rho with rho = (ell-1, ..., 1, 0); R_ij
moves one unit from v_j to v_i, and s_gamma is nonzero only when the
final v has distinct nonnegative entries.

Roots are processed column by column from the right.  Coordinate j is
lowered only by roots in column j and raised only by roots in columns to
its right, so once column j is done v_j is final.  This bounds the total
exponent in column j by v_j, which makes the sum finite.  A final
coordinate that is negative, or equal to another final coordinate, kills
every term below it (a zero row, or two equal rows, in the Jacobi-Trudi
matrix).  Finished coordinates are kept as a sorted tail with the sign of
the sort absorbed into the coefficient, so distinct histories that will
straighten identically are merged.
"""

from __future__ import annotations

import bisect
from collections import defaultdict
from functools import lru_cache
from typing import Iterable

from .algebra import SymFun, partition
from .rootideal import RootIdeal, delta_k, full_ideal


def _add_poly(target: dict, key, poly: dict, shift: int = 0, sign: int = 1):
    d = target.get(key)
    if d is None:
        d = target[key] = {}
    for e, c in poly.items():
        e += shift
        v = d.get(e, 0) + sign * c
        if v:
            d[e] = v
        else:
            d.pop(e, None)


@lru_cache(maxsize=200000)
def _catalan(nr: tuple, gamma: tuple) -> SymFun:
    ell = len(gamma)
    if ell == 0:
        return SymFun.one()
    front = tuple(g + ell - 1 - c for c, g in enumerate(gamma))
    states: dict = {(front, ()): {0: 1}}
    for j in range(ell - 1, -1, -1):
        rows = [i for i in range(j) if j > i + nr[i]]
        for i in reversed(rows):
            nxt: dict = {}
            for (fr, tail), poly in states.items():
                vj = fr[j]
                if vj < 0:
                    continue
                base = list(fr)
                for m in range(vj + 1):
                    if m:
                        base[i] += 1
                        base[j] -= 1
                    _add_poly(nxt, (tuple(base), tail), poly, m)
            states = {k: v for k, v in nxt.items() if v}
        nxt = {}
        for (fr, tail), poly in states.items():
            x = fr[j]
            if x < 0:
                continue
            # tail is sorted in decreasing order
            neg = [-y for y in tail]
            pos = bisect.bisect_left(neg, -x)
            if pos < len(tail) and tail[pos] == x:
                continue
            sign = -1 if pos & 1 else 1
            new_tail = tail[:pos] + (x,) + tail[pos:]
            _add_poly(nxt, (fr[:j], new_tail), poly, 0, sign)
        states = {k: v for k, v in nxt.items() if v}
    acc: dict = {}
    for (_, tail), poly in states.items():
        lam = partition(x - (ell - 1 - c) for c, x in enumerate(tail))
        for e, c in poly.items():
            acc[(lam, e)] = acc.get((lam, e), 0) + c
    return SymFun.from_accumulator(acc)


def catalan_function(psi: RootIdeal, gamma: Iterable[int]) -> SymFun:
    """H(Psi; gamma) in the Schur basis."""
    gamma = tuple(int(x) for x in gamma)
    if len(gamma) != psi.ell:
        raise ValueError(f"weight {gamma} has length {len(gamma)}, ideal has length {psi.ell}")
    return _catalan(psi.nr, gamma)


def catalan_function_naive(psi: RootIdeal, gamma: Iterable[int]) -> SymFun:
    """Reference implementation: explicit depth-first search with per-leaf straightening.

    Only the zero-row prune is applied mid-stream.  Much slower than
    catalan_function; kept as an oracle for small cases.
    """
    from .algebra import straighten_schur

    gamma = list(gamma)
    ell = len(gamma)
    roots = sorted(psi.pairs, key=lambda r: (-r[1], -r[0]))
    # the last position in the list touching each column
    last = {}
    for n, (i, j) in enumerate(roots):
        last[j] = n
    acc: dict = defaultdict(int)

    def done(col, n):
        # no root at position >= n can change coordinate col
        return all(not (r[0] == col or r[1] == col) for r in roots[n:])

    def dfs(n, g, e):
        if n == len(roots):
            sgn, lam = straighten_schur(g)
            if sgn:
                acc[(lam, e)] += sgn
            return
        i, j = roots[n]
        m = 0
        while True:
            g2 = list(g)
            g2[i - 1] += m
            g2[j - 1] -= m
            if g2[j - 1] + ell - j < 0:
                # further roots only lower coordinate j, so larger m stays dead
                break
            dfs(n + 1, g2, e + m)
            m += 1

    dfs(0, gamma, 0)
    return SymFun.from_accumulator(acc)


def hall_littlewood_catalan(mu: Iterable[int]) -> SymFun:
    """Modified Hall-Littlewood H_mu as the Catalan function of the full ideal."""
    mu = tuple(mu)
    return catalan_function(full_ideal(len(mu)), mu)


def kschur_catalan(mu: Iterable[int], k: int) -> SymFun:
    mu = partition(mu)
    return catalan_function(delta_k(mu, k), mu)


def downpath_expand(psi: RootIdeal, eta: Iterable[int], p: int) -> list:
    """Terms (t-power, ideal, weight) of the downpath expansion from row p."""
    eta = tuple(eta)
    ell = psi.ell
    if not 1 <= p <= ell:
        raise ValueError(f"row {p} out of range 1..{ell}")
    g = psi.bounce_graph
    path = g.downpath(p)
    bottom = path[-1]
    out = []
    for z in path:
        ideal = psi if z == bottom else psi.without((z, g.down(z)))
        w = list(eta)
        w[p - 1] += 1
        w[z - 1] -= 1
        out.append((g.bounce_count(p, z), ideal, tuple(w)))
    return out
