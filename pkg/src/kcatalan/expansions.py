"""Positive k-Schur expansions built from strong Pieri operators.

Tableau fillings are dicts mapping (row, column) to entries, rows and
columns 1-indexed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .algebra import SymFun, is_partition, kschur_basis, partition
from .cores import creading, superstandard
from .kschur import apply_word, kschur, to_kschur_basis
from .rootideal import RootIdeal, empty_ideal, style
from .vertexops import b_schur, jing_b


class HypothesisViolated(ValueError):
    pass


def ssyt_skew(outer: Sequence[int], inner: Sequence[int], alphabet: Iterable[int]) -> list:
    """Semistandard fillings of outer/inner with entries from alphabet.

    Output is sorted by column reading word.
    """
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(tuple(inner)))
    if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(outer))):
        raise ValueError(f"{outer}/{inner} is not a skew shape")
    letters = sorted(set(alphabet))
    cells = [(r, c) for r in range(1, len(outer) + 1) for c in range(inner[r - 1] + 1, outer[r - 1] + 1)]
    out = []
    fill: dict = {}

    def rec(n):
        if n == len(cells):
            out.append(dict(fill))
            return
        r, c = cells[n]
        lo = fill.get((r, c - 1), letters[0] if letters else 0)
        above = fill.get((r - 1, c))
        for x in letters:
            if x < lo or (above is not None and x <= above):
                continue
            fill[(r, c)] = x
            rec(n + 1)
            del fill[(r, c)]

    if letters or not cells:
        rec(0)
    out.sort(key=creading)
    return out


def hl_to_kschur(mu: Iterable[int], k: int, ell: int | None = None) -> SymFun:
    """H_mu in the k-Schur basis via the superstandard word on k^ell / mu."""
    mu = partition(mu)
    if mu and mu[0] > k:
        raise HypothesisViolated(f"{mu} is not {k}-bounded")
    if ell is None:
        ell = len(mu)
    rect = (k,) * ell
    word = creading(superstandard(rect, mu))
    return apply_word(SymFun.basis_element(rect, kschur_basis(k)), word, k)


def _check_schur_kschur(mu: tuple, nu: tuple, k: int):
    r = len(mu)
    if not is_partition(mu) or (mu and (mu[0] > k - r + 1)):
        raise HypothesisViolated(f"mu={mu} is not in Par^{k - r + 1}_{r}")
    if nu and nu[0] > k:
        raise HypothesisViolated(f"nu={nu} is not {k}-bounded")
    if not is_partition(mu + nu):
        raise HypothesisViolated(f"concatenation {mu + nu} is not a partition")


def schur_times_kschur(mu: Iterable[int], nu: Iterable[int], k: int) -> SymFun:
    """The operator of the empty ideal of length r applied to a k-Schur function,
    by the tableau sum over SSYT of shape U/mu, U the r-row k-rectangle."""
    mu, nu = tuple(mu), partition(nu)
    _check_schur_kschur(mu, nu, k)
    r = len(mu)
    U = (k - r + 1,) * r
    start = SymFun.basis_element(U + nu, kschur_basis(k))
    out = SymFun.zero(kschur_basis(k))
    for T in ssyt_skew(U, mu, range(1, r + 1)):
        out = out + apply_word(start, creading(T), k)
    return out


def schur_times_kschur_vertex(mu: Iterable[int], nu: Iterable[int], k: int) -> SymFun:
    """Same product computed with vertex operators and converted to the k-Schur basis."""
    mu, nu = tuple(mu), partition(nu)
    return to_kschur_basis(b_schur(mu, kschur(nu, k)), k)


def crop(beta: Iterable[int]) -> tuple:
    out = []
    for x in beta:
        out.append(x if not out else min(out[-1], x))
    return tuple(out)


def is_pseudopartition(alpha: Sequence[int]) -> bool:
    return all(a >= 0 for a in alpha) and all(alpha[i + 1] <= alpha[i] + 1 for i in range(len(alpha) - 1))


def ctab(alpha: Sequence[int], n: Sequence[int]) -> list:
    """Flagged tableaux on the right-justified diagram of alpha with lower flags n."""
    alpha, n = tuple(alpha), tuple(n)
    r = len(alpha)
    if any(a < 0 for a in alpha):
        raise ValueError(f"{alpha} has a negative entry")
    if len(n) != r or any(not 1 <= x <= r for x in n):
        raise ValueError(f"flags {n} not in [{r}]^{r}")
    m = max(alpha, default=0)
    if m == 0:
        return [{}]
    rows = [list(range(m - a + 1, m + 1)) for a in alpha]
    present = [set(rw) for rw in rows]
    out = []
    fill: dict = {}
    cells = [(i + 1, j) for i in range(r) for j in rows[i]]

    def ok_row_done(i):
        # condition IV between rows i-1 and i (1-indexed i >= 2)
        for j in present[i - 2] - present[i - 1]:
            if fill[(i - 1, j)] >= n[i - 1]:
                return False
        return True

    def rows_ok(upto):
        # rows above `upto` are complete; empty rows never start, so check them all
        return all(ok_row_done(i) for i in range(2, upto + 1))

    def rec(t):
        if t == len(cells):
            if rows_ok(r):
                out.append(dict(fill))
            return
        i, j = cells[t]
        if j == rows[i - 1][0] and not rows_ok(i):
            return
        lo = max(n[i - 1], fill.get((i, j - 1), 0))
        above = fill.get((i - 1, j))
        if above is not None:
            lo = max(lo, above + 1)
        for x in range(lo, r + 1):
            fill[(i, j)] = x
            rec(t + 1)
            del fill[(i, j)]

    rec(0)
    out.sort(key=creading)
    return out


@dataclass(frozen=True)
class FlaggedData:
    zeta: tuple
    lam: tuple
    alpha: tuple
    flags: tuple


def flagged_data(psi: RootIdeal, mu: Sequence[int], nu: Sequence[int], k: int) -> FlaggedData:
    """Check the hypotheses of the flagged expansion and compute its data."""
    mu, nu = tuple(mu), tuple(nu)
    r, ell = len(mu), psi.ell
    if r + len(nu) != ell or r < 1:
        raise HypothesisViolated(f"lengths: mu has {r}, nu has {len(nu)}, ideal has {ell}")
    if not is_pseudopartition(mu):
        raise HypothesisViolated(f"mu={mu} is not a pseudopartition")
    if not is_partition(nu) or (nu and (nu[0] > k or mu[-1] < nu[0])):
        raise HypothesisViolated(f"nu={nu} must be a {k}-bounded partition with mu_r >= nu_1")
    for i in range(1, r + 1):
        if psi.nr[i - 1] < r - i:
            raise HypothesisViolated(f"nr[{i}]={psi.nr[i - 1]} < {r - i}")
    st = style(psi, mu + nu)
    gam = mu + nu
    for i in range(1, ell + 1):
        if i <= r and st[i - 1] > k:
            raise HypothesisViolated(f"style[{i}]={st[i - 1]} exceeds k={k}")
        if i > r and st[i - 1] != min(k, ell - i + gam[i - 1]):
            raise HypothesisViolated(f"style[{i}]={st[i - 1]} != min(k, ell-i+gamma_i)")
    zeta = tuple(k - psi.nr[i] for i in range(r))
    lam = crop(zeta)
    alpha = tuple(a - b for a, b in zip(lam, mu))
    if any(a < 0 for a in alpha):
        raise HypothesisViolated(f"alpha={alpha} has a negative entry")
    flags = tuple(i - (zeta[i - 1] - lam[i - 1]) for i in range(1, r + 1))
    return FlaggedData(zeta, lam, alpha, flags)


def catalan_flagged_expand(psi: RootIdeal, mu: Sequence[int], nu: Sequence[int], k: int) -> SymFun:
    """H(psi; mu nu) in the k-Schur basis, summed over flagged tableaux."""
    data = flagged_data(psi, mu, nu, k)
    start = SymFun.basis_element(data.lam + tuple(nu), kschur_basis(k))
    out = SymFun.zero(kschur_basis(k))
    for T in ctab(data.alpha, data.flags):
        out = out + apply_word(start, creading(T), k)
    return out


@dataclass(frozen=True)
class KSplit:
    pieces: tuple
    blocks: tuple  # 1-indexed position ranges, one per piece

    def __str__(self):
        return "(" + ",".join("".join(map(str, p)) for p in self.pieces) + ")"


def ksplit(lam: Iterable[int], k: int) -> KSplit:
    lam = partition(lam)
    if lam and lam[0] > k:
        raise HypothesisViolated(f"{lam} is not {k}-bounded")
    pieces, blocks = [], []
    s = 0
    while s < len(lam):
        r = k - lam[s] + 1
        piece = lam[s:s + r]
        piece = piece + (0,) * (r - len(piece))
        pieces.append(piece)
        blocks.append(range(s + 1, s + r + 1))
        s += r
    return KSplit(tuple(pieces), tuple(blocks))


def _operator_b(mu: tuple, f: SymFun) -> SymFun:
    return b_schur(mu, f)


@lru_cache(maxsize=None)
def ksplit_polynomial(lam: tuple, k: int) -> SymFun:
    """Iterated empty-ideal Catalan operators over the k-split blocks, ending on a Schur function."""
    sp = ksplit(lam, k)
    if not sp.pieces:
        return SymFun.one()
    f = SymFun.basis_element(partition(sp.pieces[-1]))
    for piece in reversed(sp.pieces[:-1]):
        f = _operator_b(piece, f)
    return f


def ksplit_to_kschur(lam: Iterable[int], k: int) -> SymFun:
    """The k-split polynomial expanded through strong Pieri operators."""
    sp = ksplit(partition(lam), k)
    if not sp.pieces:
        return SymFun.one(kschur_basis(k))
    U: tuple = ()
    for piece in sp.pieces:
        U += (piece[0],) * len(piece)
    f = SymFun.basis_element(U, kschur_basis(k))
    for piece, block in reversed(list(zip(sp.pieces, sp.blocks))):
        r = len(piece)
        outer = (piece[0],) * r
        acc = SymFun.zero(kschur_basis(k))
        for T in ssyt_skew(outer, partition(piece), range(1, r + 1)):
            word = tuple(x + block.start - 1 for x in creading(T))
            acc = acc + apply_word(f, word, k)
        f = acc
    return f


def to_g_basis(f: SymFun, k: int) -> dict:
    """Coefficients of f in the k-split basis (leading terms are s_lam)."""
    rem = dict(f.terms)
    out = {}
    while rem:
        lam = min(rem, key=lambda p: (sum(p), p))
        c = rem[lam]
        if lam and lam[0] > k:
            raise AssertionError(f"{lam} is not {k}-bounded; elimination against the k-split basis failed")
        out[lam] = c
        for nu, a in ksplit_polynomial(lam, k).terms.items():
            v = rem.get(nu)
            v = -(a * c) if v is None else v - a * c
            if v:
                rem[nu] = v
            else:
                rem.pop(nu, None)
    return out


def project(f: SymFun, k: int, d: int) -> SymFun:
    """Keep the k-split basis components with first part at most d."""
    out = SymFun()
    for lam, c in to_g_basis(f, k).items():
        if not lam or lam[0] <= d:
            out = out + ksplit_polynomial(lam, k).scale(c)
    return out


@lru_cache(maxsize=None)
def atilde(mu: tuple, k: int) -> SymFun:
    """A(mu) = projection to first part <= mu_1 of b_{mu_1} A(mu_2, ...)."""
    mu = partition(mu)
    if not mu:
        return SymFun.one()
    if mu[0] > k:
        raise HypothesisViolated(f"{mu} is not {k}-bounded")
    return project(jing_b(mu[0], atilde(mu[1:], k)), k, mu[0])
