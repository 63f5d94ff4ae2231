"""(k+1)-cores, the bijection p to k-bounded partitions, strong marked covers
and strong tableaux.  Rows and columns are 1-indexed, English notation."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .algebra import conjugate, partition


def hook(kappa: tuple, r: int, c: int, conj: tuple | None = None) -> int:
    if conj is None:
        conj = conjugate(kappa)
    return kappa[r - 1] - c + conj[c - 1] - r + 1


def is_core(kappa: Iterable[int], k: int) -> bool:
    """No cell has hook length k+1."""
    kappa = partition(kappa)
    conj = conjugate(kappa)
    return all(hook(kappa, r, c, conj) != k + 1
               for r in range(1, len(kappa) + 1) for c in range(1, kappa[r - 1] + 1))


def p_of_core(kappa: Iterable[int], k: int) -> tuple:
    """Row r of p(kappa) counts the cells of row r with hook length at most k."""
    kappa = partition(kappa)
    conj = conjugate(kappa)
    return tuple(sum(1 for c in range(1, kappa[r - 1] + 1) if hook(kappa, r, c, conj) <= k)
                 for r in range(1, len(kappa) + 1))


@lru_cache(maxsize=None)
def core_of_partition(mu: tuple, k: int) -> tuple:
    """The unique (k+1)-core kappa with p(kappa) = mu."""
    mu = partition(mu)
    if mu and mu[0] > k:
        raise ValueError(f"{mu} is not {k}-bounded")
    ell = len(mu)
    rows: list = []  # rows of kappa from the bottom up
    # column heights of the rows fixed so far
    for r in range(ell - 1, -1, -1):
        below = rows[-1] if rows else 0
        found = []
        for x in range(below, below + k + 1):
            if x == 0 and mu[r] > 0:
                continue
            hooks = [x - c + sum(1 for y in rows if y >= c) + 1 for c in range(1, x + 1)]
            if k + 1 in hooks:
                continue
            if sum(1 for h in hooks if h <= k) == mu[r]:
                found.append(x)
        if len(found) != 1:
            raise AssertionError(f"p-inverse search found {found} for row {r + 1} of {mu}")
        rows.append(found[0])
    kappa = tuple(reversed(rows))
    assert p_of_core(kappa, k) == mu
    return kappa


def skew_cells(outer: Iterable[int], inner: Iterable[int]) -> list:
    outer = tuple(outer)
    inner = tuple(inner) + (0,) * (len(outer) - len(tuple(inner)))
    return [(r, c) for r in range(1, len(outer) + 1)
            for c in range(inner[r - 1] + 1, outer[r - 1] + 1)]


def components(cells: Iterable) -> list:
    """Edge-connected components, each a sorted tuple of cells, ordered by top row."""
    cells = set(cells)
    out = []
    while cells:
        start = min(cells)
        stack = [start]
        comp = {start}
        cells.discard(start)
        while stack:
            r, c = stack.pop()
            for nb in ((r + 1, c), (r - 1, c), (r, c + 1), (r, c - 1)):
                if nb in cells:
                    cells.discard(nb)
                    comp.add(nb)
                    stack.append(nb)
        out.append(tuple(sorted(comp)))
    out.sort()
    return out


@dataclass(frozen=True)
class StrongCover:
    inner: tuple
    outer: tuple
    mark: int
    components: tuple
    spin: int

    @property
    def height(self) -> int:
        comp = self.components[0]
        return comp[-1][0] - comp[0][0] + 1


def _sub_cores(kappa: tuple, k: int, ribbon_floor: bool = True):
    """Sub-partitions of kappa that are (k+1)-cores, found row by row from the bottom."""
    ell = len(kappa)
    out = []

    def rec(r, tau, colh):
        # r: 0-indexed row to fill, tau holds rows r+1..ell-1 reversed
        if r < 0:
            out.append(partition(reversed(tau)))
            return
        lo = tau[-1] if tau else 0
        if ribbon_floor and r + 1 < ell:
            lo = max(lo, kappa[r + 1] - 1)
        for x in range(lo, kappa[r] + 1):
            if any(x - c + colh[c] + 1 == k + 1 for c in range(1, x + 1)):
                continue
            new = list(colh)
            for c in range(1, x + 1):
                new[c] += 1
            tau.append(x)
            rec(r - 1, tau, new)
            tau.pop()

    rec(ell - 1, [], [0] * ((kappa[0] if kappa else 0) + 2))
    return out


def _covers_for(kappa: tuple, tau: tuple) -> list:
    comps = components(skew_cells(kappa, tau))
    heights = {comp[-1][0] - comp[0][0] + 1 for comp in comps}
    sizes = {len(comp) for comp in comps}
    if len(heights) != 1 or len(sizes) != 1:
        raise AssertionError(f"components of {kappa}/{tau} differ in height or size")
    h = heights.pop()
    tops = sorted({comp[0][0] for comp in comps})
    res = []
    for mark in tops:
        n_below = sum(1 for comp in comps if comp[0][0] > mark)
        spin = len(comps) * (h - 1) + n_below
        res.append(StrongCover(tau, kappa, mark, tuple(comps), spin))
    return res


@lru_cache(maxsize=None)
def strong_covers_down(kappa: tuple, k: int, ribbon_floor: bool = True) -> tuple:
    """All strong marked covers tau => kappa, sorted by inner shape then mark."""
    kappa = partition(kappa)
    target = sum(p_of_core(kappa, k)) - 1
    out = []
    for tau in _sub_cores(kappa, k, ribbon_floor):
        if tau == kappa or sum(p_of_core(tau, k)) != target:
            continue
        out.extend(_covers_for(kappa, tau))
    out.sort(key=lambda cv: (cv.inner, cv.mark))
    return tuple(out)


def strong_marked_covers_down(kappa: Iterable[int], k: int) -> tuple:
    return strong_covers_down(partition(kappa), k)


@dataclass(frozen=True)
class StrongTableau:
    word: tuple
    chain: tuple  # cores from innermost to outermost
    covers: tuple  # covers from the innermost upward
    spin: int
    k: int

    @property
    def inside(self) -> tuple:
        return p_of_core(self.chain[0], self.k)

    @property
    def outside(self) -> tuple:
        return p_of_core(self.chain[-1], self.k)


def strong_tableaux(word: Iterable[int], mu: Iterable[int], k: int) -> list:
    """Strong marked tableaux with outside mu whose marks, read from the top, are word."""
    word = tuple(word)
    top = core_of_partition(partition(mu), k)
    partial = [((top,), (), 0)]
    for w in word:
        nxt = []
        for chain, covers, spin in partial:
            for cv in strong_covers_down(chain[0], k):
                if cv.mark == w:
                    nxt.append(((cv.inner,) + chain, (cv,) + covers, spin + cv.spin))
        partial = nxt
    return [StrongTableau(word, chain, covers, spin, k) for chain, covers, spin in partial]


def superstandard(outer: Iterable[int], inner: Iterable[int] = ()) -> dict:
    """Fill the skew shape outer/inner with i in every cell of row i."""
    outer = partition(outer)
    inner = tuple(inner)
    if len(inner) > len(outer) or any(inner[i] > outer[i] for i in range(len(inner))) \
            or any(inner[i] < inner[i + 1] for i in range(len(inner) - 1)):
        raise ValueError(f"{outer}/{inner} is not a skew shape")
    return {(r, c): r for r, c in skew_cells(outer, inner)}


def creading(filling: dict) -> tuple:
    """Column reading word: columns left to right, each read bottom to top."""
    return tuple(filling[cell] for cell in sorted(filling, key=lambda rc: (rc[1], -rc[0])))
