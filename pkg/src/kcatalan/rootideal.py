"""Root ideals of the positive root poset, stored as nonroot counts per row.

Rows and columns are 1-indexed to match the usual (i, j) root notation.
A root (i, j) with i < j lies in the ideal exactly when j > i + nr[i].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable


class NotAnIdeal(ValueError):
    pass


class NotSamePath(ValueError):
    pass


@dataclass(frozen=True)
class RootIdeal:
    nr: tuple

    def __post_init__(self):
        nr = tuple(int(x) for x in self.nr)
        object.__setattr__(self, "nr", nr)
        ell = len(nr)
        for i, x in enumerate(nr, start=1):
            if not 0 <= x <= ell - i:
                raise NotAnIdeal(f"nr[{i}]={x} out of range for length {ell}")
        for i in range(ell - 1):
            if nr[i] > nr[i + 1] + 1:
                raise NotAnIdeal(f"nr={nr} violates nr[i] <= nr[i+1]+1 at row {i + 1}")

    @property
    def ell(self) -> int:
        return len(self.nr)

    def __contains__(self, root) -> bool:
        i, j = root
        return 1 <= i < j <= self.ell and j > i + self.nr[i - 1]

    @cached_property
    def pairs(self) -> frozenset:
        return frozenset((i, j) for i in range(1, self.ell + 1)
                         for j in range(i + self.nr[i - 1] + 1, self.ell + 1))

    def nonroots(self) -> list:
        return [(i, j) for i in range(1, self.ell + 1)
                for j in range(i + 1, i + self.nr[i - 1] + 1)]

    def row_length(self, i: int) -> int:
        """Number of roots in row i."""
        return self.ell - i - self.nr[i - 1]

    def col_length(self, j: int) -> int:
        """Number of roots in column j."""
        return sum(1 for i in range(1, j) if j > i + self.nr[i - 1])

    def __len__(self):
        return len(self.pairs)

    def __repr__(self):
        return f"RootIdeal(nr={list(self.nr)})"

    def without(self, root) -> "RootIdeal":
        if root not in self:
            raise ValueError(f"{root} not in ideal")
        return make_root_ideal(self.ell, self.pairs - {root})

    def truncate(self) -> "RootIdeal":
        """Intersection with the positive roots of one smaller length."""
        ell = self.ell
        return RootIdeal(tuple(min(x, ell - 1 - i) for i, x in enumerate(self.nr[:-1], start=1)))

    @cached_property
    def bounce_graph(self) -> "BounceGraph":
        return BounceGraph(self)


def is_upper_ideal(ell: int, pairs: frozenset) -> bool:
    for i, j in pairs:
        if i > 1 and (i - 1, j) not in pairs:
            return False
        if j < ell and (i, j + 1) not in pairs:
            return False
    return True


def make_root_ideal(ell: int, pairs: Iterable) -> RootIdeal:
    pairs = frozenset((int(i), int(j)) for i, j in pairs)
    for i, j in pairs:
        if not 1 <= i < j <= ell:
            raise NotAnIdeal(f"({i},{j}) is not a positive root of length {ell}")
    if not is_upper_ideal(ell, pairs):
        raise NotAnIdeal(f"{sorted(pairs)} is not closed upward")
    return RootIdeal(tuple(ell - i - sum(1 for (a, _) in pairs if a == i) for i in range(1, ell + 1)))


def empty_ideal(ell: int) -> RootIdeal:
    return RootIdeal(tuple(ell - i for i in range(1, ell + 1)))


def full_ideal(ell: int) -> RootIdeal:
    return RootIdeal((0,) * ell)


def delta_k(mu: Iterable[int], k: int, ell: int | None = None) -> RootIdeal:
    """The ideal {(i,j) : k - mu_i + i < j} of length ell."""
    mu = tuple(mu)
    if ell is None:
        ell = len(mu)
    mu = mu[:ell] + (0,) * (ell - len(mu))
    if mu and max(mu) > k:
        raise ValueError(f"{mu} is not {k}-bounded")
    return RootIdeal(tuple(min(k - m, ell - i) for i, m in enumerate(mu, start=1)))


def uplus(psi: RootIdeal, phi: RootIdeal) -> RootIdeal:
    """Block sum: psi and phi on the diagonal with the full rectangle between them."""
    return RootIdeal(psi.nr + phi.nr)


def style(psi: RootIdeal, mu: Iterable[int]) -> tuple:
    mu = tuple(mu)
    if len(mu) != psi.ell:
        raise ValueError("length mismatch")
    return tuple(a + b for a, b in zip(psi.nr, mu))


def all_ideals(ell: int):
    """Every root ideal of length ell."""
    def rec(i, acc):
        if i == 0:
            yield RootIdeal(tuple(acc))
            return
        # row i (1-indexed), choosing nr[i] given nr[i+1]
        hi = ell - i
        nxt = acc[0] if acc else None
        if nxt is not None:
            hi = min(hi, nxt + 1)
        for x in range(hi + 1):
            yield from rec(i - 1, [x] + acc)

    yield from rec(ell, [])


def removable_roots(psi: RootIdeal) -> list:
    return [r for r in sorted(psi.pairs) if is_upper_ideal(psi.ell, psi.pairs - {r})]


class BounceGraph:
    def __init__(self, psi: RootIdeal):
        self.psi = psi
        ell = psi.ell
        self._down = {}
        for i, j in removable_roots(psi):
            if i in self._down:
                raise AssertionError("two removable roots in one row")
            self._down[i] = j
        self._up = {}
        for i, j in self._down.items():
            if j in self._up:
                raise AssertionError("two removable roots in one column")
            self._up[j] = i
        self.ell = ell

    def down(self, x: int):
        return self._down.get(x)

    def up(self, x: int):
        return self._up.get(x)

    def bottom(self, r: int) -> int:
        while r in self._down:
            r = self._down[r]
        return r

    def top(self, r: int) -> int:
        while r in self._up:
            r = self._up[r]
        return r

    def bpath(self, a: int, b: int) -> list:
        path = [a]
        x = a
        while x != b:
            if x not in self._down or x > b:
                raise NotSamePath(f"{b} is not below {a} on a bounce path")
            x = self._down[x]
            path.append(x)
        return path

    def downpath(self, r: int) -> list:
        return self.bpath(r, self.bottom(r))

    def bounce_count(self, a: int, b: int) -> int:
        return len(self.bpath(a, b)) - 1


def has_ceiling(psi: RootIdeal, c: int) -> bool:
    """Columns c and c+1 contain the same number of roots."""
    return psi.col_length(c) == psi.col_length(c + 1)


def has_wall(psi: RootIdeal, rows: Iterable[int]) -> bool:
    """All listed rows contain the same number of roots."""
    lengths = {psi.row_length(r) for r in rows}
    return len(lengths) <= 1


def has_mirror(psi: RootIdeal, r: int) -> bool:
    g = psi.bounce_graph
    c = g.down(r)
    return c is not None and c > r + 1 and g.down(r + 1) == c + 1
