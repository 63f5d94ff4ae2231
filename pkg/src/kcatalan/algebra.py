"""Exact arithmetic over Z[t] and the Schur basis of symmetric functions.

Partitions are plain tuples of positive integers in weakly decreasing
order (no trailing zeros).  Weights are tuples of integers whose length
is meaningful and never trimmed.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

Partition = tuple
Weight = tuple


class BasisMismatch(ValueError):
    pass


def partition(parts: Iterable[int]) -> Partition:
    """Normalize to a partition tuple, dropping trailing zeros."""
    p = tuple(int(x) for x in parts)
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)) or (p and p[-1] < 0):
        raise ValueError(f"not a partition: {p}")
    n = len(p)
    while n and p[n - 1] == 0:
        n -= 1
    return p[:n]


def is_partition(seq: Iterable[int]) -> bool:
    s = tuple(seq)
    return all(s[i] >= s[i + 1] for i in range(len(s) - 1)) and (not s or s[-1] >= 0)


def is_k_bounded(lam: Iterable[int], k: int) -> bool:
    lam = tuple(lam)
    return not lam or lam[0] <= k


def in_box(lam: Iterable[int], k: int, ell: int) -> bool:
    """Membership in Par^k_ell: at most ell parts, each at most k."""
    lam = partition(lam)
    return len(lam) <= ell and is_k_bounded(lam, k)


def pad(lam: Iterable[int], ell: int) -> Weight:
    lam = tuple(lam)
    if len(lam) > ell and any(lam[ell:]):
        raise ValueError(f"{lam} has more than {ell} nonzero parts")
    return tuple(lam[:ell]) + (0,) * (ell - len(lam))


def conjugate(lam: Iterable[int]) -> Partition:
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def size(lam: Iterable[int]) -> int:
    return sum(lam)


def dominates(lam: Partition, mu: Partition) -> bool:
    """True when lam dominates mu (both of the same size)."""
    a = b = 0
    for i in range(max(len(lam), len(mu))):
        a += lam[i] if i < len(lam) else 0
        b += mu[i] if i < len(mu) else 0
        if a < b:
            return False
    return True


def partitions_of(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(n, m, ell):
        if n == 0:
            yield ()
            return
        if ell == 0:
            return
        for first in range(min(n, m), 0, -1):
            for rest in rec(n - first, first, ell - 1):
                yield (first,) + rest

    yield from rec(n, max_part, max_len)


def partitions_in_box(k: int, ell: int) -> Iterator[Partition]:
    """All partitions fitting inside an ell x k rectangle."""
    for n in range(k * ell + 1):
        yield from partitions_of(n, k, ell)


class TPoly:
    """A polynomial in t with integer coefficients, stored densely."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[int] = ()):
        c = list(coeffs)
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)
        self._hash = None

    @classmethod
    def const(cls, c: int) -> "TPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> "TPoly":
        return cls((0,) * e + (c,))

    @classmethod
    def from_dict(cls, d: Mapping[int, int]) -> "TPoly":
        if not d:
            return ZERO
        c = [0] * (max(d) + 1)
        for e, v in d.items():
            c[e] += v
        return cls(c)

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return TPoly(tuple(x + y for x, y in zip(a, b)) + a[len(b):])

    __radd__ = __add__

    def __neg__(self):
        return TPoly(-x for x in self.coeffs)

    def __sub__(self, other):
        if isinstance(other, int):
            other = TPoly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return TPoly(x * other for x in self.coeffs)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return TPoly(out)

    __rmul__ = __mul__

    def shift(self, e: int) -> "TPoly":
        """Multiply by t^e."""
        if not self.coeffs:
            return self
        return TPoly((0,) * e + self.coeffs)

    def __call__(self, t0: int) -> int:
        v = 0
        for c in reversed(self.coeffs):
            v = v * t0 + c
        return v

    def is_nonneg(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self):
        return f"TPoly({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        out = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                mono = "t" if e == 1 else f"t^{e}"
                body = mono if a == 1 else f"{a}*{mono}"
            out.append((sign, body))
        s = "".join(sg + b for sg, b in out)
        return s[1:] if s.startswith("+") else s


ZERO = TPoly()
ONE = TPoly((1,))
T = TPoly((0, 1))

SCHUR = "schur"


def kschur_basis(k: int) -> tuple:
    return ("kschur", k)


def _as_tpoly(c) -> TPoly:
    return c if isinstance(c, TPoly) else TPoly.const(c)


class SymFun:
    """Finite linear combination of basis elements indexed by partitions."""

    __slots__ = ("basis", "terms")

    def __init__(self, terms: Mapping[Partition, object] | None = None, basis=SCHUR):
        self.basis = basis
        clean = {}
        if terms:
            for lam, c in terms.items():
                c = _as_tpoly(c)
                if c:
                    clean[lam] = c
        self.terms = clean

    @classmethod
    def from_accumulator(cls, acc: Mapping[tuple, int], basis=SCHUR) -> "SymFun":
        """Build from a map (partition, t-power) -> integer."""
        grouped: dict = defaultdict(dict)
        for (lam, e), c in acc.items():
            if c:
                grouped[lam][e] = grouped[lam].get(e, 0) + c
        return cls({lam: TPoly.from_dict(d) for lam, d in grouped.items()}, basis)

    @classmethod
    def one(cls, basis=SCHUR) -> "SymFun":
        return cls({(): ONE}, basis)

    @classmethod
    def zero(cls, basis=SCHUR) -> "SymFun":
        return cls({}, basis)

    @classmethod
    def basis_element(cls, lam, basis=SCHUR) -> "SymFun":
        return cls({partition(lam): ONE}, basis)

    def _check(self, other: "SymFun"):
        if self.basis != other.basis:
            raise BasisMismatch(f"{self.basis} vs {other.basis}")

    def __add__(self, other: "SymFun") -> "SymFun":
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            out[lam] = out[lam] + c if lam in out else c
        return SymFun(out, self.basis)

    def __neg__(self):
        return SymFun({lam: -c for lam, c in self.terms.items()}, self.basis)

    def __sub__(self, other: "SymFun") -> "SymFun":
        return self + (-other)

    def scale(self, c) -> "SymFun":
        c = _as_tpoly(c)
        return SymFun({lam: v * c for lam, v in self.terms.items()}, self.basis)

    def __mul__(self, c):
        if isinstance(c, SymFun):
            return mul(self, c)
        return self.scale(c)

    __rmul__ = scale

    def __eq__(self, other):
        return isinstance(other, SymFun) and self.basis == other.basis and self.terms == other.terms

    def __hash__(self):
        return hash((self.basis, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coeff(self, lam) -> TPoly:
        return self.terms.get(partition(lam), ZERO)

    def items(self) -> list:
        """Terms in canonical order: by size, then reverse lexicographic."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def support(self) -> list:
        return [lam for lam, _ in self.items()]

    def with_basis(self, basis) -> "SymFun":
        return SymFun(self.terms, basis)

    def is_nonneg(self) -> bool:
        return all(c.is_nonneg() for c in self.terms.values())

    def __repr__(self):
        return f"SymFun({self.basis!r}, {self.pretty()})"

    def pretty(self) -> str:
        if not self.terms:
            return "0"
        sym = "s" if self.basis == SCHUR else (f"S{self.basis[1]}" if isinstance(self.basis, tuple) else str(self.basis))
        out = []
        for lam, c in self.items():
            name = f"{sym}[{','.join(map(str, lam))}]"
            cs = str(c)
            if not lam:
                # the empty partition indexes the constant 1 in every basis
                simple = len(c.coeffs) == 1 or ("+" not in cs[1:] and "-" not in cs[1:])
                out.append(cs if simple else f"({cs})")
            elif cs == "1":
                out.append(name)
            elif cs == "-1":
                out.append("-" + name)
            elif len(c.coeffs) == 1 or ("+" not in cs[1:] and "-" not in cs[1:]):
                out.append(f"{cs}*{name}")
            else:
                out.append(f"({cs})*{name}")
        s = " + ".join(out)
        return s.replace("+ -", "- ")


def _require_schur(f: SymFun):
    if f.basis != SCHUR:
        raise BasisMismatch(f"expected Schur basis, got {f.basis}")


def straighten_schur(gamma: Iterable[int]) -> tuple[int, Partition]:
    """Rewrite s_gamma (Jacobi-Trudi determinant) as +-s_lambda or 0."""
    g = tuple(gamma)
    ell = len(g)
    v = [x + ell - 1 - i for i, x in enumerate(g)]
    if len(set(v)) != ell:
        return 0, ()
    # sign of the sorting permutation via inversion count
    inv = 0
    for i in range(ell):
        vi = v[i]
        for j in range(i + 1, ell):
            if vi < v[j]:
                inv += 1
    v.sort(reverse=True)
    lam = [x - (ell - 1 - i) for i, x in enumerate(v)]
    if lam and lam[-1] < 0:
        return 0, ()
    return (-1 if inv & 1 else 1), partition(lam)


@lru_cache(maxsize=None)
def horizontal_strips_up(lam: Partition, m: int) -> tuple:
    """All mu with mu/lam a horizontal strip of size m."""
    if m < 0:
        return ()
    ell = len(lam)
    out = []

    def rec(i, left, cur):
        if i == ell + 1:
            if left == 0:
                out.append(partition(cur))
            return
        lo = lam[i] if i < ell else 0
        hi = (lo + left) if i == 0 else min(lam[i - 1], lo + left)
        for x in range(lo, hi + 1):
            rec(i + 1, left - (x - lo), cur + [x])

    rec(0, m, [])
    return tuple(out)


@lru_cache(maxsize=None)
def horizontal_strips_down(lam: Partition, m: int) -> tuple:
    """All mu with lam/mu a horizontal strip of size m."""
    if m < 0 or m > sum(lam):
        return ()
    ell = len(lam)
    out = []

    def rec(i, left, cur):
        if i == ell:
            if left == 0:
                out.append(partition(cur))
            return
        nxt = lam[i + 1] if i + 1 < ell else 0
        for x in range(lam[i], max(nxt, lam[i] - left) - 1, -1):
            rec(i + 1, left - (lam[i] - x), cur + [x])

    rec(0, m, [])
    return tuple(out)


@lru_cache(maxsize=None)
def vertical_strips_down(lam: Partition, m: int) -> tuple:
    """All mu with lam/mu a vertical strip of size m."""
    if m < 0 or m > sum(lam):
        return ()
    ell = len(lam)
    out = []

    def rec(i, left, cur):
        if i == ell:
            if left == 0:
                out.append(partition(cur))
            return
        for drop in (0, 1):
            if drop > left:
                continue
            x = lam[i] - drop
            if i and x > cur[-1]:
                continue
            rec(i + 1, left - drop, cur + [x])

    # process from the bottom so that each row only checks the row above
    rec(0, m, [])
    return tuple(p for p in out if is_partition(p))


def pieri_h(lam: Iterable[int], m: int) -> SymFun:
    """h_m * s_lam."""
    lam = partition(lam)
    return SymFun({mu: ONE for mu in horizontal_strips_up(lam, m)})


def perp(f: SymFun, d: int, kind: str = "E") -> SymFun:
    """Apply e_d-perp (kind 'E') or h_d-perp (kind 'H') to a Schur expansion."""
    _require_schur(f)
    strips = vertical_strips_down if kind.upper() == "E" else horizontal_strips_down
    out: dict = {}
    for lam, c in f.terms.items():
        for mu in strips(lam, d):
            out[mu] = out[mu] + c if mu in out else c
    return SymFun(out)


@lru_cache(maxsize=None)
def jacobi_trudi_h(lam: Partition) -> tuple:
    """s_lam as signed h-monomials: tuple of (sorted h-indices, coefficient)."""
    ell = len(lam)
    acc: dict = defaultdict(int)
    for perm in itertools.permutations(range(ell)):
        idx = []
        for i, j in enumerate(perm):
            a = lam[i] + j - i
            if a < 0:
                break
            if a:
                idx.append(a)
        else:
            inv = sum(1 for i in range(ell) for j in range(i + 1, ell) if perm[i] > perm[j])
            acc[tuple(sorted(idx, reverse=True))] += -1 if inv & 1 else 1
    return tuple((k, v) for k, v in acc.items() if v)


def _mul_h(f: SymFun, m: int) -> SymFun:
    out: dict = {}
    for lam, c in f.terms.items():
        for mu in horizontal_strips_up(lam, m):
            out[mu] = out[mu] + c if mu in out else c
    return SymFun(out)


def mul(f: SymFun, g: SymFun) -> SymFun:
    """Product of two Schur expansions, via Jacobi-Trudi and Pieri."""
    _require_schur(f)
    _require_schur(g)
    result = SymFun()
    for lam, c in g.terms.items():
        for hs, sgn in jacobi_trudi_h(lam):
            cur = f
            for m in hs:
                cur = _mul_h(cur, m)
            result = result + cur.scale(c * sgn)
    return result


def specialize_t(f: SymFun, t0: int) -> SymFun:
    """Evaluate every coefficient at t = t0."""
    return SymFun({lam: TPoly.const(c(t0)) for lam, c in f.terms.items()}, f.basis)


def e_function(d: int) -> SymFun:
    return SymFun({(1,) * d: ONE})


def h_function(d: int) -> SymFun:
    if d < 0:
        return SymFun()
    return SymFun({(d,) if d else (): ONE})


def hall_inner(f: SymFun, g: SymFun) -> TPoly:
    _require_schur(f)
    _require_schur(g)
    out = ZERO
    for lam, c in f.terms.items():
        if lam in g.terms:
            out = out + c * g.terms[lam]
    return out
