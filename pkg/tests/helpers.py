"""Independent numeric oracles shared by the test modules."""

from __future__ import annotations

from fractions import Fraction


def det(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        out *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for cc in range(c, n):
                    m[r][cc] -= f * m[c][cc]
    return out


def h_at(m, xs):
    """Complete homogeneous h_m evaluated at the point xs."""
    if m < 0:
        return 0
    vals = [1] + [0] * m
    for x in xs:
        for d in range(1, m + 1):
            vals[d] += x * vals[d - 1]
    return vals[m]


def schur_at(lam, xs):
    """Bialternant formula for s_lam at a point with distinct coordinates."""
    n = len(xs)
    lam = tuple(lam) + (0,) * (n - len(lam))
    if len(lam) > n and any(lam[n:]):
        return Fraction(0)
    num = det([[x ** (lam[j] + n - 1 - j) for j in range(n)] for x in xs])
    den = det([[x ** (n - 1 - j) for j in range(n)] for x in xs])
    return num / den


def symfun_at(f, xs, t=None):
    """Evaluate a Schur expansion at xs (t fixed to an integer when given)."""
    total = Fraction(0)
    for lam, c in f.terms.items():
        coeff = c(t) if t is not None else c(0)
        total += coeff * schur_at(lam, xs)
    return total


def zero_instances(ideals, weights):
    """(psi, eta, z) with a ceiling and a wall at z and eta_z = eta_{z+1} - 1."""
    from kcatalan.rootideal import has_ceiling, has_wall

    for psi in ideals:
        for eta in weights(psi.ell):
            for z in range(1, psi.ell):
                if has_ceiling(psi, z) and has_wall(psi, [z, z + 1]) and eta[z - 1] == eta[z] - 1:
                    yield psi, eta, z


def mirror_zero_instances(ideals, weights):
    """(psi, eta, y, z, w) meeting the hypotheses of the multi-mirror vanishing rule."""
    from kcatalan.rootideal import NotSamePath, has_ceiling, has_mirror, has_wall

    for psi in ideals:
        g = psi.bounce_graph
        ell = psi.ell
        for y in range(1, ell):
            if not has_ceiling(psi, y):
                continue
            for w in range(y, ell):
                try:
                    path = g.bpath(y, w)
                except NotSamePath:
                    continue
                if not has_wall(psi, [w, w + 1]):
                    continue
                if not all(has_mirror(psi, x) for x in path[:-1]):
                    continue
                for z in path:
                    for eta in weights(ell):
                        if eta[z - 1] != eta[z] - 1:
                            continue
                        if all(eta[x - 1] == eta[x] for x in path if x != z):
                            yield psi, eta, y, z, w


def removable_equality_instances(ideals, weights):
    """(psi, eta, z, delta) where deleting the removable root delta in row z+1 keeps H fixed."""
    from kcatalan.rootideal import has_ceiling, has_wall

    for psi in ideals:
        g = psi.bounce_graph
        for z in range(1, psi.ell):
            c = g.down(z + 1)
            if c is None or not (has_ceiling(psi, z) and has_wall(psi, [z, z + 1])):
                continue
            for eta in weights(psi.ell):
                if eta[z - 1] == eta[z]:
                    yield psi, eta, z, (z + 1, c)
