"""Exact integer and rational lattice algebra.

Everything downstream (root data, Weyl enumeration, torsion-point solving)
works with integer matrices and `fractions.Fraction` vectors, so all counts
are exact.  Matrices are tuples of row tuples; vectors are tuples.  The one
nontrivial algorithm here is Smith normal form with both unimodular
transforms, which drives the torsion-point solver and the finite-abelian
quotient structure.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def mat_vec(a: Matrix, v):
    """Matrix times vector; entries may be ints or Fractions."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(c: int, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in row) for row in a)


def det(a: Matrix) -> int:
    """Integer determinant by fraction-free (Bareiss) elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def mat_inv_unimodular(a: Matrix) -> Matrix:
    """Inverse of an integer matrix with determinant +-1."""
    n = len(a)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        pv = aug[col][col]
        aug[col] = [x / pv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    inv = tuple(tuple(x for x in row[n:]) for row in aug)
    assert all(x.denominator == 1 for row in inv for x in row), "matrix is not unimodular"
    return tuple(tuple(int(x) for x in row) for row in inv)


def smith_normal_form(a: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Return (d, u, v) with d = u @ a @ v, u and v unimodular, d diagonal
    with nonnegative entries d[0] | d[1] | ... down the diagonal."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [list(r) for r in a]
    u = [list(r) for r in identity(rows)]
    v = [list(r) for r in identity(cols)]

    def swap_rows(i, j):
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in m:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(src, dst, c):  # row[dst] += c * row[src]
        m[dst] = [x + c * y for x, y in zip(m[dst], m[src])]
        u[dst] = [x + c * y for x, y in zip(u[dst], u[src])]

    def add_col(src, dst, c):
        for r in m:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        m[i] = [-x for x in m[i]]
        u[i] = [-x for x in u[i]]

    def diagonalize():
        t = 0
        while t < min(rows, cols):
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if m[i][j] != 0 and (piv is None or abs(m[i][j]) < abs(m[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            while True:
                dirty = False
                for i in range(t + 1, rows):
                    if m[i][t] != 0:
                        add_row(t, i, -(m[i][t] // m[t][t]))
                        if m[i][t] != 0:  # remainder became the smaller pivot
                            swap_rows(t, i)
                            dirty = True
                for j in range(t + 1, cols):
                    if m[t][j] != 0:
                        add_col(t, j, -(m[t][j] // m[t][t]))
                        if m[t][j] != 0:
                            swap_cols(t, j)
                            dirty = True
                if not dirty:
                    break
            if m[t][t] < 0:
                negate_row(t)
            t += 1
        return t

    # diagonalize, then repair divisibility violations by coupling the two
    # diagonal entries and re-diagonalizing; each repair replaces (a, b) by
    # (gcd, lcm) so the loop terminates
    while True:
        t = diagonalize()
        violation = None
        for i in range(t - 1):
            if m[i + 1][i + 1] % m[i][i] != 0:
                violation = i
                break
        if violation is None:
            break
        add_col(violation + 1, violation, 1)

    d = tuple(tuple(m[i][j] for j in range(cols)) for i in range(rows))
    return d, tuple(tuple(r) for r in u), tuple(tuple(r) for r in v)


def solve_torsion(a: Matrix) -> list[tuple[Fraction, ...]]:
    """All s in (Q/Z)^n with a @ s integral, for a nonsingular integer a.

    Returned as Fraction tuples with entries in [0, 1), sorted; the list has
    exactly ``abs(det(a))`` entries.
    """
    n = len(a)
    d, _, v = smith_normal_form(a)
    diag = [d[i][i] for i in range(n)]
    assert all(x != 0 for x in diag), "singular system has infinitely many torsion solutions"
    sols = []

    def rec(i, t):
        if i == n:
            s = mat_vec(v, t)
            sols.append(tuple(Fraction(x) % 1 for x in s))
            return
        for k in range(diag[i]):
            rec(i + 1, t + (Fraction(k, diag[i]),))

    rec(0, ())
    sols.sort()
    expected = abs(det(a))
    assert len(sols) == len(set(sols)) == expected
    return sols


def quotient_structure(n: int, rel_cols: Matrix) -> tuple[Matrix, list[int]]:
    """Structure of Z^n / L where L is spanned by the columns of rel_cols.

    Returns (u, orders): u is unimodular, and in the coordinates z = u @ y the
    subgroup L becomes the span of orders[i] * e_i (orders[i] = 0 marks a free
    coordinate).
    """
    if not rel_cols or not rel_cols[0]:
        return identity(n), [0] * n
    d, u, _ = smith_normal_form(rel_cols)
    orders = []
    ncols = len(rel_cols[0])
    for i in range(n):
        orders.append(d[i][i] if i < min(n, ncols) else 0)
    return u, orders


def fixed_torsion_count(n: int, rel_cols: Matrix, f: Matrix, p: int) -> int:
    """Count prime-to-p torsion elements x of Z^n / span(rel_cols) with f(x) = x.

    Requires f to preserve the relation lattice.  Torsion elements are
    enumerated through the Smith coordinates, so the group must be finite in
    its torsion part (always true).
    """
    u, orders = quotient_structure(n, rel_cols)
    f_z = mat_mul(mat_mul(u, f), mat_inv_unimodular(u))
    tors = [(i, o) for i, o in enumerate(orders) if o > 1]
    # strip the p-part of each cyclic factor
    strata = []
    for i, o in tors:
        op = o
        while op % p == 0:
            op //= p
        step = o // op  # generator of the prime-to-p subgroup of Z/o
        strata.append((i, o, op, step))
    count = 0

    def rec(k, z):
        nonlocal count
        if k == len(strata):
            w = mat_vec(f_z, z)
            for i, o in enumerate(orders):
                diff = w[i] - z[i]
                if o == 0 or o == 1:
                    ok = (diff == 0) if o == 0 else True
                else:
                    ok = diff % o == 0
                if not ok:
                    return
            count += 1
            return
        i, _, op, step = strata[k]
        for j in range(op):
            z2 = list(z)
            z2[i] = j * step
            rec(k + 1, tuple(z2))

    rec(0, tuple(0 for _ in range(n)))
    return count


def frac_vec_mod1(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) % 1 for x in v)


def torsion_order(v) -> int:
    """Additive order of a torsion point given by fractions mod 1."""
    m = 1
    for x in v:
        fx = Fraction(x) % 1
        m = m * fx.denominator // gcd(m, fx.denominator)
    return m
