"""Exact integer / modular / field linear algebra on lists of lists.

Everything here works on plain Python ints (or field values supplied with
their ring), so results are exact.  Matrices are lists of rows.
"""
from __future__ import annotations

from math import gcd
from typing import NamedTuple


class SmithForm(NamedTuple):
    U: list[list[int]]
    D: list[list[int]]
    V: list[list[int]]

    @property
    def diagonal(self) -> list[int]:
        return [self.D[i][i] for i in range(min(len(self.D), len(self.V)))]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d)


def identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A, B):
    if not A:
        return []
    inner = len(B)
    ncols = len(B[0]) if B else 0
    return [[sum(A[i][k] * B[k][j] for k in range(inner)) for j in range(ncols)] for i in range(len(A))]


def transpose(A, ncols: int | None = None):
    if not A:
        return [[] for _ in range(ncols or 0)]
    return [list(col) for col in zip(*A)]


def smith_normal_form(A, ncols: int | None = None) -> SmithForm:
    """Return (U, D, V) with U*A*V = D, U and V unimodular, d1 | d2 | ... and di >= 0.

    Pivots are chosen as the entry of least absolute value, ties broken by
    position, so the transformation matrices are reproducible.
    ``ncols`` is only needed when ``A`` has no rows.
    """
    m = len(A)
    n = len(A[0]) if m else (ncols or 0)
    D = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        D[i], D[j] = D[j], D[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (D, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        for M in (D, U):
            rd, rs = M[dst], M[src]
            for k in range(len(rd)):
                rd[k] += q * rs[k]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for M in (D, V):
            for row in M:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
        if best is None:
            break
        _, i, j = best
        if i != t:
            swap_rows(t, i)
        if j != t:
            swap_cols(t, j)
        while True:
            # least entry in the pivot row/column becomes the pivot
            cand = [(abs(D[i][t]), 0, i, t) for i in range(t, m) if D[i][t]]
            cand += [(abs(D[t][j]), 1, t, j) for j in range(t + 1, n) if D[t][j]]
            _, _, i, j = min(cand)
            if i != t:
                swap_rows(t, i)
            if j != t:
                swap_cols(t, j)
            p = D[t][t]
            dirty = False
            for i in range(t + 1, m):
                if D[i][t]:
                    add_row(i, t, -(D[i][t] // p))
                    dirty = dirty or D[i][t] != 0
            for j in range(t + 1, n):
                if D[t][j]:
                    add_col(j, t, -(D[t][j] // p))
                    dirty = dirty or D[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if D[i][j] % p),
                None,
            )
            if bad is None:
                break
            add_row(t, bad, 1)
        if D[t][t] < 0:
            for M in (D, U):
                M[t] = [-x for x in M[t]]
    return SmithForm(U, D, V)


def integer_kernel(A, ncols: int | None = None) -> list[list[int]]:
    """A Z-basis of {x in Z^n : A x = 0}."""
    n = len(A[0]) if A else (ncols or 0)
    snf = smith_normal_form(A, ncols=n)
    r = snf.rank
    return [[snf.V[i][j] for i in range(n)] for j in range(r, n)]


class IntegerSolver:
    """Repeated exact solves of A x = b over Z for one fixed matrix."""

    def __init__(self, A, ncols: int | None = None):
        self.m = len(A)
        self.n = len(A[0]) if A else (ncols or 0)
        self.snf = smith_normal_form(A, ncols=self.n)

    def solve(self, b) -> list[int] | None:
        U, D, V = self.snf
        z = [sum(U[i][k] * b[k] for k in range(self.m)) for i in range(self.m)]
        y = [0] * self.n
        for i in range(self.m):
            d = D[i][i] if i < self.n else 0
            if d == 0:
                if z[i]:
                    return None
            elif z[i] % d:
                return None
            else:
                y[i] = z[i] // d
        return [sum(V[i][k] * y[k] for k in range(self.n)) for i in range(self.n)]


def integer_solve(A, b, ncols: int | None = None) -> list[int] | None:
    return IntegerSolver(A, ncols).solve(b)


def left_kernel_mod(A, n: int, nrows: int | None = None) -> list[list[int]]:
    """Generators of the Z/n-module {x : x A = 0 mod n}.

    With U A V = D, x A = 0 iff y = x U^-1 satisfies y_i d_i = 0 mod n, so the
    module is spanned by (n / gcd(n, d_i)) e_i U.
    """
    m = len(A) if A else (nrows or 0)
    ncols = len(A[0]) if A else 0
    if m == 0:
        return []
    if ncols == 0:
        return [[int(i == j) for j in range(m)] for i in range(m)]
    U, D, _ = smith_normal_form(A)
    gens = []
    for i in range(m):
        d = D[i][i] if i < ncols else 0
        c = n // gcd(n, d)
        if c % n == 0:
            continue
        vec = [c * u % n for u in U[i]]
        if any(vec):
            gens.append(vec)
    return gens


def left_solve_mod(A, b, n: int) -> list[int] | None:
    """One x with x A = b mod n, or None."""
    m = len(A)
    ncols = len(b)
    if m == 0:
        return [] if all(v % n == 0 for v in b) else None
    U, D, V = smith_normal_form(A)
    c = [sum(b[k] * V[k][j] for k in range(ncols)) % n for j in range(ncols)]
    y = [0] * m
    for j in range(ncols):
        d = D[j][j] if j < m else 0
        g = gcd(d, n)
        if c[j] % g:
            return None
        if d % n == 0:
            continue
        # solve y_j * d = c_j mod n
        dn, cn, nn = d // g, c[j] // g, n // g
        y[j] = cn * pow(dn % nn, -1, nn) % nn if nn > 1 else 0
    return [sum(y[i] * U[i][k] for i in range(m)) % n for k in range(m)]


def nullspace_field(A, field, ncols: int | None = None) -> list[list]:
    """Basis of the right nullspace {x : A x = 0} over a field ring descriptor."""
    n = len(A[0]) if A else (ncols or 0)
    R = [list(row) for row in A]
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(R)) if not field.is_zero(R[i][c])), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.inverse(R[r][c])
        R[r] = [field.mul(inv, v) for v in R[r]]
        for i in range(len(R)):
            if i != r and not field.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == len(R):
            break
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        x = [field.zero] * n
        x[fc] = field.one
        for row_idx, pc in enumerate(pivots):
            x[pc] = field.neg(R[row_idx][fc])
        basis.append(x)
    return basis


def solve_field(A, b, field) -> list | None:
    """One x with A x = b over a field, or None."""
    n = len(A[0]) if A else 0
    aug = [list(row) + [bi] for row, bi in zip(A, b)]
    R = aug
    pivots = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, len(R)) if not field.is_zero(R[i][c])), None)
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = field.inverse(R[r][c])
        R[r] = [field.mul(inv, v) for v in R[r]]
        for i in range(len(R)):
            if i != r and not field.is_zero(R[i][c]):
                f = R[i][c]
                R[i] = [field.sub(a, field.mul(f, bb)) for a, bb in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(R)):
        if not field.is_zero(R[i][n]):
            return None
    x = [field.zero] * n
    for row_idx, pc in enumerate(pivots):
        x[pc] = R[row_idx][n]
    return x


def determinant(A) -> int:
    """Exact integer determinant by fraction-free (Bareiss) elimination."""
    n = len(A)
    if n == 0:
        return 1
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if M[i][k]), None)
            if swap is None:
                return 0
            M[k], M[swap] = M[swap], M[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[n - 1][n - 1]
