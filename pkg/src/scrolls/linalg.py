"""Exact integer and rational linear algebra.

Matrices are plain lists of lists of Python ints (or Fractions for the
rational routines); everything is arbitrary precision.  This is the desk-scale
engine behind the lattice computations: Smith normal form with unimodular
transforms, integer kernels, and exact rational solving/rank for the polytope
code.
"""

from fractions import Fraction


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(A, B):
    n, k = len(A), len(A[0])
    assert len(B) == k, "dimension mismatch"
    m = len(B[0])
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        Ai = A[i]
        row = out[i]
        for t in range(k):
            a = Ai[t]
            if a:
                Bt = B[t]
                for j in range(m):
                    row[j] += a * Bt[j]
    return out


def mat_vec(A, v):
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def transpose(A):
    return [list(col) for col in zip(*A)]


def det(A):
    """Determinant by fraction-free Gaussian elimination (Bareiss)."""
    n = len(A)
    assert all(len(row) == n for row in A)
    M = [list(map(int, row)) for row in A]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for i in range(k + 1, n):
                if M[i][k]:
                    M[k], M[i] = M[i], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
            M[i][k] = 0
        prev = M[k][k]
    return sign * M[-1][-1]


def _swap_rows(M, i, j):
    M[i], M[j] = M[j], M[i]


def _swap_cols(M, i, j):
    for row in M:
        row[i], row[j] = row[j], row[i]


def _add_row(M, dst, src, c):
    """row[dst] += c * row[src]"""
    if c:
        M[dst] = [a + c * b for a, b in zip(M[dst], M[src])]


def _add_col(M, dst, src, c):
    if c:
        for row in M:
            row[dst] += c * row[src]


def smith_normal_form(A):
    """Smith normal form of an integer matrix.

    Returns (D, U, V) with U*A*V = D, U and V unimodular, D diagonal with
    nonnegative entries d_1 | d_2 | ... .  Total function on nonempty
    matrices.
    """
    m = len(A)
    assert m > 0 and len(A[0]) > 0, "empty matrix"
    n = len(A[0])
    D = [list(map(int, row)) for row in A]
    U = identity_matrix(m)
    V = identity_matrix(n)

    def smallest_nonzero(t):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                v = D[i][j]
                if v and (best is None or abs(v) < abs(best[2])):
                    best = (i, j, v)
        return best

    t = 0
    while t < min(m, n):
        piv = smallest_nonzero(t)
        if piv is None:
            break
        i, j, _ = piv
        if i != t:
            _swap_rows(D, t, i)
            _swap_rows(U, t, i)
        if j != t:
            _swap_cols(D, t, j)
            _swap_cols(V, t, j)
        dirty = False
        for i in range(t + 1, m):
            q = D[i][t] // D[t][t]
            if D[i][t] - q * D[t][t] != 0:
                dirty = True
            _add_row(D, i, t, -q)
            _add_row(U, i, t, -q)
        for j in range(t + 1, n):
            q = D[t][j] // D[t][t]
            if D[t][j] - q * D[t][t] != 0:
                dirty = True
            _add_col(D, j, t, -q)
            _add_col(V, j, t, -q)
        if dirty or any(D[i][t] for i in range(t + 1, m)) or any(
            D[t][j] for j in range(t + 1, n)
        ):
            continue
        # divisibility fix: D[t][t] must divide everything further down
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if D[i][j] % D[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _add_row(D, t, offender, 1)
            _add_row(U, t, offender, 1)
            continue
        if D[t][t] < 0:
            D[t] = [-x for x in D[t]]
            U[t] = [-x for x in U[t]]
        t += 1

    return D, U, V


def snf_diagonal(A):
    D, _, _ = smith_normal_form(A)
    return [D[i][i] for i in range(min(len(D), len(D[0])))]


def integer_kernel(A):
    """Basis of the right integer kernel {v : A v = 0}.

    The returned vectors form a lattice basis of the kernel (they are the
    columns of the unimodular V belonging to zero invariant factors).
    """
    m, n = len(A), len(A[0])
    D, _, V = smith_normal_form(A)
    rank = sum(1 for i in range(min(m, n)) if D[i][i] != 0)
    cols = []
    for j in range(rank, n):
        cols.append([V[i][j] for i in range(n)])
    return cols


def rank_int(A):
    if not A or not A[0]:
        return 0
    return sum(1 for d in snf_diagonal(A) if d != 0)


# --- exact rational elimination ------------------------------------------


def rref_fraction(A):
    """Reduced row echelon form over Q. Returns (R, pivot_columns)."""
    if not A:
        return [], []
    R = [[Fraction(x) for x in row] for row in A]
    m, n = len(R), len(R[0])
    pivots = []
    r = 0
    for c in range(n):
        piv = None
        for i in range(r, m):
            if R[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        R[r], R[piv] = R[piv], R[r]
        inv = R[r][c]
        R[r] = [x / inv for x in R[r]]
        for i in range(m):
            if i != r and R[i][c] != 0:
                f = R[i][c]
                R[i] = [a - f * b for a, b in zip(R[i], R[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return R, pivots


def rank_fraction(A):
    return len(rref_fraction(A)[1])


def solve_fraction(A, b):
    """Solve A x = b exactly over Q; returns None when inconsistent.

    When the system is underdetermined an arbitrary solution (free
    variables set to 0) is returned.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    aug = [list(A[i]) + [b[i]] for i in range(m)]
    R, pivots = rref_fraction(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x[c] = R[r][n]
    return x


def nullspace_fraction(A, ncols=None):
    """Basis of the right kernel over Q.

    ncols makes the empty-matrix case well-defined (kernel = everything).
    """
    if not A:
        if ncols is None:
            return []
        return [
            [Fraction(1 if i == j else 0) for i in range(ncols)]
            for j in range(ncols)
        ]
    R, pivots = rref_fraction(A)
    n = len(A[0])
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            v[c] = -R[r][fc]
        basis.append(v)
    return basis


def primitive_vector(v):
    """Scale a rational/integer vector to a primitive integer vector."""
    from math import gcd

    fracs = [Fraction(x) for x in v]
    den = 1
    for f in fracs:
        den = den * f.denominator // gcd(den, f.denominator)
    ints = [int(f * den) for f in fracs]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    return ints
