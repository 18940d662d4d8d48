"""Bulk linear algebra over a prime field with numpy int64 arrays.

Used where pure-Python polynomial arithmetic would be the bottleneck:
degreewise module limits for flat families, colon-ideal pieces, and
linear-algebra ideal-membership certificates.  All results are exact
(int64 entries stay far below overflow: p < 2^16 and reductions are
applied every elimination step).
"""

import numpy as np


def rref_mod_p(A, p):
    """Row-reduce A (a copy) over F_p; returns (R, pivot_cols)."""
    R = np.array(A, dtype=np.int64) % p
    rows, cols = R.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        col = R[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            R[[r, piv]] = R[[piv, r]]
        inv = pow(int(R[r, c]), p - 2, p)
        R[r] = (R[r] * inv) % p
        other = np.nonzero(R[:, c])[0]
        other = other[other != r]
        if other.size:
            R[other] = (R[other] - np.outer(R[other, c], R[r])) % p
        pivots.append(c)
        r += 1
    return R, pivots


def rank_mod_p(A, p):
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref_mod_p(A, p)[1])


def nullspace_mod_p(A, p):
    """Basis (rows) of {v : A v = 0} over F_p."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    R, pivots = rref_mod_p(A, p)
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for t, fc in enumerate(free):
        basis[t, fc] = 1
        for r, c in enumerate(pivots):
            basis[t, c] = (-int(R[r, fc])) % p
    return basis


def left_nullspace_mod_p(A, p):
    """Basis (rows) of {v : v A = 0}."""
    return nullspace_mod_p(np.array(A, dtype=np.int64).T, p)


def row_space_basis(A, p):
    R, pivots = rref_mod_p(A, p)
    return R[: len(pivots)]


def solve_mod_p(A, b, p):
    """One solution of A x = b over F_p, or None."""
    A = np.array(A, dtype=np.int64) % p
    b = np.array(b, dtype=np.int64) % p
    rows, cols = A.shape
    aug = np.concatenate([A, b.reshape(rows, 1)], axis=1)
    R, pivots = rref_mod_p(aug, p)
    if cols in pivots:
        return None
    x = np.zeros(cols, dtype=np.int64)
    for r, c in enumerate(pivots):
        x[c] = R[r, cols]
    return x


def in_row_space(R, pivots, v, p):
    """Is v in the row space given by an rref pair (R, pivots)?"""
    v = np.array(v, dtype=np.int64) % p
    for r, c in enumerate(pivots):
        if v[c]:
            v = (v - int(v[c]) * R[r]) % p
    return not v.any()


def matmul_mod_p(A, B, p):
    """Exact A @ B mod p via float64 BLAS when safe, else blocked."""
    A = np.asarray(A, dtype=np.int64) % p
    B = np.asarray(B, dtype=np.int64) % p
    inner = A.shape[1]
    if inner * (p - 1) ** 2 < 2**53:
        C = np.matmul(A.astype(np.float64), B.astype(np.float64))
        return np.mod(C.round().astype(np.int64), p)
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    step = max(1, 2**53 // max(1, (p - 1) ** 2))
    for s in range(0, inner, step):
        blk = np.matmul(
            A[:, s : s + step].astype(np.float64),
            B[s : s + step].astype(np.float64),
        )
        out = (out + blk.round().astype(np.int64)) % p
    return out


def eliminate_with_tracking(M0, p):
    """Gaussian elimination of M0 returning (independent_row_indices,
    kernel_combos): kernel_combos are coefficient vectors over the original
    rows spanning the left kernel."""
    M = np.array(M0, dtype=np.int64) % p
    rows, cols = M.shape
    T = np.eye(rows, dtype=np.int64)  # tracks combinations: T @ M0 = M
    r = 0
    indep = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            M[[r, piv]] = M[[piv, r]]
            T[[r, piv]] = T[[piv, r]]
        inv = pow(int(M[r, c]), p - 2, p)
        M[r] = (M[r] * inv) % p
        T[r] = (T[r] * inv) % p
        other = np.nonzero(M[r + 1 :, c])[0] + r + 1
        if other.size:
            f = M[other, c].copy()
            M[other] = (M[other] - np.outer(f, M[r])) % p
            T[other] = (T[other] - np.outer(f, T[r])) % p
        r += 1
    kernel = T[r:]
    # independent original-row witnesses: the first r tracked rows are
    # combinations with triangular structure; we only need the kernel and
    # the reduced independent rows themselves
    return M[:r], kernel


class TModuleLimit:
    """Limit at t -> 0 of a finitely generated k[t]-submodule of k[t]^N.

    Rows are arrays of shape (cap, N): coefficient vectors of t^0..t^(cap-1).
    The limit subspace is the t=0 fiber of the t-saturation, computed by the
    classical division loop: while the t=0 evaluations have rank below the
    generic (random-t) rank, divide kernel combinations by t and re-reduce.
    """

    def __init__(self, ncols, p, tdeg_cap=8):
        self.N = ncols
        self.p = p
        self.cap = tdeg_cap
        self.rows = []

    def add_row(self, coeffs):
        M = np.zeros((self.cap, self.N), dtype=np.int64)
        for k, vec in enumerate(coeffs):
            if k >= self.cap:
                raise ValueError("t-degree cap exceeded")
            M[k] = np.asarray(vec, dtype=np.int64) % self.p
        self.rows.append(M)

    def _eval_matrix(self, tv):
        powers = [pow(tv, k, self.p) for k in range(self.cap)]
        return np.stack(
            [
                np.sum([powers[k] * row[k] for k in range(self.cap)], axis=0)
                % self.p
                for row in self.rows
            ]
        )

    def generic_rank(self, t_values=(1721, 9432)):
        return max(rank_mod_p(self._eval_matrix(tv), self.p) for tv in t_values)

    def thin_to_generic_basis(self, tv=1721):
        """Drop rows that are k(t)-dependent (same saturation); cheap way to
        shrink the working set before the limit loop."""
        M = self._eval_matrix(tv)
        keep = []
        R = np.zeros((0, self.N), dtype=np.int64)
        pivots = []
        for i in range(M.shape[0]):
            if not in_row_space(R, pivots, M[i], self.p):
                keep.append(i)
                R2, pivots = rref_mod_p(
                    np.concatenate([R, M[i : i + 1]]), self.p
                )
                R = R2[: len(pivots)]
        self.rows = [self.rows[i] for i in keep]
        return keep

    def limit_basis(self, max_iter=64):
        """(rref rows of the limit subspace, saturated module rows)."""
        p = self.p
        target = self.generic_rank()
        rows = [r.copy() for r in self.rows]
        for _ in range(max_iter):
            M0 = np.stack([r[0] for r in rows])
            R, pivots = rref_mod_p(M0, p)
            if len(pivots) == target:
                return R[: len(pivots)], rows
            _, kernel = eliminate_with_tracking(M0, p)
            if kernel.shape[0] == 0:
                raise RuntimeError("limit loop stalled below generic rank")
            # keep an independent-at-0 spanning subset, add divided combos
            newrows = []
            Racc = np.zeros((0, self.N), dtype=np.int64)
            pacc = []
            for row in rows:
                if not in_row_space(Racc, pacc, row[0], p):
                    newrows.append(row)
                    R2, pacc = rref_mod_p(
                        np.concatenate([Racc, row[0].reshape(1, -1)]), p
                    )
                    Racc = R2[: len(pacc)]
            progressed = False
            for combo in kernel:
                vec = np.zeros_like(rows[0])
                nzi = np.nonzero(combo)[0]
                for i in nzi:
                    vec = (vec + int(combo[i]) * rows[i]) % p
                if vec[0].any():
                    raise RuntimeError("kernel combo not divisible by t")
                shifted = np.zeros_like(vec)
                shifted[:-1] = vec[1:]
                if shifted.any():
                    newrows.append(shifted)
                    progressed = True
            if not progressed:
                raise RuntimeError("module limit stalled")
            rows = newrows
        raise RuntimeError("module limit did not converge")
