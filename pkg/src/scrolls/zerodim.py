"""Macaulay-matrix certificates for affine systems over a prime field.

For the randomized singularity checks the schemes in play are either empty
or zero-dimensional of tiny degree, so instead of Groebner bases we work
with truncated ideal pieces as numpy row spaces:

* a row reducing to the constant monomial certifies the unit ideal;
* a monic univariate u_i(y_i) found in the row space for every variable
  certifies zero-dimensionality and confines the scheme to a finite 'box'
  algebra A = k[y]/(u_1..u_n), where the ideal becomes plain linear algebra:
  quotient dimension (= scheme degree), nilpotence (radical membership),
  invertibility (unit modulo the scheme).

Everything is exact mod p; escalating the truncation degree up to a cap
gives a budgeted, honest procedure (inconclusive when the cap is hit).
"""

from itertools import product

import numpy as np

from .modp import in_row_space, rref_mod_p, solve_mod_p
from .poly import Poly


def monomials_of_degree_at_most(nvars, D):
    out = []

    def rec(i, rem, acc):
        if i == nvars - 1:
            for k in range(rem + 1):
                out.append(tuple(acc + [k]))
            return
        for k in range(rem + 1):
            rec(i + 1, rem - k, acc + [k])

    rec(0, D, [])
    out.sort(key=lambda e: (sum(e), e))
    return out


class MacaulayBasis:
    """Row space of {m * g : deg(m g) <= D} for generators g."""

    def __init__(self, gens, D):
        self.ring = gens[0].ring
        self.p = self.ring.char
        assert self.p, "Macaulay certificates need a prime field"
        self.D = D
        self.cols = monomials_of_degree_at_most(self.ring.nvars, D)
        self.col_index = {m: i for i, m in enumerate(self.cols)}
        rows = []
        for g in gens:
            dg = g.total_degree()
            if dg > D or not g:
                continue
            for m in monomials_of_degree_at_most(self.ring.nvars, D - dg):
                row = np.zeros(len(self.cols), dtype=np.int64)
                for e, c in g.terms.items():
                    prod_e = tuple(a + b for a, b in zip(e, m))
                    row[self.col_index[prod_e]] = c
                rows.append(row)
        M = np.stack(rows) if rows else np.zeros((0, len(self.cols)), dtype=np.int64)
        self.R, self.pivots = rref_mod_p(M, self.p)
        self.R = self.R[: len(self.pivots)]

    def reduce_vector(self, v):
        v = np.array(v, dtype=np.int64) % self.p
        for r, c in enumerate(self.pivots):
            if v[c]:
                v = (v - int(v[c]) * self.R[r]) % self.p
        return v

    def poly_vector(self, f):
        v = np.zeros(len(self.cols), dtype=np.int64)
        for e, c in f.terms.items():
            v[self.col_index[e]] = c
        return v

    def contains_one(self):
        one = np.zeros(len(self.cols), dtype=np.int64)
        one[self.col_index[self.ring.zero_exp()]] = 1
        return not self.reduce_vector(one).any()

    def find_univariate(self, i):
        """Smallest monic u(y_i) in the row space; returns coefficient list
        [c_0..c_{k-1}, 1] or None."""
        n = self.ring.nvars
        pure = []
        for k in range(self.D + 1):
            e = tuple(k if t == i else 0 for t in range(n))
            pure.append(self.col_index[e])
        residuals = []
        for k in range(self.D + 1):
            v = np.zeros(len(self.cols), dtype=np.int64)
            v[pure[k]] = 1
            residuals.append(self.reduce_vector(v))
        for k in range(1, self.D + 1):
            # y_i^k + sum_{j<k} a_j y_i^j in row space <=>
            # residual_k in span(residual_0..residual_{k-1})
            A = np.stack(residuals[:k], axis=1)
            x = solve_mod_p(A, (-residuals[k]) % self.p, self.p)
            if x is not None:
                return [int(c) for c in x] + [1]
        return None


class BoxQuotient:
    """The finite algebra k[y]/(I + (u_1(y_1)..u_n(y_n))) presented by
    monomial reduction against the box plus a row space for I's image."""

    def __init__(self, gens, univariates):
        self.ring = gens[0].ring
        self.p = self.ring.char
        self.n = self.ring.nvars
        self.deg = [len(u) - 1 for u in univariates]
        self.univ = univariates
        # reduction tables: y_i^k as vector over y_i^0..y_i^(deg-1)
        self.tables = []
        for i, u in enumerate(univariates):
            k = len(u) - 1
            tab = []  # index j -> coeff list of y_i^j reduced
            for j in range(k):
                row = [0] * k
                row[j] = 1
                tab.append(row)
            for j in range(k, 2 * k + 2):
                prev = tab[j - 1]
                row = [0] * k
                carry = prev[k - 1]
                for t in range(k - 1):
                    row[t + 1] = prev[t]
                if carry:
                    for t in range(k):
                        row[t] = (row[t] - carry * u[t]) % self.p
                tab.append([c % self.p for c in row])
            self.tables.append(tab)
        self.box = [e for e in product(*[range(d) for d in self.deg])]
        self.box_index = {e: i for i, e in enumerate(self.box)}
        rows = []
        for g in gens:
            gv = self.reduce_poly(g)
            for m in self.box:
                rows.append(self.multiply_vec_by_monomial(gv, m))
        M = np.stack(rows) if rows else np.zeros((0, len(self.box)), dtype=np.int64)
        self.R, self.pivots = rref_mod_p(M, self.p)
        self.R = self.R[: len(self.pivots)]
        free = [c for c in range(len(self.box)) if c not in set(self.pivots)]
        self.basis_cols = free
        self.dim = len(free)

    def reduce_poly(self, f):
        v = np.zeros(len(self.box), dtype=np.int64)
        for e, c in f.terms.items():
            self._add_reduced_monomial(v, e, c)
        return v % self.p

    def _add_reduced_monomial(self, v, e, coeff):
        # expand each variable power through its table
        factors = []
        for i, k in enumerate(e):
            tab = self.tables[i]
            while k >= len(tab):
                # extend table
                prev = tab[-1]
                kk = self.deg[i]
                row = [0] * kk
                carry = prev[kk - 1]
                for t in range(kk - 1):
                    row[t + 1] = prev[t]
                if carry:
                    u = self.univ[i]
                    for t in range(kk):
                        row[t] = (row[t] - carry * u[t]) % self.p
                tab.append([c % self.p for c in row])
            factors.append(tab[k])
        # tensor product of factors
        idxs = [
            [(j, c) for j, c in enumerate(f) if c] for f in factors
        ]
        for combo in product(*idxs):
            e2 = tuple(j for j, _ in combo)
            c2 = coeff
            for _, c in combo:
                c2 = (c2 * c) % self.p
            v[self.box_index[e2]] = (v[self.box_index[e2]] + c2) % self.p

    def multiply_vec_by_monomial(self, v, m):
        out = np.zeros_like(v)
        for idx in np.nonzero(v)[0]:
            e = self.box[int(idx)]
            prod_e = tuple(a + b for a, b in zip(e, m))
            self._add_reduced_monomial(out, prod_e, int(v[idx]))
        return out % self.p

    def nf(self, v):
        v = np.array(v, dtype=np.int64) % self.p
        for r, c in enumerate(self.pivots):
            if v[c]:
                v = (v - int(v[c]) * self.R[r]) % self.p
        return v

    def multiplication_matrix(self, f):
        """Matrix of multiplication by f on the quotient basis."""
        fv = self.reduce_poly(f) if isinstance(f, Poly) else f
        cols = []
        for c in self.basis_cols:
            basis_vec = np.zeros(len(self.box), dtype=np.int64)
            basis_vec[c] = 1
            prod = np.zeros(len(self.box), dtype=np.int64)
            for idx in np.nonzero(fv)[0]:
                e = self.box[int(idx)]
                contrib = self.multiply_vec_by_monomial(basis_vec, e)
                prod = (prod + int(fv[idx]) * contrib) % self.p
            red = self.nf(prod)
            cols.append([int(red[b]) for b in self.basis_cols])
        M = np.array(cols, dtype=np.int64).T % self.p
        return M

    def is_nilpotent(self, f):
        """f nilpotent on the quotient <=> f vanishes on the whole scheme."""
        if self.dim == 0:
            return True
        M = self.multiplication_matrix(f)
        P = M.copy()
        for _ in range(self.dim):
            if not P.any():
                return True
            P = _matmod(P, M, self.p)
        return not P.any()

    def is_invertible(self, f):
        """f a unit on the quotient <=> f vanishes nowhere on the scheme."""
        if self.dim == 0:
            return True
        from .modp import rank_mod_p

        M = self.multiplication_matrix(f)
        return rank_mod_p(M, self.p) == self.dim

    def kernel_dimension_of_power(self, f):
        """dim of the generalized 0-eigenspace of mult-by-f: the length of
        the part of the scheme supported on {f = 0}."""
        if self.dim == 0:
            return 0
        M = self.multiplication_matrix(f)
        P = np.eye(self.dim, dtype=np.int64)
        for _ in range(self.dim):
            P = _matmod(P, M, self.p)
        from .modp import rank_mod_p

        return self.dim - rank_mod_p(P, self.p)


def _matmod(A, B, p):
    return np.matmul(A, B) % p


class ZeroDimResult:
    def __init__(self, status, box=None, D=None):
        self.status = status  # "empty" | "finite" | "inconclusive"
        self.box = box
        self.D = D

    @property
    def degree(self):
        if self.status == "empty":
            return 0
        return self.box.dim if self.box is not None else None


def analyze_affine_scheme(gens, dmax=14, dstart=None):
    """Escalating Macaulay analysis of V(gens) in affine space.

    Returns ZeroDimResult: 'empty' (unit certificate), 'finite' (univariate
    box certificate, with the BoxQuotient for further queries), or
    'inconclusive' when the degree cap is reached first.
    """
    gens = [g for g in gens if g]
    if not gens:
        return ZeroDimResult("inconclusive")
    ring = gens[0].ring
    if dstart is None:
        dstart = max(g.total_degree() for g in gens) + 1
    for D in range(dstart, dmax + 1):
        mb = MacaulayBasis(gens, D)
        if mb.contains_one():
            return ZeroDimResult("empty", D=D)
        univs = []
        ok = True
        for i in range(ring.nvars):
            u = mb.find_univariate(i)
            if u is None:
                ok = False
                break
            univs.append(u)
        if ok:
            box = BoxQuotient(gens, univs)
            if box.dim == 0:
                return ZeroDimResult("empty", D=D)
            return ZeroDimResult("finite", box=box, D=D)
    return ZeroDimResult("inconclusive", D=dmax)
