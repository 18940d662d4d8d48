"""Buchberger's algorithm with Gebauer-Moeller pair pruning, plus the ideal
operations built on it: normal forms, saturation, elimination, Hilbert
functions, dimension/degree, and toric ideals of monomial maps.

The engine is budgeted: a global cap on reduction steps (overridable via the
SCROLL_BUDGET environment variable) turns runaway computations into a
distinguishable BudgetExceeded outcome instead of a hang.
"""

import os
from fractions import Fraction
from math import comb, gcd

from .linalg import integer_kernel
from .poly import Block, DegRevLex, Poly, PolyError, Ring, exp_div, exp_divides, exp_lcm, exp_mul


DEFAULT_BUDGET = 5 * 10**7


def _budget_default():
    env = os.environ.get("SCROLL_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class BudgetExceeded(RuntimeError):
    """Raised when the reduction-step budget is exhausted; callers must treat
    this as 'inconclusive', never as a verdict."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps):
        self.left = steps if steps is not None else _budget_default()

    def spend(self, k=1):
        self.left -= k
        if self.left < 0:
            raise BudgetExceeded("Groebner reduction budget exhausted")


def normal_form(f, basis, order, budget=None):
    """Remainder of f on division by basis (list of nonzero polys)."""
    bud = budget if isinstance(budget, _Budget) else _Budget(budget)
    if not basis:
        return f
    ring = f.ring
    p = ring.char
    key = order.key
    lead = [(g.lead(order)) for g in basis]
    lts = [lt for lt, _ in lead]
    lcs = [lc for _, lc in lead]
    work = dict(f.terms)
    remainder = {}
    while work:
        e = max(work, key=key)
        c = work.pop(e)
        hit = -1
        for i, lt in enumerate(lts):
            if exp_divides(lt, e):
                hit = i
                break
        if hit < 0:
            remainder[e] = c
            continue
        bud.spend()
        g = basis[hit]
        q = exp_div(e, lts[hit])
        factor = c * ring.inv(lcs[hit])
        if p:
            factor %= p
        for eg, cg in g.terms.items():
            if eg == lts[hit]:
                continue
            em = exp_mul(eg, q)
            v = work.get(em, 0 if p else Fraction(0)) - factor * cg
            if p:
                v %= p
            if v:
                work[em] = v
            else:
                work.pop(em, None)
    return Poly(ring, remainder)


def spoly(f, g, order):
    ring = f.ring
    p = ring.char
    ef, cf = f.lead(order)
    eg, cg = g.lead(order)
    l = exp_lcm(ef, eg)
    mf = exp_div(l, ef)
    mg = exp_div(l, eg)
    a = ring.poly({mf: ring.inv(cf)})
    b = ring.poly({mg: ring.inv(cg)})
    return a * f - b * g


def buchberger(gens, order, budget=None):
    """Reduced Groebner basis by Buchberger with the Gebauer-Moeller update.

    Pair selection is by increasing lcm order-key (normal strategy); all
    returned elements are monic and mutually reduced.
    """
    bud = _Budget(budget)
    ring = None
    G = []
    for g in gens:
        if g:
            ring = g.ring
            G.append(g.monic(order))
    if not G:
        return []
    key = order.key

    basis = []
    lts = []
    pairs = []  # entries (lcm_key, lcm, i, j)

    def update(h):
        # Gebauer-Moeller: prune new pairs against each other and old pairs
        nonlocal pairs
        t = len(basis)
        lt_h = h.lead(order)[0]
        cand = []
        for i in range(t):
            cand.append((exp_lcm(lts[i], lt_h), i))
        keep = []
        for l, i in cand:
            drop = False
            for l2, i2 in cand:
                if i2 == i:
                    continue
                if l2 != l and exp_divides(l2, l):
                    drop = True
                    break
            if not drop:
                keep.append((l, i))
        # product criterion
        keep = [
            (l, i)
            for l, i in keep
            if l != exp_mul(lts[i], lt_h)
        ]
        # dedupe equal lcms (keep one representative)
        seen = {}
        for l, i in keep:
            seen.setdefault(l, i)
        newpairs = [(key(l), l, i, t) for l, i in seen.items()]
        # prune old pairs whose lcm is divisible by lt_h properly
        kept_old = []
        for pk, l, i, j in pairs:
            if (
                exp_divides(lt_h, l)
                and exp_lcm(lts[i], lt_h) != l
                and exp_lcm(lts[j], lt_h) != l
            ):
                continue
            kept_old.append((pk, l, i, j))
        pairs = kept_old + newpairs
        pairs.sort(key=lambda entry: entry[0])
        basis.append(h)
        lts.append(lt_h)

    for g in sorted(G, key=lambda q: key(q.lead(order)[0])):
        h = normal_form(g, basis, order, bud)
        if h:
            update(h.monic(order))

    while pairs:
        _, l, i, j = pairs.pop(0)
        s = spoly(basis[i], basis[j], order)
        if not s:
            continue
        h = normal_form(s, basis, order, bud)
        if h:
            update(h.monic(order))

    return interreduce(basis, order, bud)


def interreduce(basis, order, budget=None):
    """Reduce a Groebner basis to the unique reduced one (monic, minimal
    leading terms, tails fully reduced)."""
    bud = budget if isinstance(budget, _Budget) else _Budget(budget)
    basis = sorted(basis, key=lambda g: order.key(g.lead(order)[0]))
    kept = []
    for g in basis:
        lt = g.lead(order)[0]
        if any(exp_divides(h.lead(order)[0], lt) for h in kept):
            continue
        kept.append(g)
    out = []
    for i, g in enumerate(kept):
        others = out + kept[i + 1 :]
        r = normal_form(g, others, order, bud) if others else g
        if r:
            out.append(r.monic(order))
    return sorted(out, key=lambda g: order.key(g.lead(order)[0]))


def is_groebner(basis, order, budget=None):
    bud = _Budget(budget)
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = spoly(basis[i], basis[j], order)
            if s and normal_form(s, basis, order, bud):
                return False
    return True


class Ideal:
    """Finitely generated ideal with per-order Groebner caches."""

    def __init__(self, ring, gens):
        self.ring = ring
        self.gens = [g for g in gens if g]
        self._gb = {}

    def groebner(self, order=None, budget=None):
        order = order or DegRevLex()
        ckey = order.name
        if ckey not in self._gb:
            self._gb[ckey] = buchberger(self.gens, order, budget)
        return self._gb[ckey]

    def normal_form(self, f, order=None, budget=None):
        order = order or DegRevLex()
        return normal_form(f, self.groebner(order, budget), order, budget)

    def contains(self, f, order=None, budget=None):
        return not self.normal_form(f, order, budget)

    def contains_all(self, polys, order=None, budget=None):
        return all(self.contains(f, order, budget) for f in polys)

    def is_unit(self, order=None, budget=None):
        gb = self.groebner(order, budget)
        return len(gb) == 1 and sum(gb[0].lead(order or DegRevLex())[0]) == 0

    def __repr__(self):
        return f"Ideal({len(self.gens)} gens in {self.ring})"


def ideal_equal(I, J, order=None, budget=None):
    """Mutual containment via normal forms."""
    return I.contains_all(J.gens, order, budget) and J.contains_all(
        I.gens, order, budget
    )


# --- variable order permutation helpers -------------------------------------


def _permute_poly(f, perm, target):
    return Poly(
        target, {tuple(e[i] for i in perm): c for e, c in f.terms.items()}
    )


def saturate_variable(gens, ring, var, weights=None, budget=None):
    """(I : var^infty) for a homogeneous ideal via the reverse-lex trick.

    Computes a (weighted-)degrevlex basis with `var` cheapest and divides
    each element by its var-content.  Requires generators homogeneous for
    the given positive grading (standard grading when weights is None).
    """
    vi = ring._index[var] if isinstance(var, str) else var
    w = weights or (1,) * ring.nvars
    for g in gens:
        if not g.is_homogeneous(w):
            raise PolyError("saturate_variable requires homogeneous generators")
    perm = [i for i in range(ring.nvars) if i != vi] + [vi]
    inv = [0] * ring.nvars
    for pos, i in enumerate(perm):
        inv[i] = pos
    pring = Ring(tuple(ring.names[i] for i in perm), ring.char)
    pw = tuple(w[i] for i in perm)
    order = DegRevLex(pw if any(x != 1 for x in pw) else None)
    gb = buchberger([_permute_poly(g, perm, pring) for g in gens], order, budget)
    out = []
    last = pring.nvars - 1
    for g in gb:
        k = min(e[last] for e in g.terms)
        if k:
            g = Poly(
                pring,
                {
                    tuple(x - (k if t == last else 0) for t, x in enumerate(e)): c
                    for e, c in g.terms.items()
                },
            )
        out.append(g)
    out = interreduce(out, order, budget)
    return [_permute_poly(g, inv, ring) for g in out]


def saturate(I, f, budget=None):
    """(I : f^infty) by Rabinowitsch adjunction and elimination.

    For a variable f of a homogeneous ideal the cheaper reverse-lex trick is
    used automatically.
    """
    ring = I.ring
    if len(f.terms) == 1:
        (e, c), = f.terms.items()
        vars_in = [i for i, k in enumerate(e) if k]
        if len(vars_in) == 1 and e[vars_in[0]] == 1:
            std = all(g.is_homogeneous() for g in I.gens)
            if std:
                return Ideal(
                    ring, saturate_variable(I.gens, ring, vars_in[0], None, budget)
                )
    ext = ring.extend(("W_sat",))
    w = ext.var(ext.nvars - 1)
    lifted = [g.subs({}) if False else _lift(g, ext) for g in I.gens]
    gens = lifted + [w * _lift(f, ext) - ext.one()]
    elim = eliminate_ring(gens, ext, [ext.nvars - 1], budget)
    return Ideal(ring, [_drop_last(g, ring) for g in elim])


def _lift(g, ext):
    return Poly(ext, {e + (0,) * (ext.nvars - len(e)): c for e, c in g.terms.items()})


def _drop_last(g, ring):
    return Poly(ring, {e[: ring.nvars]: c for e, c in g.terms.items()})


def eliminate_ring(gens, ring, drop_indices, budget=None):
    """Generators of I ∩ k[vars not in drop_indices], returned in the big
    ring (all eliminated exponents zero)."""
    drop = set(drop_indices)
    perm = sorted(range(ring.nvars), key=lambda i: (i not in drop, i))
    inv = [0] * ring.nvars
    for pos, i in enumerate(perm):
        inv[i] = pos
    pring = Ring(tuple(ring.names[i] for i in perm), ring.char)
    order = Block(len(drop))
    gb = buchberger([_permute_poly(g, perm, pring) for g in gens], order, budget)
    out = []
    for g in gb:
        if all(all(e[t] == 0 for t in range(len(drop))) for e in g.terms):
            out.append(_permute_poly(g, inv, ring))
    return out


def eliminate(I, var_names, budget=None):
    idx = [I.ring._index[v] if isinstance(v, str) else v for v in var_names]
    return Ideal(I.ring, eliminate_ring(I.gens, I.ring, idx, budget))


# --- Hilbert machinery --------------------------------------------------------


def _minimalize(gens):
    gens = sorted(set(gens), key=lambda e: (sum(e), e))
    out = []
    for e in gens:
        if not any(exp_divides(f, e) for f in out):
            out.append(e)
    return out


def hilbert_numerator(lt_gens, nvars):
    """Numerator N(z) (dict degree -> int) of the Hilbert series
    N(z)/(1-z)^nvars of a monomial ideal's quotient ring."""
    gens = _minimalize([tuple(e) for e in lt_gens])

    def rec(gs):
        if not gs:
            return {0: 1}
        if any(sum(e) == 0 for e in gs):
            return {}
        # coprime-support base case: product of (1 - z^deg)
        supports = [frozenset(i for i, x in enumerate(e) if x) for e in gs]
        pairwise = all(
            not (supports[i] & supports[j])
            for i in range(len(gs))
            for j in range(i + 1, len(gs))
        )
        if pairwise:
            num = {0: 1}
            for e in gs:
                d = sum(e)
                new = {}
                for k, c in num.items():
                    new[k] = new.get(k, 0) + c
                    new[k + d] = new.get(k + d, 0) - c
                num = {k: c for k, c in new.items() if c}
            return num
        # pivot on a most-used variable
        counts = [0] * nvars
        for e in gs:
            for i, x in enumerate(e):
                if x:
                    counts[i] += 1
        piv = max(range(nvars), key=lambda i: counts[i])
        pe = tuple(1 if i == piv else 0 for i in range(nvars))
        # I = (I + (x)) u x*(I : x)
        plus = _minimalize(
            [e for e in gs if e[piv] == 0] + [pe]
        )
        colon = _minimalize(
            [tuple(x - (1 if i == piv else 0) if i == piv else x for i, x in enumerate(e)) if e[piv] else e for e in gs]
        )
        a = rec(plus)
        b = rec(colon)
        out = dict(a)
        for k, c in b.items():
            out[k + 1] = out.get(k + 1, 0) + c
        return {k: c for k, c in out.items() if c}

    return rec(gens)


def hilbert_function_from_lt(lt_gens, nvars, k):
    num = hilbert_numerator(lt_gens, nvars)
    return hilbert_from_numerator(num, nvars, k)


def hilbert_from_numerator(num, nvars, k):
    total = 0
    for d, c in num.items():
        if k - d >= 0:
            total += c * comb(k - d + nvars - 1, nvars - 1)
    return total


def hilbert_function(I, k, order=None, budget=None):
    """dim_k of degree-k piece of ring/I (standard grading), via the leading
    term ideal of any cached Groebner basis."""
    order = order or DegRevLex()
    gb = I.groebner(order, budget)
    lts = [g.lead(order)[0] for g in gb]
    return hilbert_function_from_lt(lts, I.ring.nvars, k)


def hilbert_data(I, order=None, budget=None):
    """(dimension, degree, numerator) of the projective scheme of a
    homogeneous ideal, from the exact Hilbert series.

    dimension is the projective dimension (degree of the Hilbert
    polynomial); degree is its normalized leading coefficient.  Values are
    exact: beyond the numerator degree the series IS the polynomial.
    """
    order = order or DegRevLex()
    gb = I.groebner(order, budget)
    if not gb:
        n = I.ring.nvars
        return (n - 1, 1, {0: 1})
    lts = [g.lead(order)[0] for g in gb]
    if any(sum(e) == 0 for e in lts):
        return (-1, 0, {})
    n = I.ring.nvars
    num = hilbert_numerator(lts, n)
    k0 = max(num) + 1 if num else 1
    vals = [hilbert_from_numerator(num, n, k0 + t) for t in range(n + 2)]
    diffs = [vals]
    while any(diffs[-1]) and len(diffs[-1]) > 1:
        last = diffs[-1]
        diffs.append([b - a for a, b in zip(last, last[1:])])
    # degree of HP = index of last nonconstant level
    dim_proj = -1
    degree = 0
    for level, row in enumerate(diffs):
        if row and all(x == row[0] for x in row) and row[0] != 0:
            dim_proj = level
            degree = row[0]
            break
    return (dim_proj, degree, num)


def dimension(I, order=None, budget=None):
    return hilbert_data(I, order, budget)[0]


def degree(I, order=None, budget=None):
    return hilbert_data(I, order, budget)[1]


# --- toric ideals ---------------------------------------------------------------


def toric_ideal(exponent_vectors, ring, weights=None, budget=None):
    """Ideal of algebraic relations of the monomial map z_i -> x^{v_i}.

    Obtained as the lattice-kernel ideal saturated at every target variable,
    one variable at a time by the reverse-lex trick.  `weights` defaults to
    the total degrees of the map monomials, making the lattice binomials
    homogeneous.
    """
    vs = [list(v) for v in exponent_vectors]
    assert len(vs) == ring.nvars
    A = [[v[i] for v in vs] for i in range(len(vs[0]))]
    kernel = integer_kernel(A)
    if weights is None:
        weights = tuple(sum(v) for v in vs)
        if len(set(weights)) == 1:
            weights = (1,) * ring.nvars
    gens = []
    for u in kernel:
        plus = tuple(max(x, 0) for x in u)
        minus = tuple(max(-x, 0) for x in u)
        gens.append(ring.poly({plus: 1}) - ring.poly({minus: 1}))
    gens = [g for g in gens if g]
    for i in range(ring.nvars):
        gens = saturate_variable(gens, ring, i, weights, budget)
    return Ideal(ring, buchberger(gens, DegRevLex(), budget))
