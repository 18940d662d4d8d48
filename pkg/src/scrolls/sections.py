"""Bigraded section spaces of divisor classes on a weighted scroll.

A section of class (n, m) is a sum over weighted partitions q (with
sum b_j q_j = m) of alpha_q(t1, t2) * x^q where alpha_q is homogeneous of
degree c = n + sum a_j q_j; the monomial is absent when c < 0.  The section
dimension is sum (c + 1), and the same count is realized as the lattice
points of the divisor polytope in M_R (an explicit affine bijection, tested
cross-module).
"""

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .poly import Ring
from .polytope import RationalPolytope
from .scroll import (
    DivisorClass,
    ScrollSpec,
    anticanonical,
    ray_vectors,
    require_normalized,
    stratum_from_zeros,
)


@dataclass(frozen=True)
class MonomialDatum:
    q: tuple
    c: int


@dataclass
class SectionSpace:
    spec: ScrollSpec
    cls: DivisorClass
    monomials: list
    dim: int

    def to_json(self):
        return json.dumps(
            {
                "class": [self.cls.l, self.cls.m],
                "dim": self.dim,
                "monomials": [{"q": list(md.q), "c": md.c} for md in self.monomials],
            }
        )


def weighted_partitions(weights, m):
    """All q >= 0 with sum weights[j] q[j] = m, in lex order."""
    n = len(weights)
    out = []

    def rec(j, rem, acc):
        if j == n - 1:
            if rem % weights[j] == 0:
                out.append(tuple(acc + [rem // weights[j]]))
            return
        w = weights[j]
        for qj in range(rem // w + 1):
            rec(j + 1, rem - w * qj, acc + [qj])

    if m >= 0:
        rec(0, m, [])
    out.sort()
    return out


def section_space(spec, cls):
    """Monomial basis of S_{n,m}; empty space allowed (dim 0)."""
    require_normalized(spec)
    if not isinstance(cls, DivisorClass):
        cls = DivisorClass(*cls)
    mons = []
    dim = 0
    for q in weighted_partitions(spec.weights, cls.m):
        c = cls.l + sum(a * qj for a, qj in zip(spec.twists, q))
        if c >= 0:
            mons.append(MonomialDatum(q, c))
            dim += c + 1
    return SectionSpace(spec, cls, mons, dim)


def divisor_polytope(spec, cls):
    """Polytope of the divisor n D_sigma1 + m D_rho1 in M_R.

    Inequalities pair against the ray images (in the basis where
    sigma2, rho2..rhon are standard), with offsets n on sigma1 and m on
    rho1.  Lattice points biject with section monomials via
    (q, i) <-> u = (c - i, q_2, ..., q_n)."""
    require_normalized(spec)
    if not isinstance(cls, DivisorClass):
        cls = DivisorClass(*cls)
    rays = ray_vectors(spec)
    ineqs = [
        (rays["sigma1"], Fraction(cls.l)),
        (rays["sigma2"], Fraction(0)),
        (rays["rho1"], Fraction(cls.m)),
    ]
    for j in range(2, spec.n + 1):
        ineqs.append((rays[f"rho{j}"], Fraction(0)))
    return RationalPolytope(spec.n, hrep=ineqs)


def monomial_to_lattice_point(spec, cls, q, i):
    """Lattice point of the divisor polytope for t1^i t2^(c-i) x^q."""
    c = cls.l + sum(a * qj for a, qj in zip(spec.twists, q))
    assert 0 <= i <= c
    return (c - i,) + tuple(q[1:])


def lattice_point_to_monomial(spec, cls, u):
    """Inverse of the bijection: returns (q, i)."""
    q_tail = tuple(u[1:])
    m_tail = sum(b * qj for b, qj in zip(spec.weights[1:], q_tail))
    q1 = cls.m - m_tail
    assert q1 >= 0 and q1 % spec.weights[0] == 0
    q = (q1 // spec.weights[0],) + q_tail
    c = cls.l + sum(a * qj for a, qj in zip(spec.twists, q))
    i = c - u[0]
    assert 0 <= i <= c
    return q, i


# --- base locus --------------------------------------------------------------


def minimal_hitting_sets(supports, universe):
    """All inclusion-minimal transversals of a family of sets.

    Branch-and-bound on the first uncovered set; fine for the handful of
    supports a section space produces.
    """
    supports = [frozenset(s) for s in supports]
    results = []

    def rec(chosen, remaining):
        rem = [s for s in remaining if not (s & chosen)]
        if not rem:
            if not any(r < chosen for r in results):
                for r in [r for r in results if chosen < r]:
                    results.remove(r)
                if chosen not in results:
                    results.append(chosen)
            return
        pivot = min(rem, key=len)
        for el in sorted(pivot):
            # prune: only extend if no chosen superset already hits rem
            rec(chosen | {el}, rem)

    if any(not s for s in supports):
        return []  # an empty support can never be hit: no transversal
    rec(frozenset(), supports)
    # final minimality sweep
    out = [r for r in results if not any(r2 < r for r2 in results)]
    return sorted(set(out), key=sorted)


def base_locus(spec):
    """Torus-invariant base locus of |-K| as a list of maximal strata.

    The common zero set of all basis monomials is the union of coordinate
    subspaces V(T) over the minimal transversals T of the x-supports
    (t-coordinates never enter: every admissible slot carries the full
    space of t-monomials in its coefficient degree).  Transversals using
    all fiber coordinates land in the irrelevant locus and are dropped.
    """
    require_normalized(spec)
    ss = section_space(spec, anticanonical(spec))
    supports = {frozenset(j + 1 for j, e in enumerate(md.q) if e) for md in ss.monomials}
    universe = set(range(1, spec.n + 1))
    strata = []
    for T in minimal_hitting_sets(supports, universe):
        if len(T) >= spec.n:
            continue
        strata.append(stratum_from_zeros(spec, T))
    return sorted(strata, key=lambda s: sorted(s.zero_xs))


def fixed_divisor(spec):
    """Fiber coordinate dividing every admissible anticanonical monomial,
    or None."""
    require_normalized(spec)
    ss = section_space(spec, anticanonical(spec))
    if not ss.monomials:
        return None
    for j in range(spec.n):
        if all(md.q[j] >= 1 for md in ss.monomials):
            return j + 1
    return None


# --- automorphisms and moduli -------------------------------------------------


def aut_dimension(spec):
    """dim Aut0(F) as the count of degree-zero graded derivations of the Cox
    ring minus the 2-dimensional grading torus."""
    require_normalized(spec)
    total = 2 * section_space(spec, DivisorClass(1, 0)).dim
    for j in range(spec.n):
        total += section_space(
            spec, DivisorClass(-spec.twists[j], spec.weights[j])
        ).dim
    return total - 2


def embedded_moduli_dim(spec):
    """dim |-K_F| - dim Aut0(F): the embedded-deformation dimension of the
    anticanonical family."""
    ss = section_space(spec, anticanonical(spec))
    if ss.dim == 0:
        raise ValueError("empty anticanonical system")
    return (ss.dim - 1) - aut_dimension(spec)


# --- explicit sections --------------------------------------------------------


def cox_ring(spec, char=0):
    names = ["t1", "t2"] + [f"x{j}" for j in range(1, spec.n + 1)]
    return Ring(names, char)


def section_monomial_exponent(spec, q, c, i):
    """Exponent tuple of t1^i t2^(c-i) x^q in the Cox ring."""
    return (i, c - i) + tuple(q)


def random_section(spec, cls, char, seed):
    """Random member of |class|: independent nonzero coefficients on every
    basis slot; deterministic given the seed."""
    ss = section_space(spec, cls)
    if ss.dim == 0:
        raise ValueError("empty system")
    rng = random.Random(f"{seed}|{spec}|{cls.l},{cls.m}|{char}")
    ring = cox_ring(spec, char)
    terms = {}
    for md in ss.monomials:
        for i in range(md.c + 1):
            e = section_monomial_exponent(spec, md.q, md.c, i)
            if char:
                terms[e] = rng.randrange(1, char)
            else:
                terms[e] = rng.choice([c for c in range(-20, 21) if c])
    return ring.poly(terms)
