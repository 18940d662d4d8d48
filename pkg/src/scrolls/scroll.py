"""Weighted scrolls F(a_1..a_n | b_1..b_n) over P^1 as toric varieties.

Cox coordinates are t1, t2 (base) and x1..xn (fiber), bigraded by
deg t_i = (1, 0) and deg x_j = (-a_j, b_j).  The class group is Z L + Z M
with L = [t1 = 0] and M = [x1 = 0]; ray classes are [D_sigma_i] = (1, 0) and
[D_rho_j] = (-a_j, b_j).  The anticanonical class is (d, e) with
d = 2 - sum(a_j), e = sum(b_j).

Note on sign: we use -K = d L + e M throughout.  The alternative sign on the
M-coefficient is inconsistent with the ray-class sum and with every
downstream count, so the ray-sum convention wins; the test suite asserts
sum of all ray classes == (d, e).
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .polytope import Fan, RationalPolytope


class SpecError(ValueError):
    pass


class UnsupportedSpecError(SpecError):
    """Spec outside the supported regime (e.g. no weight-1 fiber coordinate,
    or fiber weights b_2..b_n sharing a common factor, which breaks the
    rank-2 class group normal form used here)."""


@dataclass(frozen=True)
class DivisorClass:
    l: int
    m: int

    def __iter__(self):
        return iter((self.l, self.m))

    def __add__(self, other):
        return DivisorClass(self.l + other.l, self.m + other.m)

    def __neg__(self):
        return DivisorClass(-self.l, -self.m)

    def __str__(self):
        return f"({self.l}, {self.m})"


@dataclass(frozen=True)
class ScrollSpec:
    """Twist/weight data of a weighted scroll over P^1.

    base_weights is reserved for scrolls over weighted projective bases; no
    operation consumes it (out of scope), it only rides along so the type
    can represent the general family.
    """

    twists: tuple
    weights: tuple
    base_weights: tuple = (1, 1)

    def __post_init__(self):
        object.__setattr__(self, "twists", tuple(int(a) for a in self.twists))
        object.__setattr__(self, "weights", tuple(int(b) for b in self.weights))
        if len(self.twists) != len(self.weights):
            raise SpecError("twists and weights must have equal length")
        if len(self.weights) < 2:
            raise SpecError("need at least two fiber coordinates")
        if any(b <= 0 for b in self.weights):
            raise SpecError("weights must be positive")
        if 1 not in self.weights:
            raise UnsupportedSpecError(
                "no weight-1 fiber coordinate (outside the standing assumption b_1 = 1)"
            )

    @property
    def n(self):
        return len(self.weights)

    def __str__(self):
        a = ",".join(str(x) for x in self.twists)
        if all(b == 1 for b in self.weights):
            return f"F({a})"
        b = ",".join(str(x) for x in self.weights)
        return f"F({a} | {b})"

    def is_normalized(self):
        return self == normalize(self)


_SPEC_RE = re.compile(r"^\s*F\s*\(\s*([^|()]*?)\s*(?:\|\s*([^|()]*?)\s*)?\)\s*$")


def parse_spec(text):
    """Parse `F(a1,...,an | b1,...,bn)`; weights omitted when all 1."""
    m = _SPEC_RE.match(text)
    if not m:
        raise SpecError(f"cannot parse scroll spec: {text!r}")
    try:
        twists = tuple(int(tok) for tok in m.group(1).split(","))
    except ValueError as e:
        raise SpecError(f"bad twist list in {text!r}: {e}") from None
    if m.group(2) is None:
        weights = tuple(1 for _ in twists)
    else:
        try:
            weights = tuple(int(tok) for tok in m.group(2).split(","))
        except ValueError as e:
            raise SpecError(f"bad weight list in {text!r}: {e}") from None
    return ScrollSpec(twists, weights)


def normalize(spec):
    """Normal form of a spec under twist shifts a_j -> a_j + k b_j and
    weight-preserving coordinate permutations.

    The shift k is pinned by requiring the weight-1 twists to be
    nonnegative with minimum exactly 0 (this is the unique representative
    with 'a weight-1 coordinate has twist 0' and no negative weight-1
    twist); coordinates are then sorted by (weight, twist).  The result is
    the lexicographically least representative subject to those
    constraints.
    """
    k = -min(a for a, b in zip(spec.twists, spec.weights) if b == 1)
    pairs = sorted(
        (b, a + k * b) for a, b in zip(spec.twists, spec.weights)
    )
    return ScrollSpec(
        tuple(a for _, a in pairs), tuple(b for b, _ in pairs), spec.base_weights
    )


def require_normalized(spec):
    if not spec.is_normalized():
        raise SpecError(f"spec {spec} is not in normal form; call normalize() first")


def _check_primitive_rays(spec):
    g = 0
    for b in spec.weights[1:]:
        g = gcd(g, b)
    if g > 1:
        raise UnsupportedSpecError(
            f"weights {spec.weights} have gcd(b_2..b_n) = {g} > 1: the ray "
            "through x_1 is non-primitive and the rank-2 presentation used "
            "here does not apply"
        )


# --- toric data ------------------------------------------------------------


def ray_names(spec):
    return ["sigma1", "sigma2"] + [f"rho{j}" for j in range(1, spec.n + 1)]


def ray_vectors(spec):
    """Ray generators in the basis (sigma2, rho2, ..., rhon) of N.

    sigma1 = -sigma2 + sum_{j>=2} a_j rho_j  (a_1 = 0 after normalization)
    rho1   = -sum_{j>=2} b_j rho_j
    """
    require_normalized(spec)
    _check_primitive_rays(spec)
    n = spec.n
    a, b = spec.twists, spec.weights
    e = lambda i: tuple(1 if t == i else 0 for t in range(n))
    sigma2 = e(0)
    sigma1 = tuple([-1] + [a[j] for j in range(1, n)])
    rho1 = tuple([0] + [-b[j] for j in range(1, n)])
    rays = {"sigma1": sigma1, "sigma2": sigma2, "rho1": rho1}
    for j in range(2, n + 1):
        rays[f"rho{j}"] = e(j - 1)
    return rays


def build_fan(spec):
    """The fan of the scroll: 2n maximal cones tau_{i,j} spanned by sigma_i
    and all rho's but rho_j."""
    rays = ray_vectors(spec)
    names = ray_names(spec)
    idx = {nm: i for i, nm in enumerate(names)}
    cones = []
    for i in (1, 2):
        for j in range(1, spec.n + 1):
            cone = {idx[f"sigma{i}"]}
            for jj in range(1, spec.n + 1):
                if jj != j:
                    cone.add(idx[f"rho{jj}"])
            cones.append(frozenset(cone))
    return Fan(spec.n, [rays[nm] for nm in names], cones)


def ray_class(spec, ray):
    """Class of the torus-invariant divisor of a ray in the (L, M) basis."""
    require_normalized(spec)
    if ray in ("sigma1", "sigma2"):
        return DivisorClass(1, 0)
    m = re.match(r"^rho(\d+)$", ray)
    if not m:
        raise SpecError(f"unknown ray {ray!r}")
    j = int(m.group(1))
    if not 1 <= j <= spec.n:
        raise SpecError(f"ray index out of range: {ray}")
    return DivisorClass(-spec.twists[j - 1], spec.weights[j - 1])


def anticanonical(spec):
    """-K = (d, e) with d = 2 - sum(a_j), e = sum(b_j)."""
    require_normalized(spec)
    d = 2 - sum(spec.twists)
    e = sum(spec.weights)
    total = DivisorClass(0, 0)
    for nm in ray_names(spec):
        total = total + ray_class(spec, nm)
    assert (total.l, total.m) == (d, e), "ray-class sum disagrees with (d, e)"
    return DivisorClass(d, e)


# --- torus-invariant strata -------------------------------------------------


@dataclass(frozen=True)
class TorusStratum:
    """Coordinate stratum {x_j = 0 : j in zero_xs} (t's never vanish jointly
    on admissible strata).  Indices are 1-based fiber coordinates."""

    zero_xs: frozenset
    dim_in_F: int
    stabilizer_order: int
    transverse_weights: tuple = field(default=())

    def survivors(self, spec):
        return [j for j in range(1, spec.n + 1) if j not in self.zero_xs]

    def __str__(self):
        inside = ", ".join(f"x{j}=0" for j in sorted(self.zero_xs))
        return "{" + inside + "}"


def stratum_from_zeros(spec, zero_xs):
    zero_xs = frozenset(zero_xs)
    if len(zero_xs) >= spec.n:
        raise SpecError("all fiber coordinates zero: irrelevant locus")
    survivors = [j for j in range(1, spec.n + 1) if j not in zero_xs]
    g = 0
    for j in survivors:
        g = gcd(g, spec.weights[j - 1])
    g = g if g else 1
    trans = tuple(spec.weights[j - 1] % g if g > 1 else spec.weights[j - 1] for j in sorted(zero_xs))
    return TorusStratum(zero_xs, spec.n - len(zero_xs), g, trans)


def singular_strata(spec):
    """Maximal coordinate strata of F with nontrivial stabilizer.

    The stabilizer along a stratum is the gcd of the weights of the
    surviving fiber coordinates (t-coordinates are irrelevant: lambda is
    forced to 1 on stabilizers of points of U); gcd over the empty set is 1.
    """
    require_normalized(spec)
    n = spec.n
    found = {}
    divisors = set()
    for b in spec.weights:
        for g in range(2, b + 1):
            if b % g == 0:
                divisors.add(g)
    for g in sorted(divisors):
        keep = frozenset(j for j in range(1, n + 1) if spec.weights[j - 1] % g == 0)
        if not keep or len(keep) == n:
            continue
        zero = frozenset(range(1, n + 1)) - keep
        st = stratum_from_zeros(spec, zero)
        if st.stabilizer_order > 1:
            found[zero] = st
    # keep inclusion-minimal zero sets (maximal strata)
    minimal = []
    for z, st in found.items():
        if not any(z2 < z for z2 in found):
            minimal.append(st)
    return sorted(minimal, key=lambda s: sorted(s.zero_xs))


# --- automorphisms ----------------------------------------------------------


def demazure_roots(spec):
    """Demazure roots of the fan: characters pairing to -1 with exactly one
    ray and nonnegatively with the rest.  dim Aut0 = n + #roots."""
    rays = ray_vectors(spec)
    names = ray_names(spec)
    count = 0
    for nm in names:
        r = rays[nm]
        ineqs = [(rays[other], Fraction(0)) for other in names if other != nm]
        eqs = [(r, Fraction(-1))]
        P = RationalPolytope(spec.n, hrep=ineqs, eqs=eqs)
        count += len(P.lattice_points())
    return count


def aut_dimension_from_roots(spec):
    return spec.n + demazure_roots(spec)
