"""Rational polytopes and fans, with exact arithmetic throughout.

A polytope is stored by inequalities ``<u, normal> >= -offset`` (integer
normals, rational offsets), optional equations cutting out its affine span,
and its vertex list.  Vertex enumeration is brute-force double description:
every maximal independent subset of active constraints.  That is fine at the
scales this package needs (ambient dimension <= 6, a few dozen facets) and
keeps every number exact; no floats anywhere.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd

from .linalg import (
    nullspace_fraction,
    primitive_vector,
    rank_fraction,
    rref_fraction,
    solve_fraction,
)

LATTICE_ENUM_CAP = 10**6
HULL_POINT_CAP = 200


class PolytopeError(ValueError):
    pass


def _dot(u, v):
    return sum(Fraction(a) * Fraction(b) for a, b in zip(u, v))


class RationalPolytope:
    """Bounded rational polytope given by hrep and/or vrep.

    hrep: list of (normal, offset) meaning <u, normal> >= -offset.
    eqs: list of (normal, rhs) meaning <u, normal> == rhs (affine span).
    vrep: list of vertex tuples of Fractions.
    """

    def __init__(self, ambient_dim, hrep=None, eqs=None, vrep=None):
        self.ambient_dim = ambient_dim
        self.hrep = [(tuple(int(c) for c in n), Fraction(o)) for n, o in (hrep or [])]
        self.eqs = [(tuple(int(c) for c in n), Fraction(r)) for n, r in (eqs or [])]
        self._vertices = None
        if vrep is not None:
            self._vertices = [tuple(Fraction(x) for x in v) for v in vrep]

    # -- constructors -------------------------------------------------

    @classmethod
    def from_hrep(cls, ineqs, ambient_dim, eqs=None):
        P = cls(ambient_dim, hrep=ineqs, eqs=eqs)
        P.vertices()  # force enumeration; raises on unbounded input
        return P

    @classmethod
    def from_points(cls, points):
        return convex_hull(points)

    # -- basic data ----------------------------------------------------

    def vertices(self):
        if self._vertices is None:
            self._vertices = self._enumerate_vertices()
        return self._vertices

    def _enumerate_vertices(self):
        if not self.hrep and not self.eqs:
            raise PolytopeError("no constraints given")
        d = self.ambient_dim
        eq_rows = [list(n) for n, _ in self.eqs]
        eq_rhs = [r for _, r in self.eqs]
        span_rank = rank_fraction(eq_rows) if eq_rows else 0
        need = d - span_rank
        verts = set()
        idx = range(len(self.hrep))
        for active in combinations(idx, need):
            rows = eq_rows + [list(self.hrep[i][0]) for i in active]
            rhs = eq_rhs + [-self.hrep[i][1] for i in active]
            if rank_fraction(rows) < d:
                continue
            x = solve_fraction(rows, rhs)
            if x is None:
                continue
            if self.contains(x):
                verts.add(tuple(x))
        if not verts:
            # could be genuinely empty; distinguish from unbounded by a ray
            # check on the recession cone
            if self._has_recession_ray():
                raise PolytopeError("unbounded polyhedron")
            return []
        if self._has_recession_ray():
            raise PolytopeError("unbounded polyhedron")
        return sorted(verts)

    def _has_recession_ray(self):
        # the recession cone {v : <v, n> >= 0 for all ineqs, <v, e> = 0}
        # is nontrivial iff the homogenized system has a nonzero solution;
        # sample check via LP-free certificate: bounded iff the normals
        # (plus +/- eqs) positively span R^d.
        rows = [list(n) for n, _ in self.hrep]
        for n, _ in self.eqs:
            rows.append(list(n))
            rows.append([-c for c in n])
        if rank_fraction(rows) < self.ambient_dim:
            return True
        # positive-span test by exact Fourier-Motzkin on small systems is
        # overkill; boundedness at our scale follows from each coordinate
        # being bounded above and below, which we test directly.
        for j in range(self.ambient_dim):
            for sgn in (1, -1):
                # is sgn * x_j bounded above? yes iff -sgn*e_j lies in the
                # cone generated by normals; test via rational feasibility
                # of a small system using least squares... use simplex-free
                # check: maximize over vertices is impossible here, so fall
                # back to Farkas via rref on the dual cone.
                if not _in_cone_nonneg(
                    [list(n) for n, _ in self.hrep]
                    + [list(n) for n, _ in self.eqs]
                    + [[-c for c in n] for n, _ in self.eqs],
                    [-sgn if t == j else 0 for t in range(self.ambient_dim)],
                ):
                    return True
        return False

    def contains(self, point):
        for n, r in self.eqs:
            if _dot(point, n) != r:
                return False
        for n, o in self.hrep:
            if _dot(point, n) < -o:
                return False
        return True

    def dim(self):
        V = self.vertices()
        if not V:
            return -1
        diffs = [[v[i] - V[0][i] for i in range(self.ambient_dim)] for v in V[1:]]
        return rank_fraction(diffs) if diffs else 0

    def is_integral(self):
        return all(x.denominator == 1 for v in self.vertices() for x in v)

    def dilate(self, k):
        assert k >= 1
        return RationalPolytope(
            self.ambient_dim,
            hrep=[(n, k * o) for n, o in self.hrep],
            eqs=[(n, k * r) for n, r in self.eqs],
            vrep=[tuple(k * x for x in v) for v in self._vertices]
            if self._vertices is not None
            else None,
        )

    def lattice_points(self):
        """All integer vectors satisfying the constraints, sorted lex."""
        V = self.vertices()
        if not V:
            return []
        d = self.ambient_dim
        lo = []
        hi = []
        count = 1
        for j in range(d):
            cj = [v[j] for v in V]
            a = min(cj)
            b = max(cj)
            import math

            lo.append(math.ceil(a))
            hi.append(math.floor(b))
            count *= max(0, hi[j] - lo[j] + 1)
            if count > LATTICE_ENUM_CAP:
                raise PolytopeError("lattice point enumeration cap exceeded")
        pts = []
        for cand in product(*[range(lo[j], hi[j] + 1) for j in range(d)]):
            if self.contains(cand):
                pts.append(tuple(cand))
        pts.sort()
        return pts

    def facets(self):
        """Irredundant facet list [(primitive inner normal, offset)].

        Only meaningful relative to the affine span; each returned
        inequality is active on a face of dimension dim-1.
        """
        V = self.vertices()
        d = self.dim()
        out = []
        for n, o in self.hrep:
            active = [v for v in V if _dot(v, n) == -o]
            if not active:
                continue
            diffs = [
                [a[i] - active[0][i] for i in range(self.ambient_dim)]
                for a in active[1:]
            ]
            r = rank_fraction(diffs) if diffs else 0
            if r == d - 1:
                prim = primitive_vector(n)
                scale = Fraction(n[_first_nonzero(n)], prim[_first_nonzero(n)])
                out.append((tuple(prim), o / scale))
        # dedupe
        seen = {}
        for n, o in out:
            if n not in seen or o < seen[n]:
                seen[n] = o
        return sorted(seen.items())

    def __repr__(self):
        nv = len(self._vertices) if self._vertices is not None else "?"
        return f"RationalPolytope(dim {self.ambient_dim}, {len(self.hrep)} ineqs, {nv} verts)"


def _first_nonzero(v):
    for i, x in enumerate(v):
        if x:
            return i
    raise ValueError("zero vector")


def _in_cone_nonneg(gens, target):
    """Does target lie in the nonnegative span of gens? Exact test via
    iterated elimination (small scale only)."""
    # Solve sum l_i g_i = target, l_i >= 0 by Fourier-Motzkin on the l's is
    # exponential; here we only need a boundedness certificate, so a
    # sufficient check is rational solvability with all-nonnegative least
    # squares replaced by vertex search over basic solutions.
    m = len(gens)
    if m == 0:
        return all(x == 0 for x in target)
    d = len(target)
    A = [[Fraction(gens[i][j]) for i in range(m)] for j in range(d)]
    for k in range(1, min(m, d) + 1):
        for cols in combinations(range(m), k):
            sub = [[A[j][c] for c in cols] for j in range(d)]
            x = solve_fraction(sub, [Fraction(t) for t in target])
            if x is not None and all(v >= 0 for v in x):
                # verify (solve_fraction returns arbitrary solution)
                check = [
                    sum(sub[j][i] * x[i] for i in range(k)) for j in range(d)
                ]
                if all(c == Fraction(t) for c, t in zip(check, target)):
                    return True
    return False


def convex_hull(points):
    """Exact convex hull of rational points.

    Works in any ambient dimension; lower-dimensional hulls get equations
    for their affine span.  Brute-force facet search: fine for the small
    vertex sets this package produces.
    """
    pts = sorted({tuple(Fraction(x) for x in p) for p in points})
    if not pts:
        raise PolytopeError("empty point set")
    if len(pts) > HULL_POINT_CAP:
        raise PolytopeError("hull point cap exceeded (high-performance hulls are out of scope)")
    d = len(pts[0])
    p0 = pts[0]
    diffs = [[p[i] - p0[i] for i in range(d)] for p in pts[1:]]
    span_dim = rank_fraction(diffs) if diffs else 0

    eqs = []
    if span_dim < d:
        for n in nullspace_fraction(diffs, ncols=d):
            prim = primitive_vector(n)
            eqs.append((tuple(prim), _dot(p0, prim)))

    if span_dim == 0:
        P = RationalPolytope(d, hrep=[], eqs=eqs, vrep=[p0])
        return P

    # candidate facet normals from span_dim-subsets
    ineqs = set()
    for sub in combinations(range(len(pts)), span_dim):
        base = pts[sub[0]]
        rows = [[pts[i][j] - base[j] for j in range(d)] for i in sub[1:]]
        rows += [list(n) for n, _ in eqs]
        if rows and rank_fraction(rows) != d - 1:
            continue
        if not rows and d != 1:
            continue
        normal = nullspace_fraction(rows, ncols=d)
        if len(normal) != 1:
            continue
        n = primitive_vector(normal[0])
        c = _dot(base, n)
        vals = [_dot(p, n) for p in pts]
        if all(v >= c for v in vals):
            ineqs.add((tuple(n), -c))
        elif all(v <= c for v in vals):
            ineqs.add((tuple(-x for x in n), c))

    P = RationalPolytope(d, hrep=sorted(ineqs), eqs=eqs)
    # vertices: input points with full active rank (hull of the inputs)
    verts = []
    for p in pts:
        rows = [list(n) for n, _ in eqs]
        for n, o in P.hrep:
            if _dot(p, n) == -o:
                rows.append(list(n))
        if rank_fraction(rows) == d:
            verts.append(p)
    P._vertices = sorted(verts)
    return P


def minkowski_sum(P, Q):
    pts = [
        tuple(a + b for a, b in zip(v, w))
        for v in P.vertices()
        for w in Q.vertices()
    ]
    return convex_hull(pts)


def area_2d(P):
    """Euclidean area of a polytope in ambient dimension 2 (exact Fraction)."""
    assert P.ambient_dim == 2
    V = list(P.vertices())
    if len(V) < 3:
        return Fraction(0)
    cx = sum(v[0] for v in V) / len(V)
    cy = sum(v[1] for v in V) / len(V)

    def angle_key(v):
        # exact cyclic order around the centroid: quadrant + slope compare
        x, y = v[0] - cx, v[1] - cy
        if x > 0 and y >= 0:
            quad = 0
        elif x <= 0 and y > 0:
            quad = 1
        elif x < 0 and y <= 0:
            quad = 2
        else:
            quad = 3
        return (quad, Fraction(y, x) if x != 0 else Fraction(10**18))

    V.sort(key=angle_key)
    s = Fraction(0)
    for i in range(len(V)):
        x1, y1 = V[i]
        x2, y2 = V[(i + 1) % len(V)]
        s += x1 * y2 - x2 * y1
    return abs(s) / 2


def mixed_area(P, Q):
    """Mixed area  A(P+Q) - A(P) - A(Q)  of two polytopes in the plane.

    For nef divisor polytopes on a complete toric surface this is the
    intersection number of the two divisor classes.
    """
    return area_2d(minkowski_sum(P, Q)) - area_2d(P) - area_2d(Q)


def is_normal_up_to(P, k):
    """Level-k normality: every lattice point of j*P is a sum of j lattice
    points of P, for 2 <= j <= k.  Checked by iterated Minkowski point sums.
    """
    if not P.is_integral():
        raise PolytopeError("normality check requires an integral polytope")
    assert k >= 2
    base = set(P.lattice_points())
    sums = set(base)
    for j in range(2, k + 1):
        sums = {tuple(a + b for a, b in zip(s, p)) for s in sums for p in base}
        target = set(P.dilate(j).lattice_points())
        if sums != target:
            return False
    return True


# --- fans ----------------------------------------------------------------


class Fan:
    """Rational fan: primitive ray generators plus maximal cones (ray index
    sets).  Cones need not be simplicial."""

    def __init__(self, lattice_rank, rays, max_cones):
        self.lattice_rank = lattice_rank
        self.rays = [tuple(int(x) for x in r) for r in rays]
        self.max_cones = [frozenset(c) for c in max_cones]

    def __repr__(self):
        return f"Fan(rank {self.lattice_rank}, {len(self.rays)} rays, {len(self.max_cones)} max cones)"

    def cone_rays(self, cone):
        return [self.rays[i] for i in sorted(cone)]

    def is_simplicial(self):
        for c in self.max_cones:
            rays = self.cone_rays(c)
            if len(rays) != rank_fraction([list(r) for r in rays]):
                return False
        return True

    def cone_multiplicity(self, cone):
        """|det| of the ray matrix of a full-dimensional simplicial cone."""
        from .linalg import det

        rays = self.cone_rays(cone)
        assert len(rays) == self.lattice_rank, "multiplicity needs a simplicial full cone"
        return abs(det([list(r) for r in rays]))

    def cone_contains(self, cone, v):
        """Exact membership of vector v in the cone (Caratheodory over ray
        subsets; cones here have at most a handful of rays)."""
        rays = self.cone_rays(cone)
        d = self.lattice_rank
        vf = [Fraction(x) for x in v]
        if all(x == 0 for x in vf):
            return True
        for k in range(1, min(len(rays), d) + 1):
            for sub in combinations(rays, k):
                cols = [[Fraction(sub[i][j]) for i in range(k)] for j in range(d)]
                x = solve_fraction(cols, vf)
                if x is None or any(c < 0 for c in x):
                    continue
                chk = [sum(cols[j][i] * x[i] for i in range(k)) for j in range(d)]
                if chk == vf:
                    return True
        return False

    def is_complete_sampled(self, ndirs=1000, seed=0):
        """Sampled completeness: ndirs random rational directions must each
        lie in some maximal cone."""
        import random

        rng = random.Random(seed)
        for _ in range(ndirs):
            v = tuple(rng.randint(-50, 50) for _ in range(self.lattice_rank))
            if all(x == 0 for x in v):
                continue
            if not any(self.cone_contains(c, v) for c in self.max_cones):
                return False
        return True


def normal_fan(P):
    """Inner-normal fan of a full-dimensional polytope: one maximal cone per
    vertex, rays the primitive inner facet normals."""
    d = P.dim()
    if d != P.ambient_dim:
        raise PolytopeError(
            f"normal fan needs a full-dimensional polytope (dim {d} in ambient {P.ambient_dim})"
        )
    facets = P.facets()
    rays = [n for n, _ in facets]
    cones = []
    for v in P.vertices():
        active = frozenset(
            i for i, (n, o) in enumerate(facets) if _dot(v, n) == -o
        )
        cones.append(active)
    return Fan(P.ambient_dim, rays, cones)


def fan_isomorphism(F1, F2):
    """Search for a unimodular map U with U(rays of F1) = rays of F2 matching
    max-cone structure; returns U (row-matrix acting on columns) or None."""
    from .linalg import det as _det

    if (
        F1.lattice_rank != F2.lattice_rank
        or len(F1.rays) != len(F2.rays)
        or len(F1.max_cones) != len(F2.max_cones)
    ):
        return None
    d = F1.lattice_rank
    # invariant: multiset of cone memberships per ray
    def profile(F):
        return [
            sorted(len(c) for c in F.max_cones if i in c) for i in range(len(F.rays))
        ]

    prof1, prof2 = profile(F1), profile(F2)

    # choose d independent rays of F1 as anchor
    anchor = None
    for sub in combinations(range(len(F1.rays)), d):
        if rank_fraction([list(F1.rays[i]) for i in sub]) == d:
            anchor = sub
            break
    if anchor is None:
        return None
    cands = [
        [j for j in range(len(F2.rays)) if prof2[j] == prof1[i]] for i in anchor
    ]
    A = [list(F1.rays[i]) for i in anchor]  # rows
    for img in product(*cands):
        if len(set(img)) != d:
            continue
        B = [list(F2.rays[j]) for j in img]
        # U * a_i^T = b_i^T  =>  U = B^T * (A^T)^{-1}; solve columnwise
        U = _solve_matrix(A, B)
        if U is None:
            continue
        if abs(_det(U)) != 1:
            continue
        ray_map = {}
        ok = True
        for i, r in enumerate(F1.rays):
            im = tuple(sum(U[a][b] * r[b] for b in range(d)) for a in range(d))
            if im in F2.rays:
                ray_map[i] = F2.rays.index(im)
            else:
                ok = False
                break
        if not ok or len(set(ray_map.values())) != len(F1.rays):
            continue
        cones_img = {frozenset(ray_map[i] for i in c) for c in F1.max_cones}
        if cones_img == set(F2.max_cones):
            return U
    return None


def _solve_matrix(A, B):
    """Integer matrix U with U * A[i] = B[i] for all rows; None if it does
    not exist or is not integral."""
    d = len(A)
    U = []
    for coord in range(d):
        # row u of U: u . A[i]^T = B[i][coord]
        rows = [list(a) for a in A]
        rhs = [Fraction(B[i][coord]) for i in range(d)]
        x = solve_fraction(rows, rhs)
        if x is None or any(v.denominator != 1 for v in x):
            return None
        U.append([int(v) for v in x])
    return U


# --- text format ----------------------------------------------------------


def format_polytope(P):
    """Text format: one facet per line 'n1 n2 ... ; offset', vertices as
    'v x1 ... xn' lines; exact rationals as p/q."""
    lines = []
    for n, o in P.hrep:
        lines.append(" ".join(str(c) for c in n) + " ; " + _fmt_q(o))
    for n, r in P.eqs:
        lines.append("= " + " ".join(str(c) for c in n) + " ; " + _fmt_q(r))
    for v in P.vertices():
        lines.append("v " + " ".join(_fmt_q(x) for x in v))
    return "\n".join(lines) + "\n"


def parse_polytope(text):
    hrep, eqs, verts = [], [], []
    dim = None
    for raw in text.strip().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if line.startswith("v "):
            v = [Fraction(tok) for tok in line[2:].split()]
            dim = len(v)
            verts.append(tuple(v))
        elif line.startswith("= "):
            head, off = line[2:].split(";")
            n = [int(tok) for tok in head.split()]
            eqs.append((tuple(n), Fraction(off.strip())))
            dim = len(n)
        else:
            head, off = line.split(";")
            n = [int(tok) for tok in head.split()]
            hrep.append((tuple(n), Fraction(off.strip())))
            dim = len(n)
    if dim is None:
        raise PolytopeError("empty polytope description")
    return RationalPolytope(dim, hrep=hrep, eqs=eqs, vrep=verts or None)


def _fmt_q(x):
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
