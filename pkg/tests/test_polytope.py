from fractions import Fraction

import pytest

from scrolls.polytope import (
    Fan,
    PolytopeError,
    RationalPolytope,
    area_2d,
    convex_hull,
    fan_isomorphism,
    format_polytope,
    is_normal_up_to,
    minkowski_sum,
    mixed_area,
    normal_fan,
    parse_polytope,
)


def unit_square():
    return convex_hull([(0, 0), (1, 0), (0, 1), (1, 1)])


def test_segment_lattice_points():
    P = convex_hull([(0,), (1,)])
    assert P.lattice_points() == [(0,), (1,)]


def test_hull_triangle():
    P = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert len(P.facets()) == 3
    assert P.dim() == 2
    assert sorted(P.vertices()) == [(0, 0), (0, 1), (1, 0)]


def test_hull_interior_points_dropped():
    P = convex_hull([(0, 0), (2, 0), (0, 2), (1, 1), (0, 1)])
    assert sorted(P.vertices()) == [(0, 0), (0, 2), (2, 0)]


def test_lower_dimensional_hull():
    P = convex_hull([(0, 0, 0), (1, 1, 0), (2, 2, 0)])
    assert P.dim() == 1
    assert sorted(P.vertices()) == [(0, 0, 0), (2, 2, 0)]
    assert len(P.lattice_points()) == 3


def test_unbounded_rejected():
    with pytest.raises(PolytopeError):
        RationalPolytope.from_hrep([((1, 0), Fraction(0)), ((0, 1), Fraction(0))], 2)


def test_dilate_and_integral():
    P = convex_hull([(0, 0), (1, 0), (0, Fraction(1, 2))])
    assert not P.is_integral()
    assert P.dilate(2).is_integral()
    assert len(P.dilate(2).lattice_points()) == 4


def test_ehrhart_interpolation_on_corpus():
    # counts of k*P agree with the Ehrhart polynomial interpolated from
    # k = 0..dim at dim+1 and dim+2
    for pts in [
        [(0, 0), (1, 0), (0, 1)],
        [(0, 0), (2, 0), (0, 1), (2, 1)],
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)],
    ]:
        P = convex_hull(pts)
        d = P.dim()
        counts = [1] + [len(P.dilate(k).lattice_points()) for k in range(1, d + 3)]

        def interp(k):
            # Lagrange through points 0..d
            total = Fraction(0)
            for i in range(d + 1):
                li = Fraction(1)
                for j in range(d + 1):
                    if i != j:
                        li *= Fraction(k - j, i - j)
                total += counts[i] * li
            return total

        for k in (d + 1, d + 2):
            assert interp(k) == counts[k]


def test_normal_fan_square_is_p1xp1():
    F = normal_fan(unit_square())
    assert len(F.max_cones) == 4
    assert sorted(F.rays) == [(-1, 0), (0, -1), (0, 1), (1, 0)]
    assert F.is_simplicial()
    assert F.is_complete_sampled(300, seed=0)


def test_normal_fan_rejects_lower_dim():
    P = convex_hull([(0, 0), (1, 1)])
    with pytest.raises(PolytopeError):
        normal_fan(P)


def test_normality_simplex():
    P = convex_hull([(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)])
    assert is_normal_up_to(P, 3)


def test_minkowski_and_mixed_area():
    S = unit_square()
    T = convex_hull([(0, 0), (1, 0), (0, 1)])
    assert area_2d(S) == 1
    assert area_2d(minkowski_sum(S, S)) == 4
    # P1xP1 intersection numbers: (1,0).(0,1) = 1
    H = convex_hull([(0, 0), (1, 0)])
    V = convex_hull([(0, 0), (0, 1)])
    assert mixed_area(H, V) == 1
    assert mixed_area(H, H) == 0
    assert mixed_area(S, S) == 2  # (1,1)^2 on P1xP1


def test_fan_isomorphism_relabel():
    F1 = normal_fan(unit_square())
    # same fan with swapped coordinates
    F2 = Fan(2, [(r[1], r[0]) for r in F1.rays], F1.max_cones)
    U = fan_isomorphism(F1, F2)
    assert U is not None
    F3 = Fan(2, [(1, 0), (0, 1), (-1, -1)], [{0, 1}, {1, 2}, {0, 2}])  # P2 fan
    assert fan_isomorphism(F1, F3) is None


def test_text_roundtrip():
    P = convex_hull([(0, 0), (1, 0), (0, Fraction(1, 2))])
    Q = parse_polytope(format_polytope(P))
    assert sorted(Q.vertices()) == sorted(P.vertices())
    assert Q.lattice_points() == P.lattice_points()


def test_hrep_vrep_mutual_containment():
    P = convex_hull([(0, 0, 0), (2, 0, 0), (0, 3, 0), (0, 0, 1), (1, 1, 1)])
    d = P.dim()
    for v in P.vertices():
        active = [n for n, o in P.facets() if sum(a * b for a, b in zip(v, n)) == -o]
        from scrolls.linalg import rank_fraction

        assert rank_fraction([list(a) for a in active]) == d
