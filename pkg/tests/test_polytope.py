import math

import pytest

from graphflag import (
    GraphSum,
    RationalMatrix,
    SizeLimitError,
    concise_flag_vector,
    enumerate_graphs,
    enumerate_partitions,
    hull_facets,
    hull_report,
    kernel_basis,
    nullspace_report,
    span_dimension,
    verbose_flag_vector,
)


# ---------------------------------------------------------------------------
# span dimension

def test_span_dimension_equals_partition_count():
    for n, p in enumerate([1, 1, 2, 3, 5, 7, 11]):
        assert span_dimension(n) == p


def test_span_size_limit():
    with pytest.raises(SizeLimitError):
        span_dimension(7)


# ---------------------------------------------------------------------------
# hull vertices

def test_hull_n4_all_distinct_vertices():
    report = hull_report(4)
    assert report.class_count == 11
    assert report.all_distinct
    assert report.all_vertices


@pytest.mark.parametrize("n,count", [(2, 2), (3, 4)])
def test_hull_small_orders(n, count):
    report = hull_report(n)
    assert report.class_count == count
    assert report.all_distinct and report.all_vertices


def test_hull_n5_report_is_consistent():
    report = hull_report(5)
    assert report.class_count == 34
    assert set(report.vertex_flags) == set(report.points)
    # flags are per point: duplicated coordinates must share a verdict
    by_coords = {}
    for g, vec in report.points.items():
        by_coords.setdefault(vec.items(), set()).add(report.vertex_flags[g])
    assert all(len(v) == 1 for v in by_coords.values())


# ---------------------------------------------------------------------------
# facets

def test_square_facets():
    facets = hull_facets([(0, 0), (1, 0), (0, 1), (1, 1)])
    assert set(facets) == {
        ((1, 0), 0),
        ((0, 1), 0),
        ((-1, 0), 1),
        ((0, -1), 1),
    }


def test_collinear_points_give_two_endpoint_facets():
    facets = hull_facets([(0, 0), (1, 1), (2, 2)])
    assert set(facets) == {((1, 1), 0), ((-1, -1), 4)}


def test_single_point_has_no_facets():
    assert hull_facets([(3, 4), (3, 4)]) == ()


def test_three_vertex_hull_facets_frozen():
    report = hull_report(3, include_facets=True)
    assert set(report.facets) == {
        ((0, 0, 1), 0),
        ((0, 1, -1), 0),
        ((0, -1, 1), 1),
        ((0, -2, 1), 3),
    }


def test_four_vertex_facet_regression_and_validity():
    report = hull_report(4, include_facets=True)
    # facet count recorded after the first verified run
    assert len(report.facets) == 20
    parts = enumerate_partitions(4)
    points = [
        tuple(vec.coefficient(p) for p in parts) for vec in report.points.values()
    ]
    dim = 4  # eleven distinct points span a 4-dimensional affine hull
    for coeffs, offset in report.facets:
        values = [offset + sum(c * x for c, x in zip(coeffs, pt)) for pt in points]
        assert all(v >= 0 for v in values)
        tight = [pt for pt, v in zip(points, values) if v == 0]
        diffs = [
            [a - b for a, b in zip(pt, tight[0])] for pt in tight[1:]
        ]
        tight_rank = RationalMatrix(diffs).rank() if diffs else 0
        assert tight_rank == dim - 1
        assert math.gcd(*coeffs, offset) == 1


@pytest.mark.parametrize("n", [3, 4])
def test_vertices_lie_on_enough_facets(n):
    # cross-route check: every LP vertex must be tight on >= dim facets
    report = hull_report(n, include_facets=True)
    parts = enumerate_partitions(n)
    dim = span_dimension(n) - 1
    for g, vec in report.points.items():
        if not report.vertex_flags[g]:
            continue
        pt = tuple(vec.coefficient(p) for p in parts)
        tight = sum(
            1
            for coeffs, offset in report.facets
            if offset + sum(c * x for c, x in zip(coeffs, pt)) == 0
        )
        assert tight >= dim


def _facet_tight_sets_oracle(points):
    """Brute force facet enumeration, reported as tight point sets.

    Scans every affinely independent point subset spanning a candidate
    hyperplane inside the affine hull; keeps one-sided hyperplanes whose
    tight set has facet rank.  A facet is determined by its tight set, so
    this representation compares across normal conventions.
    """
    import itertools
    from fractions import Fraction

    pts = [tuple(Fraction(x) for x in p) for p in dict.fromkeys(points)]
    ambient = len(pts[0])
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    d = RationalMatrix(diffs).rank()
    found = set()
    for subset in itertools.combinations(range(len(pts)), d):
        base = pts[subset[0]]
        rows = [[a - b for a, b in zip(pts[i], base)] for i in subset[1:]]
        if rows and RationalMatrix(rows).rank() != d - 1:
            continue
        padded = rows + [[Fraction(0)] * ambient]
        for normal in RationalMatrix(padded).kernel_basis():
            if all(
                sum(n * h for n, h in zip(normal, row)) == 0 for row in diffs
            ):
                continue  # orthogonal to the whole affine hull
            values = [
                sum(n * (x - b) for n, x, b in zip(normal, p, base)) for p in pts
            ]
            if all(v >= 0 for v in values) or all(v <= 0 for v in values):
                tight = [p for p, v in zip(pts, values) if v == 0]
                tdiffs = [[a - b for a, b in zip(p, tight[0])] for p in tight[1:]]
                trank = RationalMatrix(tdiffs).rank() if tdiffs else 0
                if trank == d - 1:
                    found.add(frozenset(tight))
    return found


def _facet_tight_sets(points, facets):
    pts = list(dict.fromkeys(tuple(x for x in p) for p in points))
    out = set()
    for coeffs, offset in facets:
        out.add(
            frozenset(
                p
                for p in pts
                if offset + sum(c * x for c, x in zip(coeffs, p)) == 0
            )
        )
    return out


@pytest.mark.parametrize(
    "points",
    [
        [(0, 0), (1, 0), (0, 1), (1, 1)],
        [(0, 0), (1, 1), (2, 2)],
        [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1)],
    ],
)
def test_facets_match_subset_scanning_oracle(points):
    facets = hull_facets(points)
    assert _facet_tight_sets(points, facets) == _facet_tight_sets_oracle(points)
    assert len(facets) == len(_facet_tight_sets_oracle(points))


@pytest.mark.parametrize("n", [3, 4])
def test_class_point_facets_match_oracle(n):
    from graphflag import class_concise_points

    points = [coords for _, coords in class_concise_points(n)]
    facets = hull_facets(points)
    assert _facet_tight_sets(points, facets) == _facet_tight_sets_oracle(points)


def test_n5_facet_count_regression():
    report = hull_report(5, include_facets=True)
    assert len(report.facets) == 552


def test_facet_size_limits():
    with pytest.raises(SizeLimitError):
        hull_facets([(i, i * i) for i in range(41)])
    with pytest.raises(SizeLimitError):
        hull_facets([tuple(range(12)), tuple(range(1, 13))])
    with pytest.raises(SizeLimitError):
        hull_report(6, include_facets=True)


# ---------------------------------------------------------------------------
# null space

def test_nullspace_n3():
    report = nullspace_report(3)
    assert report.class_count == 4
    assert report.kernel_dim == 1
    assert report.cycle_span_dim == 1
    assert report.spans


def test_nullspace_n4_finding():
    report = nullspace_report(4)
    assert report.kernel_dim == 6
    assert 0 <= report.cycle_span_dim <= report.kernel_dim
    assert report.spans == (report.cycle_span_dim == report.kernel_dim)


def test_nullspace_n2_vacuous():
    report = nullspace_report(2)
    assert report.kernel_dim == 0
    assert report.cycle_span_dim == 0
    assert report.spans


def test_kernel_dimension_arithmetic():
    for n in range(5):
        report = nullspace_report(n)
        from graphflag import partition_count

        assert report.kernel_dim == report.class_count - partition_count(n)


def test_kernel_vectors_give_zero_flag_vectors():
    for n in (3, 4):
        classes = enumerate_graphs(n)
        parts = enumerate_partitions(n)
        matrix = RationalMatrix(
            [
                [concise_flag_vector(g).coefficient(p) for g in classes]
                for p in parts
            ]
        )
        basis = kernel_basis(matrix)
        assert len(basis) == nullspace_report(n).kernel_dim
        for vec in basis:
            scale = math.lcm(*(c.denominator for c in vec))
            gs = GraphSum(n, {g: int(c * scale) for g, c in zip(classes, vec)})
            assert concise_flag_vector(gs).is_zero
            assert verbose_flag_vector(gs).is_zero
