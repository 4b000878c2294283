"""Span dimension, convex hull analysis, and the null space of the
class-to-flag-vector map.

Points live in the p(n)-dimensional partition coordinate space; because the
all-ones partition coordinate is constantly 1 on single graphs, hulls are
analysed inside their affine hull.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import SizeLimitError
from .exactlin import RationalMatrix, lp_feasible
from .flagvectors import concise_flag_vector
from .graphs import (
    Graph,
    OptionalGraph,
    bit_indices,
    canonical_optional,
    enumerate_graphs,
    expand,
    pair_order,
)
from .partitions import enumerate_partitions
from .vectors import ConciseVector

MAX_ANALYSIS_N = 6
MAX_FACET_POINTS = 40
MAX_FACET_DIM = 11

FacetInequality = tuple[tuple[int, ...], int]  # coefficients, offset


@lru_cache(maxsize=None)
def class_concise_points(n: int) -> tuple[tuple[Graph, tuple[int, ...]], ...]:
    """Every isomorphism class with its concise vector as integer coordinates
    in canonical partition order."""
    parts = enumerate_partitions(n)
    out = []
    for g in enumerate_graphs(n):
        vec = concise_flag_vector(g)
        out.append((g, tuple(vec.coefficient(p) for p in parts)))
    return tuple(out)


def span_dimension(n: int) -> int:
    """Rank of the matrix of concise flag vectors over all n-vertex classes."""
    if not 0 <= n <= MAX_ANALYSIS_N:
        raise SizeLimitError(
            f"span_dimension supports 0 <= n <= {MAX_ANALYSIS_N}, got n={n}"
        )
    return RationalMatrix([coords for _, coords in class_concise_points(n)]).rank()


# ---------------------------------------------------------------------------
# hull reports

@dataclass(frozen=True, eq=False)
class HullReport:
    """Vertex flags (and optionally facets) for the hull of class points."""

    n: int
    points: dict
    vertex_flags: dict
    facets: tuple[FacetInequality, ...] | None = None

    @property
    def class_count(self) -> int:
        return len(self.points)

    @property
    def distinct_point_count(self) -> int:
        return len({v.items() for v in self.points.values()})

    @property
    def all_distinct(self) -> bool:
        return self.distinct_point_count == self.class_count

    @property
    def all_vertices(self) -> bool:
        return all(self.vertex_flags.values())

    def to_text_lines(self) -> list[str]:
        return [
            f"{g.serialize()} {'vertex' if self.vertex_flags[g] else 'interior'}"
            for g in self.points
        ]

    def to_json_dict(self) -> dict:
        out = {
            "n": self.n,
            "class_count": self.class_count,
            "distinct_points": self.distinct_point_count,
            "all_distinct": self.all_distinct,
            "all_vertices": self.all_vertices,
            "points": [
                {
                    "graph": g.serialize(),
                    "vertex": self.vertex_flags[g],
                    "coefficients": [
                        {"partition": list(p.parts), "coefficient": c}
                        for p, c in vec.items()
                    ],
                }
                for g, vec in self.points.items()
            ],
        }
        if self.facets is not None:
            out["facets"] = [
                {"coefficients": list(coeffs), "offset": offset}
                for coeffs, offset in self.facets
            ]
        return out


def _in_convex_hull(target: tuple, others: list[tuple]) -> bool:
    if not others:
        return False
    rows = [[Fraction(o[i]) for o in others] for i in range(len(target))]
    rows.append([Fraction(1)] * len(others))  # convex weights sum to one
    rhs = [Fraction(x) for x in target] + [Fraction(1)]
    return lp_feasible(RationalMatrix(rows), rhs).feasible


def hull_report(n: int, include_facets: bool = False) -> HullReport:
    """Exact LP vertex test for every class point; facets on request.

    A point is a vertex iff the convex-combination system over the other
    distinct points is infeasible.  Duplicated points (if any) share a
    verdict; distinctness is reported alongside.
    """
    if not 0 <= n <= MAX_ANALYSIS_N:
        raise SizeLimitError(
            f"hull_report supports 0 <= n <= {MAX_ANALYSIS_N}, got n={n}"
        )
    pts = class_concise_points(n)
    unique: list[tuple[int, ...]] = []
    groups: dict[tuple[int, ...], list[Graph]] = {}
    for g, coords in pts:
        if coords not in groups:
            groups[coords] = []
            unique.append(coords)
        groups[coords].append(g)
    if include_facets and len(unique) > MAX_FACET_POINTS:
        # refuse before the per-point LP loop, which dominates at n = 6
        raise SizeLimitError(
            f"hull_facets supports at most {MAX_FACET_POINTS} distinct points, "
            f"got {len(unique)}"
        )
    flags: dict[Graph, bool] = {}
    for coords in unique:
        others = [u for u in unique if u != coords]
        is_vertex = not _in_convex_hull(coords, others)
        for g in groups[coords]:
            flags[g] = is_vertex
    points = {g: concise_flag_vector(g) for g, _ in pts}
    facets = None
    if include_facets:
        facets = hull_facets([coords for _, coords in pts])
    return HullReport(n, points, {g: flags[g] for g in points}, facets)


# ---------------------------------------------------------------------------
# facet enumeration by double description

def _dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def _primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Scale a nonzero rational vector by a positive factor to coprime ints."""
    denom = math.lcm(*(x.denominator for x in vec))
    ints = [int(x * denom) for x in vec]
    g = math.gcd(*ints)
    return tuple(x // g for x in ints)


def _double_description(constraints: list[tuple[Fraction, ...]]) -> list[tuple[int, ...]]:
    """Extreme rays of {x : c . x >= 0 for every c}, assuming the final cone
    is pointed.  Lineality is carried explicitly until constraints remove it.

    Rays are primitive integer vectors paired with bitmasks of the processed
    constraints tight on them; adjacency uses the standard combinatorial test
    on those masks, with the cardinality necessary condition as a fast filter.
    """
    dim = len(constraints[0])
    cons = [_primitive(c) for c in constraints]  # positive scaling keeps the cone
    lineality: list[tuple[Fraction, ...]] = [
        tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)
    ]
    rays: list[tuple[int, ...]] = []
    masks: list[int] = []  # tight-constraint bitmask per ray

    def idot(c: tuple[int, ...], r) -> Fraction | int:
        return sum(x * y for x, y in zip(c, r))

    def tight_mask(vec: tuple[int, ...], upto: int) -> int:
        out = 0
        for t in range(upto):
            if idot(cons[t], vec) == 0:
                out |= 1 << t
        return out

    for idx, c in enumerate(cons):
        line_vals = [idot(c, v) for v in lineality]
        if any(line_vals):
            k = next(i for i, val in enumerate(line_vals) if val)
            u, cu = lineality[k], line_vals[k]
            if cu < 0:
                u, cu = tuple(-x for x in u), -cu
            lineality = [
                tuple(vx - (cv / cu) * ux for vx, ux in zip(v, u))
                for i, (v, cv) in enumerate(zip(lineality, line_vals))
                if i != k
            ]
            vectors = []
            for r in rays:
                cr = idot(c, r)
                r2 = tuple(Fraction(rx) - Fraction(cr, cu) * ux for rx, ux in zip(r, u))
                if any(r2):
                    vectors.append(_primitive(r2))
            vectors.append(_primitive(u))
            rays = vectors
            masks = [tight_mask(r, idx + 1) for r in rays]
        else:
            vals = [idot(c, r) for r in rays]
            if any(v < 0 for v in vals):
                plus = [i for i, v in enumerate(vals) if v > 0]
                zero = [i for i, v in enumerate(vals) if v == 0]
                minus = [i for i, v in enumerate(vals) if v < 0]
                # in the quotient by the remaining lineality, adjacent extreme
                # rays share at least quotient-dim - 2 tight constraints
                need = dim - len(lineality) - 2
                born: dict[tuple[int, ...], None] = {}
                for p in plus:
                    for q in minus:
                        common = masks[p] & masks[q]
                        if common.bit_count() < need:
                            continue
                        if any(
                            r != p and r != q and common & masks[r] == common
                            for r in range(len(rays))
                        ):
                            continue
                        w = tuple(
                            vals[p] * qx - vals[q] * px
                            for px, qx in zip(rays[p], rays[q])
                        )
                        if any(w):
                            born[_primitive(w)] = None
                keep = plus + zero
                survivors = [rays[i] for i in keep]
                new_masks = [
                    masks[i] | (1 << idx) if vals[i] == 0 else masks[i]
                    for i in keep
                ]
                for w in born:
                    if w not in survivors:
                        survivors.append(w)
                        new_masks.append(tight_mask(w, idx + 1))
                rays, masks = survivors, new_masks
            else:
                masks = [
                    mask | (1 << idx) if val == 0 else mask
                    for mask, val in zip(masks, vals)
                ]
    return rays


def _affine_chart(points: list[tuple[Fraction, ...]]):
    """Origin, basis matrix and coordinate map for the affine hull of points.

    Returns (p0, chart) where chart maps ambient x to hull coordinates t via
    t = chart . (x - p0); the chart rows span the difference space, so
    ambient inequality coefficients recovered through it vanish on constant
    coordinates.
    """
    p0 = points[0]
    basis_rows: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for x in points[1:]:
        row = [a - b for a, b in zip(x, p0)]
        for col, brow in zip(pivot_cols, basis_rows):
            if row[col] != 0:
                f = row[col]
                row = [a - f * b for a, b in zip(row, brow)]
        lead = next((j for j, v in enumerate(row) if v != 0), None)
        if lead is None:
            continue
        inv = 1 / row[lead]
        basis_rows.append([v * inv for v in row])
        pivot_cols.append(lead)
    if not basis_rows:
        return p0, None
    b = RationalMatrix(basis_rows)
    gram = b.matmul(b.transpose())
    chart = gram.inverse().matmul(b)
    return p0, chart


def hull_facets(points: Sequence) -> tuple[FacetInequality, ...]:
    """Facets of the convex hull of the points, within their affine hull.

    Accepts ConciseVectors (coordinates in canonical partition order) or raw
    coordinate sequences.  Returns (coefficients, offset) pairs, scaled to
    coprime integers, with coefficients . x + offset >= 0 on every input
    point and equality exactly on each facet.  Coefficients are zero on
    coordinates that are constant across the points.
    """
    coords: list[tuple[Fraction, ...]] = []
    for p in points:
        if isinstance(p, ConciseVector):
            parts = enumerate_partitions(p.n)
            coords.append(tuple(Fraction(p.coefficient(q)) for q in parts))
        else:
            coords.append(tuple(Fraction(x) for x in p))
    seen: dict[tuple[Fraction, ...], None] = {}
    for x in coords:
        seen.setdefault(x, None)
    unique = list(seen)
    if len(unique) > MAX_FACET_POINTS:
        raise SizeLimitError(
            f"hull_facets supports at most {MAX_FACET_POINTS} distinct points, "
            f"got {len(unique)}"
        )
    ambient = len(unique[0]) if unique else 0
    if ambient > MAX_FACET_DIM:
        raise SizeLimitError(
            f"hull_facets supports ambient dimension <= {MAX_FACET_DIM}, "
            f"got {ambient}"
        )
    p0, chart = _affine_chart(unique)
    if chart is None:
        return ()
    ts = [chart.matvec([a - b for a, b in zip(x, p0)]) for x in unique]
    d = chart.rows
    rays = _double_description([(Fraction(1),) + t for t in ts])

    facets: list[FacetInequality] = []
    for ray in rays:
        a = [Fraction(x) for x in ray[1:]]
        amb = [
            sum((a[k] * chart.entry(k, j) for k in range(d)), Fraction(0))
            for j in range(ambient)
        ]
        offset = Fraction(ray[0]) - _dot(amb, p0)
        prim = _primitive(amb + [offset])
        facets.append((prim[:-1], prim[-1]))

    # verify before returning: validity on all points and genuine facet rank
    for coeffs, offset in facets:
        vals = [offset + sum(c * x for c, x in zip(coeffs, pt)) for pt in unique]
        if any(v < 0 for v in vals):
            raise ArithmeticError("facet inequality fails on an input point")
        tight = [pt for pt, v in zip(unique, vals) if v == 0]
        if not tight:
            raise ArithmeticError("facet inequality is tight on no point")
        diffs = [
            [a - b for a, b in zip(pt, tight[0])] for pt in tight[1:]
        ]
        tight_rank = RationalMatrix(diffs).rank() if diffs else 0
        if tight_rank != d - 1:
            raise ArithmeticError("inequality does not support a facet")
    if len(set(facets)) != len(facets):
        raise ArithmeticError("duplicate facet inequalities")
    return tuple(sorted(facets))


# ---------------------------------------------------------------------------
# null space of the class matrix

@dataclass(frozen=True)
class NullspaceReport:
    """Null-space dimensions of the class-to-flag-vector map.

    `spans` records whether expansions of optional-cycle graphs span the
    whole null space at this order; it is a reported finding, not a claim.
    """

    n: int
    class_count: int
    kernel_dim: int
    cycle_span_dim: int
    spans: bool

    def to_text_lines(self) -> list[str]:
        return [
            f"n: {self.n}",
            f"class_count: {self.class_count}",
            f"kernel_dim: {self.kernel_dim}",
            f"cycle_span_dim: {self.cycle_span_dim}",
            f"spans: {str(self.spans).lower()}",
        ]

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "class_count": self.class_count,
            "kernel_dim": self.kernel_dim,
            "cycle_span_dim": self.cycle_span_dim,
            "spans": self.spans,
        }


class _IncrementalRank:
    """Row-echelon accumulator for incremental exact rank."""

    def __init__(self) -> None:
        self._pivots: dict[int, tuple[Fraction, ...]] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, row: Sequence) -> bool:
        work = [Fraction(x) for x in row]
        while True:
            lead = next((j for j, v in enumerate(work) if v != 0), None)
            if lead is None:
                return False
            pivot = self._pivots.get(lead)
            if pivot is None:
                inv = 1 / work[lead]
                self._pivots[lead] = tuple(v * inv for v in work)
                return True
            f = work[lead]
            work = [v - f * p for v, p in zip(work, pivot)]


def _single_cycle_optional_graphs(n: int):
    """Optional-edge graphs whose optional set is one cycle, up to isomorphism,
    with arbitrary regular edges elsewhere."""
    seen: set[OptionalGraph] = set()
    for k in range(3, n + 1):
        cycle = frozenset(
            (min(i, (i + 1) % k), max(i, (i + 1) % k)) for i in range(k)
        )
        others = [p for p in pair_order(n) if p not in cycle]
        for mask in range(1 << len(others)):
            regular = frozenset(others[t] for t in bit_indices(mask))
            og = OptionalGraph(n, regular, cycle)
            can, _ = canonical_optional(og)
            if can in seen:
                continue
            seen.add(can)
            yield og


def nullspace_report(n: int) -> NullspaceReport:
    """Kernel dimension of the class matrix versus the optional-cycle span.

    The kernel holds the formal sums of classes whose flag vector vanishes;
    the cycle span is the space generated by expanding every optional-edge
    graph (up to isomorphism) whose optional set is a single cycle.
    """
    if not 0 <= n <= MAX_ANALYSIS_N:
        raise SizeLimitError(
            f"nullspace_report supports 0 <= n <= {MAX_ANALYSIS_N}, got n={n}"
        )
    pts = class_concise_points(n)
    classes = [g for g, _ in pts]
    index = {g: k for k, g in enumerate(classes)}
    kernel_dim = len(classes) - RationalMatrix([c for _, c in pts]).rank()
    reducer = _IncrementalRank()
    for og in _single_cycle_optional_graphs(n):
        row = [0] * len(classes)
        for term, coeff in expand(og).items():
            row[index[term]] = coeff
        reducer.add(row)
        if reducer.rank == kernel_dim:
            break
    return NullspaceReport(
        n, len(classes), kernel_dim, reducer.rank, reducer.rank == kernel_dim
    )
