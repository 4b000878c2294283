"""The flag vector of a graph in verbose, concise and subgraph forms.

Also the linear maps connecting the forms, the complement transform, the
total over all labelled graphs, basis sums for partitions, anchor words and
the edge-removal word vector.  All inputs may be ordinary graphs,
optional-edge graphs (expanded first) or formal graph sums (extended
linearly).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction
from functools import lru_cache

from .errors import SizeLimitError
from .graphs import (
    Graph,
    GraphSum,
    OptionalGraph,
    bit_indices,
    canonical_form,
    expand,
)
from .partitions import Partition, enumerate_partitions, multinomial
from .shellings import (
    acyclic_shelling_number,
    enumerate_shellings,
    tree_shelling_number,
    verbose_contribution,
)
from .vectors import ConciseVector, EdgeWordVector, VerboseVector

MAX_VERBOSE_N = 8
MAX_SUBSET_EDGES = 22
MAX_SUBGRAPH_N = 7
MAX_TOTAL_N = 20
MAX_BASIS_PART = 9
MAX_EDGE_FLAG_EDGES = 7

GraphLike = Graph | OptionalGraph | GraphSum


def _as_sum(g: GraphLike) -> GraphSum:
    if isinstance(g, GraphSum):
        return g
    if isinstance(g, OptionalGraph):
        return expand(g)
    if isinstance(g, Graph):
        return GraphSum.from_graph(g)
    raise TypeError(f"expected Graph, OptionalGraph or GraphSum, got {g!r}")


def component_scale(size: int) -> int:
    """Ratio of acyclic shellings to 3-vertex shellings for one tree component."""
    if size <= 0:
        raise ValueError(f"component size must be positive, got {size}")
    return 1 if size == 1 else 2 if size == 2 else 4


# ---------------------------------------------------------------------------
# verbose form

_VERBOSE_CACHE: dict[Graph, VerboseVector] = {}


def _verbose_recursive(g: Graph) -> VerboseVector:
    # g must already be canonical; memoised per isomorphism class
    cached = _VERBOSE_CACHE.get(g)
    if cached is not None:
        return cached
    if g.n == 0:
        out = VerboseVector(0, {"": 1})
    else:
        coeffs: dict[str, int] = {}
        for v in range(g.n):
            m = g.degree(v)
            tail = _verbose_recursive(canonical_form(g.remove_vertex(v))[0])
            for w, c in tail.items():
                wa = "a" + w
                coeffs[wa] = coeffs.get(wa, 0) + c
                if m:
                    wb = "b" + w
                    coeffs[wb] = coeffs.get(wb, 0) + c * m
        out = VerboseVector(g.n, coeffs)
    _VERBOSE_CACHE[g] = out
    return out


def _verbose_by_shellings(g: Graph) -> VerboseVector:
    coeffs: dict[str, int] = {}
    for order in enumerate_shellings(g):
        for w, c in verbose_contribution(g, order).items():
            coeffs[w] = coeffs.get(w, 0) + c
    return VerboseVector(g.n, coeffs)


def verbose_flag_vector(g: GraphLike, method: str = "recursion") -> VerboseVector:
    """Word-indexed flag vector of a graph, optional graph or graph sum.

    Two equivalent methods: "recursion" peels one vertex at a time with
    canonical-form memoisation; "shelling_sum" adds the contribution of
    every removal order.
    """
    if method not in ("recursion", "shelling_sum"):
        raise ValueError(f"unknown method {method!r}")
    gs = _as_sum(g)
    if gs.n > MAX_VERBOSE_N:
        raise SizeLimitError(
            f"verbose flag vectors support n <= {MAX_VERBOSE_N}, got n={gs.n}"
        )
    total: dict[str, int] = {}
    for term, coeff in gs.items():
        vec = (
            _verbose_recursive(term)
            if method == "recursion"
            else _verbose_by_shellings(term)
        )
        for w, c in vec.items():
            total[w] = total.get(w, 0) + coeff * c
    return VerboseVector(gs.n, total)


# ---------------------------------------------------------------------------
# concise and subgraph forms

@lru_cache(maxsize=1 << 17)
def _tree_count(edges: frozenset) -> int:
    # shelling number of the forest spanned by `edges`; isolated vertices
    # contribute factor 1, so only the support of the edge set matters
    if not edges:
        return 1
    verts = sorted({v for e in edges for v in e})
    index = {v: k for k, v in enumerate(verts)}
    relabeled = frozenset(
        (min(index[a], index[b]), max(index[a], index[b])) for a, b in edges
    )
    return tree_shelling_number(Graph(len(verts), relabeled))


@lru_cache(maxsize=1 << 17)
def _acyclic_count(n: int, edges: frozenset) -> int:
    return acyclic_shelling_number(Graph(n, edges))


def _component_sizes(n: int, subset: tuple) -> Partition:
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in subset:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb
    sizes: dict[int, int] = {}
    for v in range(n):
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    return Partition.from_sizes(sizes.values())


def _subgraph_sum(g: Graph, weight) -> ConciseVector:
    edges = sorted(g.edges)
    if len(edges) > MAX_SUBSET_EDGES:
        raise SizeLimitError(
            f"spanning-subgraph sums support at most {MAX_SUBSET_EDGES} edges, "
            f"got {len(edges)}"
        )
    coeffs: dict[Partition, int] = {}
    for mask in range(1 << len(edges)):
        subset = tuple(edges[k] for k in bit_indices(mask))
        s = weight(g.n, subset)
        if s == 0:
            continue
        part = _component_sizes(g.n, subset)
        coeffs[part] = coeffs.get(part, 0) + s
    return ConciseVector(g.n, coeffs)


_CONCISE_CACHE: dict[Graph, ConciseVector] = {}
_SUBGRAPH_CACHE: dict[Graph, ConciseVector] = {}


def concise_flag_vector(g: GraphLike) -> ConciseVector:
    """Partition-indexed flag vector.

    Every edge subset H contributes its tree shelling number times the
    partition of component sizes; cyclic subsets contribute nothing.
    """
    gs = _as_sum(g)
    total: dict[Partition, int] = {}
    for term, coeff in gs.items():
        vec = _CONCISE_CACHE.get(term)
        if vec is None:
            vec = _subgraph_sum(term, lambda n, subset: _tree_count(frozenset(subset)))
            _CONCISE_CACHE[term] = vec
        for part, c in vec.items():
            total[part] = total.get(part, 0) + coeff * c
    return ConciseVector(gs.n, total)


def subgraph_flag_vector(g: GraphLike) -> ConciseVector:
    """Partition-indexed flag vector weighted by acyclic shelling numbers.

    Every edge subset H contributes its acyclic shelling number (on the full
    vertex set) times the partition of component sizes.
    """
    gs = _as_sum(g)
    if gs.n > MAX_SUBGRAPH_N:
        raise SizeLimitError(
            f"subgraph flag vectors support n <= {MAX_SUBGRAPH_N}, got n={gs.n}"
        )
    total: dict[Partition, int] = {}
    for term, coeff in gs.items():
        vec = _SUBGRAPH_CACHE.get(term)
        if vec is None:
            vec = _subgraph_sum(
                term, lambda n, subset: _acyclic_count(n, frozenset(subset))
            )
            _SUBGRAPH_CACHE[term] = vec
        for part, c in vec.items():
            total[part] = total.get(part, 0) + coeff * c
    return ConciseVector(gs.n, total)


def scale_subgraph_to_concise(v: ConciseVector) -> ConciseVector:
    """Rescale a subgraph-form vector to the concise form, coordinatewise.

    Each partition coordinate divides by multinomial(n; parts) times the
    product of per-part component scales (1, 2, 4 for sizes 1, 2, >= 3).
    The division must be exact.
    """
    out: dict[Partition, int] = {}
    for part, c in v.items():
        denom = multinomial(v.n, part.parts)
        for m in part.parts:
            denom *= component_scale(m)
        q, r = divmod(c, denom)
        if r:
            raise ValueError(
                f"coefficient {c} of {part} is not divisible by {denom}; "
                "input is not a subgraph-form vector"
            )
        out[part] = q
    return ConciseVector(v.n, out)


# ---------------------------------------------------------------------------
# conversions between verbose and concise

def shuffle(partition: Partition) -> VerboseVector:
    """Sum of all interleavings of the words b^(part-1) a, one per part.

    Parts are treated as distinguishable components, so the total coefficient
    mass equals the multinomial coefficient of the part sizes.
    """
    words = tuple("b" * (m - 1) + "a" for m in partition.parts)
    memo: dict[tuple[int, ...], dict[str, int]] = {}

    def merge(pos: tuple[int, ...]) -> dict[str, int]:
        if all(p == len(w) for p, w in zip(pos, words)):
            return {"": 1}
        got = memo.get(pos)
        if got is not None:
            return got
        out: dict[str, int] = {}
        for k, w in enumerate(words):
            if pos[k] < len(w):
                nxt = merge(pos[:k] + (pos[k] + 1,) + pos[k + 1 :])
                letter = w[pos[k]]
                for suffix, c in nxt.items():
                    key = letter + suffix
                    out[key] = out.get(key, 0) + c
        memo[pos] = out
        return out

    return VerboseVector(partition.n, merge((0,) * len(words)))


def verbose_from_concise(v: ConciseVector) -> VerboseVector:
    """Expand a concise vector into the verbose form.

    Each partition contributes its coefficient times the product of component
    scales times the shuffle of its parts.
    """
    total: dict[str, int] = {}
    for part, c in v.items():
        scale = c
        for m in part.parts:
            scale *= component_scale(m)
        for w, k in shuffle(part).items():
            total[w] = total.get(w, 0) + scale * k
    return VerboseVector(v.n, total)


def anchor_word(partition: Partition) -> str:
    """Lexicographically first word seen by the partition's basis sum.

    Parts in non-decreasing order, each contributing b^(part-1) a.  Distinct
    partitions of n give distinct anchor words.
    """
    return "".join("b" * (m - 1) + "a" for m in sorted(partition.parts))


def concise_from_verbose(v: VerboseVector, check: bool = True) -> ConciseVector:
    """Invert verbose_from_concise using the anchor-word coordinates.

    Ordered by anchor word the system is triangular with nonzero diagonal, so
    the concise coefficients are determined by forward substitution.  With
    check=True the result is re-expanded and compared against every
    coordinate of the input; a mismatch means the input lies outside the span
    of graph flag vectors.
    """
    order = sorted(enumerate_partitions(v.n), key=anchor_word)
    anchors = [anchor_word(p) for p in order]
    rows = []
    for part in order:
        scale = 1
        for m in part.parts:
            scale *= component_scale(m)
        shuf = shuffle(part)
        rows.append([scale * shuf.coefficient(w) for w in anchors])
    coeffs: list[Fraction] = []
    for j in range(len(order)):
        rhs = Fraction(v.coefficient(anchors[j]))
        for i in range(j):
            rhs -= coeffs[i] * rows[i][j]
        coeffs.append(rhs / rows[j][j])
    if any(c.denominator != 1 for c in coeffs):
        raise ValueError(
            "anchor coordinates give non-integral concise coefficients; "
            "input is outside the integral span"
        )
    result = ConciseVector(
        v.n, {p: int(c) for p, c in zip(order, coeffs) if c}
    )
    if check and verbose_from_concise(result) != v:
        raise ValueError(
            "verbose vector is inconsistent with its anchor coordinates; "
            "input is outside the span of graph flag vectors"
        )
    return result


# ---------------------------------------------------------------------------
# complement transform and totals

def complement_transform(v: VerboseVector) -> VerboseVector:
    """Letterwise involution mapping each graph's verbose vector to its
    complement's.

    At right-to-left position i (rightmost letter is i = 1) the letter a
    becomes a + (i-1) b and the letter b becomes -b; the substitution is
    expanded multilinearly.
    """
    n = v.n
    total: dict[str, int] = {}
    for word, coeff in v.items():
        acc = {"": coeff}
        for k, letter in enumerate(word):
            i = n - k
            nxt: dict[str, int] = {}
            for w, c in acc.items():
                if letter == "a":
                    nxt[w + "a"] = nxt.get(w + "a", 0) + c
                    if i > 1:
                        nxt[w + "b"] = nxt.get(w + "b", 0) + c * (i - 1)
                else:
                    nxt[w + "b"] = nxt.get(w + "b", 0) - c
            acc = nxt
        for w, c in acc.items():
            total[w] = total.get(w, 0) + c
    return VerboseVector(n, total)


def total_word_coefficient(n: int, word: str) -> int:
    """One word's coefficient summed over all 2^(n choose 2) labelled graphs.

    Closed form: n! times a per-letter factor at right-to-left position i,
    namely 2^(i-1) for a and (i-1) 2^(i-2) for b.
    """
    if len(word) != n or any(ch not in "ab" for ch in word):
        raise ValueError(f"word {word!r} must have length {n} over letters a,b")
    out = math.factorial(n)
    for k, letter in enumerate(word):
        i = n - k
        if letter == "a":
            out *= 2 ** (i - 1)
        else:
            out *= 0 if i == 1 else (i - 1) * 2 ** (i - 2)
    return out


def total_flag_vector(n: int) -> VerboseVector:
    """Sum of the verbose flag vectors of all labelled graphs on n vertices."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n > MAX_TOTAL_N:
        raise SizeLimitError(
            f"total_flag_vector supports n <= {MAX_TOTAL_N}, got n={n}"
        )
    coeffs: dict[str, int] = {}
    for letters in itertools.product("ab", repeat=n):
        w = "".join(letters)
        c = total_word_coefficient(n, w)
        if c:
            coeffs[w] = c
    return VerboseVector(n, coeffs)


# ---------------------------------------------------------------------------
# basis sums for partitions

def optional_path(m: int) -> OptionalGraph:
    """Path on m vertices with every edge optional."""
    if m < 0:
        raise ValueError(f"m must be nonnegative, got {m}")
    return OptionalGraph(m, frozenset(), frozenset((i, i + 1) for i in range(m - 1)))


def optional_tripod(m: int) -> OptionalGraph:
    """Tree on m >= 3 vertices with all edges optional: a central vertex with
    two single-edge arms and one arm of m-3 edges.  For m = 3 this is the
    3-vertex path."""
    if m < 3:
        raise ValueError(f"tripod needs at least 3 vertices, got {m}")
    edges = {(0, 1), (0, 2)}
    if m > 3:
        edges.add((0, 3))
        edges.update((i, i + 1) for i in range(3, m - 1))
    return OptionalGraph(m, frozenset(), frozenset(edges))


def basis_graph(partition: Partition) -> GraphSum:
    """Pre-expanded formal sum whose concise flag vector is the partition.

    Parts of size 1 or 2 use the optional path alone; parts of size >= 3 use
    twice the optional path minus the optional tripod.  Parts combine by
    disjoint union, distributed over the sums.
    """
    if partition.parts and max(partition.parts) > MAX_BASIS_PART:
        raise SizeLimitError(
            f"basis_graph supports parts <= {MAX_BASIS_PART}, "
            f"got {max(partition.parts)}"
        )
    out = GraphSum.from_graph(Graph(0, frozenset()))
    for m in partition.parts:
        arm = expand(optional_path(m))
        if m >= 3:
            arm = 2 * arm - expand(optional_tripod(m))
        out = out.disjoint_union(arm)
    return out


# ---------------------------------------------------------------------------
# edge words

def edge_flag_vector(g: Graph) -> EdgeWordVector:
    """Sum over all edge removal orders of the per-step letter expansion.

    Removing an edge whose endpoint multiplicities (with the edge still
    counted) are lo <= hi contributes the factor
    a + (lo - 1) b + (hi - lo) c.
    """
    edges = sorted(g.edges)
    if len(edges) > MAX_EDGE_FLAG_EDGES:
        raise SizeLimitError(
            f"edge_flag_vector supports at most {MAX_EDGE_FLAG_EDGES} edges, "
            f"got {len(edges)}"
        )
    base_deg = [g.degree(v) for v in range(g.n)]
    total: dict[str, int] = {}
    for order in itertools.permutations(edges):
        deg = list(base_deg)
        acc = {"": 1}
        for u, w in order:
            lo, hi = sorted((deg[u], deg[w]))
            nxt: dict[str, int] = {}
            for word, c in acc.items():
                nxt[word + "a"] = c
                if lo > 1:
                    nxt[word + "b"] = c * (lo - 1)
                if hi > lo:
                    nxt[word + "c"] = c * (hi - lo)
            acc = nxt
            deg[u] -= 1
            deg[w] -= 1
        for word, c in acc.items():
            total[word] = total.get(word, 0) + c
    return EdgeWordVector(len(edges), total)
