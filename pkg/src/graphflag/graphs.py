"""Labelled graphs, optional-edge graphs, canonical forms and formal sums.

Vertices are the integers 0..n-1.  Edges are unordered pairs stored as
sorted tuples (i, j) with i < j.  The fixed pair order is lexicographic:
(0,1), (0,2), ..., (0,n-1), (1,2), ..., and the serialised canonical form
is "n:bitstring" with one bit per pair in that order.

Canonical forms are found by exhaustive search over all n! relabellings
(vectorised with numpy, but still the plain exhaustive search), taking the
lexicographically least adjacency bitstring.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

import numpy as np

from .errors import GraphParseError, SizeLimitError
from .partitions import Partition

Edge = tuple[int, int]

MAX_CANONICAL_N = 10          # exhaustive n! relabelling search
MAX_OPTIONAL_CANONICAL_N = 9  # base-3 packed keys must fit in int64
MAX_ENUMERATE_N = 7
MAX_EXPAND_OPTIONAL = 20

_PERM_CHUNK = 40320  # cap on the relabelling work array for n >= 9


def bit_indices(mask: int) -> Iterator[int]:
    """Indices of the set bits of a nonnegative integer, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@lru_cache(maxsize=None)
def pair_order(n: int) -> tuple[Edge, ...]:
    """All vertex pairs (i, j) with i < j, in the fixed lexicographic order."""
    return tuple((i, j) for i in range(n) for j in range(i + 1, n))


def _check_edges(n: int, edges: frozenset) -> None:
    for e in edges:
        if (
            not isinstance(e, tuple)
            or len(e) != 2
            or not all(isinstance(v, int) for v in e)
        ):
            raise ValueError(f"edge {e!r} is not a pair of ints")
        i, j = e
        if not (0 <= i < j < n):
            raise ValueError(f"edge {e!r} out of range for n={n}")


@dataclass(frozen=True)
class Graph:
    """An ordinary graph: a vertex count and a set of unordered edges."""

    n: int
    edges: frozenset

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative int, got {self.n!r}")
        if not isinstance(self.edges, frozenset):
            object.__setattr__(self, "edges", frozenset(self.edges))
        _check_edges(self.n, self.edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable = ()) -> "Graph":
        """Build from an iterable of pairs, normalising each to (min, max)."""
        norm = frozenset((min(int(a), int(b)), max(int(a), int(b))) for a, b in edges)
        return cls(n, norm)

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbor_masks(self) -> tuple[int, ...]:
        """Per-vertex adjacency as bitmasks over vertex indices."""
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i] |= 1 << j
            masks[j] |= 1 << i
        return tuple(masks)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.uint8)
        for i, j in self.edges:
            a[i, j] = a[j, i] = 1
        return a

    def remove_vertex(self, v: int) -> "Graph":
        """Delete vertex v and its edges, relabelling higher vertices down."""
        if not 0 <= v < self.n:
            raise ValueError(f"no vertex {v} in a graph on {self.n} vertices")

        def shift(u: int) -> int:
            return u - 1 if u > v else u

        edges = frozenset(
            (shift(i), shift(j)) for i, j in self.edges if v not in (i, j)
        )
        return Graph(self.n - 1, edges)

    def relabel(self, perm: tuple[int, ...]) -> "Graph":
        """Apply a vertex relabelling, perm[old] = new."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError(f"{perm!r} is not a permutation of 0..{self.n - 1}")
        edges = frozenset(
            (min(perm[i], perm[j]), max(perm[i], perm[j])) for i, j in self.edges
        )
        return Graph(self.n, edges)

    def disjoint_union(self, other: "Graph") -> "Graph":
        shifted = frozenset((i + self.n, j + self.n) for i, j in other.edges)
        return Graph(self.n + other.n, self.edges | shifted)

    def bitstring(self) -> str:
        return "".join(
            "1" if pair in self.edges else "0" for pair in pair_order(self.n)
        )

    @classmethod
    def from_bitstring(cls, n: int, bits: str) -> "Graph":
        pairs = pair_order(n)
        if len(bits) != len(pairs) or any(ch not in "01" for ch in bits):
            raise ValueError(f"bitstring {bits!r} does not fit n={n}")
        return cls(n, frozenset(p for p, ch in zip(pairs, bits) if ch == "1"))

    def serialize(self) -> str:
        """Stable "n:bitstring" form over the fixed pair order."""
        return f"{self.n}:{self.bitstring()}"

    def to_text(self) -> str:
        """Edge-list form in the input grammar, e.g. "3:0-1,1-2"."""
        body = ",".join(f"{i}-{j}" for i, j in sorted(self.edges))
        return f"{self.n}:{body}"

    def __str__(self) -> str:
        return self.to_text()


@dataclass(frozen=True)
class OptionalGraph:
    """A graph with a disjoint set of optional (two-valued choice) edges."""

    n: int
    regular: frozenset
    optional: frozenset

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise ValueError(f"vertex count must be a nonnegative int, got {self.n!r}")
        for name in ("regular", "optional"):
            if not isinstance(getattr(self, name), frozenset):
                object.__setattr__(self, name, frozenset(getattr(self, name)))
        _check_edges(self.n, self.regular)
        _check_edges(self.n, self.optional)
        overlap = self.regular & self.optional
        if overlap:
            raise ValueError(f"edges {sorted(overlap)} are both regular and optional")

    @classmethod
    def from_graph(cls, g: Graph) -> "OptionalGraph":
        return cls(g.n, g.edges, frozenset())

    @property
    def is_ordinary(self) -> bool:
        return not self.optional

    def as_graph(self) -> Graph:
        if self.optional:
            raise ValueError("graph has optional edges; expand it first")
        return Graph(self.n, self.regular)

    def relabel(self, perm: tuple[int, ...]) -> "OptionalGraph":
        reg = Graph(self.n, self.regular).relabel(perm).edges
        opt = Graph(self.n, self.optional).relabel(perm).edges
        return OptionalGraph(self.n, reg, opt)

    def to_text(self) -> str:
        toks = [f"{i}-{j}" for i, j in sorted(self.regular)]
        toks += [f"?{i}-{j}" for i, j in sorted(self.optional)]
        return f"{self.n}:" + ",".join(toks)

    def __str__(self) -> str:
        return self.to_text()


def parse_graph(text: str) -> OptionalGraph:
    """Parse `n ":" edge ("," edge)*` where edge is `["?"] i "-" j`.

    A leading "?" marks an optional edge; `n ":"` alone is the edgeless
    graph.  Rejects self-loops, out-of-range indices and duplicate pairs
    (including a pair listed both regular and optional), reporting the
    character position of the offending token.
    """
    colon = text.find(":")
    if colon < 0:
        raise GraphParseError(f"missing ':' in graph text {text!r}")
    head = text[:colon].strip()
    if not head.isdigit():
        raise GraphParseError(f"bad vertex count {head!r} at position 0")
    n = int(head)

    regular: set[Edge] = set()
    optional: set[Edge] = set()
    rest = text[colon + 1 :]
    if rest.strip():
        pos = colon + 1
        for token in rest.split(","):
            start = pos
            pos += len(token) + 1
            tok = token.strip()
            at = start + token.find(tok) if tok else start
            if not tok:
                raise GraphParseError(f"empty edge at position {start}")
            is_opt = tok.startswith("?")
            body = tok[1:] if is_opt else tok
            left, dash, right = body.partition("-")
            if not dash or not left.strip().isdigit() or not right.strip().isdigit():
                raise GraphParseError(f"bad edge {tok!r} at position {at}")
            i, j = int(left), int(right)
            if i == j:
                raise GraphParseError(f"self-loop {tok!r} at position {at}")
            if not (0 <= i < n and 0 <= j < n):
                raise GraphParseError(
                    f"vertex out of range in {tok!r} at position {at} (n={n})"
                )
            pair = (min(i, j), max(i, j))
            if pair in regular or pair in optional:
                raise GraphParseError(f"duplicate edge {tok!r} at position {at}")
            (optional if is_opt else regular).add(pair)
    return OptionalGraph(n, frozenset(regular), frozenset(optional))


@lru_cache(maxsize=8)
def _perm_array(n: int) -> np.ndarray:
    return np.array(list(itertools.permutations(range(n))), dtype=np.int64).reshape(
        -1, n
    )


def _perm_chunks(n: int) -> Iterator[np.ndarray]:
    if n <= 8:
        yield _perm_array(n)
        return
    it = itertools.permutations(range(n))
    while True:
        block = list(itertools.islice(it, _PERM_CHUNK))
        if not block:
            return
        yield np.array(block, dtype=np.int64)


@lru_cache(maxsize=None)
def _pair_gather(n: int) -> tuple[np.ndarray, np.ndarray]:
    pairs = pair_order(n)
    i_idx = np.array([p[0] for p in pairs], dtype=np.int64)
    j_idx = np.array([p[1] for p in pairs], dtype=np.int64)
    return i_idx, j_idx


@lru_cache(maxsize=None)
def _powers(base: int, m: int) -> np.ndarray:
    return np.array([base ** (m - 1 - k) for k in range(m)], dtype=np.int64)


def _inverse_perm(q: tuple[int, ...]) -> tuple[int, ...]:
    rho = [0] * len(q)
    for new, old in enumerate(q):
        rho[old] = new
    return tuple(rho)


def _min_relabelling(n: int, value_matrix: np.ndarray, base: int):
    """Least packed key over all relabellings of a symmetric value matrix.

    Returns (per-pair values of the least relabelling, witness q with
    q[new] = old).  Ties resolve to the first permutation in lexicographic
    order, so the result is deterministic.
    """
    i_idx, j_idx = _pair_gather(n)
    weights = _powers(base, len(i_idx))
    best_key = None
    best_perm = best_row = None
    for chunk in _perm_chunks(n):
        rows = value_matrix[chunk[:, i_idx], chunk[:, j_idx]]
        keys = rows.astype(np.int64) @ weights
        pos = int(keys.argmin())
        if best_key is None or keys[pos] < best_key:
            best_key = int(keys[pos])
            best_perm = chunk[pos]
            best_row = rows[pos]
    return best_row, tuple(int(x) for x in best_perm)


def canonical_form(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Least adjacency bitstring over all n! relabellings, with a witness.

    Returns (canonical, rho) with rho[old] = new; relabelling g by rho gives
    the canonical graph.  Two graphs have equal canonical forms iff they are
    isomorphic.
    """
    n = g.n
    if n > MAX_CANONICAL_N:
        raise SizeLimitError(
            f"canonical_form supports n <= {MAX_CANONICAL_N}, got n={n}"
        )
    if n <= 1 or not g.edges:
        return g, tuple(range(n))
    row, q = _min_relabelling(n, g.adjacency_matrix(), 2)
    edges = frozenset(
        pair for pair, bit in zip(pair_order(n), row) if bit
    )
    return Graph(n, edges), _inverse_perm(q)


def canonical_optional(og: OptionalGraph) -> tuple[OptionalGraph, tuple[int, ...]]:
    """Canonical form of an optional-edge graph (regular=1, optional=2 trits)."""
    n = og.n
    if n > MAX_OPTIONAL_CANONICAL_N:
        raise SizeLimitError(
            f"canonical_optional supports n <= {MAX_OPTIONAL_CANONICAL_N}, got n={n}"
        )
    if n <= 1 or (not og.regular and not og.optional):
        return og, tuple(range(n))
    trits = Graph(n, og.regular).adjacency_matrix().astype(np.int64)
    trits += 2 * Graph(n, og.optional).adjacency_matrix().astype(np.int64)
    row, q = _min_relabelling(n, trits, 3)
    pairs = pair_order(n)
    regular = frozenset(p for p, t in zip(pairs, row) if t == 1)
    optional = frozenset(p for p, t in zip(pairs, row) if t == 2)
    return OptionalGraph(n, regular, optional), _inverse_perm(q)


@lru_cache(maxsize=None)
def enumerate_graphs(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class, in canonical order.

    Classes on n vertices are grown from classes on n-1 vertices by attaching
    one new vertex with every possible neighbourhood, then canonicalising.
    """
    if not 0 <= n <= MAX_ENUMERATE_N:
        raise SizeLimitError(
            f"enumerate_graphs supports 0 <= n <= {MAX_ENUMERATE_N}, got n={n}"
        )
    if n == 0:
        return (Graph(0, frozenset()),)
    found: dict[str, Graph] = {}
    for g in enumerate_graphs(n - 1):
        for mask in range(1 << (n - 1)):
            edges = set(g.edges)
            edges.update((i, n - 1) for i in bit_indices(mask))
            can, _ = canonical_form(Graph(n, frozenset(edges)))
            found[can.bitstring()] = can
    return tuple(found[k] for k in sorted(found))


def connected_partition(g: Graph) -> Partition:
    """Connected-component sizes of g, as a partition of n."""
    masks = g.neighbor_masks()
    unseen = (1 << g.n) - 1
    sizes = []
    while unseen:
        comp = unseen & -unseen
        frontier = comp
        while frontier:
            grow = 0
            for v in bit_indices(frontier):
                grow |= masks[v]
            frontier = grow & ~comp
            comp |= frontier
        unseen &= ~comp
        sizes.append(comp.bit_count())
    return Partition.from_sizes(sizes)


class GraphSum:
    """Integer formal sum of n-vertex graphs, keyed by canonical forms."""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms=None):
        acc: dict[Graph, int] = {}
        for g, c in dict(terms or {}).items():
            if not isinstance(g, Graph):
                raise TypeError(f"GraphSum terms must be Graphs, got {g!r}")
            if g.n != n:
                raise ValueError(
                    f"term on {g.n} vertices in a sum of {n}-vertex graphs"
                )
            c = int(c)
            if c == 0:
                continue
            can, _ = canonical_form(g)
            acc[can] = acc.get(can, 0) + c
        self.n = n
        self._terms = {g: c for g, c in acc.items() if c}

    @classmethod
    def _raw(cls, n: int, canonical_terms: dict) -> "GraphSum":
        """Internal: build from already-canonical keys without re-searching."""
        out = object.__new__(cls)
        out.n = n
        out._terms = {g: c for g, c in canonical_terms.items() if c}
        return out

    @classmethod
    def from_graph(cls, g: Graph, coefficient: int = 1) -> "GraphSum":
        return cls(g.n, {g: coefficient})

    def items(self) -> tuple[tuple[Graph, int], ...]:
        return tuple(sorted(self._terms.items(), key=lambda t: t[0].bitstring()))

    def coefficient(self, g: Graph) -> int:
        can, _ = canonical_form(g)
        return self._terms.get(can, 0)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __add__(self, other: "GraphSum") -> "GraphSum":
        if not isinstance(other, GraphSum) or other.n != self.n:
            return NotImplemented
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) + c
        return GraphSum._raw(self.n, out)

    def __sub__(self, other: "GraphSum") -> "GraphSum":
        if not isinstance(other, GraphSum) or other.n != self.n:
            return NotImplemented
        out = dict(self._terms)
        for g, c in other._terms.items():
            out[g] = out.get(g, 0) - c
        return GraphSum._raw(self.n, out)

    def __neg__(self) -> "GraphSum":
        return GraphSum._raw(self.n, {g: -c for g, c in self._terms.items()})

    def __mul__(self, scalar: int) -> "GraphSum":
        scalar = int(scalar)
        return GraphSum._raw(self.n, {g: scalar * c for g, c in self._terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, GraphSum):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def disjoint_union(self, other: "GraphSum") -> "GraphSum":
        """Bilinear extension of the disjoint union of graphs."""
        out: dict[Graph, int] = {}
        for g, cg in self._terms.items():
            for h, ch in other._terms.items():
                can, _ = canonical_form(g.disjoint_union(h))
                out[can] = out.get(can, 0) + cg * ch
        return GraphSum._raw(self.n + other.n, out)

    def __repr__(self) -> str:
        body = ", ".join(f"{c}*{g.to_text()!r}" for g, c in self.items())
        return f"GraphSum({self.n}: {body})"


def expand(og: OptionalGraph) -> GraphSum:
    """Inclusion-exclusion expansion of optional edges into a signed sum.

    Each subset B of the optional set contributes the ordinary graph with
    edges E union B, signed by (-1)^(|C|-|B|).
    """
    choices = sorted(og.optional)
    if len(choices) > MAX_EXPAND_OPTIONAL:
        raise SizeLimitError(
            f"expand supports at most {MAX_EXPAND_OPTIONAL} optional edges, "
            f"got {len(choices)}"
        )
    raw: dict[Graph, int] = {}
    for r in range(len(choices) + 1):
        sign = (-1) ** (len(choices) - r)
        for pick in itertools.combinations(choices, r):
            g = Graph(og.n, og.regular | frozenset(pick))
            raw[g] = raw.get(g, 0) + sign
    return GraphSum(og.n, raw)


def complement(g: Graph) -> Graph:
    """The graph on the same vertices whose edges are exactly the non-edges."""
    return Graph(g.n, frozenset(pair_order(g.n)) - g.edges)
