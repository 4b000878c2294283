import itertools
import math

import pytest

from graphflag import (
    ConciseVector,
    Graph,
    GraphSum,
    Partition,
    SizeLimitError,
    VerboseVector,
    anchor_word,
    basis_graph,
    complement,
    complement_transform,
    concise_flag_vector,
    concise_from_verbose,
    connected_partition,
    edge_flag_vector,
    enumerate_graphs,
    enumerate_partitions,
    expand,
    multinomial,
    optional_path,
    optional_tripod,
    pair_order,
    parse_graph,
    scale_subgraph_to_concise,
    shuffle,
    subgraph_flag_vector,
    total_flag_vector,
    total_word_coefficient,
    tree_shelling_number,
    verbose_flag_vector,
    verbose_from_concise,
)
from graphflag.vectors import EdgeWordVector


def _g(n, *edges):
    return Graph.from_edges(n, edges)


def _part(*sizes):
    return Partition.from_sizes(sizes)


def _cv(n, mapping):
    return ConciseVector(n, {Partition.from_sizes(k): v for k, v in mapping.items()})


# ---------------------------------------------------------------------------
# verbose form

THREE_VERTEX = [
    (_g(3), {"aaa": 6}),
    (_g(3, (0, 1)), {"aaa": 6, "aba": 2, "baa": 4}),
    (_g(3, (0, 1), (1, 2)), {"aaa": 6, "aba": 4, "baa": 8, "bba": 4}),
    (_g(3, (0, 1), (1, 2), (0, 2)), {"aaa": 6, "aba": 6, "baa": 12, "bba": 12}),
]


@pytest.mark.parametrize("g,expected", THREE_VERTEX)
def test_three_vertex_verbose_rows(g, expected):
    assert verbose_flag_vector(g) == VerboseVector(3, expected)
    assert verbose_flag_vector(g, "shelling_sum") == VerboseVector(3, expected)


def test_verbose_of_zero_vertex_graph_is_scalar_one():
    assert verbose_flag_vector(_g(0)) == VerboseVector(0, {"": 1})


def test_methods_agree_exhaustively_to_n5():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert verbose_flag_vector(g, "recursion") == verbose_flag_vector(
                g, "shelling_sum"
            )


def test_optional_tree_gives_single_word():
    # an all-optional tree contributes its acyclic shelling count on b^(n-1) a
    from graphflag import acyclic_shelling_number

    for n in range(1, 7):
        path = optional_path(n)
        plain = Graph(n, path.optional)
        expected = VerboseVector(
            n, {"b" * (n - 1) + "a": acyclic_shelling_number(plain)}
        )
        assert verbose_flag_vector(path) == expected


def test_optional_cycle_vanishes():
    assert verbose_flag_vector(parse_graph("3:?0-1,?1-2,?0-2")).is_zero
    square = parse_graph("4:?0-1,?1-2,?2-3,?0-3")
    assert verbose_flag_vector(square).is_zero
    with_extra = parse_graph("5:0-4,?0-1,?1-2,?0-2,?3-4")
    assert verbose_flag_vector(with_extra).is_zero


def test_flag_vectors_extend_linearly_over_sums():
    a = _g(3, (0, 1))
    b = _g(3, (0, 1), (1, 2))
    gs = GraphSum(3, {a: 2, b: -1})
    for form in (verbose_flag_vector, concise_flag_vector, subgraph_flag_vector):
        assert form(gs) == 2 * form(a) - form(b)


def test_verbose_size_limit():
    with pytest.raises(SizeLimitError):
        verbose_flag_vector(Graph(9, frozenset()))


def test_verbose_rejects_unknown_method():
    with pytest.raises(ValueError):
        verbose_flag_vector(_g(2), "magic")


# ---------------------------------------------------------------------------
# concise and subgraph forms

TABLE_FOUR = [
    (_g(4), (1, 0, 0, 0, 0)),
    (_g(4, (0, 1)), (1, 1, 0, 0, 0)),
    (_g(4, (0, 1), (2, 3)), (1, 2, 1, 0, 0)),
    (_g(4, (0, 1), (1, 2)), (1, 2, 0, 1, 0)),
    (_g(4, (0, 1), (1, 2), (2, 3)), (1, 3, 1, 2, 2)),
    (_g(4, (0, 1), (1, 2), (0, 2)), (1, 3, 0, 3, 0)),
    (_g(4, (0, 1), (0, 2), (0, 3)), (1, 3, 0, 3, 3)),
    (complement(_g(4, (0, 1), (1, 2))), (1, 4, 1, 5, 7)),
    (complement(_g(4, (0, 1), (2, 3))), (1, 4, 2, 4, 8)),
    (complement(_g(4, (0, 1))), (1, 5, 2, 8, 18)),
    (complement(_g(4)), (1, 6, 3, 12, 36)),
]


@pytest.mark.parametrize("g,row", TABLE_FOUR)
def test_four_vertex_concise_table(g, row):
    vec = concise_flag_vector(g)
    parts = enumerate_partitions(4)
    assert tuple(vec.coefficient(p) for p in parts) == row


def test_concise_of_edgeless_graph():
    for n in range(6):
        assert concise_flag_vector(Graph(n, frozenset())) == _cv(n, {(1,) * n: 1})


def test_concise_by_direct_subgraph_oracle():
    # recompute the subgraph sum with an independent edge-subset walk
    for n in range(5):
        for g in enumerate_graphs(n):
            edges = sorted(g.edges)
            expected = {}
            for r in range(len(edges) + 1):
                for pick in itertools.combinations(edges, r):
                    sub = Graph(n, frozenset(pick))
                    s = tree_shelling_number(sub)
                    if s:
                        part = connected_partition(sub)
                        expected[part] = expected.get(part, 0) + s
            assert concise_flag_vector(g) == ConciseVector(n, expected)


def test_subgraph_form_examples():
    assert subgraph_flag_vector(_g(2, (0, 1))) == _cv(2, {(1, 1): 2, (2,): 2})
    triangle = _g(3, (0, 1), (1, 2), (0, 2))
    assert subgraph_flag_vector(triangle) == _cv(
        3, {(1, 1, 1): 6, (2, 1): 18, (3,): 12}
    )
    for n in range(5):
        edgeless = Graph(n, frozenset())
        assert subgraph_flag_vector(edgeless) == _cv(n, {(1,) * n: math.factorial(n)})


def test_scale_subgraph_to_concise_examples():
    assert scale_subgraph_to_concise(_cv(2, {(1, 1): 2, (2,): 2})) == _cv(
        2, {(1, 1): 1, (2,): 1}
    )
    assert scale_subgraph_to_concise(_cv(3, {(1, 1, 1): 6})) == _cv(3, {(1, 1, 1): 1})
    for n in range(6):
        for g in enumerate_graphs(n):
            assert scale_subgraph_to_concise(
                subgraph_flag_vector(g)
            ) == concise_flag_vector(g)


def test_scale_rejects_inexact_division():
    with pytest.raises(ValueError):
        scale_subgraph_to_concise(_cv(2, {(1, 1): 1}))


def test_alternating_three_vertex_relation_in_all_forms():
    graphs = [g for g, _ in THREE_VERTEX]
    signs = (1, -3, 3, -1)
    for fn in (verbose_flag_vector, concise_flag_vector, subgraph_flag_vector):
        vectors = [s * fn(g) for s, g in zip(signs, graphs)]
        total = vectors[0]
        for v in vectors[1:]:
            total = total + v
        assert total.is_zero


def test_optional_only_graphs_collapse_to_shelling_number():
    # expansion of (V, empty, C) keeps only the full choice C
    for n in range(1, 6):
        pairs = pair_order(n)
        for r in range(min(len(pairs), 5) + 1):
            for pick in itertools.combinations(pairs, r):
                og = parse_graph(f"{n}:" + ",".join(f"?{i}-{j}" for i, j in pick))
                sub = Graph(n, frozenset(pick))
                s = tree_shelling_number(sub)
                expected = (
                    ConciseVector(n, {connected_partition(sub): s})
                    if s
                    else ConciseVector(n)
                )
                assert concise_flag_vector(og) == expected


# ---------------------------------------------------------------------------
# shuffles, anchors and conversions

def test_shuffle_examples():
    assert shuffle(_part(1, 1)) == VerboseVector(2, {"aa": 2})
    assert shuffle(_part(2, 1)) == VerboseVector(3, {"aba": 1, "baa": 2})
    for n in range(1, 7):
        assert shuffle(_part(n)) == VerboseVector(n, {"b" * (n - 1) + "a": 1})


def test_shuffle_mass_is_multinomial():
    for n in range(7):
        for part in enumerate_partitions(n):
            total = sum(c for _, c in shuffle(part).items())
            assert total == multinomial(n, part.parts)


def test_anchor_word_examples():
    assert anchor_word(_part(2, 1, 1)) == "aaba"
    assert anchor_word(_part(5)) == "bbbba"
    assert anchor_word(_part(1, 1, 1)) == "aaa"
    assert anchor_word(Partition(())) == ""


def test_anchor_words_distinct():
    for n in range(9):
        words = [anchor_word(p) for p in enumerate_partitions(n)]
        assert len(set(words)) == len(words)


def test_verbose_from_concise_matches_direct_computation():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert verbose_from_concise(concise_flag_vector(g)) == verbose_flag_vector(g)


def test_concise_from_verbose_round_trips():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert concise_from_verbose(verbose_flag_vector(g)) == concise_flag_vector(g)


def test_concise_from_verbose_hand_value():
    vec = verbose_flag_vector(_g(3, (0, 1), (1, 2)))
    assert concise_from_verbose(vec) == _cv(3, {(1, 1, 1): 1, (2, 1): 2, (3,): 1})
    assert concise_from_verbose(
        VerboseVector(4, {"aaaa": 24})
    ) == _cv(4, {(1, 1, 1, 1): 1})


def test_concise_from_verbose_rejects_vectors_outside_the_span():
    with pytest.raises(ValueError):
        concise_from_verbose(VerboseVector(2, {"ab": 1}))
    bad = VerboseVector(3, {"aaa": 6, "aba": 2, "baa": 5})
    with pytest.raises(ValueError):
        concise_from_verbose(bad)
    # the unchecked variant accepts the anchor solve regardless
    assert concise_from_verbose(bad, check=False) is not None


# ---------------------------------------------------------------------------
# complement transform

def test_complement_transform_three_vertex_rows():
    assert complement_transform(VerboseVector(3, {"aaa": 6})) == VerboseVector(
        3, {"aaa": 6, "aba": 6, "baa": 12, "bba": 12}
    )


def test_complement_transform_matches_complement_exhaustively():
    for n in range(6):
        for g in enumerate_graphs(n):
            assert complement_transform(
                verbose_flag_vector(g)
            ) == verbose_flag_vector(complement(g))


def test_complement_transform_is_involution():
    for n in range(6):
        for g in enumerate_graphs(n):
            vec = verbose_flag_vector(g)
            assert complement_transform(complement_transform(vec)) == vec


# ---------------------------------------------------------------------------
# totals

def test_total_word_coefficients():
    assert total_word_coefficient(3, "baa") == 48
    assert total_word_coefficient(2, "aa") == 4
    for n in range(1, 8):
        assert total_word_coefficient(n, "a" * (n - 1) + "b") == 0


def test_total_flag_vector_matches_brute_force():
    for n in range(5):
        pairs = pair_order(n)
        totals = {}
        for mask in range(1 << len(pairs)):
            g = Graph(n, frozenset(p for k, p in enumerate(pairs) if mask >> k & 1))
            for w, c in verbose_flag_vector(g).items():
                totals[w] = totals.get(w, 0) + c
        assert total_flag_vector(n) == VerboseVector(n, totals)


# ---------------------------------------------------------------------------
# basis sums

def test_basis_graph_single_part_three_is_plain_path():
    # twice the path minus the tripod collapses to the path when m = 3
    assert basis_graph(_part(3)) == expand(optional_path(3))


def test_basis_graph_concise_is_the_partition():
    for n in range(7):
        for part in enumerate_partitions(n):
            assert concise_flag_vector(basis_graph(part)) == ConciseVector(
                n, {part: 1}
            )


def test_optional_path_and_tripod_concise_values():
    for n in range(3, 8):
        assert concise_flag_vector(expand(optional_path(n))) == _cv(
            n, {(n,): 2 ** (n - 3)}
        )
        assert concise_flag_vector(expand(optional_tripod(n))) == _cv(
            n, {(n,): 2 ** (n - 2) - 1}
        )


def test_anchor_matrix_is_upper_triangular():
    for n in range(7):
        order = sorted(enumerate_partitions(n), key=anchor_word)
        anchors = [anchor_word(p) for p in order]
        for i, part in enumerate(order):
            vec = verbose_flag_vector(basis_graph(part))
            assert vec.coefficient(anchors[i]) != 0
            for j in range(i):
                assert vec.coefficient(anchors[j]) == 0


def test_basis_graph_size_limit():
    with pytest.raises(SizeLimitError):
        basis_graph(_part(10))


# ---------------------------------------------------------------------------
# edge words

def test_edge_flag_examples():
    assert edge_flag_vector(_g(2, (0, 1))) == EdgeWordVector(1, {"a": 1})
    assert edge_flag_vector(_g(4, (0, 1), (2, 3))) == EdgeWordVector(2, {"aa": 2})
    assert edge_flag_vector(_g(3, (0, 1), (1, 2))) == EdgeWordVector(
        2, {"aa": 2, "ca": 2}
    )
    assert edge_flag_vector(_g(0)) == EdgeWordVector(0, {"": 1})


def test_edge_flag_triangle():
    # every removal order sees multiplicities (2, 2), then (2, 1), then (1, 1)
    assert edge_flag_vector(_g(3, (0, 1), (1, 2), (0, 2))) == EdgeWordVector(
        3, {"aaa": 6, "baa": 6, "aca": 6, "bca": 6}
    )


def test_edge_flag_is_isomorphism_invariant():
    g = _g(4, (0, 1), (1, 2), (2, 3))
    for perm in itertools.permutations(range(4)):
        assert edge_flag_vector(g.relabel(perm)) == edge_flag_vector(g)


def test_edge_flag_size_limit():
    with pytest.raises(SizeLimitError):
        edge_flag_vector(complement(_g(5)))
