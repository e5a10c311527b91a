import random

import corpus
import pytest
from permdet import DetCache, VertexSet, det_after_removal, determinant


def laplace_det(m):
    """Cofactor expansion along the first row; the slow reference."""
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        if m[0][j] == 0:
            continue
        minor = [row[:j] + row[j + 1:] for row in m[1:]]
        term = m[0][j] * laplace_det(minor)
        total += -term if j % 2 else term
    return total


def test_determinant_base_cases():
    assert determinant(()) == 1
    assert determinant(((7,),)) == 7
    assert determinant(((1, 2), (3, 4))) == -2
    assert determinant(((0, 1), (1, 0))) == -1


@pytest.mark.parametrize(
    "graph,expected",
    [
        (corpus.path_graph(4), 1),
        (corpus.cycle_graph(4), 0),
        (corpus.cycle_graph(6), -4),
        (corpus.cycle_graph(8), 0),
    ],
)
def test_adjacency_determinants(graph, expected):
    assert determinant(graph.adj) == expected


def test_determinant_matches_laplace_on_random_integer_matrices():
    rng = random.Random(98121)
    for _ in range(60):
        n = rng.randint(0, 6)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert determinant(m) == laplace_det(m), m


def test_determinant_zero_column():
    m = ((1, 0, 2), (3, 0, 4), (5, 0, 6))
    assert determinant(m) == 0


def test_determinant_large_values_stay_exact():
    # Diagonal of large entries: product must not lose precision.
    n = 8
    big = 10**12
    m = [[big if i == j else 0 for j in range(n)] for i in range(n)]
    assert determinant(m) == big**n


def test_determinant_rejects_nonsquare():
    with pytest.raises(ValueError):
        determinant(((1, 2),))


def test_det_cache_counts_hits_and_misses():
    g = corpus.example10()
    cache = DetCache()
    removed = VertexSet.from_labels([7, 8, 9, 10])
    first = det_after_removal(g, removed, cache)
    again = det_after_removal(g, removed, cache)
    assert first == again == -1
    assert cache.misses == 1
    assert cache.hits == 1
    assert len(cache) == 1


def test_det_after_removal_full_graph_gives_one():
    g = corpus.cycle_graph(4)
    assert det_after_removal(g, g.vertex_set()) == 1


def test_det_after_removal_without_cache():
    g = corpus.example10()
    assert det_after_removal(g, VertexSet(0)) == 0
