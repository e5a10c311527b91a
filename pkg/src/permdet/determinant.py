"""Exact integer determinants via fraction-free (Bareiss) elimination.

All arithmetic is over Python's arbitrary-precision integers; there is
no rounding anywhere.  Determinants of principal submatrices are
memoized per graph, keyed by the removed vertex set's bitmask.
"""

from __future__ import annotations

from .graphs import Graph, VertexSet, adjacency_after_removal


def determinant(matrix) -> int:
    """Exact determinant of a square integer matrix.

    Uses Bareiss' fraction-free elimination: every intermediate value is
    an integer and every division is exact.  Row swaps track the sign;
    a column with no pivot short-circuits to 0.  The 0 x 0 matrix has
    determinant 1 (empty product).
    """
    a = [list(row) for row in matrix]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i = a[i]
            row_k = a[k]
            factor = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - factor * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


class DetCache:
    """Memo of det(G \\ removed) keyed by the removed set's bitmask.

    Entries are write-once: concurrent callers may race to compute the
    same key but always store the same exact value, so a plain dict
    assignment (atomic under the GIL) satisfies the contract.  Hit and
    miss counters feed the benchmark report.
    """

    __slots__ = ("_values", "hits", "misses")

    def __init__(self):
        self._values = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: int):
        return self._values.get(key)

    def put(self, key: int, value: int):
        self._values[key] = value

    def __len__(self):
        return len(self._values)


def det_after_removal(g: Graph, removed: VertexSet, cache: DetCache | None = None) -> int:
    """det of the principal submatrix of A(g) on the kept vertices."""
    if cache is None:
        return determinant(adjacency_after_removal(g, removed))
    value = cache.get(removed.mask)
    if value is not None:
        cache.hits += 1
        return value
    cache.misses += 1
    value = determinant(adjacency_after_removal(g, removed))
    cache.put(removed.mask, value)
    return value
