"""Permanent of a bipartite graph via a determinant expansion.

For bipartite G on an even number of vertices,

    per(G) = (-1)^(n/2) * sum over unordered families F of pairwise
             vertex-disjoint 4k-cycles of 4^|F| * det(G minus V(F)),

the empty family contributing det(G).  Odd n gives 0 outright, and a
graph with no 4k-cycles collapses to per(G) = (-1)^(n/2) det(G), which
gets its own fast path.  All arithmetic is exact.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .cycles import (
    DEFAULT_CYCLE_CAP,
    enumerate_cycles,
    enumerate_disjoint_families,
    four_k_cycles,
)
from .determinant import DetCache, det_after_removal, determinant
from .errors import NotAPerfectSquare, NotBipartiteError
from .graphs import EMPTY_SET, Graph, VertexSet, bipartition, graph_from_biadjacency

PATH_ODD = "odd_shortcut"
PATH_COROLLARY = "corollary_fast_path"
PATH_THEOREM1 = "theorem1_expansion"


@dataclass(frozen=True)
class FamilyTerm:
    """One family's contribution: coefficient * det of the reduced graph."""

    z: int
    covered: VertexSet
    det: int
    coefficient: int

    @property
    def contribution(self) -> int:
        return self.coefficient * self.det


@dataclass(frozen=True)
class PermanentReport:
    value: int
    n: int
    m: int
    num_4k_cycles: int
    per_family_terms: tuple
    path_taken: str
    num_cycles: int = 0
    cache_hits: int = 0
    cache_misses: int = 0


def _resolve_threads(threads) -> int:
    if threads is None:
        return 1
    if threads == "auto":
        return max(os.cpu_count() or 1, 1)
    count = int(threads)
    if count < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    return count


def _signed(n: int, total: int) -> int:
    return -total if (n // 2) & 1 else total


def _check_nonnegative(value: int, where: str) -> None:
    if value < 0:
        raise AssertionError(f"negative permanent {value} from {where}; this is a bug")


def _odd_report(g: Graph) -> PermanentReport:
    # n odd: no perfect matching can exist, so nothing is enumerated.
    return PermanentReport(0, g.n, 0, 0, (), PATH_ODD)


def _assert_even_cycles(cycles) -> None:
    # The host was already bipartition-checked, so an odd cycle here can
    # only mean a bug in the enumerator.
    for cyc in cycles:
        assert cyc.length % 2 == 0, f"odd cycle {cyc.labels()} in bipartite host"


def _expand(g: Graph, c4k, threads) -> tuple:
    families = enumerate_disjoint_families(c4k)
    cache = DetCache()
    nthreads = _resolve_threads(threads)
    masks = sorted({fam.covered.mask for fam in families})
    if nthreads > 1 and len(masks) > 1:
        # Warm the cache in parallel; the sequential pass below then only
        # reads.  The total is assembled in a fixed order either way, so
        # output is independent of thread count.
        with ThreadPoolExecutor(max_workers=nthreads) as pool:
            list(pool.map(lambda mk: det_after_removal(g, VertexSet(mk), cache), masks))
    terms = []
    total = 0
    for fam in families:
        d = det_after_removal(g, fam.covered, cache)
        coeff = 4**fam.size
        terms.append(FamilyTerm(fam.size, fam.covered, d, coeff))
        total += coeff * d
    return _signed(g.n, total), tuple(terms), cache


def permanent_theorem1(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP, threads=1) -> PermanentReport:
    """Full expansion over disjoint 4k-cycle families, no shortcuts.

    Raises NotBipartiteError for non-bipartite input and propagates
    CycleCapExceeded from enumeration.
    """
    bipartition(g)
    if g.n % 2:
        return _odd_report(g)
    cycles = enumerate_cycles(g, cap=cycle_cap)
    _assert_even_cycles(cycles)
    c4k = four_k_cycles(cycles)
    value, terms, cache = _expand(g, c4k, threads)
    _check_nonnegative(value, "theorem expansion")
    m = max((term.z for term in terms), default=0)
    return PermanentReport(
        value,
        g.n,
        m,
        len(c4k),
        terms,
        PATH_THEOREM1,
        num_cycles=len(cycles),
        cache_hits=cache.hits,
        cache_misses=cache.misses,
    )


def permanent_auto(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP, threads=1) -> PermanentReport:
    """Like permanent_theorem1, but short-circuits: odd n gives 0 without
    enumerating anything, and a 4k-cycle-free graph is finished with a
    single determinant.
    """
    bipartition(g)
    if g.n % 2:
        return _odd_report(g)
    cycles = enumerate_cycles(g, cap=cycle_cap)
    _assert_even_cycles(cycles)
    c4k = four_k_cycles(cycles)
    if not c4k:
        d = determinant(g.adj)
        value = _signed(g.n, d)
        _check_nonnegative(value, "corollary fast path")
        term = FamilyTerm(0, EMPTY_SET, d, 1)
        return PermanentReport(
            value, g.n, 0, 0, (term,), PATH_COROLLARY, num_cycles=len(cycles)
        )
    value, terms, cache = _expand(g, c4k, threads)
    _check_nonnegative(value, "theorem expansion")
    m = max((term.z for term in terms), default=0)
    return PermanentReport(
        value,
        g.n,
        m,
        len(c4k),
        terms,
        PATH_THEOREM1,
        num_cycles=len(cycles),
        cache_hits=cache.hits,
        cache_misses=cache.misses,
    )


def _validate_zero_one(rows) -> tuple:
    out = []
    width = None
    for row in rows:
        tup = tuple(row)
        if width is None:
            width = len(tup)
        elif len(tup) != width:
            raise ValueError("ragged matrix")
        for x in tup:
            if x not in (0, 1):
                raise ValueError(f"matrix entry {x!r} is not 0 or 1")
        out.append(tup)
    return tuple(out)


def _symmetric_hollow(rows) -> bool:
    n = len(rows)
    if any(len(row) != n for row in rows):
        return False
    return all(rows[i][i] == 0 for i in range(n)) and all(
        rows[i][j] == rows[j][i] for i in range(n) for j in range(i + 1, n)
    )


def count_perfect_matchings(b, cycle_cap: int = DEFAULT_CYCLE_CAP, threads=1) -> int:
    """Number of perfect matchings of the bipartite graph with biadjacency b.

    Equals per(b).  A non-square b has no perfect matching, so 0.  When b
    happens to be a valid adjacency matrix (symmetric, zero diagonal) of a
    bipartite graph, per(b) is computed on that graph directly; otherwise
    the graph on p + q vertices with adjacency [[0, b], [b^T, 0]] is built,
    whose permanent is per(b)^2, and the exact square root is returned.
    A non-square permanent on that route is impossible and raises.
    """
    rows = _validate_zero_one(b)
    p = len(rows)
    q = len(rows[0]) if rows else 0
    if p != q:
        return 0
    if _symmetric_hollow(rows):
        h = Graph.from_adjacency(rows)
        try:
            bipartition(h)
        except NotBipartiteError:
            pass
        else:
            return permanent_auto(h, cycle_cap=cycle_cap, threads=threads).value
    big = permanent_auto(
        graph_from_biadjacency(rows), cycle_cap=cycle_cap, threads=threads
    ).value
    root = math.isqrt(big)
    if root * root != big:
        raise NotAPerfectSquare(big)
    return root


@dataclass(frozen=True)
class EfficiencyReport:
    """Cycle-structure test for when the expansion beats brute force:
    cactus layout (any two cycles share at most one vertex) plus a girth
    large relative to n and the count of girth cycles.
    """

    is_cactus: bool
    girth: int | None
    n: int
    c: int
    condition_holds: bool


def classify_efficient(g: Graph, cycle_cap: int = DEFAULT_CYCLE_CAP) -> EfficiencyReport:
    """Classify a bipartite graph by the girth condition
    g0 * (c + 2) > n + c(c-1)/2 + c, compared in exact integers.
    Acyclic graphs pass trivially.
    """
    bipartition(g)
    cycles = enumerate_cycles(g, cap=cycle_cap)
    _assert_even_cycles(cycles)
    if not cycles:
        return EfficiencyReport(True, None, g.n, 0, True)
    masks = [cy.vertex_set.mask for cy in cycles]
    is_cactus = True
    for i in range(len(masks)):
        for j in range(i + 1, len(masks)):
            if (masks[i] & masks[j]).bit_count() > 1:
                is_cactus = False
                break
        if not is_cactus:
            break
    girth = cycles[0].length
    c = sum(1 for cy in cycles if cy.length == girth)
    holds = is_cactus and girth * (c + 2) > g.n + c * (c - 1) // 2 + c
    return EfficiencyReport(is_cactus, girth, g.n, c, holds)
