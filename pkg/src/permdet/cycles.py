"""Elementary cycle enumeration and vertex-disjoint cycle families.

Cycles are canonicalized so that rotations and reflections of the same
closed walk compare equal: the smallest vertex comes first and its
smaller neighbor on the cycle comes second.  Enumeration output is
deterministic, sorted by (length, vertices).

Cycles whose length is divisible by four are the raw material of the
permanent expansion; unordered families of mutually vertex-disjoint
ones (including the empty family) index its terms.  The ordered-tuple
count used elsewhere equals z! times the unordered count for each size
z, so nothing is lost by enumerating unordered families only.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import CycleCapExceeded
from .graphs import Graph, VertexSet

DEFAULT_CYCLE_CAP = 10**6


@dataclass(frozen=True)
class Cycle:
    """An elementary cycle in canonical traversal order (0-indexed)."""

    vertices: tuple
    vertex_set: VertexSet = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "vertex_set", VertexSet.from_indices(self.vertices))

    @classmethod
    def from_vertices(cls, vertices) -> "Cycle":
        """Canonicalize any traversal order of the cycle."""
        walk = list(vertices)
        if len(walk) < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        if len(set(walk)) != len(walk):
            raise ValueError("cycle vertices must be distinct")
        pivot = walk.index(min(walk))
        walk = walk[pivot:] + walk[:pivot]
        if walk[-1] < walk[1]:
            walk = [walk[0]] + walk[:0:-1]
        return cls(tuple(walk))

    @classmethod
    def from_labels(cls, labels) -> "Cycle":
        """Canonicalize a 1-indexed traversal order."""
        return cls.from_vertices(v - 1 for v in labels)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_4k(self) -> bool:
        return self.length % 4 == 0

    def labels(self) -> tuple:
        """Traversal order as 1-indexed labels."""
        return tuple(v + 1 for v in self.vertices)


def enumerate_cycles(g: Graph, max_len: int | None = None, cap: int | None = DEFAULT_CYCLE_CAP):
    """All elementary cycles of ``g`` (up to ``max_len``), canonical and sorted.

    Backtracking search rooted at each vertex in turn: paths grow only
    through strictly larger vertices, with vertices on the current path
    blocked, so every cycle is discovered exactly once, already in
    canonical form.  Raises CycleCapExceeded when more than ``cap``
    cycles are found (pass ``cap=None`` to disable the guard).
    """
    limit = g.n if max_len is None else min(max_len, g.n)
    found = []
    for s in range(g.n):
        path = [s]
        onpath = 1 << s
        iters = [iter(g.neighbors[s])]
        while iters:
            descended = False
            for w in iters[-1]:
                if w == s:
                    if len(path) >= 3 and path[1] < path[-1]:
                        found.append(tuple(path))
                        if cap is not None and len(found) > cap:
                            raise CycleCapExceeded(cap)
                    continue
                if w < s or onpath >> w & 1 or len(path) >= limit:
                    continue
                path.append(w)
                onpath |= 1 << w
                iters.append(iter(g.neighbors[w]))
                descended = True
                break
            if not descended:
                iters.pop()
                onpath ^= 1 << path.pop()
    found.sort(key=lambda c: (len(c), c))
    return [Cycle(c) for c in found]


def four_k_cycles(cycles) -> list:
    """The sublist of cycles whose length is a multiple of four."""
    return [c for c in cycles if c.is_4k]


def four_k_plus_two_cycles(cycles) -> list:
    """The sublist of cycles whose length is two more than a multiple of four."""
    return [c for c in cycles if c.length % 4 == 2]


@dataclass(frozen=True)
class DisjointFamily:
    """An unordered set of mutually vertex-disjoint cycles.

    ``cycle_indices`` point into the 4k-cycle list the family was
    enumerated from; ``covered`` is the union of member vertex sets.
    The empty family (size 0) is a valid value.
    """

    cycle_indices: tuple
    covered: VertexSet

    @property
    def size(self) -> int:
        return len(self.cycle_indices)


def enumerate_disjoint_families(c4k) -> list:
    """All families of pairwise vertex-disjoint cycles from ``c4k``.

    Includes the empty family.  Output is sorted by (size, indices).
    """
    masks = [c.vertex_set.mask for c in c4k]
    families = []

    def extend(start, chosen, covered):
        families.append(DisjointFamily(tuple(chosen), VertexSet(covered)))
        for i in range(start, len(masks)):
            if covered & masks[i] == 0:
                chosen.append(i)
                extend(i + 1, chosen, covered | masks[i])
                chosen.pop()

    extend(0, [], 0)
    families.sort(key=lambda f: (f.size, f.cycle_indices))
    return families


def max_disjoint(families) -> int:
    """Largest family size; 0 when only the empty family exists."""
    return max(f.size for f in families)
