"""Simple undirected graphs with exact 0/1 adjacency matrices.

Conventions used throughout the package:

* Vertices are labeled 1..n in all input and output (matching the usual
  drawing of small graphs), but stored 0-indexed internally.  Anything
  called ``label`` is 1-indexed; anything called ``index`` is 0-indexed.
* Graphs are immutable once built and safe to share between workers.
* Vertex subsets are bitmasks (`VertexSet`) so they can key caches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import GraphTooLarge, NotBipartiteError, ParseError

# Fixed bitset width for VertexSet cache keys; graphs beyond this are
# rejected at construction (exact determinants at this size are already
# far past practical limits for the oracles).
MAX_VERTICES = 128


@dataclass(frozen=True, order=True)
class VertexSet:
    """An immutable subset of {0..n-1} stored as a bitmask."""

    mask: int = 0

    @classmethod
    def from_indices(cls, indices) -> "VertexSet":
        mask = 0
        for i in indices:
            if i < 0:
                raise ValueError(f"negative vertex index {i}")
            mask |= 1 << i
        return cls(mask)

    @classmethod
    def from_labels(cls, labels) -> "VertexSet":
        """Build from 1-indexed vertex labels."""
        return cls.from_indices(v - 1 for v in labels)

    def indices(self) -> tuple:
        return tuple(i for i in range(self.mask.bit_length()) if self.mask >> i & 1)

    def labels(self) -> tuple:
        """Sorted 1-indexed labels of the members."""
        return tuple(i + 1 for i in self.indices())

    def isdisjoint(self, other: "VertexSet") -> bool:
        return self.mask & other.mask == 0

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, index: int) -> bool:
        return index >= 0 and self.mask >> index & 1 == 1

    def __iter__(self):
        return iter(self.indices())

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask | other.mask)

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.mask & other.mask)

    def __bool__(self) -> bool:
        return self.mask != 0


EMPTY_SET = VertexSet(0)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph: 0/1 symmetric adjacency with zero diagonal.

    ``adj`` is an n x n tuple of tuples; ``edges`` holds the 0-indexed
    pairs (u, v) with u < v, sorted.  ``neighbors[i]`` is the sorted
    tuple of vertices adjacent to i (derived, not part of equality).
    """

    n: int
    adj: tuple
    edges: tuple
    neighbors: tuple = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        nbrs = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "neighbors", tuple(tuple(sorted(b)) for b in nbrs))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        """Build from 0-indexed endpoint pairs; duplicates collapse silently."""
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        if n > MAX_VERTICES:
            raise GraphTooLarge(n, MAX_VERTICES)
        seen = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u + 1}, {v + 1}) out of range 1..{n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u + 1}")
            seen.add((min(u, v), max(u, v)))
        rows = [[0] * n for _ in range(n)]
        for u, v in seen:
            rows[u][v] = rows[v][u] = 1
        return cls(n, tuple(tuple(r) for r in rows), tuple(sorted(seen)))

    @classmethod
    def from_edge_labels(cls, n: int, pairs) -> "Graph":
        """Build from 1-indexed endpoint pairs, the file-format convention."""
        return cls.from_edges(n, [(u - 1, v - 1) for u, v in pairs])

    @classmethod
    def from_adjacency(cls, rows) -> "Graph":
        """Build from a square symmetric hollow 0/1 matrix."""
        rows = [tuple(r) for r in rows]
        n = len(rows)
        if n > MAX_VERTICES:
            raise GraphTooLarge(n, MAX_VERTICES)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i + 1} has {len(row)} entries, expected {n}")
            for j, a in enumerate(row):
                if a not in (0, 1):
                    raise ValueError(f"entry ({i + 1}, {j + 1}) is {a}, expected 0 or 1")
                if j < i and a != rows[j][i]:
                    raise ValueError(f"matrix is asymmetric at ({i + 1}, {j + 1})")
            if row[i] != 0:
                raise ValueError(f"nonzero diagonal at vertex {i + 1}")
        edges = tuple(
            (i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j]
        )
        return cls(n, tuple(rows), edges)

    def edge_labels(self) -> tuple:
        """Edges as 1-indexed (u, v) pairs."""
        return tuple((u + 1, v + 1) for u, v in self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return self.adj[u][v] == 1

    def vertex_set(self) -> VertexSet:
        return VertexSet((1 << self.n) - 1)


@dataclass(frozen=True)
class Bipartition:
    """A 2-coloring: ``left`` holds the smallest vertex of each component."""

    left: VertexSet
    right: VertexSet


def _tokenize(text: str):
    """Yield (line_no, tokens) for each nonblank line."""
    for line_no, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if tokens:
            yield line_no, tokens


def _parse_int(token: str, line_no: int) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(f"non-integer token {token!r}", line_no) from None


def parse_edge_list(text: str) -> Graph:
    """Parse the ``"n m"`` header followed by m ``"u v"`` lines (1-indexed).

    Duplicate edges are collapsed; whitespace layout is free-form.
    """
    lines = list(_tokenize(text))
    if not lines:
        raise ParseError("empty input, expected 'n m' header")
    header_no, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"malformed header {' '.join(header)!r}, expected 'n m'", header_no)
    n = _parse_int(header[0], header_no)
    m = _parse_int(header[1], header_no)
    if n < 0 or m < 0:
        raise ParseError("header counts must be nonnegative", header_no)
    body = lines[1:]
    if len(body) != m:
        raise ParseError(f"header declares {m} edges but {len(body)} edge lines follow", header_no)
    edges = []
    for line_no, tokens in body:
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {' '.join(tokens)!r}", line_no)
        u = _parse_int(tokens[0], line_no)
        v = _parse_int(tokens[1], line_no)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ParseError(f"vertex index out of range 1..{n} in edge ({u}, {v})", line_no)
        if u == v:
            raise ParseError(f"self-loop at vertex {u}", line_no)
        edges.append((u - 1, v - 1))
    return Graph.from_edges(n, edges)


def parse_adjacency_matrix(text: str) -> Graph:
    """Parse n rows of n space-separated 0/1 entries into a Graph."""
    lines = list(_tokenize(text))
    if not lines:
        raise ParseError("empty input, expected adjacency rows")
    n = len(lines)
    rows = []
    for line_no, tokens in lines:
        if len(tokens) != n:
            raise ParseError(f"row has {len(tokens)} entries, expected {n} (matrix must be square)", line_no)
        rows.append(tuple(_parse_int(t, line_no) for t in tokens))
    try:
        return Graph.from_adjacency(rows)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def parse_biadjacency(text: str) -> tuple:
    """Parse a ``"p q"`` header then p rows of q 0/1 entries; returns the matrix."""
    lines = list(_tokenize(text))
    if not lines:
        raise ParseError("empty input, expected 'p q' header")
    header_no, header = lines[0]
    if len(header) != 2:
        raise ParseError(f"malformed header {' '.join(header)!r}, expected 'p q'", header_no)
    p = _parse_int(header[0], header_no)
    q = _parse_int(header[1], header_no)
    if p < 0 or q < 0:
        raise ParseError("header counts must be nonnegative", header_no)
    body = lines[1:]
    if len(body) != p:
        raise ParseError(f"header declares {p} rows but {len(body)} follow", header_no)
    rows = []
    for line_no, tokens in body:
        if len(tokens) != q:
            raise ParseError(f"row has {len(tokens)} entries, expected {q}", line_no)
        row = tuple(_parse_int(t, line_no) for t in tokens)
        for a in row:
            if a not in (0, 1):
                raise ParseError(f"entry {a} outside {{0, 1}}", line_no)
        rows.append(row)
    return tuple(rows)


def render_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list (1-indexed output)."""
    out = [f"{g.n} {len(g.edges)}"]
    out.extend(f"{u + 1} {v + 1}" for u, v in g.edges)
    return "\n".join(out) + "\n"


def render_adjacency(g: Graph) -> str:
    """Inverse of parse_adjacency_matrix."""
    return "\n".join(" ".join(str(a) for a in row) for row in g.adj) + "\n"


def _odd_cycle_witness(parent, u, v):
    """Closed odd walk through tree edges plus the conflict edge (u, v)."""
    chain = []
    x = u
    while True:
        chain.append(x)
        if parent[x] == x:
            break
        x = parent[x]
    position = {x: i for i, x in enumerate(chain)}
    down = []
    y = v
    while y not in position:
        down.append(y)
        y = parent[y]
    cycle = chain[: position[y] + 1]
    cycle.extend(reversed(down))
    return cycle


def bipartition(g: Graph) -> Bipartition:
    """2-color ``g`` by BFS, smallest vertex of each component going left.

    Raises NotBipartiteError with an odd-cycle witness (1-indexed labels)
    when no 2-coloring exists.
    """
    color = [-1] * g.n
    parent = [0] * g.n
    left = 0
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        parent[root] = root
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.neighbors[u]:
                if color[v] == -1:
                    color[v] = color[u] ^ 1
                    parent[v] = u
                    queue.append(v)
                elif color[v] == color[u]:
                    witness = _odd_cycle_witness(parent, u, v)
                    raise NotBipartiteError(x + 1 for x in witness)
    for i, c in enumerate(color):
        if c == 0:
            left |= 1 << i
    return Bipartition(VertexSet(left), VertexSet(((1 << g.n) - 1) ^ left))


def is_bipartite(g: Graph) -> bool:
    try:
        bipartition(g)
    except NotBipartiteError:
        return False
    return True


def graph_from_biadjacency(b) -> Graph:
    """Graph on p+q vertices: left part 1..p, right part p+1..p+q."""
    rows = [tuple(r) for r in b]
    p = len(rows)
    q = len(rows[0]) if rows else 0
    edges = []
    for i, row in enumerate(rows):
        if len(row) != q:
            raise ValueError(f"ragged biadjacency: row {i + 1} has {len(row)} entries, expected {q}")
        for j, a in enumerate(row):
            if a not in (0, 1):
                raise ValueError(f"entry ({i + 1}, {j + 1}) is {a}, expected 0 or 1")
            if a:
                edges.append((i, p + j))
    return Graph.from_edges(p + q, edges)


def adjacency_after_removal(g: Graph, removed: VertexSet) -> tuple:
    """Principal submatrix of ``g.adj`` on the vertices not in ``removed``.

    Kept vertices stay in increasing index order; removing everything
    yields the 0 x 0 matrix ().
    """
    if removed.mask >> g.n != 0:
        raise ValueError(f"removed set {removed.labels()} not within 1..{g.n}")
    kept = [i for i in range(g.n) if i not in removed]
    return tuple(tuple(g.adj[i][j] for j in kept) for i in kept)


def induced_subgraph(g: Graph, keep: VertexSet) -> Graph:
    """Induced subgraph on ``keep``, relabeled to 1..|keep| in index order."""
    removed = VertexSet(((1 << g.n) - 1) ^ (keep.mask & ((1 << g.n) - 1)))
    return Graph.from_adjacency(adjacency_after_removal(g, removed))
