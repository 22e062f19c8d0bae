"""Simple undirected graphs as bitmask adjacency, graph6 codec, and
exhaustive enumeration of connected non-isomorphic graphs.

Vertices are integers 0..n-1 and every graph stores, per vertex, the
bitmask of its neighbors.  Graphs are immutable and hashable, so they can
be shared freely across worker processes.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

__all__ = [
    "Graph",
    "Graph6Error",
    "UnsupportedSizeError",
    "decode_graph6",
    "encode_graph6",
    "canonical_form",
    "canonical_graph",
    "relabel",
    "is_connected",
    "enumerate_connected",
    "connected_graph_count",
    "complete_graph",
    "cycle_graph",
    "path_graph",
    "star_graph",
    "complete_bipartite",
]

MAX_VERTICES = 16  # single size byte in graph6; study scope is n <= 8


class Graph6Error(ValueError):
    """Malformed or truncated graph6 record."""


class UnsupportedSizeError(ValueError):
    """Vertex count outside the supported range."""


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbor bitmask of vertex v.  ``id`` is an optional
    stable identifier (1-based position in the enumeration order, or the
    line number of an input file).
    """

    n: int
    adj: tuple[int, ...]
    id: int | None = field(default=None, compare=False)

    def __post_init__(self):
        if not 1 <= self.n <= MAX_VERTICES:
            raise UnsupportedSizeError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbor bits above position {self.n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")

    @staticmethod
    def from_edges(n: int, edges, id: int | None = None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph(n, tuple(adj), id)

    def with_id(self, id: int) -> "Graph":
        return Graph(self.n, self.adj, id)

    def degree(self, v: int) -> int:
        return _popcount(self.adj[v])

    def degrees(self) -> tuple[int, ...]:
        return tuple(_popcount(row) for row in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        """Edges as (u, v) pairs with u < v, sorted."""
        out = []
        for v in range(self.n):
            for u in _bits(self.adj[v] & ((1 << v) - 1)):
                out.append((u, v))
        return sorted(out)

    @property
    def edge_count(self) -> int:
        return sum(_popcount(row) for row in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# ---------------------------------------------------------------------------
# graph6 codec
# ---------------------------------------------------------------------------
#
# A record is one size byte chr(63 + n) followed by ceil(n(n-1)/2 / 6) data
# bytes.  The upper-triangle adjacency bits x(0,1), x(0,2), x(1,2),
# x(0,3), ... (column-major) fill 6-bit groups most significant bit first;
# every byte is offset by 63 into the printable range.


def encode_graph6(g: Graph) -> str:
    """Encode a graph as a single-line graph6 record (n <= 16)."""
    if g.n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 encoding capped at n={MAX_VERTICES}")
    bits = []
    for v in range(1, g.n):
        for u in range(v):
            bits.append(g.adj[v] >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(63 + g.n)]
    for i in range(0, len(bits), 6):
        group = 0
        for b in bits[i : i + 6]:
            group = group << 1 | b
        out.append(chr(63 + group))
    return "".join(out)


def decode_graph6(text: str) -> Graph:
    """Decode a single-line graph6 record into a Graph.

    Trailing pad bits are ignored rather than checked.  Raises Graph6Error
    for bytes outside the printable 63..126 range or for a record shorter
    than its size byte implies, and UnsupportedSizeError for n > 16.
    """
    text = text.strip()
    if not text:
        raise Graph6Error("empty graph6 record")
    for ch in text:
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"byte {ord(ch)} outside printable graph6 range 63..126")
    n = ord(text[0]) - 63
    if n > MAX_VERTICES:
        raise UnsupportedSizeError(f"graph6 record for n={n}; supported range is n<={MAX_VERTICES}")
    if n < 1:
        raise Graph6Error(f"graph6 record with vertex count {n}")
    need = (n * (n - 1) // 2 + 5) // 6
    data = text[1:]
    if len(data) < need:
        raise Graph6Error(f"truncated graph6 record: {len(data)} data bytes, expected {need}")
    if len(data) > need:
        raise Graph6Error(f"oversized graph6 record: {len(data)} data bytes, expected {need}")
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            group = ord(data[idx // 6]) - 63
            if group >> (5 - idx % 6) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))


def read_graph6_file(path) -> list[Graph]:
    """Read a graph6 file (one record per line); ids are 1-based line numbers."""
    graphs = []
    with open(path, "r", encoding="ascii") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            graphs.append(decode_graph6(line).with_id(len(graphs) + 1))
    return graphs


def write_graph6_file(graphs, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        for g in graphs:
            fh.write(encode_graph6(g) + "\n")


# ---------------------------------------------------------------------------
# Relabeling and connectivity
# ---------------------------------------------------------------------------


def relabel(g: Graph, perm) -> Graph:
    """Apply a vertex permutation: edge (u,v) maps to (perm[u], perm[v])."""
    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise ValueError(f"not a permutation of 0..{g.n - 1}: {perm}")
    adj = [0] * g.n
    for v in range(g.n):
        row = 0
        for u in _bits(g.adj[v]):
            row |= 1 << perm[u]
        adj[perm[v]] = row
    return Graph(g.n, tuple(adj), g.id)


def is_connected(g: Graph) -> bool:
    """True iff a breadth-first search from vertex 0 reaches all vertices."""
    seen = 1
    frontier = 1
    while frontier:
        grow = 0
        for v in _bits(frontier):
            grow |= g.adj[v]
        frontier = grow & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# ---------------------------------------------------------------------------
# Canonical form
# ---------------------------------------------------------------------------
#
# The canonical form is the lexicographically smallest upper-triangle bit
# string (column-major, the graph6 bit order) over all vertex relabelings.
# The search places vertices one position at a time; at each position only
# vertices achieving the minimal adjacency column can extend an optimal
# labeling, and the incumbent best is updated eagerly so every branch is
# compared against a consistent prefix.  Structural twins are collapsed to
# one candidate since swapping them is an automorphism.


def _canonical_columns(n: int, adj: tuple[int, ...]) -> list[int]:
    infinity = 1 << 20
    best = [infinity] * n
    best[0] = 0

    def extend(placed: list[int], placed_mask: int, k: int) -> None:
        if k == n:
            return
        low = infinity
        cand: list[int] = []
        for v in range(n):
            if placed_mask >> v & 1:
                continue
            av = adj[v]
            col = 0
            for j in range(k):
                col = col << 1 | (av >> placed[j] & 1)
            if col < low:
                low = col
                cand = [v]
            elif col == low:
                cand.append(v)
        if low > best[k]:
            return
        if low < best[k]:
            best[k] = low
            for i in range(k + 1, n):
                best[i] = infinity
        seen_twins: list[tuple[int, int]] = []
        for v in cand:
            rv = adj[v] | (1 << v)
            # Swapping structural twins is an automorphism, so one suffices.
            if any(rv | (1 << u) == ru | (1 << v) for u, ru in seen_twins):
                continue
            seen_twins.append((v, rv))
            placed.append(v)
            extend(placed, placed_mask | (1 << v), k + 1)
            placed.pop()

    extend([], 0, 0)
    return best


def canonical_form(g: Graph) -> str:
    """Lexicographically smallest upper-triangle bit string over relabelings.

    Two graphs share a canonical form iff they are isomorphic.
    """
    cols = _canonical_columns(g.n, g.adj)
    return "".join(format(cols[k], f"0{k}b") for k in range(1, g.n))


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled copy of g (its upper triangle is canonical_form)."""
    cols = _canonical_columns(g.n, g.adj)
    adj = [0] * g.n
    for v in range(1, g.n):
        col = cols[v]
        for u in range(v):
            if col >> (v - 1 - u) & 1:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return Graph(g.n, tuple(adj), g.id)


def _graph_from_bits(n: int, bits: str) -> Graph:
    adj = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx] == "1":
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, tuple(adj))


# ---------------------------------------------------------------------------
# Exhaustive enumeration
# ---------------------------------------------------------------------------
#
# All isomorphism classes on k vertices arise by attaching a new vertex to
# every class representative on k-1 vertices with every possible neighbor
# subset, then canonicalizing and deduplicating.  Disconnected
# intermediates must be kept (a connected graph can have a disconnected
# vertex-deleted subgraph); connectivity is filtered at the end.

ENUM_MIN_N = 3
ENUM_MAX_N = 8


@functools.lru_cache(maxsize=None)
def _all_classes(n: int) -> tuple[str, ...]:
    """Canonical forms of all simple graphs on n vertices (connected or not)."""
    if n == 1:
        return ("",)
    seen: set[str] = set()
    for bits in _all_classes(n - 1):
        parent = _graph_from_bits(n - 1, bits)
        ext_adj = list(parent.adj) + [0]
        for subset in range(1 << (n - 1)):
            adj = [ext_adj[v] | ((subset >> v & 1) << (n - 1)) for v in range(n - 1)]
            adj.append(subset)
            seen.add(canonical_form(Graph(n, tuple(adj))))
    return tuple(sorted(seen))


@functools.lru_cache(maxsize=None)
def _connected_forms(n: int) -> tuple[str, ...]:
    return tuple(bits for bits in _all_classes(n) if is_connected(_graph_from_bits(n, bits)))


def enumerate_connected(n: int) -> list[Graph]:
    """One canonically labeled representative per isomorphism class of
    connected graphs on n vertices, sorted by canonical form.

    Ids are assigned 1-based in that order.
    """
    if not ENUM_MIN_N <= n <= ENUM_MAX_N:
        raise UnsupportedSizeError(f"enumeration supports {ENUM_MIN_N} <= n <= {ENUM_MAX_N}, got {n}")
    return [_graph_from_bits(n, bits).with_id(i) for i, bits in enumerate(_connected_forms(n), start=1)]


def connected_graph_count(n: int) -> int:
    """Number of isomorphism classes of connected graphs on n vertices."""
    if not ENUM_MIN_N <= n <= ENUM_MAX_N:
        raise UnsupportedSizeError(f"enumeration supports {ENUM_MIN_N} <= n <= {ENUM_MAX_N}, got {n}")
    return len(_connected_forms(n))


# ---------------------------------------------------------------------------
# Named constructions used throughout tests and demos
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(v, v + 1) for v in range(n - 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 0 joined to the n-1 leaves."""
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])
