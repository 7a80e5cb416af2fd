"""Immutable simple-graph type, named-family constructors, structural
invariants, and the graph6 codec.

Graphs live on at most HARD_CAP vertices so every kernel can work on plain
integer bitsets (one bitmask per vertex row).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb

HARD_CAP = 24


class GraphError(ValueError):
    pass


class Graph6Error(GraphError):
    """Malformed graph6 input."""


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph: ``rows[i]`` is the neighbor bitmask of vertex i."""

    n: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"negative vertex count {self.n}")
        if self.n > HARD_CAP:
            raise GraphError(f"vertex count {self.n} exceeds hard cap {HARD_CAP}")
        if len(self.rows) != self.n:
            raise GraphError("row count does not match n")
        mask = (1 << self.n) - 1
        for i, row in enumerate(self.rows):
            if row & ~mask:
                raise GraphError(f"row {i} has bits outside 0..{self.n - 1}")
            if row >> i & 1:
                raise GraphError(f"self-loop at vertex {i}")
        for i in range(self.n):
            for j in range(i + 1, self.n):
                if (self.rows[i] >> j & 1) != (self.rows[j] >> i & 1):
                    raise GraphError(f"asymmetric adjacency at ({i}, {j})")

    # -- basic queries -------------------------------------------------

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degree_sequence(self) -> list[int]:
        return sorted((r.bit_count() for r in self.rows), reverse=True)

    def neighbors(self, v: int) -> list[int]:
        return _bits(self.rows[v])

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in _bits(self.rows[i]) if j > i]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacency_matrix(self) -> list[list[int]]:
        return [[self.rows[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def subgraph_without(self, removed: int | set[int]) -> "Graph":
        """Induced subgraph on the vertices outside ``removed``; survivors keep
        their relative order."""
        gone = {removed} if isinstance(removed, int) else set(removed)
        keep = [v for v in range(self.n) if v not in gone]
        pos = {v: k for k, v in enumerate(keep)}
        rows = [0] * len(keep)
        for v in keep:
            for u in _bits(self.rows[v]):
                if u in pos:
                    rows[pos[v]] |= 1 << pos[u]
        return Graph(len(keep), tuple(rows))

    def relabel(self, perm: list[int] | tuple[int, ...]) -> "Graph":
        """New graph where new vertex ``k`` is old vertex ``perm[k]``."""
        inv = [0] * self.n
        for k, v in enumerate(perm):
            inv[v] = k
        rows = [0] * self.n
        for k, v in enumerate(perm):
            for u in _bits(self.rows[v]):
                rows[k] |= 1 << inv[u]
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(n: int, edges) -> Graph:
    rows = [0] * n
    for i, j in edges:
        if i == j:
            raise GraphError(f"self-loop at vertex {i}")
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return Graph(n, tuple(rows))


# -- named families ------------------------------------------------------


@dataclass(frozen=True)
class KiteParams:
    """Clique size p and appended-path length q of a kite graph."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 1:
            raise GraphError(f"kite needs p >= 1, got {self.p}")
        if self.q < 0:
            raise GraphError(f"kite needs q >= 0, got {self.q}")


def make_kite(params: KiteParams | None = None, p: int | None = None, q: int | None = None) -> Graph:
    """Kite graph: K_p on vertices 0..p-1, path appended at vertex p-1, the
    path occupying vertices p..p+q-1.

    Degenerate conventions: a zero-length path gives K_p, and p in {1, 2}
    gives the path graphs P_{q+1} and P_{q+2}.
    """
    if params is None:
        params = KiteParams(p, q)
    p, q = params.p, params.q
    edges = list(itertools.combinations(range(p), 2))
    for k in range(q):
        edges.append((p - 1 + k, p + k))
    return from_edges(p + q, edges)


def make_path(n: int) -> Graph:
    if n < 0:
        raise GraphError("path needs n >= 0")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def make_complete(n: int) -> Graph:
    if n < 0:
        raise GraphError("complete graph needs n >= 0")
    return from_edges(n, itertools.combinations(range(n), 2))


def make_cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def make_star(leaves: int) -> Graph:
    """K_{1,leaves}: hub is vertex 0."""
    return from_edges(leaves + 1, [(0, k) for k in range(1, leaves + 1)])


def make_knm(n: int, m: int) -> Graph:
    """K_{n-m} with m pendant edges attached to one clique vertex.

    Clique vertices come first (the pendants hang off vertex 0), pendants
    occupy n-m..n-1.
    """
    if not 0 <= m < n:
        raise GraphError(f"knm needs 0 <= m < n, got n={n}, m={m}")
    edges = list(itertools.combinations(range(n - m), 2))
    for k in range(m):
        edges.append((0, n - m + k))
    return from_edges(n, edges)


def make_gb(p: int) -> Graph:
    """K_p with two pendant edges on one clique vertex: knm(p+2, 2)."""
    if p < 1:
        raise GraphError("gb needs p >= 1")
    return make_knm(p + 2, 2)


def make_gc(p: int) -> Graph:
    """K_p with two pendant vertices attached to two distinct clique vertices.

    Clique is 0..p-1; pendant p hangs off vertex 0, pendant p+1 off vertex 1.
    """
    if p < 3:
        raise GraphError("gc needs p >= 3")
    edges = list(itertools.combinations(range(p), 2))
    edges += [(0, p), (1, p + 1)]
    return from_edges(p + 2, edges)


@dataclass(frozen=True)
class CliqueStats:
    clique_number: int
    triangle_count: int
    edge_count: int


# -- structural invariants ------------------------------------------------


def triangle_count(g: Graph) -> int:
    """Number of K_3 subgraphs (each triangle counted once)."""
    total = 0
    for i, j in g.edges():
        above = ~((1 << (j + 1)) - 1)
        total += (g.rows[i] & g.rows[j] & above).bit_count()
    return total


def clique_number(g: Graph) -> int:
    """Exact clique number via Bron-Kerbosch with pivoting on bitsets."""
    if g.n == 0:
        return 0
    best = 1

    def expand(r_size: int, cand: int, excl: int):
        nonlocal best
        if cand == 0 and excl == 0:
            best = max(best, r_size)
            return
        if r_size + cand.bit_count() <= best:
            return
        # pivot: vertex of P|X with most neighbors in P
        pivot, pivot_deg = -1, -1
        both = cand | excl
        for u in _bits(both):
            d = (g.rows[u] & cand).bit_count()
            if d > pivot_deg:
                pivot, pivot_deg = u, d
        ext = cand & ~g.rows[pivot]
        for v in _bits(ext):
            bit = 1 << v
            expand(r_size + 1, cand & g.rows[v], excl & g.rows[v])
            cand &= ~bit
            excl |= bit

    expand(0, (1 << g.n) - 1, 0)
    return best


def clique_stats(g: Graph) -> CliqueStats:
    return CliqueStats(clique_number(g), triangle_count(g), g.edge_count())


def is_connected(g: Graph) -> bool:
    """Single connected component; the empty graph counts as connected."""
    if g.n == 0:
        return True
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for v in _bits(frontier):
            nxt |= g.rows[v]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << g.n) - 1


# -- graph6 codec ----------------------------------------------------------


def encode_graph6(g: Graph) -> str:
    """Standard graph6: header byte n+63, then the upper-triangle bits in
    column-major order packed 6 per byte (offset 63, zero padded)."""
    if g.n > 62:
        raise Graph6Error("only n <= 62 supported")
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(g.rows[i] >> j & 1)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(g.n + 63)]
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def decode_graph6(s: str | bytes) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    if not s:
        raise Graph6Error("empty graph6 string")
    header = ord(s[0])
    if header == 126:
        raise Graph6Error("multi-byte graph6 headers (n > 62) not supported")
    if not 63 <= header <= 125:
        raise Graph6Error(f"bad graph6 header byte {header!r}")
    n = header - 63
    if n > HARD_CAP:
        raise Graph6Error(f"graph6 order {n} exceeds hard cap {HARD_CAP}")
    nbits = n * (n - 1) // 2
    body = s[1:]
    if len(body) != (nbits + 5) // 6:
        raise Graph6Error(f"graph6 body length {len(body)} wrong for n={n}")
    bits = []
    for ch in body:
        v = ord(ch)
        if not 63 <= v <= 126:
            raise Graph6Error(f"non-printable graph6 byte {v!r}")
        v -= 63
        bits.extend(v >> k & 1 for k in range(5, -1, -1))
    if any(bits[nbits:]):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))


# -- descriptor grammar ----------------------------------------------------


class SpecParseError(GraphError):
    """Graph-descriptor parse failure, annotated with the offending position."""

    def __init__(self, raw: str, pos: int, message: str):
        self.raw, self.pos = raw, pos
        super().__init__(f"{message} (at position {pos} in {raw!r})")


def parse_graph_spec(raw: str) -> Graph:
    """Parse the shared descriptor grammar:

    ``kite:p,q | path:n | complete:n | knm:n,m | gb:p | gc:p | g6:<string>``
    """
    if ":" not in raw:
        raise SpecParseError(raw, 0, "expected 'family:args'")
    head, _, tail = raw.partition(":")
    argpos = len(head) + 1

    def ints(count: int) -> list[int]:
        parts = tail.split(",")
        if len(parts) != count:
            raise SpecParseError(raw, argpos, f"{head} takes {count} integer argument(s)")
        vals = []
        pos = argpos
        for part in parts:
            try:
                vals.append(int(part))
            except ValueError:
                raise SpecParseError(raw, pos, f"not an integer: {part!r}") from None
            pos += len(part) + 1
        return vals

    try:
        if head == "kite":
            p, q = ints(2)
            return make_kite(KiteParams(p, q))
        if head == "path":
            return make_path(ints(1)[0])
        if head == "complete":
            return make_complete(ints(1)[0])
        if head == "knm":
            n, m = ints(2)
            return make_knm(n, m)
        if head == "gb":
            return make_gb(ints(1)[0])
        if head == "gc":
            return make_gc(ints(1)[0])
        if head == "g6":
            return decode_graph6(tail)
    except SpecParseError:
        raise
    except GraphError as exc:
        raise SpecParseError(raw, argpos, str(exc)) from None
    raise SpecParseError(raw, 0, f"unknown family {head!r}")


def kite_edge_count(p: int, q: int) -> int:
    return comb(p, 2) + q
