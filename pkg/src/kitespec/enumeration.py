"""Isomorph-free graph generation and canonical forms.

Canonical form: vertices are first split into cells by iterated
degree/neighbor-degree refinement (an isomorphism invariant), then the
lexicographically minimal upper-triangle bit-string over all cell-respecting
orderings is found by backtracking with prefix pruning.  Two graphs share a
:class:`CanonicalKey` exactly when they are isomorphic.

Generation uses canonical augmentation: a child built by appending one vertex
is kept only when the appended vertex can sit in the last canonical position,
i.e. the inverse deletion is the canonical one.  That yields exactly one
representative per isomorphism class with no global dedup table.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from math import comb
from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, decode_graph6, encode_graph6, is_connected, triangle_count

FULL_ENUM_CAP = 9
CONSTRAINED_ENUM_CAP = 11


class EnumerationError(ValueError):
    pass


class CorruptCacheError(RuntimeError):
    """Cache payload does not match its manifest checksum; re-enumerate."""


@dataclass(frozen=True)
class CanonicalKey:
    n: int
    bits: int

    def __lt__(self, other: "CanonicalKey") -> bool:
        return (self.n, self.bits) < (other.n, other.bits)


@dataclass(frozen=True)
class EnumConstraints:
    n: int
    edges: int | None = None
    connected_only: bool = False
    triangles: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise EnumerationError("n must be non-negative")
        if self.edges is not None and not 0 <= self.edges <= comb(self.n, 2):
            raise EnumerationError(f"edge count {self.edges} out of range for n={self.n}")
        cap = FULL_ENUM_CAP if self.edges is None else CONSTRAINED_ENUM_CAP
        if self.n > cap:
            raise EnumerationError(
                f"n={self.n} beyond enumeration cap ({cap} "
                f"{'with' if self.edges is not None else 'without'} edge constraint)"
            )

    def key(self) -> str:
        blob = json.dumps(
            {"n": self.n, "edges": self.edges, "connected_only": self.connected_only,
             "triangles": self.triangles},
            sort_keys=True,
        )
        return hashlib.sha256(blob.encode()).hexdigest()[:16]


def _refinement_cells(g: Graph) -> list[list[int]]:
    """Vertex cells under iterated neighbor-label refinement, ordered by an
    isomorphism-invariant cell key."""
    n = g.n
    labels = [g.rows[v].bit_count() for v in range(n)]
    while True:
        keys = [
            (labels[v], tuple(sorted(labels[u] for u in g.neighbors(v))))
            for v in range(n)
        ]
        order = {key: rank for rank, key in enumerate(sorted(set(keys)))}
        new = [order[keys[v]] for v in range(n)]
        stable = len(set(new)) == len(set(labels))
        labels = new
        if stable:
            break
    cells: dict[int, list[int]] = {}
    for v, lab in enumerate(labels):
        cells.setdefault(lab, []).append(v)
    return [cells[lab] for lab in sorted(cells)]


def _canonical_search(g: Graph) -> tuple[tuple[int, ...], set[int]]:
    """Minimal column encoding over cell-respecting orderings, plus the set
    of vertices that occupy the last position in some minimizing ordering
    (the orbit of the canonical-deletion vertex)."""
    n = g.n
    if n == 0:
        return (), set()
    cells = _refinement_cells(g)
    cell_of_pos: list[list[int]] = []
    for cell in cells:
        cell_of_pos.extend([cell] * len(cell))
    best: list[int] | None = None
    last: set[int] = set()
    perm = [0] * n
    rows = g.rows

    def rec(pos: int, used: int, cols: list[int]):
        nonlocal best, last
        if pos == n:
            if best is None or cols < best:
                best = cols[:]
                last = {perm[-1]}
            elif cols == best:
                last.add(perm[-1])
            return
        for v in cell_of_pos[pos]:
            if used >> v & 1:
                continue
            col = 0
            rv = rows[v]
            for i in range(pos):
                col = col << 1 | (rv >> perm[i] & 1)
            cols.append(col)
            # lexicographic prefix prune against the incumbent minimum
            if best is None or cols <= best[: pos + 1]:
                perm[pos] = v
                rec(pos + 1, used | 1 << v, cols)
            cols.pop()

    rec(0, 0, [])
    assert best is not None
    return tuple(best), last


def _cols_to_bits(cols: tuple[int, ...]) -> int:
    bits = 0
    for j, col in enumerate(cols):
        bits = bits << j | col
    return bits


def canonical_form(g: Graph) -> CanonicalKey:
    cols, _ = _canonical_search(g)
    return CanonicalKey(g.n, _cols_to_bits(cols))


def canonical_graph(g: Graph) -> Graph:
    """A canonically labeled copy (equal for all members of the class)."""
    cols, _ = _canonical_search(g)
    rows = [0] * g.n
    for j, col in enumerate(cols):
        for i in range(j):
            if col >> (j - 1 - i) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(g.n, tuple(rows))


# -- canonical augmentation ---------------------------------------------------


def _extend(parent: Graph, mask: int) -> Graph:
    k = parent.n
    rows = list(parent.rows) + [mask]
    for i in range(k):
        if mask >> i & 1:
            rows[i] |= 1 << k
    return Graph(k + 1, tuple(rows))


def enumerate_graphs(
    constraints: EnumConstraints,
    partition: tuple[int, int] | None = None,
) -> Iterator[Graph]:
    """Yield one representative per isomorphism class on ``constraints.n``
    vertices, in a deterministic order (children explored in ascending
    neighbor-set order).

    ``partition=(k, K)`` restricts the walk to the k-th of K deterministic
    subtrees; merging all K streams reproduces the full stream as a set.
    """
    n = constraints.n
    if n == 0:
        return
    if partition is not None:
        k, total = partition
        if not (total >= 1 and 0 <= k < total):
            raise EnumerationError(f"bad partition {partition}")
    target_edges = constraints.edges
    target_tri = constraints.triangles
    max_total = comb(n, 2)

    def viable(g: Graph) -> bool:
        if target_edges is not None:
            m = g.edge_count()
            if m > target_edges:
                return False
            if m + (max_total - comb(g.n, 2)) < target_edges:
                return False
        if target_tri is not None and triangle_count(g) > target_tri:
            return False
        return True

    def children(parent: Graph) -> Iterator[Graph]:
        seen: set[CanonicalKey] = set()
        k = parent.n
        for mask in range(1 << k):
            child = _extend(parent, mask)
            if not viable(child):
                continue
            cols, last = _canonical_search(child)
            if k not in last:
                continue
            key = CanonicalKey(child.n, _cols_to_bits(cols))
            if key in seen:
                continue
            seen.add(key)
            yield child

    def accepted(g: Graph) -> bool:
        if target_edges is not None and g.edge_count() != target_edges:
            return False
        if target_tri is not None and triangle_count(g) != target_tri:
            return False
        if constraints.connected_only and not is_connected(g):
            return False
        return True

    split_level = min(4, n) if partition is not None else None

    def walk(g: Graph, index: list[int]) -> Iterator[Graph]:
        if split_level is not None and g.n == split_level:
            mine = index[0] % partition[1] == partition[0]
            index[0] += 1
            if not mine:
                return
        if g.n == n:
            if accepted(g):
                yield g
            return
        for child in children(g):
            yield from walk(child, index)

    root = Graph(1, (0,))
    if not viable(root):
        return
    yield from walk(root, [0])


def brute_force_classes(n: int, connected_only: bool = False) -> set[CanonicalKey]:
    """Oracle: canonicalize every labeled graph on n vertices directly."""
    keys = set()
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
        g = Graph(n, tuple(rows))
        if connected_only and not is_connected(g):
            continue
        keys.add(canonical_form(g))
    return keys


# -- on-disk graph6 cache -----------------------------------------------------


def _checksum(lines: list[str]) -> str:
    h = hashlib.sha256()
    for line in lines:
        h.update(line.encode())
        h.update(b"\n")
    return h.hexdigest()


def cache_store(cache_dir: str | Path, constraints: EnumConstraints, graphs: Iterable[Graph]) -> Path:
    """Persist a stream as graph6 lines plus a JSON manifest with a content
    checksum; returns the payload path."""
    base = Path(cache_dir) / f"n{constraints.n}"
    base.mkdir(parents=True, exist_ok=True)
    lines = [encode_graph6(g) for g in graphs]
    payload = base / f"{constraints.key()}.g6"
    payload.write_text("".join(line + "\n" for line in lines))
    manifest = {
        "n": constraints.n,
        "constraints": {
            "edges": constraints.edges,
            "connected_only": constraints.connected_only,
            "triangles": constraints.triangles,
        },
        "count": len(lines),
        "checksum": _checksum(lines),
    }
    (base / f"{constraints.key()}.json").write_text(json.dumps(manifest, indent=1))
    return payload


def cache_load(cache_dir: str | Path, constraints: EnumConstraints) -> list[Graph]:
    """Load a cached stream, verifying count and checksum; raises
    CorruptCacheError on any mismatch (never silently reuses bad data)."""
    base = Path(cache_dir) / f"n{constraints.n}"
    payload = base / f"{constraints.key()}.g6"
    manifest_path = base / f"{constraints.key()}.json"
    if not payload.exists() or not manifest_path.exists():
        raise FileNotFoundError(f"no cache entry for {constraints}")
    manifest = json.loads(manifest_path.read_text())
    lines = payload.read_text().splitlines()
    if len(lines) != manifest["count"] or _checksum(lines) != manifest["checksum"]:
        raise CorruptCacheError(f"cache entry {payload} fails verification")
    return [decode_graph6(line) for line in lines]


def enumerate_cached(
    constraints: EnumConstraints, cache_dir: str | Path | None = None
) -> list[Graph]:
    """Enumerate with an optional read-through cache."""
    if cache_dir is not None:
        try:
            return cache_load(cache_dir, constraints)
        except (FileNotFoundError, CorruptCacheError):
            pass
    graphs = list(enumerate_graphs(constraints))
    if cache_dir is not None:
        cache_store(cache_dir, constraints, graphs)
    return graphs
