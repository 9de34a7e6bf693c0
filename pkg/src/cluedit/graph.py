"""Graphs, clusterings and edit sets for cluster editing.

Vertices are 0..n-1.  Adjacency is stored as one arbitrary-precision bitmask
per vertex; membership tests, symmetric difference and component extraction
are all bit operations, which keeps even reduction outputs with millions of
edges workable.  Edge sets are never materialized wholesale -- ``edges()``
iterates and ``m`` is a stored count.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of *mask* in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1.

    ``rows[v]`` is the open-neighbourhood bitmask of v.  Instances are
    immutable; edit operations return new graphs.
    """

    n: int
    rows: tuple[int, ...]
    m: int

    @staticmethod
    def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        m = 0
        for u, v in edges:
            if u == v or not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"bad edge ({u}, {v}) for n={n}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            m += 1
        return Graph(n, tuple(rows), m)

    @staticmethod
    def empty(n: int) -> "Graph":
        return Graph(n, (0,) * n, 0)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        return bits(self.rows[v])

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield edges as (u, v) with u < v, lexicographically."""
        full = (1 << self.n) - 1
        for u in range(self.n):
            above = self.rows[u] & (full << (u + 1))
            for v in bits(above):
                yield (u, v)

    def validate(self) -> None:
        m2 = 0
        for v in range(self.n):
            if self.rows[v] >> self.n:
                raise ValueError(f"row {v} has bits beyond n")
            if self.rows[v] >> v & 1:
                raise ValueError(f"self-loop at {v}")
            m2 += self.rows[v].bit_count()
            for u in bits(self.rows[v]):
                if not self.rows[u] >> v & 1:
                    raise ValueError(f"asymmetric edge ({v}, {u})")
        if m2 != 2 * self.m:
            raise ValueError(f"edge count {self.m} does not match rows")


@dataclass(frozen=True)
class Clustering:
    """Partition of 0..n-1 into clusters with dense ids 0..c-1."""

    assignment: tuple[int, ...]
    c: int

    def __post_init__(self) -> None:
        seen = set(self.assignment)
        if self.c < 0 or (self.assignment and seen != set(range(self.c))):
            raise ValueError("cluster ids must be dense 0..c-1 and nonempty")
        if not self.assignment and self.c != 0:
            raise ValueError("empty vertex set admits only c=0")

    @staticmethod
    def from_blocks(n: int, blocks: Iterable[Iterable[int]]) -> "Clustering":
        assignment = [-1] * n
        c = 0
        for block in blocks:
            hit = False
            for v in block:
                if assignment[v] != -1:
                    raise ValueError(f"vertex {v} in two blocks")
                assignment[v] = c
                hit = True
            if hit:
                c += 1
        if any(a == -1 for a in assignment):
            raise ValueError("blocks do not cover all vertices")
        return Clustering(tuple(assignment), c)

    def n(self) -> int:
        return len(self.assignment)

    def cluster_masks(self) -> list[int]:
        masks = [0] * self.c
        for v, a in enumerate(self.assignment):
            masks[a] |= 1 << v
        return masks

    def sizes(self) -> list[int]:
        sz = [0] * self.c
        for a in self.assignment:
            sz[a] += 1
        return sz


@dataclass(frozen=True)
class EditSet:
    """Set of vertex pairs to toggle; applying twice is the identity."""

    pairs: frozenset[tuple[int, int]]

    @staticmethod
    def from_pairs(pairs: Iterable[tuple[int, int]]) -> "EditSet":
        norm = set()
        for u, v in pairs:
            if u == v:
                raise ValueError(f"self-pair ({u}, {v})")
            norm.add((u, v) if u < v else (v, u))
        return EditSet(frozenset(norm))

    def __len__(self) -> int:
        return len(self.pairs)

    def split(self, g: Graph) -> tuple[list[tuple[int, int]], list[tuple[int, int]]]:
        """Return (additions, deletions) of this edit set relative to g."""
        add = sorted(p for p in self.pairs if not g.has_edge(*p))
        dele = sorted(p for p in self.pairs if g.has_edge(*p))
        return add, dele


# ---------------------------------------------------------------------------
# operations

def connected_components(g: Graph) -> list[int]:
    """Component vertex masks, ordered by smallest contained vertex id."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            grow = 0
            for u in bits(frontier):
                grow |= g.rows[u]
            frontier = grow & ~comp
            comp |= grow
        out.append(comp)
        seen |= comp
    return out


def is_cluster_graph(g: Graph) -> bool:
    """True iff every connected component induces a clique (no induced P3)."""
    for comp in connected_components(g):
        for v in bits(comp):
            if g.rows[v] != comp ^ (1 << v):
                return False
    return True


def edit_distance(g: Graph, h: Graph) -> int:
    """|E(g) symmetric-difference E(h)| for graphs on the same vertex set."""
    if g.n != h.n:
        raise ValueError(f"vertex count mismatch: {g.n} vs {h.n}")
    total = 0
    for v in range(g.n):
        total += (g.rows[v] ^ h.rows[v]).bit_count()
    return total // 2


def apply_edits(g: Graph, edits: EditSet) -> Graph:
    rows = list(g.rows)
    m = g.m
    for u, v in edits.pairs:
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise ValueError(f"edit pair ({u}, {v}) out of range")
        m += -1 if rows[u] >> v & 1 else 1
        rows[u] ^= 1 << v
        rows[v] ^= 1 << u
    return Graph(g.n, tuple(rows), m)


def cluster_graph_of(n: int, cl: Clustering) -> Graph:
    if len(cl.assignment) != n:
        raise ValueError("clustering size mismatch")
    masks = cl.cluster_masks()
    rows = tuple(masks[cl.assignment[v]] ^ (1 << v) for v in range(n))
    m = sum(s * (s - 1) // 2 for s in cl.sizes())
    return Graph(n, rows, m)


def clustering_to_edit_set(g: Graph, cl: Clustering) -> EditSet:
    """The unique edit set turning g into the cluster graph of cl."""
    if len(cl.assignment) != g.n:
        raise ValueError("clustering size mismatch")
    masks = cl.cluster_masks()
    full = (1 << g.n) - 1
    pairs = []
    for v in range(g.n):
        want = masks[cl.assignment[v]] ^ (1 << v)
        diff = (g.rows[v] ^ want) & (full << (v + 1))
        for u in bits(diff):
            pairs.append((v, u))
    return EditSet.from_pairs(pairs)


def induced_subgraph(g: Graph, keep: int) -> tuple[Graph, tuple[int, ...]]:
    """Induced subgraph on the vertex mask *keep*, with new -> old id map."""
    old = list(bits(keep))
    new_of = {o: i for i, o in enumerate(old)}
    rows = []
    m = 0
    for o in old:
        row = 0
        for u in bits(g.rows[o] & keep):
            row |= 1 << new_of[u]
        rows.append(row)
        m += row.bit_count()
    return Graph(len(old), tuple(rows), m // 2), tuple(old)


def twin_classes(g: Graph) -> list[int]:
    """Masks of maximal closed-neighbourhood twin classes.

    Two vertices are twins iff N[u] == N[v]; each class induces a clique.
    Ordered by smallest contained vertex id.
    """
    groups: dict[int, int] = {}
    order: list[int] = []
    for v in range(g.n):
        key = g.rows[v] | (1 << v)
        if key not in groups:
            groups[key] = 0
            order.append(key)
        groups[key] |= 1 << v
    return [groups[k] for k in order]


# ---------------------------------------------------------------------------
# text format: "c" comments, "p cep <n> <m>" header, "e <u> <v>" with 1-based ids

def format_graph(g: Graph) -> str:
    lines = [f"p cep {g.n} {g.m}"]
    for u, v in g.edges():
        lines.append(f"e {u + 1} {v + 1}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    n = m = None
    rows: list[int] = []
    count = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise ValueError(f"line {lineno}: duplicate header")
            if len(fields) != 4 or fields[1] != "cep":
                raise ValueError(f"line {lineno}: malformed header {line!r}")
            try:
                n, m = int(fields[2]), int(fields[3])
            except ValueError:
                raise ValueError(f"line {lineno}: malformed header {line!r}") from None
            if n < 0 or m < 0:
                raise ValueError(f"line {lineno}: negative counts")
            rows = [0] * n
        elif fields[0] == "e":
            if n is None:
                raise ValueError(f"line {lineno}: edge before header")
            if len(fields) != 3:
                raise ValueError(f"line {lineno}: malformed edge {line!r}")
            try:
                u, v = int(fields[1]) - 1, int(fields[2]) - 1
            except ValueError:
                raise ValueError(f"line {lineno}: malformed edge {line!r}") from None
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise ValueError(f"line {lineno}: vertex out of range in {line!r}")
            if rows[u] >> v & 1:
                raise ValueError(f"line {lineno}: duplicate edge {line!r}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
            count += 1
        else:
            raise ValueError(f"line {lineno}: unknown record {line!r}")
    if n is None:
        raise ValueError("missing header")
    if count != m:
        raise ValueError(f"header claims {m} edges, found {count}")
    return Graph(n, tuple(rows), count)


def write_graph(g: Graph, path) -> None:
    with open(path, "w") as fh:
        fh.write(format_graph(g))


def read_graph(path) -> Graph:
    with open(path) as fh:
        return parse_graph(fh.read())
