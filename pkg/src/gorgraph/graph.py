"""Simple undirected graphs on vertices ``0..n-1``.

Adjacency is stored as one integer bit mask per vertex, so vertex sets are
plain ``int`` masks throughout the package: bit ``v`` set means ``v`` is a
member. Helpers :func:`mask_of` and :func:`members` convert to and from
iterables.
"""

from __future__ import annotations

from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Optional

DEFAULT_SIZE_CAP = 24
_size_cap = DEFAULT_SIZE_CAP


class SizeCapError(ValueError):
    """Raised when an exponential-time operation is asked to process a graph
    with more vertices than the configured cap."""


def get_size_cap() -> int:
    return _size_cap


def set_size_cap(cap: int) -> None:
    global _size_cap
    if cap < 0:
        raise ValueError("size cap must be nonnegative")
    _size_cap = int(cap)


@contextmanager
def size_cap(cap: int):
    """Temporarily override the vertex cap."""
    old = _size_cap
    set_size_cap(cap)
    try:
        yield
    finally:
        set_size_cap(old)


def check_cap(g: "Graph") -> None:
    if g.n > _size_cap:
        raise SizeCapError(f"graph has {g.n} vertices, cap is {_size_cap}")


def mask_of(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph.

    ``adj[v]`` is the open neighbourhood of ``v`` as a bit mask. ``labels``
    maps each vertex back to the label it had in the graph this one was cut
    from (identity for freshly built graphs); it is ignored by ``==`` and
    ``hash``.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[int, ...] = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        adj = tuple(self.adj)
        object.__setattr__(self, "adj", adj)
        if len(adj) != self.n:
            raise ValueError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, nb in enumerate(adj):
            if nb & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside [0, {self.n})")
            if nb >> v & 1:
                raise ValueError(f"loop at vertex {v}")
            for u in iter_bits(nb):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(range(self.n)))
        elif len(self.labels) != self.n:
            raise ValueError("labels length does not match vertex count")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, tuple(adj))

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def num_edges(self) -> int:
        return sum(nb.bit_count() for nb in self.adj) // 2

    def is_independent(self, mask: int) -> bool:
        for v in iter_bits(mask):
            if self.adj[v] & mask:
                return False
        return True

    def original(self, mask: int) -> list[int]:
        """Original labels of the vertices in ``mask``."""
        return [self.labels[v] for v in iter_bits(mask)]

    def __str__(self):
        return f"Graph(n={self.n}, edges={self.edges()})"


# --- constructors -----------------------------------------------------------


@dataclass(frozen=True)
class CirculantSpec:
    """Parameters of ``C_n(S)``; ``S`` holds circular distances."""

    n: int
    connections: frozenset

    def __post_init__(self):
        conns = frozenset(int(s) for s in self.connections)
        object.__setattr__(self, "connections", conns)
        if self.n < 1:
            raise ValueError("circulant needs n >= 1")
        half = self.n // 2
        bad = sorted(s for s in conns if not 1 <= s <= half)
        if bad:
            raise ValueError(f"connections {bad} outside [1, {half}] for n={self.n}")

    @classmethod
    def parse(cls, text: str) -> "CirculantSpec":
        """Parse ``"n:s1,s2,..."``."""
        try:
            head, _, tail = text.partition(":")
            n = int(head)
            conns = [int(s) for s in tail.split(",") if s.strip()]
        except ValueError as exc:
            raise ValueError(f"bad circulant spec {text!r}") from exc
        if len(set(conns)) != len(conns):
            raise ValueError(f"duplicate connections in {text!r}")
        return cls(n, frozenset(conns))

    def graph(self) -> Graph:
        return circulant(self.n, self.connections)

    def __str__(self):
        return f"{self.n}:{','.join(map(str, sorted(self.connections)))}"


def circulant(n: int, connections: Iterable[int]) -> Graph:
    """``C_n(S)``: ``i ~ j`` iff ``min(|i-j|, n-|i-j|)`` lies in ``S``."""
    spec = CirculantSpec(n, frozenset(connections))
    adj = [0] * n
    for i in range(n):
        for s in spec.connections:
            adj[i] |= 1 << ((i + s) % n) | 1 << ((i - s) % n)
    return Graph(n, tuple(adj))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    for h in graphs:
        off = len(adj)
        adj.extend(nb << off for nb in h.adj)
    return Graph(len(adj), tuple(adj))


# --- structural operations --------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple(full & ~nb & ~(1 << v) for v, nb in enumerate(g.adj)), g.labels)


def closed_neighborhood(g: Graph, f) -> int:
    """``N[F]``: ``F`` together with every vertex adjacent to a member of ``F``."""
    f = mask_of(f)
    out = f
    for v in iter_bits(f):
        out |= g.adj[v]
    return out


def induced_subgraph(g: Graph, w) -> Graph:
    """Subgraph induced on ``w``, relabelled ``0..|w|-1`` in increasing order.

    The result's ``labels`` give the original label of every new vertex.
    """
    verts = members(mask_of(w))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        nb = 0
        for u in iter_bits(g.adj[v]):
            i = index.get(u)
            if i is not None:
                nb |= 1 << i
        adj.append(nb)
    return Graph(len(verts), tuple(adj), tuple(g.labels[v] for v in verts))


def private_subgraph(g: Graph, f) -> Graph:
    """``G_F = G \\ N[F]``."""
    return induced_subgraph(g, g.full_mask & ~closed_neighborhood(g, f))


def components(g: Graph) -> list[int]:
    """Connected components as masks, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp)
    return out


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def is_cycle_graph(g: Graph) -> Optional[int]:
    """Length ``k`` if ``g`` is a single cycle on ``k >= 3`` vertices, else ``None``."""
    if g.n < 3 or any(nb.bit_count() != 2 for nb in g.adj):
        return None
    if len(components(g)) != 1:
        return None
    return g.n


def is_complement_of_cycle(g: Graph) -> Optional[int]:
    return is_cycle_graph(complement(g))


def is_triangle_free(g: Graph) -> bool:
    for u in range(g.n):
        higher = g.adj[u] >> (u + 1) << (u + 1)
        for v in iter_bits(higher):
            if g.adj[v] & higher:
                return False
    return True


def degree_sequence(g: Graph) -> list[int]:
    """Vertex degrees, sorted in nonincreasing order."""
    return sorted((nb.bit_count() for nb in g.adj), reverse=True)


def is_bipartite(g: Graph) -> bool:
    colour: dict[int, int] = {}
    for s in range(g.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adj[v]):
                if u not in colour:
                    colour[u] = colour[v] ^ 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True
