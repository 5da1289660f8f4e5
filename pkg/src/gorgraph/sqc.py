"""SQC structure: simplices, basic 5-cycles, basic 4-cycles and the vertex
partition built from them.

A 5-cycle here is any cycle subgraph on five vertices, chords allowed. A
chord joins two vertices of degree at least 3, so a chorded 5-cycle is never
basic; basic 5-cycles are therefore always induced and the induced and
non-induced readings select the same parts.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .graph import (
    Graph,
    check_cap,
    components,
    induced_subgraph,
    is_cycle_graph,
    iter_bits,
    mask_of,
)
from .indsets import independence_summary


class NotSQCError(ValueError):
    pass


def _is_clique(g: Graph, mask: int) -> bool:
    for v in iter_bits(mask):
        if (mask & ~(1 << v)) & ~g.adj[v]:
            return False
    return True


def simplicial_vertices(g: Graph) -> int:
    """Mask of vertices whose closed neighbourhood is a clique."""
    out = 0
    for v in range(g.n):
        if _is_clique(g, g.adj[v] | 1 << v):
            out |= 1 << v
    return out


def simplices(g: Graph) -> list[int]:
    """Distinct closed neighbourhoods of simplicial vertices, ascending."""
    return sorted({g.adj[v] | 1 << v for v in iter_bits(simplicial_vertices(g))})


def five_cycles(g: Graph) -> list[tuple[int, ...]]:
    """Every 5-cycle subgraph once, as ``(v0, ..., v4)`` with ``v0`` the least
    vertex and ``v1 < v4``."""
    out = []
    for v0 in range(g.n):
        higher = g.full_mask & ~((1 << (v0 + 1)) - 1)

        def walk(path, used):
            last = path[-1]
            if len(path) == 5:
                if g.has_edge(last, v0) and path[1] < path[4]:
                    out.append(tuple(path))
                return
            for u in iter_bits(g.adj[last] & higher & ~used):
                path.append(u)
                walk(path, used | 1 << u)
                path.pop()

        walk([v0], 1 << v0)
    return sorted(out)


def is_basic_five_cycle(g: Graph, cycle) -> bool:
    high = [v for v in cycle if g.degree(v) > 2]
    return not any(g.has_edge(u, v) for i, u in enumerate(high) for v in high[i + 1:])


def basic_five_cycles(g: Graph) -> list[tuple[int, ...]]:
    return [c for c in five_cycles(g) if is_basic_five_cycle(g, c)]


def four_cycles(g: Graph) -> list[tuple[int, ...]]:
    out = []
    for v0 in range(g.n):
        higher = g.full_mask & ~((1 << (v0 + 1)) - 1)
        for v1 in iter_bits(g.adj[v0] & higher):
            for v2 in iter_bits(g.adj[v1] & higher & ~(1 << v1)):
                for v3 in iter_bits(g.adj[v2] & g.adj[v0] & higher & ~(1 << v1 | 1 << v2)):
                    if v1 < v3:
                        out.append((v0, v1, v2, v3))
    return sorted(out)


def basic_four_cycles(g: Graph) -> list[tuple[tuple[int, ...], int]]:
    """``(cycle, B(C))`` for each basic 4-cycle.

    The degree-2 vertices of the cycle must be exactly two and consecutive on
    it; each of the other two vertices must lie in a simplex or on a basic
    5-cycle.
    """
    covered = 0
    for s in simplices(g):
        covered |= s
    for c in basic_five_cycles(g):
        covered |= mask_of(c)
    out = []
    for cyc in four_cycles(g):
        low = [i for i, v in enumerate(cyc) if g.degree(v) == 2]
        if len(low) != 2 or (low[1] - low[0]) % 4 not in (1, 3):
            continue
        others = [v for i, v in enumerate(cyc) if i not in low]
        if all(covered >> v & 1 for v in others):
            out.append((cyc, mask_of(cyc[i] for i in low)))
    return out


@dataclass
class SqcPartition:
    simplices: list[int] = field(default_factory=list)
    five_cycles: list[tuple[int, ...]] = field(default_factory=list)
    four_cycle_basics: list[tuple[tuple[int, ...], int]] = field(default_factory=list)

    @property
    def counts(self) -> tuple[int, int, int]:
        """``(m, t, r)``."""
        return len(self.simplices), len(self.five_cycles), len(self.four_cycle_basics)

    @property
    def predicted_alpha(self) -> int:
        m, t, r = self.counts
        return m + 2 * t + r

    def parts(self) -> list[int]:
        return (list(self.simplices) + [mask_of(c) for c in self.five_cycles]
                + [b for _, b in self.four_cycle_basics])

    def validate(self, g: Graph) -> bool:
        """Re-check every part from the definitions, independently of the search."""
        seen = 0
        for p in self.parts():
            if p & seen:
                return False
            seen |= p
        if seen != g.full_mask:
            return False
        simp = set(simplices(g))
        if any(s not in simp for s in self.simplices):
            return False
        for c in self.five_cycles:
            if len(set(c)) != 5 or not all(g.has_edge(c[i], c[(i + 1) % 5]) for i in range(5)):
                return False
            if not is_basic_five_cycle(g, c):
                return False
        basic4 = {(cyc, b) for cyc, b in basic_four_cycles(g)}
        return all((tuple(cyc), b) in basic4 for cyc, b in self.four_cycle_basics)

    def to_dict(self) -> dict:
        return {
            "simplices": [sorted(iter_bits(s)) for s in self.simplices],
            "fiveCycles": [list(c) for c in self.five_cycles],
            "fourCycleBasics": [{"cycle": list(c), "basics": sorted(iter_bits(b))}
                                for c, b in self.four_cycle_basics],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, d: dict) -> "SqcPartition":
        return cls(
            [mask_of(s) for s in d["simplices"]],
            [tuple(c) for c in d["fiveCycles"]],
            [(tuple(q["cycle"]), mask_of(q["basics"])) for q in d["fourCycleBasics"]],
        )


_SIMPLEX, _FIVE, _FOUR = 0, 1, 2


def find_sqc_partition(g: Graph) -> Optional[SqcPartition]:
    """Exact cover of ``V(G)`` by simplices, basic 5-cycles and basic-vertex
    pairs of basic 4-cycles, or ``None`` if no such partition exists."""
    check_cap(g)
    cands: dict[int, tuple[int, object]] = {}
    for s in simplices(g):
        cands.setdefault(s, (_SIMPLEX, s))
    for c in basic_five_cycles(g):
        cands.setdefault(mask_of(c), (_FIVE, c))
    for cyc, b in basic_four_cycles(g):
        cands.setdefault(b, (_FOUR, (cyc, b)))
    order = sorted(cands, key=lambda m: ((m & -m).bit_length(), cands[m][0], m))
    by_vertex: list[list[int]] = [[] for _ in range(g.n)]
    for m in order:
        for v in iter_bits(m):
            by_vertex[v].append(m)

    chosen: list[int] = []

    def search(uncovered: int) -> bool:
        if not uncovered:
            return True
        best, best_opts = None, None
        for v in iter_bits(uncovered):
            opts = [m for m in by_vertex[v] if m & uncovered == m]
            if best_opts is None or len(opts) < len(best_opts):
                best, best_opts = v, opts
                if not opts:
                    return False
        for m in best_opts:
            chosen.append(m)
            if search(uncovered & ~m):
                return True
            chosen.pop()
        return False

    if not search(g.full_mask):
        return None
    part = SqcPartition()
    for m in sorted(chosen, key=order.index):
        kind, payload = cands[m]
        if kind == _SIMPLEX:
            part.simplices.append(payload)
        elif kind == _FIVE:
            part.five_cycles.append(payload)
        else:
            part.four_cycle_basics.append(payload)
    if not part.validate(g):
        raise AssertionError("search produced an invalid SQC partition")
    return part


def sqc_gorenstein(g: Graph) -> bool:
    """For an SQC graph without isolated vertices: Gorenstein exactly when
    every component is an edge or a 5-cycle."""
    if g.n == 0 or any(nb == 0 for nb in g.adj):
        raise ValueError("graph must be nonempty with no isolated vertex")
    if find_sqc_partition(g) is None:
        raise NotSQCError("graph is not SQC")
    for c in components(g):
        h = induced_subgraph(g, c)
        if not (h.n == 2 or is_cycle_graph(h) == 5):
            return False
    return True


def check_alpha(g: Graph, part: SqcPartition) -> bool:
    """Well-covered with ``alpha = m + 2t + r``."""
    s = independence_summary(g)
    return s.maximal_sizes == {s.alpha} and s.alpha == part.predicted_alpha
