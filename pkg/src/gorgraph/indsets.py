"""Independent sets and the statistics built on them.

All enumeration is exhaustive over bit masks and therefore guarded by the
vertex cap from :mod:`gorgraph.graph`.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from .graph import Graph, check_cap, iter_bits


@dataclass(frozen=True)
class _Scan:
    sets: tuple[int, ...]       # every independent set, ascending mask order
    maximal: tuple[int, ...]    # the maximal ones, same order


@lru_cache(maxsize=256)
def _scan(g: Graph) -> _Scan:
    check_cap(g)
    adj = g.adj
    full = g.full_mask
    out: list[int] = []
    maximal: list[int] = []

    # Deciding the highest undecided vertex first, "exclude" before "include",
    # emits sets in ascending integer order.
    def rec(v: int, cur: int, forb: int, dom: int) -> None:
        if v < 0:
            out.append(cur)
            if dom == full:
                maximal.append(cur)
            return
        rec(v - 1, cur, forb, dom)
        if not forb >> v & 1:
            bit = 1 << v
            rec(v - 1, cur | bit, forb | adj[v], dom | adj[v] | bit)

    rec(g.n - 1, 0, 0, 0)
    return _Scan(tuple(out), tuple(maximal))


def enumerate_independent_sets(g: Graph) -> Iterator[int]:
    """Yield every independent set of ``g`` (the empty set included) once,
    in ascending bit-mask order."""
    yield from _scan(g).sets


def maximal_independent_sets(g: Graph) -> list[int]:
    return list(_scan(g).maximal)


@dataclass(frozen=True)
class IndependenceSummary:
    alpha: int
    coeffs: tuple[int, ...]
    maximal_sizes: frozenset

    def at(self, x: int) -> int:
        """Evaluate the independence polynomial at an integer."""
        return sum(a * x**i for i, a in enumerate(self.coeffs))


def independence_summary(g: Graph) -> IndependenceSummary:
    scan = _scan(g)
    alpha = max(s.bit_count() for s in scan.sets)
    coeffs = [0] * (alpha + 1)
    for s in scan.sets:
        coeffs[s.bit_count()] += 1
    sizes = frozenset(s.bit_count() for s in scan.maximal)
    return IndependenceSummary(alpha, tuple(coeffs), sizes)


def independence_number(g: Graph) -> int:
    return independence_summary(g).alpha


def euler_condition(g: Graph) -> bool:
    """``I(G, -1) == (-1)**alpha``."""
    s = independence_summary(g)
    return s.at(-1) == (-1) ** s.alpha


def is_well_covered(g: Graph) -> bool:
    s = independence_summary(g)
    return s.maximal_sizes == {s.alpha}


def maximum_independent_sets(g: Graph) -> list[int]:
    alpha = independence_number(g)
    return [s for s in _scan(g).maximal if s.bit_count() == alpha]


# --- W2 ---------------------------------------------------------------------


@dataclass(frozen=True)
class W2Certificate:
    """Outcome of a W2 test.

    On failure exactly one witness is filled in: ``pair`` holds two disjoint
    independent sets with no disjoint maximum extensions, ``lemma`` holds an
    independent set ``B`` and a vertex ``v`` satisfying the neighbourhood
    obstruction. ``degenerate`` marks graphs with fewer than two vertices.
    """

    verdict: bool
    pair: Optional[tuple[int, int]] = None
    lemma: Optional[tuple[int, int]] = None
    degenerate: bool = False

    def __bool__(self):
        return self.verdict

    def check(self, g: Graph) -> bool:
        """Re-verify the failure witness against the definitions."""
        if self.verdict:
            return self.pair is None and self.lemma is None
        if self.degenerate:
            return g.n < 2
        if self.pair is not None:
            return _pair_fails(g, *self.pair)
        if self.lemma is not None:
            return _lemma_holds(g, *self.lemma)
        return False


def _pair_fails(g: Graph, a1: int, a2: int) -> bool:
    if a1 & a2 or not g.is_independent(a1) or not g.is_independent(a2):
        return False
    big = maximum_independent_sets(g)
    for b1 in big:
        if b1 & a1 != a1:
            continue
        for b2 in big:
            if b2 & a2 == a2 and not b1 & b2:
                return False
    return True


def _lemma_holds(g: Graph, b: int, v: int) -> bool:
    if not (b >> v & 1) or not g.is_independent(b):
        return False
    vbit = 1 << v
    return all(b & g.adj[x] != vbit for x in iter_bits(g.adj[v]))


def is_w2(g: Graph) -> W2Certificate:
    """Exhaustive W2 test.

    Scans unordered pairs ``(X, Y)`` of disjoint independent sets with
    ``X <= Y`` as masks, in lexicographic order of ``(X, Y)``; the pair
    ``(∅, ∅)`` is included. The first pair that does not extend to two
    disjoint maximum independent sets is returned as the witness.
    """
    if g.n < 2:
        return W2Certificate(False, degenerate=True)
    scan = _scan(g)
    big = maximum_independent_sets(g)
    # sup[A]: bitset of indices of maximum sets containing A
    sup: dict[int, int] = {s: 0 for s in scan.sets}
    for j, m in enumerate(big):
        bit = 1 << j
        sub = m
        while True:
            sup[sub] |= bit
            if sub == 0:
                break
            sub = (sub - 1) & m
    compat = []
    for m in big:
        c = 0
        for i, m2 in enumerate(big):
            if not m & m2:
                c |= 1 << i
        compat.append(c)

    sets = scan.sets
    for xi, x in enumerate(sets):
        reach = 0
        for i in iter_bits(sup[x]):
            reach |= compat[i]
        if x == 0 and not reach & sup[0]:
            return W2Certificate(False, pair=(0, 0))
        for y in sets[xi + 1:]:
            if y & x:
                continue
            if not reach & sup[y]:
                return W2Certificate(False, pair=(x, y))
    return W2Certificate(True)


def w2_lemma_witness(g: Graph) -> Optional[tuple[int, int]]:
    """First ``(B, v)`` with ``v`` in independent ``B`` such that no neighbour
    ``x`` of ``v`` has ``B ∩ N(x) = {v}``; such a pair rules out W2."""
    for b in _scan(g).sets:
        for v in iter_bits(b):
            if _lemma_holds(g, b, v):
                return b, v
    return None
