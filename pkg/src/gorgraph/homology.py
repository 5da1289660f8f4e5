"""Simplicial complexes, exact reduced homology, and the Cohen-Macaulay test.

Faces are vertex bit masks. Homology is reduced: the chain complex carries
the empty face in dimension -1, so ``{∅}`` has ``H_{-1} = Z`` and a point
has vanishing reduced homology everywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Optional, Union

import numpy as np

from .graph import Graph, check_cap, iter_bits, mask_of, private_subgraph
from .indsets import _scan
from .smith import invariant_factors_sparse

ALL = "all"
CharSpec = Union[int, str]


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


def parse_char(value) -> CharSpec:
    """Normalise a characteristic selector: ``"all"``, ``0`` or a prime."""
    if isinstance(value, str):
        v = value.strip().lower()
        if v == ALL:
            return ALL
        try:
            value = int(v)
        except ValueError:
            raise ValueError(f"bad characteristic {value!r}") from None
    if value != 0 and not is_prime(value):
        raise ValueError(f"characteristic must be 0 or a prime, got {value}")
    return int(value)


class SimplicialComplex:
    """A complex given by its facets over the ground set ``0..ground-1``."""

    def __init__(self, ground: int, facets: Iterable, *, _faces=None):
        fs = sorted({mask_of(f) for f in facets})
        # drop non-maximal entries
        fs = [f for f in fs if not any(f != h and f & h == f for h in fs)]
        self.ground = ground
        self.facets = tuple(fs)
        if any(f >> ground for f in self.facets):
            raise ValueError("facet outside ground set")
        self._faces = _faces

    @property
    def dim(self) -> int:
        return max((f.bit_count() for f in self.facets), default=0) - 1

    def faces(self) -> list[int]:
        """All faces, the empty face included, in ascending mask order."""
        if self._faces is None:
            seen = set()
            for f in self.facets:
                sub = f
                while True:
                    seen.add(sub)
                    if sub == 0:
                        break
                    sub = (sub - 1) & f
            self._faces = tuple(sorted(seen))
        return list(self._faces)

    def f_vector(self) -> list[int]:
        """``f_{-1}, f_0, ..., f_dim``."""
        out = [0] * (self.dim + 2)
        for f in self.faces():
            out[f.bit_count()] += 1
        return out

    def is_face(self, f) -> bool:
        f = mask_of(f)
        return any(h & f == f for h in self.facets)

    def __repr__(self):
        return f"SimplicialComplex(ground={self.ground}, facets={[sorted(iter_bits(f)) for f in self.facets]})"


def independence_complex(g: Graph) -> SimplicialComplex:
    """Complex of independent sets of ``g``; facets are the maximal ones."""
    scan = _scan(g)
    return SimplicialComplex(g.n, scan.maximal, _faces=scan.sets)


def link(c: SimplicialComplex, f) -> SimplicialComplex:
    """``{A \\ F : F ⊆ A ∈ c}``, kept on the same ground set."""
    f = mask_of(f)
    if not c.is_face(f):
        raise ValueError(f"{sorted(iter_bits(f))} is not a face")
    return SimplicialComplex(c.ground, [h & ~f for h in c.facets if h & f == f])


def _boundary_columns(faces: list[int]) -> dict[int, tuple[list[int], list[dict]]]:
    """Per dimension ``i >= 0``: (i-faces, sparse columns of ∂_i into (i-1)-faces)."""
    by_dim: dict[int, list[int]] = {}
    for f in faces:
        by_dim.setdefault(f.bit_count() - 1, []).append(f)
    index = {d: {f: k for k, f in enumerate(fs)} for d, fs in by_dim.items()}
    out = {}
    for d, fs in by_dim.items():
        if d < 0:
            continue
        lower = index.get(d - 1, {})
        cols = []
        for f in fs:
            col = {}
            sign = 1
            for v in iter_bits(f):
                col[lower[f & ~(1 << v)]] = sign
                sign = -sign
            cols.append(col)
        out[d] = (fs, cols)
    return out


def boundary_matrices(c: SimplicialComplex) -> list[np.ndarray]:
    """``[∂_0, ∂_1, ..., ∂_dim]`` where ``∂_i`` maps i-faces to (i-1)-faces.

    Rows and columns follow ascending mask order of the faces; ``∂_0`` is the
    augmentation onto the empty face.
    """
    faces = c.faces()
    counts = c.f_vector()
    mats = []
    for d, (fs, cols) in sorted(_boundary_columns(faces).items()):
        m = np.zeros((counts[d], len(fs)), dtype=np.int64)
        for j, col in enumerate(cols):
            for r, v in col.items():
                m[r, j] = v
        mats.append(m)
    return mats


@dataclass(frozen=True)
class HomologyProfile:
    """Reduced integral homology, dimensions ``-1..dim``."""

    dim: int
    betti: tuple[int, ...]                 # betti[i + 1] is the free rank in dimension i
    torsion: tuple[tuple[int, ...], ...] = field(default=())

    def betti_q(self, i: int) -> int:
        return self.betti[i + 1] if -1 <= i <= self.dim else 0

    def torsion_at(self, i: int) -> tuple[int, ...]:
        return self.torsion[i + 1] if -1 <= i <= self.dim else ()

    def reduced_euler(self) -> int:
        return sum((-1) ** (k - 1) * b for k, b in enumerate(self.betti))

    def is_torsion_free(self) -> bool:
        return not any(self.torsion)


def homology(c: SimplicialComplex) -> HomologyProfile:
    return _homology_of_faces(tuple(c.faces()))


def _homology_of_faces(faces: tuple[int, ...]) -> HomologyProfile:
    if not faces:
        raise ValueError("the void complex has no reduced homology in this convention")
    top = max(f.bit_count() for f in faces) - 1
    counts = [0] * (top + 2)
    for f in faces:
        counts[f.bit_count()] += 1
    ranks = [0] * (top + 3)          # ranks[i + 1] = rank ∂_i, for i = -1..top+1
    tors: list[tuple[int, ...]] = [()] * (top + 3)
    for d, (_, cols) in _boundary_columns(list(faces)).items():
        factors = invariant_factors_sparse(cols)
        ranks[d + 1] = len(factors)
        tors[d + 1] = tuple(x for x in factors if x > 1)
    betti = tuple(counts[i + 1] - ranks[i + 1] - ranks[i + 2] for i in range(-1, top + 1))
    torsion = tuple(tors[i + 2] for i in range(-1, top + 1))
    return HomologyProfile(top, betti, torsion)


def betti_over(profile: HomologyProfile | SimplicialComplex, k: CharSpec) -> tuple[int, ...]:
    """Reduced Betti numbers over a field of characteristic ``k``, indexed
    like ``HomologyProfile.betti``; derived from the integral profile by
    universal coefficients."""
    if isinstance(profile, SimplicialComplex):
        profile = homology(profile)
    k = parse_char(k)
    if k == ALL:
        raise ValueError("betti numbers need a specific characteristic")
    if k == 0:
        return profile.betti
    out = []
    for i in range(-1, profile.dim + 1):
        extra = sum(1 for t in profile.torsion_at(i) if t % k == 0)
        extra += sum(1 for t in profile.torsion_at(i - 1) if t % k == 0)
        out.append(profile.betti_q(i) + extra)
    return tuple(out)


def vanishes_below(profile: HomologyProfile, top: int, k: CharSpec) -> Optional[int]:
    """First dimension ``i < top`` where reduced homology over ``k`` is
    nonzero, or ``None``. For ``k = ALL`` torsion counts as nonzero."""
    for i in range(-1, top):
        if profile.betti_q(i):
            return i
        if k == ALL:
            if profile.torsion_at(i):
                return i
        elif k != 0:
            if any(t % k == 0 for t in profile.torsion_at(i)):
                return i
            if any(t % k == 0 for t in profile.torsion_at(i - 1)):
                return i
    return None


@lru_cache(maxsize=1 << 14)
def _independence_homology(h: Graph) -> tuple[int, Optional[HomologyProfile]]:
    """(dim, profile) of the independence complex of ``h``; profile is
    ``None`` when the complex is a cone (isolated vertex), hence acyclic."""
    if h.n == 0:
        return -1, HomologyProfile(-1, (1,), ((),))
    scan = _scan(h)
    top = max(s.bit_count() for s in scan.maximal) - 1
    if any(nb == 0 for nb in h.adj):
        return top, None
    return top, _homology_of_faces(scan.sets)


@dataclass(frozen=True)
class CMResult:
    ok: bool
    face: Optional[int] = None      # independent set F whose link fails
    dim: Optional[int] = None       # first nonvanishing dimension

    def __bool__(self):
        return self.ok


def is_cm(g: Graph, k: CharSpec = ALL) -> CMResult:
    """Reisner test on the independence complex of ``g``.

    For every independent ``F`` (ascending mask order, ∅ first) the link is
    the independence complex of ``G_F``; its reduced homology over ``k`` must
    vanish below its dimension. ``k = ALL`` asks for every field at once,
    i.e. vanishing integral homology in that range.
    """
    check_cap(g)
    k = parse_char(k)
    for f in _scan(g).sets:
        h = private_subgraph(g, f)
        key = Graph(h.n, h.adj)
        top, prof = _independence_homology(key)
        if prof is None:
            continue
        bad = vanishes_below(prof, top, k)
        if bad is not None:
            return CMResult(False, f, bad)
    return CMResult(True)
