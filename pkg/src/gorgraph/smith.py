"""Smith normal form invariants of integer matrices.

Boundary matrices of simplicial complexes are sparse with unit entries, so
the bulk of the work is a sparse elimination that pivots on entries of
absolute value one. Whatever survives (no unit entries left) goes through a
dense Smith reduction pivoting on the smallest nonzero magnitude.
Arithmetic is exact Python ``int`` throughout.
"""

from __future__ import annotations

from collections import defaultdict
from math import gcd
from typing import Sequence


def invariant_factors_sparse(columns: Sequence[dict], nrows: int | None = None) -> list[int]:
    """Nonzero invariant factors ``d_1 | d_2 | ...`` of a sparse matrix.

    ``columns[j]`` maps row index to entry. ``nrows`` is accepted for
    symmetry with the dense routine but not needed.
    """
    cols = [dict(c) for c in columns]
    for c in cols:
        for r in [r for r, v in c.items() if v == 0]:
            del c[r]
    rows: dict[int, set] = defaultdict(set)
    for j, c in enumerate(cols):
        for r in c:
            rows[r].add(j)
    alive = [j for j, c in enumerate(cols) if c]
    units = 0

    progress = True
    while progress:
        progress = False
        still = []
        for j in alive:
            c = cols[j]
            if not c:
                continue
            best = None
            for r, v in c.items():
                if v == 1 or v == -1:
                    if best is None or len(rows[r]) < len(rows[best]):
                        best = r
            if best is None:
                still.append(j)
                continue
            r = best
            p = c[r]
            for j2 in list(rows[r]):
                if j2 == j:
                    continue
                c2 = cols[j2]
                f = c2[r] * p
                for rr, v in c.items():
                    nv = c2.get(rr, 0) - f * v
                    if nv:
                        if rr not in c2:
                            rows[rr].add(j2)
                        c2[rr] = nv
                    else:
                        del c2[rr]
                        rows[rr].discard(j2)
            for rr in c:
                rows[rr].discard(j)
            cols[j] = {}
            units += 1
            progress = True
        alive = [j for j in still if cols[j]]

    rest = [cols[j] for j in alive if cols[j]]
    if not rest:
        return [1] * units
    row_ids = sorted({r for c in rest for r in c})
    pos = {r: i for i, r in enumerate(row_ids)}
    dense = [[0] * len(rest) for _ in row_ids]
    for j, c in enumerate(rest):
        for r, v in c.items():
            dense[pos[r]][j] = v
    return [1] * units + invariant_factors(dense)


def _diagonalize(m: list[list[int]]) -> list[int]:
    """Reduce to a diagonal (not yet a divisibility chain); destroys ``m``."""
    diag = []
    while m and m[0]:
        nz = [(abs(v), i, j) for i, row in enumerate(m) for j, v in enumerate(row) if v]
        if not nz:
            break
        _, pi, pj = min(nz)
        m[0], m[pi] = m[pi], m[0]
        for row in m:
            row[0], row[pj] = row[pj], row[0]
        while True:
            p = m[0][0]
            moved = False
            for i in range(1, len(m)):
                if m[i][0]:
                    q = m[i][0] // p
                    if q:
                        ri, r0 = m[i], m[0]
                        for k in range(len(r0)):
                            ri[k] -= q * r0[k]
                    if m[i][0]:
                        m[0], m[i] = m[i], m[0]
                        moved = True
                        break
            if moved:
                continue
            r0 = m[0]
            for j in range(1, len(r0)):
                if r0[j]:
                    q = r0[j] // p
                    if q:
                        for row in m:
                            row[j] -= q * row[0]
                    if r0[j]:
                        for row in m:
                            row[0], row[j] = row[j], row[0]
                        moved = True
                        break
            if not moved:
                break
        diag.append(abs(m[0][0]))
        m = [row[1:] for row in m[1:]]
    return diag


def invariant_factors(matrix) -> list[int]:
    """Nonzero invariant factors of a dense integer matrix (list of rows or
    anything with ``tolist``)."""
    if hasattr(matrix, "tolist"):
        matrix = matrix.tolist()
    m = [[int(v) for v in row] for row in matrix]
    diag = _diagonalize(m)
    # turn an arbitrary diagonal into a divisibility chain
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a // g * b
    return sorted(diag)

