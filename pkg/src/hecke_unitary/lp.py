"""Dense exact simplex (two-phase, Bland's rule) for small linear programs.

Solves ``maximize c.x  subject to  A x <= b, x >= 0`` over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .rational import ONE, ZERO, q


@dataclass(frozen=True)
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[object] = None
    x: Optional[tuple] = None


def _pivot(T, z, basis, r, c):
    row = T[r]
    inv = ONE / row[c]
    T[r] = row = [x * inv for x in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f:
                T[i] = [a - f * b if b else a for a, b in zip(other, row)]
    f = z[c]
    if f:
        z[:] = [a - f * b if b else a for a, b in zip(z, row)]
    basis[r] = c


def _run(T, z, basis, allowed) -> str:
    while True:
        enter = next((j for j in allowed if z[j] < 0), None)
        if enter is None:
            return "optimal"
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                key = (ratio, basis[i])
                if best is None or key < best[0]:
                    best = (key, i)
        if best is None:
            return "unbounded"
        _pivot(T, z, basis, best[1], enter)


def maximize(c: Sequence, A: Sequence[Sequence], b: Sequence) -> LPResult:
    n = len(c)
    m = len(A)
    c = [q(x) for x in c]
    b = [q(x) for x in b]
    neg = [i for i in range(m) if b[i] < 0]
    n_art = len(neg)
    width = n + m + n_art
    T = []
    basis = []
    art_of_row = {}
    for i in range(m):
        row = [q(x) for x in A[i]] + [ZERO] * (m + n_art) + [b[i]]
        row[n + i] = ONE
        if b[i] < 0:
            row = [-x for x in row]
            k = n + m + len(art_of_row)
            art_of_row[i] = k
            row[k] = ONE
            basis.append(k)
        else:
            basis.append(n + i)
        T.append(row)
    everything = list(range(width))
    if n_art:
        # phase 1: maximize -(sum of artificials)
        z = [ZERO] * (width + 1)
        for k in art_of_row.values():
            z[k] = ONE
        for i, k in art_of_row.items():
            z = [a - b_ for a, b_ in zip(z, T[i])]
        _run(T, z, basis, everything)
        if z[-1] != 0:
            return LPResult("infeasible")
        arts = set(art_of_row.values())
        keep = []
        for r in range(len(T)):
            if basis[r] in arts:
                col = next((j for j in range(n + m) if T[r][j]), None)
                if col is None:
                    continue  # redundant row
                _pivot(T, [ZERO] * (width + 1), basis, r, col)
            keep.append(r)
        T = [T[r] for r in keep]
        basis = [basis[r] for r in keep]
    allowed = list(range(n + m))
    z = [ZERO] * (width + 1)
    for j in range(n):
        z[j] = -c[j]
    for i, bv in enumerate(basis):
        f = z[bv]
        if f:
            z = [a - f * x for a, x in zip(z, T[i])]
    status = _run(T, z, basis, allowed)
    if status != "optimal":
        return LPResult(status)
    x = [ZERO] * n
    for i, bv in enumerate(basis):
        if bv < n:
            x[bv] = T[i][-1]
    return LPResult("optimal", z[-1], tuple(x))
