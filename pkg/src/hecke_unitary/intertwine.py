"""Normalized long intertwining operators and exact inertia of symmetric forms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from gmpy2 import lcm, mpz

from .rational import ONE, ZERO, Matrix, identity, is_symmetric, matmul, q
from .rootsys import RootSystem, act, is_hermitian
from .wreps import WRep


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int
    complete: bool = True  # False when elimination stopped at the first negative pivot

    @property
    def definite(self) -> bool:
        return self.negative == 0 and self.zero == 0

    @property
    def semidefinite(self) -> bool:
        return self.negative == 0

    def as_tuple(self) -> tuple:
        return (self.positive, self.negative, self.zero)

    def to_json(self) -> dict:
        d = {"positive": self.positive, "negative": self.negative, "zero": self.zero}
        if not self.complete:
            d["complete"] = False
        return d


@dataclass(frozen=True)
class OperatorResult:
    matrix: Matrix
    chi: tuple
    rep_name: str
    schedule: tuple  # the scalars t_j, in word order


def rank_one_factor(rep: WRep, simple_index: int, t) -> Matrix:
    """Identity on the +1 eigenspace of s, (1-t)/(1+t) on the -1 eigenspace."""
    t = q(t)
    if t == -1:
        raise ZeroDivisionError("rank-one factor has a pole at t = -1")
    c = (1 - t) / (1 + t)
    g = rep.gens[simple_index]
    half = (1 - c) / 2
    n = rep.dim
    # P+ + c P- = I - (1 - c) (I - g) / 2
    return tuple(
        tuple((ONE if i == j else ZERO) - half * ((ONE if i == j else ZERO) - g[i][j]) for j in range(n))
        for i in range(n)
    )


def factor_schedule(rs: RootSystem, chi: Sequence, word: Sequence[int]) -> tuple:
    """t_j = <alpha_{i_j}, s_{i_{j+1}} ... s_{i_k} chi> for a reduced word (i_1..i_k)."""
    v = tuple(q(x) for x in chi)
    ts = [ZERO] * len(word)
    for j in range(len(word) - 1, -1, -1):
        i = word[j]
        a = rs.simple_roots[i]
        ts[j] = sum(x * y for x, y in zip(a, v))
        v = rs.reflect_simple(i, v)
    return tuple(ts)


def long_operator(
    rep: WRep, rs: RootSystem, chi: Sequence, word: Optional[Sequence[int]] = None
) -> OperatorResult:
    """Product F_1 ... F_k of rank-one factors along a reduced word of w0."""
    chi = tuple(q(x) for x in chi)
    if len(chi) != rs.ambient_dim:
        raise ValueError("parameter has wrong dimension")
    if not rs.is_dominant(chi):
        raise ValueError("parameter is not dominant")
    word = tuple(word) if word is not None else rs.longest.word
    ts = factor_schedule(rs, chi, word)
    if any(t < 0 for t in ts):
        raise AssertionError("negative factor scalar at a dominant parameter")
    cols = rep.sparse_gens
    n = rep.dim
    M = [list(r) for r in identity(n)]
    for i, t in zip(word, ts):
        if not t:
            continue
        c = (1 - t) / (1 + t)
        half = (1 - c) / 2
        gcols = cols[i]
        # M <- M - half * (M - M g)
        for row in M:
            mg = [ZERO] * n
            for j in range(n):
                s = ZERO
                for k, x in gcols[j]:
                    y = row[k]
                    if y:
                        s += y * x
                mg[j] = s
            for j in range(n):
                d = row[j] - mg[j]
                if d:
                    row[j] -= half * d
    return OperatorResult(tuple(tuple(r) for r in M), chi, rep.name, ts)


def hermitian_form(op: OperatorResult, rep: WRep, rs: Optional[RootSystem] = None) -> Matrix:
    """The invariant form composed with the operator; checked to be symmetric."""
    if rs is not None and not is_hermitian(rs, op.chi):
        raise ValueError("parameter is not hermitian (w0 chi != -chi)")
    h = matmul(rep.form, op.matrix)
    if not is_symmetric(h):
        raise AssertionError(f"form for {rep.name} is not symmetric")
    return h


def _jacobi_inertia(m, stop_at_negative: bool) -> Optional[Inertia]:
    """Fraction-free (Bareiss) leading minors; sign changes count negative squares.

    Returns None when a leading minor vanishes.
    """
    n = len(m)
    den = mpz(1)
    for r in m:
        for x in r:
            d = q(x).denominator
            if d != 1:
                den = lcm(den, d)
    a = [[mpz(q(x) * den) for x in r] for r in m]
    prev = mpz(1)
    sign = 1
    neg = 0
    for k in range(n):
        p = a[k][k]
        if not p:
            return None
        s = 1 if p > 0 else -1
        if s != sign:
            neg += 1
            if stop_at_negative:
                return Inertia(k + 1 - neg, neg, 0, complete=False)
        sign = s
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            f = ri[k]
            if f:
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j] - f * rk[j]) // prev
            else:
                for j in range(k + 1, n):
                    ri[j] = (p * ri[j]) // prev
        prev = p
    return Inertia(n - neg, neg, 0)


def inertia(m: Sequence[Sequence], stop_at_negative: bool = False) -> Inertia:
    """Signature of a symmetric rational matrix.

    Tries the leading-minor sign rule first and falls back to symmetric
    Gaussian elimination (congruence) with 2x2 hyperbolic pivots.
    """
    if any(len(r) != len(m) for r in m):
        raise ValueError("matrix is not square")
    fast = _jacobi_inertia(m, stop_at_negative)
    if fast is not None:
        return fast
    return _congruence_inertia(m)


def _congruence_inertia(m: Sequence[Sequence]) -> Inertia:
    a = [list(map(q, r)) for r in m]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix is not square")
    pos = neg = 0
    alive = list(range(n))
    while alive:
        p = next((i for i in alive if a[i][i]), None)
        if p is not None:
            d = a[p][p]
            if d > 0:
                pos += 1
            else:
                neg += 1
            alive.remove(p)
            rowp = a[p]
            for i in alive:
                f = rowp[i]
                if not f:
                    continue
                f = f / d
                ri = a[i]
                for j in alive:
                    x = rowp[j]
                    if x:
                        ri[j] -= f * x
            continue
        pair = next(((i, j) for i in alive for j in alive if j > i and a[i][j]), None)
        if pair is None:
            break
        # hyperbolic 2x2 block [[0, b], [b, 0]] has one positive and one negative square
        i0, j0 = pair
        b = a[i0][j0]
        pos += 1
        neg += 1
        alive.remove(i0)
        alive.remove(j0)
        ri0, rj0 = a[i0], a[j0]
        for i in alive:
            u, v = ri0[i], rj0[i]
            if not u and not v:
                continue
            ri = a[i]
            for j in alive:
                # subtract [u v] * inv([[0,b],[b,0]]) * [x; y] with x = a[i0][j], y = a[j0][j]
                x, y = ri0[j], rj0[j]
                if x or y:
                    ri[j] -= (u * y + v * x) / b
    return Inertia(pos, neg, n - pos - neg)


def is_reducible(rs: RootSystem, chi: Sequence) -> bool:
    chi = tuple(q(x) for x in chi)
    return any(sum(x * y for x, y in zip(r, chi)) in (1, -1) for r in rs.positive_roots)


def operator_on_w0(rep: WRep, rs: RootSystem) -> Matrix:
    return rep.matrix_of_word(rs.longest.word)
