"""Exact rational scalars, vectors and small dense matrices.

The scalar type is ``gmpy2.mpq``. Vectors are tuples and matrices are
tuples of row tuples, so every value is hashable and immutable.
"""
from __future__ import annotations

from typing import Iterable, Sequence

from gmpy2 import mpq

Q = mpq
ZERO = mpq(0)
ONE = mpq(1)

Vector = tuple
Matrix = tuple


def q(x) -> mpq:
    """Coerce an int, Fraction, mpq or ``"p/q"`` string to ``mpq``."""
    if isinstance(x, str):
        s = x.strip()
        if not s:
            raise ValueError("empty rational literal")
        try:
            return mpq(s)
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"malformed rational {x!r}") from exc
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted")
    return mpq(x)


def vec(xs: Iterable) -> Vector:
    return tuple(q(x) for x in xs)


def parse_vector(text: str) -> Vector:
    """Parse ``"1/2,0,-3"`` into an exact vector."""
    parts = [p for p in text.replace(" ", "").split(",")]
    if parts == [""]:
        return ()
    return tuple(q(p) for p in parts)


def fmt(x) -> str:
    return str(mpq(x))


def fmt_vector(v: Sequence) -> list:
    return [fmt(x) for x in v]


def fmt_matrix(m: Sequence[Sequence]) -> list:
    return [fmt_vector(r) for r in m]


def dot(u: Sequence, v: Sequence) -> mpq:
    if len(u) != len(v):
        raise ValueError(f"dimension mismatch: {len(u)} vs {len(v)}")
    s = ZERO
    for a, b in zip(u, v):
        if a and b:
            s += a * b
    return s


def add(u, v) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v) -> Vector:
    return tuple(c * a for a in v)


def identity(n: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    m = n if m is None else m
    return tuple(tuple(ZERO for _ in range(m)) for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append(tuple(_sparse_dot(nz, col) for col in bt))
    return tuple(out)


def _sparse_dot(nz, col) -> mpq:
    s = ZERO
    for k, x in nz:
        y = col[k]
        if y:
            s += x * y
    return s


def matvec(a: Matrix, v: Sequence) -> Vector:
    return tuple(dot(row, v) for row in a)


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x + y for x, y in zip(r, s)) for r, s in zip(a, b))


def mat_scale(c, a: Matrix) -> Matrix:
    return tuple(tuple(c * x for x in r) for r in a)


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def solve(a: Matrix, b: Sequence) -> Vector:
    """Solve a square nonsingular system exactly by Gauss-Jordan elimination."""
    n = len(a)
    aug = [list(a[i]) + [q(b[i])] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("singular system")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = ONE / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return tuple(aug[i][n] for i in range(n))


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    cols = [solve(a, [ONE if i == j else ZERO for i in range(n)]) for j in range(n)]
    return transpose(tuple(cols))


def rank(rows: Sequence[Sequence]) -> int:
    m = [list(r) for r in rows]
    if not m:
        return 0
    rk, ncol = 0, len(m[0])
    for col in range(ncol):
        piv = next((r for r in range(rk, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(len(m)):
            if r != rk and m[r][col]:
                f = m[r][col] / m[rk][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[rk])]
        rk += 1
    return rk
