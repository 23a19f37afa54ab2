"""Orthogonal rational models of a few Weyl group representations."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .rational import ONE, ZERO, Matrix, identity, matmul, q, transpose
from .rootsys import GroupTable, RootSystem, enumerate_group


@dataclass(frozen=True)
class WRep:
    """Generator matrices act on column vectors; ``form`` is W-invariant and positive."""

    name: str
    dim: int
    gens: tuple
    form: Matrix

    def matrix_of_word(self, word: Sequence[int]) -> Matrix:
        m = identity(self.dim)
        for i in word:
            m = matmul(m, self.gens[i])
        return m

    @property
    def sparse_gens(self) -> tuple:
        """Per generator, columns as lists of (row, value) pairs."""
        return _sparse_columns(self)


@lru_cache(maxsize=None)
def _sparse_columns(rep: WRep) -> tuple:
    out = []
    for g in rep.gens:
        cols = []
        for j in range(rep.dim):
            cols.append(tuple((i, g[i][j]) for i in range(rep.dim) if g[i][j]))
        out.append(tuple(cols))
    return tuple(out)


def trivial_rep(rs: RootSystem) -> WRep:
    one = ((ONE,),)
    return WRep("triv", 1, tuple(one for _ in range(rs.rank)), one)


def sign_rep(rs: RootSystem) -> WRep:
    return WRep("sgn", 1, tuple(((-ONE,),) for _ in range(rs.rank)), ((ONE,),))


def regular_rep(rs: RootSystem, cap: int = 1152) -> WRep:
    """Left multiplication on C[W] in the basis of group elements."""
    g = enumerate_group(rs, cap)
    n = len(g)
    gens = []
    for i, s in enumerate(rs.simple_reflections):
        m = [[ZERO] * n for _ in range(n)]
        for k, w in enumerate(g.elements):
            m[g.index[s * w]][k] = ONE
        gens.append(tuple(tuple(r) for r in m))
    return WRep("regular", n, tuple(gens), identity(n))


def reflection_rep(rs: RootSystem) -> WRep:
    """Action on the root span in the basis of simple roots."""
    n = rs.rank
    cm = rs.cartan_matrix
    gens = []
    for i in range(n):
        # s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i; column j holds its coordinates
        m = [[ONE if r == c else ZERO for c in range(n)] for r in range(n)]
        for j in range(n):
            m[i][j] -= cm[i][j]
        gens.append(tuple(tuple(r) for r in m))
    return WRep("refl", n, tuple(gens), rs.gram)


def sym2_nontrivial(rs: RootSystem) -> WRep:
    """Traceless part of Sym^2 of the reflection representation.

    Symmetric tensors are stored as symmetric matrices X in the simple-root
    basis, with w acting by X -> R X R^T and form <X, Y> = tr(B X B Y).
    The invariant line is spanned by B^{-1}; its orthogonal complement is
    {X : tr(B X) = 0}, with basis indexed by pairs (i, j), i <= j, except
    the last diagonal slot, which is solved for.
    """
    refl = reflection_rep(rs)
    B = rs.gram
    n = rs.rank
    last = n - 1
    pairs = [(i, j) for i in range(n) for j in range(i, n) if (i, j) != (last, last)]

    def basis_matrix(i, j):
        X = [[ZERO] * n for _ in range(n)]
        X[i][j] += ONE
        if i != j:
            X[j][i] += ONE
        tr = sum(B[a][b] * X[b][a] for a in range(n) for b in range(n))
        X[last][last] -= tr / B[last][last]
        return tuple(tuple(r) for r in X)

    basis = [basis_matrix(i, j) for i, j in pairs]

    def coords(Y):
        return tuple(Y[i][j] for i, j in pairs)

    gens = []
    for R in refl.gens:
        Rt = transpose(R)
        cols = [coords(matmul(matmul(R, X), Rt)) for X in basis]
        gens.append(transpose(tuple(cols)))

    def inner(X, Y):
        BX = matmul(B, X)
        BY = matmul(B, Y)
        return sum(BX[a][b] * BY[b][a] for a in range(n) for b in range(n))

    form = tuple(tuple(inner(X, Y) for Y in basis) for X in basis)
    return WRep("sym2", len(pairs), tuple(gens), form)


def relevant_reps(rs: RootSystem) -> tuple:
    return (reflection_rep(rs), sym2_nontrivial(rs))


# ---------------------------------------------------------------- characters
def conjugacy_classes(g: GroupTable, rs: RootSystem) -> list:
    """Conjugacy classes as lists of element indices (closure under s w s)."""
    gens = rs.simple_reflections
    seen = [False] * len(g)
    classes = []
    for k in range(len(g)):
        if seen[k]:
            continue
        cls, todo = [k], [k]
        seen[k] = True
        while todo:
            x = g.elements[todo.pop()]
            for s in gens:
                y = g.index[s * x * s]
                if not seen[y]:
                    seen[y] = True
                    cls.append(y)
                    todo.append(y)
        classes.append(sorted(cls))
    return classes


def _trace(m: Matrix):
    return sum(m[i][i] for i in range(len(m)))


def _charpoly_one_minus(m: Matrix) -> list:
    """Coefficients of det(1 - q m) in q, by Faddeev-LeVerrier."""
    n = len(m)
    # char poly p(x) = det(x - m) = x^n + c1 x^{n-1} + ... + cn
    c = [ONE]
    M = [[ZERO] * n for _ in range(n)]
    Ident = identity(n)
    for k in range(1, n + 1):
        prev = c[-1]
        M = [[sum(m[i][l] * M[l][j] for l in range(n)) + (prev * Ident[i][j]) for j in range(n)] for i in range(n)]
        AM = matmul(m, tuple(tuple(r) for r in M))
        c.append(-_trace(AM) / k)
    # det(1 - q m) = q^n p(1/q) = sum_k c_k q^k
    return c


def molien_coefficients(rep: WRep, rs: RootSystem, degree: int, cap: int = 1152) -> list:
    """Multiplicity of ``rep`` in S^d(refl) for d = 0..degree (sum over classes)."""
    g = enumerate_group(rs, cap)
    refl = reflection_rep(rs)
    total = [ZERO] * (degree + 1)
    for cls in conjugacy_classes(g, rs):
        word = g.elements[cls[0]].word
        chi = _trace(rep.matrix_of_word(word))
        if not chi:
            continue
        den = _charpoly_one_minus(refl.matrix_of_word(word))
        # power series 1 / den
        inv = [ZERO] * (degree + 1)
        inv[0] = ONE / den[0]
        for d in range(1, degree + 1):
            s = ZERO
            for k in range(1, min(d, len(den) - 1) + 1):
                s += den[k] * inv[d - k]
            inv[d] = -s / den[0]
        for d in range(degree + 1):
            total[d] += len(cls) * chi * inv[d]
    return [x / len(g) for x in total]


def lowest_harmonic_degree(rep: WRep, rs: RootSystem, cap: int = 1152) -> int:
    """Smallest d such that ``rep`` meets the degree-d harmonic polynomials."""
    coeffs = molien_coefficients(rep, rs, rs.num_positive, cap)
    for d, c in enumerate(coeffs):
        if c:
            return d
    raise ValueError("representation does not occur in the coinvariants")


def check_rep(rep: WRep, rs: RootSystem) -> None:
    """Raise AssertionError unless the generators are involutive, braid, and orthogonal."""
    n = rep.dim
    I = identity(n)
    for g in rep.gens:
        if matmul(g, g) != I:
            raise AssertionError(f"{rep.name}: generator is not an involution")
        if matmul(matmul(transpose(g), rep.form), g) != rep.form:
            raise AssertionError(f"{rep.name}: form is not invariant")
    for i in range(rs.rank):
        for j in range(i + 1, rs.rank):
            m = coxeter_order(rs, i, j)
            p = matmul(rep.gens[i], rep.gens[j])
            acc = I
            for _ in range(m):
                acc = matmul(acc, p)
            if acc != I:
                raise AssertionError(f"{rep.name}: braid relation fails for ({i},{j})")


def coxeter_order(rs: RootSystem, i: int, j: int) -> int:
    prod = rs.cartan_matrix[i][j] * rs.cartan_matrix[j][i]
    return {0: 2, 1: 3, 2: 4, 3: 6}[int(prod)]
