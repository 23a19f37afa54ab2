"""Root systems in fixed rational coordinates, the root poset, Weyl groups."""
from __future__ import annotations

import re
from collections import deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Optional, Sequence

from .rational import (
    ONE,
    ZERO,
    Matrix,
    Q,
    Vector,
    dot,
    fmt_vector,
    identity,
    matmul,
    matvec,
    q,
    solve,
    transpose,
)

FAMILIES = "ABCDEFG"


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        f, n = self.family, self.rank
        if f not in FAMILIES:
            raise ValueError(f"unknown family {f!r}")
        ok = {
            "A": n >= 1,
            "B": n >= 2,
            "C": n >= 2,
            "D": n >= 3,
            "E": n in (6, 7, 8),
            "F": n == 4,
            "G": n == 2,
        }[f]
        if not ok:
            raise ValueError(f"invalid rank {n} for family {f}")

    @classmethod
    def parse(cls, text: str, rank: Optional[int] = None) -> "CartanType":
        m = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", text)
        if not m:
            raise ValueError(f"cannot parse Cartan type {text!r}")
        fam = m.group(1).upper()
        n = int(m.group(2)) if m.group(2) else rank
        if n is None:
            raise ValueError(f"rank missing for type {text!r}")
        if m.group(2) and rank is not None and rank != n:
            raise ValueError(f"rank {rank} conflicts with {text!r}")
        return cls(fam, n)

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


def _unit(d: int, i: int, c=1) -> list:
    v = [ZERO] * d
    v[i] = q(c)
    return v


_H = Q(1, 2)
_E8_SIMPLE = [
    [_H, -_H, -_H, -_H, -_H, -_H, -_H, _H],
    [1, 1, 0, 0, 0, 0, 0, 0],
    [-1, 1, 0, 0, 0, 0, 0, 0],
    [0, -1, 1, 0, 0, 0, 0, 0],
    [0, 0, -1, 1, 0, 0, 0, 0],
    [0, 0, 0, -1, 1, 0, 0, 0],
    [0, 0, 0, 0, -1, 1, 0, 0],
    [0, 0, 0, 0, 0, -1, 1, 0],
]


def _simple_roots(ct: CartanType) -> list:
    f, n = ct.family, ct.rank
    if f == "A":
        d = n + 1
        return [[ONE if k == i else -ONE if k == i + 1 else ZERO for k in range(d)] for i in range(n)]
    if f in "BCD":
        rows = [[ONE if k == i else -ONE if k == i + 1 else ZERO for k in range(n)] for i in range(n - 1)]
        if f == "B":
            rows.append(_unit(n, n - 1))
        elif f == "C":
            rows.append(_unit(n, n - 1, 2))
        else:
            last = [ZERO] * n
            last[n - 2] = last[n - 1] = ONE
            rows.append(last)
        return rows
    if f == "G":
        return [[Q(2, 3), Q(-1, 3), Q(-1, 3)], [-1, 1, 0]]
    if f == "F":
        return [[1, -1, -1, -1], [0, 0, 0, 2], [0, 0, 1, -1], [0, 1, -1, 0]]
    return _E8_SIMPLE[:n]


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element, identified by its matrix on the ambient space."""

    matrix: Matrix
    word: Optional[tuple] = field(default=None, compare=False)

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        w = None
        if self.word is not None and other.word is not None:
            w = self.word + other.word
        return WeylElement(matmul(self.matrix, other.matrix), w)

    def inverse(self) -> "WeylElement":
        w = tuple(reversed(self.word)) if self.word is not None else None
        return WeylElement(transpose(self.matrix), w)

    def is_identity(self) -> bool:
        return self.matrix == identity(len(self.matrix))


class RootSystem:
    """Simple and positive roots with the root poset. Built by :func:`build`."""

    def __init__(self, cartan: CartanType, simple_roots: Sequence[Sequence]):
        self.cartan = cartan
        self.simple_roots: tuple = tuple(tuple(q(x) for x in r) for r in simple_roots)
        self.rank = len(self.simple_roots)
        self.ambient_dim = len(self.simple_roots[0])
        self.gram: Matrix = tuple(
            tuple(dot(a, b) for b in self.simple_roots) for a in self.simple_roots
        )
        self.cartan_matrix = tuple(
            tuple(2 * self.gram[i][j] / self.gram[i][i] for j in range(self.rank))
            for i in range(self.rank)
        )
        self._close_roots()

    # ----- construction -----
    def _close_roots(self):
        n = self.rank
        cm = self.cartan_matrix
        # Work in simple-root coordinates: s_i(beta) = beta - <beta, alpha_i^vee> alpha_i.
        start = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(start)
        todo = deque(start)
        while todo:
            b = todo.popleft()
            for i in range(n):
                c = sum(b[j] * cm[i][j] for j in range(n))
                nb = list(b)
                nb[i] -= int(c)
                nb = tuple(nb)
                if nb not in seen:
                    seen.add(nb)
                    todo.append(nb)
        pos = [b for b in seen if all(x >= 0 for x in b)]
        if 2 * len(pos) != len(seen):
            raise AssertionError("root closure failed")
        pos.sort(key=lambda b: (sum(b), tuple(-x for x in b)))
        self.positive_coeffs: tuple = tuple(pos)
        self.positive_roots: tuple = tuple(self.from_coeffs(b) for b in pos)
        self.index = {b: k for k, b in enumerate(pos)}
        self.root_index = {r: k for k, r in enumerate(self.positive_roots)}
        self.levels: tuple = tuple(sum(b) for b in pos)
        self.coxeter_number = 2 * len(pos) // n
        covers = []
        for k, b in enumerate(pos):
            for i in range(n):
                up = list(b)
                up[i] += 1
                j = self.index.get(tuple(up))
                if j is not None:
                    covers.append((k, j, i))
        self.covers: tuple = tuple(covers)

    def from_coeffs(self, coeffs: Sequence) -> Vector:
        v = [ZERO] * self.ambient_dim
        for c, a in zip(coeffs, self.simple_roots):
            if c:
                for k, x in enumerate(a):
                    if x:
                        v[k] += c * x
        return tuple(v)

    # ----- basic data -----
    @property
    def num_positive(self) -> int:
        return len(self.positive_roots)

    @property
    def highest_root(self) -> Vector:
        return self.positive_roots[-1]

    def coroot(self, root: Sequence) -> Vector:
        n2 = dot(root, root)
        return tuple(2 * x / n2 for x in root)

    @cached_property
    def coweights(self) -> tuple:
        """Fundamental coweights: the dual basis to the simple roots inside their span."""
        inv_cols = []
        for i in range(self.rank):
            e = [ONE if k == i else ZERO for k in range(self.rank)]
            inv_cols.append(solve(self.gram, e))
        return tuple(self.from_coeffs(c) for c in inv_cols)

    @cached_property
    def rho_check(self) -> Vector:
        out = [ZERO] * self.ambient_dim
        for w in self.coweights:
            out = [a + b for a, b in zip(out, w)]
        return tuple(out)

    def simple_pairings(self, chi: Sequence) -> Vector:
        return tuple(pairing(a, chi) for a in self.simple_roots)

    def is_dominant(self, chi: Sequence) -> bool:
        return all(x >= 0 for x in self.simple_pairings(chi))

    def from_simple_pairings(self, y: Sequence) -> Vector:
        """The point of the root span whose simple-root pairings are ``y``."""
        out = [ZERO] * self.ambient_dim
        for c, w in zip(y, self.coweights):
            if c:
                out = [a + c * b for a, b in zip(out, w)]
        return tuple(out)

    def project_to_span(self, chi: Sequence) -> Vector:
        return self.from_simple_pairings(self.simple_pairings(chi))

    def in_span(self, chi: Sequence) -> bool:
        return tuple(q(x) for x in chi) == self.project_to_span(chi)

    # ----- Weyl group -----
    @cached_property
    def simple_reflections(self) -> tuple:
        return tuple(
            WeylElement(reflect(a).matrix, (i,)) for i, a in enumerate(self.simple_roots)
        )

    def reflect_simple(self, i: int, v: Sequence) -> Vector:
        a = self.simple_roots[i]
        c = 2 * dot(v, a) / self.gram[i][i]
        if not c:
            return tuple(v)
        return tuple(x - c * y for x, y in zip(v, a))

    def apply_word(self, word: Sequence[int], v: Sequence) -> Vector:
        """Apply ``s_{w[0]} s_{w[1]} ... s_{w[-1]}`` to ``v`` (rightmost first)."""
        out = tuple(v)
        for i in reversed(word):
            out = self.reflect_simple(i, out)
        return out

    def word_to_element(self, word: Sequence[int]) -> WeylElement:
        m = identity(self.ambient_dim)
        for i in word:
            m = matmul(m, self.simple_reflections[i].matrix)
        return WeylElement(m, tuple(word))

    def length(self, w: WeylElement) -> int:
        return sum(1 for r in self.positive_roots if not _is_positive(self, act(w, r)))

    def is_reduced(self, word: Sequence[int]) -> bool:
        return self.length(self.word_to_element(word)) == len(word)

    def reduced_words(self, w: WeylElement) -> list:
        """Every reduced word of ``w``, built from right descents."""
        if w.is_identity():
            return [()]
        out = []
        lw = self.length(w)
        for i, s in enumerate(self.simple_reflections):
            ws = w * s
            if self.length(ws) < lw:
                out.extend(u + (i,) for u in self.reduced_words(ws))
        return sorted(out)

    def inversion_set(self, w: WeylElement) -> list:
        return [k for k, r in enumerate(self.positive_roots) if not _is_positive(self, act(w, r))]

    def is_positive_root(self, v: Sequence) -> bool:
        return _is_positive(self, v)

    def dominant_conjugate(self, chi: Sequence) -> tuple:
        """Return (dominant W-conjugate of chi, word u) with chi_dom = u chi."""
        v = tuple(q(x) for x in chi)
        word = []
        while True:
            for i, a in enumerate(self.simple_roots):
                if dot(a, v) < 0:
                    v = self.reflect_simple(i, v)
                    word.insert(0, i)
                    break
            else:
                return v, tuple(word)

    @cached_property
    def longest(self) -> WeylElement:
        return longest_element(self)

    @cached_property
    def diagram_involution(self) -> tuple:
        """sigma with -w0(alpha_i) = alpha_sigma(i)."""
        out = []
        for a in self.simple_roots:
            img = tuple(-x for x in act(self.longest, a))
            out.append(self.simple_roots.index(img))
        return tuple(out)

    @property
    def w0_is_minus_one(self) -> bool:
        return all(i == j for i, j in enumerate(self.diagram_involution))

    def to_json(self) -> dict:
        return {
            "type": self.cartan.family,
            "rank": self.cartan.rank,
            "simple_roots": [fmt_vector(r) for r in self.simple_roots],
            "positive_roots": [fmt_vector(r) for r in self.positive_roots],
            "covers": [[a, b] for a, b, _ in self.covers],
        }

    def __repr__(self) -> str:
        return f"RootSystem({self.cartan})"


def _is_positive(rs: RootSystem, v: Sequence) -> bool:
    """Sign of a root: positive iff its pairing with a regular dominant point is > 0."""
    s = dot(v, rs.rho_check)
    if s == 0:
        raise ValueError("not a root")
    return s > 0


_CACHE: dict = {}


def build(cartan) -> RootSystem:
    if isinstance(cartan, str):
        cartan = CartanType.parse(cartan)
    if cartan not in _CACHE:
        _CACHE[cartan] = RootSystem(cartan, _simple_roots(cartan))
    return _CACHE[cartan]


def pairing(root: Sequence, chi: Sequence):
    return dot(root, chi)


def reflect(root: Sequence) -> WeylElement:
    r = tuple(q(x) for x in root)
    n2 = dot(r, r)
    if n2 == 0:
        raise ValueError("cannot reflect in the zero vector")
    d = len(r)
    m = tuple(
        tuple((ONE if i == j else ZERO) - 2 * r[i] * r[j] / n2 for j in range(d)) for i in range(d)
    )
    return WeylElement(m)


def act(w: WeylElement, v: Sequence) -> Vector:
    return matvec(w.matrix, v)


def longest_element(rs: RootSystem) -> WeylElement:
    """Greedy descent from a regular dominant point to its antidominant image."""
    v = rs.rho_check
    word = []
    while True:
        for i, a in enumerate(rs.simple_roots):
            if dot(a, v) > 0:
                v = rs.reflect_simple(i, v)
                word.append(i)
                break
        else:
            break
    # v = s_{word[-1]} ... s_{word[0]} rho, so w0 is that product.
    word = tuple(reversed(word))
    w = rs.word_to_element(word)
    if len(word) != rs.num_positive:
        raise AssertionError("longest element has wrong length")
    return w


class GroupTooLarge(Exception):
    pass


@dataclass(frozen=True)
class GroupTable:
    """All of W with reduced words and the right Cayley table by generators."""

    elements: tuple
    right: tuple  # right[k][i] = index of elements[k] * s_i
    index: dict

    def __len__(self):
        return len(self.elements)

    def inverse_index(self, k: int) -> int:
        return self.index[self.elements[k].inverse()]


def enumerate_group(rs: RootSystem, cap: int = 1152) -> GroupTable:
    """Breadth-first closure under right multiplication by simple reflections.

    Elements are keyed by the image of a regular point, which determines the
    matrix; the stored word for each element is reduced (BFS order).
    """
    reg = rs.rho_check
    # a regular point outside the root span component as well, so the key is faithful
    key0 = reg
    e = WeylElement(identity(rs.ambient_dim), ())
    elems = [e]
    keys = {key0: 0}
    imgs = [key0]
    right: list = []
    k = 0
    n = rs.rank
    gens = rs.simple_reflections
    while k < len(elems):
        row = []
        w = elems[k]
        for i in range(n):
            # (w s_i)(reg) = w(s_i reg)
            img = act(w, rs.reflect_simple(i, reg))
            j = keys.get(img)
            if j is None:
                if len(elems) >= cap:
                    raise GroupTooLarge(f"|W({rs.cartan})| exceeds cap {cap}")
                j = len(elems)
                keys[img] = j
                imgs.append(img)
                elems.append(WeylElement(matmul(w.matrix, gens[i].matrix), w.word + (i,)))
            row.append(j)
        right.append(tuple(row))
        k += 1
    index = {w: j for j, w in enumerate(elems)}
    return GroupTable(tuple(elems), tuple(right), index)


def minus_one_eigenspace(rs: RootSystem) -> tuple:
    """Basis of {chi in span(roots) : w0 chi = -chi}, one vector per sigma-orbit."""
    sigma = rs.diagram_involution
    basis = []
    done = set()
    for i in range(rs.rank):
        if i in done:
            continue
        orbit = {i, sigma[i]}
        done |= orbit
        y = [ONE if k in orbit else ZERO for k in range(rs.rank)]
        basis.append(rs.from_simple_pairings(y))
    return tuple(basis)


def slice_orbits(rs: RootSystem) -> tuple:
    """Orbits of the diagram involution on simple indices, in index order."""
    sigma = rs.diagram_involution
    out, done = [], set()
    for i in range(rs.rank):
        if i not in done:
            o = tuple(sorted({i, sigma[i]}))
            done |= set(o)
            out.append(o)
    return tuple(out)


def is_hermitian(rs: RootSystem, chi: Sequence) -> bool:
    chi = tuple(q(x) for x in chi)
    return act(rs.longest, chi) == tuple(-x for x in chi)
