"""Symbolic graded affine Hecke algebra at r = 1/2.

Elements are stored as ``{w: p_w}`` meaning ``sum p_w t_w`` with the
polynomial part written to the left. Polynomials live in the coordinate
functionals ``x_1..x_d`` of the ambient space and are dicts from exponent
tuples to rationals.

The defining cross relation is ``x t_s = t_s s(x) + <x, a^vee>`` for a
linear form ``x``. For a general polynomial ``p`` this extends to

    t_s p = s(p) t_s + D_s(p),     p t_s = t_s s(p) + D_s(p),

where ``D_s(p) = (p - s(p)) / a`` is the divided difference. ``D_s`` is
evaluated through its twisted Leibniz rule, so no polynomial division is
needed.
"""
from __future__ import annotations

from typing import Callable, Dict, Sequence

from .rational import ONE, ZERO, Q, q
from .rootsys import GroupTable, RootSystem, WeylElement, enumerate_group

Poly = Dict[tuple, object]


# ---------------------------------------------------------------- polynomials
def poly_const(c, d: int) -> Poly:
    c = q(c)
    return {(0,) * d: c} if c else {}


def poly_linear(v: Sequence, d: int) -> Poly:
    out = {}
    for k, c in enumerate(v):
        if c:
            e = [0] * d
            e[k] = 1
            out[tuple(e)] = q(c)
    return out


def poly_add(a: Poly, b: Poly, c=ONE) -> Poly:
    out = dict(a)
    for m, x in b.items():
        y = out.get(m, ZERO) + c * x
        if y:
            out[m] = y
        else:
            out.pop(m, None)
    return out


def poly_scale(c, a: Poly) -> Poly:
    c = q(c)
    return {m: c * x for m, x in a.items()} if c else {}


def poly_mul(a: Poly, b: Poly) -> Poly:
    out: dict = {}
    for m1, x1 in a.items():
        for m2, x2 in b.items():
            m = tuple(i + j for i, j in zip(m1, m2))
            y = out.get(m, ZERO) + x1 * x2
            if y:
                out[m] = y
            else:
                out.pop(m)
    return out


def poly_eval(a: Poly, point: Sequence):
    s = ZERO
    pt = [q(x) for x in point]
    for m, c in a.items():
        t = c
        for x, e in zip(pt, m):
            if e:
                t *= x ** e
        s += t
    return s


class HeckeAlgebra:
    """The graded Hecke algebra of a root system with |W| small enough to list."""

    def __init__(self, rs: RootSystem, cap: int = 1152):
        self.rs = rs
        self.d = rs.ambient_dim
        self.group: GroupTable = enumerate_group(rs, cap)
        g = self.group
        self.identity_index = 0
        # left[i][k] = index of s_i * w_k
        n = rs.rank
        self.left = tuple(
            tuple(g.index[rs.simple_reflections[i] * w] for w in g.elements) for i in range(n)
        )
        self._mult: dict = {}
        self._coroots = tuple(rs.coroot(a) for a in rs.simple_roots)
        # image of each coordinate functional under s_i, as a linear polynomial
        self._s_lin = tuple(
            tuple(poly_linear(rs.simple_reflections[i].matrix[k], self.d) for k in range(self.d))
            for i in range(n)
        )
        self._s_mono: dict = {}
        self._div_mono: dict = {}

    # ----- Weyl group helpers -----
    def index_of(self, w: WeylElement) -> int:
        return self.group.index[w]

    def word(self, k: int) -> tuple:
        return self.group.elements[k].word

    def group_mult(self, a: int, b: int) -> int:
        key = (a, b)
        r = self._mult.get(key)
        if r is None:
            r = a
            for i in self.word(b):
                r = self.group.right[r][i]
            self._mult[key] = r
        return r

    # ----- polynomial actions -----
    def s_poly(self, i: int, p: Poly) -> Poly:
        out: Poly = {}
        for m, c in p.items():
            out = poly_add(out, self._s_monomial(i, m), c)
        return out

    def _s_monomial(self, i: int, m: tuple) -> Poly:
        key = (i, m)
        r = self._s_mono.get(key)
        if r is None:
            r = poly_const(1, self.d)
            for k, e in enumerate(m):
                for _ in range(e):
                    r = poly_mul(r, self._s_lin[i][k])
            self._s_mono[key] = r
        return r

    def divided_difference(self, i: int, p: Poly) -> Poly:
        out: Poly = {}
        for m, c in p.items():
            out = poly_add(out, self._div_monomial(i, m), c)
        return out

    def _div_monomial(self, i: int, m: tuple) -> Poly:
        key = (i, m)
        r = self._div_mono.get(key)
        if r is not None:
            return r
        k = next((j for j, e in enumerate(m) if e), None)
        if k is None:
            r = {}
        else:
            rest = list(m)
            rest[k] -= 1
            rest = tuple(rest)
            # D(x_k * rest) = <x_k, a^vee> rest + s(x_k) D(rest)
            r = poly_scale(self._coroots[i][k], {rest: ONE})
            r = poly_add(r, poly_mul(self._s_lin[i][k], self._div_monomial(i, rest)))
        self._div_mono[key] = r
        return r

    # ----- elements -----
    def element(self, terms: dict) -> "HeckeElement":
        return HeckeElement(self, {k: p for k, p in terms.items() if p})

    def one(self) -> "HeckeElement":
        return self.element({0: poly_const(1, self.d)})

    def t(self, i: int) -> "HeckeElement":
        return self.element({self.group.right[0][i]: poly_const(1, self.d)})

    def t_word(self, word: Sequence[int]) -> "HeckeElement":
        k = 0
        for i in word:
            k = self.group.right[k][i]
        return self.element({k: poly_const(1, self.d)})

    def poly(self, p: Poly) -> "HeckeElement":
        return self.element({0: dict(p)})

    def linear(self, v: Sequence) -> "HeckeElement":
        return self.poly(poly_linear(v, self.d))

    def scalar(self, c) -> "HeckeElement":
        return self.poly(poly_const(c, self.d))

    # t_u * p  ->  {x: c_x} meaning sum c_x t_x (polynomials on the left)
    def _t_times_poly(self, u: int, p: Poly) -> dict:
        state = {0: p}
        for i in reversed(self.word(u)):
            new: dict = {}
            for x, c in state.items():
                sx = self.left[i][x]
                new[sx] = poly_add(new.get(sx, {}), self.s_poly(i, c))
                dc = self.divided_difference(i, c)
                if dc:
                    new[x] = poly_add(new.get(x, {}), dc)
            state = {x: c for x, c in new.items() if c}
        return state

    def multiply(self, a: "HeckeElement", b: "HeckeElement") -> "HeckeElement":
        out: dict = {}
        for u, pu in a.terms.items():
            for v, qv in b.terms.items():
                for x, c in self._t_times_poly(u, qv).items():
                    y = self.group_mult(x, v)
                    out[y] = poly_add(out.get(y, {}), poly_mul(pu, c))
        return self.element(out)

    def to_right_form(self, h: "HeckeElement") -> dict:
        """Rewrite ``sum p_w t_w`` as ``sum t_x r_x``; returns ``{x: r_x}``."""
        out: dict = {}
        for w, p in h.terms.items():
            state = {0: p}
            for i in self.word(w):
                new: dict = {}
                for x, r in state.items():
                    xs = self.group.right[x][i]
                    new[xs] = poly_add(new.get(xs, {}), self.s_poly(i, r))
                    dr = self.divided_difference(i, r)
                    if dr:
                        new[x] = poly_add(new.get(x, {}), dr)
                state = {x: r for x, r in new.items() if r}
            for x, r in state.items():
                out[x] = poly_add(out.get(x, {}), r)
        return {x: r for x, r in out.items() if r}

    def from_right_form(self, terms: dict) -> "HeckeElement":
        """Inverse of :meth:`to_right_form`: build ``sum t_x r_x`` in normal form."""
        out = self.element({})
        for x, r in terms.items():
            out = out + self.multiply(self.element({x: poly_const(1, self.d)}), self.poly(r))
        return out

    # ----- distinguished elements -----
    def r_simple(self, i: int) -> "HeckeElement":
        """r_a = t_s a - 1 for the simple root a = alpha_i."""
        a = self.linear(self.rs.simple_roots[i])
        return self.t(i) * a - self.one()

    def r_element(self, word: Sequence[int]) -> "HeckeElement":
        if not self.rs.is_reduced(word):
            raise ValueError(f"word {tuple(word)} is not reduced")
        out = self.one()
        for i in word:
            out = out * self.r_simple(i)
        return out

    def kappa(self, w: WeylElement) -> "HeckeElement":
        """prod over positive roots b with w(b) < 0 of (b^2 - 1)."""
        p = poly_const(1, self.d)
        for k in self.rs.inversion_set(w):
            b = poly_linear(self.rs.positive_roots[k], self.d)
            p = poly_mul(p, poly_add(poly_mul(b, b), poly_const(-1, self.d)))
        return self.poly(p)

    def principal_series_action(self, chi: Sequence) -> Callable:
        """Return h -> matrix of ``t_u (x) 1  ->  t_u h (x) 1`` in the basis {t_w}.

        Columns are indexed by ``u`` in group-table order; the polynomial part
        is moved to the right and evaluated at ``chi``.
        """
        chi = tuple(q(x) for x in chi)
        if len(chi) != self.d:
            raise ValueError("parameter has wrong dimension")
        n = len(self.group)

        def action(h: "HeckeElement"):
            right = self.to_right_form(h)
            vals = {x: poly_eval(r, chi) for x, r in right.items()}
            m = [[ZERO] * n for _ in range(n)]
            for u in range(n):
                for x, c in vals.items():
                    if c:
                        m[self.group_mult(u, x)][u] += c
            return tuple(tuple(r) for r in m)

        return action

    def normalized_long_action(self, chi: Sequence, word: Sequence[int] | None = None):
        """Action of r_{w0} on X(-chi), divided by its value on the trivial isotype."""
        word = tuple(word) if word is not None else self.rs.longest.word
        neg = tuple(-q(x) for x in chi)
        m = self.principal_series_action(neg)(self.r_element(word))
        n = len(m)
        norm = sum(m[0][j] for j in range(n))  # row sum: value on sum of all t_w
        if norm == 0:
            raise ZeroDivisionError("trivial-isotype value vanishes")
        return tuple(tuple(x / norm for x in row) for row in m), norm


class HeckeElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg: HeckeAlgebra, terms: dict):
        self.alg = alg
        self.terms = terms

    def __mul__(self, other):
        if not isinstance(other, HeckeElement):
            other = self.alg.scalar(other)
        return self.alg.multiply(self, other)

    def __rmul__(self, c):
        return self.alg.scalar(c) * self

    def __add__(self, other):
        out = dict(self.terms)
        for k, p in other.terms.items():
            out[k] = poly_add(out.get(k, {}), p)
        return self.alg.element({k: p for k, p in out.items() if p})

    def __neg__(self):
        return self.alg.element({k: poly_scale(-1, p) for k, p in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, HeckeElement) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset((k, frozenset(p.items())) for k, p in self.terms.items()))

    def is_polynomial(self) -> bool:
        return set(self.terms) <= {0}

    def __repr__(self):
        return f"HeckeElement({len(self.terms)} terms)"
