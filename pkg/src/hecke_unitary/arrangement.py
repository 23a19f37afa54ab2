"""Regions of {<chi, a> = 1 : a > 0} in the dominant chamber, via antichains.

A point is described by its simple-root pairings ``y``; every positive root
pairing is then an integer combination of ``y``. On the hermitian slice the
pairings are constant on orbits of the diagram involution, so the LP uses one
variable per orbit.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .lp import maximize
from .rational import ONE, ZERO, Q, fmt_vector, q
from .rootsys import RootSystem, slice_orbits


@dataclass(frozen=True)
class Region:
    delta: tuple  # root indices, maximal roots with pairing < 1
    delta_prime: tuple  # root indices, minimal roots with pairing > 1
    sample: tuple  # ambient coordinates
    pairings: tuple  # simple-root pairings of the sample
    margin: object  # optimal epsilon of the sample LP
    samples: tuple  # several interior points (ambient coordinates)
    bounded: bool
    zero_walls: tuple  # simple-root indices

    def key(self) -> tuple:
        return self.delta_prime

    def to_json(self) -> dict:
        return {
            "delta": list(self.delta),
            "delta_prime": list(self.delta_prime),
            "sample": fmt_vector(self.sample),
            "bounded": self.bounded,
            "zero_walls": list(self.zero_walls),
        }


# ---------------------------------------------------------------- poset helpers
class Poset:
    """Bitmask view of the positive-root poset."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        co = rs.positive_coeffs
        N = len(co)
        self.N = N
        below = []
        above = []
        for i in range(N):
            b = 0
            a = 0
            for j in range(N):
                if all(x <= y for x, y in zip(co[j], co[i])):
                    b |= 1 << j
                if all(x >= y for x, y in zip(co[j], co[i])):
                    a |= 1 << j
            below.append(b)
            above.append(a)
        self.below = tuple(below)  # includes itself
        self.above = tuple(above)
        self.all = (1 << N) - 1

    def comparable(self, i: int) -> int:
        return self.below[i] | self.above[i]

    def down_closure(self, idx: Iterable[int]) -> int:
        m = 0
        for i in idx:
            m |= self.below[i]
        return m

    def up_closure(self, idx: Iterable[int]) -> int:
        m = 0
        for i in idx:
            m |= self.above[i]
        return m

    def maximal(self, mask: int) -> tuple:
        return tuple(i for i in _bits(mask) if self.above[i] & mask == 1 << i)

    def minimal(self, mask: int) -> tuple:
        return tuple(i for i in _bits(mask) if self.below[i] & mask == 1 << i)

    def is_antichain(self, idx: Sequence[int]) -> bool:
        return all(
            not (self.comparable(i) >> j) & 1 for a, i in enumerate(idx) for j in idx[a + 1 :]
        )


def _bits(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


_POSETS: dict = {}


def poset(rs: RootSystem) -> Poset:
    p = _POSETS.get(rs.cartan)
    if p is None:
        p = _POSETS[rs.cartan] = Poset(rs)
    return p


def enumerate_antichains(rs: RootSystem, orthogonal: bool = False) -> list:
    """All antichains (tuples of root indices, increasing), depth first.

    With ``orthogonal`` only pairwise orthogonal antichains are produced.
    """
    P = poset(rs)
    N = P.N
    ortho = None
    if orthogonal:
        roots = rs.positive_roots
        ortho = []
        for i in range(N):
            m = 0
            for j in range(N):
                if sum(x * y for x, y in zip(roots[i], roots[j])) == 0:
                    m |= 1 << j
            ortho.append(m)
    out = [()]
    stack = [((), P.all)]
    while stack:
        chosen, allowed = stack.pop()
        for i in _bits(allowed):
            nxt = allowed & ~P.comparable(i) & ~((1 << (i + 1)) - 1)
            if ortho is not None:
                nxt &= ortho[i]
            c = chosen + (i,)
            out.append(c)
            if nxt:
                stack.append((c, nxt))
    out.sort(key=lambda a: (len(a), a))
    return out


def complement_pair(rs: RootSystem, delta_prime: Sequence[int]) -> tuple:
    """delta from delta': maximal elements of the complement of the up-closure."""
    P = poset(rs)
    up = P.up_closure(delta_prime)
    return P.maximal(P.all & ~up)


def delta_prime_from_delta(rs: RootSystem, delta: Sequence[int]) -> tuple:
    P = poset(rs)
    down = P.down_closure(delta)
    return P.minimal(P.all & ~down)


# ---------------------------------------------------------------- sample points
def _orbit_coeffs(rs: RootSystem, orbits, k: int) -> list:
    co = rs.positive_coeffs[k]
    return [sum(co[i] for i in o) for o in orbits]


def _solve_region(rs, orbits, delta, delta_prime, fixed_zero=(), box=None):
    """LP: maximize eps with y = z + eps on free orbits, y = 0 on fixed ones."""
    box = q(rs.coxeter_number if box is None else box)
    free = [o for o in range(len(orbits)) if o not in fixed_zero]
    nv = len(free) + 1  # z_free..., eps
    A, b = [], []

    def row_for(k):
        c = _orbit_coeffs(rs, orbits, k)
        coeffs = [c[o] for o in free]
        return coeffs, sum(coeffs)

    for k in delta:
        coeffs, s = row_for(k)
        A.append(coeffs + [s + 1])
        b.append(ONE)
    for k in delta_prime:
        coeffs, s = row_for(k)
        A.append([-x for x in coeffs] + [-(s - 1)])
        b.append(-ONE)
    for a, o in enumerate(free):
        r = [ZERO] * nv
        r[a] = ONE
        r[-1] = ONE
        A.append(r)
        b.append(box)
    if not free:
        # the point y = 0: check the strict inequalities directly
        ok = not delta_prime
        return (ONE if ok else None), [ZERO] * len(orbits)
    c = [ZERO] * (nv - 1) + [ONE]
    res = maximize(c, A, b)
    if res.status != "optimal" or res.value <= 0:
        return None, None
    eps = res.value
    y = [ZERO] * len(orbits)
    for a, o in enumerate(free):
        y[o] = res.x[a] + eps
    return eps, y


def _expand(rs, orbits, yo) -> tuple:
    y = [ZERO] * rs.rank
    for o, val in zip(orbits, yo):
        for i in o:
            y[i] = val
    return tuple(y)


def sample_point(rs: RootSystem, delta, delta_prime, slice_: bool = False):
    """Interior rational point of the region (ambient coordinates), or None."""
    orbits = slice_orbits(rs) if slice_ else tuple((i,) for i in range(rs.rank))
    eps, yo = _solve_region(rs, orbits, delta, delta_prime)
    if eps is None:
        return None
    return rs.from_simple_pairings(_expand(rs, orbits, yo))


def zero_walls(rs: RootSystem, delta, delta_prime, slice_: bool = False) -> tuple:
    orbits = slice_orbits(rs) if slice_ else tuple((i,) for i in range(rs.rank))
    walls = []
    for o in range(len(orbits)):
        eps, _ = _solve_region(rs, orbits, delta, delta_prime, fixed_zero=(o,))
        if eps is not None:
            walls.extend(orbits[o])
    return tuple(sorted(walls))


def simply_laced_walls(rs: RootSystem, delta, delta_prime=None) -> tuple:
    """Walls alpha = 0 predicted from the antichains alone.

    alpha is ruled out when beta + alpha is a root for some beta in delta, or
    when beta' - alpha is a positive root (or zero) for some beta' in delta'.
    """
    if delta_prime is None:
        delta_prime = delta_prime_from_delta(rs, delta)
    co = rs.positive_coeffs
    out = []
    for i in range(rs.rank):
        hit = False
        for k in delta:
            up = list(co[k])
            up[i] += 1
            if tuple(up) in rs.index:
                hit = True
                break
        for k in () if hit else delta_prime:
            down = list(co[k])
            down[i] -= 1
            if tuple(down) in rs.index or not any(down):
                hit = True
                break
        if not hit:
            out.append(i)
    return tuple(out)


def build_region(rs: RootSystem, delta_prime: Sequence[int], slice_: bool = False) -> Optional[Region]:
    orbits = slice_orbits(rs) if slice_ else tuple((i,) for i in range(rs.rank))
    delta_prime = tuple(sorted(delta_prime))
    delta = complement_pair(rs, delta_prime)
    eps, yo = _solve_region(rs, orbits, delta, delta_prime)
    if eps is None:
        return None
    # extra interior points: move one orbit coordinate by a step that keeps margin eps/2
    maxc = ONE
    for k in tuple(delta) + tuple(delta_prime):
        for c in _orbit_coeffs(rs, orbits, k):
            if c > maxc:
                maxc = q(c)
    step = eps / (2 * maxc)
    pts = [tuple(yo)]
    for o in range(len(orbits)):
        for sgn in (1, -1):
            y2 = list(yo)
            y2[o] += sgn * step
            pts.append(tuple(y2))
    samples = tuple(rs.from_simple_pairings(_expand(rs, orbits, p)) for p in pts)
    y = _expand(rs, orbits, yo)
    bounded = not any(k < rs.rank for k in delta_prime)
    walls = zero_walls(rs, delta, delta_prime, slice_)
    return Region(delta, delta_prime, samples[0], y, eps, samples, bounded, walls)


@dataclass
class RegionReport:
    regions: list
    dropped: list = field(default_factory=list)  # antichains whose region misses the slice
    on_slice: bool = False


def enumerate_regions(rs: RootSystem, slice_: Optional[bool] = None, progress=None) -> RegionReport:
    """One Region per feasible antichain, in canonical antichain order."""
    if slice_ is None:
        slice_ = not rs.w0_is_minus_one
    regions, dropped = [], []
    sigma = rs.diagram_involution
    for n, a in enumerate(enumerate_antichains(rs)):
        if progress is not None:
            progress(n)
        if slice_ and tuple(sorted(sigma[i] if i < rs.rank else _sigma_root(rs, i) for i in a)) != a:
            # regions meeting the slice are stable under the diagram involution
            dropped.append(a)
            continue
        r = build_region(rs, a, slice_)
        if r is None:
            dropped.append(a)
        else:
            regions.append(r)
    return RegionReport(regions, dropped, slice_)


def _sigma_root(rs: RootSystem, k: int) -> int:
    sigma = rs.diagram_involution
    co = rs.positive_coeffs[k]
    img = [0] * rs.rank
    for i, c in enumerate(co):
        img[sigma[i]] += c
    return rs.index[tuple(img)]


def sign_vector(rs: RootSystem, chi: Sequence) -> tuple:
    """Per positive root: -1 if pairing < 1, 0 if = 1, +1 if > 1."""
    out = []
    for r in rs.positive_roots:
        v = sum(x * y for x, y in zip(r, chi))
        out.append((v > 1) - (v < 1))
    return tuple(out)


def locate(rs: RootSystem, chi: Sequence) -> Optional[tuple]:
    """(delta, delta') of the open region containing a dominant chi, or None on a wall."""
    chi = tuple(q(x) for x in chi)
    sv = sign_vector(rs, chi)
    if 0 in sv:
        return None
    P = poset(rs)
    up = 0
    for k, s in enumerate(sv):
        if s > 0:
            up |= 1 << k
    dp = P.minimal(up)
    return complement_pair(rs, dp), dp


def max_orthogonal_antichain(rs: RootSystem) -> int:
    return max(len(a) for a in enumerate_antichains(rs, orthogonal=True))


def roots_at_level(rs: RootSystem, level: int) -> int:
    return sum(1 for l in rs.levels if l == level)
