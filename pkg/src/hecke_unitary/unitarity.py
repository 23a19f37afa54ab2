"""Region-by-region classification of the 0-complementary series.

Two independent routes are provided: a signature pipeline (operators on
W-representations at region sample points) and closed-form predicates. The
``cross_validate`` report compares them region by region.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence

from .arrangement import Region, enumerate_regions
from .intertwine import Inertia, hermitian_form, inertia, long_operator
from .rational import ONE, ZERO, Q, fmt_vector, q
from .rootsys import RootSystem, build, is_hermitian
from .wreps import WRep, reflection_rep, regular_rep, sym2_nontrivial

HALF = Q(1, 2)
DEFAULT_CAP = 1152
# "auto" uses the regular representation only up to this group order; past it
# the operators get too large to be worth it and the relevant set is used.
AUTO_REGULAR_CAP = 384


@dataclass
class Verdict:
    region: Region
    unitary: bool
    witnesses: dict  # rep name -> Inertia
    method: str
    premarked: bool = False  # unbounded regions are nonunitary without computation

    @property
    def semidefinite(self) -> bool:
        return all(w.negative == 0 for w in self.witnesses.values()) and not self.premarked

    def to_json(self) -> dict:
        d = self.region.to_json()
        d["unitary"] = self.unitary
        d["method"] = self.method
        d["witnesses"] = {k: v.to_json() for k, v in self.witnesses.items()}
        if self.premarked:
            d["premarked_unbounded"] = True
        return d


def representation_set(rs: RootSystem, method: str, cap: int = DEFAULT_CAP) -> tuple:
    if method == "regular":
        return (regular_rep(rs, cap),)
    if method == "relevant":
        reps = [reflection_rep(rs)]
        s2 = sym2_nontrivial(rs)
        if s2.dim:
            reps.append(s2)
        return tuple(reps)
    raise ValueError(f"unknown method {method!r}")


def resolve_method(rs: RootSystem, method: str, cap: int = AUTO_REGULAR_CAP) -> str:
    if method != "auto":
        return method
    from .rootsys import GroupTooLarge, enumerate_group

    try:
        enumerate_group(rs, cap)
        return "regular"
    except GroupTooLarge:
        return "relevant"


def signature_at(rs: RootSystem, chi: Sequence, reps: Sequence[WRep], stop_early: bool = True) -> dict:
    """Inertia of the hermitian form of each representation at chi."""
    out = {}
    for rep in reps:
        op = long_operator(rep, rs, chi)
        out[rep.name] = inertia(hermitian_form(op, rep), stop_at_negative=stop_early)
        if stop_early and out[rep.name].negative:
            break
    return out


def classify_region(rs: RootSystem, region: Region, reps, method: str, stop_early: bool = True) -> Verdict:
    if not region.bounded:
        return Verdict(region, False, {}, method, premarked=True)
    w = signature_at(rs, region.sample, reps, stop_early)
    unitary = all(x.negative == 0 for x in w.values())
    return Verdict(region, unitary, w, method)


def classify_zero_cs(
    rs: RootSystem,
    method: str = "auto",
    cap: int = DEFAULT_CAP,
    progress: Optional[Callable] = None,
    threads: int = 1,
    stop_early: bool = True,
) -> list:
    """Verdicts for every slice-feasible region, in canonical antichain order."""
    method = resolve_method(rs, method)
    reps = representation_set(rs, method, cap)
    regions = enumerate_regions(rs).regions
    if threads > 1:
        from concurrent.futures import ProcessPoolExecutor

        name = str(rs.cartan)
        with ProcessPoolExecutor(max_workers=threads) as ex:
            chunks = [regions[i::threads] for i in range(threads)]
            parts = list(ex.map(_classify_chunk, [(name, method, cap, c, stop_early) for c in chunks]))
        merged = {}
        for part in parts:
            for v in part:
                merged[v.region.delta_prime] = v
        return [merged[r.delta_prime] for r in regions]
    out = []
    for n, r in enumerate(regions):
        out.append(classify_region(rs, r, reps, method, stop_early))
        if progress is not None:
            progress(n + 1, len(regions))
    return out


def _classify_chunk(args):
    name, method, cap, regions, stop_early = args
    rs = build(name)
    reps = representation_set(rs, method, cap)
    return [classify_region(rs, r, reps, method, stop_early) for r in regions]


# ---------------------------------------------------------------- closed forms
def _sorted_check(nu):
    nu = tuple(q(x) for x in nu)
    if any(b < a for a, b in zip(nu, nu[1:])):
        raise ValueError("parameter string must be sorted nondecreasing")
    return nu


def classical_predicate(family: str, nu: Sequence) -> bool:
    """Closed-form 0-complementary series for classical types.

    ``nu`` is sorted nondecreasing and nonnegative. For type A it is the free
    half of a hermitian string (x_1..x_k, [0], -x_k..-x_1). Types A and C
    need every entry below 1/2; types B and D use ``_bd_predicate``.
    """
    family = family.upper()
    nu = _sorted_check(nu)
    if nu and nu[0] < 0:
        raise ValueError("parameter string must be nonnegative")
    if family in ("A", "C"):
        return all(x < HALF for x in nu)
    if family in ("B", "D"):
        return _bd_predicate(nu)
    raise ValueError(f"no classical predicate for family {family!r}")


def _bd_predicate(nu: tuple) -> bool:
    """Types B/D: some split i with

        0 <= nu_1 <= ... <= nu_i < 1 - nu_{i-1} < nu_{i+1} < ... < nu_n < 1

    and, for each i <= j < n, an odd number of the values 1 - nu_l (l < i)
    strictly between nu_j and nu_{j+1}. The i = 1 case has no
    ``1 - nu_0`` term; ``nu_0`` is read as absent.
    """
    n = len(nu)
    if n == 0:
        return True
    if nu[-1] >= 1:
        return False
    for i in range(n + 1):
        small, large = nu[:i], nu[i:]
        if any(b <= a for a, b in zip(large, large[1:])):
            continue
        if i >= 1:
            bound = 1 - small[-2] if i >= 2 else None
            if bound is not None and not (small[-1] < bound):
                continue
            if large and bound is not None and not (bound < large[0]):
                continue
        reflected = [1 - x for x in small[:-1]] if i >= 1 else []
        ok = True
        chain = ([small[-1]] if i >= 1 else []) + list(large)
        for a, b in zip(chain, chain[1:]):
            cnt = sum(1 for r in reflected if a < r < b)
            if cnt % 2 == 0:
                ok = False
                break
        if ok:
            return True
    return False


def g2_predicate(nu1, nu2) -> bool:
    nu1, nu2 = q(nu1), q(nu2)
    if nu1 < 0 or nu2 < 0:
        raise ValueError("G2 parameter must be dominant")
    return 3 * nu1 + 2 * nu2 < 1 or (2 * nu1 + nu2 < 1 < 3 * nu1 + nu2)


def f4_predicate(n1, n2, n3, n4) -> bool:
    n1, n2, n3, n4 = (q(x) for x in (n1, n2, n3, n4))
    if not (n1 - n2 - n3 - n4 >= 0 and n2 >= n3 >= n4 >= 0):
        raise ValueError("F4 parameter must be dominant")
    return 2 * n1 < 1 or (n1 + n2 + n3 - n4 < 1 < n1 + n2 + n3 + n4)


def g2f4_predicate(family: str, nu: Sequence) -> bool:
    family = family.upper().rstrip("24") or family
    if family.startswith("G"):
        return g2_predicate(*nu)
    if family.startswith("F"):
        return f4_predicate(*nu)
    raise ValueError(f"no G2/F4 predicate for {family!r}")


# Positive roots of E6/E7/E8 referenced by the alcove lists, in the fixed
# 8-dimensional coordinates (half-integer vectors are scaled by 2 here).
def _h(*s):
    return tuple(Q(x, 2) for x in s)


def _e(*pairs):
    v = [ZERO] * 8
    for c, i in pairs:
        v[i - 1] += c
    return tuple(v)


ROOT_DICTIONARY = {
    "E6": {
        34: _h(-1, 1, -1, 1, 1, -1, -1, 1),
        35: _h(-1, -1, 1, 1, 1, -1, -1, 1),
        36: _h(1, 1, 1, 1, 1, -1, -1, 1),
    },
    "E7": {
        46: _h(-1, 1, -1, 1, 1, -1, -1, 1),
        47: _h(-1, 1, 1, -1, -1, 1, -1, 1),
        48: _h(1, -1, -1, 1, -1, 1, -1, 1),
        49: _e((1, 5), (1, 6)),
        50: _h(-1, -1, 1, 1, 1, -1, -1, 1),
        51: _h(-1, 1, -1, 1, -1, 1, -1, 1),
        52: _h(1, -1, -1, -1, 1, 1, -1, 1),
        53: _h(1, 1, 1, 1, 1, -1, -1, 1),
        54: _h(-1, -1, 1, 1, -1, 1, -1, 1),
        55: _h(-1, 1, -1, -1, 1, 1, -1, 1),
        56: _h(1, 1, 1, 1, -1, 1, -1, 1),
        57: _h(-1, -1, 1, -1, 1, 1, -1, 1),
        58: _h(1, 1, 1, -1, 1, 1, -1, 1),
        59: _h(-1, -1, -1, 1, 1, 1, -1, 1),
        60: _h(1, 1, -1, 1, 1, 1, -1, 1),
        61: _h(1, -1, 1, 1, 1, 1, -1, 1),
        62: _h(-1, 1, 1, 1, 1, 1, -1, 1),
        63: _e((-1, 7), (1, 8)),
    },
    "E8": {
        89: _h(1, -1, 1, 1, 1, 1, -1, 1),
        90: _h(1, 1, -1, 1, 1, -1, 1, 1),
        91: _h(1, 1, 1, -1, -1, 1, 1, 1),
        92: _h(-1, -1, -1, 1, -1, 1, 1, 1),
        93: _h(-1, 1, 1, 1, 1, 1, -1, 1),
        94: _h(1, -1, 1, 1, 1, -1, 1, 1),
        95: _h(1, 1, -1, 1, -1, 1, 1, 1),
        96: _h(-1, -1, -1, -1, 1, 1, 1, 1),
        97: _e((-1, 7), (1, 8)),
        98: _h(-1, 1, 1, 1, 1, -1, 1, 1),
        99: _h(1, -1, 1, 1, -1, 1, 1, 1),
        100: _h(1, 1, -1, -1, 1, 1, 1, 1),
        101: _e((-1, 6), (1, 8)),
        102: _h(-1, 1, 1, 1, -1, 1, 1, 1),
        103: _h(1, -1, 1, -1, 1, 1, 1, 1),
        104: _e((-1, 5), (1, 8)),
        105: _h(-1, 1, 1, -1, 1, 1, 1, 1),
        106: _h(1, -1, -1, 1, 1, 1, 1, 1),
        107: _e((-1, 4), (1, 8)),
        108: _h(-1, 1, -1, 1, 1, 1, 1, 1),
        109: _e((-1, 3), (1, 8)),
        110: _h(-1, -1, 1, 1, 1, 1, 1, 1),
        111: _e((-1, 2), (1, 8)),
        112: _h(1, 1, 1, 1, 1, 1, 1, 1),
        113: _e((1, 1), (1, 8)),
        114: _e((-1, 1), (1, 8)),
        115: _e((1, 2), (1, 8)),
        116: _e((1, 3), (1, 8)),
        117: _e((1, 4), (1, 8)),
        118: _e((1, 5), (1, 8)),
        119: _e((1, 6), (1, 8)),
        120: _e((1, 7), (1, 8)),
    },
}

# Each condition set: (roots below 1, roots above 1, simple roots >= 0).
ALL6, ALL7, ALL8 = tuple(range(1, 7)), tuple(range(1, 8)), tuple(range(1, 9))
ALCOVE_LISTS = {
    "E6": (
        ((36,), (), ALL6),
        ((34,), (35,), (1, 2, 3, 5, 6)),
    ),
    "E7": (
        ((63,), (), ALL7),
        ((61,), (62,), (1, 2, 4, 5, 6, 7)),
        ((58, 59), (60,), (1, 3, 4, 6, 7)),
        ((53, 54, 55), (56, 57), (1, 3, 5)),
        ((46, 47, 48, 49), (50, 51, 52), (2,)),
        ((53, 59), (56,), (1, 3, 4, 5, 6)),
        ((49, 53, 54), (52, 56), (3, 4, 5)),
        ((47, 48, 49, 53), (51, 52), (2, 4)),
    ),
    "E8": (
        ((120,), (), ALL8),
        ((113, 114), (115,), (1, 4, 5, 6, 7, 8)),
        ((109, 110), (111, 112), (3, 5, 6, 7, 8)),
        ((91, 92, 97, 98), (95, 96, 101), (3, 4)),
        ((90, 91, 92, 97), (94, 95, 96), (1, 3)),
        ((89, 90, 91, 92), (93, 94, 95, 96), (1,)),
        ((104, 110), (107, 112), (3, 4, 5, 7, 8)),
        ((104, 105, 106), (107, 108), (2, 4, 7, 8)),
        ((118,), (119,), (1, 2, 3, 4, 5, 6, 8)),
        ((97, 110), (101, 112), (3, 4, 5, 6, 7)),
        ((97, 105, 106), (101, 108), (2, 4, 6, 7)),
        ((116,), (117,), (1, 2, 3, 4, 6, 7, 8)),
        ((97, 98, 106), (101, 102), (2, 4, 5, 6)),
        ((97, 98, 99), (96, 101, 102), (2, 4, 5)),
        ((97, 98, 99, 100), (101, 102, 103), (2, 5)),
        ((114,), (112,), (1, 3, 4, 5, 6, 7, 8)),
    ),
}


def alcove_condition_sets(etype: str, chi: Sequence) -> list:
    """Indices (1-based) of the listed condition sets that chi satisfies."""
    etype = etype.upper()
    rs = build(etype)
    chi = tuple(q(x) for x in chi)
    if len(chi) != 8:
        raise ValueError("E-type parameters live in 8 coordinates")
    if not rs.in_span(chi):
        raise ValueError("parameter is not in the span of the roots")
    if not is_hermitian(rs, chi):
        raise ValueError("parameter is off the hermitian slice")
    if not rs.is_dominant(chi):
        raise ValueError("parameter is not dominant")
    roots = ROOT_DICTIONARY[etype]
    simple = rs.simple_roots

    def pr(v):
        return sum(a * b for a, b in zip(v, chi))

    hits = []
    for k, (below, above, nonneg) in enumerate(ALCOVE_LISTS[etype], start=1):
        if (
            all(pr(roots[b]) < 1 for b in below)
            and all(pr(roots[a]) > 1 for a in above)
            and all(pr(simple[i - 1]) >= 0 for i in nonneg)
        ):
            hits.append(k)
    return hits


def alcove_predicate(etype: str, chi: Sequence) -> bool:
    return bool(alcove_condition_sets(etype, chi))


# ---------------------------------------------------------------- coordinates
def g2_chi(nu1, nu2) -> tuple:
    nu1, nu2 = q(nu1), q(nu2)
    return (nu1, nu1 + nu2, -2 * nu1 - nu2)


def predicate_input(rs: RootSystem, chi: Sequence) -> tuple:
    """Translate a dominant ambient point to the argument of the closed-form predicate."""
    f = rs.cartan.family
    chi = tuple(q(x) for x in chi)
    if f == "G":
        return rs.simple_pairings(chi)
    if f == "F":
        return chi
    if f in "BCD":
        return tuple(sorted(abs(x) for x in chi))
    if f == "A":
        k = len(chi) // 2
        return tuple(sorted(chi[:k]))
    return chi


def closed_form(rs: RootSystem, chi: Sequence) -> bool:
    f = rs.cartan.family
    x = predicate_input(rs, chi)
    if f in "ABCD":
        return classical_predicate(f, x)
    if f in "GF":
        return g2f4_predicate(f, x)
    return alcove_predicate(str(rs.cartan), x)


@dataclass
class CrossReport:
    cartan: str
    method: str
    agree: int = 0
    disagreements: list = field(default_factory=list)
    unitary_regions: int = 0
    regions: int = 0
    missing_wall: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and not self.missing_wall

    def to_json(self) -> dict:
        return {
            "type": self.cartan,
            "method": self.method,
            "regions": self.regions,
            "unitary_regions": self.unitary_regions,
            "agree": self.agree,
            "disagreements": self.disagreements,
            "unitary_without_zero_wall": self.missing_wall,
            "ok": self.ok,
        }


def cross_validate(rs: RootSystem, method: str = "auto", verdicts=None, **kw) -> CrossReport:
    method = resolve_method(rs, method)
    if verdicts is None:
        verdicts = classify_zero_cs(rs, method, **kw)
    rep = CrossReport(str(rs.cartan), method)
    for v in verdicts:
        rep.regions += 1
        pred = closed_form(rs, v.region.sample)
        if v.unitary:
            rep.unitary_regions += 1
            if not v.region.zero_walls:
                rep.missing_wall.append(list(v.region.delta_prime))
        if pred == v.unitary:
            rep.agree += 1
        else:
            rep.disagreements.append(
                {
                    "delta": list(v.region.delta),
                    "delta_prime": list(v.region.delta_prime),
                    "sample": fmt_vector(v.region.sample),
                    "signature": v.unitary,
                    "closed_form": pred,
                    "witnesses": {k: w.to_json() for k, w in v.witnesses.items()},
                }
            )
    return rep
