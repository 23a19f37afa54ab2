import itertools

import pytest
from hypothesis import given, settings, strategies as st

from hecke_unitary.rational import Q, dot
from hecke_unitary.rootsys import (
    CartanType,
    GroupTooLarge,
    act,
    build,
    enumerate_group,
    is_hermitian,
    minus_one_eigenspace,
    pairing,
    reflect,
)

POSITIVE_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "B2": 4, "B3": 9, "C3": 9, "D4": 12,
                   "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert build(name).num_positive == count


@pytest.mark.parametrize("name", ["A3", "B3", "G2", "F4", "E6"])
def test_roots_are_nonnegative_combinations(name):
    rs = build(name)
    for co, r in zip(rs.positive_coeffs, rs.positive_roots):
        assert all(c >= 0 for c in co)
        assert rs.from_coeffs(co) == r


@pytest.mark.parametrize("name", ["A4", "B3", "D4", "G2", "F4", "E6", "E8"])
def test_single_root_just_below_the_top(name):
    rs = build(name)
    h = rs.coxeter_number
    assert max(rs.levels) == h - 1
    assert sum(1 for l in rs.levels if l == h - 1) == 1
    for a, b, i in rs.covers:
        assert rs.levels[b] == rs.levels[a] + 1


@pytest.mark.parametrize("name", ["A2", "A3", "B2", "B3", "C3", "G2", "D4", "F4"])
def test_covers_match_brute_force(name):
    rs = build(name)
    roots = set(rs.positive_coeffs)
    brute = set()
    for a, b in itertools.permutations(range(rs.num_positive), 2):
        diff = [y - x for x, y in zip(rs.positive_coeffs[a], rs.positive_coeffs[b])]
        if sorted(diff) == [0] * (rs.rank - 1) + [1]:
            brute.add((a, b))
    assert brute == {(a, b) for a, b, _ in rs.covers}
    assert all(c in roots for c in rs.positive_coeffs)


def test_g2_coordinates_and_highest_root():
    rs = build("G2")
    assert rs.simple_roots == ((Q(2, 3), Q(-1, 3), Q(-1, 3)), (-1, 1, 0))
    assert rs.positive_coeffs[-1] == (3, 2)
    nu1, nu2 = Q(1, 7), Q(2, 9)
    chi = (nu1, nu1 + nu2, -2 * nu1 - nu2)
    assert pairing(rs.highest_root, chi) == 3 * nu1 + 2 * nu2
    assert pairing(rs.simple_roots[0], chi) == nu1


def test_f4_coordinates_and_pairings():
    rs = build("F4")
    assert rs.simple_roots == ((1, -1, -1, -1), (0, 0, 0, 2), (0, 0, 1, -1), (0, 1, -1, 0))
    assert rs.highest_root == (2, 0, 0, 0)
    nu = (Q(1, 3), Q(1, 5), Q(1, 7), Q(1, 11))
    assert pairing(rs.highest_root, nu) == 2 * nu[0]
    assert (1, 1, 1, -1) in rs.positive_roots
    assert pairing((1, 1, 1, -1), nu) == nu[0] + nu[1] + nu[2] - nu[3]


def test_reflections():
    rs = build("A2")
    a = rs.simple_roots[0]
    assert act(reflect(a), a) == tuple(-x for x in a)
    assert act(reflect(a), (1, 1, 1)) == (1, 1, 1)
    s1, s2 = rs.simple_reflections
    assert (s1 * s2 * s1).matrix == reflect(rs.positive_roots[-1]).matrix


@pytest.mark.parametrize("name,length", [("A1", 1), ("B2", 4), ("G2", 6), ("E8", 120)])
def test_longest_element(name, length):
    rs = build(name)
    w0 = rs.longest
    assert len(w0.word) == length
    assert rs.is_reduced(w0.word)


def test_b2_longest_is_minus_identity():
    rs = build("B2")
    assert rs.longest.matrix == ((-1, 0), (0, -1))


@pytest.mark.parametrize("name,order", [("A1", 2), ("G2", 12), ("B3", 48), ("F4", 1152)])
def test_group_orders(name, order):
    assert len(enumerate_group(build(name))) == order


def test_group_cap():
    with pytest.raises(GroupTooLarge):
        enumerate_group(build("E6"))


@pytest.mark.parametrize("name,dim", [("E7", 7), ("E6", 4), ("A2", 1), ("D5", 4), ("B3", 3)])
def test_minus_one_eigenspace_dimension(name, dim):
    rs = build(name)
    basis = minus_one_eigenspace(rs)
    assert len(basis) == dim
    for v in basis:
        assert is_hermitian(rs, v)


@pytest.mark.parametrize("name", ["A3", "B2", "G2"])
def test_words_agree_with_matrices(name):
    rs = build(name)
    g = enumerate_group(rs)
    reg = rs.rho_check
    for w in g.elements:
        assert rs.apply_word(w.word, reg) == act(w, reg)
        assert rs.length(w) == len(w.word)


def test_parse_cartan_type():
    assert str(CartanType.parse("e8")) == "E8"
    assert str(CartanType.parse("B", 3)) == "B3"
    with pytest.raises(ValueError):
        CartanType.parse("E9")
    with pytest.raises(ValueError):
        CartanType.parse("B3", 4)


small = st.fractions(min_value=-3, max_value=3, max_denominator=12)


@settings(max_examples=40, deadline=None)
@given(st.lists(small, min_size=4, max_size=4))
def test_dominant_conjugate_is_dominant_and_in_orbit(xs):
    rs = build("F4")
    chi = tuple(Q(x.numerator, x.denominator) for x in xs)
    dom, word = rs.dominant_conjugate(chi)
    assert rs.is_dominant(dom)
    assert rs.apply_word(word, chi) == dom
    assert dot(dom, dom) == dot(chi, chi)
