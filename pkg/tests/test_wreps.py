import pytest

from hecke_unitary.rational import Q, identity, matmul
from hecke_unitary.rootsys import build, enumerate_group
from hecke_unitary.unitarity import classify_zero_cs
from hecke_unitary.wreps import (
    check_rep,
    conjugacy_classes,
    lowest_harmonic_degree,
    reflection_rep,
    regular_rep,
    sign_rep,
    sym2_nontrivial,
    trivial_rep,
)


def _trace(m):
    return sum(m[i][i] for i in range(len(m)))


def test_a1_regular_is_swap():
    rep = regular_rep(build("A1"))
    assert rep.dim == 2
    assert rep.gens[0] == ((0, 1), (1, 0))


def test_g2_regular_dimension():
    assert regular_rep(build("G2")).dim == 12


def _character(rep, g, cls):
    return [_trace(rep.matrix_of_word(g.elements[c[0]].word)) for c in cls]


def test_b2_regular_decomposition():
    rs = build("B2")
    g = enumerate_group(rs)
    cls = conjugacy_classes(g, rs)
    assert len(cls) == 5
    sizes = [len(c) for c in cls]

    def inner(a, b):
        return sum(s * x * y for s, x, y in zip(sizes, a, b)) / len(g)

    reg = _character(regular_rep(rs), g, cls)
    # sum of squared irreducible dimensions over five irreducibles: 1+1+1+1+4
    assert inner(reg, reg) == 8
    assert inner(reg, _character(trivial_rep(rs), g, cls)) == 1
    assert inner(reg, _character(sign_rep(rs), g, cls)) == 1
    refl = _character(reflection_rep(rs), g, cls)
    assert inner(refl, refl) == 1
    assert inner(reg, refl) == 2


@pytest.mark.parametrize("name,dim", [("E8", 8), ("A2", 2), ("G2", 2)])
def test_reflection_dimension(name, dim):
    rep = reflection_rep(build(name))
    assert rep.dim == dim


def test_g2_reflection_traces():
    rep = reflection_rep(build("G2"))
    assert all(_trace(m) == 0 for m in rep.gens)


@pytest.mark.parametrize("name,dim", [("E8", 35), ("E6", 20), ("F4", 9), ("A1", 0), ("B2", 2)])
def test_sym2_dimension(name, dim):
    assert sym2_nontrivial(build(name)).dim == dim


@pytest.mark.parametrize("name", ["A2", "B2", "G2", "B3", "F4", "E6", "E8"])
def test_models_are_orthogonal_and_braid(name):
    rs = build(name)
    for rep in (trivial_rep(rs), sign_rep(rs), reflection_rep(rs), sym2_nontrivial(rs)):
        if rep.dim:
            check_rep(rep, rs)


@pytest.mark.parametrize("name", ["A2", "G2"])
def test_regular_model_is_valid(name):
    rs = build(name)
    check_rep(regular_rep(rs), rs)


@pytest.mark.parametrize("name", ["B2", "G2", "F4", "E6"])
def test_sym2_eigenspaces_fill_the_space(name):
    rep = sym2_nontrivial(build(name))
    n = rep.dim
    for g in rep.gens:
        tr = _trace(g)
        plus = (n + tr) / 2
        minus = (n - tr) / 2
        assert plus == int(plus) and plus + minus == n
        assert matmul(g, g) == identity(n)


def test_lowest_harmonic_degrees():
    rs = build("B2")
    assert lowest_harmonic_degree(trivial_rep(rs), rs) == 0
    assert lowest_harmonic_degree(reflection_rep(rs), rs) == 1
    assert lowest_harmonic_degree(sign_rep(rs), rs) == 4
    assert lowest_harmonic_degree(sym2_nontrivial(build("G2")), build("G2")) == 2


def test_g2_regular_and_relevant_agree_on_every_region():
    rs = build("G2")
    reg = classify_zero_cs(rs, "regular")
    rel = classify_zero_cs(rs, "relevant")
    assert [v.unitary for v in reg] == [v.unitary for v in rel]
    assert sum(v.unitary for v in reg) == 2
