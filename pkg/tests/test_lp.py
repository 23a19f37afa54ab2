from hypothesis import given, settings, strategies as st

from hecke_unitary.lp import maximize
from hecke_unitary.rational import Q


def test_textbook_optimum():
    # max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18
    r = maximize([3, 5], [[1, 0], [0, 2], [3, 2]], [4, 12, 18])
    assert r.status == "optimal" and r.value == 36 and r.x == (2, 6)


def test_infeasible_and_unbounded():
    assert maximize([1], [[1], [-1]], [1, -2]).status == "infeasible"
    assert maximize([1, 1], [[1, -1]], [1]).status == "unbounded"


def test_negative_right_hand_side_uses_phase_one():
    r = maximize([-1], [[-1]], [Q(-1, 3)])
    assert r.status == "optimal" and r.x == (Q(1, 3),)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=2, max_size=2), st.integers(0, 5), st.integers(0, 5))
def test_box_lp_matches_vertex_enumeration(c, a, b):
    # max c.x on the box [0, a] x [0, b]
    r = maximize(c, [[1, 0], [0, 1]], [a, b])
    best = max(c[0] * x + c[1] * y for x in (0, a) for y in (0, b))
    assert r.status == "optimal" and r.value == best
