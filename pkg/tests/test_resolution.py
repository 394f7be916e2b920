from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from arcfilt.resolution import (
    BlowFree,
    BlowOrigin,
    BlowSatellite,
    BlowUpProgram,
    DualGraph,
    InvalidGraphError,
    brieskorn_program,
    euler_char_smooth_part,
    from_program,
    multiplicities,
    normalize_parity,
    ordinary_point_program,
    tangential_program,
)

D4_MATRIX = ((-4, 1, 1, 1), (1, -1, 0, 0), (1, 0, -1, 0), (1, 0, 0, -1))
CUSP = BlowUpProgram((BlowOrigin(), BlowFree(1), BlowSatellite((1, 2))), ((3, 1),))


def matmul(a, b):
    return [[sum(x * y for x, y in zip(row, col)) for col in zip(*b)] for row in a]


def identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


@st.composite
def programs(draw, max_steps=6):
    steps = [BlowOrigin()]
    edges = set()
    n = 1
    for _ in range(draw(st.integers(0, max_steps))):
        if edges and draw(st.booleans()):
            i, j = draw(st.sampled_from(sorted(edges)))
            steps.append(BlowSatellite((i, j)))
            edges.remove((i, j))
            n += 1
            edges |= {(i, n), (j, n)}
        else:
            on = draw(st.integers(1, n))
            steps.append(BlowFree(on))
            n += 1
            edges.add((on, n))
    where = draw(st.lists(st.integers(1, n), min_size=1, max_size=3, unique=True))
    arrows = tuple((v, draw(st.integers(1, 3))) for v in where)
    return BlowUpProgram(tuple(steps), arrows)


# ---------------------------------------------------------------------------
# from_program
# ---------------------------------------------------------------------------


def test_single_blowup_three_arrows():
    g = from_program(BlowUpProgram((BlowOrigin(),), ((1, 3),)))
    assert g.self_intersections == (-1,)
    assert g.arrows == (3,)
    assert g.m == (3,)


def test_smooth_curve():
    g = from_program(BlowUpProgram((BlowOrigin(),), ((1, 1),)))
    assert g.m == (1,)


def test_cusp_program():
    g = from_program(CUSP)
    assert g.intersection_matrix == ((-3, 0, 1), (0, -2, 1), (1, 1, -1))
    assert g.m == (2, 3, 6)
    assert g.m_matrix == ((1, 1, 2), (1, 2, 3), (2, 3, 6))


def test_cusp_hand_check():
    # M m = -a and (m_ij)(-M) = I, checked by plain multiplication
    g = from_program(CUSP)
    M = g.intersection_matrix
    assert [sum(x * y for x, y in zip(row, g.m)) for row in M] == [0, 0, -1]
    assert matmul(g.m_matrix, [[-x for x in r] for r in M]) == identity(3)


@pytest.mark.parametrize("program, message", [
    (BlowUpProgram((BlowFree(1),), ((1, 1),)), "origin"),
    (BlowUpProgram((BlowOrigin(), BlowOrigin()), ((1, 1),)), "once"),
    (BlowUpProgram((BlowOrigin(), BlowFree(2)), ((1, 1),)), "nonexistent"),
    (BlowUpProgram((BlowOrigin(), BlowFree(1), BlowFree(1), BlowSatellite((2, 3))), ((1, 1),)), "adjacent"),
    (BlowUpProgram((BlowOrigin(),), ((1, 0),)), "arrows"),
    (BlowUpProgram((BlowOrigin(),), ((2, 1),)), "nonexistent"),
    (BlowUpProgram((), ((1, 1),)), "origin"),
])
def test_program_errors(program, message):
    with pytest.raises(InvalidGraphError, match=message):
        from_program(program)


def test_satellite_pair_no_longer_adjacent_after_blowup():
    prog = BlowUpProgram((BlowOrigin(), BlowFree(1), BlowSatellite((1, 2)), BlowSatellite((1, 2))), ((3, 1),))
    with pytest.raises(InvalidGraphError):
        from_program(prog)


# ---------------------------------------------------------------------------
# multiplicities and graph validation
# ---------------------------------------------------------------------------


def test_d4_multiplicities():
    g = DualGraph.from_matrix(D4_MATRIX, (0, 1, 1, 1))
    m, mm = multiplicities(g)
    assert mm == ((1, 1, 1, 1), (1, 2, 1, 1), (1, 1, 2, 1), (1, 1, 1, 2))
    assert m == (3, 4, 4, 4)


def test_single_vertex_matrix():
    g = DualGraph.from_matrix([[-1]], [2])
    assert g.m_matrix == ((1,),)


@pytest.mark.parametrize("matrix", [
    [[-2, 1], [1, -2]],  # det 3
    [[-1, 1], [1, -1]],  # not definite
    [[-1, 0], [0, -1]],  # disconnected
    [[-2, 1], [0, -1]],  # not symmetric
    [[-3, 2], [2, -2]],  # entry 2
])
def test_raw_matrix_validation(matrix):
    with pytest.raises(InvalidGraphError):
        DualGraph.from_matrix(matrix, [1] * len(matrix))


def test_zero_arrows_rejected():
    with pytest.raises(InvalidGraphError):
        DualGraph.from_matrix([[-1]], [0])


# ---------------------------------------------------------------------------
# normalize_parity and Euler characteristics
# ---------------------------------------------------------------------------


def test_normalize_d4():
    g = normalize_parity(from_program(ordinary_point_program(3)))
    assert g.intersection_matrix == D4_MATRIX
    assert g.arrows == (0, 1, 1, 1)


def test_normalize_unchanged_cases():
    cusp = from_program(CUSP)
    assert normalize_parity(cusp) is cusp
    even = from_program(ordinary_point_program(2))
    assert normalize_parity(even) is even


def test_euler_characteristics():
    d4 = normalize_parity(from_program(ordinary_point_program(3)))
    assert euler_char_smooth_part(d4, 1) == -1
    assert euler_char_smooth_part(d4, 2) == 1
    assert euler_char_smooth_part(from_program(ordinary_point_program(4)), 1) == 2
    with pytest.raises(InvalidGraphError):
        euler_char_smooth_part(d4, 5)


# ---------------------------------------------------------------------------
# generators
# ---------------------------------------------------------------------------


def test_brieskorn_33():
    prog = brieskorn_program(3, 3)
    assert prog.steps == (BlowOrigin(),)
    assert prog.arrows == ((1, 3),)


def test_brieskorn_63():
    g = from_program(brieskorn_program(6, 3))
    assert g.size == 2
    assert g.m == (3, 6)
    assert g.arrows == (0, 3)


def test_brieskorn_23_is_cusp():
    prog = brieskorn_program(2, 3)
    assert from_program(prog) == from_program(CUSP)
    # (v(x), v(y)) of x^2 + y^3 along the chain
    assert prog.toric_weights == ((1, 1), (2, 1), (3, 2))


def test_brieskorn_weights_only_when_coprime():
    assert brieskorn_program(6, 3).toric_weights is None
    assert brieskorn_program(3, 5).toric_weights is not None


@pytest.mark.parametrize("p, q", [(1, 3), (3, 0)])
def test_brieskorn_rejects_small(p, q):
    with pytest.raises(ValueError):
        brieskorn_program(p, q)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_ordinary_point(m):
    assert from_program(ordinary_point_program(m)).m == (m,)


@pytest.mark.parametrize("m", [2, 3, 5])
def test_tangential(m):
    g = from_program(tangential_program(m))
    assert g.intersection_matrix == ((-2, 1), (1, -1))
    assert g.m == (m, 2 * m)


@pytest.mark.parametrize("p, q", [(p, q) for p in range(2, 9) for q in range(2, 9)])
def test_brieskorn_minimal_and_consistent(p, q):
    prog = brieskorn_program(p, q)
    g = from_program(prog)
    # only the arrow-bearing component may be a (-1)-curve
    minus_one = [i for i in g.vertices if g.self_intersections[i - 1] == -1]
    assert minus_one == [g.size]
    assert g.arrows[-1] == gcd(p, q)
    assert g.m[0] == min(p, q)
    if gcd(p, q) == 1:
        for (vx, vy), m in zip(prog.toric_weights, g.m):
            assert m == min(p * vx, q * vy)


# ---------------------------------------------------------------------------
# properties
# ---------------------------------------------------------------------------


@settings(max_examples=150, deadline=None)
@given(programs())
def test_program_graph_invariants(prog):
    g = from_program(prog)
    M = g.intersection_matrix
    neg = [[-x for x in r] for r in M]
    assert matmul(g.m_matrix, neg) == identity(g.size)
    assert all(x >= 1 for r in g.m_matrix for x in r)
    assert [sum(x * y for x, y in zip(r, g.m)) for r in M] == [-a for a in g.arrows]
    assert all((s * m) % 2 == 0 for s, m in zip(g.sigma, g.m))
    assert all(c == 2 - len(g.neighbors[i]) for i, c in zip(g.vertices, g.chi))


@settings(max_examples=100, deadline=None)
@given(programs(), st.data())
def test_blowup_multiplicity_rule(prog, data):
    g = from_program(prog)
    if g.edges:
        i, j = data.draw(st.sampled_from(g.edges))
        h = from_program(prog.extended(BlowSatellite((i, j))))
        assert h.m[-1] == g.m[i - 1] + g.m[j - 1]
    i = data.draw(st.integers(1, g.size))
    h = from_program(prog.extended(BlowFree(i)))
    assert h.m[-1] == g.m[i - 1]
    # earlier multiplicities are unchanged by further blow-ups
    assert h.m[:-1] == g.m


@settings(max_examples=100, deadline=None)
@given(programs())
def test_normalize_parity_properties(prog):
    g = from_program(prog)
    n = normalize_parity(g)
    assert normalize_parity(n) == n
    assert sum(n.arrows) == sum(g.arrows)
    assert all(n.m[i - 1] % 2 == 0 for i in n.vertices if n.arrows[i - 1])
    # old vertices keep their multiplicities
    assert n.m[: g.size] == g.m
