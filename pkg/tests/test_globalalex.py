import random
from fractions import Fraction

import pytest

from alexinv.globalalex import (LocalTypeList, PointConditionSet, alexander_from_contributing_faces,
                                check_divisibility, local_product, milnor_charpoly_constraint,
                                monomials, superabundance_p2)
from alexinv.intlinalg import rational_rank
from alexinv.laurent import AlexanderPolynomial
from alexinv.serialize import parse_poly

F = Fraction
CONIC_POINTS = [(0, 0, 1), (1, 1, 1), (1, -1, 1), (4, 2, 1), (4, -2, 1), (9, 3, 1)]


def A(text):
    return AlexanderPolynomial(parse_poly(text, 1))


def test_six_points_on_conic():
    assert superabundance_p2(PointConditionSet(2, CONIC_POINTS)) == 1


def test_six_generic_points():
    pts = [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (2, 3, 1), (5, 7, 1)]
    # oracle: no conic through all six, i.e. the 6x6 matrix is invertible
    rows = [[x ** a * y ** b * z ** c for a, b, c in monomials(2)] for x, y, z in pts]
    assert rational_rank(rows) == 6
    assert superabundance_p2(PointConditionSet(2, pts)) == 0


def test_two_points_on_lines():
    assert superabundance_p2(PointConditionSet(1, [(0, 0, 1), (1, 2, 1)])) == 0
    # three collinear points impose only two conditions on lines
    assert superabundance_p2(PointConditionSet(1, [(0, 0, 1), (1, 2, 1), (2, 4, 1)])) == 1


def test_coincident_points_rejected():
    with pytest.raises(ValueError):
        PointConditionSet(2, [(1, 2, 3), (2, 4, 6)])


def random_unimodular(rng):
    m = [[int(i == j) for j in range(3)] for i in range(3)]
    for _ in range(6):
        i, j = rng.sample(range(3), 2)
        c = rng.randint(-3, 3)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    return m


def test_superabundance_projective_invariance():
    rng = random.Random(42)
    base = [PointConditionSet(2, CONIC_POINTS),
            PointConditionSet(2, [(0, 0, 1), (1, 0, 1), (0, 1, 1), (1, 1, 1), (2, 3, 1)]),
            PointConditionSet(3, CONIC_POINTS + [(1, 5, 2), (3, 3, 7)]),
            PointConditionSet(1, [(0, 0, 1), (1, 2, 1), (2, 4, 1)])]
    for _ in range(100):
        pc = rng.choice(base)
        m = random_unimodular(rng)
        moved = [tuple(sum(m[i][j] * p[j] for j in range(3)) for i in range(3)) for p in pc.points]
        assert superabundance_p2(PointConditionSet(pc.degree, moved)) == superabundance_p2(pc)


def test_extra_rows_interface():
    # a derivative condition at the origin on conics: d/dx of f at (0:0:1) is the xz coefficient
    pc = PointConditionSet(2, [(0, 0, 1)])
    mons = monomials(2)
    row = [1 if m == (1, 0, 1) else 0 for m in mons]
    assert superabundance_p2(pc, [row]) == 0


def test_contributing_faces():
    assert alexander_from_contributing_faces(6, [("1/6", 1)]).polynomial == A("t^2-t+1")
    assert alexander_from_contributing_faces(6, [("1/6", 1)]).components == ((F(1, 6), 1, 2),)
    assert alexander_from_contributing_faces(6, [("1/6", 0)]).polynomial == AlexanderPolynomial.one()
    assert alexander_from_contributing_faces(6, [("1/6", 2)]).polynomial == A("(t^2-t+1)^2")
    with pytest.raises(ValueError, match="non-integral"):
        alexander_from_contributing_faces(5, [("1/6", 1)])
    with pytest.raises(ValueError):
        alexander_from_contributing_faces(6, [("1/6", 1), ("5/6", 2)])


def test_local_products():
    assert local_product(LocalTypeList((("cusp", 6),))).reduced == A("(t^2-t+1)^6")
    node = local_product(LocalTypeList((("node", 1),)))
    assert node.reduced == AlexanderPolynomial.one() and node.t_minus_1 == 1
    assert local_product(LocalTypeList(())).full() == AlexanderPolynomial.one()
    with pytest.raises(KeyError):
        LocalTypeList((("bogus", 1),))


def test_local_type_parsing():
    lt = LocalTypeList.parse("cusp:6, node:2,tacnode")
    assert lt.entries == (("cusp", 6), ("node", 2), ("tacnode", 1))
    assert LocalTypeList.parse("torus_p_q?p=2&q=5:3").entries == (("torus_p_q?p=2&q=5", 3),)


def test_divisibility_examples():
    six = LocalTypeList((("cusp", 6),))
    v = check_divisibility(A("t^2-t+1"), six)
    assert v.divides and v.certificates["local"] == A("(t^2-t+1)^5")
    assert not check_divisibility(A("t^2+1"), six)
    assert check_divisibility(AlexanderPolynomial.one(), LocalTypeList((("node", 3),)))
    # (t - 1) factors are free
    assert check_divisibility(A("(t-1)^4 (t^2-t+1)"), six)
    # but not under the H1 = Z flag
    assert not check_divisibility(A("(t-1)(t^2-t+1)"), six, h1_is_z=True)


def test_divisibility_at_infinity():
    six = LocalTypeList((("cusp", 6),))
    inf = A("(t^6-1)^4 (t-1)")
    v = check_divisibility(A("t^2-t+1"), six, at_infinity=inf)
    assert v.divides and v.certificates["infinity"].quotient(inf) == A("t^2-t+1")
    assert not check_divisibility(A("t^2-t+1"), six, at_infinity=A("t^2+t+1"))


CATALOG = ["node", "cusp", "tacnode", "smooth", "ordinary?m=3", "ordinary?m=4",
           "torus_p_q?p=2&q=5", "torus_p_q?p=3&q=4"]


@pytest.mark.parametrize("name", CATALOG)
def test_local_product_divides_itself(name):
    for k in range(7):
        lt = LocalTypeList(((name, k),))
        assert check_divisibility(local_product(lt).full(), lt)


def test_faces_output_passes_divisibility():
    for faces, lt in (([("1/6", 1)], "cusp:6"), ([("1/6", 3)], "cusp:9"),
                      ([("1/3", 1)], "ordinary?m=3:4")):
        res = alexander_from_contributing_faces(6, faces)
        assert check_divisibility(res.polynomial, LocalTypeList.parse(lt))


@pytest.mark.parametrize("N", range(3, 13))
def test_triple_point_family(N):
    k = (N - 1) // 2
    c = milnor_charpoly_constraint(N, [3] * k)
    assert c.base_exponent == N - 1
    assert set(c.bounds) <= {3}
    members = list(c.members())
    kappa = c.bounds.get(3, 0)
    assert members == [A(f"(t-1)^{N - 1} (t^2+t+1)^{j}") for j in range(kappa + 1)]
    assert kappa == (k if N % 3 == 0 else 0)


def test_nodal_line_is_abelian():
    c = milnor_charpoly_constraint(3, [2, 2])
    assert list(c.members()) == [A("(t-1)^2")]
    assert milnor_charpoly_constraint(1, []).base_exponent == 0


def test_general_multiplicities():
    c = milnor_charpoly_constraint(12, [4, 3, 2, 2, 2, 2])
    assert c.bounds == {2: 2, 4: 2, 3: 1}
    assert c.contains(A("(t-1)^11 (t+1)^2 (t^2+t+1)"))
    assert not c.contains(A("(t-1)^11 (t+1)^3"))
    with pytest.raises(ValueError):
        milnor_charpoly_constraint(4, [1])
