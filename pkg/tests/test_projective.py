import pytest

from okubo.affine import (
    INFINITY,
    LINE_AT_INFINITY,
    ORIGIN,
    AtInfinity,
    Finite,
    Sloped,
    Vertical,
    incident,
)
from okubo.algebra import E, ZERO_ELEMENT, norm, random_element, star
from okubo.projective import (
    MalformedVectorError,
    ProjectiveLine,
    ProjectivePoint,
    VeroneseVector,
    beta,
    drop_line,
    drop_point,
    incident_proj,
    is_veronese,
    lift_line,
    lift_line_vector,
    lift_point,
    lift_vector,
    polarity,
    proj_equal,
    quadratic_form,
)
from okubo.scalar import FieldScalar
from okubo.verify import random_line, random_point, random_point_on

O = ZERO_ELEMENT


def vv(xs, lams):
    return VeroneseVector.make(xs, lams)


INF_VEC = vv([O, O, O], [1, 0, 0])


def test_is_veronese_examples(rng):
    assert is_veronese(INF_VEC)
    for _ in range(10):
        x, y = random_element(rng), random_element(rng)
        assert is_veronese(vv([x, y, star(x, y)], [norm(y), norm(x), 1]))
    assert not is_veronese(vv([E, O, O], [0, 0, 0]))
    assert not is_veronese(vv([O, O, O], [0, 0, 0]))


def test_beta_examples():
    assert beta(INF_VEC, INF_VEC) == 1
    assert beta(lift_vector(INFINITY), lift_line_vector(LINE_AT_INFINITY)) == 0
    assert quadratic_form(vv([E, E, E], [1, 1, 1])) == FieldScalar("9/2")


def test_lift_examples():
    assert lift_point(ORIGIN) == ProjectivePoint(vv([O, O, O], [0, 0, 1]))
    assert lift_point(INFINITY) == ProjectivePoint(INF_VEC)
    assert lift_vector(Finite(E, E)) == vv([E, E, E], [1, 1, 1])
    assert is_veronese(lift_vector(Finite(E, E)))


def test_drop_examples():
    assert drop_point(ProjectivePoint(vv([O, O, O], [0, 0, 5]))) == ORIGIN
    assert drop_point(ProjectivePoint(vv([O, O, E], [1, 1, 0]))) == AtInfinity(E)
    assert drop_point(ProjectivePoint(INF_VEC)) == INFINITY
    with pytest.raises(MalformedVectorError):
        drop_point(ProjectivePoint(vv([O, O, O], [0, 0, 0]), check=False))


def test_line_examples():
    assert lift_line(LINE_AT_INFINITY).dual == vv([O, O, O], [0, 0, 1])
    assert lift_line(Vertical(O)).dual == vv([O, O, O], [0, 1, 0])
    w = lift_line(Sloped(E, E)).dual
    assert w == vv([E, -E, -E], [1, 1, 1]) and is_veronese(w)
    assert drop_line(ProjectiveLine(vv([O, O, O], [0, 0, 1]))) == LINE_AT_INFINITY
    assert drop_line(ProjectiveLine(vv([-E, O, O], [0, 1, 1]))) == Vertical(E)


def test_incidence_examples(rng):
    for _ in range(10):
        x, s, t = random_element(rng), random_element(rng), random_element(rng)
        assert incident_proj(lift_point(Finite(x, star(s, x) + t)), lift_line(Sloped(s, t)))
    assert incident_proj(lift_point(INFINITY), lift_line(LINE_AT_INFINITY))
    assert not incident_proj(lift_point(Finite(O, E)), lift_line(Sloped(O, O)))


def test_proj_equal_examples(rng):
    v = lift_vector(Finite(random_element(rng), random_element(rng)))
    assert proj_equal(v, v.scale(3))
    assert proj_equal(v, v.scale(-1))
    assert not proj_equal(lift_vector(ORIGIN), lift_vector(INFINITY))


def test_polarity_examples():
    P = ProjectivePoint(INF_VEC)
    assert polarity(P).dual == INF_VEC
    assert polarity(polarity(P)) == P
    with pytest.raises(TypeError):
        polarity(ORIGIN)


def test_point_constructor_validates():
    with pytest.raises(ValueError):
        ProjectivePoint(vv([E, O, O], [0, 0, 0]))


def test_randomized_invariants(rng):
    for k in range(100):
        l = random_line(rng)
        p = random_point_on(l, rng) if k % 2 else random_point(rng)
        v = lift_vector(p)
        c = FieldScalar(k % 7 - 3, 1)
        assert is_veronese(v.scale(c))
        assert drop_point(ProjectivePoint(v.scale(c))) == p
        assert drop_line(lift_line(l)) == l
        assert incident(p, l) == incident_proj(lift_point(p), lift_line(l))
        assert is_veronese(lift_line_vector(l))
        assert quadratic_form(v).sign() > 0
        P = lift_point(p)
        assert not incident_proj(P, polarity(P))


def test_hash_respects_projective_equality(rng):
    v = lift_vector(Finite(random_element(rng), random_element(rng)))
    assert hash(ProjectivePoint(v)) == hash(ProjectivePoint(v.scale(-5)))
