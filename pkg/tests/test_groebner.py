import pytest

from clustercone.exact import dot, primitive
from clustercone.groebner.cone import (
    NotPrimitive,
    WrongType,
    degree_vector,
    degree_vectors,
    groebner_cone,
    interior_weight,
    omega_hat,
    omega_v,
    primitive_cone,
    verify_omega_in_cone,
    verify_prop_equality,
    verify_result2,
)
from clustercone.groebner.families import Families, ParameterOutOfRange, claimed_lineality, claimed_rays
from clustercone.groebner.verify import (
    derivation_check,
    no_frozen_cone_two_ways,
    verify_cross_model,
    verify_lineality,
    verify_rays,
)
from clustercone.polygon import BLUE, RED, Diag, ModelSpec, PolygonModel, seg
from clustercone.roots import CartanType, RootModel


@pytest.fixture(scope="module")
def a1():
    return PolygonModel(ModelSpec("A", 1))


def test_a1_degree_vectors(a1):
    # coordinates [1,3], [2,4], [1,2], [2,3], [3,4], [1,4]; x x' = [1,2][3,4] + [2,3][1,4]
    assert sorted(degree_vectors(a1)) == sorted([(1, 1, -1, 0, -1, 0), (1, 1, 0, -1, 0, -1)])


def test_a1_omega(a1):
    assert omega_v(a1, 0) == (0, 1, 0, 0, 0, 0)
    assert omega_v(a1, 1) == (1, 0, 0, 0, 0, 0)
    omega, report = interior_weight(a1)
    assert omega == (1, 1, 0, 0, 0, 0)
    assert report.passed and report.data["min_dot"] == 2


def test_a1_cone(a1):
    C = groebner_cone(a1)
    assert len(C.lineality) == 4 and len(C.rays) == 2
    for r in [(0, 0, -1, 0, 0, 0), (0, 0, 0, -1, 0, 0)]:
        assert C.canonical_mod_lineality(r) in C.rays


def test_a2_none_degree_vector_support():
    m = PolygonModel(ModelSpec("A", 2, "none"))
    for d in degree_vectors(m):
        assert sum(1 for x in d if x) == 3


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_frozen_entries_of_degree_vectors_nonpositive(family, n):
    m = PolygonModel(ModelSpec(family, n))
    for d in degree_vectors(m):
        assert all(x <= 0 for x in d[m.n_cluster :])
        assert sum(x for x in d[: m.n_cluster] if x > 0) == 2


def test_non_primitive_relation_has_no_degree_vector():
    m = PolygonModel(ModelSpec("A", 3))
    rel = next(r for r in m.relations if not r.primitive)
    with pytest.raises(NotPrimitive):
        degree_vector(rel, 15)


def test_single_equality_a2():
    """Hand check: v = [1,3] against the relation [2,4][3,5] = [3,4][2,5] + [2,3][4,5]."""
    m = PolygonModel(ModelSpec("A", 2))
    t = m.table
    w = omega_v(m, t.index_of(1, 3))
    # [1,3] crosses [2,4] and [2,5], nothing else
    assert w[t.index_of(2, 4)] == 1 and w[t.index_of(2, 5)] == 1 and sum(w) == 2
    lhs = w[t.index_of(2, 4)] + w[t.index_of(3, 5)]
    rhs = max(w[t.index_of(3, 4)] + w[t.index_of(2, 5)], w[t.index_of(2, 3)] + w[t.index_of(4, 5)])
    assert lhs == rhs == 1


@pytest.mark.parametrize("family,n,mode", [("A", 3, "special"), ("B", 3, "none"), ("C", 2, "special"), ("D", 4, "none")])
def test_polygon_equality_and_omega(family, n, mode):
    m = PolygonModel(ModelSpec(family, n, mode))
    assert verify_prop_equality(m).passed
    assert verify_omega_in_cone(m).passed
    assert interior_weight(m)[1].passed


@pytest.mark.parametrize("ty", [("A", 3), ("G", 2), ("B", 2)])
def test_root_equality(ty):
    m = RootModel(CartanType(*ty))
    assert verify_prop_equality(m).passed
    assert interior_weight(m)[1].passed


def test_result2_a2_dots():
    m = PolygonModel(ModelSpec("A", 2, "none"))
    assert verify_result2(m).passed
    dvecs = degree_vectors(m)
    for v in range(m.n_cluster):
        dots = sorted(dot(omega_hat(m, v), d) for d in dvecs)
        # alternating sum telescopes: one facet at 2, the rest at 0
        assert dots[-1] == 2 and dots[:-1] == [0] * (len(dots) - 1)


def test_result2_even_orbit_rejected():
    m = PolygonModel(ModelSpec("A", 3, "none"))
    with pytest.raises(WrongType):
        omega_hat(m, 0)
    assert not verify_result2(m).passed


def test_e_i_counts_type_a():
    F = Families("A", 4)
    for i in range(1, F.N + 1):
        # every segment at vertex i: two edges and N - 3 diagonals
        assert sum(1 for x in F.E_i(i) if x) == F.N - 1


def test_v_of_edge():
    F = Families("A", 3)
    v = F.v(seg(2, 3, F.N))
    assert sorted(x for x in v if x) == [-1]
    assert v[F.table.index_of(2, 3)] == -1


def test_u_diam_d4():
    F = Families("D", 4)
    u = F.u_diam()
    assert sorted(x for x in u if x) == [-1] * 4 + [1] * 4
    assert u[F.table.index_of(1, 5, BLUE)] == 1 and u[F.table.index_of(1, 5, RED)] == -1
    with pytest.raises(ParameterOutOfRange):
        Families("A", 3).u_diam()
    with pytest.raises(ParameterOutOfRange):
        F.v(Diag(1, 5))
    with pytest.raises(ParameterOutOfRange):
        F.w_jk(5, 0)


@pytest.mark.parametrize("family,n", [("A", 3), ("A", 4), ("B", 3), ("C", 3), ("D", 4), ("D", 5)])
def test_lineality_generators_orthogonal(family, n):
    m = PolygonModel(ModelSpec(family, n))
    dvecs = degree_vectors(m)
    for g in claimed_lineality(family, n, "special"):
        assert all(dot(g.vector, d) == 0 for d in dvecs), g.label


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 3), ("D", 4)])
def test_ray_generators_in_cone(family, n):
    m = PolygonModel(ModelSpec(family, n))
    C = groebner_cone(m)
    for g in claimed_rays(family, n, "special"):
        assert C.contains(primitive(g.vector)), g.label


def test_v_nonnegative_on_degree_vectors():
    m = PolygonModel(ModelSpec("A", 3))
    F = Families("A", 3)
    for l in F.nonmaximal_segments():
        v = F.v(l)
        for d in degree_vectors(m):
            assert dot(v, d) >= 0


@pytest.mark.parametrize("family,n,mode", [("A", 2, "special"), ("A", 3, "none"), ("B", 2, "none"), ("C", 3, "special"), ("D", 4, "special"), ("D", 5, "none")])
def test_lineality_and_rays(family, n, mode):
    spec = ModelSpec(family, n, mode)
    model = PolygonModel(spec)
    assert verify_lineality(spec, model).passed
    assert verify_rays(spec, model).passed


def test_d4_none_extras_reported():
    r = verify_rays(ModelSpec("D", 4, "none"))
    assert r.passed and len(r.data["non_extremal"]) == 48


@pytest.mark.parametrize("family,n", [("A", 2), ("B", 3)])
def test_no_frozen_two_routes(family, n):
    _, _, equal = no_frozen_cone_two_ways(family, n)
    assert equal


def test_a2_derivation_example():
    m = PolygonModel(ModelSpec("A", 2))
    t = m.table
    alpha = [0] * len(t)
    alpha[t.index_of(2, 5)] = 1
    res = derivation_check(m, primitive_cone(m), t.index_of(1, 3), tuple(alpha))
    assert res == {"nontrivial": True, "cone_excluded": True}


def test_trivial_derivation():
    # z_[1,3] z_[2,4] is not a cluster monomial, so the derivation vanishes on cluster monomials
    m = PolygonModel(ModelSpec("A", 2))
    t = m.table
    alpha = [0] * len(t)
    alpha[t.index_of(1, 3)] = alpha[t.index_of(2, 4)] = 1
    assert not derivation_check(m, primitive_cone(m), t.index_of(3, 5), tuple(alpha))["nontrivial"]


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("C", 2)])
def test_cross_model(family, n):
    assert verify_cross_model(family, n).passed
