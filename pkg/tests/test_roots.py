import itertools
import random
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from clustercone import exact
from clustercone.roots import (
    CartanType,
    InvalidType,
    NotExchangeable,
    NotSkewSymmetrizable,
    RootModel,
    WeightNotInPiC,
    apply_reflection,
    build_Bc,
    cartan_counterpart,
    cartan_matrix,
    fundamental,
    is_finite_type,
    matrix_mutation,
    principal_minors_positive,
    simple_roots,
    skew_symmetrizer,
)

CLASSICAL = [("A", n) for n in (1, 2, 3, 4)] + [("B", n) for n in (2, 3, 4)] + [("C", n) for n in (2, 3, 4)] + [("D", 4), ("D", 5), ("F", 4), ("G", 2)]
ALL_CHEAP = CLASSICAL + [("E", 6)]


def positive_root_count(t: CartanType) -> int:
    """Closure of the simple roots under simple reflections (oracle)."""
    if t.family == "E":
        A = cartan_matrix(t)  # symmetric, so no convention to get wrong
        n = t.rank
        simple = [tuple(int(i == j) for j in range(n)) for i in range(n)]

        def refl(i, b):
            pair = sum(b[j] * A[i][j] for j in range(n))
            return tuple(x - pair * (k == i) for k, x in enumerate(b))
    else:
        simple = simple_roots(t)

        def refl(i, b):
            a = simple[i]
            pair = 2 * exact.dot(b, a) / exact.dot(a, a)
            return tuple(x - pair * y for x, y in zip(b, a))

    roots = set(simple)
    frontier = list(simple)
    while frontier:
        nxt = []
        for b in frontier:
            for i in range(t.rank):
                r = refl(i, b)
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return len(roots) // 2


CLUSTER_COUNTS = {
    "A": lambda n: comb(2 * n + 2, n + 1) // (n + 2),
    "B": lambda n: comb(2 * n, n),
    "C": lambda n: comb(2 * n, n),
    "D": lambda n: (3 * n - 2) * comb(2 * n - 2, n - 1) // n,
}


def test_invalid_types():
    for f, n in [("A", 0), ("D", 3), ("E", 5), ("F", 3), ("G", 3), ("X", 2), ("B", 1)]:
        with pytest.raises(InvalidType):
            CartanType(f, n)


@pytest.mark.parametrize("family,n", [p for p in ALL_CHEAP if p[0] != "E"])
def test_cartan_from_euclidean_roots(family, n):
    roots = simple_roots(CartanType(family, n))
    A = cartan_matrix(CartanType(family, n))
    for i, j in itertools.product(range(n), repeat=2):
        assert A[i][j] == 2 * exact.dot(roots[i], roots[j]) / exact.dot(roots[i], roots[i])


def test_cartan_examples():
    assert cartan_matrix(CartanType("A", 2)) == [[2, -1], [-1, 2]]
    assert cartan_matrix(CartanType("G", 2)) == [[2, -3], [-1, 2]]
    assert exact.determinant(cartan_matrix(CartanType("G", 2))) == 1
    assert exact.determinant(cartan_matrix(CartanType("E", 8))) == 1


@pytest.mark.parametrize("family,n", ALL_CHEAP + [("E", 7), ("E", 8)])
def test_cartan_positive_definite(family, n):
    assert principal_minors_positive(cartan_matrix(CartanType(family, n)))


def test_principal_minors_reject_affine():
    assert not principal_minors_positive([[2, -2], [-2, 2]])


def test_bc_examples():
    A2 = cartan_matrix(CartanType("A", 2))
    assert build_Bc(A2, (0, 1)) == [[0, 1], [-1, 0]]
    assert build_Bc(A2, (1, 0)) == [[0, -1], [1, 0]]
    assert build_Bc(cartan_matrix(CartanType("B", 2)), (0, 1)) == [[0, 1], [-2, 0]]


def _fundamental_euclidean(roots):
    """Euclidean fundamental weights inside the span of the simple roots."""
    n = len(roots)
    cor = [tuple(2 * x / exact.dot(a, a) for x in a) for a in roots]
    M = [[exact.dot(roots[k], cor[i]) for k in range(n)] for i in range(n)]
    Minv = exact.inverse(M)
    out = []
    for j in range(n):
        c = [Minv[k][j] for k in range(n)]
        out.append(tuple(sum(c[k] * roots[k][d] for k in range(n)) for d in range(len(roots[0]))))
    return out, cor


@pytest.mark.parametrize("family,n", [p for p in CLASSICAL])
def test_reflection_matches_euclidean_reflection(family, n):
    t = CartanType(family, n)
    roots = simple_roots(t)
    A = cartan_matrix(t)
    fund, cor = _fundamental_euclidean(roots)
    rng = random.Random(n)
    for _ in range(20):
        lam = tuple(rng.randint(-4, 4) for _ in range(n))
        x = [sum(lam[j] * fund[j][d] for j in range(n)) for d in range(len(roots[0]))]
        for i in range(n):
            pair = exact.dot(x, cor[i])
            y = [a - pair * b for a, b in zip(x, roots[i])]
            expected = tuple(exact.dot(y, cor[j]) for j in range(n))
            assert apply_reflection(A, i, lam) == expected


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(ALL_CHEAP), st.data())
def test_reflection_is_involution(ty, data):
    t = CartanType(*ty)
    A = cartan_matrix(t)
    i = data.draw(st.integers(0, t.rank - 1))
    lam = tuple(data.draw(st.lists(st.integers(-6, 6), min_size=t.rank, max_size=t.rank)))
    assert apply_reflection(A, i, apply_reflection(A, i, lam)) == lam


def test_reflection_on_fundamental():
    A = cartan_matrix(CartanType("B", 3))
    for i, j in itertools.product(range(3), repeat=2):
        got = apply_reflection(A, i, fundamental(3, j))
        expected = tuple((k == j) - (i == j) * A[k][i] for k in range(3))
        assert got == expected


@pytest.mark.parametrize("family,n", ALL_CHEAP + [("E", 7), ("E", 8)])
def test_pi_c_size(family, n):
    t = CartanType(family, n)
    m = RootModel(t)
    assert len(m.pi) == positive_root_count(t) + n
    # every orbit ends at a negative fundamental weight
    assert sum(m.pi.heights) + n == len(m.pi)


def test_pi_c_known_sizes():
    sizes = {("E", 6): 42, ("E", 7): 70, ("E", 8): 128, ("F", 4): 28, ("G", 2): 8}
    for (f, n), k in sizes.items():
        assert len(RootModel(CartanType(f, n)).pi) == k


def test_lookup_outside_pi_c():
    m = RootModel(CartanType("A", 2))
    with pytest.raises(WeightNotInPiC):
        m.pi.lookup((5, 5))


@pytest.mark.parametrize("family,n", ALL_CHEAP)
def test_tau_is_a_permutation(family, n):
    m = RootModel(CartanType(family, n))
    perm = m.tau_perm
    assert sorted(perm) == list(range(len(m.pi)))
    for k, p in enumerate(perm):
        assert m.tau_inv_perm[p] == k
        assert m.tau_inverse(m.tau(m.pi[k])) == m.pi[k]
    for i in range(n):
        assert m.tau(fundamental(n, i, -1)) == fundamental(n, i)


@pytest.mark.parametrize("family,n", ALL_CHEAP)
def test_compat_invariants(family, n):
    m = RootModel(CartanType(family, n))
    C = m.compat
    size = len(m.pi)
    for a in range(size):
        assert C[a][a] == 0
    for a, b in itertools.product(range(size), repeat=2):
        assert C[m.tau_perm[a]][m.tau_perm[b]] == C[a][b]
        assert (C[a][b] == 0) == (C[b][a] == 0)
        assert C[a][b] >= 0


@pytest.mark.parametrize("family,n", [p for p in ALL_CHEAP if p[0] in "ABCD"])
def test_cluster_counts(family, n):
    m = RootModel(CartanType(family, n))
    assert len(m.clusters) == CLUSTER_COUNTS[family](n)
    assert all(len(c) == n for c in m.clusters)


def test_exceptional_cluster_counts():
    assert len(RootModel(CartanType("G", 2)).clusters) == 8
    assert len(RootModel(CartanType("F", 4)).clusters) == 105
    assert len(RootModel(CartanType("E", 6)).clusters) == 833


@pytest.mark.long
def test_e7_cluster_count():
    assert len(RootModel(CartanType("E", 7)).clusters) == 4160


@pytest.mark.parametrize("family,n", ALL_CHEAP)
def test_relations_balance_weights(family, n):
    """The two monomials on the right have the weights listed for them."""
    m = RootModel(CartanType(family, n))
    for r in m.relations:
        a, b = r.exchanged
        assert r.rhs_weights[0] == exact.add(m.pi[a], m.pi[b])
        for term, w in zip(r.terms, r.rhs_weights):
            total = [0] * n
            for k, e in enumerate(term):
                for d in range(n):
                    total[d] += e * m.pi[k][d]
            assert tuple(total) == w


@pytest.mark.parametrize("family,n", ALL_CHEAP)
def test_primitive_relations_pair_tau_neighbours(family, n):
    m = RootModel(CartanType(family, n))
    prim = [r for r in m.relations if r.primitive]
    assert len(prim) == (1 if n == 1 else len(m.pi))
    for r in prim:
        a, b = r.exchanged
        assert m.tau_perm[a] == b or m.tau_perm[b] == a


def test_a2_relations():
    m = RootModel(CartanType("A", 2))
    assert len(m.relations) == 5
    for r in m.relations:
        assert sorted(sum(t) for t in r.terms) == [0, 1]


def test_g2_has_cubic_term():
    m = RootModel(CartanType("G", 2))
    # rank two: x_{k-1} x_{k+1} = x_k^b + 1 with b alternating between 1 and 3
    exps = sorted(max(t) for r in m.relations for t in r.terms if any(t))
    assert exps == [1] * 4 + [3] * 4


def test_not_exchangeable():
    m = RootModel(CartanType("A", 3))
    C = m.compat
    a, b = next((a, b) for a, b in itertools.combinations(range(len(m.pi)), 2) if C[a][b] == 0)
    with pytest.raises(NotExchangeable):
        m.exchange_relation(a, b)


@pytest.mark.parametrize("family,n", [("A", 3), ("B", 3), ("D", 4)])
def test_other_coxeter_element(family, n):
    t = CartanType(family, n)
    m = RootModel(t, order=tuple(reversed(range(n))))
    assert len(m.pi) == positive_root_count(t) + n
    assert len(m.relations) == len(RootModel(t).relations)


def _random_skew_symmetrizable(rng, n):
    d = [rng.randint(1, 3) for _ in range(n)]
    S = [[0] * n for _ in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        S[i][j] = rng.randint(-2, 2)
        S[j][i] = -S[i][j]
    return [[d[i] * S[i][j] for j in range(n)] for i in range(n)]


def test_mutation_is_an_involution_and_keeps_symmetrizer():
    rng = random.Random(11)
    for _ in range(100):
        n = rng.randint(2, 5)
        B = _random_skew_symmetrizable(rng, n)
        D = skew_symmetrizer(B)
        for k in range(n):
            Bk = matrix_mutation(B, k)
            assert matrix_mutation(Bk, k) == B
            DB = [[D[i] * Bk[i][j] for j in range(n)] for i in range(n)]
            assert all(DB[i][j] == -DB[j][i] for i in range(n) for j in range(n))


def test_mutation_extended_rows():
    B = [[0, 1], [-1, 0], [1, -1]]
    assert matrix_mutation(B, 0) == [[0, -1], [1, 0], [-1, 0]]
    with pytest.raises(IndexError):
        matrix_mutation(B, 2)


def test_cartan_counterpart():
    assert cartan_counterpart([[0, 1], [-2, 0]]) == [[2, -1], [-2, 2]]
    assert is_finite_type([[0, 1], [-3, 0]])
    assert not is_finite_type([[0, 2], [-2, 0]])
    with pytest.raises(NotSkewSymmetrizable):
        skew_symmetrizer([[0, 1], [1, 0]])


@pytest.mark.parametrize("family,n", ALL_CHEAP)
def test_bc_is_finite_type(family, n):
    t = CartanType(family, n)
    B = build_Bc(cartan_matrix(t), tuple(range(n)))
    assert is_finite_type(B)
    assert cartan_counterpart(B) == [[2 if i == j else -abs(x) for j, x in enumerate(row)] for i, row in enumerate(cartan_matrix(t))]


def test_tau_pl_round_trip():
    m = RootModel(CartanType("B", 3))
    rng = random.Random(3)
    for _ in range(30):
        lam = tuple(rng.randint(-3, 3) for _ in range(3))
        assert m.tau_pl(m.tau_pl(lam, 1), -1) == lam


@pytest.mark.long
@pytest.mark.parametrize("rank", [7, 8])
def test_e7_e8_compatibility_equality(rank):
    from clustercone.groebner.cone import verify_prop_equality

    assert verify_prop_equality(RootModel(CartanType("E", rank))).passed
