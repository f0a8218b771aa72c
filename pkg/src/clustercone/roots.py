"""Root-system model of a finite-type cluster algebra without frozen variables.

Cluster variables are identified with the finite set ``Pi(c)`` of weights
``c^k omega_i``; compatibility degrees come from the c-compatibility recursion
and exchange relations from sums along ``tau_c``-orbits.  This is the only
model available for the exceptional types.

Weights are integer tuples in fundamental-weight coordinates.  The Cartan
matrix follows ``a_ij = 2<alpha_i, alpha_j>/<alpha_i, alpha_i>`` with
Bourbaki numbering, so ``alpha_j`` in fundamental coordinates is column ``j``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import networkx as nx
import numpy as np

from . import exact


class InvalidType(ValueError):
    pass


class WeightNotInPiC(KeyError):
    pass


class NotExchangeable(ValueError):
    pass


class CliqueAmbiguity(RuntimeError):
    pass


class NonTermination(RuntimeError):
    pass


class NotSkewSymmetrizable(ValueError):
    pass


ITERATION_CAP = 2 * 40

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 4}
_EXCEPTIONAL = {("E", 6), ("E", 7), ("E", 8), ("F", 4), ("G", 2)}


@dataclass(frozen=True)
class CartanType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family in _MIN_RANK:
            if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
                raise InvalidType(f"{self.family}{self.rank} is not admissible")
        elif (self.family, self.rank) not in _EXCEPTIONAL:
            raise InvalidType(f"{self.family}{self.rank} is not admissible")

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


def _e(n: int, *entries: tuple[int, Fraction]) -> tuple[Fraction, ...]:
    v = [Fraction(0)] * n
    for i, x in entries:
        v[i] = Fraction(x)
    return tuple(v)


def simple_roots(t: CartanType) -> list[tuple[Fraction, ...]]:
    """Bourbaki simple roots in an orthonormal basis."""
    n, f = t.rank, t.family
    if f == "A":
        return [_e(n + 1, (i, 1), (i + 1, -1)) for i in range(n)]
    if f in "BCD":
        roots = [_e(n, (i, 1), (i + 1, -1)) for i in range(n - 1)]
        last = {"B": _e(n, (n - 1, 1)), "C": _e(n, (n - 1, 2)), "D": _e(n, (n - 2, 1), (n - 1, 1))}[f]
        return roots + [last]
    if f == "F":
        h = Fraction(1, 2)
        return [_e(4, (1, 1), (2, -1)), _e(4, (2, 1), (3, -1)), _e(4, (3, 1)), _e(4, (0, h), (1, -h), (2, -h), (3, -h))]
    if f == "G":
        return [_e(3, (0, 1), (1, -1)), _e(3, (0, -2), (1, 1), (2, 1))]
    if f == "E":
        # simply laced: build from the Dynkin graph 1-3-4-5-...-n with 2 attached to 4
        raise AssertionError("E handled by the graph construction")
    raise InvalidType(f)


def _e_cartan(n: int) -> list[list[int]]:
    edges = {(1, 3), (3, 4), (2, 4)} | {(k, k + 1) for k in range(4, n)}
    A = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j in edges:
        A[i - 1][j - 1] = A[j - 1][i - 1] = -1
    return A


def cartan_matrix(t: CartanType) -> list[list[int]]:
    """Cartan matrix with ``a_ij = 2<alpha_i,alpha_j>/<alpha_i,alpha_i>``, Bourbaki numbering."""
    if t.family == "E":
        return _e_cartan(t.rank)
    roots = simple_roots(t)
    A = []
    for ai in roots:
        row = []
        for aj in roots:
            x = 2 * exact.dot(ai, aj) / exact.dot(ai, ai)
            assert x.denominator == 1
            row.append(int(x))
        A.append(row)
    return A


def principal_minors_positive(A) -> bool:
    n = len(A)
    for size in range(1, n + 1):
        for idx in itertools.combinations(range(n), size):
            if exact.determinant([[A[i][j] for j in idx] for i in idx]) <= 0:
                return False
    return True


def build_Bc(A, order) -> list[list[int]]:
    """Exchange matrix ``B_c`` for ``c = s_{order[0]} ... s_{order[-1]}`` (0-based indices)."""
    n = len(A)
    pos = {s: p for p, s in enumerate(order)}
    if sorted(pos) != list(range(n)):
        raise ValueError(f"{order} is not a permutation of 0..{n - 1}")
    B = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            B[i][j] = -A[i][j] if pos[i] < pos[j] else A[i][j]
    return B


def apply_reflection(A, i: int, lam) -> tuple[int, ...]:
    """``s_i lam = lam - lam_i alpha_i``."""
    li = lam[i]
    if not li:
        return tuple(lam)
    return tuple(x - li * A[k][i] for k, x in enumerate(lam))


def apply_coxeter(A, order, lam) -> tuple[int, ...]:
    for i in reversed(order):
        lam = apply_reflection(A, i, lam)
    return tuple(lam)


def apply_coxeter_inverse(A, order, lam) -> tuple[int, ...]:
    for i in order:
        lam = apply_reflection(A, i, lam)
    return tuple(lam)


def fundamental(n: int, i: int, sign: int = 1) -> tuple[int, ...]:
    return tuple(sign if k == i else 0 for k in range(n))


@dataclass(frozen=True)
class PiC:
    weights: tuple[tuple[int, ...], ...]
    heights: tuple[int, ...]  # h(i;c) per fundamental weight
    index: dict

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, k: int) -> tuple[int, ...]:
        return self.weights[k]

    def lookup(self, lam) -> int:
        try:
            return self.index[tuple(lam)]
        except KeyError:
            raise WeightNotInPiC(tuple(lam)) from None


def compute_pi_c(A, order) -> PiC:
    n = len(A)
    neg = {fundamental(n, j, -1) for j in range(n)}
    weights: list[tuple[int, ...]] = []
    heights = []
    for i in range(n):
        lam = fundamental(n, i)
        k = 0
        while True:
            weights.append(lam)
            if lam in neg:
                break
            lam = apply_coxeter(A, order, lam)
            k += 1
            if k > ITERATION_CAP:
                raise NonTermination(f"orbit of omega_{i + 1} did not reach a negative fundamental weight")
        heights.append(k)
    index = {}
    for k, w in enumerate(weights):
        if w in index:
            raise AssertionError(f"weight {w} appears twice in Pi(c)")
        index[w] = k
    return PiC(tuple(weights), tuple(heights), index)


@dataclass(frozen=True)
class ExchangeRelationW:
    """``x_lam x_mu = x_{lam+mu} + x_{lam (+)_c mu}``, exponents over ``Pi(c)``."""

    exchanged: tuple[int, int]
    rhs_weights: tuple[tuple[int, ...], tuple[int, ...]]
    term1: tuple[int, ...]
    term2: tuple[int, ...]
    primitive: bool
    primitive_terms: tuple[int, ...] = ()

    @property
    def terms(self):
        return (self.term1, self.term2)

    @property
    def primitive_term(self) -> int | None:
        return self.primitive_terms[0] if self.primitive_terms else None


def matrix_mutation(B, k: int) -> list[list[int]]:
    """Mutation of an extended exchange matrix (rows may exceed columns) at column ``k`` (0-based)."""
    m = len(B)
    n = len(B[0]) if B else 0
    if not 0 <= k < n:
        raise IndexError(f"mutation index {k} out of range 0..{n - 1}")
    out = [[0] * n for _ in range(m)]
    for i in range(m):
        for j in range(n):
            b = B[i][j]
            if i == k or j == k:
                out[i][j] = -b
            else:
                bik, bkj = B[i][k], B[k][j]
                if bik > 0 and bkj > 0:
                    b += bik * bkj
                elif bik < 0 and bkj < 0:
                    b -= bik * bkj
                out[i][j] = b
    return out


def skew_symmetrizer(B) -> list[Fraction]:
    """Positive diagonal ``D`` (as a list) with ``DB`` skew-symmetric."""
    n = len(B)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if B[i][j] == 0 and B[j][i] == 0:
                    continue
                if B[i][j] * B[j][i] >= 0:
                    raise NotSkewSymmetrizable(f"entries ({i},{j}) and ({j},{i}) are not sign-skew")
                dj = d[i] * B[i][j] / -B[j][i]
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise NotSkewSymmetrizable("no consistent symmetrizer")
    for i in range(n):
        if B[i][i] != 0:
            raise NotSkewSymmetrizable("nonzero diagonal entry")
    return d


def cartan_counterpart(B) -> list[list[int]]:
    skew_symmetrizer(B)
    n = len(B)
    return [[2 if i == j else -abs(B[i][j]) for j in range(n)] for i in range(n)]


def is_finite_type(B) -> bool:
    """Whether the Cartan counterpart of ``B`` is positive definite."""
    return principal_minors_positive(cartan_counterpart(B))


class RootModel:
    """Cluster variables, compatibility and exchange relations from ``Pi(c)``."""

    kind = "root"
    n_frozen = 0

    def __init__(self, t: CartanType, order=None):
        self.type = t
        self.A = cartan_matrix(t)
        n = t.rank
        self.order = tuple(range(n)) if order is None else tuple(order)
        if sorted(self.order) != list(range(n)):
            raise ValueError(f"{order} is not a permutation of 0..{n - 1}")
        self.pi = compute_pi_c(self.A, self.order)
        self._Ainv = exact.inverse(self.A)
        fund = {fundamental(n, i): i for i in range(n)}
        self._fund = fund
        self._negfund = {fundamental(n, i, -1): i for i in range(n)}

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def name(self) -> str:
        return self.type.name

    @property
    def n_cluster(self) -> int:
        return len(self.pi)

    @property
    def labels(self) -> list[str]:
        return [str(list(w)) for w in self.pi.weights]

    def coxeter(self, lam):
        return apply_coxeter(self.A, self.order, lam)

    def coxeter_inverse(self, lam):
        return apply_coxeter_inverse(self.A, self.order, lam)

    def simple_root_coords(self, lam) -> tuple[Fraction, ...]:
        return exact.matvec(self._Ainv, lam)

    # -- tau_c on Pi(c) -------------------------------------------------

    def tau(self, lam) -> tuple[int, ...]:
        lam = tuple(lam)
        self.pi.lookup(lam)
        if lam in self._negfund:
            return fundamental(self.rank, self._negfund[lam])
        return self.coxeter(lam)

    def tau_inverse(self, lam) -> tuple[int, ...]:
        lam = tuple(lam)
        self.pi.lookup(lam)
        if lam in self._fund:
            return fundamental(self.rank, self._fund[lam], -1)
        return self.coxeter_inverse(lam)

    @cached_property
    def tau_perm(self) -> tuple[int, ...]:
        """``tau_c`` as a permutation of indices into ``Pi(c)``."""
        return tuple(self.pi.lookup(self.tau(w)) for w in self.pi.weights)

    @cached_property
    def tau_inv_perm(self) -> tuple[int, ...]:
        inv = [0] * len(self.pi)
        for a, b in enumerate(self.tau_perm):
            inv[b] = a
        return tuple(inv)

    @cached_property
    def tau_period(self) -> int:
        perm = self.tau_perm
        k, cur = 1, list(perm)
        while cur != list(range(len(perm))):
            cur = [perm[c] for c in cur]
            k += 1
        return k

    def tau_power(self, idx: int, k: int) -> int:
        perm = self.tau_perm if k >= 0 else self.tau_inv_perm
        for _ in range(abs(k)):
            idx = perm[idx]
        return idx

    def T(self, idx: int) -> int:
        return self.tau_perm[idx]

    # -- compatibility ----------------------------------------------------

    def _initial_degree(self, i: int, mu) -> int:
        if tuple(mu) in self._fund:
            return 0
        v = exact.sub(self.coxeter_inverse(mu), mu)
        x = self.simple_root_coords(v)[i]
        assert x.denominator == 1
        return max(0, int(x))

    def c_compat(self, lam, mu) -> int:
        a, b = self.pi.lookup(lam), self.pi.lookup(mu)
        return self.compat[a][b]

    @cached_property
    def compat(self) -> list[list[int]]:
        size = len(self.pi)
        # steps until each weight becomes fundamental
        to_fund = []
        for a in range(size):
            k, cur = 0, a
            while self.pi[cur] not in self._fund:
                cur = self.tau_perm[cur]
                k += 1
            to_fund.append((k, self._fund[self.pi[cur]]))
        init = [[self._initial_degree(i, w) for w in self.pi.weights] for i in range(self.rank)]
        C = [[0] * size for _ in range(size)]
        for a in range(size):
            k, i = to_fund[a]
            for b in range(size):
                C[a][b] = init[i][self.tau_power(b, k)]
        return C

    @cached_property
    def clusters(self) -> list[frozenset[int]]:
        G = nx.Graph()
        G.add_nodes_from(range(len(self.pi)))
        C = self.compat
        G.add_edges_from(
            (a, b) for a, b in itertools.combinations(range(len(self.pi)), 2) if C[a][b] == 0 and C[b][a] == 0
        )
        return sorted((frozenset(c) for c in nx.find_cliques(G)), key=sorted)

    @cached_property
    def _cluster_inverses(self):
        # exact integer inverses of the weight matrices of all clusters (g-vectors form a Z-basis)
        mats, members = [], []
        for cl in self.clusters:
            idx = sorted(cl)
            M = [[self.pi[k][r] for k in idx] for r in range(self.rank)]
            inv = exact.inverse(M)
            if any(x.denominator != 1 for row in inv for x in row):
                raise AssertionError(f"cluster {idx} is not a lattice basis")
            mats.append([[int(x) for x in row] for row in inv])
            members.append(idx)
        return np.array(mats, dtype=np.int64), members

    def decompose(self, lam) -> dict[int, int]:
        """Cluster-monomial decomposition of a weight: ``{index in Pi(c): exponent}``."""
        lam = tuple(lam)
        if not any(lam):
            return {}
        invs, members = self._cluster_inverses
        coeffs = invs @ np.array(lam, dtype=np.int64)
        ok = np.nonzero((coeffs >= 0).all(axis=1))[0]
        if len(ok) == 0:
            raise AssertionError(f"weight {lam} lies in no cluster cone")
        row = coeffs[ok[0]]
        return {members[ok[0]][j]: int(x) for j, x in enumerate(row) if x}

    def tau_pl(self, lam, k: int = 1) -> tuple[int, ...]:
        """Piecewise-linear extension of ``tau_c^k`` to the whole weight lattice."""
        parts = self.decompose(lam)
        out = [0] * self.rank
        for idx, e in parts.items():
            w = self.pi[self.tau_power(idx, k)]
            for r in range(self.rank):
                out[r] += e * w[r]
        return tuple(out)

    # -- exchange relations ---------------------------------------------------

    def exchangeable_pairs(self) -> list[tuple[int, int]]:
        C = self.compat
        size = len(self.pi)
        return [(a, b) for a, b in itertools.combinations(range(size), 2) if C[a][b] == 1 and C[b][a] == 1]

    def rhs_weights(self, a: int, b: int) -> list[tuple[int, ...]]:
        """Distinct elements of ``{tau^-k(tau^k lam + tau^k mu)}``, with ``lam + mu`` first."""
        found: list[tuple[int, ...]] = []
        for k in range(self.tau_period):
            s = exact.add(self.pi[self.tau_power(a, k)], self.pi[self.tau_power(b, k)])
            w = self.tau_pl(s, -k)
            if w not in found:
                found.append(w)
        return found

    def _decompose_over_cliques(self, a: int, b: int, targets) -> list[dict[int, int]]:
        C = self.compat
        common = [
            v
            for v in range(len(self.pi))
            if v not in (a, b) and C[v][a] == 0 and C[a][v] == 0 and C[v][b] == 0 and C[b][v] == 0
        ]
        G = nx.Graph()
        G.add_nodes_from(common)
        G.add_edges_from((u, v) for u, v in itertools.combinations(common, 2) if C[u][v] == 0 and C[v][u] == 0)
        cliques = sorted((sorted(c) for c in nx.find_cliques(G)), key=lambda c: (-len(c), c)) if common else [[]]
        best = len(cliques[0])
        for S in (c for c in cliques if len(c) == best):
            basis = S + [a]
            cols = [[self.pi[k][r] for k in basis] for r in range(self.rank)]
            try:
                sols = [exact.solve_nonneg_int(cols, t, unique=True) for t in targets]
            except exact.NoSolution:
                continue
            except exact.AmbiguousSolution as err:
                raise CliqueAmbiguity(str(err)) from err
            return [{basis[j]: x for j, x in enumerate(sol) if x} for sol in sols]
        raise CliqueAmbiguity(f"no maximum clique supports the exchange of {self.pi[a]} and {self.pi[b]}")

    def exchange_relation(self, a: int, b: int) -> ExchangeRelationW:
        C = self.compat
        if not (C[a][b] == 1 and C[b][a] == 1):
            raise NotExchangeable(f"{self.pi[a]} and {self.pi[b]} are not exchangeable")
        ws = self.rhs_weights(a, b)
        if len(ws) == 1 and self.rank == 1:
            # A1 without frozen variables: x x' = 1 + 1
            ws = ws * 2
        if len(ws) != 2:
            raise AssertionError(f"expected two right hand side weights, got {ws}")
        parts = self._decompose_over_cliques(a, b, ws)
        size = len(self.pi)
        vecs = []
        for p in parts:
            v = [0] * size
            for k, e in p.items():
                v[k] = e
            vecs.append(tuple(v))
        prim = self.tau_perm[a] == b or self.tau_perm[b] == a
        prim_terms: tuple[int, ...] = ()
        if prim:
            zero = [k for k in range(2) if not any(ws[k])]
            if not zero:
                raise AssertionError(f"primitive exchange of {self.pi[a]}, {self.pi[b]} without a trivial term")
            prim_terms = tuple(sorted({1 - z for z in zero}))
        return ExchangeRelationW(
            exchanged=(a, b),
            rhs_weights=(ws[0], ws[1]),
            term1=vecs[0],
            term2=vecs[1],
            primitive=prim,
            primitive_terms=prim_terms,
        )

    @cached_property
    def relations(self) -> list[ExchangeRelationW]:
        return [self.exchange_relation(a, b) for a, b in self.exchangeable_pairs()]
