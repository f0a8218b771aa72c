"""Polygon models for cluster algebras of types A, B, C and D.

Cluster variables are (centrally symmetric pairs of) diagonals of a regular
``N``-gon, frozen variables are (pairs of) its edges.  Type D additionally
has every diameter in two colors, ``blue`` and ``red``.  Vertices are
``1..N`` and all vertex arithmetic is modulo ``N``.

Exchange relations are generated from exchangeable pairs and then matched to
one of the relation templates according to the shape of the exchange
quadrilateral(s):

=====  ===========================================================
type   configuration
=====  ===========================================================
0      two crossing diagonals (type A)
1      two crossing pairs whose quadrilaterals are disjoint
2      two crossing pairs whose quadrilaterals share a diameter
3      two crossing diameters
4      a colored diameter and a crossing pair (type D only)
=====  ===========================================================
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property

import networkx as nx

BLUE = "blue"
RED = "red"


class InvalidRank(ValueError):
    pass


@dataclass(frozen=True)
class ModelSpec:
    family: str
    rank: int
    frozen_mode: str = "special"

    def __post_init__(self):
        minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
        if self.family not in minimum:
            raise InvalidRank(f"no polygon model for family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < minimum[self.family]:
            raise InvalidRank(f"{self.family}_{self.rank}: rank must be >= {minimum[self.family]}")
        if self.frozen_mode not in ("special", "none"):
            raise ValueError(f"frozen_mode must be 'special' or 'none', not {self.frozen_mode!r}")

    @property
    def N(self) -> int:
        n = self.rank
        return {"A": n + 3, "B": 2 * n + 2, "C": 2 * n + 2, "D": 2 * n}[self.family]

    @property
    def symmetric(self) -> bool:
        return self.family != "A"

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"

    def with_frozen(self, mode: str) -> "ModelSpec":
        return ModelSpec(self.family, self.rank, mode)


@dataclass(frozen=True, order=True)
class Diag:
    """A segment ``[i, j]`` of the polygon with ``i < j``; ``color`` only on type D diameters."""

    i: int
    j: int
    color: str | None = None

    def __str__(self) -> str:
        s = f"[{self.i},{self.j}]"
        if self.color == RED:
            return "^" + s
        return s

    @property
    def ends(self) -> tuple[int, int]:
        return (self.i, self.j)


def vmod(v: int, N: int) -> int:
    return (v - 1) % N + 1


def seg(i: int, j: int, N: int, color: str | None = None) -> Diag:
    i, j = vmod(i, N), vmod(j, N)
    if i == j:
        raise ValueError("degenerate segment")
    if i > j:
        i, j = j, i
    return Diag(i, j, color)


def length(d: Diag, N: int) -> int:
    t = (d.j - d.i) % N
    return min(t, N - t)


def is_edge(d: Diag, N: int) -> bool:
    return length(d, N) == 1


def is_diameter(d: Diag, N: int) -> bool:
    return N % 2 == 0 and length(d, N) == N // 2


def antipode(i: int, N: int) -> int:
    return vmod(i + N // 2, N)


def bar(d: Diag, N: int) -> Diag:
    """Image under the 180 degree rotation; colors are kept."""
    return seg(d.i + N // 2, d.j + N // 2, N, d.color)


def rotate(d: Diag, N: int, steps: int = 1) -> Diag:
    """Rotation ``[i,j] -> [i+1,j+1]``; each step swaps the color of a diameter."""
    color = d.color
    if color is not None and steps % 2:
        color = RED if color == BLUE else BLUE
    return seg(d.i + steps, d.j + steps, N, color)


def minor_arc(d: Diag, N: int) -> tuple[int, int]:
    """``(delta_minus, delta_plus)``: first and last vertex of the minor arc, counterclockwise.

    Undefined for diameters.
    """
    t = (d.j - d.i) % N
    if 2 * t == N:
        raise ValueError(f"{d} is a diameter; its minor arc is not defined")
    return (d.i, d.j) if 2 * t < N else (d.j, d.i)


def arc_vertices(start: int, stop: int, N: int) -> list[int]:
    """Vertices from ``start`` to ``stop`` counterclockwise, inclusive."""
    out = [start]
    while out[-1] != stop:
        out.append(vmod(out[-1] + 1, N))
    return out


def _strictly_between(x: int, a: int, b: int, N: int) -> bool:
    # x on the open counterclockwise arc from a to b
    return 0 < (x - a) % N < (b - a) % N


def crossing(l: Diag, k: Diag, N: int) -> int:
    """1 if the two segments have a common interior point, else 0.

    Colored diameters follow the type D convention: they cross only when
    they have different colors and different endpoints.
    """
    if l == k:
        return 0
    if l.color is not None and k.color is not None:
        return int(l.color != k.color and set(l.ends) != set(k.ends))
    if len({l.i, l.j, k.i, k.j}) < 4:
        return 0
    return int(_strictly_between(k.i, l.i, l.j, N) != _strictly_between(k.j, l.i, l.j, N))


@dataclass(frozen=True)
class VarOrbit:
    rep: Diag
    members: tuple[Diag, ...]
    role: str  # "cluster" or "frozen"

    @property
    def label(self) -> str:
        return str(self.rep)


class VariableTable:
    """Ordered cluster and frozen variables; fixes the coordinates of ``Z^(V u W)``."""

    def __init__(self, spec: ModelSpec, orbits: list[VarOrbit]):
        self.spec = spec
        self.vars = orbits
        self.index: dict[Diag, int] = {}
        for idx, o in enumerate(orbits):
            for m in o.members:
                self.index[m] = idx
        self.n_cluster = sum(o.role == "cluster" for o in orbits)
        self.n_frozen = len(orbits) - self.n_cluster

    def __len__(self) -> int:
        return len(self.vars)

    def __getitem__(self, idx: int) -> VarOrbit:
        return self.vars[idx]

    @property
    def labels(self) -> list[str]:
        return [o.label for o in self.vars]

    def lookup(self, d: Diag) -> int | None:
        return self.index.get(d)

    def index_of(self, i: int, j: int, color: str | None = None) -> int:
        return self.index[seg(i, j, self.spec.N, color)]

    def is_cluster(self, idx: int) -> bool:
        return self.vars[idx].role == "cluster"


def _orbit(d: Diag, spec: ModelSpec) -> tuple[Diag, ...]:
    if not spec.symmetric:
        return (d,)
    members = {d, bar(d, spec.N)}
    return tuple(sorted(members))


def list_variables(spec: ModelSpec) -> VariableTable:
    """All cluster variables, then (for ``frozen_mode='special'``) the frozen ones.

    Cluster variables are ordered by (length, smallest endpoint, blue before
    red); frozen edges (pairs) in cyclic order starting at ``[1,2]``.
    """
    N = spec.N
    cluster = []
    seen = set()
    for i, j in itertools.combinations(range(1, N + 1), 2):
        d = Diag(i, j)
        if is_edge(d, N) or d in seen:
            continue
        if spec.family == "D" and is_diameter(d, N):
            for color in (BLUE, RED):
                cd = Diag(i, j, color)
                cluster.append(VarOrbit(cd, (cd,), "cluster"))
            seen.add(d)
            continue
        members = _orbit(d, spec)
        seen.update(members)
        cluster.append(VarOrbit(members[0], members, "cluster"))
    color_rank = {None: 0, BLUE: 0, RED: 1}
    cluster.sort(key=lambda o: (length(o.rep, N), o.rep.i, o.rep.j, color_rank[o.rep.color]))
    frozen = []
    if spec.frozen_mode == "special":
        count = N if spec.family == "A" else N // 2
        for i in range(1, count + 1):
            d = seg(i, i + 1, N)
            frozen.append(VarOrbit(d, _orbit(d, spec), "frozen"))
    return VariableTable(spec, cluster + frozen)


def _compat_orbits(spec: ModelSpec, X: VarOrbit, Y: VarOrbit) -> int:
    N = spec.N
    if X.role == "frozen" or Y.role == "frozen":
        return 0
    if spec.family == "A":
        return crossing(X.rep, Y.rep, N)
    if spec.family == "B":
        return sum(crossing(X.rep, k, N) for k in Y.members)
    if spec.family == "C":
        return sum(crossing(Y.rep, l, N) for l in X.members)
    # type D
    if X.rep.color is not None and Y.rep.color is not None:
        return crossing(X.rep, Y.rep, N)
    total = sum(crossing(l, k, N) for l in X.members for k in Y.members)
    if total % 2:
        raise AssertionError(f"odd crossing count between {X.rep} and {Y.rep}")
    return total // 2


def compatibility(spec: ModelSpec, a: int, b: int, table: VariableTable | None = None) -> int:
    """Compatibility degree ``(x_a || x_b)``; zero when either variable is frozen."""
    table = table or list_variables(spec)
    return _compat_orbits(spec, table[a], table[b])


def compatibility_matrix(spec: ModelSpec, table: VariableTable | None = None) -> list[list[int]]:
    table = table or list_variables(spec)
    return [[_compat_orbits(spec, X, Y) for Y in table.vars] for X in table.vars]


def enumerate_clusters(spec: ModelSpec, table: VariableTable | None = None) -> list[frozenset[int]]:
    """All maximal sets of pairwise compatible cluster variables."""
    table = table or list_variables(spec)
    C = compatibility_matrix(spec, table)
    idx = range(table.n_cluster)
    G = nx.Graph()
    G.add_nodes_from(idx)
    G.add_edges_from((a, b) for a, b in itertools.combinations(idx, 2) if C[a][b] == 0 and C[b][a] == 0)
    return sorted((frozenset(c) for c in nx.find_cliques(G)), key=sorted)


@dataclass(frozen=True)
class ExchangeRelationP:
    """``x_a x_b = y_1 + y_2`` with ``y_i`` given by exponent vectors.

    ``term_segments`` holds the quadrilateral sides behind each term
    (including the 180 degree images in types B, C, D).
    """

    exchanged: tuple[int, int]
    term1: tuple[int, ...]
    term2: tuple[int, ...]
    quad_type: int
    primitive: bool
    primitive_terms: tuple[int, ...] = ()
    term_segments: tuple[tuple[Diag, ...], tuple[Diag, ...]] = field(default=((), ()), compare=False)

    @property
    def terms(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return (self.term1, self.term2)

    @property
    def primitive_term(self) -> int | None:
        """Index (0 or 1) of the primitive term; ``None`` if not primitive.

        When both terms are primitive (type A1) this is 0.
        """
        return self.primitive_terms[0] if self.primitive_terms else None


def _term_sides(v: list[int], N: int) -> tuple[tuple[Diag, Diag], tuple[Diag, Diag]]:
    v1, v2, v3, v4 = sorted(v)
    return (seg(v1, v2, N), seg(v3, v4, N)), (seg(v2, v3, N), seg(v4, v1, N))


class _RelationBuilder:
    def __init__(self, spec: ModelSpec, table: VariableTable):
        self.spec = spec
        self.table = table
        self.N = spec.N
        self.r = {"B": 1, "C": 2}.get(spec.family, 1)
        full = table if spec.frozen_mode == "special" else list_variables(spec.with_frozen("special"))
        self.full = full

    def vector(self, weighted: dict[Diag, int]) -> tuple[int, ...]:
        out = [0] * len(self.table)
        for d, mult in weighted.items():
            idx = self.table.lookup(d)
            if idx is None:
                # frozen edge in a model without frozen variables
                if self.full.lookup(d) is None or self.full.is_cluster(self.full.lookup(d)):
                    raise KeyError(f"no variable for segment {d}")
                continue
            out[idx] += mult
        return tuple(out)

    def frozen_only(self, sides) -> bool:
        return all(is_edge(s, self.N) for s in sides)

    def images(self, sides) -> tuple[Diag, ...]:
        if not self.spec.symmetric:
            return tuple(sides)
        out = []
        for s in sides:
            for m in (s, bar(s, self.N)):
                if m not in out:
                    out.append(m)
        return tuple(out)

    def build(self, a: int, b: int) -> ExchangeRelationP:
        X, Y = self.table[a], self.table[b]
        N = self.N
        fam = self.spec.family
        if fam == "A":
            l, k = X.rep, Y.rep
            t1, t2 = _term_sides([l.i, l.j, k.i, k.j], N)
            return self._finish(a, b, 0, t1, t2, [{s: 1 for s in t1}, {s: 1 for s in t2}])
        dX, dY = is_diameter(X.rep, N), is_diameter(Y.rep, N)
        if dX and dY:
            l, k = X.rep, Y.rep
            t1, t2 = _term_sides([l.i, l.j, k.i, k.j], N)
            w1 = {t1[0]: self.r}
            w2 = {t2[0]: self.r}
            return self._finish(a, b, 3, t1, t2, [w1, w2])
        if dX != dY:
            if fam != "D":
                raise AssertionError(f"{X.rep} and {Y.rep} cannot be exchangeable in type {fam}")
            diam, pair = (X, Y) if dX else (Y, X)
            return self._type4(a, b, diam.rep, pair)
        l = X.rep
        crossing_members = [k for k in Y.members if crossing(l, k, N)]
        if len(crossing_members) != 1:
            raise AssertionError(f"{X.rep}, {Y.rep}: expected exactly one crossing representative")
        k = crossing_members[0]
        t1, t2 = _term_sides([l.i, l.j, k.i, k.j], N)
        weights = []
        qtype = 1
        for sides in (t1, t2):
            w: dict[Diag, int] = {}
            for s in sides:
                if is_diameter(s, N):
                    qtype = 2
                    if fam == "D":
                        w[Diag(s.i, s.j, BLUE)] = 1
                        w[Diag(s.i, s.j, RED)] = 1
                    else:
                        w[s] = 2 // self.r
                else:
                    w[s] = w.get(s, 0) + 1
            weights.append(w)
        return self._finish(a, b, qtype, t1, t2, weights)

    def _type4(self, a: int, b: int, diam: Diag, pair: VarOrbit) -> ExchangeRelationP:
        N = self.N
        p = diam.i
        inside = []
        for k in pair.members:
            for e in k.ends:
                if _strictly_between(e, p, antipode(p, N), N):
                    inside.append(e)
        if len(inside) != 2:
            raise AssertionError(f"{pair.rep} does not cross {diam}")
        bb, cc = sorted(inside, key=lambda e: (e - p) % N)
        col = diam.color
        t1 = (seg(p, bb, N), Diag(*seg(cc, antipode(cc, N), N).ends, col))
        t2 = (seg(p, antipode(cc, N), N), Diag(*seg(bb, antipode(bb, N), N).ends, col))
        weights = [{t1[0]: 1, t1[1]: 1}, {t2[0]: 1, t2[1]: 1}]
        rel = self._finish(a, b, 4, t1, t2, weights)
        return rel

    def _finish(self, a, b, qtype, t1, t2, weights) -> ExchangeRelationP:
        v1, v2 = self.vector(weights[0]), self.vector(weights[1])
        prim = []
        if qtype != 4:
            # a term made of polygon edges leaves the other term primitive
            if self.frozen_only(t1):
                prim.append(1)
            if self.frozen_only(t2):
                prim.append(0)
        prim.sort()
        return ExchangeRelationP(
            exchanged=(a, b),
            term1=v1,
            term2=v2,
            quad_type=qtype,
            primitive=bool(prim),
            primitive_terms=tuple(prim),
            term_segments=(self.images(t1), self.images(t2)),
        )


def exchangeable_pairs(spec: ModelSpec, table: VariableTable | None = None) -> list[tuple[int, int]]:
    table = table or list_variables(spec)
    C = compatibility_matrix(spec, table)
    return [
        (a, b)
        for a, b in itertools.combinations(range(table.n_cluster), 2)
        if C[a][b] == 1 and C[b][a] == 1
    ]


def exchange_relations(spec: ModelSpec, table: VariableTable | None = None) -> list[ExchangeRelationP]:
    """One relation per exchangeable pair, in pair order."""
    table = table or list_variables(spec)
    builder = _RelationBuilder(spec, table)
    return [builder.build(a, b) for a, b in exchangeable_pairs(spec, table)]


def primitive_relations(spec: ModelSpec, table: VariableTable | None = None) -> list[ExchangeRelationP]:
    return [rel for rel in exchange_relations(spec, table) if rel.primitive]


def rotation_T(spec: ModelSpec, idx: int, table: VariableTable | None = None) -> int:
    """Index of the cluster variable obtained by rotating one step counterclockwise."""
    table = table or list_variables(spec)
    o = table[idx]
    if o.role != "cluster":
        raise ValueError("rotation_T is defined on cluster variables")
    return table.lookup(rotate(o.rep, spec.N))


def flip_partner(spec: ModelSpec, cluster: frozenset[int], idx: int, table: VariableTable | None = None) -> int:
    """The unique other cluster variable completing ``cluster - {idx}``."""
    table = table or list_variables(spec)
    C = compatibility_matrix(spec, table)
    rest = [c for c in cluster if c != idx]
    cands = [
        y
        for y in range(table.n_cluster)
        if y not in cluster and all(C[y][c] == 0 and C[c][y] == 0 for c in rest)
    ]
    if len(cands) != 1:
        raise AssertionError(f"expected one flip partner, found {cands}")
    return cands[0]


def extended_exchange_matrix(spec: ModelSpec, cluster: frozenset[int], table: VariableTable | None = None) -> list[list[int]]:
    """Extended exchange matrix of the seed with the given cluster, up to column signs.

    Rows are the cluster variables (sorted) followed by the frozen
    variables; column ``k`` is the difference of the two exponent vectors in
    the relation that mutates the ``k``-th cluster variable.
    """
    table = table or list_variables(spec)
    builder = _RelationBuilder(spec, table)
    order = sorted(cluster)
    rows = order + list(range(table.n_cluster, len(table)))
    cols = []
    for x in order:
        y = flip_partner(spec, cluster, x, table)
        rel = builder.build(min(x, y), max(x, y))
        diff = [p - q for p, q in zip(rel.term1, rel.term2)]
        cols.append([diff[r] for r in rows])
    return [list(row) for row in zip(*cols)]


class PolygonModel:
    """Bundle of the combinatorial data consumed by the Gröbner cone code."""

    kind = "polygon"

    def __init__(self, spec: ModelSpec):
        self.spec = spec
        self.table = list_variables(spec)

    @property
    def name(self) -> str:
        return self.spec.name

    @property
    def n_cluster(self) -> int:
        return self.table.n_cluster

    @property
    def n_frozen(self) -> int:
        return self.table.n_frozen

    @property
    def labels(self) -> list[str]:
        return self.table.labels

    @cached_property
    def compat(self) -> list[list[int]]:
        return compatibility_matrix(self.spec, self.table)

    @cached_property
    def relations(self) -> list[ExchangeRelationP]:
        return exchange_relations(self.spec, self.table)

    @cached_property
    def clusters(self) -> list[frozenset[int]]:
        return enumerate_clusters(self.spec, self.table)

    def T(self, idx: int) -> int:
        return rotation_T(self.spec, idx, self.table)
