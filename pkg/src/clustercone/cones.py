"""Rational polyhedral cones with both generator and inequality descriptions.

A cone is ``cone(rays) + span(lineality)`` or, equivalently,
``{x : h.x >= 0 for h in inequalities, e.x = 0 for e in equations}``.
Whichever description is missing is produced by the double description
method, run on integer vectors with exact arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .exact import (
    DimensionMismatch,
    dot,
    int_primitive,
    primitive,
    rank,
    rref,
    sign_normalize,
)


def _int_vec(v: Sequence) -> tuple[int, ...]:
    return primitive(v)


def _combine(a: int, u: Sequence[int], b: int, v: Sequence[int]) -> tuple[int, ...]:
    return int_primitive([a * x + b * y for x, y in zip(u, v)])


def double_description(
    dim: int,
    inequalities: Iterable[Sequence],
    equations: Iterable[Sequence] = (),
) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
    """Minimal generators ``(rays, lineality)`` of ``{x : Hx >= 0, Ex = 0}``.

    Equations are processed first, then inequalities in lexicographic order
    (after scaling to primitive integer vectors).  Two rays are combined only
    when they are adjacent, which is decided combinatorially from their sets
    of tight inequalities.  Returned rays are extreme modulo the returned
    lineality, but are not canonicalized.
    """
    eqs = [_int_vec(e) for e in equations]
    ineqs = sorted({_int_vec(h) for h in inequalities})
    for v in eqs + ineqs:
        if len(v) != dim:
            raise DimensionMismatch(f"constraint of length {len(v)} in dimension {dim}")
    lin: list[tuple[int, ...]] = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    rays: list[tuple[int, ...]] = []
    tight: list[int] = []
    processed = 0  # bitmask of processed inequalities
    absorbed_eqs = 0

    def absorb(h, keep_positive: bool, bit: int) -> bool:
        # use a lineality direction not orthogonal to h, if there is one
        for idx, l0 in enumerate(lin):
            s = dot(h, l0)
            if s:
                break
        else:
            return False
        if s < 0:
            l0 = tuple(-x for x in l0)
            s = -s
        del lin[idx]
        for i, l in enumerate(lin):
            t = dot(h, l)
            if t:
                lin[i] = _combine(s, l, -t, l0)
        for i, r in enumerate(rays):
            t = dot(h, r)
            if t:
                rays[i] = _combine(s, r, -t, l0)
            tight[i] |= bit
        if keep_positive:
            rays.append(int_primitive(l0))
            tight.append(processed)
        return True

    def cut(h, keep_positive: bool, bit: int) -> None:
        vals = [dot(h, r) for r in rays]
        pos = [i for i, t in enumerate(vals) if t > 0]
        neg = [i for i, t in enumerate(vals) if t < 0]
        zero = [i for i, t in enumerate(vals) if t == 0]
        need = dim - absorbed_eqs - len(lin) - 2
        new_rays = []
        new_tight = []
        if pos and neg:
            for p in pos:
                tp = tight[p]
                for q in neg:
                    common = tp & tight[q]
                    if bin(common).count("1") < need:
                        continue
                    adjacent = True
                    for k in range(len(rays)):
                        if k != p and k != q and tight[k] & common == common:
                            adjacent = False
                            break
                    if adjacent:
                        new_rays.append(_combine(vals[p], rays[q], -vals[q], rays[p]))
                        new_tight.append(common | bit)
        kept = zero + (pos if keep_positive else [])
        kept.sort()
        rays[:] = [rays[i] for i in kept] + new_rays
        tight[:] = [tight[i] | (bit if vals[i] == 0 else 0) for i in kept] + new_tight

    for e in eqs:
        if not any(e):
            continue
        if absorb(e, keep_positive=False, bit=0):
            absorbed_eqs += 1
        else:
            cut(e, keep_positive=False, bit=0)
    for k, h in enumerate(ineqs):
        if not any(h):
            continue
        bit = 1 << k
        if not absorb(h, keep_positive=True, bit=bit):
            cut(h, keep_positive=True, bit=bit)
        processed |= bit
    return rays, lin


def canonical_lineality(lin: Sequence[Sequence]) -> tuple[list[tuple[int, ...]], list[int], list[list[Fraction]]]:
    """Primitive RREF basis of a subspace; also returns pivots and the RREF."""
    if not lin:
        return [], [], []
    R, pivots = rref(lin)
    basis = [sign_normalize(primitive(row)) for row in R]
    return basis, pivots, R


def reduce_mod(v: Sequence, R: Sequence[Sequence[Fraction]], pivots: Sequence[int]) -> tuple[Fraction, ...]:
    """Representative of ``v`` modulo span(R) with zeros at the pivot columns."""
    out = [Fraction(x) for x in v]
    for row, pc in zip(R, pivots):
        c = out[pc]
        if c:
            out = [a - c * b for a, b in zip(out, row)]
    return tuple(out)


class Cone:
    """An exact polyhedral cone in ``Q^dim``.

    Build with :meth:`from_generators` or :meth:`from_inequalities`.  The
    other description is computed on first use and cached; the instance is
    otherwise immutable.
    """

    def __init__(self, dim: int, *, rays=None, lineality=None, inequalities=None, equations=None):
        self.dim = dim
        self._gens = None
        self._hrep = None
        if rays is not None or lineality is not None:
            self._gens = (
                [self._check(v) for v in (rays or ())],
                [self._check(v) for v in (lineality or ())],
            )
        if inequalities is not None or equations is not None:
            self._hrep = (
                [self._check(v) for v in (inequalities or ())],
                [self._check(v) for v in (equations or ())],
            )
        if self._gens is None and self._hrep is None:
            self._gens = ([], [])
        self._min_v = None
        self._min_h = None
        self._canon = None

    def _check(self, v) -> tuple[int, ...]:
        if len(v) != self.dim:
            raise DimensionMismatch(f"vector of length {len(v)} in dimension {self.dim}")
        return _int_vec(v)

    @classmethod
    def from_generators(cls, dim: int, gens: Iterable[Sequence], lin: Iterable[Sequence] = ()) -> "Cone":
        return cls(dim, rays=list(gens), lineality=list(lin))

    @classmethod
    def from_inequalities(cls, dim: int, ineqs: Iterable[Sequence], eqs: Iterable[Sequence] = ()) -> "Cone":
        return cls(dim, inequalities=list(ineqs), equations=list(eqs))

    # -- representations -------------------------------------------------

    def _minimal_v(self):
        if self._min_v is None:
            ineqs, eqs = self.hrep()
            self._min_v = double_description(self.dim, ineqs, eqs)
        return self._min_v

    def hrep(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """Some inequality description (possibly redundant)."""
        if self._hrep is None:
            rays, lin = self._gens
            self._hrep = double_description(self.dim, rays, lin)
        return self._hrep

    def facets(self) -> tuple[list[tuple[int, ...]], list[tuple[int, ...]]]:
        """Irredundant ``(facet normals, equations)`` with canonical ordering."""
        if self._min_h is None:
            rays, lin = self._minimal_v()
            normals, eqs = double_description(self.dim, rays, lin)
            eq_basis, pivots, R = canonical_lineality(eqs)
            normals = sorted({primitive(reduce_mod(h, R, pivots)) for h in normals})
            self._min_h = (normals, eq_basis)
        return self._min_h

    def _canonical(self):
        if self._canon is None:
            rays, lin = self._minimal_v()
            basis, pivots, R = canonical_lineality(lin)
            canon_rays = sorted({primitive(reduce_mod(r, R, pivots)) for r in rays})
            self._canon = (canon_rays, basis, pivots, R)
        return self._canon

    @property
    def rays(self) -> list[tuple[int, ...]]:
        """Extreme rays modulo lineality, reduced against the lineality RREF."""
        return list(self._canonical()[0])

    @property
    def lineality(self) -> list[tuple[int, ...]]:
        return list(self._canonical()[1])

    @property
    def inequalities(self) -> list[tuple[int, ...]]:
        return list(self.facets()[0])

    @property
    def equations(self) -> list[tuple[int, ...]]:
        return list(self.facets()[1])

    def canonical_mod_lineality(self, v: Sequence) -> tuple[int, ...]:
        """Primitive representative of ``v`` modulo this cone's lineality."""
        _, _, pivots, R = self._canonical()
        return primitive(reduce_mod(v, R, pivots))

    # -- predicates --------------------------------------------------------

    def contains(self, x: Sequence) -> bool:
        if len(x) != self.dim:
            raise DimensionMismatch(f"point of length {len(x)} in dimension {self.dim}")
        ineqs, eqs = self.hrep()
        return all(dot(e, x) == 0 for e in eqs) and all(dot(h, x) >= 0 for h in ineqs)

    def contains_relative_interior(self, x: Sequence) -> bool:
        if not self.contains(x):
            return False
        normals, _ = self.facets()
        return all(dot(h, x) > 0 for h in normals)

    def is_pointed(self) -> bool:
        return not self.lineality

    def linear_dim(self) -> int:
        """Dimension of the linear span of the cone."""
        rays, lin = self._minimal_v()
        return rank(list(rays) + list(lin)) if rays or lin else 0

    def is_simplicial(self) -> bool:
        """Whether the rays are linearly independent modulo lineality."""
        rays, lin = self._minimal_v()
        if not rays:
            return True
        return rank(list(rays) + list(lin)) == len(rays) + len(lin)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cone):
            return NotImplemented
        return cones_equal(self, other)

    def __hash__(self):
        rays, lin, _, _ = self._canonical()
        return hash((self.dim, tuple(rays), tuple(lin)))

    def __repr__(self) -> str:
        return f"Cone(dim={self.dim}, lineality={len(self.lineality)}, rays={len(self.rays)})"

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "lineality": [list(v) for v in self.lineality],
            "rays": [list(v) for v in self.rays],
            "inequalities": [list(v) for v in self.inequalities],
            "equations": [list(v) for v in self.equations],
        }


def cone_from_generators(dim: int, gens: Iterable[Sequence], lin: Iterable[Sequence] = ()) -> Cone:
    return Cone.from_generators(dim, gens, lin)


def dual(C: Cone) -> Cone:
    """``{w : w.g >= 0 for every g in C}``."""
    out = Cone.__new__(Cone)
    out.dim = C.dim
    out._min_v = out._min_h = out._canon = None
    if C._gens is not None:
        rays, lin = C._gens
    else:
        rays, lin = C._minimal_v()
    out._hrep = (list(rays), list(lin))
    out._gens = None
    if C._hrep is not None:
        ineqs, eqs = C._hrep
        out._gens = (list(ineqs), list(eqs))
    return out


def lineality_space(C: Cone) -> list[tuple[int, ...]]:
    return C.lineality


def extract_rays(C: Cone) -> list[tuple[int, ...]]:
    return C.rays


def contains(C: Cone, x: Sequence) -> bool:
    return C.contains(x)


def contains_relative_interior(C: Cone, x: Sequence) -> bool:
    return C.contains_relative_interior(x)


def cones_equal(C1: Cone, C2: Cone) -> bool:
    """Mutual containment of minimal generators plus equal lineality dimension."""
    if C1.dim != C2.dim:
        raise DimensionMismatch(f"dimensions {C1.dim} and {C2.dim}")
    r1, l1 = C1._minimal_v()
    r2, l2 = C2._minimal_v()
    if len(C1.lineality) != len(C2.lineality):
        return False
    for A, B_rays, B_lin in ((C2, r1, l1), (C1, r2, l2)):
        if not all(A.contains(r) for r in B_rays):
            return False
        for l in B_lin:
            if not (A.contains(l) and A.contains(tuple(-x for x in l))):
                return False
    return True


def intersect_with_subspace(C: Cone, equations: Iterable[Sequence]) -> Cone:
    ineqs, eqs = C.hrep()
    return Cone.from_inequalities(C.dim, ineqs, list(eqs) + [list(e) for e in equations])


def project_coordinates(C: Cone, index_set: Sequence[int]) -> Cone:
    for i in index_set:
        if not 0 <= i < C.dim:
            raise DimensionMismatch(f"coordinate {i} outside dimension {C.dim}")
    rays, lin = C._minimal_v()
    pick = list(index_set)
    return Cone.from_generators(
        len(pick),
        [tuple(r[i] for i in pick) for r in rays],
        [tuple(l[i] for i in pick) for l in lin],
    )
