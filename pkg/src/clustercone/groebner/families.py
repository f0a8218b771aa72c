"""Explicit lineality and ray generators for the polygon models.

All vectors live in the coordinates of the model *with* its special frozen
variables; for frozen_mode ``none`` they are checked to vanish on the frozen
coordinates and then restricted to the cluster coordinates.  Entries are
Fractions because the no-frozen corrections use ``E/2`` and ``E/4``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ..polygon import (
    BLUE,
    RED,
    Diag,
    ModelSpec,
    antipode,
    arc_vertices,
    is_diameter,
    length,
    list_variables,
    minor_arc,
    seg,
    vmod,
)


class ParameterOutOfRange(ValueError):
    pass


@dataclass(frozen=True)
class Generator:
    """A tagged vector, e.g. ``("v", "[1,3]")``."""

    tag: tuple
    vector: tuple[Fraction, ...]

    @property
    def label(self) -> str:
        name, *params = self.tag
        return f"{name}({', '.join(str(p) for p in params)})"


class Families:
    def __init__(self, family: str, rank: int):
        self.spec = ModelSpec(family, rank, "special")
        self.family = family
        self.n = rank
        self.N = self.spec.N
        self.table = list_variables(self.spec)
        self.dim = len(self.table)

    # -- basic vectors ---------------------------------------------------

    def zero(self) -> list[Fraction]:
        return [Fraction(0)] * self.dim

    def e(self, d: Diag) -> tuple[Fraction, ...]:
        v = self.zero()
        v[self.table.index[d]] = Fraction(1)
        return tuple(v)

    def _add(self, *terms) -> tuple[Fraction, ...]:
        """Sum of ``(coefficient, vector)`` pairs."""
        out = self.zero()
        for c, vec in terms:
            if c:
                for k, x in enumerate(vec):
                    if x:
                        out[k] += c * x
        return tuple(out)

    def segments(self):
        """Every edge and diagonal of the polygon, uncolored."""
        for i, j in combinations(range(1, self.N + 1), 2):
            yield Diag(i, j)

    def diameters_at(self, i: int) -> list[Diag]:
        d = seg(i, antipode(i, self.N), self.N)
        if self.family == "D":
            return [Diag(d.i, d.j, BLUE), Diag(d.i, d.j, RED)]
        return [d]

    # -- lineality generators -----------------------------------------------

    def E_i(self, i: int) -> tuple[Fraction, ...]:
        i = vmod(i, self.N)
        out = self.zero()
        if self.family == "A":
            for d in self.segments():
                if i in d.ends:
                    out[self.table.index[d]] += 1
            return tuple(out)
        for d in self.diameters_at(i):
            out[self.table.index[d]] += 1
        if self.family == "C":
            out[self.table.index[self.diameters_at(i)[0]]] += 1
        seen = set()
        for o_idx, o in enumerate(self.table.vars):
            if is_diameter(o.rep, self.N) or o_idx in seen:
                continue
            if any(i in m.ends for m in o.members):
                seen.add(o_idx)
                out[o_idx] += 1
        return tuple(out)

    def E(self) -> tuple[Fraction, ...]:
        return self._add(*((1, self.E_i(i)) for i in range(1, self.N + 1)))

    def alternating_E(self) -> tuple[Fraction, ...]:
        return self._add(*(((-1) ** i, self.E_i(i)) for i in range(1, self.N + 1)))

    def u_diam(self) -> tuple[Fraction, ...]:
        if self.family != "D":
            raise ParameterOutOfRange("u_diam exists only in type D")
        out = self.zero()
        for i in range(1, self.n + 1):
            blue, red = self.diameters_at(i)
            out[self.table.index[blue]] += 1
            out[self.table.index[red]] -= 1
        return tuple(out)

    # -- ray generators with frozen variables ---------------------------

    def _check_nonmaximal(self, l: Diag) -> None:
        if length(l, self.N) >= self.N // 2:
            raise ParameterOutOfRange(f"{l} has maximal length")

    def v(self, l: Diag) -> tuple[Fraction, ...]:
        """``-sum e_k`` over edges and diagonals ``k`` inside the minor arc of ``l``."""
        self._check_nonmaximal(l)
        lo, hi = minor_arc(l, self.N)
        arc = arc_vertices(lo, hi, self.N)
        out = self.zero()
        for a, b in combinations(arc, 2):
            out[self.table.index[seg(a, b, self.N)]] -= 1
        return tuple(out)

    def _diam(self, i: int, color: str) -> Diag:
        d = seg(i, antipode(i, self.N), self.N)
        return Diag(d.i, d.j, color)

    def _side(self, i: int) -> Diag:
        # the length n-2 diagonal [i+1, ibar-1] next to the diameter at i
        return seg(i + 1, antipode(i, self.N) - 1, self.N)

    def w(self, i: int, vfun=None) -> tuple[Fraction, ...]:
        vfun = vfun or self.v
        return self._add((1, self.e(self._diam(i, BLUE))), (1, vfun(self._side(i))))

    def w_hat(self, i: int, vfun=None) -> tuple[Fraction, ...]:
        vfun = vfun or self.v
        return self._add((1, self.e(self._diam(i, RED))), (1, vfun(self._side(i))))

    def w_jk(self, j: int, k: int, vfun=None) -> tuple[Fraction, ...]:
        if self.family != "D":
            raise ParameterOutOfRange("w(j,k) exists only in type D")
        if not (1 <= j <= self.n and 0 <= k <= self.n - 1):
            raise ParameterOutOfRange(f"w({j},{k}) out of range")
        vfun = vfun or self.v
        terms = []
        if k % 2 == 0:
            terms += [(1, self.w(j + 2 * i, vfun)) for i in range(0, k // 2 + 1)]
            terms += [(-1, self.w_hat(j + 2 * i - 1, vfun)) for i in range(1, k // 2 + 1)]
        else:
            jbar = antipode(j, self.N)
            terms.append((1, vfun(seg(j + k, jbar + k + 1, self.N))))
            terms += [(1, self.w(j + 2 * i, vfun)) for i in range(0, (k - 1) // 2 + 1)]
            terms += [(-1, self.w_hat(j + 2 * i - 1, vfun)) for i in range(1, (k + 1) // 2 + 1)]
        return self._add(*terms)

    # -- no-frozen corrections -----------------------------------------------

    def E_of(self, l: Diag) -> tuple[Fraction, ...]:
        lo, _ = minor_arc(l, self.N)
        return self._add(*((1, self.E_i(lo + 2 * k - 1)) for k in range(1, length(l, self.N) // 2 + 1)))

    def Ebar_of(self, l: Diag) -> tuple[Fraction, ...]:
        _, hi = minor_arc(l, self.N)
        count = (self.N - length(l, self.N)) // 2
        return self._add(*((1, self.E_i(hi + 2 * k - 1)) for k in range(1, count + 1)))

    def H_from(self, start: int, steps: int) -> tuple[Fraction, ...]:
        """``sum_{k<steps} (-1)^k E_{start+k}``."""
        return self._add(*(((-1) ** k, self.E_i(start + k)) for k in range(steps)))

    def H_of(self, l: Diag) -> tuple[Fraction, ...]:
        lo, _ = minor_arc(l, self.N)
        return self.H_from(lo, length(l, self.N))

    def H_between(self, a: int, b: int) -> tuple[Fraction, ...]:
        """``H([a, b])``; for a diameter the arc starting at the smaller vertex is used."""
        d = seg(a, b, self.N)
        if is_diameter(d, self.N):
            first = self.H_from(d.i, self.N // 2)
            second = self.H_from(d.j, self.N // 2)
            frozen = self.frozen_indices()
            if [first[k] for k in frozen] != [second[k] for k in frozen]:
                raise AssertionError(f"orientations of H({d}) differ on frozen coordinates")
            return first
        return self.H_of(d)

    def v_tilde(self, l: Diag) -> tuple[Fraction, ...]:
        lo, hi = minor_arc(l, self.N)
        odd = length(l, self.N) % 2 == 1
        if odd and self.family == "A" and self.n % 2 == 0:
            return self._add((1, self.v(l)), (Fraction(1, 2), self.E()), (-1, self.Ebar_of(l)))
        if odd and self.family in "BCD" and (self.N // 2) % 2 == 1:
            other = seg(hi, antipode(lo, self.N), self.N)
            return self._add((1, self.v(l)), (Fraction(1, 4), self.E()), (-1, self.E_of(other)))
        return self._add((1, self.v(l)), (1, self.E_of(l)))

    def w_tilde_jk(self, j: int, k: int) -> tuple[Fraction, ...]:
        return self.w_jk(j, k, vfun=self.v_tilde)

    # -- enumeration helpers ---------------------------------------------------

    def nonmaximal(self, max_len: int | None = None) -> list[Diag]:
        """One representative per variable of non-maximal length (orbit representatives)."""
        cap = self.N // 2 - 1 if max_len is None else max_len
        out = []
        for o in self.table.vars:
            if o.rep.color is None and length(o.rep, self.N) <= cap:
                out.append(o.rep)
        return out

    def nonmaximal_segments(self, max_len: int | None = None) -> list[Diag]:
        """Every edge or diagonal (not just representatives) of non-maximal length."""
        cap = self.N // 2 - 1 if max_len is None else max_len
        return [d for d in self.segments() if length(d, self.N) <= cap]

    def frozen_indices(self) -> list[int]:
        return list(range(self.table.n_cluster, self.dim))

    def cluster_indices(self) -> list[int]:
        return list(range(self.table.n_cluster))


def claimed_lineality(family: str, rank: int, frozen_mode: str) -> list[Generator]:
    """Lineality basis asserted for the model, in special-frozen coordinates."""
    F = Families(family, rank)
    n = rank
    if frozen_mode == "special":
        count = F.N if family == "A" else (n if family == "D" else n + 1)
        gens = [Generator(("E", i), F.E_i(i)) for i in range(1, count + 1)]
        if family == "D":
            gens.append(Generator(("u_diam",), F.u_diam()))
        return gens
    gens = []
    alternating = (family in "ABC" and n % 2 == 1) or (family == "D" and n % 2 == 0)
    if alternating:
        gens.append(Generator(("altE",), F.alternating_E()))
    if family == "D":
        gens.append(Generator(("u_diam",), F.u_diam()))
    return gens


def _pair_generators(F: Families, odd_segments) -> list[Generator]:
    out = []
    for l, lp in combinations(odd_segments, 2):
        hl, hlp = minor_arc(l, F.N)[1], minor_arc(lp, F.N)[1]
        if (hl + hlp) % 2 != 1:
            continue
        vec = F._add((1, F.v_tilde(l)), (1, F.v_tilde(lp)), (1, F.H_between(hl, hlp)))
        out.append(Generator(("vv+H", str(l), str(lp)), vec))
    return out


def claimed_rays(family: str, rank: int, frozen_mode: str) -> list[Generator]:
    """Ray generators asserted for the model, in special-frozen coordinates.

    With frozen variables the families ``v(l)`` (and ``w(j,k)`` in type D)
    are listed; without them the corrected families of the no-frozen case.
    Redundant copies (``v(l)`` vs ``v(lbar)``) are included and collapse
    when compared modulo lineality.
    """
    F = Families(family, rank)
    n = rank
    if frozen_mode == "special":
        if family == "D":
            gens = [Generator(("v", str(l)), F.v(l)) for l in F.nonmaximal_segments(n - 2)]
            gens += [Generator(("w", j, k), F.w_jk(j, k)) for j in range(1, n + 1) for k in range(n)]
            return gens
        return [Generator(("v", str(l)), F.v(l)) for l in F.nonmaximal_segments()]
    if family in "ABC":
        segs = F.nonmaximal_segments()
        if n % 2 == 0:
            return [Generator(("vt", str(l)), F.v_tilde(l)) for l in segs]
        even = [l for l in segs if length(l, F.N) % 2 == 0]
        odd = [l for l in segs if length(l, F.N) % 2 == 1]
        return [Generator(("vt", str(l)), F.v_tilde(l)) for l in even] + _pair_generators(F, odd)
    # type D without frozen variables
    if n % 2 == 1:
        gens = [Generator(("vt", str(l)), F.v_tilde(l)) for l in F.nonmaximal_segments(n - 2)]
        gens += [Generator(("wt", j, k), F.w_tilde_jk(j, k)) for j in range(1, n + 1) for k in range(n)]
        return gens
    gens = [
        Generator(("vt", str(l)), F.v_tilde(l))
        for l in F.nonmaximal_segments(n - 2)
        if length(l, F.N) % 2 == 0
    ]
    gens += [Generator(("wt", j, k), F.w_tilde_jk(j, k)) for j in range(1, n + 1) for k in range(0, n, 2)]
    odd = [l for l in F.nonmaximal_segments() if length(l, F.N) % 2 == 1]
    gens += _pair_generators(F, odd)
    for j in range(1, n + 1):
        for k in range(1, n, 2):
            wt = F.w_tilde_jk(j, k)
            for l in odd:
                hl = minor_arc(l, F.N)[1]
                if (j + hl) % 2 != 0:
                    continue
                vec = F._add((1, wt), (1, F.v_tilde(l)), (1, F.H_between(j + k, hl)))
                gens.append(Generator(("wt+vt+H", j, k, str(l)), vec))
    return gens
