"""Degree vectors, the Gröbner cone and the compatibility-degree weights.

Everything here works on either model through the same small interface:
``n_cluster``, ``n_frozen``, ``compat`` (a square matrix over all variables
or just the cluster variables), ``relations`` and ``T``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..cones import Cone, dual
from ..exact import dot, primitive


class NotPrimitive(ValueError):
    pass


class WrongType(ValueError):
    pass


@dataclass
class Report:
    name: str
    passed: bool
    details: list[str] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        head = f"[{status}] {self.name}"
        if self.details:
            head += ": " + self.details[0]
        return head


def dimension(model) -> int:
    return model.n_cluster + model.n_frozen


def degree_vector(rel, dim: int, which: int | None = None) -> tuple[int, ...]:
    """``deg(x x') - deg(primitive term)``.

    ``which`` picks the primitive term when a relation has two (type A1).
    """
    if not rel.primitive:
        raise NotPrimitive(f"relation exchanging {rel.exchanged} is not primitive")
    t = rel.primitive_terms[0] if which is None else which
    if t not in rel.primitive_terms:
        raise NotPrimitive(f"term {t} is not primitive")
    term = rel.terms[t]
    d = [-x for x in term] + [0] * (dim - len(term))
    a, b = rel.exchanged
    d[a] += 1
    d[b] += 1
    return tuple(d)


def degree_vectors(model) -> list[tuple[int, ...]]:
    """One vector per primitive term of every primitive relation, in relation order."""
    dim = dimension(model)
    out = []
    for rel in model.relations:
        if rel.primitive:
            for t in rel.primitive_terms:
                out.append(degree_vector(rel, dim, t))
    return out


def primitive_cone(model) -> Cone:
    return Cone.from_generators(dimension(model), degree_vectors(model))


def groebner_cone(model) -> Cone:
    return dual(primitive_cone(model))


def omega_v(model, v: int) -> tuple[int, ...]:
    """Row ``[(v||y)]_y`` of the compatibility matrix, zero on frozen coordinates."""
    row = list(model.compat[v])
    return tuple(row + [0] * (dimension(model) - len(row)))


def omega_matrix(model) -> list[tuple[int, ...]]:
    return [omega_v(model, v) for v in range(model.n_cluster)]


def verify_omega_in_cone(model) -> Report:
    """Every ``omega_v`` has nonnegative dot product with every primitive degree vector."""
    bad = []
    dvecs = degree_vectors(model)
    for v, w in enumerate(omega_matrix(model)):
        for k, d in enumerate(dvecs):
            if dot(w, d) < 0:
                bad.append(f"omega_{v} . d_{k} = {dot(w, d)}")
    return Report("omega_v in C_A", not bad, bad, {"checked": model.n_cluster * len(dvecs)})


def verify_prop_equality(model) -> Report:
    """``omega_v . deg(x x') = max(omega_v . deg(y1), omega_v . deg(y2))`` for all relations and ``v != x, x'``."""
    dim = dimension(model)
    omegas = omega_matrix(model)
    bad = []
    checked = 0
    for rel in model.relations:
        a, b = rel.exchanged
        t1 = list(rel.term1) + [0] * (dim - len(rel.term1))
        t2 = list(rel.term2) + [0] * (dim - len(rel.term2))
        for v, w in enumerate(omegas):
            if v in (a, b):
                continue
            checked += 1
            lhs = w[a] + w[b]
            rhs = max(dot(w, t1), dot(w, t2))
            if lhs != rhs:
                bad.append(f"v={v}, relation {rel.exchanged}: {lhs} != {rhs}")
    return Report("compatibility degree equality", not bad, bad, {"checked": checked, "relations": len(model.relations)})


def interior_weight(model) -> tuple[tuple[int, ...], Report]:
    """``sum_v omega_v`` with its interior certificate."""
    dim = dimension(model)
    omega = [0] * dim
    for w in omega_matrix(model):
        omega = [x + y for x, y in zip(omega, w)]
    omega = tuple(omega)
    dvecs = degree_vectors(model)
    dots = [dot(omega, d) for d in dvecs]
    details = [f"omega . d_{k} = {x} < 2" for k, x in enumerate(dots) if x < 2]
    interior = groebner_cone(model).contains_relative_interior(omega)
    if not interior:
        details.append("not in the relative interior of C_A")
    return omega, Report(
        "interior weight",
        not details,
        details,
        {"min_dot": min(dots) if dots else None, "relative_interior": interior},
    )


def t_orbits(model) -> list[list[int]]:
    seen: set[int] = set()
    orbits = []
    for v in range(model.n_cluster):
        if v in seen:
            continue
        orb = [v]
        cur = model.T(v)
        while cur != v:
            orb.append(cur)
            cur = model.T(cur)
        seen.update(orb)
        orbits.append(orb)
    return orbits


def omega_hat(model, v: int) -> tuple[int, ...]:
    """``sum_{i=1}^k (-1)^(i-1) omega_{T^i v}`` over the ``T``-orbit of ``v`` (size ``k``)."""
    dim = dimension(model)
    out = [0] * dim
    cur = v
    k = 0
    while True:
        cur = model.T(cur)
        k += 1
        sign = 1 if k % 2 else -1
        out = [x + sign * y for x, y in zip(out, omega_v(model, cur))]
        if cur == v:
            break
    if k % 2 == 0:
        raise WrongType(f"T-orbit of variable {v} has even size {k}")
    return tuple(out)


def verify_result2(model) -> Report:
    """The ``omega_hat`` vectors are exactly the rays of a pointed ``C_A``."""
    orbits = t_orbits(model)
    sizes = sorted(len(o) for o in orbits)
    details = []
    if any(s % 2 == 0 for s in sizes):
        return Report("alternating-sum rays", False, [f"even T-orbit sizes {sizes}"], {"orbit_sizes": sizes})
    C = groebner_cone(model)
    hats = {primitive(omega_hat(model, v)) for v in range(model.n_cluster)}
    rays = set(C.rays)
    if not C.is_pointed():
        details.append(f"cone has lineality of dimension {len(C.lineality)}")
    if hats != rays:
        details.append(f"{len(hats - rays)} omega_hat not rays, {len(rays - hats)} rays missed")
    return Report(
        "alternating-sum rays",
        not details,
        details,
        {"orbit_sizes": sizes, "rays": len(rays), "omega_hat": len(hats)},
    )
