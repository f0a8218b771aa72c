"""Verification of the explicit lineality/ray descriptions against the computed cones."""

from __future__ import annotations

import itertools
from fractions import Fraction

from ..cones import Cone, cones_equal, intersect_with_subspace, project_coordinates
from ..exact import dot, kernel_basis, primitive, rank, same_span
from ..polygon import ModelSpec, PolygonModel
from ..roots import CartanType, RootModel
from .cone import Report, degree_vectors, dimension, groebner_cone, primitive_cone
from .families import Families, Generator, claimed_lineality, claimed_rays


def _restrict(gens: list[Generator], spec: ModelSpec) -> tuple[list[tuple[Fraction, ...]], list[str]]:
    """Drop frozen coordinates for frozen_mode ``none``; report generators that do not vanish there."""
    if spec.frozen_mode == "special":
        return [g.vector for g in gens], []
    F = Families(spec.family, spec.rank)
    frozen = F.frozen_indices()
    keep = F.cluster_indices()
    out, bad = [], []
    for g in gens:
        if any(g.vector[k] for k in frozen):
            bad.append(f"{g.label} has nonzero frozen coordinates")
        out.append(tuple(g.vector[k] for k in keep))
    return out, bad


def verify_lineality(spec: ModelSpec, model: PolygonModel | None = None) -> Report:
    model = model or PolygonModel(spec)
    claimed, details = _restrict(claimed_lineality(spec.family, spec.rank, spec.frozen_mode), spec)
    claimed = [primitive(v) for v in claimed]
    dvecs = degree_vectors(model)
    kernel = kernel_basis(dvecs, dimension(model)) if dvecs else kernel_basis([], dimension(model))
    for k, v in enumerate(claimed):
        for d in dvecs:
            if dot(v, d) != 0:
                details.append(f"claimed lineality vector {k} has nonzero dot product with a degree vector")
                break
    claimed_rank = rank(claimed) if claimed else 0
    if claimed_rank != len(claimed):
        details.append(f"claimed vectors are dependent (rank {claimed_rank} of {len(claimed)})")
    if not same_span(claimed, kernel):
        details.append(f"span mismatch: claimed dim {claimed_rank}, kernel dim {len(kernel)}")
    expected = model.n_frozen + (1 if spec.family == "D" and spec.frozen_mode == "special" else 0)
    data = {"kernel_dim": len(kernel), "claimed": len(claimed)}
    if spec.frozen_mode == "special":
        data["expected_dim"] = expected
        if len(kernel) != expected:
            details.append(f"lineality dimension {len(kernel)} != {expected}")
    return Report(f"lineality {spec.name} ({spec.frozen_mode})", not details, details, data)


def _theorem_tolerates_extras(spec: ModelSpec) -> bool:
    # the even-rank type D no-frozen list may contain non-extremal members
    return spec.family == "D" and spec.frozen_mode == "none" and spec.rank % 2 == 0


def verify_rays(spec: ModelSpec, model: PolygonModel | None = None, cone: Cone | None = None) -> Report:
    model = model or PolygonModel(spec)
    C = cone or groebner_cone(model)
    gens = claimed_rays(spec.family, spec.rank, spec.frozen_mode)
    vecs, details = _restrict(gens, spec)
    rays = set(C.rays)
    canon: dict[tuple, list[str]] = {}
    for g, vec in zip(gens, vecs):
        p = primitive(vec)
        if not C.contains(p):
            details.append(f"{g.label} is not in the cone")
            continue
        canon.setdefault(C.canonical_mod_lineality(p), []).append(g.label)
    missing = rays - set(canon)
    extras = {c: labels for c, labels in canon.items() if c not in rays}
    if missing:
        details.append(f"{len(missing)} rays not produced by the claimed generators")
    extra_labels = sorted(l for labels in extras.values() for l in labels)
    if extras and not _theorem_tolerates_extras(spec):
        details.append(f"{len(extras)} claimed generators are not extremal, e.g. {extra_labels[0]}")
    data = {
        "rays": len(rays),
        "lineality": len(C.lineality),
        "claimed": len(gens),
        "distinct_claimed": len(canon),
        "non_extremal": extra_labels,
    }
    if spec.frozen_mode == "none" and spec.family in "ABC" and spec.rank % 2 == 0:
        ambient = dimension(model)
        simplicial = C.is_pointed() and len(rays) == ambient and C.is_simplicial()
        data["simplicial"] = simplicial
        if not simplicial:
            details.append(f"cone is not pointed simplicial: {len(rays)} rays in dimension {ambient}")
    return Report(f"rays {spec.name} ({spec.frozen_mode})", not details, details, data)


def no_frozen_cone_two_ways(family: str, rank_: int) -> tuple[Cone, Cone, bool]:
    """Cone without frozen variables, from the frozen model and directly."""
    full = PolygonModel(ModelSpec(family, rank_, "special"))
    dim = dimension(full)
    frozen = range(full.n_cluster, dim)
    eqs = [tuple(int(k == f) for k in range(dim)) for f in frozen]
    via_frozen = project_coordinates(intersect_with_subspace(groebner_cone(full), eqs), list(range(full.n_cluster)))
    direct = groebner_cone(PolygonModel(ModelSpec(family, rank_, "none")))
    return via_frozen, direct, cones_equal(via_frozen, direct)


def derivation_check(model, prim: Cone, v: int, alpha: tuple[int, ...]) -> dict:
    """Non-triviality of ``z^alpha d/dz_v`` and whether ``-deg`` avoids the primitive cone."""
    C = model.compat
    dim = dimension(model)
    n = model.n_cluster
    support = [k for k, a in enumerate(alpha) if a]

    def compatible(a: int, b: int) -> bool:
        if a >= n or b >= n:
            return True
        return C[a][b] == 0 and C[b][a] == 0

    nontrivial = False
    if all(compatible(a, b) for a, b in itertools.combinations(support, 2)):
        for w in range(n):
            if compatible(w, v):
                continue
            if all(compatible(w, s) for s in support):
                nontrivial = True
                break
    deg = list(alpha) + [0] * (dim - len(alpha))
    deg[v] -= 1
    excluded = not prim.contains(tuple(-x for x in deg))
    return {"nontrivial": nontrivial, "cone_excluded": excluded}


def verify_derivations(model, max_degree: int = 3) -> Report:
    """Every non-trivial derivation with ``|alpha| <= max_degree`` has ``-deg`` outside ``C_prim``."""
    prim = primitive_cone(model)
    dim = dimension(model)
    bad = []
    nontrivial = 0
    checked = 0
    for total in range(0, max_degree + 1):
        for combo in itertools.combinations_with_replacement(range(dim), total):
            alpha = [0] * dim
            for k in combo:
                alpha[k] += 1
            alpha = tuple(alpha)
            for v in range(model.n_cluster):
                checked += 1
                res = derivation_check(model, prim, v, alpha)
                if res["nontrivial"]:
                    nontrivial += 1
                    if not res["cone_excluded"]:
                        bad.append(f"v={v}, alpha={alpha}")
    return Report("derivation degrees", not bad, bad, {"checked": checked, "nontrivial": nontrivial})


def cross_model_stats(model) -> dict:
    C = groebner_cone(model)
    return {
        "variables": model.n_cluster,
        "relations": len(model.relations),
        "primitive": sum(r.primitive for r in model.relations),
        "lineality": len(C.lineality),
        "rays": len(C.rays),
    }


def verify_cross_model(family: str, rank_: int) -> Report:
    poly = cross_model_stats(PolygonModel(ModelSpec(family, rank_, "none")))
    root = cross_model_stats(RootModel(CartanType(family, rank_)))
    details = [f"{k}: polygon {poly[k]} vs root {root[k]}" for k in poly if poly[k] != root[k]]
    return Report(f"cross-model {family}{rank_}", not details, details, {"polygon": poly, "root": root})
