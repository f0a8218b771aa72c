"""Command-line front end.

Exit codes: 0 all checks pass, 1 a verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .groebner import cone as gc
from .groebner import verify as gv
from .groebner.families import claimed_rays
from .polygon import PolygonModel
from .models import CLASSICAL, ModelConfig, build_model
from .exact import primitive

CHECKS = ("compdegree", "equality", "interior", "result2", "lineality", "rays", "nofrozen", "derivations", "crossmodel")
LONG_TYPES = {("E", 7), ("E", 8)}
TABLE_RANK_CAP = 8
# the A1 example lists coordinates in this order
A1_REFERENCE_ORDER = ("[1,3]", "[2,4]", "[1,2]", "[2,3]", "[3,4]", "[1,4]")


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    family: str
    rank: int
    frozen_mode: str
    model: str
    coxeter: tuple[int, ...] | None
    fmt: str
    jobs: int
    long_running: bool
    out: str | None

    @property
    def model_config(self) -> ModelConfig:
        return ModelConfig(self.family, self.rank, self.frozen_mode, self.model, self.coxeter)


def _config(args) -> RunConfig:
    family = args.family.upper()
    kind = args.model
    if kind == "auto":
        kind = "polygon" if family in CLASSICAL else "root"
    if kind == "polygon" and family not in CLASSICAL:
        raise UsageError(f"the polygon model covers A, B, C, D only, not {family}")
    frozen = args.frozen or ("special" if kind == "polygon" else "none")
    if kind == "root" and frozen != "none":
        raise UsageError("the root model has no frozen variables; pass --frozen none")
    if (family, args.rank) in LONG_TYPES and not args.long:
        raise UsageError(f"{family}{args.rank} is a long computation; pass --long to run it")
    coxeter = None
    if args.coxeter:
        if kind != "root":
            raise UsageError("--coxeter applies to the root model only")
        try:
            coxeter = tuple(int(x) - 1 for x in args.coxeter.split(","))
        except ValueError:
            raise UsageError(f"cannot parse --coxeter {args.coxeter!r}") from None
    return RunConfig(family, args.rank, frozen, kind, coxeter, args.format, args.jobs, args.long, args.out)


def _variables(model) -> list[dict]:
    out = []
    for k, label in enumerate(model.labels):
        kind = "cluster" if k < model.n_cluster else "frozen"
        out.append({"id": k, "kind": kind, "diag": label})
    return out


def _header(cfg: RunConfig) -> dict:
    return {"family": cfg.family, "rank": cfg.rank, "frozen_mode": cfg.frozen_mode}


def _fmt_vec(v) -> str:
    return "(" + ",".join(str(x) for x in v) + ")"


def cmd_variables(cfg: RunConfig, model) -> tuple[int, object]:
    data = {**_header(cfg), "variables": _variables(model)}
    if cfg.fmt == "json":
        return 0, data
    lines = [f"{model.name}: {model.n_cluster} cluster, {model.n_frozen} frozen variables"]
    lines += [f"{v['id']:>4}  {v['kind']:<8} {v['diag']}" for v in data["variables"]]
    return 0, "\n".join(lines)


def cmd_compat(cfg: RunConfig, model) -> tuple[int, object]:
    C = [list(row) for row in model.compat]
    if cfg.fmt == "json":
        return 0, {**_header(cfg), "variables": _variables(model), "compat": C}
    if cfg.rank > TABLE_RANK_CAP:
        return 0, f"{len(C)} x {len(C)} compatibility matrix (table omitted above rank {TABLE_RANK_CAP})"
    lines = [" ".join(f"{x:>2}" for x in row) + f"   {model.labels[k]}" for k, row in enumerate(C)]
    return 0, "\n".join(lines)


def cmd_relations(cfg: RunConfig, model, primitive_only: bool) -> tuple[int, object]:
    dim = gc.dimension(model)
    rels = []
    for rel in model.relations:
        if primitive_only and not rel.primitive:
            continue
        entry = {
            "exchanged": list(rel.exchanged),
            "term1": list(rel.term1),
            "term2": list(rel.term2),
            "primitive": rel.primitive,
            "primitive_terms": list(rel.primitive_terms),
            "degree_vectors": [list(gc.degree_vector(rel, dim, t)) for t in rel.primitive_terms],
        }
        if hasattr(rel, "quad_type"):
            entry["quad_type"] = rel.quad_type
        rels.append(entry)
    if cfg.fmt == "json":
        return 0, {**_header(cfg), "variables": _variables(model), "relations": rels}
    labels = model.labels

    def mono(t):
        parts = [labels[k] + (f"^{e}" if e > 1 else "") for k, e in enumerate(t) if e]
        return "*".join(parts) or "1"

    lines = [f"{len(rels)} relations"]
    for r in rels:
        a, b = r["exchanged"]
        line = f"{labels[a]}*{labels[b]} = {mono(r['term1'])} + {mono(r['term2'])}"
        if r["primitive"]:
            line += "   d = " + ", ".join(_fmt_vec(d) for d in r["degree_vectors"])
        lines.append(line)
    return 0, "\n".join(lines)


def cone_payload(cfg: RunConfig, model, C) -> dict:
    return {
        **_header(cfg),
        "variables": _variables(model),
        "lineality": [list(v) for v in C.lineality],
        "rays": [list(v) for v in C.rays],
        "inequalities": [list(v) for v in C.inequalities],
    }


def cmd_cone(cfg: RunConfig, model) -> tuple[int, object]:
    C = gc.groebner_cone(model)
    data = cone_payload(cfg, model, C)
    if cfg.fmt == "json":
        return 0, data
    lines = [f"{model.name} ({cfg.frozen_mode}) Groebner cone in dimension {C.dim}"]
    lines.append("coordinates: " + " ".join(model.labels))
    if tuple(model.labels) == A1_REFERENCE_ORDER:
        perm = [A1_REFERENCE_ORDER.index(l) for l in model.labels]
        lines.append("permutation to the A1 reference order: " + " ".join(map(str, perm)))
    lines.append(f"lineality ({len(data['lineality'])}):")
    lines += ["  " + _fmt_vec(v) for v in data["lineality"]]
    lines.append(f"rays ({len(data['rays'])}):")
    lines += ["  " + _fmt_vec(v) for v in data["rays"]]
    if isinstance(model, PolygonModel) and cfg.rank <= TABLE_RANK_CAP:
        reps = _representatives(cfg, model, C)
        if reps:
            lines.append("ray representatives from the explicit families:")
            lines += [f"  {label} = {_fmt_vec(vec)} ~ {_fmt_vec(ray)}" for label, vec, ray in reps]
    lines.append(f"facets ({len(data['inequalities'])}):")
    lines += ["  " + _fmt_vec(v) for v in data["inequalities"]]
    return 0, "\n".join(lines)


def _representatives(cfg: RunConfig, model, C) -> list[tuple[str, tuple, tuple]]:
    spec = model.spec
    gens = claimed_rays(spec.family, spec.rank, spec.frozen_mode)
    vecs, _ = gv._restrict(gens, spec)
    rays = set(C.rays)
    seen = {}
    for g, vec in zip(gens, vecs):
        p = primitive(vec)
        c = C.canonical_mod_lineality(p)
        if c in rays and c not in seen:
            seen[c] = (g.label, p, c)
    return [seen[r] for r in C.rays if r in seen]


def _applicable(check: str, cfg: RunConfig) -> str | None:
    """Reason the check does not apply, or None."""
    f, n = cfg.family, cfg.rank
    if check == "result2":
        if cfg.frozen_mode != "none":
            return "needs --frozen none"
        if not ((f in "ABC" and n % 2 == 0) or (f, n) == ("F", 4)):
            return "only for A/B/C of even rank and F4"
    if check in ("lineality", "rays", "nofrozen"):
        if cfg.model != "polygon":
            return "needs the polygon model"
    if check == "crossmodel" and f not in CLASSICAL:
        return "needs a classical type"
    return None


def run_check(check: str, cfg: RunConfig) -> gc.Report:
    model = build_model(cfg.model_config)
    if check == "compdegree":
        return gc.verify_omega_in_cone(model)
    if check == "equality":
        return gc.verify_prop_equality(model)
    if check == "interior":
        return gc.interior_weight(model)[1]
    if check == "result2":
        return gc.verify_result2(model)
    if check == "lineality":
        return gv.verify_lineality(model.spec, model)
    if check == "rays":
        return gv.verify_rays(model.spec, model)
    if check == "nofrozen":
        _, _, equal = gv.no_frozen_cone_two_ways(cfg.family, cfg.rank)
        return gc.Report(f"no-frozen routes {cfg.family}{cfg.rank}", equal, [] if equal else ["routes disagree"])
    if check == "derivations":
        return gv.verify_derivations(model)
    if check == "crossmodel":
        return gv.verify_cross_model(cfg.family, cfg.rank)
    raise UsageError(f"unknown check {check}")


def cmd_verify(cfg: RunConfig, check: str) -> tuple[int, object]:
    if check == "all":
        names = [c for c in CHECKS if _applicable(c, cfg) is None]
        skipped = {c: _applicable(c, cfg) for c in CHECKS if c not in names}
    else:
        reason = _applicable(check, cfg)
        if reason:
            raise UsageError(f"check {check} does not apply to {cfg.family}{cfg.rank}: {reason}")
        names, skipped = [check], {}
    if cfg.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            reports = list(pool.map(run_check, names, [cfg] * len(names)))
    else:
        reports = [run_check(c, cfg) for c in names]
    ok = all(r.passed for r in reports)
    if cfg.fmt == "json":
        payload = {
            **_header(cfg),
            "passed": ok,
            "checks": [
                {"check": c, "name": r.name, "passed": r.passed, "details": r.details[:20], "data": r.data}
                for c, r in zip(names, reports)
            ],
            "skipped": skipped,
        }
        return (0 if ok else 1), payload
    lines = [r.summary() for r in reports]
    lines += [f"[SKIP] {c}: {why}" for c, why in skipped.items()]
    for c, r in zip(names, reports):
        if not r.passed:
            lines.append(f"first failing witness in {c}:")
            lines += [f"  - {d}" for d in r.details[:10]]
    return (0 if ok else 1), "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", required=True, choices=list("ABCDEFGabcdefg"))
    common.add_argument("--rank", required=True, type=int)
    common.add_argument("--frozen", choices=["special", "none"], default=None)
    common.add_argument("--model", choices=["polygon", "root", "auto"], default="auto")
    common.add_argument("--coxeter", default=None, help="comma-separated 1-based order of simple reflections")
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--long", action="store_true", help="allow E7/E8")
    common.add_argument("--out", default=None, help="write output to this file")

    p = argparse.ArgumentParser(prog="clustercone", description="Groebner cones of finite-type cluster algebras")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("variables", parents=[common], help="list cluster and frozen variables")
    sub.add_parser("compat", parents=[common], help="print the compatibility degree matrix")
    rel = sub.add_parser("relations", parents=[common], help="list exchange relations")
    rel.add_argument("--primitive-only", action="store_true")
    sub.add_parser("cone", parents=[common], help="lineality, rays and facets of the Groebner cone")
    ver = sub.add_parser("verify", parents=[common], help="run a verification suite")
    ver.add_argument("--check", choices=list(CHECKS) + ["all"], default="all")
    return p


def _emit(payload, cfg: RunConfig) -> None:
    text = json.dumps(payload, indent=1) if cfg.fmt == "json" else str(payload)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _config(args)
        try:
            model = build_model(cfg.model_config)
        except ValueError as err:
            raise UsageError(str(err)) from err
        if args.command == "verify":
            code, payload = cmd_verify(cfg, args.check)
        else:
            if args.command == "variables":
                code, payload = cmd_variables(cfg, model)
            elif args.command == "compat":
                code, payload = cmd_compat(cfg, model)
            elif args.command == "relations":
                code, payload = cmd_relations(cfg, model, args.primitive_only)
            else:
                code, payload = cmd_cone(cfg, model)
    except UsageError as err:
        print(f"error: {err}", file=sys.stderr)
        return 2
    _emit(payload, cfg)
    return code


if __name__ == "__main__":
    sys.exit(main())
