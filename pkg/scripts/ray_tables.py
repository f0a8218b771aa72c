"""Ray and lineality counts of the Groebner cone for the polygon models.

    python scripts/ray_tables.py --max-rank 5 --frozen none
"""

import argparse
import time
from dataclasses import dataclass

from clustercone.groebner.cone import groebner_cone
from clustercone.groebner.verify import verify_rays
from clustercone.polygon import InvalidRank, ModelSpec, PolygonModel


@dataclass
class TableConfig:
    families: str = "ABCD"
    max_rank: int = 5
    frozen_mode: str = "special"
    check_families: bool = True


def table(cfg: TableConfig) -> list[dict]:
    rows = []
    for family in cfg.families:
        for rank in range(1, cfg.max_rank + 1):
            try:
                spec = ModelSpec(family, rank, cfg.frozen_mode)
            except InvalidRank:
                continue
            t0 = time.perf_counter()
            model = PolygonModel(spec)
            C = groebner_cone(model)
            row = {
                "type": spec.name,
                "dim": C.dim,
                "lineality": len(C.lineality),
                "rays": len(C.rays),
                "facets": len(C.inequalities),
                "pointed": C.is_pointed(),
            }
            if cfg.check_families:
                r = verify_rays(spec, model, C)
                row["families_match"] = r.passed
                row["non_extremal"] = len(r.data["non_extremal"])
            row["seconds"] = round(time.perf_counter() - t0, 2)
            rows.append(row)
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--families", default="ABCD")
    p.add_argument("--max-rank", type=int, default=5)
    p.add_argument("--frozen", choices=["special", "none"], default="special")
    p.add_argument("--skip-families", action="store_true", help="only count, do not compare with the explicit families")
    args = p.parse_args()
    rows = table(TableConfig(args.families, args.max_rank, args.frozen, not args.skip_families))
    keys = list(rows[0]) if rows else []
    print("\t".join(keys))
    for row in rows:
        print("\t".join(str(row.get(k, "")) for k in keys))


if __name__ == "__main__":
    main()
