"""Run the root-model checks over the exceptional types and print a table.

    python scripts/exceptional_sweep.py            # G2, F4, E6
    python scripts/exceptional_sweep.py --long     # adds E7, E8 (minutes)
"""

import argparse
import time
from dataclasses import dataclass, field

from clustercone.groebner.cone import interior_weight, verify_omega_in_cone, verify_prop_equality, verify_result2
from clustercone.roots import CartanType, RootModel


@dataclass
class SweepConfig:
    types: list[tuple[str, int]] = field(default_factory=lambda: [("G", 2), ("F", 4), ("E", 6)])
    interior: bool = True


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for family, rank in cfg.types:
        t0 = time.perf_counter()
        m = RootModel(CartanType(family, rank))
        row = {
            "type": f"{family}{rank}",
            "variables": m.n_cluster,
            "relations": len(m.relations),
            "primitive": sum(r.primitive for r in m.relations),
            "equality": verify_prop_equality(m).passed,
            "omega_in_cone": verify_omega_in_cone(m).passed,
        }
        if cfg.interior:
            row["interior"] = interior_weight(m)[1].passed
        if (family, rank) == ("F", 4):
            row["alternating_rays"] = verify_result2(m).passed
        row["seconds"] = round(time.perf_counter() - t0, 1)
        rows.append(row)
        print(row, flush=True)
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--long", action="store_true", help="include E7 and E8")
    p.add_argument("--no-interior", action="store_true", help="skip the interior check (it builds the cone)")
    args = p.parse_args()
    cfg = SweepConfig(interior=not args.no_interior)
    if args.long:
        cfg.types += [("E", 7), ("E", 8)]
    sweep(cfg)


if __name__ == "__main__":
    main()
