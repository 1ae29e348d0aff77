"""Sweep the catalog: semigroup properties, groupoid flags and algebra structure per field.

    python scripts/sweep_catalog.py --fields q fp:2 fp:3 --out sweep.json
"""
from __future__ import annotations

import argparse
import dataclasses
import json
import time
from dataclasses import dataclass, field

from groupoidal.algebra import is_simple, radical, semigroup_algebra, wedderburn_components
from groupoidal.catalog import DEFAULT_SEMIGROUPS, catalog_get
from groupoidal.fields import PrimeField, parse_field
from groupoidal.germs import is_effective, is_minimal, standard_groupoid
from groupoidal.semigroup import classify


@dataclass
class SweepConfig:
    fields: list[str] = field(default_factory=lambda: ["q", "fp:2", "fp:3"])
    max_size: int = 30
    seed: int = 0
    out: str | None = None


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for name in DEFAULT_SEMIGROUPS:
        S = catalog_get(name)
        if S.n > cfg.max_size:
            continue
        r = classify(S)
        row = {
            "semigroup": name,
            "size": S.n,
            "congruence_free": r.is_congruence_free,
            "tight": r.is_tight,
            "fundamental": r.is_fundamental,
        }
        kind = "contracted" if S.zero is not None else "universal"
        G = standard_groupoid(S, kind)
        row["groupoid"] = {"kind": kind, "arrows": G.n_arrows, "effective": is_effective(G), "minimal": is_minimal(G)}
        row["algebras"] = {}
        for text in cfg.fields:
            F = parse_field(text)
            A = semigroup_algebra(S, F, contracted=S.zero is not None)
            rad = radical(A).shape[0]
            info = {"dim": A.dim, "radical_dim": rad, "simple": is_simple(A, cfg.seed).verdict}
            if isinstance(F, PrimeField) and rad == 0:
                info["blocks"] = wedderburn_components(A)
            row["algebras"][text] = info
        rows.append(row)
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    defaults = SweepConfig()
    p.add_argument("--fields", nargs="+", default=defaults.fields)
    p.add_argument("--max-size", type=int, default=defaults.max_size)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.add_argument("--out")
    cfg = SweepConfig(**{f.name: getattr(p.parse_args(), f.name) for f in dataclasses.fields(SweepConfig)})
    start = time.perf_counter()
    rows = sweep(cfg)
    for row in rows:
        algs = "  ".join(
            f"{k}: dim {v['dim']} rad {v['radical_dim']} {v['simple']}" + (f" {v['blocks']}" if "blocks" in v else "")
            for k, v in row["algebras"].items()
        )
        g = row["groupoid"]
        print(f"{row['semigroup']:<48} |S|={row['size']:<3} cf={row['congruence_free']!s:<5} "
              f"eff={g['effective']!s:<5} min={g['minimal']!s:<5} {algs}")
    print(f"{len(rows)} semigroups in {time.perf_counter() - start:.2f}s")
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump({"config": dataclasses.asdict(cfg), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
