"""Verify builtin identities at increasing orders and log wall time per run.

    python scripts/conjecture_sweep.py --identities conj_6_2a conj_6_2b --orders 10 20 25
"""
import argparse
import json
import time

from hooklab import identities
from hooklab.config import SweepConfig


def sweep(cfg: SweepConfig) -> list[dict]:
    rows = []
    for order in sorted(cfg.orders):
        for name in cfg.identities:
            t0 = time.perf_counter()
            report = identities.verify(name, order, jobs=cfg.jobs)
            rows.append({"identity": name, "order": order, "status": report.status,
                         "seconds": round(time.perf_counter() - t0, 2)})
            print(f"{report.status:4s}  {name:20s} N={order:<3d} {rows[-1]['seconds']:7.2f}s", flush=True)
    return rows


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--identities", nargs="+", default=list(SweepConfig().identities))
    p.add_argument("--orders", nargs="+", type=int, default=[10, 20, 30])
    p.add_argument("--jobs", type=int, default=identities.default_jobs())
    p.add_argument("--json", help="also write the rows to this file")
    a = p.parse_args()
    cfg = SweepConfig(tuple(a.identities), tuple(a.orders), a.jobs)
    rows = sweep(cfg)
    if a.json:
        with open(a.json, "w", encoding="utf-8") as fh:
            json.dump({"config": cfg.to_json(), "rows": rows}, fh, indent=2)


if __name__ == "__main__":
    main()
