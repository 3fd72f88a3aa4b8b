"""Run the full identity suite at increasing depths and report pass counts and wall time."""
import argparse
import time
from dataclasses import dataclass
from typing import Tuple

from rioarray.identities import run_all


@dataclass(frozen=True)
class Config:
    depths: Tuple[int, ...] = (5, 10, 20, 30)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depths", type=int, nargs="+", default=list(Config.depths))
    cfg = Config(tuple(ap.parse_args().depths))
    print(f"{'depth':>5} {'passed':>8} {'seconds':>8}  failing")
    for depth in cfg.depths:
        t0 = time.perf_counter()
        reports = run_all(depth)
        dt = time.perf_counter() - t0
        failing = sorted({r.name for r in reports if not r.passed})
        ok = sum(r.passed for r in reports)
        print(f"{depth:>5} {ok:>4}/{len(reports):<3} {dt:>8.2f}  {', '.join(failing) or '-'}")


if __name__ == "__main__":
    main()
