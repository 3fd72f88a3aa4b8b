"""Tabulate where the nested-binomial expression for C(r)^-1 departs from the true inverse."""
import argparse
from dataclasses import dataclass

from rioarray.catalog import R, catalan_C, cr_inv_entry, cr_inv_entry_nested, r_riordan_triangle


@dataclass(frozen=True)
class Config:
    depth: int = 8


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=Config.depth)
    cfg = Config(ap.parse_args().depth)
    inv = r_riordan_triangle(catalan_C(cfg.depth), R, cfg.depth).inverse()
    bad = 0
    for n in range(cfg.depth + 1):
        for k in range(n + 1):
            true, nested = inv[n, k], cr_inv_entry_nested(n, k)
            assert cr_inv_entry(n, k) == true
            if nested != true:
                bad += 1
                print(f"({n},{k})  inverse={true}  nested={nested}")
    total = (cfg.depth + 1) * (cfg.depth + 2) // 2
    print(f"{bad} of {total} entries differ")


if __name__ == "__main__":
    main()
