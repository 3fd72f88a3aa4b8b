"""Print the leading blocks of C, B, C(r), C(r)^-1 and B^-1 at a chosen depth."""
import argparse
from dataclasses import dataclass

from rioarray.catalog import R, catalan_C, catalan_r, cr_inv_triangle, shapiro_B
from rioarray.cli import render_table


@dataclass(frozen=True)
class Config:
    depth: int = 6
    symbolic_depth: int = 4


def blocks(cfg: Config):
    yield "C", catalan_C(cfg.depth).to_triangle(cfg.depth)
    yield "B", shapiro_B(cfg.depth).to_triangle(cfg.depth)
    yield "B^-1", shapiro_B(cfg.depth).inverse().to_triangle(cfg.depth)
    yield "C(r)", catalan_r(R, cfg.symbolic_depth).to_triangle(cfg.symbolic_depth)
    yield "C(r)^-1", cr_inv_triangle(cfg.symbolic_depth)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--depth", type=int, default=Config.depth)
    ap.add_argument("--symbolic-depth", type=int, default=Config.symbolic_depth)
    args = ap.parse_args()
    cfg = Config(args.depth, args.symbolic_depth)
    for title, T in blocks(cfg):
        print(f"# {title}")
        print(render_table(T, "text", 0, title), end="")
        print()


if __name__ == "__main__":
    main()
