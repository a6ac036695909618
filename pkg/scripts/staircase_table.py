"""Print the staircase triangle and the profile/hook table for small n."""
import argparse

from hooklab import diagrams
from hooklab.config import TableConfig


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--rows", type=int, default=TableConfig.rows)
    p.add_argument("--hook-table-max", type=int, default=TableConfig.hook_table_max)
    a = p.parse_args()
    cfg = TableConfig(a.rows, a.hook_table_max)

    print("partitions of n maximally contained in delta_r (r = 1..n)")
    for n, row in enumerate(diagrams.staircase_triangle(cfg.rows), start=1):
        print(f"{n:3d} | " + " ".join(f"{v:4d}" for v in row))

    print("\npartition, bit string, inversion sum, hook lengths, hook sum")
    for n in range(2, cfg.hook_table_max + 1):
        for row in diagrams.hook_table(n):
            print("  ".join(row))


if __name__ == "__main__":
    main()
