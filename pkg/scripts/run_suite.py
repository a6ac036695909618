"""Run the full check suite and write the JSON report next to a timing summary."""
import argparse
import io
import sys
import time

from hooklab.cli import main as cli_main
from hooklab.identities import default_jobs


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--order", type=int, default=None)
    p.add_argument("--jobs", type=int, default=default_jobs())
    p.add_argument("--out", default="suite_report.json")
    a = p.parse_args()
    argv = ["suite", "--jobs", str(a.jobs), "--format", "json"]
    if a.order is not None:
        argv += ["--order", str(a.order)]
    buf = io.StringIO()
    t0 = time.perf_counter()
    code = cli_main(argv, buf)
    with open(a.out, "w", encoding="utf-8") as fh:
        fh.write(buf.getvalue())
    print(f"exit {code}, {time.perf_counter() - t0:.1f}s, report in {a.out}")
    sys.exit(code)


if __name__ == "__main__":
    main()
