"""Run every applicable evaluator over the built-in catalog and summarize.

    python3 scripts/run_catalog.py [--format csv|json|pretty] [--output PATH]
"""

import argparse
import sys
import time
from collections import Counter

from chernineq.cli import format_reports
from chernineq.inequalities import verify_all
from chernineq.varieties import CATALOG, get_space


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--format", choices=("pretty", "json", "csv"), default="pretty")
    parser.add_argument("--output")
    args = parser.parse_args(argv)

    start = time.perf_counter()
    reports = []
    for name in CATALOG:
        reports.extend(verify_all(get_space(name)))
    elapsed = time.perf_counter() - start

    text = format_reports(reports, args.format)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    by_theorem = Counter(r.theorem for r in reports)
    equalities = Counter(r.theorem for r in reports if r.equality)
    print(f"\n{len(CATALOG)} spaces, {len(reports)} checks in {elapsed:.2f}s", file=sys.stderr)
    for theorem in sorted(by_theorem):
        print(f"  {theorem:<14} {by_theorem[theorem]:>4} checks, {equalities[theorem]:>3} equalities",
              file=sys.stderr)
    return 0 if all(r.holds for r in reports) else 1


if __name__ == "__main__":
    sys.exit(main())
