"""Print the Schur-cone certificate of c_lambda - c_|lambda| for every lambda in Gamma(k, r).

    python3 scripts/certificate_table.py --max-degree 5 --rank 3
"""

import argparse
import sys

from chernineq.certificates import monomial_gap_certificate
from chernineq.chern_algebra import to_schur_basis
from chernineq.partitions import enumerate_gamma


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-degree", type=int, default=4)
    parser.add_argument("--rank", type=int, default=3)
    args = parser.parse_args(argv)

    mismatches = 0
    for k in range(2, args.max_degree + 1):
        print(f"# degree {k}, rank {args.rank}")
        for lam in enumerate_gamma(k, args.rank):
            if lam.length == 1:
                continue
            cert = monomial_gap_certificate(lam, args.rank)
            agree = to_schur_basis(cert.target) == cert.expansion
            mismatches += not agree
            print(f"{str(lam):<12} {cert}" + ("" if agree else "   <-- basis solve disagrees"))
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())
