"""Command-line front end.

    chernineq catalog [--json] [--filter cy|nef|k-ample|<family>]
    chernineq show --space SEL
    chernineq verify (--space SEL | --file PATH) --theorem NAME [--k K] [--a A] [--eps 1|-1]
    chernineq certificate (--partition 2,1 | --expr "c1^2 - c2") --rank R

Exit status: 0 when every evaluated inequality holds (or a certificate was
produced), 1 on a violation or refuted cone membership, 2 on input errors.
The default output format comes from $CHERNINEQ_FORMAT (pretty, json, csv).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from dataclasses import dataclass, fields
from fractions import Fraction

from .certificates import Certificate, monomial_gap_certificate, schur_cone_membership
from .chern_algebra import ChernPolynomial, chern_variable, to_schur_basis
from .inequalities import (
    HypothesisError,
    VerificationReport,
    cor18_parameters,
    verify_all,
    verify_calabi_yau,
    verify_chern_number_inequality,
    verify_cor18,
    verify_dps_schur,
    verify_euler_chain,
    verify_k2_equality_case,
    verify_reverse_my,
    verify_sharp_family,
)
from .partitions import Partition
from .rational import format_rational, parse_rational
from .varieties import (
    CATALOG,
    ExpressionError,
    SelectorError,
    SpaceFileError,
    chern_numbers,
    get_space,
    resolve_space,
    segre_classes,
)
from .varieties import expr as E

FORMATS = ("pretty", "json", "csv")
ENV_FORMAT = "CHERNINEQ_FORMAT"
THEOREM_CHOICES = ("all", "sharp", "k2-equality", "calabi-yau", "chern-number", "reverse-my",
                   "cor18", "euler-chain", "dps-schur")
THEOREM_ALIASES = {"k2": "k2-equality", "cy": "calabi-yau"}
FILTERS = ("cy", "nef", "k-ample", "projective_space", "hypersurface", "complete_intersection", "product")

CSV_COLUMNS = ("space", "theorem", "k", "lhs", "rhs", "holds", "equality")


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfiguration:
    """One parsed command line; argparse enforces exclusivity and flag names."""

    command: str
    space: str | None = None
    file: str | None = None
    theorem: str = "all"
    k: int | None = None
    a: Fraction | None = None
    eps: int | None = None
    partition: Partition | None = None
    expr: str | None = None
    rank: int | None = None
    format: str | None = None
    output: str | None = None
    json: bool = False
    filter: str | None = None

    @classmethod
    def from_namespace(cls, ns: argparse.Namespace) -> RunConfiguration:
        names = {f.name for f in fields(cls)}
        return cls(**{k: v for k, v in vars(ns).items() if k in names})


def _default_format() -> str:
    value = os.environ.get(ENV_FORMAT, "pretty")
    return value if value in FORMATS else "pretty"


def _theorem(text: str) -> str:
    text = THEOREM_ALIASES.get(text, text)
    if text not in THEOREM_CHOICES:
        raise argparse.ArgumentTypeError(f"unknown theorem {text!r}; choose from {', '.join(THEOREM_CHOICES)}")
    return text


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="chernineq", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    cat = sub.add_parser("catalog", help="list built-in spaces")
    cat.add_argument("--json", action="store_true", help="emit a JSON array")
    cat.add_argument("--filter", choices=FILTERS)

    show = sub.add_parser("show", help="print Chern, Segre classes and Chern numbers of a space")
    _add_space_args(show)
    show.add_argument("--format", choices=FORMATS, default=None)

    ver = sub.add_parser("verify", help="evaluate inequalities on a space")
    _add_space_args(ver)
    ver.add_argument("--theorem", type=_theorem, default="all")
    ver.add_argument("--k", type=int)
    ver.add_argument("--a", type=_rational)
    ver.add_argument("--eps", type=int, choices=(1, -1))
    ver.add_argument("--format", choices=FORMATS, default=None)
    ver.add_argument("--output", help="write the report here instead of stdout")

    cert = sub.add_parser("certificate", help="Schur-cone certificates")
    target = cert.add_mutually_exclusive_group(required=True)
    target.add_argument("--partition", type=_partition, help="certify c_lambda - c_|lambda|")
    target.add_argument("--expr", help="test cone membership of an expression in c1..cr")
    cert.add_argument("--rank", type=int, required=True)
    cert.add_argument("--format", choices=("pretty", "json"), default=None)
    cert.add_argument("--output")
    return parser


def _add_space_args(p: argparse.ArgumentParser):
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--space", help="catalog name, family:params selector, file:PATH, or 'all'")
    group.add_argument("--file", help="space-definition file (TOML)")


def _spaces(args):
    if args.file:
        return [resolve_space(f"file:{args.file}")]
    if args.space == "all":
        return [get_space(name) for name in CATALOG]
    return [resolve_space(args.space)]


def _emit(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_catalog(args) -> int:
    rows = []
    for name in CATALOG:
        s = get_space(name)
        if args.filter == "cy" and not s.is_calabi_yau():
            continue
        if args.filter == "nef" and not s.tangent_nef:
            continue
        if args.filter == "k-ample" and not s.canonical_ample_gg:
            continue
        if args.filter in ("projective_space", "hypersurface", "complete_intersection", "product") \
                and s.family != args.filter:
            continue
        rows.append({
            "name": name,
            "n": s.n,
            "N": s.embedding_dim,
            "family": s.family,
            "degree": format_rational(s.degree()),
            "very_ample": s.very_ample,
            "tangent_nef": s.tangent_nef,
            "canonical_ample_gg": s.canonical_ample_gg,
            "c1_zero": s.is_calabi_yau(),
            "notes": s.notes,
        })
    if args.json:
        _emit(json.dumps(rows, indent=2) + "\n", None)
        return 0
    lines = []
    for r in rows:
        flags = [f for f in ("very_ample", "tangent_nef", "canonical_ample_gg") if r[f]]
        if r["c1_zero"]:
            flags.append("c1=0")
        flags.append(f"deg={r['degree']}")
        N = "?" if r["N"] is None else r["N"]
        lines.append(f"{r['name']}: n={r['n']}, N={N}, {', '.join(flags)}  ({r['notes']})")
    _emit("\n".join(lines) + "\n", None)
    return 0


def cmd_show(args) -> int:
    fmt = args.format or _default_format()
    out = []
    for s in _spaces(args):
        numbers = chern_numbers(s)
        data = {
            "name": s.name,
            "n": s.n,
            "N": s.embedding_dim,
            "L": str(s.L),
            "degree": format_rational(s.degree()),
            "tangent_chern": [str(s.chern_class(i)) for i in range(s.n + 1)],
            "segre": [str(x) for x in segre_classes(s)],
            "chern_numbers": {str(l): format_rational(v) for l, v in numbers.items()},
        }
        out.append(data)
    if fmt == "json":
        _emit(json.dumps(out, indent=2) + "\n", None)
        return 0
    lines = []
    for d in out:
        lines.append(f"{d['name']}  n={d['n']}  N={d['N']}  L={d['L']}  L^n={d['degree']}")
        for i, c in enumerate(d["tangent_chern"][1:], start=1):
            lines.append(f"  c{i} = {c}")
        for i, c in enumerate(d["segre"][1:], start=1):
            lines.append(f"  s{i} = {c}")
        lines.append("  chern numbers: " + ", ".join(f"c[{l}]={v}" for l, v in d["chern_numbers"].items()))
    _emit("\n".join(lines) + "\n", None)
    return 0


K_THEOREMS = ("all", "sharp", "k2-equality", "calabi-yau", "euler-chain", "dps-schur")


def run_theorem(space, theorem: str, k=None, a=None, eps=None) -> list[VerificationReport]:
    """Evaluate one theorem; ``k`` restricts the output to that degree."""
    if k is not None and theorem not in K_THEOREMS:
        raise InputError(f"--k does not apply to theorem {theorem!r}")
    if theorem == "sharp" and k is not None:
        return [verify_sharp_family(space, k)]
    reports = _run(space, theorem, a, eps)
    if k is not None:
        reports = [r for r in reports if r.k == str(k)]
        if not reports:
            raise InputError(f"{space.name}: theorem {theorem!r} has no k={k} instance")
    return reports


def _run(space, theorem, a, eps) -> list[VerificationReport]:
    if theorem == "all":
        return verify_all(space)
    if theorem == "sharp":
        return [verify_sharp_family(space, k) for k in range(1, space.n + 1)]
    if theorem == "k2-equality":
        return [verify_k2_equality_case(space)]
    if theorem == "calabi-yau":
        return verify_calabi_yau(space)
    if theorem == "chern-number":
        return [verify_chern_number_inequality(space)]
    if theorem == "reverse-my":
        return verify_reverse_my(space)
    if theorem == "cor18":
        if a is None or eps is None:
            inferred = cor18_parameters(space)
            if inferred is None:
                raise InputError(f"{space.name}: L is not a multiple of c_1; pass --a and --eps")
            a = inferred[0] if a is None else a
            eps = inferred[1] if eps is None else eps
        return [verify_cor18(space, a, eps)]
    if theorem == "euler-chain":
        return verify_euler_chain(space)
    if theorem == "dps-schur":
        return verify_dps_schur(space)
    raise InputError(f"unknown theorem {theorem!r}")


def format_reports(reports: list[VerificationReport], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.to_json() for r in reports], indent=2) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in reports:
            writer.writerow([r.space, r.theorem, r.k, format_rational(r.lhs), format_rational(r.rhs),
                             str(r.holds).lower(), str(r.equality).lower()])
        return buf.getvalue()
    lines = [str(r) for r in reports]
    bad = sum(1 for r in reports if not r.holds)
    lines.append(f"{len(reports)} checks, {bad} violated")
    return "\n".join(lines) + "\n"


def parse_reports(text: str) -> list[VerificationReport]:
    return [VerificationReport.from_json(d) for d in json.loads(text)]


def cmd_verify(args) -> int:
    fmt = args.format or _default_format()
    reports = []
    for space in _spaces(args):
        reports.extend(run_theorem(space, args.theorem, args.k, args.a, args.eps))
    reports.sort(key=VerificationReport.sort_key)
    _emit(format_reports(reports, fmt), args.output)
    return 0 if all(r.holds for r in reports) else 1


def _chern_polynomial(text: str, rank: int) -> ChernPolynomial:
    tree = E.parse(text)

    def lookup(name):
        if len(name) > 1 and name[0] == "c" and name[1:].isdigit() and 1 <= int(name[1:]) <= rank:
            return chern_variable(int(name[1:]), rank)
        raise KeyError(name)

    return E.evaluate(tree, lookup, ChernPolynomial.constant(rank), text)


def cmd_certificate(args) -> int:
    fmt = args.format or ("json" if _default_format() == "json" else "pretty")
    rank = args.rank
    if rank < 1:
        raise InputError("rank must be positive")
    if args.partition is not None:
        lam = args.partition
        if not lam.parts:
            raise InputError("partition must be nonempty")
        if lam.largest > rank:
            raise InputError(f"partition {lam} has a part above rank {rank}")
        result = monomial_gap_certificate(lam, rank)
        checker = to_schur_basis(result.target)
        if checker != result.expansion:
            raise RuntimeError("constructive and basis-solve certificates disagree")
    else:
        result = schur_cone_membership(_chern_polynomial(args.expr, rank))
    if fmt == "json":
        text = json.dumps(result.to_json(), indent=2) + "\n"
    elif isinstance(result, Certificate):
        status = "verified" if result.verify() else "NOT VERIFIED"
        text = f"{result}\n[{result.provenance}, {status}]\n"
    else:
        text = f"not in the Schur cone: {result}\n"
    _emit(text, args.output)
    return 0 if isinstance(result, Certificate) else 1


COMMANDS = {"catalog": cmd_catalog, "show": cmd_show, "verify": cmd_verify, "certificate": cmd_certificate}


def main(argv=None) -> int:
    config = RunConfiguration.from_namespace(build_parser().parse_args(argv))
    try:
        return COMMANDS[config.command](config)
    except (InputError, SelectorError, SpaceFileError, ExpressionError, HypothesisError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
