"""Schur-cone positivity certificates.

P(k, r) is the cone of nonnegative combinations of S_lambda, lambda in
Gamma(k, r).  ``monomial_gap_certificate`` builds the certificate for
c_lambda - c_|lambda| the constructive way:

    c_l1 ... c_lk - c_{l1+...+lk}
        = sum_i (c_{a_i} c_{l_{i+1}} - c_{a_{i+1}}) c_{l_{i+2}} ... c_{lk}

with a_i = l1 + ... + li, each bracket rewritten as the two-row sum

    c_a c_b - c_{a+b} = sum_{j=0}^{b-1} S_(a+j, b-j)      (a >= b),

and the trailing c_m factors absorbed one at a time with the Pieri rule.
``schur_cone_membership`` is the independent checker: a direct
triangular solve in the Schur basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .chern_algebra import (
    ChernPolynomial,
    SchurExpansion,
    chern_monomial,
    chern_variable,
    pieri_multiply,
    to_schur_basis,
)
from .partitions import Partition
from .rational import format_rational, parse_rational

__all__ = [
    "Certificate",
    "Refutation",
    "two_row_expansion",
    "monomial_gap_certificate",
    "schur_cone_membership",
    "CONSTRUCTIVE",
    "BASIS_SOLVE",
]

CONSTRUCTIVE = "constructive-telescoping"
BASIS_SOLVE = "basis-solve"


@dataclass(frozen=True)
class Certificate:
    target: ChernPolynomial
    rank: int
    degree: int
    entries: tuple[tuple[Fraction, Partition], ...]
    provenance: str

    def __post_init__(self):
        if any(c < 0 for c, _ in self.entries):
            raise ValueError("certificate coefficients must be nonnegative")

    @property
    def expansion(self) -> SchurExpansion:
        return SchurExpansion(self.rank, {lam: c for c, lam in self.entries})

    def verify(self) -> bool:
        """Expand the entries and compare with the target exactly."""
        return self.expansion.to_polynomial() == self.target

    def __str__(self) -> str:
        return f"{self.target} = {self.expansion}"

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "rank": self.rank,
            "degree": self.degree,
            "provenance": self.provenance,
            "entries": [
                {"partition": str(lam), "coefficient": format_rational(c)}
                for c, lam in self.entries
            ],
            "verified": self.verify(),
        }

    @classmethod
    def from_json(cls, data: dict, target: ChernPolynomial) -> Certificate:
        entries = tuple(
            (parse_rational(e["coefficient"]), Partition.parse(e["partition"]))
            for e in data["entries"]
        )
        return cls(target, int(data["rank"]), int(data["degree"]), entries, data["provenance"])


@dataclass(frozen=True)
class Refutation:
    """The most negative Schur coefficient of a non-member."""

    target: ChernPolynomial
    rank: int
    partition: Partition
    coefficient: Fraction

    def __str__(self) -> str:
        return f"{self.target} has coefficient {format_rational(self.coefficient)} on S({self.partition})"

    def to_json(self) -> dict:
        return {
            "target": str(self.target),
            "rank": self.rank,
            "refuted": True,
            "partition": str(self.partition),
            "coefficient": format_rational(self.coefficient),
        }


def _entries(expansion: SchurExpansion) -> tuple[tuple[Fraction, Partition], ...]:
    return tuple((c, lam) for lam, c in expansion.items())


def two_row_expansion(a: int, b: int, rank: int) -> SchurExpansion:
    """c_a c_b - c_{a+b} as sum_{j<b} S_(a+j, b-j); terms with a+j > rank vanish."""
    if a < b or b < 1:
        raise ValueError("two-row telescoping needs a >= b >= 1")
    coeffs = {}
    for j in range(b):
        lam = Partition((a + j, b - j))
        if lam.largest <= rank:
            coeffs[lam] = Fraction(1)
    return SchurExpansion(rank, coeffs)


def monomial_gap_certificate(lam: Partition, rank: int, max_degree: int | None = None) -> Certificate:
    if lam.largest > rank:
        raise ValueError(f"partition {lam} has a part above rank {rank}")
    if not lam.parts:
        raise ValueError("empty partition")
    k = lam.weight
    if max_degree is not None and k > max_degree:
        raise ValueError(f"weight {k} exceeds configured max degree {max_degree}")
    target = chern_monomial(lam, rank) - chern_variable(k, rank)
    parts = lam.parts
    total = SchurExpansion(rank)
    prefix = parts[0]
    for i in range(1, len(parts)):
        piece = two_row_expansion(prefix, parts[i], rank)
        for m in parts[i + 1:]:
            piece = pieri_multiply(piece, m)
        total = total + piece
        prefix += parts[i]
    cert = Certificate(target, rank, k, _entries(total), CONSTRUCTIVE)
    if not cert.verify():
        raise RuntimeError(f"telescoping certificate for {lam} does not expand to its target")
    return cert


def schur_cone_membership(p: ChernPolynomial, rank: int | None = None) -> Certificate | Refutation:
    if rank is not None and rank != p.rank:
        raise ValueError("rank does not match the polynomial")
    if not p.is_homogeneous():
        raise ValueError("cone membership is defined for homogeneous polynomials")
    degree = p.degrees()[0] if p.degrees() else 0
    expansion = to_schur_basis(p)
    negative = [(c, lam) for lam, c in expansion.items() if c < 0]
    if negative:
        worst = min(c for c, _ in negative)
        lam = next(l for c, l in negative if c == worst)
        return Refutation(p, p.rank, lam, worst)
    return Certificate(p, p.rank, degree, _entries(expansion), BASIS_SOLVE)
