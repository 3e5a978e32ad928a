"""Exact polynomials in abstract Chern variables c_1..c_r.

A monomial c_{l1} c_{l2} ... is keyed by the partition (l1, l2, ...), so the
monomial basis of the degree-k piece is indexed by Gamma(k, r).  Schur
polynomials follow the Jacobi-Trudi convention

    S_lambda = det(c_{lambda_i - i + j}),   c_0 = 1,  c_i = 0 for i < 0 or i > r,

so S_(i) = c_i and S_(1,1) = c_1^2 - c_2 (the transpose of the usual
e-to-s convention).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Mapping, Sequence

from .partitions import Partition, enumerate_gamma
from .rational import as_fraction, format_rational, parse_rational

__all__ = [
    "ChernPolynomial",
    "SchurExpansion",
    "chern_monomial",
    "chern_variable",
    "schur",
    "to_schur_basis",
    "schur_product",
    "pieri_multiply",
    "graded_inverse",
    "segre_from_total_chern",
    "total_chern",
    "segre_of_twist",
    "chern_of_twist",
]

_EMPTY = Partition(())


def _merge(a: Partition, b: Partition) -> Partition:
    if not a.parts:
        return b
    if not b.parts:
        return a
    return Partition(tuple(sorted(a.parts + b.parts, reverse=True)))


def _print_key(lam: Partition):
    return (lam.weight, lam.parts)


class ChernPolynomial:
    """Sparse exact polynomial in c_1..c_rank; immutable by convention."""

    __slots__ = ("rank", "_terms")

    def __init__(self, rank: int, terms: Mapping[Partition, object] | None = None):
        if rank < 1:
            raise ValueError("rank must be positive")
        self.rank = rank
        clean: dict[Partition, Fraction] = {}
        for lam, coeff in (terms or {}).items():
            if lam.largest > rank:
                raise ValueError(f"monomial {lam} uses an index above rank {rank}")
            q = as_fraction(coeff)
            if q:
                clean[lam] = clean.get(lam, Fraction(0)) + q
        self._terms = {k: v for k, v in clean.items() if v}

    # constructors
    @classmethod
    def zero(cls, rank: int) -> ChernPolynomial:
        return cls(rank)

    @classmethod
    def constant(cls, rank: int, value=1) -> ChernPolynomial:
        return cls(rank, {_EMPTY: value})

    @classmethod
    def from_json(cls, data: dict) -> ChernPolynomial:
        terms: dict[Partition, Fraction] = {}
        for item in data["terms"]:
            lam = Partition.parse(item["partition"])
            terms[lam] = terms.get(lam, Fraction(0)) + parse_rational(item["coefficient"])
        return cls(int(data["rank"]), terms)

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def coefficient(self, lam: Partition) -> Fraction:
        return self._terms.get(lam, Fraction(0))

    def degrees(self) -> list[int]:
        return sorted({lam.weight for lam in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def component(self, k: int) -> ChernPolynomial:
        return ChernPolynomial(self.rank, {l: c for l, c in self._terms.items() if l.weight == k})

    def components(self, cutoff: int) -> list[ChernPolynomial]:
        return [self.component(k) for k in range(cutoff + 1)]

    def is_zero(self) -> bool:
        return not self._terms

    # arithmetic
    def _coerce(self, other) -> ChernPolynomial:
        if isinstance(other, ChernPolynomial):
            if other.rank != self.rank:
                raise ValueError("cannot mix Chern polynomials of different rank")
            return other
        return ChernPolynomial.constant(self.rank, as_fraction(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for lam, c in other._terms.items():
            terms[lam] = terms.get(lam, Fraction(0)) + c
        return ChernPolynomial(self.rank, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChernPolynomial(self.rank, {l: -c for l, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, ChernPolynomial):
            try:
                q = as_fraction(other)
            except TypeError:
                return NotImplemented
            return ChernPolynomial(self.rank, {l: c * q for l, c in self._terms.items()})
        other = self._coerce(other)
        terms: dict[Partition, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                key = _merge(a, b)
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return ChernPolynomial(self.rank, terms)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Chern polynomials only take nonnegative integer powers")
        result = ChernPolynomial.constant(self.rank)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, ChernPolynomial):
            return self.rank == other.rank and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((self.rank, frozenset(self._terms.items())))

    def evaluate(self, chern_classes: Sequence, one):
        """Substitute c_i -> chern_classes[i-1]; ``one`` is the ring's unit."""
        if len(chern_classes) < self.rank:
            raise ValueError("need one class per Chern variable")
        total = one * 0
        for lam, coeff in self._terms.items():
            term = one
            for part in lam.parts:
                term = term * chern_classes[part - 1]
            total = total + term * coeff
        return total

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for lam in sorted(self._terms, key=_print_key):
            coeff = self._terms[lam]
            mono = _monomial_text(lam)
            mag = abs(coeff)
            if not mono:
                body = format_rational(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{format_rational(mag)}*{mono}"
            pieces.append(("-" if coeff < 0 else "+", body))
        first_sign, first = pieces[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"ChernPolynomial(rank={self.rank}, {self})"

    def to_json(self) -> dict:
        return {
            "rank": self.rank,
            "terms": [
                {"partition": str(lam), "coefficient": format_rational(self._terms[lam])}
                for lam in sorted(self._terms, key=_print_key)
            ],
        }


def _monomial_text(lam: Partition) -> str:
    factors = []
    for index in sorted(set(lam.parts)):
        power = lam.parts.count(index)
        factors.append(f"c{index}" if power == 1 else f"c{index}^{power}")
    return "*".join(factors)


def chern_variable(i: int, rank: int) -> ChernPolynomial:
    """c_i with c_0 = 1 and c_i = 0 outside [0, rank]."""
    if i == 0:
        return ChernPolynomial.constant(rank)
    if i < 0 or i > rank:
        return ChernPolynomial.zero(rank)
    return ChernPolynomial(rank, {Partition((i,)): 1})


def chern_monomial(lam: Partition, rank: int) -> ChernPolynomial:
    if lam.largest > rank:
        raise ValueError(f"partition {lam} has a part above rank {rank}")
    return ChernPolynomial(rank, {lam: 1})


def total_chern(rank: int) -> ChernPolynomial:
    """The generic total Chern class 1 + c_1 + ... + c_rank."""
    return sum((chern_variable(i, rank) for i in range(1, rank + 1)), ChernPolynomial.constant(rank))


@lru_cache(maxsize=None)
def schur(lam: Partition, rank: int) -> ChernPolynomial:
    """Jacobi-Trudi determinant det(c_{lam_i - i + j}).

    Rows past the length of ``lam`` form a unit upper-triangular block, so
    the determinant reduces to the leading length x length minor, expanded
    along rows with memoised complementary minors.
    """
    parts = lam.parts
    size = len(parts)
    if lam.largest > rank:
        return ChernPolynomial.zero(rank)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: tuple[int, ...]) -> ChernPolynomial:
        if row == size:
            return ChernPolynomial.constant(rank)
        total = ChernPolynomial.zero(rank)
        for pos, col in enumerate(cols):
            entry = chern_variable(parts[row] - row + col, rank)
            if entry.is_zero():
                continue
            sub = minor(row + 1, cols[:pos] + cols[pos + 1:])
            term = entry * sub
            total = total - term if pos % 2 else total + term
        return total

    return minor(0, tuple(range(size)))


@dataclass(frozen=True)
class SchurExpansion:
    """Coefficients over the Schur basis {S_lambda : lambda_1 <= rank}."""

    rank: int
    coefficients: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, c in self.coefficients.items():
            if lam.largest > self.rank:
                raise ValueError(f"Schur index {lam} exceeds rank {self.rank}")
            q = as_fraction(c)
            if q:
                clean[lam] = q
        object.__setattr__(self, "coefficients", clean)

    def __getitem__(self, lam: Partition) -> Fraction:
        return self.coefficients.get(lam, Fraction(0))

    def items(self) -> list[tuple[Partition, Fraction]]:
        """Entries sorted by degree, then ascending lexicographic partition."""
        return [(lam, self.coefficients[lam]) for lam in sorted(self.coefficients, key=_print_key)]

    def __add__(self, other: SchurExpansion) -> SchurExpansion:
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        coeffs = dict(self.coefficients)
        for lam, c in other.coefficients.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return SchurExpansion(self.rank, coeffs)

    def scale(self, q) -> SchurExpansion:
        q = as_fraction(q)
        return SchurExpansion(self.rank, {l: c * q for l, c in self.coefficients.items()})

    def to_polynomial(self) -> ChernPolynomial:
        total = ChernPolynomial.zero(self.rank)
        for lam, c in self.coefficients.items():
            total = total + schur(lam, self.rank) * c
        return total

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coefficients.values())

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coefficients.values())

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        out = []
        for i, (lam, c) in enumerate(self.items()):
            body = f"{format_rational(abs(c))}*S({lam})"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)


def to_schur_basis(p: ChernPolynomial) -> SchurExpansion:
    """Expand ``p`` over Schur polynomials, one graded piece at a time.

    S_mu = c_mu + (terms c_nu with nu strictly dominating mu), so walking
    Gamma(k, r) in ascending lexicographic order (a linear extension of
    dominance) peels off one coefficient per step.
    """
    rank = p.rank
    coeffs: dict[Partition, Fraction] = {}
    for k in p.degrees():
        residual = p.component(k)
        if k == 0:
            coeffs[_EMPTY] = residual.coefficient(_EMPTY)
            continue
        for lam in reversed(enumerate_gamma(k, rank)):
            a = residual.coefficient(lam)
            if a:
                coeffs[lam] = a
                residual = residual - schur(lam, rank) * a
        if not residual.is_zero():
            raise RuntimeError(f"Schur transition system failed in degree {k}: residue {residual}")
    return SchurExpansion(rank, coeffs)


def schur_product(lam: Partition, mu: Partition, rank: int) -> SchurExpansion:
    """Littlewood-Richardson expansion of S_lam * S_mu at the given rank."""
    if lam.largest > rank or mu.largest > rank:
        raise ValueError("Schur indices must have parts at most the rank")
    return to_schur_basis(schur(lam, rank) * schur(mu, rank))


def _horizontal_strips(nu: Partition, m: int, rank: int) -> list[Partition]:
    """Partitions rho with rho/nu a horizontal m-strip and rho_1 <= rank."""
    base = nu.parts + (0,)
    out = []

    def rec(i, remaining, acc):
        if i == len(base):
            if remaining == 0:
                out.append(Partition(tuple(p for p in acc if p)))
            return
        upper = rank if i == 0 else base[i - 1]
        for grow in range(min(remaining, upper - base[i]), -1, -1):
            acc.append(base[i] + grow)
            rec(i + 1, remaining - grow, acc)
            acc.pop()

    rec(0, m, [])
    return out


def pieri_multiply(expansion: SchurExpansion, m: int) -> SchurExpansion:
    """Multiply a Schur expansion by c_m = S_(m) using the Pieri rule.

    In this convention S_nu * c_m sums S_rho over horizontal m-strips rho/nu
    with rho_1 <= rank; no polynomial arithmetic is involved.
    """
    rank = expansion.rank
    if m == 0:
        return expansion
    if m < 0 or m > rank:
        return SchurExpansion(rank)
    coeffs: dict[Partition, Fraction] = {}
    for nu, c in expansion.coefficients.items():
        for rho in _horizontal_strips(nu, m, rank):
            coeffs[rho] = coeffs.get(rho, Fraction(0)) + c
    return SchurExpansion(rank, coeffs)


def graded_inverse(components: Sequence, cutoff: int, zero) -> list:
    """Invert a graded series d_0 + d_1 + ... with d_0 = 1 through ``cutoff``.

    Works for any ring whose elements support + and *; ``zero`` is the
    additive identity used to pad missing components.
    """
    d = list(components) + [zero] * max(0, cutoff + 1 - len(components))
    out = [zero + 1]
    for j in range(1, cutoff + 1):
        acc = zero
        for i in range(1, j + 1):
            acc = acc + d[i] * out[j - i]
        out.append(-acc)
    return out


def segre_from_total_chern(c: ChernPolynomial, cutoff: int) -> list[ChernPolynomial]:
    """Segre components s_0..s_cutoff of s(E) = c(E*)^{-1}."""
    unit = c.component(0)
    if unit != ChernPolynomial.constant(c.rank):
        raise ValueError("total Chern class must have unit part 1")
    dual = [c.component(i) * (-1) ** i for i in range(cutoff + 1)]
    return graded_inverse(dual, cutoff, ChernPolynomial.zero(c.rank))


def segre_of_twist(segre: Sequence, line, k: int, rank: int):
    """s_k(E (x) L) for E of the given rank from its Segre classes.

    Uses sum_i C(rank - 1 + k, k - i) s_i(E) L^{k-i}; for rank n+1 the
    binomial is C(n + k, k - i).
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    if k < 0:
        raise ValueError("k must be nonnegative")
    if len(segre) <= k:
        raise ValueError(f"need Segre classes s_0..s_{k}")
    total = line * 0
    for i in range(k + 1):
        total = total + segre[i] * line ** (k - i) * comb(rank - 1 + k, k - i)
    return total


def chern_of_twist(chern: Sequence, line, rank: int):
    """Total Chern class sum_i c_i(E) (1 + L)^{rank - i} of E (x) L.

    ``chern`` lists c_0..c_rank (shorter lists are zero-padded); a nonzero
    entry past the rank is a rank mismatch.
    """
    if rank < 1:
        raise ValueError("rank must be positive")
    for extra in chern[rank + 1:]:
        if extra != 0:
            raise ValueError("Chern class above the bundle rank is nonzero")
    one_plus = line + 1
    total = line * 0
    for i, ci in enumerate(chern[: rank + 1]):
        total = total + ci * one_plus ** (rank - i)
    return total
