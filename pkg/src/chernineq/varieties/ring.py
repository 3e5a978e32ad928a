"""Truncated graded cohomology rings with a top-degree integration functional."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..chern_algebra import graded_inverse
from ..rational import as_fraction, format_rational

__all__ = ["CohomologyModel", "CohomologyClass", "integrate"]

Monomial = tuple[int, ...]


@dataclass(frozen=True, eq=False)
class CohomologyModel:
    """Q[generators] / (monomial relations, everything above ``dimension``).

    ``zero_monomials`` lists exponent vectors whose multiples vanish (a power
    cap h^{n+1} = 0 is the single-generator case).  ``integral`` assigns a
    value to top-degree monomials; an empty table means the model has no
    fundamental class (e.g. a free ring used for formal identities).
    """

    dimension: int
    generators: tuple[tuple[str, int], ...]
    zero_monomials: tuple[Monomial, ...] = ()
    integral: Mapping[Monomial, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple((str(n), int(d)) for n, d in self.generators))
        names = [n for n, _ in self.generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        if any(d < 1 for _, d in self.generators):
            raise ValueError("generator degrees must be positive")
        if self.dimension < 0:
            raise ValueError("dimension must be nonnegative")
        width = len(self.generators)
        zeros = tuple(tuple(z) for z in self.zero_monomials)
        if any(len(z) != width for z in zeros):
            raise ValueError("relation monomials must have one exponent per generator")
        object.__setattr__(self, "zero_monomials", zeros)
        table = {}
        for mono, value in dict(self.integral).items():
            mono = tuple(mono)
            if len(mono) != width:
                raise ValueError("integral monomials must have one exponent per generator")
            if self.monomial_degree(mono) != self.dimension:
                raise ValueError(f"integral given on non-top monomial {mono}")
            if self.reduces_to_zero(mono):
                raise ValueError(f"integral given on a monomial killed by relations: {mono}")
            table[mono] = as_fraction(value)
        object.__setattr__(self, "integral", table)

    @property
    def names(self) -> list[str]:
        return [n for n, _ in self.generators]

    def monomial_degree(self, mono: Monomial) -> int:
        return sum(e * d for e, (_, d) in zip(mono, self.generators))

    def reduces_to_zero(self, mono: Monomial) -> bool:
        if self.monomial_degree(mono) > self.dimension:
            return True
        return any(all(e >= z for e, z in zip(mono, zm)) for zm in self.zero_monomials)

    def element(self, terms: Mapping[Monomial, object]) -> CohomologyClass:
        return CohomologyClass(self, terms)

    def zero(self) -> CohomologyClass:
        return CohomologyClass(self, {})

    def one(self) -> CohomologyClass:
        return self.constant(1)

    def constant(self, value) -> CohomologyClass:
        return CohomologyClass(self, {(0,) * len(self.generators): value})

    def gen(self, name: str) -> CohomologyClass:
        try:
            idx = self.names.index(name)
        except ValueError:
            raise KeyError(f"unknown generator {name!r}") from None
        mono = tuple(1 if i == idx else 0 for i in range(len(self.generators)))
        return CohomologyClass(self, {mono: 1})

    def has_integral(self) -> bool:
        return bool(self.integral)


class CohomologyClass:
    """An element of a CohomologyModel; products are reduced eagerly."""

    __slots__ = ("model", "_terms")

    def __init__(self, model: CohomologyModel, terms: Mapping[Monomial, object]):
        self.model = model
        clean: dict[Monomial, Fraction] = {}
        for mono, coeff in terms.items():
            mono = tuple(mono)
            if model.reduces_to_zero(mono):
                continue
            q = as_fraction(coeff)
            if q:
                clean[mono] = clean.get(mono, Fraction(0)) + q
        self._terms = {m: c for m, c in clean.items() if c}

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def coefficient(self, mono: Monomial) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> list[int]:
        return sorted({self.model.monomial_degree(m) for m in self._terms})

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = self.degrees()
        if degree is None:
            return len(degs) <= 1
        return degs in ([], [degree])

    def component(self, k: int) -> CohomologyClass:
        return CohomologyClass(
            self.model, {m: c for m, c in self._terms.items() if self.model.monomial_degree(m) == k}
        )

    def components(self) -> list[CohomologyClass]:
        return [self.component(k) for k in range(self.model.dimension + 1)]

    def constant_part(self) -> Fraction:
        return self.coefficient((0,) * len(self.model.generators))

    def _coerce(self, other) -> CohomologyClass:
        if isinstance(other, CohomologyClass):
            if other.model is not self.model:
                raise ValueError("classes live in different cohomology models")
            return other
        return self.model.constant(as_fraction(other))

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, Fraction(0)) + c
        return CohomologyClass(self.model, terms)

    __radd__ = __add__

    def __neg__(self):
        return CohomologyClass(self.model, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, CohomologyClass):
            try:
                q = as_fraction(other)
            except TypeError:
                return NotImplemented
            return CohomologyClass(self.model, {m: c * q for m, c in self._terms.items()})
        other = self._coerce(other)
        terms: dict[Monomial, Fraction] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                key = tuple(x + y for x, y in zip(a, b))
                if self.model.reduces_to_zero(key):
                    continue
                terms[key] = terms.get(key, Fraction(0)) + ca * cb
        return CohomologyClass(self.model, terms)

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = as_fraction(other)
        if not q:
            raise ZeroDivisionError("division by zero scalar")
        return self * (1 / q)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            raise TypeError("integer exponents only")
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.model.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse(self) -> CohomologyClass:
        """Multiplicative inverse; needs a nonzero constant part."""
        c0 = self.constant_part()
        if not c0:
            raise ZeroDivisionError("class without constant part is not invertible")
        normalized = (self * (1 / c0)).components()
        inv = graded_inverse(normalized, self.model.dimension, self.model.zero())
        return sum(inv, self.model.zero()) * (1 / c0)

    def __eq__(self, other):
        if isinstance(other, CohomologyClass):
            return self.model is other.model and self._terms == other._terms
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((id(self.model), frozenset(self._terms.items())))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        names = self.model.names

        def key(m):
            return (self.model.monomial_degree(m), tuple(-e for e in m))

        out = []
        for i, mono in enumerate(sorted(self._terms, key=key)):
            c = self._terms[mono]
            factors = [n if e == 1 else f"{n}^{e}" for n, e in zip(names, mono) if e]
            mono_text = "*".join(factors)
            mag = abs(c)
            if not mono_text:
                body = format_rational(mag)
            elif mag == 1:
                body = mono_text
            else:
                body = f"{format_rational(mag)}*{mono_text}"
            if i == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append(("- " if c < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"CohomologyClass({self})"


def integrate(cls: CohomologyClass, space=None, allow_lower: bool = False) -> Fraction:
    """Exact value of a top-degree class under the model's fundamental class.

    ``space`` may be a PolarizedSpace or a CohomologyModel and defaults to the
    class's own model.  Classes whose degree is not the dimension are refused
    unless ``allow_lower`` is set, in which case only their top part counts.
    """
    model = getattr(space, "model", space) or cls.model
    if cls.model is not model:
        raise ValueError("class does not belong to this space")
    if not model.has_integral():
        raise ValueError("model has no integration functional")
    if not cls.is_homogeneous(model.dimension):
        if not allow_lower:
            raise ValueError(
                f"integrate expects degree {model.dimension}, got degrees {cls.degrees()}"
            )
        cls = cls.component(model.dimension)
    total = Fraction(0)
    for mono, coeff in cls._terms.items():
        if mono not in model.integral:
            raise ValueError(f"integral is undefined on monomial {mono}")
        total += coeff * model.integral[mono]
    return total
