"""Polarized spaces, formal bundles over them, and the concrete families.

Hypersurface and complete-intersection models only carry the subring
generated by the restricted hyperplane class h.  Every class the inequality
evaluators touch (Chern classes of TM by adjunction, powers of L) lives in
that subring, so top-degree integrals are exact even when the full middle
cohomology is larger.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod
from typing import Sequence

from ..chern_algebra import chern_of_twist, graded_inverse
from ..partitions import Partition, enumerate_gamma
from .ring import CohomologyClass, CohomologyModel, integrate

__all__ = [
    "PolarizedSpace",
    "FormalBundle",
    "projective_space",
    "hypersurface",
    "complete_intersection",
    "product",
    "tangent_bundle",
    "trivial_bundle",
    "line_bundle",
    "bundle_dual",
    "bundle_direct_sum",
    "bundle_tensor_line",
    "segre_classes",
    "chern_numbers",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PolarizedSpace:
    """A cohomology model with c(TM), a polarization L and asserted flags.

    ``very_ample``, ``tangent_nef`` and ``canonical_ample_gg`` are catalog
    assertions with provenance in ``notes``; nothing here infers positivity.
    ``embedding_dim`` is N of the Kodaira map of L (N + 1 = h^0(L)).
    """

    name: str
    model: CohomologyModel
    tangent_chern: CohomologyClass
    polarization: CohomologyClass
    embedding_dim: int | None = None
    very_ample: bool = False
    tangent_nef: bool = False
    canonical_ample_gg: bool = False
    notes: str = ""
    family: str = "custom"
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        for label, cls in (("tangent_chern", self.tangent_chern), ("polarization", self.polarization)):
            if cls.model is not self.model:
                raise ValueError(f"{label} does not belong to the space's model")
        if self.tangent_chern.component(0) != 1:
            raise ValueError("tangent Chern class must have unit part 1")
        if self.polarization.is_zero() or not self.polarization.is_homogeneous(1):
            raise ValueError("polarization must be a nonzero degree-1 class")
        if not self.model.has_integral():
            raise ValueError("a polarized space needs an integration functional")
        if self.very_ample and integrate(self.polarization ** self.n, self.model) <= 0:
            raise ValueError("very ample polarization must have positive degree")
        if self.embedding_dim is not None and self.embedding_dim < self.n:
            raise ValueError("embedding dimension below the space dimension")

    @property
    def n(self) -> int:
        return self.model.dimension

    @property
    def L(self) -> CohomologyClass:
        return self.polarization

    def chern_class(self, i: int) -> CohomologyClass:
        if i < 0 or i > self.n:
            return self.model.zero()
        return self.tangent_chern.component(i)

    @property
    def canonical_class(self) -> CohomologyClass:
        return -self.chern_class(1)

    def degree(self) -> Fraction:
        """The polarization degree, the integral of L^n."""
        return integrate(self.L ** self.n, self.model)

    def is_calabi_yau(self) -> bool:
        return self.chern_class(1).is_zero()

    def integrate(self, cls: CohomologyClass) -> Fraction:
        return integrate(cls, self.model)

    def pair(self, cls: CohomologyClass, k: int) -> Fraction:
        """Integral of a degree-k class against L^{n-k}."""
        return integrate(cls * self.L ** (self.n - k), self.model)


@dataclass(frozen=True, eq=False)
class FormalBundle:
    rank: int
    total_chern: CohomologyClass
    nef: bool = False
    name: str = ""

    def __post_init__(self):
        if self.rank < 0:
            raise ValueError("rank must be nonnegative")
        if self.total_chern.component(0) != 1:
            raise ValueError("total Chern class must have unit part 1")
        for k in self.total_chern.degrees():
            if k > self.rank:
                raise ValueError(f"Chern class in degree {k} exceeds rank {self.rank}")

    @property
    def model(self) -> CohomologyModel:
        return self.total_chern.model

    def chern_class(self, i: int) -> CohomologyClass:
        if i < 0 or i > self.rank:
            return self.model.zero()
        return self.total_chern.component(i)

    def chern_classes(self) -> list[CohomologyClass]:
        """c_1..c_rank."""
        return [self.chern_class(i) for i in range(1, self.rank + 1)]

    def same_classes(self, other: FormalBundle) -> bool:
        return self.rank == other.rank and self.total_chern == other.total_chern


def tangent_bundle(space: PolarizedSpace) -> FormalBundle:
    return FormalBundle(space.n, space.tangent_chern, nef=space.tangent_nef, name=f"T({space.name})")


def trivial_bundle(model: CohomologyModel, rank: int) -> FormalBundle:
    return FormalBundle(rank, model.one(), nef=True, name=f"trivial^{rank}")


def line_bundle(cls: CohomologyClass, nef: bool = False) -> FormalBundle:
    if not cls.is_homogeneous(1):
        raise ValueError("a line bundle's first Chern class has degree 1")
    return FormalBundle(1, cls.model.one() + cls, nef=nef)


def bundle_dual(b: FormalBundle) -> FormalBundle:
    comps = b.total_chern.components()
    total = sum((c * (-1) ** i for i, c in enumerate(comps)), b.model.zero())
    return FormalBundle(b.rank, total, name=f"({b.name})*" if b.name else "")


def bundle_direct_sum(a: FormalBundle, b: FormalBundle) -> FormalBundle:
    nef = a.nef and b.nef
    name = f"{a.name}+{b.name}" if a.name and b.name else ""
    return FormalBundle(a.rank + b.rank, a.total_chern * b.total_chern, nef=nef, name=name)


def bundle_tensor_line(b: FormalBundle, line: CohomologyClass) -> FormalBundle:
    """E (x) L via c(E (x) L) = sum_i c_i(E) (1 + L)^{r - i}."""
    if not line.is_homogeneous(1):
        raise ValueError("twisting class must have degree 1")
    if b.rank == 0:
        return b
    chern = b.total_chern.components()[: b.rank + 1]
    return FormalBundle(b.rank, chern_of_twist(chern, line, b.rank))


def segre_classes(obj) -> list[CohomologyClass]:
    """s_0..s_n of s(E) = c(E*)^{-1}; a space means its tangent bundle."""
    bundle = tangent_bundle(obj) if isinstance(obj, PolarizedSpace) else obj
    dual = bundle_dual(bundle).total_chern.components()
    return graded_inverse(dual, bundle.model.dimension, bundle.model.zero())


def chern_numbers(space: PolarizedSpace) -> dict[Partition, Fraction]:
    """Integrals of c_lambda(TM) over Gamma(n, n)."""
    c = [space.chern_class(i) for i in range(space.n + 1)]
    out = {}
    for lam in enumerate_gamma(space.n, space.n):
        value = integrate(prod((c[p] for p in lam.parts), start=space.model.one()), space.model)
        if value.denominator != 1:
            log.warning("non-integral Chern number %s for %s on %s", value, lam, space.name)
        out[lam] = value
    return out


def _single_generator_model(n: int, degree: int) -> CohomologyModel:
    return CohomologyModel(
        dimension=n,
        generators=(("h", 1),),
        zero_monomials=((n + 1,),),
        integral={(n,): degree},
    )


def projective_space(n: int) -> PolarizedSpace:
    if n < 1:
        raise ValueError("projective space needs n >= 1")
    model = _single_generator_model(n, 1)
    h = model.gen("h")
    return PolarizedSpace(
        name=f"P{n}",
        model=model,
        tangent_chern=(1 + h) ** (n + 1),
        polarization=h,
        embedding_dim=n,
        very_ample=True,
        tangent_nef=True,
        canonical_ample_gg=False,
        notes="L = O(1); T(P^n) globally generated (Euler sequence)",
        family="projective_space",
    )


def complete_intersection(n: int, degrees: Sequence[int], name: str | None = None) -> PolarizedSpace:
    """Smooth complete intersection of the given degrees, L = O(1) restricted.

    Linear equations just cut the ambient space down, so N = n + (number of
    degrees >= 2); with all degrees 1 this is P^n itself.
    """
    degrees = tuple(int(d) for d in degrees)
    if n < 1:
        raise ValueError("dimension must be at least 1")
    if not degrees or any(d < 1 for d in degrees):
        raise ValueError("degrees must be positive integers")
    codim = len(degrees)
    deg = prod(degrees)
    model = _single_generator_model(n, deg)
    h = model.gen("h")
    tangent = (1 + h) ** (n + codim + 1)
    for d in degrees:
        tangent = tangent * (1 + d * h) ** -1
    canonical_multiple = sum(degrees) - (n + codim + 1)
    nontrivial = sum(1 for d in degrees if d >= 2)
    quadric = sorted(degrees, reverse=True)[0] == 2 and nontrivial == 1
    notes = ["L = O(1) restricted"]
    if nontrivial == 0:
        notes.append("linear: this is P^n")
    if quadric:
        notes.append("smooth quadric: homogeneous, tangent bundle globally generated")
    if canonical_multiple >= 1:
        notes.append(f"K = O({canonical_multiple}) is very ample")
    family = "hypersurface" if codim == 1 else "complete_intersection"
    if name is None:
        name = (
            f"hypersurface:{n},{degrees[0]}"
            if codim == 1
            else f"ci:{n}:{','.join(map(str, degrees))}"
        )
    return PolarizedSpace(
        name=name,
        model=model,
        tangent_chern=tangent,
        polarization=h,
        embedding_dim=n + nontrivial,
        very_ample=True,
        tangent_nef=nontrivial == 0 or quadric,
        canonical_ample_gg=canonical_multiple >= 1,
        notes="; ".join(notes),
        family=family,
        degrees=degrees,
    )


def hypersurface(n: int, d: int, name: str | None = None) -> PolarizedSpace:
    return complete_intersection(n, [d], name=name)


def product(spaces: Sequence[PolarizedSpace], degrees: Sequence[int], name: str | None = None) -> PolarizedSpace:
    """Kunneth product with polarization sum_i d_i L_i.

    N is filled in only when every factor is a projective space, where
    h^0 of O(d_1, ..., d_k) is a product of binomials.
    """
    spaces = list(spaces)
    degrees = [int(d) for d in degrees]
    if len(spaces) < 2:
        raise ValueError("a product needs at least two factors")
    if len(degrees) != len(spaces):
        raise ValueError("one polarization degree per factor")
    if any(d < 1 for d in degrees):
        raise ValueError("polarization degrees must be positive")

    gens = []
    offsets = []
    for idx, s in enumerate(spaces, start=1):
        offsets.append(len(gens))
        gens.extend((f"{g}{idx}", d) for g, d in s.model.generators)
    width = len(gens)

    def lift_mono(idx, mono):
        out = [0] * width
        out[offsets[idx]: offsets[idx] + len(mono)] = mono
        return tuple(out)

    zeros = [lift_mono(i, z) for i, s in enumerate(spaces) for z in s.model.zero_monomials]
    table = {(): Fraction(1)}
    for i, s in enumerate(spaces):
        nxt = {}
        for mono, val in table.items():
            for top, v in s.model.integral.items():
                nxt[mono + top] = val * v
        table = nxt
    dim = sum(s.n for s in spaces)
    model = CohomologyModel(dim, tuple(gens), tuple(zeros), table)

    def lift(i, cls):
        return model.element({lift_mono(i, m): c for m, c in cls.terms.items()})

    tangent = model.one()
    polarization = model.zero()
    for i, s in enumerate(spaces):
        tangent = tangent * lift(i, s.tangent_chern)
        polarization = polarization + lift(i, s.polarization) * degrees[i]

    if all(s.family == "projective_space" for s in spaces):
        embedding = prod(comb(s.n + d, d) for s, d in zip(spaces, degrees)) - 1
    else:
        embedding = None
    if name is None:
        name = "x".join(s.name for s in spaces) + "(" + ",".join(map(str, degrees)) + ")"
    return PolarizedSpace(
        name=name,
        model=model,
        tangent_chern=tangent,
        polarization=polarization,
        embedding_dim=embedding,
        very_ample=all(s.very_ample for s in spaces),
        tangent_nef=all(s.tangent_nef for s in spaces),
        canonical_ample_gg=all(s.canonical_ample_gg for s in spaces),
        notes="Segre-Veronese polarization; factors: " + ", ".join(s.name for s in spaces),
        family="product",
        degrees=tuple(degrees),
    )
