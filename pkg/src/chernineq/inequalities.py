"""Evaluators for the Chern class and Chern number inequalities.

Class-level nonnegativity (containing a nonnegative (k,k)-form) cannot be
decided from cohomology data, so every class inequality is checked through
its integral against powers of the polarization L.  ``equality`` is exact
zero of that pairing; the note records whether the class itself vanishes in
the model ring or only its pairing does.

All evaluators take a PolarizedSpace.  The Kahler class in the
Euler-number chain is instantiated as L.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

from .chern_algebra import schur, segre_of_twist
from .partitions import enumerate_gamma
from .rational import as_fraction, format_rational, parse_rational
from .varieties.ring import CohomologyClass
from .varieties.spaces import (
    FormalBundle,
    PolarizedSpace,
    bundle_direct_sum,
    bundle_dual,
    bundle_tensor_line,
    segre_classes,
    tangent_bundle,
    trivial_bundle,
)

__all__ = [
    "HypothesisError",
    "VerificationReport",
    "sharp_family_class",
    "verify_sharp_family",
    "verify_k2_equality_case",
    "verify_calabi_yau",
    "gauss_dual_bundle",
    "gauss_quotient_chern",
    "verify_chern_number_inequality",
    "verify_reverse_my",
    "verify_cor18",
    "cor18_parameters",
    "verify_euler_chain",
    "verify_dps_schur",
    "verify_all",
    "THEOREMS",
]

GEQ = ">="
LEQ = "<="


class HypothesisError(ValueError):
    """A theorem's positivity hypothesis is not asserted for the input."""


@dataclass(frozen=True)
class VerificationReport:
    space: str
    theorem: str
    lhs: Fraction
    rhs: Fraction
    relation: str
    params: dict = field(default_factory=dict)
    note: str = ""

    def __post_init__(self):
        if self.relation not in (GEQ, LEQ):
            raise ValueError(f"relation must be {GEQ!r} or {LEQ!r}")
        object.__setattr__(self, "lhs", as_fraction(self.lhs))
        object.__setattr__(self, "rhs", as_fraction(self.rhs))
        object.__setattr__(self, "params", {k: str(v) for k, v in self.params.items()})

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs if self.relation == GEQ else self.lhs <= self.rhs

    @property
    def equality(self) -> bool:
        return self.lhs == self.rhs

    @property
    def k(self) -> str:
        return self.params.get("k", "")

    def sort_key(self):
        return (self.space, self.theorem, sorted(self.params.items()))

    def to_json(self) -> dict:
        return {
            "space": self.space,
            "theorem": self.theorem,
            "params": dict(sorted(self.params.items())),
            "lhs": format_rational(self.lhs),
            "relation": self.relation,
            "rhs": format_rational(self.rhs),
            "holds": self.holds,
            "equality": self.equality,
            "note": self.note,
        }

    @classmethod
    def from_json(cls, data: dict) -> VerificationReport:
        report = cls(
            space=data["space"],
            theorem=data["theorem"],
            lhs=parse_rational(data["lhs"]),
            rhs=parse_rational(data["rhs"]),
            relation=data["relation"],
            params=dict(data.get("params", {})),
            note=data.get("note", ""),
        )
        if "holds" in data and data["holds"] != report.holds:
            raise ValueError("serialized 'holds' disagrees with lhs/rhs")
        if "equality" in data and data["equality"] != report.equality:
            raise ValueError("serialized 'equality' disagrees with lhs/rhs")
        return report

    def __str__(self) -> str:
        params = " ".join(f"{k}={v}" for k, v in sorted(self.params.items()))
        verdict = "equality" if self.equality else ("holds" if self.holds else "VIOLATED")
        text = (
            f"{self.space:<20} {self.theorem:<16} {params:<18} "
            f"{format_rational(self.lhs)} {self.relation} {format_rational(self.rhs)}  [{verdict}]"
        )
        if self.note:
            text += f"  {self.note}"
        return text


def _require_very_ample(space: PolarizedSpace):
    if not space.very_ample:
        raise HypothesisError(f"{space.name}: very ampleness of L is not asserted")


def _require_n(space: PolarizedSpace, minimum: int):
    if space.n < minimum:
        raise ValueError(f"{space.name}: needs dimension >= {minimum}, got {space.n}")


def _zero_note(cls: CohomologyClass, pairing: Fraction) -> str:
    if pairing != 0:
        return ""
    if cls.is_zero():
        return "class vanishes in the model ring"
    return "pairing vanishes but the class is nonzero in the model ring (integral-level equality only)"


# the sharp family c_k(gamma^* Q)

def _sharp_by_formula(space: PolarizedSpace, k: int) -> CohomologyClass:
    s = segre_classes(space)
    L = space.L
    total = space.model.zero()
    for i in range(k + 1):
        total = total + s[i] * L ** (k - i) * ((-1) ** i * comb(space.n + k, k - i))
    return total


def _gauss_segre_bundle(space: PolarizedSpace) -> FormalBundle:
    """(C + T*M) (x) L, the K-theory class of gamma^*(S^*)."""
    base = bundle_direct_sum(trivial_bundle(space.model, 1), bundle_dual(tangent_bundle(space)))
    return bundle_tensor_line(base, space.L)


def sharp_family_class(space: PolarizedSpace, k: int) -> CohomologyClass:
    """sum_i (-1)^i C(n+k, k-i) s_i(M) L^{k-i}, cross-checked two ways.

    The class also equals s_k((C + T*M) (x) L): once with that bundle's
    Chern classes twisted by L and inverted, and once through the binomial
    twist formula for Segre classes of the rank n+1 bundle C + T*M.
    """
    _require_very_ample(space)
    if not 1 <= k <= space.n:
        raise ValueError(f"k must lie in [1, {space.n}], got {k}")
    by_formula = _sharp_by_formula(space, k)
    twisted = _gauss_segre_bundle(space)
    by_bundle = segre_classes(twisted)[k]
    base = bundle_direct_sum(trivial_bundle(space.model, 1), bundle_dual(tangent_bundle(space)))
    by_twist = segre_of_twist(segre_classes(base), space.L, k, space.n + 1)
    if not (by_formula == by_bundle == by_twist):
        raise RuntimeError(f"{space.name}: sharp-family routes disagree at k={k}")
    return by_formula


def verify_sharp_family(space: PolarizedSpace, k: int) -> VerificationReport:
    cls = sharp_family_class(space, k)
    value = space.pair(cls, k)
    notes = []
    z = _zero_note(cls, value)
    if z:
        notes.append(z)
    N = space.embedding_dim
    if N is not None and k > min(space.n, N - space.n):
        if cls.is_zero():
            notes.append(f"k > min(n, N-n) = {min(space.n, N - space.n)} forces zero")
        else:
            notes.append(f"INCONSISTENT: k > min(n, N-n) = {min(space.n, N - space.n)} but class is nonzero")
    return VerificationReport(space.name, "sharp", value, Fraction(0), GEQ, {"k": k}, "; ".join(notes))


def _classify_equality(space: PolarizedSpace) -> tuple[str, bool]:
    degree = space.degree()
    N = space.embedding_dim
    n = space.n
    if degree == 1:
        label = "projective space"
        consistent = N is None or N == n
    else:
        label = f"hypersurface, degree L^n = {format_rational(degree)}"
        consistent = N is None or N == n + 1
    if N is None:
        label += " (catalog lacks N)"
    return label, consistent


def verify_k2_equality_case(space: PolarizedSpace) -> VerificationReport:
    """The k = 2 member; equality characterizes P^n and hypersurfaces."""
    _require_very_ample(space)
    _require_n(space, 2)
    n, L = space.n, space.L
    c1, c2 = space.chern_class(1), space.chern_class(2)
    cls = L * L * Fraction((n + 2) * (n + 1), 2) - L * c1 * (n + 2) + c1 * c1 - c2
    if cls != sharp_family_class(space, 2):
        raise RuntimeError(f"{space.name}: k=2 class disagrees with the sharp family")
    value = space.pair(cls, 2)
    N = space.embedding_dim
    if value == 0:
        label, consistent = _classify_equality(space)
        note = f"classified: {label}"
        if not consistent:
            note += f"; INCONSISTENT with catalog N={N}"
        z = _zero_note(cls, value)
        if z:
            note += f"; {z}"
    else:
        note = "strict"
        if N is not None:
            note += f"; N-n = {N - n}"
            if N - n <= 1:
                note += " (INCONSISTENT: strict inequality but N-n <= 1)"
    return VerificationReport(space.name, "k2-equality", value, Fraction(0), GEQ, {"k": 2}, note)


def verify_calabi_yau(space: PolarizedSpace) -> list[VerificationReport]:
    _require_very_ample(space)
    _require_n(space, 2)
    if not space.is_calabi_yau():
        raise ValueError(f"{space.name}: c_1 is not zero in the model")
    n, L = space.n, space.L
    c2, c3 = space.chern_class(2), space.chern_class(3)
    first = L * L * Fraction((n + 2) * (n + 1), 2) - c2
    if first != sharp_family_class(space, 2):
        raise RuntimeError("Calabi-Yau k=2 form disagrees with the sharp family")
    v1 = space.pair(first, 2)
    note = ""
    if v1 == 0:
        degree = space.degree()
        N = space.embedding_dim
        ok = degree == n + 2 and (N is None or N == n + 1)
        note = f"equality: hypersurface of degree L^n = {format_rational(degree)} (expected n+2 = {n + 2})"
        if not ok:
            note += "; INCONSISTENT"
    reports = [VerificationReport(space.name, "calabi-yau", v1, Fraction(0), GEQ, {"k": 2}, note)]
    if n >= 3:
        second = L ** 3 * Fraction((n + 3) * (n + 2) * (n + 1), 6) - L * c2 * (n + 3) - c3
        if second != sharp_family_class(space, 3):
            raise RuntimeError("Calabi-Yau k=3 form disagrees with the sharp family")
        v2 = space.pair(second, 3)
        reports.append(
            VerificationReport(space.name, "calabi-yau", v2, Fraction(0), GEQ, {"k": 3}, _zero_note(second, v2))
        )
    return reports


# the Gauss bundle gamma^*(S^*)

def gauss_dual_bundle(space: PolarizedSpace) -> FormalBundle:
    """gamma^*(S^*) with c = (1 + L) c(T*M (x) L), rank n + 1."""
    _require_very_ample(space)
    n, L = space.n, space.L
    twisted = bundle_tensor_line(bundle_dual(tangent_bundle(space)), L)
    total = (1 + L) * twisted.total_chern
    bundle = FormalBundle(n + 1, total, nef=True, name=f"gamma*S*({space.name})")
    c1, c2 = space.chern_class(1), space.chern_class(2)
    if bundle.chern_class(1) != -c1 + L * (n + 1):
        raise RuntimeError("c_1 of the Gauss bundle disagrees with -c_1 + (n+1)L")
    if bundle.chern_class(2) != L * L * Fraction(n * (n + 1), 2) - c1 * L * n + c2:
        raise RuntimeError("c_2 of the Gauss bundle disagrees with the closed form")
    if not bundle.same_classes(_gauss_segre_bundle(space)):
        raise RuntimeError("exact-sequence and tensor routes disagree on the Gauss bundle")
    return bundle


def gauss_quotient_chern(space: PolarizedSpace) -> CohomologyClass:
    """c(gamma^* Q) = c(gamma^* S)^{-1} = s(gamma^* S^*)."""
    return sum(segre_classes(gauss_dual_bundle(space)), space.model.zero())


def verify_chern_number_inequality(space: PolarizedSpace) -> VerificationReport:
    _require_very_ample(space)
    _require_n(space, 2)
    n, L = space.n, space.L
    c1, c2 = space.chern_class(1), space.chern_class(2)
    g1 = -c1 + L * (n + 1)
    g2 = L * L * Fraction(n * (n + 1), 2) - c1 * L * n + c2
    gauss = gauss_dual_bundle(space)
    assert gauss.chern_class(1) == g1 and gauss.chern_class(2) == g2
    lhs = space.integrate(g2 * g1 ** (n - 2))
    rhs = space.integrate(g1 ** n)
    note = "degree-0 pairing (n = 2: empty power of c_1(gamma*S*))" if n == 2 else ""
    return VerificationReport(space.name, "chern-number", lhs, rhs, LEQ, {}, note)


def verify_reverse_my(space: PolarizedSpace) -> list[VerificationReport]:
    """The reverse Miyaoka-Yau pair.

    The first inequality needs L ample and globally generated (very ample
    suffices); the second is evaluated only when K_M is asserted ample and
    globally generated.
    """
    _require_n(space, 2)
    if not (space.very_ample or space.canonical_ample_gg):
        raise HypothesisError(f"{space.name}: neither L very ample nor K ample+g.g. is asserted")
    n, L = space.n, space.L
    c1, c2 = space.chern_class(1), space.chern_class(2)
    reports = []
    if space.very_ample:
        base = -c1 + L * (n + 1)
        lhs = space.integrate((c1 * c1 * (-n) + c2 * (2 * (n + 1))) * base ** (n - 2))
        rhs = space.integrate(base ** n) * (n + 2) ** 3
        reports.append(VerificationReport(space.name, "reverse-my", lhs, rhs, LEQ, {"form": "L"}))
    if space.canonical_ample_gg:
        K = -c1
        lhs = space.integrate(c2 * K ** (n - 2))
        rhs = space.integrate(K ** n) * Fraction((n + 2) ** 5 + n, 2 * (n + 1))
        reports.append(VerificationReport(space.name, "reverse-my", lhs, rhs, LEQ, {"form": "K"}))
    return reports


def cor18_parameters(space: PolarizedSpace) -> tuple[Fraction, int] | None:
    """(a, eps) with L = eps * a * c_1 and a > 0, when L is proportional to c_1."""
    c1 = space.chern_class(1)
    if c1.is_zero():
        return None
    mono, coeff = next(iter(c1.terms.items()))
    t = space.L.coefficient(mono) / coeff
    if t == 0 or space.L != c1 * t:
        return None
    return (abs(t), 1 if t > 0 else -1)


def verify_cor18(space: PolarizedSpace, a, eps: int) -> VerificationReport:
    """[C(n+2,2) a^2 - eps (n+2) a + 1] (eps c_1)^n >= c_2 (eps c_1)^{n-2}.

    Here a > 0 and L = eps * a * c_1: eps = -1 means L = a K_M, eps = +1
    means L = a c_1.  Equality forces 1/a = eps (n + 2 - L^n).
    """
    _require_very_ample(space)
    _require_n(space, 2)
    a = as_fraction(a)
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if a <= 0:
        raise ValueError("a must be a positive rational")
    n = space.n
    c1, c2 = space.chern_class(1), space.chern_class(2)
    if space.L != c1 * (eps * a):
        raise ValueError(f"{space.name}: polarization is not {format_rational(eps * a)} * c_1")
    coefficient = Fraction((n + 2) * (n + 1), 2) * a * a - eps * (n + 2) * a + 1
    e1 = c1 * eps
    lhs = coefficient * space.integrate(e1 ** n)
    rhs = space.integrate(c2 * e1 ** (n - 2))
    notes = [f"coefficient {format_rational(coefficient)}"]
    if eps == -1 and a == 1:
        special = Fraction(n * n + 5 * n + 8, 2)
        assert special == coefficient
        notes.append(f"very ample K form, coefficient (n^2+5n+8)/2 = {format_rational(special)}")
    if lhs == rhs:
        degree = space.degree()
        predicted = eps * (n + 2 - degree)
        ok = predicted != 0 and 1 / a == predicted
        N = space.embedding_dim
        if degree != 1:
            ok = ok and (N is None or N == n + 1)
        notes.append(
            f"equality: 1/a = {format_rational(1 / a)}, eps(n+2-L^n) = {format_rational(predicted)}"
            + ("" if ok else "; INCONSISTENT")
        )
        if eps == -1 and a == 1:
            notes.append(f"degree L^n = {format_rational(degree)} (n+3 = {n + 3})")
    params = {"a": format_rational(a), "eps": eps}
    return VerificationReport(space.name, "cor18", lhs, rhs, GEQ, params, "; ".join(notes))


# nef bundles

def _bundle_for(space: PolarizedSpace, bundle: FormalBundle | None) -> FormalBundle:
    bundle = tangent_bundle(space) if bundle is None else bundle
    if bundle.model is not space.model:
        raise ValueError("bundle does not live on this space")
    if not bundle.nef:
        raise HypothesisError(f"hypothesis not asserted: {bundle.name or 'bundle'} is not flagged nef")
    return bundle


def verify_euler_chain(space: PolarizedSpace, bundle: FormalBundle | None = None) -> list[VerificationReport]:
    """For 1 <= k <= n and lambda in Gamma(k, r): int c_lambda L^{n-k} >= int c_k L^{n-k} >= 0."""
    bundle = _bundle_for(space, bundle)
    r = bundle.rank
    c = [bundle.chern_class(i) for i in range(r + 1)]
    name = bundle.name or "E"
    reports = []
    for k in range(1, space.n + 1):
        if r == 0:
            break
        euler = space.pair(bundle.chern_class(k), k)
        reports.append(
            VerificationReport(space.name, "euler-chain", euler, Fraction(0), GEQ,
                               {"bundle": name, "k": k, "lambda": k}, "lower bound c_k >= 0")
        )
        for lam in enumerate_gamma(k, r):
            if lam.parts == (k,):
                continue
            value = space.pair(prod((c[p] for p in lam.parts), start=space.model.one()), k)
            reports.append(
                VerificationReport(space.name, "euler-chain", value, euler, GEQ,
                                   {"bundle": name, "k": k, "lambda": str(lam)})
            )
    return reports


def verify_dps_schur(space: PolarizedSpace, bundle: FormalBundle | None = None) -> list[VerificationReport]:
    """int S_lambda(c(E)) L^{n-k} >= 0 for every lambda in Gamma(k, r), k <= n."""
    bundle = _bundle_for(space, bundle)
    r = bundle.rank
    name = bundle.name or "E"
    reports = []
    if r == 0:
        return reports
    classes = bundle.chern_classes()
    for k in range(1, space.n + 1):
        for lam in enumerate_gamma(k, r):
            cls = schur(lam, r).evaluate(classes, space.model.one())
            value = space.pair(cls, k)
            reports.append(
                VerificationReport(space.name, "dps-schur", value, Fraction(0), GEQ,
                                   {"bundle": name, "k": k, "lambda": str(lam)})
            )
    return reports


THEOREMS = ("sharp", "k2-equality", "calabi-yau", "chern-number", "reverse-my",
            "cor18", "euler-chain", "dps-schur")


def verify_all(space: PolarizedSpace) -> list[VerificationReport]:
    """Every evaluator whose hypotheses the space asserts, canonically ordered."""
    reports: list[VerificationReport] = []
    if space.very_ample:
        for k in range(1, space.n + 1):
            reports.append(verify_sharp_family(space, k))
        if space.n >= 2:
            reports.append(verify_k2_equality_case(space))
            reports.append(verify_chern_number_inequality(space))
            if space.is_calabi_yau():
                reports.extend(verify_calabi_yau(space))
            params = cor18_parameters(space)
            if params is not None:
                reports.append(verify_cor18(space, *params))
    if space.n >= 2 and (space.very_ample or space.canonical_ample_gg):
        reports.extend(verify_reverse_my(space))
    if space.tangent_nef:
        reports.extend(verify_euler_chain(space))
        reports.extend(verify_dps_schur(space))
    return sorted(reports, key=VerificationReport.sort_key)
