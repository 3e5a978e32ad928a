from fractions import Fraction
from math import comb, prod

import pytest
from hypothesis import given, settings, strategies as st

from chernineq.partitions import Partition, enumerate_gamma
from chernineq.varieties import (
    CATALOG,
    CohomologyModel,
    FormalBundle,
    PolarizedSpace,
    SelectorError,
    bundle_direct_sum,
    bundle_dual,
    bundle_tensor_line,
    chern_numbers,
    complete_intersection,
    get_space,
    hypersurface,
    integrate,
    line_bundle,
    product,
    projective_space,
    resolve_space,
    segre_classes,
    tangent_bundle,
    trivial_bundle,
)

import oracles

P = Partition.of

# Frozen from the sympy adjunction / Kunneth oracles in oracles.py.
FROZEN_CHERN_NUMBERS = {
    "P2": {(2,): 3, (1, 1): 9},
    "P3": {(3,): 4, (2, 1): 24, (1, 1, 1): 64},
    "quintic_threefold": {(3,): -200, (2, 1): 0, (1, 1, 1): 0},
    "quintic_surface": {(2,): 55, (1, 1): 5},
    "quartic_del_pezzo": {(2,): 8, (1, 1): 4},
    "bicubic_cy3": {(3,): -144, (2, 1): 0, (1, 1, 1): 0},
    "septic_threefold": {(3,): -1106, (2, 1): -336, (1, 1, 1): -56},
    "sextic_fourfold": {(4,): 2610, (3, 1): 0, (2, 2): 1350, (2, 1, 1): 0, (1, 1, 1, 1): 0},
    "P1xP1": {(2,): 4, (1, 1): 8},
}


def numbers(space):
    return {lam.parts: v for lam, v in chern_numbers(space).items()}


@pytest.mark.parametrize("name", sorted(FROZEN_CHERN_NUMBERS))
def test_frozen_chern_numbers(name):
    assert numbers(get_space(name)) == FROZEN_CHERN_NUMBERS[name]


@pytest.mark.parametrize("n,degrees", [(1, [3]), (2, [2]), (2, [5]), (3, [5]), (4, [6]), (2, [2, 2]),
                                       (2, [2, 3]), (3, [3, 3]), (3, [2, 4]), (5, [7]), (3, [2, 2])])
def test_complete_intersections_match_adjunction_oracle(n, degrees):
    space = complete_intersection(n, degrees)
    assert numbers(space) == oracles.ci_chern_numbers(n, degrees)
    assert space.degree() == Fraction(prod(degrees))


def test_projective_space_examples():
    p2 = projective_space(2)
    h = p2.model.gen("h")
    assert p2.tangent_chern == 1 + 3 * h + 3 * h * h
    assert p2.embedding_dim == 2 and p2.very_ample and p2.tangent_nef
    for n in range(1, 7):
        pn = projective_space(n)
        assert pn.integrate(pn.chern_class(n)) == n + 1


def test_hypersurface_examples():
    q = hypersurface(3, 5)
    h = q.model.gen("h")
    assert q.chern_class(1).is_zero()
    assert q.chern_class(2) == 10 * h ** 2
    assert q.pair(q.chern_class(2), 2) == 50
    assert q.integrate(q.chern_class(3)) == -200
    assert q.integrate(h ** 3) == 5
    assert q.embedding_dim == 4
    cubic = complete_intersection(1, [3])
    assert cubic.integrate(cubic.chern_class(1)) == 0


@pytest.mark.parametrize("n", range(1, 6))
def test_linear_hypersurface_is_projective_space(n):
    a, b = hypersurface(n, 1), projective_space(n)
    assert numbers(a) == numbers(b)
    assert a.degree() == b.degree() == 1
    assert a.embedding_dim == b.embedding_dim == n


@pytest.mark.parametrize("n,d", [(2, 3), (3, 4), (4, 2)])
def test_single_degree_ci_is_hypersurface(n, d):
    a, b = complete_intersection(n, [d]), hypersurface(n, d)
    assert numbers(a) == numbers(b)
    assert str(a.tangent_chern) == str(b.tangent_chern)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("d", range(1, 11))
def test_hypersurface_k1_class(n, d):
    s = hypersurface(n, d)
    h = s.model.gen("h")
    k1 = s.L * (n + 1) + s.canonical_class
    assert k1 == h * (d - 1)
    assert s.pair(k1, 1) == d * (d - 1)


def test_products():
    pp = get_space("P1xP1")
    assert pp.degree() == 2
    pp12 = get_space("P1xP1_12")
    assert pp12.degree() == 4
    assert numbers(pp12) == {(2,): 4, (1, 1): 8}
    with pytest.raises(ValueError):
        product([projective_space(1)] * 2, [1, 0])
    with pytest.raises(ValueError):
        product([projective_space(1)], [1])


@pytest.mark.parametrize("dims", [[1, 1], [1, 2], [2, 2], [1, 1, 1], [1, 3]])
def test_product_euler_number_and_kunneth(dims):
    space = product([projective_space(d) for d in dims], [1] * len(dims))
    euler = 1
    for d in dims:
        euler *= d + 1
    assert space.integrate(space.chern_class(space.n)) == euler
    gens, caps, c, L, top, n = oracles.projective_product(dims, [1] * len(dims))
    for lam in enumerate_gamma(n, n):
        expr = 1
        for p in lam.parts:
            expr = expr * oracles.graded_part(c, gens, p)
        assert chern_numbers(space)[lam] == oracles.product_integral(expr, caps, top)


def test_segre_examples():
    p2 = projective_space(2)
    h = p2.model.gen("h")
    s = segre_classes(p2)
    assert s[1] == 3 * h and s[2] == 6 * h * h
    triv = segre_classes(trivial_bundle(p2.model, 3))
    assert all(x.is_zero() for x in triv[1:])


@pytest.mark.parametrize("name", list(CATALOG))
def test_catalog_space_invariants(name):
    space = get_space(name)
    s = segre_classes(space)
    c1, c2 = space.chern_class(1), space.chern_class(2)
    assert s[1] == c1
    if space.n >= 2:
        assert s[2] == c1 * c1 - c2
    assert all(v.denominator == 1 for v in chern_numbers(space).values())
    assert space.tangent_chern.component(0) == 1
    assert space.L.is_homogeneous(1)
    if space.very_ample:
        assert space.degree() > 0


def test_integration_rules():
    q = get_space("quintic_threefold")
    h = q.model.gen("h")
    assert integrate(h ** 3, q.model) == 5
    assert integrate(q.model.zero(), q.model) == 0
    assert integrate(h ** 4, q.model) == 0  # truncated away
    with pytest.raises(ValueError):
        integrate(h ** 2, q.model)
    assert integrate(h ** 2, q.model, allow_lower=True) == 0
    assert integrate(projective_space(4).model.gen("h") ** 4) == 1


def test_model_validation():
    bare = CohomologyModel(2, (("h", 1),), (), {})
    with pytest.raises(ValueError):
        PolarizedSpace("no integral", bare, bare.one(), bare.gen("h"))
    model = projective_space(2).model
    h = model.gen("h")
    with pytest.raises(ValueError):
        PolarizedSpace("bad", model, 2 + h, h)
    with pytest.raises(ValueError):
        PolarizedSpace("bad", model, 1 + h, h * h)
    odd = projective_space(3).model
    g = odd.gen("h")
    with pytest.raises(ValueError):
        PolarizedSpace("bad", odd, 1 + g, -g, very_ample=True)
    with pytest.raises(ValueError):
        PolarizedSpace("bad", odd, 1 + g, g, embedding_dim=2)


def test_bundle_examples():
    p3 = projective_space(3)
    T = tangent_bundle(p3)
    assert bundle_dual(bundle_dual(T)).same_classes(T)
    with_trivial = bundle_direct_sum(T, trivial_bundle(p3.model, 1))
    assert with_trivial.total_chern == T.total_chern and with_trivial.rank == 4
    gauss = bundle_tensor_line(bundle_direct_sum(trivial_bundle(p3.model, 1), bundle_dual(T)), p3.L)
    assert gauss.total_chern == p3.model.one()
    assert gauss.rank == 4


def test_tensor_line_matches_line_sums():
    # O(a) + O(b) twisted by O(1) is O(a+1) + O(b+1)
    p3 = projective_space(3)
    h = p3.model.gen("h")
    e = bundle_direct_sum(line_bundle(2 * h), line_bundle(-h))
    twisted = bundle_tensor_line(e, h)
    assert twisted.total_chern == (1 + 3 * h) * (1 + 0 * h)


def test_bundle_validation():
    model = projective_space(3).model
    h = model.gen("h")
    with pytest.raises(ValueError):
        FormalBundle(1, (1 + h) ** 2, name="too big")
    with pytest.raises(ValueError):
        FormalBundle(2, 2 + h)


line_coeffs = st.integers(-4, 4)


@settings(max_examples=60, deadline=None)
@given(st.lists(line_coeffs, min_size=1, max_size=3), st.lists(line_coeffs, min_size=1, max_size=3),
       st.lists(st.integers(-3, 3), min_size=2, max_size=2))
def test_whitney_and_dual_laws(a_lines, b_lines, dual_coeff):
    space = get_space("P1xP2")
    h1, h2 = space.model.gen("h1"), space.model.gen("h2")
    basis = [h1, h2, h1 + h2]

    def split(coeffs):
        bundle = line_bundle(coeffs[0] * basis[0])
        for i, q in enumerate(coeffs[1:], start=1):
            bundle = bundle_direct_sum(bundle, line_bundle(q * basis[i % 3]))
        return bundle

    A, B = split(a_lines), split(b_lines)
    S = bundle_direct_sum(A, B)
    assert S.total_chern == A.total_chern * B.total_chern
    assert S.rank == A.rank + B.rank
    assert bundle_dual(bundle_dual(S)).same_classes(S)
    D = bundle_dual(S)
    for i in range(space.n + 1):
        assert D.chern_class(i) == S.chern_class(i) * (-1) ** i
    ell = dual_coeff[0] * h1 + dual_coeff[1] * h2
    assert bundle_dual(bundle_tensor_line(S, ell)).same_classes(bundle_tensor_line(D, -ell))


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), min_size=3, max_size=3),
       st.integers(-7, 7))
def test_ring_laws_and_linear_integration(pairs, scalar):
    space = get_space("P1xP2")
    h1, h2 = space.model.gen("h1"), space.model.gen("h2")
    x, y, z = (1 + a * h1 + b * h2 + a * b * h1 * h2 for a, b in pairs)
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x * x.inverse() == space.model.one()
    top_a, top_b = (x * y).component(3), (y * z).component(3)
    assert space.integrate(top_a * scalar + top_b) == scalar * space.integrate(top_a) + space.integrate(top_b)


def test_selectors():
    assert resolve_space("P:3").name == "P3"
    assert numbers(resolve_space("hypersurface:3,5")) == FROZEN_CHERN_NUMBERS["quintic_threefold"]
    assert resolve_space("ci:2:2,2").degree() == 4
    assert resolve_space("product:1,1:1,2").degree() == 4
    assert resolve_space("quintic_threefold") is get_space("quintic_threefold")
    for bad in ["nosuch", "P:", "P:a", "hypersurface:3", "ci:2:", "product:1,1:1,0", "file:"]:
        with pytest.raises(SelectorError):
            resolve_space(bad)


def test_embedding_dimensions():
    assert get_space("P1xP1_12").embedding_dim == comb(2, 1) * comb(3, 2) - 1
    assert get_space("P2xP2").embedding_dim == 8
    assert get_space("bicubic_cy3").embedding_dim == 5
    assert complete_intersection(2, [1, 3]).embedding_dim == 3
