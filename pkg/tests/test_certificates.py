from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from chernineq.certificates import (
    BASIS_SOLVE,
    CONSTRUCTIVE,
    Certificate,
    Refutation,
    monomial_gap_certificate,
    schur_cone_membership,
    two_row_expansion,
)
from chernineq.chern_algebra import ChernPolynomial, chern_variable, schur, to_schur_basis
from chernineq.partitions import Partition, enumerate_gamma

P = Partition.of


def c(i, r):
    return chern_variable(i, r)


def test_certificate_examples():
    cert = monomial_gap_certificate(P(1, 1), 2)
    assert str(cert) == "c1^2 - c2 = 1*S(1,1)"
    assert cert.provenance == CONSTRUCTIVE
    assert monomial_gap_certificate(P(2, 1), 3).expansion.coefficients == {P(2, 1): 1}
    cert = monomial_gap_certificate(P(1, 1, 1), 3)
    assert cert.expansion.coefficients == {P(1, 1, 1): 1, P(2, 1): 2}
    assert str(cert) == "c1^3 - c3 = 1*S(1,1,1) + 2*S(2,1)"


def test_certificate_at_high_rank_keeps_the_same_shape():
    # no truncation at r >= weight
    for r in (3, 4, 6):
        assert monomial_gap_certificate(P(1, 1, 1), r).expansion.coefficients == {P(1, 1, 1): 1, P(2, 1): 2}


def test_certificate_errors():
    with pytest.raises(ValueError):
        monomial_gap_certificate(P(3, 1), 2)
    with pytest.raises(ValueError):
        monomial_gap_certificate(P(2, 2, 2), 3, max_degree=5)
    with pytest.raises(ValueError):
        two_row_expansion(1, 2, 3)


def test_single_part_certificate_is_empty():
    cert = monomial_gap_certificate(P(3), 3)
    assert cert.target.is_zero()
    assert cert.entries == ()
    assert cert.verify()


def test_negative_coefficients_rejected():
    with pytest.raises(ValueError):
        Certificate(c(1, 1), 1, 1, ((Fraction(-1), P(1)),), BASIS_SOLVE)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_all_gap_certificates_agree_with_basis_solve(r):
    for k in range(1, 7):
        for lam in enumerate_gamma(k, r):
            cert = monomial_gap_certificate(lam, r)
            assert cert.verify()
            assert all(q.denominator == 1 and q >= 0 for q, _ in cert.entries)
            assert all(mu.largest <= r for _, mu in cert.entries)
            solved = schur_cone_membership(cert.target)
            assert isinstance(solved, Certificate) and solved.provenance == BASIS_SOLVE
            assert solved.expansion == cert.expansion


def test_membership_examples():
    s2 = c(1, 2) ** 2 - c(2, 2)
    member = schur_cone_membership(s2)
    assert isinstance(member, Certificate)
    assert member.expansion.coefficients == {P(1, 1): 1}
    refuted = schur_cone_membership(-s2)
    assert isinstance(refuted, Refutation)
    assert refuted.partition == P(1, 1) and refuted.coefficient == -1
    assert isinstance(schur_cone_membership(schur(P(2, 1), 3)), Certificate)


def test_refutation_picks_most_negative():
    r = 3
    p = schur(P(3), r) * 2 - schur(P(2, 1), r) * 3 - schur(P(1, 1, 1), r)
    w = schur_cone_membership(p)
    assert isinstance(w, Refutation)
    assert (w.partition, w.coefficient) == (P(2, 1), -3)
    assert w.to_json()["coefficient"] == "-3"


def test_membership_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        schur_cone_membership(c(1, 2) + c(2, 2))
    with pytest.raises(ValueError):
        schur_cone_membership(c(1, 2), rank=3)


def test_json_round_trip():
    cert = monomial_gap_certificate(P(2, 1, 1), 3)
    data = cert.to_json()
    assert data["verified"] is True
    assert data["entries"][0].keys() == {"partition", "coefficient"}
    assert Certificate.from_json(data, cert.target) == cert


@st.composite
def cone_member(draw, r, k):
    g = enumerate_gamma(k, r)
    coeffs = draw(st.lists(st.fractions(min_value=0, max_value=5, max_denominator=4), min_size=len(g), max_size=len(g)))
    total = ChernPolynomial.zero(r)
    for q, lam in zip(coeffs, g):
        total = total + schur(lam, r) * q
    return total


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.tuples(
    st.just(r),
    st.integers(1, 3).flatmap(lambda k: cone_member(r, k)),
    st.integers(1, 3).flatmap(lambda k: cone_member(r, k)),
)))
def test_cone_is_closed_under_products(args):
    r, p, q = args
    prod = p * q
    if prod.is_zero():
        return
    assert isinstance(schur_cone_membership(prod), Certificate)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 4).flatmap(lambda r: st.tuples(st.just(r), st.integers(1, 5))).flatmap(
    lambda rk: cone_member(*rk)))
def test_reconstructed_members_are_recognized(p):
    if p.is_zero():
        return
    result = schur_cone_membership(p)
    assert isinstance(result, Certificate)
    assert result.expansion == to_schur_basis(p)
