"""Certificate verification, lifting, reduction, and small-dimension bounds."""

import random
from fractions import Fraction

import pytest

from seppack.certificates import (
    SeparableCertificate,
    certificate_from_json,
    certificate_to_json,
    hadwiger_upper_bound_smooth,
    largest_reduction_epsilon,
    lift_from_code,
    reduce_certificate,
    verify_certificate,
)
from seppack.errors import DomainError, ParseError
from seppack.linalg import Functional, Vec, rank_exact, rank_lower_bound_trace
from seppack.spherical import SphericalCode, deletion_search


def _antipodal_1d():
    x = Vec([Fraction(1)])
    phi = Functional([Fraction(1)])
    return SeparableCertificate([(x, phi), (-x, -phi)])


def _orthonormal_code(d):
    rows = []
    for i in range(d):
        row = [Fraction(0)] * d
        row[i] = Fraction(1)
        rows.append(Vec(row))
    return SphericalCode(rows, Fraction(0))


def test_antipodal_pair_accepted():
    report = verify_certificate(_antipodal_1d())
    assert report.accepted and not report.numeric


def test_lifted_orthonormal_2d_accepted():
    cert = lift_from_code(_orthonormal_code(2), k=0)
    assert cert.dimension == 3
    assert verify_certificate(cert).accepted


def test_cross_term_violation_rejected():
    x1 = Vec([Fraction(1), Fraction(0)])
    x2 = Vec([Fraction(1, 2), Fraction(1)])
    phi = Functional([Fraction(1), Fraction(0)])
    phi2 = Functional([Fraction(0), Fraction(1)])
    report = verify_certificate(
        SeparableCertificate([(x1, phi), (x2, phi2)])
    )
    assert not report.accepted
    assert any(
        v.condition == "upper" and (v.i, v.j) == (0, 1)
        for v in report.violations
    )


def test_minus_one_without_antipode_rejected():
    x1 = Vec([Fraction(1), Fraction(0)])
    x2 = Vec([Fraction(-1), Fraction(0)])
    phi1 = Functional([Fraction(1), Fraction(0)])
    phi2 = Functional([Fraction(0), Fraction(1)])  # not -phi1
    report = verify_certificate(
        SeparableCertificate([(x1, phi1), (x2, phi2)])
    )
    assert not report.accepted
    assert any(v.condition == "strict" for v in report.violations)


def test_lift_orthonormal_7_to_dimension_8():
    cert = lift_from_code(_orthonormal_code(7), k=0)
    assert len(cert) == 7 and cert.dimension == 8
    assert verify_certificate(cert).accepted


def test_lift_appends_explicit_antipodes():
    code = SphericalCode(
        [Vec([Fraction(1), Fraction(0)]), Vec([Fraction(0), Fraction(1)])],
        Fraction(0),
    )
    cert = lift_from_code(code, k=1)
    assert len(cert) == 4 and cert.dimension == 4
    phi3 = cert.pairs[2][1]
    x4 = cert.pairs[3][0]
    assert phi3(x4) == -1
    assert verify_certificate(cert).accepted


def test_lift_cross_terms_match_formula():
    # phi_i(x_j) = (<v_i, v_j> - alpha)/(1 - alpha) on the lifted block
    alpha = Fraction(3, 5)
    v1 = Vec([Fraction(1), Fraction(0)])
    v2 = Vec([Fraction(3, 5), Fraction(4, 5)])
    code = SphericalCode([v1, v2], alpha)
    cert = lift_from_code(code, k=0)
    phi1, x2 = cert.pairs[0][1], cert.pairs[1][0]
    assert phi1(x2) == (v1.dot(v2) - alpha) / (1 - alpha)


def test_lift_rejects_invalid_code():
    e1 = Vec([Fraction(1), Fraction(0)])
    bad = SphericalCode([e1, -e1], Fraction(0))
    with pytest.raises(DomainError):
        lift_from_code(bad, k=0)


def test_lift_of_deletion_search_is_accepted():
    for d, seed in ((10, 3), (30, 5), (50, 11)):
        code = deletion_search(d, seed=seed)
        cert = lift_from_code(code, k=2)
        report = verify_certificate(cert)
        assert report.accepted and report.numeric
        assert len(cert) == len(code) + 4


def test_reduce_antipodal_certificate():
    matrix, removed = reduce_certificate(_antipodal_1d(), Fraction(1, 2))
    assert matrix.rows == 0 and removed == 1


def test_reduce_orthonormal_example():
    cert = lift_from_code(_orthonormal_code(2), k=0)
    matrix, removed = reduce_certificate(cert, Fraction(1, 2))
    assert removed == 0
    assert matrix.entries == (
        Fraction(1), Fraction(1, 6), Fraction(1, 6), Fraction(1),
    )


def test_reduce_epsilon_too_large():
    x = Vec([Fraction(1), Fraction(0)])
    y = Vec([Fraction(0), Fraction(1)])
    # phi_1(x_2) = -9/10 forces epsilon <= 1/10
    phi1 = Functional([Fraction(1), Fraction(-9, 10)])
    phi2 = Functional([Fraction(0), Fraction(1)])
    cert = SeparableCertificate([(x, phi1), (y, phi2)])
    assert verify_certificate(cert).accepted
    with pytest.raises(DomainError):
        reduce_certificate(cert, Fraction(1, 2))
    matrix, _ = reduce_certificate(cert, Fraction(1, 10))
    assert all(abs(v) < Fraction(1, 3) or v == 1 for v in matrix.entries)
    assert largest_reduction_epsilon(cert) == Fraction(1, 10)


def test_reduce_matrix_shape_and_rank_bound():
    rng = random.Random(17)
    for trial in range(12):
        d = rng.randint(2, 6)
        k = rng.randint(0, 2)
        cert = lift_from_code(_orthonormal_code(d), k=k)
        matrix, removed = reduce_certificate(cert)
        assert removed == k
        size = len(cert) - 2 * k
        assert matrix.rows == matrix.cols == size
        assert all(matrix.entry(i, i) == 1 for i in range(size))
        assert all(
            -Fraction(1, 3) < matrix.entry(i, j) < Fraction(1, 3)
            for i in range(size)
            for j in range(size)
            if i != j
        )
        assert rank_exact(matrix) <= cert.dimension - removed + 1
        if not matrix.is_zero():
            assert rank_lower_bound_trace(matrix) <= rank_exact(matrix)


def test_hadwiger_upper_bounds():
    assert hadwiger_upper_bound_smooth(5) == 15
    assert hadwiger_upper_bound_smooth(6) == 27
    assert hadwiger_upper_bound_smooth(7) == 63
    with pytest.raises(DomainError):
        hadwiger_upper_bound_smooth(4)
    with pytest.raises(DomainError):
        hadwiger_upper_bound_smooth(8)


def test_certificate_json_roundtrip():
    cert = lift_from_code(_orthonormal_code(3), k=1)
    text = certificate_to_json(cert)
    back = certificate_from_json(text)
    assert back.dimension == cert.dimension
    assert back.pairs == cert.pairs


def test_certificate_json_rejects_malformed_rationals():
    with pytest.raises(ParseError):
        certificate_from_json(
            '{"dimension": 1, "pairs": [{"x": ["1/0"], "phi": ["1"]}]}'
        )
    # non-reduced forms are normalized on load
    cert = certificate_from_json(
        '{"dimension": 1, "pairs": [{"x": ["2/2"], "phi": ["4/4"]}]}'
    )
    assert cert.pairs[0][0].entries == (Fraction(1),)


def test_certificate_json_dimension_mismatch():
    with pytest.raises(ParseError):
        certificate_from_json(
            '{"dimension": 3, "pairs": [{"x": ["1"], "phi": ["1"]}]}'
        )
