"""Build, verify, and reduce separable-Hadwiger certificates.

A certificate is a family of point/functional pairs (x_i, phi_i) in R^d.  It
is accepted when phi_i(x_i) = 1 for all i and, for all distinct i and j,
-1 <= phi_i(x_j) <= 0 with the value -1 permitted only for explicit antipodal
pairs (x_j = -x_i and phi_j = -phi_i).  An accepted certificate witnesses a
smooth strictly convex body whose separable Hadwiger number is at least the
number of pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, KindError, ParseError
from .linalg import EPS, RATIONAL, Functional, Matrix, Scalar, Vec
from .report import VerificationReport, Violation
from .spherical import SphericalCode, verify_code


@dataclass(frozen=True)
class SeparableCertificate:
    """Paired points and functionals, all of one dimension and scalar kind."""

    dimension: int
    pairs: tuple[tuple[Vec, Functional], ...]

    def __init__(self, pairs):
        pairs = tuple((x, phi) for x, phi in pairs)
        if not pairs:
            raise DomainError("a certificate needs at least one pair")
        dim = pairs[0][0].dimension
        kinds = set()
        for x, phi in pairs:
            if x.dimension != dim or phi.dimension != dim:
                raise DomainError("all pairs must share the certificate dimension")
            kinds.add(x.kind)
            kinds.add(phi.kind)
        if len(kinds) > 1:
            raise KindError("certificate mixes rational and float pairs")
        object.__setattr__(self, "dimension", dim)
        object.__setattr__(self, "pairs", pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    @property
    def kind(self) -> str:
        return self.pairs[0][0].kind


def verify_certificate(cert: SeparableCertificate) -> VerificationReport:
    """Check the acceptance conditions pair by pair.

    Rational certificates are decided exactly.  Float certificates use the
    strictness margin EPS, and an acceptance reached that way is flagged
    `numeric` in the report.
    """
    exact = cert.kind == RATIONAL
    violations: list[Violation] = []
    n = len(cert.pairs)
    for i, (xi, phii) in enumerate(cert.pairs):
        diag = phii(xi)
        if (diag != 1) if exact else (abs(diag - 1.0) > EPS):
            violations.append(Violation(i, i, "diagonal", diag))
    for i, (_, phii) in enumerate(cert.pairs):
        for j, (xj, _) in enumerate(cert.pairs):
            if i == j:
                continue
            v = phii(xj)
            if (v > 0) if exact else (v > EPS):
                violations.append(Violation(i, j, "upper", v))
            elif (v < -1) if exact else (v < -1.0 - EPS):
                violations.append(Violation(i, j, "lower", v))
            elif (v == -1) if exact else (v <= -1.0 + EPS):
                # -1 is allowed only on an explicit antipodal pair
                xi, phij = cert.pairs[i][0], cert.pairs[j][1]
                if exact:
                    antipodal = xj.entries == tuple(-e for e in xi.entries) \
                        and phij.coefficients == tuple(-c for c in phii.coefficients)
                else:
                    antipodal = xj.approx_equal(-xi) and phij.approx_equal(-phii)
                if not antipodal:
                    violations.append(Violation(i, j, "strict", v))
    return VerificationReport.from_violations(
        violations, numeric=(not exact and not violations)
    )


def lift_from_code(code: SphericalCode, k: int = 0) -> SeparableCertificate:
    """Lift a verified code in R^(d-1) to a certificate in R^(d + k).

    Each code vector v becomes x = (v, 1, 0) with functional
    (v, -alpha, 0)/(1 - alpha); each extra dimension j contributes the
    antipodal pair (e_j, e_j*) and (-e_j, -e_j*), so the output has
    m + 2k pairs and always passes verify_certificate.
    """
    if k < 0:
        raise DomainError("extra dimension count k must be >= 0")
    if float(code.alpha) >= 1.0:
        raise DomainError("alpha must be < 1")
    check = verify_code(code)
    if not check.accepted:
        raise DomainError(
            f"code fails verification ({len(check.violations)} violations); "
            "cannot lift"
        )
    rational = code.kind == RATIONAL and isinstance(code.alpha, (Fraction, int))
    if rational:
        alpha = Fraction(code.alpha)
        one: Scalar = Fraction(1)
        zero: Scalar = Fraction(0)
    else:
        alpha = float(code.alpha)
        one, zero = 1.0, 0.0
    scale = 1 / (one - alpha)
    d_minus_1 = code.dimension
    dim = d_minus_1 + 1 + k
    pairs: list[tuple[Vec, Functional]] = []
    for v in code.vectors:
        ventries = v.entries if rational else tuple(float(e) for e in v.entries)
        x = Vec(ventries + (one,) + (zero,) * k)
        phi = Functional(
            tuple(scale * e for e in ventries) + (-alpha * scale,) + (zero,) * k
        )
        pairs.append((x, phi))
    for j in range(k):
        unit = [zero] * dim
        unit[d_minus_1 + 1 + j] = one
        e = Vec(unit)
        estar = Functional(unit)
        pairs.append((e, estar))
        pairs.append((-e, -estar))
    return SeparableCertificate(pairs)


def largest_reduction_epsilon(cert: SeparableCertificate) -> Scalar:
    """Largest admissible epsilon for reduce_certificate.

    Computed as min over distinct non-antipodal pairs of 1 + phi_i(x_j);
    when every such value reaches 1 (all cross terms zero) the supremum 1 is
    not attainable inside (0,1) and 1/2 is returned instead.
    """
    survivors = _surviving_indices(cert)
    best: Scalar | None = None
    for i in survivors:
        phii = cert.pairs[i][1]
        for j in survivors:
            if i == j:
                continue
            v = 1 + phii(cert.pairs[j][0])
            if best is None or v < best:
                best = v
    if best is None or best >= 1:
        return Fraction(1, 2) if cert.kind == RATIONAL else 0.5
    return best


def _is_minus_one(v, exact: bool) -> bool:
    return (v == -1) if exact else (v <= -1.0 + EPS)


def _surviving_indices(cert: SeparableCertificate) -> list[int]:
    """Indices left after repeatedly deleting antipodal pairs evaluating to -1."""
    exact = cert.kind == RATIONAL
    alive = list(range(len(cert.pairs)))
    while True:
        found = None
        for a_pos, i in enumerate(alive):
            phii = cert.pairs[i][1]
            for b_pos, j in enumerate(alive):
                if i != j and _is_minus_one(phii(cert.pairs[j][0]), exact):
                    found = (a_pos, b_pos)
                    break
            if found:
                break
        if not found:
            return alive
        a_pos, b_pos = found
        for pos in sorted((a_pos, b_pos), reverse=True):
            del alive[pos]


def reduce_certificate(
    cert: SeparableCertificate, epsilon: Scalar | None = None
) -> tuple[Matrix, int]:
    """Reduce an accepted certificate to a low-rank matrix with small entries.

    Antipodal pairs (cross value -1) are removed two at a time; with the
    n - 2k survivors the matrix ((2 + eps)*phi_i(x_j) + 1 - eps)/3 is
    returned.  It has unit diagonal, off-diagonal entries strictly inside
    (-1/3, 1/3), and rank at most d - k + 1, where k pairs were removed.
    """
    check = verify_certificate(cert)
    if not check.accepted:
        raise DomainError("certificate fails verification; cannot reduce")
    survivors = _surviving_indices(cert)
    removed = (len(cert.pairs) - len(survivors)) // 2
    if epsilon is None:
        epsilon = largest_reduction_epsilon(cert)
    if not (0 < float(epsilon) < 1):
        raise DomainError(f"epsilon must lie in (0,1), got {epsilon}")
    exact = cert.kind == RATIONAL
    epsilon = Fraction(epsilon) if exact else float(epsilon)
    values: list[Scalar] = []
    for i in survivors:
        phii = cert.pairs[i][1]
        for j in survivors:
            v = phii(cert.pairs[j][0])
            if i != j:
                too_low = (v < -1 + epsilon) if exact \
                    else (v < float(-1 + epsilon) - EPS)
                if too_low:
                    raise DomainError(
                        f"epsilon {epsilon} too large: pair ({i},{j}) "
                        f"has value {v}"
                    )
            values.append(((2 + epsilon) * v + 1 - epsilon) / 3)
    size = len(survivors)
    return Matrix(size, size, values), removed


def hadwiger_upper_bound_smooth(d: int) -> int:
    """Largest integer strictly below 8(d+1)/(8-d), for d in {5, 6, 7}."""
    if d not in (5, 6, 7):
        raise DomainError("bound is only established for d in {5, 6, 7}")
    return (8 * (d + 1) - 1) // (8 - d)


# --- JSON serialization ----------------------------------------------------

from .serialize import scalar_from_json as _scalar_from_json
from .serialize import scalar_to_json as _scalar_to_json


def certificate_to_json(cert: SeparableCertificate) -> str:
    doc = {
        "dimension": cert.dimension,
        "pairs": [
            {
                "x": [_scalar_to_json(e) for e in x.entries],
                "phi": [_scalar_to_json(c) for c in phi.coefficients],
            }
            for x, phi in cert.pairs
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def certificate_from_json(text: str) -> SeparableCertificate:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or "dimension" not in doc or "pairs" not in doc:
        raise ParseError("certificate JSON needs 'dimension' and 'pairs'")
    dim = doc["dimension"]
    pairs = []
    for entry in doc["pairs"]:
        if not isinstance(entry, dict) or "x" not in entry or "phi" not in entry:
            raise ParseError("each pair needs 'x' and 'phi' arrays")
        x = Vec([_scalar_from_json(v) for v in entry["x"]])
        phi = Functional([_scalar_from_json(v) for v in entry["phi"]])
        pairs.append((x, phi))
    cert = SeparableCertificate(pairs)
    if cert.dimension != dim:
        raise ParseError(
            f"declared dimension {dim} does not match pair dimension "
            f"{cert.dimension}"
        )
    return cert
