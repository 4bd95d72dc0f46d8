"""Families of unit vectors with constrained pairwise inner products.

A code with parameter alpha < 1 is valid when every vector has unit norm and
every distinct pair has inner product in the half-open interval
(-1 + 2*alpha, alpha].  The random-deletion search produces such codes at
alpha = 1/3 from uniform samples in the unit ball.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, ParseError
from .linalg import EPS, RATIONAL, Scalar, Vec, sample_unit_ball
from .report import VerificationReport, Violation

# squared deletion threshold (2/sqrt(3))^2 = 4/3, padded so survivors clear
# the verifier's strictness margin after normalization
_DELETE_SQ = 4.0 / 3.0 + 1e-6


@dataclass(frozen=True)
class SphericalCode:
    """Unit vectors in R^dimension with coherence parameter alpha < 1."""

    dimension: int
    vectors: tuple[Vec, ...]
    alpha: Scalar

    def __init__(self, vectors, alpha):
        vecs = tuple(vectors)
        if not vecs:
            raise DomainError("a code needs at least one vector")
        dim = vecs[0].dimension
        if any(v.dimension != dim for v in vecs):
            raise DomainError("all code vectors must share one dimension")
        if float(alpha) >= 1.0:
            raise DomainError("alpha must be < 1")
        object.__setattr__(self, "dimension", dim)
        object.__setattr__(self, "vectors", vecs)
        object.__setattr__(self, "alpha", alpha)

    def __len__(self) -> int:
        return len(self.vectors)

    @property
    def kind(self) -> str:
        return self.vectors[0].kind


def verify_code(code: SphericalCode) -> VerificationReport:
    """Check unit norms and pairwise products in (-1 + 2*alpha, alpha].

    Rational codes are checked exactly; float codes use the margin EPS on
    norms and on the strict lower endpoint.
    """
    violations: list[Violation] = []
    exact = code.kind == RATIONAL
    lo = -1 + 2 * Fraction(code.alpha) if exact else -1.0 + 2.0 * float(code.alpha)
    hi = Fraction(code.alpha) if exact else float(code.alpha)
    for i, v in enumerate(code.vectors):
        if exact:
            if v.norm_squared() != 1:
                violations.append(Violation(i, None, "norm", v.norm_squared()))
        else:
            if abs(v.euclidean_norm() - 1.0) > EPS:
                violations.append(Violation(i, None, "norm", v.euclidean_norm()))
    m = len(code.vectors)
    for i in range(m):
        for j in range(i + 1, m):
            p = code.vectors[i].dot(code.vectors[j])
            if exact:
                ok = lo < p <= hi
            else:
                ok = (float(lo) + EPS < p) and (p <= float(hi) + EPS)
            if not ok:
                violations.append(Violation(i, j, "inner", p))
    return VerificationReport.from_violations(
        violations, numeric=(not exact and not violations)
    )


def deletion_search(d: int, seed: int, trials: int = 1) -> SphericalCode:
    """Random-deletion construction of a code at alpha = 1/3.

    Samples k = ceil(1/(2p)) points from the unit ball with p = (sqrt(8)/3)^d,
    removes the higher-indexed member of every surviving pair whose sum or
    difference has Euclidean norm <= 2/sqrt(3) (pairs scanned in lexicographic
    order on the raw, unnormalized points), and normalizes the survivors.

    With `trials` > 1 the search runs independent trials with per-trial seeds
    seed, seed+1, ... and keeps the largest output; ties go to the earliest
    trial, so the result depends only on (d, seed, trials).
    """
    if d < 2:
        raise DomainError("deletion search needs dimension >= 2")
    if trials < 1:
        raise DomainError("trials must be positive")
    p = (math.sqrt(8.0) / 3.0) ** d
    k = max(1, math.ceil(1.0 / (2.0 * p)))
    best: list[np.ndarray] | None = None
    for t in range(trials):
        rng = np.random.default_rng(seed + t)
        pts = np.array(
            [sample_unit_ball(d, rng).entries for _ in range(k)], dtype=float
        )
        alive = [True] * k
        for i in range(k):
            if not alive[i]:
                continue
            for j in range(i + 1, k):
                if not alive[j]:
                    continue
                diff = pts[i] - pts[j]
                s = pts[i] + pts[j]
                if diff @ diff <= _DELETE_SQ or s @ s <= _DELETE_SQ:
                    alive[j] = False
        survivors = [pts[i] for i in range(k) if alive[i]]
        if best is None or len(survivors) > len(best):
            best = survivors
    vectors = [Vec((x / np.linalg.norm(x)).tolist()) for x in best]
    return SphericalCode(vectors, Fraction(1, 3))


def expected_survivors(d: int) -> tuple[int, float]:
    """Return (k, k - p*k^2): the sample size and the guaranteed expectation."""
    p = (math.sqrt(8.0) / 3.0) ** d
    k = max(1, math.ceil(1.0 / (2.0 * p)))
    return k, k - p * k * k


def parse_code_file(text: str, alpha: Scalar) -> SphericalCode:
    """Parse a whitespace-separated table of unit vectors.

    Lines starting with '#' are comments; the dimension is inferred from the
    first vector line and enforced afterwards.  Rows whose norm deviates from
    1 by more than 1e-6 are rejected; smaller deviations are normalized away.
    """
    vectors: list[Vec] = []
    dim: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            values = [float(tok) for tok in line.split()]
        except ValueError:
            raise ParseError("non-numeric token", lineno) from None
        if dim is None:
            dim = len(values)
        elif len(values) != dim:
            raise ParseError(
                f"expected {dim} coordinates, found {len(values)}", lineno
            )
        norm = math.sqrt(sum(v * v for v in values))
        if abs(norm - 1.0) > 1e-6:
            raise ParseError(f"row norm {norm!r} deviates from 1", lineno)
        vectors.append(Vec([v / norm for v in values]))
    if not vectors:
        raise ParseError("no vector lines found")
    return SphericalCode(vectors, alpha)


def format_code_file(code: SphericalCode) -> str:
    """Serialize a code in the text format accepted by parse_code_file."""
    lines = [f"# {len(code)} unit vectors in R^{code.dimension}"]
    for v in code.vectors:
        lines.append(" ".join(f"{float(x):.17g}" for x in v.entries))
    return "\n".join(lines) + "\n"


def max_abs_inner_product(code: SphericalCode) -> float:
    """Largest |<vi,vj>| over distinct pairs (float); the code's coherence."""
    m = len(code.vectors)
    if m < 2:
        return 0.0
    arr = np.array([[float(x) for x in v.entries] for v in code.vectors])
    g = arr @ arr.T
    np.fill_diagonal(g, 0.0)
    return float(np.abs(g).max())
