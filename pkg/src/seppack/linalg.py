"""Exact-rational and float vectors, functionals, matrices, and sampling.

Scalars are either `fractions.Fraction` (exact, arbitrary precision) or
`float`; every container carries a uniform kind and operations refuse to mix
them.  Float comparisons elsewhere in the package use the module-level
strictness margin `EPS` unless an operation states otherwise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .errors import DomainError, KindError

EPS = 1e-9

RATIONAL = "rational"
FLOAT = "float"

Scalar = Fraction | float


def as_scalar(x) -> Scalar:
    """Coerce to a kinded scalar: ints become exact rationals."""
    if isinstance(x, bool):
        raise KindError(f"bool is not a scalar: {x!r}")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    raise KindError(f"unsupported scalar type {type(x).__name__}")


def kind_of(values: Iterable[Scalar]) -> str:
    kinds = {FLOAT if isinstance(v, float) else RATIONAL for v in values}
    if len(kinds) > 1:
        raise KindError("mixed rational/float entries in one container")
    return kinds.pop() if kinds else RATIONAL


def _coerced(entries) -> tuple[tuple[Scalar, ...], str]:
    vals = tuple(as_scalar(v) for v in entries)
    return vals, kind_of(vals)


@dataclass(frozen=True)
class Vec:
    """Immutable vector; length equals the declared dimension."""

    entries: tuple[Scalar, ...]
    kind: str

    def __init__(self, entries: Sequence):
        vals, kind = _coerced(entries)
        if not vals:
            raise DomainError("vector must have positive dimension")
        object.__setattr__(self, "entries", vals)
        object.__setattr__(self, "kind", kind)

    @property
    def dimension(self) -> int:
        return len(self.entries)

    def __neg__(self) -> "Vec":
        return Vec(tuple(-v for v in self.entries))

    def dot(self, other: "Vec") -> Scalar:
        if self.dimension != other.dimension:
            raise DomainError("dimension mismatch in dot product")
        if self.kind != other.kind:
            raise KindError("cannot mix rational and float vectors")
        return sum(a * b for a, b in zip(self.entries, other.entries))

    def norm_squared(self) -> Scalar:
        return sum(v * v for v in self.entries)

    def euclidean_norm(self) -> float:
        return math.sqrt(float(self.norm_squared()))

    def approx_equal(self, other: "Vec", tol: float = EPS) -> bool:
        return self.dimension == other.dimension and all(
            abs(float(a) - float(b)) <= tol
            for a, b in zip(self.entries, other.entries)
        )


@dataclass(frozen=True)
class Functional:
    """Linear functional; application to a Vec is the dot product."""

    coefficients: tuple[Scalar, ...]
    kind: str

    def __init__(self, coefficients: Sequence):
        vals, kind = _coerced(coefficients)
        if not vals:
            raise DomainError("functional must have positive dimension")
        object.__setattr__(self, "coefficients", vals)
        object.__setattr__(self, "kind", kind)

    @property
    def dimension(self) -> int:
        return len(self.coefficients)

    def __neg__(self) -> "Functional":
        return Functional(tuple(-v for v in self.coefficients))

    def __call__(self, x: Vec) -> Scalar:
        if self.dimension != x.dimension:
            raise DomainError("dimension mismatch in functional application")
        if self.kind != x.kind:
            raise KindError("cannot apply a functional across scalar kinds")
        return sum(a * b for a, b in zip(self.coefficients, x.entries))

    def approx_equal(self, other: "Functional", tol: float = EPS) -> bool:
        return self.dimension == other.dimension and all(
            abs(float(a) - float(b)) <= tol
            for a, b in zip(self.coefficients, other.coefficients)
        )


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix; entry count always equals rows*cols."""

    rows: int
    cols: int
    entries: tuple[Scalar, ...]
    kind: str

    def __init__(self, rows: int, cols: int, entries: Sequence):
        vals, kind = _coerced(entries)
        if rows < 0 or cols < 0 or len(vals) != rows * cols:
            raise DomainError(
                f"matrix shape {rows}x{cols} needs {rows * cols} entries, "
                f"got {len(vals)}"
            )
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", vals)
        object.__setattr__(self, "kind", kind)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise DomainError("ragged rows in matrix literal")
        return cls(len(rows), width, [v for r in rows for v in r])

    def entry(self, i: int, j: int) -> Scalar:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[Scalar, ...]:
        return self.entries[i * self.cols: (i + 1) * self.cols]

    def is_zero(self) -> bool:
        return all(v == 0 for v in self.entries)


def rank_exact(m: Matrix) -> int:
    """Exact rank of a rational matrix via fraction-free (Bareiss) elimination."""
    if m.kind != RATIONAL:
        raise KindError("rank_exact requires rational entries")
    if m.rows == 0 or m.cols == 0:
        return 0
    # clear denominators row by row; scaling rows leaves the rank unchanged
    a: list[list[int]] = []
    for i in range(m.rows):
        row = [Fraction(v) for v in m.row(i)]
        lcm = 1
        for v in row:
            lcm = lcm * v.denominator // math.gcd(lcm, v.denominator)
        a.append([int(v * lcm) for v in row])
    rows, cols = m.rows, m.cols
    rank = 0
    prev = 1
    pivot_row = 0
    for col in range(cols):
        pivot = next(
            (r for r in range(pivot_row, rows) if a[r][col] != 0), None
        )
        if pivot is None:
            continue
        a[pivot_row], a[pivot] = a[pivot], a[pivot_row]
        p = a[pivot_row][col]
        for r in range(pivot_row + 1, rows):
            for c in range(col + 1, cols):
                a[r][c] = (a[r][c] * p - a[r][col] * a[pivot_row][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        pivot_row += 1
        if pivot_row == rows:
            break
    return rank


def rank_lower_bound_trace(m: Matrix) -> Scalar:
    """Lower bound for the rank of a non-zero square matrix.

    Returns (sum of diagonal entries)^2 / (sum of all squared entries); the
    value never exceeds the exact rank.
    """
    if m.rows != m.cols:
        raise DomainError("trace bound requires a square matrix")
    if m.is_zero():
        raise DomainError("trace bound undefined for the zero matrix")
    trace = sum(m.entry(i, i) for i in range(m.rows))
    frob_sq = sum(v * v for v in m.entries)
    return (trace * trace) / frob_sq


def sample_unit_ball(d: int, rng: np.random.Generator) -> Vec:
    """Uniform sample from the d-dimensional Euclidean unit ball.

    Draws a Gaussian direction (numpy's ziggurat `standard_normal`), then a
    radius U^(1/d); with a fixed `numpy.random.Generator` seed the sequence
    of samples is reproducible bit for bit.
    """
    if d < 1:
        raise DomainError("dimension must be at least 1")
    while True:
        g = rng.standard_normal(d)
        norm = float(np.linalg.norm(g))
        if norm > 0.0:
            break
    radius = float(rng.random()) ** (1.0 / d)
    return Vec((g * (radius / norm)).tolist())
