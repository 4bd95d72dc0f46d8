"""Binary codes and the totally separable packings of l1 balls they induce.

The construction concatenates a Reed-Solomon code over GF(2^k) with the
indicator encoding of field symbols: a symbol s in {0..q-1} becomes the 0/1
vector of length q with a single 1 in position s.  Binary Hamming distance is
then exactly twice the symbol distance.  Placing l1 balls of radius D/2 at the
codewords of any code with minimum distance D yields a packing in which every
ball has a single supporting hyperplane pushing all other balls to the far
side; the functional 2u - (1,...,1) witnesses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .errors import DomainError, ParseError
from .linalg import Functional
from .report import VerificationReport, Violation

# irreducible moduli over GF(2), indexed by k; bit i = coefficient of x^i
_MODULI = {1: 0b10, 2: 0b111, 3: 0b1011, 4: 0b10011}


class GF2m:
    """Arithmetic in GF(2^k) as integers 0..2^k-1 (bit = polynomial coeff)."""

    def __init__(self, k: int):
        if k not in _MODULI:
            raise DomainError(f"k must be in {sorted(_MODULI)}, got {k}")
        self.k = k
        self.q = 1 << k
        self.modulus = _MODULI[k]

    def mul(self, a: int, b: int) -> int:
        acc = 0
        while b:
            if b & 1:
                acc ^= a
            b >>= 1
            a <<= 1
            if a & self.q:
                a ^= self.modulus
        return acc

    def add(self, a: int, b: int) -> int:
        return a ^ b


@dataclass(frozen=True)
class BinaryCode:
    """Distinct codewords of a fixed length, stored as integer bitmasks.

    Bit i of a word is coordinate i; helpers convert to and from 0/1 strings.
    The minimum distance is computed lazily and cached.
    """

    length: int
    words: tuple[int, ...]

    def __init__(self, length: int, words: Iterable[int]):
        ws = tuple(sorted(set(words)))
        if not ws:
            raise DomainError("a code needs at least one codeword")
        if length < 1 or any(w < 0 or w >> length for w in ws):
            raise DomainError("codeword does not fit the declared length")
        object.__setattr__(self, "length", length)
        object.__setattr__(self, "words", ws)
        object.__setattr__(self, "_word_set", frozenset(ws))
        object.__setattr__(self, "_min_distance", None)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BinaryCode":
        rows = list(rows)
        if not rows:
            raise ParseError("no codewords given")
        length = len(rows[0])
        words = []
        for lineno, row in enumerate(rows, start=1):
            if len(row) != length:
                raise ParseError(
                    f"expected {length} symbols, found {len(row)}", lineno
                )
            if set(row) - {"0", "1"}:
                raise ParseError("codeword must consist of 0s and 1s", lineno)
            words.append(int(row[::-1], 2))
        return cls(length, words)

    def word_string(self, w: int) -> str:
        return format(w, f"0{self.length}b")[::-1]

    def bits(self, w: int) -> tuple[int, ...]:
        return tuple((w >> i) & 1 for i in range(self.length))

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w: int) -> bool:
        return w in getattr(self, "_word_set")


def min_distance(code: BinaryCode) -> int:
    """Exact minimum pairwise Hamming distance, brute force over pairs."""
    if len(code) < 2:
        raise DomainError("minimum distance needs at least two codewords")
    cached = getattr(code, "_min_distance")
    if cached is not None:
        return cached
    words = code.words
    best = code.length + 1
    for i in range(len(words)):
        wi = words[i]
        for j in range(i + 1, len(words)):
            d = (wi ^ words[j]).bit_count()
            if d < best:
                best = d
    object.__setattr__(code, "_min_distance", best)
    return best


def rs_indicator_code(k: int) -> BinaryCode:
    """Reed-Solomon code over GF(2^k), symbols indicator-encoded to bits.

    Evaluates every polynomial of degree < q/2 (q = 2^k) at all q field
    points in integer order and writes symbol s at position t as a 1-bit in
    coordinate t*q + s.  The result has length q^2 = 4^k, q^(q/2) codewords,
    and minimum distance 2*(q - q/2 + 1) = q + 2.

    At k = 1 the degree bound leaves only the constant polynomials; the code
    degenerates to two words.  Beyond k = 3 the codeword count q^(q/2) grows
    out of desk scale.
    """
    field = GF2m(k)
    q = field.q
    n_coeff = q // 2  # polynomials of degree < q/2
    points = list(range(q))
    words = []
    for coeffs in product(range(q), repeat=n_coeff):
        word = 0
        for t in points:
            acc = 0
            for c in coeffs:  # Horner, highest coefficient first
                acc = field.add(field.mul(acc, t), c)
            word |= 1 << (t * q + acc)
        words.append(word)
    return BinaryCode(q * q, words)


def min_distance_neighbor_count(code: BinaryCode, u: int) -> int:
    """Number of codewords at Hamming distance exactly min_distance from u."""
    if u not in code:
        raise DomainError("u is not a codeword")
    dist = min_distance(code)
    return sum(1 for w in code.words if w != u and (w ^ u).bit_count() == dist)


def separating_functional(u: Sequence[int]) -> Functional:
    """The functional 2u - (1,...,1); sup-norm 1, f(u) = number of 1s in u."""
    bits = list(u)
    if any(b not in (0, 1) for b in bits):
        raise DomainError("input must be a 0/1 vector")
    return Functional([2 * b - 1 for b in bits])


@dataclass(frozen=True)
class L1Packing:
    """l1 balls of a common radius centered at the codewords of a code."""

    code: BinaryCode
    radius: Fraction

    def __init__(self, code: BinaryCode, radius):
        radius = Fraction(radius)
        if radius <= 0:
            raise DomainError("radius must be positive")
        object.__setattr__(self, "code", code)
        object.__setattr__(self, "radius", radius)

    @classmethod
    def from_code(cls, code: BinaryCode) -> "L1Packing":
        return cls(code, Fraction(min_distance(code), 2))

    @property
    def centers(self) -> tuple[tuple[int, ...], ...]:
        return tuple(self.code.bits(w) for w in self.code.words)


def _functional_gap(u: int, w: int) -> int:
    # f_u(u) - f_u(w) for f_u = 2u - 1, evaluated on 0/1 words via bit ops:
    # f_u(x) = 2*|u & x| - |x|, so the gap telescopes to |u| + |w| - 2|u & w|
    return u.bit_count() + w.bit_count() - 2 * (u & w).bit_count()


def verify_total_separability_l1(packing: L1Packing) -> VerificationReport:
    """Certify the single-hyperplane property of the packing.

    Accepted iff for every center u the functional 2u - (1,...,1) satisfies
    f(u) - f(u') >= D for all other centers u', where D = 2*radius; the
    hyperplane f(x) = f(u) - D/2 then supports u's ball and bounds every
    other ball to the far half-space.
    """
    dist = min_distance(packing.code)
    if packing.radius != Fraction(dist, 2):
        raise DomainError(
            f"radius {packing.radius} differs from half the minimum "
            f"distance {dist}"
        )
    need = int(2 * packing.radius)  # always integral: radius = D/2
    violations: list[Violation] = []
    words = packing.code.words
    # the gap is symmetric in (u, w), so scanning unordered pairs covers
    # both hyperplane directions
    for i in range(len(words)):
        u = words[i]
        for j in range(i + 1, len(words)):
            gap = _functional_gap(u, words[j])
            if gap < need:
                violations.append(Violation(i, j, "separation", gap))
    return VerificationReport.from_violations(violations)


def touching_pairs(packing: L1Packing) -> list[tuple[int, int]]:
    """Unordered index pairs whose centers sit at l1 distance 2*radius."""
    target = 2 * packing.radius
    if target.denominator != 1:
        return []
    t = target.numerator
    words = packing.code.words
    out = []
    for i in range(len(words)):
        wi = words[i]
        for j in range(i + 1, len(words)):
            if (wi ^ words[j]).bit_count() == t:
                out.append((i, j))
    return out


def contact_degrees(packing: L1Packing) -> list[int]:
    """Degree of each center in the touching graph of the packing."""
    degrees = [0] * len(packing.code.words)
    for i, j in touching_pairs(packing):
        degrees[i] += 1
        degrees[j] += 1
    return degrees


def code_to_text(code: BinaryCode) -> str:
    return "\n".join(code.word_string(w) for w in code.words) + "\n"


def code_from_text(text: str) -> BinaryCode:
    rows = [ln.strip() for ln in text.splitlines()
            if ln.strip() and not ln.strip().startswith("#")]
    return BinaryCode.from_strings(rows)
