"""Atom-free boundary measures on symmetric polygons, in units of pi.

An angular measure assigns total mass 2 (two half-turns) to the boundary,
symmetrically under negation and with no point masses.  The constrained
variant built here additionally vanishes on prescribed arcs attached to
every boundary segment of gauge length above 1: the two sub-segments beyond
unit gauge distance from either endpoint, and the full neighboring edges at
both endpoints.  Such a measure forces clockwise arcs spanned by certain
separable four-translate configurations to carry mass at least 1.

Masses are stored per interval of the boundary parameterized by cumulative
taxicab (l1) arc length, which keeps every stored quantity rational and
every identity exact; the uniform density on the unconstrained part of the
boundary is uniform per l1 length.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DomainError
from .planar import (
    PlanarPacking,
    Point,
    SymmetricPolygon,
    cross,
    edge_gauge_lengths,
    gauge,
    pneg,
    pscale,
    psub,
    verify_total_separability,
)

TOTAL_MASS = Fraction(2)


def _l1(v: Point) -> Fraction:
    return abs(v[0]) + abs(v[1])


def _edge_params(body: SymmetricPolygon) -> tuple[Fraction, ...]:
    """Cumulative l1 arc length at each vertex; last entry is the perimeter."""
    cum = [Fraction(0)]
    for i in range(body.edge_count):
        a, b = body.edge(i)
        cum.append(cum[-1] + _l1(psub(b, a)))
    return tuple(cum)


def param_of_point(body: SymmetricPolygon, p: Point) -> Fraction:
    """Boundary parameter (cumulative l1 length) of a boundary point."""
    p = (Fraction(p[0]), Fraction(p[1]))
    if gauge(body, p) != 1:
        raise DomainError(f"point {p} is not on the boundary")
    cum = _edge_params(body)
    for i in range(body.edge_count):
        a, b = body.edge(i)
        # p on segment [a, b]: collinear and between
        if cross(psub(b, a), psub(p, a)) != 0:
            continue
        d_ap = _l1(psub(p, a))
        d_pb = _l1(psub(b, p))
        if d_ap + d_pb == _l1(psub(b, a)):
            return cum[i] + d_ap
    raise DomainError(f"point {p} not located on any edge")


@dataclass(frozen=True)
class AngularMeasure:
    """Piecewise-constant boundary density in pi units, total mass exactly 2.

    `breakpoints` are increasing l1-arc-length parameters from vertex 0
    around the boundary, ending at the perimeter; `densities[k]` is the mass
    rate on (breakpoints[k], breakpoints[k+1]).  Being represented by a
    density makes the measure atom-free by construction.
    """

    body: SymmetricPolygon
    breakpoints: tuple[Fraction, ...]
    densities: tuple[Fraction, ...]

    def __init__(self, body, breakpoints, densities):
        bps = tuple(Fraction(b) for b in breakpoints)
        dens = tuple(Fraction(d) for d in densities)
        if len(bps) < 2 or len(dens) != len(bps) - 1:
            raise DomainError("need one density per breakpoint interval")
        if any(b2 <= b1 for b1, b2 in zip(bps, bps[1:])):
            raise DomainError("breakpoints must be strictly increasing")
        if bps[0] != 0:
            raise DomainError("breakpoints must start at 0")
        perimeter = _edge_params(body)[-1]
        if bps[-1] != perimeter:
            raise DomainError("last breakpoint must equal the l1 perimeter")
        if any(d < 0 for d in dens):
            raise DomainError("densities must be nonnegative")
        total = sum(
            d * (b2 - b1) for d, b1, b2 in zip(dens, bps, bps[1:])
        )
        if total != TOTAL_MASS:
            raise DomainError(f"total mass must be exactly 2, got {total}")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "breakpoints", bps)
        object.__setattr__(self, "densities", dens)
        masses = [Fraction(0)]
        for d, b1, b2 in zip(dens, bps, bps[1:]):
            masses.append(masses[-1] + d * (b2 - b1))
        object.__setattr__(self, "_cum_mass", tuple(masses))

    @property
    def perimeter(self) -> Fraction:
        return self.breakpoints[-1]

    def mass_before(self, t: Fraction) -> Fraction:
        """Mass of the counterclockwise arc from parameter 0 to t."""
        t = Fraction(t)
        if not (0 <= t <= self.perimeter):
            raise DomainError("parameter out of range")
        bps = self.breakpoints
        lo, hi = 0, len(bps) - 1
        while lo + 1 < hi:
            mid = (lo + hi) // 2
            if bps[mid] <= t:
                lo = mid
            else:
                hi = mid
        return self._cum_mass[lo] + self.densities[lo] * (t - bps[lo])

    def ccw_mass(self, t1: Fraction, t2: Fraction) -> Fraction:
        """Mass of the counterclockwise arc from parameter t1 to t2."""
        if t2 >= t1:
            return self.mass_before(t2) - self.mass_before(t1)
        return TOTAL_MASS - (self.mass_before(t1) - self.mass_before(t2))

    def zero_intervals(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return tuple(
            (b1, b2)
            for d, b1, b2 in zip(
                self.densities, self.breakpoints, self.breakpoints[1:]
            )
            if d == 0
        )


def prescribed_zero_arcs(
    body: SymmetricPolygon,
) -> tuple[tuple[Fraction, Fraction], ...]:
    """Parameter intervals that any constrained measure must annihilate.

    For each edge [a, b] of gauge length L > 1: the sub-segment within unit
    gauge distance of b is free, so [a, d] with gauge(b - d) = 1 is zeroed,
    as is [c, b] with gauge(a - c) = 1; both edges adjacent at a and b are
    zeroed entirely.
    """
    lengths = edge_gauge_lengths(body)
    cum = _edge_params(body)
    n = body.edge_count
    arcs: list[tuple[Fraction, Fraction]] = []
    for i, length in enumerate(lengths):
        if length <= 1:
            continue
        lo, hi = cum[i], cum[i + 1]
        span = hi - lo
        # fraction 1/L of the edge has unit gauge length
        first = lo + span / length
        last = hi - span / length
        arcs.append((lo, last))   # [a, d]
        arcs.append((first, hi))  # [c, b]
        arcs.append((cum[(i - 1) % n], cum[(i - 1) % n + 1]))  # edge into a
        arcs.append((cum[(i + 1) % n], cum[(i + 1) % n + 1]))  # edge out of b
    return tuple(arcs)


def build_constrained_measure(body: SymmetricPolygon) -> AngularMeasure:
    """Constrained measure: zero on all prescribed arcs, uniform elsewhere.

    Only defined for bodies that are not quasi hexagons; the remaining
    support always has positive length for such bodies (internal error if
    it ever degenerates) and carries mass 2 uniformly per l1 arc length.
    """
    from .planar import is_quasi_hexagon

    if is_quasi_hexagon(body)[0]:
        raise DomainError("constrained measures exist only for bodies that "
                          "are not quasi hexagons")
    cum = _edge_params(body)
    perimeter = cum[-1]
    arcs = prescribed_zero_arcs(body)
    points = {Fraction(0), perimeter}
    points.update(cum)
    for lo, hi in arcs:
        points.add(lo)
        points.add(hi)
    bps = sorted(points)
    support_len = Fraction(0)
    flags = []
    for b1, b2 in zip(bps, bps[1:]):
        zero = any(lo <= b1 and b2 <= hi for lo, hi in arcs)
        flags.append(zero)
        if not zero:
            support_len += b2 - b1
    if support_len == 0:
        raise RuntimeError(
            "prescribed arcs consumed the entire boundary; "
            f"unexpected for a non-quasi-hexagon body: {body.vertices}"
        )
    density = TOTAL_MASS / support_len
    densities = [Fraction(0) if z else density for z in flags]
    measure = AngularMeasure(body, bps, densities)
    # central symmetry: the antipodal map shifts the parameter by half the
    # perimeter, so the density pattern must repeat
    half = perimeter / 2
    for b1, b2, d in zip(bps, bps[1:], densities):
        mid = (b1 + b2) / 2
        t = mid + half if mid + half < perimeter else mid + half - perimeter
        lo = 0
        for k in range(len(densities)):
            if bps[k] <= t < bps[k + 1]:
                lo = k
                break
        if densities[lo] != d:
            raise RuntimeError("constructed measure is not symmetric")
    return measure


def arc_measure(
    measure: AngularMeasure, p: Point, q: Point, direction: str
) -> Fraction:
    """Exact mass of the clockwise or minor arc from p to q.

    Both points must lie on the boundary.  The minor arc is the one avoiding
    the antipode -p; it is undefined (error) when q = -p.
    """
    body = measure.body
    tp = param_of_point(body, p)
    tq = param_of_point(body, q)
    if direction == "clockwise":
        # walking clockwise from p to q covers the ccw arc from q to p
        return measure.ccw_mass(tq, tp)
    if direction == "minor":
        if (Fraction(q[0]), Fraction(q[1])) == pneg(p):
            raise DomainError("minor arc undefined for antipodal endpoints")
        if tp == tq:
            return Fraction(0)
        half = measure.perimeter / 2
        tneg = tp + half if tp + half < measure.perimeter else tp + half - measure.perimeter
        # is the antipode strictly inside the ccw arc p -> q?
        if tq >= tp:
            inside = tp < tneg < tq
        else:
            inside = tneg > tp or tneg < tq
        return measure.ccw_mass(tq, tp) if inside else measure.ccw_mass(tp, tq)
    raise DomainError(f"unknown direction {direction!r}")


def _unit_direction(body: SymmetricPolygon, v: Point) -> Point:
    g = gauge(body, v)
    if g == 0:
        raise DomainError("zero direction vector")
    return pscale(1 / g, v)


def polygon_angle_sum(measure: AngularMeasure, pts: Sequence[Point]) -> Fraction:
    """Sum of interior angles of a convex polygon, in pi units.

    Vertices may be listed in either orientation; the interior angle at v
    with neighbors u (previous) and w (next) in counterclockwise order is
    the arc swept from the unit-gauge direction of w - v counterclockwise
    to that of u - v (the directions pointing into the polygon).  For any
    valid measure the total is (len(pts) - 2) exactly.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in pts]
    if len(pts) < 3:
        raise DomainError("need at least three vertices")
    area2 = Fraction(0)
    for i in range(len(pts)):
        area2 += cross(pts[i], pts[(i + 1) % len(pts)])
    if area2 == 0:
        raise DomainError("degenerate polygon")
    if area2 < 0:
        pts.reverse()
    total = Fraction(0)
    body = measure.body
    n = len(pts)
    for i in range(n):
        v = pts[i]
        u = pts[(i - 1) % n]
        w = pts[(i + 1) % n]
        d_next = _unit_direction(body, psub(w, v))
        d_prev = _unit_direction(body, psub(u, v))
        # clockwise arc from d_prev to d_next == ccw sweep d_next -> d_prev
        total += arc_measure(measure, d_prev, d_next, "clockwise")
    return total


def triangle_angle_sum(
    measure: AngularMeasure, triangle: Sequence[Point]
) -> Fraction:
    """Angle sum of a non-degenerate triangle; exactly 1 for valid measures."""
    if len(triangle) != 3:
        raise DomainError("triangle needs exactly three points")
    return polygon_angle_sum(measure, triangle)


def separable_config_arc_bound(
    body: SymmetricPolygon,
    measure: AngularMeasure,
    u0: Point,
    u1: Point,
    u2: Point,
    shifted: bool = False,
) -> bool:
    """Check that the clockwise arc from u2 to u0 carries mass at least 1.

    The three contact vectors must be unit gauge with u1 on the clockwise
    arc from u2 to u0, and the four translates (the base, those at 2*u0 and
    2*u1, and the one at 2*u2 — or at 2*(u1-u2) in the shifted variant)
    must form a totally separable packing; violations raise DomainError.
    """
    for u in (u0, u1, u2):
        if gauge(body, u) != 1:
            raise DomainError(f"contact vector {u} is not unit gauge")
    last = psub(pscale(2, u1), pscale(2, u2)) if shifted else pscale(2, u2)
    centers = [(Fraction(0), Fraction(0)), pscale(2, u0), pscale(2, u1), last]
    packing = PlanarPacking(body, centers)
    result = verify_total_separability(packing)
    if not result.separable:
        raise DomainError(
            f"configuration is not totally separable: {result.failures}"
        )
    t0 = param_of_point(body, u0)
    t1 = param_of_point(body, u1)
    t2 = param_of_point(body, u2)
    # clockwise arc u2 -> u0 equals the ccw arc u0 -> u2
    if t2 >= t0:
        on_arc = t0 <= t1 <= t2
    else:
        on_arc = t1 >= t0 or t1 <= t2
    if not on_arc:
        raise DomainError("u1 must lie on the clockwise arc from u2 to u0")
    return arc_measure(measure, u2, u0, "clockwise") >= 1
