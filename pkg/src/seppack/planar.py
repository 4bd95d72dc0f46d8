"""Exact planar geometry of origin-symmetric convex polygons.

Bodies are strictly convex polygons with rational vertices, listed
counterclockwise and closed under negation, so every predicate below (gauge
values, contacts, separability, circumscribed parallelograms) is decided in
exact rational arithmetic.  Degenerate and smooth bodies are out of scope;
a fine polygonal approximation stands in for a disc.

The packing generators place translates on two-vector lattices whose
structure guarantees total separability: the two witness line families lie
along support lines of the body, spaced so that no translate interior ever
meets them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, Sequence

from .errors import DomainError, PackingError
from .polyomino import max_adjacency, optimal_cluster

Point = tuple[Fraction, Fraction]


def pt(x, y) -> Point:
    return (Fraction(x), Fraction(y))


def padd(a: Point, b: Point) -> Point:
    return (a[0] + b[0], a[1] + b[1])


def psub(a: Point, b: Point) -> Point:
    return (a[0] - b[0], a[1] - b[1])


def pneg(a: Point) -> Point:
    return (-a[0], -a[1])


def pscale(c, a: Point) -> Point:
    c = Fraction(c)
    return (c * a[0], c * a[1])


def cross(a: Point, b: Point) -> Fraction:
    return a[0] * b[1] - a[1] * b[0]


def dot(a: Point, b: Point) -> Fraction:
    return a[0] * b[0] + a[1] * b[1]


def _primitive(a: Point) -> tuple[int, int]:
    """Scale a rational vector to a primitive integer vector, same direction."""
    fx, fy = Fraction(a[0]), Fraction(a[1])
    den = fx.denominator * fy.denominator // math.gcd(
        fx.denominator, fy.denominator
    )
    ix, iy = int(fx * den), int(fy * den)
    g = math.gcd(abs(ix), abs(iy))
    return (ix // g, iy // g) if g else (0, 0)


@dataclass(frozen=True)
class SymmetricPolygon:
    """Strictly convex polygon with rational vertices, symmetric about o.

    Vertices are stored counterclockwise; vertex i + m is always the
    negation of vertex i (m = half the vertex count).
    """

    vertices: tuple[Point, ...]

    def __init__(self, vertices: Iterable):
        verts = tuple((Fraction(x), Fraction(y)) for x, y in vertices)
        n = len(verts)
        if n < 4 or n % 2:
            raise DomainError("need an even number (>= 4) of vertices")
        m = n // 2
        for i in range(n):
            a, b, c = verts[i], verts[(i + 1) % n], verts[(i + 2) % n]
            if cross(psub(b, a), psub(c, b)) <= 0:
                raise DomainError(
                    "vertices must be in strictly convex counterclockwise "
                    f"position (violated near vertex {i})"
                )
        for i in range(m):
            if verts[i + m] != pneg(verts[i]):
                raise DomainError("vertex list is not centrally symmetric")
        object.__setattr__(self, "vertices", verts)
        normals: list[tuple[int, int]] = []
        supports: list[Fraction] = []
        for i in range(n):
            e = psub(verts[(i + 1) % n], verts[i])
            nrm = _primitive((e[1], -e[0]))  # outward for CCW order
            h = Fraction(nrm[0]) * verts[i][0] + Fraction(nrm[1]) * verts[i][1]
            if h <= 0:
                raise DomainError("origin is not interior to the polygon")
            normals.append(nrm)
            supports.append(h)
        object.__setattr__(self, "_normals", tuple(normals))
        object.__setattr__(self, "_supports", tuple(supports))

    @property
    def edge_count(self) -> int:
        return len(self.vertices)

    def edge(self, i: int) -> tuple[Point, Point]:
        return self.vertices[i], self.vertices[(i + 1) % len(self.vertices)]

    def normals(self) -> tuple[tuple[int, int], ...]:
        return self._normals

    def supports(self) -> tuple[Fraction, ...]:
        return self._supports


def gauge(body: SymmetricPolygon, x: Point) -> Fraction:
    """Minkowski functional of the body: the t >= 0 with x on t * boundary."""
    x = (Fraction(x[0]), Fraction(x[1]))
    best = Fraction(0)
    for (nx, ny), h in zip(body.normals(), body.supports()):
        v = (nx * x[0] + ny * x[1]) / h
        if v > best:
            best = v
    return best


def support_value(body: SymmetricPolygon, phi: Point) -> Fraction:
    """Support function: max of the functional phi over the body."""
    return max(dot(phi, v) for v in body.vertices)


def edge_gauge_lengths(body: SymmetricPolygon) -> tuple[Fraction, ...]:
    return tuple(
        gauge(body, psub(body.edge(i)[1], body.edge(i)[0]))
        for i in range(body.edge_count)
    )


def boundary_edges_through(body: SymmetricPolygon, p: Point) -> list[int]:
    """Indices of edges whose supporting line passes through boundary point p."""
    if gauge(body, p) != 1:
        raise DomainError(f"point {p} is not on the boundary")
    out = []
    for i, ((nx, ny), h) in enumerate(zip(body.normals(), body.supports())):
        if nx * p[0] + ny * p[1] == h:
            out.append(i)
    return out


def is_parallelogram(body: SymmetricPolygon) -> bool:
    return body.edge_count == 4


def is_quasi_hexagon(
    body: SymmetricPolygon,
) -> tuple[bool, tuple[Point, Point] | None]:
    """Decide the quasi-hexagon property and return witness contact vectors.

    True when the boundary carries two segments of gauge length >= 1 sharing
    an endpoint: either one edge of gauge length >= 2 (two collinear
    segments inside it) or two adjacent edges each of gauge length >= 1.
    The witness (u1, u2) gives the segment directions scaled to unit gauge.
    """
    lengths = edge_gauge_lengths(body)
    n = body.edge_count
    for i, L in enumerate(lengths):
        if L >= 2:
            a, b = body.edge(i)
            u = pscale(1 / L, psub(b, a))
            return True, (u, pneg(u))
    for i in range(n):
        j = (i + 1) % n
        if lengths[i] >= 1 and lengths[j] >= 1:
            a = body.edge(i)[0]
            b = body.edge(i)[1]  # shared vertex
            c = body.edge(j)[1]
            u1 = pscale(1 / lengths[i], psub(b, a))
            u2 = pscale(1 / lengths[j], psub(b, c))
            return True, (u1, u2)
    return False, None


def classify_body(body: SymmetricPolygon) -> str:
    """'parallelogram', 'quasi-hexagon', or 'general'."""
    if is_parallelogram(body):
        return "parallelogram"
    return "quasi-hexagon" if is_quasi_hexagon(body)[0] else "general"


_CLASS_LATTICE = {
    "parallelogram": "king",
    "quasi-hexagon": "triangular",
    "general": "square",
}


def max_contact_count(body_class: str, n: int) -> int:
    """Largest contact number of a totally separable packing of n translates."""
    if body_class not in _CLASS_LATTICE:
        raise DomainError(f"unknown body class {body_class!r}")
    return max_adjacency(_CLASS_LATTICE[body_class], n)


@dataclass(frozen=True)
class PlanarPacking:
    """Translates body + center for each listed center point."""

    body: SymmetricPolygon
    centers: tuple[Point, ...]

    def __init__(self, body: SymmetricPolygon, centers: Iterable):
        cts = tuple((Fraction(x), Fraction(y)) for x, y in centers)
        if not cts:
            raise DomainError("a packing needs at least one translate")
        if len(set(cts)) != len(cts):
            raise DomainError("duplicate centers in packing")
        object.__setattr__(self, "body", body)
        object.__setattr__(self, "centers", cts)

    def __len__(self) -> int:
        return len(self.centers)


@dataclass(frozen=True)
class ContactGraph:
    n: int
    edges: frozenset[tuple[int, int]]

    def degree(self, i: int) -> int:
        return sum(1 for e in self.edges if i in e)

    def max_degree(self) -> int:
        return max((self.degree(i) for i in range(self.n)), default=0)


def contact_graph(packing: PlanarPacking) -> ContactGraph:
    """Edges at gauge distance exactly 2; raises PackingError on overlap."""
    body = packing.body
    centers = packing.centers
    den = 1
    for x, y in centers:
        den = den * x.denominator // math.gcd(den, x.denominator)
        den = den * y.denominator // math.gcd(den, y.denominator)
    scaled = [(int(x * den), int(y * den)) for x, y in centers]
    # per edge: integer normal and the rational threshold 2 * h * den
    tests = [
        (nx, ny, 2 * h * den)
        for (nx, ny), h in zip(body.normals(), body.supports())
    ]
    edges = set()
    m = len(centers)
    for i in range(m):
        xi, yi = scaled[i]
        for j in range(i + 1, m):
            dx, dy = xi - scaled[j][0], yi - scaled[j][1]
            touching = False
            inside = True
            for nx, ny, rhs in tests:
                s = nx * dx + ny * dy
                if s > rhs:
                    inside = False
                    break
                if s == rhs:
                    touching = True
            if inside:
                if touching:
                    edges.add((i, j))
                else:
                    raise PackingError(i, j, "gauge distance below 2")
    return ContactGraph(m, frozenset(edges))


# --- total separability -------------------------------------------------------

@dataclass(frozen=True)
class SeparabilityResult:
    separable: bool
    # per touching pair: a line (normal, offset) separating it and missing
    # every translate's interior
    witnesses: dict
    failures: tuple[tuple[tuple[int, int], int], ...]

    def __bool__(self) -> bool:
        return self.separable


def _normal_cone(body: SymmetricPolygon, w: Point) -> list[Point]:
    """Generators of the normal cone at boundary point w (1 or 2 normals)."""
    idx = boundary_edges_through(body, w)
    return [
        (Fraction(body.normals()[i][0]), Fraction(body.normals()[i][1]))
        for i in idx
    ]


def verify_total_separability(packing: PlanarPacking) -> SeparabilityResult:
    """Exact decision: every touching pair admits a separating line that
    misses every translate's interior.

    For a touching pair the line direction must support the body at the
    contact vector, so it ranges over the normal cone there; the offset is
    then forced.  Every other translate contributes a piecewise-linear
    constraint in the cone parameter, and feasibility is decided at the
    finitely many candidate parameters where constraints change sign.
    Tangency counts as missing the interior, so comparisons are closed.
    """
    graph = contact_graph(packing)
    centers = packing.centers
    body = packing.body
    witnesses: dict = {}
    failures: list[tuple[tuple[int, int], int]] = []
    for (i, j) in sorted(graph.edges):
        ci, cj = centers[i], centers[j]
        w = pscale(Fraction(1, 2), psub(cj, ci))
        cone = _normal_cone(body, w)
        n1 = cone[0]
        n2 = cone[1] if len(cone) > 1 else cone[0]
        others = [t for t in range(len(centers)) if t not in (i, j)]
        # linear data per constraint: value at lambda=0 and lambda=1
        deltas = [psub(centers[t], ci) for t in others]
        a0 = [dot(n1, d) for d in deltas]
        a1 = [dot(n2, d) for d in deltas]
        h0 = dot(n1, w)
        h1 = dot(n2, w)
        b0 = [a - 2 * h0 for a in a0]
        b1 = [a - 2 * h1 for a in a1]

        def feasible(lam: Fraction) -> int | None:
            """First blocking translate index at this direction, else None."""
            for idx_t in range(len(others)):
                av = a0[idx_t] + lam * (a1[idx_t] - a0[idx_t])
                if av <= 0:
                    continue
                bv = b0[idx_t] + lam * (b1[idx_t] - b0[idx_t])
                if bv >= 0:
                    continue
                return others[idx_t]
            return None

        candidates: list[Fraction] = [Fraction(0), Fraction(1), Fraction(1, 2)]
        found = None
        for lam in candidates:
            if feasible(lam) is None:
                found = lam
                break
        if found is None:
            # subdivide at every constraint sign change
            extra: set[Fraction] = set()
            for seq0, seq1 in ((a0, a1), (b0, b1)):
                for v0, v1 in zip(seq0, seq1):
                    if v0 != v1:
                        lam = v0 / (v0 - v1)
                        if 0 < lam < 1:
                            extra.add(lam)
            for lam in sorted(extra):
                if feasible(lam) is None:
                    found = lam
                    break
        if found is None:
            # report the direction satisfying the most constraints
            best_lam, best_block, best_bad = None, None, None
            for lam in candidates + sorted(extra):
                bad = 0
                block = None
                for idx_t in range(len(others)):
                    av = a0[idx_t] + lam * (a1[idx_t] - a0[idx_t])
                    bv = b0[idx_t] + lam * (b1[idx_t] - b0[idx_t])
                    if av > 0 and bv < 0:
                        bad += 1
                        if block is None:
                            block = others[idx_t]
                if best_bad is None or bad < best_bad:
                    best_lam, best_block, best_bad = lam, block, bad
            failures.append(((i, j), best_block))
        else:
            phi = padd(pscale(1 - found, n1), pscale(found, n2))
            witnesses[(i, j)] = (phi, dot(phi, ci) + dot(phi, w))
    return SeparabilityResult(not failures, witnesses, tuple(failures))


def check_witness_line(
    packing: PlanarPacking, pair: tuple[int, int], phi: Point, c: Fraction
) -> bool:
    """Independent recheck: the line separates the pair and misses interiors."""
    i, j = pair
    h = support_value(packing.body, phi)
    lo_i = dot(phi, packing.centers[i]) - h
    hi_i = dot(phi, packing.centers[i]) + h
    lo_j = dot(phi, packing.centers[j]) - h
    hi_j = dot(phi, packing.centers[j]) + h
    sides_ok = (hi_i <= c <= lo_j) or (hi_j <= c <= lo_i)
    if not sides_ok:
        return False
    for t, ct in enumerate(packing.centers):
        v = dot(phi, ct)
        if v - h < c < v + h:
            return False
    return True


# --- circumscribed parallelograms ---------------------------------------------

def min_area_circumscribed_parallelogram(
    body: SymmetricPolygon,
) -> tuple[tuple[Point, Point, Point, Point], tuple[Point, ...]]:
    """Minimum-area parallelogram containing the body, plus edge midpoints.

    Sweeps unordered pairs of edge-normal directions; for a polygon the
    minimum over such flush-flush parallelograms attains the global minimum,
    and the side midpoints of any minimum-area circumscribed parallelogram
    lie on the boundary (checked, error on failure).
    """
    m = body.edge_count // 2
    normals = body.normals()
    supports = body.supports()
    best = None
    for i in range(m):
        ni = (Fraction(normals[i][0]), Fraction(normals[i][1]))
        hi = supports[i]
        for j in range(i + 1, m):
            nj = (Fraction(normals[j][0]), Fraction(normals[j][1]))
            hj = supports[j]
            det = cross(ni, nj)
            if det == 0:
                continue
            area = 4 * hi * hj / abs(det)
            if best is None or area < best[0]:
                best = (area, ni, hi, nj, hj, det)
    if best is None:
        raise DomainError("no non-parallel edge direction pair found")
    _, ni, hi, nj, hj, det = best

    def solve(c1: Fraction, c2: Fraction) -> Point:
        # ni . x = c1, nj . x = c2
        x = (c1 * nj[1] - c2 * ni[1]) / det
        y = (ni[0] * c2 - nj[0] * c1) / det
        return (x, y)

    corners = (
        solve(hi, hj), solve(-hi, hj), solve(-hi, -hj), solve(hi, -hj)
    )
    midpoints = (
        solve(hi, Fraction(0)), solve(Fraction(0), hj),
        solve(-hi, Fraction(0)), solve(Fraction(0), -hj),
    )
    for p in midpoints:
        if gauge(body, p) != 1:
            raise DomainError(
                "minimum-area parallelogram midpoint fell off the boundary; "
                "body violates the flush-pair assumption"
            )
    return corners, midpoints


# --- packing generators --------------------------------------------------------

def _contact_segment_lattice(
    body: SymmetricPolygon,
) -> tuple[Point, Point] | None:
    """Unit vectors w1, w2 with [w1, w1+w2] and [w2, w1+w2] on the boundary.

    This is the two-segment contact structure that makes the triangular
    lattice packing totally separable; both segments must verify exactly.
    Returns None when no adjacent long edge pair produces one.
    """
    lengths = edge_gauge_lengths(body)
    n = body.edge_count
    for i in range(n):
        j = (i + 1) % n
        if lengths[i] < 1 or lengths[j] < 1:
            continue
        a = body.edge(i)[0]
        b = body.edge(i)[1]
        c = body.edge(j)[1]
        u1 = pscale(1 / lengths[i], psub(b, a))  # direction of edge i
        u2 = pscale(1 / lengths[j], psub(b, c))  # direction into edge j
        for w1, w2 in (((psub(b, u1)), u1), ((u2), psub(b, u2))):
            if gauge(body, w1) != 1 or gauge(body, w2) != 1:
                continue
            # segment [w1, w1+w2] must lie on one edge line, likewise [w2, .]
            apex = padd(w1, w2)
            if gauge(body, apex) != 1:
                continue
            if _on_common_edge(body, w1, apex) and _on_common_edge(
                body, w2, apex
            ):
                return w1, w2
    return None


def _on_common_edge(body: SymmetricPolygon, p: Point, q: Point) -> bool:
    ep = set(boundary_edges_through(body, p))
    eq = set(boundary_edges_through(body, q))
    return bool(ep & eq)


def generate_packing(body: SymmetricPolygon, n: int) -> PlanarPacking:
    """Totally separable packing of n translates with many contacts.

    Parallelograms tile a king lattice on their edge midpoints, other quasi
    hexagons a triangular lattice on the two-segment witness, and every other
    body a square grid on the midpoints of its minimum-area circumscribed
    parallelogram.  For the reference bodies the contact count equals
    max_contact_count(class, n); the output is always totally separable.
    """
    if n < 1:
        raise DomainError("n must be positive")
    cls = classify_body(body)
    if cls == "parallelogram":
        v = body.vertices
        u1 = pscale(Fraction(1, 2), padd(v[0], v[1]))
        u2 = pscale(Fraction(1, 2), padd(v[1], v[2]))
        cluster = optimal_cluster("king", n)
    elif cls == "quasi-hexagon":
        pair = _contact_segment_lattice(body)
        if pair is not None:
            u1, u2 = pair
            cluster = optimal_cluster("triangular", n)
        else:
            # no exact two-segment structure: fall back to the always-valid
            # grid construction (counts are then not claimed optimal)
            _, mids = min_area_circumscribed_parallelogram(body)
            u1, u2 = mids[0], mids[1]
            cluster = optimal_cluster("square", n)
    else:
        _, mids = min_area_circumscribed_parallelogram(body)
        u1, u2 = mids[0], mids[1]
        cluster = optimal_cluster("square", n)
    centers = [
        padd(pscale(2 * i, u1), pscale(2 * j, u2))
        for i, j in sorted(cluster.cells)
    ]
    return PlanarPacking(body, centers)


# --- reference bodies -----------------------------------------------------------

def square_body() -> SymmetricPolygon:
    return SymmetricPolygon([(1, -1), (1, 1), (-1, 1), (-1, -1)])


def hexagon_body() -> SymmetricPolygon:
    """The affine regular hexagon with vertices (1,0), (1,1), (0,1) and negatives."""
    return SymmetricPolygon(
        [(1, 0), (1, 1), (0, 1), (-1, 0), (-1, -1), (0, -1)]
    )


def octagon_body(t: Fraction = Fraction(5, 12)) -> SymmetricPolygon:
    """Rational stand-in for the regular octagon; not a quasi hexagon.

    Vertices (+-1, +-t) and (+-t, +-1); choosing t near sqrt(2)-1 keeps all edge
    gauge lengths below 1.
    """
    t = Fraction(t)
    if not (0 < t < 1):
        raise DomainError("octagon parameter must be in (0,1)")
    return SymmetricPolygon(
        [
            (1, -t), (1, t), (t, 1), (-t, 1),
            (-1, t), (-1, -t), (-t, -1), (t, -1),
        ]
    )


# --- JSON serialization ----------------------------------------------------------

def packing_to_json(packing: PlanarPacking) -> str:
    import json

    from .serialize import scalar_to_json

    doc = {
        "body": {
            "vertices": [
                [scalar_to_json(x), scalar_to_json(y)]
                for x, y in packing.body.vertices
            ]
        },
        "centers": [
            [scalar_to_json(x), scalar_to_json(y)]
            for x, y in packing.centers
        ],
    }
    return json.dumps(doc, indent=2) + "\n"


def packing_from_json(text: str) -> PlanarPacking:
    import json

    from .errors import ParseError
    from .serialize import fraction_from_json

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    if (
        not isinstance(doc, dict)
        or "body" not in doc
        or "centers" not in doc
        or not isinstance(doc["body"], dict)
        or "vertices" not in doc["body"]
    ):
        raise ParseError("packing JSON needs body.vertices and centers")

    def point(entry) -> Point:
        if not isinstance(entry, (list, tuple)) or len(entry) != 2:
            raise ParseError(f"expected a coordinate pair, got {entry!r}")
        return (fraction_from_json(entry[0]), fraction_from_json(entry[1]))

    body = SymmetricPolygon([point(v) for v in doc["body"]["vertices"]])
    return PlanarPacking(body, [point(c) for c in doc["centers"]])


def body_from_json(text: str) -> SymmetricPolygon:
    """Accept either a full packing document or a bare body document."""
    import json

    from .errors import ParseError
    from .serialize import fraction_from_json

    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    node = doc.get("body", doc) if isinstance(doc, dict) else None
    if not isinstance(node, dict) or "vertices" not in node:
        raise ParseError("body JSON needs a vertices array")
    return SymmetricPolygon(
        [
            (fraction_from_json(v[0]), fraction_from_json(v[1]))
            for v in node["vertices"]
        ]
    )


# --- boundary structure of contact graphs ---------------------------------------

@dataclass(frozen=True)
class BoundaryReport:
    v: int
    v2: int
    v3: int
    v4: int
    e: int
    angle_bound_holds: bool   # v2 + 2*v3 + 3*v4 <= 2v - 4
    euler_bound_holds: bool   # e <= 2n - 2 - v/2

    def as_dict(self) -> dict:
        return {
            "boundary_vertices": self.v,
            "degree2": self.v2, "degree3": self.v3, "degree4": self.v4,
            "edges": self.e,
            "angle_bound_holds": self.angle_bound_holds,
            "euler_bound_holds": self.euler_bound_holds,
        }


def _direction_half(d: Point) -> int:
    return 0 if (d[1] > 0 or (d[1] == 0 and d[0] > 0)) else 1


def _dir_cmp(a: Point, b: Point) -> int:
    ha, hb = _direction_half(a), _direction_half(b)
    if ha != hb:
        return -1 if ha < hb else 1
    c = cross(a, b)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def outer_boundary_vertices(
    centers: Sequence[Point], edges: Iterable[tuple[int, int]]
) -> list[int]:
    """Distinct vertices on the outer face of the straight-line embedding."""
    adj: dict[int, list[int]] = {}
    for i, j in edges:
        adj.setdefault(i, []).append(j)
        adj.setdefault(j, []).append(i)
    for v, nbrs in adj.items():
        nbrs.sort(
            key=cmp_to_key(
                lambda p, q: _dir_cmp(
                    psub(centers[p], centers[v]), psub(centers[q], centers[v])
                )
            )
        )
    directed = {(i, j) for i, j in edges} | {(j, i) for i, j in edges}
    faces = []
    seen: set[tuple[int, int]] = set()
    for start in sorted(directed):
        if start in seen:
            continue
        walk = []
        cur = start
        while cur not in seen:
            seen.add(cur)
            walk.append(cur)
            u, v = cur
            nbrs = adj[v]
            idx = nbrs.index(u)
            cur = (v, nbrs[(idx + 1) % len(nbrs)])
        faces.append(walk)
    # with neighbors sorted counterclockwise and successor "one past the
    # reverse edge", interior faces are traced clockwise (negative shoelace
    # area) and the outer face counterclockwise; bridges contribute zero
    best = None
    best_area = None
    for walk in faces:
        area = Fraction(0)
        for (u, v) in walk:
            area += cross(centers[u], centers[v])
        if best_area is None or area > best_area:
            best_area = area
            best = walk
    return sorted({u for u, _ in best})


def boundary_analysis(packing: PlanarPacking) -> BoundaryReport:
    """Outer-face degree counts and the two counting inequalities.

    Requires a connected contact graph on n >= 3 translates and a
    non-parallelogram body (straight-line planarity of the contact graph).
    """
    if is_parallelogram(packing.body):
        raise DomainError("boundary analysis needs a non-parallelogram body")
    n = len(packing.centers)
    if n < 3:
        raise DomainError("need at least 3 translates")
    graph = contact_graph(packing)
    adj: dict[int, set[int]] = {i: set() for i in range(n)}
    for i, j in graph.edges:
        adj[i].add(j)
        adj[j].add(i)
    seen = {0}
    frontier = [0]
    while frontier:
        u = frontier.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    if len(seen) != n:
        raise DomainError("contact graph is disconnected")
    boundary = outer_boundary_vertices(packing.centers, graph.edges)
    degs = [len(adj[v]) for v in boundary]
    v = len(boundary)
    v2 = sum(1 for d in degs if d == 2)
    v3 = sum(1 for d in degs if d == 3)
    v4 = sum(1 for d in degs if d == 4)
    e = len(graph.edges)
    angle_ok = v2 + 2 * v3 + 3 * v4 <= 2 * v - 4
    euler_ok = Fraction(e) <= 2 * n - 2 - Fraction(v, 2)
    return BoundaryReport(v, v2, v3, v4, e, angle_ok, euler_ok)
