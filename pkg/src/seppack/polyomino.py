"""Cell clusters on square, king, and triangular lattices.

Adjacency counts feed the planar packing generators: the maximum number of
adjacent cell pairs among n cells is floor(2n - 2*sqrt(n)) on the square
lattice, floor(4n - sqrt(28n - 12)) with king (8-neighbor) adjacency, and
floor(3n - sqrt(12n - 3)) with triangular (6-neighbor) adjacency.  All floors
are evaluated with integer square roots; no floating point is involved.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

from .errors import ConstructionGapError, DomainError

Cell = tuple[int, int]

# half-sets of neighbor offsets; each unordered adjacency is counted once
_OFFSETS = {
    "square": ((1, 0), (0, 1)),
    "king": ((1, 0), (0, 1), (1, 1), (1, -1)),
    "triangular": ((1, 0), (0, 1), (1, 1)),
}

LATTICES = tuple(_OFFSETS)


@dataclass(frozen=True)
class CellCluster:
    """Nonempty set of cells, connected under its lattice's adjacency."""

    lattice: str
    cells: frozenset[Cell]

    def __init__(self, lattice: str, cells: Iterable[Cell]):
        if lattice not in _OFFSETS:
            raise DomainError(f"unknown lattice {lattice!r}")
        cellset = frozenset((int(x), int(y)) for x, y in cells)
        if not cellset:
            raise DomainError("cluster must be nonempty")
        object.__setattr__(self, "lattice", lattice)
        object.__setattr__(self, "cells", cellset)
        if not self._connected():
            raise DomainError("cluster is not connected under its lattice")

    def _connected(self) -> bool:
        offs = _OFFSETS[self.lattice]
        steps = [o for o in offs] + [(-a, -b) for a, b in offs]
        start = next(iter(self.cells))
        seen = {start}
        frontier = [start]
        while frontier:
            x, y = frontier.pop()
            for dx, dy in steps:
                nxt = (x + dx, y + dy)
                if nxt in self.cells and nxt not in seen:
                    seen.add(nxt)
                    frontier.append(nxt)
        return len(seen) == len(self.cells)

    def __len__(self) -> int:
        return len(self.cells)


def adjacency_count(cluster: CellCluster) -> int:
    """Exact number of adjacent cell pairs under the cluster's lattice."""
    offs = _OFFSETS[cluster.lattice]
    cells = cluster.cells
    return sum(
        1 for x, y in cells for dx, dy in offs if (x + dx, y + dy) in cells
    )


def _floor_minus_isqrt(a: int, radicand: int) -> int:
    """floor(a - sqrt(radicand)) for nonnegative integers, exactly."""
    s = math.isqrt(radicand)
    return a - s if s * s == radicand else a - s - 1


def max_adjacency(lattice: str, n: int) -> int:
    """The proven maximum adjacency count over n-cell clusters."""
    if n < 1:
        raise DomainError("n must be positive")
    if lattice == "square":
        return _floor_minus_isqrt(2 * n, 4 * n)
    if lattice == "king":
        return _floor_minus_isqrt(4 * n, 28 * n - 12)
    if lattice == "triangular":
        return _floor_minus_isqrt(3 * n, 12 * n - 3)
    raise DomainError(f"unknown lattice {lattice!r}")


# --- candidate shapes ---------------------------------------------------------
#
# square lattice: near-square rectangles plus a partial top row (quasi-squares)
# king lattice:   near-square rectangles with staircase-clipped corners; with
#                 clip depths d_i removing d_i(d_i+1)/2 cells each, the count
#                 simplifies to 4n + 2 - 3(a+b) + sum(d_i)

def _square_candidates(n: int) -> list[tuple[int, int, int]]:
    """(width, full_rows, partial) candidates near the square root."""
    root = math.isqrt(n)
    widths = {1, 2, n}
    widths.update(w for w in range(max(1, root - 4), root + 6))
    return [(a, *divmod(n, a)) for a in sorted(w for w in widths if 1 <= w <= n)]


def _square_count(a: int, q: int, r: int) -> int:
    base = q * (a - 1) + a * (q - 1)
    return base + ((2 * r - 1) if r else 0)


def _square_materialize(a: int, q: int, r: int) -> CellCluster:
    cells = [(x, y) for y in range(q) for x in range(a)]
    cells += [(x, q) for x in range(r)]
    return CellCluster("square", cells)


def _tri(d: int) -> int:
    return d * (d + 1) // 2


_CLIP_SUM: list[int] = []      # max d1+..+d4 with tri sums equal to index
_CLIP_PARTS: list[tuple] = []  # a witness depth tuple per index


def _grow_clip_table(dmax_deficit: int) -> None:
    need = dmax_deficit + 1
    if len(_CLIP_SUM) >= need:
        return
    size = max(need, 2 * len(_CLIP_SUM), 64)
    depth_cap = 1
    while _tri(depth_cap + 1) <= size:
        depth_cap += 1
    best = [[-1] * size for _ in range(5)]
    part = [[None] * size for _ in range(5)]
    best[0][0] = 0
    part[0][0] = ()
    for k in range(1, 5):
        for deficit in range(size):
            if best[k - 1][deficit] >= 0 and best[k - 1][deficit] > best[k][deficit]:
                best[k][deficit] = best[k - 1][deficit]
                part[k][deficit] = part[k - 1][deficit]
            for d in range(1, depth_cap + 1):
                t = _tri(d)
                if t > deficit:
                    break
                prev = best[k - 1][deficit - t]
                if prev >= 0 and prev + d > best[k][deficit]:
                    best[k][deficit] = prev + d
                    part[k][deficit] = part[k - 1][deficit - t] + (d,)
    _CLIP_SUM.clear()
    _CLIP_SUM.extend(best[4])
    _CLIP_PARTS.clear()
    _CLIP_PARTS.extend(part[4])


def _king_candidates(n: int) -> list[tuple[int, int, int, tuple[int, ...]]]:
    """(count, a, b, depths) for clipped rectangles near the optimum.

    The continuous optimum sits at a = b = 3*sqrt(n/7) with equal clip
    depths a/3, so the window is centred slightly above sqrt(n).
    """
    root = math.isqrt(n)
    lo = max(1, (root * 9) // 10 - 2)
    hi = (root * 5) // 4 + 5
    sides = set(range(lo, hi + 1))
    sides.update(range(1, min(n, 9) + 1))
    out = []
    for a in sorted(sides):
        for b in sorted(sides):
            if b < a or a * b < n:
                continue
            deficit = a * b - n
            _grow_clip_table(deficit)
            if _CLIP_SUM[deficit] < 0:
                continue
            depths = tuple(
                sorted(_CLIP_PARTS[deficit] + (0,) * 4, reverse=True)
            )[:4]
            d1, d2, d3, d4 = depths
            # corners (bl, tr, br, tl) = (d1, d2, d3, d4): clips must not
            # collide along any side
            if d1 + d3 > a - 1 or d2 + d4 > a - 1:
                continue
            if d1 + d4 > b - 1 or d2 + d3 > b - 1:
                continue
            count = 4 * n + 2 - 3 * (a + b) + sum(depths)
            out.append((count, a, b, depths))
    return out


def _king_materialize(a: int, b: int, depths: tuple[int, ...]) -> CellCluster:
    d1, d2, d3, d4 = depths  # bl, tr, br, tl
    cells = [
        (x, y)
        for x in range(a)
        for y in range(b)
        if x + y >= d1
        and (a - 1 - x) + (b - 1 - y) >= d2
        and (a - 1 - x) + y >= d3
        and x + (b - 1 - y) >= d4
    ]
    return CellCluster("king", cells)


# --- triangular lattice: centered hexagonal spiral ---------------------------

_SPIRAL_CELLS: list[Cell] = [(0, 0)]
_SPIRAL_CUM: list[int] = [0, 0]  # cumulative adjacency count by prefix size
_SPIRAL_SET: set[Cell] = {(0, 0)}
_SPIRAL_NEXT_RING: list[int] = [1]


def _spiral_ring(k: int) -> list[Cell]:
    """Ring k of the hexagonal spiral, starting adjacent to ring k-1.

    Starts one step below the (k,k) corner and winds clockwise, so every
    non-corner cell touches two cells of the previous ring; this ordering
    realizes the maximum adjacency count at every prefix.
    """
    legs = [((0, -1), k - 1), ((-1, -1), k), ((-1, 0), k),
            ((0, 1), k), ((1, 1), k), ((1, 0), k)]
    x, y = k, k - 1
    cells = [(x, y)]
    for (dx, dy), reps in legs:
        for _ in range(reps):
            x, y = x + dx, y + dy
            cells.append((x, y))
    return cells[:6 * k]


def _extend_spiral(n: int) -> None:
    while len(_SPIRAL_CELLS) < n:
        k = _SPIRAL_NEXT_RING[0]
        _SPIRAL_NEXT_RING[0] = k + 1
        for cell in _spiral_ring(k):
            x, y = cell
            gained = sum(
                1
                for dx, dy in ((1, 0), (0, 1), (1, 1), (-1, 0), (0, -1), (-1, -1))
                if (x + dx, y + dy) in _SPIRAL_SET
            )
            _SPIRAL_SET.add(cell)
            _SPIRAL_CELLS.append(cell)
            _SPIRAL_CUM.append(_SPIRAL_CUM[-1] + gained)


def spiral_prefix(n: int) -> tuple[list[Cell], int]:
    """First n cells of the hexagonal spiral and their adjacency count."""
    if n < 1:
        raise DomainError("n must be positive")
    _extend_spiral(n)
    return _SPIRAL_CELLS[:n], _SPIRAL_CUM[n]


# --- public construction ------------------------------------------------------

def optimal_adjacency(lattice: str, n: int) -> int:
    """Adjacency count optimal_cluster attains; verified against the formula."""
    target = max_adjacency(lattice, n)
    if lattice == "triangular":
        _, count = spiral_prefix(n)
    elif lattice == "square":
        count = max(_square_count(*cand) for cand in _square_candidates(n))
    elif lattice == "king":
        count = max(c for c, *_ in _king_candidates(n))
    else:
        raise DomainError(f"unknown lattice {lattice!r}")
    if count != target:
        raise ConstructionGapError(
            f"{lattice} candidates reach {count} adjacencies for n={n}, "
            f"formula says {target}"
        )
    return count


def optimal_cluster(lattice: str, n: int) -> CellCluster:
    """An n-cell cluster whose adjacency count meets the proven maximum.

    Raises ConstructionGapError if the canonical candidate family falls short
    of the formula (which would indicate a generator bug, not a tight input).
    """
    target = max_adjacency(lattice, n)
    if lattice == "triangular":
        cells, _ = spiral_prefix(n)
        cluster = CellCluster(lattice, cells)
    elif lattice == "square":
        best = max(_square_candidates(n), key=lambda cand: _square_count(*cand))
        cluster = _square_materialize(*best)
    elif lattice == "king":
        _, a, b, depths = max(_king_candidates(n))
        cluster = _king_materialize(a, b, depths)
    else:
        raise DomainError(f"unknown lattice {lattice!r}")
    if len(cluster) != n:
        raise ConstructionGapError(
            f"constructed {lattice} cluster has {len(cluster)} cells, "
            f"wanted {n}"
        )
    count = adjacency_count(cluster)
    if count != target:
        raise ConstructionGapError(
            f"constructed {lattice} cluster has {count} adjacencies for "
            f"n={n}, formula says {target}"
        )
    return cluster


def merge_clusters(p1: CellCluster, p2: CellCluster) -> CellCluster:
    """Glue two square-lattice clusters with exactly one overlapping cell.

    The left-most cell in the top row of the second cluster is translated
    onto the right-most cell in the bottom row of the first, so the union has
    n1 + n2 - 1 cells and at least the combined adjacency count.
    """
    if p1.lattice != "square" or p2.lattice != "square":
        raise DomainError("merge is defined for square-lattice clusters")
    bottom = min(y for _, y in p1.cells)
    anchor1 = max(x for x, y in p1.cells if y == bottom), bottom
    top = max(y for _, y in p2.cells)
    anchor2 = min(x for x, y in p2.cells if y == top), top
    dx = anchor1[0] - anchor2[0]
    dy = anchor1[1] - anchor2[1]
    shifted = {(x + dx, y + dy) for x, y in p2.cells}
    merged = set(p1.cells) | shifted
    if len(merged) != len(p1.cells) + len(p2.cells) - 1:
        raise ConstructionGapError(
            "merge produced more than one overlapping cell"
        )
    return CellCluster("square", merged)


def cluster_to_text(cluster: CellCluster) -> str:
    return "\n".join(f"{x} {y}" for x, y in sorted(cluster.cells)) + "\n"


def cluster_from_text(text: str, lattice: str) -> CellCluster:
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise DomainError(f"line {lineno}: expected 'x y'")
        cells.append((int(parts[0]), int(parts[1])))
    return CellCluster(lattice, cells)
