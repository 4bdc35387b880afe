"""Brute-force component counter.

Rebuilds the minimal representative combinatorially: every arc ``beta_i``
carries ``beta_i`` points numbered top to bottom, and each region between
consecutive arcs pairs up the points on its boundary.  In a region the
endpoints on either side come, top to bottom, from above components, then
loop components (nested), then below components.  Closed curves are the
cycles obtained by alternately crossing the regions on either side of a
point.

This module shares nothing with the reduction algorithm beyond the
intersection-number formulas, and costs ``O(sum beta_i)`` per call.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .coords import Coordinates, DynnikovCoordinates, ExtendedCoordinates, alpha_numbers, beta_numbers
from .errors import InconsistentDiagram


@dataclass(frozen=True)
class RegionProfile:
    """Arc types in the region between ``beta_i`` and ``beta_{i+1}``."""

    above: int
    below: int
    loops: int
    loop_side: str  # "right", "left" or "none"


def region_profiles(c: DynnikovCoordinates) -> list[RegionProfile]:
    beta = beta_numbers(c)
    alpha = alpha_numbers(c, beta)
    out = []
    for k in range(c.n - 2):
        a_k, b_k = c.a[k], c.b[k]
        loops = abs(b_k)
        above = alpha[2 * k] - loops
        below = alpha[2 * k + 1] - loops
        if above < 0 or below < 0:
            raise InconsistentDiagram(f"region {k + 1}: above={above}, below={below}")
        if below - above != 2 * a_k:
            raise InconsistentDiagram(f"region {k + 1}: below - above != 2 a_{k + 1}")
        side = "right" if b_k > 0 else "left" if b_k < 0 else "none"
        left_pts = above + below + (2 * loops if side == "right" else 0)
        right_pts = above + below + (2 * loops if side == "left" else 0)
        if left_pts != beta[k] or right_pts != beta[k + 1]:
            raise InconsistentDiagram(f"region {k + 1}: endpoint counts do not match beta")
        out.append(RegionProfile(above, below, loops, side))
    return out


@dataclass
class CurveDiagram:
    """Points on the beta arcs and the pairings made by the regions.

    Point ``p`` has half-edges ``2p`` (towards the region on its left) and
    ``2p + 1`` (towards the region on its right); ``mate`` sends a half-edge
    to the one at the other end of the same arc segment.
    """

    beta: tuple[int, ...]
    offsets: tuple[int, ...]
    mate: list[int]

    @property
    def num_points(self) -> int:
        return len(self.mate) // 2

    def locate(self, p: int) -> tuple[int, int]:
        """1-based ``(arc, position)`` of global point ``p``."""
        for i in range(len(self.beta) - 1, -1, -1):
            if p >= self.offsets[i]:
                return i + 1, p - self.offsets[i] + 1
        raise IndexError(p)

    def check(self) -> None:
        mate = self.mate
        for h, m in enumerate(mate):
            if m < 0 or m == h or mate[m] != h:
                raise InconsistentDiagram(f"half-edge {h} is not properly paired")
        for i, bi in enumerate(self.beta):
            if bi % 2:
                raise InconsistentDiagram(f"beta_{i + 1} = {bi} is odd")

    def count_cycles(self, starts: Iterable[int] | None = None) -> int:
        mate = self.mate
        seen = bytearray(self.num_points)
        if starts is None:
            starts = range(self.num_points)
        count = 0
        for s in starts:
            if seen[s]:
                continue
            count += 1
            h0 = 2 * s
            h = h0
            while True:
                seen[h >> 1] = 1
                h = mate[h] ^ 1
                if h == h0:
                    break
        return count

    def dump(self) -> str:
        lines = []
        for h in range(0, len(self.mate), 2):
            arc, p = self.locate(h >> 1)
            la, lp = self.locate(self.mate[h] >> 1)
            ra, rp = self.locate(self.mate[h + 1] >> 1)
            lines.append(f"beta_{arc}[{p}]: left->beta_{la}[{lp}] right->beta_{ra}[{rp}]")
        return "\n".join(lines)


def build_matchings(profiles: Sequence[RegionProfile], beta: Sequence[int]) -> CurveDiagram:
    beta = tuple(beta)
    if len(profiles) != len(beta) - 1:
        raise InconsistentDiagram("need one profile per region between consecutive beta arcs")
    offsets = []
    total = 0
    for bi in beta:
        offsets.append(total)
        total += bi
    mate = [-1] * (2 * total)

    def pair_slices(h_from: int, h_to: int, count: int) -> None:
        # count consecutive points, half-edge parity taken from h_from / h_to
        if count <= 0:
            return
        src = range(h_from, h_from + 2 * count, 2)
        dst = range(h_to, h_to + 2 * count, 2)
        mate[src.start:src.stop:2] = dst
        mate[dst.start:dst.stop:2] = src

    # end regions: nested caps around the first and last punctures
    first, last = offsets[0], offsets[-1]
    for p in range(beta[0]):
        mate[2 * (first + p)] = 2 * (first + beta[0] - 1 - p)
    for p in range(beta[-1]):
        mate[2 * (last + p) + 1] = 2 * (last + beta[-1] - 1 - p) + 1

    for k, prof in enumerate(profiles):
        left, right = offsets[k], offsets[k + 1]
        A, B, m = prof.above, prof.below, prof.loops
        if A + B + (2 * m if prof.loop_side == "right" else 0) != beta[k]:
            raise InconsistentDiagram(f"region {k + 1}: left endpoint count mismatch")
        if A + B + (2 * m if prof.loop_side == "left" else 0) != beta[k + 1]:
            raise InconsistentDiagram(f"region {k + 1}: right endpoint count mismatch")
        # left-arc points face this region through half-edge 2p+1, right-arc points through 2p
        pair_slices(2 * left + 1, 2 * right, A)
        lb = rb = A
        if prof.loop_side == "right":
            base = left + A
            for j in range(m):
                mate[2 * (base + j) + 1] = 2 * (base + 2 * m - 1 - j) + 1
                mate[2 * (base + 2 * m - 1 - j) + 1] = 2 * (base + j) + 1
            lb += 2 * m
        elif prof.loop_side == "left":
            base = right + A
            for j in range(m):
                mate[2 * (base + j)] = 2 * (base + 2 * m - 1 - j)
                mate[2 * (base + 2 * m - 1 - j)] = 2 * (base + j)
            rb += 2 * m
        pair_slices(2 * (left + lb) + 1, 2 * (right + rb), B)
    return CurveDiagram(beta=beta, offsets=tuple(offsets), mate=mate)


def _standard(c: Coordinates) -> DynnikovCoordinates:
    # Extended coordinates are ordinary coordinates on the disk with two more
    # punctures; this keeps components that enclose every central puncture.
    if isinstance(c, ExtendedCoordinates):
        return c.as_standard()
    return c


def curve_diagram(c: Coordinates) -> CurveDiagram:
    c = _standard(c)
    return build_matchings(region_profiles(c), beta_numbers(c))


def oracle_count(c: Coordinates) -> int:
    """Number of components, by tracing the reconstructed curve diagram."""
    diagram = curve_diagram(c)
    count = diagram.count_cycles()
    if count < 1:
        raise InconsistentDiagram("diagram has no closed curves")
    return count
