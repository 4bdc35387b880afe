"""Action of the Artin generators on Dynnikov coordinates.

``sigma_i`` exchanges punctures ``i`` and ``i+1`` counterclockwise.  Words
act left to right: the first generator listed is applied first.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from .coords import Coordinates, DynnikovCoordinates, ExtendedCoordinates, pos
from .errors import IndexOutOfRange, ParseError


@dataclass(frozen=True)
class BraidGenerator:
    index: int
    sign: int = 1

    def __post_init__(self):
        if self.index < 1:
            raise IndexOutOfRange(f"generator index must be >= 1, got {self.index}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @classmethod
    def from_int(cls, k: int) -> "BraidGenerator":
        if k == 0:
            raise ParseError("generator 0 is undefined")
        return cls(abs(k), 1 if k > 0 else -1)

    def inverse(self) -> "BraidGenerator":
        return BraidGenerator(self.index, -self.sign)

    def __int__(self) -> int:
        return self.sign * self.index

    def __str__(self) -> str:
        return str(int(self))


@dataclass(frozen=True)
class BraidWord:
    generators: tuple[BraidGenerator, ...] = ()

    @classmethod
    def from_ints(cls, ks: Iterable[int]) -> "BraidWord":
        return cls(tuple(BraidGenerator.from_int(k) for k in ks))

    def inverse(self) -> "BraidWord":
        return BraidWord(tuple(g.inverse() for g in reversed(self.generators)))

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return BraidWord(self.generators + other.generators)

    def __str__(self) -> str:
        return " ".join(map(str, self.generators))


_TOKEN = re.compile(r"[+-]?\d+")


def parse_word(text: str, n: int | None = None) -> BraidWord:
    """Parse whitespace/comma separated nonzero integers; ``-k`` is ``sigma_k^{-1}``.

    If ``n`` is given, indices outside ``1..n-1`` are rejected.
    """
    gens = []
    for tok in re.split(r"[\s,]+", text.strip()):
        if not tok:
            continue
        if not _TOKEN.fullmatch(tok):
            raise ParseError(f"{tok!r} is not an integer generator")
        k = int(tok)
        if k == 0:
            raise ParseError("generator 0 is undefined")
        if n is not None and abs(k) > n - 1:
            raise ParseError(f"generator {k} out of range for n={n}")
        gens.append(BraidGenerator.from_int(k))
    return BraidWord(tuple(gens))


def interior_update(a0: int, b0: int, a1: int, b1: int, sign: int) -> tuple[int, int, int, int]:
    """Update the adjacent pairs ``(a_{i-1}, b_{i-1}), (a_i, b_i)`` under ``sigma_i^sign``.

    Returns ``(a_{i-1}', b_{i-1}', a_i', b_i')``.
    """
    p0, p1 = pos(b0), pos(b1)
    if sign > 0:
        m = max(a0 + p0 + p1, a1 + b0)
        return (
            max(a0 + p0, a1 + b0),
            a1 + b0 + b1 - m,
            b1 - max(-a0, p1 - a1),
            m - a1,
        )
    m = max(-a0 + p0 + p1, -a1 + b0)
    return (
        min(a0 - p0, a1 - b0),
        -a1 + b0 + b1 - m,
        max(a0, a1 + p1) - b1,
        a1 + max(p0 + p1 - a0, b0 - a1),
    )


def _left_update(a: int, b: int, sign: int) -> tuple[int, int]:
    if sign > 0:
        return b - max(0, pos(b) - a), pos(b) - a
    return max(0, a + pos(b)) - b, a + pos(b)


def _right_update(a: int, b: int, sign: int) -> tuple[int, int]:
    if sign > 0:
        return max(a + pos(b), b), b - a - pos(b)
    return min(a - pos(b), -b), a + b - pos(b)


def _check_index(g: BraidGenerator, n: int) -> None:
    if not 1 <= g.index <= n - 1:
        raise IndexOutOfRange(f"generator sigma_{g.index} does not act on {n} punctures")


def apply_generator_standard(c: DynnikovCoordinates, g: BraidGenerator) -> DynnikovCoordinates:
    """Coordinates of ``sigma_i(L)`` (or its inverse) on the ``n``-punctured disk."""
    n = c.n
    _check_index(g, n)
    a, b = list(c.a), list(c.b)
    i = g.index
    if i == 1:
        a[0], b[0] = _left_update(a[0], b[0], g.sign)
    elif i == n - 1:
        a[-1], b[-1] = _right_update(a[-1], b[-1], g.sign)
    else:
        a[i - 2], b[i - 2], a[i - 1], b[i - 1] = interior_update(
            a[i - 2], b[i - 2], a[i - 1], b[i - 1], g.sign
        )
    return DynnikovCoordinates(n, tuple(a), tuple(b))


def apply_generator_extended(e: ExtendedCoordinates, g: BraidGenerator) -> ExtendedCoordinates:
    """Generator action on the central punctures ``1..n`` of the extended disk."""
    _check_index(g, e.n)
    a, b = list(e.a), list(e.b)
    i = g.index
    a[i - 1], b[i - 1], a[i], b[i] = interior_update(a[i - 1], b[i - 1], a[i], b[i], g.sign)
    return ExtendedCoordinates(e.n, tuple(a), tuple(b))


def apply_generator(c: Coordinates, g: BraidGenerator) -> Coordinates:
    if isinstance(c, ExtendedCoordinates):
        return apply_generator_extended(c, g)
    return apply_generator_standard(c, g)


def apply_word(c: Coordinates, w: BraidWord | Sequence[int]) -> Coordinates:
    if not isinstance(w, BraidWord):
        w = BraidWord.from_ints(w)
    for g in w:
        _check_index(g, c.n)
    for g in w:
        c = apply_generator(c, g)
    return c


def gcd(x: int, y: int) -> int:
    """Non-negative gcd with ``gcd(0, k) = |k|`` and ``gcd(0, 0) = 0``."""
    return math.gcd(x, y)
