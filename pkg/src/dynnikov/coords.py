"""Dynnikov coordinates of integral laminations on the punctured disk.

A lamination on the disk with ``n`` punctures is stored as two tuples
``a = (a_1, ..., a_{n-2})`` and ``b = (b_1, ..., b_{n-2})``.  Storage is
0-based (``c.a[0]`` is ``a_1``); everything printed or parsed uses the
1-based convention.

Extended coordinates add a dummy puncture at each end.  They carry ``n``
pairs ``(a_0, ..., a_{n-1}; b_0, ..., b_{n-1})`` with ``c.a[0]`` being
``a_0``, and describe a lamination on the disk with ``n + 2`` punctures
that never meets the two dummy end regions.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .errors import BadShape, ParseError, ZeroVector


def pos(x: int) -> int:
    """Positive part ``max(x, 0)``."""
    return x if x > 0 else 0


def ceil_half(i: int) -> int:
    """``ceil(i / 2)`` for a positive integer ``i``."""
    return (i + 1) // 2


def _as_int_tuple(values: Iterable[int], name: str) -> tuple[int, ...]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            try:
                iv = int(v)
            except (TypeError, ValueError):
                raise BadShape(f"{name} entries must be integers, got {v!r}") from None
            if iv != v:
                raise BadShape(f"{name} entries must be integers, got {v!r}")
            v = iv
        out.append(int(v))
    return tuple(out)


@dataclass(frozen=True)
class DynnikovCoordinates:
    """Coordinates ``(a; b)`` of a lamination on the ``n``-punctured disk."""

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 3:
            raise BadShape(f"need n >= 3 punctures, got n={self.n!r}")
        object.__setattr__(self, "a", _as_int_tuple(self.a, "a"))
        object.__setattr__(self, "b", _as_int_tuple(self.b, "b"))
        if len(self.a) != self.n - 2 or len(self.b) != self.n - 2:
            raise BadShape(
                f"n={self.n} needs {self.n - 2} a and b coordinates, "
                f"got {len(self.a)} and {len(self.b)}"
            )
        if not any(self.a) and not any(self.b):
            raise ZeroVector("the zero vector is not the coordinate vector of a lamination")

    @classmethod
    def from_pairs(cls, a: Sequence[int], b: Sequence[int]) -> "DynnikovCoordinates":
        return cls(len(a) + 2, tuple(a), tuple(b))

    def scaled(self, k: int) -> "DynnikovCoordinates":
        """Coordinates of ``k`` parallel copies (``k >= 1``)."""
        return DynnikovCoordinates(self.n, tuple(k * x for x in self.a), tuple(k * x for x in self.b))

    @property
    def size(self) -> int:
        """``M``: the sum of the absolute values of all coordinates."""
        return sum(map(abs, self.a)) + sum(map(abs, self.b))

    def __str__(self) -> str:
        return format_coordinates(self)


@dataclass(frozen=True)
class ExtendedCoordinates:
    """Extended coordinates ``(a_0, ..., a_{n-1}; b_0, ..., b_{n-1})``.

    The constructor checks the cheap centrality conditions (dummy ``a``
    entries vanish, ``b_0 <= 0 <= b_{n-1}``); :func:`is_central` performs the
    complete check.
    """

    n: int
    a: tuple[int, ...]
    b: tuple[int, ...]

    def __post_init__(self):
        if isinstance(self.n, bool) or not isinstance(self.n, int) or self.n < 3:
            raise BadShape(f"extended coordinates need n >= 3, got n={self.n!r}")
        object.__setattr__(self, "a", _as_int_tuple(self.a, "a"))
        object.__setattr__(self, "b", _as_int_tuple(self.b, "b"))
        if len(self.a) != self.n or len(self.b) != self.n:
            raise BadShape(
                f"extended coordinates with n={self.n} need {self.n} a and b entries, "
                f"got {len(self.a)} and {len(self.b)}"
            )
        if not any(self.a) and not any(self.b):
            raise ZeroVector("the zero vector is not the coordinate vector of a lamination")
        if self.a[0] != 0 or self.a[-1] != 0 or self.b[0] > 0 or self.b[-1] < 0:
            raise BadShape(
                "extended coordinates must satisfy a_0 = a_{n-1} = 0, b_0 <= 0 <= b_{n-1}"
            )

    @classmethod
    def from_pairs(cls, a: Sequence[int], b: Sequence[int]) -> "ExtendedCoordinates":
        return cls(len(a), tuple(a), tuple(b))

    def as_standard(self) -> DynnikovCoordinates:
        """The same lamination as ordinary coordinates on ``n + 2`` punctures."""
        return DynnikovCoordinates(self.n + 2, self.a, self.b)

    def collapse(self) -> DynnikovCoordinates:
        """Drop the dummy entries, giving coordinates on ``n`` punctures.

        Components that enclose every central puncture become boundary
        parallel on the smaller disk and are lost; use :meth:`as_standard`
        when the component count must be preserved.
        """
        return DynnikovCoordinates(self.n, self.a[1:-1], self.b[1:-1])

    def __str__(self) -> str:
        return format_coordinates(self)


Coordinates = Union[DynnikovCoordinates, ExtendedCoordinates]


@dataclass(frozen=True)
class IntersectionNumbers:
    """Intersection counts with the arcs ``beta_1..beta_{n-1}`` and ``alpha_1..alpha_{2n-4}``."""

    beta: tuple[int, ...]
    alpha: tuple[int, ...]


def validate(n: int, a: Sequence[int], b: Sequence[int]) -> DynnikovCoordinates:
    return DynnikovCoordinates(n, tuple(a), tuple(b))


def _max_term(a: Sequence[int], b: Sequence[int]) -> int:
    # max over k of |a_k| + b_k^+ + sum_{j<k} b_j
    best = None
    partial = 0
    for ak, bk in zip(a, b):
        t = abs(ak) + pos(bk) + partial
        if best is None or t > best:
            best = t
        partial += bk
    return best


def beta_numbers(c: DynnikovCoordinates) -> tuple[int, ...]:
    """Intersection numbers ``beta_1, ..., beta_{n-1}`` of a minimal representative."""
    top = 2 * _max_term(c.a, c.b)
    out = [top]
    partial = 0
    for bj in c.b:
        partial += bj
        out.append(top - 2 * partial)
    return tuple(out)


def alpha_numbers(c: DynnikovCoordinates, beta: Sequence[int] | None = None) -> tuple[int, ...]:
    """Intersection numbers ``alpha_1, ..., alpha_{2n-4}``."""
    if beta is None:
        beta = beta_numbers(c)
    out = []
    for i in range(1, 2 * c.n - 3):
        k = ceil_half(i)
        ak, bk = c.a[k - 1], c.b[k - 1]
        sign = 1 if i % 2 == 0 else -1
        half = beta[k - 1] // 2 if bk >= 0 else beta[k] // 2
        out.append(sign * ak + half)
    return tuple(out)


def intersection_numbers(c: DynnikovCoordinates) -> IntersectionNumbers:
    beta = beta_numbers(c)
    return IntersectionNumbers(beta=beta, alpha=alpha_numbers(c, beta))


def extend(c: DynnikovCoordinates) -> ExtendedCoordinates:
    """Add a dummy puncture at each end of the disk."""
    b0 = -_max_term(c.a, c.b)
    b_last = -b0 - sum(c.b)
    return ExtendedCoordinates(c.n, (0, *c.a, 0), (b0, *c.b, b_last))


def is_central(e: ExtendedCoordinates) -> bool:
    """True if the lamination misses both dummy end regions (``beta_0 = beta_n = 0``)."""
    beta = beta_numbers(e.as_standard())
    return beta[0] == 0 and beta[-1] == 0


_INT = re.compile(r"[+-]?\d+")
_SEP = re.compile(r"[\s,]+")
EXTENDED_MARKER = "extended"


def _parse_ints(part: str, what: str) -> list[int]:
    tokens = [t for t in _SEP.split(part.strip()) if t]
    out = []
    for t in tokens:
        if not _INT.fullmatch(t):
            raise ParseError(f"{what}: {t!r} is not a decimal integer")
        out.append(int(t))
    return out


def parse_coordinates(text: str) -> Coordinates:
    """Parse ``a_1,...,a_{n-2};b_1,...,b_{n-2}``.

    A leading ``extended`` marker (optionally followed by ``:``) makes the
    text denote extended coordinates ``a_0,...,a_{n-1};b_0,...,b_{n-1}``.
    """
    body = text.strip()
    extended = False
    if body.lower().startswith(EXTENDED_MARKER):
        extended = True
        body = body[len(EXTENDED_MARKER):].lstrip().removeprefix(":")
    parts = body.split(";")
    if len(parts) != 2:
        raise ParseError(f"expected exactly one ';' separating a and b, got {text!r}")
    a = _parse_ints(parts[0], "a")
    b = _parse_ints(parts[1], "b")
    if extended:
        return ExtendedCoordinates(len(a), tuple(a), tuple(b))
    if len(a) != len(b):
        raise BadShape(f"a has {len(a)} entries but b has {len(b)}")
    return DynnikovCoordinates(len(a) + 2, tuple(a), tuple(b))


def format_coordinates(c: Coordinates, marker: bool = False) -> str:
    text = ",".join(map(str, c.a)) + ";" + ",".join(map(str, c.b))
    if marker and isinstance(c, ExtendedCoordinates):
        return f"{EXTENDED_MARKER} {text}"
    return text
