"""Counting components by repeatedly simplifying extended coordinates.

Three moves act on extended coordinates while a counter ``Y`` records how
many elementary curves have been thrown away:

* fill a puncture that no loop surrounds (some ``b_i == 0``),
* erase the elementary curves about punctures ``i, i+1`` when
  ``a_{i-1} == a_i``,
* untwist with ``sigma_i`` or its inverse otherwise.

Every move lowers the complexity ``(n, sum |b_i|, i_index)`` in
lexicographic order and keeps ``components + Y`` fixed.  Once three
central punctures remain, the count is given in closed form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import NamedTuple

from .braid import gcd
from .coords import DynnikovCoordinates, ExtendedCoordinates, extend, format_coordinates, pos
from .errors import Diverged, IntegerOverflow, PreconditionViolated


class MoveKind(str, enum.Enum):
    EXTEND = "Extend"
    FILL = "FillPuncture"
    ERASE = "EraseElementary"
    UNTWIST_IA = "UntwistIa"
    UNTWIST_IB = "UntwistIb"
    UNTWIST_IIA = "UntwistIIa"
    UNTWIST_IIB = "UntwistIIb"
    FINAL = "FinalFormula"

    def __str__(self) -> str:
        return self.value


UNTWISTS = (MoveKind.UNTWIST_IA, MoveKind.UNTWIST_IB, MoveKind.UNTWIST_IIA, MoveKind.UNTWIST_IIB)
MOVES = (MoveKind.FILL, MoveKind.ERASE) + UNTWISTS


class ComplexityTriple(NamedTuple):
    n: int
    bsum: int
    i_index: int


@dataclass(frozen=True)
class ReductionState:
    coords: ExtendedCoordinates
    y: int = 0


@dataclass(frozen=True)
class MoveRecord:
    kind: MoveKind
    index: int
    coords: ExtendedCoordinates
    y: int

    @property
    def state(self) -> ReductionState:
        return ReductionState(self.coords, self.y)


@dataclass
class ReductionTrace:
    """What happened during one run.

    ``records`` is filled only when tracing was requested; the counters are
    always maintained.
    """

    initial: DynnikovCoordinates | ExtendedCoordinates
    records: list[MoveRecord] = field(default_factory=list)
    count: int | None = None
    moves: int = 0
    max_abs: int = 0

    @property
    def max_int_bits(self) -> int:
        return self.max_abs.bit_length()

    def lines(self) -> list[str]:
        return [
            f"step_{k}: {r.kind}@{r.index}  coords={format_coordinates(r.coords)}  Y={r.y}"
            for k, r in enumerate(self.records, start=1)
        ]

    def format(self) -> str:
        return "\n".join(self.lines())


def i_index(e: ExtendedCoordinates) -> int:
    """0 if some ``b_i`` vanishes, else the smallest ``i`` with ``b_i > 0``."""
    b = e.b
    if 0 in b:
        return 0
    for i in range(1, e.n):
        if b[i] > 0:
            return i
    raise PreconditionViolated("no positive b coordinate; coordinates are not central")


def complexity(e: ExtendedCoordinates) -> ComplexityTriple:
    return ComplexityTriple(e.n, sum(map(abs, e.b)), i_index(e))


def gcd_count(a1: int, b1: int) -> int:
    """Components of the lamination with coordinates ``(a1; b1)`` on three punctures."""
    return gcd(a1, b1)


# List-based move kernels shared by the public functions and the main loop.


def _erase(b: list[int], i: int) -> int:
    m = min(-b[i - 1], b[i])
    b[i - 1] += m
    b[i] -= m
    return m


def _untwist(a: list[int], b: list[int], i: int) -> MoveKind:
    a0, a1, b0, b1 = a[i - 1], a[i], b[i - 1], b[i]
    spread = b1 - b0
    d = a0 - a1
    if d > 0:
        if spread <= d:
            a[i - 1], a[i], b[i - 1], b[i] = a1 - b0, a0 - b1, b1, b0
            return MoveKind.UNTWIST_IA
        a[i - 1] = min(a1 - b0, a0)
        a[i] = max(a0 - b1, a1)
        b[i - 1] = b0 + d
        b[i] = b1 - d
        return MoveKind.UNTWIST_IB
    d = -d
    if spread <= d:
        a[i - 1], a[i], b[i - 1], b[i] = a1 + b0, a0 + b1, b1, b0
        return MoveKind.UNTWIST_IIA
    a[i - 1] = max(a0, a1 + b0)
    a[i] = min(a1, a0 + b1)
    b[i - 1] = b0 + d
    b[i] = b1 - d
    return MoveKind.UNTWIST_IIB


def _final(a1: int, b0: int, b1: int, b2: int, y: int) -> int:
    return gcd(a1, b1) + y + min(-b0, b2, -abs(a1) - b0 - pos(b1))


def fill_puncture(e: ExtendedCoordinates, i: int) -> ExtendedCoordinates:
    """Fill in puncture ``i + 1`` by deleting ``a_i`` and ``b_i`` (requires ``b_i == 0``)."""
    if e.n <= 3:
        raise PreconditionViolated("cannot fill a puncture when n <= 3")
    if not 0 <= i < e.n or e.b[i] != 0:
        raise PreconditionViolated(f"filling at index {i} needs b_{i} == 0")
    return ExtendedCoordinates(e.n - 1, e.a[:i] + e.a[i + 1:], e.b[:i] + e.b[i + 1:])


def erase_elementary(e: ExtendedCoordinates, i: int | None = None) -> tuple[ExtendedCoordinates, int]:
    """Remove the elementary curves about punctures ``i`` and ``i + 1``.

    With ``i`` omitted the algorithm's guard applies: every ``b_j`` is
    nonzero and ``i`` is :func:`i_index`.  An explicit ``i`` only needs
    ``b_{i-1} < 0 < b_i`` and ``a_{i-1} == a_i``.
    """
    if e.n <= 3:
        raise PreconditionViolated("erasing needs n > 3")
    if i is None:
        i = i_index(e)
        if i == 0:
            raise PreconditionViolated("erasing needs every b_j nonzero")
    elif not 1 <= i < e.n or not (e.b[i - 1] < 0 < e.b[i]):
        raise PreconditionViolated(f"erasing at {i} needs b_{i - 1} < 0 < b_{i}")
    if e.a[i - 1] != e.a[i]:
        raise PreconditionViolated(f"erasing at {i} needs a_{i - 1} == a_{i}")
    b = list(e.b)
    m = _erase(b, i)
    return ExtendedCoordinates(e.n, e.a, tuple(b)), m


def untwist(e: ExtendedCoordinates) -> tuple[ExtendedCoordinates, MoveKind]:
    if e.n <= 3:
        raise PreconditionViolated("untwisting needs n > 3")
    i = i_index(e)
    if i == 0:
        raise PreconditionViolated("untwisting needs every b_j nonzero")
    if e.a[i - 1] == e.a[i]:
        raise PreconditionViolated(f"untwisting at {i} needs a_{i - 1} != a_{i}")
    a, b = list(e.a), list(e.b)
    kind = _untwist(a, b, i)
    return ExtendedCoordinates(e.n, tuple(a), tuple(b)), kind


def final_count_n3(e: ExtendedCoordinates, y: int) -> int:
    """``gcd(a_1, b_1) + Y + Z`` where Z counts curves around all three central punctures."""
    if e.n != 3:
        raise PreconditionViolated(f"closed form needs n == 3, got n={e.n}")
    return _final(e.a[1], e.b[0], e.b[1], e.b[2], y)


def _move_budget(n: int, size: int) -> int:
    # generous cap, far above the O(n M) move count; only trips on a bug
    return 64 * n * (size + 1) + 64


def reduce_extended(
    e: ExtendedCoordinates,
    y: int = 0,
    trace: ReductionTrace | None = None,
    record: bool = False,
    int_bits: int | None = None,
) -> int:
    """Run the main loop from ``(e, y)`` and return the component count."""
    if trace is None:
        trace = ReductionTrace(initial=e)
    a, b = list(e.a), list(e.b)
    n = len(a)
    records = trace.records if record else None
    max_abs = max(max(map(abs, a)), max(map(abs, b)))
    limit = int_bits

    def too_big(v: int) -> bool:
        return limit is not None and v.bit_length() > limit

    if too_big(max_abs):
        raise IntegerOverflow(f"input needs {max_abs.bit_length()} bits, limit is {limit}")
    moves = 0
    budget = _move_budget(n, sum(map(abs, a)) + sum(map(abs, b)))
    last = complexity(e) if records is not None else None

    def log(kind: MoveKind, index: int) -> None:
        nonlocal last
        state = ExtendedCoordinates(n, tuple(a), tuple(b))
        now = complexity(state)
        if not now < last:
            raise Diverged(f"complexity {now} after {kind} is not below {last}")
        last = now
        records.append(MoveRecord(kind, index, state, y))

    while n > 3:
        # fill the first puncture without loops around it
        try:
            z = b.index(0)
        except ValueError:
            z = -1
        if z >= 0:
            del a[z]
            del b[z]
            n -= 1
            moves += 1
            if records is not None:
                log(MoveKind.FILL, z)
            continue

        i = 1
        while b[i] <= 0:
            i += 1
        while True:
            moves += 1
            if moves > budget:
                raise Diverged(f"no termination after {moves} moves")
            if a[i - 1] == a[i]:
                y += _erase(b, i)
                kind = MoveKind.ERASE
            else:
                kind = _untwist(a, b, i)
            m = max(abs(a[i - 1]), abs(a[i]), abs(b[i - 1]), abs(b[i]))
            if m > max_abs:
                max_abs = m
                if too_big(m):
                    raise IntegerOverflow(f"intermediate value needs {m.bit_length()} bits, limit is {limit}")
            if records is not None:
                log(kind, i)
            if kind is MoveKind.UNTWIST_IA or kind is MoveKind.UNTWIST_IIA:
                # the swapped pair puts the first positive b at i - 1
                i -= 1
                continue
            break

    count = _final(a[1], b[0], b[1], b[2], y)
    if records is not None:
        records.append(MoveRecord(MoveKind.FINAL, 0, ExtendedCoordinates(3, tuple(a), tuple(b)), y))
    trace.moves += moves
    trace.max_abs = max(trace.max_abs, max_abs)
    trace.count = count
    return count


def count_components(
    c: DynnikovCoordinates | ExtendedCoordinates,
    trace: bool = False,
    int_bits: int | None = None,
) -> tuple[int, ReductionTrace]:
    """Number of components of the lamination with coordinates ``c``.

    Returns the count together with a :class:`ReductionTrace`; move records
    are collected only when ``trace`` is true.  Extended coordinates are
    reduced directly from Step 2 with ``Y = 0``.  ``int_bits`` bounds the
    magnitude of every coordinate seen, raising :class:`IntegerOverflow`
    when exceeded.
    """
    tr = ReductionTrace(initial=c)
    if isinstance(c, DynnikovCoordinates):
        if c.n == 3:
            tr.count = gcd_count(c.a[0], c.b[0])
            tr.max_abs = max(abs(c.a[0]), abs(c.b[0]))
            if int_bits is not None and tr.max_abs.bit_length() > int_bits:
                raise IntegerOverflow(f"input needs {tr.max_int_bits} bits, limit is {int_bits}")
            return tr.count, tr
        e = extend(c)
        if trace:
            tr.records.append(MoveRecord(MoveKind.EXTEND, 0, e, 0))
    else:
        e = c
        if e.n == 3:
            tr.count = final_count_n3(e, 0)
            tr.max_abs = max(max(map(abs, e.a)), max(map(abs, e.b)))
            if trace:
                tr.records.append(MoveRecord(MoveKind.FINAL, 0, e, 0))
            return tr.count, tr
    count = reduce_extended(e, 0, tr, record=trace, int_bits=int_bits)
    return count, tr


def replay(trace: ReductionTrace) -> bool:
    """Re-run the recorded moves one by one with the public move functions.

    Returns True when every recorded state is reproduced.
    """
    records = trace.records
    if not records:
        return trace.count is not None
    start = 0
    if records[0].kind is MoveKind.EXTEND:
        if extend(trace.initial) != records[0].coords:
            return False
        state = ReductionState(records[0].coords, 0)
        start = 1
    else:
        state = ReductionState(trace.initial, 0)
    for r in records[start:]:
        e, y = state.coords, state.y
        if r.kind is MoveKind.FILL:
            e = fill_puncture(e, r.index)
        elif r.kind is MoveKind.ERASE:
            e, m = erase_elementary(e, r.index)
            y += m
        elif r.kind in UNTWISTS:
            e, kind = untwist(e)
            if kind is not r.kind:
                return False
        elif r.kind is MoveKind.FINAL:
            if final_count_n3(e, y) != trace.count:
                return False
        else:
            return False
        state = ReductionState(e, y)
        if state != r.state:
            return False
    return True
