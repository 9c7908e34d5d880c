"""Integer partitions, their Young diagrams, and zero-copy subdiagram views.

A partition is stored as a non-increasing sequence of positive row lengths.
Solvers never slice the sequence: they look at single rows through a
``SubpositionView`` so that the number of probed entries stays logarithmic.
Every probe can be charged to a ``ProbeCounter``, which is what the
benchmark suite reports.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .errors import InvalidFamilyParam, NotAPartition, ParseError


class ProbeCounter:
    """Mutable tally of row probes made during one solver invocation.

    A fresh counter is created per call; nothing in the package keeps a
    global one, so concurrent solver calls never share state.
    """

    __slots__ = ("probes",)

    def __init__(self) -> None:
        self.probes = 0

    def __repr__(self) -> str:
        return f"ProbeCounter(probes={self.probes})"


def rightmost_true(hi: int, pred) -> int:
    """Largest k in 1..hi with pred(k) true, or 0 if none.

    ``pred`` must be monotone: once false it stays false.  Runs one
    predicate call per halving, i.e. ceil(log2(hi+1)) calls.
    """
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if pred(mid):
            lo = mid
        else:
            hi = mid - 1
    return lo


class Partition:
    """A non-increasing sequence of positive integers (row lengths).

    Immutable after construction.  ``n`` (the box count) is computed lazily
    and cached.  The backing sequence is usually a tuple but may be any
    random-access sequence, e.g. a ``range`` for huge staircases, so that
    benchmark boards need no materialized part list.
    """

    __slots__ = ("_parts", "_n")

    def __init__(self, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = None
        for idx, p in enumerate(parts):
            if not isinstance(p, int) or isinstance(p, bool) or p < 1:
                raise NotAPartition(f"part at index {idx} must be a positive integer, got {p!r}", index=idx)
            if prev is not None and p > prev:
                raise NotAPartition(f"parts must be non-increasing: {prev} precedes {p} at index {idx}", index=idx)
            prev = p
        self._parts = parts
        self._n = None

    @classmethod
    def _from_valid(cls, parts: Sequence[int], n: int | None = None) -> "Partition":
        """Wrap an already-validated non-increasing positive sequence."""
        obj = object.__new__(cls)
        obj._parts = parts
        obj._n = n
        return obj

    @property
    def parts(self) -> Sequence[int]:
        return self._parts

    @property
    def n(self) -> int:
        """Total number of boxes."""
        if self._n is None:
            self._n = sum(self._parts)
        return self._n

    def __len__(self) -> int:
        return len(self._parts)

    def __getitem__(self, k: int) -> int:
        return self._parts[k]

    def __iter__(self) -> Iterator[int]:
        return iter(self._parts)

    def __bool__(self) -> bool:
        return len(self._parts) > 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        if len(self._parts) != len(other._parts):
            return False
        return all(a == b for a, b in zip(self._parts, other._parts))

    def __hash__(self) -> int:
        return hash(tuple(self._parts))

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return format_partition(self)

    def view(self) -> "SubpositionView":
        """The whole diagram as a view with offsets (0, 0)."""
        return SubpositionView(self, 0, 0)

    def conjugate(self) -> "Partition":
        """The transposed diagram.

        Column i of this diagram becomes row i of the result.  Each column
        length is found by binary search on the non-increasing part list,
        so the total work is proportional to width * log(rows) rather than
        to the box count.
        """
        parts = self._parts
        if not parts:
            return Partition()
        out = []
        hi = len(parts)  # column lengths only shrink left to right
        for col in range(parts[0]):
            hi = rightmost_true(hi, lambda ell: parts[ell - 1] >= col + 1)
            out.append(hi)
        return Partition._from_valid(tuple(out), n=self._n)

    def durfee(self) -> int:
        """Side of the largest square fitting in the diagram."""
        return self.view().durfee()


class SubpositionView:
    """The subdiagram of ``base`` with ``i`` top rows and ``j`` left columns removed.

    Nothing is copied; the remaining rows are exposed through ``part_at``
    with trailing non-positive rows reading as 0.  Views past the diagram
    are legal and denote the empty partition.
    """

    __slots__ = ("base", "i", "j")

    def __init__(self, base: Partition, i: int = 0, j: int = 0):
        if i < 0 or j < 0:
            raise ValueError("view offsets must be nonnegative")
        self.base = base
        self.i = i
        self.j = j

    def shift(self, di: int, dj: int) -> "SubpositionView":
        """The view deeper by di rows and dj columns; offsets compose additively."""
        return SubpositionView(self.base, self.i + di, self.j + dj)

    def part_at(self, k: int, counter: ProbeCounter | None = None) -> int:
        """Length of the k-th remaining row (0-based); 0 past the diagram.  One probe."""
        if counter is not None:
            counter.probes += 1
        idx = self.i + k
        base = self.base._parts
        if 0 <= idx < len(base):
            v = base[idx] - self.j
            return v if v > 0 else 0
        return 0

    def _max_rows(self) -> int:
        return max(0, len(self.base._parts) - self.i)

    def durfee(self, counter: ProbeCounter | None = None) -> int:
        """Largest ell with at least ell rows of length >= ell; 0 iff empty.

        Binary search, at most ceil(log2(rows+1)) probes.
        """
        return rightmost_true(self._max_rows(), lambda ell: self.part_at(ell - 1, counter) >= ell)

    def column_length(self, col: int, counter: ProbeCounter | None = None) -> int:
        """Number of rows whose length exceeds ``col``; binary search probes."""
        return rightmost_true(self._max_rows(), lambda ell: self.part_at(ell - 1, counter) >= col + 1)

    def row_count(self, counter: ProbeCounter | None = None) -> int:
        """Number of (positive) rows in the subdiagram."""
        return self.column_length(0, counter)

    def is_empty(self, counter: ProbeCounter | None = None) -> bool:
        return self.part_at(0, counter) == 0

    def materialize(self) -> Partition:
        """Copy the subdiagram out into a standalone Partition."""
        rows = self.row_count()
        return Partition._from_valid(tuple(self.part_at(k) for k in range(rows)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SubpositionView):
            return NotImplemented
        return self.i == other.i and self.j == other.j and self.base == other.base

    def __hash__(self) -> int:
        return hash((self.base, self.i, self.j))

    def __repr__(self) -> str:
        return f"SubpositionView({self.base!r}, i={self.i}, j={self.j})"


class FamilyKind(Enum):
    STAIRCASE = "staircase"
    RECTANGLE = "rectangle"
    GAMMA = "gamma"


@dataclass(frozen=True)
class FamilySpec:
    """A named partition family: staircase(r), rectangle(r, c), or gamma(r, c)."""

    kind: FamilyKind
    r: int
    c: int | None = None


# Above this many rows a staircase is backed by a lazy range, not a tuple.
_LAZY_STAIRCASE_ROWS = 1 << 14


def make_family(spec: FamilySpec) -> Partition:
    """Build a family partition.

    staircase(r) = (r, r-1, ..., 1); rectangle(r, c) = c repeated r times;
    gamma(r, c) = (c, 1, ..., 1) with r rows.
    """
    kind, r, c = spec.kind, spec.r, spec.c
    if r < 1:
        raise InvalidFamilyParam(f"r must be >= 1, got {r}")
    if kind is FamilyKind.STAIRCASE:
        n = r * (r + 1) // 2
        if r > _LAZY_STAIRCASE_ROWS:
            return Partition._from_valid(range(r, 0, -1), n=n)
        return Partition._from_valid(tuple(range(r, 0, -1)), n=n)
    if c is None or c < 1:
        raise InvalidFamilyParam(f"c must be >= 1 for {kind.value}, got {c}")
    if kind is FamilyKind.RECTANGLE:
        return Partition._from_valid((c,) * r, n=r * c)
    if kind is FamilyKind.GAMMA:
        return Partition._from_valid((c,) + (1,) * (r - 1), n=c + r - 1)
    raise InvalidFamilyParam(f"unknown family kind {kind!r}")


def staircase(r: int) -> Partition:
    return make_family(FamilySpec(FamilyKind.STAIRCASE, r))


def rectangle(r: int, c: int) -> Partition:
    return make_family(FamilySpec(FamilyKind.RECTANGLE, r, c))


def gamma(r: int, c: int) -> Partition:
    return make_family(FamilySpec(FamilyKind.GAMMA, r, c))


_TOKEN_RE = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse a comma-separated part list with optional ``^m`` run exponents.

    ``"6,4^2,2,1^2"`` means (6, 4, 4, 2, 1, 1).  Whitespace around tokens is
    ignored; the empty string is the empty partition.  Raises ParseError for
    malformed tokens and NotAPartition when the expanded sequence increases,
    both carrying the offending token index.
    """
    if text.strip() == "":
        return Partition()
    out: list[int] = []
    prev = None
    for idx, token in enumerate(text.split(",")):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"malformed token {token.strip()!r} at index {idx}", index=idx)
        part = int(m.group(1))
        mult = int(m.group(2)) if m.group(2) is not None else 1
        if part < 1:
            raise ParseError(f"part must be >= 1, got {part} at index {idx}", index=idx)
        if mult < 1:
            raise ParseError(f"exponent must be >= 1, got {mult} at index {idx}", index=idx)
        if prev is not None and part > prev:
            raise NotAPartition(f"parts must be non-increasing: {part} after {prev} at index {idx}", index=idx)
        out.extend([part] * mult)
        prev = part
    return Partition._from_valid(tuple(out))


def format_partition(p: Partition) -> str:
    """Canonical text form: runs of equal parts printed as ``part^count``."""
    parts = p.parts
    pieces = []
    k = 0
    total = len(parts)
    while k < total:
        run = 1
        while k + run < total and parts[k + run] == parts[k]:
            run += 1
        pieces.append(f"{parts[k]}^{run}" if run >= 2 else str(parts[k]))
        k += run
    return ",".join(pieces)


def iter_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n in descending lexicographic order."""
    if n == 0:
        yield Partition()
        return

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield prefix
            return
        for first in range(min(cap, remaining), 0, -1):
            yield from rec(remaining - first, first, prefix + (first,))

    for parts in rec(n, n, ()):
        yield Partition._from_valid(parts, n=n)
