"""Integer partitions, conjugation, stretching and skew shapes."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = [
    "Partition",
    "SkewShape",
    "PartitionError",
    "parse_partition",
    "render_partition",
    "conjugate",
    "stretch",
    "skew",
    "rectangle",
    "partitions_in_box",
    "partitions_between",
]


class PartitionError(ValueError):
    """Raised for malformed partition text or invalid shapes."""


class Partition(tuple):
    """Immutable partition stored in canonical form (no zero parts).

    Construction accepts any weakly decreasing sequence of nonnegative
    integers; trailing zeros are dropped.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        for a, b in zip(parts, parts[1:]):
            if b > a:
                raise PartitionError(f"parts not weakly decreasing: {parts}")
        if parts and parts[-1] < 0:
            raise PartitionError(f"negative part in {parts}")
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, i: int) -> int:
        """Return the i-th part (0-based), treating missing parts as 0."""
        return self[i] if i < len(self) else 0

    def contains(self, other: Partition) -> bool:
        """True if the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(b <= a for a, b in zip(self, other))

    def conjugate(self) -> Partition:
        return conjugate(self)

    def render(self) -> str:
        return render_partition(self)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise PartitionError(
                f"{tuple(self.inner)} is not contained in {tuple(self.outer)}"
            )

    @property
    def row_lengths(self) -> tuple[int, ...]:
        return tuple(a - self.inner.part(i) for i, a in enumerate(self.outer))

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> Iterator[tuple[int, int]]:
        """Yield (row, column) of each box, rows top to bottom, left to right."""
        for i, a in enumerate(self.outer):
            for j in range(self.inner.part(i), a):
                yield i, j

    def __str__(self) -> str:
        return f"{render_partition(self.outer)}/{render_partition(self.inner)}"


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"4^1,3^2,2"`` style text into a Partition.

    ``v^k`` stands for k parts equal to v. Zero parts are dropped. Input that
    is not weakly decreasing is rejected rather than sorted.
    """
    text = text.strip()
    if text in ("", "()", "0"):
        return Partition()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1]
    parts: list[int] = []
    for token in text.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise PartitionError(f"malformed token {token!r} in {text!r}")
        value = int(m.group(1))
        count = int(m.group(2)) if m.group(2) is not None else 1
        if count < 1:
            raise PartitionError(f"exponent must be >= 1 in {token!r}")
        parts.extend([value] * count)
    for a, b in zip(parts, parts[1:]):
        if b > a:
            raise PartitionError(f"parts of {text!r} are not weakly decreasing")
    return Partition(parts)


def render_partition(lam: Iterable[int]) -> str:
    return ",".join(str(p) for p in lam)


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def stretch(n: int, lam: Partition) -> Partition:
    if n < 0:
        raise PartitionError("stretch factor must be nonnegative")
    return Partition(n * p for p in lam)


def skew(outer: Partition, inner: Partition) -> SkewShape:
    return SkewShape(Partition(outer), Partition(inner))


def rectangle(width: int, height: int) -> Partition:
    """The partition (width^height)."""
    if width <= 0 or height <= 0:
        return Partition()
    return Partition([width] * height)


def partitions_between(
    inner: Partition, outer: Partition, size: int
) -> Iterator[Partition]:
    """Yield partitions rho with inner ⊆ rho ⊆ outer and |rho| = size.

    Output is in reverse lexicographic order.
    """
    rows = len(outer)
    if len(inner) > rows or size < inner.size or size > outer.size:
        return

    def rec(i: int, cap: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                yield Partition(acc)
            return
        lo = inner.part(i)
        hi = min(outer[i], cap, left)
        tail_lo = sum(inner.part(k) for k in range(i + 1, rows))
        for v in range(hi, lo - 1, -1):
            rest = left - v
            if rest < tail_lo:
                continue
            if rest > sum(min(outer[k], v) for k in range(i + 1, rows)):
                break
            acc.append(v)
            yield from rec(i + 1, v, rest, acc)
            acc.pop()

    yield from rec(0, outer[0] if outer else 0, size, [])


def partitions_in_box(rows: int, width: int, size: int | None = None) -> Iterator[Partition]:
    """Partitions with at most ``rows`` parts, each at most ``width``."""
    box = rectangle(width, rows)
    if size is not None:
        yield from partitions_between(Partition(), box, size)
        return
    for s in range(box.size + 1):
        yield from partitions_between(Partition(), box, s)
