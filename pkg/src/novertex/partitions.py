"""Integer partitions and the cell statistics used by the hook-weighted sums.

Rows and columns are 1-based throughout, matching the usual Young diagram
convention; ``row(i)`` returns 0 for ``i`` past the last part so that hook,
arm and leg formulas can be evaluated at cells outside the diagram.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cache, cached_property, total_ordering
from typing import Iterator, NamedTuple


@total_ordering
@dataclass(frozen=True, eq=True)
class Partition:
    """A weakly decreasing tuple of positive integers."""

    parts: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if not isinstance(p, int) or p < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < p:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")

    @classmethod
    def of(cls, *parts: int) -> Partition:
        return cls(tuple(parts))

    def __repr__(self) -> str:
        return f"Partition{self.parts!r}" if len(self.parts) != 1 else f"Partition(({self.parts[0]},))"

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.parts)) + ")" if self.parts else "()"

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __lt__(self, other: Partition) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.sort_key < other.sort_key

    @cached_property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        # size first, then reverse-lexicographic (larger leading parts first)
        return (self.size, tuple(-p for p in self.parts))

    @cached_property
    def size(self) -> int:
        return sum(self.parts)

    def row(self, i: int) -> int:
        """``λ_i`` with the convention ``λ_i = 0`` for ``i > ℓ(λ)``."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def col(self, j: int) -> int:
        """``λ^t_j``, the length of column ``j``."""
        return self.conjugate.row(j)

    @cached_property
    def conjugate(self) -> Partition:
        return conjugate(self)

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self.parts, start=1):
            for j in range(1, p + 1):
                yield (i, j)

    def contains(self, other: Partition) -> bool:
        """True when the diagram of ``other`` fits inside this one."""
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self.parts, other.parts))

    def hook(self, i: int, j: int) -> int:
        return self.row(i) + self.col(j) - i - j + 1

    def arm(self, i: int, j: int) -> int:
        return self.row(i) - j

    def leg(self, i: int, j: int) -> int:
        return self.col(j) - i

    def content(self, i: int, j: int) -> int:
        return j - i


EMPTY = Partition()


@cache
def conjugate(lam: Partition) -> Partition:
    if not lam:
        return EMPTY
    return Partition(tuple(sum(1 for p in lam.parts if p >= i) for i in range(1, lam.parts[0] + 1)))


class CellStats(NamedTuple):
    hook: dict[tuple[int, int], int]
    arm: dict[tuple[int, int], int]
    leg: dict[tuple[int, int], int]
    content: dict[tuple[int, int], int]


def cell_stats(lam: Partition) -> CellStats:
    hook, arm, leg, content = {}, {}, {}, {}
    for c in lam.cells():
        hook[c] = lam.hook(*c)
        arm[c] = lam.arm(*c)
        leg[c] = lam.leg(*c)
        content[c] = lam.content(*c)
    return CellStats(hook, arm, leg, content)


@cache
def hooks(lam: Partition) -> tuple[int, ...]:
    """Hook lengths of all cells, row by row."""
    return tuple(lam.hook(i, j) for i, j in lam.cells())


class Stats(NamedTuple):
    size: int
    kappa: int
    norm_sq: int
    n_stat: int


@cache
def stats(lam: Partition) -> Stats:
    """Size, framing exponent κ, ``‖λ‖²`` and ``n(λ) = Σ(i-1)λ_i``."""
    p = lam.parts
    return Stats(
        size=sum(p),
        kappa=sum(x * (x - 2 * i + 1) for i, x in enumerate(p, start=1)),
        norm_sq=sum(x * x for x in p),
        n_stat=sum((i - 1) * x for i, x in enumerate(p, start=1)),
    )


def kappa(lam: Partition) -> int:
    return stats(lam).kappa


def norm_sq(lam: Partition) -> int:
    return stats(lam).norm_sq


def n_stat(lam: Partition) -> int:
    return stats(lam).n_stat


class FrobeniusCoords(NamedTuple):
    r: int
    m: tuple[int, ...]
    n: tuple[int, ...]


def frobenius(lam: Partition) -> FrobeniusCoords:
    r = 0
    while lam.row(r + 1) >= r + 1:
        r += 1
    m = tuple(lam.row(i) - i for i in range(1, r + 1))
    n = tuple(lam.col(i) - i for i in range(1, r + 1))
    return FrobeniusCoords(r, m, n)


@cache
def enumerate_partitions(d: int) -> tuple[Partition, ...]:
    """All partitions of ``d`` in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be non-negative")
    out: list[Partition] = []

    def rec(remaining: int, cap: int, acc: list[int]) -> None:
        if remaining == 0:
            out.append(Partition(tuple(acc)))
            return
        for part in range(min(cap, remaining), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(d, d, [])
    return tuple(out)


def partitions_up_to(d: int) -> Iterator[Partition]:
    for k in range(d + 1):
        yield from enumerate_partitions(k)


@cache
def sub_partitions(lam: Partition) -> tuple[Partition, ...]:
    """Every partition whose diagram fits inside ``lam`` (including ∅ and ``lam``)."""
    out: list[Partition] = []

    def rec(i: int, cap: int, acc: list[int]) -> None:
        out.append(Partition(tuple(acc)))
        if i >= len(lam):
            return
        for part in range(min(cap, lam.parts[i]), 0, -1):
            acc.append(part)
            rec(i + 1, part, acc)
            acc.pop()

    rec(0, lam.row(1), [])
    return tuple(sorted(out))


def tuples_up_to(count: int, total: int) -> Iterator[tuple[Partition, ...]]:
    """All ``count``-tuples of partitions whose sizes sum to at most ``total``."""
    if count == 0:
        yield ()
        return
    for size in range(total + 1):
        for lam in enumerate_partitions(size):
            for rest in tuples_up_to(count - 1, total - size):
                yield (lam, *rest)


def is_horizontal_strip(outer: Partition, inner: Partition) -> bool:
    """``outer/inner`` has at most one cell in each column."""
    if not outer.contains(inner):
        return False
    return all(inner.row(i) >= outer.row(i + 1) for i in range(1, len(outer) + 1))


def is_vertical_strip(outer: Partition, inner: Partition) -> bool:
    return is_horizontal_strip(outer.conjugate, inner.conjugate)
