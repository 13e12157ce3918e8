"""Brute-force enumeration oracles for the partition statistics.

Two enumeration paths live here. ``enumerate_partitions`` streams explicit
``Partition`` objects (including every overline choice) and is the
readable reference. ``oracle_tables`` walks the same partitions in
multiplicity form and accumulates all six statistics in one pass; an
overpartition of a partition with d distinct part values has 2**d
overline variants, each with the same smallest part and multiplicity,
so those are counted with weight 2**d instead of being materialized.
The test suite checks the two paths agree on small n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product
from typing import Iterator

ORACLE_LIMIT = 60
OVERPARTITION_LIMIT = 40


class OracleRangeError(ValueError):
    pass


class PartitionClass(str, enum.Enum):
    ORDINARY = "ordinary"
    OVERPARTITION = "overpartition"
    DISTINCT_ODD_PARTS = "distinct_odd_parts"


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]
    overlines: frozenset[int] = field(default_factory=frozenset)

    @property
    def total(self) -> int:
        return sum(self.parts)

    @property
    def smallest(self) -> int | None:
        return self.parts[-1] if self.parts else None

    def multiplicity(self, value: int) -> int:
        return self.parts.count(value)


@dataclass(frozen=True)
class StatTable:
    """Exact values of one statistic; ``data[n]`` is the value at n = 0..N."""

    name: str
    data: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.data) - 1

    @property
    def values(self) -> tuple[int, ...]:
        """Values at n = 1..N."""
        return self.data[1:]

    def __getitem__(self, n: int) -> int:
        return self.data[n]

    def prefix(self, M: int) -> StatTable:
        return StatTable(self.name, self.data[: M + 1])


def _limit_for(cls: PartitionClass) -> int:
    return OVERPARTITION_LIMIT if cls is PartitionClass.OVERPARTITION else ORACLE_LIMIT


def _check(n: int, limit: int, what: str, lo: int = 0) -> None:
    if n < lo:
        raise OracleRangeError(f"{what} needs n >= {lo}, got {n}")
    if n > limit:
        raise OracleRangeError(f"{what} enumeration is limited to n <= {limit}, got {n}")


def _multiplicity_forms(n: int, max_part: int, odd_distinct: bool) -> Iterator[list[tuple[int, int]]]:
    # (value, multiplicity) pairs, values strictly decreasing
    if n == 0:
        yield []
        return
    for v in range(min(n, max_part), 0, -1):
        top = 1 if (odd_distinct and v & 1) else n // v
        for m in range(top, 0, -1):
            for rest in _multiplicity_forms(n - v * m, v - 1, odd_distinct):
                yield [(v, m)] + rest


def enumerate_partitions(n: int, cls: PartitionClass | str = PartitionClass.ORDINARY) -> Iterator[Partition]:
    """Stream every object of the class exactly once, in a fixed order.

    Parts are non-increasing. For overpartitions each distinct value
    is first emitted plain and then overlined.
    """
    cls = PartitionClass(cls)
    _check(n, _limit_for(cls), f"{cls.value} partitions")
    odd_distinct = cls is PartitionClass.DISTINCT_ODD_PARTS
    for form in _multiplicity_forms(n, n, odd_distinct):
        parts = tuple(v for v, m in form for _ in range(m))
        if cls is not PartitionClass.OVERPARTITION:
            yield Partition(parts)
            continue
        values = [v for v, _ in form]
        for marks in product((False, True), repeat=len(values)):
            yield Partition(parts, frozenset(v for v, mark in zip(values, marks) if mark))


@lru_cache(maxsize=8)
def oracle_tables(N: int) -> dict[str, StatTable]:
    """All six statistics for 0..N from a single walk over partitions.

    Every node of the walk (parts chosen from the largest value down) is
    itself a partition, so each partition of each total <= N is visited
    once.
    """
    _check(N, ORACLE_LIMIT, "oracle tables")
    p = [0] * (N + 1)
    spt = [0] * (N + 1)
    pbar = [0] * (N + 1)
    sptbar = [0] * (N + 1)
    m2 = [0] * (N + 1)
    m2spt = [0] * (N + 1)
    p[0] = pbar[0] = m2[0] = 1

    def visit(total: int, v: int, m: int, distinct: int, ok: bool) -> None:
        # (v, m): smallest part and its multiplicity
        weight = 1 << distinct
        p[total] += 1
        spt[total] += m
        pbar[total] += weight
        if v & 1:
            sptbar[total] += m * weight
        if ok:
            m2[total] += 1
            if not v & 1:
                m2spt[total] += m
        room = N - total
        for w in range(min(v - 1, room), 0, -1):
            for k in range(1, room // w + 1):
                visit(total + w * k, w, k, distinct + 1, ok and (k == 1 or not w & 1))

    for v in range(N, 0, -1):
        for k in range(1, N // v + 1):
            visit(v * k, v, k, 1, k == 1 or not v & 1)

    return {
        "p": StatTable("p", tuple(p)),
        "spt": StatTable("spt", tuple(spt)),
        "pbar": StatTable("pbar", tuple(pbar[: OVERPARTITION_LIMIT + 1])),
        "sptbar": StatTable("sptbar", tuple(sptbar[: OVERPARTITION_LIMIT + 1])),
        "m2": StatTable("m2", tuple(m2)),
        "m2spt": StatTable("m2spt", tuple(m2spt)),
    }


def _smallest_count(n: int, cls: PartitionClass, keep) -> int:
    total = 0
    for form in _multiplicity_forms(n, n, cls is PartitionClass.DISTINCT_ODD_PARTS):
        v, m = form[-1]
        if keep(v):
            total += m << len(form) if cls is PartitionClass.OVERPARTITION else m
    return total


def p_oracle(n: int) -> int:
    _check(n, ORACLE_LIMIT, "p")
    return sum(1 for _ in _multiplicity_forms(n, n, False))


def spt_oracle(n: int) -> int:
    _check(n, ORACLE_LIMIT, "spt", lo=1)
    return _smallest_count(n, PartitionClass.ORDINARY, lambda v: True)


def overpartition_count(n: int) -> int:
    _check(n, OVERPARTITION_LIMIT, "overpartition count")
    return sum(1 << len(form) for form in _multiplicity_forms(n, n, False))


def sptbar_oracle(n: int) -> int:
    """Occurrences of the smallest part, over overpartitions whose smallest part is odd.

    Overlined and plain copies of the smallest value both count, and the
    variants with and without the overline are separate overpartitions.
    """
    _check(n, OVERPARTITION_LIMIT, "sptbar", lo=1)
    return _smallest_count(n, PartitionClass.OVERPARTITION, lambda v: v & 1)


def m2_oracle(n: int) -> int:
    _check(n, ORACLE_LIMIT, "M2")
    return sum(1 for _ in _multiplicity_forms(n, n, True))


def m2spt_oracle(n: int) -> int:
    _check(n, ORACLE_LIMIT, "M2spt", lo=1)
    return _smallest_count(n, PartitionClass.DISTINCT_ODD_PARTS, lambda v: not v & 1)
