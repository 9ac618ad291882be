"""Integer partitions and the census of Morse-Smale mapping classes.

Distinct partitions of the genus g map to distinct Dold classes realized
by homeomorphisms of the genus-g surface, so the partition count P(g) is
a lower bound for the number of conjugacy classes of mapping classes
containing Morse-Smale diffeomorphisms.  The correspondences:

    orientable:       a_n = -2 p_n (n != 1),   a_1 = -2 (p_1 - 1)
    non-orientable:   a_n = -p_n  (n != 1),    a_1 = 2 - p_1

where p_n is the multiplicity of the part n.  Exact counting is integer
dynamic programming; the Hardy-Ramanujan asymptotic is a float-valued
diagnostic and never feeds exact outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, Iterator, Mapping, Optional

from .arith import DoldClass

__all__ = [
    "Partition",
    "CensusReport",
    "partition_count",
    "enumerate_partitions",
    "hardy_ramanujan_estimate",
    "partition_to_dold_orientable",
    "partition_to_dold_nonorientable",
    "census",
]


class Partition:
    """An unordered partition, stored as multiplicities part -> count."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Mapping[int, int]):
        cleaned: Dict[int, int] = {}
        for k, p in parts.items():
            k, p = int(k), int(p)
            if k < 1 or p < 0:
                raise ValueError("parts must be positive with nonnegative multiplicity")
            if p:
                cleaned[k] = p
        self._parts = dict(sorted(cleaned.items()))

    @classmethod
    def from_parts(cls, parts: list[int]) -> "Partition":
        counts: Dict[int, int] = {}
        for k in parts:
            counts[k] = counts.get(k, 0) + 1
        return cls(counts)

    @property
    def number(self) -> int:
        """The integer being partitioned."""
        return sum(k * p for k, p in self._parts.items())

    def multiplicity(self, k: int) -> int:
        return self._parts.get(k, 0)

    def parts(self) -> Dict[int, int]:
        return dict(self._parts)

    def as_list(self) -> list[int]:
        """Parts in decreasing order, e.g. [3, 1, 1]."""
        out = []
        for k in sorted(self._parts, reverse=True):
            out.extend([k] * self._parts[k])
        return out

    def __eq__(self, other: object):
        if isinstance(other, Partition):
            return self._parts == other._parts
        return NotImplemented

    def __hash__(self):
        return hash(tuple(self._parts.items()))

    def __repr__(self) -> str:
        return f"Partition({self.as_list()!r})"


def partition_count(n: int) -> int:
    """Exact P(n) by dynamic programming over parts; P(0) = 1."""
    if n < 0:
        raise ValueError("partition counts are defined for nonnegative integers")
    ways = [1] + [0] * n
    for part in range(1, n + 1):
        for total in range(part, n + 1):
            ways[total] += ways[total - part]
    return ways[n]


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of n, each exactly once, in decreasing lexicographic order."""
    if n < 1:
        raise ValueError("enumeration needs a positive integer")

    def descend(remaining: int, cap: int, prefix: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition.from_parts(prefix)
            return
        for part in range(min(remaining, cap), 0, -1):
            prefix.append(part)
            yield from descend(remaining - part, part, prefix)
            prefix.pop()

    yield from descend(n, n, [])


def hardy_ramanujan_estimate(n: int) -> float:
    """The asymptotic exp(pi sqrt(2n/3)) / (4 n sqrt(3))."""
    if n < 1:
        raise ValueError("the estimate needs a positive integer")
    return math.exp(math.pi * math.sqrt(2 * n / 3)) / (4 * n * math.sqrt(3))


def partition_to_dold_orientable(p: Partition) -> DoldClass:
    """Dold class of the orientation-preserving model built from p_n copies."""
    coeffs = {n: -2 * m for n, m in p.parts().items() if n != 1}
    coeffs[1] = -2 * (p.multiplicity(1) - 1)
    return DoldClass(coeffs)


def partition_to_dold_nonorientable(p: Partition) -> DoldClass:
    """Dold class of the non-orientable model built from p_n copies."""
    coeffs = {n: -m for n, m in p.parts().items() if n != 1}
    coeffs[1] = 2 - p.multiplicity(1)
    return DoldClass(coeffs)


@dataclass(frozen=True)
class CensusReport:
    """P(genus) with its asymptotic diagnostic and optional class samples."""

    genus: int
    exact_count: int
    hr_estimate: float
    ratio: float
    statement: str
    sample_dold_classes: Optional[tuple[tuple[Partition, DoldClass], ...]] = None


def census(
    genus: int,
    correspondence: Optional[str] = None,
    limit: Optional[int] = None,
) -> CensusReport:
    """The partition census at a given genus.

    ``correspondence`` ("orientable" or "nonorientable") requests sample
    Dold classes, one per partition, truncated to ``limit`` entries.
    """
    if genus < 1:
        raise ValueError("the census needs genus at least 1")
    exact = partition_count(genus)
    estimate = hardy_ramanujan_estimate(genus)
    samples = None
    if correspondence is not None:
        if correspondence == "orientable":
            to_dold = partition_to_dold_orientable
        elif correspondence == "nonorientable":
            to_dold = partition_to_dold_nonorientable
        else:
            raise ValueError(f"unknown correspondence {correspondence!r}")
        collected = []
        for p in enumerate_partitions(genus):
            if limit is not None and len(collected) >= limit:
                break
            collected.append((p, to_dold(p)))
        samples = tuple(collected)
    return CensusReport(
        genus=genus,
        exact_count=exact,
        hr_estimate=estimate,
        ratio=estimate / exact,
        statement=(
            f"P({genus}) = {exact} is a lower bound for the number of conjugacy"
            " classes of mapping classes (orientable and non-orientable alike)"
            " containing Morse-Smale diffeomorphisms"
        ),
        sample_dold_classes=samples,
    )
