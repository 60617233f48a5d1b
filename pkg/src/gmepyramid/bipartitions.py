"""Canonical bipartitions of an N-party system.

A cut S | rest is stored by its smaller side. Every subset with
1 <= |S| <= floor(N/2) appears once; when N is even, the half-size class
is deduplicated against complements by keeping the representative that
contains subsystem 1. The canonical list therefore has 2**(N-1) - 1
entries, grouped smallest cardinality first and lexicographic within a
group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass


@dataclass(frozen=True)
class Bipartition:
    """One cut of an ``n``-party system: ``subset`` versus the rest."""

    subset: tuple[int, ...]
    n: int

    def __post_init__(self) -> None:
        subset = tuple(int(i) for i in self.subset)
        object.__setattr__(self, "subset", subset)
        if self.n < 2:
            raise ValueError("a bipartition needs at least 2 parties")
        if not subset:
            raise ValueError("cut subset is empty")
        if list(subset) != sorted(set(subset)):
            raise ValueError(f"cut indices must be strictly increasing, got {subset}")
        if subset[0] < 1 or subset[-1] > self.n:
            raise ValueError(f"cut indices {subset} out of range 1..{self.n}")
        if len(subset) > self.n // 2:
            raise ValueError(
                f"canonical cuts store the smaller side: |S|={len(subset)} > {self.n}//2"
            )
        if 2 * len(subset) == self.n and subset[0] != 1:
            raise ValueError("half-size cuts are canonicalized to contain subsystem 1")

    @property
    def size(self) -> int:
        return len(self.subset)

    def complement(self) -> tuple[int, ...]:
        """Subsystem indices on the other side of the cut, sorted."""
        inside = set(self.subset)
        return tuple(i for i in range(1, self.n + 1) if i not in inside)

    def label(self) -> str:
        """Comma-joined indices, e.g. ``\"1,3\"``; used in reports and keys."""
        return ",".join(str(i) for i in self.subset)


def canonical_bipartitions(n: int) -> list[Bipartition]:
    """All canonical cuts of an ``n``-party system.

    Exactly C(n, k) cuts per size k < n/2 plus C(n, n/2)/2 at the half size
    when n is even; 2**(n-1) - 1 in total.
    """
    if n < 2:
        raise ValueError("need at least 2 parties")
    cuts = []
    for k in range(1, n // 2 + 1):
        for comb in itertools.combinations(range(1, n + 1), k):
            if 2 * k == n and comb[0] != 1:
                continue
            cuts.append(Bipartition(comb, n))
    return cuts
