"""Ranking/unranking of k-subsets (combinatorial number system, colex order)."""

from __future__ import annotations

from math import comb
from typing import Iterable, Iterator


class KSubsetCodec:
    """Bijection between k-subsets of a fixed ground set and 0..C(n,k)-1.

    Ranks follow colexicographic order of the subsets (compare largest
    differing element), so they are strictly increasing in colex order.
    The ground set may be any strictly increasing integer sequence, e.g.
    {1..q} with one element removed.  k larger than the ground set is
    allowed and gives the empty family (count 0).
    """

    __slots__ = ("ground", "k", "_pos")

    def __init__(self, ground: Iterable[int], k: int):
        ground = tuple(ground)
        if any(a >= b for a, b in zip(ground, ground[1:])):
            raise ValueError("ground set must be strictly increasing")
        if k < 0:
            raise ValueError(f"k must be non-negative, got {k}")
        object.__setattr__(self, "ground", ground)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "_pos", {x: i for i, x in enumerate(ground)})

    def __setattr__(self, name, value):
        raise AttributeError("KSubsetCodec is immutable")

    @property
    def count(self) -> int:
        return comb(len(self.ground), self.k)

    def rank(self, subset: Iterable[int]) -> int:
        """Colex rank of a k-subset of the ground set."""
        try:
            positions = sorted(self._pos[x] for x in subset)
        except KeyError as exc:
            raise ValueError(f"element {exc.args[0]} not in ground set") from None
        if len(positions) != self.k or len(set(positions)) != self.k:
            raise ValueError(f"expected {self.k} distinct elements")
        return sum(comb(p, i + 1) for i, p in enumerate(positions))

    def unrank(self, r: int) -> tuple[int, ...]:
        """The k-subset with colex rank r."""
        if not 0 <= r < self.count:
            raise ValueError(f"rank {r} out of range [0, {self.count})")
        positions = [0] * self.k
        n, k = len(self.ground), self.k
        while k > 0:
            n -= 1
            c = comb(n, k)
            if r >= c:
                r -= c
                k -= 1
                positions[k] = n
        return tuple(self.ground[p] for p in positions)

    def subsets(self) -> Iterator[tuple[int, ...]]:
        """All k-subsets in colex (= rank) order."""
        for r in range(self.count):
            yield self.unrank(r)
