"""Scored records, score-ascending ranking with tie policies, and cut-off fractions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Iterable

from .errors import EmptySample, NonFiniteScore
from .rounding import to_fraction


class TiePolicy(str, Enum):
    """How tied scores share the ranks they occupy.

    midrank assigns every tied record the mean of the occupied ranks (the
    standard rank-statistic treatment).  pessimistic pushes responders to
    the low end of the tie group, optimistic to the high end; together they
    bound the score potential of a sample with ties.
    """

    MIDRANK = "midrank"
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"


@dataclass(frozen=True)
class ScoredRecord:
    """One promotable name: identifier, model score, observed binary response."""

    id: str
    score: float
    response: int

    def __post_init__(self):
        object.__setattr__(self, "score", float(self.score))
        object.__setattr__(self, "response", int(self.response))
        if self.response not in (0, 1):
            raise ValueError(f"record {self.id!r}: response must be 0 or 1")
        if not math.isfinite(self.score):
            raise NonFiniteScore(self.id)


@dataclass(frozen=True)
class CutOff:
    """Fraction of the top-scored names selected for promotion (pass / total)."""

    fraction: Fraction

    def __post_init__(self):
        object.__setattr__(self, "fraction", to_fraction(self.fraction))
        if not 0 < self.fraction <= 1:
            raise ValueError(f"cut-off fraction must be in (0, 1], got {self.fraction}")

    def __str__(self) -> str:
        return f"{float(self.fraction) * 100:g}%"


@dataclass(frozen=True)
class RankedSample:
    """A test sample ordered by ascending score with ranks 1..#X.

    records and ranks are parallel: rank 1 belongs to the lowest score,
    rank #X to the highest.  Within a tie group the stored record order is
    already adjusted for the tie policy, so downstream bucket assignment
    can slice records positionally.
    """

    records: tuple[ScoredRecord, ...]
    ranks: tuple[float, ...]
    tie_policy: TiePolicy = TiePolicy.MIDRANK

    def __post_init__(self):
        if not self.records:
            raise EmptySample()
        if len(self.records) != len(self.ranks):
            raise ValueError("records and ranks must be parallel")
        scores = [r.score for r in self.records]
        if scores != sorted(scores):
            raise ValueError("records must be ordered by ascending score")
        n = len(self.records)
        # Ranks are halves of integers, so this float sum is exact below 2**52.
        if sum(self.ranks) != n * (n + 1) / 2:
            raise ValueError("rank sum must equal #X(#X+1)/2")

    @property
    def size_x(self) -> int:
        return len(self.records)

    @cached_property
    def responders_k(self) -> int:
        return sum(r.response for r in self.records)

    @cached_property
    def response_rate_r(self) -> Fraction:
        return Fraction(self.responders_k, self.size_x)

    @cached_property
    def has_ties(self) -> bool:
        return any(
            a.score == b.score for a, b in zip(self.records, self.records[1:])
        )


def rank_sample(
    records: Iterable[ScoredRecord],
    tie_policy: TiePolicy = TiePolicy.MIDRANK,
) -> RankedSample:
    """Rank records ascending by score, resolving ties per the given policy.

    Input order is preserved within tie groups (before the policy reorders
    responders), which makes ranking deterministic for repeated runs.
    """
    ordered = sorted(records, key=lambda r: r.score)
    if not ordered:
        raise EmptySample()
    n = len(ordered)
    ranks = [0.0] * n

    i = 0
    while i < n:
        j = i
        while j + 1 < n and ordered[j + 1].score == ordered[i].score:
            j += 1
        if i == j:
            ranks[i] = float(i + 1)
        elif tie_policy is TiePolicy.MIDRANK:
            mid = (i + 1 + j + 1) / 2
            for p in range(i, j + 1):
                ranks[p] = mid
        else:
            group = ordered[i : j + 1]
            if tie_policy is TiePolicy.PESSIMISTIC:
                group.sort(key=lambda r: -r.response)
            else:
                group.sort(key=lambda r: r.response)
            ordered[i : j + 1] = group
            for p in range(i, j + 1):
                ranks[p] = float(p + 1)
        i = j + 1

    return RankedSample(tuple(ordered), tuple(ranks), tie_policy)
