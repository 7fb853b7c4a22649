"""Partitions, bipartitions, excess bounds, and the Springer-fiber dimension.

A *bipartition* here is a single finite sequence c = (c1, c2, c3, ...) of
nonnegative integers whose odd-position entries (c1, c3, c5, ...) and
even-position entries (c2, c4, c6, ...) each form a weakly decreasing
sequence.  Conceptually the sequence is infinite with trailing zeros; the
canonical stored form trims trailing zeros only, so interior zeros are
significant: (1, 0, 1) and (1, 1) are different bipartitions.

The *excess* pair (e, e') bounds how much the sequence may climb from one
entry to the next: c[i] + e >= c[i+1] at odd positions i and c[i] + e' >=
c[i+1] at even positions (1-based).  A partition is exactly a bipartition
with excess (0, 0).  The sets BP(n; e, e') of weight-n bipartitions with a
given excess index the strata of the classical groups, with (2, 2) for the
symplectic and odd orthogonal series and (0, 4) for the even orthogonal
series.
"""

from __future__ import annotations

from itertools import zip_longest
from typing import Iterable, NamedTuple

from .errors import DomainError


class Excess(NamedTuple):
    """Slack pair (e, e'): e bounds odd-position climbs, e' even-position ones."""

    e: int
    e_prime: int


def _as_excess(x) -> Excess:
    try:
        ex = Excess(int(x[0]), int(x[1]))
    except (TypeError, ValueError, IndexError):
        raise DomainError(f"excess must be a pair of integers, got {x!r}") from None
    if ex.e < 0 or ex.e_prime < 0:
        raise DomainError(f"excess components must be nonnegative, got {ex}")
    return ex


def _as_int_seq(seq) -> list[int]:
    out = []
    for x in seq:
        if isinstance(x, bool) or not isinstance(x, int):
            raise DomainError(f"entries must be integers, got {x!r}")
        out.append(x)
    return out


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    Trailing zeros in the input are trimmed; any other zero would break weak
    decrease and is rejected.  Instances are plain tuples, so equality,
    hashing, and lexicographic comparison all behave as expected.
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        data = _as_int_seq(parts)
        while data and data[-1] == 0:
            data.pop()
        for i, x in enumerate(data):
            if x <= 0:
                raise DomainError(f"partition parts must be positive, got {x} in {data}")
            if i > 0 and data[i - 1] < x:
                raise DomainError(f"partition parts must weakly decrease, got {data}")
        return tuple.__new__(cls, data)

    @property
    def weight(self) -> int:
        return sum(self)

    def multiplicity(self, value: int) -> int:
        return sum(1 for x in self if x == value)

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram."""
        if not self:
            return Partition()
        return Partition(sum(1 for x in self if x > i) for i in range(self[0]))


class Bipartition(tuple):
    """Canonical form of an interleaved pair of partitions.

    The stored tuple is the sequence (c1, c2, ..., cm) with cm != 0; the odd
    track (c1, c3, ...) and even track (c2, c4, ...) are each weakly
    decreasing.  Construction trims trailing zeros and validates the two
    tracks.
    """

    __slots__ = ()

    def __new__(cls, entries: Iterable[int] = ()):
        data = _as_int_seq(entries)
        while data and data[-1] == 0:
            data.pop()
        for x in data:
            if x < 0:
                raise DomainError(f"bipartition entries must be nonnegative, got {data}")
        for i in range(len(data) - 2):
            if data[i] < data[i + 2]:
                raise DomainError(
                    f"entries at positions {i + 1} and {i + 3} must weakly decrease, got {data}"
                )
        return tuple.__new__(cls, data)

    @property
    def weight(self) -> int:
        return sum(self)

    def entry(self, i: int) -> int:
        """1-based entry access with implicit trailing zeros."""
        if i < 1:
            raise DomainError(f"positions are 1-based, got {i}")
        return self[i - 1] if i <= len(self) else 0

    def tracks(self) -> tuple[Partition, Partition]:
        """The odd-position and even-position partitions."""
        return Partition(self[0::2]), Partition(self[1::2])

    def pair_swapped(self) -> "Bipartition":
        """Swap entries pairwise: (c2, c1, c4, c3, ...)."""
        out = []
        for i in range(0, len(self) + 1, 2):
            out.append(self.entry(i + 2))
            out.append(self.entry(i + 1))
        return Bipartition(out)

    @property
    def is_pair_symmetric(self) -> bool:
        """True when c1 = c2, c3 = c4, ...; fixed points of pair_swapped."""
        return self == self.pair_swapped()


def is_bipartition(seq: Iterable[int]) -> bool:
    """Whether a raw sequence is a valid bipartition (any trailing zeros aside)."""
    try:
        Bipartition(seq)
    except DomainError:
        return False
    return True


def has_excess(bp: Bipartition, x) -> bool:
    """Whether c[i] + e >= c[i+1] (odd i) and c[i] + e' >= c[i+1] (even i).

    Pairs beyond the last nonzero entry hold trivially, so only stored
    consecutive pairs are checked.
    """
    ex = _as_excess(x)
    if not isinstance(bp, Bipartition):
        bp = Bipartition(bp)
    for i in range(len(bp) - 1):
        slack = ex.e if i % 2 == 0 else ex.e_prime
        if bp[i] + slack < bp[i + 1]:
            return False
    return True


def bp_sum(a: Bipartition, b: Bipartition) -> Bipartition:
    """Entrywise sum (implicit zeros beyond each end).

    The sum of two bipartitions is again one: each track is a sum of weakly
    decreasing sequences.
    """
    return Bipartition(x + y for x, y in zip_longest(a, b, fillvalue=0))


def n_invariant(bp: Bipartition, half: int) -> int:
    """Dimension of the Springer fiber attached to a weight-`half` bipartition.

    Computed as sum over k = 1..m of (half - (c1 + ... + ck)).  The weight of
    bp must equal `half`; a mismatch is a caller error, not a truncation.
    """
    if not isinstance(bp, Bipartition):
        bp = Bipartition(bp)
    if half < 0:
        raise DomainError(f"half must be nonnegative, got {half}")
    if bp.weight != half:
        raise DomainError(
            f"weight mismatch: bipartition has weight {bp.weight}, expected {half}",
            code="weight_mismatch",
        )
    total = 0
    partial = 0
    for c in bp:
        partial += c
        total += half - partial
    return total


def enumerate_partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, lexicographically descending."""
    if n < 0:
        raise DomainError(f"weight must be nonnegative, got {n}")
    out: list[Partition] = []

    def extend(prefix: list[int], remaining: int, cap: int) -> None:
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for v in range(min(cap, remaining), 0, -1):
            prefix.append(v)
            extend(prefix, remaining - v, v)
            prefix.pop()

    extend([], n, n)
    return tuple(out)


def enumerate_bipartitions(n: int, x) -> tuple[Bipartition, ...]:
    """All weight-n bipartitions with excess x, lexicographically descending.

    Generation is entry by entry; each candidate entry is capped by the value
    two positions back (its track) and by the previous entry plus the
    applicable slack.  A branch where both tracks have reached zero cannot
    absorb the remaining weight and is pruned, which also bounds the depth.
    """
    ex = _as_excess(x)
    if n < 0:
        raise DomainError(f"weight must be nonnegative, got {n}")
    out: list[Bipartition] = []

    def extend(prefix: list[int], remaining: int) -> None:
        if remaining == 0:
            out.append(Bipartition(prefix))
            return
        if len(prefix) >= 2 and prefix[-1] == 0 and prefix[-2] == 0:
            return
        cap = remaining
        if len(prefix) >= 2:
            cap = min(cap, prefix[-2])
        if prefix:
            slack = ex.e if len(prefix) % 2 == 1 else ex.e_prime
            cap = min(cap, prefix[-1] + slack)
        for v in range(cap, -1, -1):
            prefix.append(v)
            extend(prefix, remaining - v)
            prefix.pop()

    extend([], n)
    return tuple(out)
