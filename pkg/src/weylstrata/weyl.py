"""Conjugacy classes of classical Weyl groups and their map onto strata.

Classes of the symmetric group (type A) are partitions of n+1.  Classes of
the hyperoctahedral group (type B, equal to type C) are signed cycle types:
a pair of partitions (positive cycles; negative cycles) of total weight n.
Type D classes are the signed cycle types with an even number of negative
cycles; the two classes into which an all-positive, all-even cycle type
splits inside the rotation subgroup are represented by the single unsplit
pair, since every quantity computed here agrees on the two halves.

The map onto strata goes through a labeled Jordan type: a positive cycle of
length l contributes two parts l, a negative cycle of length l contributes
one part 2l, and an eligible even value 2l is labeled 1 exactly when l
occurs among the negative cycle lengths (negative cycles are the ones whose
point orbits are stable under the sign-flip involution, hence commute with
it).  Composing with the characteristic-2 unipotent bijections lands in the
stratum sets: excess (2, 2) in weight n for type B, excess (0, 4) for type
D.  For type A the class partition itself is the stratum label.

Each class also carries the dimension m of the fixed space of a
representative on the reflection representation: parts minus one in type A,
the number of positive cycles in types B and D.  Within each fiber of the
stratum map the minimizer of m is unique and is returned as the fiber's
cross-section; a tie would falsify that uniqueness and raises a
ConsistencyError.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Union

from .errors import ConsistencyError, DomainError
from .jordan import LabeledPartition, so2_unipotent_bp, sp2_unipotent_bp
from .partitions import Bipartition, Partition, enumerate_partitions


class WeylSeries(enum.Enum):
    A = "A"
    B = "B"
    D = "D"


def weyl_series_from_name(name: str) -> WeylSeries:
    key = name.strip().upper()
    if key == "C":
        key = "B"  # same Weyl group
    try:
        return WeylSeries(key)
    except ValueError:
        raise DomainError(
            f"unknown Weyl series {name!r}; expected A, B, C, or D", code="bad_series"
        ) from None


@dataclass(frozen=True)
class WeylType:
    """A classical Weyl group: series and rank.

    Small ranks are permitted throughout, with rank 0 giving the trivial
    group; type D at rank below 4 is understood through the same signed
    cycle combinatorics.
    """

    series: WeylSeries
    rank: int

    def __post_init__(self):
        if not isinstance(self.series, WeylSeries):
            object.__setattr__(self, "series", weyl_series_from_name(str(self.series)))
        lo = 1 if self.series is WeylSeries.A else 0
        if self.rank < lo:
            raise DomainError(f"rank must be at least {lo} for type {self.series.value}")


@dataclass(frozen=True)
class SignedCycleType:
    """Cycle type of a signed permutation: positive and negative cycle lengths."""

    positive: Partition
    negative: Partition

    def __init__(self, positive, negative):
        object.__setattr__(
            self, "positive", positive if isinstance(positive, Partition) else Partition(positive)
        )
        object.__setattr__(
            self, "negative", negative if isinstance(negative, Partition) else Partition(negative)
        )

    @property
    def rank(self) -> int:
        return self.positive.weight + self.negative.weight

    def __str__(self) -> str:
        return f"{','.join(map(str, self.positive))};{','.join(map(str, self.negative))}"

    @classmethod
    def parse(cls, text: str) -> "SignedCycleType":
        """Parse "a1,a2,...;b1,b2,..." (either side may be empty)."""
        if text.count(";") != 1:
            raise DomainError(
                f"signed cycle type needs exactly one ';', got {text!r}", code="parse_error"
            )
        pos_text, neg_text = text.split(";")

        def side(s: str) -> Partition:
            s = s.strip()
            if not s:
                return Partition()
            try:
                parts = [int(x) for x in s.split(",")]
            except ValueError:
                raise DomainError(f"bad cycle lengths {s!r}", code="parse_error") from None
            return Partition(sorted(parts, reverse=True))

        return cls(side(pos_text), side(neg_text))


WeylClass = Union[Partition, SignedCycleType]


def enumerate_classes(w: WeylType) -> tuple[WeylClass, ...]:
    """All conjugacy classes of the Weyl group, in canonical order.

    Type A(n): partitions of n+1, lexicographically descending.  Types B and
    D: signed cycle types ordered by descending positive weight, then
    lexicographically descending positive part, then negative part; type D
    keeps only the types with an even number of negative cycles.
    """
    if w.series is WeylSeries.A:
        return enumerate_partitions(w.rank + 1)
    out: list[SignedCycleType] = []
    for a in range(w.rank, -1, -1):
        for pos in enumerate_partitions(a):
            for neg in enumerate_partitions(w.rank - a):
                if w.series is WeylSeries.D and len(neg) % 2 == 1:
                    continue
                out.append(SignedCycleType(pos, neg))
    return tuple(out)


def _check_class(w: WeylType, c: WeylClass) -> WeylClass:
    if w.series is WeylSeries.A:
        if not isinstance(c, Partition):
            raise DomainError(f"type A classes are partitions, got {c!r}")
        if c.weight != w.rank + 1:
            raise DomainError(
                f"type A rank {w.rank} classes are partitions of {w.rank + 1}, "
                f"got weight {c.weight}"
            )
        return c
    if not isinstance(c, SignedCycleType):
        raise DomainError(f"type {w.series.value} classes are signed cycle types, got {c!r}")
    if c.rank != w.rank:
        raise DomainError(
            f"signed cycle type has rank {c.rank}, expected {w.rank}"
        )
    if w.series is WeylSeries.D and len(c.negative) % 2 == 1:
        raise DomainError(
            f"type D classes have an even number of negative cycles, got {c}"
        )
    return c


def jordan_of_class(c: SignedCycleType) -> LabeledPartition:
    """The labeled Jordan type attached to a signed cycle type.

    Parts: l, l for each positive l-cycle and 2l for each negative l-cycle.
    An eligible even value 2l is labeled 1 exactly when l occurs as a
    negative cycle length.
    """
    parts = sorted(
        [l for l in c.positive for _ in (0, 1)] + [2 * l for l in c.negative],
        reverse=True,
    )
    base = Partition(parts)
    labels = {}
    for v in set(parts):
        if v % 2 == 0 and base.multiplicity(v) % 2 == 0:
            labels[v] = 1 if (v // 2) in c.negative else 0
    return LabeledPartition(base, labels)


def stratum_of_class(w: WeylType, c: WeylClass) -> Bipartition:
    """The stratum label of a Weyl class.

    Type A: the partition itself.  Type B: the labeled Jordan type pushed
    through the characteristic-2 symplectic bijection (weight-n bipartitions
    of excess (2, 2)).  Type D: through the characteristic-2 even-orthogonal
    bijection (excess (0, 4)).
    """
    c = _check_class(w, c)
    if w.series is WeylSeries.A:
        return Bipartition(c)
    nu = jordan_of_class(c)
    if w.series is WeylSeries.B:
        return sp2_unipotent_bp(nu)
    return so2_unipotent_bp(nu)


def fixed_space_dim(w: WeylType, c: WeylClass) -> int:
    """Dimension of the fixed space on the reflection representation."""
    c = _check_class(w, c)
    if w.series is WeylSeries.A:
        return len(c) - 1
    return len(c.positive)


class ClassFiber(NamedTuple):
    """All classes over one stratum, with the unique fixed-space minimizer."""

    classes: tuple[WeylClass, ...]
    cross_section: WeylClass


def strata_fibers(w: WeylType) -> dict[Bipartition, ClassFiber]:
    """Fibers of the stratum map, keyed by label in descending order.

    Each fiber records its classes (in enumeration order) and the unique
    class minimizing the fixed-space dimension.  A tie for the minimum would
    falsify the cross-section property and raises a ConsistencyError.
    """
    grouped: dict[Bipartition, list[WeylClass]] = {}
    for c in enumerate_classes(w):
        grouped.setdefault(stratum_of_class(w, c), []).append(c)
    out: dict[Bipartition, ClassFiber] = {}
    for bp in sorted(grouped, reverse=True):
        classes = grouped[bp]
        dims = [fixed_space_dim(w, c) for c in classes]
        best = min(dims)
        winners = [c for c, d in zip(classes, dims) if d == best]
        if len(winners) != 1:
            raise ConsistencyError(
                f"cross-section not unique over {tuple(bp)} in {w}: "
                f"{[str(c) for c in winners]} all have fixed-space dimension {best}"
            )
        out[bp] = ClassFiber(tuple(classes), winners[0])
    return out
