"""Strata of the classical groups and classification of spectral data.

A conjugacy class in GL_n, Sp_N, or SO_N is described here by *spectral
data*: the multiset of eigenvalue orbits of a representative, each orbit
carrying the Jordan type of the unipotent part on its eigenspace.  Orbits
come in two kinds.  A GENERIC orbit stands for a pair {x, 1/x} with x*x != 1
(for GL, where eigenvalues are not paired, every eigenvalue is its own
generic orbit).  An INVOLUTIVE orbit is the eigenvalue 1 or -1, whose
eigenspace inherits the ambient form; its Jordan type is then constrained to
the Jordan family of that form and characteristic.

The classification map sends spectral data to the stratum label: a weight
N/2 bipartition (weight n for GL_n, weight (N-1)/2 for odd orthogonal
groups).  Generic orbits contribute their Jordan type unchanged; involutive
orbits contribute through the unipotent bijections; contributions add
entrywise.  The class dimension is 2 * (number of positive roots) minus
twice the n-invariant of the label, and is constant on each stratum.

Only whether the characteristic is 2 or not ever matters; odd primes are
accepted and treated alike.  Odd orthogonal groups in characteristic 2 are
classified through the isogeny onto the symplectic group one dimension
down: callers supply the symplectic spectral data on dimension N-1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Optional

from .errors import DomainError
from .jordan import (
    JordanDatum,
    JordanFamily,
    in_family,
    sp2_unipotent_bp,
    sp_unipotent_bp,
    so2_unipotent_bp,
    so_unipotent_bp_even,
    so_unipotent_bp_odd,
)
from .partitions import (
    Bipartition,
    Excess,
    Partition,
    bp_sum,
    enumerate_bipartitions,
    enumerate_partitions,
    n_invariant,
)


class Series(enum.Enum):
    GL = "GL"
    SP = "Sp"
    SO_ODD = "SO_odd"
    SO_EVEN = "SO_even"


_SERIES_NAMES = {
    "gl": Series.GL,
    "sp": Series.SP,
    "so_odd": Series.SO_ODD,
    "soodd": Series.SO_ODD,
    "so_even": Series.SO_EVEN,
    "soeven": Series.SO_EVEN,
}


def series_from_name(name: str) -> Series:
    key = name.strip().lower()
    if key in _SERIES_NAMES:
        return _SERIES_NAMES[key]
    raise DomainError(
        f"unknown series {name!r}; expected GL, Sp, SO_odd, or SO_even",
        code="bad_series",
    )


def _check_characteristic(p: int) -> int:
    if p == 0 or (p >= 2 and all(p % q for q in range(2, int(p**0.5) + 1))):
        return p
    raise DomainError(
        f"characteristic must be 0 or a prime, got {p}", code="bad_characteristic"
    )


@dataclass(frozen=True)
class GroupDescriptor:
    """A classical group: series, dimension of the natural module, characteristic.

    The dimension is n for GL_n and N for Sp_N / SO_N, with the parity
    demanded by the series.  Only the 2-versus-not-2 distinction of the
    characteristic is ever consumed.
    """

    series: Series
    dimension: int
    characteristic: int = 0

    def __post_init__(self):
        if not isinstance(self.series, Series):
            object.__setattr__(self, "series", series_from_name(str(self.series)))
        _check_characteristic(self.characteristic)
        d = self.dimension
        if d < 0:
            raise DomainError(f"dimension must be nonnegative, got {d}", code="bad_dimension")
        if self.series is Series.SP and d % 2 == 1:
            raise DomainError(f"Sp needs even dimension, got {d}", code="bad_dimension")
        if self.series is Series.SO_ODD and d % 2 == 0:
            raise DomainError(f"SO_odd needs odd dimension, got {d}", code="bad_dimension")
        if self.series is Series.SO_EVEN and d % 2 == 1:
            raise DomainError(f"SO_even needs even dimension, got {d}", code="bad_dimension")

    @property
    def rank_half(self) -> int:
        """The weight of stratum labels: n, N/2, or (N-1)/2 by series."""
        if self.series is Series.GL:
            return self.dimension
        if self.series is Series.SO_ODD:
            return (self.dimension - 1) // 2
        return self.dimension // 2


def positive_roots(group: GroupDescriptor) -> int:
    """Number of positive roots of the group's root system."""
    n = group.rank_half
    if group.series is Series.GL:
        return n * (n - 1) // 2
    if group.series in (Series.SP, Series.SO_ODD):
        return n * n
    return n * n - n


class OrbitKind(enum.Enum):
    GENERIC = "generic"
    INVOLUTIVE = "involutive"


@dataclass(frozen=True)
class EigenOrbit:
    """One eigenvalue orbit with the Jordan type of its unipotent part.

    `ident` is "1" or "-1" for involutive orbits and an arbitrary distinct
    token for generic ones.  `jordan` is a Partition, or a LabeledPartition
    for involutive orbits in characteristic 2.
    """

    ident: str
    kind: OrbitKind
    jordan: JordanDatum

    def __post_init__(self):
        if not isinstance(self.ident, str) or not self.ident:
            raise DomainError(f"orbit id must be a nonempty string, got {self.ident!r}")
        if self.kind is OrbitKind.INVOLUTIVE:
            if self.ident not in ("1", "-1"):
                raise DomainError(
                    f"involutive orbit ids must be '1' or '-1', got {self.ident!r}"
                )
        else:
            if self.ident in ("1", "-1"):
                raise DomainError(
                    f"generic orbits may not use the involutive id {self.ident!r}"
                )
            if not isinstance(self.jordan, Partition):
                raise DomainError("generic orbits carry a plain partition Jordan type")
        if self.weight == 0:
            raise DomainError(f"orbit {self.ident!r} has empty Jordan type")

    @property
    def weight(self) -> int:
        return self.jordan.weight


def _involutive_family(series: Series, char: int) -> JordanFamily:
    if series is Series.SP:
        return JordanFamily.SYMPLECTIC_CHAR2 if char == 2 else JordanFamily.SYMPLECTIC
    if char == 2:
        return JordanFamily.ORTHOGONAL_CHAR2
    return JordanFamily.ORTHOGONAL


@dataclass(frozen=True)
class SpectralDatum:
    """Spectral data of one conjugacy class: the group plus its eigen orbits.

    Validation enforces the dimension bookkeeping (involutive weights plus
    twice the generic weights add up to the natural dimension; once for GL),
    distinct ids, the absence of the eigenvalue -1 in characteristic 2, and
    membership of each involutive Jordan type in the family dictated by the
    series and characteristic.
    """

    group: GroupDescriptor
    orbits: tuple[EigenOrbit, ...]

    def __init__(self, group: GroupDescriptor, orbits: Iterable[EigenOrbit]):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "orbits", tuple(orbits))
        self._validate()

    def _validate(self) -> None:
        g = self.group
        ids = [o.ident for o in self.orbits]
        if len(set(ids)) != len(ids):
            raise DomainError(f"orbit ids must be distinct, got {ids}")
        if g.series is Series.GL:
            if any(o.kind is not OrbitKind.GENERIC for o in self.orbits):
                raise DomainError("GL spectral data uses only generic orbits")
            total = sum(o.weight for o in self.orbits)
            if total != g.dimension:
                raise DomainError(
                    f"GL orbit weights add to {total}, expected {g.dimension}",
                    code="bookkeeping",
                )
            return
        if g.series is Series.SO_ODD and g.characteristic == 2:
            # classified through the symplectic group on dimension N-1;
            # orbits must be valid symplectic data there
            reduced = GroupDescriptor(Series.SP, g.dimension - 1, 2)
            SpectralDatum(reduced, self.orbits)
            return
        char = g.characteristic
        total = 0
        for o in self.orbits:
            if o.kind is OrbitKind.GENERIC:
                total += 2 * o.weight
                continue
            if o.ident == "-1" and char == 2:
                raise DomainError("the eigenvalue -1 does not exist in characteristic 2")
            fam = _involutive_family(g.series, char)
            if not in_family(fam, o.jordan):
                raise DomainError(
                    f"involutive orbit {o.ident!r}: Jordan type {o.jordan} is not in "
                    f"the {fam.value} family"
                )
            if g.series is Series.SO_ODD:
                want_odd = o.ident == "1"
                if (o.weight % 2 == 1) != want_odd:
                    raise DomainError(
                        f"involutive orbit {o.ident!r} of SO_odd must have "
                        f"{'odd' if want_odd else 'even'} weight, got {o.weight}"
                    )
            if g.series is Series.SO_EVEN and o.weight % 2 == 1:
                raise DomainError(
                    f"involutive orbit {o.ident!r} of SO_even must have even weight"
                )
            total += o.weight
        if total != g.dimension:
            raise DomainError(
                f"orbit weights account for dimension {total}, expected {g.dimension}",
                code="bookkeeping",
            )


@dataclass(frozen=True)
class StratumResult:
    """A stratum: its bipartition label and derived dimensions.

    springer_dim equals the n-invariant; class_dim is the common dimension
    of the conjugacy classes in the stratum.  pair_degenerate is only
    meaningful for even orthogonal groups, where a pair-symmetric label
    denotes a fibre of two strata swapped by the outer involution; it is
    None for the other series.
    """

    bp: Bipartition
    n_invariant: int
    class_dim: int
    pair_degenerate: Optional[bool] = None

    @property
    def springer_dim(self) -> int:
        return self.n_invariant


def _stratum(group: GroupDescriptor, bp: Bipartition) -> StratumResult:
    n_e = n_invariant(bp, group.rank_half)
    dim = 2 * positive_roots(group) - 2 * n_e
    degenerate = bp.is_pair_symmetric if group.series is Series.SO_EVEN else None
    return StratumResult(bp, n_e, dim, degenerate)


def _orbit_contribution(g: GroupDescriptor, orbit: EigenOrbit) -> Bipartition:
    if orbit.kind is OrbitKind.GENERIC:
        return Bipartition(orbit.jordan)
    char = g.characteristic
    if g.series is Series.SP:
        fwd = sp2_unipotent_bp if char == 2 else sp_unipotent_bp
        return fwd(orbit.jordan)
    if g.series is Series.SO_ODD:
        # characteristic not 2 here; eigenvalue 1 has odd weight, -1 even
        if orbit.ident == "1":
            return so_unipotent_bp_odd(orbit.jordan)
        return so_unipotent_bp_even(orbit.jordan)
    if char == 2:
        return so2_unipotent_bp(orbit.jordan)
    return so_unipotent_bp_even(orbit.jordan)


def classify(datum: SpectralDatum) -> StratumResult:
    """The stratum containing the conjugacy class with the given spectral data."""
    g = datum.group
    if g.series is Series.SO_ODD and g.characteristic == 2:
        reduced = SpectralDatum(
            GroupDescriptor(Series.SP, g.dimension - 1, 2), datum.orbits
        )
        inner = classify(reduced)
        # same rank, same positive-root count: the stratum data carry over
        return StratumResult(inner.bp, inner.n_invariant, inner.class_dim, None)
    total = reduce(bp_sum, (_orbit_contribution(g, o) for o in datum.orbits), Bipartition())
    return _stratum(g, total)


def stratum_excess(series: Series) -> Excess:
    """The excess cutting out the stratum labels of a series."""
    if series is Series.SO_EVEN:
        return Excess(0, 4)
    return Excess(2, 2)


def enumerate_strata(group: GroupDescriptor) -> tuple[StratumResult, ...]:
    """All strata of the group, in canonical (lexicographically descending) order.

    The answer does not depend on the characteristic: strata are indexed by
    partitions of n for GL_n, by weight-N/2 bipartitions of excess (2, 2)
    for Sp_N and SO_{N+1}, and of excess (0, 4) for SO_N with N even.
    """
    if group.series is Series.GL:
        bps = [Bipartition(p) for p in enumerate_partitions(group.dimension)]
    else:
        bps = enumerate_bipartitions(group.rank_half, stratum_excess(group.series))
    return tuple(_stratum(group, bp) for bp in bps)


def dimension_set(group: GroupDescriptor) -> frozenset[int]:
    """The set of class dimensions over all strata of the group."""
    return frozenset(s.class_dim for s in enumerate_strata(group))
