"""Bijections between unipotent Jordan types and stratum bipartitions.

Four families of Jordan data appear, one per classical form and
characteristic regime:

* SYMPLECTIC: partitions whose odd parts each occur an even number of times
  (Jordan types of symplectic unipotents away from characteristic 2).
* SYMPLECTIC_CHAR2: the same partitions carrying one binary label per
  *eligible* part value, i.e. per even value occurring a positive even number
  of times (the extra datum distinguishing characteristic-2 symplectic
  classes).
* ORTHOGONAL: partitions whose even parts each occur an even number of times
  (orthogonal unipotents away from characteristic 2; any total weight).
* ORTHOGONAL_CHAR2: labeled partitions as in SYMPLECTIC_CHAR2 that in
  addition have an even number of parts (even orthogonal groups in
  characteristic 2).

Each forward map rewrites the partition string by string.  A *string* is a
maximal run of equal positive parts; its *origin* is the 1-based position
where the run starts.  Every string of value v and length l is replaced by l
new entries in place, and the concatenation of the replacements, read as a
single sequence and trimmed of trailing zeros, is the image bipartition.
Replacement patterns depend only on the value's parity, the string length's
parity, the label (when present), and the origin's parity, as documented on
each function.  Weight always halves: each map sends weight-N Jordan data to
weight-N/2 bipartitions (weight (N-1)/2 for the odd-weight orthogonal map).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, NamedTuple, Union

from .errors import ConsistencyError, DomainError
from .partitions import Bipartition, Excess, Partition, enumerate_partitions, has_excess


class JordanFamily(enum.Enum):
    """The four Jordan-data families, named for the form they classify."""

    SYMPLECTIC = "symplectic"
    SYMPLECTIC_CHAR2 = "symplectic_char2"
    ORTHOGONAL = "orthogonal"
    ORTHOGONAL_CHAR2 = "orthogonal_char2"

    @property
    def labeled(self) -> bool:
        return self in (JordanFamily.SYMPLECTIC_CHAR2, JordanFamily.ORTHOGONAL_CHAR2)


# Terse aliases used in the literature and accepted by the command line.
FAMILY_ALIASES = {
    "Z1": JordanFamily.SYMPLECTIC,
    "Z2": JordanFamily.SYMPLECTIC_CHAR2,
    "Z1P": JordanFamily.ORTHOGONAL,
    "Z2P": JordanFamily.ORTHOGONAL_CHAR2,
}


def family_from_name(name: str) -> JordanFamily:
    key = name.strip()
    if key.upper() in FAMILY_ALIASES:
        return FAMILY_ALIASES[key.upper()]
    try:
        return JordanFamily(key.lower())
    except ValueError:
        raise DomainError(
            f"unknown Jordan family {name!r}; expected one of "
            f"{sorted(FAMILY_ALIASES)} or {[f.value for f in JordanFamily]}",
            code="bad_family",
        ) from None


class PartString(NamedTuple):
    """A maximal run of equal positive parts: value, 1-based origin, length."""

    value: int
    origin: int
    length: int


def decompose_strings(parts: Iterable[int]) -> tuple[PartString, ...]:
    """Maximal runs of equal positive values, with 1-based origins."""
    nu = Partition(parts) if not isinstance(parts, Partition) else parts
    out: list[PartString] = []
    i = 0
    while i < len(nu):
        j = i
        while j < len(nu) and nu[j] == nu[i]:
            j += 1
        out.append(PartString(nu[i], i + 1, j - i))
        i = j
    return tuple(out)


def eligible_values(parts: Partition) -> tuple[int, ...]:
    """Even part values occurring a positive even number of times, descending."""
    out = []
    for s in decompose_strings(parts):
        if s.value % 2 == 0 and s.length % 2 == 0:
            out.append(s.value)
    return tuple(out)


@dataclass(frozen=True)
class LabeledPartition:
    """A partition with one binary label per eligible even value.

    Valid instances always have every odd value occurring an even number of
    times, and carry a label for exactly the eligible values (even value,
    positive even multiplicity).  Labels are keyed by part value, not by
    string position.
    """

    parts: Partition
    labels: tuple[tuple[int, int], ...]

    def __init__(self, parts: Iterable[int], labels: Mapping[int, int] | None = None):
        base = parts if isinstance(parts, Partition) else Partition(parts)
        for s in decompose_strings(base):
            if s.value % 2 == 1 and s.length % 2 == 1:
                raise DomainError(
                    f"odd value {s.value} occurs {s.length} times in {tuple(base)}; "
                    "odd values must occur an even number of times"
                )
        eligible = eligible_values(base)
        given = dict(labels or {})
        if set(given) != set(eligible):
            raise DomainError(
                f"labels must be given for exactly the eligible values "
                f"{sorted(eligible, reverse=True)} of {tuple(base)}, got keys "
                f"{sorted(given)}"
            )
        for v, bit in given.items():
            if bit not in (0, 1):
                raise DomainError(f"label for value {v} must be 0 or 1, got {bit!r}")
        object.__setattr__(self, "parts", base)
        object.__setattr__(
            self, "labels", tuple((v, given[v]) for v in sorted(given, reverse=True))
        )

    @property
    def weight(self) -> int:
        return self.parts.weight

    def label_of(self, value: int) -> int:
        for v, bit in self.labels:
            if v == value:
                return bit
        raise DomainError(f"value {value} carries no label in {self}")

    def label_map(self) -> dict[int, int]:
        return dict(self.labels)

    def __str__(self) -> str:
        if not self.labels:
            return str(tuple(self.parts))
        bits = ",".join(f"{v}:{b}" for v, b in self.labels)
        return f"{tuple(self.parts)}[{bits}]"


JordanDatum = Union[Partition, LabeledPartition]


# ---------------------------------------------------------------------------
# family membership


def in_family(family: JordanFamily, nu: JordanDatum) -> bool:
    """Whether a Jordan datum belongs to the given family (weight aside)."""
    if family.labeled != isinstance(nu, LabeledPartition):
        return False
    parts = nu.parts if isinstance(nu, LabeledPartition) else nu
    strings = decompose_strings(parts)
    if family in (JordanFamily.SYMPLECTIC, JordanFamily.SYMPLECTIC_CHAR2):
        if any(s.value % 2 == 1 and s.length % 2 == 1 for s in strings):
            return False
        if parts.weight % 2 == 1:
            return False
    elif family is JordanFamily.ORTHOGONAL:
        if any(s.value % 2 == 0 and s.length % 2 == 1 for s in strings):
            return False
    else:  # ORTHOGONAL_CHAR2
        if any(s.value % 2 == 1 and s.length % 2 == 1 for s in strings):
            return False
        if len(parts) % 2 == 1 or parts.weight % 2 == 1:
            return False
    return True


def _require(family: JordanFamily, nu: JordanDatum, map_name: str) -> Partition:
    if not in_family(family, nu):
        raise DomainError(f"{map_name}: {nu} is not in the {family.value} family")
    return nu.parts if isinstance(nu, LabeledPartition) else nu


def _alternating(first: int, second: int, length: int) -> list[int]:
    return [first if k % 2 == 0 else second for k in range(length)]


def _finish(entries: list[int], map_name: str, excess: Excess, half: int) -> Bipartition:
    # The emitted entries are claimed to form a bipartition of the stated
    # excess; on validated input a failure here falsifies the construction
    # itself, so it surfaces as a consistency error rather than a bad-input one.
    if any(c < 0 for c in entries):
        raise ConsistencyError(f"{map_name} emitted a negative entry: {entries}")
    try:
        bp = Bipartition(entries)
    except DomainError as exc:
        raise ConsistencyError(f"{map_name} emitted a non-bipartition: {exc}") from exc
    if bp.weight != half or not has_excess(bp, excess):
        raise ConsistencyError(
            f"{map_name} emitted {tuple(bp)}, outside the stated codomain"
        )
    return bp


# ---------------------------------------------------------------------------
# the five forward maps


def sp_unipotent_bp(nu: Partition) -> Bipartition:
    """Symplectic Jordan type (characteristic not 2) to its stratum bipartition.

    String replacements: an even value 2a of length l becomes a repeated l
    times; an odd value 2a+1 (necessarily of even length) becomes the
    alternation a, a+1, ... of the same length.  Image: weight N/2,
    excess (1, 1).
    """
    parts = _require(JordanFamily.SYMPLECTIC, nu, "sp_unipotent_bp")
    out: list[int] = []
    for s in decompose_strings(parts):
        a = s.value // 2
        if s.value % 2 == 0:
            out.extend([a] * s.length)
        else:
            out.extend(_alternating(a, a + 1, s.length))
    return _finish(out, "sp_unipotent_bp", Excess(1, 1), parts.weight // 2)


def sp2_unipotent_bp(nu: LabeledPartition) -> Bipartition:
    """Labeled symplectic Jordan type (characteristic 2) to its stratum.

    An even value 2a of odd length, or of even length with label 1, becomes a
    repeated; an even value of even length with label 0 becomes the
    alternation a-1, a+1, ...; an odd value 2a+1 becomes a, a+1, ....
    Image: weight N/2, excess (2, 2).
    """
    parts = _require(JordanFamily.SYMPLECTIC_CHAR2, nu, "sp2_unipotent_bp")
    out: list[int] = []
    for s in decompose_strings(parts):
        a = s.value // 2
        if s.value % 2 == 1:
            out.extend(_alternating(a, a + 1, s.length))
        elif s.length % 2 == 1 or nu.label_of(s.value) == 1:
            out.extend([a] * s.length)
        else:
            out.extend(_alternating(a - 1, a + 1, s.length))
    return _finish(out, "sp2_unipotent_bp", Excess(2, 2), parts.weight // 2)


def so_unipotent_bp_odd(nu: Partition) -> Bipartition:
    """Orthogonal Jordan type of odd total weight to its stratum bipartition.

    Replacements depend on the origin's parity.  An even value 2a
    (necessarily of even length): a-1, a+1, ... at odd origin, a repeated at
    even origin.  An odd value 2a+1: a, a+1, ... at odd origin, a+1, a, ...
    at even origin.  Image: weight (N-1)/2, excess (2, 0).
    """
    parts = _require(JordanFamily.ORTHOGONAL, nu, "so_unipotent_bp_odd")
    if parts.weight % 2 == 0:
        raise DomainError(
            f"so_unipotent_bp_odd needs odd total weight, got {parts.weight}"
        )
    out: list[int] = []
    for s in decompose_strings(parts):
        a = s.value // 2
        odd_origin = s.origin % 2 == 1
        if s.value % 2 == 0:
            out.extend(_alternating(a - 1, a + 1, s.length) if odd_origin else [a] * s.length)
        else:
            pattern = (a, a + 1) if odd_origin else (a + 1, a)
            out.extend(_alternating(*pattern, s.length))
    return _finish(out, "so_unipotent_bp_odd", Excess(2, 0), (parts.weight - 1) // 2)


def so_unipotent_bp_even(nu: Partition) -> Bipartition:
    """Orthogonal Jordan type of even total weight to its stratum bipartition.

    Same replacements as the odd-weight map with the origin parities swapped:
    an even value 2a becomes a-1, a+1, ... at even origin and a repeated at
    odd origin; an odd value 2a+1 becomes a, a+1, ... at even origin and
    a+1, a, ... at odd origin.  Image: weight N/2, excess (0, 2).
    """
    parts = _require(JordanFamily.ORTHOGONAL, nu, "so_unipotent_bp_even")
    if parts.weight % 2 == 1:
        raise DomainError(
            f"so_unipotent_bp_even needs even total weight, got {parts.weight}"
        )
    out: list[int] = []
    for s in decompose_strings(parts):
        a = s.value // 2
        even_origin = s.origin % 2 == 0
        if s.value % 2 == 0:
            out.extend(_alternating(a - 1, a + 1, s.length) if even_origin else [a] * s.length)
        else:
            pattern = (a, a + 1) if even_origin else (a + 1, a)
            out.extend(_alternating(*pattern, s.length))
    return _finish(out, "so_unipotent_bp_even", Excess(0, 2), parts.weight // 2)


def so2_unipotent_bp(nu: LabeledPartition) -> Bipartition:
    """Labeled even-orthogonal Jordan type (characteristic 2) to its stratum.

    An even value 2a of odd length or with label 1: a-1, a+1, ... at even
    origin, a+1, a-1, ... at odd origin.  An even value of even length with
    label 0: a-2, a+2, ... at even origin, a repeated at odd origin.  An odd
    value 2a+1: a-1, a+2, ... at even origin, a+1, a, ... at odd origin.
    Image: weight N/2, excess (0, 4).

    The patterns subtract up to 2 from a, but the parity constraints of the
    family (even part count, labels only on even-length runs) rule out every
    configuration that would emit a negative entry; this is asserted at run
    time and a violation is reported as a consistency failure.
    """
    parts = _require(JordanFamily.ORTHOGONAL_CHAR2, nu, "so2_unipotent_bp")
    out: list[int] = []
    for s in decompose_strings(parts):
        a = s.value // 2
        even_origin = s.origin % 2 == 0
        if s.value % 2 == 1:
            pattern = (a - 1, a + 2) if even_origin else (a + 1, a)
        elif s.length % 2 == 1 or nu.label_of(s.value) == 1:
            pattern = (a - 1, a + 1) if even_origin else (a + 1, a - 1)
        else:
            pattern = (a - 2, a + 2) if even_origin else (a, a)
        out.extend(_alternating(*pattern, s.length))
    return _finish(out, "so2_unipotent_bp", Excess(0, 4), parts.weight // 2)


# ---------------------------------------------------------------------------
# family-level dispatch, enumeration, inversion

# (family, weight parity) -> (map, codomain excess, codomain weight)
def _dispatch(family: JordanFamily, N: int):
    if family is JordanFamily.SYMPLECTIC:
        return sp_unipotent_bp, Excess(1, 1), N // 2
    if family is JordanFamily.SYMPLECTIC_CHAR2:
        return sp2_unipotent_bp, Excess(2, 2), N // 2
    if family is JordanFamily.ORTHOGONAL:
        if N % 2 == 1:
            return so_unipotent_bp_odd, Excess(2, 0), (N - 1) // 2
        return so_unipotent_bp_even, Excess(0, 2), N // 2
    return so2_unipotent_bp, Excess(0, 4), N // 2


def apply_bijection(family: JordanFamily, nu: JordanDatum) -> Bipartition:
    """Apply the family's forward map, picking the parity variant by weight."""
    forward, _, _ = _dispatch(family, nu.weight)
    return forward(nu)


def codomain(family: JordanFamily, N: int) -> tuple[Excess, int]:
    """Excess and weight of the image set for weight-N data of a family."""
    _, excess, half = _dispatch(family, N)
    return excess, half


def enumerate_jordan(family: JordanFamily, N: int) -> tuple[JordanDatum, ...]:
    """All family members of weight N, in canonical order.

    Base partitions run lexicographically descending; for labeled families
    each base expands into its label assignments, values descending, label 1
    before label 0.
    """
    if N < 0:
        raise DomainError(f"weight must be nonnegative, got {N}")
    if family is not JordanFamily.ORTHOGONAL and N % 2 == 1:
        raise DomainError(
            f"the {family.value} family is defined for even weights, got {N}",
            code="bad_parity",
        )
    out: list[JordanDatum] = []
    for p in enumerate_partitions(N):
        if family.labeled:
            if not in_family(JordanFamily.SYMPLECTIC, p):
                continue
            if family is JordanFamily.ORTHOGONAL_CHAR2 and len(p) % 2 == 1:
                continue
            values = eligible_values(p)
            for bits in product((1, 0), repeat=len(values)):
                out.append(LabeledPartition(p, dict(zip(values, bits))))
        else:
            if in_family(family, p):
                out.append(p)
    return tuple(out)


def invert_bijection(family: JordanFamily, N: int, target: Bipartition) -> JordanDatum:
    """The unique weight-N preimage of a bipartition under the family's map.

    Exhaustive search over the domain.  No match raises a DomainError;
    more than one match would falsify injectivity and raises a
    ConsistencyError.
    """
    bp = target if isinstance(target, Bipartition) else Bipartition(target)
    if N < 0 or (family is not JordanFamily.ORTHOGONAL and N % 2 == 1):
        raise DomainError(
            f"the {family.value} family is defined for even weights, got {N}",
            code="bad_parity",
        )
    forward, excess, half = _dispatch(family, N)
    if bp.weight != half or not has_excess(bp, excess):
        raise DomainError(
            f"{tuple(bp)} lies outside the image of weight-{N} {family.value} data "
            f"(expected weight {half}, excess {tuple(excess)})",
            code="no_preimage",
        )
    matches = [nu for nu in enumerate_jordan(family, N) if forward(nu) == bp]
    if not matches:
        raise DomainError(
            f"no weight-{N} {family.value} datum maps to {tuple(bp)}",
            code="no_preimage",
        )
    if len(matches) > 1:
        raise ConsistencyError(
            f"injectivity failed: {len(matches)} weight-{N} {family.value} data map "
            f"to {tuple(bp)}: {[str(m) for m in matches]}"
        )
    return matches[0]
