"""Static strata tables for the exceptional Weyl groups.

For G2, F4, E6, E7 and E8 the map from conjugacy classes to the
representations indexing strata is a finite lookup, shipped as a flat
data file (``data/exceptional_atlas.txt``).  Each table row pairs one
representation (a ``RepLabel``) with the classes mapping to it; a star
marker records that the stratum contains unipotent classes only in one
specific characteristic.  The file also carries the reference lists of
isolated subsystems (pseudo-Levi and doubly-isolated flavors).

Classes are named by their root-subsystem labels (``CarterLabel``),
e.g. ``"D_4(a_1)+A_1"`` or ``"(2A_3)''"``.  The parsed rank of a label
is the codimension of the class's fixed space in the reflection
representation, so ``m = rank - parsed_rank`` is the fixed-space
dimension used to select cross-sections.

The data file location can be overridden with the ``WEYLSTRATA_ATLAS``
environment variable or an explicit path argument to ``load_atlas``.
"""

from __future__ import annotations

import enum
import functools
import hashlib
import os
import re
from dataclasses import dataclass
from importlib import resources
from typing import Optional, Union

from .errors import ConsistencyError, DomainError

EXC_GROUPS = ("G2", "F4", "E6", "E7", "E8")
EXC_RANK = {"G2": 2, "F4": 4, "E6": 6, "E7": 7, "E8": 8}
EXC_POSITIVE_ROOTS = {"G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}

CLASSICAL_SERIES = ("A", "B", "C", "D")

ATLAS_ENV_VAR = "WEYLSTRATA_ATLAS"
_DATA_RESOURCE = "exceptional_atlas.txt"
ATLAS_FORMAT_VERSION = 1


def exc_group_from_name(name: str) -> str:
    """Canonical exceptional group name: accepts "E8", "e8", "E_8"."""
    canon = str(name).strip().upper().replace("_", "")
    if canon in EXC_GROUPS:
        return canon
    raise DomainError(f"unknown exceptional group {name!r}", code="bad_group")


def _iso_group_from_name(name: str) -> str:
    canon = str(name).strip().upper().replace("_", "")
    if canon in CLASSICAL_SERIES or canon in EXC_GROUPS:
        return canon
    raise DomainError(f"unknown group or series {name!r}", code="bad_group")


@dataclass(frozen=True)
class RepLabel:
    """A representation named by degree and n-invariant, e.g. 1050_10*2.

    star is 0 for representations whose stratum has unipotent classes in
    every characteristic, else the one prime (2 or 3) where it does.
    synthetic_id is 0-based among table rows sharing (group, d, n) and
    disambiguates the few repeated degree_n symbols.
    """

    group: str
    d: int
    n: int
    star: int = 0
    synthetic_id: int = 0

    def __post_init__(self):
        object.__setattr__(self, "group", exc_group_from_name(self.group))
        if self.d < 1:
            raise DomainError(f"degree must be positive, got {self.d}", code="bad_rep")
        if self.n < 0:
            raise DomainError(f"n-invariant must be nonnegative, got {self.n}", code="bad_rep")
        if self.star not in (0, 2, 3):
            raise DomainError(f"star must be 0, 2, or 3, got {self.star}", code="bad_rep")
        if self.synthetic_id < 0:
            raise DomainError("synthetic id must be nonnegative", code="bad_rep")

    def __str__(self) -> str:
        text = f"{self.d}_{self.n}"
        if self.star:
            text += f"*{self.star}"
        if self.synthetic_id:
            text += f"#{self.synthetic_id}"
        return text


_SIMPLE_TOKEN = re.compile(
    r"^(~?)([A-G])('{0,2})_(\d+)('{0,2})(\(a_\d+\))?('{0,2})$"
)
_REP_TEXT = re.compile(r"^(\d+)_(\d+)(?:\*(\d+))?(?:#(\d+))?$")


@dataclass(frozen=True)
class CarterLabel:
    """A conjugacy-class label: canonical string plus its parsed rank."""

    raw: str
    parsed_rank: int

    def __str__(self) -> str:
        return self.raw


def _malformed(raw: str, why: str) -> DomainError:
    return DomainError(f"malformed class label {raw!r}: {why}", code="bad_carter_label")


def _split_plus(text: str, raw: str) -> list[str]:
    # split on '+' at paren depth 0
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise _malformed(raw, "unbalanced parentheses")
        elif ch == "+" and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    if depth != 0:
        raise _malformed(raw, "unbalanced parentheses")
    parts.append(text[start:])
    if any(not p for p in parts):
        raise _malformed(raw, "empty summand")
    return parts


def _parse_term(term: str, raw: str) -> tuple[str, int]:
    mult = 1
    m = re.match(r"^(\d+)(?=[~A-G(])", term)
    if m:
        mult = int(m.group(1))
        if mult < 2:
            raise _malformed(raw, "multiplicity must be at least 2")
        term = term[m.end():]
    if term.startswith("("):
        depth = 0
        for i, ch in enumerate(term):
            depth += ch == "("
            depth -= ch == ")"
            if depth == 0:
                break
        inner, tail = term[1:i], term[i + 1 :]
        if not re.fullmatch(r"'{1,2}", tail):
            raise _malformed(raw, "a parenthesized sum must end in primes")
        inner_canon, inner_rank = [], 0
        for part in _split_plus(inner, raw):
            canon, rank = _parse_term(part, raw)
            inner_canon.append(canon)
            inner_rank += rank
        joined = "+".join(inner_canon)
        return f"{mult if mult > 1 else ''}({joined}){tail}", mult * inner_rank
    m = _SIMPLE_TOKEN.match(term)
    if m is None:
        raise _malformed(raw, f"bad token {term!r}")
    tilde, letter, p1, sub, p2, annot, p3 = m.groups()
    primes = [p for p in (p1, p2, p3) if p]
    if len(primes) > 1:
        raise _malformed(raw, "primes in more than one position")
    prime = primes[0] if primes else ""
    canon = f"{tilde}{letter}_{sub}{annot or ''}{prime}"
    return f"{mult if mult > 1 else ''}{canon}", mult * int(sub)


def parse_carter(raw: str) -> CarterLabel:
    """Parse a class label into canonical form and its rank.

    The rank is the sum of multiplicity times subscript over the
    '+'-separated summands; tildes, primes, and "(a_i)" annotations do
    not contribute.  Accepted spellings are whitespace-insensitive and
    tolerate "Ã" for "~A" and primes before the subscript ("A''_5").
    """
    if not isinstance(raw, str):
        raise DomainError("class label must be a string", code="bad_carter_label")
    text = re.sub(r"\s+", "", raw).replace("Ã", "~A")
    if not text:
        raise _malformed(raw, "empty")
    canon_terms, rank = [], 0
    for term in _split_plus(text, raw):
        canon, r = _parse_term(term, raw)
        canon_terms.append(canon)
        rank += r
    return CarterLabel("+".join(canon_terms), rank)


def m_of_class(group: str, label: Union[str, CarterLabel]) -> int:
    """Fixed-space dimension of the class in the reflection representation."""
    group = exc_group_from_name(group)
    if not isinstance(label, CarterLabel):
        label = parse_carter(label)
    m = EXC_RANK[group] - label.parsed_rank
    if m < 0:
        raise DomainError(
            f"label {label.raw!r} has rank {label.parsed_rank}, beyond {group}",
            code="bad_carter_label",
        )
    return m


class IsoFlavor(enum.Enum):
    """Which isolated-subsystem list: centralizers of one parameter or of a pair."""

    PSEUDO_LEVI = "pseudo_levi"
    DOUBLE_ISOLATED = "double_isolated"


def _flavor_from_name(value) -> IsoFlavor:
    if isinstance(value, IsoFlavor):
        return value
    try:
        return IsoFlavor(str(value).strip().lower())
    except ValueError:
        raise DomainError(f"unknown flavor {value!r}", code="bad_flavor") from None


@dataclass(frozen=True)
class IsolatedSubgroup:
    """One entry of an isolated-subsystem list, e.g. type A_5A_1 in E6."""

    group: str
    flavor: IsoFlavor
    subtype: str
    constraint: str = ""


@dataclass(frozen=True)
class AtlasRow:
    """One table row: a representation and the classes mapping to it."""

    group: str
    classes: tuple[CarterLabel, ...]
    rep: RepLabel
    note: str = ""


class Atlas:
    """Parsed atlas: per-group tables plus the isolated-subsystem lists."""

    def __init__(self, rows, iso_entries, text: str, source: str):
        self.text = text
        self.source = source
        self._rows: dict[str, list[AtlasRow]] = {g: [] for g in EXC_GROUPS}
        self._by_class: dict[tuple[str, str], list[AtlasRow]] = {}
        self._by_rep: dict[tuple[str, int, int, int, int], AtlasRow] = {}
        self._dns_count: dict[tuple[str, int, int, int], int] = {}
        for row in rows:
            r = row.rep
            self._rows[row.group].append(row)
            self._by_rep[(row.group, r.d, r.n, r.star, r.synthetic_id)] = row
            key = (row.group, r.d, r.n, r.star)
            self._dns_count[key] = self._dns_count.get(key, 0) + 1
            for c in row.classes:
                self._by_class.setdefault((row.group, c.raw), []).append(row)
        self._iso: dict[tuple[str, IsoFlavor], list[IsolatedSubgroup]] = {}
        for entry in iso_entries:
            self._iso.setdefault((entry.group, entry.flavor), []).append(entry)

    def checksum(self) -> str:
        return hashlib.sha256(self.text.encode("utf-8")).hexdigest()

    def rows(self, group: str) -> tuple[AtlasRow, ...]:
        """All rows of one group's table, in canonical order."""
        return tuple(self._rows[exc_group_from_name(group)])

    def format_rep(self, rep: RepLabel) -> str:
        """Shortest rendering of a representation that the atlas can re-read.

        The synthetic id is shown only when several rows share the same
        (d, n, star), as for the two unstarred 8_3 rows of F4.
        """
        text = f"{rep.d}_{rep.n}"
        if rep.star:
            text += f"*{rep.star}"
        if self._dns_count.get((rep.group, rep.d, rep.n, rep.star), 0) > 1:
            text += f"#{rep.synthetic_id}"
        return text

    def rep_from_string(self, group: str, text: str) -> RepLabel:
        """Resolve "d_n", "d_n*r", "d_n#i", or "d_n*r#i" to a table row's rep.

        With the star omitted the unstarred row is meant; if only a
        starred row carries that (d, n), it is accepted instead.
        """
        group = exc_group_from_name(group)
        m = _REP_TEXT.match(str(text).strip())
        if m is None:
            raise DomainError(f"malformed representation label {text!r}", code="bad_rep")
        d, n = int(m.group(1)), int(m.group(2))
        star = int(m.group(3)) if m.group(3) else None
        sid = int(m.group(4)) if m.group(4) else None
        cands = [
            row
            for row in self._rows[group]
            if row.rep.d == d
            and row.rep.n == n
            and (star is None or row.rep.star == star)
            and (sid is None or row.rep.synthetic_id == sid)
        ]
        if star is None and len(cands) > 1:
            unstarred = [row for row in cands if row.rep.star == 0]
            if unstarred:
                cands = unstarred
        if not cands:
            raise DomainError(f"no representation {text!r} in {group}", code="unknown_rep")
        if len(cands) > 1:
            shown = ", ".join(self.format_rep(r.rep) for r in cands)
            raise DomainError(
                f"{text!r} is ambiguous in {group}: candidates {shown}",
                code="ambiguous_rep",
            )
        return cands[0].rep

    def _resolve_rep(self, group: str, rep: Union[RepLabel, str]) -> AtlasRow:
        group = exc_group_from_name(group)
        if isinstance(rep, str):
            rep = self.rep_from_string(group, rep)
        key = (group, rep.d, rep.n, rep.star, rep.synthetic_id)
        row = self._by_rep.get(key)
        if row is None:
            raise DomainError(f"no representation {rep} in {group}", code="unknown_rep")
        return row

    def rep_of_class(
        self,
        group: str,
        label: Union[str, CarterLabel],
        rep_hint: Union[RepLabel, str, None] = None,
    ) -> RepLabel:
        """The representation indexing the stratum of the given class.

        The E7 label "A_3+A_2" names classes in two different rows; such
        lookups need rep_hint (one of the candidate representations) to
        choose, and raise with code "ambiguous_class" otherwise.
        """
        group = exc_group_from_name(group)
        canon = label.raw if isinstance(label, CarterLabel) else parse_carter(label).raw
        rows = self._by_class.get((group, canon), [])
        if not rows:
            raise DomainError(f"no class {canon!r} in the {group} table", code="unknown_class")
        if len(rows) == 1:
            return rows[0].rep
        if rep_hint is not None:
            want = self._resolve_rep(group, rep_hint).rep
            for row in rows:
                if row.rep == want:
                    return row.rep
            raise DomainError(
                f"class {canon!r} does not occur under {self.format_rep(want)}",
                code="unknown_class",
            )
        shown = ", ".join(self.format_rep(r.rep) for r in rows)
        raise DomainError(
            f"class {canon!r} occurs in several {group} rows ({shown}); "
            "pass rep_hint to choose",
            code="ambiguous_class",
        )

    def fiber(self, group: str, rep: Union[RepLabel, str]) -> tuple[CarterLabel, ...]:
        """The classes mapping to the given representation, in table order."""
        return self._resolve_rep(group, rep).classes

    def note(self, group: str, rep: Union[RepLabel, str]) -> str:
        """Provenance note of a row (nonempty exactly for starred rows)."""
        return self._resolve_rep(group, rep).note

    def strata_for_characteristic(self, group: str, char: int) -> tuple[RepLabel, ...]:
        """The representations whose strata contain unipotent classes.

        In characteristic 0 (or any prime other than 2 and 3) these are
        the unstarred rows; in characteristic r in {2, 3} the rows
        starred *_r join them.
        """
        group = exc_group_from_name(group)
        if not (char == 0 or (char >= 2 and all(char % q for q in range(2, int(char**0.5) + 1)))):
            raise DomainError(
                f"characteristic must be 0 or a prime, got {char}", code="bad_characteristic"
            )
        return tuple(
            row.rep
            for row in self._rows[group]
            if row.rep.star == 0 or row.rep.star == char
        )

    def class_dim(self, rep: RepLabel) -> int:
        """Common dimension of the conjugacy classes in the stratum."""
        return 2 * EXC_POSITIVE_ROOTS[rep.group] - 2 * rep.n

    def cross_section(self, group: str, rep: Union[RepLabel, str]) -> CarterLabel:
        """The unique class of the fiber with minimal fixed-space dimension.

        Uniqueness of the minimizer is a claimed property of the tables;
        a tie raises ConsistencyError rather than picking arbitrarily.
        """
        row = self._resolve_rep(group, rep)
        best = min(m_of_class(row.group, c) for c in row.classes)
        winners = [c for c in row.classes if m_of_class(row.group, c) == best]
        if len(winners) != 1:
            raise ConsistencyError(
                f"fixed-space minimum is not unique on {row.group} "
                f"{self.format_rep(row.rep)}: {', '.join(map(str, winners))}",
                code="cross_section_tie",
            )
        return winners[0]

    def isolated_subgroups(self, group: str, flavor) -> tuple[IsolatedSubgroup, ...]:
        """The isolated-subsystem list of a group or classical series."""
        key = (_iso_group_from_name(group), _flavor_from_name(flavor))
        return tuple(self._iso.get(key, ()))


def _parse_error(source: str, lineno: int, why: str) -> DomainError:
    return DomainError(f"{source}:{lineno}: {why}", code="atlas_parse_error")


def _parse_atlas(text: str, source: str) -> Atlas:
    version: Optional[int] = None
    rows: list[AtlasRow] = []
    iso: list[IsolatedSubgroup] = []
    dn_next: dict[tuple[str, int, int], int] = {}
    seen_keys = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split("|")
        kind = fields[0]
        if kind == "version":
            if version is not None or rows or iso:
                raise _parse_error(source, lineno, "version must be the first record")
            if len(fields) != 2 or not fields[1].isdigit():
                raise _parse_error(source, lineno, "bad version record")
            version = int(fields[1])
            if version != ATLAS_FORMAT_VERSION:
                raise DomainError(
                    f"{source}: unsupported atlas format version {version}",
                    code="atlas_version",
                )
        elif kind == "row":
            if version is None:
                raise DomainError(
                    f"{source}:{lineno}: missing version record", code="atlas_version"
                )
            if len(fields) != 8:
                raise _parse_error(source, lineno, f"row needs 8 fields, got {len(fields)}")
            _, group, d, n, star, sid, classes, note = fields
            try:
                group = exc_group_from_name(group)
                rep = RepLabel(group, int(d), int(n), int(star), int(sid))
            except (ValueError, DomainError) as exc:
                raise _parse_error(source, lineno, f"bad row: {exc}") from None
            expected = dn_next.get((group, rep.d, rep.n), 0)
            if rep.synthetic_id != expected:
                raise _parse_error(
                    source, lineno, f"synthetic id should be {expected}, got {rep.synthetic_id}"
                )
            dn_next[(group, rep.d, rep.n)] = expected + 1
            key = (group, rep.d, rep.n, rep.star, rep.synthetic_id)
            if key in seen_keys:
                raise _parse_error(source, lineno, f"duplicate representation {key}")
            seen_keys.add(key)
            if not classes:
                raise _parse_error(source, lineno, "row has no classes")
            try:
                parsed = tuple(parse_carter(c) for c in classes.split(","))
            except DomainError as exc:
                raise _parse_error(source, lineno, str(exc)) from None
            if len({c.raw for c in parsed}) != len(parsed):
                raise _parse_error(source, lineno, "repeated class within a row")
            for c in parsed:
                if c.parsed_rank > EXC_RANK[group]:
                    raise _parse_error(
                        source, lineno, f"class {c.raw!r} has rank beyond {group}"
                    )
            rows.append(AtlasRow(group, parsed, rep, note))
        elif kind == "iso":
            if version is None:
                raise DomainError(
                    f"{source}:{lineno}: missing version record", code="atlas_version"
                )
            if len(fields) != 5:
                raise _parse_error(source, lineno, f"iso needs 5 fields, got {len(fields)}")
            _, group, flavor, subtype, constraint = fields
            try:
                entry = IsolatedSubgroup(
                    _iso_group_from_name(group), _flavor_from_name(flavor), subtype, constraint
                )
            except DomainError as exc:
                raise _parse_error(source, lineno, str(exc)) from None
            if not subtype:
                raise _parse_error(source, lineno, "iso entry has no subtype")
            iso.append(entry)
        else:
            raise _parse_error(source, lineno, f"unknown record kind {kind!r}")
    if version is None:
        raise DomainError(f"{source}: missing version record", code="atlas_version")
    return Atlas(rows, iso, text, source)


@functools.lru_cache(maxsize=None)
def _load_from_path(path: str) -> Atlas:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise DomainError(f"cannot read atlas file {path}: {exc}", code="atlas_io_error")
    return _parse_atlas(text, path)


@functools.lru_cache(maxsize=1)
def _load_packaged() -> Atlas:
    text = resources.files(__package__).joinpath("data").joinpath(_DATA_RESOURCE).read_text("utf-8")
    return _parse_atlas(text, f"{__package__}/data/{_DATA_RESOURCE}")


def load_atlas(path: Optional[str] = None) -> Atlas:
    """The atlas: from a path, the env-var override, or the packaged file."""
    if path is None:
        path = os.environ.get(ATLAS_ENV_VAR)
    if path is None:
        return _load_packaged()
    return _load_from_path(os.path.abspath(path))


def rep_of_class(group, label, rep_hint=None) -> RepLabel:
    """rep_of_class on the default atlas; see Atlas.rep_of_class."""
    return load_atlas().rep_of_class(group, label, rep_hint)


def fiber_of_rep(group, rep) -> tuple[CarterLabel, ...]:
    """fiber on the default atlas; see Atlas.fiber."""
    return load_atlas().fiber(group, rep)


def strata_for_characteristic(group, char) -> tuple[RepLabel, ...]:
    """strata_for_characteristic on the default atlas."""
    return load_atlas().strata_for_characteristic(group, char)


def cross_section(group, rep) -> CarterLabel:
    """cross_section on the default atlas; see Atlas.cross_section."""
    return load_atlas().cross_section(group, rep)


def isolated_subgroups(group, flavor) -> tuple[IsolatedSubgroup, ...]:
    """isolated_subgroups on the default atlas."""
    return load_atlas().isolated_subgroups(group, flavor)
