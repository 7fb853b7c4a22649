"""Named verification suites for the package's frozen claims.

Each check re-derives one externally stated fact: a golden table, a
count, an equality of dimension sets, a uniqueness property.  They are
meant to falsify the data or the combinatorics if either is wrong, so a
failing check is an internal consistency failure, not a user error.

Checks are registered in a fixed order; ``run_suite`` executes them and
reports one result per check, with wall-clock time compared against the
stated budget where one applies.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Optional

from .atlas import EXC_GROUPS, EXC_POSITIVE_ROOTS, load_atlas
from .classical import (
    EigenOrbit,
    GroupDescriptor,
    OrbitKind,
    Series,
    SpectralDatum,
    classify,
    dimension_set,
    enumerate_strata,
)
from .errors import DomainError
from .jordan import (
    JordanFamily,
    LabeledPartition,
    apply_bijection,
    codomain,
    enumerate_jordan,
)
from .partitions import (
    Bipartition,
    Partition,
    enumerate_bipartitions,
    enumerate_partitions,
    n_invariant,
)
from .weyl import WeylSeries, WeylType, strata_fibers, stratum_of_class, enumerate_classes


class CheckFailure(Exception):
    """A verification check found the recorded claim to be false."""


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float
    budget: Optional[float] = None

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        timing = f"{self.seconds:.3f}s"
        if self.budget is not None:
            timing += f" (budget {self.budget:g}s)"
        return f"{verdict} {self.name} [{timing}]: {self.detail}"


_CHECKS: dict[str, tuple[Callable[[], str], Optional[float]]] = {}


def _check(name: str, budget: Optional[float] = None):
    def register(func: Callable[[], str]):
        _CHECKS[name] = (func, budget)
        return func

    return register


def check_names() -> tuple[str, ...]:
    return tuple(_CHECKS)


def run_check(name: str) -> CheckResult:
    """Run one named check and report the result."""
    if name not in _CHECKS:
        raise DomainError(f"unknown check {name!r}; have {', '.join(_CHECKS)}", code="bad_suite")
    func, budget = _CHECKS[name]
    start = time.perf_counter()
    try:
        detail = func()
        passed = True
    except CheckFailure as failure:
        detail = str(failure)
        passed = False
    seconds = time.perf_counter() - start
    if passed and budget is not None and seconds > budget:
        passed = False
        detail += f"; exceeded the {budget:g}s budget"
    return CheckResult(name, passed, detail, seconds, budget)


def run_suite(names=None) -> tuple[CheckResult, ...]:
    """Run the named checks (default: all) in registration order."""
    if names is None:
        names = check_names()
    return tuple(run_check(name) for name in names)


def _ensure(condition: bool, message: str) -> None:
    if not condition:
        raise CheckFailure(message)


# Golden rows: weight-6 symplectic characteristic-2 data against their
# excess-(2, 2) bipartitions, in canonical enumeration order.
GOLDEN_SP2_WEIGHT6 = (
    (((6,), {}), (3,)),
    (((4, 2), {}), (2, 1)),
    (((4, 1, 1), {}), (2, 0, 1)),
    (((3, 3), {}), (1, 2)),
    (((2, 2, 2), {}), (1, 1, 1)),
    (((2, 2, 1, 1), {2: 1}), (1, 1, 0, 1)),
    (((2, 2, 1, 1), {2: 0}), (0, 2, 0, 1)),
    (((2, 1, 1, 1, 1), {}), (1, 0, 1, 0, 1)),
    (((1, 1, 1, 1, 1, 1), {}), (0, 1, 0, 1, 0, 1)),
)

# Weight-8 even orthogonal characteristic-2 data against their
# excess-(0, 4) bipartitions.
GOLDEN_SO2_WEIGHT8 = (
    (((6, 2), {}), (4,)),
    (((4, 4), {4: 1}), (3, 1)),
    (((4, 4), {4: 0}), (2, 2)),
    (((4, 2, 1, 1), {}), (3, 0, 1)),
    (((3, 3, 1, 1), {}), (2, 1, 1)),
    (((2, 2, 2, 2), {2: 1}), (2, 0, 2)),
    (((2, 2, 2, 2), {2: 0}), (1, 1, 1, 1)),
    (((2, 2, 1, 1, 1, 1), {2: 1}), (2, 0, 1, 0, 1)),
    (((2, 2, 1, 1, 1, 1), {2: 0}), (1, 1, 1, 0, 1)),
    (((1, 1, 1, 1, 1, 1, 1, 1), {}), (1, 0, 1, 0, 1, 0, 1)),
)


def _golden(family: JordanFamily, weight: int, table) -> str:
    listed = enumerate_jordan(family, weight)
    _ensure(
        len(listed) == len(table),
        f"expected {len(table)} weight-{weight} data, enumerated {len(listed)}",
    )
    for (parts, labels), want in table:
        nu = LabeledPartition(parts, labels) if family.labeled else Partition(parts)
        got = apply_bijection(family, nu)
        _ensure(
            got == Bipartition(want),
            f"{family.name} sends {nu} to {tuple(got)}, table says {want}",
        )
    for nu, ((parts, labels), _) in zip(listed, table):
        want_nu = LabeledPartition(parts, labels) if family.labeled else Partition(parts)
        _ensure(nu == want_nu, f"enumeration order differs at {nu}")
    return f"all {len(table)} rows exact, in enumeration order"


@_check("golden-sp2", budget=0.001)
def _check_golden_sp2() -> str:
    """Weight-6 symplectic char-2 golden table, exact."""
    return _golden(JordanFamily.SYMPLECTIC_CHAR2, 6, GOLDEN_SP2_WEIGHT6)


@_check("golden-so2", budget=0.001)
def _check_golden_so2() -> str:
    """Weight-8 even orthogonal char-2 golden table, exact."""
    return _golden(JordanFamily.ORTHOGONAL_CHAR2, 8, GOLDEN_SO2_WEIGHT8)


@_check("bijectivity", budget=10.0)
def _check_bijectivity() -> str:
    """Each family map is a bijection onto its enumerated codomain."""
    cases = 0
    for family in JordanFamily:
        if family is JordanFamily.ORTHOGONAL:
            weights = range(0, 18)
        else:
            weights = range(0, 17, 2)
        for weight in weights:
            excess, half = codomain(family, weight)
            images = [apply_bijection(family, nu) for nu in enumerate_jordan(family, weight)]
            _ensure(
                len(set(images)) == len(images),
                f"{family.name} weight {weight}: map is not injective",
            )
            want = set(enumerate_bipartitions(half, excess))
            _ensure(
                set(images) == want,
                f"{family.name} weight {weight}: image has {len(set(images))} of "
                f"{len(want)} codomain elements",
            )
            cases += 1
    return f"{cases} family/weight pairs are bijections onto their codomains"


@_check("sp4-strata")
def _check_sp4_strata() -> str:
    """Sp_4 has five strata, dims {8,6,4,4,0}, with the two known dim-4 ones."""
    sp4 = GroupDescriptor(Series.SP, 4)
    strata = enumerate_strata(sp4)
    dims = sorted((s.class_dim for s in strata), reverse=True)
    _ensure(dims == [8, 6, 4, 4, 0], f"Sp_4 dims are {dims}")
    semisimple = classify(
        SpectralDatum(
            sp4,
            [
                EigenOrbit("1", OrbitKind.INVOLUTIVE, Partition([1, 1])),
                EigenOrbit("-1", OrbitKind.INVOLUTIVE, Partition([1, 1])),
            ],
        )
    )
    unipotent = classify(
        SpectralDatum(sp4, [EigenOrbit("1", OrbitKind.INVOLUTIVE, Partition([2, 1, 1]))])
    )
    _ensure(
        semisimple.class_dim == 4 and unipotent.class_dim == 4,
        f"expected class dimension 4 twice, got {semisimple.class_dim} and {unipotent.class_dim}",
    )
    _ensure(
        semisimple.bp != unipotent.bp,
        "the two dimension-4 spectral data landed in one stratum",
    )
    return "5 strata with dims [8, 6, 4, 4, 0]; the two dim-4 strata are distinct"


@_check("dimension-sets", budget=5.0)
def _check_dimension_sets() -> str:
    """Odd orthogonal and symplectic dimension sets agree, any characteristic."""
    for n in range(1, 7):
        base = dimension_set(GroupDescriptor(Series.SO_ODD, 2 * n + 1))
        variants = {
            "Sp char 0": dimension_set(GroupDescriptor(Series.SP, 2 * n)),
            "Sp char 2": dimension_set(GroupDescriptor(Series.SP, 2 * n, 2)),
        }
        for label, got in variants.items():
            _ensure(got == base, f"n={n}: {label} dimension set differs")
        # unipotent classes in characteristic 2 already realize every value
        from_unipotents = set()
        for nu in enumerate_jordan(JordanFamily.SYMPLECTIC_CHAR2, 2 * n):
            bp = apply_bijection(JordanFamily.SYMPLECTIC_CHAR2, nu)
            from_unipotents.add(2 * n * n - 2 * n_invariant(bp, n))
        _ensure(from_unipotents == base, f"n={n}: char-2 unipotent dims differ")
    return "SO_odd, Sp, and char-2 unipotent dimension sets agree for n <= 6"


@_check("minimal-dimension")
def _check_minimal_dimension() -> str:
    """The smallest nonzero class dimension of a rank-n stratum is 2n."""
    for n in range(3, 7):
        for group in (GroupDescriptor(Series.SP, 2 * n), GroupDescriptor(Series.SO_ODD, 2 * n + 1)):
            nonzero = sorted(d for d in dimension_set(group) if d)
            _ensure(
                nonzero and nonzero[0] == 2 * n,
                f"{group.series.name} rank {n}: minimal nonzero dim {nonzero[:1]} != {2 * n}",
            )
    return "minimal nonzero stratum dimension is 2n for ranks 3 through 6"


@_check("e8-counts")
def _check_e8_counts() -> str:
    """E8: 75 strata; 70 contain unipotents in char 0, 74 in char 2, 71 in char 3."""
    atlas = load_atlas()
    counts = {
        "rows": len(atlas.rows("E8")),
        0: len(atlas.strata_for_characteristic("E8", 0)),
        2: len(atlas.strata_for_characteristic("E8", 2)),
        3: len(atlas.strata_for_characteristic("E8", 3)),
    }
    want = {"rows": 75, 0: 70, 2: 74, 3: 71}
    _ensure(counts == want, f"E8 counts {counts} != {want}")
    return "75 rows; characteristic 0/2/3 give 70/74/71 strata with unipotents"


@_check("star-inventory")
def _check_star_inventory() -> str:
    """The starred representations match the recorded per-prime lists."""
    atlas = load_atlas()
    want = {
        "G2": {(1, 3, 3)},
        "F4": {(9, 6, 2), (4, 7, 2), (4, 8, 2), (2, 16, 2)},
        "E6": set(),
        "E7": {(84, 15, 2)},
        "E8": {(1050, 10, 2), (840, 14, 2), (168, 24, 2), (972, 32, 2), (175, 12, 3)},
    }
    for group in EXC_GROUPS:
        got = {(r.rep.d, r.rep.n, r.rep.star) for r in atlas.rows(group) if r.rep.star}
        _ensure(got == want[group], f"{group} starred set is {sorted(got)}")
    return "starred sets exact for all five groups"


@_check("endpoints")
def _check_endpoints() -> str:
    """A_0 maps to 1_(positive-root count) and the Coxeter class to 1_0."""
    atlas = load_atlas()
    coxeter = {"G2": "G_2", "F4": "F_4", "E6": "E_6", "E7": "E_7", "E8": "E_8"}
    for group in EXC_GROUPS:
        bottom = atlas.rep_of_class(group, "A_0")
        _ensure(
            (bottom.d, bottom.n) == (1, EXC_POSITIVE_ROOTS[group]),
            f"{group}: A_0 maps to {bottom}",
        )
        top = atlas.rep_of_class(group, coxeter[group])
        _ensure((top.d, top.n) == (1, 0), f"{group}: Coxeter class maps to {top}")
    return "both endpoints exact in all five tables"


@_check("cross-sections", budget=10.0)
def _check_cross_sections() -> str:
    """Fixed-space dimension has a unique minimizer on every fiber."""
    atlas = load_atlas()
    rows = 0
    for group in EXC_GROUPS:
        for row in atlas.rows(group):
            atlas.cross_section(group, row.rep)  # raises on a tie
            rows += 1
    fibers = 0
    types = [WeylType(WeylSeries.B, n) for n in range(1, 7)]
    types += [WeylType(WeylSeries.D, n) for n in (4, 5, 6)]
    types += [WeylType(WeylSeries.A, n) for n in range(1, 9)]
    for wt in types:
        fibers += len(strata_fibers(wt))  # unique-minimum is checked inside
    return f"unique minimizer on {rows} exceptional rows and {fibers} classical fibers"


@_check("surjectivity")
def _check_surjectivity() -> str:
    """Classical class-to-stratum maps hit every stratum label."""
    for n in range(1, 7):
        wt = WeylType(WeylSeries.B, n)
        got = set(strata_fibers(wt))
        want = set(enumerate_bipartitions(n, (2, 2)))
        _ensure(got == want, f"B_{n}: image covers {len(got)} of {len(want)} labels")
    for n in (4, 5, 6):
        wt = WeylType(WeylSeries.D, n)
        got = set(strata_fibers(wt))
        want = set(enumerate_bipartitions(n, (0, 4)))
        _ensure(got == want, f"D_{n}: image covers {len(got)} of {len(want)} labels")
    for n in range(1, 9):
        wt = WeylType(WeylSeries.A, n)
        for cls in enumerate_classes(wt):
            _ensure(
                stratum_of_class(wt, cls) == Bipartition(cls),
                f"A_{n}: class {cls} does not map to itself",
            )
    return "B (n<=6) and D (n in 4..6) surject; A (n<=8) is the identity"


@_check("gl-oracle", budget=1.0)
def _check_gl_oracle() -> str:
    """The general-linear dimension formula matches the conjugate-sum oracle."""
    checked = 0
    for n in range(0, 13):
        for p in enumerate_partitions(n):
            part = Partition(p)
            expected = sum(c * (c - 1) // 2 for c in part.conjugate())
            got = n_invariant(Bipartition(part), n)
            _ensure(
                got == expected,
                f"partition {tuple(part)}: n-invariant {got} != oracle {expected}",
            )
            checked += 1
    return f"{checked} partitions of n <= 12 agree with the conjugate-sum oracle"
