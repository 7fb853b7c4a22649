import random
from math import comb

import pytest

from weylstrata.classical import (
    EigenOrbit,
    GroupDescriptor,
    OrbitKind,
    Series,
    SpectralDatum,
    classify,
    dimension_set,
    enumerate_strata,
    positive_roots,
    series_from_name,
    stratum_excess,
)
from weylstrata.errors import DomainError
from weylstrata.jordan import (
    JordanFamily,
    LabeledPartition,
    apply_bijection,
    enumerate_jordan,
)
from weylstrata.partitions import (
    Bipartition,
    Partition,
    enumerate_partitions,
    n_invariant,
)

GEN = OrbitKind.GENERIC
INV = OrbitKind.INVOLUTIVE


def gl(n, char=0):
    return GroupDescriptor(Series.GL, n, char)


def sp(N, char=0):
    return GroupDescriptor(Series.SP, N, char)


def so_odd(N, char=0):
    return GroupDescriptor(Series.SO_ODD, N, char)


def so_even(N, char=0):
    return GroupDescriptor(Series.SO_EVEN, N, char)


# ---------------------------------------------------------------------------
# descriptors and root counts


def test_group_descriptor_validation():
    assert GroupDescriptor("Sp", 4).series is Series.SP
    assert series_from_name("so_even") is Series.SO_EVEN
    with pytest.raises(DomainError):
        GroupDescriptor(Series.SP, 5)
    with pytest.raises(DomainError):
        GroupDescriptor(Series.SO_ODD, 4)
    with pytest.raises(DomainError):
        GroupDescriptor(Series.SO_EVEN, 7)
    with pytest.raises(DomainError):
        GroupDescriptor(Series.GL, 3, 4)  # 4 is not a characteristic
    GroupDescriptor(Series.GL, 3, 7)  # odd primes fine


def test_positive_roots():
    assert positive_roots(gl(3)) == 3
    assert positive_roots(gl(1)) == 0
    assert positive_roots(sp(4)) == 4
    assert positive_roots(so_odd(5)) == 4
    assert positive_roots(sp(8)) == 16
    assert positive_roots(so_even(8)) == 12
    assert positive_roots(so_even(2)) == 0


def test_rank_half():
    assert gl(3).rank_half == 3
    assert sp(6).rank_half == 3
    assert so_odd(7).rank_half == 3
    assert so_even(8).rank_half == 4


# ---------------------------------------------------------------------------
# spectral datum validation


def test_spectral_datum_bookkeeping():
    with pytest.raises(DomainError):
        SpectralDatum(sp(4), [EigenOrbit("1", INV, Partition([1, 1]))])  # sums to 2
    with pytest.raises(DomainError):
        SpectralDatum(gl(3), [EigenOrbit("x", GEN, Partition([2]))])  # sums to 2
    with pytest.raises(DomainError):
        SpectralDatum(
            sp(4),
            [EigenOrbit("x", GEN, Partition([1])), EigenOrbit("x", GEN, Partition([1]))],
        )  # duplicate ids


def test_spectral_datum_family_checks():
    # eigenvalue 1 of Sp away from characteristic 2 needs a symplectic Jordan type
    with pytest.raises(DomainError):
        SpectralDatum(sp(4), [EigenOrbit("1", INV, Partition([3, 1]))])
    # and a labeled one in characteristic 2
    with pytest.raises(DomainError):
        SpectralDatum(sp(4, 2), [EigenOrbit("1", INV, Partition([2, 2]))])
    SpectralDatum(sp(4, 2), [EigenOrbit("1", INV, LabeledPartition([2, 2], {2: 0}))])
    # -1 does not exist in characteristic 2
    with pytest.raises(DomainError):
        SpectralDatum(
            sp(4, 2),
            [EigenOrbit("-1", INV, LabeledPartition([2, 2], {2: 0}))],
        )
    # GL data is generic only
    with pytest.raises(DomainError):
        SpectralDatum(gl(2), [EigenOrbit("1", INV, Partition([1, 1]))])
    # eigenvalue 1 of an odd orthogonal group has odd weight
    with pytest.raises(DomainError):
        SpectralDatum(
            so_odd(5),
            [
                EigenOrbit("1", INV, Partition([1, 1])),
                EigenOrbit("-1", INV, Partition([3])),
            ],
        )


def test_eigen_orbit_validation():
    with pytest.raises(DomainError):
        EigenOrbit("q", INV, Partition([1]))  # involutive ids are 1 / -1
    with pytest.raises(DomainError):
        EigenOrbit("1", GEN, Partition([1]))  # generic ids must differ from them
    with pytest.raises(DomainError):
        EigenOrbit("x", GEN, Partition())  # empty Jordan type


# ---------------------------------------------------------------------------
# classify: worked examples


def test_classify_gl_regular():
    datum = SpectralDatum(
        gl(3),
        [EigenOrbit("x", GEN, Partition([2])), EigenOrbit("y", GEN, Partition([1]))],
    )
    res = classify(datum)
    assert res.bp == (3,)
    assert res.n_invariant == 0
    assert res.class_dim == 6
    assert res.pair_degenerate is None


def test_classify_sp4_two_strata_same_dimension():
    a = classify(
        SpectralDatum(
            sp(4),
            [
                EigenOrbit("1", INV, Partition([1, 1])),
                EigenOrbit("-1", INV, Partition([1, 1])),
            ],
        )
    )
    b = classify(SpectralDatum(sp(4), [EigenOrbit("1", INV, Partition([2, 1, 1]))]))
    assert a.bp == (0, 2) and a.class_dim == 4
    assert b.bp == (1, 0, 1) and b.class_dim == 4
    assert a.bp != b.bp


def test_classify_so5():
    res = classify(
        SpectralDatum(
            so_odd(5),
            [
                EigenOrbit("1", INV, Partition([1])),
                EigenOrbit("-1", INV, Partition([1, 1, 1, 1])),
            ],
        )
    )
    assert res.bp == (1, 0, 1)
    assert res.class_dim == 4


def test_classify_mixed_generic_and_involutive():
    # Sp_8: a generic pair with Jordan type (2) and unipotent part (2,1,1) at 1
    res = classify(
        SpectralDatum(
            sp(8),
            [
                EigenOrbit("q", GEN, Partition([2])),
                EigenOrbit("1", INV, Partition([2, 1, 1])),
            ],
        )
    )
    # (2) + (1,0,1) entrywise
    assert res.bp == (3, 0, 1)
    assert res.n_invariant == n_invariant(Bipartition([3, 0, 1]), 4)
    assert res.class_dim == 2 * 16 - 2 * res.n_invariant


def test_classify_sp_char2_identity():
    res = classify(
        SpectralDatum(
            sp(6, 2), [EigenOrbit("1", INV, LabeledPartition([1] * 6, {}))]
        )
    )
    assert res.bp == (0, 1, 0, 1, 0, 1)
    assert res.class_dim == 0


def test_classify_so_even_char0_and_degeneracy():
    res = classify(
        SpectralDatum(so_even(8), [EigenOrbit("1", INV, Partition([1] * 8))])
    )
    assert res.bp == (1, 0, 1, 0, 1, 0, 1)
    assert res.class_dim == 0
    assert res.pair_degenerate is False
    res2 = classify(
        SpectralDatum(so_even(8), [EigenOrbit("1", INV, Partition([2, 2, 2, 2]))])
    )
    assert res2.bp == (1, 1, 1, 1)
    assert res2.pair_degenerate is True


def test_classify_so_odd_char2_delegates():
    # spectral data are those of the symplectic group one dimension down
    datum = SpectralDatum(
        so_odd(7, 2), [EigenOrbit("1", INV, LabeledPartition([2, 2, 1, 1], {2: 1}))]
    )
    res = classify(datum)
    twin = classify(
        SpectralDatum(sp(6, 2), [EigenOrbit("1", INV, LabeledPartition([2, 2, 1, 1], {2: 1}))])
    )
    assert (res.bp, res.n_invariant, res.class_dim) == (twin.bp, twin.n_invariant, twin.class_dim)
    assert res.pair_degenerate is None
    with pytest.raises(DomainError):
        SpectralDatum(so_odd(7, 2), [EigenOrbit("1", INV, Partition([7]))])


# ---------------------------------------------------------------------------
# enumerate_strata and dimension sets


def test_enumerate_strata_sp4():
    strata = enumerate_strata(sp(4))
    assert [tuple(s.bp) for s in strata] == [
        (2,),
        (1, 1),
        (1, 0, 1),
        (0, 2),
        (0, 1, 0, 1),
    ]
    assert [s.class_dim for s in strata] == [8, 6, 4, 4, 0]


def test_enumerate_strata_gl():
    strata = enumerate_strata(gl(2))
    assert {s.class_dim for s in strata} == {2, 0}
    strata3 = enumerate_strata(gl(3))
    assert [tuple(s.bp) for s in strata3] == [(3,), (2, 1), (1, 1, 1)]
    assert [s.class_dim for s in strata3] == [6, 4, 0]


def test_enumerate_strata_so8():
    strata = enumerate_strata(so_even(8))
    assert len(strata) == 10
    # the degenerate labels in weight 4, excess (0, 4)
    degenerate = {tuple(s.bp) for s in strata if s.pair_degenerate}
    assert degenerate == {(2, 2), (1, 1, 1, 1)}
    assert max(s.class_dim for s in strata) == 24


def test_enumerate_strata_characteristic_independent():
    for a, b in [(sp(8, 0), sp(8, 2)), (so_even(8, 0), so_even(8, 2))]:
        assert [s.bp for s in enumerate_strata(a)] == [s.bp for s in enumerate_strata(b)]
        assert dimension_set(a) == dimension_set(b)


def test_dimension_set_so5():
    assert dimension_set(so_odd(5)) == {0, 4, 6, 8}


def test_dimension_sets_agree_across_forms():
    # odd orthogonal and symplectic groups of equal rank share dimension sets,
    # and both match the unipotent class dimensions in characteristic 2
    for n in range(1, 7):
        sp_set = dimension_set(sp(2 * n))
        assert dimension_set(so_odd(2 * n + 1)) == sp_set
        assert dimension_set(sp(2 * n, 2)) == sp_set
        unip = {
            2 * n * n - 2 * n_invariant(apply_bijection(JordanFamily.SYMPLECTIC_CHAR2, nu), n)
            for nu in enumerate_jordan(JordanFamily.SYMPLECTIC_CHAR2, 2 * n)
        }
        assert unip == sp_set


def test_so_even_unipotent_dimensions_cover_strata():
    for n in range(1, 7):
        grp = so_even(2 * n)
        unip = {
            2 * positive_roots(grp)
            - 2 * n_invariant(apply_bijection(JordanFamily.ORTHOGONAL_CHAR2, nu), n)
            for nu in enumerate_jordan(JordanFamily.ORTHOGONAL_CHAR2, 2 * n)
        }
        assert unip == dimension_set(grp)


def test_minimal_nonzero_dimension_is_2n():
    for n in range(1, 7):
        dims = dimension_set(sp(2 * n))
        nonzero = sorted(d for d in dims if d > 0)
        assert nonzero[0] == 2 * n


# ---------------------------------------------------------------------------
# classification lands in the enumerated strata (randomized)


def _random_jordan(rng, family, weight):
    pool = enumerate_jordan(family, weight)
    return pool[rng.randrange(len(pool))]


def _random_generic_orbits(rng, budget):
    orbits = []
    i = 0
    while budget > 0:
        w = rng.randint(1, budget)
        ps = enumerate_partitions(w)
        orbits.append(EigenOrbit(f"x{i}", GEN, ps[rng.randrange(len(ps))]))
        budget -= w
        i += 1
    return orbits


def _random_datum(rng, series, char):
    if series is Series.GL:
        n = rng.randint(1, 12)
        return SpectralDatum(gl(n, char), _random_generic_orbits(rng, n))
    if series is Series.SP or (series is Series.SO_ODD and char == 2):
        N = 2 * rng.randint(1, 6)
        fam = JordanFamily.SYMPLECTIC_CHAR2 if char == 2 else JordanFamily.SYMPLECTIC
        d1 = 2 * rng.randint(0, N // 2)
        dm1 = 0 if char == 2 else 2 * rng.randint(0, (N - d1) // 2)
        orbits = []
        if d1:
            orbits.append(EigenOrbit("1", INV, _random_jordan(rng, fam, d1)))
        if dm1:
            orbits.append(EigenOrbit("-1", INV, _random_jordan(rng, fam, dm1)))
        orbits += _random_generic_orbits(rng, (N - d1 - dm1) // 2)
        if series is Series.SO_ODD:
            return SpectralDatum(so_odd(N + 1, 2), orbits)
        return SpectralDatum(sp(N, char), orbits)
    if series is Series.SO_ODD:
        N = 2 * rng.randint(1, 6) + 1
        dm1 = 2 * rng.randint(0, (N - 1) // 2)
        d1 = N - dm1 - 2 * rng.randint(0, (N - 1 - dm1) // 2)
        orbits = [EigenOrbit("1", INV, _random_jordan(rng, JordanFamily.ORTHOGONAL, d1))]
        if dm1:
            orbits.append(
                EigenOrbit("-1", INV, _random_jordan(rng, JordanFamily.ORTHOGONAL, dm1))
            )
        orbits += _random_generic_orbits(rng, (N - d1 - dm1) // 2)
        return SpectralDatum(so_odd(N, 0), orbits)
    # SO_EVEN
    N = 2 * rng.randint(1, 6)
    if char == 2:
        d1 = 2 * rng.randint(0, N // 2)
        orbits = []
        if d1:
            orbits.append(
                EigenOrbit("1", INV, _random_jordan(rng, JordanFamily.ORTHOGONAL_CHAR2, d1))
            )
        orbits += _random_generic_orbits(rng, (N - d1) // 2)
        return SpectralDatum(so_even(N, 2), orbits)
    d1 = 2 * rng.randint(0, N // 2)
    dm1 = 2 * rng.randint(0, (N - d1) // 2)
    orbits = []
    if d1:
        orbits.append(EigenOrbit("1", INV, _random_jordan(rng, JordanFamily.ORTHOGONAL, d1)))
    if dm1:
        orbits.append(EigenOrbit("-1", INV, _random_jordan(rng, JordanFamily.ORTHOGONAL, dm1)))
    orbits += _random_generic_orbits(rng, (N - d1 - dm1) // 2)
    return SpectralDatum(so_even(N, 0), orbits)


@pytest.mark.parametrize(
    "series,char",
    [
        (Series.GL, 0),
        (Series.GL, 2),
        (Series.SP, 0),
        (Series.SP, 2),
        (Series.SO_ODD, 0),
        (Series.SO_ODD, 2),
        (Series.SO_EVEN, 0),
        (Series.SO_EVEN, 2),
    ],
)
def test_classification_lands_in_enumerated_strata(series, char):
    rng = random.Random(f"{series}-{char}")
    strata_cache = {}
    for _ in range(500):
        datum = _random_datum(rng, series, char)
        res = classify(datum)
        key = (datum.group.series, datum.group.dimension)
        if key not in strata_cache:
            grp = GroupDescriptor(datum.group.series, datum.group.dimension, char)
            strata_cache[key] = {s.bp: s for s in enumerate_strata(grp)}
        table = strata_cache[key]
        assert res.bp in table
        assert table[res.bp].class_dim == res.class_dim
        assert table[res.bp].n_invariant == res.n_invariant


# ---------------------------------------------------------------------------
# unipotent classes embed injectively into strata


def _unipotent_data(group):
    char = group.characteristic
    if group.series is Series.GL:
        for p in enumerate_partitions(group.dimension):
            yield SpectralDatum(group, [EigenOrbit("x0", GEN, p)])
        return
    N = group.dimension - 1 if group.series is Series.SO_ODD and char == 2 else group.dimension
    if group.series is Series.SP or (group.series is Series.SO_ODD and char == 2):
        fam = JordanFamily.SYMPLECTIC_CHAR2 if char == 2 else JordanFamily.SYMPLECTIC
    elif char == 2:
        fam = JordanFamily.ORTHOGONAL_CHAR2
    else:
        fam = JordanFamily.ORTHOGONAL
    for nu in enumerate_jordan(fam, N):
        yield SpectralDatum(group, [EigenOrbit("1", INV, nu)])


@pytest.mark.parametrize("char", [0, 2])
def test_unipotent_uniqueness(char):
    groups = []
    for N in range(2, 13, 2):
        groups += [sp(N, char), so_even(N, char)]
    for N in range(3, 13, 2):
        groups.append(so_odd(N, char))
    for group in groups:
        seen = {}
        for datum in _unipotent_data(group):
            bp = classify(datum).bp
            assert bp not in seen, (group, datum.orbits, seen[bp])
            seen[bp] = datum.orbits


# ---------------------------------------------------------------------------
# the general linear Springer-dimension oracle


def test_gl_springer_dimension_matches_conjugate_binomials():
    for n in range(0, 13):
        for p in enumerate_partitions(n):
            expected = sum(comb(m, 2) for m in p.conjugate())
            assert n_invariant(Bipartition(p), n) == expected


def test_stratum_excess():
    from weylstrata.partitions import Excess

    assert stratum_excess(Series.SP) == Excess(2, 2)
    assert stratum_excess(Series.SO_ODD) == Excess(2, 2)
    assert stratum_excess(Series.SO_EVEN) == Excess(0, 4)
