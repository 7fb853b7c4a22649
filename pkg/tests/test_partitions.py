import random
from itertools import zip_longest

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weylstrata.errors import DomainError
from weylstrata.partitions import (
    Bipartition,
    Excess,
    Partition,
    bp_sum,
    enumerate_bipartitions,
    enumerate_partitions,
    has_excess,
    is_bipartition,
    n_invariant,
)


# ---------------------------------------------------------------------------
# Brute-force oracle: enumerate every nonnegative sequence of a given weight
# (length at most 2n suffices: each track dies after its first zero) and
# filter by the definition directly.  Independent of the library's generator.


def _oracle_sequences(n, max_len):
    if n == 0:
        yield ()
        return
    stack = [((), n)]
    while stack:
        prefix, rem = stack.pop()
        if rem == 0:
            yield prefix
            continue
        if len(prefix) == max_len:
            continue
        for v in range(rem + 1):
            if v == 0 and len(prefix) + 1 == max_len:
                continue
            stack.append((prefix + (v,), rem - v))


def _oracle_is_bipartition(seq):
    return all(seq[i] >= seq[i + 2] for i in range(len(seq) - 2))


def _oracle_has_excess(seq, e, ep):
    for i in range(len(seq) - 1):
        slack = e if i % 2 == 0 else ep
        if seq[i] + slack < seq[i + 1]:
            return False
    return True


def _oracle_bipartitions(n, e, ep):
    found = set()
    for seq in _oracle_sequences(n, 2 * n):
        if seq and seq[-1] == 0:
            continue
        if _oracle_is_bipartition(seq) and _oracle_has_excess(seq, e, ep):
            found.add(seq)
    return found


def _random_bipartition(rng, max_weight):
    # interleave two random partitions; always a valid bipartition
    def rand_partition(w):
        parts = []
        while w > 0:
            p = rng.randint(1, w)
            parts.append(p)
            w -= p
        return sorted(parts, reverse=True)

    w = rng.randint(0, max_weight)
    odd = rand_partition(rng.randint(0, w))
    even = rand_partition(w - sum(odd))
    entries = []
    for a, b in zip_longest(odd, even, fillvalue=0):
        entries.extend((a, b))
    return Bipartition(entries)


def _minimal_excess(bp):
    e = max((bp[i + 1] - bp[i] for i in range(0, len(bp) - 1, 2)), default=0)
    ep = max((bp[i + 1] - bp[i] for i in range(1, len(bp) - 1, 2)), default=0)
    return Excess(max(e, 0), max(ep, 0))


# ---------------------------------------------------------------------------
# Partition


def test_partition_trims_trailing_zeros():
    assert Partition([3, 1, 0, 0]) == (3, 1)
    assert Partition([]) == ()
    assert Partition([0, 0]) == ()


def test_partition_rejects_bad_input():
    with pytest.raises(DomainError):
        Partition([1, 2])
    with pytest.raises(DomainError):
        Partition([2, -1])
    with pytest.raises(DomainError):
        Partition([2, 0, 1])


def test_partition_weight_and_multiplicity():
    p = Partition([4, 2, 2, 1])
    assert p.weight == 9
    assert p.multiplicity(2) == 2
    assert p.multiplicity(3) == 0


def test_partition_conjugate():
    assert Partition([4, 2, 1]).conjugate() == (3, 2, 1, 1)
    assert Partition([1, 1, 1]).conjugate() == (3,)
    assert Partition().conjugate() == ()
    for p in enumerate_partitions(9):
        assert p.conjugate().conjugate() == p


def test_enumerate_partitions_counts():
    # classical values of the partition function
    expected = {0: 1, 1: 1, 2: 2, 3: 3, 4: 5, 5: 7, 6: 11, 7: 15, 10: 42}
    for n, count in expected.items():
        assert len(enumerate_partitions(n)) == count


def test_enumerate_partitions_order_is_lex_descending():
    ps = enumerate_partitions(6)
    assert ps[0] == (6,)
    assert ps[-1] == (1, 1, 1, 1, 1, 1)
    assert list(ps) == sorted(ps, reverse=True)


# ---------------------------------------------------------------------------
# Bipartition basics


def test_bipartition_canonical_form():
    assert Bipartition([2, 1, 0, 0]) == (2, 1)
    assert Bipartition([1, 0, 1, 0]) == (1, 0, 1)
    assert Bipartition([]) == ()
    # interior zeros are significant
    assert Bipartition([1, 0, 1]) != Bipartition([1, 1])


def test_bipartition_rejects_track_violations():
    assert not is_bipartition([0, 1, 1])   # odd track (0, 1) climbs
    assert is_bipartition([1, 2, 0, 1])
    assert is_bipartition([0, 1])
    with pytest.raises(DomainError):
        Bipartition([1, 1, 2])
    with pytest.raises(DomainError):
        Bipartition([1, -1])


def test_bipartition_tracks_and_entry():
    bp = Bipartition([3, 1, 2, 1, 1])
    assert bp.tracks() == ((3, 2, 1), (1, 1))
    assert bp.entry(1) == 3
    assert bp.entry(6) == 0
    with pytest.raises(DomainError):
        bp.entry(0)


def test_pair_swapped_and_symmetry():
    assert Bipartition([2, 1]).pair_swapped() == (1, 2)
    assert Bipartition([1, 0, 1]).pair_swapped() == (0, 1, 0, 1)
    assert Bipartition([2, 2, 1, 1]).is_pair_symmetric
    assert not Bipartition([2, 1]).is_pair_symmetric
    assert Bipartition().is_pair_symmetric


def test_pair_swapped_is_involution():
    rng = random.Random(11)
    for _ in range(200):
        bp = _random_bipartition(rng, 10)
        swapped = bp.pair_swapped()
        assert swapped.pair_swapped() == bp
        assert swapped.weight == bp.weight


# ---------------------------------------------------------------------------
# Excess


def test_has_excess_examples():
    assert has_excess(Bipartition([0, 2]), (2, 2))
    assert not has_excess(Bipartition([0, 2]), (0, 2))
    assert has_excess(Bipartition([3]), (0, 0))
    assert has_excess(Bipartition(), (0, 0))
    assert has_excess(Bipartition([1, 0, 1]), (0, 4))


def test_has_excess_matches_oracle():
    rng = random.Random(7)
    for _ in range(300):
        bp = _random_bipartition(rng, 8)
        e, ep = rng.randint(0, 3), rng.randint(0, 3)
        assert has_excess(bp, (e, ep)) == _oracle_has_excess(bp, e, ep)


def test_excess_rejects_negative():
    with pytest.raises(DomainError):
        has_excess(Bipartition([1]), (-1, 0))


# ---------------------------------------------------------------------------
# Enumeration of bipartitions


def test_enumerate_bipartitions_weight_two():
    got = enumerate_bipartitions(2, (2, 2))
    assert set(got) == {(2,), (1, 1), (0, 2), (1, 0, 1), (0, 1, 0, 1)}
    assert len(got) == 5
    # canonical order: lexicographically descending
    assert list(got) == sorted(got, reverse=True)


def test_enumerate_bipartitions_zero_excess_is_partitions():
    for n in range(17):
        bps = enumerate_bipartitions(n, (0, 0))
        ps = enumerate_partitions(n)
        assert [tuple(b) for b in bps] == [tuple(p) for p in ps]


def test_enumerate_bipartitions_empty_weight():
    assert enumerate_bipartitions(0, (2, 2)) == (Bipartition(),)


def test_enumerate_bipartitions_matches_oracle():
    for n in range(7):
        for x in [(0, 0), (1, 1), (2, 2), (2, 0), (0, 2), (0, 4)]:
            got = enumerate_bipartitions(n, x)
            assert len(set(got)) == len(got)
            assert {tuple(b) for b in got} == _oracle_bipartitions(n, *x)


def test_enumerate_bipartitions_membership_postconditions():
    for n in range(9):
        for x in [(1, 1), (2, 2), (2, 0), (0, 2), (0, 4)]:
            for bp in enumerate_bipartitions(n, x):
                assert bp.weight == n
                assert has_excess(bp, x)


def test_enumerate_bipartitions_monotone_in_excess():
    # larger slack can only enlarge the set
    for n in range(10):
        small = set(enumerate_bipartitions(n, (1, 1)))
        large = set(enumerate_bipartitions(n, (2, 2)))
        assert small <= large
        assert set(enumerate_bipartitions(n, (0, 2))) <= set(
            enumerate_bipartitions(n, (0, 4))
        )


# ---------------------------------------------------------------------------
# Sum


def test_bp_sum_examples():
    assert bp_sum(Bipartition([2, 1]), Bipartition([1])) == (3, 1)
    assert bp_sum(Bipartition([1, 0, 1]), Bipartition()) == (1, 0, 1)
    assert bp_sum(Bipartition([0, 1]), Bipartition([0, 1])) == (0, 2)


@given(
    st.integers(0, 1 << 30),
    st.integers(0, 1 << 30),
    st.integers(0, 1 << 30),
)
def test_bp_sum_algebra(seed_a, seed_b, seed_c):
    a = _random_bipartition(random.Random(seed_a), 9)
    b = _random_bipartition(random.Random(seed_b), 9)
    c = _random_bipartition(random.Random(seed_c), 9)
    assert bp_sum(a, b) == bp_sum(b, a)
    assert bp_sum(a, bp_sum(b, c)) == bp_sum(bp_sum(a, b), c)
    assert bp_sum(a, Bipartition()) == a
    assert bp_sum(a, b).weight == a.weight + b.weight


def test_excess_additivity_on_random_pairs():
    # minimal excesses of summands add up to a valid excess of the sum
    rng = random.Random(2026)
    for _ in range(1000):
        a = _random_bipartition(rng, 12)
        b = _random_bipartition(rng, 12)
        xa, xb = _minimal_excess(a), _minimal_excess(b)
        assert has_excess(a, xa) and has_excess(b, xb)
        assert has_excess(bp_sum(a, b), (xa.e + xb.e, xa.e_prime + xb.e_prime))


# ---------------------------------------------------------------------------
# n-invariant


def test_n_invariant_examples():
    assert n_invariant(Bipartition([2]), 2) == 0
    assert n_invariant(Bipartition([1, 1]), 2) == 1
    assert n_invariant(Bipartition([0, 1, 0, 1]), 2) == 4
    assert n_invariant(Bipartition(), 0) == 0


def test_n_invariant_rejects_weight_mismatch():
    with pytest.raises(DomainError):
        n_invariant(Bipartition([2]), 3)
    with pytest.raises(DomainError):
        n_invariant(Bipartition([2]), -1)


def test_n_invariant_reindexing_oracle():
    # sum of (k-1) * c_k over 1-based positions equals the partial-sum form
    for n in range(13):
        for bp in enumerate_bipartitions(n, (n, n)):
            expected = sum(k * c for k, c in enumerate(bp))
            assert n_invariant(bp, n) == expected


def test_n_invariant_zero_iff_single_entry():
    for n in range(1, 13):
        for bp in enumerate_bipartitions(n, (n, n)):
            if n_invariant(bp, n) == 0:
                assert bp == (n,)


@settings(max_examples=200)
@given(st.integers(0, 1 << 30))
def test_n_invariant_nonnegative(seed):
    bp = _random_bipartition(random.Random(seed), 14)
    assert n_invariant(bp, bp.weight) >= 0
