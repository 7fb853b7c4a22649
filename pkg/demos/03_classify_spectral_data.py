"""Classify conjugacy classes of classical groups into their strata.

A class is described by its spectral datum: one orbit per eigenvalue
cluster, each carrying a Jordan type.  Involutive orbits (eigenvalues
1 and -1) pass through the family bijections; generic orbits keep
their Jordan type.  The stratum is the entrywise sum.
"""

from weylstrata import (
    EigenOrbit,
    GroupDescriptor,
    OrbitKind,
    Partition,
    Series,
    SpectralDatum,
    classify,
    enumerate_strata,
)

sp4 = GroupDescriptor(Series.SP, 4)
print("The five strata of Sp_4:")
for s in enumerate_strata(sp4):
    print(f"  {str(tuple(s.bp)):>12}  class_dim = {s.class_dim}")

print()
print("Two classes of dimension 4 that land in different strata:")

semisimple = SpectralDatum(
    sp4,
    [
        EigenOrbit("1", OrbitKind.INVOLUTIVE, Partition([1, 1])),
        EigenOrbit("-1", OrbitKind.INVOLUTIVE, Partition([1, 1])),
    ],
)
result = classify(semisimple)
print(f"  eigenvalues 1,1,-1,-1      -> stratum {tuple(result.bp)}, dim {result.class_dim}")

unipotent = SpectralDatum(
    sp4, [EigenOrbit("1", OrbitKind.INVOLUTIVE, Partition([2, 1, 1]))]
)
result = classify(unipotent)
print(f"  unipotent, Jordan (2,1,1)  -> stratum {tuple(result.bp)}, dim {result.class_dim}")

print()
print("A mixed class of SO_8 with a generic eigenvalue pair:")
so8 = GroupDescriptor(Series.SO_EVEN, 8)
mixed = SpectralDatum(
    so8,
    [
        EigenOrbit("q", OrbitKind.GENERIC, Partition([2])),
        EigenOrbit("1", OrbitKind.INVOLUTIVE, Partition([3, 1])),
    ],
)
result = classify(mixed)
print(f"  stratum {tuple(result.bp)}, dim {result.class_dim}, "
      f"pair-degenerate: {result.pair_degenerate}")
