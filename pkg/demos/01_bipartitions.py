"""Walk through the bipartition combinatorics that index strata.

A bipartition is a finite sequence c_1, c_2, ... whose odd-position and
even-position subsequences are each weakly decreasing.  The excess pair
(e, e') sharpens this: c_i + e >= c_{i+1} at odd i and c_i + e' >= c_{i+1}
at even i.  Plain partitions are exactly the excess-(0, 0) bipartitions.
"""

from weylstrata import Bipartition, enumerate_bipartitions, has_excess, n_invariant

print("All weight-3 bipartitions of excess (2, 2), the Sp_6 stratum labels:")
for bp in enumerate_bipartitions(3, (2, 2)):
    print(f"  {tuple(bp)}")

print()
print("The same weight with excess (0, 0) leaves only the partitions of 3:")
for bp in enumerate_bipartitions(3, (0, 0)):
    print(f"  {tuple(bp)}")

print()
bp = Bipartition([1, 2])
print(f"{tuple(bp)} has excess (2, 2) but is not a partition:")
print(f"  has_excess(bp, (2, 2)) = {has_excess(bp, (2, 2))}")
print(f"  has_excess(bp, (0, 0)) = {has_excess(bp, (0, 0))}")

print()
print("The n-invariant drives every dimension formula in the package.")
print("For weight-3 excess-(2, 2) labels, class_dim = 2*9 - 2*n in Sp_6:")
for bp in enumerate_bipartitions(3, (2, 2)):
    n = n_invariant(bp, 3)
    print(f"  {str(tuple(bp)):>12}  n = {n}  class_dim = {18 - 2 * n}")
