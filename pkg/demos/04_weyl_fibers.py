"""Map Weyl-group conjugacy classes of type B_3 onto strata.

Classes of the hyperoctahedral group are signed cycle types: a pair of
partitions (positive cycles; negative cycles).  Every class maps to a
stratum label, the map is onto, and each fiber has a distinguished
cross-section: the unique class with the smallest fixed space.
"""

from weylstrata import WeylSeries, WeylType, fixed_space_dim, strata_fibers

w = WeylType(WeylSeries.B, 3)
fibers = strata_fibers(w)
print(f"B_3 has {sum(len(f.classes) for f in fibers.values())} classes "
      f"over {len(fibers)} strata:\n")
for bp, fiber in fibers.items():
    members = ", ".join(
        f"{c} (m={fixed_space_dim(w, c)})" for c in fiber.classes
    )
    print(f"  stratum {str(tuple(bp)):>12}  <-  {members}")
    print(f"  {'':>12}        cross-section: {fiber.cross_section}")
