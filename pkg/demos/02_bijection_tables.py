"""Print the two worked bijection tables that anchor the Jordan-type maps.

Unipotent classes of a classical group in bad characteristic carry a
labeled Jordan type: one bit for every even value with positive even
multiplicity.  The family bijections send those types to bipartitions
of a fixed excess, and these two tables are the frozen ground truth
the test suite checks against.
"""

from weylstrata import JordanFamily, apply_bijection, codomain, enumerate_jordan


def show(family, weight):
    excess, half = codomain(family, weight)
    print(f"{family.value}, weight {weight}: image is the weight-{half} "
          f"bipartitions of excess {tuple(excess)}")
    for nu in enumerate_jordan(family, weight):
        bits = ", ".join(f"{v}:{b}" for v, b in nu.labels) if nu.labels else "-"
        bp = apply_bijection(family, nu)
        print(f"  {str(tuple(nu.parts)):>22}  labels {bits:>8}  ->  {tuple(bp)}")
    print()


show(JordanFamily.SYMPLECTIC_CHAR2, 6)
show(JordanFamily.ORTHOGONAL_CHAR2, 8)
