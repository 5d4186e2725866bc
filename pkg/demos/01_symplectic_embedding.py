"""Walk through the mod-2 symplectic embedding of a symmetric group.

Builds the irreducible cut from the natural permutation module, checks that
the pairing counting shared moved points is preserved, and then finds the
largest elementary abelian subgroup acting trivially on a Lagrangian and on
its quotient.
"""

from symprep import perm as pm
from symprep.dickson import (check_invariance, dickson_form, lagrangian_pair,
                             parabolic_trivial_subgroup, perm_irrep,
                             restrict_to_alternating)

for n in range(5, 11):
    rep = perm_irrep(n, 2)
    d = rep.dim // 2
    form = dickson_form(d)
    print(f"n={n}: module dimension {rep.dim} = 2*{d}, "
          f"form preserved: {check_invariance(rep, form)}")

# The subgroup fixing a Lagrangian flag pointwise, computed by exhaustive
# enumeration.  Disjoint transpositions generate it.
n = 8
rep = perm_irrep(n, 2)
w, dual, pairing = lagrangian_pair(rep.dim // 2)
res = parabolic_trivial_subgroup(rep, w)
print(f"\nS_{n}: rank {res.rank}, order {res.order}, exact={res.exact}")
print("witness generators:", ", ".join(pm.to_cycles(g) for g in res.witness))

alt = restrict_to_alternating(rep)
res_a = parabolic_trivial_subgroup(alt, w)
print(f"A_{n}: rank {res_a.rank}, order {res_a.order}")
print("witness generators:", ", ".join(pm.to_cycles(g) for g in res_a.witness))
