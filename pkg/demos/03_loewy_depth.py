"""Depth of modular irreducibles restricted to small p-subgroups.

Odd characteristic first: every irreducible that is more than a character
goes at least three layers deep over the p-cycle.  Then characteristic 2,
where a sweep over all 2-regular partitions finds the few module/subgroup
pairs that stay quadratic (two layers).
"""

from symprep import perm as pm
from symprep.snmod import (cyclic_profile, free_summand_count, irreducible_D,
                           loewy_length, p_regular_partitions, tensor_module)

# odd characteristic: Jordan profile of the p-cycle tells the whole story
mod = irreducible_D((4, 1), 5)
five = pm.from_cycles("(1 2 3 4 5)", 5)
print(f"D(4,1) mod 5: dim {mod.dim}, blocks at the 5-cycle: {cyclic_profile(mod, five)}")

square = tensor_module(mod, mod)
print(f"tensor square: dim {square.dim}, blocks {cyclic_profile(square, five)} (all odd)")

# characteristic 2: layers over the transposition subgroup
for n in (8, 9):
    sub = pm.special_subgroups(n, "H")
    print(f"\nS_{n} over {sub.label}:")
    for lam in p_regular_partitions(n, 2):
        mod = irreducible_D(lam, 2)
        if mod.dim <= 1:
            continue
        series = loewy_length(mod, sub)
        free = free_summand_count(mod, sub)
        tag = "  <- quadratic" if series.length <= 2 else ""
        print(f"  D{lam}: dim {mod.dim:>3}, layers {series.layer_dims}, "
              f"free summands {free}{tag}")
