"""
Fixed-point-free automorphisms
==============================

Conjugation by (1,2) fixes a double transposition of A4, yet its
restriction to a Sylow 3-subgroup acts without fixed points on the fusion
system. The same section runs the semidirect-product scans.
"""

# %%
from fuskit import (
    check_lemma_semidirect,
    check_theorem_B,
    induced_fusion_aut_from_group,
    is_fpf_fusion_aut,
    make_fpf_example,
    semidirect_case,
)

ex = make_fpf_example("a4_conj12")
print("fixed points in A4:", [str(x) for x in ex.automorphism.fixed_points()])
ind = induced_fusion_aut_from_group(ex.group, ex.automorphism, 3)
print("invariant Sylow 3-subgroup:", ind.S, "fpf on F:", is_fpf_fusion_aut(ind.aut))

rep = check_theorem_B(ind.aut.system, ind.aut)
print("theorem B applicable:", rep.applicable, " conclusion:", rep.conclusion_holds)

# %% [markdown]
# A Singer cycle of order 7 on C2^3.

# %%
ex = make_fpf_example("c2cubed_singer")
ind = induced_fusion_aut_from_group(ex.group, ex.automorphism, 2)
rep = check_theorem_B(ind.aut.system, ind.aut)
print("order", ind.aut.order(), "applicable:", rep.applicable, "conclusion:", rep.conclusion_holds)

# %% [markdown]
# Exhaustive scans of subgroups of Aut(F) for V4 ⋊ C3 and C3 ⋊ C2.

# %%
for name in ("v4-c3", "c3-c2"):
    c = semidirect_case(name)
    rep = check_lemma_semidirect(c.V, c.H, c.action, c.p)
    print(f"{name}: |G|={rep.group_order} |Aut(F)|={rep.aut_F_order} examined={rep.subgroups_examined}"
          f" T-groups found={len(rep.t_automorphism_groups)}")
