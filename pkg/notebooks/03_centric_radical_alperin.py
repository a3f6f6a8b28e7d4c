"""
Centric and radical subgroups, Alperin decompositions
=====================================================
"""

# %%
from fuskit import (
    GroupHom,
    alperin_decompose,
    alperin_family,
    centric_radical_table,
    fusion_from_group,
    make_named_group,
    normalizer_fusion_system,
    quotient_fusion_system,
    check_saturation,
)

F = fusion_from_group(make_named_group("sym(4)"), 2)

# %%
print(f"{'order':>5}  {'centric':>7}  {'radical':>7}  {'|Aut_F|':>7}")
for row in centric_radical_table(F):
    print(f"{row.subgroup.order():>5}  {row.centric!s:>7}  {row.radical!s:>7}  {row.aut_order:>7}")

family = alperin_family(F)
print("Alperin family orders:", [P.order() for P in family])

# %% [markdown]
# Send one double transposition to the central one and factor the map.

# %%
P = F.subgroup_from([g for g in F.S.elements if str(g) in ("()", "(1,2)(3,4)")])
Q = F.subgroup_from([g for g in F.S.elements if str(g) in ("()", "(1,3)(2,4)")])
psi = GroupHom.from_images(P, Q, P.gens, Q.gens)
dec = alperin_decompose(F, psi, family)
for step in dec.steps:
    print("through", step.Q, "using an automorphism of order", step.psi.order())
print("recomposes:", dec.is_valid())

# %% [markdown]
# Normalizer and quotient systems at the Klein four subgroup.

# %%
V4 = next(P for P in family if P.order() == 4)
N = normalizer_fusion_system(F, V4)
Fq = quotient_fusion_system(F, V4)
print("N_F(V4) saturated:", check_saturation(N).saturated, "over a group of order", N.S.order())
print("F/V4 saturated:", check_saturation(Fq).saturated, "over a group of order", Fq.S.order())
