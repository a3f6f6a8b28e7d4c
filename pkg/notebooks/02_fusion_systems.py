"""
Fusion systems and saturation
=============================

The fusion system of S4 at the prime 2, its hom-sets and the two
saturation axioms, followed by a closure over C4 that is not saturated.
"""

# %%
from fuskit import (
    GroupHom,
    check_saturation,
    f_conjugacy_classes,
    fullness_status,
    fusion_from_group,
    generate_fusion_system,
    make_named_group,
    out_f,
)

F = fusion_from_group(make_named_group("sym(4)"), 2)
print("Sylow subgroup:", [str(x) for x in F.S.gens], "with", len(F.subgroups), "subgroups")

# %% [markdown]
# F-conjugacy classes of subgroups. The center of S is fused with a
# non-central double transposition.

# %%
for cls in f_conjugacy_classes(F):
    P = cls[0]
    st = fullness_status(F, P)
    print(f"|P|={P.order()}  class size {len(cls)}  |Aut_F|={len(F.aut(P))}  |Out_F|={out_f(F, P).order()}"
          f"  fully normalized={st.fully_normalized}")

# %%
report = check_saturation(F)
print("saturated:", report.saturated)

# %% [markdown]
# Closing C4 under inversion gives Aut_F(C4) of order 2 while Aut_S(C4) is
# trivial, so the Sylow axiom fails.

# %%
C4 = make_named_group("cyclic(4)").as_subgroup()
g = C4.gens[0]
broken = generate_fusion_system(C4, [GroupHom.from_images(C4, C4, [g], [g ** 3])])
rep = check_saturation(broken)
print("saturated:", rep.saturated)
for P, why in rep.axiom_I_failures:
    print("  axiom I fails at", P, "-", why)
