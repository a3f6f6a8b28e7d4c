"""
PSL(2,17) at the prime 2
========================

A saturated fusion system in which every normal subgroup of S has a
2-group of automorphisms and yet the system is not nilpotent. The Klein
four subgroups have S4 as model group, which is what the Σ4-free
hypothesis rules out.
"""

# %%
import time

from fuskit import check_saturation, check_theorem_A, fusion_from_group, is_nilpotent_fusion, isomorphic_to, sigma4_free
from fuskit.analysis import is_normal_in_S
from fuskit.catalog import dihedral, psl2, sym

start = time.perf_counter()
G = psl2(17)
F = fusion_from_group(G, 2)
print("|G| =", G.order(), " S is D16:", isomorphic_to(F.S, dihedral(16)))
print("saturated:", check_saturation(F).saturated)

# %%
for Q in F.subgroups:
    if is_normal_in_S(F, Q):
        print(f"normal Q of order {Q.order():>2}: |Aut_F(Q)| = {len(F.aut(Q))}")

# %%
print("nilpotent:", is_nilpotent_fusion(F))
res = sigma4_free(F)
P, model = res.witness
print("Σ4-free:", res.free, "- model group of", P, "has order", model.L.order(),
      "and is S4:", isomorphic_to(model.L, sym(4)))

# %%
rep = check_theorem_A(F)
for h in rep.hypotheses:
    print(f"  {h.name}: {h.holds}")
print("applicable:", rep.applicable, " contradiction:", rep.contradiction)
print(f"done in {time.perf_counter() - start:.2f}s")
