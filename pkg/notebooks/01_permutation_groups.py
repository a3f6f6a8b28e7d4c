"""
Permutation groups
==================

Building groups from generators, Sylow subgroups, quotients and the
characteristic subgroups of a 2-group.
"""

# %%
from fuskit import (
    automorphism_group,
    center,
    characteristic_subgroups,
    enumerate_subgroups,
    isomorphic_to,
    make_named_group,
    nilpotency_data,
    normal_subgroups,
    parse_cycles,
    quotient_group,
    sylow_subgroup,
)
from fuskit.catalog import dihedral, sym

# %% [markdown]
# Cycle strings compose like functions, so the rightmost cycle acts first.

# %%
g = parse_cycles("(1,2)(1,3)", 3)
print(g, "sends 1 to", g(1))

# %%
S4 = make_named_group("sym(4)")
print("order", S4.order(), "generators", [str(x) for x in S4.gens])
print("normal subgroup orders:", [N.order() for N in normal_subgroups(S4)])

# %% [markdown]
# The Sylow 2-subgroup is dihedral of order 8; modding out the Klein four
# group leaves a copy of S3.

# %%
S = sylow_subgroup(S4, 2)
print("Sylow 2-subgroup:", [str(x) for x in S.gens], isomorphic_to(S, dihedral(8)))
V4 = S4.subgroup([parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
print("S4/V4 is S3:", isomorphic_to(quotient_group(S4, V4), sym(3)))

# %%
data = nilpotency_data(S4)
print("lower central series orders:", [H.order() for H in data.series], "nilpotent:", data.nilpotent)

# %% [markdown]
# Subgroup lattice and automorphisms of D16.

# %%
D16 = dihedral(16)
print("subgroups of D16:", len(enumerate_subgroups(D16)))
print("|Aut(D16)| =", len(automorphism_group(D16)))
ch = characteristic_subgroups(D16, 2)
print("Z, Omega(Z), J, Omega(Z(J)):", ch.center.order(), ch.omega_center.order(),
      ch.thompson.order(), ch.omega_center_thompson.order())
print("center of D16:", [str(x) for x in center(D16).gens])
