"""
The Borromean rings, computed two ways
======================================

No two of the three rings are linked, yet the three cannot be pulled apart.
The triple linking number detects this. Here it is computed once from a
diagram and once from how three spanning disks cross each other.
"""

# %%
from milnorlink import data_path, load_pattern, load_pd, milnor, surfaces
from milnorlink.diagram import longitude, wirtinger

d = load_pd(data_path("borromean.json"))
print(d.name, "with", len(d.crossings), "crossings and", d.num_components, "components")
print("pairwise linking numbers:", milnor.linking_numbers(d))

# %% [markdown]
# Each component's longitude, written in the Wirtinger generators, is a
# short word. Rewriting it in the three preferred meridians (valid modulo
# the third lower central subgroup) gives a commutator-like word whose
# ``i ... j`` count is the triple linking number.

# %%
pres = wirtinger(d)
print("Wirtinger generators:", pres.generators)
for c in (1, 2, 3):
    lw = longitude(d, c)
    print(f"longitude {c}: {lw.full_word}   rewritten: {milnor.reduce_mod_lcs(pres, lw, 3)}")
print("mu-bar(1,2,3) =", milnor.mu_bar(d, (1, 2, 3)))
print("mu-bar(2,1,3) =", milnor.mu_bar(d, (2, 1, 3)))

# %% [markdown]
# The surface side: three disks, one pair of clasps between the disks of
# components j and k, and one ribbon where disk i passes through disk k.

# %%
p = load_pattern(data_path("borromean.pattern.json"))
for label, w in zip(p.labels, p.words):
    print(f"w_{label}: {w or '(empty)'}")
for triple in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
    print(f"e{triple} =", surfaces.e_value(p, triple))
print("m =", surfaces.m_value(p), " t =", p.t, " mu-bar =", surfaces.mu_bar_surface(p))
