# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # The synthetic try-on world
#
# Persons, garments, pose maps and garment cards are all drawn by one
# deterministic renderer. Every joint carries a reserved marker colour, so
# pose is recoverable from pixels exactly.

# %%
import matplotlib.pyplot as plt
from nct.core import RngStream
from nct.pairing import cross_pair
from nct.synthworld import (
    contact_sheet,
    render_garment_card,
    render_person,
    render_pose_map,
    sample_world,
)

world = sample_world(RngStream(0, "notebook-world"), 12, 12)
print(world.mode, len(world.records), "records")
print(world.persons[0])
print(world.garments[0])

# %% [markdown]
# Rows: person renders, garment cards, pose maps.

# %%
recs = world.records[:8]
persons = [render_person(world.persons[r.person_id], world.garments[r.garment_id]) for r in recs]
cards = [render_garment_card(world.garments[r.garment_id]) for r in recs]
poses = [render_pose_map(world.persons[r.person_id].pose) for r in recs]
sheet = contact_sheet(persons + cards + poses, cols=8)
plt.figure(figsize=(10, 4))
plt.imshow(sheet, interpolation="nearest")
plt.axis("off")

# %% [markdown]
# The optional 64x64 size redraws the same person at twice the resolution.

# %%
fig, ax = plt.subplots(1, 2, figsize=(5, 2.5))
for a, size in zip(ax, (32, 64)):
    a.imshow(render_person(world.persons[0], world.garments[0], size), interpolation="nearest")
    a.set_title(f"{size}x{size}")
    a.axis("off")

# %% [markdown]
# ## Cross-pairing
#
# A paired corpus shows each garment on exactly one person. Cross-pairing
# dresses each person in k catalogue garments, so every garment appears in
# several poses.

# %%
cross = cross_pair(world, 4, RngStream(0, "notebook-cross"))
by_garment = {}
for r in cross.records:
    by_garment.setdefault(r.garment_id, set()).add(r.person_id)
print("records:", len(cross.records))
print("persons per garment:", sorted(len(v) for v in by_garment.values()))
