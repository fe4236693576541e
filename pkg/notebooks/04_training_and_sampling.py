# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Three-stage training and guided sampling
#
# base trains the denoiser and token table; pose trains a pose branch on
# top of the frozen base; garment trains a garment branch on cross-paired
# data with base and pose frozen. This notebook runs a few dozen steps of
# each so it finishes in a couple of minutes. The reference run
# (`nct reference`) uses the desk preset with 2000 steps per stage.

# %%
import matplotlib.pyplot as plt

from nct.core import RngStream
from nct.diffusion import SamplerConfig, train_config
from nct.evaluation import grid_requests
from nct.pairing import cross_pair
from nct.sampling import generate
from nct.synthworld import contact_sheet, sample_world
from nct.training import PairingBiasError, run_stage

world = sample_world(RngStream(0, "nb-train"), 60, 60)
cross = cross_pair(world, 2, RngStream(0, "nb-cross"))
steps = 30
base, lb = run_stage("base", world, train_config("desk", "base", steps=steps))
pose, lp = run_stage("pose", world, train_config("desk", "pose", steps=steps), base)
garment, lg = run_stage("garment", cross, train_config("desk", "garment", steps=steps), pose)
print(garment.stages)
plt.plot(lb, label="base")
plt.plot(lp, label="pose")
plt.plot(lg, label="garment")
plt.legend()

# %% [markdown]
# Training the garment stage on one-to-one paired data is refused unless
# explicitly allowed.

# %%
try:
    run_stage("garment", world, train_config("desk", "garment", steps=1), pose)
except PairingBiasError as e:
    print(type(e).__name__, e)

# %%
reqs = grid_requests(world, [(0, 1), (2, 3), (4, 5), (6, 7)])
imgs = generate(garment.params, reqs, "full", SamplerConfig(ddim_steps=10, guidance=3.0))
plt.imshow(contact_sheet(list(imgs), cols=4), interpolation="nearest")
plt.axis("off")
