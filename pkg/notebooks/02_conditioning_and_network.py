# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Semantic conditioning and the denoiser
#
# A garment card is turned into a fixed descriptor, projected into the token
# space and written into the row of the anchor token "clothes". The prompt
# tokens fill the other rows. The denoiser reads this sequence through
# cross-attention; two control branches add residuals at five sites.

# %%
import numpy as np
import torch

from nct.control import fuse_residuals
from nct.core import RngStream, rng_normal
from nct.denoiser import SITES, DenoiserConfig, site_shapes
from nct.diffusion import predict_noise
from nct.semantic import FEATURE_DIM, PromptTokens, encode_condition, featurize_garment
from nct.synthworld import GarmentSpec, render_garment_card
from nct.training import attach_branch, init_params

g = GarmentSpec("Top", "red", "HStripes", "black", "Long")
card = render_garment_card(g)
se = featurize_garment(card, "SE")
se_c = featurize_garment(card, "SE_C")
print("descriptor dim", FEATURE_DIM, "norm", np.linalg.norm(se))
print("colour-free variant drops the spatial colour grid:", np.abs(se_c[:27]).sum())

# %%
P = attach_branch(attach_branch(init_params(0), "pose", 1), "garment", 2)
P = dict(P.items())
prompt = PromptTokens.parse("clothes smiling adult bg_sky")
cond = encode_condition([prompt], se[None], P)
print("condition rows", tuple(cond.rows.shape), "valid", cond.mask.tolist())
print("residual sites", site_shapes(DenoiserConfig(), 32))

# %% [markdown]
# Freshly attached branches end in zero convolutions, so adding them leaves
# the base prediction untouched bit for bit. A fresh base ends in a zero
# convolution too and predicts exactly zero noise.

# %%
z = rng_normal(RngStream(0, "z"), (1, 3, 32, 32))
t = torch.tensor([500])
ctl = {k: rng_normal(RngStream(0, k), (1, 3, 32, 32)) for k in ("pose", "garment")}
with torch.no_grad():
    base = predict_noise(P, z, t, cond)
    both = predict_noise(P, z, t, cond, ctl, ("garment", "pose"))
print("identical:", torch.equal(base, both), "max |eps|:", float(base.abs().max()))

# %% [markdown]
# Fusion is a sitewise sum, so the order of branches does not matter.

# %%
a = {s: torch.randn(1, 2, 2, 2) for s in SITES}
b = {s: torch.randn(1, 2, 2, 2) for s in SITES}
print(all(torch.equal(fuse_residuals(a, b)[s], fuse_residuals(b, a)[s]) for s in SITES))
