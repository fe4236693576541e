# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Forward noising and the DDIM sampler
#
# Linear betas from 1e-4 to 0.02 over 1000 steps. The deterministic DDIM
# update is checked against a data distribution whose optimal denoiser is
# known in closed form: for data ~ N(0, s2) the exact noise prediction is
# sqrt(1 - ab) z / (ab s2 + 1 - ab), and each DDIM step is a scalar map.

# %%
import matplotlib.pyplot as plt
import numpy as np
import torch

from nct.core import RngStream, rng_normal
from nct.diffusion import NoiseSchedule, ddim_loop, ddim_timesteps, q_sample

s = NoiseSchedule()
plt.plot(s.alpha_bar)
plt.xlabel("t")
plt.ylabel("cumulative alpha")

# %%
n = 10_000
for t in (100, 500, 900):
    z = q_sample(torch.full((n,), 0.7, dtype=torch.float64), t, rng_normal(RngStream(t, "nb"), (n,), torch.float64), s)
    ab = s.alpha_bar[t]
    print(t, "mean", float(z.mean()), "expected", np.sqrt(ab) * 0.7, "var", float(z.var()), "expected", 1 - ab)

# %%
sigma2 = 0.3


def eps_fn(z, t):
    ab = s.alpha_bar[t]
    return np.sqrt(1 - ab) * z / (ab * sigma2 + 1 - ab)


z_T = torch.linspace(-2.5, 2.5, 11, dtype=torch.float64)
traj = []
ddim_loop(eps_fn, z_T, s, 50, traj)
abs_ = [s.alpha_bar[t] for t in ddim_timesteps(s.T, 50)] + [1.0]
d = z_T.numpy().copy()
err = 0.0
for i, (_, z, _) in enumerate(traj):
    a_t, a_s = abs_[i], abs_[i + 1]
    d = d * (np.sqrt(a_s * a_t) * sigma2 + np.sqrt((1 - a_s) * (1 - a_t))) / (a_t * sigma2 + 1 - a_t)
    err = max(err, float(np.abs(z.numpy() - d).max()))
print("max deviation from the closed-form trajectory:", err)
