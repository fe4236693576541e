# ---
# jupyter:
#   jupytext:
#     formats: py:percent
#     text_representation:
#       extension: .py
#       format_name: percent
# ---

# %% [markdown]
# # Metrics and the reference run
#
# Four measurements per sample: garment fidelity (cosine between the garment
# descriptor of the generated crop and of the card), garment-text and
# full-prompt adherence (fraction of attribute probes satisfied) and pose
# distance (mean marker displacement plus a penalty per missing marker).
# On clean renders they are exact.

# %%
import json
from pathlib import Path

import numpy as np

from nct.core import RngStream
from nct.metrics import score_sample
from nct.synthworld import render_person, sample_world

m = sample_world(RngStream(3, "nb-metrics"), 20, 20)
rows = []
for r in m.records:
    p, g = m.persons[r.person_id], m.garments[r.garment_id]
    rows.append(score_sample(render_person(p, g), g, p.pose, p.prompt_tokens()))
print({k: float(np.mean([r[k] for r in rows])) for k in ("fidelity", "garment_text", "full_prompt", "pd")})

# %% [markdown]
# The reference run is produced by `nct reference` (or on first use by the
# acceptance tests). Its summary holds loss ratios, per-variant metrics, the
# pairing-bias probe and artifact hashes.

# %%
summary_path = Path("runs/reference/summary.json")
if summary_path.exists():
    summary = json.loads(summary_path.read_text())
    for variant, ev in summary["eval"].items():
        print(variant, {k: round(v, 3) for k, v in ev["overall"].items() if isinstance(v, float)})
    print(json.dumps(summary["bias_probe"], indent=1))
else:
    print("run `nct reference` first")
