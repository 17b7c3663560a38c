"""Mixed phase space: the same kick strength, two very different fates.

At intermediate kick strength the classical kicked top has stable islands
inside a chaotic sea, so chaoticity depends on where you start. A classical
divergence probe picks one deep-island and one strongly chaotic initial
condition; the quantum distance curve then separates them cleanly, and the
matching classical trajectories ((phi, z) coordinates of the shadow map) show
the confined band vs the spread over the sphere.

Writes demos/output/transition.png. Runtime: ~10 s.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from qhdtop import (
    KickedTopConfig,
    PerturbationSpec,
    find_transition_pair,
    transition_compare,
)
from qhdtop.sampling import run_rng, sample_axis

alpha, n, angle = 2.3, 500, 0.01
regular_ic, chaotic_ic = find_transition_pair(alpha)
print(f"regular initial condition (theta, phi) = {np.round(regular_ic, 4)}")
print(f"chaotic initial condition (theta, phi) = {np.round(chaotic_ic, 4)}")

config = KickedTopConfig(n=n, alpha=alpha)
records = {}
for i, (label, ic) in enumerate((("regular", regular_ic), ("chaotic", chaotic_ic))):
    axis = sample_axis(run_rng(7, i), "perp", *ic)
    records[label] = transition_compare(
        config, ic[0], ic[1], PerturbationSpec(axis=axis, angle=angle), 100, classical_steps=400
    )
    rec = records[label]
    print(f"{label}: probe says {rec.probe.label}, max distance {rec.distance.max():.2f} "
          f"(initial {rec.distance[0]:.2f}), overlap drift {rec.overlap_drift:.1e}")

fig, (ax_d, ax_c) = plt.subplots(1, 2, figsize=(10, 4))
styles = {"regular": (":", "tab:blue"), "chaotic": ("-", "tab:red")}
for label, rec in records.items():
    style, color = styles[label]
    ax_d.plot(rec.distance, style, color=color, label=label, lw=1.5)
    ax_c.plot(rec.classical_phi_z[:, 0], rec.classical_phi_z[:, 1], ".", color=color,
              ms=2.5, label=label)
    ax_c.plot(rec.classical_phi_z[0, 0], rec.classical_phi_z[0, 1], "*", color=color, ms=14)
ax_d.set_xlabel("t (kick periods)")
ax_d.set_ylabel("distance between trajectories")
ax_d.legend()
ax_d.set_title(f"quantum, n = {n}, alpha = {alpha}")
ax_c.set_xlabel("phi")
ax_c.set_ylabel("z")
ax_c.set_xlim(-np.pi, np.pi)
ax_c.set_ylim(-1.05, 1.05)
ax_c.set_title("classical trajectories (stars mark the starts)")
fig.tight_layout()

out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "transition.png", dpi=150)
print(f"wrote {out / 'transition.png'}")
