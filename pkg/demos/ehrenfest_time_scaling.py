"""How the distance-peak time scales with system size.

The time at which the averaged distance curve peaks plays the role of the
Ehrenfest time: the moment quantum spreading catches up with the system size.
In the chaotic regime it should grow logarithmically with the qubit count, in
the regular regime like a square root - both scalings fall out of the
effective Planck constant being 1/n in the symmetric subspace.

Writes demos/output/ehrenfest_scaling.png. Runtime: ~10 s.
"""

import pathlib

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from qhdtop import EnsembleConfig, ehrenfest_scan

sizes = [64, 128, 256, 512, 1024]
ensemble = EnsembleConfig(master_seed=11, runs=30, angle=0.01)

fig, axes = plt.subplots(1, 2, figsize=(10, 4))
for ax, alpha in zip(axes, (6.0, 1.0)):
    scan = ehrenfest_scan(alpha, sizes, ensemble)
    ns = np.array([p.n for p in scan.points], dtype=float)
    te = np.array([p.peak_time for p in scan.points])
    print(f"alpha={alpha}: preferred model = {scan.preferred_model} "
          f"(R2 log {scan.fit_log.r_squared:.4f}, R2 sqrt {scan.fit_sqrt.r_squared:.4f})")

    ax.plot(ns, te, "o", color="black", label="measured peak time")
    grid = np.linspace(ns.min(), ns.max(), 200)
    ax.plot(grid, scan.fit_log.slope * np.log(grid) + scan.fit_log.intercept,
            "-", color="tab:red", label=f"a ln n + b (R2={scan.fit_log.r_squared:.3f})")
    ax.plot(grid, scan.fit_sqrt.slope * np.sqrt(grid) + scan.fit_sqrt.intercept,
            "--", color="tab:blue", label=f"a sqrt(n) + b (R2={scan.fit_sqrt.r_squared:.3f})")
    ax.set_xscale("log", base=2)
    ax.set_xlabel("n (qubits)")
    ax.set_ylabel("peak time of the distance curve")
    ax.set_title(f"alpha = {alpha:g}: {scan.preferred_model} scaling wins")
    ax.legend(fontsize=8)

fig.tight_layout()
out = pathlib.Path(__file__).parent / "output"
out.mkdir(exist_ok=True)
fig.savefig(out / "ehrenfest_scaling.png", dpi=150)
print(f"wrote {out / 'ehrenfest_scaling.png'}")
