"""
Exact q-concurrence of isotropic states versus the two lower bounds
===================================================================

Writes the curve data as CSV next to this script and, if matplotlib is
available, a PNG per case.
"""

from pathlib import Path

import numpy as np

from qcbounds.cli import sweep_rows
from qcbounds.isotropic import exact_isotropic_qc, kink_point, xi

here = Path(__file__).parent

#%%
# For d = 3, q = 3 the envelope follows xi up to the tangency point and then
# runs straight to (1, 8/9).

k = kink_point(3, 3)
env = exact_isotropic_qc(3, 3)
slope = (8 / 9 - xi(k, 3, 3)) / (1 - k)
print(f"tangency at F* = {k:.6f}, chord: {slope:.4f} F {8 / 9 - slope:+.4f}")

#%%

for d, q in ((3, 3), (2, 4), (2, 3)):
    grid = np.linspace(1 / d, 1, 200)
    rows = np.array([[np.nan if v is None else v for v in r] for r in sweep_rows(d, q, grid)])
    np.savetxt(here / f"isotropic_d{d}_q{q}.csv", rows, delimiter=",", header="F,exact,theorem1,prior",
               comments="", fmt="%.12g")
    gap = rows[:, 2] - rows[:, 3]
    print(f"d={d} q={q}: max(theorem1 - prior) = {gap.max():.4f}, max(exact - theorem1) = "
          f"{(rows[:, 1] - rows[:, 2]).max():.4f}")

#%%

try:
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    for name in sorted(here.glob("isotropic_d*_q*.csv")):
        F, exact, th1, prior = np.loadtxt(name, delimiter=",", skiprows=1, unpack=True)
        fig, ax = plt.subplots(figsize=(4, 3))
        ax.plot(F, exact, "g--", label="exact")
        ax.plot(F, th1, "r-", label="trace-norm bound")
        ax.plot(F, prior, "b-.", label="prior bound")
        ax.set_xlabel("F")
        ax.legend()
        fig.tight_layout()
        fig.savefig(name.with_suffix(".png"), dpi=120)
        plt.close(fig)
