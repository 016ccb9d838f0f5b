"""The shared ridge polynomial solver, and why inputs are normalized.

Fits noisy samples of a quartic at several regularization weights, then
shows the conditioning argument for mapping inputs to [-1, 1]: on raw
minute-of-day powers the normal matrix is so badly scaled that a small
penalty does nothing meaningful.
"""

from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from suntrack import RidgeConfig, fit_ridge, predict

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)
rng = np.random.default_rng(4)

# --- bias/variance knob -------------------------------------------------------
t = np.linspace(300, 1100, 41)
truth = 250 + 0.45 * t - 4e-4 * (t - 700) ** 2
noisy = truth + rng.normal(0, 6.0, size=t.size)

fig, ax = plt.subplots(figsize=(8, 5))
ax.plot(t, noisy, ".", color="gray", label="noisy samples")
grid = np.linspace(280, 1120, 400)
for alpha in (1e-7, 1.0, 100.0):
    model = fit_ridge(np.column_stack((t, noisy)), RidgeConfig(degree=4, alpha=alpha))
    ax.plot(grid, predict(model, grid), label=f"alpha = {alpha:g}")
ax.set_xlabel("minute of day")
ax.set_ylabel("coordinate (px)")
ax.legend()
fig.tight_layout()
fig.savefig(OUT / "ridge_alpha_sweep.png", dpi=110)
print(f"wrote {OUT / 'ridge_alpha_sweep.png'}")

# --- why normalization matters -------------------------------------------------
u = (t - t.mean()) / ((t.max() - t.min()) / 2)
for name, basis in (("raw minutes", t), ("normalized", u)):
    phi = np.vander(basis, 5, increasing=True)
    gram = phi.T @ phi
    print(f"{name:11s}: cond(Phi'Phi) = {np.linalg.cond(gram):.2e}")
print("a penalty of 1e-7 is invisible against a 1e25-conditioned raw system;")
print("after normalization the same penalty actually constrains the fit")

# --- shrinkage ------------------------------------------------------------------
norms = []
alphas = np.logspace(-6, 3, 19)
for alpha in alphas:
    cfg = RidgeConfig(degree=4, alpha=float(alpha), regularize_intercept=True)
    model = fit_ridge(np.column_stack((t, noisy)), cfg)
    norms.append(np.linalg.norm(model.coefficients))
assert all(a >= b - 1e-9 for a, b in zip(norms, norms[1:]))
print("coefficient norm shrinks monotonically:",
      " -> ".join(f"{n:.1f}" for n in norms[::6]))
