"""Fisheye lens model and planar undistortion, step by step.

Renders a synthetic fisheye sky frame, reprojects it onto a flat plane, and
shows that the mapping is exactly invertible. Figures land in
demos/output/.
"""

import math
from pathlib import Path

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from suntrack import (AngularDirection, PlaneProjection, SceneConfig,
                      apply_remap, build_remap, default_fisheye_model,
                      direction_to_fisheye, fisheye_to_direction, render_frame,
                      save_remap)

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# --- the equidistant law -----------------------------------------------------
# radial pixel distance grows linearly with zenith angle: a direction at half
# the rim angle sits at exactly half the rim radius
model = default_fisheye_model(512, 512)
for deg in (0, 22.5, 45, 67.5, 90):
    direction = AngularDirection(zenith=math.radians(deg), azimuth=0.0)
    x, y = direction_to_fisheye(direction, model)
    print(f"zenith {deg:5.1f} deg -> radius {math.hypot(x - model.cx, y - model.cy):6.1f} px")

# the mapping inverts exactly
probe = AngularDirection(zenith=math.radians(41.7), azimuth=math.radians(123.4))
back = fisheye_to_direction(direction_to_fisheye(probe, model), model)
print(f"round trip error: zenith {abs(back.zenith - probe.zenith):.2e} rad, "
      f"azimuth {abs(back.azimuth - probe.azimuth):.2e} rad")

# --- undistortion of a rendered frame ----------------------------------------
scene = SceneConfig(rng_seed=7, latitude=40.0)
short, _, truth = render_frame(scene, day_index=170, minute=600)

proj = PlaneProjection(size=512, fov_zenith=math.radians(70))
table = build_remap(model, proj)
plane = apply_remap(short, table)

fig, axes = plt.subplots(1, 2, figsize=(11, 5.5))
axes[0].imshow(short.pixels, cmap="gray")
axes[0].set_title("raw fisheye frame")
axes[1].imshow(plane.pixels, cmap="gray")
axes[1].set_title("azimuthal equidistant undistortion")
for ax in axes:
    ax.set_xticks([])
    ax.set_yticks([])
fig.tight_layout()
fig.savefig(OUT / "undistortion.png", dpi=110)
print(f"wrote {OUT / 'undistortion.png'}")

# the table is reusable: cache it once, load it for every later frame
save_remap(OUT / "remap_cache.npz", table)
print(f"cached remap table at {OUT / 'remap_cache.npz'} "
      f"({(OUT / 'remap_cache.npz').stat().st_size // 1024} KiB)")
