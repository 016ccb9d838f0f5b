"""End-to-end Sun tracking on a synthetic month.

Renders 35 days of fisheye frames with clouds and flares, localises the
visible Sun, fits the two-stage trajectory model, and evaluates how far the
smooth daily curves stay from the raw observations. Takes half a minute or
so; figures land in demos/output/.
"""

import time
from datetime import date
from pathlib import Path

from suntrack import (ObservationStore, SceneConfig, SunObservation,
                      TrajectoryConfig, classify, emit_trajectory_plot,
                      emit_visibility_map, evaluate_mae, localize,
                      predict_position, render_frame, run_fit)
from suntrack.synth import daylight_minutes

OUT = Path(__file__).parent / "output"
OUT.mkdir(exist_ok=True)

# midsummer start: every daylight minute has history from day 0, so the
# cross-day fits warm up quickly; the first week is still the noisiest
scene = SceneConfig(rng_seed=12, latitude=40.0, image_size=256,
                    cloud_probability=0.3, flare_probability=0.1,
                    start_date=date(2021, 6, 21))
DAYS, STEP = 35, 10

t0 = time.time()
store = ObservationStore(epoch=scene.start_date)
n_frames = n_hidden = 0
for day in range(DAYS):
    for minute in daylight_minutes(scene, day, STEP):
        short, _, _ = render_frame(scene, day, minute)
        n_frames += 1
        if not classify(short).visible:
            n_hidden += 1
            continue
        det = localize(short)
        store.append(SunObservation(day_index=day, minute=minute,
                                    x=det.x, y=det.y, ambiguous=det.ambiguous))
print(f"rendered {n_frames} frames in {time.time() - t0:.0f}s: "
      f"{len(store)} Sun observations, {n_hidden} hidden by clouds")

# stage 1 predicts each minute from up to 60 prior days at the same minute
# (kept only with >= 4 observations, the newest at most 10 days old);
# observations straying > 20 px from that prediction are flagged as outliers;
# stage 2 smooths the per-minute estimates into one polynomial pair per day
cfg = TrajectoryConfig()
trajectories = run_fit(store, cfg, models_path=OUT / "models.json")
n_outliers = sum(1 for obs in store if obs.outlier)
print(f"fitted {len(trajectories)} daily trajectories, "
      f"flagged {n_outliers} outliers -> {OUT / 'models.json'}")

report = evaluate_mae(store, trajectories, image_size=scene.image_size)
print(f"trajectory vs observations: {report.mae_px:.2f} px mean deviation "
      f"({report.mae_percent:.2f}% of the image) over {report.n_used} observations")

# the trajectory answers 'where is the Sun NOW?' even under full cloud cover
day, minute = DAYS - 1, 720
x, y, extrapolated = predict_position(trajectories[day], minute)
print(f"day {day} minute {minute}: Sun at ({x:.1f}, {y:.1f}) "
      f"{'(extrapolated)' if extrapolated else '(inside the fitted range)'}")

emit_visibility_map(store, OUT / "visibility_map.png")
sample_days = [d for d in sorted(trajectories) if d % 7 == 0]
emit_trajectory_plot(trajectories, store, sample_days, OUT / "daily_curves.png")
emit_trajectory_plot(trajectories, store, sample_days, OUT / "minute_tracks.png",
                     minutes=[540, 660, 780, 900])
print(f"wrote {OUT / 'visibility_map.png'}, {OUT / 'daily_curves.png'}, "
      f"{OUT / 'minute_tracks.png'}")
