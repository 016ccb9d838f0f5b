"""The same workflow through the command-line interface.

Every step shells out exactly as a user would: synth -> ingest -> fit ->
predict/evaluate -> plot -> annotate. Outputs land in demos/output/cli/.
"""

import json
import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).parent / "output" / "cli"
ROOT.mkdir(parents=True, exist_ok=True)
FRAMES = ROOT / "frames"
STORE = ROOT / "store.csv"
MODELS = ROOT / "models.json"


def run(*args):
    cmd = [sys.executable, "-m", "suntrack.cli", *map(str, args)]
    print("$ suntrack", " ".join(map(str, args)))
    proc = subprocess.run(cmd, capture_output=True, text=True)
    print(proc.stdout, end="")
    if proc.returncode != 0:
        print(proc.stderr, end="", file=sys.stderr)
        raise SystemExit(proc.returncode)


config = ROOT / "config.json"
config.write_text(json.dumps({
    "latitude": 40.0,
    "image_size": 256,
    "cloud_probability": 0.25,
    "seed": 7,
}, indent=2))

run("synth", "--config", config, "--out", FRAMES, "--days", "12", "--step", "20")
run("ingest", "--input", FRAMES, "--store", STORE)
run("fit", "--store", STORE, "--models", MODELS)

models = json.loads(MODELS.read_text())
last = models["days"][-1]
run("predict", "--models", MODELS, "--day", last["day_index"],
    "--minute", (last["minute_range"][0] + last["minute_range"][1]) // 2)
run("evaluate", "--store", STORE, "--models", MODELS,
    "--out", ROOT / "metrics.json", "--image-size", 256)
run("plot", "--store", STORE, "--models", MODELS, "--out", ROOT / "trajectories.png")
run("plot", "--store", STORE, "--models", MODELS, "--visibility-map",
    "--out", ROOT / "visibility.png")

# annotate a frame from the last modeled day (works on hidden-Sun frames too)
frame = next(p for p in sorted(FRAMES.glob("*_short.png"))
             if int(p.name[6:8]) - 1 == last["day_index"])
run("annotate", "--input", frame, "--models", MODELS, "--out", ROOT / "annotated.png")
print(f"all CLI outputs under {ROOT}")
