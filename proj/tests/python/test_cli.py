# Copyright 2026 The evoms authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end exercises of the evoms command-line tool."""

import json
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

BIN = Path(sys.argv[1]) if len(sys.argv) > 1 else None

SCENE = {
    "geometry": {"width": 96, "height": 64},
    "duration_ms": 1200.0,
    "bg_texture_density": 0.1,
    "ego_velocity": [12.0, 0.0],
    "event_rate_per_edge": 62.5,
    "seed": 17,
    "objects": [
        {
            "size": [24, 24],
            "start": [8.0, 16.0],
            "velocity": [37.0, 0.0],
            "border": False,
            "dot_side": 4,
            "dot_pitch": 8,
            "dot_fill": 1.0,
        }
    ],
}

CONFIG_HW = {
    "center_side": 4,
    "surround_side": 8,
    "stride": 8,
    "tau": 0.69,
    "window_ms": 20.0,
    "kernel_kind": "uniform",
}


def run(*args, expect=0):
    proc = subprocess.run([str(BIN), *map(str, args)], capture_output=True, text=True)
    if proc.returncode != expect:
        raise AssertionError(
            f"{args} -> exit {proc.returncode} (expected {expect})\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}"
        )
    return proc


def test_synth_is_deterministic(tmp):
    spec_path = tmp / "scene.json"
    spec_path.write_text(json.dumps(SCENE))
    run("synth", "--spec", spec_path, "--out", tmp / "a", "--mask-rate", 5)
    run("synth", "--spec", spec_path, "--out", tmp / "b", "--mask-rate", 5)

    a_events = (tmp / "a" / "events.txt").read_bytes()
    b_events = (tmp / "b" / "events.txt").read_bytes()
    assert a_events == b_events and len(a_events) > 0

    for mask in sorted((tmp / "a").glob("mask_*.pbm")):
        assert mask.read_bytes() == (tmp / "b" / mask.name).read_bytes()

    manifest = json.loads((tmp / "a" / "manifest.json").read_text())
    assert manifest["command"] == "synth"
    assert manifest["parameters"]["prng"]

    # A different seed changes the event stream.
    run("synth", "--spec", spec_path, "--out", tmp / "c", "--mask-rate", 5, "--seed", 99)
    assert (tmp / "c" / "events.txt").read_bytes() != a_events

    run("synth", "--spec", tmp / "missing.json", "--out", tmp / "d", expect=3)


def test_oms_engines_match(tmp):
    events = tmp / "a" / "events.txt"
    masks = tmp / "a" / "masks.json"
    cfg = tmp / "hw.json"
    cfg.write_text(json.dumps(CONFIG_HW))

    run("oms", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "algo", "--engine", "algo", "--jobs", 2)
    run("oms", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "hw", "--engine", "hw", "--trace", "trace.csv")

    algo_frames = sorted((tmp / "algo").glob("oms_*.pbm"))
    hw_frames = sorted((tmp / "hw").glob("oms_*.pbm"))
    assert len(algo_frames) == len(hw_frames) > 0
    for a, b in zip(algo_frames, hw_frames):
        assert a.read_bytes() == b.read_bytes(), f"{a.name} differs between engines"

    report = json.loads((tmp / "algo" / "report.json").read_text())
    assert report["frames_evaluated"] >= 5
    assert report["mean_defined"]

    trace = (tmp / "hw" / "trace.csv").read_text().splitlines()
    assert trace[0] == "tile_id,step,v"
    assert len(trace) > 1

    # Infeasible under the hw engine: stride 1.
    bad = dict(CONFIG_HW, stride=1)
    bad_path = tmp / "bad.json"
    bad_path.write_text(json.dumps(bad))
    proc = run("oms", "--events", events, "--masks", masks, "--config", bad_path,
               "--out", tmp / "bad", "--engine", "hw", expect=2)
    assert "stride" in proc.stderr


def test_eval_matches_oms_report(tmp):
    run("eval", "--pred", tmp / "algo" / "predictions.json",
        "--masks", tmp / "a" / "masks.json", "--out", tmp / "eval")
    direct = json.loads((tmp / "algo" / "report.json").read_text())
    recomputed = json.loads((tmp / "eval" / "report.json").read_text())
    assert direct["per_frame"] == recomputed["per_frame"]


def test_sweep_tables(tmp):
    events = tmp / "a" / "events.txt"
    masks = tmp / "a" / "masks.json"
    cfg = tmp / "sweep_base.json"
    cfg.write_text(json.dumps(dict(CONFIG_HW, stride=1)))

    run("sweep", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "sweep_stride", "--vary", "stride",
        "--values", 1, 2, 4, 6, 8)
    csv = (tmp / "sweep_stride" / "sweep.csv").read_text().splitlines()
    assert csv[1].startswith("stride,")
    assert len(csv) == 7  # comment + header + 5 rows

    run("sweep", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "sweep_kernel", "--vary", "kernel",
        "--values", "3x6", "4x8", "5x10", "12x6")
    kcsv = (tmp / "sweep_kernel" / "sweep.csv").read_text()
    assert "miou_large_percent" in kcsv
    assert "6x6/12x12" in kcsv  # larger-first pair is normalized

    run("sweep", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "sweep_empty", "--vary", "stride", "--values", expect=2)

    # Under the hw engine, infeasible rows are reported per row, not fatal.
    run("sweep", "--events", events, "--masks", masks, "--config", cfg,
        "--out", tmp / "sweep_hw", "--vary", "stride", "--values", 1, 2, 8,
        "--engine", "hw")
    hw_rows = (tmp / "sweep_hw" / "sweep.csv").read_text().splitlines()[2:]
    assert sum("infeasible" in r for r in hw_rows) == 2
    assert sum(r.endswith("ok") for r in hw_rows) == 1
    assert all(r.count(",") == 4 for r in hw_rows)


def test_default_config_suppresses_ego_motion(tmp):
    scene = {
        "geometry": {"width": 96, "height": 96},
        "duration_ms": 800.0,
        "bg_texture_density": 0.2,
        "ego_velocity": [25.0, 0.0],
        "seed": 4,
    }
    spec_path = tmp / "ego_only.json"
    spec_path.write_text(json.dumps(scene))
    run("synth", "--spec", spec_path, "--out", tmp / "ego", "--mask-rate", 10)

    # No --config: Table-style defaults apply, and self-motion produces
    # near-empty spike frames.
    run("oms", "--events", tmp / "ego" / "events.txt", "--masks", tmp / "ego" / "masks.json",
        "--out", tmp / "ego_oms")
    for frame in sorted((tmp / "ego_oms").glob("oms_*.pbm")):
        body = frame.read_text().split("\n", 2)[2]
        assert body.count("1") == 0, f"{frame.name} has unexpected spikes"
    predictions = json.loads((tmp / "ego_oms" / "predictions.json").read_text())
    assert predictions["config"]["tau"] == 0.96
    assert predictions["config"]["kernel_kind"] == "gaussian"


def test_hwplan_roundtrip(tmp):
    cfg = tmp / "hw.json"
    run("hwplan", "--config", cfg, "--geometry", "32x24", "--out", tmp / "plan.json")
    plan = json.loads((tmp / "plan.json").read_text())
    assert plan["tile_side"] == 8
    assert len(plan["cells"]) == 16 * 12
    assert plan["cells"][0]["cell_id"] == 0
    assert plan["cell_order"] == "row-major by unit cell"

    run("hwplan", "--config", cfg, "--geometry", "33x24", "--out", tmp / "p2.json", expect=2)


def test_evimo_import(tmp):
    raw = tmp / "raw"
    raw.mkdir()
    (raw / "events.txt").write_text("0.010 3 4 1\n0.005 1 2 0\n0.030 5 5 1\n")
    (raw / "m0.pgm").write_text("P2\n8 6\n255\n" + " ".join(["0"] * 24 + ["255"] * 4 + ["0"] * 20))
    (raw / "m1.pgm").write_text("P2\n8 6\n255\n" + " ".join(["0"] * 48))
    (raw / "list.txt").write_text("0.0 m0.pgm\n0.025 m1.pgm\n")

    run("evimo", "import", "--events", raw / "events.txt", "--masks-list", raw / "list.txt",
        "--geometry", "8x6", "--out", tmp / "native")
    native_events = (tmp / "native" / "events.txt").read_text()
    assert "5000 1 2 0" in native_events  # sorted, microseconds, polarity normalized
    manifest = json.loads((tmp / "native" / "masks.json").read_text())
    assert manifest["masks"][0]["t_capture_us"] == 0
    assert manifest["masks"][1]["t_capture_us"] == 25000


def main():
    assert BIN is not None and BIN.exists(), f"CLI binary not found: {BIN}"
    tmp = Path(tempfile.mkdtemp(prefix="evoms_cli_"))
    try:
        test_synth_is_deterministic(tmp)
        print("ok synth determinism")
        test_oms_engines_match(tmp)
        print("ok oms engines")
        test_eval_matches_oms_report(tmp)
        print("ok eval")
        test_sweep_tables(tmp)
        print("ok sweep")
        test_default_config_suppresses_ego_motion(tmp)
        print("ok default-config suppression")
        test_hwplan_roundtrip(tmp)
        print("ok hwplan")
        test_evimo_import(tmp)
        print("ok evimo import")
        print("cli tests passed")
    finally:
        shutil.rmtree(tmp, ignore_errors=True)


if __name__ == "__main__":
    main()
