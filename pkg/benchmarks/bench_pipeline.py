"""End-to-end timings of the bundled problems under both kernel backends.

    python benchmarks/bench_pipeline.py [problem ...]
"""

import os
import subprocess
import sys
import time
from pathlib import Path

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"
DEFAULT = ["surface_no_base_points.txt", "moving_quadrics.txt", "fat_base_point.txt",
           "quadric_map_p3.txt"]


def timed(path, pure):
    env = dict(os.environ)
    env.pop("IMPLICITIZE_PURE_PYTHON", None)
    if pure:
        env["IMPLICITIZE_PURE_PYTHON"] = "1"
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "implicitize", str(path), "--format", "json"],
                          capture_output=True, text=True, env=env)
    took = time.perf_counter() - start
    if proc.returncode:
        raise SystemExit(f"{path.name} failed: {proc.stderr.strip()}")
    return took, proc.stdout


def main(names):
    print(f"{'problem':30s} {'python':>9s} {'gmp':>9s} {'speedup':>8s}")
    for name in names or DEFAULT:
        path = PROBLEMS / name if not os.path.exists(name) else Path(name)
        t_py, out_py = timed(path, pure=True)
        t_gmp, out_gmp = timed(path, pure=False)
        flag = "" if out_py == out_gmp else "  OUTPUTS DIFFER"
        print(f"{path.name:30s} {t_py:9.2f} {t_gmp:9.2f} {t_py / t_gmp:7.1f}x{flag}")


if __name__ == "__main__":
    main(sys.argv[1:])
