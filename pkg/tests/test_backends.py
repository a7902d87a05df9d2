import os
import subprocess
import sys

import pytest

from implicitize import kernels

from conftest import PROBLEMS


def run_cli(path, pure):
    env = dict(os.environ)
    env.pop("IMPLICITIZE_PURE_PYTHON", None)
    if pure:
        env["IMPLICITIZE_PURE_PYTHON"] = "1"
    proc = subprocess.run([sys.executable, "-m", "implicitize", str(path), "--format", "json"],
                          capture_output=True, text=True, env=env, check=True)
    return proc.stdout


def test_fallback_is_selected_by_environment():
    code = "import implicitize.kernels as k; print(k.BACKEND)"
    env = dict(os.environ, IMPLICITIZE_PURE_PYTHON="1")
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True,
                         env=env, check=True).stdout
    assert out.strip() == "python"


@pytest.mark.skipif(kernels.BACKEND != "gmp", reason="GMP extension not built")
@pytest.mark.parametrize("name", ["surface_no_base_points.txt", "moving_quadrics.txt",
                                  "conic_common_factor.txt"])
def test_backends_give_identical_output(name):
    assert run_cli(PROBLEMS / name, pure=True) == run_cli(PROBLEMS / name, pure=False)
