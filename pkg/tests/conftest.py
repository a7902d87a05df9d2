import random
import sys
from pathlib import Path

import pytest

from implicitize.arith import ParamPoly, TargetPoly
from implicitize.koszul import monomial_basis
from implicitize.pipeline import Parameterization

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


def pp(text, n=2):
    return ParamPoly.parse(text, n)


def tp(text, n=4):
    return TargetPoly.parse(text, n)


def param(*polys, n=None):
    n = n if n is not None else len(polys) - 1
    return Parameterization(ParamPoly.parse(p, n) for p in polys)


def random_param(n, d, rng, lo=-3, hi=3):
    mons = monomial_basis(n, d).monomials
    return Parameterization(
        ParamPoly(n, {m: rng.randint(lo, hi) for m in mons}) for _ in range(n + 1))


def random_target(rng, nvars=4, deg=2, terms=4, lo=-5, hi=5):
    mons = monomial_basis(nvars, deg).monomials
    return TargetPoly(nvars, {rng.choice(mons): rng.randint(lo, hi) for _ in range(terms)})


CONIC = ("s^2", "s*t", "t^2")
CONIC_TIMES_S = ("s^3", "s^2*t", "s*t^2")
NO_BASE_POINTS = ("s^2*t", "t^2*u", "s*u^2", "s^3 + t^3 + u^3")
SIX_POINT_CUBIC = (
    "s^2*t + 2*t^3 + s^2*u + 4*s*t*u + 4*t^2*u + 3*s*u^2 + 2*t*u^2 + 2*u^3",
    "-s^3 - 2*s*t^2 - 2*s^2*u - s*t*u + s*u^2 - 2*t*u^2 + 2*u^3",
    "-s^3 - 2*s^2*t - 3*s*t^2 - 3*s^2*u - 3*s*t*u + 2*t^2*u - 2*s*u^2 - 2*t*u^2",
    "s^3 + s^2*t + t^3 + s^2*u + t^2*u - s*u^2 - t*u^2 - u^3",
)
MOVING_QUADRICS = ("s*u^2", "t^2*(s + u)", "s*t*(s + u)", "t*u*(s + u)")
FAT_POINT = (
    "s^3 - 6*s^2*t - 5*s*t^2 - 4*s^2*u + 4*s*t*u - 3*t^2*u",
    "-s^3 - 2*s^2*t - s*t^2 - 5*s^2*u - 3*s*t*u - 6*t^2*u",
    "-4*s^3 - 2*s^2*t + 4*s*t^2 - 6*t^3 + 6*s^2*u - 6*s*t*u - 2*t^2*u",
    "2*s^3 - 6*s^2*t + 3*s*t^2 - 6*t^3 - 3*s^2*u - 4*s*t*u + 2*t^2*u",
)
QUADRICS_P3 = (
    "s^2 + t*u - v^2",
    "t^2 + u*v - s*v",
    "u^2 + s*t + 2*t*v",
    "v^2 + 2*s*u - t*v",
    "s*v + t*u - u*v + s*t",
)

DEGREE_NINE = ("x^6*z^3 + 3*x^5*y^2*z^2 + 3*x^4*y^4*z + 3*x^4*y*z^4 + x^3*y^6"
               " + 6*x^3*y^3*z^3 + 3*x^2*y^5*z^2 + 3*x^2*y^2*z^5 - x^2*y^2*z^2*w^3"
               " + 3*x*y^4*z^4 + y^3*z^6")

# determinant of the printed 3x3 matrix for SIX_POINT_CUBIC, expanded independently
PRINTED_CUBIC_DET = ("3*x^2*y - x^2*z + 2*x^2*w - 3*x*y^2 - 3*x*y*w - x*z*w - 4*x*w^2"
                     " + 3*y^2*z - y^2*w - 3*y*z^2 + 4*y*z*w + z^3 + 2*z*w^2")


@pytest.fixture
def rng():
    return random.Random(20240611)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
