"""Problem files and the JSON encoding of polynomials and matrices.

A problem file is line oriented; ``#`` starts a comment::

    n = 2
    vars = s, t          # optional, defaults to s, t, u, v
    f0 = s^2
    f1 = s*t
    f2 = t^2
    nu = 1               # optional
    indeg = 2            # optional, initial degree of the saturated base ideal
    seed = 0             # optional
    base_point_degrees = 1, 1
    multiplicities = 1, 1

In JSON every coefficient is a string ``"p"`` or ``"p/q"`` and every
monomial an exponent vector, so nothing is lost to floating point.
"""

from fractions import Fraction

from .arith import ParamPoly, TargetPoly, as_rational, format_rational, parse_poly, \
    parse_rational
from .errors import ParseError
from .linalg import LinFormMatrix
from .pipeline import Parameterization

_INT_KEYS = {"n", "d", "nu", "indeg", "indeg_sat", "seed"}
_LIST_KEYS = {"base_point_degrees", "multiplicities"}


class ProblemFile:
    __slots__ = ("n", "variables", "polynomials", "d", "nu", "indeg_sat", "seed",
                 "base_point_degrees", "multiplicities")

    def __init__(self, n, variables, polynomials, d=None, nu=None, indeg_sat=None,
                 seed=None, base_point_degrees=None, multiplicities=None):
        self.n = n
        self.variables = variables
        self.polynomials = polynomials
        self.d = d
        self.nu = nu
        self.indeg_sat = indeg_sat
        self.seed = seed
        self.base_point_degrees = base_point_degrees
        self.multiplicities = multiplicities

    def parameterization(self):
        f = [parse_poly(text, ParamPoly, self.n, self.variables) for text in self.polynomials]
        try:
            p = Parameterization(f)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
        if self.d is not None and p.d != self.d:
            raise ParseError(f"declared d = {self.d} but the polynomials have degree {p.d}")
        return p


def _int(key, value):
    try:
        return int(value)
    except ValueError:
        raise ParseError(f"{key} must be an integer, got {value!r}") from None


def parse_problem(text):
    fields = {}
    polys = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ParseError(f"line {lineno}: expected 'key = value'")
        key, value = (part.strip() for part in line.split("=", 1))
        key = key.lower()
        if key.startswith("f") and key[1:].isdigit():
            polys[int(key[1:])] = value
        elif key in _INT_KEYS:
            fields["indeg_sat" if key == "indeg" else key] = _int(key, value)
        elif key in _LIST_KEYS:
            fields[key] = [_int(key, v) for v in value.replace(",", " ").split()]
        elif key in ("vars", "variables"):
            fields["variables"] = [v for v in value.replace(",", " ").split()]
        else:
            raise ParseError(f"line {lineno}: unknown key {key!r}")
    if not polys:
        raise ParseError("no polynomials f0, f1, ... given")
    if sorted(polys) != list(range(len(polys))):
        raise ParseError("polynomials must be numbered f0, f1, ... without gaps")
    n = fields.pop("n", len(polys) - 1)
    if n != len(polys) - 1:
        raise ParseError(f"n = {n} needs {n + 1} polynomials, got {len(polys)}")
    variables = fields.pop("variables", None)
    if variables is None:
        variables = list(ParamPoly.aliases[:n]) if n <= len(ParamPoly.aliases) \
            else [f"X{i + 1}" for i in range(n)]
    if len(variables) != n:
        raise ParseError(f"expected {n} variable names, got {len(variables)}")
    return ProblemFile(n, variables, [polys[i] for i in range(len(polys))], **fields)


def load_problem(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return parse_problem(text)


def parse_point(text, size):
    parts = [p for p in text.replace(",", " ").split() if p]
    if len(parts) != size:
        raise ParseError(f"point needs {size} coordinates, got {len(parts)}")
    point = [parse_rational(p) for p in parts]
    if not any(point):
        raise ParseError("the zero vector is not a projective point")
    return point


# JSON

def rational_to_json(c):
    return format_rational(as_rational(c))


def rational_from_json(s):
    if not isinstance(s, str):
        raise ParseError(f"coefficient must be a string, got {s!r}")
    return as_rational(Fraction(s))


def poly_to_json(p):
    return {
        "nvars": p.nvars,
        "variables": list(p.variable_names()),
        "terms": [[list(exp), rational_to_json(c)] for exp, c in p.sorted_terms()],
    }


def poly_from_json(obj, cls=TargetPoly):
    return cls(obj["nvars"], {tuple(e): rational_from_json(c) for e, c in obj["terms"]})


def matrix_to_json(m):
    """Each entry is the coefficient list of the linear form in T1..Tn+1."""
    return {
        "rows": m.rows,
        "cols": m.cols,
        "nvars": m.nvars,
        "entries": [[[rational_to_json(lay[i][j]) for lay in m.layers]
                     for j in range(m.cols)] for i in range(m.rows)],
    }


def matrix_from_json(obj):
    rows, cols, nv = obj["rows"], obj["cols"], obj["nvars"]
    entries = obj["entries"]
    layers = [[tuple(rational_from_json(entries[i][j][a]) for j in range(cols))
               for i in range(rows)] for a in range(nv)]
    return LinFormMatrix._raw(layers, rows, cols)
