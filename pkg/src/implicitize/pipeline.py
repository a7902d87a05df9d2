"""End-to-end implicitization, the substitution oracle and degree bookkeeping."""

from collections import namedtuple

from .arith import ParamPoly, as_rational, binary_form_gcd, normalize, \
    parse_poly, substitute_targets
from .complex import assemble_slice, nu0
from .detcomplex import cascade, check_generic_exactness
from .errors import DegenerateMap, OracleFailed
from .koszul import common_degree
from .linalg import generic_rank, rank


class Parameterization:
    """n+1 homogeneous forms of one degree d >= 1 in n parameters."""

    __slots__ = ("n", "d", "f")

    def __init__(self, f):
        f = tuple(f)
        if len(f) < 2:
            raise ValueError("need at least two polynomials")
        n = f[0].nvars
        if any(not isinstance(q, ParamPoly) or q.nvars != n for q in f):
            raise ValueError("all polynomials must be ParamPolys in the same variables")
        if len(f) != n + 1:
            raise ValueError(f"{n} parameters need {n + 1} polynomials, got {len(f)}")
        d = common_degree(f)
        if d < 1:
            raise ValueError("the common degree must be at least 1")
        self.n = n
        self.d = d
        self.f = f

    @classmethod
    def from_strings(cls, polys, names=None):
        polys = list(polys)
        n = len(polys) - 1
        if names is None and n > len(ParamPoly.aliases):
            names = [f"X{i + 1}" for i in range(n)]
        return cls(parse_poly(p, ParamPoly, n, names) for p in polys)

    def evaluate(self, q):
        return [p.evaluate(q) for p in self.f]

    def __repr__(self):
        return f"Parameterization(n={self.n}, d={self.d}, f=[{', '.join(map(str, self.f))}])"


class ImplicitizationReport:
    __slots__ = ("nu_used", "slice_shapes", "matrix_rep", "determinant", "degree",
                 "verified", "warnings", "delta_sizes", "gcd", "exactness",
                 "bookkeeping", "cascade")

    def __init__(self, **kw):
        for k in self.__slots__:
            setattr(self, k, kw.get(k))
        if self.warnings is None:
            self.warnings = []

    def __repr__(self):
        return (f"ImplicitizationReport(nu={self.nu_used}, deltas={self.delta_sizes}, "
                f"degree={self.degree}, verified={self.verified})")


def default_nu(n, d, indeg_sat=None):
    if indeg_sat is not None:
        return nu0(n, d, indeg_sat)
    return (n - 1) * (d - 1)


def implicitize(p, nu=None, indeg_sat=None, seed=0, *, verify=True, method="auto",
                base_point_degrees=None, multiplicities=None, check=True):
    """Implicit equation (times any extraneous factor) of the image of p.

    ``nu`` defaults to the acyclicity bound, sharpened by ``indeg_sat`` (the
    initial degree of the saturated base ideal) when given. An explicit
    ``nu`` below the bound is honoured with a warning, so that a too-small
    slice is reported as NotGenericallyExact rather than silently raised.
    """
    if not isinstance(p, Parameterization):
        p = Parameterization(p)
    warnings = []
    gcd = None
    if p.n == 2:
        gcd = binary_form_gcd(p.f)
        g = gcd.homogeneous_degree()
        if g == p.d:
            raise DegenerateMap(f"gcd {gcd} has full degree {p.d}: the map is constant")
        if g:
            warnings.append(f"the forms share the factor {gcd} of degree {g}")
    bound = default_nu(p.n, p.d, indeg_sat)
    if nu is None:
        nu = bound
    elif nu < bound:
        warnings.append(f"nu = {nu} is below the acyclicity bound {bound}")
    slice_ = assemble_slice(p.f, nu, check=check)
    exactness = check_generic_exactness(slice_, seed)
    result = cascade(slice_, seed, method=method, check=True)
    det = normalize(result.quotient)
    verified = None
    if verify:
        verified = verify_by_substitution(det, p)
        if not verified:
            raise OracleFailed("the computed determinant does not vanish on the "
                               "parameterization")
    bookkeeping = {}
    if base_point_degrees is not None:
        exp = expected_degree(p.n, p.d, base_point_degrees)
        bookkeeping["expected_degree"] = exp
        if exp != det.degree():
            warnings.append(f"degree {det.degree()} differs from the expected {exp}")
    if multiplicities is not None:
        drop = degree_drop(p.n, p.d, multiplicities)
        bookkeeping["implicit_degree"] = drop.degree
        bookkeeping["generically_finite"] = drop.generically_finite
        bookkeeping["extraneous_degree"] = det.degree() - drop.degree
        if not drop.generically_finite:
            warnings.append("multiplicities say the map is not generically finite")
    return ImplicitizationReport(
        nu_used=nu, slice_shapes=slice_.shapes, matrix_rep=slice_.maps[0]
        if slice_.maps else None, determinant=det, degree=det.degree(),
        verified=verified, warnings=warnings, delta_sizes=result.sizes, gcd=gcd,
        exactness=exactness, bookkeeping=bookkeeping, cascade=result)


def matrix_representation(p, nu=None, indeg_sat=None):
    """Z_1 alone: the matrix of moving hyperplanes of degree nu."""
    if not isinstance(p, Parameterization):
        p = Parameterization(p)
    if nu is None:
        nu = default_nu(p.n, p.d, indeg_sat)
    return assemble_slice(p.f, nu, check=False).maps[0], nu


def verify_by_substitution(det, p):
    f = p.f if isinstance(p, Parameterization) else tuple(p)
    return not substitute_targets(det, f)


def membership_test(z1, point, expected_rank):
    """True when the rank of Z_1 at the point falls below its generic rank."""
    point = [as_rational(x) for x in point]
    if len(point) != z1.nvars:
        raise ValueError(f"point needs {z1.nvars} coordinates")
    if not any(point):
        raise ValueError("the zero vector is not a projective point")
    return rank(z1.evaluate(point)) < expected_rank


def matrix_generic_rank(z1, seed=0):
    return generic_rank(z1, seed)


def expected_degree(n, d, base_point_degrees):
    total = d ** (n - 1) - sum(base_point_degrees)
    if total < 0:
        raise ValueError(f"base point degrees sum to more than d^(n-1) = {d ** (n - 1)}")
    return total


DegreeDrop = namedtuple("DegreeDrop", "degree generically_finite")


def degree_drop(n, d, multiplicities):
    """d^(n-1) minus the multiplicities: beta times the degree of the image."""
    total = d ** (n - 1) - sum(multiplicities)
    if total < 0:
        raise ValueError("multiplicities exceed d^(n-1); inconsistent input")
    return DegreeDrop(total, total > 0)

