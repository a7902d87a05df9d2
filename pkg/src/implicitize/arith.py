"""Exact polynomial arithmetic over the rationals.

Polynomials are sparse maps from exponent tuples to coefficients. A
coefficient is either an ``int`` or a ``fractions.Fraction`` with a
denominator other than 1, so integer-coefficient polynomials never pay for
Fraction arithmetic.

Two variable blocks are kept apart by type: ``ParamPoly`` lives in the
parameters ``X1..Xn`` (printed ``s, t, u, v``) and ``TargetPoly`` in the
targets ``T1..Tn+1`` (printed ``x, y, z, w``). Monomials are ordered
graded-lexicographically with the first variable largest.
"""

import ast
from fractions import Fraction
from math import gcd, lcm

from . import kernels
from .errors import InexactDivision, ParseError

# below this many term products the plain dict loop beats packing
_KRON_THRESHOLD = 400


def as_rational(x):
    """Canonical exact scalar: ``int`` when integral, ``Fraction`` otherwise."""
    if isinstance(x, bool):
        return int(x)
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, str):
        x = Fraction(x.strip())
        return x.numerator if x.denominator == 1 else x
    raise TypeError(f"not an exact rational: {x!r}")


def grlex_key(exp):
    return (sum(exp), exp)


def format_rational(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


class Poly:
    """Sparse multivariate polynomial with rational coefficients.

    Instances are treated as immutable; arithmetic returns new objects.
    Pass ``homogeneous=True`` to have the constructor reject
    non-homogeneous input.
    """

    __slots__ = ("nvars", "terms")
    aliases = ()
    prefix = "X"

    def __init__(self, nvars, terms=(), *, homogeneous=False):
        items = terms.items() if isinstance(terms, dict) else terms
        clean = {}
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nvars or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent vector {exp} for {nvars} variables")
            c = as_rational(c)
            if c:
                c = clean.get(exp, 0) + c
                if c:
                    clean[exp] = as_rational(c) if isinstance(c, Fraction) else c
                else:
                    del clean[exp]
        self.nvars = nvars
        self.terms = clean
        if homogeneous and not self.is_homogeneous:
            raise ValueError(f"polynomial is not homogeneous: {self}")

    @classmethod
    def _raw(cls, nvars, terms):
        # trusted path: canonical coefficients, no zeros
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj.terms = terms
        return obj

    # constructors

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars, c):
        c = as_rational(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def variable(cls, nvars, i):
        exp = [0] * nvars
        exp[i] = 1
        return cls._raw(nvars, {tuple(exp): 1})

    @classmethod
    def monomial(cls, exp, c=1):
        return cls(len(exp), {tuple(exp): c})

    @classmethod
    def parse(cls, text, nvars, names=None):
        return parse_poly(text, cls, nvars, names)

    # structure

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return type(self) is type(other) and self.nvars == other.nvars \
                and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((type(self).__name__, self.nvars, frozenset(self.terms.items())))

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    @property
    def is_homogeneous(self):
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_degree(self):
        """Common degree of all terms, or None when not homogeneous or zero."""
        degs = {sum(e) for e in self.terms}
        return degs.pop() if len(degs) == 1 else None

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda t: grlex_key(t[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        exp = max(self.terms, key=grlex_key)
        return exp, self.terms[exp]

    def coeff(self, exp):
        return self.terms.get(tuple(exp), 0)

    def evaluate(self, point):
        """Value at a point of exact scalars."""
        if len(point) != self.nvars:
            raise ValueError("point has the wrong number of coordinates")
        point = [as_rational(p) for p in point]
        total = 0
        for exp, c in self.terms.items():
            v = c
            for p, e in zip(point, exp):
                if e:
                    v *= p ** e
            total += v
        return as_rational(total) if isinstance(total, Fraction) else total

    # arithmetic

    def _check(self, other):
        if type(other) is not type(self) or other.nvars != self.nvars:
            raise TypeError(f"cannot combine {type(self).__name__}({self.nvars}) "
                            f"with {type(other).__name__}({getattr(other, 'nvars', '?')})")

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return type(self).constant(self.nvars, other)
        return None

    def __neg__(self):
        return type(self)._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = as_rational(v) if isinstance(v, Fraction) else v
            else:
                out.pop(e, None)
        return type(self)._raw(self.nvars, out)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return type(self).zero(self.nvars)
        if c == 1:
            return self
        out = {}
        for e, v in self.terms.items():
            v = v * c
            out[e] = as_rational(v) if isinstance(v, Fraction) else v
        return type(self)._raw(self.nvars, out)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        if not self.terms or not other.terms:
            return type(self).zero(self.nvars)
        if len(self.terms) * len(other.terms) >= _KRON_THRESHOLD:
            da = self.homogeneous_degree()
            db = other.homogeneous_degree()
            if da is not None and db is not None:
                return _kron_product(self, other, da, db)
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = get(e, 0) + c1 * c2
        clean = {}
        for e, v in out.items():
            if v:
                clean[e] = as_rational(v) if isinstance(v, Fraction) else v
        return type(self)._raw(self.nvars, clean)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = type(self).constant(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def divexact(self, other):
        return divexact(self, other)

    # content

    def denominator_lcm(self):
        return lcm(*(c.denominator for c in self.terms.values()
                     if isinstance(c, Fraction))) if self.terms else 1

    def integer_content(self):
        """Positive rational c with self / c primitive with integer coefficients."""
        if not self.terms:
            return 1
        den = self.denominator_lcm()
        g = 0
        for c in self.terms.values():
            g = gcd(g, int(c * den))
        return as_rational(Fraction(g, den))

    # printing

    def variable_names(self):
        if self.nvars <= len(self.aliases):
            return self.aliases[:self.nvars]
        return tuple(f"{self.prefix}{i + 1}" for i in range(self.nvars))

    def to_str(self, names=None):
        names = names or self.variable_names()
        if not self.terms:
            return "0"
        parts = []
        for exp, c in self.sorted_terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}"
                            for n, e in zip(names, exp) if e)
            neg = c < 0
            a = -c if neg else c
            if not mono:
                body = format_rational(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rational(a)}*{mono}"
            if not parts:
                parts.append(f"-{body}" if neg else body)
            else:
                parts.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(parts)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"{type(self).__name__}({self.nvars}, {self.to_str()!r})"


class ParamPoly(Poly):
    """Polynomial in the parameter variables X1..Xn."""

    __slots__ = ()
    aliases = ("s", "t", "u", "v")
    prefix = "X"


class TargetPoly(Poly):
    """Polynomial in the target variables T1..Tn+1."""

    __slots__ = ()
    aliases = ("x", "y", "z", "w")
    prefix = "T"


class TargetLinForm:
    """Homogeneous linear form sum_j coeffs[j] * T_{j+1}; the zero form is allowed."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        self.coeffs = tuple(as_rational(c) for c in coeffs)

    @classmethod
    def zero(cls, nvars):
        return cls((0,) * nvars)

    @property
    def nvars(self):
        return len(self.coeffs)

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, TargetLinForm):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        return TargetLinForm(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return TargetLinForm(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self):
        return TargetLinForm(-a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, TargetLinForm):
            return self.to_poly() * other.to_poly()
        if isinstance(other, (int, Fraction)):
            return TargetLinForm(a * other for a in self.coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def evaluate(self, point):
        return as_rational(sum(c * as_rational(p) for c, p in zip(self.coeffs, point)))

    def to_poly(self):
        n = len(self.coeffs)
        terms = {}
        for j, c in enumerate(self.coeffs):
            if c:
                e = [0] * n
                e[j] = 1
                terms[tuple(e)] = c
        return TargetPoly._raw(n, terms)

    def to_str(self, names=None):
        return self.to_poly().to_str(names)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"TargetLinForm({self.to_str()!r})"


# Kronecker packing of homogeneous polynomials: drop the first exponent
# (fixed by the degree) and read the rest as digits in base ``base``.

def _pack(poly, base):
    keys = []
    coeffs = []
    den = poly.denominator_lcm()
    for exp, c in poly.terms.items():
        k = 0
        for e in reversed(exp[1:]):
            k = k * base + e
        keys.append(k)
        coeffs.append(int(c * den) if den != 1 else c)
    return keys, coeffs, den


def _unpack(cls, nvars, keys, coeffs, degree, base, scale=1):
    terms = {}
    for k, c in zip(keys, coeffs):
        exp = []
        rest = 0
        for _ in range(nvars - 1):
            k, e = divmod(k, base)
            exp.append(e)
            rest += e
        if k or rest > degree:
            return None
        v = c * scale if scale != 1 else c
        terms[(degree - rest, *exp)] = as_rational(v) if isinstance(v, Fraction) else v
    return cls._raw(nvars, terms)


def _kron_product(a, b, da, db):
    base = da + db + 1
    ka, ca, dena = _pack(a, base)
    kb, cb, denb = _pack(b, base)
    keys, coeffs = kernels.kron_mul(ka, ca, kb, cb)
    scale = Fraction(1, dena * denb) if dena * denb != 1 else 1
    out = _unpack(type(a), a.nvars, keys, coeffs, da + db, base, scale)
    if out is None:  # pragma: no cover - packing is injective here
        raise InexactDivision("Kronecker unpacking failed")
    return out


def divexact(num, den):
    """Exact quotient ``num / den``; raises InexactDivision otherwise."""
    num._check(den)
    if not den.terms:
        raise ZeroDivisionError("division by the zero polynomial")
    if not num.terms:
        return type(num).zero(num.nvars)
    dn = num.homogeneous_degree()
    dd = den.homogeneous_degree()
    if dn is not None and dd is not None and num.nvars > 0:
        return _divexact_homogeneous(num, den, dn, dd)
    return _divexact_generic(num, den)


def _divexact_homogeneous(num, den, dn, dd):
    dq = dn - dd
    if dq < 0:
        raise InexactDivision(f"degree {dn} is not divisible by degree {dd}")
    cont = den.integer_content()
    base = dn + 1
    kn, cn, ln = _pack(num, base)
    prim = den.scale(Fraction(1) / cont) if cont != 1 else den
    kd, cd, _ = _pack(prim, base)
    try:
        qk, qc = kernels.kron_divexact(kn, cn, kd, cd)
    except ArithmeticError as exc:
        raise InexactDivision(f"{num.to_str()[:60]}... is not divisible: {exc}") from None
    scale = as_rational(Fraction(1) / (cont * ln))
    out = _unpack(type(num), num.nvars, qk, qc, dq, base, scale)
    if out is None:
        raise InexactDivision("quotient exceeds the expected degree")
    return out


def _divexact_generic(num, den):
    lead_e, lead_c = den.leading_term()
    rem = dict(num.terms)
    quot = {}
    den_items = list(den.terms.items())
    while rem:
        e = max(rem, key=grlex_key)
        c = rem[e]
        shift = tuple(a - b for a, b in zip(e, lead_e))
        if any(s < 0 for s in shift):
            raise InexactDivision("leading monomial not divisible")
        q = as_rational(Fraction(c) / lead_c)
        quot[shift] = q
        for de, dc in den_items:
            m = tuple(a + b for a, b in zip(de, shift))
            v = rem.get(m, 0) - q * dc
            if v:
                rem[m] = as_rational(v) if isinstance(v, Fraction) else v
            else:
                rem.pop(m, None)
    return type(num)._raw(num.nvars, quot)


def target_poly_divexact(num, den):
    return divexact(num, den)


def normalize(p):
    """Scale to integer content 1 with a positive grlex-leading coefficient."""
    if not p.terms:
        raise ValueError("cannot normalize the zero polynomial")
    c = p.integer_content()
    if p.leading_term()[1] < 0:
        c = -c
    return p.scale(Fraction(1) / c) if c != 1 else p


def param_poly_mul(a, b):
    return a * b


def _univariate_gcd(a, b):
    # coefficient lists, index = power of s, over Q
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a = trim([Fraction(x) for x in a])
    b = trim([Fraction(x) for x in b])
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            off = len(r) - len(b)
            for i, c in enumerate(b):
                r[off + i] -= q * c
            trim(r)
        a, b = b, r
    return a


def binary_form_gcd(polys):
    """gcd of binary forms, primitive with positive leading coefficient."""
    polys = list(polys)
    if not polys:
        raise ValueError("binary_form_gcd needs at least one polynomial")
    for p in polys:
        if p.nvars != 2:
            raise ValueError("binary_form_gcd works on forms in two variables")
        if not p.is_homogeneous:
            raise ValueError(f"not a binary form: {p}")
    nonzero = [p for p in polys if p.terms]
    if not nonzero:
        raise ValueError("gcd of zero polynomials is undefined")
    cls = type(nonzero[0])
    t_power = min(min(e[1] for e in p.terms) for p in nonzero)
    g = None
    for p in nonzero:
        deg = p.homogeneous_degree()
        coeffs = [0] * (deg + 1)
        for (i, _j), c in p.terms.items():
            coeffs[i] = c
        g = coeffs if g is None else _univariate_gcd(g, coeffs)
        while g and g[-1] == 0:
            g.pop()
    # setting t = 1 loses the factors of t; restore the common power
    e = len(g) - 1
    terms = {(i, e - i + t_power): c for i, c in enumerate(g) if c}
    return normalize(cls(2, terms))


def substitute_targets(p, f):
    """Expand ``p(f_0, ..., f_n)`` exactly."""
    f = list(f)
    if len(f) != p.nvars:
        raise ValueError(f"need {p.nvars} polynomials, got {len(f)}")
    if not f:
        raise ValueError("nothing to substitute")
    cls = type(f[0])
    nv = f[0].nvars
    degs = {q.homogeneous_degree() for q in f if q.terms}
    if None in degs or len(degs) > 1 or any(not q.is_homogeneous for q in f):
        raise ValueError("substitution needs homogeneous polynomials of one degree")
    powers = [[cls.constant(nv, 1)] for _ in f]

    def power(i, k):
        pw = powers[i]
        while len(pw) <= k:
            pw.append(pw[-1] * f[i])
        return pw[k]

    def expand(items, var):
        # Horner-style grouping on the exponent of variable ``var``
        if var == len(f):
            total = sum(c for _, c in items)
            return cls.constant(nv, total)
        groups = {}
        for exp, c in items:
            groups.setdefault(exp[var], []).append((exp, c))
        acc = cls.zero(nv)
        for k in sorted(groups):
            inner = expand(groups[k], var + 1)
            acc = acc + (inner * power(var, k) if k else inner)
        return acc

    return expand(list(p.terms.items()), 0)


# text grammar: "3*s^2*t - 1/2*u^3", parentheses allowed

def default_names(cls, nvars):
    return cls._raw(nvars, {}).variable_names()


def parse_poly(text, cls, nvars, names=None):
    names = tuple(names) if names else default_names(cls, nvars)
    if len(names) != nvars:
        raise ParseError(f"expected {nvars} variable names, got {len(names)}")
    lookup = {n: i for i, n in enumerate(names)}
    for i in range(nvars):
        lookup.setdefault(f"{cls.prefix}{i + 1}", i)
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise ParseError(f"cannot parse {text!r}: {exc.msg}") from None

    def constant_value(node):
        value = walk(node)
        if value.degree() > 0:
            raise ParseError(f"expected a constant in {text!r}")
        return value.coeff((0,) * nvars)

    def walk(node):
        if isinstance(node, ast.Expression):
            return walk(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) \
                and not isinstance(node.value, bool):
            return cls.constant(nvars, node.value)
        if isinstance(node, ast.Name):
            if node.id not in lookup:
                raise ParseError(f"unknown variable {node.id!r} in {text!r}")
            return cls.variable(nvars, lookup[node.id])
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = walk(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            if isinstance(node.op, ast.Add):
                return walk(node.left) + walk(node.right)
            if isinstance(node.op, ast.Sub):
                return walk(node.left) - walk(node.right)
            if isinstance(node.op, ast.Mult):
                return walk(node.left) * walk(node.right)
            if isinstance(node.op, ast.Div):
                d = constant_value(node.right)
                if not d:
                    raise ParseError(f"division by zero in {text!r}")
                return walk(node.left).scale(Fraction(1) / Fraction(d))
            if isinstance(node.op, ast.Pow):
                k = constant_value(node.right)
                if not isinstance(k, int) or k < 0:
                    raise ParseError(f"exponent must be a nonnegative integer in {text!r}")
                return walk(node.left) ** k
        raise ParseError(f"unsupported syntax in {text!r}")

    return walk(tree)


def parse_rational(text):
    try:
        return as_rational(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"not a rational number: {text!r}") from None
