"""Exact sparse polynomial arithmetic in t, (q,t) and (q,p,t).

All coefficients are exact: Python ints, or Fractions where denominators
arise (power-sum expansions).  No floating point anywhere.
"""

from fractions import Fraction
from functools import reduce
import threading

__all__ = [
    "Poly", "tpoly", "qtpoly", "qptpoly", "zero", "one",
    "t_number", "t_factorial", "gaussian_multinomial", "gaussian_binomial",
    "cyclotomic", "CyclotomicElem", "eval_at_root_of_unity",
    "root_of_unity_rational", "is_palindromic", "is_positive_unimodal",
    "natural_center", "combine_unimodal",
]


def _norm_coeff(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Sparse multivariate polynomial with a fixed variable tuple.

    Exponent keys are tuples aligned with ``variables``; zero coefficients
    are never stored.  Values are immutable after construction.
    """

    __slots__ = ("variables", "coeffs")

    def __init__(self, variables, coeffs=None):
        self.variables = tuple(variables)
        clean = {}
        if coeffs:
            nv = len(self.variables)
            for exps, c in coeffs.items():
                c = _norm_coeff(c)
                if c == 0:
                    continue
                exps = tuple(exps)
                if len(exps) != nv:
                    raise ValueError("exponent arity mismatch")
                clean[exps] = c
        self.coeffs = clean

    # -- construction helpers -------------------------------------------

    @classmethod
    def constant(cls, variables, c):
        variables = tuple(variables)
        return cls(variables, {(0,) * len(variables): c})

    @classmethod
    def var(cls, variables, name, power=1):
        variables = tuple(variables)
        i = variables.index(name)
        exps = [0] * len(variables)
        exps[i] = power
        return cls(variables, {tuple(exps): 1})

    # -- ring operations -------------------------------------------------

    def _check(self, other):
        if self.variables != other.variables:
            raise ValueError(
                f"variable mismatch: {self.variables} vs {other.variables}")

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.variables, other)
        self._check(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return Poly(self.variables, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly(self.variables, {e: -c for e, c in self.coeffs.items()})

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(self.variables, other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return Poly(self.variables)
            return Poly(self.variables,
                        {e: c * other for e, c in self.coeffs.items()})
        self._check(other)
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(self.variables, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = Poly.constant(self.variables, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.variables == other.variables and self.coeffs == other.coeffs
        return self.coeffs == Poly.constant(self.variables, other).coeffs

    def __hash__(self):
        return hash((self.variables, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    # -- queries -----------------------------------------------------------

    def is_zero(self):
        return not self.coeffs

    def degree(self, name=None):
        """Degree in one variable (or total degree); -1 for 0."""
        if not self.coeffs:
            return -1
        if name is None:
            return max(sum(e) for e in self.coeffs)
        i = self.variables.index(name)
        return max(e[i] for e in self.coeffs)

    def coefficient(self, **powers):
        """Coefficient of a full monomial, e.g. p.coefficient(q=1, t=2)."""
        key = tuple(powers.get(v, 0) for v in self.variables)
        return self.coeffs.get(key, 0)

    def slices(self, name):
        """Split along one variable: dict exponent -> Poly in the rest."""
        i = self.variables.index(name)
        rest = self.variables[:i] + self.variables[i + 1:]
        out = {}
        for e, c in self.coeffs.items():
            out.setdefault(e[i], {})[e[:i] + e[i + 1:]] = c
        return {k: Poly(rest, v) for k, v in sorted(out.items())}

    def coeff_list(self):
        """Dense coefficient list for a univariate polynomial."""
        if len(self.variables) != 1:
            raise ValueError("coeff_list needs a univariate polynomial")
        d = self.degree()
        out = [0] * (d + 1)
        for (e,), c in self.coeffs.items():
            out[e] = c
        return out

    def subs(self, name, value):
        """Substitute an exact scalar or same-variable Poly for one variable."""
        i = self.variables.index(name)
        if isinstance(value, Poly):
            acc = Poly(self.variables)
            for e, c in self.coeffs.items():
                mono = Poly(self.variables, {e[:i] + (0,) + e[i + 1:]: c})
                acc = acc + mono * value ** e[i]
            return acc
        out = {}
        for e, c in self.coeffs.items():
            key = e[:i] + (0,) + e[i + 1:]
            out[key] = out.get(key, 0) + c * value ** e[i]
        return Poly(self.variables, out)

    def drop_var(self, name):
        """Remove a variable that no longer occurs."""
        i = self.variables.index(name)
        if any(e[i] for e in self.coeffs):
            raise ValueError(f"{name} still occurs")
        rest = self.variables[:i] + self.variables[i + 1:]
        return Poly(rest, {e[:i] + e[i + 1:]: c for e, c in self.coeffs.items()})

    def lift(self, variables):
        """Embed into a larger variable tuple."""
        variables = tuple(variables)
        idx = [variables.index(v) for v in self.variables]
        out = {}
        for e, c in self.coeffs.items():
            key = [0] * len(variables)
            for j, p in zip(idx, e):
                key[j] = p
            out[tuple(key)] = c
        return Poly(variables, out)

    def reverse(self, name, top):
        """Map t^j -> t^(top-j); the t -> 1/t flip times t^top."""
        i = self.variables.index(name)
        out = {}
        for e, c in self.coeffs.items():
            if e[i] > top:
                raise ValueError("degree exceeds reversal bound")
            out[e[:i] + (top - e[i],) + e[i + 1:]] = c
        return Poly(self.variables, out)

    # -- rendering ---------------------------------------------------------

    def render(self):
        """Canonical text: ascending t-degree, q (then p) within each t-slice."""
        if not self.coeffs:
            return "0"
        tv = "t" if "t" in self.variables else self.variables[-1]
        rest = [v for v in self.variables if v != tv]
        parts = []
        for texp, slc in self.slices(tv).items():
            inner = _render_flat(slc, rest)
            if texp == 0:
                parts.append(inner)
            else:
                tpow = "t" if texp == 1 else f"t^{texp}"
                if inner == "1":
                    parts.append(tpow)
                elif _is_single_term(slc):
                    parts.append(f"{inner}*{tpow}")
                else:
                    parts.append(f"({inner})*{tpow}")
        return " + ".join(parts)

    def __repr__(self):
        return f"Poly({self.variables!r}, {self.render()!r})"


def _is_single_term(p):
    return len(p.coeffs) == 1


def _render_flat(p, names):
    terms = []
    for e, c in sorted(p.coeffs.items()):
        factors = []
        for name, power in zip(names, e):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
        if not factors:
            terms.append(str(c))
        elif c == 1:
            terms.append("*".join(factors))
        elif c == -1:
            terms.append("-" + "*".join(factors))
        else:
            terms.append(f"{c}*" + "*".join(factors))
    return " + ".join(terms).replace("+ -", "- ")


T_VARS = ("t",)
QT_VARS = ("q", "t")
QPT_VARS = ("q", "p", "t")


def tpoly(spec=0):
    """Build a t-polynomial from an int, dict {exp: coeff} or coefficient list."""
    if isinstance(spec, Poly):
        return spec
    if isinstance(spec, dict):
        return Poly(T_VARS, {(e,): c for e, c in spec.items()})
    if isinstance(spec, (list, tuple)):
        return Poly(T_VARS, {(i,): c for i, c in enumerate(spec)})
    return Poly.constant(T_VARS, spec)


def qtpoly(spec=0):
    if isinstance(spec, dict):
        return Poly(QT_VARS, {tuple(e): c for e, c in spec.items()})
    return Poly.constant(QT_VARS, spec)


def qptpoly(spec=0):
    if isinstance(spec, dict):
        return Poly(QPT_VARS, {tuple(e): c for e, c in spec.items()})
    return Poly.constant(QPT_VARS, spec)


def zero(variables=T_VARS):
    return Poly(variables)


def one(variables=T_VARS):
    return Poly.constant(variables, 1)


def t_number(n, var="t"):
    """[n]_t = 1 + t + ... + t^(n-1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Poly((var,), {(i,): 1 for i in range(n)})


def t_factorial(n, var="t"):
    """[n]_t! = [1]_t [2]_t ... [n]_t."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return reduce(lambda a, b: a * b,
                  (t_number(i, var) for i in range(1, n + 1)),
                  one((var,)))


def _divmod_uni(num, den):
    """Exact univariate division; both args dense coefficient lists."""
    num = list(num)
    d = len(den) - 1
    while den and den[-1] == 0:
        den.pop()
        d -= 1
    q = [0] * max(len(num) - d, 0)
    lead = den[-1]
    for i in range(len(num) - 1, d - 1, -1):
        if num[i] == 0:
            continue
        c = Fraction(num[i], 1) / lead
        q[i - d] = _norm_coeff(c)
        for j, dc in enumerate(den):
            num[i - d + j] -= c * dc
    rem = [c for c in num[:d]]
    return q, rem


def poly_div_exact(num, den):
    """Exact division of univariate Polys; raises if remainder is nonzero."""
    if num.variables != den.variables or len(num.variables) != 1:
        raise ValueError("needs matching univariate polynomials")
    if num.is_zero():
        return Poly(num.variables)
    q, rem = _divmod_uni(num.coeff_list(), den.coeff_list())
    if any(rem):
        raise ValueError("inexact division")
    return Poly(num.variables, {(i,): c for i, c in enumerate(q)})


def gaussian_multinomial(n, ks, var="q"):
    """q-multinomial [n; k_1,...,k_m]_q = [n]_q! / prod [k_i]_q!."""
    ks = list(ks)
    if any(k < 0 for k in ks):
        raise ValueError("negative block size")
    if sum(ks) != n:
        raise ValueError(f"blocks sum to {sum(ks)}, not {n}")
    num = t_factorial(n, var)
    for k in ks:
        num = poly_div_exact(num, t_factorial(k, var))
    if any(not isinstance(c, int) or c < 0 for c in num.coeffs.values()):
        raise AssertionError("q-multinomial must have nonnegative integer coefficients")
    return num


def gaussian_binomial(n, k, var="q"):
    return gaussian_multinomial(n, (k, n - k), var)


# -- cyclotomic polynomials and roots of unity ---------------------------

_cyclo_cache = {}
_cyclo_lock = threading.RLock()


def cyclotomic(d):
    """The d-th cyclotomic polynomial in q, by recursive exact division."""
    if d < 1:
        raise ValueError("order must be positive")
    got = _cyclo_cache.get(d)
    if got is not None:
        return got
    with _cyclo_lock:
        got = _cyclo_cache.get(d)
        if got is not None:
            return got
        q = Poly.var(("q",), "q")
        num = q ** d - 1
        for e in range(1, d):
            if d % e == 0:
                num = poly_div_exact(num, cyclotomic(e))
        _cyclo_cache[d] = num
        return num


class CyclotomicElem:
    """An element of Q[q]/Phi_d, stored as a reduced residue tuple."""

    __slots__ = ("d", "residue")

    def __init__(self, d, residue):
        deg = cyclotomic(d).degree()
        res = list(residue) + [0] * (deg - len(residue))
        if len(res) > deg:
            raise ValueError("residue not reduced")
        self.d = d
        self.residue = tuple(_norm_coeff(c) for c in res)

    def is_rational(self):
        return all(c == 0 for c in self.residue[1:])

    def rational(self):
        if not self.is_rational():
            raise ValueError(f"residue {self.residue} is not rational")
        return self.residue[0] if self.residue else 0

    def __eq__(self, other):
        return (isinstance(other, CyclotomicElem)
                and self.d == other.d and self.residue == other.residue)

    def __repr__(self):
        return f"CyclotomicElem(d={self.d}, residue={self.residue})"


def _q_power_table(d, max_exp):
    """q^k mod Phi_d for k = 0..max_exp, as dense lists."""
    phi = cyclotomic(d).coeff_list()
    deg = len(phi) - 1
    # Phi_d is monic, so reduction subtracts phi scaled by the leading term.
    powers = [[1] + [0] * (deg - 1) if deg > 0 else []]
    for _ in range(max_exp):
        prev = powers[-1]
        nxt = [0] + prev[:-1] if deg > 1 else [0] * deg
        carry = prev[-1] if deg >= 1 else 0
        if deg >= 1 and carry:
            for j in range(deg):
                nxt[j] -= carry * phi[j]
        powers.append([_norm_coeff(Fraction(c)) for c in nxt])
    return powers


def eval_at_root_of_unity(f, d, qvar="q"):
    """Substitute a primitive d-th root of unity for q in f.

    f is a Poly containing the variable qvar; the result is a dict from
    remaining-variable exponent tuples to CyclotomicElem.
    """
    i = f.variables.index(qvar)
    rest_vars = f.variables[:i] + f.variables[i + 1:]
    max_q = max((e[i] for e in f.coeffs), default=0)
    table = _q_power_table(d, max_q)
    deg = cyclotomic(d).degree()
    acc = {}
    for e, c in f.coeffs.items():
        key = e[:i] + e[i + 1:]
        vec = acc.setdefault(key, [0] * deg)
        if deg == 0:
            continue
        for j, p in enumerate(table[e[i]]):
            vec[j] += c * p
    return rest_vars, {k: CyclotomicElem(d, v) for k, v in acc.items()}


def root_of_unity_rational(f, d, qvar="q"):
    """Like eval_at_root_of_unity but demands a result in Q[rest]."""
    rest_vars, vals = eval_at_root_of_unity(f, d, qvar)
    out = {}
    for key, elem in vals.items():
        c = elem.rational()
        if c != 0:
            out[key] = c
    return Poly(rest_vars, out)


# -- palindromicity / unimodality toolkit --------------------------------


def _as_center(center):
    c2 = Fraction(center) * 2
    if c2.denominator != 1:
        raise ValueError("center must be a half-integer")
    return int(c2)


def is_palindromic(f, center):
    """a_j == a_(N-j) for all j, where N = 2*center."""
    n2 = _as_center(center)
    if f.is_zero():
        return True
    if len(f.variables) != 1:
        raise ValueError("palindromicity is a univariate test")
    coeffs = f.coeff_list()
    if len(coeffs) - 1 > n2:
        return False
    coeffs += [0] * (n2 + 1 - len(coeffs))
    return coeffs == coeffs[::-1]


def is_positive_unimodal(f):
    """Nonnegative coefficients rising to a peak then falling; exact."""
    if f.is_zero():
        return True
    coeffs = f.coeff_list()
    if any(c < 0 for c in coeffs):
        return False
    lo = 0
    while coeffs[lo] == 0:
        lo += 1
    hi = len(coeffs) - 1
    while coeffs[hi] == 0:
        hi -= 1
    # no internal zeros and a single peak
    window = coeffs[lo:hi + 1]
    if any(c == 0 for c in window):
        return False
    k = 0
    while k + 1 < len(window) and window[k] <= window[k + 1]:
        k += 1
    return all(window[j] >= window[j + 1] for j in range(k, len(window) - 1))


def natural_center(f):
    """(min degree + max degree)/2 of a nonzero univariate polynomial."""
    exps = [e[0] for e in f.coeffs]
    return Fraction(min(exps) + max(exps), 2)


def combine_unimodal(pairs):
    """Certification per the sum-of-products criterion.

    pairs: iterable of (X_i, Y_i) where X_i is any b-positive element
    (only checked for being nonzero here) and Y_i is a univariate Poly.
    Certified when every Y_i is positive, unimodal, and palindromic with
    one common center; otherwise not certified by this criterion.
    """
    pairs = list(pairs)
    centers = set()
    for _, y in pairs:
        if y.is_zero():
            raise ValueError("Y factors must be nonzero")
        c = natural_center(y)
        if not (is_positive_unimodal(y) and is_palindromic(y, c)):
            return {"certified": False, "center": None,
                    "reason": "a Y factor is not positive-unimodal-palindromic"}
        centers.add(c)
    if len(centers) > 1:
        return {"certified": False, "center": None,
                "reason": f"centers differ: {sorted(centers)}"}
    center = centers.pop() if centers else None
    return {"certified": True, "center": center, "reason": "all factors share one center"}
