"""Symmetric functions of one fixed degree with Z[t] coefficients.

Bases m, e, h, s, p.  Everything routes through the monomial basis: the
expansion of e/h/p basis elements into m comes from multiplying out
honest polynomials in n variables, and s comes from counting
semistandard tableaux.  The inverse transitions are cached
Fraction-exact matrix inverses.
"""

from fractions import Fraction
from itertools import permutations as _perms

from functools import lru_cache

from .combinat import partitions as _partitions_gen, z_partition


@lru_cache(maxsize=None)
def partitions(n):
    return tuple(_partitions_gen(n))
from .polyring import Poly, T_VARS, tpoly
from .qsymlib import QSymT

__all__ = ["SymT", "sym_basis_element", "schur_to_power", "kostka",
           "mn_character", "conjugate"]

BASES = ("m", "e", "h", "s", "p")


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def _t(value):
    if isinstance(value, Poly):
        if value.variables != T_VARS:
            raise ValueError("coefficients must be polynomials in t")
        return value
    return Poly.constant(T_VARS, value)


def _poly_mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            out[key] = out.get(key, 0) + ca * cb
    return {k: v for k, v in out.items() if v}


def _gen_e(k, n):
    out = {}
    for mask in range(1 << n):
        if bin(mask).count("1") == k:
            out[tuple(mask >> i & 1 for i in range(n))] = 1
    return out


def _gen_h(k, n):
    out = {}

    def rec(i, left, acc):
        if i == n - 1:
            out[tuple(acc + [left])] = 1
            return
        for a in range(left + 1):
            rec(i + 1, left - a, acc + [a])

    rec(0, k, [])
    return out


def _gen_p(k, n):
    out = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        out[tuple(e)] = 1
    return out


def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        return 0
    remaining = list(mu)
    rows = [[0] * w for w in lam]
    cells = [(r, c) for r, w in enumerate(lam) for c in range(w)]

    def rec(k):
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        for v in range(1, len(mu) + 1):
            if remaining[v - 1] == 0:
                continue
            if c > 0 and rows[r][c - 1] > v:
                continue
            if r > 0 and rows[r - 1][c] >= v:
                continue
            rows[r][c] = v
            remaining[v - 1] -= 1
            total += rec(k + 1)
            remaining[v - 1] += 1
        return total

    return rec(0)


def _mn_char(lam, nu):
    """Irreducible character value chi^lam(nu) by rim-hook recursion on
    beta numbers."""
    if not nu:
        return 1 if not lam else 0
    k = nu[0]
    rest = nu[1:]
    betas = [lam[i] + len(lam) - 1 - i for i in range(len(lam))] if lam else []
    total = 0
    bset = set(betas)
    for i, b in enumerate(betas):
        if b - k < 0 or b - k in bset:
            continue
        new = sorted((x for x in betas if x != b), reverse=True)
        new.append(b - k)
        new.sort(reverse=True)
        height = new.index(b - k) - i  # rows crossed by the hook
        mu = tuple(new[j] - (len(new) - 1 - j) for j in range(len(new)))
        mu = tuple(p for p in mu if p > 0)
        sign = -1 if height % 2 else 1
        total += sign * _mn_char(mu, rest)
    return total


def mn_character(lam, nu):
    return _mn_char(tuple(lam), tuple(nu))


def schur_to_power(lam):
    """Independent route: s_lam = sum_nu z_nu^{-1} chi^lam(nu) p_nu."""
    lam = tuple(lam)
    n = sum(lam)
    return {nu: Fraction(mn_character(lam, nu), z_partition(nu))
            for nu in partitions(n) if mn_character(lam, nu) != 0}


_M_EXPANSIONS = {}
_INVERSES = {}


def _expand_to_m(basis, lam, n):
    """Coefficients {mu: int or Fraction} of m_mu in the basis element."""
    key = (basis, lam)
    if key in _M_EXPANSIONS:
        return _M_EXPANSIONS[key]
    if basis == "m":
        out = {lam: 1}
    elif basis == "s":
        out = {mu: kostka(lam, mu) for mu in partitions(n)}
        out = {mu: c for mu, c in out.items() if c}
    else:
        gen = {"e": _gen_e, "h": _gen_h, "p": _gen_p}[basis]
        poly = {(0,) * n: 1}
        for part in lam:
            poly = _poly_mul(poly, gen(part, n))
        out = {}
        for mu in partitions(n):
            exp = tuple(mu) + (0,) * (n - len(mu))
            if exp in poly:
                out[mu] = poly[exp]
    _M_EXPANSIONS[key] = out
    return out


def _solve(matrix, vector):
    """Solve matrix * x = vector exactly over Fractions."""
    size = len(vector)
    aug = [[Fraction(matrix[r][c]) for c in range(size)] + [vector[r]]
           for r in range(size)]
    for col in range(size):
        pivot = next(r for r in range(col, size) if aug[r][col] != 0)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return [row[size] for row in aug]


def _transition_matrix(basis, n):
    """Matrix whose column lam gives basis element lam in m coordinates."""
    parts = partitions(n)
    index = {lam: i for i, lam in enumerate(parts)}
    size = len(parts)
    mat = [[0] * size for _ in range(size)]
    for j, lam in enumerate(parts):
        for mu, c in _expand_to_m(basis, lam, n).items():
            mat[index[mu]][j] = c
    return parts, mat


class SymT:
    """Homogeneous symmetric function of degree n over Z[t] (coefficients
    may be rational in the p basis)."""

    def __init__(self, n, basis, coeffs):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        self.n = n
        self.basis = basis
        clean = {}
        for lam, val in coeffs.items():
            lam = tuple(lam)
            if sum(lam) != n or list(lam) != sorted(lam, reverse=True) or \
                    any(p <= 0 for p in lam):
                raise ValueError(f"{lam} is not a partition of {n}")
            val = _t(val)
            if not val.is_zero():
                clean[lam] = clean.get(lam, tpoly({})) + val
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def zero(cls, n, basis="m"):
        return cls(n, basis, {})

    def coefficient(self, lam):
        return self.coeffs.get(tuple(lam), tpoly({}))

    def is_zero(self):
        return not self.coeffs

    def scale(self, c):
        c = _t(c)
        return SymT(self.n, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __add__(self, other):
        if not isinstance(other, SymT):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degrees differ")
        other = other.convert(self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, tpoly({})) + v
        return SymT(self.n, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __eq__(self, other):
        if not isinstance(other, SymT) or self.n != other.n:
            return False
        return self.convert("m").coeffs == other.convert("m").coeffs

    def __hash__(self):
        m = self.convert("m")
        return hash((self.n, tuple(sorted(m.coeffs.items(), key=lambda kv: kv[0]))))

    def _m_vector(self):
        parts = partitions(self.n)
        out = {mu: tpoly({}) for mu in parts}
        for lam, c in self.coeffs.items():
            for mu, k in _expand_to_m(self.basis, lam, self.n).items():
                out[mu] = out[mu] + c * k
        return parts, out

    def convert(self, basis):
        if basis == self.basis:
            return self
        parts, mvec = self._m_vector()
        if basis == "m":
            return SymT(self.n, "m", mvec)
        key = (basis, self.n)
        if key not in _INVERSES:
            _INVERSES[key] = _transition_matrix(basis, self.n)
        parts, mat = _INVERSES[key]
        # solve one linear system per t-power by stacking the slices
        slices = {}
        for mu, c in mvec.items():
            for (e,), coef in c.coeffs.items():
                slices.setdefault(e, {})[mu] = coef
        result = {lam: {} for lam in parts}
        for e, vec in slices.items():
            rhs = [Fraction(vec.get(mu, 0)) for mu in parts]
            sol = _solve(mat, rhs)
            for lam, val in zip(parts, sol):
                if val != 0:
                    result[lam][e] = val if val.denominator != 1 else int(val)
        return SymT(self.n, basis,
                    {lam: tpoly(spec) for lam, spec in result.items() if spec})

    def omega(self):
        """The standard involution: omega h_lam = e_lam."""
        h = self.convert("h")
        return SymT(self.n, "e", h.coeffs)

    def to_qsym(self):
        """Embed into QSymT via m_lam = sum of M_alpha over distinct
        rearrangements alpha of lam."""
        m = self.convert("m")
        out = {}
        for lam, c in m.coeffs.items():
            for alpha in set(_perms(lam)):
                out[alpha] = out.get(alpha, tpoly({})) + c
        return QSymT(self.n, "M", out)

    def positivity_report(self):
        """Per-coefficient nonnegativity and unimodality in t."""
        detail = {}
        for lam in sorted(self.coeffs):
            c = self.coeffs[lam]
            detail[lam] = {
                "nonnegative": all(v >= 0 for v in c.coeffs.values()),
                "unimodal": _unimodal(c),
            }
        return {
            "basis": self.basis,
            "positive": all(d["nonnegative"] for d in detail.values()),
            "unimodal": all(d["unimodal"] for d in detail.values()),
            "detail": detail,
        }

    def terms(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def __repr__(self):
        bits = [f"({c.render()})*{self.basis}{list(lam)}"
                for lam, c in self.terms()]
        return " + ".join(bits) if bits else "0"


def _unimodal(c):
    vals = c.coeff_list()
    while vals and vals[0] == 0:
        vals.pop(0)
    while vals and vals[-1] == 0:
        vals.pop()
    rising = True
    for a, b in zip(vals, vals[1:]):
        if rising and b < a:
            rising = False
        elif not rising and b > a:
            return False
    return True


def sym_basis_element(basis, lam, coeff=1):
    lam = tuple(sorted(lam, reverse=True))
    return SymT(sum(lam), basis, {lam: _t(coeff)})
