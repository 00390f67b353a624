"""Homogeneous quasisymmetric functions of one fixed degree, with
polynomial coefficients in t.

Two bases are supported: the monomial basis M_alpha, keyed by
compositions of n, and the fundamental basis F_{n,S}, keyed by subsets
of [n-1].  The fundamental functions here sum over weakly *decreasing*
maps with strict steps on S, so the M-expansion of F_{n,S} runs over the
compositions alpha whose reversed partial sums contain S.
"""

from functools import lru_cache

from .combinat import compositions as _compositions_gen


@lru_cache(maxsize=None)
def compositions(n):
    return tuple(_compositions_gen(n))
from .polyring import Poly, T_VARS, tpoly

__all__ = ["QSymT", "fundamental", "monomial_qsym"]


def _t(value):
    if isinstance(value, Poly):
        if value.variables != T_VARS:
            raise ValueError("coefficients must be polynomials in t")
        return value
    return Poly.constant(T_VARS, value)


def strict_positions(alpha):
    """T(alpha): the strict-step set of the weakly decreasing word whose
    run lengths, read from the largest value down, reverse alpha."""
    out, total = [], 0
    for part in reversed(alpha):
        total += part
        out.append(total)
    return frozenset(out[:-1])


def _composition_of_set(S, n):
    """The composition alpha of n with strict_positions(alpha) == S."""
    cuts = sorted(S)
    rev = []
    prev = 0
    for c in cuts:
        rev.append(c - prev)
        prev = c
    rev.append(n - prev)
    return tuple(reversed(rev))


class QSymT:
    """Homogeneous quasisymmetric function of degree n over Z[t]."""

    def __init__(self, n, basis, coeffs):
        if basis not in ("M", "F"):
            raise ValueError("basis must be 'M' or 'F'")
        self.n = n
        self.basis = basis
        clean = {}
        for key, val in coeffs.items():
            val = _t(val)
            if val.is_zero():
                continue
            if basis == "M":
                key = tuple(key)
                if sum(key) != n or any(p <= 0 for p in key):
                    raise ValueError(f"{key} is not a composition of {n}")
            else:
                key = frozenset(key)
                if key and not key <= set(range(1, n)):
                    raise ValueError("F index must be a subset of [n-1]")
            clean[key] = clean.get(key, tpoly({})) + val
        self.coeffs = {k: v for k, v in clean.items() if not v.is_zero()}

    @classmethod
    def zero(cls, n, basis="M"):
        return cls(n, basis, {})

    def __add__(self, other):
        if not isinstance(other, QSymT):
            return NotImplemented
        if self.n != other.n:
            raise ValueError("degrees differ")
        other = other.to_basis(self.basis)
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, tpoly({})) + v
        return QSymT(self.n, self.basis, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = _t(c)
        return QSymT(self.n, self.basis, {k: v * c for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, QSymT):
            a = self.to_basis("M")
            b = other.to_basis("M")
            out = {}
            for ka, va in a.coeffs.items():
                for kb, vb in b.coeffs.items():
                    c = va * vb
                    for gamma in _quasi_shuffles(ka, kb):
                        out[gamma] = out.get(gamma, tpoly({})) + c
            return QSymT(self.n + other.n, "M", out)
        return self.scale(other)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QSymT) or self.n != other.n:
            return False
        return self.to_basis("M").coeffs == other.to_basis("M").coeffs

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.to_basis("M").coeffs.items(),
                                          key=lambda kv: kv[0]))))

    def is_zero(self):
        return not self.coeffs

    def coefficient(self, key):
        if self.basis == "F":
            key = frozenset(key)
        else:
            key = tuple(key)
        return self.coeffs.get(key, tpoly({}))

    def to_basis(self, basis):
        if basis == self.basis:
            return self
        if basis == "M":
            out = {}
            for S, c in self.coeffs.items():
                for alpha in compositions(self.n):
                    if S <= strict_positions(alpha):
                        out[alpha] = out.get(alpha, tpoly({})) + c
            return QSymT(self.n, "M", out)
        # M -> F by inclusion-exclusion over supersets of the cut set
        out = {}
        full = set(range(1, self.n))
        for alpha, c in self.coeffs.items():
            S = strict_positions(alpha)
            free = sorted(full - S)
            for mask in range(1 << len(free)):
                extra = [free[i] for i in range(len(free)) if mask >> i & 1]
                T = S | set(extra)
                term = c if len(extra) % 2 == 0 else c * (-1)
                T = frozenset(T)
                out[T] = out.get(T, tpoly({})) + term
        return QSymT(self.n, "F", out)

    def omega(self):
        """The involution sending F_{n,S} to F_{n,[n-1]\\S}."""
        f = self.to_basis("F")
        full = frozenset(range(1, self.n))
        return QSymT(self.n, "F", {full - S: c for S, c in f.coeffs.items()})

    def rho(self):
        """The involution induced by reversing the variable order; on the
        monomial basis it reverses each composition."""
        m = self.to_basis("M")
        return QSymT(self.n, "M",
                     {tuple(reversed(a)): c for a, c in m.coeffs.items()})

    def symmetric_part(self):
        """The m-coefficient dictionary {partition: TPoly} if this
        function is symmetric, else None."""
        m = self.to_basis("M")
        out = {}
        for alpha in compositions(self.n):
            lam = tuple(sorted(alpha, reverse=True))
            c = m.coeffs.get(alpha, tpoly({}))
            if lam in out:
                if out[lam] != c:
                    return None
            else:
                out[lam] = c
        return {lam: c for lam, c in out.items() if not c.is_zero()}

    def is_symmetric(self):
        return self.symmetric_part() is not None

    def terms(self):
        """Deterministically sorted (key, TPoly) pairs."""
        if self.basis == "F":
            return sorted(((tuple(sorted(S)), c) for S, c in self.coeffs.items()),
                          key=lambda kv: kv[0])
        return sorted(self.coeffs.items(), key=lambda kv: kv[0])

    def __repr__(self):
        bits = []
        for key, c in self.terms():
            label = f"F[{list(key)}]" if self.basis == "F" else f"M{list(key)}"
            bits.append(f"({c.render()})*{label}")
        return " + ".join(bits) if bits else "0"


def _quasi_shuffles(alpha, beta):
    if not alpha:
        yield beta
        return
    if not beta:
        yield alpha
        return
    for rest in _quasi_shuffles(alpha[1:], beta):
        yield (alpha[0],) + rest
    for rest in _quasi_shuffles(alpha, beta[1:]):
        yield (beta[0],) + rest
    for rest in _quasi_shuffles(alpha[1:], beta[1:]):
        yield (alpha[0] + beta[0],) + rest


def fundamental(n, S, coeff=1):
    return QSymT(n, "F", {frozenset(S): _t(coeff)})


def monomial_qsym(alpha, coeff=1):
    alpha = tuple(alpha)
    return QSymT(sum(alpha), "M", {alpha: _t(coeff)})
