"""Principal specializations, generalized (q,p)-Eulerian polynomials,
Rawlings statistics, root-of-unity evaluations, Smirnov word
enumerators, and the truncated-series identities.
"""

from fractions import Fraction
from itertools import combinations, permutations as _perms, product

from .combinat import perm_stats, permutations
from .polyring import (Poly, QPT_VARS, QT_VARS, T_VARS, gaussian_binomial,
                       gaussian_multinomial, is_palindromic, qtpoly, qptpoly,
                       root_of_unity_rational, t_factorial, t_number, tpoly)
from .posetlib import Nuio, n_p_mu, n_p_mu_tilde, p_n_r
from .qsymlib import QSymT
from .symlib import SymT
from .cqfcore import (cqf_fundamental, eulerian_polynomial, smirnov_closed,
                      x_symmetric)

__all__ = [
    "ps_stable", "ps_m", "a_g", "q_eulerian", "q_eulerian_fix", "rawlings",
    "a_n_closed", "special_r_q_closed", "mahonian_check", "specialization_check",
    "root_of_unity_suite", "q_unimodality_report", "smirnov", "Series",
    "EPoly", "path_series_check", "path_recurrence_series", "q_eulerian_series_check",
]


def _q_factorial(n):
    out = qtpoly(1)
    for i in range(1, n + 1):
        out = out * t_number(i, "q").lift(QT_VARS)
    return out


def ps_stable(x):
    """(q;q)_n times the stable principal specialization of a degree-n
    quasisymmetric function, computed through the fundamental basis:
    (q;q)_n ps(F_{n,S}) = q^{sum S}."""
    f = x.to_basis("F")
    out = qtpoly(0)
    for S, c in f.coeffs.items():
        out = out + c.lift(QT_VARS) * Poly.var(QT_VARS, "q", sum(S)) \
            if S else out + c.lift(QT_VARS)
    return out


def ps_m(x, m):
    """The principal specialization x(1, q, ..., q^{m-1}), through the
    monomial basis."""
    mon = x.to_basis("M")
    out = qtpoly(0)
    for alpha, c in mon.coeffs.items():
        k = len(alpha)
        if k > m:
            continue
        acc = {}
        for idxs in combinations(range(m), k):
            e = sum(a * i for a, i in zip(alpha, idxs))
            acc[e] = acc.get(e, 0) + 1
        qpart = Poly(QT_VARS, {(e, 0): v for e, v in acc.items()})
        out = out + c.lift(QT_VARS) * qpart
    return out


def a_g(P, graph=None):
    """A_G(q,p,t) = sum over S_n of q^{maj_P} p^{des_P} t^{inv_G}."""
    if isinstance(P, Nuio):
        P = P.poset()
    if graph is None:
        graph = P.inc_graph()
    less = P.less
    edges = graph.edge_set
    n = P.n
    out = {}
    for sigma in _perms(range(1, n + 1)):
        pos = {v: i for i, v in enumerate(sigma)}
        invs = sum(1 for a, b in edges if pos[a] > pos[b])
        des = [i for i in range(1, n) if (sigma[i], sigma[i - 1]) in less]
        key = (sum(des), len(des), invs)
        out[key] = out.get(key, 0) + 1
    return Poly(QPT_VARS, out)


def q_eulerian(n):
    """A_n(q,t) = sum over S_n of q^{maj-exc} t^{exc}."""
    out = {}
    for sigma in permutations(n):
        st = perm_stats(sigma)
        key = (st["maj"] - st["exc"], st["exc"])
        out[key] = out.get(key, 0) + 1
    return Poly(QT_VARS, out)


def q_eulerian_fix(n):
    """The fixed-point refinement: sum of q^{maj-exc} r^{fix} t^{exc},
    in variables (q, r, t)."""
    out = {}
    for sigma in permutations(n):
        st = perm_stats(sigma)
        key = (st["maj"] - st["exc"], st["fix"], st["exc"])
        out[key] = out.get(key, 0) + 1
    return Poly(("q", "r", "t"), out)


def rawlings(n, r):
    """A_n^{(r)}(q,t) = sum of q^{maj_{>=r}} t^{inv_{<r}}."""
    out = {}
    for sigma in permutations(n):
        inv_lt = sum(1 for i in range(n) for j in range(i + 1, n)
                     if 0 < sigma[i] - sigma[j] < r)
        maj_ge = sum(i + 1 for i in range(n - 1)
                     if sigma[i] - sigma[i + 1] >= r)
        key = (maj_ge, inv_lt)
        out[key] = out.get(key, 0) + 1
    return Poly(QT_VARS, out)


def a_n_closed(n):
    """A_n(q,t) as the closed double sum over compositions of n+1 with
    parts at least 2: q-multinomial [n; k_1-1, k_2, ..., k_m] times
    t^{m-1} prod [k_i - 1]_t."""
    out = qtpoly(0)

    def rec(left, ks):
        nonlocal out
        if left == 0:
            term = gaussian_multinomial(n, (ks[0] - 1,) + ks[1:], "q")
            term = term.lift(QT_VARS) * Poly.var(QT_VARS, "t", len(ks) - 1)
            for k in ks:
                term = term * t_number(k - 1).lift(QT_VARS)
            out = out + term
            return
        for k in range(2, left + 1):
            rec(left - k, ks + (k,))

    rec(n + 1, ())
    return out


def special_r_q_closed(n, r):
    """(q;q)_n ps(omega X_{G_{n,r}}) for the rows with closed forms:
    apply the q-multinomial specialization of h to Table 1."""
    from .cqfcore import special_r_closed
    e_exp = special_r_closed(n, r)
    out = qtpoly(0)
    for lam, c in e_exp.coeffs.items():
        out = out + c.lift(QT_VARS) * gaussian_multinomial(n, lam, "q").lift(QT_VARS)
    return out


def mahonian_check(P):
    """Compare sum of q^{maj_P + inv_G} with [n]_q!."""
    if isinstance(P, Nuio):
        P = P.poset()
    graph = P.inc_graph()
    less = P.less
    n = P.n
    acc = {}
    for sigma in _perms(range(1, n + 1)):
        pos = {v: i for i, v in enumerate(sigma)}
        invs = sum(1 for a, b in graph.edge_set if pos[a] > pos[b])
        maj = sum(i for i in range(1, n) if (sigma[i], sigma[i - 1]) in less)
        acc[maj + invs] = acc.get(maj + invs, 0) + 1
    total = Poly(("q",), {(e,): v for e, v in acc.items()})
    target = t_factorial(n, "q")
    return {"holds": total == target, "sum": total, "target": target}


def specialization_check(P, extra=2):
    """Both specialization identities for an arbitrary poset on [n]:
    (q;q)_n ps(omega X) = A_G(q,1,t), and the (p;q)_{n+1}-cleared
    generating function of ps_m(omega X) equals A_G(q,p,t) (checked as a
    truncated p-series through p^{n+extra})."""
    if isinstance(P, Nuio):
        P = P.poset()
    n = P.n
    wx = cqf_fundamental(P)
    A = a_g(P)
    stable = ps_stable(wx)
    ok1 = stable == A.subs("p", 1).drop_var("p")

    M = n + 1 + extra
    series = [ps_m(wx, m) for m in range(1, M + 1)]  # coeff of p^{m-1}
    # (p;q)_{n+1} = prod_{j=1}^{n+1} (1 - p q^{j-1}), expanded in p
    pochhammer = [qtpoly(1)]
    for j in range(1, n + 2):
        nxt = [qtpoly(0)] * (len(pochhammer) + 1)
        for i, c in enumerate(pochhammer):
            nxt[i] = nxt[i] + c
            nxt[i + 1] = nxt[i + 1] - c * Poly.var(QT_VARS, "q", j - 1)
        pochhammer = nxt
    ok2 = True
    for k in range(M):
        lhs = qtpoly(0)
        for i in range(min(k, n + 1) + 1):
            if k - i < len(series):
                lhs = lhs + pochhammer[i] * series[k - i]
        rhs_q = A.slices("p").get(k, Poly(("q", "t"), {}))
        if lhs != rhs_q.lift(QT_VARS):
            ok2 = False
            break
    return {"holds": ok1 and ok2, "stable_ok": ok1, "finite_ok": ok2}


def root_of_unity_suite(nuio, d):
    """Evaluate A_G(q,1,t) at a primitive d-th root of unity (exactly,
    by reduction mod the cyclotomic polynomial) and compare with the
    N_{P,d^m} enumerator, the [d]_t^m N~ enumerator, and the
    coefficient of z_{d^m}^{-1} p_{d^m} in omega X; for P_{n,2} also
    against [d]_t^m A_m(t)."""
    n = nuio.n
    if n % d != 0:
        raise ValueError("d must divide n")
    m = n // d
    mu = (d,) * m
    P = nuio.poset()
    graph = P.inc_graph()

    A1 = a_g(P).subs("p", 1).drop_var("p")
    at_root = root_of_unity_rational(A1, d, "q")

    acc = {}
    for _, invs in n_p_mu(P, mu, graph):
        acc[invs] = acc.get(invs, 0) + 1
    n_route = tpoly(acc)

    acc = {}
    for _, invs in n_p_mu_tilde(P, mu, graph):
        acc[invs] = acc.get(invs, 0) + 1
    tilde_route = tpoly(acc)
    for _ in range(m):
        tilde_route = tilde_route * t_number(d)

    from .combinat import z_partition
    p_coeff = x_symmetric(P).omega().convert("p").coefficient(mu)
    p_route = p_coeff * z_partition(mu)

    report = {
        "value": at_root,
        "n_route": n_route,
        "tilde_route": tilde_route,
        "p_route": p_route,
        "agree": at_root == n_route == tilde_route == p_route,
    }
    if n >= 2 and nuio == p_n_r(n, 2):
        closed = eulerian_polynomial(m)
        for _ in range(m):
            closed = closed * t_number(d)
        report["path_closed"] = closed
        report["agree"] = report["agree"] and at_root == closed
    return report


def _slice_deltas(f):
    """t-slices of a (q,p,t) or (q,t) polynomial as a dense list."""
    slices = f.slices("t")
    top = max(slices) if slices else 0
    zero = next(iter(slices.values())) * 0 if slices else None
    return [slices.get(j, zero) for j in range(top + 1)]


def _qp_unimodal(f):
    """Coefficientwise unimodality of the t-slices: differences toward
    the middle have nonnegative coefficients."""
    vals = _slice_deltas(f)
    k = len(vals)
    mid = (k - 1) // 2
    for j in range(mid):
        d = vals[j + 1] - vals[j]
        if any(c < 0 for c in d.coeffs.values()):
            return False
    for j in range((k - 1 + 1) // 2, k - 1):
        d = vals[j] - vals[j + 1]
        if any(c < 0 for c in d.coeffs.values()):
            return False
    return True


def _t_palindromic_multi(f, top):
    slices = f.slices("t")
    zero = qtpoly(0)
    for j in range(top + 1):
        a = slices.get(j)
        b = slices.get(top - j)
        if (a is None) != (b is None):
            return False
        if a is not None and a != b:
            return False
    return True


def q_unimodality_report(P):
    """Palindromicity and (q,p)-unimodality verdicts for A_G(q,p,t) and
    A_G(q,1,t)."""
    if isinstance(P, Nuio):
        nuio = P
        P = P.poset()
    else:
        nuio = None
    edges = len(P.inc_graph().edges)
    A = a_g(P)
    A1 = A.subs("p", 1).drop_var("p")
    Ap = A.subs("q", 1).drop_var("q")
    return {
        "a_qpt_palindromic": _t_palindromic_multi(A, edges),
        "a_1pt_palindromic": _t_palindromic_multi(Ap, edges),
        "a_qpt_unimodal": _qp_unimodal(A),
        "a_q1t_unimodal": _qp_unimodal(A1),
    }


def smirnov_brute(n):
    """The Smirnov word descent enumerator W_n by direct enumeration
    over an n-letter alphabet, as a QSymT in the M basis."""
    out = {}
    for w in product(range(1, n + 1), repeat=n):
        if any(w[i] == w[i + 1] for i in range(n - 1)):
            continue
        content = [0] * n
        for letter in w:
            content[letter - 1] += 1
        k = max(i + 1 for i in range(n) if content[i])
        if any(content[i] == 0 for i in range(k)):
            continue
        alpha = tuple(content[:k])
        des = sum(1 for i in range(n - 1) if w[i] > w[i + 1])
        out[alpha] = out.get(alpha, tpoly({})) + tpoly({des: 1})
    return QSymT(n, "M", out)


def smirnov(n):
    """W_n(x,t) in the e basis by three routes: brute enumeration, the
    closed-form composition sum, and extraction from the reciprocal
    series; all must agree."""
    brute = smirnov_brute(n)
    part = brute.symmetric_part()
    if part is None:
        raise AssertionError("Smirnov enumerator is not symmetric")
    route1 = SymT(n, "m", part).convert("e")
    route2 = smirnov_closed(n)
    route3 = path_recurrence_series(n)[n]
    if not (route1 == route2 and _epoly_eq(route3, route2)):
        raise AssertionError(f"smirnov routes disagree at n={n}")
    return route2


# --- truncated series over a commutative coefficient ring ---------------

class Series:
    """Truncated power series in z with coefficients in any ring
    providing +, -, * and a one/zero supplied by the caller."""

    def __init__(self, coeffs, order, zero):
        self.order = order
        self.zero = zero
        self.coeffs = list(coeffs) + [zero] * (order + 1 - len(coeffs))

    def __add__(self, other):
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)],
                      self.order, self.zero)

    def __sub__(self, other):
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)],
                      self.order, self.zero)

    def __mul__(self, other):
        out = [self.zero] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                if i + j > self.order:
                    break
                out[i + j] = out[i + j] + a * b
        return Series(out, self.order, self.zero)

    def inverse(self, one):
        """Multiplicative inverse; constant term must equal one."""
        if self.coeffs[0] != one:
            raise ValueError("inversion requires constant term 1")
        inv = [one] + [self.zero] * self.order
        for k in range(1, self.order + 1):
            acc = self.zero
            for i in range(1, k + 1):
                acc = acc + self.coeffs[i] * inv[k - i]
            inv[k] = self.zero - acc
        return Series(inv, self.order, self.zero)


class EPoly:
    """Element of the polynomial ring Z[t][e_1, e_2, ...]: a dict from
    sorted e-index partitions to TPoly coefficients."""

    def __init__(self, coeffs=None):
        self.coeffs = {}
        for k, v in (coeffs or {}).items():
            v = tpoly(v)
            if not v.is_zero():
                self.coeffs[tuple(sorted(k, reverse=True))] = v

    @classmethod
    def e(cls, k, coeff=1):
        return cls({(k,): tpoly(coeff)}) if k else cls({(): tpoly(coeff)})

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, tpoly({})) + v
        return EPoly(out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, tpoly({})) - v
        return EPoly(out)

    def __mul__(self, other):
        if isinstance(other, EPoly):
            out = {}
            for ka, va in self.coeffs.items():
                for kb, vb in other.coeffs.items():
                    key = tuple(sorted(ka + kb, reverse=True))
                    c = va * vb
                    out[key] = out.get(key, tpoly({})) + c
            return EPoly(out)
        return EPoly({k: v * other for k, v in self.coeffs.items()})

    def __eq__(self, other):
        return isinstance(other, EPoly) and self.coeffs == other.coeffs

    def __repr__(self):
        return " + ".join(f"({v.render()})*e{list(k)}"
                          for k, v in sorted(self.coeffs.items())) or "0"


def _epoly_zero():
    return EPoly()


def _epoly_one():
    return EPoly({(): 1})


def _epoly_eq(ep, sym_e):
    return ep.coeffs == sym_e.coeffs


def _sym_to_epoly(sym_e):
    return EPoly(dict(sym_e.coeffs))


def path_recurrence_series(order):
    """Coefficients of 1 + (sum [n]_t e_n z^n) / (1 - t sum [n-1]_t e_n
    z^n) through z^order, each an EPoly."""
    zero, one = _epoly_zero(), _epoly_one()
    num = Series([zero] + [EPoly.e(k) * t_number(k)
                           for k in range(1, order + 1)], order, zero)
    den = Series([one] + [zero] + [EPoly.e(k) * (t_number(k - 1) * tpoly({1: -1}))
                                   for k in range(2, order + 1)], order, zero)
    total = Series([one], order, zero) + num * den.inverse(one)
    return total.coeffs


def path_series_check(order):
    """Verify (1 + sum_k X_{G_k} z^k)(E(zt) - t E(z)) = (1-t)E(z)
    through z^order, using the closed-form X of the path."""
    zero, one = _epoly_zero(), _epoly_one()
    xs = Series([one] + [_sym_to_epoly(smirnov_closed(k))
                         for k in range(1, order + 1)], order, zero)
    e_z = Series([one] + [EPoly.e(k) for k in range(1, order + 1)], order, zero)
    e_zt = Series([one] + [EPoly.e(k) * tpoly({k: 1})
                           for k in range(1, order + 1)], order, zero)
    minus_t = EPoly({(): tpoly({1: -1})})
    e_z_t = Series([c * minus_t for c in e_z.coeffs], order, zero)
    lhs = xs * (e_zt + e_z_t)
    one_minus_t = EPoly({(): tpoly([1, -1])})
    rhs = Series([c * one_minus_t for c in e_z.coeffs], order, zero)
    return all(a == b for a, b in zip(lhs.coeffs, rhs.coeffs))


def q_eulerian_series_check(order):
    """Verify the exponential generating identity for the fixed-point
    q-Eulerian polynomials through z^order by clearing [n]_q!:
    sum_k qbinom(N,k) A_k(q,r,t) c_{N-k} = (1-t) r^N with c_0 = 1-t and
    c_j = t^j - t."""
    vars3 = ("q", "r", "t")
    one = Poly.constant(vars3, 1)
    t = Poly.var(vars3, "t")
    r = Poly.var(vars3, "r")
    a = [one] + [q_eulerian_fix(k) for k in range(1, order + 1)]
    for N in range(order + 1):
        lhs = Poly(vars3, {})
        for k in range(N + 1):
            j = N - k
            c = one - t if j == 0 else t ** j - t
            lhs = lhs + gaussian_binomial(N, k, "q").lift(vars3) * a[k] * c
        if lhs != (one - t) * r ** N:
            return False
    return True
