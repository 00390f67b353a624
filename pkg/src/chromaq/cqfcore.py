"""All routes to the chromatic quasisymmetric function X_G(x,t) and its
expansions: brute-force coloring enumeration, the permutation formula for
omega X in the fundamental basis, the P-tableau formula in the Schur
basis, the power-sum formulas, closed-form products, and the
identity/conjecture checkers.
"""

from fractions import Fraction
from itertools import permutations as _perms

from .combinat import des_set, inv, perm_stats, permutations, z_partition
from .qsymlib import compositions
from .symlib import partitions
from .polyring import (Poly, is_palindromic, is_positive_unimodal, tpoly,
                       t_factorial, t_number)
from .posetlib import (Graph, Nuio, acyclic_orientations, n_p_mu,
                       n_p_mu_tilde, nuio_check, p_tableaux)
from .qsymlib import QSymT, fundamental
from .symlib import SymT, sym_basis_element

__all__ = [
    "RouteDisagreement", "cqf_brute", "cqf_fundamental", "cqf_schur",
    "x_symmetric", "three_route", "closed_forms", "p_expansion",
    "eulerian_polynomial", "path_p_closed", "two_param_closed", "special_r_closed",
    "smirnov_closed", "check_disjoint_union", "check_rho",
    "check_acyclic_orientations", "check_palindromic", "identity_checks",
    "conjecture_report",
]

BRUTE_BOUND = 9
PERM_BOUND = 9


class RouteDisagreement(AssertionError):
    """Two computation routes disagreed; carries a structured diff."""

    def __init__(self, route_a, route_b, key, value_a, value_b):
        self.route_a = route_a
        self.route_b = route_b
        self.key = key
        self.value_a = value_a
        self.value_b = value_b
        super().__init__(
            f"{route_a} vs {route_b}: first difference at {key}: "
            f"{value_a.render()} != {value_b.render()}")


def _diff(name_a, a, name_b, b):
    """Raise RouteDisagreement at the first differing key of two QSymT
    (compared in the M basis) or two SymT (in the m basis)."""
    if isinstance(a, SymT):
        ca, cb = a.convert("m").coeffs, b.convert("m").coeffs
    else:
        ca, cb = a.to_basis("M").coeffs, b.to_basis("M").coeffs
    if ca == cb:
        return
    for key in sorted(set(ca) | set(cb)):
        va = ca.get(key, tpoly({}))
        vb = cb.get(key, tpoly({}))
        if va != vb:
            raise RouteDisagreement(name_a, name_b, key, va, vb)


def cqf_brute(G, des=False, bound=BRUTE_BOUND):
    """X_G(x,t) from the definition: sum over proper colorings kappa of
    t^{asc(kappa)} x_kappa, accumulated in the monomial basis.

    An n-color window suffices: a degree-n quasisymmetric function is
    determined by its restriction to n variables.  With des=True the
    statistic des(kappa) is accumulated instead, producing the
    rho-image.
    """
    n = G.n
    if n > bound:
        raise ValueError(f"n = {n} exceeds the brute-force bound {bound}")
    nbrs = {v: [] for v in range(1, n + 1)}
    for a, b in G.edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    out = {}
    color = [0] * (n + 1)
    for alpha in compositions(n):
        k = len(alpha)
        remaining = list(alpha)
        acc = {}

        def rec(v, stat):
            if v > n:
                acc[stat] = acc.get(stat, 0) + 1
                return
            for c in range(1, k + 1):
                if remaining[c - 1] == 0:
                    continue
                delta = 0
                ok = True
                for u in nbrs[v]:
                    if u < v:
                        if color[u] == c:
                            ok = False
                            break
                        # properness rules out equality, so "not ascent"
                        # means descent here
                        if (color[u] < c) != des:
                            delta += 1
                if not ok:
                    continue
                color[v] = c
                remaining[c - 1] -= 1
                rec(v + 1, stat + delta)
                remaining[c - 1] += 1
            color[v] = 0

        rec(1, 0)
        if acc:
            out[alpha] = tpoly(acc)
    return QSymT(n, "M", out)


def cqf_fundamental(P, graph=None):
    """omega X_G as the permutation sum over S_n of t^{inv_G} F_{n,Des_P};
    valid for an arbitrary poset P on [n]."""
    if graph is None:
        graph = P.inc_graph()
    n = P.n
    if n > PERM_BOUND:
        raise ValueError(f"n = {n} exceeds the permutation-route bound")
    less = P.less
    edges = graph.edge_set
    out = {}
    for sigma in _perms(range(1, n + 1)):
        invs = 0
        for a, b in edges:
            pa = sigma.index(a)
            pb = sigma.index(b)
            if (pa < pb) != (a < b):
                invs += 1
        S = frozenset(i for i in range(1, n)
                      if (sigma[i], sigma[i - 1]) in less)
        cur = out.get(S)
        out[S] = (tpoly({invs: 1}) if cur is None
                  else cur + tpoly({invs: 1}))
    return QSymT(n, "F", out)


def cqf_x_fundamental(P, graph=None):
    """X_G itself via the permutation formula (omega applied afterwards)."""
    return cqf_fundamental(P, graph).omega()


def cqf_schur(P, graph=None):
    """X_G in the Schur basis as the P-tableau sum; P must be a natural
    unit interval order."""
    if isinstance(P, Nuio):
        P = P.poset()
    verdict = nuio_check(P)
    if not verdict["is_nuio"]:
        raise ValueError("the Schur route requires a natural unit "
                         f"interval order: {verdict['reason']}")
    if graph is None:
        graph = P.inc_graph()
    out = {}
    for lam in partitions(P.n):
        acc = {}
        for _, invs in p_tableaux(P, lam, graph):
            acc[invs] = acc.get(invs, 0) + 1
        if acc:
            out[lam] = tpoly(acc)
    return SymT(P.n, "s", out)


def x_symmetric(P, route="fundamental"):
    """X_inc(P) as a SymT in the m basis.  Raises if X is not symmetric."""
    if isinstance(P, Nuio):
        P = P.poset()
    if route == "brute":
        q = cqf_brute(P.inc_graph())
    elif route == "fundamental":
        q = cqf_x_fundamental(P)
    elif route == "schur":
        return cqf_schur(P).convert("m")
    else:
        raise ValueError(f"unknown route {route!r}")
    part = q.symmetric_part()
    if part is None:
        raise ValueError("X is not symmetric in x")
    return SymT(P.n, "m", part)


def three_route(nuio):
    """Check cqf_brute == permutation route == tableau route for a
    natural unit interval order; returns X as a QSymT in the M basis."""
    P = nuio.poset() if isinstance(nuio, Nuio) else nuio
    G = P.inc_graph()
    brute = cqf_brute(G)
    perm = cqf_x_fundamental(P)
    schur = cqf_schur(P).to_qsym()
    _diff("brute", brute, "fundamental", perm)
    _diff("brute", brute, "schur", schur)
    return brute


def _edge_counts(G):
    a = [0] * (G.n + 1)  # a_j = #{i > j adjacent to j}
    b = [0] * (G.n + 1)  # b_i = #{j < i adjacent to i}
    for u, v in G.edges:
        a[u] += 1
        b[v] += 1
    return a, b


def closed_forms(P):
    """The three closed-form products: the coefficient of s_{1^n}, the
    coefficient of z_{(n)}^{-1} p_n in omega X, and the coefficient of
    e_n (the last two are equal)."""
    G = P.inc_graph()
    n = G.n
    a, b = _edge_counts(G)
    s1n = tpoly(1)
    for j in range(1, n):
        s1n = s1n * t_number(1 + a[j])
    pn = t_number(n)
    for i in range(2, n + 1):
        pn = pn * t_number(b[i])
    return {"coeff_s_1n": s1n,
            "coeff_pn_over_n_in_omegaX": pn,
            "coeff_en": pn}


def p_expansion(P, route="N", graph=None):
    """omega X in the power-sum basis.

    route "N": coefficient of p_mu is z_mu^{-1} times the inv_G
    enumerator of N_{P,mu}.  route "tilde": z_mu^{-1} prod [mu_i]_t
    times the enumerator of the smaller class N~_{P,mu}.
    """
    if isinstance(P, Nuio):
        P = P.poset()
    if graph is None:
        graph = P.inc_graph()
    n = P.n
    out = {}
    for mu in partitions(n):
        if route == "N":
            acc = {}
            for _, invs in n_p_mu(P, mu, graph):
                acc[invs] = acc.get(invs, 0) + 1
            coeff = tpoly(acc)
        elif route == "tilde":
            acc = {}
            for _, invs in n_p_mu_tilde(P, mu, graph):
                acc[invs] = acc.get(invs, 0) + 1
            coeff = tpoly(acc)
            for part in mu:
                coeff = coeff * t_number(part)
        else:
            raise ValueError(f"unknown route {route!r}")
        if not coeff.is_zero():
            out[mu] = coeff * Fraction(1, z_partition(mu))
    return SymT(n, "p", out)


def eulerian_polynomial(m):
    """A_m(t) = sum over S_m of t^{exc(sigma)}."""
    acc = {}
    for sigma in permutations(m):
        e = perm_stats(sigma)["exc"]
        acc[e] = acc.get(e, 0) + 1
    return tpoly(acc)


def path_p_closed(n):
    """omega X for the path graph in the p basis: the coefficient of
    p_mu is z_mu^{-1} A_{l(mu)}(t) prod [mu_i]_t."""
    from fractions import Fraction
    out = {}
    for mu in partitions(n):
        coeff = eulerian_polynomial(len(mu))
        for part in mu:
            coeff = coeff * t_number(part)
        out[mu] = coeff * Fraction(1, z_partition(mu))
    return SymT(n, "p", out)


def two_param_closed(nuio):
    """Closed-form s- and e-expansions of X for m-sequences with
    m_1 >= 2 and m_i = n for i >= 3."""
    n = nuio.n
    m = nuio.mseq
    if n < 4:
        raise ValueError("formulas require n >= 4")
    if m[0] < 2 or any(m[i] != n for i in range(2, n - 1)):
        raise ValueError("requires m_1 >= 2 and m_i = n for i >= 3")
    m1, m2 = m[0], m[1]
    tpow = lambda k: tpoly({k: 1})
    D = tpow(m1 - 1) * t_number(n - m1) * t_number(m2 - 2) + \
        tpow(m2 - 2) * t_number(n - m2) * t_number(m1)
    E = tpow(m1 - 1) * t_number(n - 3) * t_number(n - m1) * t_number(m2 - 2) + \
        tpow(m2 - 2) * t_number(n - 1) * t_number(n - m2) * t_number(m1 - 2)
    b_one = t_number(m1) * t_number(m2 - 1) * t_factorial(n - 2)
    b_hook = t_factorial(n - 3) * D
    if m2 == n and m1 == n:
        # [n-m2]_t = 0 kills the product before [n-m1-1]_t can go negative
        b_two = tpoly(0)
    else:
        b_two = t_factorial(n - 4) * t_number(2) * t_number(n - m2) * \
            t_number(n - m1 - 1) * tpow(m1 + m2 - 4)
    c_n = t_number(n) * t_factorial(n - 3) * t_number(m1 - 1) * t_number(m2 - 2)
    c_hook = t_factorial(n - 4) * E
    s_exp = SymT(n, "s", {(1,) * n: b_one,
                          (2,) + (1,) * (n - 2): b_hook,
                          (2, 2) + (1,) * (n - 4): b_two})
    e_exp = SymT(n, "e", {(n,): c_n,
                          (n - 1, 1): c_hook,
                          (n - 2, 2): b_two})
    return {"s": s_exp, "e": e_exp}


def smirnov_closed(n):
    """The descent enumerator of Smirnov words (X of the path) in the e
    basis: sum over compositions (k_1,...,k_m) of n+1 with all k_i >= 2
    of e_{sort(k_1-1,k_2,...,k_m)} t^{m-1} prod [k_i-1]_t."""
    out = {}

    def rec(left, ks):
        if left == 0:
            lam = tuple(sorted((ks[0] - 1,) + ks[1:], reverse=True))
            coeff = tpoly({len(ks) - 1: 1})
            for k in ks:
                coeff = coeff * t_number(k - 1)
            out[lam] = out.get(lam, tpoly({})) + coeff
            return
        for k in range(2, left + 1):
            rec(left - k, ks + (k,))

    rec(n + 1, ())
    return SymT(n, "e", out)


def special_r_closed(n, r):
    """The e-basis expansion of X_{G_{n,r}} for r in {1, 2, n-2, n-1, n}."""
    if r == 1:
        return SymT(n, "e", {(1,) * n: tpoly(1)})
    if r == 2:
        return smirnov_closed(n)
    if r == n:
        return SymT(n, "e", {(n,): t_factorial(n)})
    if r == n - 1:
        return SymT(n, "e", {
            (n,): t_number(n) * t_number(n - 2) * t_factorial(n - 2),
            (n - 1, 1): tpoly({n - 2: 1}) * t_factorial(n - 2)})
    if r == n - 2:
        if n < 4:
            raise ValueError("r = n-2 row requires n >= 4")
        return SymT(n, "e", {
            (n,): t_number(n) * t_number(n - 3) ** 2 * t_factorial(n - 3),
            (n - 1, 1): tpoly({n - 3: 1}) * t_factorial(n - 4) *
                (t_number(2) * t_number(n - 3) ** 2 +
                 t_number(n - 1) * t_number(n - 4)),
            (n - 2, 2): tpoly({2 * n - 7: 1}) * t_number(2) * t_factorial(n - 4)})
    raise ValueError(f"no closed form for r = {r}, n = {n}")


def _shift_graph(G, offset):
    return [(a + offset, b + offset) for a, b in G.edges]


def check_disjoint_union(G1, G2):
    """X_{G1 + G2} = X_{G1} X_{G2} (product computed by quasi-shuffle)."""
    union = Graph(G1.n + G2.n, list(G1.edges) + _shift_graph(G2, G1.n))
    lhs = cqf_brute(union)
    rhs = cqf_brute(G1) * cqf_brute(G2)
    return {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs}


def _t_reverse(q, top):
    """Apply t -> 1/t times t^top to every coefficient of a QSymT."""
    m = q.to_basis("M")
    return QSymT(q.n, "M", {k: c.reverse("t", top) for k, c in m.coeffs.items()})


def check_rho(G):
    """rho(X_G)(t) = t^{|E|} X_G(1/t)."""
    x = cqf_brute(G)
    lhs = x.rho()
    rhs = _t_reverse(x, len(G.edges))
    return {"holds": lhs == rhs, "lhs": lhs, "rhs": rhs}


def check_des_variant(G):
    """Accumulating des(kappa) yields the rho-image of X_G."""
    return {"holds": cqf_brute(G, des=True) == cqf_brute(G).rho()}


def check_acyclic_orientations(nuio):
    """Per sink count j: sum of e-coefficients over partitions with j
    parts equals the ascent enumerator of acyclic orientations with j
    sinks."""
    P = nuio.poset()
    G = P.inc_graph()
    e_exp = x_symmetric(P).convert("e")
    lhs = {}
    for lam, c in e_exp.coeffs.items():
        j = len(lam)
        lhs[j] = lhs.get(j, tpoly({})) + c
    rhs = {}
    for _, sinks, asc in acyclic_orientations(G):
        rhs[sinks] = rhs.get(sinks, tpoly({})) + tpoly({asc: 1})
    holds = all(lhs.get(j, tpoly({})) == rhs.get(j, tpoly({}))
                for j in range(1, G.n + 1))
    return {"holds": holds, "by_sinks_lhs": lhs, "by_sinks_rhs": rhs}


def check_palindromic(nuio):
    """Coefficientwise palindromicity of X about |E|/2 for a natural
    unit interval order."""
    P = nuio.poset()
    G = P.inc_graph()
    x = cqf_x_fundamental(P).to_basis("M")
    center = Fraction(len(G.edges), 2)
    holds = all(is_palindromic(c, center) for c in x.coeffs.values())
    return {"holds": holds, "center": center}


def identity_checks(nuio):
    """Run the exact identity suite for one natural unit interval order."""
    P = nuio.poset()
    G = P.inc_graph()
    report = {
        "rho": check_rho(G)["holds"],
        "des_variant": check_des_variant(G)["holds"],
        "acyclic_orientations": check_acyclic_orientations(nuio)["holds"],
        "palindromic": check_palindromic(nuio)["holds"],
    }
    report["all"] = all(report.values())
    return report


def conjecture_report(nuio):
    """Exact per-instance verdicts for the positivity/unimodality
    conjectures; reports witnesses, never asserts the general statement."""
    P = nuio.poset()
    G = P.inc_graph()
    x = x_symmetric(P)
    e_exp = x.convert("e")
    s_exp = x.convert("s")
    center = Fraction(len(G.edges), 2)

    def verdicts(exp):
        pos, uni, witnesses = True, True, []
        for lam, c in exp.coeffs.items():
            ok_pos = all(v >= 0 for v in c.coeffs.values())
            ok_uni = is_positive_unimodal(c) if ok_pos else False
            if not (ok_pos and ok_uni):
                witnesses.append((lam, c))
            pos = pos and ok_pos
            uni = uni and ok_uni
        return pos, uni, witnesses

    e_pos, e_uni, e_wit = verdicts(e_exp)
    s_pos, s_uni, s_wit = verdicts(s_exp)
    pal = all(is_palindromic(c, center) for c in e_exp.coeffs.values())
    return {
        "e_positive": e_pos, "e_unimodal": e_uni,
        "schur_positive": s_pos, "schur_unimodal": s_uni,
        "palindromic_center": center if pal else None,
        "e_witnesses": e_wit, "s_witnesses": s_wit,
    }
