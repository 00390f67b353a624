import random
from fractions import Fraction
from math import comb

from hypothesis import given, settings, strategies as st

from chromaq.polyring import (Poly, T_VARS, QT_VARS, tpoly, t_number,
                              is_palindromic, is_positive_unimodal,
                              natural_center)
from chromaq.qsymlib import QSymT, compositions, monomial_qsym
from chromaq.symlib import SymT, partitions, sym_basis_element, BASES
from chromaq.posetlib import Nuio, enumerate_nuios, nuio_check, \
    chromatic_polynomial
from chromaq.cqfcore import cqf_brute, check_acyclic_orientations


def tpolys(max_deg=5, max_coeff=6):
    return st.dictionaries(st.integers(0, max_deg),
                           st.integers(-max_coeff, max_coeff),
                           max_size=4).map(tpoly)


def qtpolys():
    return st.dictionaries(st.tuples(st.integers(0, 3), st.integers(0, 3)),
                           st.integers(-5, 5), max_size=5).map(
        lambda d: Poly(QT_VARS, d))


@given(tpolys(), tpolys(), tpolys())
def test_ring_axioms_t(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert all(v != 0 for v in (a * b + c).coeffs.values())


@given(qtpolys(), qtpolys(), qtpolys())
def test_ring_axioms_qt(a, b, c):
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


def compositions_of(n):
    return st.sampled_from(list(compositions(n)))


@given(st.integers(1, 6).flatmap(
    lambda n: st.lists(st.tuples(compositions_of(n), tpolys()),
                       min_size=1, max_size=3)))
def test_qsym_involutions(items):
    n = sum(items[0][0])
    x = QSymT(n, "M", {})
    for alpha, c in items:
        x = x + monomial_qsym(alpha, c)
    assert x.omega().omega() == x
    assert x.rho().rho() == x
    assert x.omega().rho() == x.rho().omega()
    assert x.to_basis("F").to_basis("M") == x


def partitions_of(n):
    return st.sampled_from(list(partitions(n)))


@given(st.integers(1, 6).flatmap(
    lambda n: st.tuples(partitions_of(n), tpolys(),
                        st.sampled_from(BASES), st.sampled_from(BASES))))
def test_sym_conversion_round_trip(args):
    lam, c, src, dst = args
    if c.is_zero():
        c = tpoly(1)
    x = sym_basis_element(src, lam, c)
    assert x.convert(dst).convert(src) == x
    assert x.omega().omega() == x


@given(st.integers(1, 7))
def test_nuio_count_and_realization(n):
    rng = random.Random(n)
    nuios = list(enumerate_nuios(n))
    for nu in rng.sample(nuios, min(5, len(nuios))):
        verdict = nuio_check(nu.poset())
        assert verdict["is_nuio"]


def test_chromatic_specialization():
    # X_G(1^m; t=1) = chi_G(m), read off through the M basis
    for n in range(1, 6):
        for nu in enumerate_nuios(n):
            g = nu.inc_graph()
            x = cqf_brute(g)
            for m in range(7):
                total = 0
                for alpha, c in x.coeffs.items():
                    at_one = sum(c.coeffs.values())
                    total += at_one * comb(m, len(alpha))
                assert total == chromatic_polynomial(g, m)


def test_acyclic_orientation_identity():
    for n in range(1, 6):
        for nu in enumerate_nuios(n):
            assert check_acyclic_orientations(nu)["holds"]


def proper_colorings(g, colors):
    """Backtracking enumeration of proper colorings with the given colors."""
    n = g.n
    adj = {v: set() for v in range(1, n + 1)}
    for a, b in g.edge_set:
        adj[a].add(b)
        adj[b].add(a)
    kappa = {}

    def rec(v):
        if v > n:
            yield dict(kappa)
            return
        for c in colors:
            if all(kappa.get(u) != c for u in adj[v] if u < v):
                kappa[v] = c
                yield from rec(v + 1)
                del kappa[v]

    yield from rec(1)


def test_two_color_components_are_increasing_paths():
    # in any proper coloring of inc(P), P a NUIO, the subgraph on two
    # adjacent color classes {a, a+1} splits into paths whose vertices
    # appear in increasing numeric order along the path
    for n in range(2, 6):
        for nu in enumerate_nuios(n):
            g = nu.inc_graph()
            for kappa in proper_colorings(g, range(1, n + 1)):
                for a in range(1, n):
                    verts = sorted(v for v in range(1, n + 1)
                                   if kappa[v] in (a, a + 1))
                    edges = {(u, v) for u, v in g.edge_set
                             if u in verts and v in verts
                             and kappa[u] != kappa[v]}
                    # components must be increasing paths: every edge joins
                    # consecutive vertices of its component
                    comp = {v: v for v in verts}

                    def find(v):
                        while comp[v] != v:
                            comp[v] = comp[comp[v]]
                            v = comp[v]
                        return v

                    for u, v in edges:
                        comp[find(u)] = find(v)
                    groups = {}
                    for v in verts:
                        groups.setdefault(find(v), []).append(v)
                    for group in groups.values():
                        group.sort()
                        expected = {(group[i], group[i + 1])
                                    for i in range(len(group) - 1)}
                        assert edges & {(u, v) for u in group for v in group
                                        if u < v} == expected


def random_pup(rng):
    """A random positive, unimodal, palindromic polynomial: a t-shift of a
    product of t-numbers."""
    f = tpoly({rng.randrange(3): rng.randrange(1, 4)})
    for _ in range(rng.randrange(1, 4)):
        f = f * t_number(rng.randrange(1, 6))
    return f


def test_unimodal_palindromic_closure_randomized():
    rng = random.Random(20260826)
    for _ in range(300):
        a, b = random_pup(rng), random_pup(rng)
        ca, cb = natural_center(a), natural_center(b)
        prod = a * b
        assert is_positive_unimodal(prod)
        assert is_palindromic(prod, ca + cb)
        if ca == cb:
            s = a + b
            assert is_positive_unimodal(s)
            assert is_palindromic(s, ca)
