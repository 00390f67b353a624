from fractions import Fraction

import pytest

from chromaq.posetlib import (Graph, Poset, Nuio, p_n_r, antichain,
                              enumerate_nuios)
from chromaq.polyring import tpoly, t_number, t_factorial
from chromaq.symlib import SymT, sym_basis_element
from chromaq.cqfcore import (cqf_brute, cqf_fundamental, cqf_x_fundamental,
                             cqf_schur, x_symmetric, three_route,
                             closed_forms, p_expansion, eulerian_polynomial,
                             path_p_closed, two_param_closed, smirnov_closed,
                             special_r_closed, check_disjoint_union, check_rho,
                             check_des_variant, check_acyclic_orientations,
                             check_palindromic, identity_checks,
                             conjecture_report, RouteDisagreement)


def path_132():
    return Graph(3, [(1, 3), (2, 3)])


def test_empty_and_complete_graph():
    # no edges: X = e_1^n with no t; complete graph: X = [n]_t! e_n
    for n in range(1, 5):
        x = cqf_brute(Graph(n, []))
        part = x.symmetric_part()
        e1n = sym_basis_element("e", (1,) * n).convert("m")
        assert SymT(n, "m", part) == e1n
        k = antichain(n).inc_graph()
        xk = SymT(n, "m", cqf_brute(k).symmetric_part()).convert("e")
        assert xk == sym_basis_element("e", (n,), t_factorial(n))


def test_worked_example_nonsymmetric_path():
    # path 1-3-2: omega X = (F_0 + F_{1}) + 2 F_0 t + (F_0 + F_{2}) t^2
    P = Poset(3, [(1, 2)])
    wx = cqf_fundamental(P)
    assert wx.basis == "F"
    assert wx.coefficient(frozenset()) == tpoly([1, 2, 1])
    assert wx.coefficient(frozenset({1})) == tpoly(1)
    assert wx.coefficient(frozenset({2})) == tpoly({2: 1})
    # matches the brute-force coloring sum
    assert cqf_x_fundamental(P) == cqf_brute(path_132())
    # X is not symmetric here
    assert cqf_brute(path_132()).symmetric_part() is None


def test_worked_example_symmetric_path():
    # path 1-2-3: omega X = (1+2t+t^2) F_0 + t F_{1} + t F_{2}
    P = Poset(3, [(1, 3)])
    wx = cqf_fundamental(P)
    assert wx.coefficient(frozenset()) == tpoly([1, 2, 1])
    assert wx.coefficient(frozenset({1})) == tpoly([0, 1])
    assert wx.coefficient(frozenset({2})) == tpoly([0, 1])
    assert cqf_brute(Graph(3, [(1, 2), (2, 3)])).symmetric_part() is not None


def test_schur_example():
    # X_{G_{3,2}} = t s_{(2,1)} + (1+2t+t^2) s_{(1,1,1)}
    s = cqf_schur(p_n_r(3, 2))
    assert s.coeffs == {(2, 1): tpoly([0, 1]), (1, 1, 1): tpoly([1, 2, 1])}
    with pytest.raises(ValueError):
        cqf_schur(Poset(3, [(1, 2)]))


def test_three_route_small():
    for n in range(1, 5):
        for nu in enumerate_nuios(n):
            three_route(nu)


def test_route_disagreement_diff():
    # a deliberate mismatch carries a structured diff
    from chromaq.cqfcore import _diff
    a = cqf_brute(path_132())
    b = a + a
    with pytest.raises(RouteDisagreement) as err:
        _diff("one", a, "two", b)
    assert "one" in str(err.value) and "two" in str(err.value)


def test_closed_forms():
    # K_4: coefficient of s_{1^4} is [4]_t!
    cf = closed_forms(antichain(4).poset())
    assert cf["coeff_s_1n"] == t_factorial(4)
    # agreement with actual extractions for all NUIOs n <= 5
    for n in range(2, 6):
        for nu in enumerate_nuios(n):
            cf = closed_forms(nu.poset())
            s = cqf_schur(nu)
            assert s.coeffs.get((1,) * n, tpoly(0)) == cf["coeff_s_1n"]
            e = s.convert("e")
            assert e.coeffs.get((n,), tpoly(0)) == cf["coeff_en"]
            assert cf["coeff_en"] == cf["coeff_pn_over_n_in_omegaX"]


def test_p_expansion_routes():
    for n in range(1, 6):
        for nu in enumerate_nuios(n):
            hub = x_symmetric(nu.poset()).convert("p").omega()
            assert p_expansion(nu.poset()) == hub
            assert p_expansion(nu.poset(), route="tilde") == hub


def test_eulerian_polynomial():
    assert eulerian_polynomial(1) == tpoly(1)
    assert eulerian_polynomial(3) == tpoly([1, 4, 1])
    assert eulerian_polynomial(4) == tpoly([1, 11, 11, 1])


def test_path_p_closed():
    for n in range(2, 7):
        assert path_p_closed(n) == p_expansion(p_n_r(n, 2).poset())


def test_two_param_closed():
    for mseq in [(2, 4, 4), (3, 3, 4), (2, 2, 5, 5), (4, 5, 5, 5),
                 (2, 3, 6, 6, 6)]:
        nu = Nuio(mseq)
        cf = two_param_closed(nu)
        assert cf["s"] == cqf_schur(nu)
        assert cf["e"] == x_symmetric(nu.poset()).convert("e")
    with pytest.raises(ValueError):
        two_param_closed(Nuio((1, 2, 4)))  # m_1 < 2
    with pytest.raises(ValueError):
        two_param_closed(Nuio((2, 3, 4, 5, 5)))  # m_3 != n


def test_smirnov_closed():
    for n in range(2, 7):
        assert smirnov_closed(n) == x_symmetric(p_n_r(n, 2).poset()).convert("e")


def test_special_r_closed():
    for n in range(4, 7):
        for r in sorted({1, 2, n - 2, n - 1, n}):
            assert special_r_closed(n, r) == \
                x_symmetric(p_n_r(n, r).poset()).convert("e")
    with pytest.raises(ValueError):
        special_r_closed(6, 3)


def test_disjoint_union():
    pairs = [(path_132(), Graph(2, [(1, 2)])),
             (Graph(2, []), Graph(3, [(1, 2), (2, 3)])),
             (Graph(3, [(1, 2), (1, 3), (2, 3)]), Graph(1, []))]
    for g1, g2 in pairs:
        assert check_disjoint_union(g1, g2)["holds"]


def test_identity_suite():
    for n in range(1, 6):
        for nu in enumerate_nuios(n):
            assert identity_checks(nu)["all"]
    # rho and des-variant also hold for non-NUIO graphs
    assert check_rho(path_132())["holds"]
    assert check_des_variant(path_132())["holds"]


def test_acyclic_orientation_identity():
    for n in range(1, 6):
        for nu in enumerate_nuios(n):
            assert check_acyclic_orientations(nu)["holds"]


def test_palindromic():
    r = check_palindromic(p_n_r(4, 2))
    assert r["holds"] and r["center"] == Fraction(3, 2)


def test_conjecture_report():
    for nu in enumerate_nuios(4):
        rep = conjecture_report(nu)
        assert rep["e_positive"] and rep["e_unimodal"]
        assert rep["schur_positive"] and rep["schur_unimodal"]
        assert rep["palindromic_center"] is not None


def test_brute_bound():
    with pytest.raises(ValueError):
        cqf_brute(Graph(12, []), bound=9)
