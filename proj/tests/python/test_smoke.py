"""Smoke tests for the Python bindings."""

from fractions import Fraction

import pytest

import ordercalc as oc


def test_stirling_numbers():
    assert oc.stirling_first(5, 3) == 35
    assert oc.stirling_first(3, 2) == -3
    assert oc.stirling_first(0, 0) == 1
    assert oc.stirling_row(5) == [24, -50, 35, -10, 1]
    # Big rows stay exact far beyond machine integers.
    assert oc.stirling_first(50, 1) == -int(
        "608281864034267560872252163321295376887552831379210240000000000"
    )


def test_alpha_values():
    assert oc.alpha(3, 2) == Fraction(1, 4)
    assert oc.alpha(7, 4) == Fraction(49, 2)
    assert all(oc.alpha(9, i) == 0 for i in (1, 3, 5, 7))


def test_symmetric_form():
    sf = oc.weyl_symmetric(3)
    assert sf.terms() == [(3, Fraction(1, 2)), (1, Fraction(1, 4))]
    assert str(sf) == "1/2 {N^3 + (N+1)^3} + 1/4 {N + (N+1)}"
    assert sf.to_latex() == r"\frac{1}{2}\{N^{3}+(N+1)^{3}\}+\frac{1}{4}\{N+(N+1)\}"
    assert sf.eval(2) == Fraction(2**3 + 3**3, 2) + Fraction(2 + 3, 4)


def test_normalize_and_closed_form_agree():
    assert oc.normalize(oc.parse_operator("a ad")) == oc.reorder_closed_form(1, 1)
    for n in range(1, 5):
        assert oc.normalize(oc.brute_force_weyl(n, n)) == oc.weyl_from_normal(n, n)
        assert oc.weyl_from_normal(n, n) == oc.weyl_from_antinormal(n, n)


def test_normal_form_inspection():
    nf = oc.weyl_from_normal(1, 1)
    assert str(nf) == "ad a + 1/2 eps"
    assert str(nf.coefficient(0, 0)) == "1/2*eps"
    at_unit = nf.substitute_eps(oc.MPoly(1))
    assert str(at_unit) == "ad a + 1/2"


def test_polynomial_algebra():
    N, eps = oc.N, oc.eps
    fall3 = oc.falling_factorial(N, 3)
    assert fall3.substitute("eps", oc.MPoly(1)) == oc.parse_npoly("N^3 - 3*N^2 + 2*N")
    assert oc.forward_difference(fall3) == 3 * oc.falling_factorial(N, 2)
    assert (N + eps) * (N - eps) == N * N - eps * eps


def test_newton_expansion():
    exp = oc.newton_expand(oc.parse_npoly("N^2"))
    assert [str(c) for c in exp.coefficients] == ["0", "eps", "1"]
    assert exp.reconstruct() == oc.parse_npoly("N^2")


def test_number_state_evaluation():
    nf = oc.normalize(oc.parse_operator("ad a"))
    assert str(oc.eval_on_number_state(nf, 3)) == "3*eps"
    with pytest.raises(oc.Error):
        oc.balanced_to_npoly(oc.normalize(oc.parse_operator("ad^2 a")))


def test_s_transform():
    src = oc.sorder_from_normal(oc.normalize(oc.parse_operator("ad a")))
    weyl = oc.s_transform(src, 0)
    assert str(weyl) == "{ad a}_0 - 1/2"
    back = oc.s_transform(weyl, 1)
    assert back == src


def test_identity_verification():
    assert oc.verify_noncom(6).holds
    assert oc.verify_stirling_relation(9, 3).holds
    assert oc.verify_general_relation(4, -2, 1).holds
    assert oc.verify_alpha_odd(11).holds
    line = oc.verify_stirling_relation(9, 3).json_line()
    assert line == '{"identity":"stirling_rel","n":9,"j":3,"holds":true}'


def test_parse_errors_carry_offsets():
    with pytest.raises(oc.Error) as exc_info:
        oc.parse_operator("ad N")
    assert "offset 3" in str(exc_info.value)
