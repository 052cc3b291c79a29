from fractions import Fraction

from yangtype.scalars import S, SPoly, format_scalar, scalar_subs


def test_constant_demotion():
    assert S - S == 0
    assert isinstance(S * 0, (int, Fraction))
    assert (S + 1) - S == 1


def test_arithmetic():
    p = (S + 1) * (S - 1)
    assert p == S * S - 1
    assert p.subs(Fraction(3)) == 8
    assert (S ** 3).degree() == 3
    assert 2 * S == S + S


def test_equality_with_rationals():
    # degree-0 results demote to plain rationals, so == with Fraction just works
    q = (S + 2) - S
    assert q == Fraction(2)
    assert not isinstance(q, SPoly)


def test_str():
    assert str(S * S - 2 * S + 1) == "s^2 - 2*s + 1"
    assert format_scalar(Fraction(-3, 2)) == "-3/2"
    assert format_scalar(S + 1) == "(s + 1)"


def test_subs_helper():
    assert scalar_subs(S + 1, Fraction(2)) == 3
    assert scalar_subs(Fraction(7), Fraction(2)) == 7
