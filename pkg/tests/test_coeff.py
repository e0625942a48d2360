import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qweyl import coeff
from qweyl.coeff import (LAMBDA, LAMBDA_INV, NumericContext, ONE, Q, Q0, ZERO,
                         QI, ScalarValue, gaussian, integer, q0_power, q_power)
from qweyl.errors import PoleAtEvaluationPoint

CTX = NumericContext()


def test_star_q0_is_inverse():
    assert Q0.star() == q0_power(-1)


def test_star_lambda_is_minus_lambda():
    assert LAMBDA.star() == -LAMBDA


def test_star_i_over_lambda_fixed():
    value = coeff.I * LAMBDA_INV
    assert value.star() == value


def test_eval_q_on_unit_circle():
    got = Q.evaluate(CTX)
    assert got == pytest.approx(cmath.exp(1j * math.pi / 3), rel=1e-12)


def test_eval_lambda_two_i_sine():
    got = LAMBDA.evaluate(CTX)
    assert got == pytest.approx(2j * math.sin(math.pi / 3), abs=1e-12)


def test_context_excludes_degenerate_angles():
    with pytest.raises(ValueError):
        NumericContext(phi=0.0)
    with pytest.raises(ValueError):
        NumericContext(phi=math.pi / 2)
    with pytest.raises(ValueError):
        NumericContext(phi=-math.pi / 2)
    with pytest.raises(ValueError):
        NumericContext(phi=3.5)


def test_pole_detection():
    # q0^4 - q0^2 + 1 vanishes exactly at the default angle phi = pi/3
    den = q0_power(4) - q0_power(2) + ONE
    value = ONE / den
    with pytest.raises(PoleAtEvaluationPoint):
        value.evaluate(CTX)
    assert abs(value.evaluate(NumericContext(phi=1.0))) > 0


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(ZeroDivisionError):
        ZERO.inv()


def test_canonical_equality_cross_forms():
    a = (q_power(2) - ONE) / (Q0 - ONE)
    b = (q_power(2) - ONE) * (Q0 - ONE).inv()
    assert a == b
    assert hash(a) == hash(b)


# -- randomized field axioms -------------------------------------------------

_fracs = st.fractions(min_value=-4, max_value=4, max_denominator=3)
_qi = st.builds(QI, _fracs, _fracs)
_poly = st.lists(_qi, min_size=0, max_size=3).map(tuple)
_nonzero_poly = _poly.filter(lambda p: any(p))


@st.composite
def scalars(draw):
    num = draw(_poly)
    den = draw(_nonzero_poly)
    return ScalarValue(num, den)


nonzero_scalars = scalars().filter(lambda s: not s.is_zero)


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars(), scalars())
def test_field_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a
    assert a * ONE == a


@settings(max_examples=60, deadline=None)
@given(nonzero_scalars)
def test_multiplicative_inverse(a):
    assert a * a.inv() == ONE


@settings(max_examples=60, deadline=None)
@given(scalars(), scalars())
def test_star_is_multiplicative_involution(a, b):
    assert (a * b).star() == a.star() * b.star()
    assert a.star().star() == a
    assert (a + b).star() == a.star() + b.star()


@settings(max_examples=60, deadline=None)
@given(scalars())
def test_eval_intertwines_star_and_conjugation(a):
    try:
        lhs = a.star().evaluate(CTX)
        rhs = a.evaluate(CTX)
    except PoleAtEvaluationPoint:
        return
    assert lhs == pytest.approx(rhs.conjugate(), rel=1e-9, abs=1e-9)


def test_rational_fixed_by_star():
    a = ScalarValue((QI(Fraction(3, 7)),), (QI(1),))
    assert a.star() == a
