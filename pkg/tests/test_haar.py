import cmath
import math
import random

import pytest
from scipy.integrate import quad

from qweyl import gauss, haar, uq, weyl
from qweyl.coeff import NumericContext
from qweyl.errors import ShapeMismatch
from qweyl.gauss import GaussianState, apply_ops, inner, norm, represent
from qweyl.haar import (FiniteRankOperator, IntegralContext, plain_trace,
                        quantum_trace, rank_one)

CTX = NumericContext()
NEG = NumericContext(phi=-math.pi / 5)


def g_state(eps=1.0, gamma=0j, n=1):
    return GaussianState.from_legs(1.0, [(eps, gamma)] * n)


def test_rank_one_applies_as_dyad():
    g = g_state()
    op = rank_one(g, g)
    out = op.apply_to(g)
    want = g.scaled(inner(g, g))
    assert norm(out - want) <= 1e-12 * norm(want)


def test_rank_one_plain_trace_is_overlap():
    rng = random.Random(5)
    e = gauss.random_state(1, rng)
    f = gauss.random_state(1, rng)
    assert plain_trace(rank_one(e, f)) == pytest.approx(inner(e, f), rel=1e-12)


def test_rank_one_star_swaps_legs():
    rng = random.Random(6)
    e = gauss.random_state(1, rng)
    f = gauss.random_state(1, rng)
    u = gauss.random_state(1, rng)
    lhs = rank_one(e, f).star().apply_to(u)
    rhs = rank_one(f, e).apply_to(u)
    assert norm(lhs - rhs) <= 1e-12 * max(norm(lhs), 1.0)


def test_shape_mismatch():
    with pytest.raises(ShapeMismatch):
        rank_one(g_state(n=1), g_state(n=2))


def test_quantum_trace_closed_form_and_quadrature():
    # single-pair dyad of the centered unit-width packet, scale density
    ictx = IntegralContext(c=1.0, ctx=CTX)
    g = g_state()
    value = quantum_trace(rank_one(g, g), ictx)
    phi = CTX.phi
    closed = math.sqrt(math.pi / 2.0) * math.exp(2.0 * phi * phi)
    assert value == pytest.approx(closed, rel=1e-12)

    # quadrature: integral of g(t) * conj((weighted g)(t))
    def weighted(t):
        # e^{-2 phi P} shifts the argument by -2i phi
        return cmath.exp(-((t - 2j * phi) ** 2))

    byquad = quad(lambda t: (cmath.exp(-t * t)
                             * weighted(t).conjugate()).real, -20, 20,
                  limit=200)[0]
    assert value == pytest.approx(byquad, rel=1e-9)


def test_trace_linearity():
    ictx = IntegralContext(c=1.0, ctx=CTX)
    rng = random.Random(7)
    F = haar.random_finite_rank(1, rng, 2)
    assert quantum_trace(F.scaled(2.5j), ictx) == pytest.approx(
        2.5j * quantum_trace(F, ictx), rel=1e-12)
    assert IntegralContext(c=-2.0, ctx=CTX).c == -2.0
    assert quantum_trace(F, IntegralContext(c=-2.0, ctx=CTX)) == pytest.approx(
        -2.0 * quantum_trace(F, ictx), rel=1e-12)


def test_single_pair_density_conventions_differ_by_sign():
    rng = random.Random(8)
    gam = IntegralContext(c=1.0, ctx=CTX)
    qin = IntegralContext(c=1.0, ctx=CTX, density="qinv")
    for _ in range(5):
        F = haar.random_finite_rank(1, rng, 3)
        a = quantum_trace(F, gam)
        b = quantum_trace(F, qin)
        assert b == pytest.approx(-a, rel=1e-12)
    with pytest.raises(ValueError):
        IntegralContext(ctx=CTX, density="bogus")
    with pytest.raises(ValueError):
        haar.density_ops(2, qin)


def test_trace_gram_route_agrees():
    rng = random.Random(9)
    for n in (1, 2):
        ictx = IntegralContext(c=1.0, ctx=CTX)
        for _ in range(4):
            F = haar.random_finite_rank(n, rng, 3, gentle=True)
            direct = quantum_trace(F, ictx)
            indirect = haar.trace_gram_route(F, ictx)
            assert direct == pytest.approx(indirect, rel=1e-8, abs=1e-8)


def test_act_on_operator_matches_dyad_expansion():
    # E on a dyad: ladder on the ket minus conjugated ladder on the bra
    rng = random.Random(10)
    n = 1
    e = gauss.random_state(n, rng)
    f = gauss.random_state(n, rng)
    F = rank_one(e, f)
    got = haar.act_on_operator((uq.E, 1), F, CTX)
    a_ops = represent(weyl.a_op(1, 1), CTX)
    rho_ops = represent(weyl.rho(1, 1), CTX)
    mixed = represent(weyl.rho_inv(1, 1) * weyl.a_op(1, 1), CTX)
    want = (rank_one(apply_ops(a_ops, e), f)
            - rank_one(apply_ops(rho_ops, e),
                       apply_ops(gauss.adjoint_ops(mixed), f)))
    for _ in range(5):
        u = gauss.random_state(n, rng)
        lhs = got.apply_to(u)
        rhs = want.apply_to(u)
        assert norm(lhs - rhs) <= 1e-9 * max(norm(lhs), norm(u))


def test_act_on_operator_f_generator_single_pair():
    # lowering on a dyad: B on the ket with the scale on the bra, minus the
    # q^2-twisted right factor
    rng = random.Random(11)
    e = gauss.random_state(1, rng)
    f = gauss.random_state(1, rng)
    F = rank_one(e, f)
    got = haar.act_on_operator((uq.F, 1), F, CTX)
    b_ops = represent(weyl.b_op(1, 1), CTX)
    rho_ops = represent(weyl.rho(1, 1), CTX)
    mixed = represent(weyl.rho(1, 1) * weyl.b_op(1, 1), CTX)
    q2 = (CTX.q_value) ** 2
    want = (rank_one(apply_ops(b_ops, e), apply_ops(rho_ops, f))
            - rank_one(e, apply_ops(gauss.adjoint_ops(mixed), f)).scaled(q2))
    for _ in range(5):
        u = gauss.random_state(1, rng)
        lhs = got.apply_to(u)
        rhs = want.apply_to(u)
        assert norm(lhs - rhs) <= 1e-9 * max(norm(lhs), norm(u))


def test_conjugation_preserves_rank():
    rng = random.Random(12)
    F = haar.random_finite_rank(2, rng, 3)
    out = haar.act_on_operator((uq.K, 1), F, CTX)
    assert isinstance(out, FiniteRankOperator)
    assert out.rank_bound == F.rank_bound


def test_invariance_all_generators():
    for ctx in (CTX, NEG):
        for n in (1, 2):
            ictx = IntegralContext(c=1.0, ctx=ctx)
            rep = haar.check_invariance(n, ictx, count=20, seed=7)
            assert rep.ok, [(c.case, c.residual) for c in rep.failures()]


def test_invariance_qinv_convention():
    for ctx in (CTX, NEG):
        ictx = IntegralContext(c=1.0, ctx=ctx, density="qinv")
        rep = haar.check_invariance(1, ictx, count=20, seed=7)
        assert rep.ok


def test_trace_cyclicity():
    for n in (1, 2):
        ictx = IntegralContext(c=1.0, ctx=CTX)
        rep = haar.check_cyclicity(n, ictx, count=20, seed=7)
        assert rep.ok, [(c.case, c.residual) for c in rep.failures()]


def test_cyclicity_identity_factors_exact():
    rng = random.Random(13)
    G = haar.random_finite_rank(1, rng, 2)
    ident = [gauss.op_identity(1)]
    t1 = plain_trace(G.left_composed(ident).right_composed(ident))
    t2 = plain_trace(G)
    assert t1 == t2


def test_obstruction_report():
    rep = haar.check_obstruction()
    assert rep.ok
    cases = {c.case for c in rep.cases}
    assert cases == {"F>y=i", "eps(F)=0", "obstruction-confirmed"}


def test_operator_module_star_compatibility():
    for n in (1, 2):
        rep = haar.check_operator_star_compat(n, CTX)
        assert rep.ok, [(c.case, c.residual) for c in rep.failures()]
