import random

import pytest

from qweyl import cli, coeff, parser, uq, weyl
from qweyl.coeff import ONE, q_power
from qweyl.errors import IndexOutOfRange, ParseError
from qweyl.parser import parse_algebra, parse_expression, parse_hopf, parse_scalar


# -- parsing --------------------------------------------------------------------


def test_parse_defining_relation_collapses():
    got = parse_algebra("x1*y1 - q^2*y1*x1", 1)
    assert got == weyl.scalar_element(1, ONE - q_power(2))


def test_parse_star_postfix():
    assert parse_algebra("y1'", 1) == weyl.gen_y(1, 1)
    mixed = parse_algebra("(i*y1)'", 1)
    assert mixed == weyl.gen_y(1, 1).scaled(-coeff.I)


def test_parse_index_out_of_range():
    with pytest.raises(IndexOutOfRange):
        parse_algebra("R1^-3 * x2", 1)


def test_parse_q_sugar():
    assert parse_algebra("Q1", 2) == weyl.q_elem(2, 1)
    assert parse_algebra("Q3", 2) == weyl.AlgebraElement.unit(2)
    assert parse_algebra("Q1^-1", 2) == weyl.q_elem_inv(2, 1)


def test_parse_negative_exponent_rules():
    assert parse_algebra("R2^-4", 2) == weyl.gen_r(2, 2, -4)
    with pytest.raises(ParseError):
        parse_algebra("y1^-1", 1)
    with pytest.raises(ParseError):
        parse_hopf("E1^-1", 1)
    assert parse_hopf("K1^-1", 1) == uq.HopfElement.generator(1, uq.KINV, 1)


def test_parse_hopf_queries():
    assert parse_expression("eps(K1*K1^-1 + E1)", 1) == ONE
    s_val = parse_expression("S(E1)", 1)
    want = -(uq.HopfElement.generator(1, uq.KINV, 1)
             * uq.HopfElement.generator(1, uq.E, 1))
    assert s_val == want


def test_parse_errors_carry_positions():
    with pytest.raises(ParseError) as err:
        parse_algebra("y1 + ?", 1)
    assert err.value.position == 5
    with pytest.raises(ParseError) as err:
        parse_algebra("y1 * K1", 1)  # mixing families
    assert "mix" in str(err.value)
    with pytest.raises(ParseError):
        parse_scalar("y1")
    with pytest.raises(ParseError):
        parse_algebra("q0 ^ x", 1)


def test_roundtrip_random_elements():
    rng = random.Random(404)
    for n in (1, 2, 3):
        for _ in range(10):
            atoms = []
            for _ in range(rng.randint(0, 4)):
                kind = rng.choice(("R", "y", "x"))
                k = rng.randint(1, n)
                atoms.append(("R", k, rng.choice((-2, -1, 1, 2)))
                             if kind == "R" else (kind, k))
            cv = coeff.q0_power(rng.randint(-2, 2)) * coeff.integer(
                rng.choice((1, -1, 2)))
            element = weyl.normal_form(n, [(cv, tuple(atoms))])
            again = parse_algebra(str(element), n)
            assert again == element, str(element)


def test_roundtrip_hopf_words():
    h = parse_hopf("K1*E2*F1 - lambda*K1^-1 + (1/2)*F2", 2)
    assert parse_hopf(str(h), 2) == h


def test_roundtrip_scalars():
    values = [
        coeff.LAMBDA_INV,
        coeff.I * coeff.q0_power(3) - coeff.rational(2, 3),
        (coeff.Q0 - ONE) / (coeff.q0_power(2) + coeff.integer(5)),
    ]
    for value in values:
        assert parse_scalar(str(value)) == value


# -- command-line front end -------------------------------------------------------


def test_cli_normalize(capsys):
    rc = cli.main(["normalize", "--n", "1", "x1*y1 - q^2*y1*x1"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert parse_algebra(out, 1) == weyl.scalar_element(1, ONE - q_power(2))


def test_cli_normalize_answers_hopf_queries(capsys):
    rc = cli.main(["normalize", "--n", "1", "S(E1)"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert parse_hopf(out, 1) == uq.antipode(1, (uq.E, 1))
    rc = cli.main(["normalize", "--n", "1", "eps(K1 + E1)"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert parse_expression(out, 1) == ONE


def test_cli_act_matches_library(capsys):
    rc = cli.main(["act", "--n", "2", "E1", "x1"])
    out = capsys.readouterr().out.strip()
    assert rc == 0
    assert parse_algebra(out, 2) == uq.act((uq.E, 1), weyl.gen_x(2, 1))


def test_cli_parse_error_exit_code(capsys):
    rc = cli.main(["normalize", "--n", "1", "x2"])
    assert rc == 2
    assert "error" in capsys.readouterr().err


def test_cli_usage_error_exit_code():
    assert cli.main(["verify", "--suite", "not-a-suite"]) == 2


def test_cli_verify_suite_exit_zero(capsys):
    rc = cli.main(["verify", "--suite", "obstruction"])
    out = capsys.readouterr().out
    assert rc == 0
    for line in out.strip().splitlines():
        assert line.startswith("suite=obstruction, case=")
        assert ", residual=" in line and ", pass=" in line


def test_cli_reports_are_deterministic(capsys, tmp_path):
    args = ["verify", "--suite", "invariance", "--n", "1",
            "--samples", "6", "--seed", "11"]
    rc1 = cli.main(args + ["--out", str(tmp_path / "a.txt")])
    out1 = capsys.readouterr().out
    rc2 = cli.main(args + ["--out", str(tmp_path / "b.txt")])
    out2 = capsys.readouterr().out
    assert rc1 == rc2 == 0
    assert out1 == out2
    assert (tmp_path / "a.txt").read_text() == (tmp_path / "b.txt").read_text()
    assert (tmp_path / "a.txt").read_text().strip() == out1.strip()


def test_cli_documented_invocations(capsys):
    rc = cli.main(["verify", "--suite", "ab-rho", "--n", "3"])
    assert rc == 0
    capsys.readouterr()
    rc = cli.main(["verify", "--suite", "invariance", "--n", "2",
                   "--phi", "1.0471975512", "--samples", "20", "--seed", "7"])
    assert rc == 0
    capsys.readouterr()


def test_cli_pointwise_and_model2(capsys):
    rc = cli.main(["verify", "--suite", "pointwise", "--n", "2",
                   "--samples", "5", "--seed", "3"])
    assert rc == 0
    capsys.readouterr()
    rc = cli.main(["verify", "--suite", "model2-n1", "--n", "1",
                   "--samples", "5"])
    assert rc == 0
    capsys.readouterr()
    rc = cli.main(["verify", "--suite", "model2-n1", "--n", "2"])
    assert rc == 2
    capsys.readouterr()


def test_cli_integrate_value(capsys):
    rc = cli.main(["integrate", "--n", "1", "--ket", "(1,0,0)",
                   "--bra", "(1,0,0)"])
    out = capsys.readouterr().out
    assert rc == 0
    assert out.startswith("h=")
    import math
    value = complex(out[2:].strip())
    phi = math.pi / 3
    closed = math.sqrt(math.pi / 2) * math.exp(2 * phi * phi)
    assert value.real == pytest.approx(closed, rel=1e-9)


def test_cli_integrate_bad_state(capsys):
    rc = cli.main(["integrate", "--n", "2", "--ket", "(1,0,0)",
                   "--bra", "(1,0,0);(1,0,0)"])
    assert rc == 2


def test_cli_repr_check(capsys):
    rc = cli.main(["repr-check", "--n", "1", "--samples", "4", "--seed", "5"])
    out = capsys.readouterr().out
    assert rc == 0
    assert "suite=model2-n1" in out
    assert "suite=pointwise" in out
