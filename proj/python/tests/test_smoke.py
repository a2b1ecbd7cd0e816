import os
from fractions import Fraction
from pathlib import Path

import pytest

import foliate

DATA = Path(os.environ.get("FOLIATE_DATA_DIR", Path(__file__).resolve().parents[2] / "data"))


def problem(name):
    return foliate.Problem.load(str(DATA / name))


def test_cusp_stabilizes_at_one():
    res = foliate.resolve(problem("cusp.problem"))
    assert res.verdict == "stabilized"
    assert res.t == 1
    assert res.L[:3] == ["(x^2, x^3)", "(x^5, x^6)", "(x^15, x^16)"]
    assert res.checks == [False, True]
    assert res.finite_type[0] == "finite_type"


def test_cusp_table_leaders():
    table = foliate.ring_table(problem("cusp.problem"), bound=4, rows=8)
    assert table["leaders"] == [("x^2", 1), ("x^5", 3)]
    assert table["truncated"]
    assert table["table"].splitlines()[3] == "x^5  Tx^5  T^2x^5  T^3x^5"


def test_weights_one_two_carry_a_certificate():
    res = foliate.resolve(problem("weights_1_2.problem"), max_steps=3)
    assert res.verdict == "toric_nonresolvable"
    assert not any(res.checks)
    assert res.toric_certificate
    assert res.L[1] == "(x*y, y^3, x^3)"


def test_toric_classification():
    for pair in [(1, 0), (0, 1), (1, 1)]:
        assert foliate.toric_resolvable([[pair[0]], [pair[1]]])[0]
    for pair in [(1, 2), (1, 3), (2, 3)]:
        assert not foliate.toric_resolvable([[pair[0]], [pair[1]]])[0]
    assert foliate.toric_resolvable([[Fraction(1, 2)], ["1/2"]])[0]


def test_w_form_and_numeric_helpers():
    assert foliate.w_form(["x", "y"], ["x", "y"], [[1], [2]]) == "x*y"
    assert foliate.base_expansion(101, 8) == [1, 0, 1]
    assert foliate.f_degree(21, 2) == 64
    assert all(foliate.carrying_identity_holds(s, 3) for s in range(13))
    assert foliate.divisor_X(2, 1) == "18*E + 6*K_0 + 2*K_1 + K_2"
    assert foliate.divisor_recurrence_check(4, 2)


def test_section_outcomes():
    assert foliate.section_test(problem("section_1_1.problem")) == ("equal", 10, 10)
    assert foliate.section_test(problem("section_1_2.problem")) == ("proper_containment", 46, 49)


def test_problem_round_trip_and_errors():
    p = foliate.Problem.parse("variables = x y\nweights = 1 2\nideal = x, y\n")
    assert foliate.Problem.parse(str(p)) == p
    assert foliate.gauss_map(p) == "(x*y, y^3, x^3)"
    with pytest.raises(foliate.ParseError, match="2:1"):
        foliate.Problem.parse("variables = x\nbogus = 1\n")
    with pytest.raises(foliate.Error):
        foliate.base_expansion(3, 0)


def test_run_command_matches_cli_exit_codes():
    code, human, sidecar = foliate.run_command("resolve", [str(DATA / "cusp.problem")])
    assert code == 0
    assert "verdict: stabilized at t=1" in human
    assert sidecar.startswith("command=resolve\nexit_code=0\n")
    assert foliate.run_command("toric", [str(DATA / "weights_1_2.problem")])[0] == 2
    assert foliate.run_command("resolve", [str(DATA / "nope.problem")])[0] == 1
