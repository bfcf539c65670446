import itertools

import pytest

import nullgb

GRID = {"S": [[0, 1], [0, 1]]}


def test_poly_arithmetic_and_printing():
    f = nullgb.Poly("x1 + 1")
    g = nullgb.Poly("x1 - 1")
    assert str(f * g) == "x1^2 - 1"
    assert (f ** 2) == nullgb.Poly("x1^2 + 2*x1 + 1")
    assert nullgb.Poly("0").degree is None
    assert nullgb.Poly("x1^2*x2", nvars=3).nvars == 3
    assert nullgb.Poly("7*x1", ring="ZZ/6").terms() == [((1,), "1")]
    assert nullgb.Poly("x1*x2").evaluate(["2", "3"]) == "6"


def test_parse_errors_raise():
    with pytest.raises(nullgb.NullgbError):
        nullgb.Poly("x1 +")
    with pytest.raises(ValueError):
        nullgb.Poly("y1")


def test_reduce_certificate_conditions():
    out = nullgb.reduce(nullgb.Poly("x1^2*x2 + x2"), [nullgb.Poly("x1^2 - 1", nvars=2)])
    assert out["remainder"] == "2*x2"
    assert all(out["checks"].values())


def test_groebner_check():
    assert nullgb.is_groebner([nullgb.Poly("x1^2 - x1", nvars=2), nullgb.Poly("x2^2 - x2", nvars=2)])
    assert not nullgb.is_groebner([nullgb.Poly("x1^2*x2 - 1"), nullgb.Poly("x1*x2^2 - 1")])


def test_membership_matches_normal_form():
    # Every low-degree polynomial with coefficients in {-1, 0, 1} on a few monomials.
    monos = ["1", "x1", "x2", "x1*x2", "x1^2", "x2^2"]
    for coeffs in itertools.product([-1, 0, 1], repeat=len(monos)):
        text = " + ".join(f"({c})*{m}" for c, m in zip(coeffs, monos))
        member = nullgb.membership(text, GRID, 1)
        assert (member == "true") == nullgb.normal_form(text, GRID, 1).is_zero()


def test_membership_grid_as_text_and_inapplicable():
    assert nullgb.membership("x1^2 - x1", "{S:[[0,1],[0,1]]}", 1) == "true"
    assert nullgb.membership("x1", {"S": [[0, 3]]}, 1, ring="ZZ/6") == "inapplicable"


def test_certificate_round_trip_and_tamper():
    cert = nullgb.certificate("(x1^2 - x1)*(x2 + 4)", GRID, 1)
    assert cert["remainder"] == "0"
    assert nullgb.verify_certificate(cert)
    cert["remainder"] = "x1"
    assert not nullgb.verify_certificate(cert)


def test_counts():
    assert nullgb.count_grid_complement([2, 3], 2) == 18
    assert nullgb.count_punctured_complement([1, 1], [1, 1], 1) == 0
    assert nullgb.count_grid_complement([3, 3, 3], 3) == 27 * 10


def test_punctured_and_mixed():
    pgrid = {"S": [[0, 1], [0, 1]], "E": [[0], [0]]}
    f = "(x1 + x2 - 1)*(x1 + x2 - 2)"
    assert nullgb.punctured_membership(f, pgrid, 1) == "true"
    report = nullgb.punctured_analysis(f, pgrid, 1)
    assert report["divisor"] == "x1*x2 - x1 - x2 + 1"
    value, witness = nullgb.min_extra_degree(pgrid, 2)
    assert value == 4 and witness.degree == 4
    assert nullgb.mixed_membership(witness, pgrid, 2) == "true"
    assert nullgb.membership(witness, GRID, 2) == "false"


def test_blocking_and_alon_furedi():
    assert nullgb.jamison_bound(3, 2) == 5
    size, example = nullgb.min_blocking_multiset(2, 2)
    assert size == 3 and len(example) == 3
    rep = nullgb.alon_furedi("x1 + x2 + 1", [["0", "1"], ["0", "1"]], [1, 1], ring="GF(2)")
    assert rep["holds"]


def test_cli_in_process():
    code, out, _ = nullgb.run_cli(["count", "--alpha", "(2,3)", "--t", "2"])
    assert code == 0 and out.strip() == "18"
    code, _, err = nullgb.run_cli(["bogus"])
    assert code == 3
