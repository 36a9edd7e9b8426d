import json
import math
from fractions import Fraction

import pytest

import sym3inv

L6_WITNESS = ["3/5", "0", "0", "6/5", "0", "-4/5", "0", "1/2", "0", "-1/2"]


def test_exact_invariants_of_l6_witness():
    inv = sym3inv.invariants(L6_WITNESS)
    assert len(inv) == 13
    assert inv["I4"] == Fraction(37, 2)
    assert inv["L6"] == -2
    assert inv["I8"] == -9
    assert all(isinstance(v, Fraction) for v in inv.values())


def test_float_invariants_match_exact():
    exact = sym3inv.invariants(L6_WITNESS)
    approx = sym3inv.invariants([float(Fraction(c)) for c in L6_WITNESS])
    for name, value in exact.items():
        assert approx[name] == pytest.approx(float(value), abs=1e-12)


def test_decompose_recovers_vector():
    parts = sym3inv.decompose(L6_WITNESS)
    assert parts["vector"] == [1, 0, 0]
    assert len(parts["deviator"]) == 7


def test_discover_degree_ten():
    d = sym3inv.discover(13, 10, 1)
    assert d["products"] == 80
    assert len(d["relations"]) == 2
    assert all(d["builtin_in_span"].values())


@pytest.mark.parametrize("case", ["L6", "K4", "J6", "L4", "M6", "J4"])
def test_witness_cases_pass(case):
    assert sym3inv.witness(case)["pass"]


def test_witness_rejects_bad_options():
    with pytest.raises(ValueError):
        sym3inv.witness("L6", theta=1.0)


def test_minimize_reaches_one_fifth():
    m = sym3inv.minimize(1, starts=20, iters=300)
    assert m["value"] == pytest.approx(0.2, abs=1e-3)
    assert m["value"] >= 0.2 - 1e-6
    assert abs(sym3inv.reported_minimizer_value() - 0.2) <= 2e-3
    assert math.isclose(sum(x * x for x in m["vector"]), 1.0, rel_tol=1e-9)


def test_run_cli_exit_codes():
    code, out, _ = sym3inv.run_cli(["verify-syzygies", "--samples", "10", "--seed", "3"])
    assert code == 0
    assert json.loads(out)["pass"]
    code, out, err = sym3inv.run_cli(["invariants", "/nonexistent.json"])
    assert code == 5
    assert out == "" and err
    assert sym3inv.run_cli(["bogus"])[0] == 2
