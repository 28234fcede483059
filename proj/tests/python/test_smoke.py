"""Smoke tests for the Python bindings: each main operation end to end."""

import json
from fractions import Fraction

import pytest

import pslat


RHO_0 = [2, 1, 0, 1, 1, 0, 1, 0]
RHO_1 = [4, 5, 8, 3, 5, 0, 1, 0]
W_0 = [0, 1, -1, 0, 0, 1, 1, 0]


def test_version():
    assert pslat.__version__ == "0.1.0"


def test_pairing_matches_hand_computation():
    assert pslat.pairing(RHO_0, W_0) == "2"
    assert pslat.pairing(RHO_1, W_0) == "-2"
    assert pslat.pairing(["1/2"] * 8, [Fraction(2, 1)] * 8) == "8"


def test_normalize_ray():
    assert pslat.normalize_ray(["1/2", 0, 0, 0, 0, 0, 0, "1/2"]) == [1, 0, 0, 0, 0, 0, 0, 1]
    with pytest.raises(ValueError):
        pslat.normalize_ray([0] * 8)


def test_chain_values():
    assert pslat.rho(0) == [str(x) for x in RHO_0]
    assert pslat.rho(1) == [str(x) for x in RHO_1]
    assert pslat.witness(1) == ["0", "-1", "1", "0", "0", "3", "3", "2"]
    assert pslat.chain_constant(2) == "13"
    inc = pslat.rho_increments(0)
    assert inc["gamma"] == ["0", "0", "2", "0", "2", "0", "0", "0"]


def test_eval_and_membership():
    alpha = pslat.eval_expr("A")
    assert len(alpha.rays()) == 12
    assert len(alpha.facets()) == 16
    assert alpha.dim() == 8

    verdict = pslat.member(RHO_0, "A")
    assert verdict["inside"] is True
    assert verdict["certificate"]["kind"] == "inside"

    verdict = pslat.member(RHO_1, "A")
    assert verdict["inside"] is False
    assert verdict["certificate"]["kind"] == "outside"

    assert pslat.member(RHO_1, "f^1(A)")["inside"] is True


def test_cone_operators_and_json():
    a = pslat.eval_expr("A")
    b = pslat.eval_expr("B")
    hull = a | b
    assert a <= hull
    assert not (hull <= a)
    assert (a & b) <= a

    raw = json.loads(hull.to_json())
    assert "rays" in raw
    again = pslat.Cone.from_json(hull.to_json())
    assert again == hull


def test_profile():
    profile = pslat.ps_profile([1, 0, 0, 0, 0, 0, 0, 1])
    assert profile["class_bits"] == "1" * 18
    pure = pslat.ps_profile([1, 0, 0, 0, 0, 0, 0, 0])
    assert pure["class_bits"][:3] == "000"
    with pytest.raises(ValueError):
        pslat.ps_profile([1, -1, 0, 0, 0, 0, 0, 0])


def test_xstate_conversions():
    x = pslat.xstate_from_spectrum(RHO_0)
    assert x["a"] == ["1", "1", "0", "1"]
    assert x["c"] == ["1", "0", "0", "0"]
    back = pslat.spectrum_from_xstate(x["a"], x["b"], x["c"])
    assert back == [str(v) for v in RHO_0]
    with pytest.raises(ValueError):
        pslat.spectrum_from_xstate([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 0])


def test_replays_and_chain():
    report = pslat.paper_verify(10)
    assert report["all_ok"] is True
    assert report["pairing_values"] == ["-2"] * 10

    links = pslat.verify_chain(1)
    assert links == [
        {"n": 1, "grows": True, "strict": True, "rho_inside": True, "rho_outside_prev": True}
    ]


def test_syntax_errors_are_value_errors():
    with pytest.raises(ValueError):
        pslat.eval_expr("(")
    assert pslat.parse_expr("A|B&C") == "(A|(B&C))"
