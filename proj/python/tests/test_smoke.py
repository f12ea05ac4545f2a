from fractions import Fraction

import pytest

import tiltwall


def test_push_example():
    assert tiltwall.push(5, (2, -1, Fraction(-3, 2))) == (0, 10, -30, Fraction(158, 3))


def test_wall_and_q():
    w = tiltwall.wall((2, -1, Fraction(-3, 2)), (-1, 4, -8))
    assert (w["s"], w["rho_sq"]) == ("-5/2", "9/4")
    assert tiltwall.q_form("0,10,-25,110/3", -1, 0) == -100
    assert tiltwall.wall_q("0,10,-25,110/3")["rho_sq"] == "13/4"


def test_lattice_ops():
    assert tiltwall.twist((2, 0, -1, 0), -1) == (2, 2, 0, Fraction(-2, 3))
    assert tiltwall.delta("2,-1,-3/2") == 7
    assert tiltwall.chi("1,0,0,0") == 1


def test_enumeration_slice():
    walls = tiltwall.enumerate_walls("0,10,-25,113/3", rho_min="13/4", torsion_rank2=True, parity=True)
    xs = {Fraction(c["subclass"]["ch"][1]) for c in walls if c["subclass"]["ch"][0] == "2"}
    assert xs == {-1, 0, 1}


def test_ledger_and_svg():
    entries = tiltwall.run_ledger("V16")
    assert entries and all(e["pass"] for e in entries)
    svg = tiltwall.render_svg({"beta_range": ["-5", "0"], "alpha_max": "3", "walls": [], "marks": [], "q_wall": None})
    assert svg.startswith("<?xml")


def test_errors():
    with pytest.raises(tiltwall.ParseError):
        tiltwall.delta("1,x,0")
    with pytest.raises(tiltwall.DomainError):
        tiltwall.q_form("1,0,0", 0, 1)
