"""Exact tilt-stability walls on P^3 and hypersurfaces, backed by a C++ core."""

import json
from fractions import Fraction

from . import _core
from ._core import DomainError, ParseError

__all__ = [
    "DomainError",
    "ParseError",
    "chi",
    "delta",
    "enumerate_walls",
    "push",
    "q_form",
    "render_svg",
    "run_ledger",
    "twist",
    "wall",
    "wall_q",
]


def _text(values):
    if isinstance(values, str):
        return values
    return ",".join(str(Fraction(x)) for x in values)


def _tuple(text):
    return tuple(Fraction(x) for x in text.split(","))


def twist(v, beta, space="p3"):
    return _tuple(_core.twist(_text(v), str(Fraction(beta)), space))


def delta(v, space="p3"):
    return Fraction(_core.delta(_text(v), space))


def chi(v):
    return Fraction(_core.chi(_text(v)))


def wall(v, w):
    return json.loads(_core.wall(_text(v), _text(w)))


def wall_q(v):
    return json.loads(_core.wall_q(_text(v)))


def q_form(v, beta, alpha):
    return Fraction(_core.q_form(_text(v), str(Fraction(beta)), str(Fraction(alpha))))


def push(d, ch_s, input="plain"):
    return _tuple(_core.push(d, _text(ch_s), input))


def enumerate_walls(v, rho_min=None, q_floor=False, torsion_rank2=False, parity=False, rank_max=None, threads=1):
    floor = None if rho_min is None else str(Fraction(rho_min))
    return json.loads(_core.enumerate_walls(_text(v), floor, q_floor, torsion_rank2, parity, rank_max, threads))


def run_ledger(filter=None):
    return json.loads(_core.run_ledger(filter))


def render_svg(spec):
    return _core.render_svg(spec if isinstance(spec, str) else json.dumps(spec))
