"""Exact computations in affine Weyl groups and integral Weyl groups of blocks."""

import json
from fractions import Fraction

from . import _fkw
from ._fkw import CapExceeded, Inconclusive, InputError, IntegrityError

__all__ = [
    "CapExceeded",
    "Inconclusive",
    "InputError",
    "IntegrityError",
    "dominant_in_block",
    "dot",
    "length",
    "reduce",
    "selftest",
    "weylinfo",
]


def _text(value):
    if isinstance(value, str):
        return value
    if isinstance(value, (list, tuple)):
        return ",".join(_text(v) for v in value)
    return str(Fraction(value))


def _level_args(level, shifted_level):
    return ("" if level is None else _text(level), "" if shifted_level is None else _text(shifted_level))


def _split(type):
    if len(type) == 1:
        raise InputError("give a full type label such as 'A2'")
    return type, 0


def _fractions(values):
    return [Fraction(v) for v in values]


def reduce(type, lam=(), mu=(), *, level=None, shifted_level=None, ball=-1):
    """Reduce the Wakimoto-type module attached to the coweight ``mu`` at the dominant weight ``lam``."""
    t, r = _split(type)
    return json.loads(_fkw.reduce_json(t, r, *_level_args(level, shifted_level), _text(lam), list(mu), ball))


def weylinfo(type, lam=(), *, level=None, shifted_level=None):
    t, r = _split(type)
    return json.loads(_fkw.weylinfo_json(t, r, *_level_args(level, shifted_level), _text(lam)))


def dot(type, word, mu, lam, *, level=None, shifted_level=None):
    """Dot action of ``s_word * e^mu`` on ``lam``; returns simple-root coordinates."""
    t, r = _split(type)
    return _fractions(json.loads(_fkw.dot_json(t, r, *_level_args(level, shifted_level), list(word), list(mu), _text(lam))))


def length(type, word=(), mu=()):
    """Length of ``s_word * e^mu``; ``word`` lists simple reflections numbered from 1."""
    t, r = _split(type)
    return _fkw.length(t, r, list(word), list(mu))


def dominant_in_block(type, lam, *, level=None, shifted_level=None, radius=4):
    t, r = _split(type)
    rows = _fkw.dominant_in_block(t, r, *_level_args(level, shifted_level), _text(lam), radius)
    return [_fractions(json.loads(row)) for row in rows]


def selftest(ball=-1):
    return [{"name": n, "status": s, "detail": d} for n, s, d in _fkw.selftest(ball)]
