"""Quantum K-theory of cominuscule flag varieties."""

import json

from . import _qkc
from ._qkc import ConfigError, DomainError, InvariantError, distance, psi, run, shapes, space_name, verify

__all__ = [
    "ConfigError",
    "DomainError",
    "InvariantError",
    "alpha",
    "chev",
    "detq",
    "distance",
    "format_expr",
    "ideal",
    "psi",
    "qideal",
    "run",
    "shapes",
    "space_name",
    "verify",
]


def ideal(space, mu):
    """I^mu in the O basis, as a dict with keys basis, space, terms."""
    return json.loads(_qkc.ideal(space, str(list(mu))))


def qideal(space, mu):
    """I_q^mu = I^mu - q psi(I^mu) in the O basis."""
    return json.loads(_qkc.qideal(space, str(list(mu))))


def alpha(space, mu):
    return json.loads(_qkc.alpha(space, str(list(mu))))


def chev(space, mu, quantum=False):
    """O^mu * (1 - O^{s_gamma}), classical or quantum."""
    return json.loads(_qkc.chev(space, str(list(mu)), quantum))


def detq(k, n, mu):
    """det Q * O^mu in QK_T(Gr(k,n)); coefficients are GL(n) exponent vectors."""
    return json.loads(_qkc.detq(k, n, list(mu)))


def format_expr(expr):
    """Text form of an expression dict, e.g. 'O^[2,1] - O^[2,2] - q*(O^[] - O^[1])'."""
    return _qkc.format(expr["space"], json.dumps(expr))
