"""Comparison languages: pair words whose quotient relates to a fixed bound.

For a bound beta = p/q the automaton tracks D = num*q - den*p exactly while
it stays inside the band (-q, max(p, 1)); outside the band the eventual sign
of D is already forced, whatever digits follow, so two absorbing states
suffice. One extra bit records whether the denominator component has seen a
nonzero digit (otherwise the quotient is undefined and every relation
rejects). The exact-band core has at most 2*(p + q + 1) states.

Why the thresholds are sound: after reading m more digit pairs appending
(x, y) to the values, the final sign quantity is k^m * D + x*q - y*p with
0 <= x, y <= k^m - 1. If D >= max(p, 1) this is at least
k^m * (D - p) + p >= 1, and if D <= -q it is at most -q <= -1.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .words import MSB

from .automaton import Automaton, alphabet

LT, LE, EQ, GE, GT, NE = "lt", "le", "eq", "ge", "gt", "ne"
RELATIONS = (LT, LE, EQ, GE, GT, NE)

_SIGNS_ACCEPTED = {
    LT: (-1,),
    LE: (-1, 0),
    EQ: (0,),
    GE: (0, 1),
    GT: (1,),
    NE: (-1, 1),
}

_GREATER = "G"
_LESS = "L"


@lru_cache(maxsize=None)
def _comparator_states(k: int, p: int, q: int):
    """Reachable (defined, band) states and the dense transition map."""
    hi = max(p, 1)
    start = (0, 0)
    index = {start: 0}
    states = [start]
    delta = {}
    syms = alphabet(k, 2)
    i = 0
    while i < len(states):
        defined, band = states[i]
        row = {}
        for a, b in syms:
            ndef = 1 if (defined or b > 0) else 0
            if band in (_GREATER, _LESS):
                nband = band
            else:
                d2 = k * band + a * q - b * p
                if d2 >= hi:
                    nband = _GREATER
                elif d2 <= -q:
                    nband = _LESS
                else:
                    nband = d2
            nstate = (ndef, nband)
            if nstate not in index:
                index[nstate] = len(states)
                states.append(nstate)
            row[(a, b)] = (index[nstate],)
        delta[i] = row
        i += 1
    return tuple(states), delta


def _state_sign(band) -> int:
    if band == _GREATER:
        return 1
    if band == _LESS:
        return -1
    return 0 if band == 0 else (1 if band > 0 else -1)


def raw_compare_automaton(k: int, beta: Fraction, rel: str) -> Automaton:
    """The exact-band comparator before minimization (deterministic, complete)."""
    if rel not in RELATIONS:
        raise ValueError(f"unknown relation {rel!r}")
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("comparison bound must be non-negative")
    p, q = beta.numerator, beta.denominator
    states, delta = _comparator_states(k, p, q)
    ok = _SIGNS_ACCEPTED[rel]
    accepting = {i for i, (defined, band) in enumerate(states)
                 if defined and _state_sign(band) in ok}
    return Automaton(k, 2, len(states), {0}, accepting, delta, order=MSB)


@lru_cache(maxsize=None)
def _compare_cached(k: int, p: int, q: int, rel: str) -> Automaton:
    return raw_compare_automaton(k, Fraction(p, q), rel).minimize()


def compare_automaton(k: int, beta: Fraction, rel: str) -> Automaton:
    """Minimal MSB-first DFA for {w : quo(w) defined and quo(w) <rel> beta}.

    Words whose denominator component is all zeros are rejected by every
    relation, the empty word included.
    """
    beta = Fraction(beta)
    if beta < 0:
        raise ValueError("comparison bound must be non-negative")
    return _compare_cached(k, beta.numerator, beta.denominator, rel)
