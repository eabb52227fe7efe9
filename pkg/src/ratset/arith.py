"""Quotient-set arithmetic on pair automata: S+a, S-a, a-S, aS, 1/S, union.

Each construction transforms the *set of quotients* exactly; individual
words are not preserved. The transforms run least-significant-digit first:
reading a word of the source language, a carry transducer emits the digit
streams of the transformed (numerator, denominator) value pair, and the
result automaton accepts exactly those emitted streams. Because the emitted
pair equals the transformed value of the consumed pair, the quotient set of
the output is the transformed quotient set of the input, in both directions.

Inputs are first restricted to words with defined quotients and closed under
most-significant-side zero padding, so that a stream can always be extended
long enough to flush the final carries.

Carry invariants: emitting r*A + s*B from digit streams of (A, B) keeps the
carry within [min(r,0)+min(s,0), max(r,0)+max(s,0)]; the builder asserts
this on every constructed transition.
"""

from __future__ import annotations

from fractions import Fraction

from .words import LSB, MSB
from .automaton import (Automaton, alphabet, defined_pairs, empty_language,
                        nonzero_numerator, pad_symbol, product)
from .compare import GE, LE, compare_automaton


def _to_lsb(a: Automaton) -> Automaton:
    return a.reverse() if a.order == MSB else a


def _restore_order(a: Automaton, order: str) -> Automaton:
    return a.reverse() if a.order != order else a


def _pad_closed_lsb(a: Automaton) -> Automaton:
    """Close an LSB automaton under trailing [0,0] (value-preserving padding)."""
    stripped = a.strip_padding("trailing")
    pad = pad_symbol(a.arity)
    loop = stripped.n
    delta = {s: {sym: set(ds) for sym, ds in row.items()}
             for s, row in enumerate(stripped.delta)}
    delta[loop] = {pad: {loop}}
    for s in stripped.accepting:
        delta[s].setdefault(pad, set()).add(loop)
    accepting = set(stripped.accepting) | {loop}
    return Automaton(stripped.k, stripped.arity, stripped.n + 1,
                     stripped.initial, accepting, delta, order=stripped.order)


def _defined_part(a: Automaton) -> Automaton:
    return product(a, defined_pairs(a.k, order=a.order), "and")


def _linear_image(a: Automaton, r: int, s: int, t: int) -> Automaton:
    """Automaton for the emitted streams (r*A + s*B, t*B) over words of a.

    a must be an LSB pair automaton, already pad-closed. A word is accepted
    when some run over an input word of the same length ends accepting with
    all carries flushed to zero; runs whose numerator carry cannot flush
    (the transformed numerator would be negative) simply die.
    """
    if a.order != LSB:
        raise ValueError("the image transducer is least-significant-first")
    k = a.k
    num_lo, num_hi = min(r, 0) + min(s, 0), max(r, 0) + max(s, 0)
    den_lo, den_hi = min(t, 0), max(t, 0)
    syms = alphabet(k, 2)
    start_states = tuple(sorted(a.initial))
    index: dict = {}
    states: list = []
    delta: dict = {}

    def intern(st):
        if st not in index:
            index[st] = len(states)
            states.append(st)
            delta[index[st]] = {}
        return index[st]

    inits = {intern((q, 0, 0)) for q in start_states}
    i = 0
    while i < len(states):
        q, cn, cd = states[i]
        row = delta[i]
        for (ia, ib) in syms:
            dsts = a.delta[q].get((ia, ib), ())
            if not dsts:
                continue
            vn = r * ia + s * ib + cn
            xn = vn % k
            cn2 = (vn - xn) // k
            vd = t * ib + cd
            xd = vd % k
            cd2 = (vd - xd) // k
            assert num_lo <= cn2 <= num_hi and den_lo <= cd2 <= den_hi, \
                "carry left its invariant range"
            for q2 in dsts:
                j = intern((q2, cn2, cd2))
                row.setdefault((xn, xd), set()).add(j)
        i += 1
    accepting = {i for i, (q, cn, cd) in enumerate(states)
                 if q in a.accepting and cn == 0 and cd == 0}
    return Automaton(k, 2, len(states), inits, accepting, delta, order=LSB)


def _build(a: Automaton, r, s, t) -> Automaton:
    original = a.order
    prepared = _pad_closed_lsb(_to_lsb(_defined_part(a)))
    out = _linear_image(prepared, r, s, t)
    return _restore_order(out.minimize(), original).minimize()


def _zero_values(k: int, order: str) -> Automaton:
    z = compare_automaton(k, Fraction(0), "eq")
    return z if order == MSB else z.reverse()


def _has_value_rel(a: Automaton, alpha: Fraction, rel: str) -> bool:
    m = _restore_order(a, MSB)
    return not product(m, compare_automaton(a.k, alpha, rel), "and").is_empty()


def shift_add(a: Automaton, alpha: Fraction) -> Automaton:
    """Quotient set of the result is {x + alpha : x in quo-set(a)}."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("shift must be non-negative")
    p, q = alpha.numerator, alpha.denominator
    return _build(a, q, p, q)


def shift_sub(a: Automaton, alpha: Fraction) -> Automaton:
    """Truncated subtraction: {max(x - alpha, 0) : x in quo-set(a)}.

    Words whose value falls below alpha cannot flush their negative carry and
    die; the floor at zero is restored by adjoining every representation of 0
    exactly when the source set meets [0, alpha].
    """
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("shift must be non-negative")
    p, q = alpha.numerator, alpha.denominator
    out = _build(a, q, -p, q)
    if _has_value_rel(a, alpha, LE):
        out = product(out, _zero_values(a.k, out.order), "or").minimize()
    return out


def sub_from(alpha: Fraction, a: Automaton) -> Automaton:
    """{max(alpha - x, 0) : x in quo-set(a)}."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("shift must be non-negative")
    p, q = alpha.numerator, alpha.denominator
    out = _build(a, -q, p, q)
    if _has_value_rel(a, alpha, GE):
        out = product(out, _zero_values(a.k, out.order), "or").minimize()
    return out


def scale(a: Automaton, alpha: Fraction) -> Automaton:
    """{alpha * x : x in quo-set(a)}; alpha = 0 collapses a nonempty set to {0}."""
    alpha = Fraction(alpha)
    if alpha < 0:
        raise ValueError("scale factor must be non-negative")
    p, q = alpha.numerator, alpha.denominator
    return _build(a, p, 0, q)


def reciprocal(a: Automaton) -> Automaton:
    """{1/x : x in quo-set(a), x != 0}, by swapping the pair components."""
    d = product(_defined_part(a), nonzero_numerator(a.k, order=a.order), "and")
    delta = {s: {} for s in range(d.n)}
    for s, row in enumerate(d.delta):
        for (x, y), ds in row.items():
            delta[s][(y, x)] = ds
    swapped = Automaton(d.k, 2, d.n, d.initial, d.accepting, delta,
                        order=d.order)
    return swapped.minimize()


def union_sets(a: Automaton, b: Automaton) -> Automaton:
    """Quotient-set union; realized as the language union of defined parts."""
    if a.order != b.order:
        b = b.reverse()
    return product(_defined_part(a), _defined_part(b), "or").minimize()
