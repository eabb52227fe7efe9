"""Brute-force ground truth by exhaustive word enumeration.

Walks the determinized, trimmed automaton graph rather than raw strings, so
dead branches are pruned and each accepted word is visited exactly once.
Yes-answers (a value was seen) are certain; no-answers only mean "not found
within the length bound".
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .automaton import Automaton, ResourceCapError
from .words import LSB

DEFAULT_NODE_BUDGET = 10**7


class OperationCancelled(RuntimeError):
    """A cooperative cancellation token was triggered."""


class CancelToken:
    __slots__ = ("_flag",)

    def __init__(self):
        self._flag = False

    def cancel(self):
        self._flag = True

    @property
    def cancelled(self):
        return self._flag


@dataclass
class EnumerationReport:
    """Exact census of accepted words and their quotients up to a length."""

    max_len: int
    counts: dict[Fraction, int] = field(default_factory=dict)
    words_per_length: tuple[int, ...] = ()
    nodes_visited: int = 0

    def values(self) -> frozenset[Fraction]:
        return frozenset(self.counts)

    def multiply_represented(self) -> frozenset[Fraction]:
        return frozenset(v for v, c in self.counts.items() if c > 1)

    def table_rows(self):
        return sorted(self.counts.items())


def enumerate_quotients(a: Automaton, max_len: int,
                        budget: int = DEFAULT_NODE_BUDGET,
                        token: CancelToken | None = None) -> EnumerationReport:
    """Visit every accepted word of length <= max_len; tally defined quotients."""
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    d = a.determinize().trim()
    counts: dict[Fraction, int] = {}
    per_len = [0] * (max_len + 1)
    nodes = 0
    if d.is_empty():
        return EnumerationReport(max_len, counts, tuple(per_len), nodes)
    trans, accept, init = d.dfa_table()
    syms = d.symbols()
    if d.arity == 1:
        parts = tuple((s, 0) for s in syms)
    else:
        parts = syms
    k = d.k
    lsb = d.order == LSB
    # stack frames: (state, depth, num, den); digit weights depend on order
    stack = [(init, 0, 0, 0)]
    while stack:
        state, depth, num, den = stack.pop()
        nodes += 1
        if nodes > budget:
            raise ResourceCapError(f"enumeration budget {budget} exceeded")
        if token is not None and token.cancelled:
            raise OperationCancelled("enumeration cancelled")
        if accept[state]:
            per_len[depth] += 1
            if den != 0:
                f = Fraction(num, den)
                counts[f] = counts.get(f, 0) + 1
        if depth == max_len:
            continue
        row = trans[state]
        if lsb:
            w = k ** depth
            for i in range(len(parts) - 1, -1, -1):
                t = row[i]
                if t >= 0:
                    sa, sb = parts[i]
                    stack.append((t, depth + 1, num + sa * w, den + sb * w))
        else:
            for i in range(len(parts) - 1, -1, -1):
                t = row[i]
                if t >= 0:
                    sa, sb = parts[i]
                    stack.append((t, depth + 1, num * k + sa, den * k + sb))
    return EnumerationReport(max_len, counts, tuple(per_len), nodes)


def oracle_member(a: Automaton, x: Fraction, max_len: int,
                  budget: int = DEFAULT_NODE_BUDGET) -> bool:
    """True iff some word of length <= max_len represents x (a certain yes)."""
    report = enumerate_quotients(a, max_len, budget=budget)
    return Fraction(x) in report.counts
