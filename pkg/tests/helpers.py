"""Shared exact-check helpers for the test suite."""

from fractions import Fraction

from ratset.compare import RELATIONS, compare_automaton

_SIGNS_OK = {
    "lt": (-1,),
    "le": (-1, 0),
    "eq": (0,),
    "ge": (0, 1),
    "gt": (1,),
    "ne": (-1, 1),
}


def comparison_mismatch_count(k, beta, max_len):
    """Exhaustively compare the six relation automata against direct
    rational comparison on every pair word of length <= max_len.

    The direct side tracks the exact integer num*q - den*p (its sign is the
    comparison verdict) and whether the denominator component is nonzero.
    Returns the number of (word, relation) mismatches.
    """
    beta = Fraction(beta)
    p, q = beta.numerator, beta.denominator
    tables = [compare_automaton(k, beta, rel).dfa_table()
              for rel in RELATIONS]
    trans = [t[0] for t in tables]
    accept = [t[1] for t in tables]
    inits = [t[2] for t in tables]
    nsym = k * k
    syms = [(a, b) for a in range(k) for b in range(k)]
    csym = [a * q - b * p for a, b in syms]
    bpos = [b > 0 for _a, b in syms]
    expected = {}
    for defined in (False, True):
        for sign in (-1, 0, 1):
            expected[(defined, sign)] = tuple(
                defined and (sign in _SIGNS_OK[rel]) for rel in RELATIONS)
    mismatches = 0
    # DFS frames: (six automaton states, exact difference, defined, depth)
    stack = [(tuple(inits), 0, False, 0)]
    while stack:
        states, diff, defined, depth = stack.pop()
        sign = 0 if diff == 0 else (1 if diff > 0 else -1)
        want = expected[(defined, sign)]
        for i, s in enumerate(states):
            got = s >= 0 and accept[i][s]
            if got != want[i]:
                mismatches += 1
        if depth == max_len:
            continue
        for j in range(nsym):
            nstates = tuple(trans[i][s][j] if s >= 0 else -1
                            for i, s in enumerate(states))
            stack.append((nstates, k * diff + csym[j],
                          defined or bpos[j], depth + 1))
    return mismatches
