"""Decision procedures over quotient sets of pair automata.

Everything here is exact and terminates: emptiness, finite-set containment
both ways, infinitude of the quotient set, suprema/infima, accumulation
points, integrality of the whole set (with extraction of an integer-set
automaton), and shortest representations.

Conventions shared by every procedure:

 - inputs may be NFAs in either significance order; they are normalized to
   MSB-first and intersected with the definedness language (denominator has
   a nonzero digit) so words with undefined quotients never influence a
   verdict;
 - "n" in every bound is the state count of the minimized, trimmed DFA of
   the normalized input;
 - witnesses are always the lexicographically least shortest words, so test
   output is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

from .words import MSB, PairWord, canonical
from .automaton import (Automaton, ResourceCapError, alphabet, defined_pairs,
                        enumerate_pumping_candidates, from_word_set,
                        no_leading_pad, product, shortest_accepted)
from .compare import EQ, GE, GT, LT, NE, compare_automaton
from .oracle import CancelToken, OperationCancelled

DEFAULT_CANDIDATE_CAP = 10**6
DEFAULT_NODE_CAP = 10**7


class PreconditionError(ValueError):
    """An input violates a documented precondition."""


def _msb(a: Automaton) -> Automaton:
    return a.reverse() if a.order != MSB else a


def _defined(a: Automaton) -> Automaton:
    return product(a, defined_pairs(a.k, order=a.order), "and")


def quoset_is_empty(a: Automaton) -> bool:
    return _defined(_msb(a)).is_empty()


# -- membership and finite-set containment ---------------------------------


def exists_rel(a: Automaton, alpha: Fraction, rel: str):
    """Is there x in the quotient set with x <rel> alpha?  (verdict, witness)"""
    m = _msb(a)
    prod = product(m, compare_automaton(m.k, Fraction(alpha), rel), "and")
    w = shortest_accepted(prod)
    if w is None:
        return False, None
    return True, PairWord(w, m.k, MSB)


def finite_subset(a: Automaton, values) -> bool:
    """Is the finite set of rationals contained in the quotient set?"""
    return all(exists_rel(a, x, EQ)[0] for x in values)


def subset_finite(a: Automaton, values, node_cap: int = DEFAULT_NODE_CAP,
                  token: CancelToken | None = None):
    """Is the quotient set contained in the finite set?  (verdict, witness)

    Runs one search over the input DFA joined with exact difference trackers
    D_x = num*q_x - den*p_x for every x = p_x/q_x, each clipped to its sign
    band; a defined accepted word with no tracker at zero is a counterexample
    and the first one found (shortest, lexicographically least) is returned.
    """
    m = _msb(a).determinize().trim()
    if m.is_empty():
        return True, None
    targets = sorted({(Fraction(x).numerator, Fraction(x).denominator)
                      for x in values})
    trans, accept, init = m.dfa_table()
    syms = m.symbols()
    k = m.k
    start_sig = frozenset((i, 0) for i in range(len(targets)))
    start = (init, 0, start_sig)
    parent = {start: None}
    queue = deque([start])
    nodes = 0
    while queue:
        state = queue.popleft()
        s, defined, sig = state
        nodes += 1
        if nodes > node_cap:
            raise ResourceCapError(f"containment search cap {node_cap} exceeded")
        if token is not None and token.cancelled:
            raise OperationCancelled("containment search cancelled")
        if accept[s] and defined and all(d != 0 for _, d in sig):
            path = []
            cur = state
            while parent[cur] is not None:
                cur, sym = parent[cur]
                path.append(sym)
            w = tuple(reversed(path))
            return False, PairWord(w, k, MSB)
        for si, sym in enumerate(syms):
            t = trans[s][si]
            if t < 0:
                continue
            x, y = sym
            nd = 1 if (defined or y > 0) else 0
            nsig = []
            for i, d in sig:
                p, q = targets[i]
                d2 = k * d + x * q - y * p
                if -q < d2 < max(p, 1):
                    nsig.append((i, d2))
            nstate = (t, nd, frozenset(nsig))
            if nstate not in parent:
                parent[nstate] = (state, sym)
                queue.append(nstate)
    return True, None


# -- infinitude -------------------------------------------------------------


def canonical_defined(a: Automaton) -> Automaton:
    """Normalized machine for quotient-set procedures: MSB, defined, canonical."""
    m = _defined(_msb(a))
    m = product(m, no_leading_pad(m.k, 2, order=MSB), "and")
    return m.minimize()


def _short_word_quotients(m: Automaton, below: int,
                          node_cap: int = DEFAULT_NODE_CAP):
    """Quotients of accepted words of length < below (m: trimmed DFA)."""
    out = set()
    if m.is_empty() or below <= 0:
        return out
    trans, accept, init = m.dfa_table()
    syms = m.symbols()
    k = m.k
    stack = [(init, 0, 0, 0)]
    nodes = 0
    while stack:
        s, depth, num, den = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise ResourceCapError(f"short-word scan cap {node_cap} exceeded")
        if accept[s] and den != 0:
            out.add(Fraction(num, den))
        if depth >= below - 1:
            continue
        for si in range(len(syms) - 1, -1, -1):
            t = trans[s][si]
            if t >= 0:
                x, y = syms[si]
                stack.append((t, depth + 1, num * k + x, den * k + y))
    return out


def candidate_set(a: Automaton, max_candidates: int = DEFAULT_CANDIDATE_CAP,
                  node_cap: int = DEFAULT_NODE_CAP) -> set[Fraction]:
    """Finite candidate set: short-word quotients plus cycle limit quotients.

    For every stem/cycle pair (u, v) of the canonical machine the limit
    quotient is the ratio of prefix-value differences; pairs whose
    denominator difference is zero are skipped (their pumped families have
    constant denominator prefix zero, so they either repeat a shorter word's
    value or diverge, and contribute no finite limit).
    """
    m = canonical_defined(a)
    if m.is_empty():
        return set()
    n = m.n
    out = _short_word_quotients(m, n, node_cap)
    for u, v in enumerate_pumping_candidates(m, max_candidates):
        uv = u + v
        num_u = den_u = num_uv = den_uv = 0
        for x, y in u:
            num_u = num_u * m.k + x
            den_u = den_u * m.k + y
        for x, y in uv:
            num_uv = num_uv * m.k + x
            den_uv = den_uv * m.k + y
        dden = den_uv - den_u
        if dden > 0:
            out.add(Fraction(num_uv - num_u, dden))
    return out


def is_quoset_infinite(a: Automaton,
                       max_candidates: int = DEFAULT_CANDIDATE_CAP,
                       node_cap: int = DEFAULT_NODE_CAP):
    """(True, None) if the quotient set is infinite, else (False, the set).

    The set is finite exactly when it is contained in its candidate set.
    """
    t = candidate_set(a, max_candidates, node_cap)
    contained, _w = subset_finite(a, t, node_cap)
    if not contained:
        return True, None
    members = {x for x in sorted(t) if exists_rel(a, x, EQ)[0]}
    return False, members


# -- extrema and accumulation points ----------------------------------------


def sup_quoset(a: Automaton, max_candidates: int = DEFAULT_CANDIDATE_CAP,
               node_cap: int = DEFAULT_NODE_CAP):
    """Supremum of the quotient set: a Fraction, or None when unbounded.

    Every quotient is a short-word value or lies on a monotone pumped chain
    converging to a candidate, so the supremum is the least candidate that
    dominates the whole set; if no candidate dominates, the set is unbounded.
    """
    if quoset_is_empty(a):
        raise ValueError("empty quotient set has no supremum")
    for c in sorted(candidate_set(a, max_candidates, node_cap)):
        if not exists_rel(a, c, GT)[0]:
            return c
    return None


def inf_quoset(a: Automaton, max_candidates: int = DEFAULT_CANDIDATE_CAP,
               node_cap: int = DEFAULT_NODE_CAP) -> Fraction:
    if quoset_is_empty(a):
        raise ValueError("empty quotient set has no infimum")
    for c in sorted(candidate_set(a, max_candidates, node_cap), reverse=True):
        if not exists_rel(a, c, LT)[0]:
            return c
    raise RuntimeError("no candidate bounds the set below; this cannot happen")


def is_accumulation_point(a: Automaton, alpha: Fraction,
                          max_candidates: int = DEFAULT_CANDIDATE_CAP,
                          node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """Is alpha approached by infinitely many set elements from either side?"""
    alpha = Fraction(alpha)
    m = _msb(a)
    below = product(m, compare_automaton(m.k, alpha, LT), "and").trim()
    if not below.is_empty():
        if sup_quoset(below, max_candidates, node_cap) == alpha:
            return True
    above = product(m, compare_automaton(m.k, alpha, GT), "and").trim()
    if not above.is_empty():
        if inf_quoset(above, max_candidates, node_cap) == alpha:
            return True
    return False


# -- base-power structure of integer sets ------------------------------------


@dataclass(frozen=True)
class ZeroTail:
    """Ultimately periodic description of {j : word . 0^j is accepted}."""

    pre_members: tuple[int, ...]
    preperiod: int
    period: int
    residues: frozenset[int]

    def contains(self, j: int) -> bool:
        if j < self.preperiod:
            return j in self.pre_members
        return (j - self.preperiod) % self.period in self.residues

    def members_upto(self, limit: int):
        return [j for j in range(limit) if self.contains(j)]


@dataclass(frozen=True)
class KFiniteData:
    """A finite union of f * k^j families with ultimately periodic exponents."""

    k: int
    entries: tuple[tuple[int, ZeroTail], ...]

    def factors(self):
        return tuple(f for f, _ in self.entries)


def _leading_zero_words(k: int) -> Automaton:
    delta = {0: {0: (1,)}, 1: {d: (1,) for d in range(k)}}
    return Automaton(k, 1, 2, {0}, {1}, delta, order=MSB)


def k_finite_analysis(nat: Automaton,
                      node_cap: int = DEFAULT_NODE_CAP):
    """Analyze an integer-set automaton into k-power families, or None.

    The input must accept canonical (leading-zero-free) representations of
    positive integers. Stripping trailing zeros must leave a finite language;
    otherwise the set is not expressible as finitely many f * k^j families
    and None is returned.
    """
    if nat.arity != 1:
        raise PreconditionError("integer-set analysis needs a digit automaton")
    m = _msb(nat)
    d = m.determinize()
    if d.accepts(()):
        raise PreconditionError("the language represents 0 (empty word)")
    if not product(m, _leading_zero_words(m.k), "and").is_empty():
        raise PreconditionError("the language has non-canonical words")
    stripped = m.strip_padding("trailing").trim()
    if not stripped.is_finite_language():
        return None
    factors = sorted(_finite_language_values(stripped, node_cap))
    dd = d.trim()
    entries = []
    for f in factors:
        assert f % m.k != 0, "stripped factor still divisible by the base"
        entries.append((f, _zero_tail_from(dd, f)))
    return KFiniteData(m.k, tuple(entries))


def _finite_language_values(m: Automaton, node_cap: int):
    out = set()
    if m.is_empty():
        return out
    t = m.determinize().trim()
    trans, accept, init = t.dfa_table()
    stack = [(init, 0)]
    nodes = 0
    while stack:
        s, val = stack.pop()
        nodes += 1
        if nodes > node_cap:
            raise ResourceCapError(f"finite-language scan cap {node_cap} exceeded")
        if accept[s]:
            out.add(val)
        for d in range(t.k - 1, -1, -1):
            nxt = trans[s][d]
            if nxt >= 0:
                stack.append((nxt, val * t.k + d))
    return out


def _zero_tail_from(dfa: Automaton, f: int) -> ZeroTail:
    trans, accept, init = dfa.dfa_table()
    s = init
    for digit in canonical(f, dfa.k):
        s = trans[s][digit]
        if s < 0:
            return ZeroTail((), 0, 1, frozenset())
    seen = {}
    chain = []
    cur = s
    while cur >= 0 and cur not in seen:
        seen[cur] = len(chain)
        chain.append(cur)
        cur = trans[cur][0]
    if cur < 0:
        pre = tuple(j for j, st in enumerate(chain) if accept[st])
        return ZeroTail(pre, len(chain), 1, frozenset())
    mu = seen[cur]
    lam = len(chain) - mu
    pre = tuple(j for j in range(mu) if accept[chain[j]])
    res = frozenset((j - mu) % lam for j in range(mu, mu + lam)
                    if accept[chain[j]])
    return ZeroTail(pre, mu, lam, res)


def rebuild_k_finite(data: KFiniteData) -> Automaton:
    """Automaton of the union of canonical(f) . {0^j : j in the tail}."""
    k = data.k
    pieces = []
    for f, tail in data.entries:
        word = canonical(f, k).digits
        total = tail.preperiod + tail.period
        nstates = len(word) + total
        delta = {}
        for i, digit in enumerate(word):
            delta[i] = {digit: (i + 1,)}
        base = len(word)
        for j in range(total):
            src = base + j
            dst = base + (j + 1 if j + 1 < total else tail.preperiod)
            delta[src] = {0: (dst,)}
        accepting = {base + j for j in range(total) if tail.contains(j)}
        pieces.append(Automaton(k, 1, nstates, {0}, accepting, delta,
                                order=MSB))
    if not pieces:
        return Automaton(k, 1, 1, {0}, set(), {}, order=MSB)
    out = pieces[0]
    for p in pieces[1:]:
        out = product(out, p, "or")
    return out.minimize()


# -- integrality of the whole quotient set -----------------------------------


def divisibility_automaton(k: int, d: int) -> Automaton:
    """Pair words whose numerator value is divisible by d (d >= 1)."""
    if d < 1:
        raise ValueError("modulus must be >= 1")
    syms = alphabet(k, 2)
    delta = {r: {} for r in range(d)}
    for r in range(d):
        for a, b in syms:
            delta[r][(a, b)] = ((r * k + a) % d,)
    return Automaton(k, 2, d, {0}, {0}, delta, order=MSB)


def den_value_automaton(k: int, d: int) -> Automaton:
    """Pair words whose denominator value equals d exactly (d >= 1)."""
    if d < 1:
        raise ValueError("denominator must be >= 1")
    dead = d + 1
    syms = alphabet(k, 2)
    delta = {}
    for v in range(d + 1):
        row = {}
        for a, b in syms:
            v2 = v * k + b
            row[(a, b)] = (v2,) if v2 <= d else (dead,)
        delta[v] = row
    delta[dead] = {sym: (dead,) for sym in syms}
    return Automaton(k, 2, d + 2, {0}, {d}, delta, order=MSB)


def _den_ends_in_zero(k: int) -> Automaton:
    """Pair words with a nonzero denominator whose last den digit is 0."""
    syms = alphabet(k, 2)
    # states: 0 all-zero so far, 1 nonzero seen+last zero, 2 nonzero seen+last nonzero
    delta = {0: {}, 1: {}, 2: {}}
    for a, b in syms:
        delta[0][(a, b)] = (0,) if b == 0 else (2,)
        delta[1][(a, b)] = (1,) if b == 0 else (2,)
        delta[2][(a, b)] = (1,) if b == 0 else (2,)
    return Automaton(k, 2, 3, {0}, {1}, delta, order=MSB)


def divide_projection(a2: Automaton, which: int, d: int) -> Automaton:
    """Digit automaton of {component_value(w) / d : w accepted, d divides it}.

    Requires gcd(d, k) = 1. Runs least-significant-first: each output digit
    x forces the consumed component digit (d*x + carry) mod k, so the whole
    construction is a bounded-carry serial multiplication read backwards.
    """
    from math import gcd
    if gcd(d, a2.k) != 1:
        raise PreconditionError("division requires the modulus coprime to k")
    if which not in (1, 2):
        raise ValueError("component index must be 1 or 2")
    src = _msb(a2).reverse()  # LSB
    k = src.k
    comp = which - 1
    index = {}
    states = []
    delta = {}

    def intern(st):
        if st not in index:
            index[st] = len(states)
            states.append(st)
            delta[index[st]] = {}
        return index[st]

    inits = {intern((q, 0)) for q in sorted(src.initial)}
    i = 0
    while i < len(states):
        q, carry = states[i]
        for x in range(k):
            v = d * x + carry
            c = v % k
            carry2 = v // k
            row = src.delta[q]
            for sym, dsts in row.items():
                if sym[comp] != c:
                    continue
                for q2 in dsts:
                    delta[i].setdefault(x, set()).add(intern((q2, carry2)))
        i += 1
    accepting = {i for i, (q, carry) in enumerate(states)
                 if q in src.accepting and carry == 0}
    out = Automaton(k, 1, len(states), inits, accepting, delta, order="lsb")
    return out.reverse().strip_padding("leading").minimize()


@dataclass
class IntegralityVerdict:
    answer: bool
    m2: Automaton | None = None
    witness: PairWord | None = None
    failed_step: str | None = None


@dataclass
class Decomposition:
    """Finite union shape of an integer-valued pair language.

    Constant-quotient parts (a_i, S_i): words representing (m*a_i, m) for m
    in the integer set of S_i. Constant-denominator parts (b_j, T_j): words
    representing (b_j*n, b_j) for n in the integer set of T_j.
    """

    k: int
    small_parts: tuple
    large_parts: tuple
    normalized_source: Automaton


class _IntegerWindow:
    """Contiguous block of live integer targets t with differences in bands.

    Tracks D_t = num - t*den for every t in [t_lo, t_hi]; the D values form
    an arithmetic progression, so the whole block is four integers.
    """

    __slots__ = ()

    @staticmethod
    def initial(kmax: int):
        return (0, kmax - 1, 0, 0)

    @staticmethod
    def step(window, k: int, a: int, b: int):
        if window is None:
            return None
        t_lo, t_hi, d_lo, stp = window
        nd_lo = k * d_lo + a - t_lo * b
        nstp = k * stp + b
        if nstp > 0:
            if nd_lo < 0:
                return None
            hi = min(t_hi, t_lo + nd_lo // nstp)
        else:
            if nd_lo < 0:
                return None
            hi = t_hi
        if t_lo == 0 and nd_lo == 0:
            lo = 0
        else:
            c = nd_lo + t_lo * nstp
            lo = max(t_lo, c // (1 + nstp) + 1)
        if lo > hi:
            return None
        d_at_lo = nd_lo - (lo - t_lo) * nstp
        if lo == hi:
            return (lo, hi, d_at_lo, 0)
        return (lo, hi, d_at_lo, nstp)

    @staticmethod
    def zero_target(window):
        """The integer t with D_t == 0 in the window, or None."""
        if window is None:
            return None
        t_lo, t_hi, d_lo, stp = window
        if stp == 0:
            return t_lo if d_lo == 0 else None
        if d_lo % stp == 0:
            t = t_lo + d_lo // stp
            if t_lo <= t <= t_hi:
                return t
        return None

    @staticmethod
    def zero_targets(window):
        if window is None:
            return ()
        t_lo, t_hi, d_lo, stp = window
        if stp == 0:
            if d_lo == 0:
                return tuple(range(t_lo, t_hi + 1))
            return ()
        if d_lo % stp == 0:
            t = t_lo + d_lo // stp
            if t_lo <= t <= t_hi:
                return (t,)
        return ()


def _small_quotient_scan(am: Automaton, kmax: int,
                         node_cap: int = DEFAULT_NODE_CAP,
                         token: CancelToken | None = None):
    """One search settling step one of the integrality test.

    Returns (witness, values): witness is the shortest accepted word whose
    quotient lies strictly below kmax and is no integer (or None), and values
    is the set of integers below kmax that occur as quotients (complete only
    when witness is None, since the search stops at the first violation).
    """
    if am.is_empty():
        return None, set()
    m = am.determinize().trim()
    if m.is_empty():
        return None, set()
    trans, accept, init = m.dfa_table()
    syms = m.symbols()
    k = m.k
    big = max(kmax, 1)
    start = (init, 0, _IntegerWindow.initial(kmax), 0)
    parent = {start: None}
    queue = deque([start])
    values: set[int] = set()
    nodes = 0
    while queue:
        state = queue.popleft()
        s, defined, window, comp = state
        nodes += 1
        if nodes > node_cap:
            raise ResourceCapError(f"integrality scan cap {node_cap} exceeded")
        if token is not None and token.cancelled:
            raise OperationCancelled("integrality scan cancelled")
        if accept[s] and defined:
            for t in _IntegerWindow.zero_targets(window):
                values.add(t)
            if comp == "L" and _IntegerWindow.zero_target(window) is None:
                path = []
                cur = state
                while parent[cur] is not None:
                    cur, sym = parent[cur]
                    path.append(sym)
                return PairWord(tuple(reversed(path)), k, MSB), values
        for si, sym in enumerate(syms):
            t2 = trans[s][si]
            if t2 < 0:
                continue
            a, b = sym
            nd = 1 if (defined or b > 0) else 0
            nwin = _IntegerWindow.step(window, k, a, b)
            if comp in ("L", "G"):
                ncomp = comp
            else:
                c2 = k * comp + a - kmax * b
                ncomp = "G" if c2 >= big else ("L" if c2 <= -1 else c2)
            nstate = (t2, nd, nwin, ncomp)
            if nstate not in parent:
                parent[nstate] = (state, sym)
                queue.append(nstate)
    return None, values


def _normalize_for_integrality(a: Automaton):
    m = _msb(a)
    ad = _defined(m)
    has_zero = not product(ad, compare_automaton(m.k, Fraction(0), EQ),
                           "and").is_empty()
    anz = product(ad, compare_automaton(m.k, Fraction(0), NE), "and")
    astr = anz.strip_padding("leading").strip_padding("trailing")
    return astr.minimize(), has_zero


def is_subset_of_naturals(a: Automaton, node_cap: int = DEFAULT_NODE_CAP,
                          token: CancelToken | None = None) -> IntegralityVerdict:
    """Does every quotient of the language lie in the non-negative integers?

    On yes, also produces a digit automaton whose canonical-word values are
    exactly the quotient set. On no, carries a witness word with a
    non-integer quotient when the failing step surfaces one.
    """
    k = a.k
    am, has_zero = _normalize_for_integrality(a)
    if am.is_empty():
        words = [()] if has_zero else []
        return IntegralityVerdict(True, from_word_set(k, 1, words).minimize())
    n = am.n
    kmax = k ** (n + 1)
    witness, small_values = _small_quotient_scan(am, kmax, node_cap, token)
    if witness is not None:
        return IntegralityVerdict(False, witness=witness,
                                  failed_step="small-range-noninteger")
    dens: list[int] = []
    parts = {}
    abig = product(am, compare_automaton(k, Fraction(kmax), GE), "and").trim()
    if not abig.is_empty():
        bad = product(abig, _den_ends_in_zero(k), "and").trim()
        if not bad.is_empty():
            w = shortest_accepted(bad)
            return IntegralityVerdict(False, witness=PairWord(w, k, MSB),
                                      failed_step="denominator-divisible-by-base")
        p2 = abig.project(2).strip_padding("leading").minimize()
        data = k_finite_analysis(p2, node_cap)
        if data is None:
            return IntegralityVerdict(False,
                                      failed_step="denominators-not-k-finite")
        for f, tail in data.entries:
            assert not any(tail.contains(j) for j in range(1, tail.preperiod
                                                           + tail.period)), \
                "a denominator divisible by the base survived stripping"
            if tail.contains(0):
                dens.append(f)
        for d in sorted(dens):
            part = product(abig, den_value_automaton(k, d), "and").trim()
            parts[d] = part
            viol = product(part, divisibility_automaton(k, d).complement(),
                           "and").trim()
            if not viol.is_empty():
                w = shortest_accepted(viol)
                return IntegralityVerdict(False, witness=PairWord(w, k, MSB),
                                          failed_step="numerator-not-divisible")
    words = [canonical(t, k).digits for t in sorted(small_values)]
    if has_zero:
        words.append(())
    m2 = from_word_set(k, 1, words)
    for d in sorted(dens):
        m2 = product(m2, divide_projection(parts[d], 1, d), "or")
    return IntegralityVerdict(True, m2.minimize())


def decompose_integer_valued(a: Automaton,
                             node_cap: int = DEFAULT_NODE_CAP) -> Decomposition:
    """Split an integer-valued pair language into its finite standard union.

    Precondition: the quotient set is contained in the integers (verify with
    is_subset_of_naturals first). Parts are built over the normalized source
    (canonical words, no representations of zero); reassembling them yields
    that normalized language exactly.
    """
    k = a.k
    am, _has_zero = _normalize_for_integrality(a)
    if am.is_empty():
        return Decomposition(k, (), (), am)
    n = am.n
    kmax = k ** (n + 1)
    witness, small_values = _small_quotient_scan(am, kmax, node_cap)
    if witness is not None:
        raise PreconditionError("the quotient set contains a non-integer")
    small_parts = []
    for t in sorted(small_values):
        p_t = product(am, compare_automaton(k, Fraction(t), EQ), "and").trim()
        s_t = p_t.project(2).strip_padding("leading").minimize()
        small_parts.append((t, s_t))
    large_parts = []
    abig = product(am, compare_automaton(k, Fraction(kmax), GE), "and").trim()
    if not abig.is_empty():
        p2 = abig.project(2).strip_padding("leading").minimize()
        data = k_finite_analysis(p2, node_cap)
        if data is None:
            raise PreconditionError("denominators are not base-power finite")
        for f, tail in data.entries:
            if tail.contains(0):
                part = product(abig, den_value_automaton(k, f), "and").trim()
                large_parts.append((f, divide_projection(part, 1, f)))
    return Decomposition(k, tuple(small_parts), tuple(large_parts), am)


def _multiply_pair_image(digit_automaton: Automaton, factor: int,
                         constant_den: int | None) -> Automaton:
    """Pair automaton of canonical (factor*m, m) or (factor*n, constant) words."""
    k = digit_automaton.k
    src = _msb(digit_automaton).reverse()  # LSB digits of the varying integer
    # close under high-side zero padding so carries can flush
    src = src.strip_padding("trailing")
    pad_state = src.n
    delta = {s: {sym: set(ds) for sym, ds in row.items()}
             for s, row in enumerate(src.delta)}
    delta[pad_state] = {0: {pad_state}}
    for s in src.accepting:
        delta[s].setdefault(0, set()).add(pad_state)
    src = Automaton(k, 1, src.n + 1, src.initial,
                    set(src.accepting) | {pad_state}, delta, order="lsb")
    den_digits = (tuple(reversed(canonical(constant_den, k).digits))
                  if constant_den is not None else None)
    index = {}
    states = []
    delta2 = {}

    def intern(st):
        if st not in index:
            index[st] = len(states)
            states.append(st)
            delta2[index[st]] = {}
        return index[st]

    inits = {intern((q, 0, 0)) for q in sorted(src.initial)}
    i = 0
    while i < len(states):
        q, carry, pos = states[i]
        for g in range(k):
            dsts = src.delta[q].get(g, ())
            if not dsts:
                continue
            v = factor * g + carry
            x = v % k
            carry2 = v // k
            if den_digits is None:
                y = g
                pos2 = 0
            else:
                y = den_digits[pos] if pos < len(den_digits) else 0
                pos2 = min(pos + 1, len(den_digits))
            for q2 in dsts:
                delta2[i].setdefault((x, y), set()).add(
                    intern((q2, carry2, pos2)))
        i += 1
    if den_digits is None:
        accepting = {i for i, (q, c, _p) in enumerate(states)
                     if q in src.accepting and c == 0}
    else:
        accepting = {i for i, (q, c, p) in enumerate(states)
                     if q in src.accepting and c == 0 and p == len(den_digits)}
    out = Automaton(k, 2, len(states), inits, accepting, delta2, order="lsb")
    return out.reverse().strip_padding("leading").minimize()


def reassemble(dec: Decomposition) -> Automaton:
    """Rebuild the pair language a decomposition came from."""
    out = None
    for t, s_t in dec.small_parts:
        piece = _multiply_pair_image(s_t, t, None)
        out = piece if out is None else product(out, piece, "or")
    for d, t_d in dec.large_parts:
        piece = _multiply_pair_image(t_d, d, d)
        out = piece if out is None else product(out, piece, "or")
    if out is None:
        return Automaton(dec.k, 2, 1, {0}, set(), {}, order=MSB)
    return out.minimize()


# -- integer-set comparison and short representations ------------------------


def _canonical_digits(nat: Automaton) -> Automaton:
    return _msb(nat).strip_padding("leading").minimize()


def quo_subset_of(a: Automaton, nat: Automaton,
                  node_cap: int = DEFAULT_NODE_CAP) -> bool:
    """Is the quotient set contained in the integer set of a digit automaton?"""
    v = is_subset_of_naturals(a, node_cap)
    if not v.answer:
        return False
    return product(v.m2, _canonical_digits(nat), "diff").is_empty()


def quo_equals(a: Automaton, nat: Automaton,
               node_cap: int = DEFAULT_NODE_CAP) -> bool:
    v = is_subset_of_naturals(a, node_cap)
    if not v.answer:
        return False
    return product(v.m2, _canonical_digits(nat), "xor").is_empty()


def find_small_representation(a: Automaton, x: Fraction):
    """Shortest word representing x, or None; its length is within p*q*n.

    x = p/q in lowest terms; n is the minimized trimmed state count of the
    input. The bound uses max(p, 1) so that x = 0 stays meaningful.
    """
    x = Fraction(x)
    if x < 0:
        raise ValueError("only non-negative rationals are represented")
    m = _msb(a)
    prod = product(m, compare_automaton(m.k, x, EQ), "and")
    w = shortest_accepted(prod)
    if w is None:
        return None
    n = m.minimize().n
    bound = max(x.numerator, 1) * x.denominator * n
    assert len(w) <= bound, (
        f"representation of length {len(w)} exceeds the bound {bound}")
    return PairWord(w, m.k, MSB)
