"""Finite automata over base-k digit and digit-pair alphabets.

One class covers NFAs and DFAs; a determinism flag distinguishes them.
Projection and reversal naturally produce NFAs, decision procedures want
DFAs, so determinization is always an explicit step. Automata are immutable
after construction and every transform returns a fresh value.

State numbering of minimized automata is canonical (BFS from the initial
state, symbols in lexicographic order) so serialized output is reproducible
byte for byte.
"""

from __future__ import annotations

from collections import deque

from .words import LSB, MSB, check_base

Symbol = "int | tuple[int, int]"


class AutomatonFormatError(ValueError):
    """A textual automaton description failed to parse."""


class ResourceCapError(RuntimeError):
    """An enumeration exceeded its configured budget."""


def alphabet(k: int, arity: int):
    """All symbols in lexicographic order: digits, or digit pairs."""
    if arity == 1:
        return tuple(range(k))
    return tuple((a, b) for a in range(k) for b in range(k))


def pad_symbol(arity: int):
    return 0 if arity == 1 else (0, 0)


class Automaton:
    __slots__ = ("k", "arity", "order", "n", "initial", "accepting", "delta",
                 "deterministic", "_dfa_cache")

    def __init__(self, k, arity, n, initial, accepting, delta, order=MSB):
        """delta maps state -> {symbol -> iterable of successor states}."""
        check_base(k)
        if arity not in (1, 2):
            raise ValueError("arity must be 1 or 2")
        if order not in (MSB, LSB):
            raise ValueError("order must be 'msb' or 'lsb'")
        if n < 1:
            raise ValueError("an automaton needs at least one state")
        self.k = k
        self.arity = arity
        self.order = order
        self.n = n
        self.initial = frozenset(initial)
        self.accepting = frozenset(accepting)
        syms = set(alphabet(k, arity))
        norm: list[dict] = [dict() for _ in range(n)]
        for s, row in delta.items():
            if not 0 <= s < n:
                raise ValueError(f"transition from unknown state {s}")
            for sym, dsts in row.items():
                if sym not in syms:
                    raise ValueError(f"symbol {sym!r} not in the alphabet")
                ds = tuple(sorted(set(dsts)))
                if not ds:
                    continue
                for d in ds:
                    if not 0 <= d < n:
                        raise ValueError(f"transition to unknown state {d}")
                norm[s][sym] = ds
        self.delta = tuple(norm)
        for s in self.initial | self.accepting:
            if not 0 <= s < n:
                raise ValueError(f"unknown state {s}")
        if not self.initial:
            raise ValueError("an automaton needs an initial state")
        self.deterministic = len(self.initial) == 1 and all(
            len(ds) == 1 for row in self.delta for ds in row.values())
        self._dfa_cache = None

    # -- basic queries -------------------------------------------------

    def symbols(self):
        return alphabet(self.k, self.arity)

    def successors(self, s, sym):
        return self.delta[s].get(sym, ())

    def accepts(self, digits) -> bool:
        cur = self.initial
        for sym in digits:
            nxt = set()
            for s in cur:
                nxt.update(self.delta[s].get(sym, ()))
            if not nxt:
                return False
            cur = frozenset(nxt)
        return bool(cur & self.accepting)

    def dfa_table(self):
        """Dense tables (trans, accept, init) for a deterministic automaton.

        trans[state][symbol_index] is the successor or -1. Cached.
        """
        if not self.deterministic:
            raise ValueError("dense tables require a deterministic automaton")
        if self._dfa_cache is None:
            syms = self.symbols()
            idx = {sym: i for i, sym in enumerate(syms)}
            trans = [[-1] * len(syms) for _ in range(self.n)]
            for s, row in enumerate(self.delta):
                for sym, ds in row.items():
                    trans[s][idx[sym]] = ds[0]
            accept = [s in self.accepting for s in range(self.n)]
            init = next(iter(self.initial))
            self._dfa_cache = (trans, accept, init)
        return self._dfa_cache

    # -- structural transforms -----------------------------------------

    def _replace(self, **kw):
        args = dict(k=self.k, arity=self.arity, n=self.n, initial=self.initial,
                    accepting=self.accepting, order=self.order,
                    delta={s: dict(row) for s, row in enumerate(self.delta)})
        args.update(kw)
        return Automaton(**args)

    def trim(self) -> "Automaton":
        """Keep only states that are accessible and co-accessible.

        An empty language collapses to a single non-accepting initial state.
        """
        fwd = set(self.initial)
        queue = deque(sorted(fwd))
        while queue:
            s = queue.popleft()
            for ds in self.delta[s].values():
                for d in ds:
                    if d not in fwd:
                        fwd.add(d)
                        queue.append(d)
        back = {s: set() for s in range(self.n)}
        for s, row in enumerate(self.delta):
            for ds in row.values():
                for d in ds:
                    back[d].add(s)
        co = set(self.accepting)
        queue = deque(sorted(co))
        while queue:
            s = queue.popleft()
            for p in back[s]:
                if p not in co:
                    co.add(p)
                    queue.append(p)
        live = sorted(fwd & co)
        if not live or not (set(self.initial) & set(live)):
            return Automaton(self.k, self.arity, 1, {0}, set(), {},
                             order=self.order)
        remap = {old: i for i, old in enumerate(live)}
        delta = {}
        for old in live:
            row = {}
            for sym, ds in self.delta[old].items():
                kept = tuple(remap[d] for d in ds if d in remap)
                if kept:
                    row[sym] = kept
            delta[remap[old]] = row
        return Automaton(self.k, self.arity, len(live),
                         {remap[s] for s in self.initial if s in remap},
                         {remap[s] for s in self.accepting if s in remap},
                         delta, order=self.order)

    def determinize(self) -> "Automaton":
        """Subset construction; output states numbered in BFS discovery order."""
        syms = self.symbols()
        start = frozenset(self.initial)
        index = {start: 0}
        order_list = [start]
        delta = {0: {}}
        queue = deque([start])
        while queue:
            cur = queue.popleft()
            ci = index[cur]
            for sym in syms:
                nxt = set()
                for s in cur:
                    nxt.update(self.delta[s].get(sym, ()))
                if not nxt:
                    continue
                f = frozenset(nxt)
                if f not in index:
                    index[f] = len(order_list)
                    order_list.append(f)
                    delta[index[f]] = {}
                    queue.append(f)
                delta[ci][sym] = (index[f],)
        accepting = {i for f, i in index.items() if f & self.accepting}
        return Automaton(self.k, self.arity, len(order_list), {0}, accepting,
                         delta, order=self.order)

    def complete(self) -> "Automaton":
        """Add a sink so every (state, symbol) has a successor. DFA only."""
        if not self.deterministic:
            raise ValueError("complete() expects a deterministic automaton")
        syms = self.symbols()
        if all(len(row) == len(syms) for row in self.delta):
            return self
        sink = self.n
        delta = {s: dict(row) for s, row in enumerate(self.delta)}
        delta[sink] = {}
        for s in range(self.n + 1):
            for sym in syms:
                delta[s].setdefault(sym, (sink,))
        return Automaton(self.k, self.arity, self.n + 1, self.initial,
                         self.accepting, delta, order=self.order)

    def minimize(self) -> "Automaton":
        """Unique minimal DFA, trimmed and canonically numbered."""
        d = self.determinize().complete()
        syms = d.symbols()
        block = [1 if s in d.accepting else 0 for s in range(d.n)]
        while True:
            sigs = {}
            nxt = [0] * d.n
            for s in range(d.n):
                sig = (block[s],) + tuple(block[d.delta[s][sym][0]] for sym in syms)
                if sig not in sigs:
                    sigs[sig] = len(sigs)
                nxt[s] = sigs[sig]
            if nxt == block:
                break
            block = nxt
        init_b = block[next(iter(d.initial))]
        bdelta = {}
        for s in range(d.n):
            bdelta.setdefault(block[s], {sym: (block[d.delta[s][sym][0]],)
                                         for sym in syms})
        baccept = {block[s] for s in d.accepting}
        merged = Automaton(d.k, d.arity, len(sigs), {init_b}, baccept, bdelta,
                           order=d.order)
        return merged.trim()._renumber_bfs()

    def _renumber_bfs(self) -> "Automaton":
        syms = self.symbols()
        start = next(iter(self.initial))
        remap = {start: 0}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for sym in syms:
                for d in self.delta[s].get(sym, ()):
                    if d not in remap:
                        remap[d] = len(remap)
                        queue.append(d)
        # unreached states are dropped (cannot happen after trim, but be safe)
        delta = {}
        for old, new in remap.items():
            delta[new] = {sym: tuple(sorted(remap[d] for d in ds if d in remap))
                          for sym, ds in self.delta[old].items()}
            delta[new] = {sym: ds for sym, ds in delta[new].items() if ds}
        return Automaton(self.k, self.arity, len(remap), {0},
                         {remap[s] for s in self.accepting if s in remap},
                         delta, order=self.order)

    def complement(self) -> "Automaton":
        d = self.determinize().complete()
        return d._replace(accepting=frozenset(range(d.n)) - d.accepting)

    def reverse(self) -> "Automaton":
        """Language reversal; flips the significance-order flag."""
        flipped_order = MSB if self.order == LSB else LSB
        if not self.accepting:
            return empty_language(self.k, self.arity, flipped_order)
        delta = {s: {} for s in range(self.n)}
        for s, row in enumerate(self.delta):
            for sym, ds in row.items():
                for d in ds:
                    delta[d].setdefault(sym, set()).add(s)
        return Automaton(self.k, self.arity, self.n, self.accepting,
                         self.initial, delta, order=flipped_order)

    def project(self, which: int) -> "Automaton":
        """Componentwise projection of a pair automaton; result is an NFA."""
        if self.arity != 2:
            raise ValueError("projection requires a pair alphabet")
        if which not in (1, 2):
            raise ValueError("projection index must be 1 or 2")
        i = which - 1
        delta = {s: {} for s in range(self.n)}
        for s, row in enumerate(self.delta):
            for sym, ds in row.items():
                delta[s].setdefault(sym[i], set()).update(ds)
        return Automaton(self.k, 1, self.n, self.initial, self.accepting,
                         delta, order=self.order)

    def strip_padding(self, side: str) -> "Automaton":
        """Remove the maximal run of padding symbols on one side of every word.

        Padding is digit 0 (arity 1) or the pair [0,0] (arity 2); 'leading'
        and 'trailing' refer to literal word ends regardless of the order flag.
        """
        if side == "trailing":
            return self.reverse().strip_padding("leading").reverse()
        if side != "leading":
            raise ValueError("side must be 'leading' or 'trailing'")
        pad = pad_symbol(self.arity)
        closure = set(self.initial)
        queue = deque(sorted(closure))
        while queue:
            s = queue.popleft()
            for d in self.delta[s].get(pad, ()):
                if d not in closure:
                    closure.add(d)
                    queue.append(d)
        shifted = self._replace(initial=closure)
        return product(shifted, no_leading_pad(self.k, self.arity, self.order),
                       "and")

    # -- counting and emptiness ----------------------------------------

    def is_empty(self) -> bool:
        reach = set(self.initial)
        queue = deque(sorted(reach))
        while queue:
            s = queue.popleft()
            if s in self.accepting:
                return False
            for ds in self.delta[s].values():
                for d in ds:
                    if d not in reach:
                        reach.add(d)
                        queue.append(d)
        return not (reach & self.accepting)

    def is_finite_language(self) -> bool:
        """True iff the accepted language is finite (no cycle on a live path)."""
        t = self.trim()
        color = [0] * t.n  # 0 white, 1 gray, 2 black
        for root in range(t.n):
            if color[root]:
                continue
            stack = [(root, iter(sorted(d for ds in t.delta[root].values()
                                        for d in ds)))]
            color[root] = 1
            while stack:
                s, it = stack[-1]
                adv = next(it, None)
                if adv is None:
                    color[s] = 2
                    stack.pop()
                    continue
                if color[adv] == 1:
                    return False
                if color[adv] == 0:
                    color[adv] = 1
                    stack.append((adv, iter(sorted(
                        d for ds in t.delta[adv].values() for d in ds))))
        return True

    def count_words(self, length: int) -> int:
        """Exact number of accepted words of the given length."""
        if length < 0:
            raise ValueError("length must be >= 0")
        d = self.determinize()
        vec = {next(iter(d.initial)): 1}
        for _ in range(length):
            nxt = {}
            for s, c in vec.items():
                for ds in d.delta[s].values():
                    t = ds[0]
                    nxt[t] = nxt.get(t, 0) + c
            vec = nxt
            if not vec:
                return 0
        return sum(c for s, c in vec.items() if s in d.accepting)

    # -- serialization ---------------------------------------------------

    def single_initial(self) -> "Automaton":
        if len(self.initial) == 1:
            return self
        fresh = self.n
        delta = {s: {sym: set(ds) for sym, ds in row.items()}
                 for s, row in enumerate(self.delta)}
        delta[fresh] = {}
        for i in sorted(self.initial):
            for sym, ds in self.delta[i].items():
                delta[fresh].setdefault(sym, set()).update(ds)
        accepting = set(self.accepting)
        if self.initial & self.accepting:
            accepting.add(fresh)
        return Automaton(self.k, self.arity, self.n + 1, {fresh}, accepting,
                         delta, order=self.order)

    def to_text(self) -> str:
        a = self.single_initial()
        start = next(iter(a.initial))
        lines = [f"k={a.k} arity={a.arity} states={a.n} start={start} "
                 f"order={a.order}"]
        lines.append("accept: " + " ".join(str(s) for s in sorted(a.accepting)))
        for s in range(a.n):
            for sym in a.symbols():
                for d in a.delta[s].get(sym, ()):
                    tok = str(sym) if a.arity == 1 else f"{sym[0]},{sym[1]}"
                    lines.append(f"{s} {tok} {d}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Automaton":
        lines = text.splitlines()
        if not lines:
            raise AutomatonFormatError("line 1: empty automaton file")
        head = {}
        for tok in lines[0].split():
            if "=" not in tok:
                raise AutomatonFormatError(f"line 1: bad header token {tok!r}")
            key, _, val = tok.partition("=")
            head[key] = val
        try:
            k = int(head["k"])
            arity = int(head["arity"])
            n = int(head["states"])
            start = int(head["start"])
            order = head.get("order", MSB)
        except (KeyError, ValueError) as e:
            raise AutomatonFormatError(f"line 1: bad header: {e}") from e
        if len(lines) < 2 or not lines[1].startswith("accept:"):
            raise AutomatonFormatError("line 2: expected 'accept: ...'")
        try:
            accepting = {int(t) for t in lines[1][len("accept:"):].split()}
        except ValueError as e:
            raise AutomatonFormatError(f"line 2: bad accept list: {e}") from e
        delta: dict = {}
        for lineno, raw in enumerate(lines[2:], start=3):
            if not raw.strip():
                continue
            parts = raw.split()
            if len(parts) != 3:
                raise AutomatonFormatError(
                    f"line {lineno}: expected '<src> <symbol> <dst>'")
            try:
                src, dst = int(parts[0]), int(parts[2])
                if arity == 1:
                    sym = int(parts[1])
                else:
                    a, _, b = parts[1].partition(",")
                    sym = (int(a), int(b))
            except ValueError as e:
                raise AutomatonFormatError(f"line {lineno}: {e}") from e
            delta.setdefault(src, {}).setdefault(sym, set()).add(dst)
        try:
            return cls(k, arity, n, {start}, accepting, delta, order=order)
        except ValueError as e:
            raise AutomatonFormatError(f"inconsistent automaton: {e}") from e

    def to_dot(self) -> str:
        a = self.single_initial()
        out = ["digraph automaton {", "  rankdir=LR;",
               '  __start [shape=point label=""];']
        for s in range(a.n):
            shape = "doublecircle" if s in a.accepting else "circle"
            out.append(f'  q{s} [shape={shape} label="{s}"];')
        out.append(f"  __start -> q{next(iter(a.initial))};")
        for s in range(a.n):
            for sym in a.symbols():
                for d in a.delta[s].get(sym, ()):
                    lbl = str(sym) if a.arity == 1 else f"{sym[0]},{sym[1]}"
                    out.append(f'  q{s} -> q{d} [label="{lbl}"];')
        out.append("}")
        return "\n".join(out) + "\n"


# -- binary operations and friends ---------------------------------------


def _check_compatible(a: Automaton, b: Automaton):
    if (a.k, a.arity) != (b.k, b.arity):
        raise ValueError("alphabet mismatch")
    if a.order != b.order:
        raise ValueError("significance-order mismatch")


def product(a: Automaton, b: Automaton, op: str) -> Automaton:
    """Language combination of two automata: and / or / diff / xor."""
    _check_compatible(a, b)
    ops = {"and": lambda x, y: x and y, "or": lambda x, y: x or y,
           "diff": lambda x, y: x and not y, "xor": lambda x, y: x != y}
    if op not in ops:
        raise ValueError(f"unknown product op {op!r}")
    da = a.determinize().complete()
    db = b.determinize().complete()
    syms = da.symbols()
    start = (next(iter(da.initial)), next(iter(db.initial)))
    index = {start: 0}
    delta = {0: {}}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        ci = index[cur]
        for sym in syms:
            nxt = (da.delta[cur[0]][sym][0], db.delta[cur[1]][sym][0])
            if nxt not in index:
                index[nxt] = len(index)
                delta[index[nxt]] = {}
                queue.append(nxt)
            delta[ci][sym] = (index[nxt],)
    fn = ops[op]
    accepting = {i for (sa, sb), i in index.items()
                 if fn(sa in da.accepting, sb in db.accepting)}
    return Automaton(a.k, a.arity, len(index), {0}, accepting, delta,
                     order=a.order)


def language_equal(a: Automaton, b: Automaton) -> bool:
    return product(a, b, "xor").is_empty()


def shortest_accepted(a: Automaton):
    """Lexicographically least shortest accepted word, or None.

    BFS over the determinized trimmed automaton with symbols explored in
    lexicographic order: the first acceptance reached is the answer.
    """
    d = a.determinize().trim()
    if d.is_empty():
        return None
    syms = d.symbols()
    init = next(iter(d.initial))
    if init in d.accepting:
        return ()
    parent = {init: None}
    queue = deque([init])
    while queue:
        s = queue.popleft()
        for sym in syms:
            for t in d.delta[s].get(sym, ()):
                if t in parent:
                    continue
                parent[t] = (s, sym)
                if t in d.accepting:
                    path = []
                    cur = t
                    while parent[cur] is not None:
                        cur, sy = parent[cur]
                        path.append(sy)
                    return tuple(reversed(path))
                queue.append(t)
    return None


def enumerate_pumping_candidates(a: Automaton, max_candidates: int | None = None):
    """Yield every (stem u, cycle v) with |uv| <= n and |v| >= 1.

    Walks paths of the determinized trimmed automaton (n = its state count),
    so each candidate appears exactly once and every state touched is both
    accessible and co-accessible. Worst case (k^arity)^n paths; callers
    should treat the stream as desk-scale and may cap it.
    """
    d = a.determinize().trim()
    if d.is_empty():
        return
    n = d.n
    syms = d.symbols()
    init = next(iter(d.initial))
    emitted = 0

    def cycles_from(s, budget):
        # simple DFS for paths s -> ... -> s of length in [1, budget]
        stack = [((), s)]
        while stack:
            path, cur = stack.pop()
            for sym in reversed(syms):
                for t in d.delta[cur].get(sym, ()):
                    newp = path + (sym,)
                    if t == s:
                        yield newp
                    if len(newp) < budget:
                        stack.append((newp, t))

    stems = deque([((), init)])
    while stems:
        u, s = stems.popleft()
        for v in cycles_from(s, n - len(u)):
            yield u, v
            emitted += 1
            if max_candidates is not None and emitted > max_candidates:
                raise ResourceCapError(
                    f"pumping candidate cap {max_candidates} exceeded")
        if len(u) < n - 1:
            for sym in syms:
                for t in d.delta[s].get(sym, ()):
                    stems.append((u + (sym,), t))


# -- stock languages -------------------------------------------------------


def empty_language(k: int, arity: int, order: str = MSB) -> Automaton:
    return Automaton(k, arity, 1, {0}, set(), {}, order=order)


def universal_language(k: int, arity: int, order: str = MSB) -> Automaton:
    delta = {0: {sym: (0,) for sym in alphabet(k, arity)}}
    return Automaton(k, arity, 1, {0}, {0}, delta, order=order)


def from_word_set(k: int, arity: int, words, order: str = MSB) -> Automaton:
    """Trie automaton for an explicit finite set of words."""
    nodes = [{}]
    accepting = set()
    for w in words:
        cur = 0
        for sym in w:
            if sym not in nodes[cur]:
                nodes.append({})
                nodes[cur][sym] = len(nodes) - 1
            cur = nodes[cur][sym]
        accepting.add(cur)
    delta = {s: {sym: (d,) for sym, d in row.items()}
             for s, row in enumerate(nodes)}
    return Automaton(k, arity, len(nodes), {0}, accepting, delta, order=order)


def no_leading_pad(k: int, arity: int, order: str = MSB) -> Automaton:
    """Words that do not start with the padding symbol (the empty word passes)."""
    pad = pad_symbol(arity)
    syms = alphabet(k, arity)
    delta = {0: {sym: (1,) for sym in syms if sym != pad},
             1: {sym: (1,) for sym in syms}}
    return Automaton(k, arity, 2, {0}, {0, 1}, delta, order=order)


def defined_pairs(k: int, order: str = MSB) -> Automaton:
    """Pair words whose denominator component has at least one nonzero digit."""
    syms = alphabet(k, 2)
    delta = {0: {}, 1: {sym: (1,) for sym in syms}}
    for sym in syms:
        delta[0][sym] = (1,) if sym[1] > 0 else (0,)
    return Automaton(k, 2, 2, {0}, {1}, delta, order=order)


def nonzero_numerator(k: int, order: str = MSB) -> Automaton:
    """Pair words whose numerator component has at least one nonzero digit."""
    syms = alphabet(k, 2)
    delta = {0: {}, 1: {sym: (1,) for sym in syms}}
    for sym in syms:
        delta[0][sym] = (1,) if sym[0] > 0 else (0,)
    return Automaton(k, 2, 2, {0}, {1}, delta, order=order)


def canonical_integers(k: int, order: str = MSB) -> Automaton:
    """Leading-zero-free digit words; the empty word (value 0) is included."""
    syms = alphabet(k, 1)
    delta = {0: {d: (1,) for d in syms if d != 0},
             1: {d: (1,) for d in syms}}
    return Automaton(k, 1, 2, {0}, {0, 1}, delta, order=order)
