"""Named example languages used as fixtures throughout the test suite.

Each entry packages an automaton with its base, a description of the
quotient set it realizes, and sampled member/non-member values. The samples
are exact facts checked by membership products, not approximations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .words import MSB, Word, canonical, evaluate
from .automaton import Automaton, alphabet, from_word_set, no_leading_pad, product


@dataclass(frozen=True)
class GalleryEntry:
    name: str
    k: int
    automaton: Automaton
    description: str
    members: tuple[Fraction, ...]
    non_members: tuple[Fraction, ...]
    provenance: str


def _l0(k: int) -> Automaton:
    # numerator canonical (or the single digit 0), denominator value 1
    syms = alphabet(k, 2)
    # states: 0 start, 1 num started / den still zero, 2 den finished (accept),
    # 3 zero-numerator single word (accept), 4 dead
    delta = {s: {} for s in range(5)}
    for a, b in syms:
        if a == 0 and b == 1:
            delta[0][(a, b)] = (3,)
        elif a > 0 and b == 0:
            delta[0][(a, b)] = (1,)
        elif a > 0 and b == 1:
            delta[0][(a, b)] = (2,)
        else:
            delta[0][(a, b)] = (4,)
        delta[1][(a, b)] = (1,) if b == 0 else ((2,) if b == 1 else (4,))
        delta[2][(a, b)] = (4,)
        delta[3][(a, b)] = (4,)
        delta[4][(a, b)] = (4,)
    return Automaton(k, 2, 5, {0}, {2, 3}, delta, order=MSB)


def _l1(k: int) -> Automaton:
    # any pair word whose denominator component has a nonzero digit
    syms = alphabet(k, 2)
    delta = {0: {}, 1: {sym: (1,) for sym in syms}}
    for a, b in syms:
        delta[0][(a, b)] = (1,) if b > 0 else (0,)
    return Automaton(k, 2, 2, {0}, {1}, delta, order=MSB)


def _l2(k: int) -> Automaton:
    # denominator digits form 0*1+0*; numerator digits free
    syms = alphabet(k, 2)
    delta = {s: {} for s in range(4)}
    for a, b in syms:
        if b == 0:
            delta[0][(a, b)] = (0,)
            delta[1][(a, b)] = (2,)
            delta[2][(a, b)] = (2,)
        elif b == 1:
            delta[0][(a, b)] = (1,)
            delta[1][(a, b)] = (1,)
            delta[2][(a, b)] = (3,)
        else:
            delta[0][(a, b)] = (3,)
            delta[1][(a, b)] = (3,)
            delta[2][(a, b)] = (3,)
        delta[3][(a, b)] = (3,)
    return Automaton(k, 2, 4, {0}, {1, 2}, delta, order=MSB)


def _l3() -> Automaton:
    # k = 2: numerator has evenly many ones, denominator oddly many
    delta = {s: {} for s in range(4)}
    for s in range(4):
        for a, b in alphabet(2, 2):
            delta[s][(a, b)] = ((s ^ (a | (b << 1))) & 3,)
    # state bits: bit0 numerator parity, bit1 denominator parity
    return Automaton(2, 2, 4, {0}, {2}, delta, order=MSB)


def _l4_cantor() -> Automaton:
    # k = 3: [0,1] then any mix of [0,0] and [2,0]
    delta = {0: {(0, 1): (1,)}, 1: {(0, 0): (1,), (2, 0): (1,)}}
    return Automaton(3, 2, 2, {0}, {1}, delta, order=MSB)


def _l5_unit_fractions() -> Automaton:
    # k = 2: numerator one, denominator any positive integer written
    # canonically; the single word [1,1] covers denominator 1
    delta = {
        0: {(1, 1): (3,), (0, 1): (1,)},
        1: {(0, 0): (1,), (0, 1): (1,), (1, 0): (2,), (1, 1): (2,)},
        2: {},
        3: {},
    }
    return Automaton(2, 2, 4, {0}, {2, 3}, delta, order=MSB)


def _signed_digit_pair(k4: int = 4) -> Automaton:
    # both components representable with digits {0, 1, -1} in base 4:
    # read least significant first with one borrow bit per component
    def step(c, d):
        t = d + c
        if t in (0, 1):
            return 0
        if t in (3, 4):
            return 1
        return None

    states = [(0, 0), (0, 1), (1, 0), (1, 1)]
    index = {st: i for i, st in enumerate(states)}
    delta = {i: {} for i in range(4)}
    for (cn, cd), i in index.items():
        for a, b in alphabet(k4, 2):
            nn = step(cn, a)
            nd = step(cd, b)
            if nn is None or nd is None:
                continue
            delta[i][(a, b)] = (index[(nn, nd)],)
    lsb = Automaton(k4, 2, 4, {0}, {0, 1, 2, 3}, delta, order="lsb")
    msb = lsb.reverse()
    return product(msb, no_leading_pad(k4, 2, order=MSB), "and").minimize()


def _l7_fermat() -> Automaton:
    # k = 2: numerator 2^i + 1 (i >= 2), denominator odd with 1 < d < numerator.
    # Middle numerator digits are all zero; one of the middle [0,1] symbols is
    # nondeterministically marked as the denominator's required extra one.
    delta = {
        0: {(1, 0): (1,)},
        1: {(0, 0): (1,), (0, 1): (1, 2)},
        2: {(0, 0): (2,), (0, 1): (2,), (1, 1): (3,)},
        3: {},
    }
    return Automaton(2, 2, 4, {0}, {3}, delta, order=MSB)


def _l8_mersenne() -> Automaton:
    # k = 2: numerator all ones (>= 3 of them), denominator odd in (1, n).
    # Track whether the denominator has seen a zero digit (so d < n) and a
    # one digit (so d > 1 once the final odd bit arrives).
    delta = {
        0: {(1, 0): (1,), (1, 1): (2,)},
        1: {(1, 0): (1,), (1, 1): (3,)},
        2: {(1, 0): (3,), (1, 1): (2,)},
        3: {(1, 0): (3,), (1, 1): (3, 4)},
        4: {},
    }
    return Automaton(2, 2, 5, {0}, {4}, delta, order=MSB)


def _s1_powers(k: int) -> Automaton:
    # [1,0]+[1,1]+ : quotients (k^n - 1)/(k^m - 1) with m < n
    delta = {
        0: {(1, 0): (1,)},
        1: {(1, 0): (1,), (1, 1): (2,)},
        2: {(1, 1): (2,)},
    }
    return Automaton(k, 2, 3, {0}, {2}, delta, order=MSB)


def _s3_reciprocal_powers(k: int) -> Automaton:
    # [0,1]+[1,1]+ : quotients (k^m - 1)/(k^n - 1) with m < n
    delta = {
        0: {(0, 1): (1,)},
        1: {(0, 1): (1,), (1, 1): (2,)},
        2: {(1, 1): (2,)},
    }
    return Automaton(k, 2, 3, {0}, {2}, delta, order=MSB)


_FIXED_BASE = {"L3": 2, "L4_cantor": 3, "L5_unit_fractions": 2,
               "L6_lvdp": 4, "L7_fermat": 2, "L8_mersenne": 2}


def names():
    return ("L0", "L1", "L2", "L3", "L4_cantor", "L5_unit_fractions",
            "L6_lvdp", "L7_fermat", "L8_mersenne", "S1_powers",
            "S3_reciprocal_powers")


def build(name: str, k: int | None = None) -> GalleryEntry:
    """Construct a gallery entry by name; k is selectable where meaningful."""
    fr = Fraction
    if name in _FIXED_BASE:
        if k is not None and k != _FIXED_BASE[name]:
            raise ValueError(f"{name} is only defined for base {_FIXED_BASE[name]}")
        k = _FIXED_BASE[name]
    elif k is None:
        k = 2
    if name == "L0":
        return GalleryEntry(
            name, k, _l0(k),
            "all non-negative integers: arbitrary canonical numerator over "
            "denominator one",
            (fr(0), fr(1), fr(5), fr(43)), (fr(1, 2), fr(3, 2)),
            "numerators range over all canonical words, denominator fixed at 1")
    if name == "L1":
        return GalleryEntry(
            name, k, _l1(k),
            "all non-negative rationals: every pair whose denominator "
            "component is nonzero",
            (fr(0), fr(7, 5), fr(2, 3)), (),
            "any numerator/denominator pair occurs, division by zero excluded")
    if name == "L2":
        return GalleryEntry(
            name, k, _l2(k),
            "all non-negative rationals with denominators shaped 1...10...0",
            (fr(1), fr(2), fr(3), fr(1, 3), fr(2, 3)), (),
            "a block-of-ones denominator can be found for every rational")
    if name == "L3":
        return GalleryEntry(
            name, k, _l3(),
            "non-negative rationals that are not a power of two (base 2)",
            (fr(3, 5), fr(3), fr(5, 7)), (fr(2), fr(1), fr(1, 2), fr(4)),
            "digit-sum parities of the two components force the exclusion")
    if name == "L4_cantor":
        return GalleryEntry(
            name, k, _l4_cantor(),
            "middle-thirds Cantor set rationals with power-of-three "
            "denominators",
            (fr(2, 3), fr(2, 9), fr(8, 9), fr(0)), (fr(1, 3), fr(1, 2)),
            "numerator digits restricted to {0, 2} below a power-of-three "
            "denominator")
    if name == "L5_unit_fractions":
        return GalleryEntry(
            name, k, _l5_unit_fractions(),
            "unit fractions 1/n for every n >= 1",
            (fr(1), fr(1, 2), fr(1, 3), fr(1, 64)), (fr(2), fr(2, 3)),
            "numerator one against every canonical denominator")
    if name == "L6_lvdp":
        return GalleryEntry(
            name, k, _signed_digit_pair(),
            "ratios p/q where both p and q admit base-4 digits {0, 1, -1}",
            (fr(1), fr(3), fr(4), fr(5), fr(11), fr(1, 3)), (fr(2), fr(8)),
            "borrow-bit reading of plain base-4 digits; canonical pairs only")
    if name == "L7_fermat":
        return GalleryEntry(
            name, k, _l7_fermat(),
            "pairs (2^i + 1, d) with i >= 2 and odd 1 < d < 2^i + 1",
            (fr(5, 3), fr(3)), (fr(5, 2), fr(2)),
            "numerator has ones exactly at both ends, denominator odd and "
            "shorter")
    if name == "L8_mersenne":
        return GalleryEntry(
            name, k, _l8_mersenne(),
            "pairs (2^i - 1, d) with i >= 3 and odd 1 < d < 2^i - 1",
            (fr(7, 3), fr(5)), (fr(1, 2), fr(4)),
            "numerator all ones, denominator odd, shorter, above one")
    if name == "S1_powers":
        return GalleryEntry(
            name, k, _s1_powers(k),
            "ratios (k^n - 1)/(k^m - 1) for 1 <= m < n",
            (fr(3), fr(7, 3)), (fr(2),),
            "all-ones numerator over a shorter all-ones denominator")
    if name == "S3_reciprocal_powers":
        return GalleryEntry(
            name, k, _s3_reciprocal_powers(k),
            "ratios (k^m - 1)/(k^n - 1) for 1 <= m < n",
            (fr(1, 3), fr(3, 7)), (fr(1, 2),),
            "all-ones numerator below a longer all-ones denominator")
    raise ValueError(f"unknown gallery name {name!r}")


def repr_in_l2(k: int, x: Fraction):
    """Represent x with a denominator whose digits are 1^j 0^i.

    Returns (i, j, numerator): i is the least exponent with
    gcd(k^i, q) = gcd(k^(i+1), q), j the multiplicative order of k modulo
    (k-1)*q', and the denominator is k^i * (k^j - 1)/(k - 1).
    """
    x = Fraction(x)
    q = x.denominator
    i = 0
    while gcd(k ** i, q) != gcd(k ** (i + 1), q):
        i += 1
    d = gcd(k ** i, q)
    qp = q // d
    mod = (k - 1) * qp
    j = 1
    if mod > 1:
        acc = k % mod
        while acc != 1:
            acc = (acc * k) % mod
            j += 1
    dprime = k ** i // d
    t = (k ** j - 1) // mod
    numerator = dprime * t * x.numerator
    return i, j, numerator


def l2_denominator(k: int, i: int, j: int) -> int:
    return k ** i * (k ** j - 1) // (k - 1)


def l2_pair_word(k: int, x: Fraction):
    """The actual pair word for repr_in_l2, aligned and leading-zero free."""
    from .words import pair
    i, j, num = repr_in_l2(k, x)
    den = l2_denominator(k, i, j)
    nw = canonical(num, k).digits
    dw = canonical(den, k).digits
    width = max(len(nw), len(dw))
    nw = (0,) * (width - len(nw)) + nw
    dw = (0,) * (width - len(dw)) + dw
    return pair(Word(nw, k, MSB), Word(dw, k, MSB))


def density_table(a: Automaton, which: int, n_max: int):
    """Word counts per length of a component projection."""
    proj = a.project(which).determinize()
    return [(n, proj.count_words(n)) for n in range(n_max + 1)]
