"""Digit words and exact rational values.

Everything here is exact: words evaluate to Python ints, quotients to
``fractions.Fraction``. A word carries its base and an explicit significance
order ("msb" or "lsb"); no function ever guesses the order.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

Rational = Fraction

MSB = "msb"
LSB = "lsb"

DEFAULT_FACTOR_BOUND = 10**12


class UndefinedQuotientError(ZeroDivisionError):
    """The denominator component of a pair word evaluates to zero."""


class FactorBoundError(ValueError):
    """Trial division would exceed the configured bound."""


def check_base(k: int) -> int:
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"base must be an integer >= 2, got {k!r}")
    return k


def _check_order(order: str) -> str:
    if order not in (MSB, LSB):
        raise ValueError(f"order must be 'msb' or 'lsb', got {order!r}")
    return order


@dataclass(frozen=True)
class Word:
    """A finite word of base-k digits with an explicit significance order."""

    digits: tuple[int, ...]
    k: int
    order: str = MSB

    def __post_init__(self):
        check_base(self.k)
        _check_order(self.order)
        object.__setattr__(self, "digits", tuple(self.digits))
        for d in self.digits:
            if not 0 <= d < self.k:
                raise ValueError(f"digit {d} out of range for base {self.k}")

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def reversed(self) -> "Word":
        flipped = MSB if self.order == LSB else LSB
        return Word(self.digits[::-1], self.k, flipped)

    def with_order(self, order: str) -> "Word":
        return self if self.order == order else self.reversed()

    def __str__(self):
        if self.k <= 10:
            return "".join(str(d) for d in self.digits)
        return ",".join(str(d) for d in self.digits)


@dataclass(frozen=True)
class PairWord:
    """A finite word over pairs of base-k digits (numerator, denominator)."""

    digits: tuple[tuple[int, int], ...]
    k: int
    order: str = MSB

    def __post_init__(self):
        check_base(self.k)
        _check_order(self.order)
        object.__setattr__(self, "digits", tuple((a, b) for a, b in self.digits))
        for a, b in self.digits:
            if not (0 <= a < self.k and 0 <= b < self.k):
                raise ValueError(f"pair digit {(a, b)} out of range for base {self.k}")

    def __len__(self):
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def reversed(self) -> "PairWord":
        flipped = MSB if self.order == LSB else LSB
        return PairWord(self.digits[::-1], self.k, flipped)

    def with_order(self, order: str) -> "PairWord":
        return self if self.order == order else self.reversed()

    def project(self, which: int) -> Word:
        if which not in (1, 2):
            raise ValueError("projection index must be 1 or 2")
        i = which - 1
        return Word(tuple(d[i] for d in self.digits), self.k, self.order)

    def __str__(self):
        return "".join(f"[{a},{b}]" for a, b in self.digits)


def project(w: PairWord, which: int) -> Word:
    return w.project(which)


def pair(x: Word, y: Word) -> PairWord:
    """Join two equal-length words into a pair word, componentwise."""
    if x.k != y.k:
        raise ValueError("cannot pair words over different bases")
    if x.order != y.order:
        raise ValueError("cannot pair words with different significance orders")
    if len(x) != len(y):
        raise ValueError(f"length mismatch: {len(x)} vs {len(y)}")
    return PairWord(tuple(zip(x.digits, y.digits)), x.k, x.order)


def evaluate(w: Word) -> int:
    """Base-k value of a word; the empty word evaluates to 0."""
    m = w.with_order(MSB)
    n = 0
    for d in m.digits:
        n = n * w.k + d
    return n


def canonical(n: int, k: int) -> Word:
    """Shortest (leading-zero-free) base-k word for n; canonical(0) is empty."""
    check_base(k)
    if n < 0:
        raise ValueError("canonical representation requires n >= 0")
    ds = []
    while n > 0:
        n, r = divmod(n, k)
        ds.append(r)
    return Word(tuple(reversed(ds)), k, MSB)


def quo(w: PairWord) -> Fraction:
    """The rational value numerator/denominator of a pair word, reduced."""
    num = evaluate(w.project(1))
    den = evaluate(w.project(2))
    if den == 0:
        raise UndefinedQuotientError(f"denominator of {w} evaluates to 0")
    return Fraction(num, den)


def nu_k(n: int, k: int) -> int:
    """Exponent of the largest power of k dividing n (n >= 1)."""
    check_base(k)
    if n < 1:
        raise ValueError("nu_k requires n >= 1")
    e = 0
    while n % k == 0:
        n //= k
        e += 1
    return e


def prime_divisors(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> frozenset[int]:
    """Set of prime divisors of n by trial division; pd(1) is empty."""
    if n < 1:
        raise ValueError("prime_divisors requires n >= 1")
    if n > bound:
        raise FactorBoundError(f"{n} exceeds factorization bound {bound}")
    out = set()
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            out.add(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        out.add(m)
    return frozenset(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    p = 3
    while p * p <= n:
        if n % p == 0:
            return False
        p += 2
    return True


def in_pi_d(n: int, primes: frozenset[int] | set[int]) -> bool:
    """True iff every prime divisor of n lies in the given prime set (n >= 1)."""
    if n < 1:
        raise ValueError("in_pi_d requires n >= 1")
    m = n
    for p in sorted(primes):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        while m % p == 0:
            m //= p
    # whatever remains is coprime to the set; n qualifies iff nothing remains
    return m == 1


def as_ratio(text: str) -> Fraction:
    """Parse 'p/q' or 'n' into a non-negative Fraction."""
    try:
        f = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational: {text!r}") from e
    if f < 0:
        raise ValueError(f"negative rationals are not supported: {text!r}")
    return f


def ratio_str(f: Fraction) -> str:
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"
