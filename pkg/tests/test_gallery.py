import random
from fractions import Fraction
from math import gcd

import pytest

from ratset import gallery
from ratset.words import canonical, evaluate, quo
from ratset.automaton import Automaton, language_equal
from ratset.compare import EQ
from ratset.decide import exists_rel
from ratset.oracle import enumerate_quotients


@pytest.mark.parametrize("name", gallery.names())
def test_samples_are_exact(name):
    entry = gallery.build(name)
    for v in entry.members:
        assert exists_rel(entry.automaton, v, EQ)[0], (name, v)
    for v in entry.non_members:
        assert not exists_rel(entry.automaton, v, EQ)[0], (name, v)


@pytest.mark.parametrize("name", gallery.names())
def test_entries_roundtrip_through_file_format(name):
    a = gallery.build(name).automaton
    assert language_equal(a, Automaton.from_text(a.to_text()))


def test_unknown_name_rejected():
    with pytest.raises(ValueError):
        gallery.build("L9")


def test_fixed_base_enforced():
    with pytest.raises(ValueError):
        gallery.build("L4_cantor", k=2)
    assert gallery.build("L0", k=3).k == 3


def test_l0_census():
    a = gallery.build("L0").automaton
    values = enumerate_quotients(a, 7).values()
    assert values == {Fraction(n) for n in range(128)}


def test_l3_excludes_powers_of_two():
    a = gallery.build("L3").automaton
    values = enumerate_quotients(a, 6).values()
    assert Fraction(3, 5) in values
    for bad in (Fraction(1), Fraction(2), Fraction(4), Fraction(1, 2)):
        assert bad not in values


def test_l4_cantor_structure():
    a = gallery.build("L4_cantor").automaton
    values = enumerate_quotients(a, 5).values()
    assert {Fraction(0), Fraction(2, 3), Fraction(2, 9), Fraction(8, 9)} <= values
    # every value sits inside [0, 1] with power-of-three denominator
    for v in values:
        d = v.denominator
        while d % 3 == 0:
            d //= 3
        assert d == 1 and 0 <= v <= 1


def test_l6_borrow_structure():
    entry = gallery.build("L6_lvdp")
    base_four_signed = {0, 1, 3, 4, 5, 11, 12, 13, 15, 16, 17, 19, 20, 21}
    values = enumerate_quotients(entry.automaton, 3).values()
    ints = {int(v) for v in values if v.denominator == 1}
    assert {v for v in base_four_signed if v <= 21} <= ints | {0}
    # every integer quotient has an even two-adic valuation
    for t in ints:
        if t:
            nu = 0
            while t % 2 == 0:
                t //= 2
                nu += 1
            assert nu % 2 == 0


def test_fermat_style_words():
    a = gallery.build("L7_fermat").automaton
    assert a.accepts(((1, 0), (0, 1), (1, 1)))          # pair (5, 3)
    assert a.accepts(((1, 0), (0, 0), (0, 1), (1, 1)))  # pair (9, 3)
    assert not a.accepts(((1, 0), (0, 1), (1, 0)))      # even denominator
    assert not a.accepts(((1, 1), (0, 1), (1, 1)))      # numerator not 2^i+1
    for v in enumerate_quotients(a, 6).values():
        assert v.denominator % 2 == 1
        # the numerator of some unreduced witness is 2^i + 1; reduced values
        # must still be ratios (2^i + 1)/d, so v * d recovers that shape
        assert v > 1


def test_mersenne_style_words():
    a = gallery.build("L8_mersenne").automaton
    assert a.accepts(((1, 0), (1, 1), (1, 1)))          # pair (7, 3)
    assert a.accepts(((1, 1), (1, 0), (1, 1)))          # pair (7, 5)
    assert not a.accepts(((1, 1), (1, 1), (1, 1)))      # denominator equals n
    assert not a.accepts(((1, 0), (1, 0), (1, 1)))      # denominator 1
    assert not a.accepts(((1, 0), (1, 1), (1, 0)))      # even denominator
    for v in enumerate_quotients(a, 6).values():
        assert v.denominator % 2 == 1
        assert v > 1


class TestReprInL2:
    @pytest.mark.parametrize("k,x,i,j,den", [
        (2, Fraction(1, 3), 0, 2, 3),
        (2, Fraction(1, 6), 1, 2, 6),
        (2, Fraction(5), 0, 1, 1),
    ])
    def test_known_cases(self, k, x, i, j, den):
        gi, gj, num = gallery.repr_in_l2(k, x)
        assert (gi, gj) == (i, j)
        assert gallery.l2_denominator(k, gi, gj) == den
        assert Fraction(num, den) == x

    def test_denominator_digits_shape(self):
        for k, x in [(2, Fraction(3, 20)), (3, Fraction(7, 15))]:
            i, j, num = gallery.repr_in_l2(k, x)
            den = gallery.l2_denominator(k, i, j)
            assert canonical(den, k).digits == (1,) * j + (0,) * i

    @pytest.mark.parametrize("k", [2, 3])
    def test_random_values_land_in_l2(self, k):
        rng = random.Random(20240 + k)
        l2 = gallery.build("L2", k).automaton
        for _ in range(200):
            p = rng.randrange(0, 100)
            q = rng.randrange(1, 100)
            x = Fraction(p, q)
            w = gallery.l2_pair_word(k, x)
            assert quo(w) == x if p else evaluate(w.project(1)) == 0
            assert l2.accepts(w.digits), (k, x, str(w))


def test_density_table_quadratic_law():
    l2 = gallery.build("L2").automaton
    rows = gallery.density_table(l2, 2, 12)
    assert rows == [(n, n * (n + 1) // 2) for n in range(13)]


def test_density_table_degenerate_cases():
    from ratset.automaton import from_word_set
    one = from_word_set(2, 2, [((1, 1),)])
    assert gallery.density_table(one, 1, 1) == [(0, 0), (1, 1)]
