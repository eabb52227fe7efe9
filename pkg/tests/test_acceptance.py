"""Acceptance suite: one test per criterion, each printing a verdict line.

All value checks are exact (integers and fractions only); the only
tolerances are wall-clock budgets, asserted per criterion.
"""

import random
import time
from fractions import Fraction

import pytest

from ratset import gallery
from ratset.words import MSB, canonical, quo
from ratset.automaton import (Automaton, canonical_integers, defined_pairs,
                              from_word_set, language_equal, no_leading_pad,
                              nonzero_numerator, product)
from ratset.arith import (reciprocal, scale, shift_add, shift_sub, sub_from,
                          union_sets)
from ratset.compare import EQ, GE, LE, compare_automaton
from ratset import decide
from ratset.decide import (exists_rel, find_small_representation, inf_quoset,
                           is_accumulation_point, is_quoset_infinite,
                           is_subset_of_naturals, k_finite_analysis,
                           quo_equals, rebuild_k_finite, sup_quoset)
from ratset.oracle import enumerate_quotients


class Budget:
    def __init__(self, name, seconds):
        self.name = name
        self.seconds = seconds

    def __enter__(self):
        self.t0 = time.monotonic()
        return self

    def __exit__(self, exc_type, exc, tb):
        elapsed = time.monotonic() - self.t0
        status = "PASS" if exc_type is None else "FAIL"
        print(f"acceptance {self.name}: {status} ({elapsed:.2f}s)")
        if exc_type is None:
            assert elapsed < self.seconds, (
                f"{self.name} exceeded its {self.seconds}s budget: {elapsed:.2f}s")
        return False


def aut(name, k=None):
    return gallery.build(name, k).automaton


def test_criterion_1_example_semantics():
    with Budget("1 example semantics", 5):
        l0 = aut("L0")
        assert enumerate_quotients(l0, 7).values() == {Fraction(n)
                                                       for n in range(128)}
        for n in (0, 1, 17, 50):
            assert exists_rel(l0, Fraction(n), EQ)[0]
        for bad in (Fraction(1, 2), Fraction(3, 2)):
            assert not exists_rel(l0, bad, EQ)[0]

        # unit fractions: exactly those whose denominator fits in seven
        # digits appear by length seven
        l5 = aut("L5_unit_fractions")
        assert enumerate_quotients(l5, 7).values() == {
            Fraction(1, n) for n in range(1, 128)}

        l4 = aut("L4_cantor")
        for good in (Fraction(2, 3), Fraction(2, 9), Fraction(8, 9)):
            assert exists_rel(l4, good, EQ)[0]
        for bad in (Fraction(1, 3), Fraction(1, 2)):
            assert not exists_rel(l4, bad, EQ)[0]


def test_criterion_2_denominator_density():
    with Budget("2 denominator density", 1):
        rows = gallery.density_table(aut("L2"), 2, 12)
        assert rows == [(n, n * (n + 1) // 2) for n in range(13)]


def test_criterion_3_comparison_automata():
    from helpers import comparison_mismatch_count
    with Budget("3 comparison automata", 30):
        for k in (2, 3):
            for beta in (Fraction(0), Fraction(1, 2), Fraction(1),
                         Fraction(2, 3), Fraction(3), Fraction(7, 5)):
                assert comparison_mismatch_count(k, beta, 6) == 0


ARITH_FIXTURES = [("L0", 2), ("L1", 2), ("L2", 2), ("L3", 2),
                  ("L5_unit_fractions", 2), ("S1_powers", 2),
                  ("L0", 3), ("L2", 3), ("L4_cantor", 3)]
ALPHAS = (Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2),
          Fraction(2, 3))


def _normalized_source(a):
    d = product(a, defined_pairs(a.k, order=a.order), "and")
    return d.strip_padding("leading").minimize()


def _flush_bound(k, alpha):
    return len(canonical(alpha.numerator + alpha.denominator, k)) + 1


def _check_arith_run(out, transform, zero_ok, src5, src7, cov_len):
    """Containment and coverage of one constructed automaton.

    Containment: every quotient of an output word of length <= 7 is the
    transform of a source value with a representation of the same depth
    (plus the adjoined zero where the operation floors). Coverage: the
    transform of every depth-5 source value appears among output quotients
    within the flush-extended depth.
    """
    vals7 = enumerate_quotients(out, 7).values()
    allowed = {t for t in (transform(s) for s in src7) if t is not None}
    for v in vals7:
        assert v in allowed or (v == 0 and zero_ok), v
    if cov_len <= 7:
        cov_vals = vals7
    else:
        cov_vals = enumerate_quotients(out, cov_len).values()
    for s in src5:
        t = transform(s)
        if t is not None:
            assert t in cov_vals, (s, t)


def test_criterion_4_arithmetic_closures():
    with Budget("4 arithmetic closures", 60):
        for name, k in ARITH_FIXTURES:
            a = aut(name, k)
            norm = _normalized_source(a)
            src5 = enumerate_quotients(norm, 5).values()
            src7 = enumerate_quotients(norm, 7).values()
            for alpha in ALPHAS:
                flush = _flush_bound(k, alpha) if alpha else 0
                cov_len = 5 + flush
                has_low = exists_rel(a, alpha, LE)[0]
                has_high = exists_rel(a, alpha, GE)[0]
                _check_arith_run(shift_add(a, alpha),
                                 lambda s, al=alpha: s + al,
                                 False, src5, src7, cov_len)
                _check_arith_run(shift_sub(a, alpha),
                                 lambda s, al=alpha: max(s - al, Fraction(0)),
                                 has_low, src5, src7, cov_len)
                _check_arith_run(sub_from(alpha, a),
                                 lambda s, al=alpha: max(al - s, Fraction(0)),
                                 has_high, src5, src7, cov_len)
                _check_arith_run(scale(a, alpha),
                                 lambda s, al=alpha: s * al,
                                 False, src5, src7, cov_len)
            _check_arith_run(reciprocal(a),
                             lambda s: Fraction(1) / s if s else None,
                             False, src5, src7, 5)
        # unions across consecutive fixtures of the same base
        for (n1, k1), (n2, k2) in zip(ARITH_FIXTURES, ARITH_FIXTURES[1:]):
            if k1 != k2:
                continue
            a, b = aut(n1, k1), aut(n2, k2)
            u = union_sets(a, b)
            va = enumerate_quotients(_normalized_source(a), 5).values()
            vb = enumerate_quotients(_normalized_source(b), 5).values()
            assert enumerate_quotients(u, 5).values() == va | vb


def _leading_pad_variant(base):
    # allow any number of [0,0] before the base machine's words
    loop = base.n
    delta = {s: {sym: set(ds) for sym, ds in row.items()}
             for s, row in enumerate(base.delta)}
    delta[loop] = {(0, 0): {loop} | set(base.initial)}
    inits = {loop} | set(base.initial)
    return Automaton(base.k, base.arity, base.n + 1, inits,
                     base.accepting, delta, order=base.order)


def finite_quotient_machines():
    one = from_word_set(2, 2, [((1, 1),)])
    padded_tail = Automaton(2, 2, 2, {0}, {1},
                            {0: {(1, 1): (1,)}, 1: {(0, 0): (1,)}}, order=MSB)
    equal_pairs = Automaton(2, 2, 2, {0}, {1},
                            {0: {(1, 1): (1,)},
                             1: {(0, 0): (1,), (1, 1): (1,)}}, order=MSB)
    return [
        (one, {Fraction(1)}),
        (padded_tail, {Fraction(1)}),
        (_leading_pad_variant(one), {Fraction(1)}),
        (from_word_set(2, 2, [((1, 1),), ((1, 0), (0, 1))]),
         {Fraction(1), Fraction(2)}),
        (from_word_set(2, 2, [((0, 1),)]), {Fraction(0)}),
        (compare_automaton(2, Fraction(2, 3), EQ), {Fraction(2, 3)}),
        (product(compare_automaton(2, Fraction(1), EQ),
                 compare_automaton(2, Fraction(2), EQ), "or"),
         {Fraction(1), Fraction(2)}),
        (equal_pairs, {Fraction(1)}),
        (compare_automaton(3, Fraction(1, 2), EQ), {Fraction(1, 2)}),
        (from_word_set(3, 2, [((1, 2),)]), {Fraction(1, 2)}),
    ]


def test_criterion_5_infinitude():
    with Budget("5 infinitude decision", 30):
        for name in ("L0", "L1", "L2", "L3", "L5_unit_fractions", "S1_powers"):
            infinite, _ = is_quoset_infinite(aut(name))
            assert infinite, name
        machines = finite_quotient_machines()
        assert len(machines) == 10
        for i, (machine, expected) in enumerate(machines):
            infinite, members = is_quoset_infinite(machine)
            assert not infinite, i
            assert members == expected, i
            assert enumerate_quotients(machine, 8).values() == expected, i


def test_criterion_6_integrality_pipeline():
    with Budget("6 integrality pipeline", 30):
        nat = canonical_integers(2)
        verdict = is_subset_of_naturals(aut("L0"))
        assert verdict.answer
        assert quo_equals(aut("L0"), nat)
        for name in ("L5_unit_fractions", "L1", "S1_powers"):
            v = is_subset_of_naturals(aut(name))
            assert not v.answer, name
            assert v.witness is not None and quo(v.witness).denominator > 1
        triples = product(decide.divisibility_automaton(2, 3),
                          decide.den_value_automaton(2, 3), "and")
        triples = product(triples, no_leading_pad(2, 2), "and")
        triples = product(triples, nonzero_numerator(2), "and").minimize()
        v = is_subset_of_naturals(triples)
        assert v.answer
        positive = Automaton(2, 1, 2, {0}, {1},
                             {0: {0: (0,), 1: (1,)}, 1: {0: (1,), 1: (1,)}},
                             order=MSB)
        assert language_equal(v.m2, product(nat, positive, "and"))


def test_criterion_7_small_representations():
    with Budget("7 small representations", 30):
        rng = random.Random(7_2024)
        pool = []
        for name in ("L0", "L1", "L2", "L3", "L5_unit_fractions", "S1_powers",
                     "L4_cantor", "S3_reciprocal_powers"):
            a = aut(name)
            n = a.minimize().n
            values = sorted(enumerate_quotients(a, 6).values())
            pool.extend((a, n, v) for v in values)
        assert len(pool) >= 100
        for a, n, x in rng.sample(pool, 100):
            w = find_small_representation(a, x)
            assert w is not None
            assert quo(w) == x
            assert len(w) <= max(x.numerator, 1) * x.denominator * n


def rand_k_finite_data(rng, k):
    entries = []
    used = set()
    for _ in range(rng.randrange(1, 4)):
        f = rng.randrange(1, 40)
        while f % k == 0 or f in used:
            f += 1
        used.add(f)
        preperiod = rng.randrange(0, 4)
        period = rng.randrange(1, 5)
        residues = frozenset(r for r in range(period) if rng.random() < 0.6)
        pre = tuple(j for j in range(preperiod) if rng.random() < 0.5)
        entries.append((f, decide.ZeroTail(pre, preperiod, period, residues)))
    return decide.KFiniteData(k, tuple(entries))


def test_criterion_8_k_finiteness():
    with Budget("8 k-finiteness", 10):
        rng = random.Random(8_2024)
        built = 0
        while built < 20:
            k = rng.choice((2, 3))
            data = rand_k_finite_data(rng, k)
            machine = rebuild_k_finite(data)
            if machine.is_empty():
                continue
            built += 1
            recovered = k_finite_analysis(machine)
            assert recovered is not None
            assert language_equal(rebuild_k_finite(recovered), machine)
        odd = Automaton(2, 1, 3, {0}, {1},
                        {0: {1: (1,)}, 1: {0: (2,), 1: (1,)},
                         2: {0: (2,), 1: (1,)}}, order=MSB)
        assert k_finite_analysis(odd) is None


def test_criterion_9_extrema_and_accumulation():
    with Budget("9 extrema and accumulation", 30):
        l5 = aut("L5_unit_fractions")
        assert sup_quoset(l5) == 1
        assert inf_quoset(l5) == 0
        assert is_accumulation_point(l5, Fraction(0))
        assert not is_accumulation_point(l5, Fraction(1, 2))
        l0 = aut("L0")
        assert sup_quoset(l0) is None
        assert inf_quoset(l0) == 0
        # consistency with the running extrema of a depth-12 census
        for machine, sup, inf in ((l5, Fraction(1), Fraction(0)),
                                  (l0, None, Fraction(0))):
            values = enumerate_quotients(machine, 12).values()
            if sup is not None:
                assert sup >= max(values)
                assert sup == max(values)  # the census saturates here
            assert inf <= min(values)
