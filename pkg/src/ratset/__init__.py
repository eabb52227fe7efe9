"""Regular languages over digit-pair alphabets as sets of rationals.

A non-negative rational is represented by any digit-pair word whose two
components evaluate to a numerator and a nonzero denominator; a set of
rationals is the quotient set of a regular language of such words. This
package provides the automaton engine, comparison and arithmetic
constructions on quotient sets, exact decision procedures, a brute-force
enumeration oracle, and a gallery of example languages.
"""

from .words import (LSB, MSB, FactorBoundError, PairWord, Rational,
                    UndefinedQuotientError, Word, as_ratio, canonical,
                    evaluate, in_pi_d, nu_k, pair, prime_divisors, project,
                    quo, ratio_str)
from .automaton import (Automaton, AutomatonFormatError, ResourceCapError,
                        canonical_integers, defined_pairs,
                        empty_language, enumerate_pumping_candidates,
                        from_word_set, language_equal, no_leading_pad,
                        product, shortest_accepted, universal_language)
from .compare import RELATIONS, compare_automaton
from .arith import (reciprocal, scale, shift_add, shift_sub, sub_from,
                    union_sets)
from .decide import (Decomposition, IntegralityVerdict, KFiniteData, ZeroTail,
                     candidate_set, decompose_integer_valued,
                     den_value_automaton, divide_projection,
                     divisibility_automaton, exists_rel,
                     find_small_representation, finite_subset, inf_quoset,
                     is_accumulation_point, is_quoset_infinite,
                     is_subset_of_naturals, k_finite_analysis, quo_equals,
                     quo_subset_of, reassemble, rebuild_k_finite,
                     subset_finite, sup_quoset)
from .oracle import (CancelToken, EnumerationReport, OperationCancelled,
                     enumerate_quotients, oracle_member)
from . import gallery

__version__ = "0.1.0"
