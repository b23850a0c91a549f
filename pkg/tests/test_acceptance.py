"""Acceptance suite: the package's exit criteria.

One test per criterion; each prints a single PASS line (run with ``-s`` or
``-rP`` to see them).  Every expected value is exact; comparisons are over
arbitrary-precision rationals with zero tolerance except where a criterion
itself states an explicit bound.
"""

import random
import time
from fractions import Fraction

from _oracles import brute_force_elements, random_validated_rep, word_multilength
from conftest import get_ball, system_of
from gyoja.cartan import (
    SignCharacter,
    borel_discrete_series_list,
    parse_cartan_type,
    steinberg_character,
)
from gyoja.closed_forms import calibrate_indexing, growth_closed_form
from gyoja.distinction import (
    classify,
    distinction_value,
    expected_distinguished,
    robustness_check,
)
from gyoja.hecke import counting_series, eval_rep_on_word, partial_sums_at_point, validate_rep

SWEEP_TYPES = ["A1", "A2", "A3", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2", "E6"]
SWEEP_QO = [2, 3, 4, 5, 7]


def _report(number: int, text: str) -> None:
    print(f"ACCEPTANCE {number} PASS: {text}")


def test_criterion_1_series_identity_suite():
    cases = [("A1", 10), ("A2", 10), ("C2", 10), ("C3", 10), ("B3", 10), ("G2", 10), ("F4", 8)]
    started = time.perf_counter()
    for label, degree in cases:
        ctype = parse_cartan_type(label)
        system = system_of(label)
        ball = get_ball(label, degree)
        enumerated = counting_series(ball, degree)
        form = growth_closed_form(ctype)
        if system.m == 1:
            expanded = form.expand(degree)
        else:
            binding = calibrate_indexing(ctype, 6).binding
            expanded = form.expand(degree).permute_variables(binding)
        assert expanded == enumerated, f"series identity fails for {label} at degree {degree}"
    elapsed = time.perf_counter() - started
    _report(
        1,
        "enumerated series equals closed-form expansion exactly for "
        f"A1,A2,C2,C3,B3,G2 at degree 10 and F4 at degree 8 ({elapsed:.1f}s)",
    )


def test_criterion_2_classification_reproduction():
    checked = 0
    for label in SWEEP_TYPES:
        ctype = parse_cartan_type(label)
        for q_o in SWEEP_QO:
            for verdict in classify(ctype, q_o):
                expected = expected_distinguished(ctype, verdict.epsilon)
                assert verdict.distinguished == expected, (label, q_o, verdict)
                if not verdict.distinguished:
                    assert verdict.value == 0
                    assert verdict.zero_witness, (label, q_o, verdict)
                checked += 1
    _report(
        2,
        f"all {checked} verdicts over q_o in {{2,3,4,5,7}} and 12 types match the "
        "classification (Steinberg always; extra (-1,1) only in G2), every zero "
        "carrying a vanishing-factor witness",
    )


def test_criterion_3_spot_values():
    a1 = parse_cartan_type("A1")
    for q_o in (2, 3, 5):
        value = distinction_value(a1, SignCharacter((-1, -1)), q_o)
        assert value == Fraction(q_o - 1, q_o + 1)
    g2_value = distinction_value(parse_cartan_type("G2"), SignCharacter((-1, 1)), 2)
    assert g2_value == Fraction(3, 2)
    _report(3, "A1 Steinberg value is (q_o-1)/(q_o+1) for q_o in {2,3,5}; G2 (-1,1) at q_o=2 is 3/2")


def test_criterion_4_convergence_diagnostic():
    ball = get_ball("A1", 14)
    sums = partial_sums_at_point(ball, steinberg_character(parse_cartan_type("A1")), 2)
    gap = abs(sums[14] - Fraction(1, 3))
    assert gap < Fraction(1, 500)
    _report(4, f"A1 Steinberg partial sum at radius 14 is within 1/500 of 1/3 (gap {gap})")


def test_criterion_5_well_definedness():
    rng = random.Random(20260808)
    reps_checked = 0
    for label in ("C2", "G2"):
        system = system_of(label)
        by_element = brute_force_elements(system, 6)
        # multilength is the same along every reduced word, exhaustively
        for _, words in by_element.values():
            assert len({word_multilength(system, w) for w in words}) == 1
        multi_word = [words for _, words in by_element.values() if len(words) > 1]
        for i in range(500):
            rep = random_validated_rep(rng, system, dim=(i % 3) + 1, q_o=rng.choice((2, 3, 5)))
            assert validate_rep(rep, system).ok
            for words in multi_word:
                reference = eval_rep_on_word(rep, words[0])
                for word in words[1:]:
                    assert (eval_rep_on_word(rep, word) == reference).all()
            reps_checked += 1
    assert reps_checked == 1000
    _report(
        5,
        "multilength and representation values are reduced-word independent for every "
        "element of length <= 6 in C2 and G2 (exhaustive words; 1000 random validated "
        "matrix representations of dimension <= 3)",
    )


def test_criterion_6_multiplicity_contract():
    for label in SWEEP_TYPES:
        ctype = parse_cartan_type(label)
        for q_o in SWEEP_QO:
            for verdict in classify(ctype, q_o):
                if verdict.distinguished:
                    assert verdict.multiplicity_interval == (1, 1)
                else:
                    assert verdict.multiplicity_interval == (0, 1)
    _report(6, "distinguished verdicts report multiplicity [1,1], all others [0,1]")


def test_criterion_7_indexing_robustness():
    checked = 0
    for label in SWEEP_TYPES:
        ctype = parse_cartan_type(label)
        if system_of(label).m == 1:
            continue
        for eps in borel_discrete_series_list(ctype):
            report = robustness_check(ctype, eps, 2)
            assert report.distinguished == expected_distinguished(ctype, eps)
            assert report.clean_outcomes, (label, eps)
            checked += 1
    _report(
        7,
        f"verdicts for all {checked} discrete-series characters of the m in {{2,3}} types "
        "are independent of the class-to-variable binding",
    )
