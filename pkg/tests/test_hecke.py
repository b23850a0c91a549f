import random
from fractions import Fraction

import numpy as np
import pytest

from _oracles import brute_force_elements, random_validated_rep
from conftest import get_ball, system_of
from gyoja.cartan import SignCharacter, parse_cartan_type, steinberg_character
from gyoja.hecke import (
    COUNTING,
    MatrixRep,
    char_value_e_w,
    counting_series,
    eval_rep_on_element,
    eval_rep_on_word,
    gyoja_series,
    parse_sign_vector,
    partial_sums_at_point,
    validate_rep,
)
from gyoja.series import TruncatedSeries


def test_trivial_hecke_character_passes():
    g2 = system_of("G2")
    rep = MatrixRep.make([[[4]]] * g2.num_gens, q_o=2)
    assert validate_rep(rep, g2).ok


def test_quadratic_violation_detected():
    g2 = system_of("G2")
    rep = MatrixRep.make([[[2]]] * g2.num_gens, q=4)
    report = validate_rep(rep, g2)
    assert not report.ok
    assert any("quadratic" in v for v in report.violations)


def test_braid_violation_detected():
    g2 = system_of("G2")
    # eigenvalues are fine (-1 and q) but the pair (1,2) with bond 6 breaks
    mats = [np.diag([-1, 4]), np.diag([-1, 4]), [[4, 0], [1, -1]]]
    rep = MatrixRep.make(mats, q_o=2)
    report = validate_rep(rep, g2)
    assert any("braid" in v for v in report.violations)


def test_sign_character_reps_always_validate():
    for label in ("A1", "C2", "G2"):
        system = system_of(label)
        m = system.m
        for bits in range(2**m):
            eps = SignCharacter(tuple(1 if bits & (1 << i) else -1 for i in range(m)))
            rep = MatrixRep.from_sign_character(eps, system.partition, 3)
            assert validate_rep(rep, system).ok


def test_eval_on_identity_is_identity():
    system = system_of("C2")
    ball = get_ball("C2", 2)
    rep = MatrixRep.from_sign_character(steinberg_character(parse_cartan_type("C2")), system.partition, 2)
    out = eval_rep_on_element(rep, ball.element(0, 0))
    assert out.shape == (1, 1) and out[0, 0] == 1


def test_eval_is_reduced_word_independent_for_sample_reps():
    rng = random.Random(1234)
    for label in ("C2", "G2"):
        system = system_of(label)
        by_element = brute_force_elements(system, 5)
        for i in range(10):
            rep = random_validated_rep(rng, system, dim=(i % 3) + 1, q_o=rng.choice((2, 3)))
            assert validate_rep(rep, system).ok
            for _, words in by_element.values():
                ref = eval_rep_on_word(rep, words[0])
                for word in words[1:]:
                    assert (eval_rep_on_word(rep, word) == ref).all()


def test_char_value_examples():
    g2 = parse_cartan_type("G2")
    st = steinberg_character(g2)
    assert char_value_e_w(st, (3, 2), 2) == (-1) ** 5
    assert char_value_e_w(st, (0, 0), 7) == 1
    # generator in the short-root singleton class, eps = (-1, +1): value q = q_o^2
    assert char_value_e_w(SignCharacter((-1, 1)), (0, 1), 2) == 4
    with pytest.raises(ValueError):
        char_value_e_w(st, (1, 1), 1)
    with pytest.raises(ValueError):
        char_value_e_w(st, (1, 1, 1), 2)


def test_char_value_agrees_with_1x1_matrix_path():
    for label in ("C2", "G2"):
        system = system_of(label)
        ball = get_ball(label, 4)
        for eps_bits in range(2**system.m):
            eps = SignCharacter(
                tuple(1 if eps_bits & (1 << i) else -1 for i in range(system.m))
            )
            rep = MatrixRep.from_sign_character(eps, system.partition, 2)
            for el in ball:
                if el.length > 4:
                    break
                assert eval_rep_on_element(rep, el)[0, 0] == char_value_e_w(eps, el.multilength, 2)


def test_counting_series_equals_counting_character_series():
    ball = get_ball("G2", 5)
    assert gyoja_series(ball, COUNTING, bound=5) == counting_series(ball, 5)


def test_a1_counting_series_degree_3():
    ball = get_ball("A1", 3)
    expected = TruncatedSeries(
        2, 3, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 2, (2, 1): 1, (1, 2): 1}
    )
    assert counting_series(ball, 3) == expected


def test_degree_zero_coefficient_is_identity():
    system = system_of("C2")
    ball = get_ball("C2", 3)
    eps = SignCharacter((-1, -1, 1))
    zero_exp = (0,) * system.m
    assert gyoja_series(ball, eps, q_o=2, bound=3).coefficient(zero_exp) == 1
    rng = random.Random(7)
    rep = random_validated_rep(rng, system, dim=2, q_o=2)
    mat_series = gyoja_series(ball, rep, bound=3)
    for i in range(2):
        for j in range(2):
            assert mat_series[i, j].coefficient(zero_exp) == (1 if i == j else 0)


def test_sign_character_series_matches_1x1_matrix_series():
    for label in ("C2", "G2"):
        system = system_of(label)
        ball = get_ball(label, 4)
        eps = SignCharacter((-1,) * (system.m - 1) + (1,))
        rep = MatrixRep.from_sign_character(eps, system.partition, 2)
        scalar = gyoja_series(ball, eps, q_o=2, bound=4)
        matrix = gyoja_series(ball, rep, bound=4)
        assert matrix[0, 0] == scalar


def test_steinberg_series_specializes_to_alternating_sums():
    ball = get_ball("A1", 8)
    st = steinberg_character(parse_cartan_type("A1"))
    sums = partial_sums_at_point(ball, st, 2)
    acc = Fraction(0)
    expected = []
    for k, count in enumerate(ball.counts):
        acc += count * Fraction(-1, 2) ** k
        expected.append(acc)
    assert sums == expected


def test_a1_steinberg_partial_sums_prefix():
    ball = get_ball("A1", 4)
    st = steinberg_character(parse_cartan_type("A1"))
    sums = partial_sums_at_point(ball, st, 2)
    assert sums[:5] == [
        Fraction(1),
        Fraction(0),
        Fraction(1, 2),
        Fraction(1, 4),
        Fraction(3, 8),
    ]


def test_partial_sums_start_at_one():
    for label, eps in (("A1", (-1, -1)), ("G2", (-1, 1)), ("C2", (-1, -1, 1))):
        ball = get_ball(label, 2)
        sums = partial_sums_at_point(ball, SignCharacter(eps), 3)
        assert sums[0] == 1


def test_b3_nonsteinberg_partial_sums_trend_to_zero():
    ball = get_ball("B3", 10)
    sums = partial_sums_at_point(ball, SignCharacter((-1, 1)), 2)
    assert abs(sums[10]) < Fraction(1, 16) < abs(sums[0])


def test_parse_sign_vector():
    assert parse_sign_vector("[-1,1]").signs == (-1, 1)
    assert parse_sign_vector("-1, -1, 1").signs == (-1, -1, 1)
    with pytest.raises(ValueError):
        parse_sign_vector("[1, zebra]")
    with pytest.raises(ValueError):
        parse_sign_vector("[0,1]")


def test_gyoja_series_needs_qo_for_characters():
    ball = get_ball("A1", 2)
    with pytest.raises(ValueError):
        gyoja_series(ball, SignCharacter((-1, -1)))


def test_bound_cannot_exceed_radius():
    ball = get_ball("A1", 3)
    with pytest.raises(ValueError):
        counting_series(ball, 20)
