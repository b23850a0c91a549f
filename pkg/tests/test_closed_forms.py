from fractions import Fraction

import pytest

from conftest import get_ball
from gyoja.cartan import parse_cartan_type
from gyoja.closed_forms import (
    CalibrationResult,
    Factor,
    PoleError,
    bott_closed_form,
    calibrate_indexing,
    macdonald_closed_form,
)
from gyoja.hecke import counting_series
from gyoja.series import TruncatedSeries


def _factor_multiset(factors):
    out = {}
    for f in factors:
        out[str(f)] = out.get(str(f), 0) + 1
    return out


def test_factor_requires_unit_constant():
    with pytest.raises(ValueError):
        Factor.make(1, {(0,): -1, (1,): 1})
    with pytest.raises(ValueError):
        Factor.make(1, {(1,): 1})
    f = Factor.make(1, {(0,): 1, (2,): -1})
    assert str(f) == "(1 - t^2)"


def test_bott_a2_factors_and_expansion():
    form = bott_closed_form(parse_cartan_type("A2"))
    assert _factor_multiset(form.numerator) == {"(1 - t^2)": 1, "(1 - t^3)": 1}
    assert _factor_multiset(form.denominator) == {"(1 - t)": 3, "(1 - t^2)": 1}
    assert form.expand(2) == TruncatedSeries(1, 2, {(0,): 1, (1,): 3, (2,): 6})


def test_bott_constant_term_is_one():
    for label in ("A2", "A3", "D4", "E6", "E7", "E8"):
        form = bott_closed_form(parse_cartan_type(label))
        assert form.expand(0) == TruncatedSeries(1, 0, {(0,): 1})


def test_bott_rejects_multiclass_types():
    with pytest.raises(ValueError):
        bott_closed_form(parse_cartan_type("G2"))
    with pytest.raises(ValueError):
        macdonald_closed_form(parse_cartan_type("A2"))


def test_a1_form_factors():
    form = macdonald_closed_form(parse_cartan_type("A1"))
    assert _factor_multiset(form.numerator) == {"(1 + t1)": 1, "(1 + t2)": 1}
    assert _factor_multiset(form.denominator) == {"(1 - t1·t2)": 1}


def test_g2_form_has_trinomial_factors():
    form = macdonald_closed_form(parse_cartan_type("G2"))
    assert _factor_multiset(form.numerator) == {
        "(1 + t1)": 1,
        "(1 + t1 + t1^2)": 1,
        "(1 + t2)": 1,
        "(1 + t1·t2 + t1^2·t2^2)": 1,
    }
    assert _factor_multiset(form.denominator) == {"(1 - t1^2·t2)": 1, "(1 - t1^3·t2^2)": 1}


def test_c2_form_instantiation():
    form = macdonald_closed_form(parse_cartan_type("C2"))
    assert _factor_multiset(form.numerator) == {
        "(1 - t1)": 1,
        "(1 - t1^2)": 1,
        "(1 + t2)": 1,
        "(1 + t3)": 1,
        "(1 + t1·t2)": 1,
        "(1 + t1·t3)": 1,
    }
    assert _factor_multiset(form.denominator) == {
        "(1 - t1)": 2,
        "(1 - t1·t2·t3)": 1,
        "(1 - t1^2·t2·t3)": 1,
    }


def test_a1_expansion_example():
    form = macdonald_closed_form(parse_cartan_type("A1"))
    assert form.expand(2) == TruncatedSeries(
        2, 2, {(0, 0): 1, (1, 0): 1, (0, 1): 1, (1, 1): 2}
    )


def test_expand_geometric_inverse():
    from gyoja.closed_forms import ClosedForm

    form = ClosedForm(1, (), (Factor.make(1, {(0,): 1, (1,): -1}),))
    assert form.expand(3) == TruncatedSeries(1, 3, {(0,): 1, (1,): 1, (2,): 1, (3,): 1})


def test_evaluate_examples():
    a1 = macdonald_closed_form(parse_cartan_type("A1"))
    assert a1.evaluate([Fraction(-1, 2), Fraction(-1, 2)]) == Fraction(1, 3)
    g2 = macdonald_closed_form(parse_cartan_type("G2"))
    assert g2.evaluate([Fraction(-1, 2), Fraction(2)]) == Fraction(3, 2)
    b3 = macdonald_closed_form(parse_cartan_type("B3"))
    for q_o in (2, 3, 5):
        value, witness = b3.evaluate_witnessed([Fraction(-1, q_o), Fraction(q_o)])
        assert value == 0
        assert str(witness) == "(1 + t1·t2)"


def test_zero_requires_a_witness_factor():
    c3 = macdonald_closed_form(parse_cartan_type("C3"))
    value, witness = c3.evaluate_witnessed([Fraction(-1, 2), Fraction(-1, 2), Fraction(2)])
    assert value == 0 and witness is not None


def test_pole_error_names_the_factor():
    c2 = macdonald_closed_form(parse_cartan_type("C2"))
    # t1 = q_o makes 1 - t1^2*t2*t3 vanish with t2*t3 = 1/q_o^2
    with pytest.raises(PoleError) as exc_info:
        c2.evaluate([Fraction(2), Fraction(-1, 2), Fraction(-1, 2)])
    assert "(1 - t1^2·t2·t3)" in str(exc_info.value)


def test_evaluate_rejects_wrong_dimension():
    a1 = macdonald_closed_form(parse_cartan_type("A1"))
    with pytest.raises(ValueError):
        a1.evaluate([Fraction(1, 2)])


@pytest.mark.parametrize("label,degree", [("A1", 8), ("C2", 8), ("C3", 8), ("B3", 8), ("G2", 8), ("F4", 6)])
def test_expansion_matches_enumeration(label, degree):
    ctype = parse_cartan_type(label)
    ball = get_ball(label, degree)
    enumerated = counting_series(ball, degree)
    calibration = calibrate_indexing(ctype, 6)
    expanded = macdonald_closed_form(ctype).expand(degree).permute_variables(calibration.binding)
    assert expanded == enumerated


def test_bott_matches_enumeration():
    for label, degree in (("A2", 8), ("D4", 6)):
        ball = get_ball(label, degree)
        assert bott_closed_form(parse_cartan_type(label)).expand(degree) == counting_series(
            ball, degree
        )


@pytest.mark.parametrize(
    "label,degree",
    [("B4", 7), ("C4", 7), ("A3", 8), ("D5", 6), ("E6", 6), ("E7", 5), ("E8", 5)],
)
def test_expansion_matches_enumeration_remaining_types(label, degree):
    # every supported family and rank pattern, beyond the deep-degree suite
    ctype = parse_cartan_type(label)
    ball = get_ball(label, degree)
    enumerated = counting_series(ball, degree)
    system_m = ball.system.m
    if system_m == 1:
        expanded = bott_closed_form(ctype).expand(degree)
    else:
        binding = calibrate_indexing(ctype, 6).binding
        expanded = macdonald_closed_form(ctype).expand(degree).permute_variables(binding)
    assert expanded == enumerated


def test_calibration_g2_unique_at_degree_8():
    result = calibrate_indexing(parse_cartan_type("G2"), 8)
    assert result.binding == (0, 1)
    assert result.matching == ((0, 1),)


def test_calibration_cn_symmetry():
    for label in ("C3", "C4"):
        result = calibrate_indexing(parse_cartan_type(label), 6)
        assert result.binding == (0, 1, 2)
        assert result.matching == ((0, 1, 2), (0, 2, 1))


def test_calibration_c2_is_not_identity():
    # all three C2 classes are singletons; the chain class {s_1} is second in
    # canonical order but plays the formula's t1 role
    result = calibrate_indexing(parse_cartan_type("C2"), 6)
    assert result.binding == (1, 0, 2)
    assert result.matching == ((1, 0, 2), (1, 2, 0))


def test_calibration_m1_identity():
    result = calibrate_indexing(parse_cartan_type("E6"), 4)
    assert result == CalibrationResult(parse_cartan_type("E6"), 4, (0,), ((0,),))


def test_point_for_classes():
    result = calibrate_indexing(parse_cartan_type("C2"), 6)
    coords = (Fraction(10), Fraction(20), Fraction(30))
    assert result.point_for_classes(coords) == (Fraction(20), Fraction(10), Fraction(30))


def test_cn_evaluate_symmetric_in_last_two_coordinates():
    for label in ("C2", "C3", "C4"):
        form = macdonald_closed_form(parse_cartan_type(label))
        for point in ([Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)],
                      [Fraction(-1, 2), Fraction(2), Fraction(-1, 2)],
                      [Fraction(1, 2), Fraction(-1, 3), Fraction(1, 7)]):
            swapped = [point[0], point[2], point[1]]
            assert form.evaluate(point) == form.evaluate(swapped)


def test_expansion_value_converges_monotonically_at_positive_points():
    cases = [
        ("A1", [Fraction(1, 2), Fraction(1, 3)]),
        ("G2", [Fraction(1, 3), Fraction(1, 4)]),
        ("C2", [Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)]),
        ("B3", [Fraction(1, 4), Fraction(1, 3)]),
        ("F4", [Fraction(1, 4), Fraction(1, 5)]),
    ]
    for label, point in cases:
        form = macdonald_closed_form(parse_cartan_type(label))
        value = form.evaluate(point)
        errors = [abs(value - form.expand(n).evaluate(point)) for n in range(1, 8)]
        assert all(errors[i] > errors[i + 1] for i in range(len(errors) - 1)), label


def test_cancel_removes_common_factors():
    form = bott_closed_form(parse_cartan_type("A2"))
    reduced = form.cancel()
    assert len(reduced.numerator) == len(form.numerator) - 1
    assert len(reduced.denominator) == len(form.denominator) - 1
    assert reduced.expand(6) == form.expand(6)
    trivial = Factor.make(1, {(0,): 1, (1,): -1})
    from gyoja.closed_forms import ClosedForm

    cancelled = ClosedForm(1, (trivial,), (trivial,)).cancel()
    assert cancelled.numerator == () and cancelled.denominator == ()
    assert cancelled.expand(3) == TruncatedSeries(1, 3, {(0,): 1})


def test_render_canonical():
    form = macdonald_closed_form(parse_cartan_type("A1"))
    assert str(form) == "(1 + t1)·(1 + t2) / (1 - t1·t2)"
    bott = bott_closed_form(parse_cartan_type("A2"))
    assert str(bott) == "(1 - t^2)·(1 - t^3) / (1 - t)^3·(1 - t^2)"
