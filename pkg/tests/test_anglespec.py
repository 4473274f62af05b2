"""Textual angle grammar and value specs."""

from fractions import Fraction

import pytest

from origami_rings import ParamRational, Rational, root_of_unity
from origami_rings.anglespec import parse_angle, parse_angle_list, parse_value_spec


def test_parse_single_forms():
    assert parse_angle("0").text == "0"
    assert parse_angle("0").angle.is_one()
    spec = parse_angle("pi*1/6")
    assert spec.text == "pi*1/6"
    assert spec.angle.value == root_of_unity(12, 1)
    assert parse_angle("deg:30").angle.value == root_of_unity(12, 1)
    assert parse_angle("deg:22.5").angle.value == root_of_unity(16, 1)
    p = parse_angle("param:2")
    assert p.text == "param:2"
    assert p.angle.value == ParamRational.t_power(2)


def test_normalization_mod_pi():
    assert parse_angle("pi*7/6").text == "pi*1/6"
    assert parse_angle("pi*7/6").angle == parse_angle("pi*1/6").angle
    assert parse_angle("deg:180").text == "0"
    assert parse_angle("pi*0/5").text == "0"
    assert parse_angle("pi*-1/6").text == "pi*5/6"
    assert parse_angle(" pi*1/2 ").text == "pi*1/2"


def test_parse_rejects_garbage():
    for bad in ("", "pi", "pi*x", "deg:sideways", "param:0", "param:-1", "param:a", "tau*1/2"):
        with pytest.raises(ValueError):
            parse_angle(bad)


def test_parse_angle_list_sorted_and_normalized():
    angles, texts = parse_angle_list("pi*1/2,0,pi*1/3,pi*7/6")
    assert len(angles) == 4
    assert texts == ("0", "pi*1/6", "pi*1/3", "pi*1/2")
    assert angles.contains_one()


def test_parse_angle_list_rejects_duplicates_and_mixing():
    with pytest.raises(ValueError):
        parse_angle_list("0,pi*1/6,pi*7/6")  # same direction twice
    with pytest.raises(ValueError):
        parse_angle_list("param:1,pi*1/6")
    with pytest.raises(ValueError):
        parse_angle_list("  ,  ")
    # param plus the axis is the supported parametric form
    angles, texts = parse_angle_list("param:2,0,param:1")
    assert angles.is_parametric()
    assert texts == ("0", "param:1", "param:2")


def test_value_spec_rectangular():
    v = parse_value_spec("1/2,3")
    assert v == Rational(Fraction(1, 2)) + root_of_unity(4, 1) * 3
    assert parse_value_spec("0,1") == root_of_unity(4, 1)
    with pytest.raises(ValueError):
        parse_value_spec("1/2")
    with pytest.raises(ValueError):
        parse_value_spec("a,b")


def test_value_spec_from_angles():
    v = parse_value_spec("angles:0,pi*1/3,pi*2/3")
    assert v == root_of_unity(6, 1)
    with pytest.raises(ValueError):
        parse_value_spec("angles:0,pi*1/6,pi*1/3,pi*1/2")  # four directions
    with pytest.raises(ValueError):
        parse_value_spec("angles:pi*1/6,pi*1/3,pi*1/2")  # missing the axis
