import pytest
from hypothesis import given

from thetachain.discs import dualize_object
from thetachain.errors import InvalidStructure, ParseError, ShapeMismatch, StepNotOne
from thetachain.simple import enumerate_hom, from_sequence
from thetachain.textio import (
    convert,
    format_adc,
    format_cochain,
    format_morphism,
    load_morphism,
    parse_adc,
    parse_cochain,
    parse_object,
    parse_wreath,
)
from thetachain.wreath import V_object

from conftest import dimension_sequences


@pytest.mark.parametrize("text, src, dst, out", [
    ("0 1 0", "seq", "updown", "updown: 1"),
    ("0", "updown", "seq", "dims: 0"),
    ("0 1 0 1 0", "seq", "tree", "(()())"),
    ("(()(()))", "tree", "updown", "updown: 1 0 2"),
    ("dims: 0 1 2 1 0", "seq", "seq", "dims: 0 1 2 1 0"),
])
def test_convert(text, src, dst, out):
    assert convert(text, src, dst) == out


@given(dimension_sequences())
def test_adc_and_cochain_round_trip(s):
    K = from_sequence(s)
    assert parse_adc(format_adc(K)) == K
    C = dualize_object(K)
    assert parse_cochain(format_cochain(C)) == C


def test_adc_text():
    assert format_adc(from_sequence((0, 1, 0))) == "adc\n0 deg=0 aug= 1\n1 deg=1 boundary= -1*0 1*2\n2 deg=0 aug= 1\n"


@pytest.mark.parametrize("text, err", [
    ("", ParseError),
    ("adc\n1 deg=0 aug= 1", ParseError),
    ("adc\n0 deg=0 aug= 1\n1 deg=1 boundary= 1*0", InvalidStructure),
    ("adc\n0 deg=1 aug= 1", ParseError),
    ("adc\n0 deg=0 aug= 1\n1 deg=1 boundary= 1-0", ParseError),
    ("adc\n0 deg=0 aug= 1\n1 deg=1 boundary= 1*5", InvalidStructure),
    ("0 1 1 0", StepNotOne),
    ("(()", ParseError),
    ("dims: 0 1 0\ndims: 0", ParseError),
])
def test_parse_errors(text, err):
    with pytest.raises(err):
        parse_object(text)


def test_morphism_round_trip():
    K, L = from_sequence((0, 1, 0)), from_sequence((0, 1, 2, 1, 0))
    for f in enumerate_hom(K, L):
        text = format_morphism(f, "0 1 0", "0 1 2 1 0")
        assert load_morphism(text) == f


def test_morphism_shape_errors():
    with pytest.raises(ShapeMismatch):
        load_morphism("morphism 0 -> 0\ndeg 0:\n1 1")
    with pytest.raises(ShapeMismatch):
        load_morphism("morphism 0 -> 0\ndeg 0:\n1\ndeg 3:\n1")
    with pytest.raises(ParseError):
        load_morphism("morphism 0\ndeg 0:\n1")


def test_wreath_file(tmp_path):
    (tmp_path / "arrow.txt").write_text("dims: 0 1 0\n")
    w = parse_wreath("m: 2\n# components\n0\narrow.txt\n", base=tmp_path)
    assert V_object(w).degrees == (0, 1, 0, 1, 2, 1, 0)
    with pytest.raises(ParseError):
        parse_wreath("m: 2\n0\n")
