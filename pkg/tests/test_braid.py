import math

import pytest
from hypothesis import assume, given, strategies as st

from dynnikov import (
    BraidGenerator,
    BraidWord,
    DynnikovCoordinates,
    IndexOutOfRange,
    ParseError,
    apply_generator_extended,
    apply_generator_standard,
    apply_word,
    extend,
    is_central,
    parse_word,
    validate,
)

from conftest import coordinates, ext, extended_coordinates


def gen(k):
    return BraidGenerator.from_int(k)


def test_standard_examples_n3():
    c = validate(3, [0], [1])
    assert apply_generator_standard(c, gen(1)) == c
    assert apply_generator_standard(c, gen(2)) == validate(3, [1], [0])
    assert apply_generator_standard(validate(3, [1], [0]), gen(-2)) == c


def test_extended_examples():
    e = ext((0, -1, -2, -2, 1, 0), (-3, -1, 2, -2, 2, 2))
    assert apply_generator_extended(e, gen(-2)) == ext((0, -1, -2, -2, 1, 0), (-3, 0, 1, -2, 2, 2))
    e = ext((0, -1, -2, 1, 0), (-1, -1, -2, 2, 2))
    assert apply_generator_extended(e, gen(3)) == ext((0, -1, -1, 0, 0), (-1, -1, 1, -1, 2))


def test_index_out_of_range():
    c = validate(3, [0], [1])
    with pytest.raises(IndexOutOfRange):
        apply_generator_standard(c, gen(3))
    with pytest.raises(IndexOutOfRange):
        apply_generator_extended(extend(c), gen(-3))
    with pytest.raises(IndexOutOfRange):
        apply_word(c, [1, 4])


def test_apply_word_examples():
    c = validate(3, [0], [1])
    assert apply_word(c, BraidWord()) == c
    assert apply_word(c, parse_word("1 1")) == c
    d = validate(5, [3, -1, 0], [2, 2, -7])
    assert apply_word(d, parse_word("2 -2")) == d


def test_parse_word():
    assert parse_word("1 -2 3") == BraidWord((BraidGenerator(1), BraidGenerator(2, -1), BraidGenerator(3)))
    assert parse_word("1,-2, 3") == parse_word("1 -2 3")
    assert parse_word("") == BraidWord()
    assert parse_word("  ") == BraidWord()
    for bad in ("0", "1 x", "1.5", "--2"):
        with pytest.raises(ParseError):
            parse_word(bad)
    with pytest.raises(ParseError):
        parse_word("4", n=3)
    assert str(parse_word("1 -2 3")) == "1 -2 3"


def test_word_inverse_and_concatenation():
    w = parse_word("1 -3 2 2")
    assert w.inverse() == parse_word("-2 -2 3 -1")
    assert len(w + w.inverse()) == 8


@st.composite
def coords_and_generator(draw, extended=False):
    c = draw(extended_coordinates() if extended else coordinates())
    k = draw(st.integers(1, c.n - 1))
    sign = draw(st.sampled_from((1, -1)))
    return c, BraidGenerator(k, sign)


@given(coords_and_generator())
def test_standard_inverse_cancels(cg):
    c, g = cg
    assert apply_generator_standard(apply_generator_standard(c, g), g.inverse()) == c


@given(coords_and_generator(extended=True))
def test_extended_inverse_cancels_and_stays_central(eg):
    e, g = eg
    f = apply_generator_extended(e, g)
    assert f.a[0] == f.a[-1] == 0
    assert is_central(f)
    assert apply_generator_extended(f, g.inverse()) == e


@given(coords_and_generator())
def test_extended_action_matches_standard_action(cg):
    # the end-case rules are what the interior rules become once the dummy
    # punctures are dropped
    c, g = cg
    f = apply_generator_extended(extend(c), g)
    assert f.collapse() == apply_generator_standard(c, g)
    assert extend(f.collapse()) == f


@given(coordinates(), st.data())
def test_braid_relations(c, data):
    n = c.n
    i = data.draw(st.integers(1, n - 1))
    j = data.draw(st.integers(1, n - 1))
    s = data.draw(st.sampled_from((1, -1)))
    if abs(i - j) >= 2:
        assert apply_word(c, [s * i, s * j]) == apply_word(c, [s * j, s * i])
    if i <= n - 2:
        assert apply_word(c, [s * i, s * (i + 1), s * i]) == apply_word(c, [s * (i + 1), s * i, s * (i + 1)])


@given(st.integers(-60, 60), st.integers(-60, 60), st.integers(1, 2), st.sampled_from((1, -1)))
def test_gcd_preserved_on_three_punctures(a1, b1, k, s):
    assume(a1 or b1)
    c = DynnikovCoordinates(3, (a1,), (b1,))
    d = apply_generator_standard(c, BraidGenerator(k, s))
    assert math.gcd(d.a[0], d.b[0]) == math.gcd(a1, b1)
