import random

import pytest
from hypothesis import given, settings

from braidamp.alternating import (
    alt_decompose,
    alt_length,
    fast_compare,
    golden_delta_factors,
    has_drop_shape,
    parabolic_drop,
    sandwich_holds,
)
from braidamp.dehornoy import compare
from braidamp.garside import brute_force_right_divisors, canonical_form, equals, parabolic_max_right_divisor, positive_class_key
from braidamp.words import BraidError, concat, delta_power, invert, word

from strategies import braid_words


def test_decompose_examples():
    assert alt_decompose(word(3)).factors == () and alt_length(word(3)) == 0
    dec = alt_decompose(delta_power(3, 2))
    assert [str(w) for _, _, w in dec.reading_order()] == ["1", "2 2", "1", "2 2"]
    assert dec.length == 2
    assert [alt_length(delta_power(3, 2 * N)) for N in (1, 2, 3)] == [2, 3, 4]


def test_single_b_factor_counts_as_one():
    dec = alt_decompose(word(3, (2, 2, 2)))
    assert len(dec.factors) == 1 and equals(dec.B(0), word(3, (2, 2, 2)))
    # the sandwich forces 1 here, not 0
    assert dec.length == 1 and sandwich_holds(word(3, (2, 2, 2)))


def test_decompose_rejects_bad_input():
    with pytest.raises(BraidError):
        alt_decompose(word(3, (-1,)))
    with pytest.raises(BraidError):
        alt_decompose(word(2, (1,)))


def test_fast_compare_examples():
    fc = fast_compare(word(3, (2, 2, 2)), delta_power(3, 6))
    assert fc.verdict == "Less" and fc.rule == "length-gap"
    x = word(3, (1, 2, 2, 1))
    assert fast_compare(x, x).verdict == "Unknown"
    fc = fast_compare(delta_power(3, 2), delta_power(3, 4))
    assert fc.verdict == "Unknown" and fc.rule is None


def test_parabolic_drop_examples():
    with pytest.raises(BraidError):
        parabolic_drop(word(3, (2, 2)))
    for n in (3, 4, 5):
        x = concat(*reversed(golden_delta_factors(n, 2)[1:]))
        dec = alt_decompose(x)
        if has_drop_shape(dec):
            rep = parabolic_drop(x)
            assert all(abs(e) <= n - 2 for e in rep.letters)


@settings(max_examples=300)
@given(braid_words(min_n=3, max_n=5, max_len=20, positive=True))
def test_reconstruction(x):
    dec = alt_decompose(x)
    assert equals(dec.product(), x)
    if dec.factors:
        assert not dec.factors[-1].is_empty() or len(dec.factors) == 1


@settings(max_examples=200)
@given(braid_words(min_n=3, max_n=4, max_len=8, positive=True))
def test_maximality_against_oracle(x):
    dec = alt_decompose(x)
    b0 = dec.B(0)
    assert equals(b0, parabolic_max_right_divisor(x, "B"))
    rest = concat(x, invert(b0))
    rest_word = word(x.strands, positive_class_key(canonical_form(rest).to_word().letters))
    a1 = dec.A(1) if len(dec.factors) > 1 else word(x.strands)
    gens = set(range(1, x.strands - 1))
    below = {d.letters for d in brute_force_right_divisors(a1)}
    for d in brute_force_right_divisors(rest_word):
        if set(d.letters) <= gens:
            assert d.letters in below


@settings(max_examples=400)
@given(braid_words(min_n=3, max_n=5, max_len=25, positive=True))
def test_sandwich_property(x):
    # the identity has m = 0 and cannot sit strictly below Delta^0
    assert sandwich_holds(x) or not x.letters


def test_fast_compare_never_contradicts():
    rng = random.Random(1)
    for _ in range(600):
        n = rng.randint(3, 5)
        x = word(n, [rng.randint(1, n - 1) for _ in range(rng.randint(0, 18))])
        y = word(n, [rng.randint(1, n - 1) for _ in range(rng.randint(0, 18))])
        fc = fast_compare(x, y)
        if fc.verdict != "Unknown":
            assert fc.verdict == compare(x, y).verdict.value
