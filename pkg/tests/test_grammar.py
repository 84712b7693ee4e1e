import random

import pytest

from mixedbraids.grammar import (WordSyntaxError, format_fixed_word,
                                 format_word, parse_fixed_word, parse_letters,
                                 parse_word)
from mixedbraids.mixed import MixedBraidWord


def test_parse_basic():
    w = parse_word("a1 s2^-1 S1", 2, 3)
    assert w.letters == (("a", 1, 1), ("s", 2, -1), ("S", 1, 1))


def test_parse_power_expansion():
    w = parse_word("a1^2", 1, 1)
    assert w.letters == (("a", 1, 1), ("a", 1, 1))
    w = parse_word("s1^-3", 1, 2)
    assert w.letters == (("s", 1, -1),) * 3


def test_parse_empty():
    assert parse_word("", 2, 2).letters == ()
    assert parse_word("   ", 2, 2).letters == ()


@pytest.mark.parametrize("bad", ["a0", "b1", "a", "a1^0", "a^2", "a1^", "1a"])
def test_parse_rejects(bad):
    with pytest.raises(WordSyntaxError):
        parse_letters(bad)


def test_parse_range_errors():
    with pytest.raises(WordSyntaxError):
        parse_word("a3", 2, 1)
    with pytest.raises(WordSyntaxError):
        parse_word("S1", 1, 2)


def test_syntax_error_offset():
    with pytest.raises(WordSyntaxError) as err:
        parse_letters("a1 ??")
    assert err.value.offset == 3


def test_format_compression():
    w = parse_word("a1 a1 a1 s1^-1 s1^-1 a2", 2, 2)
    assert format_word(w) == "a1^3 s1^-2 a2"
    assert format_word(w, compress=False) == "a1 a1 a1 s1^-1 s1^-1 a2"


def test_fixed_word_parsing():
    assert parse_fixed_word("S1^2 S2^-1", 3) == ((1, 1), (1, 1), (2, -1))
    assert format_fixed_word(((1, 1), (1, 1), (2, -1))) == "S1^2 S2^-1"
    with pytest.raises(WordSyntaxError):
        parse_fixed_word("a1", 3)
    with pytest.raises(WordSyntaxError):
        parse_fixed_word("S3", 3)


def test_roundtrip_random():
    rng = random.Random(0)
    for _ in range(300):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        letters = []
        for _ in range(rng.randint(0, 15)):
            kind = rng.choice(("S", "a", "s"))
            if kind == "S" and m < 2:
                kind = "a"
            if kind == "s" and n < 2:
                kind = "a"
            hi = {"S": m - 1, "a": m, "s": n - 1}[kind]
            letters.append((kind, rng.randint(1, hi), rng.choice((1, -1))))
        w = MixedBraidWord(m, n, tuple(letters))
        assert parse_word(format_word(w), m, n) == w
        assert parse_word(format_word(w, compress=False), m, n) == w
