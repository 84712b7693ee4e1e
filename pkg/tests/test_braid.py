import random

import pytest

from mixedbraids import braid
from mixedbraids.braid import BraidWord


def W(strands, text=""):
    letters = []
    for tok in text.split():
        neg = tok.endswith("-")
        letters.append((int(tok.rstrip("-")), -1 if neg else 1))
    return BraidWord(strands, tuple(letters))


def random_word(rng, strands, length):
    return BraidWord(strands, tuple(
        (rng.randint(1, strands - 1), rng.choice((1, -1)))
        for _ in range(length)))


def test_word_validation():
    with pytest.raises(ValueError):
        BraidWord(3, ((3, 1),))
    with pytest.raises(ValueError):
        BraidWord(3, ((1, 2),))
    with pytest.raises(ValueError):
        BraidWord(0, ())


def test_free_reduce():
    assert braid.free_reduce(W(2, "1 1-")).letters == ()
    assert braid.free_reduce(W(3, "2 1 1- 2")).letters == ((2, 1), (2, 1))
    w = W(3, "1 2 1")
    assert braid.free_reduce(w) == w


def test_invert_concat():
    rng = random.Random(7)
    for _ in range(50):
        w = random_word(rng, 4, rng.randint(0, 12))
        assert braid.is_trivial(braid.concat(w, braid.invert(w)))
    with pytest.raises(ValueError):
        braid.concat(W(3, "1"), W(4, "1"))


def test_permutation_of():
    assert braid.permutation_of(W(3, "1")) == (2, 1, 3)
    assert braid.permutation_of(W(2, "1 1")) == (1, 2)
    # order-reversing permutation
    assert braid.permutation_of(W(3, "1 2 1")) == (3, 2, 1)


def test_permutation_composition_order():
    # compose(p, q) applies p first
    p = braid.transposition(3, 1)
    q = braid.transposition(3, 2)
    assert braid.compose(p, q) == braid.permutation_of(W(3, "1 2"))


def test_starting_finishing_sets():
    delta = braid.half_twist_perm(4)
    assert braid.starting_set(delta) == {1, 2, 3}
    assert braid.finishing_set(delta) == {1, 2, 3}
    t = braid.transposition(4, 2)
    assert braid.starting_set(t) == {2}


def test_perm_word_roundtrip():
    rng = random.Random(3)
    for n in (2, 3, 5):
        for _ in range(20):
            w = random_word(rng, n, 8)
            p = braid.permutation_of(w)
            lift = BraidWord(n, braid.perm_word(p))
            assert braid.permutation_of(lift) == p
            # the canonical lift is a positive permutation braid: its length
            # equals the inversion count
            inv = sum(1 for i in range(n) for j in range(i + 1, n)
                      if p[i] > p[j])
            assert len(lift) == inv


def test_normal_form_identity():
    nf = braid.normal_form(W(3))
    assert nf.infimum == 0 and nf.factors == ()
    assert nf.is_identity()


def test_normal_form_braid_relation():
    assert braid.normal_form(W(3, "1 2 1")) == braid.normal_form(W(3, "2 1 2"))


def test_normal_form_single_inverse():
    # s1^-1 on 3 strands: Delta^-1 times the permutation braid of s1 s2
    nf = braid.normal_form(W(3, "1-"))
    assert nf.infimum == -1
    assert nf.factors == (braid.permutation_of(W(3, "1 2")),)


def test_equal_examples():
    assert braid.equal(W(3, "1 2 1"), W(3, "2 1 2"))
    assert not braid.equal(W(3, "1"), W(3, "2"))
    # Delta^2 is central
    assert braid.equal(W(3, "1 2 1 1 2 1 1"), W(3, "1 1 2 1 1 2 1"))
    with pytest.raises(ValueError):
        braid.equal(W(3, "1"), W(4, "1"))


def test_delta_squared_central():
    rng = random.Random(11)
    for n in (3, 4):
        d2 = braid.concat(*[BraidWord(n, braid.perm_word(braid.half_twist_perm(n)))] * 2)
        for _ in range(25):
            w = random_word(rng, n, 10)
            assert braid.equal(braid.concat(d2, w), braid.concat(w, d2))


def test_normal_form_idempotent_roundtrip():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(2, 8)
        w = random_word(rng, n, rng.randint(0, 40))
        nf = braid.normal_form(w)
        assert braid.normal_form(braid.normal_form_word(nf)) == nf
        assert braid.is_trivial(braid.concat(w, braid.invert(w)))
        assert braid.permutation_of(braid.normal_form_word(nf)) == braid.permutation_of(w)


def test_normal_form_factors_left_weighted():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(3, 6)
        w = random_word(rng, n, 20)
        nf = braid.normal_form(w)
        delta = braid.half_twist_perm(n)
        ident = braid.identity_perm(n)
        for f in nf.factors:
            assert f != ident and f != delta
        for a, b in zip(nf.factors, nf.factors[1:]):
            assert braid.starting_set(b) <= braid.finishing_set(a)


def test_oracle_equal():
    assert braid.oracle_equal(W(3, "1 2 1"), W(3, "2 1 2"), 8) is True
    assert braid.oracle_equal(W(3), W(3), 0) is True
    assert braid.oracle_equal(W(3, "1"), W(3, "2"), 6) == "unknown"


def test_oracle_agrees_with_equal_on_random_words():
    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(2, 4)
        u = random_word(rng, n, rng.randint(0, 5))
        v = random_word(rng, n, rng.randint(0, 5))
        verdict = braid.oracle_equal(u, v, 10)
        if verdict is True:
            assert braid.equal(u, v)


def test_word_length_cap():
    with pytest.raises(braid.WordLengthError):
        BraidWord(2, ((1, 1),) * (braid.MAX_WORD_LETTERS + 1))
