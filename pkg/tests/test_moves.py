import random

import pytest

from mixedbraids import braid, manifolds, mixed, moves
from mixedbraids.braid import BraidWord
from mixedbraids.grammar import format_word, parse_word
from mixedbraids.mixed import MixedBraidWord, embed, mixed_equal, winding_vector
from mixedbraids.moves import MoveRecord


def random_algebraic(rng, m, n, length):
    letters = []
    for _ in range(length):
        kind = rng.choice(("a", "s") if n >= 2 else ("a",))
        hi = m if kind == "a" else n - 1
        letters.append((kind, rng.randint(1, hi), rng.choice((1, -1))))
    return MixedBraidWord(m, n, tuple(letters))


# ---------------------------------------------------------------------------
# records

def test_move_record_json_roundtrip():
    recs = [MoveRecord("m", -1), MoveRecord("conj", 1, 2),
            MoveRecord("twist", -1, 3), MoveRecord("l", 1, 2, "over", 4),
            MoveRecord("band", -1, 1, split=0), MoveRecord("m", 1, inverse=True)]
    for rec in recs:
        assert MoveRecord.from_json(rec.to_json()) == rec


def test_inverse_record():
    rec = MoveRecord("conj", 1, 2)
    assert moves.inverse_record(rec) == MoveRecord("conj", -1, 2)
    with pytest.raises(ValueError):
        moves.inverse_record(MoveRecord("m", 1))


# ---------------------------------------------------------------------------
# elementary moves

def test_m_move():
    out = moves.m_move(parse_word("a1", 1, 1), parse_word("", 1, 1), 1)
    assert format_word(out) == "a1 s1"
    out = moves.m_move(parse_word("", 2, 1), parse_word("", 2, 1), -1)
    assert format_word(out) == "s1^-1"
    out = moves.m_move(parse_word("a1", 2, 1), parse_word("a2", 2, 1), 1)
    assert format_word(out) == "a1 s1 a2"


def test_m_move_rejects_fixed_letters():
    with pytest.raises(ValueError):
        moves.m_move(parse_word("S1", 2, 1), parse_word("", 2, 1), 1)


def test_markov_conjugate():
    out = moves.markov_conjugate(parse_word("s1", 1, 2), 1, 1)
    assert format_word(out) == "s1"
    out = moves.markov_conjugate(parse_word("a1", 1, 2), 1, 1)
    assert format_word(out) == "s1 a1 s1^-1"
    with pytest.raises(ValueError):
        moves.markov_conjugate(parse_word("a1", 1, 1), 1, 1)


def test_markov_conjugate_invertible():
    rng = random.Random(6)
    for _ in range(30):
        b = random_algebraic(rng, 2, 3, 8)
        j, s = rng.randint(1, 2), rng.choice((1, -1))
        back = moves.markov_conjugate(moves.markov_conjugate(b, j, s), j, -s)
        assert mixed_equal(back, b)


def test_twisted_conjugate_hopf():
    spec = manifolds.preset("hopf")
    out = moves.twisted_conjugate(parse_word("a1", 2, 1), 1, 1, spec)
    assert mixed_equal(out, parse_word("a2^-1 a1 a2", 2, 1))


def test_twisted_conjugate_identity_spec_is_plain_conjugation():
    spec = manifolds.preset("identity:2")
    rng = random.Random(8)
    for _ in range(20):
        b = random_algebraic(rng, 2, 2, 6)
        out = moves.twisted_conjugate(b, 2, 1, spec)
        plain = MixedBraidWord(2, 2, (("a", 2, -1),) + b.letters + (("a", 2, 1),))
        assert mixed_equal(out, plain)


def test_twisted_conjugate_trefoil_winding():
    spec = manifolds.preset("trefoil")
    out = moves.twisted_conjugate(parse_word("", 2, 1), 1, 1, spec)
    assert winding_vector(out) == (-1, 1)


def test_twisted_conjugate_invertible():
    rng = random.Random(10)
    for name in ("hopf", "borromean", "trefoil"):
        spec = manifolds.preset(name)
        for _ in range(10):
            b = random_algebraic(rng, spec.m, 2, 6)
            i, s = rng.randint(1, spec.m), rng.choice((1, -1))
            back = moves.twisted_conjugate(
                moves.twisted_conjugate(b, i, s, spec), i, -s, spec)
            assert mixed_equal(back, b)


# ---------------------------------------------------------------------------
# L-moves

def test_l_move_collapses_to_stabilization():
    for m in (1, 2, 3):
        empty = parse_word("", m, 1)
        out = moves.l_move(empty, empty, "over", 1, 1)
        assert mixed_equal(out, parse_word("s1", m, 2))


def test_l_move_literal_formula():
    b1 = parse_word("a1", 2, 2)
    b2 = parse_word("", 2, 2)
    out = moves.l_move(b1, b2, "over", 1, 1)
    target = mixed.free_reduce(parse_word("s1^-1 s2^-1 a1 s1^-1 s2 s1 s2 s1", 2, 3))
    assert out.letters == target.letters


def test_l_move_kind_validation():
    empty = parse_word("", 1, 1)
    with pytest.raises(ValueError):
        moves.l_move(empty, empty, "sideways", 1, 1)
    with pytest.raises(ValueError):
        moves.l_move(empty, empty, "over", 2, 1)


@pytest.mark.parametrize("kind", ["over", "under"])
def test_l_move_factorization_matches(kind):
    rng = random.Random(12)
    for _ in range(25):
        m, n = rng.randint(1, 3), rng.randint(1, 3)
        b1 = random_algebraic(rng, m, n, rng.randint(0, 6))
        b2 = random_algebraic(rng, m, n, rng.randint(0, 6))
        i, sign = rng.randint(1, n), rng.choice((1, -1))
        assert mixed_equal(moves.l_move(b1, b2, kind, i, sign),
                           moves.l_move_factorization(b1, b2, kind, i, sign))


# ---------------------------------------------------------------------------
# band-move building blocks

def test_lambda_and_framing_loop():
    assert format_word(moves.lambda_word(2)) == "s2 s1"
    assert format_word(moves.framing_loop(1, 1, 1)) == "s1 a1 s1^-1"
    assert format_word(moves.framing_loop(2, 0, 3)) == "a2"


def test_band_substitute_frozen():
    assert format_word(moves.band_substitute(parse_word("a2", 2, 1), 2)) == "s1^2 a2"
    assert format_word(moves.band_substitute(parse_word("a1", 2, 1), 2)) == "s1^2 a1 s1^-2"
    assert format_word(moves.band_substitute(parse_word("a2", 2, 1), 1)) == "a2"


def test_band_substitute_preserves_winding():
    rng = random.Random(14)
    for _ in range(60):
        m, n = rng.randint(1, 4), rng.randint(1, 3)
        b = random_algebraic(rng, m, n, rng.randint(0, 10))
        k = rng.randint(1, m)
        c = rng.randint(1, 3)
        assert winding_vector(moves.band_substitute(b, k, c)) == winding_vector(b)


def test_algebraic_band_move_solid_torus():
    for p in (-2, 0, 1, 3):
        spec = manifolds.preset("identity:1", framings=(p,))
        out = moves.algebraic_band_move(parse_word("a1", 1, 1),
                                        parse_word("", 1, 1), 1, 1, spec)
        t = "s1 a1 s1^-1 " * abs(p) if p >= 0 else "s1 a1^-1 s1^-1 " * -p
        target = mixed.free_reduce(parse_word(f"s1^2 a1 {t}s1", 1, 2))
        assert out.letters == target.letters


def test_algebraic_band_move_zero_framing_empty():
    spec = manifolds.preset("identity:1", framings=(0,))
    empty = parse_word("", 1, 1)
    assert format_word(moves.algebraic_band_move(empty, empty, 1, 1, spec)) == "s1"


def test_algebraic_band_move_requires_surgery():
    spec = manifolds.preset("hopf")
    empty = parse_word("", 2, 1)
    with pytest.raises(ValueError):
        moves.algebraic_band_move(empty, empty, 1, 1, spec)


def test_band_move_rejects_multistrand_component():
    spec = manifolds.preset("trefoil", framings=(1,))
    empty = parse_word("", 2, 1)
    with pytest.raises(ValueError):
        moves.algebraic_band_move(empty, empty, 1, 1, spec)
    with pytest.raises(ValueError):
        moves.compute_r(spec, 1, 1)


# ---------------------------------------------------------------------------
# the correction word r

def test_compute_r_identity_spec_empty():
    spec = manifolds.preset("identity:3")
    for k in (1, 2, 3):
        assert moves.compute_r(spec, k, 2).letters == ()


def test_compute_r_hopf():
    spec = manifolds.preset("hopf")
    r = moves.compute_r(spec, 1, 1)
    assert mixed_equal(r, parse_word("s1 a2 s1^-1", 2, 2))


def test_compute_r_borromean():
    spec = manifolds.preset("borromean")
    r = moves.compute_r(spec, 2, 1)
    assert mixed_equal(r, parse_word("s1 a1^-1 a3^-1 a1 a3 s1^-1", 3, 2))


def test_combed_band_move_hopf():
    spec = manifolds.preset("hopf", framings=(0, 0))
    empty = parse_word("", 2, 1)
    out = moves.combed_band_move(empty, empty, 1, 1, spec)
    target = mixed.free_reduce(parse_word("s1 s1 a2 s1^-1", 2, 2))
    assert out.letters == target.letters


# ---------------------------------------------------------------------------
# cabling and un-embedding

def test_cable_strand_permutation():
    w = ((1, 1), (1, 1), (1, 1))
    cabled = moves.cable_strand(w, 2, 1)
    perm = braid.permutation_of(BraidWord(3, cabled))
    # cabling the strand starting at 1 of S1^3: pair travels as a unit,
    # ending at positions 2,3 while the other strand wraps to 1
    assert perm == (2, 3, 1)


def test_delete_strand_undoes_cabling():
    rng = random.Random(16)
    for _ in range(40):
        strands = rng.randint(2, 5)
        w = tuple((rng.randint(1, strands - 1), rng.choice((1, -1)))
                  for _ in range(10))
        start = rng.randint(1, strands)
        cabled = moves.cable_strand(w, strands, start)
        assert moves.delete_strand(cabled, start + 1) == w


def test_part_strand_transport_identity():
    rng = random.Random(18)
    for _ in range(40):
        strands = rng.randint(2, 5)
        w = tuple((rng.randint(1, strands - 1), rng.choice((1, -1)))
                  for _ in range(8))
        start = rng.randint(1, strands)
        parted, q_end = part_strand_checked(w, strands, start)
        o_top = tuple((t, 1) for t in range(strands - 1, start - 1, -1))
        end = braid.permutation_of(BraidWord(strands, w))[start - 1]
        o_bot = tuple((t, 1) for t in range(strands - 1, end - 1, -1))
        lhs = BraidWord(strands, o_top + w + braid.invert_letters(o_bot))
        assert braid.equal(lhs, embed(MixedBraidWord(strands - 1, 1, parted)))
        assert q_end == end


def part_strand_checked(w, strands, start):
    return moves.part_strand(w, strands, start)


def test_unembed_roundtrip():
    rng = random.Random(20)
    for _ in range(30):
        m, c = rng.randint(1, 3), rng.randint(1, 3)
        u = random_algebraic(rng, m, c, rng.randint(0, 8))
        v = moves.unembed(embed(u), m, c)
        assert mixed_equal(u, v)


def test_unembed_rejects_fixed_strand_motion():
    with pytest.raises(ValueError):
        moves.unembed(BraidWord(3, ((1, 1),)), 2, 1)


# ---------------------------------------------------------------------------
# non-pure band moves

def test_nonpure_band_move_degenerates_to_combed():
    spec = manifolds.preset("hopf", framings=(1, -1))
    rng = random.Random(22)
    for _ in range(20):
        b1 = random_algebraic(rng, 2, 2, rng.randint(0, 5))
        b2 = random_algebraic(rng, 2, 2, rng.randint(0, 5))
        k, sign = rng.randint(1, 2), rng.choice((1, -1))
        assert (moves.nonpure_band_move(b1, b2, k, sign, spec).letters
                == moves.combed_band_move(b1, b2, k, sign, spec).letters)


@pytest.mark.parametrize("n", [1, 2])
@pytest.mark.parametrize("sign", [1, -1])
def test_nonpure_band_move_trefoil(n, sign):
    framing = 1
    spec = manifolds.preset("trefoil", framings=(framing,))
    empty = parse_word("", 2, n)
    out = moves.nonpure_band_move(empty, empty, 1, sign, spec)
    assert mixed_equal(out, manifolds.expected_trefoil_band(n, sign, framing))


def test_trefoil_r_matches_closed_form():
    spec = manifolds.preset("trefoil")
    for n in (1, 2):
        r = moves.compute_r_nonpure(spec, 1, n)
        assert mixed_equal(r, manifolds.expected_trefoil_r(n))


# ---------------------------------------------------------------------------
# cache

def test_loop_word_cache_stable():
    cache = moves.LoopWordCache()
    spec = manifolds.preset("hopf")
    first = cache.rho(spec, 1)
    assert cache.rho(spec, 1) is first
    r1 = cache.r(spec, 1, 1)
    assert cache.r(spec, 1, 1) is r1
    assert r1.letters == moves.compute_r(spec, 1, 1).letters
