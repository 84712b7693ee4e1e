"""The move calculus on algebraic mixed braid words.

Implements M-moves, Markov conjugation, twisted loop conjugation, algebraic
L-moves, and band moves over a surgery component: the algebraic form, the
combed form (with the correction word r_k computed by cabling the surgery
strand and combing the parallel copy), and the non-pure generalization where a
whole multi-strand component is cabled at once.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from . import braid
from .braid import BraidWord, Letter
from .combing import comb, compute_rho
from .mixed import (MixedBraidWord, MixedLetter, concat, free_reduce,
                    free_reduce_letters, invert_letters, reindex)

Sigma = lambda j, e=1: ("s", j, e)
Loop = lambda i, e=1: ("a", i, e)


# ---------------------------------------------------------------------------
# move records

@dataclass(frozen=True)
class MoveRecord:
    """One applied move; `split` marks the beta_1/beta_2 cut where relevant.

    type is one of "m", "conj", "twist", "l", "band", "combed-band",
    "nonpure-band".  M-moves are one-way; `inverse=True` marks the
    destabilizing direction.
    """

    type: str
    sign: int = 1
    index: int = 0
    kind: str = ""
    split: int = -1
    inverse: bool = False

    def to_json(self) -> dict:
        params: dict = {"sign": self.sign}
        if self.type in ("conj", "twist", "l", "band", "combed-band", "nonpure-band"):
            params["index"] = self.index
        if self.type == "l":
            params["kind"] = self.kind
        if self.split >= 0:
            params["split"] = self.split
        if self.inverse:
            params["inverse"] = True
        return {"type": self.type, "params": params}

    @staticmethod
    def from_json(obj: dict) -> "MoveRecord":
        p = obj.get("params", {})
        return MoveRecord(obj["type"], p.get("sign", 1), p.get("index", 0),
                          p.get("kind", ""), p.get("split", -1),
                          p.get("inverse", False))


def inverse_record(rec: MoveRecord) -> MoveRecord:
    if rec.type not in ("conj", "twist"):
        raise ValueError(f"move type {rec.type!r} has no inverse record")
    return MoveRecord(rec.type, -rec.sign, rec.index, rec.kind)


# ---------------------------------------------------------------------------
# elementary moves

def _require_algebraic(*words: MixedBraidWord) -> None:
    for w in words:
        if not w.is_algebraic():
            raise ValueError("move requires an algebraic word (no S letters)")


def m_move(b1: MixedBraidWord, b2: MixedBraidWord, sign: int) -> MixedBraidWord:
    """alpha_1 alpha_2 ~ alpha_1 sigma_n^{+-1} alpha_2, landing in B_{m,n+1}."""
    _require_algebraic(b1, b2)
    if (b1.m, b1.n) != (b2.m, b2.n):
        raise ValueError("(m, n) mismatch")
    n = b1.n
    letters = b1.letters + (Sigma(n, sign),) + b2.letters
    return free_reduce(MixedBraidWord(b1.m, n + 1, letters))


def markov_conjugate(b: MixedBraidWord, j: int, sign: int) -> MixedBraidWord:
    _require_algebraic(b)
    if not 1 <= j <= b.n - 1:
        raise ValueError(f"sigma index {j} out of range for n = {b.n}")
    letters = (Sigma(j, sign),) + b.letters + (Sigma(j, -sign),)
    return free_reduce(MixedBraidWord(b.m, b.n, letters))


def twisted_conjugate(b: MixedBraidWord, i: int, sign: int, spec,
                      cache: "LoopWordCache | None" = None) -> MixedBraidWord:
    """beta ~ a_i^{-sign} beta rho_i^{sign} with rho_i combed through spec."""
    _require_algebraic(b)
    rho = (cache or _default_cache).rho(spec, i)
    rho_letters = reindex(rho, b.n).letters
    if sign < 0:
        rho_letters = invert_letters(rho_letters)
    letters = (Loop(i, -sign),) + b.letters + rho_letters
    return free_reduce(MixedBraidWord(b.m, b.n, letters))


def _l_move_word(b1: MixedBraidWord, b2: MixedBraidWord, i: int, sign: int,
                 flip: int) -> MixedBraidWord:
    # flip = -1 gives the over-crossing formula; flip = +1 its mirror
    n = b1.n
    seg1 = [Sigma(t, flip) for t in range(i, n + 1)]
    seg2 = [Sigma(t, flip) for t in range(max(i - 1, 1), n)]
    seg3 = [Sigma(t, -flip) for t in range(n - 1, i - 1, -1)]
    seg4 = [Sigma(t, -flip) for t in range(n, i - 1, -1)]
    letters = (tuple(seg1) + b1.letters + tuple(seg2) + (Sigma(n, sign),)
               + tuple(seg3) + b2.letters + tuple(seg4))
    return free_reduce(MixedBraidWord(b1.m, n + 1, letters))


def l_move(b1: MixedBraidWord, b2: MixedBraidWord, kind: str, i: int,
           sign: int) -> MixedBraidWord:
    """Algebraic L-move attaching at moving position i; lands in B_{m,n+1}.

    kind="over" is the explicit formula; kind="under" is its mirror image
    (every conjugating crossing reversed), equivalently the under-crossing
    M-move + Markov conjugation composition.
    """
    _require_algebraic(b1, b2)
    if (b1.m, b1.n) != (b2.m, b2.n):
        raise ValueError("(m, n) mismatch")
    if not 1 <= i <= b1.n:
        raise ValueError(f"position {i} out of range for n = {b1.n}")
    if kind == "over":
        return _l_move_word(b1, b2, i, sign, -1)
    if kind == "under":
        return _l_move_word(b1, b2, i, sign, +1)
    raise ValueError(f"kind must be 'over' or 'under', got {kind!r}")


def l_move_factorization(b1: MixedBraidWord, b2: MixedBraidWord, kind: str,
                         i: int, sign: int) -> MixedBraidWord:
    """The same L-move built as one M-move followed by Markov conjugations."""
    _require_algebraic(b1, b2)
    n = b1.n
    flip = -1 if kind == "over" else +1
    f = tuple(Sigma(t, -flip) for t in range(n - 1, i - 1, -1))
    x = MixedBraidWord(b1.m, n, b1.letters
                       + ((Sigma(i - 1, flip),) if i >= 2 else ())
                       + invert_letters(f))
    y = MixedBraidWord(b1.m, n, f + b2.letters)
    out = m_move(x, y, sign)
    for j in range(n, i - 1, -1):
        out = markov_conjugate(out, j, flip)
    return out


# ---------------------------------------------------------------------------
# band-move building blocks

def lambda_word(n: int) -> tuple[MixedLetter, ...]:
    """lambda_n = sigma_n ... sigma_1 (empty for n = 0)."""
    return tuple(Sigma(t) for t in range(n, 0, -1))


def framing_loop(k: int, n: int, m: int) -> MixedBraidWord:
    """t_{k,n} = sigma_n ... sigma_1 a_k sigma_1^-1 ... sigma_n^-1 in B_{m,n+1}."""
    lam = lambda_word(n)
    return MixedBraidWord(m, n + 1, lam + (Loop(k),) + invert_letters(lam))


def _cable_conjugators(n: int, c: int) -> tuple[tuple[MixedLetter, ...], tuple[MixedLetter, ...]]:
    """Conjugators for the band-move substitution over a c-strand cable.

    Returns (A, D): the replacement strand circles the cable at moving
    positions n+1..n+c; A closes the circle passing back over the cable, D
    passing back under.  For c = 1 both are lambda_{n-1}^-1 sigma_n^2
    lambda_{n-1}.
    """
    lam = lambda_word(n - 1)
    up = [Sigma(t) for t in range(n, n + c - 1)]            # sigma_n .. sigma_{n+c-2}
    top = [Sigma(n + c - 1), Sigma(n + c - 1)]
    down_over = [Sigma(t) for t in range(n + c - 2, n - 1, -1)]
    down_under = [Sigma(t, -1) for t in range(n + c - 2, n - 1, -1)]
    a = invert_letters(lam) + tuple(up + top + down_over) + lam
    d = invert_letters(lam) + tuple(up + top + down_under) + lam
    return a, d


def band_substitute(b: MixedBraidWord, k: int, c: int = 1) -> MixedBraidWord:
    """Rewrite beta for a band move over strand k cabled by c parallels.

    Loop letters change as: a_k^e -> (D a_k)^e; a_i^e -> (A a_i D^-1)^e for
    i < k; unchanged for i > k.  Moving crossings are unchanged.  The result
    lives in B_{m,n+c}.
    """
    _require_algebraic(b)
    n = b.n
    a_conj, d_conj = _cable_conjugators(n, c)
    out: list[MixedLetter] = []
    for kind, i, e in b.letters:
        if kind != "a" or i > k:
            out.append((kind, i, e))
        elif i == k:
            core = d_conj + (Loop(k),)
            out.extend(core if e > 0 else invert_letters(core))
        else:
            core = a_conj + (Loop(i),) + invert_letters(d_conj)
            out.extend(core if e > 0 else invert_letters(core))
    return free_reduce(MixedBraidWord(b.m, n + c, tuple(out)))


def _framings_by_strand(spec) -> dict[int, int]:
    out = {}
    for comp, p in zip(spec.components, spec.framings or ()):
        for s in comp:
            out[s] = p
    return out


def algebraic_band_move(b1: MixedBraidWord, b2: MixedBraidWord, k: int,
                        sign: int, spec) -> MixedBraidWord:
    """beta_1 beta_2 ~ beta_1' t_{k,n}^{p_k} sigma_n^{+-1} beta_2' (pure case)."""
    _require_algebraic(b1, b2)
    comp = spec.components[k - 1]
    if len(comp) != 1:
        raise ValueError("multi-strand surgery component: use nonpure_band_move")
    if spec.framings is None:
        raise ValueError("band moves need a surgery spec with framings")
    strand = comp[0]
    p = spec.framings[k - 1]
    n = b1.n
    t = framing_loop(strand, n, b1.m)
    t_letters = t.letters * p if p >= 0 else invert_letters(t.letters) * (-p)
    letters = (band_substitute(b1, strand).letters + t_letters
               + (Sigma(n, sign),) + band_substitute(b2, strand).letters)
    return free_reduce(MixedBraidWord(b1.m, n + 1, letters))


def combed_band_move(b1: MixedBraidWord, b2: MixedBraidWord, k: int,
                     sign: int, spec,
                     cache: "LoopWordCache | None" = None) -> MixedBraidWord:
    base = algebraic_band_move(b1, b2, k, sign, spec)
    r = (cache or _default_cache).r(spec, k, b1.n)
    return free_reduce(concat(base, r))


# ---------------------------------------------------------------------------
# cabling, parting and the correction word r_k

def cable_strand(letters: tuple[Letter, ...], strands: int,
                 start: int) -> tuple[Letter, ...]:
    """Double the strand starting at `start` with a parallel copy on its right.

    Crossings involving the cabled strand pass the pair as a unit (two
    same-sign crossings); all others are index-shifted.  No framing twists are
    inserted.
    """
    pos = start
    out: list[Letter] = []
    for t, s in letters:
        if t == pos:
            out += [(t + 1, s), (t, s)]
            pos += 1
        elif t == pos - 1:
            out += [(t, s), (t + 1, s)]
            pos -= 1
        elif t < pos - 1:
            out.append((t, s))
        else:
            out.append((t + 1, s))
    return tuple(out)


def part_strand(letters: tuple[Letter, ...], strands: int,
                start: int) -> tuple[tuple[MixedLetter, ...], int]:
    """Part one designated strand of a classical braid word over the rest.

    Treats the strand starting at `start` as the single moving strand of a
    mixed braid on (strands-1, 1), pulled over everything to the last
    position at top and bottom.  Returns the parted mixed word and the
    strand's end position.  The identity
    O_top * letters * O_bot^-1 = embed(parted word) holds in B_strands, where
    O_q = sigma_{strands-1} ... sigma_q is the all-over transport.
    """
    q = start
    out: list[MixedLetter] = []
    for t, s in letters:
        if t == q:
            if s > 0:
                out.append(Loop(q))
            q += 1
        elif t == q - 1:
            if s < 0:
                out.append(Loop(q - 1, -1))
            q -= 1
        else:
            out.append(("S", t if t + 1 < q else t - 1, s))
    return tuple(out), q


def compute_r(spec, k: int, n: int) -> MixedBraidWord:
    """Correction word r_k in B_{m,n+1}: the parallel to surgery strand k,
    parted over everything and combed through the fixed braid, then moved to
    the last moving position by lambda_n."""
    comp = spec.components[k - 1]
    if len(comp) != 1:
        raise ValueError("multi-strand surgery component: use compute_r_nonpure")
    if n < 1:
        raise ValueError("need n >= 1")
    strand = comp[0]
    cabled = cable_strand(spec.fixed_word, spec.m, strand)
    parted, q_end = part_strand(cabled, spec.m + 1, strand + 1)
    assert q_end == strand + 1
    pair = comb(MixedBraidWord(spec.m, 1, parted))
    assert tuple((k_, s) for _, k_, s in pair.coset) == tuple(spec.fixed_word)
    lam = lambda_word(n)
    letters = lam + reindex(pair.algebraic, n + 1).letters + invert_letters(lam)
    return free_reduce(MixedBraidWord(spec.m, n + 1, letters))


# ---------------------------------------------------------------------------
# non-pure surgery braids

def delete_strand(letters: tuple[Letter, ...], start: int) -> tuple[Letter, ...]:
    """Remove the strand starting at position `start` from a braid word."""
    p = start
    out: list[Letter] = []
    for t, s in letters:
        if t == p:
            p += 1
        elif t == p - 1:
            p -= 1
        else:
            out.append((t - 1, s) if t > p else (t, s))
    return tuple(out)


def _moving_perm_lift(perm: tuple[int, ...]) -> tuple[Letter, ...]:
    """Positive word realizing a permutation (canonical descent lift)."""
    return braid.perm_word(perm)


def unembed(w: BraidWord, m: int, c: int) -> MixedBraidWord:
    """Express a classical word with trivial first-m subbraid as a mixed word.

    w must represent an element of the image of B_{m,c} in B_{m+c}.  Strategy:
    strip a positive lift of the moving permutation, then peel the moving
    strands last-first; each peeled strand yields a kernel element which is
    parted and combed into a loop word around the remaining strands.  The
    result satisfies embed(result) = w in B_{m+c}.
    """
    M = m + c
    if w.strands != M:
        raise ValueError("strand-count mismatch")
    perm = braid.permutation_of(w)
    if any(perm[i] != i + 1 for i in range(m)):
        raise ValueError("word moves a fixed strand")
    pi_mov = tuple(perm[m + j] - m for j in range(c))
    s_plain = _moving_perm_lift(pi_mov)
    s_mixed = tuple(Sigma(j, e) for j, e in s_plain)
    s_embedded = tuple((m + j, e) for j, e in s_plain)
    cur = braid.free_reduce_letters(w.letters + braid.invert_letters(s_embedded))

    pieces: list[tuple[MixedLetter, ...]] = []
    for cc in range(c, 0, -1):
        stripped = delete_strand(cur, m + cc)
        k_letters = braid.free_reduce_letters(
            braid.invert_letters(stripped) + cur)
        parted, q_end = part_strand(k_letters, m + cc, m + cc)
        assert q_end == m + cc
        pair = comb(MixedBraidWord(m + cc - 1, 1, parted))
        assert not braid.free_reduce_letters(
            tuple((i, s) for _, i, s in pair.coset)), "non-kernel remainder"
        piece: list[MixedLetter] = []
        for _, i, e in pair.algebraic.letters:
            if i <= m:
                trans = tuple(Sigma(t) for t in range(cc - 1, 0, -1))
                piece.extend(trans + (Loop(i, e),) + invert_letters(trans))
            else:
                j = i - m
                trans = tuple(Sigma(t) for t in range(cc - 1, j, -1))
                piece.extend(trans + (Sigma(j, e), Sigma(j, e)) + invert_letters(trans))
        pieces.append(tuple(piece))
        cur = stripped
    assert braid.is_trivial(BraidWord(m, cur)), "non-trivial fixed remainder"

    letters: tuple[MixedLetter, ...] = ()
    for piece in reversed(pieces):
        letters += piece
    letters += s_mixed
    return free_reduce(MixedBraidWord(m, c, letters))


def _component_transport(m: int, positions: list[int]) -> tuple[Letter, ...]:
    """All-over transport of the listed positions to the last c slots, in order."""
    out: list[Letter] = []
    for j, q in enumerate(sorted(positions), 1):
        out.extend((t, 1) for t in range(m + j - 1, q - 1, -1))
    return tuple(out)


def compute_r_nonpure(spec, k: int, n: int) -> MixedBraidWord:
    """Correction word for a c-strand surgery component, in B_{m,n+c}."""
    comp = sorted(spec.components[k - 1])
    c = len(comp)
    if c == 1:
        return compute_r(spec, k, n)
    m = spec.m
    word = tuple(spec.fixed_word)
    strands = m
    tops: list[int] = []
    for j, s in enumerate(comp, 1):
        word = cable_strand(word, strands, s + j - 1)
        strands += 1
        tops.append(s + j)
    perm = braid.permutation_of(BraidWord(strands, word))
    ends = [perm[p - 1] for p in tops]
    o_top = _component_transport(m, tops)
    o_bot = _component_transport(m, ends)
    g = o_top + word + braid.invert_letters(o_bot)
    beta_r = braid.free_reduce_letters(
        g + braid.invert_letters(tuple(spec.fixed_word)))
    rt = unembed(BraidWord(strands, beta_r), m, c)
    big = _block_transport(n, c)
    letters = big + reindex(rt, n + c).letters + invert_letters(big)
    return free_reduce(MixedBraidWord(m, n + c, letters))


def _block_transport(n: int, c: int) -> tuple[MixedLetter, ...]:
    """Word moving moving-strands n+1..n+c down to positions 1..c, in order."""
    out: list[MixedLetter] = []
    for j in range(1, c + 1):
        out.extend(Sigma(t) for t in range(n + j - 1, j - 1, -1))
    return tuple(out)


def nonpure_band_move(b1: MixedBraidWord, b2: MixedBraidWord, k: int,
                      sign: int, spec,
                      cache: "LoopWordCache | None" = None) -> MixedBraidWord:
    """Band move over a (possibly multi-strand) surgery component k.

    The replacement strand runs parallel to all c strands of the component;
    the framing twists attach to the rightmost strand.  For c = 1 this
    coincides with combed_band_move.
    """
    _require_algebraic(b1, b2)
    comp = sorted(spec.components[k - 1])
    c = len(comp)
    if spec.framings is None:
        raise ValueError("band moves need a surgery spec with framings")
    p = spec.framings[k - 1]
    rightmost = comp[-1]
    n = b1.n
    t = framing_loop(rightmost, n, b1.m)
    t_letters = reindex(t, n + c).letters
    t_letters = t_letters * p if p >= 0 else invert_letters(t_letters) * (-p)
    j_word = tuple(Sigma(t_) for t_ in range(n + 1, n + c))
    r = (cache or _default_cache).r(spec, k, n)
    letters = (band_substitute(b1, rightmost, c).letters
               + invert_letters(j_word) + t_letters + (Sigma(n, sign),) + j_word
               + band_substitute(b2, rightmost, c).letters
               + r.letters)
    return free_reduce(MixedBraidWord(b1.m, n + c, letters))


# ---------------------------------------------------------------------------
# cache

class LoopWordCache:
    """Memo table for rho_i and r_k words, keyed by (spec, index[, n])."""

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._rho: dict = {}
        self._r: dict = {}

    def rho(self, spec, i: int) -> MixedBraidWord:
        key = (spec, i)
        with self._lock:
            hit = self._rho.get(key)
        if hit is not None:
            return hit
        val = compute_rho(spec, i)
        with self._lock:
            return self._rho.setdefault(key, val)

    def r(self, spec, k: int, n: int) -> MixedBraidWord:
        key = (spec, k, n)
        with self._lock:
            hit = self._r.get(key)
        if hit is not None:
            return hit
        comp = spec.components[k - 1]
        val = (compute_r(spec, k, n) if len(comp) == 1
               else compute_r_nonpure(spec, k, n))
        with self._lock:
            return self._r.setdefault(key, val)


_default_cache = LoopWordCache()


def default_cache() -> LoopWordCache:
    return _default_cache
