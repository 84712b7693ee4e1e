"""Artin combing of parted mixed braid words through the fixed subbraid.

Combing rewrites a parted mixed braid word as (algebraic part) * (fixed part)
by pushing every fixed crossing Sigma_k to the end of the word.  Each pass
moves the rightmost out-of-place Sigma letter past the moving letters after it,
using the local rewrite rules

    Sigma_k   a_k^e      ->  a_{k+1}^e                    Sigma_k
    Sigma_k   a_{k+1}^e  ->  a_{k+1}^-1 a_k^e a_{k+1}     Sigma_k
    Sigma_k^-1 a_k^e     ->  a_k a_{k+1}^e a_k^-1         Sigma_k^-1
    Sigma_k^-1 a_{k+1}^e ->  a_k^e                        Sigma_k^-1

with Sigma_k^{+-1} commuting with every other loop and with all sigma_j.  Each
step strictly reduces the number of (Sigma letter, later moving letter)
inversions, so the process terminates.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import braid
from .mixed import MixedBraidWord, MixedLetter, free_reduce_letters


@dataclass(frozen=True)
class CombedPair:
    """Result of combing: word = algebraic * coset in C_{m,n}."""

    algebraic: MixedBraidWord
    coset: tuple[MixedLetter, ...]


def _push_past(sig: MixedLetter, let: MixedLetter) -> list[MixedLetter]:
    """Rewrite (Sigma_k^d, moving letter) to moving letters with Sigma on the right."""
    _, k, d = sig
    kind, i, e = let
    if kind == "s":
        return [let]
    assert kind == "a"
    if d > 0:
        if i == k:
            return [("a", k + 1, e)]
        if i == k + 1:
            return [("a", k + 1, -1), ("a", k, e), ("a", k + 1, 1)]
        return [let]
    if i == k:
        return [("a", k, 1), ("a", k + 1, e), ("a", k, -1)]
    if i == k + 1:
        return [("a", k, e)]
    return [let]


def comb(w: MixedBraidWord) -> CombedPair:
    letters = list(w.letters)
    n_loops = sum(1 for kind, _, _ in letters if kind == "a")
    n_sigma = sum(1 for kind, _, _ in letters if kind == "s")
    n_fixed = sum(1 for kind, _, _ in letters if kind == "S")
    # growth bound from the rewrite rules: each Sigma passage at most triples
    # the loop count and never touches sigma letters
    cap = 3 ** min(n_fixed, 40) * n_loops + n_sigma

    # Position of the boundary: everything from `tail` on is already sorted
    # fixed letters.  Work on the rightmost unsorted Sigma first.
    tail = len(letters)
    while True:
        while tail > 0 and letters[tail - 1][0] == "S":
            tail -= 1
        p = None
        for q in range(tail - 1, -1, -1):
            if letters[q][0] == "S":
                p = q
                break
        if p is None:
            break
        sig = letters[p]
        moving = letters[p + 1:tail]
        out: list[MixedLetter] = []
        for let in moving:
            out.extend(_push_past(sig, let))
        out = list(free_reduce_letters(out))
        letters[p:tail] = out + [sig]
        tail = p + len(out)
        if len(letters) > braid.MAX_WORD_LETTERS:
            raise braid.WordLengthError(
                f"combing exceeded the {braid.MAX_WORD_LETTERS}-letter cap")

    algebraic = list(free_reduce_letters(letters[:tail]))
    coset = tuple(letters[tail:])
    assert len(algebraic) <= cap, "combing growth bound violated"
    assert coset == tuple(l for l in w.letters if l[0] == "S")
    return CombedPair(MixedBraidWord(w.m, w.n, tuple(algebraic)), coset)


def compute_rho(spec, i: int) -> MixedBraidWord:
    """Comb the loop a_i through the fixed braid of `spec`.

    Returns the algebraic word rho_i (loops only, n = 1) with
    B * a_i = rho_i * B in the coset.
    """
    if not 1 <= i <= spec.m:
        raise ValueError(f"loop index {i} out of range for m = {spec.m}")
    letters = tuple(("S", k, s) for k, s in spec.fixed_word) + (("a", i, 1),)
    pair = comb(MixedBraidWord(spec.m, 1, letters))
    assert all(kind == "a" for kind, _, _ in pair.algebraic.letters)
    return pair.algebraic
