"""Mixed braid words over the alphabet {Sigma_k, a_i, sigma_j}.

A mixed braid word on (m, n) strands mixes three letter kinds:

* ``("S", k, s)`` -- Sigma_k^s, a crossing between fixed strands k, k+1;
* ``("a", i, s)`` -- a_i^s, the loop of the first moving strand around fixed
  strand i;
* ``("s", j, s)`` -- sigma_j^s, a crossing between moving strands j, j+1.

A word with no "S" letters is *algebraic* (an element of the mixed braid group
B_{m,n}); a general word represents an element of the coset C_{m,n} inside
B_{m+n}.  Equality of mixed braids is defined through the embedding into the
classical braid group on m+n strands.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import braid
from .braid import BraidWord, Permutation

MixedLetter = tuple[str, int, int]

KINDS = ("S", "a", "s")


@dataclass(frozen=True)
class MixedBraidWord:
    m: int
    n: int
    letters: tuple[MixedLetter, ...]

    def __post_init__(self) -> None:
        if self.m < 1 or self.n < 1:
            raise ValueError(f"need m >= 1 and n >= 1, got ({self.m}, {self.n})")
        if len(self.letters) > braid.MAX_WORD_LETTERS:
            raise braid.WordLengthError(
                f"word has {len(self.letters)} letters (cap {braid.MAX_WORD_LETTERS})")
        for kind, idx, sign in self.letters:
            if sign not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {sign}")
            if kind == "S":
                hi = self.m - 1
            elif kind == "a":
                hi = self.m
            elif kind == "s":
                hi = self.n - 1
            else:
                raise ValueError(f"unknown letter kind {kind!r}")
            if not 1 <= idx <= hi:
                raise ValueError(
                    f"{kind}{idx} out of range for (m, n) = ({self.m}, {self.n})")

    def __len__(self) -> int:
        return len(self.letters)

    def is_algebraic(self) -> bool:
        return all(kind != "S" for kind, _, _ in self.letters)


def mixed(m: int, n: int, letters: Iterable[MixedLetter]) -> MixedBraidWord:
    return MixedBraidWord(m, n, tuple(letters))


def concat(*words: MixedBraidWord) -> MixedBraidWord:
    m, n = words[0].m, words[0].n
    letters: list[MixedLetter] = []
    for w in words:
        if (w.m, w.n) != (m, n):
            raise ValueError("(m, n) mismatch in concat")
        letters.extend(w.letters)
    return MixedBraidWord(m, n, tuple(letters))


def invert(w: MixedBraidWord) -> MixedBraidWord:
    return MixedBraidWord(w.m, w.n, invert_letters(w.letters))


def invert_letters(letters: Iterable[MixedLetter]) -> tuple[MixedLetter, ...]:
    return tuple((k, i, -s) for k, i, s in reversed(tuple(letters)))


def free_reduce_letters(letters: Iterable[MixedLetter]) -> tuple[MixedLetter, ...]:
    out: list[MixedLetter] = []
    for let in letters:
        if out and out[-1][:2] == let[:2] and out[-1][2] == -let[2]:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def free_reduce(w: MixedBraidWord) -> MixedBraidWord:
    return MixedBraidWord(w.m, w.n, free_reduce_letters(w.letters))


def reindex(w: MixedBraidWord, n: int) -> MixedBraidWord:
    """Include w into B_{m,n} for a larger n (letters unchanged)."""
    if n < w.n:
        raise ValueError("cannot shrink the moving-strand count")
    return MixedBraidWord(w.m, n, w.letters)


# ---------------------------------------------------------------------------
# embedding into B_{m+n}

def loop_letters(m: int, i: int, sign: int) -> tuple[braid.Letter, ...]:
    """Classical word for a_i^sign: the loop passes over fixed strands i+1..m."""
    conj = tuple((t, 1) for t in range(m, i, -1))
    core = ((i, sign), (i, sign))
    return conj + core + braid.invert_letters(conj)


def embed(w: MixedBraidWord) -> BraidWord:
    m, n = w.m, w.n
    out: list[braid.Letter] = []
    for kind, idx, sign in w.letters:
        if kind == "S":
            out.append((idx, sign))
        elif kind == "s":
            out.append((m + idx, sign))
        else:
            out.extend(loop_letters(m, idx, sign))
    return BraidWord(m + n, tuple(out))


def mixed_equal(u: MixedBraidWord, v: MixedBraidWord) -> bool:
    if (u.m, u.n) != (v.m, v.n):
        raise ValueError("(m, n) mismatch")
    return braid.equal(embed(u), embed(v))


# ---------------------------------------------------------------------------
# winding vectors

WindingVector = tuple[int, ...]


def winding_vector(w: MixedBraidWord) -> WindingVector:
    out = [0] * w.m
    for kind, idx, sign in w.letters:
        if kind == "a":
            out[idx - 1] += sign
    return tuple(out)


def strand_permutation(spec) -> Permutation:
    """Underlying permutation of a ManifoldSpec's fixed word, on m strands."""
    q = braid.identity_perm(spec.m)
    for k, _ in spec.fixed_word:
        q = braid.compose(q, braid.transposition(spec.m, k))
    return q


# ---------------------------------------------------------------------------
# presentation checker

def _alg(m: int, n: int, *letters: MixedLetter) -> MixedBraidWord:
    return MixedBraidWord(m, n, tuple(letters))


def presentation_instances(m: int, n: int):
    """Yield (family, params, lhs, rhs) for the defining relations of B_{m,n}."""
    s = lambda j, e=1: ("s", j, e)
    a = lambda i, e=1: ("a", i, e)
    # sigma commutation, |k - j| > 1
    for k in range(1, n):
        for j in range(k + 2, n):
            yield ("sigma-commute", (k, j),
                   _alg(m, n, s(k), s(j)), _alg(m, n, s(j), s(k)))
    # braid relation
    for k in range(1, n - 1):
        yield ("sigma-braid", (k,),
               _alg(m, n, s(k), s(k + 1), s(k)),
               _alg(m, n, s(k + 1), s(k), s(k + 1)))
    # a_i commutes with sigma_k, k >= 2
    for i in range(1, m + 1):
        for k in range(2, n):
            yield ("loop-sigma-commute", (i, k),
                   _alg(m, n, a(i), s(k)), _alg(m, n, s(k), a(i)))
    # a_i sigma_1 a_i sigma_1 = sigma_1 a_i sigma_1 a_i
    if n >= 2:
        for i in range(1, m + 1):
            yield ("loop-sigma1-braid", (i,),
                   _alg(m, n, a(i), s(1), a(i), s(1)),
                   _alg(m, n, s(1), a(i), s(1), a(i)))
        # a_i commutes with sigma_1 a_r sigma_1^-1 for r < i
        for i in range(1, m + 1):
            for r in range(1, i):
                conj = (s(1), a(r), s(1, -1))
                yield ("loop-pushed-loop-commute", (r, i),
                       _alg(m, n, a(i), *conj), _alg(m, n, *conj, a(i)))


def check_presentation(m: int, n: int) -> list[tuple[str, tuple, bool]]:
    report = []
    for family, params, lhs, rhs in presentation_instances(m, n):
        report.append((family, params, mixed_equal(lhs, rhs)))
    return report
