"""Classical braid words on N strands and a Garside-style normal form.

A braid word is a sequence of letters (i, s) with 1 <= i < N and s = +1 or -1,
standing for the Artin generator sigma_i or its inverse.  Words compose left to
right (top to bottom of the braid).  The normal form is the greedy left-weighted
factorization Delta^p f_1 ... f_l into permutation braids, which decides the
word problem; `oracle_equal` is an independent brute-force cross-check.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

Letter = tuple[int, int]
Permutation = tuple[int, ...]

#: Hard cap on word lengths.  Combing can inflate words exponentially; fail
#: loudly instead of hanging.
MAX_WORD_LETTERS = 10 ** 5


class WordLengthError(Exception):
    """A word operation exceeded MAX_WORD_LETTERS."""


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid group B_N, N = strands."""

    strands: int
    letters: tuple[Letter, ...]

    def __post_init__(self) -> None:
        if self.strands < 1:
            raise ValueError(f"need at least one strand, got {self.strands}")
        if len(self.letters) > MAX_WORD_LETTERS:
            raise WordLengthError(
                f"word has {len(self.letters)} letters (cap {MAX_WORD_LETTERS})")
        for i, s in self.letters:
            if not 1 <= i <= self.strands - 1:
                raise ValueError(f"letter index {i} out of range for {self.strands} strands")
            if s not in (1, -1):
                raise ValueError(f"letter sign must be +-1, got {s}")

    def __len__(self) -> int:
        return len(self.letters)


def word(strands: int, letters: Iterable[Letter]) -> BraidWord:
    return BraidWord(strands, tuple(letters))


def concat(*words: BraidWord) -> BraidWord:
    strands = words[0].strands
    letters: list[Letter] = []
    for w in words:
        if w.strands != strands:
            raise ValueError("strand-count mismatch in concat")
        letters.extend(w.letters)
    return BraidWord(strands, tuple(letters))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, tuple((i, -s) for i, s in reversed(w.letters)))


def invert_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    return tuple((i, -s) for i, s in reversed(tuple(letters)))


def free_reduce_letters(letters: Iterable[Letter]) -> tuple[Letter, ...]:
    out: list[Letter] = []
    for let in letters:
        if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def free_reduce(w: BraidWord) -> BraidWord:
    return BraidWord(w.strands, free_reduce_letters(w.letters))


# ---------------------------------------------------------------------------
# permutations (1-based image tuples; compose(p, q) = "p then q")

def identity_perm(n: int) -> Permutation:
    return tuple(range(1, n + 1))


def compose(p: Permutation, q: Permutation) -> Permutation:
    return tuple(q[p[x] - 1] for x in range(len(p)))


def invert_perm(p: Permutation) -> Permutation:
    out = [0] * len(p)
    for x, y in enumerate(p):
        out[y - 1] = x + 1
    return tuple(out)


@lru_cache(maxsize=None)
def transposition(n: int, i: int) -> Permutation:
    img = list(range(1, n + 1))
    img[i - 1], img[i] = img[i], img[i - 1]
    return tuple(img)


@lru_cache(maxsize=None)
def half_twist_perm(n: int) -> Permutation:
    return tuple(range(n, 0, -1))


def permutation_of(w: BraidWord) -> Permutation:
    # start position -> end position; crossings compose top to bottom
    q = identity_perm(w.strands)
    for i, _ in w.letters:
        q = compose(q, transposition(w.strands, i))
    return q


def starting_set(p: Permutation) -> set[int]:
    """Indices i with sigma_i a left divisor of the permutation braid p."""
    return {i for i in range(1, len(p)) if p[i - 1] > p[i]}


def finishing_set(p: Permutation) -> set[int]:
    return starting_set(invert_perm(p))


def perm_word(p: Permutation) -> tuple[Letter, ...]:
    """Canonical positive word lifting a permutation to its permutation braid."""
    out: list[Letter] = []
    cur = p
    while True:
        desc = starting_set(cur)
        if not desc:
            return tuple(out)
        i = min(desc)
        out.append((i, 1))
        cur = compose(transposition(len(p), i), cur)


# ---------------------------------------------------------------------------
# Garside normal form

@dataclass(frozen=True)
class NormalForm:
    """Left-weighted factorization Delta^infimum f_1 ... f_l.

    Factors are permutation braids stored as permutations; no factor is the
    identity or the half twist, and adjacent factors are left-weighted.
    """

    strands: int
    infimum: int
    factors: tuple[Permutation, ...]

    def is_identity(self) -> bool:
        return self.infimum == 0 and not self.factors


def _tau(p: Permutation, delta: Permutation) -> Permutation:
    return compose(delta, compose(p, delta))


def _left_weight(factors: list[Permutation], n: int) -> list[Permutation]:
    ident = identity_perm(n)
    changed = True
    while changed:
        changed = False
        k = 0
        while k < len(factors) - 1:
            a, b = factors[k], factors[k + 1]
            moved = starting_set(b) - finishing_set(a)
            while moved:
                i = min(moved)
                a = compose(a, transposition(n, i))
                b = compose(transposition(n, i), b)
                moved = starting_set(b) - finishing_set(a)
            if (a, b) != (factors[k], factors[k + 1]):
                changed = True
                factors[k], factors[k + 1] = a, b
            if b == ident:
                del factors[k + 1]
                changed = True
            else:
                k += 1
    return [f for f in factors if f != ident]


def normal_form(w: BraidWord) -> NormalForm:
    n = w.strands
    delta = half_twist_perm(n)
    ident = identity_perm(n)

    # One permutation braid per letter; negative letters contribute a Delta^-1
    # marker plus the complementary positive factor Delta * sigma_i^-1.
    items: list[tuple[bool, Permutation]] = []
    for i, s in free_reduce_letters(w.letters):
        t = transposition(n, i)
        if s > 0:
            items.append((False, t))
        else:
            items.append((True, compose(delta, t)))

    n_inv = sum(1 for neg, _ in items if neg)
    factors: list[Permutation] = []
    seen_inv = 0
    for neg, p in items:
        if neg:
            seen_inv += 1
        # Delta^-1 markers to the right of p commute leftwards past it,
        # twisting it once per marker passed.
        if (n_inv - seen_inv) % 2:
            p = _tau(p, delta)
        factors.append(p)

    factors = _left_weight(factors, n)
    infimum = -n_inv
    while factors and factors[0] == delta:
        factors.pop(0)
        infimum += 1
    assert all(f != ident and f != delta for f in factors)
    return NormalForm(n, infimum, tuple(factors))


def normal_form_word(nf: NormalForm) -> BraidWord:
    """Round-trip a normal form back to a braid word."""
    delta_letters = perm_word(half_twist_perm(nf.strands))
    letters: list[Letter] = []
    if nf.infimum >= 0:
        letters.extend(delta_letters * nf.infimum)
    else:
        letters.extend(invert_letters(delta_letters * (-nf.infimum)))
    for f in nf.factors:
        letters.extend(perm_word(f))
    return BraidWord(nf.strands, tuple(letters))


def equal(u: BraidWord, v: BraidWord) -> bool:
    if u.strands != v.strands:
        raise ValueError(f"strand-count mismatch: {u.strands} vs {v.strands}")
    return normal_form(u) == normal_form(v)


def is_trivial(w: BraidWord) -> bool:
    return normal_form(w).is_identity()


# ---------------------------------------------------------------------------
# brute-force oracle

def _oracle_neighbors(w: tuple[Letter, ...], n: int, bound: int) -> Iterator[tuple[Letter, ...]]:
    L = len(w)
    # cancellations
    for k in range(L - 1):
        if w[k][0] == w[k + 1][0] and w[k][1] == -w[k + 1][1]:
            yield w[:k] + w[k + 2:]
    # far commutations
    for k in range(L - 1):
        if abs(w[k][0] - w[k + 1][0]) >= 2:
            yield w[:k] + (w[k + 1], w[k]) + w[k + 2:]
    # braid relation on same-sign triples
    for k in range(L - 2):
        (i, s1), (j, s2), (i2, s3) = w[k], w[k + 1], w[k + 2]
        if s1 == s2 == s3 and i == i2 and abs(i - j) == 1:
            yield w[:k] + ((j, s1), (i, s1), (j, s1)) + w[k + 3:]
    # free insertions
    if L + 2 <= bound:
        for k in range(L + 1):
            for i in range(1, n):
                yield w[:k] + ((i, 1), (i, -1)) + w[k:]
                yield w[:k] + ((i, -1), (i, 1)) + w[k:]


def oracle_equal(u: BraidWord, v: BraidWord, bound: int):
    """Breadth-first search from u to v over elementary rewrites.

    Returns True if v is reached without any word exceeding `bound` letters,
    or the string "unknown" on exhaustion.  Every rewrite preserves the group
    element, so a True answer is always sound.
    """
    if u.strands != v.strands:
        raise ValueError("strand-count mismatch")
    targets = {v.letters, free_reduce_letters(v.letters)}
    start = u.letters
    if start in targets or free_reduce_letters(start) in targets:
        return True
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nxt in _oracle_neighbors(cur, u.strands, bound):
            if nxt in seen or len(nxt) > bound:
                continue
            if nxt in targets:
                return True
            seen.add(nxt)
            queue.append(nxt)
    return "unknown"
