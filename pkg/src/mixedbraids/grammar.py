"""Text grammar for mixed braid words.

word   := letter*          (whitespace separated)
letter := base ('^' nonzero-int)?
base   := 'S' nat | 's' nat | 'a' nat

`S k` is the fixed crossing Sigma_k, `s j` the moving crossing sigma_j and
`a i` the loop a_i; a power expands to repeated letters carrying its sign.
"""

from __future__ import annotations

import re

from .mixed import MixedBraidWord, MixedLetter

_TOKEN = re.compile(r"([Ssa])([0-9]+)(?:\^(-?[0-9]+))?\Z")


class WordSyntaxError(ValueError):
    """Bad word text; `offset` is the byte offset of the offending token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (offset {offset})")
        self.offset = offset


def parse_letters(text: str) -> tuple[MixedLetter, ...]:
    """Parse word text without range validation."""
    out: list[MixedLetter] = []
    for tok in re.finditer(r"\S+", text):
        m = _TOKEN.match(tok.group())
        if m is None:
            raise WordSyntaxError(f"bad token {tok.group()!r}", tok.start())
        kind, idx, power = m.group(1), int(m.group(2)), m.group(3)
        e = 1 if power is None else int(power)
        if idx < 1:
            raise WordSyntaxError(f"index must be >= 1 in {tok.group()!r}", tok.start())
        if e == 0:
            raise WordSyntaxError(f"zero power in {tok.group()!r}", tok.start())
        sign = 1 if e > 0 else -1
        out.extend([(kind, idx, sign)] * abs(e))
    return tuple(out)


def parse_word(text: str, m: int, n: int) -> MixedBraidWord:
    letters = parse_letters(text)
    try:
        return MixedBraidWord(m, n, letters)
    except ValueError as exc:
        # locate the first out-of-range letter for the error message
        for pos, let in enumerate(letters):
            try:
                MixedBraidWord(m, n, (let,))
            except ValueError:
                raise WordSyntaxError(
                    f"letter {let[0]}{let[1]} at position {pos} out of range "
                    f"for (m, n) = ({m}, {n})", pos) from exc
        raise


def parse_fixed_word(text: str, m: int) -> tuple[tuple[int, int], ...]:
    """Parse a fixed (surgery braid) word: `S` letters only, on m strands."""
    out = []
    for kind, idx, sign in parse_letters(text):
        if kind != "S":
            raise WordSyntaxError(f"fixed word may only contain S letters, got {kind}{idx}", 0)
        if not 1 <= idx <= m - 1:
            raise WordSyntaxError(f"S{idx} out of range for m = {m}", 0)
        out.append((idx, sign))
    return tuple(out)


def format_word(w, compress: bool = True) -> str:
    """Render letters back to word text; inverse of parse for valid words."""
    letters = w.letters if isinstance(w, MixedBraidWord) else tuple(w)
    if not compress:
        return " ".join(
            f"{k}{i}" if s > 0 else f"{k}{i}^-1" for k, i, s in letters)
    parts: list[str] = []
    pos = 0
    while pos < len(letters):
        k, i, s = letters[pos]
        run = 1
        while pos + run < len(letters) and letters[pos + run] == (k, i, s):
            run += 1
        e = run * s
        parts.append(f"{k}{i}" if e == 1 else f"{k}{i}^{e}")
        pos += run
    return " ".join(parts)


def format_fixed_word(fixed: tuple[tuple[int, int], ...], compress: bool = True) -> str:
    return format_word(tuple(("S", k, s) for k, s in fixed), compress)
