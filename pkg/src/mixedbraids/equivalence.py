"""Bounded search for move sequences and certificate machinery.

Equivalence of algebraic mixed braid words under the move calculus is
semidecidable: `bounded_search` explores move applications breadth-first up to
a budget, deduplicating states by a canonical key (the Garside normal form of
the embedded word).  A found path is returned as a replayable Certificate.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass

from . import braid, moves
from .grammar import format_word, parse_word
from .mixed import MixedBraidWord, embed, free_reduce, mixed_equal, winding_vector
from .moves import LoopWordCache, MoveRecord


def canonical_key(b: MixedBraidWord):
    return (b.m, b.n, braid.normal_form(embed(b)))


@dataclass(frozen=True)
class SearchBudget:
    max_depth: int
    n_max: int
    max_len: int = 400
    seed: int = 0

    def __post_init__(self) -> None:
        if self.max_depth < 0 or self.n_max < 1 or self.max_len < 1:
            raise ValueError("budget fields must be positive")


@dataclass(frozen=True)
class Certificate:
    start: MixedBraidWord
    moves: tuple[MoveRecord, ...]
    end: MixedBraidWord

    def to_json(self) -> str:
        def wj(w: MixedBraidWord) -> dict:
            return {"m": w.m, "n": w.n, "word": format_word(w)}
        return json.dumps({"start": wj(self.start),
                           "moves": [r.to_json() for r in self.moves],
                           "end": wj(self.end)})

    @staticmethod
    def from_json(text: str) -> "Certificate":
        obj = json.loads(text)
        def wp(o: dict) -> MixedBraidWord:
            return parse_word(o["word"], o["m"], o["n"])
        return Certificate(wp(obj["start"]),
                           tuple(MoveRecord.from_json(r) for r in obj["moves"]),
                           wp(obj["end"]))


@dataclass
class SearchResult:
    certificate: Certificate | None
    nodes_expanded: int = 0
    nodes_enqueued: int = 0
    pruned: bool = False

    def found(self) -> bool:
        return self.certificate is not None


# ---------------------------------------------------------------------------
# move application

def apply_move(b: MixedBraidWord, rec: MoveRecord, spec,
               cache: LoopWordCache | None = None) -> MixedBraidWord:
    cache = cache or moves.default_cache()
    split = rec.split if rec.split >= 0 else len(b.letters)
    b1 = MixedBraidWord(b.m, b.n, b.letters[:split])
    b2 = MixedBraidWord(b.m, b.n, b.letters[split:])
    if rec.type == "m":
        if not rec.inverse:
            return moves.m_move(b1, b2, rec.sign)
        return _destabilize(b, rec.sign)
    if rec.type == "conj":
        return moves.markov_conjugate(b, rec.index, rec.sign)
    if rec.type == "twist":
        return moves.twisted_conjugate(b, rec.index, rec.sign, spec, cache)
    if rec.type == "l":
        return moves.l_move(b1, b2, rec.kind, rec.index, rec.sign)
    if rec.type == "band":
        return moves.algebraic_band_move(b1, b2, rec.index, rec.sign, spec)
    if rec.type == "combed-band":
        return moves.combed_band_move(b1, b2, rec.index, rec.sign, spec, cache)
    if rec.type == "nonpure-band":
        return moves.nonpure_band_move(b1, b2, rec.index, rec.sign, spec, cache)
    raise ValueError(f"unknown move type {rec.type!r}")


def _destabilize(b: MixedBraidWord, sign: int) -> MixedBraidWord:
    w = free_reduce(b)
    top = b.n - 1
    if top < 1:
        raise ValueError("cannot destabilize below one moving strand")
    hits = [p for p, (k, i, _) in enumerate(w.letters) if (k, i) == ("s", top)]
    if len(hits) != 1 or w.letters[hits[0]][2] != sign:
        raise ValueError("word is not of the form alpha1 sigma_n^e alpha2")
    letters = w.letters[:hits[0]] + w.letters[hits[0] + 1:]
    return free_reduce(MixedBraidWord(b.m, b.n - 1, letters))


def _destab_record(b: MixedBraidWord) -> MoveRecord | None:
    w = free_reduce(b)
    top = b.n - 1
    if top < 1:
        return None
    hits = [p for p, (k, i, _) in enumerate(w.letters) if (k, i) == ("s", top)]
    if len(hits) != 1:
        return None
    return MoveRecord("m", w.letters[hits[0]][2], inverse=True)


def legal_moves(b: MixedBraidWord, spec, budget: SearchBudget,
                invertible_only: bool = False) -> list[MoveRecord]:
    """Move records applicable to b, in the documented exploration order:
    Markov conjugation (ascending j, then sign), twisted conjugation
    (ascending i, then sign), M-moves, then band moves (ascending component).
    Band moves use the beta_2-empty split."""
    out: list[MoveRecord] = []
    for j in range(1, b.n):
        for sign in (1, -1):
            out.append(MoveRecord("conj", sign, j))
    for i in range(1, b.m + 1):
        for sign in (1, -1):
            out.append(MoveRecord("twist", sign, i))
    if not invertible_only:
        if b.n + 1 <= budget.n_max:
            for sign in (1, -1):
                out.append(MoveRecord("m", sign))
        rec = _destab_record(b)
        if rec is not None:
            out.append(rec)
        if spec.kind == "surgery":
            for k in range(1, len(spec.components) + 1):
                c = len(spec.components[k - 1])
                if b.n + c <= budget.n_max:
                    for sign in (1, -1):
                        kind = "combed-band" if c == 1 else "nonpure-band"
                        out.append(MoveRecord(kind, sign, k))
    return out


# ---------------------------------------------------------------------------
# winding pruning

def _winding_invariant(b: MixedBraidWord, spec, cache: LoopWordCache):
    """Orbit sums of the winding vector under the loop-relabeling map i -> j
    with winding(rho_i) = e_j; invariant under all complement moves."""
    relabel = {}
    for i in range(1, spec.m + 1):
        wv = winding_vector(cache.rho(spec, i))
        support = [j + 1 for j, x in enumerate(wv) if x]
        if len(support) == 1 and wv[support[0] - 1] == 1:
            relabel[i] = support[0]
        else:
            return None  # no clean relabeling; pruning unavailable
    # orbits of the relabeling bijection
    seen: set[int] = set()
    sums = []
    w = winding_vector(b)
    for i in range(1, spec.m + 1):
        if i in seen:
            continue
        orbit = []
        j = i
        while j not in seen:
            seen.add(j)
            orbit.append(j)
            j = relabel[j]
        sums.append((tuple(sorted(orbit)), sum(w[x - 1] for x in orbit)))
    return tuple(sorted(sums))


# ---------------------------------------------------------------------------
# search

def bounded_search(u: MixedBraidWord, v: MixedBraidWord, spec,
                   budget: SearchBudget,
                   cache: LoopWordCache | None = None) -> SearchResult:
    if u.m != v.m:
        raise ValueError("mixed words over different fixed braids")
    cache = cache or moves.default_cache()
    target = canonical_key(v)
    start_key = canonical_key(u)
    if start_key == target:
        return SearchResult(Certificate(u, (), v))

    if spec.kind == "complement":
        iu = _winding_invariant(u, spec, cache)
        iv = _winding_invariant(v, spec, cache)
        if iu is not None and iv is not None and iu != iv:
            return SearchResult(None, pruned=True)

    frontier: list[tuple[MixedBraidWord, tuple[MoveRecord, ...]]] = [(u, ())]
    seen = {start_key}
    result = SearchResult(None)
    for _ in range(budget.max_depth):
        nxt: list[tuple[MixedBraidWord, tuple[MoveRecord, ...]]] = []
        for cur, path in frontier:
            result.nodes_expanded += 1
            for rec in legal_moves(cur, spec, budget):
                try:
                    child = apply_move(cur, rec, spec, cache)
                except (ValueError, braid.WordLengthError):
                    continue
                if len(child.letters) > budget.max_len:
                    continue
                key = canonical_key(child)
                if key == target:
                    result.certificate = Certificate(u, path + (rec,), v)
                    return result
                if key in seen:
                    continue
                seen.add(key)
                result.nodes_enqueued += 1
                nxt.append((child, path + (rec,)))
        frontier = nxt
        if not frontier:
            break
    return result


def replay(cert: Certificate, spec,
           cache: LoopWordCache | None = None) -> MixedBraidWord:
    cur = cert.start
    for rec in cert.moves:
        cur = apply_move(cur, rec, spec, cache)
    return cur


def verify_certificate(cert: Certificate, spec,
                       cache: LoopWordCache | None = None) -> bool:
    return mixed_equal(replay(cert, spec, cache), cert.end)


def random_walk(b: MixedBraidWord, spec, steps: int, seed: int,
                budget: SearchBudget | None = None,
                invertible_only: bool = False) -> tuple[MixedBraidWord, Certificate]:
    """Apply `steps` uniformly-chosen legal moves; deterministic in seed."""
    rng = random.Random(seed)
    budget = budget or SearchBudget(max_depth=steps, n_max=b.n + steps)
    cur = b
    path: list[MoveRecord] = []
    for _ in range(steps):
        options = legal_moves(cur, spec, budget, invertible_only)
        if not options:
            break
        rec = rng.choice(options)
        try:
            cur = apply_move(cur, rec, spec)
        except (ValueError, braid.WordLengthError):
            continue
        path.append(rec)
    return cur, Certificate(b, tuple(path), cur)
