"""Preset manifold specs, closed-form ground-truth tables and a verifier.

A ManifoldSpec is a fixed (surgery) braid on m strands together with its
closure-component partition and optional integer framings.  The presets cover
the standard small cases: solid torus / unknot, the m-unlink (identity braid), the
Hopf link, daisy chains DC_m, the Borromean rings, and the right-handed
trefoil (a non-pure fixed braid with one 2-strand component).

The ground-truth tables hold closed forms for the combing correctors rho_i
and r_k; `verify_preset` recomputes each one algorithmically and compares
under the embedding.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import braid, grammar, moves
from .mixed import MixedBraidWord, mixed_equal, reindex
from .moves import Sigma, lambda_word


@dataclass(frozen=True)
class ManifoldSpec:
    m: int
    fixed_word: tuple[tuple[int, int], ...]
    components: tuple[tuple[int, ...], ...]
    framings: tuple[int, ...] | None
    kind: str  # "complement" | "surgery"

    def __post_init__(self) -> None:
        if self.kind not in ("complement", "surgery"):
            raise ValueError(f"kind must be complement or surgery, got {self.kind!r}")
        if (self.framings is not None) != (self.kind == "surgery"):
            raise ValueError("framings present iff kind = surgery")
        if self.framings is not None and len(self.framings) != len(self.components):
            raise ValueError("one framing per component required")
        strands = sorted(s for comp in self.components for s in comp)
        if strands != list(range(1, self.m + 1)):
            raise ValueError("components must partition 1..m")
        for k, s in self.fixed_word:
            if not 1 <= k <= self.m - 1 or s not in (1, -1):
                raise ValueError(f"bad fixed letter ({k}, {s})")
        # each permutation orbit must stay inside one component
        perm = braid.permutation_of(
            braid.BraidWord(self.m, tuple(self.fixed_word)))
        comp_of = {s: i for i, comp in enumerate(self.components) for s in comp}
        for s in range(1, self.m + 1):
            if comp_of[perm[s - 1]] != comp_of[s]:
                raise ValueError("components inconsistent with the fixed braid's orbits")

    def is_pure(self) -> bool:
        return all(len(c) == 1 for c in self.components)


def _dc_word(m: int) -> str:
    odd = " ".join(f"S{i}^2" for i in range(1, m, 2))
    even = " ".join(f"S{i}^2" for i in range(2, m, 2))
    return (odd + " " + even).strip()


def make_spec(m: int, fixed_text: str, components=None, framings=None) -> ManifoldSpec:
    fixed = grammar.parse_fixed_word(fixed_text, m)
    if components is None:
        components = tuple((i,) for i in range(1, m + 1))
    else:
        components = tuple(tuple(sorted(c)) for c in components)
    kind = "surgery" if framings is not None else "complement"
    framings = tuple(framings) if framings is not None else None
    return ManifoldSpec(m, fixed, components, framings, kind)


def preset(name: str, framings=None) -> ManifoldSpec:
    """Build a preset spec.  Names: unknot, identity:M, hopf, dc:M,
    borromean, trefoil.  Passing framings turns the spec into a surgery one."""
    parts = name.split(":")
    base, args = parts[0], parts[1:]
    if base == "unknot":
        return make_spec(1, "", framings=framings)
    if base == "identity":
        m = int(args[0]) if args else 1
        return make_spec(m, "", framings=framings)
    if base == "hopf":
        return make_spec(2, "S1^2", framings=framings)
    if base == "dc":
        m = int(args[0])
        if m < 2:
            raise ValueError("daisy chain needs at least 2 rings")
        return make_spec(m, _dc_word(m), framings=framings)
    if base == "borromean":
        return make_spec(3, "S1^-1 S2 S1^-1 S2 S1^-1 S2", framings=framings)
    if base == "trefoil":
        return make_spec(2, "S1^3", components=((1, 2),), framings=framings)
    raise ValueError(f"unknown preset {name!r}")


PRESET_NAMES = ("unknot", "identity:3", "hopf", "dc:3", "dc:4", "dc:5", "dc:6",
                "borromean", "trefoil")


def load_spec(path: str) -> ManifoldSpec:
    with open(path, encoding="utf-8") as fh:
        obj = json.load(fh)
    return make_spec(obj["m"], obj.get("fixed_word", ""),
                     obj.get("components"), obj.get("framings"))


# ---------------------------------------------------------------------------
# closed-form ground truth

def _conj(inner: str, core: str) -> str:
    """Word text for inner^-1 core inner."""
    inv = grammar.format_word(
        tuple(("a", i, -s) for kind, i, s in reversed(grammar.parse_letters(inner))))
    return f"{inv} {core} {inner}".strip()


def expected_rho(name: str, i: int) -> str:
    """Published closed form for rho_i, as word text (m, n=1)."""
    base = name.split(":")[0]
    if base in ("unknot", "identity"):
        return f"a{i}"
    if base == "hopf":
        return {1: _conj("a2", "a1"), 2: _conj("a1 a2", "a2")}[i]
    if base == "trefoil":
        return {1: _conj("a1 a2", "a2"), 2: _conj("a2 a1 a2", "a1")}[i]
    if base == "borromean":
        c1 = "a3 a1 a2 a1^-1 a3^-1 a1 a2^-1 a1^-1"
        c3 = "a1 a2^-1 a1^-1 a3^-1 a1^-1 a3 a1 a2 a1^-1 a3^-1 a1 a3"
        return {1: _conj(c1, "a1"), 2: _conj("a1^-1 a3^-1 a1 a3", "a2"),
                3: _conj(c3, "a3")}[i]
    if base == "dc":
        return _dc_rho(int(name.split(":")[1]), i)
    raise KeyError(f"no rho table for preset {name!r}")


def _dc_rho(m: int, i: int) -> str:
    """DC_m twisted-conjugation closed forms, by the inductive rules."""
    if m == 2:
        return expected_rho("hopf", i)
    if m == 3:
        return {1: _conj("a2", "a1"),
                2: _conj("a1 a2 a3", "a2"),
                3: _conj("a2^-1 a1^-1 a2 a1 a2 a3", "a3")}[i]
    if m % 2 == 0:  # m = 2k rings
        if i <= m - 3:
            return _dc_rho(m - 2, i)
        if i == m - 2:
            return _conj(f"a{m-3} a{m-2} a{m}^-1 a{m-1} a{m}", f"a{m-2}")
        if i == m - 1:
            return _conj(f"a{m} a{m-2}^-1 a{m-3}^-1 a{m-2} a{m-3} a{m-2} a{m}^-1 a{m-1} a{m}",
                         f"a{m-1}")
        return _conj(f"a{m-1} a{m}", f"a{m}")
    # m = 2k+1 rings
    if i <= m - 2:
        return _dc_rho(m - 1, i)
    if i == m - 1:
        return _conj(f"a{m-2} a{m-1} a{m}", f"a{m-1}")
    return _conj(f"a{m-1}^-1 a{m-2}^-1 a{m-1} a{m-2} a{m-1} a{m}", f"a{m}")


def expected_r_core(name: str, k: int) -> str:
    """Closed-form core loop word of r_k (r_k = lambda_n core lambda_n^-1)."""
    base = name.split(":")[0]
    if base in ("unknot", "identity"):
        return ""
    if base == "hopf":
        return {1: "a2", 2: "a2^-1 a1 a2"}[k]
    if base == "borromean":
        return {1: "a3 a1 a2 a1^-1 a3^-1 a1 a2^-1 a1^-1",
                2: "a1^-1 a3^-1 a1 a3",
                3: "a1 a2^-1 a1^-1 a3^-1 a1^-1 a3 a1 a2 a1^-1 a3^-1 a1 a3"}[k]
    if base == "dc":
        return _dc_r_core(int(name.split(":")[1]), k)
    raise KeyError(f"no r table for preset {name!r}")


def _dc_r_core(m: int, k: int) -> str:
    if k == 1:
        return "a2"
    even_rule = lambda j: f"a{j}^-1 a{j-1} a{j} a{j+2}^-1 a{j+1} a{j+2}"
    odd_rule = lambda j: (f"a{j}^-1 a{j+1} a{j-1}^-1 a{j-2}^-1 a{j-1} a{j-2} "
                          f"a{j-1} a{j+1}^-1 a{j} a{j+1}")
    if k <= m - 2:
        return even_rule(k) if k % 2 == 0 else odd_rule(k)
    if m % 2 == 0:
        if k == m - 1:
            return odd_rule(k)
        return f"a{m}^-1 a{m-1} a{m}"
    if k == m - 1:
        return f"a{m-1}^-1 a{m-2} a{m-1} a{m}"
    return f"a{m}^-1 a{m-1}^-1 a{m-2}^-1 a{m-1} a{m-2} a{m-1} a{m}"


def expected_r(name: str, k: int, n: int, m: int) -> MixedBraidWord:
    core = grammar.parse_letters(expected_r_core(name, k))
    lam = lambda_word(n)
    from .mixed import invert_letters
    return MixedBraidWord(m, n + 1, lam + core + invert_letters(lam))


def expected_trefoil_r(n: int) -> MixedBraidWord:
    """Closed-form trefoil correction word, in B_{2,n+2}."""
    lam = lambda_word(n)
    from .mixed import invert_letters
    a2 = grammar.parse_letters("a2")
    w1 = grammar.parse_letters("a2^-1 a1 a2")
    w2 = grammar.parse_letters("a2^-1 a1^-1 a2 a1 a2")
    letters = (lam + a2 + (Sigma(n + 1),)
               + lam + w1 + (Sigma(1), Sigma(1)) + invert_letters(lam)
               + (Sigma(n + 1, -1),)
               + w2 + invert_letters(lam) + (Sigma(n + 1),))
    return MixedBraidWord(2, n + 2, letters)


def expected_trefoil_band(n: int, sign: int, framing: int) -> MixedBraidWord:
    """Closed-form trefoil band move for empty beta_1, beta_2."""
    t = moves.framing_loop(2, n, 2)
    t_letters = reindex(t, n + 2).letters
    from .mixed import invert_letters
    t_pow = t_letters * framing if framing >= 0 else \
        invert_letters(t_letters) * (-framing)
    letters = ((Sigma(n + 1, -1),) + t_pow + (Sigma(n, sign), Sigma(n + 1))
               + expected_trefoil_r(n).letters)
    return MixedBraidWord(2, n + 2, letters)


# ---------------------------------------------------------------------------
# verification

def verify_preset(name: str, n_values=(1, 2, 3), cache=None) -> list[dict]:
    """Recompute every ground-truth item for a preset and compare under the
    embedding.  Returns a list of report rows."""
    spec = preset(name)
    cache = cache or moves.default_cache()
    rows: list[dict] = []

    def row(item: str, note: str, computed, expect) -> None:
        ok = mixed_equal(computed, expect)
        entry = {"item": item, "note": note, "pass": ok}
        if not ok:
            entry["computed"] = grammar.format_word(computed)
            entry["expected"] = grammar.format_word(expect)
        rows.append(entry)

    base = name.split(":")[0]
    if base == "trefoil":
        for i in (1, 2):
            row(f"rho_{i}", "trefoil twisted conjugation",
                cache.rho(spec, i),
                grammar.parse_word(expected_rho(name, i), spec.m, 1))
        for n in (1, 2):
            row(f"r(n={n})", "trefoil combed band-move correction",
                cache.r(spec, 1, n), expected_trefoil_r(n))
        return rows

    for i in range(1, spec.m + 1):
        row(f"rho_{i}", f"{base} twisted conjugation for a{i}",
            cache.rho(spec, i),
            grammar.parse_word(expected_rho(name, i), spec.m, 1))
    for k in range(1, spec.m + 1):
        try:
            core = expected_r_core(name, k)
        except KeyError:
            continue
        for n in n_values:
            row(f"r_{k}(n={n})", f"{base} combed band-move correction r_{k}",
                cache.r(spec, k, n), expected_r(name, k, n, spec.m))
    return rows
