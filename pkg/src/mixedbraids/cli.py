"""Command-line front end.

Commands: nf, eq, embed, comb, rho, r, move, verify, search, random-check.
Exit codes: 0 success / true / pass, 1 false / fail / not-found, 2 usage or
input error.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import braid, combing, equivalence, grammar, manifolds, moves
from .braid import BraidWord
from .grammar import WordSyntaxError, format_word, parse_word
from .mixed import MixedBraidWord, embed, mixed_equal, winding_vector


def _plain_word(text: str, strands: int) -> BraidWord:
    letters = []
    for kind, i, s in grammar.parse_letters(text):
        if kind != "s":
            raise WordSyntaxError("plain braid words use 's' letters only", 0)
        if not 1 <= i <= strands - 1:
            raise WordSyntaxError(f"s{i} out of range for {strands} strands", 0)
        letters.append((i, s))
    return BraidWord(strands, tuple(letters))


def _format_plain(w: BraidWord, compress: bool) -> str:
    return format_word(tuple(("s", i, s) for i, s in w.letters), compress)


def _spec_from_args(args) -> manifolds.ManifoldSpec:
    if getattr(args, "preset", None):
        return manifolds.preset(args.preset, getattr(args, "framings", None))
    if getattr(args, "spec", None):
        return manifolds.load_spec(args.spec)
    raise WordSyntaxError("need --preset NAME or --spec FILE", 0)


def _cmd_nf(args) -> int:
    w = _plain_word(args.word, args.strands)
    nf = braid.normal_form(w)
    print(f"infimum: {nf.infimum}")
    print(f"factors: {len(nf.factors)}")
    for f in nf.factors:
        print(_format_plain(BraidWord(args.strands, braid.perm_word(f)),
                            not args.raw))
    return 0


def _cmd_eq(args) -> int:
    u = parse_word(args.words[0], args.m, args.n)
    v = parse_word(args.words[1], args.m, args.n)
    ok = mixed_equal(u, v)
    print("equal" if ok else "not-equal")
    return 0 if ok else 1


def _cmd_embed(args) -> int:
    w = parse_word(args.word, args.m, args.n)
    print(_format_plain(embed(w), not args.raw))
    return 0


def _cmd_comb(args) -> int:
    w = parse_word(args.word, args.m, args.n)
    pair = combing.comb(w)
    print("algebraic:", format_word(pair.algebraic, not args.raw))
    print("coset:", format_word(pair.coset, not args.raw))
    return 0


def _cmd_rho(args) -> int:
    spec = _spec_from_args(args)
    rho = combing.compute_rho(spec, args.i)
    print(format_word(rho, not args.raw))
    return 0


def _cmd_r(args) -> int:
    spec = _spec_from_args(args)
    r = moves.default_cache().r(spec, args.k, args.n)
    print(format_word(r, not args.raw))
    return 0


def _cmd_move(args) -> int:
    w = parse_word(args.word, args.m, args.n)
    spec = None
    if args.type in ("twist", "band", "combed-band", "nonpure-band"):
        spec = _spec_from_args(args)
    index = {"conj": args.j, "twist": args.i, "l": args.i,
             "band": args.k, "combed-band": args.k,
             "nonpure-band": args.k}.get(args.type, 0)
    rec = moves.MoveRecord(args.type, args.sign, index or 0, args.kind,
                           args.split if args.split is not None else -1)
    out = equivalence.apply_move(w, rec, spec)
    print(f"m={out.m} n={out.n}")
    print(format_word(out, not args.raw))
    return 0


def _cmd_verify(args) -> int:
    rows = manifolds.verify_preset(args.preset,
                                   n_values=tuple(range(1, args.n_max + 1)))
    ok = True
    for row in rows:
        status = "PASS" if row["pass"] else "FAIL"
        print(f"{status} {row['item']} ({row['note']})")
        if not row["pass"]:
            ok = False
            print("  computed:", row["computed"])
            print("  expected:", row["expected"])
    return 0 if ok else 1


def _cmd_search(args) -> int:
    spec = _spec_from_args(args)
    u = parse_word(args.words[0], spec.m, args.n)
    v = parse_word(args.words[1], spec.m, args.n2 or args.n)
    budget = equivalence.SearchBudget(args.depth, args.nmax)
    res = equivalence.bounded_search(u, v, spec, budget)
    if res.found():
        print(res.certificate.to_json())
        return 0
    print(f"not-found nodes_expanded={res.nodes_expanded} pruned={res.pruned}")
    return 1


def _cmd_random_check(args) -> int:
    rng = random.Random(args.seed)
    for it in range(args.iters):
        m = rng.randint(1, 4)
        n = rng.randint(1, 3)
        letters = []
        for _ in range(rng.randint(0, 12)):
            kind = rng.choice(("S", "a", "s"))
            if kind == "S" and m < 2:
                kind = "a"
            if kind == "s" and n < 2:
                kind = "a"
            hi = {"S": m - 1, "a": m, "s": n - 1}[kind]
            letters.append((kind, rng.randint(1, hi), rng.choice((1, -1))))
        w = MixedBraidWord(m, n, tuple(letters))
        # grammar round-trip
        if parse_word(format_word(w), m, n) != w:
            print(f"counterexample (round-trip) iter={it}: {format_word(w, False)}")
            return 1
        # combing preserves the embedded element
        pair = combing.comb(w)
        rhs = braid.concat(embed(pair.algebraic),
                           BraidWord(m + n, tuple((k, s) for _, k, s in pair.coset)))
        if not braid.equal(embed(w), rhs):
            print(f"counterexample (combing) iter={it}: {format_word(w, False)}")
            return 1
        # winding additivity under concatenation
        u = MixedBraidWord(m, n, tuple(letters[: len(letters) // 2]))
        v = MixedBraidWord(m, n, tuple(letters[len(letters) // 2:]))
        if tuple(map(sum, zip(winding_vector(u), winding_vector(v)))) != winding_vector(w):
            print(f"counterexample (winding) iter={it}: {format_word(w, False)}")
            return 1
    print(f"ok {args.iters} iterations")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="mixedbraids")
    p.add_argument("--raw", action="store_true",
                   help="print words letter by letter without power compression")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("nf", help="Garside normal form of a plain braid word")
    sp.add_argument("--strands", type=int, required=True)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_nf)

    sp = sub.add_parser("eq", help="decide equality of two mixed words")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("words", nargs=2)
    sp.set_defaults(func=_cmd_eq)

    sp = sub.add_parser("embed", help="embed a mixed word into B_{m+n}")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_embed)

    sp = sub.add_parser("comb", help="comb a mixed word through its fixed part")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_comb)

    sp = sub.add_parser("rho", help="combing corrector rho_i for a spec")
    sp.add_argument("--preset")
    sp.add_argument("--spec")
    sp.add_argument("--i", type=int, required=True)
    sp.set_defaults(func=_cmd_rho)

    sp = sub.add_parser("r", help="band-move correction word r_k for a spec")
    sp.add_argument("--preset")
    sp.add_argument("--spec")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.set_defaults(func=_cmd_r)

    sp = sub.add_parser("move", help="apply one move to a word")
    sp.add_argument("--type", required=True,
                    choices=("m", "conj", "twist", "l", "band", "combed-band",
                             "nonpure-band"))
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--j", type=int, default=0)
    sp.add_argument("--i", type=int, default=0)
    sp.add_argument("--k", type=int, default=0)
    sp.add_argument("--sign", type=int, default=1, choices=(1, -1))
    sp.add_argument("--kind", default="over", choices=("over", "under"))
    sp.add_argument("--split", type=int, default=None)
    sp.add_argument("--preset")
    sp.add_argument("--spec")
    sp.add_argument("word")
    sp.set_defaults(func=_cmd_move)

    sp = sub.add_parser("verify", help="check a preset against its closed forms")
    sp.add_argument("--preset", required=True)
    sp.add_argument("--n-max", type=int, default=3, dest="n_max")
    sp.set_defaults(func=_cmd_verify)

    sp = sub.add_parser("search", help="bounded search for a move sequence")
    sp.add_argument("--preset")
    sp.add_argument("--spec")
    sp.add_argument("--depth", type=int, required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--n2", type=int, default=None)
    sp.add_argument("words", nargs=2)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("random-check", help="run randomized cross-checks")
    sp.add_argument("--iters", type=int, default=100)
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=_cmd_random_check)

    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (WordSyntaxError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
