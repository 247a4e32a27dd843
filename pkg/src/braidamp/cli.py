"""Command-line entry point: ``braidamp <subcommand> --strands n ...``."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import garside
from .alternating import alt_decompose, fast_compare
from .amplifier import ReceiptError, amplify, main_pipeline, purify
from .dehornoy import ReductionLimitError, compare, dehornoy_floor, genus_certificate, step_limit
from .words import BraidError, BraidWord, parse_word

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


def pretty(w: BraidWord) -> str:
    """Render with sigma symbols, e.g. ``σ₂σ₁⁻¹``; the empty word is ``1``."""
    if not w.letters:
        return "1"
    return "".join(f"σ{str(abs(e)).translate(_SUB)}" + ("" if e > 0 else "⁻¹") for e in w.letters)


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--strands", "-n", type=int, required=True, help="number of strands")
    common.add_argument("--json", action="store_true", help="emit one JSON record on stdout")
    common.add_argument("--max-steps", type=int, default=None, help="handle-reduction step budget")
    common.add_argument("--seed", type=int, default=0, help="seed for any randomized choice")
    common.add_argument("--jobs", type=int, default=1, help="worker count (accepted; runs serially)")

    p = _Parser(prog="braidamp", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help, nwords=0, **extra):
        sp = sub.add_parser(name, parents=[common], help=help)
        for k in range(nwords):
            sp.add_argument(f"word{k + 1}", help="braid word, e.g. \"1 -2 1\"")
        for flag, kw in extra.items():
            sp.add_argument(flag, **kw)
        return sp

    add("normalize", "left-greedy canonical form", 1)
    add("equal", "decide equality in B_n", 2)
    add("positive", "decide membership in the positive monoid", 1)
    add("meet", "maximal right divisor in a parabolic monoid", 1,
        **{"--side": dict(choices=("A", "B"), default="B")})
    add("decompose", "alternating decomposition of a positive braid", 1)
    add("length", "alternating length", 1)
    add("compare", "Dehornoy comparison with witness", 2,
        **{"--fast": dict(action="store_true", help="also report the fast alternating test")})
    add("floor", "Dehornoy floor", 1)
    add("certify-genus", "genus lower bound for the closure", 1)
    add("amplify", "element of the normal closure above Delta^(2 target)", 0,
        **{"--gamma": dict(required=True), "--target": dict(type=int, required=True),
           "--pure": dict(action="store_true", help="purify the result"),
           "--cap": dict(type=int, default=64)})
    add("pipeline", "knot braid with certified genus bound", 0,
        **{"--alpha": dict(required=True), "--gamma": dict(required=True),
           "--genus": dict(type=int, required=True), "--rn": dict(type=int, default=None),
           "--cap": dict(type=int, default=64)})
    add("oracle-divisors", "all positive right divisors by exhaustive search", 1,
        **{"--max-len": dict(type=int, default=garside.MAX_ORACLE_LENGTH)})
    return p


def _word(args, text: str) -> BraidWord:
    return parse_word(text, args.strands)


def _dispatch(args) -> tuple[dict, str]:
    cmd = args.command
    if cmd == "normalize":
        cf = garside.canonical_form(_word(args, args.word1))
        w = cf.to_word()
        rec = {"infimum": cf.infimum, "factors": [str(f) for f in cf.factor_words()], "word": str(w)}
        return rec, f"{cf}\nword: {w}"
    if cmd == "equal":
        eq = garside.equals(_word(args, args.word1), _word(args, args.word2))
        return {"equal": eq}, "equal" if eq else "not equal"
    if cmd == "positive":
        u = _word(args, args.word1)
        pos = garside.is_positive(u)
        rec = {"positive": pos, "infimum": garside.canonical_form(u).infimum}
        return rec, "positive" if pos else "not positive"
    if cmd == "meet":
        u = _word(args, args.word1)
        if not garside.is_positive(u):
            raise BraidError("meet needs a positive braid")
        y = garside.parabolic_max_right_divisor(u, args.side)
        return {"side": args.side, "divisor": str(y)}, f"x ∧ M_{args.side} = {pretty(y)}  [{y}]"
    if cmd == "decompose":
        dec = alt_decompose(_word(args, args.word1))
        lines = [f"m = {dec.length}"] + [f"{s}{i}: {w}" for s, i, w in dec.reading_order()]
        return dec.to_record(), "\n".join(lines)
    if cmd == "length":
        dec = alt_decompose(_word(args, args.word1))
        return {"m": dec.length}, str(dec.length)
    if cmd == "compare":
        u, v = _word(args, args.word1), _word(args, args.word2)
        cert = compare(u, v)
        sym = {"Less": "<_D", "Equal": "=", "Greater": ">_D"}[cert.verdict.value]
        rec = cert.to_record()
        text = f"{cert.verdict.value} ({pretty(u)} {sym} {pretty(v)}), witness: {cert.witness}"
        if args.fast and not (garside.is_positive(u) and garside.is_positive(v)):
            rec["fast"] = None
            text += "\nfast: not applicable (needs positive braids)"
        elif args.fast:
            fc = fast_compare(u, v)
            rec["fast"] = {"verdict": fc.verdict, "rule": fc.rule, "lengths": list(fc.lengths)}
            text += f"\nfast: {fc.verdict} ({fc.rule or 'no rule'}, lengths {fc.lengths[0]}, {fc.lengths[1]})"
        return rec, text
    if cmd == "floor":
        m = dehornoy_floor(_word(args, args.word1))
        return {"floor": m}, str(m)
    if cmd == "certify-genus":
        gc = genus_certificate(_word(args, args.word1))
        return gc.to_record(), str(gc)
    if cmd == "amplify":
        res = amplify(_word(args, args.gamma), args.target, args.cap)
        if args.pure:
            res = purify(res, args.target, args.cap)
        text = f"element: {res.element}\nconjugates: {len(res.certificate.terms)}\nreceipt: {res.order_receipt.verdict.value}"
        return res.to_record(), text
    if cmd == "pipeline":
        pr = main_pipeline(_word(args, args.alpha), _word(args, args.gamma), args.genus, args.rn, args.cap)
        text = "\n".join([
            f"knot braid: {pr.knot_braid}",
            f"genus >= {pr.genus_bound}",
            f"braid index: {pr.braid_index}",
            "not certified: " + ", ".join(pr.not_certified),
        ])
        return pr.to_record(), text
    if cmd == "oracle-divisors":
        u = _word(args, args.word1)
        divs = sorted(garside.brute_force_right_divisors(u, args.max_len), key=lambda w: (len(w), w.letters))
        return {"divisors": [str(w) for w in divs]}, "\n".join(str(w) if w.letters else "1" for w in divs)
    raise _UsageError(f"unknown subcommand {cmd!r}")


def run(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    if args.strands < 2:
        print("usage error: --strands must be at least 2", file=sys.stderr)
        return 2
    random.seed(args.seed)
    try:
        if args.max_steps is not None:
            with step_limit(args.max_steps):
                rec, text = _dispatch(args)
        else:
            rec, text = _dispatch(args)
    except (BraidError, ReceiptError, ReductionLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if args.json:
        rec = {"command": args.command, "strands": args.strands, **rec}
        print(json.dumps(rec, sort_keys=True, ensure_ascii=False))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
