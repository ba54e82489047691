"""Command-line front end.

Exit codes: 0 success, 1 a predicate answered no (or a lemma check was
inapplicable), 2 usage or parse error, 3 no stabilization before the power cap.
"""

import argparse
import sys

from .constructor import (
    ConstructionError,
    lemma_intersection_check,
    realize_stable_set,
    search_d,
    verify_power_distribution,
)
from .core import AmbientMismatchError, ExponentOverflowError, IdealError
from .decomposition import irreducible_decomposition, primary_decomposition
from .stable import StabilizationConfig, ass_infinity, ass_of_power, is_in_ass_infinity
from .textio import ParseError, parse_document, parse_prime, parse_prime_list, primes_json, render_json

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_UNSTABLE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _fmt_primes(primes):
    return "\n".join(str(P) for P in primes) if primes else "(none)"


class _Out:
    def __init__(self, args):
        self.json = args.json
        self.quiet = args.quiet
        self.chunks = []

    def emit(self, obj, text):
        if self.quiet:
            return
        self.chunks.append(render_json(obj) if self.json else text)

    def flush(self):
        for chunk in self.chunks:
            sys.stdout.write(chunk + "\n")
        sys.stdout.flush()


def _read_document(args):
    if args.input in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(args.input, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from None
    return parse_document(text)


def _need_ideal(doc):
    if doc.ideal is None:
        raise UsageError("the input document has no ideal line")
    return doc.ideal


def _config(args):
    return StabilizationConfig(window=args.window, s_floor=args.floor, s_max=args.max_power)


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1: {v}")
    return v


def _nonnegative(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0: {v}")
    return v


def cmd_ass(args, out):
    I = _need_ideal(_read_document(args))
    primes = ass_of_power(I, 1)
    out.emit(primes_json(primes), _fmt_primes(primes))
    return EXIT_OK


def cmd_ass_power(args, out):
    I = _need_ideal(_read_document(args))
    primes = ass_of_power(I, args.s, method=args.method)
    out.emit(primes_json(primes, s=args.s), _fmt_primes(primes))
    return EXIT_OK


def cmd_ass_infinity(args, out):
    I = _need_ideal(_read_document(args))
    rep = ass_infinity(I, _config(args), method=args.method)
    if rep.stabilized:
        head = f"stable set (constant from s={rep.stabilized_at}, window {rep.config.window}; not certified):"
    else:
        head = f"NOT stabilized by s={rep.config.s_max}; last observed set (not certified):"
    out.emit(rep, head + "\n" + _fmt_primes(rep.stable_set))
    return EXIT_OK if rep.stabilized else EXIT_UNSTABLE


def cmd_member_stable(args, out):
    doc = _read_document(args)
    I = _need_ideal(doc)
    if args.prime:
        primes = [parse_prime(args.prime, doc.ambient)]
    elif doc.primes:
        primes = list(doc.primes)
    else:
        raise UsageError("no prime given (use --prime or a prime line)")
    cfg = _config(args)
    code = EXIT_OK
    for P in primes:
        rep = is_in_ass_infinity(P, I, cfg)
        out.emit(rep, "true" if rep.member else "false")
        if not rep.stabilized:
            code = EXIT_UNSTABLE
        elif not rep.member and code == EXIT_OK:
            code = EXIT_NO
    return code


def cmd_construct(args, out):
    doc = _read_document(args)
    primes = parse_prime_list(args.primes, doc.ambient)
    if args.search_d:
        trace = search_d(primes, depth=args.depth, d_max=args.d_max)
    else:
        trace = realize_stable_set(primes, d=args.d)
    lines = [f"I = {trace.result}", f"ks = {list(trace.ks)}", f"d = {trace.d}"]
    lines += [f"J_{r} = {J}" for r, J in enumerate(trace.intermediates, start=1)]
    if trace.empirical:
        lines.append(f"d found empirically (distribution checked up to s={args.depth})")
    out.emit(trace, "\n".join(lines))
    return EXIT_OK


def cmd_decompose(args, out):
    I = _need_ideal(_read_document(args))
    dec = primary_decomposition(I) if args.primary else irreducible_decomposition(I)
    text = "\n".join(f"{c}  radical {c.radical}" for c in dec.components)
    out.emit(dec, text)
    return EXIT_OK


def cmd_check_lemma(args, out):
    doc = _read_document(args)
    I = _need_ideal(doc)
    P = parse_prime(args.prime, doc.ambient)
    rep = lemma_intersection_check(I, P, args.k)
    if rep.applicable:
        text = f"applicable: yes\nholds: {'yes' if rep.holds else 'NO'}\nlhs: {list(map(str, rep.lhs))}\nrhs: {list(map(str, rep.rhs))}"
    else:
        text = "applicable: no"
    out.emit(rep, text)
    return EXIT_OK if rep.applicable and rep.holds else EXIT_NO


def cmd_check_distribution(args, out):
    doc = _read_document(args)
    if args.primes:
        primes = parse_prime_list(args.primes, doc.ambient)
    elif doc.primes:
        primes = list(doc.primes)
    else:
        raise UsageError("no primes given (use --primes or prime lines)")
    if args.exponents:
        try:
            exps = [int(e) for e in args.exponents.split(",")]
        except ValueError:
            raise UsageError(f"bad exponent list {args.exponents!r}") from None
    else:
        exps = [1] * len(primes)
    if len(exps) != len(primes) or min(exps) < 1:
        raise UsageError("need one positive exponent per prime")
    rep = verify_power_distribution(list(zip(primes, exps)), args.max_power)
    text = "\n".join(f"s={s}: {'holds' if ok else 'FAILS'}" for s, ok in rep.checks)
    out.emit(rep, text)
    return EXIT_OK if rep.holds else EXIT_NO


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", metavar="FILE", help="ideal document (default: stdin)")
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--quiet", "-q", action="store_true", help="no output; exit code only")

    stab = argparse.ArgumentParser(add_help=False)
    stab.add_argument("--window", type=_positive, default=3)
    stab.add_argument("--max-power", type=_positive, default=20)
    stab.add_argument("--floor", type=_nonnegative, default=2)

    method = argparse.ArgumentParser(add_help=False)
    method.add_argument("--method", choices=("decompose", "socle"), default="decompose")

    parser = argparse.ArgumentParser(prog="assinf", description="Associated primes of monomial ideals and their powers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ass", parents=[common], help="Ass(I)")
    p.set_defaults(func=cmd_ass)

    p = sub.add_parser("ass-power", parents=[common, method], help="Ass(I^s)")
    p.add_argument("--s", type=_positive, required=True)
    p.set_defaults(func=cmd_ass_power)

    p = sub.add_parser("ass-infinity", parents=[common, stab, method], help="stable set of Ass(I^s)")
    p.set_defaults(func=cmd_ass_infinity)

    p = sub.add_parser("member-stable", parents=[common, stab], help="is a prime in the stable set")
    p.add_argument("--prime", help="comma-separated variables, e.g. a,b,c")
    p.set_defaults(func=cmd_member_stable)

    p = sub.add_parser("construct", parents=[common], help="ideal with a prescribed stable set")
    p.add_argument("--primes", required=True, help='primes separated by ";", e.g. "x1; x1,x2"')
    p.add_argument("--d", type=_positive, default=1)
    p.add_argument("--search-d", action="store_true", help="search d until powers distribute")
    p.add_argument("--depth", type=_positive, default=4)
    p.add_argument("--d-max", type=_positive, default=16)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("decompose", parents=[common], help="irreducible (or primary) decomposition")
    p.add_argument("--primary", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-lemma", parents=[common], help="Ass(I ∩ P^k) = Ass(I) ∪ {P}")
    p.add_argument("--prime", required=True)
    p.add_argument("--k", type=_positive, required=True)
    p.set_defaults(func=cmd_check_lemma)

    p = sub.add_parser("check-distribution", parents=[common], help="(∩ P_i^e_i)^s = ∩ P_i^(s e_i)")
    p.add_argument("--primes", help='primes separated by ";"')
    p.add_argument("--exponents", help="comma-separated exponents, one per prime")
    p.add_argument("--max-power", type=_positive, default=4)
    p.set_defaults(func=cmd_check_distribution)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    out = _Out(args)
    try:
        code = args.func(args, out)
    except (ParseError, UsageError, IdealError, AmbientMismatchError, ExponentOverflowError) as exc:
        print(f"assinf {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, TypeError, ConstructionError) as exc:
        print(f"assinf {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    out.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
