"""``flanked`` command-line interface.

Exit codes: 0 when the property holds (or a construction succeeded), 1 when
it fails, 2 for usage, parse or precondition errors.  Documents are read
from a path, or from standard input when the path is ``-``.  Loaded automata
are trimmed (unreachable states dropped) before any algorithm runs.
"""
from __future__ import annotations

import argparse
import sys

from . import compose, decide, family, oracle, powerset
from .core import Ffa, Nfa, accepts, format_word, word
from .errors import AutomatonError, ResourceError
from .textformat import dumps, parse

EXIT_OK, EXIT_FAIL, EXIT_ERROR = 0, 1, 2


class UsageError(Exception):
    pass


def _read(path: str) -> Nfa | Ffa:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"{path}: {exc.strerror}") from None
    return parse(text)


def _trimmed(x):
    if isinstance(x, Ffa):
        return x.trim()
    return x.trim()[0]


def _load_nfa(path: str) -> Nfa:
    x = _trimmed(_read(path))
    return x.automaton if isinstance(x, Ffa) else x


def _load_ffa(path: str) -> Ffa:
    x = _read(path)
    if not isinstance(x, Ffa):
        raise UsageError(f"{path}: expected an ffa document")
    return _trimmed(x)


class _Out:
    def __init__(self, quiet: bool):
        self.quiet = quiet

    def __call__(self, text: str = "") -> None:
        if not self.quiet:
            sys.stdout.write(text + "\n")

    def document(self, x) -> None:
        # constructions always emit their document, even with --quiet
        sys.stdout.write(dumps(x))


def _verify(args, *ffas: Ffa) -> None:
    if getattr(args, "verify", False):
        for f in ffas:
            check = powerset.is_flanked(f, args.max_classes)
            if not check:
                raise UsageError(
                    f"input is not flanked (word {format_word(check.word)!r}, symbol {check.symbol})"
                )


def cmd_check_flanked(args, out):
    f = _load_ffa(args.ffa)
    check = powerset.is_flanked(f, args.max_classes)
    if check:
        out("flanked")
        return EXIT_OK
    out("not flanked")
    out(f"word: {format_word(check.word)}")
    out(f"symbol: {check.symbol}")
    out(f"reason: {check.kind}")
    return EXIT_FAIL


def cmd_flankable(args, out):
    a = _load_nfa(args.nfa)
    result = powerset.is_flankable(a, args.max_classes)
    if result:
        out(dumps(Ffa(a, result.flank)).rstrip("\n"))
        return EXIT_OK
    out("not flankable")
    out(f"word: {format_word(result.word)}")
    out(f"symbol: {result.symbol}")
    return EXIT_FAIL


def cmd_universal(args, out):
    f = _load_ffa(args.ffa)
    _verify(args, f)
    if decide.is_universal(f):
        out("universal")
        return EXIT_OK
    out("not universal")
    return EXIT_FAIL


def cmd_include(args, out):
    left = _load_nfa(args.nfa)
    right = _load_ffa(args.ffa)
    _verify(args, right)
    result = decide.check_inclusion(left, right)
    if result:
        out("included")
        return EXIT_OK
    out("not included")
    out(f"witness: {format_word(result.witness)}")
    return EXIT_FAIL


def _binary(op):
    def run(args, out):
        f1, f2 = _load_ffa(args.left), _load_ffa(args.right)
        _verify(args, f1, f2)
        out.document(op(f1, f2))
        return EXIT_OK

    return run


def _parse_map(items: list[str]) -> dict[str, str]:
    mapping = {}
    for item in items:
        src, sep, dst = item.partition("=")
        if not sep or not src or not dst:
            raise UsageError(f"bad --map entry {item!r}; expected SRC=DST")
        if src in mapping:
            raise UsageError(f"symbol {src!r} mapped twice")
        mapping[src] = dst
    return mapping


def cmd_relabel(args, out):
    x = _trimmed(_read(args.doc))
    a = x.automaton if isinstance(x, Ffa) else x
    mapping = {s: s for s in a.alphabet}
    given = _parse_map(args.map or [])
    unknown = set(given) - set(a.alphabet)
    if unknown:
        raise UsageError(f"--map refers to unknown symbols {sorted(unknown)}")
    mapping.update(given)
    out.document(compose.relabel(a, mapping))
    return EXIT_OK


def cmd_determinize(args, out):
    out.document(powerset.determinize(_load_nfa(args.nfa), args.max_classes))
    return EXIT_OK


def cmd_minimize(args, out):
    out.document(powerset.minimize(_load_nfa(args.dfa)))
    return EXIT_OK


def cmd_gen_family(args, out):
    out.document(family.generate(args.n).ffa)
    return EXIT_OK


def cmd_member(args, out):
    a = _load_nfa(args.doc)
    u = word(" ".join(args.word))
    if accepts(a, u):
        out("accept")
        return EXIT_OK
    out("reject")
    return EXIT_FAIL


def cmd_enumerate(args, out):
    a = _load_nfa(args.nfa)
    if args.depth < 0:
        raise UsageError("--depth must be non-negative")
    for u in oracle.enumerate_words(a, args.depth).sorted_words():
        out(" ".join(u))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="flanked", description="Flanked finite automata toolkit")
    parser.add_argument("--max-classes", type=int, default=powerset.DEFAULT_MAX_CLASSES,
                        help="cap on powerset classes before giving up (default: %(default)s)")
    parser.add_argument("--quiet", action="store_true", help="suppress verdict output; rely on exit codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-flanked", help="check that a flank relation is valid")
    p.add_argument("ffa")
    p.set_defaults(func=cmd_check_flanked)

    p = sub.add_parser("flankable", help="decide flankability; print a flanked document on success")
    p.add_argument("nfa")
    p.set_defaults(func=cmd_flankable)

    p = sub.add_parser("universal", help="universality of a flanked automaton")
    p.add_argument("ffa")
    p.add_argument("--verify", action="store_true", help="check the flank relation first (exponential)")
    p.set_defaults(func=cmd_universal)

    p = sub.add_parser("include", help="language inclusion of an automaton in a flanked automaton")
    p.add_argument("nfa")
    p.add_argument("ffa")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=cmd_include)

    for name, op in (("intersect", compose.intersect), ("quotient", compose.quotient), ("union", compose.union)):
        p = sub.add_parser(name, help=f"{name} of two flanked automata")
        p.add_argument("left")
        p.add_argument("right")
        p.add_argument("--verify", action="store_true")
        p.set_defaults(func=_binary(op))

    p = sub.add_parser("relabel", help="substitute symbols (result is an nfa document)")
    p.add_argument("doc")
    p.add_argument("--map", nargs="+", metavar="SRC=DST")
    p.set_defaults(func=cmd_relabel)

    p = sub.add_parser("determinize", help="subset construction")
    p.add_argument("nfa")
    p.set_defaults(func=cmd_determinize)

    p = sub.add_parser("minimize", help="minimize a deterministic automaton")
    p.add_argument("dfa")
    p.set_defaults(func=cmd_minimize)

    p = sub.add_parser("gen-family", help="emit the succinct flanked automaton for n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_gen_family)

    p = sub.add_parser("member", help="word membership")
    p.add_argument("doc")
    p.add_argument("word", nargs="*", help="space-separated symbols; omit for the empty word")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("enumerate", help="accepted words up to a depth, shortlex order")
    p.add_argument("nfa")
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    out = _Out(args.quiet)
    try:
        return args.func(args, out)
    except (AutomatonError, UsageError, ResourceError) as exc:
        sys.stderr.write(f"flanked {args.command}: error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
