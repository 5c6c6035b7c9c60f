"""
Command-line front end.

One command per invocation; word arguments use the same "n: i1 i2 ..."
grammar as the library parser.  Results go to stdout (add --json for the
machine form), diagnostics to stderr.  Exit status 0 means the command ran
and, for verdict commands, the verdict held; 1 means a verdict failed
(a parity mismatch, unequal template sides, an Unknown certificate, an
output-preserving crossing change, a failing self test); 2 means the
invocation itself was unusable.
"""

from __future__ import annotations

import argparse
import json
import sys

from .acceptance import run_all
from .analysis import nugatory_scan, odd_change_check, parity_consistency
from .homfly import BraidIndexCertificate, certify_braid_index_3, homfly_oracle, jones, mfw_lower_bound, to_homfly
from .resolution import ResolutionNode, label_only, resolution_tree, resolve
from .skein import partition_str
from .templates import ExchangeInstance, FlypeInstance, exchange_pair, flype_pair, search_exchange_divergence
from .words import BraidWord, MoveError, WordError, parse_word


def _print_json(data) -> None:
    print(json.dumps(data, indent=2))


def _cmd_resolve(args) -> int:
    vector = resolve(parse_word(args.word), args.basepoint)
    if args.json:
        _print_json({"strand_count": vector.strand_count,
                     "entries": vector.to_json_dict()})
    else:
        print(vector.format())
    return 0


def _cmd_labels(args) -> int:
    word = parse_word(args.word)
    labels = label_only(word, args.basepoint)
    if args.json:
        _print_json({str(l.crossing_id): labels[l.crossing_id].value
                     for l in word.letters})
    else:
        for letter in word.letters:
            print(f"{letter.crossing_id}: {labels[letter.crossing_id].value}")
    return 0


def _tree_lines(node: ResolutionNode, depth: int, lines: list[str]) -> None:
    head = "" if node.edge is None else f"{node.edge.format()} -> "
    tail = f" => {partition_str(node.leaf_partition())}" if node.is_leaf() else ""
    lines.append(f"{'  ' * depth}{head}{node.word.format()}{tail}")
    for child in node.children:
        _tree_lines(child, depth + 1, lines)


def _tree_json(node: ResolutionNode) -> dict:
    data = {
        "word": node.word.format(),
        "edge": None if node.edge is None else node.edge.to_json_dict(),
        "labels": {str(cid): label.value for cid, label in sorted(node.labels.items())},
    }
    if node.is_leaf():
        data["partition"] = ",".join(str(p) for p in node.leaf_partition())
    else:
        data["children"] = [_tree_json(child) for child in node.children]
    return data


def _cmd_tree(args) -> int:
    root = resolution_tree(parse_word(args.word), args.basepoint)
    if args.json:
        _print_json(_tree_json(root))
    else:
        lines: list[str] = []
        _tree_lines(root, 0, lines)
        print("\n".join(lines))
    return 0


def _cmd_parity(args) -> int:
    report = parity_consistency(parse_word(args.word), args.basepoint)
    if args.json:
        _print_json({"k": report.k, "p": report.positive_bad,
                     "n": report.negative_bad, "ok": report.ok})
    else:
        print(report.format())
    return 0 if report.ok else 1


def _cmd_nugatory(args) -> int:
    report = nugatory_scan(parse_word(args.word), args.basepoint)
    if args.json:
        _print_json({
            "base": report.base_vector.to_json_dict(),
            "crossings": [
                {"id": entry.crossing_id,
                 "differs": entry.differs,
                 "bfree_delta": entry.bfree_delta,
                 "vector": entry.changed_vector.to_json_dict()}
                for entry in report.entries
            ],
            "all_differ": report.all_differ,
        })
    else:
        print(f"base: {report.base_vector.format()}")
        for entry in report.entries:
            verdict = "different" if entry.differs else "UNCHANGED"
            print(f"{entry.crossing_id}: {verdict} delta={entry.bfree_delta:+d}")
        print(f"all-differ: {'yes' if report.all_differ else 'no'}")
    return 0 if report.all_differ else 1


def _cmd_odd_change(args) -> int:
    report = odd_change_check(parse_word(args.word), args.ids)
    if args.json:
        _print_json({
            "ids": list(report.crossing_ids),
            "odd": report.odd,
            "original": report.original_vector.to_json_dict(),
            "changed": report.changed_vector.to_json_dict(),
            "differs": report.differs,
            "ok": report.ok,
        })
    else:
        print(f"original: {report.original_vector.format()}")
        print(f"changed:  {report.changed_vector.format()}")
        print(f"ids: {' '.join(str(i) for i in report.crossing_ids)} "
              f"({'odd' if report.odd else 'even'})")
        print(f"verdict: {'different' if report.differs else 'unchanged'}")
    return 0 if report.ok else 1


def _cmd_homfly(args) -> int:
    poly = to_homfly(resolve(parse_word(args.word)))
    if args.json:
        _print_json({"terms": poly.to_json_dict()})
    else:
        print(poly.format())
    return 0


def _cmd_jones(args) -> int:
    poly = jones(to_homfly(resolve(parse_word(args.word))))
    if args.json:
        _print_json({"terms": poly.to_json_dict(), "unit": "t^(1/2)"})
    else:
        print(poly.format())
    return 0


def _cmd_mfw(args) -> int:
    bound = mfw_lower_bound(homfly_oracle(parse_word(args.word)))
    if args.json:
        _print_json({"bound": bound})
    else:
        print(bound)
    return 0


def _cmd_certify3(args) -> int:
    certificate = certify_braid_index_3(parse_word(args.word))
    if args.json:
        _print_json({"certificate": certificate.value})
    else:
        print(certificate.value)
    return 0 if certificate is BraidIndexCertificate.CERTIFIED else 1


def _cmd_flype_test(args) -> int:
    left, right = flype_pair(FlypeInstance(args.a, args.b, args.c, args.eps))
    equal = resolve(left) == resolve(right)
    if args.json:
        _print_json({"left": left.format(), "right": right.format(), "equal": equal})
    else:
        print(f"left:  {left.format()}")
        print(f"right: {right.format()}")
        print(f"verdict: {'equal' if equal else 'DIFFERENT'}")
    return 0 if equal else 1


def _cmd_exchange_test(args) -> int:
    u = parse_word(args.u)
    v = parse_word(args.v)
    if u.strand_count != v.strand_count:
        raise WordError("blocks u and v must have the same strand count")
    n = u.strand_count + 1
    left, right = exchange_pair(ExchangeInstance(u, v), n)
    equal = resolve(left) == resolve(right)
    if args.json:
        _print_json({"left": left.format(), "right": right.format(), "equal": equal})
    else:
        print(f"left:  {left.format()}")
        print(f"right: {right.format()}")
        print(f"verdict: {'equal' if equal else 'DIFFERENT'}")
    return 0 if equal else 1


def _cmd_exchange_search(args) -> int:
    hits = search_exchange_divergence(4, args.max_len)
    knots = sum(1 for hit in hits if hit.is_knot)
    if args.json:
        _print_json({
            "max_block_len": args.max_len,
            "pairs": [
                {"left": hit.left.format(), "right": hit.right.format(),
                 "left_vector": hit.left_vector.to_json_dict(),
                 "right_vector": hit.right_vector.to_json_dict(),
                 "oracle_equal": hit.oracle_equal, "is_knot": hit.is_knot}
                for hit in hits
            ],
            "count": len(hits),
            "knot_count": knots,
        })
    else:
        print(f"diverging pairs: {len(hits)} (block length <= {args.max_len}), "
              f"{knots} close to knots")
        for hit in hits:
            flags = f"knot={'yes' if hit.is_knot else 'no'} oracle={'ok' if hit.oracle_equal else 'MISMATCH'}"
            print(f"{hit.left.format()} | {hit.right.format()} {flags}")
    return 0


def _cmd_selftest(args) -> int:
    results = run_all(quick=args.quick)
    if args.json:
        _print_json([
            {"number": r.number, "name": r.name, "passed": r.passed,
             "detail": r.detail, "seconds": round(r.seconds, 3)}
            for r in results
        ])
    else:
        for result in results:
            print(result.format())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="braidskein",
        description="Resolve closed braid diagrams into exact skein combinations",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, help_text):
        sub = commands.add_parser(name, help=help_text)
        sub.set_defaults(handler=handler)
        sub.add_argument("--json", action="store_true", help="machine-readable output")
        return sub

    def add_word(name, handler, help_text, basepoint=False):
        sub = add(name, handler, help_text)
        sub.add_argument("word", help='braid word, e.g. "2: 1 1 1"')
        if basepoint:
            sub.add_argument("--basepoint", type=int, default=None,
                             help="start the walk at this strand (diagnostic)")
        return sub

    add_word("resolve", _cmd_resolve, "skein combination of the closure", basepoint=True)
    add_word("labels", _cmd_labels, "good/bad label of every crossing", basepoint=True)
    add_word("tree", _cmd_tree, "full branching of the resolution", basepoint=True)
    add_word("parity", _cmd_parity, "check k = p - n on the output", basepoint=True)
    add_word("nugatory", _cmd_nugatory, "scan all single crossing changes", basepoint=True)

    odd = add_word("odd-change", _cmd_odd_change, "flip a set of crossings and compare")
    odd.add_argument("ids", type=int, nargs="+", help="crossing ids to flip")

    add_word("homfly", _cmd_homfly, "polynomial in l and m via the bridge")
    add_word("jones", _cmd_jones, "Jones specialization in t")
    add_word("mfw", _cmd_mfw, "braid index lower bound from the oracle")
    add_word("certify3", _cmd_certify3, "certify braid index 3 for a 3-strand word")

    flype = add("flype-test", _cmd_flype_test, "compare the two sides of a flype")
    flype.add_argument("a", type=int)
    flype.add_argument("b", type=int)
    flype.add_argument("c", type=int)
    flype.add_argument("eps", type=int, choices=(1, -1))

    exchange = add("exchange-test", _cmd_exchange_test, "compare the two sides of an exchange")
    exchange.add_argument("u", help='block word, e.g. "2: 1 1"')
    exchange.add_argument("v", help='block word on the same strands')

    search = add("exchange-search", _cmd_exchange_search,
                 "find 4-strand exchange pairs with different outputs")
    search.add_argument("--max-len", type=int, default=3,
                        help="block length bound (default 3)")

    selftest = add("selftest", _cmd_selftest, "run the acceptance battery")
    selftest.add_argument("--quick", action="store_true",
                          help="reduced scales, finishes in seconds")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as stop:
        return 0 if stop.code in (0, None) else 2
    try:
        return args.handler(args)
    except (WordError, MoveError, ValueError) as problem:
        print(f"error: {problem}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
