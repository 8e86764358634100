"""Command-line front end: ``htcuntz <command> [payloads] [flags]``.

Payloads come from the positional arguments, or from stdin with one
invocation per line (several payloads on a line are separated by ";").
Exit status is 0 on success, 2 on bad input and 1 when a property fails.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Callable, Sequence

from . import suites
from .cuntz import parse_sum, psi
from .embeddings import EmbeddingParams, embed_table
from .intervals import parse_interval
from .orbits import enumerate_orbit, equivalent, format_point, parse_point
from .plmaps import evaluate, table_to_plmap
from .representation import (FormalVector, TransportError, apply_sum, coding_image,
                             matrix_section, u_image)
from .tables import classify, compose, format_table, invert, parse_table, reduce, table_to_json
from .words import format_word, parse_word


class PropertyFailure(Exception):
    pass


def _table_out(g, args):
    return table_to_json(g) if args.json else format_table(g)


def _parse(args, payload):
    (text,) = payload
    n, kind = args.n, args.kind
    if kind == "table":
        return _table_out(parse_table(text, n), args)
    if kind == "word":
        return format_word(parse_word(text, n), n)
    if kind == "sum":
        x = parse_sum(text, n)
        return x.to_json() if args.json else str(x)
    if kind == "point":
        return format_point(parse_point(text))
    if kind == "interval":
        I = parse_interval(text, n)
        return I.to_json() if args.json else str(I)
    if kind == "plmap":
        m = table_to_plmap(parse_table(text, n))
        if args.json:
            return m.to_json()
        return "\n".join(f"{dom} -> {ran}" for dom, ran in m.pieces)
    raise ValueError(f"unknown kind {kind!r}")


def _reduce(args, payload):
    return _table_out(reduce(parse_table(payload[0], args.n)), args)


def _compose(args, payload):
    g, h = (parse_table(t, args.n) for t in payload)
    return _table_out(compose(g, h), args)


def _invert(args, payload):
    return _table_out(invert(parse_table(payload[0], args.n)), args)


def _classify(args, payload):
    return classify(parse_table(payload[0], args.n))


def _eval(args, payload):
    g = parse_table(payload[0], args.n)
    return format_point(evaluate(table_to_plmap(g), parse_point(payload[1])))


def _params(args) -> EmbeddingParams:
    return EmbeddingParams(args.n, args.k)


def _embed(args, payload):
    p = _params(args)
    try:
        g = parse_table(payload[0], p.m)
    except ValueError as exc:
        raise ValueError(f"{exc} (embed reads tables over k(n-1)+1 = {p.m} letters)") from None
    return _table_out(embed_table(g, p), args)


def _psi(args, payload):
    x = psi(parse_table(payload[0], args.n))
    return x.to_json() if args.json else str(x)


def _orbit(args, payload):
    pts = [format_point(y) for y in enumerate_orbit(parse_point(payload[0]), args.n, _depth(args, 2))]
    return pts if args.json else " ".join(pts)


def _equiv(args, payload):
    x, y = (parse_point(t) for t in payload)
    result = equivalent(x, y, args.n)
    return result if args.json else str(result).lower()


def _act(args, payload):
    g = parse_table(payload[0], args.n)
    v = apply_sum(psi(g), FormalVector.delta(parse_point(payload[1]), args.n))
    y = v.unit_point()
    return format_point(y) if y is not None else str(v)


def _anchor(args, x, p):
    return None if args.anchor == "literal" else coding_image(x, p)


def _uimage(args, payload):
    p = _params(args)
    x, y = parse_point(args.x), parse_point(payload[0])
    try:
        z = u_image(y, x, p, anchor=_anchor(args, x, p))
    except TransportError as exc:
        raise PropertyFailure(str(exc)) from None
    return format_point(z)


def _matrix(args, payload):
    g = parse_table(payload[0], args.n)
    basis = enumerate_orbit(parse_point(args.x), args.n, _depth(args, 2))
    sec = matrix_section(psi(g), basis)
    if args.json:
        return sec.to_json()
    lines = ["basis: " + " ".join(format_point(y) for y in sec.basis)]
    lines += [f"{r} {c} {v}" for (r, c), v in sorted(sec.entries.items())]
    lines += [f"overflow {format_point(a)} -> {format_point(b)} {v}" for a, b, v in sec.overflow]
    return "\n".join(lines)


def _depth(args, default: int) -> int:
    return default if args.depth is None else args.depth


def _verify(args, payload):
    (name,) = payload
    n, k, seed = args.n, args.k, args.seed
    samples = 100 if args.samples is None else args.samples
    if name == "group":
        rep = suites.group_suite(n, samples, seed, _depth(args, 4))
    elif name == "psi":
        rep = suites.psi_suite(n, samples, seed, _depth(args, 4))
    elif name == "iota":
        rep = suites.iota_suite(n, k)
    elif name == "action":
        rep = suites.action_suite(n, parse_point(args.x), samples, seed, _depth(args, 5))
    elif name == "embedding":
        rep = suites.embedding_suite(n, k, samples, seed, _depth(args, 3))
    elif name == "intertwine":
        rep = suites.intertwine_suite(n, k, parse_point(args.x), samples, seed, _depth(args, 3),
                                      anchor=args.anchor)
    elif name == "crho":
        rep = suites.crho_suite(n)
    else:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(suites.SUITES)}")
    if args.json:
        out = {"suite": rep.name, "ok": rep.ok, "cases": rep.cases,
               "failures": len(rep.failures),
               "minimal_failure": rep.minimal_failure().description if rep.failures else None}
    else:
        out = rep.summary()
    if not rep.ok:
        raise PropertyFailure(out if not args.json else json.dumps(out))
    return out


COMMANDS: dict[str, tuple[int, Callable, str]] = {
    "parse": (1, _parse, "parse and print a payload in canonical form (see --kind)"),
    "reduce": (1, _reduce, "reduce a table to its minimal form"),
    "compose": (2, _compose, "g h -> the table of g∘h (h first)"),
    "invert": (1, _invert, "swap the columns of a table"),
    "classify": (1, _classify, "print F, T or V"),
    "eval": (2, _eval, "table point -> image of the point"),
    "embed": (1, _embed, "map a table over k(n-1)+1 letters into V_n"),
    "psi": (1, _psi, "the Cuntz sum of a table"),
    "orbit": (1, _orbit, "orbit points of x up to --depth preimage layers"),
    "equiv": (2, _equiv, "x y -> whether the orbits coincide"),
    "act": (2, _act, "table point -> Ψ(g) applied to the basis vector"),
    "uimage": (1, _uimage, "y -> U δ_y, with the orbit of --x in base k(n-1)+1"),
    "matrix": (1, _matrix, "finite section of Ψ(g) on the orbit of --x"),
    "verify": (1, _verify, f"run a property suite: {', '.join(suites.SUITES)}"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, default=2, help="alphabet size (default 2)")
    common.add_argument("--k", type=int, default=2, help="embedding parameter (default 2)")
    common.add_argument("--depth", type=int, default=None)
    common.add_argument("--samples", type=int, default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--x", default="0", help="base point of the orbit (default 0)")
    common.add_argument("--y", default=None, help="second point, where a command takes one")
    common.add_argument("--kind", default="table",
                        choices=["table", "word", "sum", "point", "interval", "plmap"])
    common.add_argument("--anchor", default="literal", choices=["literal", "coding"],
                        help="U δ_x = δ_x (literal) or δ at the digit-recoded point (coding)")
    parser = argparse.ArgumentParser(prog="htcuntz", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")
    for name, (_, _, text) in COMMANDS.items():
        sp = sub.add_parser(name, parents=[common], help=text, description=text)
        sp.add_argument("payload", nargs="*")
    return parser


def _render(out, as_json: bool) -> str:
    if as_json:
        return json.dumps(out, ensure_ascii=False)
    return str(out)


def _run_one(args, payload: list[str], stdout, stderr) -> int:
    arity, fn, _ = COMMANDS[args.command]
    if args.y is not None and len(payload) == arity - 1:
        payload = payload + [args.y]
    if len(payload) != arity:
        print(f"error: {args.command} takes {arity} payload(s), got {len(payload)}", file=stderr)
        return 2
    try:
        out = fn(args, payload)
    except PropertyFailure as exc:
        print(str(exc), file=stdout)
        return 1
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    print(_render(out, args.json), file=stdout)
    return 0


def main(argv: Sequence[str] | None = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.payload:
        return _run_one(args, list(args.payload), stdout, stderr)
    status = 0
    for line in stdin:
        if not line.strip():
            continue
        payload = [part.strip() for part in line.rstrip("\n").split(";")]
        status = max(status, _run_one(args, payload, stdout, stderr))
    return status


if __name__ == "__main__":
    sys.exit(main())
