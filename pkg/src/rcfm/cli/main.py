"""Command line front end: ``rcfm <command> [options]``."""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from importlib import resources

from .. import fredholm as fh
from .. import tj
from ..errors import RcfmError
from ..exact import format_scalar, parse_scalar
from ..matrix import (
    HyperDiagonal,
    RcfMatrix,
    deserialize,
    entry,
    identity,
    load,
    mod_finite_equal,
    mul,
    scalar_mul,
    serialize,
    unit,
    window,
)
from .expr import eval_text, parse_ratfunc

COMMANDS = (
    "show",
    "entry",
    "isfinite",
    "equals",
    "kernel",
    "cokernel-witnessed",
    "index",
    "decide-toeplitz",
    "refute",
    "tj-map",
    "tj-check",
    "tj-equiv",
    "tj-distinguish",
    "ideal-unit",
)


def report_schema() -> dict:
    text = resources.files(__package__).joinpath("report.schema.json").read_text(encoding="utf-8")
    return json.loads(text)


def render_window(A: RcfMatrix, rows: int, cols: int) -> str:
    """Aligned grid of the leading ``rows x cols`` block with 1-based labels."""
    if rows < 1 or cols < 1:
        raise ValueError("window needs at least one row and one column")
    cells = [[format_scalar(v) for v in line] for line in window(A, (1, rows), (1, cols))]
    label_w = len(str(rows))
    widths = [max(len(str(c + 1)), *(len(cells[r][c]) for r in range(rows))) for c in range(cols)]
    head = " " * label_w + " | " + " ".join(str(c + 1).rjust(widths[c]) for c in range(cols))
    lines = [head, "-" * len(head)]
    for r in range(rows):
        body = " ".join(cells[r][c].rjust(widths[c]) for c in range(cols))
        lines.append(f"{str(r + 1).rjust(label_w)} | {body}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# argument handling


def _read_expr(text: str) -> str:
    return sys.stdin.read() if text == "-" else text


def _env(args) -> dict[str, RcfMatrix]:
    env = {}
    for binding in args.bind or ():
        name, sep, path = binding.partition("=")
        if not sep or not name:
            raise ValueError(f"--bind expects NAME=FILE, got {binding!r}")
        env[name] = load(path)
    return env


def _matrix(args, env) -> RcfMatrix:
    if getattr(args, "file", None):
        return load(args.file)
    if not getattr(args, "expr", None):
        raise SystemExit("error: one of --expr or --file is required")
    return eval_text(_read_expr(args.expr), env)


def _witness(args, env) -> fh.FredholmWitness:
    A = _matrix(args, env)
    if not args.inverse:
        raise SystemExit("error: --inverse is required for this command")
    return fh.witness_verify(A, eval_text(args.inverse, env))


def _kernel_json(A, max_n=None) -> dict:
    rep, basis = fh.kernel_dim(A, with_basis=True)
    out = {**rep.to_json(), "basis": [v.to_json() for v in basis]}
    if max_n is not None and rep.finite:
        M = rep.certificate["kernel_bound"]
        out["oracle"] = {str(n): fh.truncation_nullity(A, n) for n in range(max(M, 1), max(M, max_n) + 1)}
    return out


def _tj_element(text: str) -> tj.TJElement:
    """Parse ``"2*yx - x + 1/3*yy"`` style text into an element."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty TJ element")
    terms = []
    k = 0
    while k < len(s):
        sign = 1
        if s[k] in "+-":
            sign = -1 if s[k] == "-" else 1
            k += 1
        m = k
        while m < len(s) and s[m] not in "+-":
            m += 1
        piece = s[k:m]
        k = m
        coeff, star, word = piece.rpartition("*")
        if not star:
            if piece and piece[0].isdigit():
                coeff, word = piece, ""
            else:
                coeff, word = "1", piece
        terms.append((sign * parse_scalar(coeff), "" if word == "1" else word))
    return tj.tj_normalize(terms)


# ---------------------------------------------------------------------------
# commands


def cmd_show(args, env):
    A = _matrix(args, env)
    return {
        "command": "show",
        "finite": A.is_finite(),
        "matrix": serialize(A),
        "window": {"rows": args.rows, "cols": args.cols,
                   "values": [[format_scalar(v) for v in line] for line in window(A, (1, args.rows), (1, args.cols))]},
    }


def cmd_entry(args, env):
    A = _matrix(args, env)
    return {"command": "entry", "i": args.i, "j": args.j, "value": format_scalar(entry(A, args.i, args.j))}


def cmd_isfinite(args, env):
    return {"command": "isfinite", "finite": _matrix(args, env).is_finite()}


def cmd_equals(args, env):
    A = _matrix(args, env)
    B = eval_text(args.other, env)
    return {"command": "equals", "equal": A == B, "mod_finite_equal": mod_finite_equal(A, B)}


def cmd_kernel(args, env):
    return {"command": "kernel", "kernel": _kernel_json(_matrix(args, env), args.max_n)}


def cmd_cokernel(args, env):
    W = _witness(args, env)
    return {"command": "cokernel-witnessed", "cokernel": fh.cokernel_dim_witnessed(W).to_json()}


def cmd_index(args, env):
    W = _witness(args, env)
    return {"command": "index", **fh.index_report(W)}


def cmd_decide(args, env):
    A = _matrix(args, env)
    res = fh.toeplitz_fredholm_decide(A)
    if isinstance(res, fh.Fredholm):
        return {
            "command": "decide-toeplitz",
            "result": "Fredholm",
            "symbol": fh.format_symbol(fh.symbol_of(A)),
            "index": res.index,
            "inverse": serialize(res.witness.a0),
        }
    return {
        "command": "decide-toeplitz",
        "result": "NotFredholmInClass",
        "symbol": fh.format_symbol(res.symbol),
        "reason": res.reason,
    }


def cmd_refute(args, env):
    A = _matrix(args, env)
    res = fh.banded_inverse_refute(A, args.bandwidth, args.tail_degree, args.head)
    if isinstance(res, fh.RefutationCertificate):
        return {"command": "refute", **res.to_json()}
    return {
        "command": "refute",
        "result": "CounterexampleWitness",
        "bandwidth": args.bandwidth,
        "tail_degree": args.tail_degree,
        "head": args.head,
        "inverse": serialize(res.inverse),
    }


def cmd_tj_map(args, env):
    E = tj.embedding(args.embedding)
    t = _tj_element(args.element)
    M = tj.tj_embed(E, t)
    return {
        "command": "tj-map",
        "embedding": E.name,
        "element": t.to_json(),
        "matrix": serialize(M),
        "window": {"rows": args.rows, "cols": args.cols,
                   "values": [[format_scalar(v) for v in line] for line in window(M, (1, args.rows), (1, args.cols))]},
    }


def cmd_tj_check(args, env):
    E = tj.embedding(args.embedding)
    rng = random.Random(args.seed)
    passed = 0
    for _ in range(args.samples):
        u, v = tj.random_element(rng), tj.random_element(rng)
        passed += tj.embedding_hom_check(E, u, v)
    return {
        "command": "tj-check",
        "embedding": E.name,
        "relation": mul(E.image_x, E.image_y) == identity(),
        "homomorphism": {"samples": args.samples, "passed": passed, "seed": args.seed},
        "injective_up_to": args.degree,
        "injective": tj.injectivity_check(E, args.degree),
    }


def cmd_tj_equiv(args, env):
    E1, E2 = tj.embedding(args.first), tj.embedding(args.second)
    if args.conj:
        a1, _, ratio = args.conj.partition(";")
        U = HyperDiagonal(parse_scalar(a1.strip()), parse_ratfunc(ratio))
        via = {"hyper": {"a1": format_scalar(U.a1), "ratio": str(U.ratio)}}
    elif args.U and args.Uinv:
        U = (eval_text(args.U, env), eval_text(args.Uinv, env))
        via = {"pair": True}
    else:
        raise SystemExit("error: tj-equiv needs --conj or both --U and --Uinv")
    return {"command": "tj-equiv", "first": E1.name, "second": E2.name,
            "equivalent": tj.equivalence_check(E1, E2, U), "via": via}


def cmd_tj_distinguish(args, env):
    res = tj.index_obstruction(tj.embedding(args.first), tj.embedding(args.second))
    return {"command": "tj-distinguish", "result": type(res).__name__, "indices": [res.index1, res.index2]}


def cmd_ideal_unit(args, env):
    a = _matrix(args, env)
    left, c, right = fh.matrix_unit_from_ideal(a, args.k, args.l)
    check = scalar_mul(c, mul(mul(left, a), right)) == unit(args.k, args.l)
    return {"command": "ideal-unit", "left": serialize(left), "c": format_scalar(c),
            "right": serialize(right), "check": check}


HANDLERS = {
    "show": cmd_show,
    "entry": cmd_entry,
    "isfinite": cmd_isfinite,
    "equals": cmd_equals,
    "kernel": cmd_kernel,
    "cokernel-witnessed": cmd_cokernel,
    "index": cmd_index,
    "decide-toeplitz": cmd_decide,
    "refute": cmd_refute,
    "tj-map": cmd_tj_map,
    "tj-check": cmd_tj_check,
    "tj-equiv": cmd_tj_equiv,
    "tj-distinguish": cmd_tj_distinguish,
    "ideal-unit": cmd_ideal_unit,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rcfm", description="Exact Fredholm theory for row-and-column-finite matrices")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def matrix_cmd(name, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--expr", help="matrix expression ('-' reads stdin)")
        p.add_argument("--file", help="matrix in .rcfm.json format")
        p.add_argument("--bind", action="append", metavar="NAME=FILE", help="bind an identifier to a .rcfm.json file")
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        return p

    p = matrix_cmd("show", "print a matrix window and its canonical description")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=6)
    p = matrix_cmd("entry", "one exact entry")
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--j", type=int, required=True)
    matrix_cmd("isfinite", "is the matrix finite?")
    p = matrix_cmd("equals", "exact and modulo-finite equality")
    p.add_argument("--other", required=True)
    p = matrix_cmd("kernel", "kernel dimension with certificate")
    p.add_argument("--max-n", type=int, default=24, dest="max_n")
    for name in ("cokernel-witnessed", "index"):
        p = matrix_cmd(name, "needs a Fredholm inverse")
        p.add_argument("--inverse", required=True)
    matrix_cmd("decide-toeplitz", "Fredholm decision for constant-diagonal matrices")
    p = matrix_cmd("refute", "exact search for a banded inverse modulo finite matrices")
    p.add_argument("--bandwidth", type=int, default=4)
    p.add_argument("--tail-degree", type=int, default=2, dest="tail_degree")
    p.add_argument("--head", type=int, default=6)
    p = matrix_cmd("ideal-unit", "recover e_kl from a nonzero finite matrix")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)

    p = sub.add_parser("tj-map", help="image of an element of <x,y | xy=1>")
    p.add_argument("embedding")
    p.add_argument("element")
    p.add_argument("--rows", type=int, default=6)
    p.add_argument("--cols", type=int, default=6)
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = sub.add_parser("tj-check", help="relation, homomorphism and injectivity checks")
    p.add_argument("embedding")
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--degree", type=int, default=3)
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = sub.add_parser("tj-equiv", help="check a conjugation between embeddings")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--conj", help="hyperdiagonal 'a1; ratio', e.g. '1; j+1'")
    p.add_argument("--U")
    p.add_argument("--Uinv")
    p.add_argument("--bind", action="append", metavar="NAME=FILE")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    p = sub.add_parser("tj-distinguish", help="index obstruction between embeddings")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
    return parser


# ---------------------------------------------------------------------------
# output


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (dict, list)):
        return json.dumps(v, separators=(",", ":"))
    return str(v)


def render_text(report: dict) -> str:
    """One ``key: value`` line per field; nested values as compact JSON."""
    lines = []
    if "error" in report:
        err = report["error"]
        return f"error: {err['type']}: {err['message']}"
    if report.get("command") == "tj-distinguish":
        lines.append(f"{report['result']} {report['indices'][0]} {report['indices'][1]}")
    for key, v in report.items():
        if key in ("window",):
            continue
        lines.append(f"{key}: {_text_value(v)}")
    if "window" in report:
        M = deserialize(report["matrix"])
        lines.append(render_window(M, report["window"]["rows"], report["window"]["cols"]))
    return "\n".join(lines)


def emit(report: dict, fmt: str, stream=None) -> None:
    if stream is None:
        stream = sys.stderr if ("error" in report and fmt == "text") else sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, indent=2) + "\n")
    else:
        stream.write(render_text(report) + "\n")


def run(argv=None, stream=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = os.environ.get("RCFM_FORMAT") or args.format
    if fmt not in ("text", "json"):
        parser.error(f"RCFM_FORMAT must be 'text' or 'json', got {fmt!r}")
    try:
        env = _env(args) if hasattr(args, "bind") else {}
        report = HANDLERS[args.command](args, env)
    except (RcfmError, NameError, ValueError, OSError) as exc:
        kind = exc.kind if isinstance(exc, RcfmError) else type(exc).__name__
        emit({"command": args.command, "error": {"type": kind, "message": str(exc)}}, fmt, stream)
        return 1
    emit(report, fmt, stream)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
