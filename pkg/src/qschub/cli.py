"""Command-line front end.

Exit status: 0 success, 1 selftest failure, 2 bad input, 3 length bound
exceeded, 4 internal inconsistency (diagnostics on stderr).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from .affine import DEFAULT_LENGTH_BOUND, AffineWeylElement, AffineWeylGroup
from .cache import ResultCache, make_key
from .coefficients import c_all, d_row
from .errors import BoundExceeded, InadmissibleType, InconsistencyError
from .pontryagin import element_to_json, pontryagin_constants
from .quantum import (
    QuantumSum,
    equivariant_qconstants,
    equivariant_quantum_chevalley,
    gromov_witten,
    quantum_product,
)
from .rootsystem import RootSystem
from .symbolic import Polynomial

EXIT_USAGE = 2
EXIT_BOUND = 3
EXIT_INCONSISTENT = 4


class UsageError(ValueError):
    pass


# argument parsing

def parse_word(text: str, lo: int, hi: int, name: str) -> tuple[int, ...]:
    text = (text or "").replace(",", " ").strip()
    if text.lower() in ("", "id", "e"):
        return ()
    try:
        word = tuple(int(t) for t in text.split())
    except ValueError:
        raise UsageError(f"--{name}: expected whitespace-separated indices, got {text!r}") from None
    bad = [i for i in word if not lo <= i <= hi]
    if bad:
        raise UsageError(f"--{name}: indices must lie in {lo}..{hi}, got {bad}")
    return word


def parse_vector(text: str, n: int, name: str) -> tuple[int, ...]:
    try:
        vec = tuple(int(t) for t in (text or "").replace(",", " ").split())
    except ValueError:
        raise UsageError(f"--{name}: expected {n} integers, got {text!r}") from None
    if len(vec) != n:
        raise UsageError(f"--{name}: expected {n} integers, got {len(vec)}")
    return vec


def parse_finite(rs: RootSystem, text: str, name: str):
    return rs.word(*parse_word(text, 1, rs.rank, name))


def parse_affine(rs: RootSystem, text: str, name: str) -> AffineWeylElement:
    """A word over 0..n, or JSON {"word": [...]} / {"w": [...], "lambda": [...]}."""
    G = AffineWeylGroup.of(rs)
    text = (text or "").strip()
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--{name}: invalid JSON ({exc})") from None
        if "word" in data:
            return G.from_word(parse_word(" ".join(map(str, data["word"])), 0, rs.rank, name))
        if "w" in data:
            w = parse_finite(rs, " ".join(map(str, data["w"])), name)
            lam = parse_vector(" ".join(map(str, data.get("lambda", [0] * rs.rank))), rs.rank, name)
            return AffineWeylElement(w, lam)
        raise UsageError(f"--{name}: JSON element needs 'word' or 'w'")
    return G.from_word(parse_word(text, 0, rs.rank, name))


def _require(value, name: str):
    if value is None:
        raise UsageError(f"--{name} is required")
    return value


def _check_bound(bound: int, *elements) -> None:
    for e in elements:
        if e.length() > bound:
            raise BoundExceeded(f"{e!r} has length {e.length()} > bound {bound}")


# rendering

def _coef_text(c) -> str:
    return str(c)


def _coef_json(c):
    if isinstance(c, Polynomial):
        return c.to_json()
    return str(Fraction(c))


def _tuple_text(t) -> str:
    return "(" + ", ".join(map(str, t)) + ")"


def _word_text(word) -> str:
    return "[" + " ".join(map(str, word)) + "]"


def render_roots(rs: RootSystem, fmt: str) -> str:
    data = {
        "type": str(rs.lie_type),
        "cartan": [list(r) for r in rs.cartan],
        "positive_roots": [list(b) for b in rs.positive_roots],
        "theta": list(rs.theta),
        "theta_coroot": list(rs.theta_coroot),
        "weyl_order": rs.weyl_order(),
        "longest_element": list(rs.longest_element().reduced_word()),
    }
    if fmt == "json":
        return json.dumps(data, sort_keys=True)
    lines = [f"type {data['type']}", "cartan"]
    lines += ["  " + " ".join(f"{c:3d}" for c in row) for row in rs.cartan]
    lines.append(f"positive roots ({len(rs.positive_roots)})")
    lines += ["  " + _tuple_text(b) for b in rs.positive_roots]
    lines.append(f"theta {_tuple_text(rs.theta)}  theta^vee {_tuple_text(rs.theta_coroot)}")
    lines.append(f"|W| {data['weyl_order']}  w0 {_word_text(data['longest_element'])}")
    return "\n".join(lines)


def _elem_sort(e):
    return (e.length(), e.reduced_word())


def render_cd(x: AffineWeylElement, evaluated: bool, fmt: str) -> str:
    rs = x.rs
    c = c_all(x, evaluated).c_values
    d = d_row(x.reduced_word(), rs, evaluated)
    if fmt == "json":
        return json.dumps({
            "x": element_to_json(x),
            "evaluated": evaluated,
            "c": [{"y": element_to_json(y), "value": c[y].to_json()} for y in sorted(c, key=_elem_sort)],
            "d": [{"y": element_to_json(y), "value": d[y].to_json()} for y in sorted(d, key=_elem_sort)],
        }, sort_keys=True)
    lines = [f"x = {_word_text(x.reduced_word())}  length {x.length()}", "c_{x,y}"]
    lines += [f"  {_word_text(y.reduced_word())}  {c[y]}" for y in sorted(c, key=_elem_sort)]
    lines.append("d_{y,x}")
    lines += [f"  {_word_text(y.reduced_word())}  {d[y]}" for y in sorted(d, key=_elem_sort)]
    return "\n".join(lines)


def render_formal(fs, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(fs.to_json(), sort_keys=True)
    if not len(fs):
        return "0"
    return "\n".join(f"{_word_text(z.reduced_word())}  w {_word_text(z.w.reduced_word())}  "
                     f"lambda {_tuple_text(z.lam)}  {_coef_text(p)}" for z, p in fs.items())


def render_quantum(qs: QuantumSum, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(qs.to_json(), sort_keys=True)
    lines = [f"q {_tuple_text(lam)}  w {_word_text(w)}  coef {_coef_text(c)}" for lam, w, c in qs.rows()]
    if not lines:
        lines.append("0")
    if qs.choice is not None:
        ch = qs.choice
        lines.append(f"choice eta {_tuple_text(ch.eta)}  kappa {_tuple_text(ch.kappa)}  mu {_tuple_text(ch.mu)}")
    return "\n".join(lines)


# commands

def cmd_roots(args, rs):
    return render_roots(rs, args.format)


def cmd_cd(args, rs):
    x = parse_affine(rs, _require(args.u, "u"), "u")
    _check_bound(args.bound, x)
    return render_cd(x, not args.keep_delta, args.format)


def cmd_pontryagin(args, rs):
    x = parse_affine(rs, _require(args.u, "u"), "u")
    y = parse_affine(rs, _require(args.v, "v"), "v")
    _check_bound(args.bound, x, y)
    for name, e in (("u", x), ("v", y)):
        if not e.is_min_coset_rep():
            raise UsageError(f"--{name}: {e!r} is not a minimal coset representative")
    fs = pontryagin_constants(x, y, bound=args.bound, threads=args.threads)
    return render_formal(fs, args.format)


def cmd_qprod(args, rs):
    u = parse_finite(rs, _require(args.u, "u"), "u")
    v = parse_finite(rs, _require(args.v, "v"), "v")
    cache = ResultCache(os.environ.get("SCHUB_CACHE") or args.cache)
    key = make_key(rs.lie_type, u.reduced_word(), v.reduced_word(),
                   equivariant=bool(args.equivariant), strategy=args.strategy)
    qs = cache.get(key)
    if qs is None:
        if args.equivariant:
            qs = equivariant_qconstants(u, v, strategy=args.strategy, threads=args.threads, bound=args.bound)
        else:
            qs = quantum_product(u, v, strategy=args.strategy, threads=args.threads, bound=args.bound)
        cache.put(key, qs)
    return render_quantum(qs, args.format)


def cmd_gw(args, rs):
    u = parse_finite(rs, _require(args.u, "u"), "u")
    v = parse_finite(rs, _require(args.v, "v"), "v")
    w = parse_finite(rs, _require(args.w, "w"), "w")
    lam = parse_vector(_require(args.lam, "lambda"), rs.rank, "lambda")
    if any(c < 0 for c in lam):
        raise UsageError("--lambda: degrees must be non-negative")
    value = gromov_witten(u, v, w, lam, strategy=args.strategy)
    if args.format == "json":
        return json.dumps({"type": str(rs.lie_type), "u": list(u.reduced_word()), "v": list(v.reduced_word()),
                           "w": list(w.reduced_word()), "lambda": list(lam), "value": str(value)}, sort_keys=True)
    return str(value)


def cmd_chevalley(args, rs):
    i = _require(args.i, "i")
    if not 1 <= i <= rs.rank:
        raise UsageError(f"--i must lie in 1..{rs.rank}")
    u = parse_finite(rs, _require(args.u, "u"), "u")
    qs = equivariant_quantum_chevalley(i, u)
    if args.verify:
        got = equivariant_qconstants(rs.s(i), u, bound=args.bound, threads=args.threads)
        if got != qs:
            raise InconsistencyError(f"computed product {got} differs from the closed form {qs}")
    if not args.equivariant:
        qs = qs.at_zero()
    return render_quantum(qs, args.format)


def cmd_selftest(args, rs):
    from . import selftest
    numbers = None
    if args.criteria:
        numbers = [int(t) for t in args.criteria.replace(",", " ").split()]
        bad = [n for n in numbers if n not in selftest.CRITERIA]
        if bad:
            raise UsageError(f"--criteria: unknown criteria {bad}")
    ok = selftest.run(args.profile, numbers)
    return None if ok else 1


COMMANDS = {
    "roots": cmd_roots,
    "cd-coeff": cmd_cd,
    "pontryagin": cmd_pontryagin,
    "qprod": cmd_qprod,
    "gw": cmd_gw,
    "chevalley": cmd_chevalley,
    "selftest": cmd_selftest,
}


def _positive(text: str) -> int:
    n = int(text)
    if n <= 0:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", dest="lie_type", help="Lie type such as A2, B3, G2")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--cache", help="JSON-lines result cache (SCHUB_CACHE overrides)")
    common.add_argument("--bound", type=_positive, default=DEFAULT_LENGTH_BOUND, help="length bound")
    common.add_argument("--threads", type=_positive, default=1)

    p = argparse.ArgumentParser(prog="qschub", description="Exact quantum Schubert calculus via loop groups.")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("roots", parents=[common], help="root system data")
    q = sub.add_parser("cd-coeff", parents=[common], help="c and d tables of an affine element")
    q.add_argument("--u", help="affine element: word over 0..n or JSON")
    q.add_argument("--keep-delta", action="store_true", help="do not evaluate at delta = 0")
    q = sub.add_parser("pontryagin", parents=[common], help="Pontryagin structure constants")
    q.add_argument("--u", help="first factor in W_af^-")
    q.add_argument("--v", help="second factor in W_af^-")
    for name, helptext in (("qprod", "quantum product sigma^u * sigma^v"), ("gw", "Gromov-Witten invariant"),
                           ("chevalley", "equivariant quantum Chevalley formula")):
        q = sub.add_parser(name, parents=[common], help=helptext)
        q.add_argument("--u")
        q.add_argument("--strategy", choices=("minimal", "uniform"), default="minimal")
        q.add_argument("--equivariant", action="store_true", help="keep polynomial coefficients")
        if name != "chevalley":
            q.add_argument("--v")
        if name == "gw":
            q.add_argument("--w")
            q.add_argument("--lambda", dest="lam")
        if name == "chevalley":
            q.add_argument("--i", type=int)
            q.add_argument("--verify", action="store_true", help="recompute through the loop group")
    q = sub.add_parser("selftest", parents=[common], help="acceptance suite")
    q.add_argument("--profile", choices=("quick", "full"), default="quick")
    q.add_argument("--criteria", help="subset such as '1 3 5'")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rs = None
        if args.command != "selftest":
            rs = RootSystem.of(_require(args.lie_type, "type"))
        out = COMMANDS[args.command](args, rs)
    except (UsageError, InadmissibleType, ValueError) as exc:
        print(f"qschub: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BoundExceeded as exc:
        print(f"qschub: bound exceeded: {exc}", file=sys.stderr)
        return EXIT_BOUND
    except InconsistencyError as exc:
        print(f"qschub: internal inconsistency: {exc}", file=sys.stderr)
        print("diagnostic: " + json.dumps({k: v for k, v in vars(args).items()}, sort_keys=True, default=str),
              file=sys.stderr)
        return EXIT_INCONSISTENT
    if isinstance(out, int):
        return out
    if out is not None:
        print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
