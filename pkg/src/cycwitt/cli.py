"""Command-line front end.

Witt elements are written in a small expression grammar::

    expression := ['+'|'-'] term (('+'|'-') term)*
    term       := [unsigned-integer '*']? 'phi(' positive-integer ')'
                | unsigned-integer          # a multiple of phi(1)

Whitespace is insignificant.  The printer emits the canonical form
(terms ascending by index, zero omitted, bare integers for phi(1)
multiples), and printing then parsing is the identity on canonical
elements.  Matrices are written 'a,b;c,d'.  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lambda_ops, linalg, rigs, spectra, witt
from .arith import euler_phi, ramanujan_sum
from .witt import WittElement

class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


def parse_witt(text: str) -> WittElement:
    """Parse the expression grammar into a canonical element."""
    i = 0
    n = len(text)
    coeffs: dict[int, int] = {}

    def skip_ws():
        nonlocal i
        while i < n and text[i].isspace():
            i += 1

    def read_int() -> int:
        nonlocal i
        start = i
        while i < n and text[i].isdigit():
            i += 1
        if i == start:
            raise ParseError("expected an integer", start)
        return int(text[start:i])

    def read_term(sign: int):
        nonlocal i
        skip_ws()
        start = i
        if i < n and text[i].isdigit():
            value = read_int()
            skip_ws()
            if i < n and text[i] == "*":
                i += 1
                skip_ws()
                idx = read_phi(start)
                coeffs[idx] = coeffs.get(idx, 0) + sign * value
            else:
                coeffs[1] = coeffs.get(1, 0) + sign * value
        elif text.startswith("phi", i):
            idx = read_phi(start)
            coeffs[idx] = coeffs.get(idx, 0) + sign
        else:
            raise ParseError("expected a term", i)

    def read_phi(term_start: int) -> int:
        nonlocal i
        if not text.startswith("phi", i):
            raise ParseError("expected 'phi('", i)
        i += 3
        skip_ws()
        if i >= n or text[i] != "(":
            raise ParseError("expected '(' after 'phi'", i)
        i += 1
        skip_ws()
        idx = read_int()
        if idx < 1:
            raise ParseError("phi() index must be a positive integer", term_start)
        skip_ws()
        if i >= n or text[i] != ")":
            raise ParseError("expected ')'", i)
        i += 1
        return idx

    skip_ws()
    if i == n:
        raise ParseError("empty expression", 0)
    sign = 1
    if text[i] in "+-":
        sign = -1 if text[i] == "-" else 1
        i += 1
    read_term(sign)
    skip_ws()
    while i < n:
        if text[i] not in "+-":
            raise ParseError("expected '+' or '-'", i)
        sign = -1 if text[i] == "-" else 1
        i += 1
        read_term(sign)
        skip_ws()
    return WittElement(coeffs)


def format_witt(w: WittElement) -> str:
    """Canonical text: ascending indices, phi(1) multiples as bare integers."""
    if w.is_zero():
        return "0"
    parts = []
    for n, c in w.items():
        mag = abs(c)
        if n == 1:
            body = str(mag)
        elif mag == 1:
            body = f"phi({n})"
        else:
            body = f"{mag}*phi({n})"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def _format_coeff_descending(w: WittElement) -> str:
    # inside series coefficients the display follows the classical table:
    # indices descending, phi(1) written explicitly
    parts = []
    for n, c in sorted(w.items(), reverse=True):
        mag = abs(c)
        body = f"phi({n})" if mag == 1 else f"{mag}*phi({n})"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def format_series(s: lambda_ops.WittSeries, var: str = "t") -> str:
    """Series display with explicit signs, powers of t ascending."""
    parts: list[str] = []
    for k in range(s.degree + 1):
        c = s[k]
        if c.is_zero():
            continue
        negative = all(v < 0 for _, v in c.items())
        shown = -c if negative else c
        items = shown.items()
        if k == 0:
            body = format_witt(shown)
        else:
            power = var if k == 1 else f"{var}^{k}"
            if items == ((1, 1),):
                body = power
            elif len(items) == 1 and items[0][0] == 1:
                body = f"{power}*{items[0][1]}"
            elif len(items) == 1 and items[0][1] == 1:
                body = f"{power}*phi({items[0][0]})"
            else:
                body = f"{power}*({_format_coeff_descending(shown)})"
        if not parts:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts) if parts else "0"


def lambda_line(n: int) -> str:
    series = lambda_ops.lambda_series(witt.phi(n), euler_phi(n))
    return f"lambda_t(phi({n})) = {format_series(series)}"


def ramanujan_table(n_max: int, m_max: int) -> str:
    rows = [[ramanujan_sum(n, m) for m in range(1, m_max + 1)] for n in range(1, n_max + 1)]
    width = max(len(str(v)) for row in rows for v in row)
    width = max(width, len(str(m_max)))
    label = "n\\m"
    label_w = max(len(label), len(str(n_max)))
    header = f"{label:>{label_w}} |" + "".join(f" {m:>{width}}" for m in range(1, m_max + 1))
    lines = [header, "-" * len(header)]
    for n, row in enumerate(rows, start=1):
        lines.append(f"{n:>{label_w}} |" + "".join(f" {v:>{width}}" for v in row))
    return "\n".join(lines)


def _emit(args, text_lines, json_obj) -> None:
    if args.json:
        print(json.dumps(json_obj, sort_keys=True, separators=(", ", ": ")))
    else:
        for line in text_lines:
            print(line)


def _cmd_binop(args):
    a, b = parse_witt(args.a), parse_witt(args.b)
    if args.op == "mul":
        out = witt.mul(a, b)
        _emit(args, [format_witt(out)], {"result": out.to_pairs()})
    else:
        val = witt.inner(a, b)
        _emit(args, [str(val)], {"value": val})
    return 0


def _cmd_unop(args):
    a = parse_witt(args.a)
    if args.op == "trace":
        val = witt.trace(a)
    elif args.op == "f0":
        val = witt.f0(a)
    else:
        val = witt.integral(a)
    _emit(args, [str(val)], {"value": val})
    return 0


def _cmd_indexed(args):
    a = parse_witt(args.a)
    if args.op == "frob":
        out = witt.frobenius(args.m, a)
        _emit(args, [format_witt(out)], {"result": out.to_pairs()})
    elif args.op == "versch":
        out = witt.verschiebung(args.m, a)
        _emit(args, [format_witt(out)], {"result": out.to_pairs()})
    else:
        val = witt.t_m(args.m, a)
        _emit(args, [str(val)], {"value": val})
    return 0


def _cmd_lambda(args):
    n = args.n
    series = lambda_ops.lambda_series(witt.phi(n), euler_phi(n))
    obj = {"n": n, "coefficients": [series[k].to_pairs() for k in range(series.degree + 1)]}
    _emit(args, [format_series(series)], obj)
    return 0


def _cmd_lambda_table(args):
    lines = [lambda_line(n) for n in range(1, args.max + 1)]
    obj = {
        "table": [
            {
                "n": n,
                "coefficients": [
                    lambda_ops.lambda_series(witt.phi(n), euler_phi(n))[k].to_pairs()
                    for k in range(euler_phi(n) + 1)
                ],
            }
            for n in range(1, args.max + 1)
        ]
    }
    _emit(args, lines, obj)
    return 0


def _cmd_gamma_filtration(args):
    filt = lambda_ops.gamma_filtration(args.level, args.depth)
    lines = [
        f"gamma filtration on the divisor span of {args.level} "
        f"(divisors {list(filt.divisors)}), depth {args.depth}"
    ]
    for k, lat in enumerate(filt.lattices):
        lines.append(f"I_{k}: rank {lat.rank}")
        for row in lat.basis:
            lines.append("  " + str(list(row)))
    obj = {
        "level": args.level,
        "depth": args.depth,
        "divisors": list(filt.divisors),
        "lattices": [
            {"index": k, "rank": lat.rank, "basis": [list(r) for r in lat.basis]}
            for k, lat in enumerate(filt.lattices)
        ],
    }
    _emit(args, lines, obj)
    return 0


def _cmd_ramanujan(args):
    table = ramanujan_table(args.n, args.m_max)
    obj = {
        "n_max": args.n,
        "m_max": args.m_max,
        "rows": [
            [ramanujan_sum(n, m) for m in range(1, args.m_max + 1)]
            for n in range(1, args.n + 1)
        ],
    }
    _emit(args, table.splitlines(), obj)
    return 0


def _cmd_parseval(args):
    report = witt.parseval_check(args.N)
    obj = {
        "N": args.N,
        "ok": report.ok,
        "pairs_checked": report.pairs_checked,
        "failures": [[n, m, str(l), str(r)] for n, m, l, r in report.failures],
    }
    _emit(args, [report.summary()], obj)
    return 0 if report.ok else 1


def _cmd_charpoly(args):
    a = linalg.parse_matrix(args.matrix)
    if a.rows != a.cols:
        print("error: matrix must be square", file=sys.stderr)
        return 2
    p = linalg.charpoly_rev(a)
    _emit(args, [p.pretty("x")], {"coefficients": list(p.coeffs)})
    return 0


def _cmd_wittclass(args):
    a = linalg.parse_matrix(args.matrix)
    if a.rows != a.cols:
        print("error: matrix must be square", file=sys.stderr)
        return 2
    try:
        w = linalg.witt_class(a)
    except linalg.NotUnitSpectrum as exc:
        print(f"not a unit-spectrum matrix: {exc}", file=sys.stderr)
        return 1
    _emit(args, [format_witt(w)], {"result": w.to_pairs()})
    return 0


def _cmd_sections(args):
    report = rigs.global_sections(args.rows, args.cols, args.bound)
    obj = {
        "rows": args.rows,
        "cols": args.cols,
        "bound": args.bound,
        "count": len(report.matrices),
        "ok": report.ok,
        "matrices": [[list(r) for r in m.entries] for m in report.matrices],
    }
    _emit(args, [report.summary()], obj)
    return 0 if report.ok else 1


def _load_finite_rig(name: str) -> spectra.FiniteCRig:
    if name.startswith("file:"):
        with open(name[5:], encoding="utf-8") as f:
            return spectra.FiniteCRig.from_text(f.read())
    return spectra.finite_rig_by_name(name)


def _cmd_spec(args):
    r = _load_finite_rig(args.rig)
    sp = spectra.spec(r)
    lines = [f"spec {r.name}: {len(sp.primes)} prime(s)"]
    lines += ["  " + r.describe(p) for p in sp.primes]
    obj = {"rig": r.name, "primes": [sorted(p) for p in sp.primes]}
    _emit(args, lines, obj)
    return 0


def _cmd_radical(args):
    r = _load_finite_rig(args.rig)
    seed = [r.element_by_name(s.strip()) for s in args.ideal.split(",")] if args.ideal else []
    ideal = spectra.ideal_generated(r, seed)
    rad = spectra.radical(r, ideal)
    lines = [
        f"radical over {r.name} of ideal {r.describe(ideal.elements)}: "
        f"{r.describe(rad.elements)} (power test == prime intersection)"
    ]
    obj = {
        "rig": r.name,
        "ideal": sorted(ideal.elements),
        "radical": sorted(rad.elements),
        "agrees": True,
    }
    _emit(args, lines, obj)
    return 0


def _cmd_theorem1(args):
    r = _load_finite_rig(args.rig)
    s = r.element_by_name(args.s)
    report = spectra.theorem1_check(r, s)
    obj = {
        "rig": r.name,
        "s": s,
        "ok": report.ok,
        "opens": [sorted(p) for p in report.opens],
        "fractions": report.loc_size,
        "local_families": report.local_families,
    }
    _emit(args, [report.summary()], obj)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cycwitt",
        description="exact cyclotomic Witt ring calculator and verification suite",
    )
    parser.add_argument("--json", action="store_true", help="stable machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mul", help="product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_binop, op="mul")

    p = sub.add_parser("inner", help="inner product of two elements")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(fn=_cmd_binop, op="inner")

    for name, hl in (("trace", "trace projection"), ("f0", "root-count projection"),
                     ("integral", "coefficient of phi(1)")):
        p = sub.add_parser(name, help=hl)
        p.add_argument("a")
        p.set_defaults(fn=_cmd_unop, op=name)

    p = sub.add_parser("frob", help="power operator F_m")
    p.add_argument("m", type=int)
    p.add_argument("a")
    p.set_defaults(fn=_cmd_indexed, op="frob")

    p = sub.add_parser("versch", help="index multiplication V_m")
    p.add_argument("m", type=int)
    p.add_argument("a")
    p.set_defaults(fn=_cmd_indexed, op="versch")

    p = sub.add_parser("tm", help="trace of F_m (Ramanujan sums on the basis)")
    p.add_argument("m", type=int)
    p.add_argument("a")
    p.set_defaults(fn=_cmd_indexed, op="tm")

    p = sub.add_parser("lambda", help="lambda_t series of phi(n)")
    p.add_argument("n", type=int)
    p.set_defaults(fn=_cmd_lambda)

    p = sub.add_parser("lambda-table", help="lambda_t table for n = 1..max")
    p.add_argument("max", type=int)
    p.set_defaults(fn=_cmd_lambda_table)

    p = sub.add_parser("gamma-filtration", help="gamma filtration lattices")
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(fn=_cmd_gamma_filtration)

    p = sub.add_parser("ramanujan", help="table of Ramanujan sums")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m-max", type=int, required=True)
    p.set_defaults(fn=_cmd_ramanujan)

    p = sub.add_parser("parseval", help="finite Fourier orthogonality check")
    p.add_argument("N", type=int)
    p.set_defaults(fn=_cmd_parseval)

    p = sub.add_parser("charpoly", help="det(1 - x*A) of an integer matrix")
    p.add_argument("matrix")
    p.set_defaults(fn=_cmd_charpoly)

    p = sub.add_parser("wittclass", help="orbit classes of a unit-spectrum matrix")
    p.add_argument("matrix")
    p.set_defaults(fn=_cmd_wittclass)

    p = sub.add_parser("sections", help="integer norm-contractions of a shape")
    p.add_argument("--rows", type=int, required=True)
    p.add_argument("--cols", type=int, required=True)
    p.add_argument("--bound", type=int, default=1)
    p.set_defaults(fn=_cmd_sections)

    p = sub.add_parser("spec", help="primes of a finite rig")
    p.add_argument("--rig", required=True)
    p.set_defaults(fn=_cmd_spec)

    p = sub.add_parser("radical", help="radical of an ideal in a finite rig")
    p.add_argument("--rig", required=True)
    p.add_argument("--ideal", default="")
    p.set_defaults(fn=_cmd_radical)

    p = sub.add_parser("theorem1", help="structure sheaf check on a basic open")
    p.add_argument("--rig", required=True)
    p.add_argument("--s", required=True)
    p.set_defaults(fn=_cmd_theorem1)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
