"""Command-line entry point.

Exit status: 0 for success or a true answer, 1 for a false answer or a
failed verification, 2 for usage errors and malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import lr, suites
from .jdt import dual_classes, dual_equivalent, rectify, switch
from .poly import format_poly, is_perfect_square, parse_poly
from .shapes import (
    ShapeError,
    SkewShape,
    conjugate,
    contains,
    count_sst,
    count_syt,
    format_partition,
    parse_partition,
    tilde,
)
from .tableaux import (
    TableauError,
    double,
    enumerate_shifted,
    enumerate_standard,
    format_tableau,
    is_symmetrical,
    parse_tableau,
    subtableau,
    undouble,
)
from .wronski import (
    Subspace,
    bilinear,
    check_points,
    flag,
    in_schubert_gr,
    in_schubert_og,
    is_isotropic,
    parse_point,
    point_multiplicity,
    random_isotropic,
    random_subspace_at,
    random_isotropic_at,
    verify_divisibility,
    wronskian,
)

SCHEMA = 1

FORMATS = """\
formats:
  partition   comma-separated parts, "-" for empty          e.g. 4,3,1
  tableau     one row per line, "." for inner cells; a first line
              "shifted" marks a shifted tableau whose row j starts with
              j-1 extra dots                                  e.g. ". 2\\n1 3"
  polynomial  coefficients c0,c1,...,c2n, exact rationals     e.g. 1,-3/2,0,0,1
  subspace    header "n=<N>" then one polynomial per line     e.g. "n=1\\n1,2,1"
  point       a rational or "inf"                             e.g. -3/2
"""


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def read_subspace(path: str) -> Subspace:
    lines = [ln.strip() for ln in _read(path).splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].replace(" ", "").startswith("n="):
        raise UsageError(f"{path}: subspace files start with a header line 'n=<N>'")
    try:
        n = int(lines[0].replace(" ", "")[2:])
    except ValueError:
        raise UsageError(f"{path}: malformed header {lines[0]!r}") from None
    return Subspace(n, tuple(parse_poly(ln) for ln in lines[1:]))


def format_subspace(x: Subspace) -> str:
    return "\n".join([f"n={x.n}"] + [format_poly(p, 2 * x.n + 1) for p in x.basis])


def _skew(args: argparse.Namespace, shifted: bool) -> SkewShape:
    return SkewShape(parse_partition(args.outer, shifted), parse_partition(args.inner, shifted), shifted)


def _tableau(path: str, shifted: bool) -> Any:
    return parse_tableau(_read(path), shifted=shifted)


class Output:
    """Collects text and JSON payloads so every verb can honour --json."""

    def __init__(self, as_json: bool, verb: str):
        self.as_json = as_json
        self.verb = verb
        self.lines: list[str] = []
        self.payload: Any = None

    def emit(self, text: str, payload: Any) -> None:
        self.lines.append(text)
        self.payload = payload

    def flush(self) -> None:
        if self.as_json:
            print(json.dumps({"schema": SCHEMA, "verb": self.verb, "result": self.payload}, sort_keys=True))
        else:
            for line in self.lines:
                print(line)


def _boolean(out: Output, value: bool) -> int:
    out.emit("true" if value else "false", value)
    return 0 if value else 1


def _tableau_payload(t) -> dict:
    return {"shifted": t.shifted, "outer": list(t.shape.outer), "inner": list(t.shape.inner),
            "rows": [list(r) for r in t.rows]}


# -- verbs --------------------------------------------------------------------

def cmd_shape(args, out: Output) -> int:
    if args.op == "tilde":
        if args.n is None:
            raise UsageError("shape tilde needs -n")
        lam = tilde(parse_partition(args.first, strict=True), args.n)
        out.emit(format_partition(lam), list(lam))
    elif args.op == "conjugate":
        lam = conjugate(parse_partition(args.first))
        out.emit(format_partition(lam), list(lam))
    else:
        if args.second is None:
            raise UsageError("shape contains needs two partitions")
        return _boolean(out, contains(parse_partition(args.first), parse_partition(args.second)))
    return 0


def cmd_count(args, out: Output) -> int:
    shifted = args.kind == "sst" or args.shifted
    shape = _skew(args, shifted)
    value = count_sst(shape) if shifted else count_syt(shape)
    out.emit(str(value), value)
    return 0


def cmd_enumerate(args, out: Output) -> int:
    shifted = args.kind == "sst" or args.shifted
    shape = _skew(args, shifted)
    tabs = enumerate_shifted(shape, args.cap) if shifted else enumerate_standard(shape, args.cap)
    out.emit("\n\n".join(format_tableau(t) for t in tabs), [_tableau_payload(t) for t in tabs])
    return 0


def cmd_double(args, out: Output) -> int:
    t = double(_tableau(args.file, True))
    out.emit(format_tableau(t), _tableau_payload(t))
    return 0


def cmd_undouble(args, out: Output) -> int:
    t = undouble(_tableau(args.file, False))
    out.emit(format_tableau(t), _tableau_payload(t))
    return 0


def cmd_symmetrical(args, out: Output) -> int:
    return _boolean(out, is_symmetrical(_tableau(args.file, False)))


def cmd_subtableau(args, out: Output) -> int:
    t = subtableau(_tableau(args.file, args.shifted), args.lo, args.hi)
    out.emit(format_tableau(t), _tableau_payload(t))
    return 0


def cmd_rectify(args, out: Output) -> int:
    t = rectify(_tableau(args.file, args.shifted))
    out.emit(format_tableau(t), _tableau_payload(t))
    return 0


def cmd_switch(args, out: Output) -> int:
    res = switch(_tableau(args.inner_file, args.shifted), _tableau(args.outer_file, args.shifted))
    out.emit(format_tableau(res.inner) + "\n\n" + format_tableau(res.outer),
             {"inner": _tableau_payload(res.inner), "outer": _tableau_payload(res.outer)})
    return 0


def cmd_dual_classes(args, out: Output) -> int:
    shape = _skew(args, args.shifted)
    classes = dual_classes(shape, args.cap)
    if args.verify_all_u:
        for cls in classes:
            for t in cls[1:]:
                if not dual_equivalent(cls[0], t, all_u=True):
                    print(f"ogschubert dual-classes: all-U check separates\n{cls[0]}\nfrom\n{t}", file=sys.stderr)
                    return 1
    text = []
    for i, cls in enumerate(classes, 1):
        text.append(f"# class {i}: {len(cls)} tableaux")
        text.extend(format_tableau(t) + "\n" for t in cls)
    out.emit("\n".join(text).rstrip(), [[_tableau_payload(t) for t in cls] for cls in classes])
    return 0


def cmd_dual_equivalent(args, out: Output) -> int:
    t1, t2 = _tableau(args.first, args.shifted), _tableau(args.second, args.shifted)
    return _boolean(out, dual_equivalent(t1, t2, all_u=args.verify_all_u))


def cmd_lr(args, out: Output) -> int:
    if args.op in ("gr", "og"):
        strict = args.op == "og"
        a, b, c = (parse_partition(s, strict) for s in (args.first, args.second, args.target))
        if args.op == "gr":
            value = lr.lr_gr_oracle(a, b, c) if args.oracle else lr.lr_gr(a, b, c, args.n)
        else:
            lr.LRQuery(lr.ORTHOGONAL, a, b, c, args.n)
            value = lr.lr_og_oracle(a, b, c) if args.oracle else lr.lr_og(a, b, c, args.n)
        out.emit(str(value), value)
    elif args.op == "dual":
        dual = lr.dual_strict(parse_partition(args.kappa, True), args.n)
        out.emit(format_partition(dual), list(dual))
    elif args.op == "pieri":
        table = lr.pieri_power_table(args.n)
        rows = sorted(table.items(), key=lambda kv: (sum(kv[0]), [-p for p in kv[0]]))
        out.emit("\n".join(f"{format_partition(s)}\t{c}" for s, c in rows),
                 [{"sigma": list(s), "coefficient": c} for s, c in rows])
    else:
        comp = []
        for tok in args.composition.split(","):
            try:
                comp.append(int(tok))
            except ValueError:
                raise UsageError(f"malformed part {tok.strip()!r} in composition {args.composition!r}") from None
        classes = lr.segment_class_count(comp, args.n)
        number = lr.segment_intersection_number(comp, args.n)
        out.emit(f"classes\t{classes}\nintersection\t{number}", {"classes": classes, "intersection": number})
        return 0 if classes == number else 1
    return 0


def cmd_wronskian(args, out: Output) -> int:
    x = read_subspace(args.file)
    w = wronskian(x)
    out.emit(format_poly(w, x.n * (x.n + 1) + 1), [str(c) for c in w.padded(x.n * (x.n + 1) + 1)])
    return 0


def cmd_isotropic(args, out: Output) -> int:
    return _boolean(out, is_isotropic(read_subspace(args.file)))


def cmd_square(args, out: Output) -> int:
    return _boolean(out, is_perfect_square(wronskian(read_subspace(args.file))))


def cmd_multiplicity(args, out: Output) -> int:
    x = read_subspace(args.file)
    k = point_multiplicity(wronskian(x), parse_point(args.point), x.n)
    out.emit(str(k), k)
    return 0


def cmd_bilinear(args, out: Output) -> int:
    value = bilinear(parse_poly(args.f), parse_poly(args.g), args.n)
    out.emit(str(value), str(value))
    return 0


def cmd_flag(args, out: Output) -> int:
    f = flag(args.i, parse_point(args.point), args.n)
    out.emit(format_subspace(f), [format_poly(p, 2 * f.n + 1) for p in f.basis])
    return 0


def cmd_schubert(args, out: Output) -> int:
    x = read_subspace(args.file)
    a = parse_point(args.point)
    if args.kind == "gr":
        return _boolean(out, in_schubert_gr(x, parse_partition(args.shape), a))
    return _boolean(out, in_schubert_og(x, parse_partition(args.shape, strict=True), a))


def cmd_divisibility(args, out: Output) -> int:
    x = read_subspace(args.file)
    points = [parse_point(args.point)] if args.point else check_points(x)
    reports = [verify_divisibility(x, a) for a in points]
    out.emit("\n".join(f"{'PASS' if r.passed else 'FAIL'}  a={r.point}  k={r.multiplicity}  "
                       f"λ={format_partition(r.max_lambda)}"
                       + (f"  σ={format_partition(r.max_sigma)}" if r.isotropic else "") for r in reports),
             [r.as_dict() for r in reports])
    return 0 if all(r.passed for r in reports) else 1


def cmd_sample(args, out: Output) -> int:
    if args.at is not None:
        a = Fraction(parse_point(args.at))
        x = random_isotropic_at(args.n, a, args.seed) if args.kind == "isotropic" else random_subspace_at(args.n, a, args.seed)
    elif args.kind == "isotropic":
        x = random_isotropic(args.n, args.seed)
    else:
        x = random_subspace_at(args.n, Fraction(0), args.seed)
    out.emit(format_subspace(x), [format_poly(p, 2 * x.n + 1) for p in x.basis])
    return 0


def cmd_verify(args, out: Output) -> int:
    if args.n < 1:
        raise UsageError("n must be at least 1")
    if args.suite == "all":
        reports = suites.verify_all(args.n, args.seed)
    elif args.suite == "divisibility":
        reports = [suites.divisibility(args.n, args.samples, args.seed)]
    else:
        reports = [suites.perfect_squares([args.n], args.samples, args.seed)]
    out.emit("\n".join(r.line(args.timing) for r in reports), [r.as_dict(args.timing) for r in reports])
    return 0 if all(r.ok for r in reports) else 1


# -- parser -------------------------------------------------------------------

def _add_n(p: argparse.ArgumentParser, required: bool = False, default=None) -> None:
    p.add_argument("-n", "--n", dest="n", type=int, required=required, default=default, help="ambient rank n")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ogschubert",
        description="Tableau combinatorics and Wronskian geometry for Gr(n,2n+1) and OG(n,2n+1).",
        epilog=FORMATS,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--json", action="store_true", help="emit structured JSON")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    def verb(name: str, fn, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text, description=help_text, epilog=FORMATS,
                           formatter_class=argparse.RawDescriptionHelpFormatter)
        p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit structured JSON")
        p.set_defaults(func=fn)
        return p

    p = verb("shape", cmd_shape, "partition operations: tilde, conjugate, contains")
    p.add_argument("op", choices=("tilde", "conjugate", "contains"))
    p.add_argument("first")
    p.add_argument("second", nargs="?")
    _add_n(p)

    for name, fn, text in (("count", cmd_count, "count standard (shifted) tableaux of a shape"),
                           ("enumerate", cmd_enumerate, "list standard (shifted) tableaux of a shape")):
        p = verb(name, fn, text)
        p.add_argument("kind", choices=("syt", "sst"))
        p.add_argument("outer")
        p.add_argument("--inner", default="-")
        p.add_argument("--shifted", action="store_true")
        if name == "enumerate":
            p.add_argument("--cap", type=int, default=None)

    for name, fn, text in (("double", cmd_double, "shifted tableau T -> symmetrical tableau T*"),
                           ("undouble", cmd_undouble, "symmetrical tableau -> shifted tableau"),
                           ("symmetrical", cmd_symmetrical, "test the symmetry relations")):
        verb(name, fn, text).add_argument("file")

    p = verb("subtableau", cmd_subtableau, "restrict a tableau to the entries in [LO, HI]")
    p.add_argument("file")
    p.add_argument("lo", type=int)
    p.add_argument("hi", type=int)
    p.add_argument("--shifted", action="store_true")

    p = verb("rectify", cmd_rectify, "rectify a skew tableau")
    p.add_argument("file")
    p.add_argument("--shifted", action="store_true")

    p = verb("switch", cmd_switch, "switch an inner tableau U with an outer tableau T")
    p.add_argument("inner_file")
    p.add_argument("outer_file")
    p.add_argument("--shifted", action="store_true")

    p = verb("dual-classes", cmd_dual_classes, "dual equivalence classes of a skew shape")
    p.add_argument("outer")
    p.add_argument("--inner", default="-")
    p.add_argument("--shifted", action="store_true")
    p.add_argument("--cap", type=int, default=None)
    p.add_argument("--verify-all-u", action="store_true")

    p = verb("dual-equivalent", cmd_dual_equivalent, "test dual equivalence of two tableaux")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--shifted", action="store_true")
    p.add_argument("--verify-all-u", action="store_true")

    p = verb("lr", cmd_lr, "Littlewood-Richardson numbers: gr, og, dual, pieri, segments")
    lr_sub = p.add_subparsers(dest="op", required=True, metavar="OP")

    def lr_op(name: str, help_text: str, n_required: bool) -> argparse.ArgumentParser:
        q = lr_sub.add_parser(name, help=help_text, description=help_text)
        q.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit structured JSON")
        _add_n(q, required=n_required)
        return q

    for name, text in (("gr", "c^ν_{λμ} for Gr(n,2n+1): lr gr λ μ ν"),
                       ("og", "c^κ_{στ} for OG(n,2n+1): lr og σ τ κ -n N")):
        q = lr_op(name, text, name == "og")
        q.add_argument("first")
        q.add_argument("second")
        q.add_argument("target")
        q.add_argument("--oracle", action="store_true", help="use the independent oracle")
    lr_op("dual", "the dual strict partition κ∨ in Δ_n", True).add_argument("kappa")
    lr_op("pieri", "coefficients of [Y_1]^k in the Schubert basis", True)
    lr_op("segments", "segment class count vs intersection number", True).add_argument("composition")

    for name, fn, text in (("wronskian", cmd_wronskian, "monic Wronskian of a subspace"),
                           ("isotropic", cmd_isotropic, "test isotropy of a subspace"),
                           ("square", cmd_square, "test whether the Wronskian is a perfect square")):
        verb(name, fn, text).add_argument("file")

    p = verb("multiplicity", cmd_multiplicity, "root multiplicity of the Wronskian at a point")
    p.add_argument("file")
    p.add_argument("point")

    p = verb("bilinear", cmd_bilinear, "evaluate the symmetric form on two polynomials")
    p.add_argument("f")
    p.add_argument("g")
    _add_n(p, required=True)

    p = verb("flag", cmd_flag, "the osculating flag space F_i(a)")
    p.add_argument("i", type=int)
    p.add_argument("point")
    _add_n(p, required=True)

    p = verb("schubert", cmd_schubert, "Schubert membership: gr FILE λ POINT or og FILE σ POINT")
    p.add_argument("kind", choices=("gr", "og"))
    p.add_argument("file")
    p.add_argument("shape")
    p.add_argument("point")

    p = verb("divisibility", cmd_divisibility, "compare Wronskian root multiplicities with Schubert conditions")
    p.add_argument("file")
    p.add_argument("point", nargs="?")

    p = verb("sample", cmd_sample, "seeded random subspace")
    p.add_argument("kind", choices=("isotropic", "general"))
    _add_n(p, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--at", default=None, help="place it in a random Schubert cell at this point")

    p = verb("verify", cmd_verify, "batch verification suites")
    p.add_argument("suite", choices=("all", "divisibility", "square"))
    _add_n(p, default=2)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--timing", action="store_true", help="include wall times (breaks byte-identical output)")

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    out = Output(args.json, args.verb)
    try:
        status = args.func(args, out)
    except (UsageError, ShapeError, TableauError, ValueError, ZeroDivisionError) as exc:
        print(f"ogschubert {args.verb}: {exc}", file=sys.stderr)
        return 2
    out.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
