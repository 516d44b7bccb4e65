"""Command-line front end.

Exit codes: 0 success, 1 mathematical failure or counterexample, 2 parse
error, 3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import sys

from . import example1 as ex1
from .code import CodeSpec, Codeword, code_canonicalize, code_contains, code_enumerate, code_new, validate_generators
from .corpus import PROPERTIES, run_verify
from .dual import dual_code, same_code
from .errors import DCyclicError, ParseError, TooLargeError
from .field import FieldCtx
from .linalg import DEFAULT_CAP
from .matrix import component_parameters, standardized_forms
from .poly import Poly, parse_poly, render_poly
from .ring import parse_standard, render_standard
from .rpoly import RPoly

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_CAP = 0, 1, 2, 3

GENERATORS = ("iota", "ell", "theta")
COMPONENTS = ("v1", "v2", "v3")


# -- code-spec files ----------------------------------------------------------

def _lines(text):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ParseError(f"expected key=value, got {line!r}", lineno)
        key, value = line.split("=", 1)
        yield lineno, key.strip(), value.strip()


def _read_header(entries):
    header = {}
    for lineno, key, value in entries:
        if key in ("q", "m", "n"):
            if key in header:
                raise ParseError(f"duplicate key {key}", lineno)
            try:
                header[key] = int(value)
            except ValueError:
                raise ParseError(f"{key} must be an integer, got {value!r}", lineno) from None
    for key in ("q", "m", "n"):
        if key not in header:
            raise ParseError(f"missing key {key}")
    try:
        ctx = FieldCtx(header["q"])
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if header["m"] < 1 or header["n"] < 1:
        raise ParseError("m and n must be positive")
    return ctx, header["m"], header["n"]


def _parse_std_poly(ctx, value, lineno):
    elems = [parse_standard(ctx, tok, lineno) for tok in value.split()]
    if not elems:
        raise ParseError("empty polynomial", lineno)
    return RPoly(ctx, (Poly(ctx, [e.comps[i] for e in elems]) for i in range(3)))


def parse_spec(text: str):
    """Parse a code-spec document into (ctx, m, n, {generator: RPoly})."""
    entries = list(_lines(text))
    ctx, m, n = _read_header(entries)
    comp_form = {g: {} for g in GENERATORS}
    std_form = {}
    for lineno, key, value in entries:
        if key in ("q", "m", "n"):
            continue
        gen, _, suffix = key.partition(".")
        if gen not in GENERATORS or suffix not in COMPONENTS + ("std",):
            raise ParseError(f"unknown key {key!r}", lineno)
        if suffix == "std":
            if gen in std_form:
                raise ParseError(f"duplicate key {key}", lineno)
            std_form[gen] = (lineno, _parse_std_poly(ctx, value, lineno))
        else:
            if suffix in comp_form[gen]:
                raise ParseError(f"duplicate key {key}", lineno)
            comp_form[gen][suffix] = (lineno, parse_poly(ctx, value, lineno))
    gens = {}
    for g in GENERATORS:
        have = comp_form[g]
        if g in std_form and have:
            raise ParseError(f"{g} given both as {g}.std and per component", std_form[g][0])
        if g in std_form:
            gens[g] = std_form[g][1]
        elif len(have) == 3:
            gens[g] = RPoly(ctx, (have[c][1] for c in COMPONENTS))
        elif have:
            missing = [f"{g}.{c}" for c in COMPONENTS if c not in have]
            raise ParseError(f"missing {', '.join(missing)}")
        else:
            raise ParseError(f"missing {g}.std or {g}.v1/.v2/.v3")
    return ctx, m, n, gens


def render_spec(C: CodeSpec) -> str:
    lines = [f"q={C.q}", f"m={C.m}", f"n={C.n}"]
    for g in GENERATORS:
        r = getattr(C, g)
        for i, c in enumerate(COMPONENTS):
            lines.append(f"{g}.{c}={render_poly(r[i])}")
    return "\n".join(lines) + "\n"


def _parse_word(ctx, m, n, value, lineno) -> Codeword:
    left, sep, right = value.partition("|")
    if not sep:
        raise ParseError("codeword needs a '|' between the two blocks", lineno)
    blocks = []
    for text, size in ((left, m), (right, n)):
        toks = text.split()
        if len(toks) != size:
            raise ParseError(f"block has {len(toks)} entries, expected {size}", lineno)
        blocks.append(tuple(parse_standard(ctx, t, lineno) for t in toks))
    return Codeword(tuple(blocks[0]), tuple(blocks[1]))


def render_word(w: Codeword) -> str:
    return " ".join(render_standard(r) for r in w.left) + " | " + " ".join(render_standard(r) for r in w.right)


def _read(path):
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_code(path) -> CodeSpec:
    ctx, m, n, gens = parse_spec(_read(path))
    return code_new(ctx, m, n, gens["iota"], gens["ell"], gens["theta"])


# -- commands -----------------------------------------------------------------

def cmd_validate(args, out):
    ctx, m, n, gens = parse_spec(_read(args.file))
    report = validate_generators(ctx, m, n, gens["iota"], gens["ell"], gens["theta"])
    valid = True
    for comp, name, ok, detail in report:
        # a reduced ell is accepted, only reported
        status = "ok" if ok else ("reduced" if name.startswith("deg ell") else "FAIL")
        if not ok and status == "FAIL":
            valid = False
        extra = f"  ({detail})" if detail and status == "FAIL" else ""
        out.write(f"v{comp}  {name}: {status}{extra}\n")
    out.write("valid\n" if valid else "invalid\n")
    return EXIT_OK if valid else EXIT_FAIL


def _write_matrix(out, M):
    for row in M.entries:
        out.write(" ".join(str(int(v)) for v in row) + "\n")


def cmd_genmat(args, out):
    C = load_code(args.file)
    if args.standardized:
        for i, form in enumerate(standardized_forms(C)):
            if i:
                out.write("\n")
            out.write(f"# v{i + 1} k={form.k} rows={form.matrix.rows}x{form.matrix.cols}\n")
            out.write("# perm " + " ".join(map(str, form.perm)) + "\n")
            out.write("# row bands " + " ".join(map(str, form.row_bands)) + "\n")
            out.write("# left groups " + " ".join(map(str, form.left_groups)) + "\n")
            out.write("# right groups " + " ".join(map(str, form.right_groups)) + "\n")
            _write_matrix(out, form.matrix)
    else:
        for i, G in enumerate(C.generator_matrices):
            if i:
                out.write("\n")
            out.write(f"# v{i + 1} {G.rows}x{G.cols}\n")
            _write_matrix(out, G)
    return EXIT_OK


def cmd_dual(args, out):
    C = load_code(args.file)
    if args.method == "both":
        F = dual_code(C, "formula").code
        N = dual_code(C, "nullspace").code
        out.write(render_spec(F))
        equal = same_code(F, N)
        out.write("# EQUAL\n" if equal else "# DIFFER\n")
        if not equal:
            out.write("# nullspace dual:\n")
            out.write("".join("# " + line + "\n" for line in render_spec(N).splitlines()))
        return EXIT_OK if equal else EXIT_FAIL
    out.write(render_spec(dual_code(C, args.method).code))
    return EXIT_OK


def _param_line(length, dim, dist):
    return f"[{length},{dim},{'-' if dist is None else dist}]"


def cmd_mindist(args, out):
    C = load_code(args.file)
    params = component_parameters(C, args.cap)
    which = range(3) if args.component == "all" else [int(args.component[1]) - 1]
    for i in which:
        out.write(_param_line(*params[i]) + "\n")
    return EXIT_OK


def cmd_enumerate(args, out):
    C = load_code(args.file)
    words = list(code_enumerate(C, args.cap))
    out.write(f"# {len(words)} codewords\n")
    for w in words:
        out.write(render_word(w) + "\n")
    return EXIT_OK


def cmd_member(args, out):
    C = load_code(args.file)
    w = _parse_word(C.ctx, C.m, C.n, args.word, None)
    if code_contains(C, w):
        out.write("member\n")
        return EXIT_OK
    out.write("not a member\n")
    return EXIT_FAIL


def cmd_canonicalize(args, out):
    text = _read(args.file)
    entries = list(_lines(text))
    ctx, m, n = _read_header(entries)
    words = []
    for lineno, key, value in entries:
        if key in ("q", "m", "n"):
            continue
        if key != "word":
            raise ParseError(f"unknown key {key!r}", lineno)
        words.append(_parse_word(ctx, m, n, value, lineno))
    if not words:
        words = [Codeword.zero(ctx, m, n)]
    out.write(render_spec(code_canonicalize(ctx, m, n, words)))
    return EXIT_OK


def _qset(text):
    try:
        vals = tuple(int(t) for t in text.split(",") if t.strip())
        for v in vals:
            FieldCtx(v)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    if not vals:
        raise argparse.ArgumentTypeError("empty q set")
    return vals


def cmd_verify(args, out):
    report = run_verify(args.cases, args.seed, args.qset, args.max_len)
    out.write(f"cases={report.cases} seed={args.seed} qset={','.join(map(str, args.qset))}\n")
    for name in PROPERTIES:
        out.write(f"{report.passes[name]:5d}  {name}\n")
    for name, count in report.info.items():
        out.write(f"# {count:3d}/{report.cases} {name}\n")
    if not report.ok:
        name, C, detail = report.failure
        out.write(f"FAIL {name}" + (f": {detail}" if detail else "") + "\n")
        out.write(render_spec(C))
        return EXIT_FAIL
    out.write("all properties passed\n")
    return EXIT_OK


_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _unicode_poly(f):
    out = []
    for term in f.pretty().split("+"):
        if "^" in term:
            head, exp = term.split("^")
            term = head + exp.translate(_SUPERSCRIPT)
        out.append(term)
    return "+".join(out)


def decomposition_line(r: RPoly) -> str:
    subs = "₁₂₃"
    return "+".join(f"({_unicode_poly(r[i])})v{subs[i]}" for i in range(3))


EXAMPLE1_DECOMPOSITION = "(4x³+3x²+2x+5)v₁+(5x³+2x²+3x+1)v₂+(x³+4x²+2x+6)v₃"


def cmd_example1(args, out):
    failures = []
    C = ex1.example1_code()
    line = decomposition_line(C.ell)
    out.write(f"ell = {line}\n")
    if line != EXAMPLE1_DECOMPOSITION:
        failures.append("ell decomposition")
    for i, G in enumerate(C.generator_matrices):
        out.write(f"\n# G{i + 1}\n")
        _write_matrix(out, G)
        if G.tolist() != ex1.MATRICES[i]:
            failures.append(f"G{i + 1}")
    out.write(f"\ndimension {C.dimension}\n")
    for i, params in enumerate(component_parameters(C)):
        out.write(f"v{i + 1} {_param_line(*params)}\n")
        if tuple(params) != ex1.PARAMETERS:
            failures.append(f"parameters of v{i + 1}")
    F = dual_code(C, "formula").code
    N = dual_code(C, "nullspace").code
    out.write("\n# dual\n" + render_spec(F))
    equal = same_code(F, N)
    out.write("# EQUAL\n" if equal else "# DIFFER\n")
    if not equal:
        failures.append("dual methods")
    if failures:
        out.write("MISMATCH: " + ", ".join(failures) + "\n")
        return EXIT_FAIL
    out.write("all checks passed\n")
    return EXIT_OK


# -- entry point --------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(prog="dcyclic", description="Double cyclic codes over F_q + vF_q + v^2F_q, v^3 = v.")
    parser.add_argument("--format", choices=["text"], default="text", help="output format")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check the generator conditions")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("genmat", help="print generator matrices")
    p.add_argument("file")
    p.add_argument("--standardized", action="store_true")
    p.set_defaults(func=cmd_genmat)

    p = sub.add_parser("dual", help="print the dual code")
    p.add_argument("file")
    p.add_argument("--method", choices=["formula", "nullspace", "both"], default="formula")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("mindist", help="[length,dimension,distance] per component")
    p.add_argument("file")
    p.add_argument("--component", choices=["v1", "v2", "v3", "all"], default="all")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_mindist)

    p = sub.add_parser("enumerate", help="list every codeword in standard basis")
    p.add_argument("file")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("member", help="test membership of a codeword")
    p.add_argument("file")
    p.add_argument("word", help="'a,b,c ... | a,b,c ...'")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("canonicalize", help="smallest code containing the given words")
    p.add_argument("file", help="q=, m=, n= and word= lines")
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("verify", help="run the property suites on a random corpus")
    p.add_argument("--cases", type=int, default=200)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--qset", type=_qset, default=(3, 5, 7))
    p.add_argument("--max-len", type=int, default=8)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("example1", help="reproduce the [10,5,5] example over F_7")
    p.set_defaults(func=cmd_example1)
    return parser


def main(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ParseError as exc:
        err.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except TooLargeError as exc:
        err.write(f"cap exceeded: need {exc.required} vectors, cap {exc.cap}\n")
        return EXIT_CAP
    except DCyclicError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())

