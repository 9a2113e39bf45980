"""Command-line interface: expression parser, dispatch, JSON/text reports.

Grammar (EBNF):
    expr   := ["-"] term (("+"|"-") term)*
    term   := factor (("*"|"/")? factor)*
    factor := atom ("^" int)?
    atom   := number | "q" | gen | call | "(" expr ")"
Juxtaposition is multiplication, "/" divides by a scalar, "^" binds
tighter than juxtaposition; products are read left to right.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .classical import C_SYM, PBWElement, e_sym, f_sym, h_sym, reference_cobracket
from .freealg import NCElement, TermBudgetExceeded
from .intform import (
    IntContext,
    IntExpr,
    chigen,
    phigen,
    poisson_cobracket,
    psigen,
    rgen,
    specialize_phi,
)
from .laurent import LaurentPoly, NotDivisible, RatFunc
from .qmatrix import MatrixAlgebra
from .qsl import BorelAlgebra, GLElement, SLAlgebra, borel_antipode, gl_antipode
from .uq import MuMap, UqAlgebra, collapse_at_one, convex_order, root_vector_iterated, root_vector_lusztig, uq_coproduct
from . import suites


class ExprSyntaxError(Exception):
    def __init__(self, msg, line, col):
        self.line = line
        self.col = col
        super().__init__(f"{msg} at line {line}, column {col}")


class ExprIndexError(Exception):
    pass


GEN_FAMILIES = {
    "x": 2,
    "r": 2,
    "phi": 1,
    "psi": 1,
    "chi": 1,
    "F": 1,
    "G": 1,
    "Ginv": 1,
    "E": 1,
    "f": 2,
    "h": 1,
    "e": 2,
}

CALLS = {"S", "Delta", "eps", "delta"}


def tokenize(src):
    tokens = []
    line, col = 1, 1
    i = 0
    while i < len(src):
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(src) and src[j].isdigit():
                j += 1
            tokens.append(("num", int(src[i:j]), line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < len(src) and (src[j].isalnum() or src[j] == "_"):
                j += 1
            tokens.append(("name", src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()[],/":
            tokens.append((ch, ch, line, col))
            i += 1
            col += 1
            continue
        raise ExprSyntaxError(f"unexpected character {ch!r}", line, col)
    tokens.append(("end", None, line, col))
    return tokens


class Parser:
    def __init__(self, src):
        self.tokens = tokenize(src)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def next(self):
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def expect(self, kind):
        t = self.next()
        if t[0] != kind:
            raise ExprSyntaxError(f"expected {kind!r}, found {t[1]!r}", t[2], t[3])
        return t

    def parse(self):
        e = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ExprSyntaxError(f"trailing input {t[1]!r}", t[2], t[3])
        return e

    def expr(self):
        if self.peek()[0] == "-":
            self.next()
            out = ("neg", self.term())
        else:
            out = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.next()[0]
            rhs = self.term()
            out = ("add" if op == "+" else "sub", out, rhs)
        return out

    def term(self):
        out = self.factor()
        while True:
            t = self.peek()
            if t[0] == "*":
                self.next()
                out = ("mul", out, self.factor())
            elif t[0] == "/":
                self.next()
                out = ("div", out, self.factor())
            elif t[0] in ("num", "name", "("):
                out = ("mul", out, self.factor())
            else:
                return out

    def factor(self):
        a = self.atom()
        if self.peek()[0] == "^":
            self.next()
            sign = 1
            if self.peek()[0] == "-":
                self.next()
                sign = -1
            t = self.expect("num")
            return ("pow", a, sign * t[1])
        return a

    def atom(self):
        t = self.next()
        if t[0] == "num":
            if self.peek()[0] == "/":
                self.next()
                den = self.expect("num")
                return ("rat", t[1], den[1])
            return ("num", t[1])
        if t[0] == "(":
            e = self.expr()
            self.expect(")")
            return e
        if t[0] == "name":
            name = t[1]
            if name == "q":
                return ("q",)
            if name == "c":
                return ("gen", "c", ())
            if name == "detq":
                return ("detq",)
            if name == "detqt":
                return ("detqt",)
            if name in CALLS:
                self.expect("(")
                arg = self.expr()
                self.expect(")")
                return ("call", name, arg)
            if name in GEN_FAMILIES:
                self.expect("[")
                idx = [self.expect("num")[1]]
                while self.peek()[0] == ",":
                    self.next()
                    idx.append(self.expect("num")[1])
                self.expect("]")
                if len(idx) != GEN_FAMILIES[name]:
                    raise ExprSyntaxError(
                        f"{name} takes {GEN_FAMILIES[name]} indices", t[2], t[3]
                    )
                return ("gen", name, tuple(idx))
            raise ExprSyntaxError(f"unknown symbol {name!r}", t[2], t[3])
        raise ExprSyntaxError(f"unexpected token {t[1]!r}", t[2], t[3])


def parse(src):
    return Parser(src).parse()


class Context:
    """Evaluation context: one algebra, fixed n."""

    def __init__(self, algebra="SL", n=1, order=None, sl_strategy="diagonal74"):
        self.name = algebra
        self.n = n
        self.sl_strategy = sl_strategy
        if algebra == "M":
            from .laurent import RATFUNC

            self.alg = MatrixAlgebra(n, order=order or "lex", domain=RATFUNC)
        elif algebra == "SL":
            self.ictx = IntContext(n, gl=False)
            if sl_strategy == "antidiag73":
                self.ictx.alg = SLAlgebra(n, strategy="antidiag73")
                self.ictx.spec = self.ictx.alg.spec
                self.ictx._lift_cache = {}
            self.alg = self.ictx.alg
        elif algebra == "GL":
            self.ictx = IntContext(n, gl=True)
            self.alg = self.ictx.alg
        elif algebra in ("B+", "B-"):
            self.alg = BorelAlgebra(n, algebra[1])
        elif algebra == "Uq":
            self.alg = UqAlgebra(n, sl_quotient=False)
        elif algebra == "Uh":
            from .classical import build_h_prime

            self.lie = build_h_prime(n)
        else:
            raise ValueError(f"unknown algebra {algebra!r}")

    # -- generator resolution ------------------------------------------------

    def _check_range(self, fam, idx):
        top = self.n + 1
        ok = all(1 <= t <= top for t in idx)
        if fam in ("phi", "h") and idx and idx[0] > self.n:
            ok = False
        if not ok:
            raise ExprIndexError(f"{fam}{list(idx)} out of range for n={self.n}")

    def gen(self, fam, idx):
        self._check_range(fam, idx)
        name = self.name
        if name in ("M", "SL", "GL", "B+", "B-"):
            if fam == "x":
                return self.alg.gen(*idx)
            if name in ("SL", "GL") and fam in ("r", "phi", "psi", "chi"):
                g = {"r": rgen, "phi": phigen, "psi": psigen, "chi": chigen}[fam](*idx)
                return self.ictx.lift_gen(g)
            raise ExprIndexError(f"generator {fam} not available in {name}")
        if name == "Uq":
            if fam == "F":
                return self.alg.F(*idx)
            if fam == "E":
                return self.alg.E(*idx)
            if fam == "G":
                return self.alg.G(*idx)
            if fam == "Ginv":
                return self.alg.G(idx[0], -1)
            raise ExprIndexError(f"generator {fam} not available in Uq")
        if name == "Uh":
            sym = None
            if fam == "f":
                sym = f_sym(*idx)
            elif fam == "e":
                sym = e_sym(*idx)
            elif fam == "h":
                sym = h_sym(*idx)
            elif fam == "c":
                sym = C_SYM
            if sym is None:
                raise ExprIndexError(f"generator {fam} not available in Uh")
            if sym not in self.lie.index:
                raise ExprIndexError(f"{sym} is not a basis symbol for n={self.n}")
            return PBWElement.gen(self.lie, sym)
        raise ExprIndexError(f"generator {fam} not available")

    def one(self):
        if self.name == "Uh":
            return PBWElement.one(self.lie)
        if self.name == "Uq":
            return self.alg.one()
        return self.alg.one()

    # -- evaluation --------------------------------------------------------------

    def eval(self, node):
        kind = node[0]
        if kind == "num":
            return RatFunc.from_laurent(LaurentPoly.from_int(node[1]))
        if kind == "rat":
            return RatFunc(LaurentPoly.from_int(node[1]), LaurentPoly.from_int(node[2]))
        if kind == "q":
            return RatFunc.from_laurent(LaurentPoly({1: 1}))
        if kind == "gen":
            return self.gen(node[1], node[2])
        if kind == "detq":
            if self.name not in ("M", "GL"):
                if self.name == "SL":
                    return self.alg.one()
                raise ExprIndexError("detq not available here")
            return self.alg.detq() if self.name == "M" else self.ictx.alg.detq()
        if kind == "detqt":
            if self.name != "SL":
                raise ExprIndexError("detqt is an SL-form expression")
            return self.alg.one()
        if kind == "neg":
            return self._neg(self.eval(node[1]))
        if kind in ("add", "sub"):
            a = self.eval(node[1])
            b = self.eval(node[2])
            a, b = self._align(a, b)
            return a + b if kind == "add" else a - b
        if kind == "mul":
            return self._mul(self.eval(node[1]), self.eval(node[2]))
        if kind == "div":
            num = self.eval(node[1])
            den = self.eval(node[2])
            if not isinstance(den, RatFunc):
                raise ExprIndexError("division only by scalars")
            if isinstance(num, RatFunc):
                return num / den
            return self._mul(num, den.inverse())
        if kind == "pow":
            base = self.eval(node[1])
            k = node[2]
            if isinstance(base, RatFunc):
                return base ** k
            if k < 0:
                from .uq import UqElement

                if isinstance(base, UqElement) and len(base.terms) == 1:
                    (fw, g, ew), c = next(iter(base.terms.items()))
                    if not fw and not ew:
                        inv = UqElement(
                            base.alg,
                            {((), tuple(-x for x in g), ()): c.inverse()},
                        )
                        base, k = inv, -k
                    else:
                        raise ExprIndexError("negative powers only on scalars and toral monomials")
                else:
                    raise ExprIndexError("negative powers only on scalars and toral monomials")
            out = self.one()
            for _ in range(k):
                out = self._mul(out, base)
            return out
        if kind == "call":
            return self._call(node[1], node[2])
        raise ValueError(f"bad node {node!r}")

    def _neg(self, v):
        return -v if not isinstance(v, RatFunc) else v * RatFunc.from_laurent(
            LaurentPoly.from_int(-1)
        )

    def _align(self, a, b):
        if isinstance(a, RatFunc) and not isinstance(b, RatFunc):
            a = self._scalar_to_element(a, like=b)
        elif isinstance(b, RatFunc) and not isinstance(a, RatFunc):
            b = self._scalar_to_element(b, like=a)
        return a, b

    def _scalar_to_element(self, s, like):
        one = self.one()
        if isinstance(like, PBWElement):
            v = s.regular_at_one()
            return one.scale(v)
        return one.scale(s)

    def _mul(self, a, b):
        if isinstance(a, RatFunc) and isinstance(b, RatFunc):
            return a * b
        if isinstance(a, RatFunc):
            if isinstance(b, PBWElement):
                return b.scale(a.regular_at_one())
            return b.scale(a)
        if isinstance(b, RatFunc):
            if isinstance(a, PBWElement):
                return a.scale(b.regular_at_one())
            return a.scale(b)
        return a * b

    def _call(self, name, argnode):
        if name == "delta":
            if self.name in ("SL", "GL"):
                expr = self._as_intexpr(argnode)
                ictx = self.ictx
                if self.name == "SL" and self.sl_strategy != "diagonal74":
                    ictx = IntContext(self.n, gl=False)  # canonical lattice basis
                return poisson_cobracket(ictx, expr)
            if self.name == "Uh":
                if argnode[0] != "gen":
                    raise ExprIndexError("delta takes a single generator here")
                fam, idx = argnode[1], argnode[2]
                sym = {"f": f_sym, "e": e_sym, "h": h_sym}.get(fam)
                sym = sym(*idx) if sym else C_SYM
                return reference_cobracket(self.lie, sym, self.n)
            raise ExprIndexError("delta not available here")
        arg = self.eval(argnode)
        if name == "Delta":
            if self.name in ("M", "SL", "GL", "B+", "B-"):
                return self.alg.coproduct(arg)
            if self.name == "Uq":
                return uq_coproduct(arg)
            raise ExprIndexError("Delta not available here")
        if name == "eps":
            return self.alg.counit(arg)
        if name == "S":
            if self.name == "SL":
                return self.alg.antipode(arg)
            if self.name in ("B+", "B-"):
                return borel_antipode(self.alg, arg)
            if self.name == "GL":
                return gl_antipode(self.alg, GLElement(self.alg, arg, 0)).canonical()
            raise ExprIndexError("S not available here")
        raise ExprIndexError(f"unknown call {name}")

    def _as_intexpr(self, node):
        """Build a formal integer-form expression from a parse tree."""
        kind = node[0]
        if kind == "gen":
            fam, idx = node[1], node[2]
            g = {"r": rgen, "phi": phigen, "psi": psigen, "chi": chigen}.get(fam)
            if g is None:
                raise ExprIndexError("delta expects integer-form generators")
            self._check_range(fam, idx)
            return IntExpr.gen(g(*idx))
        if kind == "add":
            return self._as_intexpr(node[1]) + self._as_intexpr(node[2])
        if kind == "sub":
            return self._as_intexpr(node[1]) - self._as_intexpr(node[2])
        if kind == "neg":
            return -self._as_intexpr(node[1])
        if kind == "mul":
            return self._as_intexpr(node[1]) * self._as_intexpr(node[2])
        if kind == "div":
            den = self._as_intexpr(node[2])
            if list(den.terms) != [()]:
                raise ExprIndexError("division only by scalars")
            return self._as_intexpr(node[1]).scale(den.terms[()].inverse())
        if kind == "num":
            return IntExpr.one().scale(node[1])
        if kind == "rat":
            return IntExpr.one().scale(
                RatFunc(LaurentPoly.from_int(node[1]), LaurentPoly.from_int(node[2]))
            )
        if kind == "q":
            return IntExpr.one().scale(RatFunc.from_laurent(LaurentPoly({1: 1})))
        if kind == "pow":
            base = self._as_intexpr(node[1])
            out = IntExpr.one()
            for _ in range(node[2]):
                out = out * base
            return out
        raise ExprIndexError("unsupported expression under delta(...)")


def format_value(v, fmt="text"):
    if fmt == "text":
        if isinstance(v, Fraction):
            return str(v)
        return str(v)
    return json.dumps(value_to_json(v), indent=2, sort_keys=True)


def value_to_json(v):
    from .qmatrix import TensorElement
    from .uq import UqElement, UqTensor
    from .classical import ClassicalTensor

    if isinstance(v, NCElement):
        out = v.to_json()
        out["schema"] = "qfun/1"
        return out
    if isinstance(v, RatFunc):
        return {"schema": "qfun/1", "ratfunc": v.to_json()}
    if isinstance(v, Fraction):
        return {"schema": "qfun/1", "rational": str(v)}
    if isinstance(v, TensorElement):
        return {
            "schema": "qfun/1",
            "tensor": [
                {
                    "coeff": c.to_json(),
                    "left": v.left.spec.word_str(wl),
                    "right": v.right.spec.word_str(wr),
                }
                for (wl, wr), c in sorted(v.terms.items(), key=lambda kv: str(kv[0]))
            ],
        }
    if isinstance(v, PBWElement):
        out = v.to_json()
        out["schema"] = "qfun/1"
        return out
    if isinstance(v, (UqElement, UqTensor, ClassicalTensor, GLElement)):
        return {"schema": "qfun/1", "value": str(v)}
    return {"schema": "qfun/1", "value": str(v)}


SUITES = {
    "hopf": lambda args: [suites.hopf_axioms_suite()],
    "detq": lambda args: [suites.detq_suite()],
    "intform": lambda args: [
        suites.intform_suite(),
        suites.hopf_closure_suite(),
    ],
    "pbw": lambda args: [suites.pbw_matrix_suite(), suites.sl_pbw_suite(seed=args.seed)],
    "thm53": lambda args: [suites.thm53_suite()],
    "convex": lambda args: [suites.convex_suite()],
    "mu": lambda args: [suites.mu_suite()],
    "cobracket": lambda args: [suites.cobracket_suite(), suites.gl_central_suite()],
    "all": lambda args: suites.all_suites(seed=args.seed),
}


GLOBAL_DEFAULTS = {
    "n": 1,
    "algebra": "SL",
    "order": None,
    "sl_strategy": "diagonal74",
    "format": "text",
    "max_degree": 2,
    "seed": 0,
}


def _global_flags_parent():
    # global flags may appear before or after the subcommand; SUPPRESS keeps
    # subparser defaults from clobbering values given up front
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument(
        "--n", type=int, default=argparse.SUPPRESS, help="size parameter (matrices of size n+1)"
    )
    parent.add_argument(
        "--algebra",
        default=argparse.SUPPRESS,
        choices=["M", "SL", "GL", "B+", "B-", "Uq", "Uh"],
    )
    parent.add_argument(
        "--order", default=argparse.SUPPRESS, choices=["lex", "antidiag", "triangular"]
    )
    parent.add_argument(
        "--sl-strategy", default=argparse.SUPPRESS, choices=["antidiag73", "diagonal74"]
    )
    parent.add_argument("--format", default=argparse.SUPPRESS, choices=["text", "json"])
    parent.add_argument("--max-degree", type=int, default=argparse.SUPPRESS)
    parent.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    return parent


def build_argparser():
    parent = _global_flags_parent()
    ap = argparse.ArgumentParser(
        prog="qfun",
        parents=[parent],
        description="exact computations in quantum matrix/SL/GL function "
        "algebras, their integer forms, and classical limits",
    )
    sub = ap.add_subparsers(dest="command")
    for name in ("nf", "antipode", "counit", "coproduct", "specialize"):
        s = sub.add_parser(name, parents=[parent])
        s.add_argument("expr")
    s = sub.add_parser("mul", parents=[parent])
    s.add_argument("expr", nargs=2)
    sub.add_parser("detq", parents=[parent])
    sub.add_parser("basis", parents=[parent])
    s = sub.add_parser("verify", parents=[parent])
    s.add_argument("suite", choices=sorted(SUITES))
    s.add_argument("--form", default=None, choices=["Q", "P", "plain"])
    s = sub.add_parser("rootvec", parents=[parent])
    s.add_argument("--root", required=True, help="i,j")
    s.add_argument("--method", default="iterated", choices=["braid", "iterated"])
    s = sub.add_parser("mu", parents=[parent])
    s.add_argument("--gen", required=True, help="r:i,j or x:i,j")
    s.add_argument("--collapse", action="store_true")
    s = sub.add_parser("cobracket", parents=[parent])
    s.add_argument("--gen", required=True, help="phi:1 / r:1,2 / chi:2 / psi:1")
    return ap


def _parse_gen_flag(flag):
    fam, _, idx = flag.partition(":")
    indices = tuple(int(t) for t in idx.split(",") if t)
    return fam, indices


def run_command(argv):
    ap = build_argparser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code in (0, None) else 2), ""
    for key, value in GLOBAL_DEFAULTS.items():
        if not hasattr(args, key):
            setattr(args, key, value)
    if args.command is None:
        ap.print_usage()
        return 2, ""
    try:
        return _dispatch(args)
    except (ExprSyntaxError, ExprIndexError) as exc:
        return 2, f"error: {exc}"
    except TermBudgetExceeded as exc:
        return 2, f"error: {exc} (raise QFUN_MAX_TERMS to allow more)"
    except NotDivisible as exc:
        return 2, f"error: {exc}"


def _dispatch(args):
    fmt = args.format
    if args.command == "verify":
        if args.suite == "intform" and args.form:
            from .intform import verify_relation_catalog

            recs = verify_relation_catalog(args.form, args.n, gl=(args.algebra == "GL"))
            ok = all(r.status != "failed" for r in recs)
            payload = {
                "schema": "qfun/1",
                "command": f"verify intform --form {args.form}",
                "n": args.n,
                "ok": ok,
                "records": [r.to_json() for r in recs],
            }
            if fmt == "json":
                return (0 if ok else 1), json.dumps(payload, indent=2, sort_keys=True)
            lines = [f"{r.id} {r.instance}: {r.status}" + (f" ({r.variant})" if r.variant else "") for r in recs]
            return (0 if ok else 1), "\n".join(lines)
        reports = SUITES[args.suite](args)
        ok = all(r["ok"] for r in reports)
        payload = {
            "schema": "qfun/1",
            "command": f"verify {args.suite}",
            "ok": ok,
            "reports": reports,
        }
        if fmt == "json":
            out = json.dumps(payload, indent=2, sort_keys=True, default=str)
        else:
            lines = []
            for rep in reports:
                lines.append(f"[{'PASS' if rep['ok'] else 'FAIL'}] suite {rep['suite']}"
                             f" ({len(rep['results'])} checks)")
                for r in rep["results"]:
                    if not r["ok"]:
                        lines.append(f"    FAIL {r['check']}")
                for e in rep["errata"]:
                    lines.append(f"    erratum {e['id']}: uses {e.get('used', '?')}")
            out = "\n".join(lines)
        return (0 if ok else 1), out

    ctx = Context(args.algebra, args.n, order=args.order, sl_strategy=args.sl_strategy)
    if args.command == "nf":
        return 0, format_value(ctx.eval(parse(args.expr)), fmt)
    if args.command == "mul":
        a = ctx.eval(parse(args.expr[0]))
        b = ctx.eval(parse(args.expr[1]))
        return 0, format_value(ctx._mul(a, b), fmt)
    if args.command == "coproduct":
        return 0, format_value(ctx._call("Delta", parse(args.expr)), fmt)
    if args.command == "antipode":
        return 0, format_value(ctx._call("S", parse(args.expr)), fmt)
    if args.command == "counit":
        return 0, format_value(ctx._call("eps", parse(args.expr)), fmt)
    if args.command == "detq":
        if args.algebra == "M":
            return 0, format_value(ctx.alg.detq(), fmt)
        return 0, format_value(ctx.eval(("detq",)), fmt)
    if args.command == "basis":
        if args.algebra == "M":
            words = ctx.alg.pbw_basis(args.max_degree)
            spec = ctx.alg.spec
        elif args.algebra in ("SL", "GL"):
            alg = ctx.ictx.alg
            words = (
                alg.pbw_basis_sl(args.max_degree)
                if hasattr(alg, "pbw_basis_sl")
                else alg.pbw_basis(args.max_degree)
            )
            spec = alg.spec
        else:
            return 2, "error: basis needs a matrix-type algebra"
        lines = [spec.word_str(w) for w in words]
        if fmt == "json":
            return 0, json.dumps({"schema": "qfun/1", "basis": lines}, indent=2)
        return 0, "\n".join(lines)
    if args.command == "rootvec":
        i, j = (int(t) for t in args.root.split(","))
        alg = UqAlgebra(args.n)
        if args.method == "iterated":
            ev = root_vector_iterated(alg, i, j, "E")
            fv = root_vector_iterated(alg, i, j, "F")
        else:
            co = convex_order(args.n)
            k = co.position(i, j)
            ev = root_vector_lusztig(alg, co, k, "E")
            fv = root_vector_lusztig(alg, co, k, "F")
        return 0, f"E[{i},{j}] = {ev}\nF[{j},{i}] = {fv}"
    if args.command == "mu":
        fam, idx = _parse_gen_flag(args.gen)
        sl = SLAlgebra(args.n, strategy="diagonal74")
        mu = MuMap(sl)
        el = sl.gen(*idx)
        if fam == "r" and idx[0] != idx[1]:
            from .laurent import RF_Q_MINUS_QINV

            el = el.scale(RF_Q_MINUS_QINV.inverse())
        t = mu.apply(el)
        if args.collapse:
            col = collapse_at_one(t)
            lines = []
            for ((f1, e1), (f2, e2)), v in sorted(col.items(), key=lambda kv: str(kv[0])):
                def skel(fw, ew):
                    bits = [f"F[{x}]" for x in fw] + [f"E[{x}]" for x in ew]
                    return " ".join(bits) if bits else "1"
                lines.append(f"{v} * {skel(f1, e1)} (x) {skel(f2, e2)}")
            return 0, "\n".join(lines) if lines else "0"
        return 0, format_value(t, fmt)
    if args.command == "cobracket":
        fam, idx = _parse_gen_flag(args.gen)
        g = {"r": rgen, "phi": phigen, "psi": psigen, "chi": chigen}[fam](*idx)
        ictx = IntContext(args.n, gl=(args.algebra == "GL"))
        return 0, format_value(poisson_cobracket(ictx, IntExpr.gen(g)), fmt)
    if args.command == "specialize":
        ictx = IntContext(args.n, gl=(args.algebra == "GL"))
        ctx2 = Context("SL" if args.algebra != "GL" else "GL", args.n)
        expr = ctx2._as_intexpr(parse(args.expr))
        lie = ictx.lie()
        return 0, format_value(specialize_phi(expr, lie, args.n, gl=ictx.gl), fmt)
    return 2, f"error: unknown command {args.command}"


def main(argv=None):
    code, out = run_command(sys.argv[1:] if argv is None else argv)
    if out:
        print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
