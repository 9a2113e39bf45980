"""Integer forms of the quantum SL/GL function algebras.

Three forms, each generated over Z[q,q^-1] by rescaled matrix entries
r_ij together with one family of divided toral elements:

    phi_i = (rho_ii - rho_{i+1,i+1}) / (q-1)      (the "Q" form)
    psi_i = (rho_11 rho_22 ... rho_ii - 1) / (q-1)  (the "P" form)
    chi_i = (rho_ii - 1) / (q-1)                  (the plain form)

The relation and Hopf-formula catalogs are verified by exact computation
in the ambient algebra; suspect printed formulas carry declared variants
and the verdicts feed the errata report.  Specialization at q=1 lands in
the classical enveloping algebra via the generator dictionary
r_{i,i+1} -> -f_i, phi_i -> h_i, r_{i+1,i} -> e_i and its iterated-bracket
extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations

from .classical import (
    C_SYM,
    ClassicalTensor,
    PBWElement,
    e_sym,
    f_sym,
    h_sym,
)
from .freealg import NCElement
from .laurent import (
    LaurentPoly,
    NotDivisible,
    Q_MINUS_1,
    Q_MINUS_QINV,
    RATFUNC,
    RF_ONE,
    RatFunc,
    neg_q_power,
)
from .qmatrix import MatrixAlgebra, TensorElement
from .qsl import SLAlgebra


class OutOfForm(Exception):
    pass


RF_QM1 = RatFunc.from_laurent(Q_MINUS_1)
RF_QMQI = RatFunc.from_laurent(Q_MINUS_QINV)
ONE_PLUS_QINV = LaurentPoly({0: 1, -1: 1})


@dataclass(frozen=True, order=True)
class IntFormGen:
    kind: str  # "phi" | "psi" | "chi" | "r"
    indices: tuple

    def __str__(self):
        return f"{self.kind}[{','.join(str(i) for i in self.indices)}]"


def rgen(i, j):
    return IntFormGen("r", (i, j))


def phigen(i):
    return IntFormGen("phi", (i,))


def psigen(i):
    return IntFormGen("psi", (i,))


def chigen(i):
    return IntFormGen("chi", (i,))


class IntExpr:
    """Formal Z[q,q^-1]-combination of words in integer-form generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in terms.items():
                c = RATFUNC.coerce(c)
                if c:
                    self.terms[tuple(w)] = c

    @staticmethod
    def zero():
        return IntExpr()

    @staticmethod
    def one():
        return IntExpr({(): 1})

    @staticmethod
    def gen(g):
        return IntExpr({(g,): 1})

    @staticmethod
    def word(gens, coeff=1):
        return IntExpr({tuple(gens): coeff})

    def __add__(self, other):
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        out = IntExpr()
        out.terms = t
        return out

    def __neg__(self):
        out = IntExpr()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                s = out.get(w)
                add = c1 * c2
                s = add if s is None else s + add
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        e = IntExpr()
        e.terms = out
        return e

    def scale(self, coeff):
        coeff = RATFUNC.coerce(coeff)
        out = IntExpr()
        if coeff:
            out.terms = {w: c * coeff for w, c in self.terms.items()}
        return out

    def all_coeffs_laurent(self):
        return all(c.is_laurent() for c in self.terms.values())

    def divide_coeffs_q_minus_1(self, power=1):
        out = IntExpr()
        t = {}
        for w, c in self.terms.items():
            lp = c.to_laurent()
            for _ in range(power):
                lp = lp.divide_q_minus_1()
            t[w] = RatFunc.from_laurent(lp)
        out.terms = t
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), str(kv[0]))):
            ws = " ".join(str(g) for g in w) if w else "1"
            parts.append(f"({c}) {ws}")
        return " + ".join(parts)

    __repr__ = __str__


class IntContext:
    """Ambient algebra for one of the integer forms.

    gl=False: the SL algebra with the diagonal canonical-form strategy.
    gl=True: the plain quantum matrix algebra (no determinant relation),
    the ambient algebra of the GL-localized forms.
    """

    def __init__(self, n, gl=False):
        self.n = n
        self.gl = gl
        if gl:
            self.alg = MatrixAlgebra(n, order="triangular", domain=RATFUNC)
        else:
            self.alg = SLAlgebra(n, strategy="diagonal74", domain=RATFUNC)
        self.spec = self.alg.spec
        self._lift_cache = {}
        self._lie = None

    # -- lifting ----------------------------------------------------------

    def lift_gen(self, g):
        el = self._lift_cache.get(g)
        if el is not None:
            return el
        n = self.n
        alg = self.alg
        if g.kind == "r":
            i, j = g.indices
            el = alg.gen(i, j)
            if i != j:
                el = el.scale(RF_QMQI.inverse())
        elif g.kind == "phi":
            (i,) = g.indices
            el = (alg.gen(i, i) - alg.gen(i + 1, i + 1)).scale(RF_QM1.inverse())
        elif g.kind == "psi":
            (i,) = g.indices
            prod = alg.one()
            for s in range(1, i + 1):
                prod = prod * alg.gen(s, s)
            el = (prod - alg.one()).scale(RF_QM1.inverse())
        elif g.kind == "chi":
            (i,) = g.indices
            el = (alg.gen(i, i) - alg.one()).scale(RF_QM1.inverse())
        else:
            raise OutOfForm(f"unknown generator kind {g.kind!r}")
        self._lift_cache[g] = el
        return el

    def lift(self, expr):
        out = NCElement.zero(self.spec)
        for w, c in expr.terms.items():
            acc = NCElement.one(self.spec)
            for g in w:
                acc = acc * self.lift_gen(g)
            out = out + acc.scale(c)
        return out

    def lift_tensor(self, texpr):
        out = TensorElement.zero(self.alg, self.alg)
        for (wl, wr), c in texpr.terms.items():
            l = self.lift(IntExpr({wl: 1}))
            r = self.lift(IntExpr({wr: 1}))
            out = out.add_product(l, r, c)
        return out

    def coproduct(self, el):
        return self.alg.coproduct(el)

    def counit(self, el):
        return self.alg.counit(el)

    def antipode(self, el):
        if self.gl:
            raise OutOfForm("antipode in the GL context needs det_q^{-1}")
        return self.alg.antipode(el)

    # -- classical target ----------------------------------------------------

    def lie(self):
        if self._lie is None:
            from .classical import build_h, build_h_prime

            self._lie = build_h_prime(self.n) if self.gl else build_h(self.n)
        return self._lie


class TensorIntExpr:
    """Formal combination of pairs of generator words."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for k, c in terms.items():
                c = RATFUNC.coerce(c)
                if c:
                    self.terms[(tuple(k[0]), tuple(k[1]))] = c

    def add(self, wl, wr, coeff):
        key = (tuple(wl), tuple(wr))
        c = RATFUNC.coerce(coeff)
        s = self.terms.get(key)
        s = c if s is None else s + c
        if s:
            self.terms[key] = s
        else:
            self.terms.pop(key, None)
        return self

    def all_coeffs_laurent(self):
        return all(c.is_laurent() for c in self.terms.values())


# -- the toral specialization dictionary -------------------------------------------


def toral_images(lie, n, gl):
    """mu_i: the q=1 image of chi_i inside the classical Cartan span."""
    out = {}
    for i in range(1, n + 2):
        terms = {}
        for j in range(1, n + 1):
            c = Fraction(1 if j >= i else 0) - Fraction(j, n + 1)
            if c:
                terms[(lie.index[h_sym(j)],)] = c
        if gl:
            terms[(lie.index[C_SYM],)] = Fraction(1, n + 1)
        out[i] = PBWElement(lie, terms, reduce=False)
    return out


def specialize_gen(g, lie, n, gl=False, _mu=None):
    """Classical image of one generator under the q=1 dictionary."""
    if _mu is None:
        _mu = toral_images(lie, n, gl)
    if g.kind == "r":
        i, j = g.indices
        if i == j:
            return PBWElement.one(lie)
        if i < j:
            sign = (-1) ** (j - i)
            return PBWElement.gen(lie, f_sym(j, i)).scale(sign)
        sign = (-1) ** (i - j - 1)
        return PBWElement.gen(lie, e_sym(j, i)).scale(sign)
    if g.kind == "phi":
        (i,) = g.indices
        return PBWElement.gen(lie, h_sym(i))
    if g.kind == "chi":
        (i,) = g.indices
        return _mu[i]
    if g.kind == "psi":
        (i,) = g.indices
        out = PBWElement.zero(lie)
        for s in range(1, i + 1):
            out = out + _mu[s]
        return out
    raise OutOfForm(f"cannot specialize {g}")


def specialize_phi(expr, lie, n, gl=False):
    """q=1 image of a formal integer-form expression in the PBW engine."""
    mu = toral_images(lie, n, gl)
    out = PBWElement.zero(lie)
    for w, c in expr.terms.items():
        v = c.regular_at_one()
        if not isinstance(v, Fraction):
            raise OutOfForm(f"coefficient {c} has a pole at q=1")
        if not v:
            continue
        acc = PBWElement.one(lie)
        for g in w:
            acc = acc * specialize_gen(g, lie, n, gl, _mu=mu)
        out = out + acc.scale(v)
    return out


# -- lattice expansion --------------------------------------------------------------


def _binom(a, b):
    out = 1
    for t in range(b):
        out = out * (a - t) // (t + 1)
    return out


def expand_lattice_word(ctx, word, scaling="r"):
    """Expand an (already canonical) word over the lattice monomials.

    Returns {(lower_cells, chi_exponents, upper_cells): RatFunc}.  Diagonal
    letters are converted through rho_ii = 1 + (q-1) chi_i; off-diagonal
    letters stay as matrix entries ("rho") or are rescaled to the r
    normalization ("r").
    """
    n = ctx.n
    lower, diag, upper = [], [0] * (n + 1), []
    for p in word:
        i, j = ctx.alg.cell_of(p) if hasattr(ctx, "alg") else ctx.cell_of(p)
        if i > j:
            lower.append((i, j))
        elif i < j:
            upper.append((i, j))
        else:
            diag[i - 1] += 1
    base = RF_ONE
    if scaling == "r":
        d = len(lower) + len(upper)
        if d:
            base = RF_QMQI ** d
    out = {}
    stack = [(0, [], base)]
    while stack:
        pos, kexps, coeff = stack.pop()
        if pos == n + 1:
            key = (tuple(lower), tuple(kexps), tuple(upper))
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
            continue
        N = diag[pos]
        for K in range(N + 1):
            c = coeff * _binom(N, K)
            if K:
                c = c * (RF_QM1 ** K)
            stack.append((pos + 1, kexps + [K], c))
    return out


def expand_lattice(ctx, el, scaling="r"):
    out = {}
    for w, c in el.terms.items():
        for key, lc in expand_lattice_word(ctx, w, scaling).items():
            s = out.get(key)
            add = c * lc
            s = add if s is None else s + add
            if s:
                out[key] = s
            else:
                out.pop(key, None)
    return out


def lattice_mono_element(ctx, key):
    """Rebuild the ambient element of a lattice monomial."""
    lower, kexps, upper = key
    el = NCElement.one(ctx.spec)
    for ij in lower:
        el = el * ctx.alg.gen(*ij)
    for i, K in enumerate(kexps, start=1):
        for _ in range(K):
            el = el * ctx.lift_gen(chigen(i))
    for ij in upper:
        el = el * ctx.alg.gen(*ij)
    return el


class DivisibilityResult:
    def __init__(self, ok, quotient=None, witness=None):
        self.ok = ok
        self.quotient = quotient
        self.witness = witness

    def __bool__(self):
        return self.ok


def q_minus_1_divisibility(ctx, el):
    """Coefficient-wise (q-1)-divisibility in the canonical lattice basis.

    The basis keeps off-diagonal matrix entries unscaled and expands the
    diagonal part in the divided elements chi_i; success returns the exact
    quotient as an ambient element.
    """
    coords = expand_lattice(ctx, el, scaling="rho")
    quot = NCElement.zero(ctx.spec)
    for key, c in sorted(coords.items(), key=lambda kv: str(kv[0])):
        if not c.is_laurent():
            return DivisibilityResult(False, witness=(key, c))
        try:
            lp = c.to_laurent().divide_q_minus_1()
        except NotDivisible:
            return DivisibilityResult(False, witness=(key, c))
        quot = quot + lattice_mono_element(ctx, key).scale(RatFunc.from_laurent(lp))
    return DivisibilityResult(True, quotient=quot)


def specialize_lattice_mono(key, lie, n, gl, mu):
    lower, kexps, upper = key
    acc = PBWElement.one(lie)
    for (i, j) in lower:
        acc = acc * specialize_gen(rgen(i, j), lie, n, gl)
    for i, K in enumerate(kexps, start=1):
        for _ in range(K):
            acc = acc * mu[i]
    for (i, j) in upper:
        acc = acc * specialize_gen(rgen(i, j), lie, n, gl)
    return acc


def poisson_cobracket(ctx, expr):
    """((Delta - Delta^op)(x) / (q-1)) at q=1, mapped into the classical
    tensor square through the specialization dictionary."""
    el = ctx.lift(expr) if isinstance(expr, IntExpr) else expr
    t = ctx.coproduct(el)
    d = t - t.swap()
    lie = ctx.lie()
    mu = toral_images(lie, ctx.n, ctx.gl)
    coords = {}
    for (wl, wr), c in d.terms.items():
        lexp = expand_lattice_word(ctx, wl, scaling="r")
        rexp = expand_lattice_word(ctx, wr, scaling="r")
        for kl, cl in lexp.items():
            for kr, cr in rexp.items():
                coeff = c * cl * cr
                if not coeff:
                    continue
                key = (kl, kr)
                s = coords.get(key)
                s = coeff if s is None else s + coeff
                if s:
                    coords[key] = s
                else:
                    coords.pop(key, None)
    out = ClassicalTensor.zero(lie)
    for (kl, kr), coeff in coords.items():
        if not coeff.is_laurent():
            raise NotDivisible(coeff)
        lp = coeff.to_laurent().divide_q_minus_1()
        v = Fraction(lp.evaluate_at_one())
        if not v:
            continue
        pl = specialize_lattice_mono(kl, lie, ctx.n, ctx.gl, mu)
        pr = specialize_lattice_mono(kr, lie, ctx.n, ctx.gl, mu)
        out = out.add_pair(pl, pr, v)
    return out


# -- relation and Hopf catalogs -------------------------------------------------------


@dataclass
class RelationRecord:
    id: str
    instance: str
    status: str  # "verified" | "corrected" | "failed"
    variant: str | None = None
    residual: str | None = None

    def to_json(self):
        out = {"id": self.id, "instance": self.instance, "status": self.status}
        if self.variant:
            out["variant"] = self.variant
        if self.residual:
            out["residual"] = self.residual
        return out


def _perm_inversions_seq(seq):
    return sum(
        1 for a in range(len(seq)) for b in range(a + 1, len(seq)) if seq[a] > seq[b]
    )


def _dettilde_expr(index_rows, index_cols, drop_identity=False, coeff_shift=0):
    """d~et-style expansion over bijections rows -> cols, with entrywise
    off-diagonal count e and coefficient (-q)^l (q - q^-1)^(e + coeff_shift)."""
    expr = IntExpr.zero()
    rows = list(index_rows)
    cols = list(index_cols)
    for perm in permutations(cols):
        e = sum(1 for u, v in zip(rows, perm) if u != v)
        if drop_identity and e == 0:
            continue
        l = _perm_inversions_seq(perm)
        word = tuple(rgen(u, v) for u, v in zip(rows, perm))
        power = e + coeff_shift
        coeff = RatFunc.from_laurent(neg_q_power(l))
        if power >= 0:
            coeff = coeff * (RF_QMQI ** power)
        else:
            coeff = coeff * (RF_QMQI.inverse() ** (-power))
        expr = expr + IntExpr.word(word, coeff)
    return expr


def _dettilde_positional(index_rows, index_cols, coeff_shift=0):
    """The literal printed reading: e counts positional non-fixed points."""
    expr = IntExpr.zero()
    rows = list(index_rows)
    cols = list(index_cols)
    for perm_ix in permutations(range(len(cols))):
        e = sum(1 for t, p in enumerate(perm_ix) if t != p)
        l = _perm_inversions_seq(perm_ix)
        word = tuple(rgen(rows[t], cols[p]) for t, p in enumerate(perm_ix))
        power = e + coeff_shift
        coeff = RatFunc.from_laurent(neg_q_power(l))
        coeff = coeff * (RF_QMQI ** power if power >= 0 else RF_QMQI.inverse() ** (-power))
        expr = expr + IntExpr.word(word, coeff)
    return expr


def _qm1_pow(a, b):
    """(q-1)^a (1+q^-1)^b as a RatFunc."""
    return RatFunc.from_laurent((Q_MINUS_1 ** a) * (ONE_PLUS_QINV ** b))


def _comm(x, y):
    return x * y - y * x


def _r_relation_entries(n):
    """The shared r_ij relations of all three catalogs."""
    out = []
    rng = range(1, n + 2)
    for i in rng:
        for j in rng:
            for k in rng:
                if j < k:
                    lhs = IntExpr.word((rgen(i, j), rgen(i, k)))
                    rhs = IntExpr.word((rgen(i, k), rgen(i, j)), RatFunc.from_laurent(LaurentPoly({1: 1})))
                    out.append(("r.row", f"i={i},j={j},k={k}", [("printed", lhs, rhs)]))
    for k in rng:
        for i in rng:
            for h in rng:
                if i < h:
                    lhs = IntExpr.word((rgen(i, k), rgen(h, k)))
                    rhs = IntExpr.word((rgen(h, k), rgen(i, k)), RatFunc.from_laurent(LaurentPoly({1: 1})))
                    out.append(("r.col", f"i={i},h={h},k={k}", [("printed", lhs, rhs)]))
    for i in rng:
        for j in rng:
            for k in rng:
                for l in rng:
                    if i < j and k < l:
                        lhs = IntExpr.word((rgen(i, l), rgen(j, k)))
                        rhs = IntExpr.word((rgen(j, k), rgen(i, l)))
                        out.append(
                            ("r.anti", f"i={i},j={j},k={k},l={l}", [("printed", lhs, rhs)])
                        )
                        m = (
                            1
                            + (1 if i == k else 0)
                            + (1 if j == l else 0)
                            - (1 if i == l else 0)
                            - (1 if j == k else 0)
                        )
                        lhs2 = IntExpr.word((rgen(i, k), rgen(j, l))) - IntExpr.word(
                            (rgen(j, l), rgen(i, k))
                        )
                        rhs2 = IntExpr.word((rgen(i, l), rgen(j, k)), RF_QMQI ** m)
                        out.append(
                            ("r.cross", f"i={i},j={j},k={k},l={l}", [("printed", lhs2, rhs2)])
                        )
    return out


def _phi_catalog_entries(n):
    out = []
    rng = range(1, n + 2)
    for i in range(1, n + 1):
        lhs = IntExpr.gen(phigen(i)).scale(RF_QM1)
        rhs = IntExpr.gen(rgen(i, i)) - IntExpr.gen(rgen(i + 1, i + 1))
        out.append(("Q.phi-def", f"i={i}", [("printed", lhs, rhs)]))
        P = IntExpr.gen(phigen(i))
        for j in rng:
            for k in rng:
                com = _comm(P, IntExpr.gen(rgen(j, k)))
                inst = f"i={i},j={j},k={k}"
                if (j < i and k > i + 1) or (j > i + 1 and k < i):
                    out.append(("Q.phi-r-zero", inst, [("printed", com, IntExpr.zero())]))
                elif j < i and k < i:
                    rhs = (
                        IntExpr.word((rgen(i + 1, k), rgen(j, i + 1)))
                        - IntExpr.word((rgen(i, k), rgen(j, i)))
                    ).scale(_qm1_pow(1 + (j == k), 2 + (j == k)))
                    out.append(("Q.phi-r-lowlow", inst, [("printed", com, rhs)]))
                elif j > i + 1 and k > i + 1:
                    rhs = (
                        IntExpr.word((rgen(i + 1, k), rgen(j, i + 1)))
                        - IntExpr.word((rgen(i, k), rgen(j, i)))
                    ).scale(-_qm1_pow(1 + (j == k), 2 + (j == k)))
                    out.append(("Q.phi-r-hihi", inst, [("printed", com, rhs)]))
        for j in rng:
            if j < i:
                com = _comm(P, IntExpr.gen(rgen(j, i)))
                rhs = -IntExpr.word((rgen(i, i), rgen(j, i))) + IntExpr.word(
                    (rgen(j, i + 1), rgen(i + 1, i)), _qm1_pow(1, 2)
                )
                out.append(("Q.phi-rji-low", f"i={i},j={j}", [("printed", com, rhs)]))
                com2 = _comm(P, IntExpr.gen(rgen(j, i + 1)))
                rhs2 = IntExpr.word((rgen(i + 1, i + 1), rgen(j, i + 1)))
                out.append(("Q.phi-rji1-low", f"i={i},j={j}", [("printed", com2, rhs2)]))
                com3 = _comm(P, IntExpr.gen(rgen(i, j)))
                rhs3 = -IntExpr.word((rgen(i, i), rgen(i, j))) + IntExpr.word(
                    (rgen(i, i + 1), rgen(i + 1, j)), _qm1_pow(1, 2)
                )
                out.append(("Q.phi-rij-low", f"i={i},j={j}", [("printed", com3, rhs3)]))
                com4 = _comm(P, IntExpr.gen(rgen(i + 1, j)))
                rhs4 = IntExpr.word((rgen(i + 1, i + 1), rgen(i + 1, j)))
                out.append(("Q.phi-ri1j-low", f"i={i},j={j}", [("printed", com4, rhs4)]))
            if j > i + 1:
                com = _comm(P, IntExpr.gen(rgen(j, i)))
                rhs = IntExpr.word((rgen(j, i), rgen(i, i)))
                out.append(("Q.phi-rji-hi", f"i={i},j={j}", [("printed", com, rhs)]))
                # printed says "forall j<i" on the second r_{j,i+1} line; the
                # declared variant reads it as j>i+1
                com2 = _comm(P, IntExpr.gen(rgen(j, i + 1)))
                rhs2 = -IntExpr.word((rgen(j, i + 1), rgen(i + 1, i + 1))) + IntExpr.word(
                    (rgen(i, i + 1), rgen(j, i)), _qm1_pow(1, 2)
                )
                out.append(
                    ("Q.phi-rji1-hi", f"i={i},j={j}", [("index-swapped(j>i+1)", com2, rhs2)])
                )
                com3 = _comm(P, IntExpr.gen(rgen(i, j)))
                rhs3 = IntExpr.word((rgen(i, j), rgen(i, i)))
                out.append(("Q.phi-rij-hi", f"i={i},j={j}", [("printed", com3, rhs3)]))
                com4 = _comm(P, IntExpr.gen(rgen(i + 1, j)))
                rhs4 = -IntExpr.word((rgen(i + 1, j), rgen(i + 1, i + 1))) + IntExpr.word(
                    (rgen(i, j), rgen(i + 1, i)), _qm1_pow(1, 2)
                )
                out.append(("Q.phi-ri1j-hi", f"i={i},j={j}", [("printed", com4, rhs4)]))
        rhs = IntExpr.word((rgen(i + 1, i), rgen(i, i + 1)), _qm1_pow(2, 3))
        out.append(
            ("Q.phi-rii", f"i={i}", [("printed", _comm(P, IntExpr.gen(rgen(i, i))), rhs)])
        )
        out.append(
            (
                "Q.phi-ri1i1",
                f"i={i}",
                [("printed", _comm(P, IntExpr.gen(rgen(i + 1, i + 1))), rhs)],
            )
        )
        rhs = IntExpr.word((rgen(i, i + 1), rgen(i, i))) + IntExpr.word(
            (rgen(i + 1, i + 1), rgen(i, i + 1))
        )
        out.append(
            (
                "Q.phi-rii1",
                f"i={i}",
                [("printed", _comm(P, IntExpr.gen(rgen(i, i + 1))), rhs)],
            )
        )
        rhs = IntExpr.word((rgen(i + 1, i), rgen(i, i))) + IntExpr.word(
            (rgen(i + 1, i + 1), rgen(i + 1, i))
        )
        out.append(
            (
                "Q.phi-ri1i",
                f"i={i}",
                [("printed", _comm(P, IntExpr.gen(rgen(i + 1, i))), rhs)],
            )
        )
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i >= j:
                continue
            com = _comm(IntExpr.gen(phigen(i)), IntExpr.gen(phigen(j)))
            rhs = (
                IntExpr.word((rgen(i, j), rgen(j, i)))
                + IntExpr.word((rgen(i + 1, j + 1), rgen(j + 1, i + 1)))
                - IntExpr.word((rgen(i, j + 1), rgen(j + 1, i)))
            )
            if i + 1 != j:
                rhs = rhs - IntExpr.word((rgen(i + 1, j), rgen(j, i + 1)))
            rhs = rhs.scale(_qm1_pow(1, 3))
            out.append(("Q.phi-phi", f"i={i},j={j}", [("printed", com, rhs)]))
    return out


def _eta_zeta(i, j, k):
    eta = 1 if i < min(j, k) else 0
    zeta = 1 if i >= max(j, k) else 0
    return eta, zeta


def _psi_catalog_entries(n, gl=False):
    out = []
    rng = range(1, n + 2)
    for i in rng:
        lhs = IntExpr.gen(psigen(i)).scale(RF_QM1)
        rhs = IntExpr.word(tuple(rgen(s, s) for s in range(1, i + 1))) - IntExpr.one()
        out.append(("P.psi-def", f"i={i}", [("printed", lhs, rhs)]))
    for i in rng:
        for j in rng:
            for k in rng:
                inst = f"i={i},j={j},k={k}"
                eta, zeta = _eta_zeta(i, j, k)
                lhs = IntExpr.word((psigen(i), rgen(j, k)))
                qpow = RatFunc.from_laurent(LaurentPoly({1 - eta - zeta: 1}))
                coeff = _qm1_pow(1 + (j == k), 2 + (j == k))

                def sum_words(srange, tail_i=i, jj=j, kk=k):
                    e = IntExpr.zero()
                    for s in srange:
                        word = tuple(rgen(u, u) for u in range(1, s)) + (
                            rgen(s, kk),
                            rgen(jj, s),
                        ) + tuple(rgen(u, u) for u in range(s + 1, tail_i + 1))
                        e = e + IntExpr.word(word)
                    return e

                printed_rhs = IntExpr.word((rgen(j, k), psigen(i)), qpow) + sum_words(
                    range(1, i + 1)
                ).scale(coeff * (eta - zeta))
                variants = [("printed", lhs, printed_rhs)]
                # derived variant: the q-power epsilon is 1 exactly when
                # min <= i < max; a lone r_jk term appears then, and the two
                # correction sums have s < min (weighted q^eps) and s > max
                eps = 1 if min(j, k) <= i < max(j, k) else 0
                qe = RatFunc.from_laurent(LaurentPoly({eps: 1}))
                rhs2 = IntExpr.word((rgen(j, k), psigen(i)), qe)
                if eps:
                    rhs2 = rhs2 + IntExpr.gen(rgen(j, k))
                low = sum_words(range(1, min(min(j, k), i + 1))).scale(coeff * qe)
                high = sum_words(range(max(j, k) + 1, i + 1)).scale(coeff)
                rhs2 = rhs2 + low - high
                variants.append(("derived", lhs, rhs2))
                out.append(("P.psi-r", inst, variants))
    for i in rng:
        for j in rng:
            if i >= j:
                continue
            com = _comm(IntExpr.gen(psigen(i)), IntExpr.gen(psigen(j)))
            rhs = IntExpr.zero()
            for k in range(i + 1, j + 1):
                for s in range(1, i + 1):
                    word = (
                        tuple(rgen(u, u) for u in range(1, k))
                        + tuple(rgen(u, u) for u in range(1, s))
                        + (rgen(s, k), rgen(k, s))
                        + tuple(rgen(u, u) for u in range(s + 1, i + 1))
                        + tuple(rgen(u, u) for u in range(k + 1, j + 1))
                    )
                    rhs = rhs + IntExpr.word(word)
            rhs = rhs.scale(_qm1_pow(1, 3))
            out.append(("P.psi-psi", f"i={i},j={j}", [("printed", com, rhs)]))
    if not gl:
        lhs = IntExpr.gen(psigen(n + 1))
        rng2 = list(range(1, n + 2))
        rhs = _dettilde_expr(rng2, rng2, drop_identity=True, coeff_shift=-1).scale(
            RatFunc.from_laurent(ONE_PLUS_QINV) * -1
        )
        # (q - q^-1)^(e-1) (1+q^-1) = (q-1)^(e-1) (1+q^-1)^e
        out.append(("P.psi-last", "", [("printed", lhs, rhs)]))
    return out


def _chi_catalog_entries(n, gl=False):
    out = []
    rng = range(1, n + 2)
    for i in rng:
        lhs = IntExpr.gen(chigen(i)).scale(RF_QM1)
        rhs = IntExpr.gen(rgen(i, i)) - IntExpr.one()
        out.append(("X.chi-def", f"i={i}", [("printed", lhs, rhs)]))
        X = IntExpr.gen(chigen(i))
        for j in rng:
            for k in rng:
                inst = f"i={i},j={j},k={k}"
                com = _comm(X, IntExpr.gen(rgen(j, k)))
                if (j < i < k) or (j > i > k):
                    out.append(("X.chi-r-zero", inst, [("printed", com, IntExpr.zero())]))
                elif j < i and k < i and j != k:
                    printed = IntExpr.word((rgen(i, i), rgen(i, k)), -_qm1_pow(2, 3))
                    derived = IntExpr.word(
                        (rgen(j, i), rgen(i, k)), -_qm1_pow(1 + (j == k), 2 + (j == k))
                    )
                    out.append(
                        ("X.chi-r-lowlow", inst, [("printed", com, printed), ("derived", com, derived)])
                    )
                elif j > i and k > i and j != k:
                    printed = IntExpr.word((rgen(i, i), rgen(i, k)), _qm1_pow(2, 3))
                    derived = IntExpr.word(
                        (rgen(i, k), rgen(j, i)), _qm1_pow(1 + (j == k), 2 + (j == k))
                    )
                    out.append(
                        ("X.chi-r-hihi", inst, [("printed", com, printed), ("derived", com, derived)])
                    )
                elif j == k and j != i:
                    derived = IntExpr.word(
                        (rgen(j, i), rgen(i, j)) if j < i else (rgen(i, j), rgen(j, i)),
                        -_qm1_pow(2, 3) if j < i else _qm1_pow(2, 3),
                    )
                    out.append(("X.chi-r-diag", inst, [("derived", com, derived)]))
        for j in rng:
            if j == i:
                continue
            inst = f"i={i},j={j}"
            com = _comm(X, IntExpr.gen(rgen(j, i)))
            if j < i:
                printed = -IntExpr.word((rgen(i, i), rgen(j, i)))
                out.append(("X.chi-rji-low", inst, [("printed", com, printed)]))
            else:
                printed = IntExpr.word((rgen(i, i), rgen(j, i)))
                derived = IntExpr.word((rgen(j, i), rgen(i, i)))
                out.append(
                    ("X.chi-rji-hi", inst, [("printed", com, printed), ("derived", com, derived)])
                )
            com2 = _comm(X, IntExpr.gen(rgen(i, j)))
            if j < i:
                printed = -IntExpr.word((rgen(i, i), rgen(i, j)))
                out.append(("X.chi-rik-low", inst, [("printed", com2, printed)]))
            else:
                printed = IntExpr.word((rgen(i, i), rgen(i, j)))
                derived = IntExpr.word((rgen(i, j), rgen(i, i)))
                out.append(
                    ("X.chi-rik-hi", inst, [("printed", com2, printed), ("derived", com2, derived)])
                )
        out.append(
            (
                "X.chi-rii",
                f"i={i}",
                [("printed", _comm(X, IntExpr.gen(rgen(i, i))), IntExpr.zero())],
            )
        )
    for i in rng:
        for j in rng:
            if i > j:
                continue
            com = _comm(IntExpr.gen(chigen(i)), IntExpr.gen(chigen(j)))
            if i == j:
                out.append(("X.chi-chi", f"i={i},j={j}", [("printed", com, IntExpr.zero())]))
            else:
                rhs = IntExpr.word((rgen(i, j), rgen(j, i)), _qm1_pow(1, 3))
                out.append(("X.chi-chi", f"i={i},j={j}", [("printed", com, rhs)]))
    if not gl:
        lhs = IntExpr.zero()
        for i in rng:
            word = tuple(rgen(u, u) for u in range(1, i)) + (chigen(i),)
            lhs = lhs + IntExpr.word(word)
        rng2 = list(range(1, n + 2))
        sigma_sum = _dettilde_expr(rng2, rng2, drop_identity=True, coeff_shift=-1).scale(
            RatFunc.from_laurent(ONE_PLUS_QINV)
        )
        out.append(
            (
                "X.sum",
                "",
                [("printed", lhs, sigma_sum), ("sign-flipped", lhs, -sigma_sum)],
            )
        )
    return out


def relation_catalog(form, n, gl=False):
    """All relation entries for one form; each entry is
    (id, instance, [(variant_name, lhs, rhs), ...])."""
    entries = list(_r_relation_entries(n))
    if not gl:
        rng = list(range(1, n + 2))
        det = _dettilde_expr(rng, rng)
        entries.append(("det.tilde", "", [("printed", det, IntExpr.one())]))
    if form == "Q":
        entries += _phi_catalog_entries(n)
    elif form == "P":
        entries += _psi_catalog_entries(n, gl=gl)
    elif form == "plain":
        entries += _chi_catalog_entries(n, gl=gl)
    else:
        raise ValueError(f"unknown form {form!r}")
    return entries


def verify_relation_catalog(form, n, gl=False, ctx=None):
    ctx = ctx or IntContext(n, gl=gl)
    records = []
    for rid, inst, variants in relation_catalog(form, n, gl=gl):
        rec = None
        first_residual = None
        for vname, lhs, rhs in variants:
            diff = ctx.lift(lhs) - ctx.lift(rhs)
            if diff.is_zero():
                status = "verified" if vname == "printed" else "corrected"
                rec = RelationRecord(rid, inst, status, variant=vname)
                break
            if first_residual is None:
                first_residual = str(diff)
        if rec is None:
            rec = RelationRecord(rid, inst, "failed", residual=first_residual)
        records.append(rec)
    return records


# -- Hopf catalog ---------------------------------------------------------------------


def _delta_r_entries(n):
    out = []
    rng = range(1, n + 2)
    for i in rng:
        for j in rng:
            if i == j:
                continue
            t = TensorIntExpr()
            t.add((rgen(i, i),), (rgen(i, j),), 1)
            t.add((rgen(i, j),), (rgen(j, j),), 1)
            for k in rng:
                if k != i and k != j:
                    t.add((rgen(i, k),), (rgen(k, j),), RF_QMQI)
            out.append(("hopf.delta-r-offdiag", f"i={i},j={j}", "delta", rgen(i, j), [("printed", t)]))
    for i in rng:
        printed = TensorIntExpr()
        printed.add((rgen(i, i),), (rgen(i, i),), 1)
        corrected = TensorIntExpr()
        corrected.add((rgen(i, i),), (rgen(i, i),), 1)
        for k in rng:
            if k != i:
                printed.add((rgen(i, k),), (rgen(k, i),), _qm1_pow(2, 2))
                corrected.add((rgen(i, k),), (rgen(k, i),), _qm1_pow(2, 2))
        # printed formula writes r_ik (x) r_kj in the diagonal line; reading
        # j = i makes the two identical, so "printed" == "corrected" here
        out.append(("hopf.delta-r-diag", f"i={i}", "delta", rgen(i, i), [("printed", corrected)]))
    return out


def _hopf_catalog_Q(n):
    out = _delta_r_entries(n)
    rng = range(1, n + 2)
    for i in range(1, n + 1):
        t = TensorIntExpr()
        t.add((rgen(i, i),), (phigen(i),), 1)
        t.add((phigen(i),), (rgen(i + 1, i + 1),), 1)
        for k in rng:
            if k != i:
                t.add((rgen(i, k),), (rgen(k, i),), _qm1_pow(1, 2))
            if k != i + 1:
                t.add((rgen(i + 1, k),), (rgen(k, i + 1),), -_qm1_pow(1, 2))
        out.append(("hopf.delta-phi", f"i={i}", "delta", phigen(i), [("printed", t)]))
    out += _antipode_r_entries(n)
    for i in range(1, n + 1):
        pre = tuple(rgen(s, s) for s in range(1, i))
        suf = tuple(rgen(s, s) for s in range(i + 2, n + 2))
        main = IntExpr.word(pre + (phigen(i),) + suf, -1)
        sum_i = _offdiag_minor_sum(n, skip=i)
        sum_i1 = _offdiag_minor_sum(n, skip=i + 1)
        printed = main + (sum_i1 - sum_i)
        corrected = main + (sum_i - sum_i1)
        out.append(
            (
                "hopf.S-phi",
                f"i={i}",
                "antipode",
                phigen(i),
                [("printed", printed), ("sign-flipped", corrected)],
            )
        )
    for i in range(1, n + 1):
        out.append(("hopf.eps-phi", f"i={i}", "counit", phigen(i), [("printed", 0)]))
    out += _eps_r_entries(n)
    return out


def _offdiag_minor_sum(n, skip):
    """sum over non-identity bijections of {1..n+1} minus {skip} of the
    d~et-style words with coefficient (-q)^l (q-1)^(e-1) (1+q^-1)^e."""
    idx = [s for s in range(1, n + 2) if s != skip]
    return _dettilde_expr(idx, idx, drop_identity=True, coeff_shift=-1).scale(
        RatFunc.from_laurent(ONE_PLUS_QINV)
    )


def _antipode_r_entries(n):
    out = []
    rng = range(1, n + 2)
    from .qsl import _select_antipode_sign

    sign = _select_antipode_sign()
    for i in rng:
        for j in rng:
            rows = [h for h in rng if h != j]
            cols = [k for k in rng if k != i]
            shift = -1 if i != j else 0
            corrected = _dettilde_expr(rows, cols, coeff_shift=shift).scale(
                RatFunc.from_laurent(neg_q_power(sign * (j - i)))
            )
            printed = _dettilde_positional(rows, cols).scale(
                RatFunc.from_laurent(neg_q_power(j - i))
            )
            out.append(
                (
                    "hopf.S-r",
                    f"i={i},j={j}",
                    "antipode",
                    rgen(i, j),
                    [("printed", printed), ("entrywise-minor", corrected)],
                )
            )
    return out


def _eps_r_entries(n):
    out = []
    for i in range(1, n + 2):
        for j in range(1, n + 2):
            out.append(
                (
                    "hopf.eps-r",
                    f"i={i},j={j}",
                    "counit",
                    rgen(i, j),
                    [("printed", 1 if i == j else 0)],
                )
            )
    return out


def _hopf_catalog_P(n):
    out = _delta_r_entries(n)
    rng = range(1, n + 2)
    for i in rng:
        t = TensorIntExpr()
        # maps s: {1..i} -> {1..n+1} moving at least one point
        def maps(prefix, pos):
            if pos > i:
                yield tuple(prefix)
                return
            for v in rng:
                yield from maps(prefix + [v], pos + 1)

        for s in maps([], 1):
            Ns = sum(1 for k in range(1, i + 1) if s[k - 1] != k)
            if Ns == 0:
                continue
            coeff = RatFunc.from_laurent(ONE_PLUS_QINV) * (
                RF_QMQI ** (2 * Ns - 1) if 2 * Ns - 1 >= 0 else RF_QMQI.inverse()
            )
            wl = tuple(rgen(k, s[k - 1]) for k in range(1, i + 1))
            wr = tuple(rgen(s[k - 1], k) for k in range(1, i + 1))
            t.add(wl, wr, coeff)
        t.add((psigen(i),), tuple(rgen(k, k) for k in range(1, i + 1)), 1)
        t.add((), (psigen(i),), 1)
        out.append(("hopf.delta-psi", f"i={i}", "delta", psigen(i), [("printed", t)]))
    out += _antipode_r_entries(n)
    for i in rng:
        out.append(("hopf.S-psi", f"i={i}", "antipode-psi", psigen(i), [("witness", None)]))
        out.append(("hopf.eps-psi", f"i={i}", "counit", psigen(i), [("printed", 0)]))
    out += _eps_r_entries(n)
    return out


def _hopf_catalog_plain(n):
    out = _delta_r_entries(n)
    rng = range(1, n + 2)
    for i in rng:
        printed = TensorIntExpr()
        printed.add((rgen(i, i),), (chigen(i),), 1)
        for k in rng:
            if k != i:
                printed.add((rgen(i, k),), (rgen(k, i),), _qm1_pow(1, 2))
        corrected = TensorIntExpr()
        corrected.add((rgen(i, i),), (chigen(i),), 1)
        corrected.add((chigen(i),), (), 1)
        for k in rng:
            if k != i:
                corrected.add((rgen(i, k),), (rgen(k, i),), _qm1_pow(1, 2))
        out.append(
            (
                "hopf.delta-chi",
                f"i={i}",
                "delta",
                chigen(i),
                [("printed", printed), ("chi-tensor-1-added", corrected)],
            )
        )
    out += _antipode_r_entries(n)
    for i in rng:
        pre = tuple(rgen(s, s) for s in range(1, i))
        suf_printed = tuple(rgen(s, s) for s in range(i + 2, n + 2))
        suf_full = tuple(rgen(s, s) for s in range(i + 1, n + 2))
        minor_sum = _offdiag_minor_sum(n, skip=i)
        full_idx = list(range(1, n + 2))
        full_sum = _dettilde_expr(full_idx, full_idx, drop_identity=True, coeff_shift=-1).scale(
            RatFunc.from_laurent(ONE_PLUS_QINV)
        )
        printed = IntExpr.word(pre + (chigen(i),) + suf_printed, -1) + minor_sum - full_sum
        corrected = IntExpr.word(pre + (chigen(i),) + suf_full, -1) + minor_sum - full_sum
        out.append(
            (
                "hopf.S-chi",
                f"i={i}",
                "antipode",
                chigen(i),
                [("printed", printed), ("suffix-from-i+1", corrected)],
            )
        )
        out.append(("hopf.eps-chi", f"i={i}", "counit", chigen(i), [("printed", 0)]))
    out += _eps_r_entries(n)
    return out


def hopf_catalog(form, n):
    if form == "Q":
        return _hopf_catalog_Q(n)
    if form == "P":
        return _hopf_catalog_P(n)
    if form == "plain":
        return _hopf_catalog_plain(n)
    raise ValueError(f"unknown form {form!r}")


def verify_hopf_catalog(form, n, ctx=None):
    ctx = ctx or IntContext(n, gl=False)
    records = []
    for rid, inst, mode, gen, variants in hopf_catalog(form, n):
        rec = None
        first_residual = None
        lifted = ctx.lift_gen(gen)
        for vname, payload in variants:
            if mode == "delta":
                lhs = ctx.coproduct(lifted)
                rhs = ctx.lift_tensor(payload)
                ok = (lhs - rhs).is_zero()
                residual = None if ok else str(lhs - rhs)
            elif mode == "counit":
                val = ctx.counit(lifted)
                ok = val == RATFUNC.coerce(payload)
                residual = None if ok else str(val)
            elif mode == "antipode":
                lhs = ctx.antipode(lifted)
                rhs = ctx.lift(payload)
                diff = lhs - rhs
                ok = diff.is_zero()
                if ok and not payload.all_coeffs_laurent():
                    ok = False
                    residual = "non-Laurent re-expansion"
                else:
                    residual = None if ok else str(diff)
            elif mode == "antipode-psi":
                ok, residual = _verify_s_psi(ctx, gen.indices[0])
            else:
                raise ValueError(mode)
            if ok:
                status = "verified" if vname in ("printed", "witness") else "corrected"
                rec = RelationRecord(rid, inst, status, variant=vname)
                break
            if first_residual is None:
                first_residual = residual
        if rec is None:
            rec = RelationRecord(rid, inst, "failed", residual=first_residual)
        records.append(rec)
    return records


# -- the S(psi) derivation, reproduced constructively ---------------------------------


def _sort_diag_expr(expr):
    """Sort diagonal letters inside formal words, inserting the exact
    commutator corrections r_hh r_kk - r_kk r_hh = (q-1)^3 (1+q^-1)^3 r_hk r_kh."""
    corr_coeff = _qm1_pow(3, 3)
    terms = dict(expr.terms)
    out = {}
    while terms:
        w, c = terms.popitem()
        for t in range(len(w) - 1):
            g1, g2 = w[t], w[t + 1]
            if (
                g1.kind == "r"
                and g2.kind == "r"
                and g1.indices[0] == g1.indices[1]
                and g2.indices[0] == g2.indices[1]
                and g1.indices[0] > g2.indices[0]
            ):
                k = g1.indices[0]
                h = g2.indices[0]
                pre, suf = w[:t], w[t + 2 :]
                w1 = pre + (g2, g1) + suf
                terms[w1] = terms.get(w1, RATFUNC.zero) + c
                w2 = pre + (rgen(h, k), rgen(k, h)) + suf
                terms[w2] = terms.get(w2, RATFUNC.zero) - c * corr_coeff
                break
        else:
            out[w] = out.get(w, RATFUNC.zero) + c
    e = IntExpr()
    e.terms = {w: c for w, c in out.items() if c}
    return e


def s_psi_witness(n, i):
    """Build W with S(psi_i) + psi_i = (q-1) W, W an explicit Laurent
    combination of generator words, following the antipode derivation."""
    rng = list(range(1, n + 2))
    qm1_inv2 = RF_QM1.inverse() ** 2
    # E': G = 1 - (q-1)^2 E' from the full d~et relation
    eprime = _dettilde_expr(rng, rng, drop_identity=True, coeff_shift=0)
    eprime = IntExpr({w: c * qm1_inv2 for w, c in eprime.terms.items()})
    # D~_j: S(r_jj) = M_j + (q-1)^2 D~_j
    dtilde = {}
    for j in rng:
        idx = [s for s in rng if s != j]
        dt = _dettilde_expr(idx, idx, drop_identity=True, coeff_shift=0)
        dtilde[j] = IntExpr({w: c * qm1_inv2 for w, c in dt.terms.items()})
    m_word = {j: tuple(rgen(s, s) for s in rng if s != j) for j in rng}
    g_word = tuple(rgen(s, s) for s in rng)
    h_word = tuple(rgen(s, s) for s in rng if s > i)
    # A_i = prod_{j=i..1} (M_j + (q-1)^2 D~_j), expanded
    a = IntExpr.one()
    for j in range(i, 0, -1):
        factor = IntExpr.word(m_word[j]) + dtilde[j].scale(_qm1_pow(2, 0))
        a = a * factor
    main = tuple(g for j in range(i, 0, -1) for g in m_word[j])
    x1 = (a - IntExpr.word(main)).divide_coeffs_q_minus_1(2)
    # sort both the concatenated product and G^{i-1} H_i down to the same
    # sorted diagonal word; their correction tails differ by elements with
    # explicit (q-1)^3 coefficients
    s_main = _sort_diag_expr(IntExpr.word(main))
    t_word = g_word * (i - 1) + h_word
    s_t = _sort_diag_expr(IntExpr.word(t_word))
    y = s_main - s_t  # Mword = Tword + y, all coefficients (q-1)^3-divisible
    # T = G^{i-1} H_i with G = 1 - (q-1)^2 E'
    gexpr = IntExpr.one() - eprime.scale(_qm1_pow(2, 0))
    texpr = IntExpr.one()
    for _ in range(i - 1):
        texpr = texpr * gexpr
    texpr = texpr * IntExpr.word(h_word)
    x3 = (texpr - IntExpr.word(h_word)).divide_coeffs_q_minus_1(2)
    x = x1 + x3 + y.divide_coeffs_q_minus_1(2)
    # psi-bar_i: (H_i - 1)/(q-1) as an explicit chi-expression
    psibar = IntExpr.zero()
    for s in range(i + 1, n + 2):
        word = tuple(rgen(u, u) for u in range(i + 1, s)) + (chigen(s),)
        psibar = psibar + IntExpr.word(word)
    w = x - eprime - IntExpr.gen(psigen(i)) * psibar
    return w


def _verify_s_psi(ctx, i):
    """S(psi_i) = -psi_i + (q-1) W with W an explicit lattice combination."""
    w = s_psi_witness(ctx.n, i)
    if not w.all_coeffs_laurent():
        return False, "witness has non-Laurent coefficients"
    lhs = ctx.antipode(ctx.lift_gen(psigen(i))) + ctx.lift_gen(psigen(i))
    rhs = ctx.lift(w).scale(RF_QM1)
    diff = lhs - rhs
    if diff.is_zero():
        return True, None
    return False, str(diff)


def check_span_identities(n, ctx=None):
    """The toral span identities: psi in chi, phi = chi_i - chi_{i+1}, and
    the (q-1)-divisibility of sum chi_i with an explicit witness."""
    ctx = ctx or IntContext(n, gl=False)
    report = []
    for i in range(1, n + 2):
        lhs = IntExpr.gen(psigen(i))
        rhs = IntExpr.zero()
        for s in range(1, i + 1):
            word = tuple(rgen(u, u) for u in range(1, s)) + (chigen(s),)
            rhs = rhs + IntExpr.word(word)
        ok = (ctx.lift(lhs) - ctx.lift(rhs)).is_zero()
        report.append(RelationRecord("span.psi-in-chi", f"i={i}", "verified" if ok else "failed"))
    for i in range(1, n + 1):
        lhs = IntExpr.gen(phigen(i))
        rhs = IntExpr.gen(chigen(i)) - IntExpr.gen(chigen(i + 1))
        ok = (ctx.lift(lhs) - ctx.lift(rhs)).is_zero()
        report.append(RelationRecord("span.phi-chi", f"i={i}", "verified" if ok else "failed"))
    # sum chi_i = (q-1)(B - A)
    rng = list(range(1, n + 2))
    b = _dettilde_expr(rng, rng, drop_identity=True, coeff_shift=-2).scale(
        RatFunc.from_laurent(ONE_PLUS_QINV ** 2) * -1
    )
    # (q - q^-1)^e / (q-1)^2 -> using shift -2 gives (q-1)^{e-2}(1+q^-1)^{e-2};
    # two more (1+q^-1) factors restore (1+q^-1)^e
    a = IntExpr.zero()
    for i in rng:
        for s in range(1, i):
            word = (
                tuple(rgen(u, u) for u in range(1, s))
                + (chigen(s),)
                + (chigen(i),)
            )
            a = a + IntExpr.word(word)
    w = b - a
    lhs = IntExpr.zero()
    for i in rng:
        lhs = lhs + IntExpr.gen(chigen(i))
    ok = (ctx.lift(lhs) - ctx.lift(w).scale(RF_QM1)).is_zero() and w.all_coeffs_laurent()
    report.append(
        RelationRecord("span.sum-chi", "", "verified" if ok else "failed")
    )
    return report


def lift(gen_or_expr, ctx):
    """Lift a generator or formal expression into the ambient algebra."""
    if isinstance(gen_or_expr, IntFormGen):
        return ctx.lift_gen(gen_or_expr)
    return ctx.lift(gen_or_expr)
