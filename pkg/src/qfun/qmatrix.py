"""The quantum matrix bialgebra on (n+1) x (n+1) generators.

Relations, generator orders, comultiplication/counit, quantum minors and
the quantum determinant, triangular decomposition, and ordered-monomial
(PBW) enumeration.
"""

from __future__ import annotations

from itertools import combinations_with_replacement, permutations

from .freealg import AlgebraSpec, GenSym, NCElement
from .laurent import (
    LAURENT,
    LaurentPoly,
    Q,
    QINV,
    Q_MINUS_QINV,
    neg_q_power,
)


class InadmissibleOrder(Exception):
    pass


class BadIndexLists(Exception):
    pass


class OrderMismatch(Exception):
    pass


def x_gen(i, j):
    return GenSym("x", (i, j))


def _order_key(name, n):
    if name == "lex":
        return lambda ij: ij
    if name == "antidiag":
        # N+ (i+j < n+2), then the antidiagonal, then N-
        def key(ij):
            i, j = ij
            s = i + j
            block = 0 if s < n + 2 else (1 if s == n + 2 else 2)
            return (block, i, j)

        return key
    if name == "triangular":
        # lower triangle, then diagonal, then upper triangle
        def key(ij):
            i, j = ij
            block = 0 if i > j else (1 if i == j else 2)
            return (block, i, j)

        return key
    raise InadmissibleOrder(f"unknown order {name!r}")


def pair_relation(u, v):
    """Straighten x_u * x_v: returns (swap_coeff, correction or None).

    The product equals swap_coeff * x_v x_u + (q - q^-1) * sign * x_a x_b
    when a correction is present; correction is then ((a, b), sign).
    """
    i, k = u
    j, l = v
    if i == j and k == l:
        return None, None  # same generator: nothing to do
    if i == j:
        return (Q if k < l else QINV), None
    if k == l:
        return (Q if i < j else QINV), None
    if (i < j and k > l) or (i > j and k < l):
        return LaurentPoly({0: 1}), None
    if i < j and k < l:
        return LaurentPoly({0: 1}), (((i, l), (j, k)), 1)
    # i > j and k > l
    return LaurentPoly({0: 1}), (((j, k), (i, l)), -1)


def build_matrix_spec(n, order="lex", domain=LAURENT, cells=None, name=None):
    """AlgebraSpec for the quantum matrix relations on the given cells.

    cells: iterable of (i, j) pairs (defaults to the full square).  Rule
    corrections whose letters fall outside the cell set are dropped, which
    realizes the Borel quotients.
    """
    if cells is None:
        cells = [(i, j) for i in range(1, n + 2) for j in range(1, n + 2)]
    cells = sorted(set(cells))
    if isinstance(order, str):
        key = _order_key(order, n)
        ordered = sorted(cells, key=key)
    else:
        ordered = list(order)
        if sorted(ordered) != cells:
            raise InadmissibleOrder("custom order is not a permutation of the cells")
    spec = AlgebraSpec(
        [x_gen(i, j) for i, j in ordered],
        domain=domain,
        name=name or f"M({n + 1})/{order if isinstance(order, str) else 'custom'}",
    )
    cellset = set(cells)
    pos = {ij: spec.index[x_gen(*ij)] for ij in cells}
    for u in cells:
        for v in cells:
            if pos[u] <= pos[v]:
                continue
            swap, corr = pair_relation(u, v)
            rhs = [(swap, (pos[v], pos[u]))]
            if corr is not None:
                (a, b), sign = corr
                if a in cellset and b in cellset:
                    pa, pb = pos[a], pos[b]
                    if pa > pb:
                        pa, pb = pb, pa  # correction pair always commutes
                    rhs.append((Q_MINUS_QINV * sign, (pa, pb)))
            try:
                spec.add_rule(pos[u], pos[v], rhs)
            except ValueError as exc:
                raise InadmissibleOrder(str(exc)) from exc
    return spec


class MatrixAlgebra:
    """Context object for the quantum matrix bialgebra."""

    def __init__(self, n, order="lex", domain=LAURENT, check_confluence=True):
        if n < 1:
            raise ValueError("n must be >= 1")
        self.n = n
        self.order_name = order if isinstance(order, str) else "custom"
        self.spec = build_matrix_spec(n, order=order, domain=domain)
        self.domain = domain
        self._detq = None
        if check_confluence:
            from .freealg import confluence_check

            report = confluence_check(self.spec)
            if not report["ok"]:
                raise InadmissibleOrder(
                    f"rule table not confluent: {report['failures'][:3]}"
                )

    # -- element constructors ----------------------------------------------

    def gen(self, i, j):
        return NCElement.gen(self.spec, x_gen(i, j))

    def one(self):
        return NCElement.one(self.spec)

    def zero(self):
        return NCElement.zero(self.spec)

    def element(self, terms):
        return NCElement(self.spec, terms)

    def monomial(self, cells, coeff=1):
        word = tuple(self.spec.index[x_gen(i, j)] for i, j in cells)
        return NCElement(self.spec, {word: self.spec.domain.coerce(coeff)})

    def cell_of(self, position):
        return self.spec.alphabet[position].indices

    # -- coalgebra ------------------------------------------------------------

    def coproduct(self, a, left=None, right=None):
        """Delta as an algebra map; factors land in `left`/`right` contexts
        (defaulting to self) and are fully reduced there."""
        left = left or self
        right = right or self
        out = {}
        for w, c in a.terms.items():
            pieces = [((), ())]
            for p in w:
                i, j = self.cell_of(p)
                nxt = []
                for wl, wr in pieces:
                    for k in range(1, self.n + 2):
                        nxt.append((wl + ((i, k),), wr + ((k, j),)))
                pieces = nxt
            for wl, wr in pieces:
                lw = tuple(left.spec.index[x_gen(*ij)] for ij in wl)
                rw = tuple(right.spec.index[x_gen(*ij)] for ij in wr)
                key = (lw, rw)
                s = out.get(key)
                s = c if s is None else s + c
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TensorElement(left, right, out)

    def counit(self, a):
        tot = self.spec.domain.zero
        for w, c in a.terms.items():
            if all(self.cell_of(p)[0] == self.cell_of(p)[1] for p in w):
                tot = tot + c
        return tot

    # -- quantum minors -------------------------------------------------------

    def quantum_minor(self, rows, cols):
        rows = list(rows)
        cols = list(cols)
        if len(rows) != len(cols):
            raise BadIndexLists("rows and cols must have equal length")
        if sorted(rows) != rows or sorted(cols) != cols:
            raise BadIndexLists("index lists must be strictly increasing")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise BadIndexLists("index lists must be strictly increasing")
        terms = {}
        for perm in permutations(range(len(cols))):
            inv = sum(
                1
                for a in range(len(perm))
                for b in range(a + 1, len(perm))
                if perm[a] > perm[b]
            )
            word = tuple(
                self.spec.index[x_gen(rows[t], cols[perm[t]])]
                for t in range(len(rows))
            )
            coeff = self.spec.domain.coerce(neg_q_power(inv))
            terms[word] = terms.get(word, self.spec.domain.zero) + coeff
        return NCElement(self.spec, terms)

    def detq(self):
        if self._detq is None:
            idx = list(range(1, self.n + 2))
            self._detq = self.quantum_minor(idx, idx)
        return self._detq

    def verify_detq_central_grouplike(self):
        """Exact check that det_q is central and group-like."""
        d = self.detq()
        report = {"central": [], "grouplike": None, "counit": None, "ok": True}
        for i in range(1, self.n + 2):
            for j in range(1, self.n + 2):
                g = self.gen(i, j)
                comm = d * g - g * d
                ok = comm.is_zero()
                report["central"].append({"gen": f"x[{i},{j}]", "ok": ok})
                if not ok:
                    report["ok"] = False
        dd = self.coproduct(d)
        target = TensorElement(
            self, self, {}
        ).add_product(d, d, self.spec.domain.one)
        report["grouplike"] = dd == target
        report["counit"] = self.counit(d) == self.spec.domain.one
        report["ok"] = report["ok"] and report["grouplike"] and report["counit"]
        return report

    # -- triangular decomposition ----------------------------------------------

    def _cell_block_antidiag(self, ij):
        s = ij[0] + ij[1]
        return 0 if s < self.n + 2 else (1 if s == self.n + 2 else 2)

    def triangular_factor(self, a):
        """Split each normal word into its N+ / N0 / N- blocks."""
        if self.order_name != "antidiag":
            raise OrderMismatch("triangular_factor needs the antidiag order")
        out = []
        for w, c in sorted(a.terms.items(), key=lambda kv: (len(kv[0]), kv[0])):
            blocks = {0: [], 1: [], 2: []}
            for p in w:
                blocks[self._cell_block_antidiag(self.cell_of(p))].append(
                    self.cell_of(p)
                )
            out.append((tuple(blocks[0]), tuple(blocks[1]), tuple(blocks[2]), c))
        return out

    # -- PBW enumeration ---------------------------------------------------------

    def pbw_basis(self, degree):
        """All ordered monomials of total degree <= degree (includes 1)."""
        k = len(self.spec.alphabet)
        words = []
        for d in range(degree + 1):
            words.extend(combinations_with_replacement(range(k), d))
        return words


class TensorElement:
    """Coefficient-weighted sum of word pairs over two algebra contexts."""

    __slots__ = ("left", "right", "terms")

    def __init__(self, left, right, terms=None, reduce=True):
        self.left = left
        self.right = right
        if terms and reduce:
            terms = self._reduce(terms)
        self.terms = terms or {}

    def _reduce(self, terms):
        out = {}
        for (wl, wr), c in terms.items():
            if not c:
                continue
            lred = self.left.spec.reduce_terms({wl: self.left.spec.domain.one})
            rred = self.right.spec.reduce_terms({wr: self.right.spec.domain.one})
            for lw, lc in lred.items():
                for rw, rc in rred.items():
                    key = (lw, rw)
                    add = c * lc * rc
                    s = out.get(key)
                    s = add if s is None else s + add
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out

    @staticmethod
    def zero(left, right):
        return TensorElement(left, right, {})

    def add_product(self, a, b, coeff):
        """self + coeff * (a tensor b); a, b already reduced elements."""
        t = dict(self.terms)
        for wl, cl in a.terms.items():
            for wr, cr in b.terms.items():
                key = (wl, wr)
                add = coeff * cl * cr
                s = t.get(key)
                s = add if s is None else s + add
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        return TensorElement(self.left, self.right, t, reduce=False)

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            s = c if s is None else s + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return TensorElement(self.left, self.right, t, reduce=False)

    def __neg__(self):
        return TensorElement(
            self.left, self.right, {k: -c for k, c in self.terms.items()}, reduce=False
        )

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = self.left.spec.domain.coerce(coeff)
        return TensorElement(
            self.left,
            self.right,
            {k: c * coeff for k, c in self.terms.items() if c * coeff},
            reduce=False,
        )

    def __mul__(self, other):
        """Componentwise product (a ox b)(c ox d) = ac ox bd."""
        out = {}
        for (al, ar), ca in self.terms.items():
            for (bl, br), cb in other.terms.items():
                key = (al + bl, ar + br)
                add = ca * cb
                s = out.get(key)
                s = add if s is None else s + add
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return TensorElement(self.left, self.right, out)

    def swap(self):
        return TensorElement(
            self.right,
            self.left,
            {(wr, wl): c for (wl, wr), c in self.terms.items()},
            reduce=False,
        )

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (wl, wr), c in sorted(
            self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][1]), kv[0])
        ):
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs):
                cs = f"({cs})"
            body = f"{self.left.spec.word_str(wl)} (x) {self.right.spec.word_str(wr)}"
            parts.append(body if cs == "1" else f"{cs} {body}")
        return " + ".join(parts)

    def __repr__(self):
        return f"<TensorElement {self}>"

    def map_factors(self, fl, fr, combine):
        """Apply per-factor word maps and combine(coeff, imgl, imgr)."""
        for (wl, wr), c in self.terms.items():
            combine(c, fl(wl), fr(wr))



def make_matrix_algebra(n, order="lex", domain=LAURENT):
    return MatrixAlgebra(n, order=order, domain=domain)
