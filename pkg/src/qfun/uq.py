"""The quantized enveloping algebra of gl(n+1) in triangular form.

Elements are sums of terms (F-word, G-exponent vector, E-word) with k(q)
coefficients.  Straightening moves E past F through the cross relation and
normalizes each F/E block against the Serre ideal by graded linear algebra.
Braid operators, the two quantum root vector constructions, the convex
order on positive roots, the Borel isomorphisms, and the q->1 collapse of
the composite embedding all live here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .freealg import graded_component_basis
from .laurent import (
    LaurentPoly,
    RATFUNC,
    RF_ONE,
    RF_Q_MINUS_QINV,
    RatFunc,
)
from .qsl import BorelAlgebra, borel_quotient


class NotInSlForm(Exception):
    pass


RF_Q = RatFunc.from_laurent(LaurentPoly({1: 1}))
RF_QINV = RatFunc.from_laurent(LaurentPoly({-1: 1}))
RF_Q_PLUS_QINV = RatFunc.from_laurent(LaurentPoly({1: 1, -1: 1}))


def qpow(k):
    return RatFunc.from_laurent(LaurentPoly({k: 1}))


class UqAlgebra:
    """U_q(gl(n+1)); with sl_quotient=True the central G_1...G_{n+1} is 1."""

    def __init__(self, n, sl_quotient=False, serre_cap=20000):
        self.n = n
        self.sl_quotient = sl_quotient
        self.serre_cap = serre_cap
        self._serre_cache = {"E": {}, "F": {}}
        self._serre_components = {"E": {}, "F": {}}
        self._cross_cache = {}
        self._serre_rels = self._build_serre_relations()

    def _build_serre_relations(self):
        rels = []
        one = RF_ONE
        for i in range(1, self.n + 1):
            for j in range(1, self.n + 1):
                if abs(i - j) > 1:
                    if i < j:
                        rels.append({(i, j): one, (j, i): -one})
                elif abs(i - j) == 1:
                    rels.append(
                        {
                            (i, i, j): one,
                            (i, j, i): -RF_Q_PLUS_QINV,
                            (j, i, i): one,
                        }
                    )
        return rels

    # -- block normalization -------------------------------------------------

    def _serre_nf_word(self, side, word):
        """Expansion of an F/E word in the graded Serre-complement basis."""
        if not word:
            return {(): RF_ONE}
        cache = self._serre_cache[side]
        hit = cache.get(word)
        if hit is not None:
            return hit
        deg = [0] * self.n
        for letter in word:
            deg[letter - 1] += 1
        key = tuple(deg)
        comp = self._serre_components[side].get(key)
        if comp is None:
            # letters are 0-based inside graded_component_basis
            rels0 = []
            for rel in self._serre_rels:
                rels0.append({tuple(l - 1 for l in w): c for w, c in rel.items()})
            words, basis, proj = graded_component_basis(
                self.n, rels0, key, cap=self.serre_cap
            )
            comp = {
                tuple(l + 1 for l in w): {
                    tuple(l + 1 for l in bw): c for bw, c in expansion.items()
                }
                for w, expansion in proj.items()
            }
            self._serre_components[side][key] = comp
        out = comp[word]
        cache[word] = out
        return out

    def _norm_g(self, g):
        if not self.sl_quotient:
            return tuple(g), RF_ONE
        shift = g[-1]
        return tuple(x - shift for x in g), RF_ONE

    # -- elements ----------------------------------------------------------------

    def zero(self):
        return UqElement(self, {})

    def one(self):
        return UqElement(self, {((), (0,) * (self.n + 1), ()): RF_ONE})

    def F(self, i):
        return UqElement(self, {((i,), (0,) * (self.n + 1), ()): RF_ONE})

    def E(self, i):
        return UqElement(self, {((), (0,) * (self.n + 1), (i,)): RF_ONE})

    def G(self, i, power=1):
        g = [0] * (self.n + 1)
        g[i - 1] = power
        g, _ = self._norm_g(g)
        return UqElement(self, {((), g, ()): RF_ONE})

    def K(self, i, power=1):
        g = [0] * (self.n + 1)
        g[i - 1] = power
        g[i] = -power
        g, _ = self._norm_g(g)
        return UqElement(self, {((), g, ()): RF_ONE})

    def L(self, i, power=1):
        g = [0] * (self.n + 1)
        for t in range(i):
            g[t] = power
        g, _ = self._norm_g(g)
        return UqElement(self, {((), g, ()): RF_ONE})

    def toral(self, g):
        g, _ = self._norm_g(list(g))
        return UqElement(self, {((), g, ()): RF_ONE})

    # -- straightening --------------------------------------------------------------

    def _cross(self, eword, fword):
        """E-word times F-word as {(F, g, E): coeff}."""
        if not eword or not fword:
            return {(tuple(fword), (0,) * (self.n + 1), tuple(eword)): RF_ONE}
        key = (tuple(eword), tuple(fword))
        hit = self._cross_cache.get(key)
        if hit is not None:
            return hit
        a = eword[-1]
        prefix = eword[:-1]
        b = fword[0]
        rest = fword[1:]
        out = {}

        def accumulate(terms, coeff):
            for t, c in terms.items():
                s = out.get(t)
                add = c * coeff
                s = add if s is None else s + add
                if s:
                    out[t] = s
                else:
                    out.pop(t, None)

        # E_a F_b = F_b E_a + delta_ab (K_a - K_a^{-1})/(q - q^{-1})
        # prefix * F_b * E_a * rest
        for t1, c1 in self._cross(prefix, (b,)).items():
            f1, g1, e1 = t1
            for t2, c2 in self._cross(e1 + (a,), rest).items():
                f2, g2, e2 = t2
                # move g1 right past f2
                s = sum(g1[j] - g1[j - 1] for j in f2)
                g = tuple(x + y for x, y in zip(g1, g2))
                accumulate({(f1 + f2, g, e2): qpow(s)}, c1 * c2)
        if a == b:
            for sign, pw in ((1, 1), (-1, -1)):
                gk = [0] * (self.n + 1)
                gk[a - 1] = pw
                gk[a] = -pw
                # prefix * K_a^{pw} * rest: commute the toral factor out to
                # the left of the prefix, then right past the F-part of the
                # straightened prefix*rest
                s_e = sum(gk[j] - gk[j - 1] for j in prefix)
                coeff = RF_Q_MINUS_QINV.inverse() * sign * qpow(s_e)
                for t2, c2 in self._cross(prefix, rest).items():
                    f2, g2, e2 = t2
                    s = sum(gk[j] - gk[j - 1] for j in f2)
                    g = tuple(x + y for x, y in zip(gk, g2))
                    accumulate({(f2, g, e2): qpow(s) * coeff}, c2)
        self._cross_cache[key] = out
        return out

    def mul_terms(self, t1, c1, t2, c2):
        """Product of two triangular terms as a raw term dict."""
        f1, g1, e1 = t1
        f2, g2, e2 = t2
        out = {}
        for tc, cc in self._cross(e1, f2).items():
            fm, gm, em = tc
            # assemble F1 G^{g1} (Fm G^{gm} Em) G^{g2} E2
            s1 = sum(g1[j] - g1[j - 1] for j in fm)
            s2 = sum(g2[j] - g2[j - 1] for j in em)
            g = tuple(a + b + c for a, b, c in zip(g1, gm, g2))
            key = (f1 + fm, g, em + e2)
            coeff = c1 * c2 * cc * qpow(s1 + s2)
            s = out.get(key)
            s = coeff if s is None else s + coeff
            if s:
                out[key] = s
            else:
                out.pop(key, None)
        return out

    def normalize(self, raw):
        """Serre-normalize blocks and reduce G-exponents; returns term dict."""
        out = {}
        for (fw, g, ew), c in raw.items():
            if not c:
                continue
            g, unit = self._norm_g(g)
            fexp = self._serre_nf_word("F", fw)
            eexp = self._serre_nf_word("E", ew)
            for fb, fc in fexp.items():
                for eb, ec in eexp.items():
                    key = (fb, g, eb)
                    add = c * fc * ec * unit
                    s = out.get(key)
                    s = add if s is None else s + add
                    if s:
                        out[key] = s
                    else:
                        out.pop(key, None)
        return out


class UqElement:
    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms, normalized=True):
        self.alg = alg
        self.terms = terms if normalized else alg.normalize(terms)

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            s = c if s is None else s + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return UqElement(self.alg, t)

    def __neg__(self):
        return UqElement(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = RATFUNC.coerce(coeff)
        if not coeff:
            return self.alg.zero()
        return UqElement(self.alg, {k: c * coeff for k, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        raw = {}
        for t1, c1 in self.terms.items():
            for t2, c2 in other.terms.items():
                for k, c in self.alg.mul_terms(t1, c1, t2, c2).items():
                    s = raw.get(k)
                    s = c if s is None else s + c
                    if s:
                        raw[k] = s
                    else:
                        raw.pop(k, None)
        return UqElement(self.alg, self.alg.normalize(raw))

    __rmul__ = __mul__

    def __pow__(self, k):
        out = self.alg.one()
        for _ in range(k):
            out = out * self
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {((), (0,) * (self.alg.n + 1), ()): RATFUNC.coerce(other)}
        if not isinstance(other, UqElement):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def in_sl_form(self):
        """G exponents lie in the root lattice (sum zero; mod n+1 in the
        quotient presentation)."""
        for (_, g, _) in self.terms:
            tot = sum(g)
            if self.alg.sl_quotient:
                if tot % (self.alg.n + 1) != 0:
                    return False
            elif tot != 0:
                return False
        return True

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (fw, g, ew), c in sorted(
            self.terms.items(), key=lambda kv: (len(kv[0][0]) + len(kv[0][2]), kv[0])
        ):
            bits = [f"F[{j}]" for j in fw]
            bits += [
                f"G[{i+1}]" if e == 1 else f"G[{i+1}]^{e}"
                for i, e in enumerate(g)
                if e
            ]
            bits += [f"E[{j}]" for j in ew]
            mono = " ".join(bits) if bits else "1"
            cs = str(c)
            if ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs):
                cs = f"({cs})"
            parts.append(mono if cs == "1" else f"{cs} {mono}")
        return " + ".join(parts)

    __repr__ = __str__


def make_uq(n, sl_quotient=False):
    return UqAlgebra(n, sl_quotient=sl_quotient)


def q_bracket(x, y, p):
    """[x, y]_{q^p} = x y - q^p y x."""
    return x * y - (y * x).scale(qpow(p))


def root_vector_iterated(alg, i, j, side):
    """Iterated quantum root vectors:
    E_{i,i+1} = E_i,   E_{i,j} = -[E_{i,j-1}, E_{j-1,j}]_{q^-1}
    F_{j+1,j} = F_j,   F_{j,i} = q [F_{j-1,i}, F_{j,j-1}]_{q^-1}
    """
    if not (1 <= i < j <= alg.n + 1):
        raise ValueError("need 1 <= i < j <= n+1")
    if side == "E":
        if j == i + 1:
            return alg.E(i)
        return q_bracket(
            root_vector_iterated(alg, i, j - 1, "E"), alg.E(j - 1), -1
        ).scale(-1)
    if side == "F":
        if j == i + 1:
            return alg.F(i)
        return q_bracket(
            root_vector_iterated(alg, i, j - 1, "F"), alg.F(j - 1), -1
        ).scale(RF_Q)
    raise ValueError("side must be 'E' or 'F'")


# -- the convex order and the braid construction ------------------------------------


def _sk_action(k, root):
    i, j = root
    swap = {k: k + 1, k + 1: k}
    return (swap.get(i, i), swap.get(j, j))


def _word_action(word, root):
    for k in reversed(word):
        root = _sk_action(k, root)
    return root


def _perm_of_word(word, n):
    """The permutation of {1..n+1} given by the reflection word."""
    perm = list(range(n + 2))  # 1-based
    for k in word:
        perm[k], perm[k + 1] = perm[k + 1], perm[k]
    return perm[1:]


@dataclass
class ConvexOrder:
    n: int
    reduced_word: tuple
    roots: list  # ordered list of (i, j) pairs, i < j

    def position(self, i, j):
        """1-based position of alpha(i,j) in the order."""
        return self.roots.index((i, j)) + 1

    def is_convex(self):
        pos = {r: t for t, r in enumerate(self.roots)}
        for a in self.roots:
            for b in self.roots:
                if pos[a] >= pos[b]:
                    continue
                s = (a[0], b[1]) if a[1] == b[0] else ((b[0], a[1]) if b[1] == a[0] else None)
                if s in pos:
                    if not (pos[a] <= pos[s] <= pos[b]):
                        return False
        return True


def convex_order(n):
    """The order from the reduced word (s1..sn)(s1..s_{n-1})...(s1).

    Verified reduced (length = number of inversions of the resulting
    permutation) and longest (the order-reversing permutation).
    """
    word = []
    for block in range(n, 0, -1):
        word.extend(range(1, block + 1))
    word = tuple(word)
    N = n * (n + 1) // 2
    perm = _perm_of_word(word, n)
    inv = sum(
        1 for a in range(len(perm)) for b in range(a + 1, len(perm)) if perm[a] > perm[b]
    )
    if len(word) != N or inv != N:
        raise RuntimeError("constructed word is not reduced of maximal length")
    if perm != list(range(n + 1, 0, -1)):
        raise RuntimeError("constructed word does not represent w0")
    roots = []
    for k in range(1, N + 1):
        alpha = (word[k - 1], word[k - 1] + 1)
        root = _word_action(word[: k - 1], alpha)
        if root[0] >= root[1]:
            raise RuntimeError("non-positive root in the convex enumeration")
        roots.append(root)
    if len(set(roots)) != N:
        raise RuntimeError("convex enumeration is not a bijection onto R+")
    return ConvexOrder(n, word, roots)


def printed_position_formula(n, i, j):
    """The printed closed form n(i,j) = i - j + sum_{h=0}^{i-1} (n-h)."""
    return i - j + sum(n - h for h in range(0, i))


def corrected_position_formula(n, i, j):
    """(j - i) + sum_{h=0}^{i-2} (n-h): the position in the block order."""
    return (j - i) + sum(n - h for h in range(0, i - 1))


def braid_T(alg, i, el):
    """Lusztig braid operator on the sl-subalgebra (F's, K's, E's)."""
    if not el.in_sl_form():
        raise NotInSlForm("element has G-exponents outside the root lattice")
    n = alg.n

    def f_image(j):
        if j == i:
            # -K_i^{-1} E_i
            g = [0] * (n + 1)
            g[i - 1] = -1
            g[i] = 1
            return UqElement(alg, alg.normalize({((), tuple(g), (i,)): -RF_ONE}))
        if abs(i - j) == 1:
            return (alg.F(j) * alg.F(i)).scale(-1) + (alg.F(i) * alg.F(j)).scale(RF_Q)
        return alg.F(j)

    def e_image(j):
        if j == i:
            g = [0] * (n + 1)
            g[i - 1] = 1
            g[i] = -1
            return UqElement(alg, alg.normalize({((i,), tuple(g), ()): -RF_ONE}))
        if abs(i - j) == 1:
            return (alg.E(i) * alg.E(j)).scale(-1) + (alg.E(j) * alg.E(i)).scale(
                RF_QINV
            )
        return alg.E(j)

    def k_image_exponents(kvec):
        out = list(kvec)
        # T_i: K_i -> K_i^{-1}; K_j -> K_i K_j for |i-j| = 1; else fixed
        new = [0] * n
        for j in range(1, n + 1):
            v = out[j - 1]
            if not v:
                continue
            if j == i:
                new[i - 1] -= v
            elif abs(i - j) == 1:
                new[i - 1] += v
                new[j - 1] += v
            else:
                new[j - 1] += v
        return new

    out = alg.zero()
    for (fw, g, ew), c in el.terms.items():
        tot = sum(g)
        if alg.sl_quotient and tot % (n + 1):
            raise NotInSlForm("G-exponent total not divisible by n+1")
        if alg.sl_quotient:
            shift = tot // (n + 1)
            g = tuple(x - shift for x in g)
        kvec = [sum(g[:t]) for t in range(1, n + 1)]
        kimg = k_image_exponents(kvec)
        gimg = [0] * (n + 1)
        for t, v in enumerate(kimg, start=1):
            gimg[t - 1] += v
            gimg[t] -= v
        acc = UqElement(alg, alg.normalize({((), tuple(gimg), ()): c}))
        piece = alg.one()
        for j in fw:
            piece = piece * f_image(j)
        piece = piece * acc
        for j in ew:
            piece = piece * e_image(j)
        out = out + piece
    return out


def root_vector_lusztig(alg, co, k, side):
    """T_{i_1}...T_{i_{k-1}} applied to the k-th simple generator."""
    if not (1 <= k <= len(co.reduced_word)):
        raise ValueError("index out of range")
    j = co.reduced_word[k - 1]
    el = alg.E(j) if side == "E" else alg.F(j)
    for i in reversed(co.reduced_word[: k - 1]):
        el = braid_T(alg, i, el)
    return el


# -- Borel isomorphisms and the composite embedding -----------------------------------


class ThetaMap:
    """theta_+ : B_+ -> U_q(b_-)_op or theta_- : B_- -> U_q(b_+)_op.

    Images of the non-adjacent generators are produced by the two-step
    recursion through the Borel relations; the Borel presentation is
    verified to map to zero at construction.
    """

    def __init__(self, sign, borel, uq, verify=True):
        if not uq.sl_quotient:
            raise ValueError("theta maps land in the sl quotient")
        self.sign = sign
        self.borel = borel
        self.uq = uq
        self.n = borel.n
        self._images = {}
        if verify:
            rep = self.verify_relations()
            if not rep["ok"]:
                raise RuntimeError(f"theta{sign} fails Borel relations: {rep}")

    def image(self, i, j):
        key = (i, j)
        img = self._images.get(key)
        if img is not None:
            return img
        uq, n = self.uq, self.n
        if self.sign == "+":
            if i == j:
                img = uq.G(i, -1)
            elif j == i + 1:
                img = UqElement(
                    uq,
                    uq.normalize(
                        {((i,), _gvec(n, {i + 1: -1}), ()): -RF_Q_MINUS_QINV}
                    ),
                )
            elif j > i + 1:
                a = self.image(i, j - 1)
                b = self.image(j - 1, j)
                img = (a * b - b * a).scale(RF_Q_MINUS_QINV.inverse()) * uq.G(j - 1)
            else:
                raise ValueError("not an upper-triangular cell")
        else:
            if i == j:
                img = uq.G(i)
            elif i == j + 1:
                img = UqElement(
                    uq,
                    uq.normalize(
                        {((), _gvec(n, {i: 1}), (j,)): RF_Q_MINUS_QINV}
                    ),
                )
            elif i > j + 1:
                a = self.image(i - 1, j)
                b = self.image(i, i - 1)
                img = uq.G(i - 1, -1) * (a * b - b * a).scale(
                    RF_Q_MINUS_QINV.inverse()
                )
            else:
                raise ValueError("not a lower-triangular cell")
        self._images[key] = img
        return img

    def apply(self, el):
        out = self.uq.zero()
        for w, c in el.terms.items():
            acc = self.uq.one()
            for p in w:
                i, j = self.borel.cell_of(p)
                acc = acc * self.image(i, j)
            out = out + acc.scale(c)
        return out

    def verify_relations(self):
        failures = []
        for name, lhs, rhs in self.borel.defining_relation_pairs():
            if not (self.apply(lhs) - self.apply(rhs)).is_zero():
                failures.append(name)
        return {"ok": not failures, "failures": failures}

    def verify_coalgebra(self):
        """Delta^op(theta(g)) == (theta (x) theta)(Delta_B(g)) on generators."""
        failures = []
        for (i, j) in sorted(self.borel.cells):
            lhs = uq_coproduct(self.image(i, j)).swap()
            rhs = UqTensor(self.uq)
            for (wl, wr), c in self.borel.coproduct(self.borel.gen(i, j)).terms.items():
                ell = self.apply(
                    type(self.borel.gen(i, j))(self.borel.spec, {wl: RF_ONE}, reduce=False)
                )
                elr = self.apply(
                    type(self.borel.gen(i, j))(self.borel.spec, {wr: RF_ONE}, reduce=False)
                )
                rhs = rhs.add_product(ell, elr, c)
            if not (lhs - rhs).is_zero():
                failures.append(f"x[{i},{j}]")
        return {"ok": not failures, "failures": failures}


def _gvec(n, entries):
    g = [0] * (n + 1)
    for i, v in entries.items():
        g[i - 1] = v
    return tuple(g)


class UqTensor:
    """Sum of pairs of triangular terms over one UqAlgebra."""

    __slots__ = ("alg", "terms")

    def __init__(self, alg, terms=None):
        self.alg = alg
        self.terms = terms or {}

    def add_product(self, a, b, coeff=RF_ONE):
        t = dict(self.terms)
        for t1, c1 in a.terms.items():
            for t2, c2 in b.terms.items():
                key = (t1, t2)
                add = c1 * c2 * coeff
                s = t.get(key)
                s = add if s is None else s + add
                if s:
                    t[key] = s
                else:
                    t.pop(key, None)
        return UqTensor(self.alg, t)

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            s = t.get(k)
            s = c if s is None else s + c
            if s:
                t[k] = s
            else:
                t.pop(k, None)
        return UqTensor(self.alg, t)

    def __neg__(self):
        return UqTensor(self.alg, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, coeff):
        coeff = RATFUNC.coerce(coeff)
        return UqTensor(
            self.alg, {k: c * coeff for k, c in self.terms.items() if c * coeff}
        )

    def __mul__(self, other):
        out = UqTensor(self.alg)
        for (a1, b1), c1 in self.terms.items():
            for (a2, b2), c2 in other.terms.items():
                left = UqElement(self.alg, self.alg.normalize(self.alg.mul_terms(a1, RF_ONE, a2, RF_ONE)))
                right = UqElement(self.alg, self.alg.normalize(self.alg.mul_terms(b1, RF_ONE, b2, RF_ONE)))
                out = out.add_product(left, right, c1 * c2)
        return out

    def swap(self):
        return UqTensor(self.alg, {(b, a): c for (a, b), c in self.terms.items()})

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return self.terms == other.terms

    def __str__(self):
        if not self.terms:
            return "0"

        def tstr(t):
            return str(UqElement(self.alg, {t: RF_ONE}))

        return " + ".join(
            f"({c}) {tstr(a)} (x) {tstr(b)}" for (a, b), c in sorted(
                self.terms.items(), key=lambda kv: str(kv[0])
            )
        )

    __repr__ = __str__


def uq_coproduct(el):
    """Delta on U_q: F -> F (x) K^{-1}... extended multiplicatively.

    Delta(F_i) = F_i (x) G_i^{-1} G_{i+1} + 1 (x) F_i
    Delta(G^g)  = G^g (x) G^g
    Delta(E_i) = E_i (x) 1 + G_i G_{i+1}^{-1} (x) E_i
    """
    alg = el.alg
    n = alg.n
    out = UqTensor(alg)
    for (fw, g, ew), c in el.terms.items():
        pieces = UqTensor(alg, {(((), (0,) * (n + 1), ()), ((), (0,) * (n + 1), ())): RF_ONE})
        for j in fw:
            dj = UqTensor(alg)
            dj = dj.add_product(alg.F(j), alg.toral(_gvec(n, {j: -1, j + 1: 1})), RF_ONE)
            dj = dj.add_product(alg.one(), alg.F(j), RF_ONE)
            pieces = pieces * dj
        gg = alg.toral(g)
        pieces = pieces * UqTensor(alg).add_product(gg, gg, RF_ONE)
        for j in ew:
            dj = UqTensor(alg)
            dj = dj.add_product(alg.E(j), alg.one(), RF_ONE)
            dj = dj.add_product(alg.toral(_gvec(n, {j: 1, j + 1: -1})), alg.E(j), RF_ONE)
            pieces = pieces * dj
        out = out + pieces.scale(c)
    return out


class MuMap:
    """mu_P = (theta_+ (x) theta_-) o (rho_+ (x) rho_-) o Delta."""

    def __init__(self, sl, uq=None):
        self.sl = sl
        self.n = sl.n
        self.uq = uq or UqAlgebra(sl.n, sl_quotient=True)
        self.bplus = BorelAlgebra(sl.n, "+")
        self.bminus = BorelAlgebra(sl.n, "-")
        self.theta_plus = ThetaMap("+", self.bplus, self.uq)
        self.theta_minus = ThetaMap("-", self.bminus, self.uq)

    def apply(self, el):
        delta = self.sl.coproduct(el)
        out = UqTensor(self.uq)
        from .freealg import NCElement

        for (wl, wr), c in delta.terms.items():
            left = borel_quotient(
                self.sl, self.bplus, NCElement(self.sl.spec, {wl: RF_ONE}, reduce=False)
            )
            if left.is_zero():
                continue
            right = borel_quotient(
                self.sl, self.bminus, NCElement(self.sl.spec, {wr: RF_ONE}, reduce=False)
            )
            if right.is_zero():
                continue
            out = out.add_product(
                self.theta_plus.apply(left), self.theta_minus.apply(right), c
            )
        return out


class PoleAtOneError(Exception):
    def __init__(self, skeleton):
        self.skeleton = skeleton
        super().__init__(f"pole at q=1 on skeleton {skeleton}")


def collapse_at_one(t):
    """Sum coefficients over the toral parts of both factors and evaluate at
    q=1; keyed by the ((F-word, E-word), (F-word, E-word)) skeletons."""
    from fractions import Fraction

    sums = {}
    for ((f1, g1, e1), (f2, g2, e2)), c in t.terms.items():
        key = ((f1, e1), (f2, e2))
        s = sums.get(key)
        s = c if s is None else s + c
        sums[key] = s
    out = {}
    for key, c in sums.items():
        v = c.regular_at_one()
        if not isinstance(v, Fraction):
            raise PoleAtOneError(key)
        if v:
            out[key] = v
    return out


def collapse_element_at_one(el):
    """The same toral-collapse on a single factor: {(F-word, E-word): value}."""
    from fractions import Fraction

    sums = {}
    for (fw, g, ew), c in el.terms.items():
        key = (fw, ew)
        s = sums.get(key)
        s = c if s is None else s + c
        sums[key] = s
    out = {}
    for key, c in sums.items():
        v = c.regular_at_one()
        if not isinstance(v, Fraction):
            raise PoleAtOneError(key)
        if v:
            out[key] = v
    return out


def triangular_nf(el):
    """Re-normalize an element (idempotent: terms are already triangular)."""
    return UqElement(el.alg, el.alg.normalize(dict(el.terms)))


def theta_map(sign, borel, uq, verify=True):
    return ThetaMap(sign, borel, uq, verify=verify)


def mu_P(sl, el, mu=None):
    """The composite embedding applied to an SL element."""
    mu = mu or MuMap(sl)
    return mu.apply(el)
