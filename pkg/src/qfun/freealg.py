"""Free associative algebra over Z[q,q^-1] or k(q) with quadratic rewriting.

Words are tuples of alphabet positions; the generator order is the order of
the alphabet list.  Rules rewrite descending adjacent pairs and must carry a
degree-lexicographic termination witness.  Non-quadratic reductions (quantum
determinant substitution, Borel diagonal products) plug in as post-reducers
with an explicit decreasing measure.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations, permutations

from .laurent import LAURENT, RATFUNC, LaurentPoly, RatFunc


class AlgebraMismatch(Exception):
    pass


class NonTerminating(Exception):
    pass


class DimensionOverflow(Exception):
    pass


class TermBudgetExceeded(Exception):
    pass


def _term_budget():
    try:
        return int(os.environ.get("QFUN_MAX_TERMS", "1000000"))
    except ValueError:
        return 10**6


@dataclass(frozen=True, order=True)
class GenSym:
    """A named generator: family tag plus one or two 1-based indices."""

    family: str
    indices: tuple

    def __str__(self):
        return f"{self.family}[{','.join(str(i) for i in self.indices)}]"


@dataclass(frozen=True)
class RewriteRule:
    lhs: tuple  # descending pair of alphabet positions
    rhs: tuple  # tuple of (coeff, word) pairs


class PostReducer:
    """A pattern reduction applied after quadratic normalization.

    reduce_word returns None (irreducible) or a dict {word: coeff} replacing
    the word; measure(word) must strictly decrease on every replacement word
    after renormalization, which normal_form enforces.
    """

    name = "post"

    def reduce_word(self, spec, word):
        raise NotImplementedError

    def measure(self, spec, word):
        raise NotImplementedError


class AlgebraSpec:
    """Alphabet, generator order, rewrite rules, coefficient domain."""

    def __init__(self, alphabet, domain=LAURENT, name=""):
        self.alphabet = list(alphabet)
        self.domain = domain
        self.name = name
        self.index = {g: i for i, g in enumerate(self.alphabet)}
        if len(self.index) != len(self.alphabet):
            raise ValueError("duplicate generators in alphabet")
        self.rules = {}
        self.post_reducers = []
        self._nf_cache = {}

    # -- rules ---------------------------------------------------------------

    def add_rule(self, a, b, rhs_terms):
        """Install a rule for the descending pair (a, b), positions a > b.

        rhs_terms: iterable of (coeff, word).  Every rhs word must be strictly
        smaller than (a, b) in deglex order; this is the termination witness.
        """
        if a <= b:
            raise ValueError(f"rule lhs {(a, b)} is not descending")
        lhs = (a, b)
        cleaned = []
        for coeff, word in rhs_terms:
            coeff = self.domain.coerce(coeff)
            if not coeff:
                continue
            if not self._deglex_less(word, lhs):
                raise ValueError(
                    f"termination witness fails: {self.word_str(word)} "
                    f">= {self.word_str(lhs)}"
                )
            cleaned.append((coeff, tuple(word)))
        if lhs in self.rules:
            raise ValueError(f"duplicate rule for {lhs}")
        self.rules[lhs] = tuple(cleaned)

    @staticmethod
    def _deglex_less(w1, w2):
        if len(w1) != len(w2):
            return len(w1) < len(w2)
        return w1 < w2

    def rules_total_on_descending_pairs(self):
        missing = []
        for a in range(len(self.alphabet)):
            for b in range(a):
                if (a, b) not in self.rules:
                    missing.append((a, b))
        return missing

    # -- normalization ---------------------------------------------------

    def normal_form_word(self, word):
        """Normal form of a single word as {word: coeff}; memoized."""
        cached = self._nf_cache.get(word)
        if cached is not None:
            return cached
        budget = _term_budget()
        one = self.domain.one
        out = {}
        stack = [(word, one)]
        while stack:
            w, c = stack.pop()
            rules = self.rules
            for t in range(len(w) - 1):
                rhs = rules.get((w[t], w[t + 1]))
                if rhs is not None:
                    pre = w[:t]
                    suf = w[t + 2 :]
                    for rc, rw in rhs:
                        stack.append((pre + rw + suf, c * rc))
                    break
            else:
                acc = out.get(w)
                out[w] = c if acc is None else acc + c
            if len(stack) + len(out) > budget:
                raise TermBudgetExceeded(f"term budget {budget} exceeded")
        out = {w: c for w, c in out.items() if c}
        if len(self._nf_cache) < 300000:
            self._nf_cache[word] = out
        return out

    def reduce_terms(self, terms):
        """Full normal form of a {word: coeff} dict, post-reducers included."""
        out = {}
        for w, c in terms.items():
            if not c:
                continue
            for nw, nc in self.normal_form_word(w).items():
                s = out.get(nw)
                s = nc * c if s is None else s + nc * c
                if s:
                    out[nw] = s
                else:
                    out.pop(nw, None)
        if self.post_reducers:
            out = self._apply_post_reducers(out)
        return out

    def _apply_post_reducers(self, terms):
        changed = True
        while changed:
            changed = False
            for red in self.post_reducers:
                target = None
                for w in terms:
                    if red.reduce_word(self, w) is not None:
                        target = w
                        break
                if target is None:
                    continue
                changed = True
                c = terms.pop(target)
                repl = red.reduce_word(self, target)
                bound = red.measure(self, target)
                expanded = {}
                for rw, rc in repl.items():
                    for nw, nc in self.normal_form_word(rw).items():
                        s = expanded.get(nw, None)
                        s = rc * nc if s is None else s + rc * nc
                        if s:
                            expanded[nw] = s
                        else:
                            expanded.pop(nw, None)
                for nw, nc in expanded.items():
                    if red.measure(self, nw) >= bound:
                        raise NonTerminating(
                            f"{red.name}: measure did not decrease on "
                            f"{self.word_str(nw)}"
                        )
                    s = terms.get(nw)
                    s = nc * c if s is None else s + nc * c
                    if s:
                        terms[nw] = s
                    else:
                        terms.pop(nw, None)
        return terms

    # -- display -----------------------------------------------------------

    def word_str(self, word):
        if not word:
            return "1"
        return " ".join(str(self.alphabet[i]) for i in word)

    def word_of_gens(self, gens):
        return tuple(self.index[g] for g in gens)

    def __repr__(self):
        return f"AlgebraSpec({self.name!r}, {len(self.alphabet)} gens)"


class NCElement:
    """Finite coefficient-weighted sum of words in an AlgebraSpec."""

    __slots__ = ("spec", "terms")

    def __init__(self, spec, terms=None, reduce=True):
        self.spec = spec
        if terms is None:
            terms = {}
        if reduce:
            terms = spec.reduce_terms(terms)
        self.terms = terms

    # -- constructors ------------------------------------------------------

    @staticmethod
    def zero(spec):
        return NCElement(spec, {}, reduce=False)

    @staticmethod
    def one(spec):
        return NCElement(spec, {(): spec.domain.one}, reduce=False)

    @staticmethod
    def gen(spec, g):
        if isinstance(g, GenSym):
            g = spec.index[g]
        return NCElement(spec, {(g,): spec.domain.one}, reduce=False)

    @staticmethod
    def from_word(spec, word, coeff=1):
        return NCElement(spec, {tuple(word): spec.domain.coerce(coeff)})

    # -- structure -----------------------------------------------------------

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.terms
            return self.terms == {(): self.spec.domain.coerce(other)}
        if not isinstance(other, NCElement):
            return NotImplemented
        if self.spec is not other.spec:
            raise AlgebraMismatch("comparing elements of different algebras")
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def _check(self, other):
        if self.spec is not other.spec:
            raise AlgebraMismatch(
                f"{self.spec.name!r} vs {other.spec.name!r}"
            )

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        if isinstance(other, int):
            other = NCElement(
                self.spec, {(): self.spec.domain.coerce(other)}, reduce=False
            )
        self._check(other)
        t = dict(self.terms)
        for w, c in other.terms.items():
            s = t.get(w)
            s = c if s is None else s + c
            if s:
                t[w] = s
            else:
                t.pop(w, None)
        return NCElement(self.spec, t, reduce=False)

    __radd__ = __add__

    def __neg__(self):
        return NCElement(
            self.spec, {w: -c for w, c in self.terms.items()}, reduce=False
        )

    def __sub__(self, other):
        if isinstance(other, int):
            other = NCElement(
                self.spec, {(): self.spec.domain.coerce(other)}, reduce=False
            )
        self._check(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, coeff):
        coeff = self.spec.domain.coerce(coeff)
        if not coeff:
            return NCElement.zero(self.spec)
        return NCElement(
            self.spec, {w: c * coeff for w, c in self.terms.items()}, reduce=False
        )

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        self._check(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                s = out.get(w)
                s = c if s is None else s + c
                if s:
                    out[w] = s
                else:
                    out.pop(w, None)
        return NCElement(self.spec, out)

    def __rmul__(self, other):
        if isinstance(other, (int, LaurentPoly, RatFunc)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, k):
        out = NCElement.one(self.spec)
        for _ in range(k):
            out = out * self
        return out

    # -- inspection ------------------------------------------------------------

    def degree(self):
        return max((len(w) for w in self.terms), default=0)

    def coeff_of_word(self, word):
        return self.terms.get(tuple(word), self.spec.domain.zero)

    def map_coeffs(self, fn):
        t = {}
        for w, c in self.terms.items():
            v = fn(c)
            if v:
                t[w] = v
        return NCElement(self.spec, t, reduce=False)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=lambda w: (len(w), w)):
            c = self.terms[w]
            cs = str(c)
            needs_parens = ("+" in cs[1:]) or ("-" in cs[1:]) or ("/" in cs)
            if needs_parens:
                cs = f"({cs})"
            ws = self.spec.word_str(w)
            if ws == "1":
                parts.append(cs)
            elif cs == "1":
                parts.append(ws)
            elif cs == "-1":
                parts.append(f"-{ws}")
            else:
                parts.append(f"{cs} {ws}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"<NCElement {self}>"

    def to_json(self):
        return {
            "algebra": self.spec.name,
            "terms": [
                {
                    "coeff": c.to_json(),
                    "word": [
                        [self.spec.alphabet[i].family, *self.spec.alphabet[i].indices]
                        for i in w
                    ],
                }
                for w, c in sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))
            ],
        }


def nc_multiply(a, b):
    return a * b


def normal_form(a):
    """Re-reduce an element (idempotent by construction)."""
    return NCElement(a.spec, dict(a.terms))


# -- confluence ---------------------------------------------------------------


def confluence_check(spec, max_triples=None):
    """Check local confluence on all strictly descending length-3 words.

    Both reduction strategies (left pair first / right pair first) must give
    the same full normal form.  Returns a report dict; failures are listed,
    not raised.
    """
    k = len(spec.alphabet)
    failures = []
    checked = 0
    for c, b, a in combinations(range(k), 3):
        # word (a, b, c) with a > b > c in order positions
        w_left = None
        lhs_hi = spec.rules.get((a, b))
        lhs_lo = spec.rules.get((b, c))
        if lhs_hi is None or lhs_lo is None:
            continue
        checked += 1
        if max_triples is not None and checked > max_triples:
            break
        left = {}
        for rc, rw in lhs_hi:
            for nw, nc in spec.normal_form_word(rw + (c,)).items():
                s = left.get(nw, None)
                s = rc * nc if s is None else s + rc * nc
                if s:
                    left[nw] = s
                else:
                    left.pop(nw, None)
        right = {}
        for rc, rw in lhs_lo:
            for nw, nc in spec.normal_form_word((a,) + rw).items():
                s = right.get(nw, None)
                s = rc * nc if s is None else s + rc * nc
                if s:
                    right[nw] = s
                else:
                    right.pop(nw, None)
        if left != right:
            failures.append(
                {
                    "word": spec.word_str((a, b, c)),
                    "left": str(NCElement(spec, left, reduce=False)),
                    "right": str(NCElement(spec, right, reduce=False)),
                }
            )
    return {"checked": checked, "failures": failures, "ok": not failures}


# -- graded linear algebra ------------------------------------------------------


def words_of_multidegree(n_letters, multidegree):
    """All words over letters 0..n_letters-1 with the given letter counts."""
    letters = []
    for i, m in enumerate(multidegree):
        letters.extend([i] * m)
    return sorted(set(permutations(letters)))


def graded_component_basis(n_letters, relations, multidegree, cap=20000):
    """Basis and reduction map for a graded piece of a free algebra mod ideal.

    relations: list of {word: RatFunc} dicts, each homogeneous in the letter
    multidegree.  Spans the two-sided ideal piece by u*rel*v, row reduces over
    k(q), and returns (all_words, basis_words, proj) where proj maps every
    word to its expansion {basis_word: coeff} modulo the ideal.
    """
    words = words_of_multidegree(n_letters, multidegree)
    if len(words) > cap:
        raise DimensionOverflow(
            f"graded component has {len(words)} words (cap {cap})"
        )
    word_ix = {w: i for i, w in enumerate(words)}
    total = sum(multidegree)

    rows = []
    for rel in relations:
        if not rel:
            continue
        rel_deg = [0] * n_letters
        some_word = next(iter(rel))
        for letter in some_word:
            rel_deg[letter] += 1
        rem = [m - r for m, r in zip(multidegree, rel_deg)]
        if any(x < 0 for x in rem):
            continue
        rel_total = sum(rel_deg)
        for left_deg in _split_multidegrees(rem):
            for u in words_of_multidegree(n_letters, left_deg):
                right = [r - l for r, l in zip(rem, left_deg)]
                for v in words_of_multidegree(n_letters, right):
                    row = {}
                    for rw, rc in rel.items():
                        w = u + rw + v
                        i = word_ix[w]
                        s = row.get(i, None)
                        s = rc if s is None else s + rc
                        if s:
                            row[i] = s
                        else:
                            row.pop(i, None)
                    if row:
                        rows.append(row)

    # row reduce over k(q); pivots on the lex-largest available column
    pivots = {}
    for row in rows:
        row = dict(row)
        while row:
            j = min(row)  # lex-first word becomes the leading term
            if j in pivots:
                piv = pivots[j]
                factor = row[j]
                for pj, pc in piv.items():
                    s = row.get(pj, None)
                    d = factor * pc
                    s = -d if s is None else s - d
                    if s:
                        row[pj] = s
                    else:
                        row.pop(pj, None)
            else:
                inv = row[j].inverse()
                pivots[j] = {k: c * inv for k, c in row.items()}
                break

    basis = [w for i, w in enumerate(words) if i not in pivots]
    basis_set = set(basis)

    proj = {}
    for i, w in enumerate(words):
        if w in basis_set:
            proj[w] = {w: RATFUNC.one}
        else:
            piv = pivots[i]
            # w = pivot row => w - sum(tail) in ideal; reduce tail recursively
            expansion = {}
            stack = [(j, -c) for j, c in piv.items() if j != i]
            while stack:
                j, c = stack.pop()
                wj = words[j]
                if wj in basis_set:
                    s = expansion.get(wj, None)
                    s = c if s is None else s + c
                    if s:
                        expansion[wj] = s
                    else:
                        expansion.pop(wj, None)
                else:
                    for jj, cc in pivots[j].items():
                        if jj != j:
                            stack.append((jj, -c * cc))
            proj[w] = expansion
    return words, basis, proj


def _split_multidegrees(rem):
    """All componentwise splittings left <= rem."""
    if not rem:
        yield ()
        return
    head = rem[0]
    for rest in _split_multidegrees(rem[1:]):
        for h in range(head + 1):
            yield (h,) + rest
