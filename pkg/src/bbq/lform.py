"""The bilinear pairing on the free algebra determined by the nu parameters,
per-degree Gram matrices, radicals, and mod-radical reduction.

The pairing is computed by the coproduct recursion: peel the first letter of
the right argument and pair against delta of the left one.  Values are
memoized per word pair.
"""

from __future__ import annotations

from fractions import Fraction

from .cartan import ht
from .scalars import (
    RF_ONE,
    RF_ZERO,
    RatFunc,
    eval_at,
    q_power,
    rf,
    series_coefficients,
)
from . import linalg
from .freealg import AlphabetMismatch, DegreeTooLarge, FreeAlgebra, FreeElement, Word


class NuParams:
    """The family nu_{il} of nonzero pairing parameters.

    Defaults to 1 + q^{l r_i}; that family has constant term 1 and
    nonnegative integer coefficients, as required.
    """

    SERIES_CHECK_ORDER = 64

    def __init__(self, datum, overrides=None):
        self.datum = datum
        self._values = {}
        if overrides:
            for (i, l), v in overrides.items():
                self._values[(int(i), int(l))] = rf(v)

    def get(self, i: int, l: int) -> RatFunc:
        v = self._values.get((i, l))
        if v is None:
            v = RF_ONE + q_power(l * self.datum.r[i])
            self._values[(i, l)] = v
        return v

    def problems(self):
        """Violations of the power-series condition among explicit values.

        Polynomial values are checked exactly; true rational functions are
        checked on the first SERIES_CHECK_ORDER coefficients.
        """
        out = []
        for (i, l), v in sorted(self._values.items()):
            label = self.datum.labels[i]
            if v.is_zero():
                out.append(f"nu[{label},{l}] is zero")
                continue
            if v.num.valuation() < 0:
                out.append(f"nu[{label},{l}] = {v} has q^-k terms")
                continue
            if v.den.is_one():
                coeffs = [v.num.coeffs.get(e, 0) for e in range(v.num.degree() + 1)]
            else:
                try:
                    coeffs = series_coefficients(v, self.SERIES_CHECK_ORDER)
                except ArithmeticError:
                    out.append(f"nu[{label},{l}] = {v} is not a power series at q=0")
                    continue
            if coeffs[0] != 1:
                out.append(f"nu[{label},{l}] = {v} must have constant term 1")
            if any(c < 0 or Fraction(c).denominator != 1 for c in coeffs[1:]):
                out.append(f"nu[{label},{l}] = {v} needs nonnegative integer coefficients")
        return out


class GramEntry:
    """Word basis, Gram matrix, and radical data of one degree component.

    The reduced echelon data is computed on first use; rank-only queries pay
    for the fraction-free forward pass alone.
    """

    def __init__(self, beta, words, matrix):
        self.beta = beta
        self.words = words
        self.matrix = matrix
        self._rref = None
        self._pivots = None
        self._rank = None

    EVAL_POINTS = (Fraction(7, 3), Fraction(13, 5), Fraction(23, 11))

    @property
    def rank(self):
        if self._rank is None:
            if self._pivots is not None:
                self._rank = len(self._pivots)
            else:
                self._rank = self._full_rank_certificate() or linalg.rank(self.matrix)
        return self._rank

    def _full_rank_certificate(self):
        """Full rank is certified by one exact rational evaluation (evaluation
        rank never exceeds the rank over Q(q)); returns None when inconclusive
        and the symbolic elimination must decide."""
        dim = len(self.words)
        for c in self.EVAL_POINTS:
            try:
                m = [[eval_at(x, c) for x in row] for row in self.matrix]
            except ZeroDivisionError:
                continue
            if linalg.rank_fractions(m) == dim:
                return dim
        return None

    def _echelon_data(self):
        if self._rref is None:
            self._rref, self._pivots = linalg.rref(self.matrix)
            self._rank = len(self._pivots)
        return self._rref, self._pivots

    @property
    def pivots(self):
        return self._echelon_data()[1]

    @property
    def rref(self):
        return self._echelon_data()[0]

    @property
    def free_cols(self):
        pivots = set(self.pivots)
        return [c for c in range(len(self.words)) if c not in pivots]

    @property
    def pivot_words(self):
        return [self.words[c] for c in self.pivots]

    def radical_vectors(self):
        """Kernel basis vectors as coefficient lists over self.words."""
        return linalg.kernel(self.matrix, len(self.words))

    def reduce_coords(self, coords):
        """Coordinates modulo the radical, on the pivot (complement) words."""
        rref, pivots = self._echelon_data()
        out = [coords[c] for c in pivots]
        for free in self.free_cols:
            cf = coords[free]
            if cf.is_zero():
                continue
            for k in range(len(pivots)):
                out[k] = out[k] + cf * rref[k][free]
        return out


class LForm:
    """The symmetric bilinear form on the free algebra for one nu family."""

    def __init__(self, algebra: FreeAlgebra, nu: NuParams, max_ht=None):
        self.algebra = algebra
        self.datum = algebra.datum
        self.nu = nu
        self.max_ht = max_ht if max_ht is not None else algebra.max_ht
        self._pair_cache = {}
        self._gram = {}
        self._reduce_word = {}

    # -- the pairing --------------------------------------------------------

    def pair_words(self, x: Word, y: Word) -> RatFunc:
        if x.root != y.root:
            return RF_ZERO
        if not x.letters:
            return RF_ONE
        if x.sort_key() > y.sort_key():
            x, y = y, x
        key = (x, y)
        val = self._pair_cache.get(key)
        if val is not None:
            return val
        if len(y.letters) == 1:
            # both single letters of equal degree: necessarily the same letter
            i, l = y.letters[0]
            val = self.nu.get(i, l)
        else:
            if len(x.letters) > 1 and len(x.letters) < len(y.letters):
                # expand delta of the shorter word
                x, y = y, x
            head = self.algebra.word(y.letters[:1], y.tag)
            rest = self.algebra.word(y.letters[1:], y.tag)
            val = RF_ZERO
            for (a, b), c in self.algebra.delta_word(x).terms.items():
                if a.root == head.root and b.root == rest.root:
                    pa = self.pair_words(a, head)
                    if not pa.is_zero():
                        val = val + c * pa * self.pair_words(b, rest)
        self._pair_cache[key] = val
        return val

    def pair(self, x: FreeElement, y: FreeElement) -> RatFunc:
        if x.tag != y.tag:
            raise AlphabetMismatch(f"{x.tag} vs {y.tag}")
        out = RF_ZERO
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                if wx.root == wy.root:
                    p = self.pair_words(wx, wy)
                    if not p.is_zero():
                        out = out + cx * cy * p
        return out

    def pair_tensor(self, a, b) -> RatFunc:
        """((x1 (x) x2), (y1 (x) y2)) = (x1,y1)(x2,y2), extended bilinearly."""
        out = RF_ZERO
        for (x1, x2), ca in a.terms.items():
            for (y1, y2), cb in b.terms.items():
                p1 = self.pair_words(x1, y1)
                if p1.is_zero():
                    continue
                p2 = self.pair_words(x2, y2)
                if p2.is_zero():
                    continue
                out = out + ca * cb * p1 * p2
        return out

    # -- Gram data ------------------------------------------------------------

    def gram(self, beta) -> GramEntry:
        beta = tuple(beta)
        entry = self._gram.get(beta)
        if entry is not None:
            return entry
        if ht(beta) > self.max_ht:
            raise DegreeTooLarge(f"ht({beta}) exceeds max_ht = {self.max_ht}")
        words = self.algebra.words_of_degree(beta, "f")
        m = len(words)
        matrix = [[RF_ZERO] * m for _ in range(m)]
        for a in range(m):
            for b in range(a, m):
                v = self.pair_words(words[a], words[b])
                matrix[a][b] = v
                matrix[b][a] = v
        entry = GramEntry(beta, words, matrix)
        self._gram[beta] = entry
        return entry

    def rank_of_degree(self, beta) -> int:
        return self.gram(beta).rank

    def radical_elements(self, beta):
        """The radical of the degree component as FreeElements."""
        g = self.gram(beta)
        out = []
        for vec in g.radical_vectors():
            out.append(FreeElement("f", {w: c for w, c in zip(g.words, vec)}))
        return out

    def in_radical(self, x: FreeElement) -> bool:
        """Membership test by pairing against every word of each degree."""
        by_root = {}
        for w, c in x.terms.items():
            by_root.setdefault(w.root, {})[w] = c
        for root, terms in by_root.items():
            part = FreeElement(x.tag, terms)
            for w in self.algebra.words_of_degree(root, x.tag):
                probe = FreeElement(x.tag, {w: RF_ONE})
                if not self.pair(part, probe).is_zero():
                    return False
        return True

    # -- reduction mod radical --------------------------------------------------

    def reduce_word(self, w: Word):
        """A single word as a pivot-word combination mod the radical.

        Works for the f and e alphabets alike; the e side is carried across by
        the letter-for-letter mirror of the Gram data.
        """
        cached = self._reduce_word.get(w)
        if cached is not None:
            return cached
        g = self.gram(w.root)
        fw = w if w.tag == "f" else self.algebra.word(w.letters, "f")
        coords = [RF_ONE if u is fw or u == fw else RF_ZERO for u in g.words]
        reduced = g.reduce_coords(coords)
        out = {}
        for word, c in zip(g.pivot_words, reduced):
            if not c.is_zero():
                key = word if w.tag == "f" else self.algebra.word(word.letters, w.tag)
                out[key] = c
        self._reduce_word[w] = out
        return out

    def reduce_element(self, x: FreeElement):
        """Pivot-word coordinates of an element, degree by degree."""
        out = {}
        for w, c in x.terms.items():
            for pw, pc in self.reduce_word(w).items():
                s = out.get(pw, RF_ZERO) + c * pc
                if s.is_zero():
                    out.pop(pw, None)
                else:
                    out[pw] = s
        return FreeElement(x.tag, out)

    def coords_on_words(self, x: FreeElement, beta):
        """Raw coordinate vector of a homogeneous element on the word basis."""
        words = self.algebra.words_of_degree(beta, x.tag)
        index = {w: k for k, w in enumerate(words)}
        vec = [RF_ZERO] * len(words)
        for w, c in x.terms.items():
            vec[index[w]] = c
        return vec

    def coords_on_pivots(self, x: FreeElement, beta):
        """Reduced coordinate vector of a homogeneous element on pivot words."""
        g = self.gram(beta)
        red = self.reduce_element(x)
        index = {w: k for k, w in enumerate(g.pivot_words)}
        vec = [RF_ZERO] * len(g.pivot_words)
        for w, c in red.terms.items():
            vec[index[w]] = c
        return vec
