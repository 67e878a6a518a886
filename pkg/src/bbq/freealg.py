"""The Q_- graded free algebra on generators indexed by (i, l), its twisted
tensor square, the coproduct delta, and the letter-removal derivations that
act on the primitive alphabet.

Words carry an alphabet tag: "f"/"e" for the defining generators of the lower
and upper halves, "t"/"s" for the primitive alphabets.  All four share the
same grading |word| = -(sum of l * alpha_i) up to the sign convention of the
half they live in; internally every word stores the positive root vector.
"""

from __future__ import annotations

from .cartan import CartanDatum, ht
from .scalars import RF_ONE, RF_ZERO, RatFunc, q_power


class AlphabetMismatch(ValueError):
    pass


class DegreeTooLarge(ValueError):
    pass


class Word:
    """Interned sequence of (index, level) letters with a fixed alphabet tag."""

    __slots__ = ("letters", "tag", "root", "height", "_hash")

    def __init__(self, letters, tag, root):
        self.letters = letters
        self.tag = tag
        self.root = root
        self.height = ht(root)
        self._hash = hash((letters, tag))

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.tag == other.tag

    def __len__(self):
        return len(self.letters)

    def sort_key(self):
        return (self.height, self.root, len(self.letters), self.letters)

    def __repr__(self):
        if not self.letters:
            return "1"
        return "*".join(f"{self.tag}[{i},{l}]" for i, l in self.letters)


class FreeElement:
    """Finite RatFunc-linear combination of words of one alphabet."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag, terms):
        self.tag = tag
        self.terms = {w: c for w, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, FreeElement):
            return NotImplemented
        return self.tag == other.tag and self.terms == other.terms

    def __add__(self, other):
        if self.tag != other.tag:
            raise AlphabetMismatch(f"{self.tag} vs {other.tag}")
        out = dict(self.terms)
        for w, c in other.terms.items():
            s = out.get(w, RF_ZERO) + c
            if s.is_zero():
                out.pop(w, None)
            else:
                out[w] = s
        return FreeElement(self.tag, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return FreeElement(self.tag, {w: -c for w, c in self.terms.items()})

    def scale(self, c: RatFunc):
        if c.is_zero():
            return FreeElement(self.tag, {})
        return FreeElement(self.tag, {w: c * v for w, v in self.terms.items()})

    def homogeneous_root(self):
        """The common root vector of all words, or None if mixed/zero."""
        roots = {w.root for w in self.terms}
        return roots.pop() if len(roots) == 1 else None

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w in sorted(self.terms, key=Word.sort_key):
            parts.append(f"({self.terms[w]})*{w!r}")
        return " + ".join(parts)


class TensorElement:
    """Finite combination of word pairs; the two-fold tensor square."""

    __slots__ = ("tag", "terms")

    def __init__(self, tag, terms):
        self.tag = tag
        self.terms = {k: c for k, c in terms.items() if not c.is_zero()}

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return self.tag == other.tag and self.terms == other.terms

    def __add__(self, other):
        if self.tag != other.tag:
            raise AlphabetMismatch(f"{self.tag} vs {other.tag}")
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, RF_ZERO) + c
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return TensorElement(self.tag, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return TensorElement(self.tag, {k: -c for k, c in self.terms.items()})

    def scale(self, c: RatFunc):
        if c.is_zero():
            return TensorElement(self.tag, {})
        return TensorElement(self.tag, {k: c * v for k, v in self.terms.items()})

    def __repr__(self):
        if not self.terms:
            return "0"
        keys = sorted(self.terms, key=lambda k: (k[0].sort_key(), k[1].sort_key()))
        return " + ".join(f"({self.terms[k]})*{k[0]!r}(x){k[1]!r}" for k in keys)


class FreeAlgebra:
    """Word arithmetic bound to one Cartan datum: interning, grading, the
    twisted tensor multiplication, delta, and the derivations e'/e''."""

    def __init__(self, datum: CartanDatum, max_ht: int = 6):
        self.datum = datum
        self.max_ht = max_ht
        self._words = {}
        self._delta_cache = {}
        self._degree_words = {}
        self._qpair = {}

    # -- words and elements ------------------------------------------------

    def word(self, letters, tag="f") -> Word:
        letters = tuple((int(i), int(l)) for i, l in letters)
        key = (letters, tag)
        w = self._words.get(key)
        if w is None:
            n = self.datum.n
            root = [0] * n
            for i, l in letters:
                if l < 1:
                    raise ValueError(f"letter level must be >= 1, got {(i, l)}")
                if self.datum.is_real(i) and l != 1:
                    raise ValueError(f"real index {i} admits only level 1, got {(i, l)}")
                root[i] += l
            w = Word(letters, tag, tuple(root))
            self._words[key] = w
        return w

    def one(self, tag="f") -> FreeElement:
        return FreeElement(tag, {self.word((), tag): RF_ONE})

    def zero(self, tag="f") -> FreeElement:
        return FreeElement(tag, {})

    def gen(self, i: int, l: int, tag="f") -> FreeElement:
        return FreeElement(tag, {self.word(((i, l),), tag): RF_ONE})

    def element(self, terms, tag="f") -> FreeElement:
        """Build from {letters-tuple: coeff}."""
        return FreeElement(tag, {self.word(ls, tag): c for ls, c in terms.items()})

    def mul(self, x: FreeElement, y: FreeElement) -> FreeElement:
        """Concatenation product (the free multiplication, no twisting)."""
        if x.tag != y.tag:
            raise AlphabetMismatch(f"{x.tag} vs {y.tag}")
        out = {}
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                w = self.word(wx.letters + wy.letters, x.tag)
                s = out.get(w, RF_ZERO) + cx * cy
                out[w] = s
        return FreeElement(x.tag, out)

    def retag(self, x: FreeElement, tag: str) -> FreeElement:
        """Same letters and coefficients in another alphabet (omega transport)."""
        return FreeElement(tag, {self.word(w.letters, tag): c for w, c in x.terms.items()})

    # -- grading helpers ----------------------------------------------------

    def q_root_pair(self, beta, gamma, mult: int = 1) -> RatFunc:
        """q^{mult * (beta, gamma)} for root vectors beta, gamma."""
        key = (beta, gamma, mult)
        v = self._qpair.get(key)
        if v is None:
            v = q_power(mult * self.datum.root_pair(beta, gamma))
            self._qpair[key] = v
        return v

    # -- twisted tensor square and delta ------------------------------------

    def tensor(self, x: FreeElement, y: FreeElement) -> TensorElement:
        if x.tag != y.tag:
            raise AlphabetMismatch(f"{x.tag} vs {y.tag}")
        out = {}
        for wx, cx in x.terms.items():
            for wy, cy in y.terms.items():
                out[(wx, wy)] = out.get((wx, wy), RF_ZERO) + cx * cy
        return TensorElement(x.tag, out)

    def tensor_mul(self, a: TensorElement, b: TensorElement) -> TensorElement:
        """(x1 (x) x2)(y1 (x) y2) = q^{-(|x2|,|y1|)} x1y1 (x) x2y2."""
        if a.tag != b.tag:
            raise AlphabetMismatch(f"{a.tag} vs {b.tag}")
        tag = a.tag
        out = {}
        for (x1, x2), ca in a.terms.items():
            for (y1, y2), cb in b.terms.items():
                # |x2| and |y1| both lie in Q_-, so (|x2|,|y1|) = (root, root)
                c = ca * cb * self.q_root_pair(x2.root, y1.root, -1)
                key = (self.word(x1.letters + y1.letters, tag),
                       self.word(x2.letters + y2.letters, tag))
                s = out.get(key, RF_ZERO) + c
                out[key] = s
        return TensorElement(tag, out)

    def _delta_letter(self, i, l, tag):
        out = {}
        for m in range(l + 1):
            c = self.datum.q_paren(i, -m * (l - m))
            key = (self.word(((i, m),) if m else (), tag),
                   self.word(((i, l - m),) if l - m else (), tag))
            out[key] = c
        return TensorElement(tag, out)

    def delta_word(self, w: Word) -> TensorElement:
        """delta on one f-word, memoized."""
        cached = self._delta_cache.get(w)
        if cached is not None:
            return cached
        if not w.letters:
            out = TensorElement(w.tag, {(w, w): RF_ONE})
        elif len(w.letters) == 1:
            i, l = w.letters[0]
            out = self._delta_letter(i, l, w.tag)
        else:
            head = self.delta_word(self.word(w.letters[:1], w.tag))
            rest = self.delta_word(self.word(w.letters[1:], w.tag))
            out = self.tensor_mul(head, rest)
        self._delta_cache[w] = out
        return out

    def delta(self, x: FreeElement) -> TensorElement:
        """The coproduct on the f-alphabet (an algebra map for tensor_mul)."""
        if x.tag != "f":
            raise AlphabetMismatch("delta expands f-alphabet elements; "
                                   "primitive alphabets use delta_primitive")
        out = TensorElement("f", {})
        for w, c in x.terms.items():
            out = out + self.delta_word(w).scale(c)
        return out

    def delta_primitive(self, x: FreeElement) -> TensorElement:
        """delta on the t/s alphabets, using primitivity of the letters."""
        if x.tag not in ("t", "s"):
            raise AlphabetMismatch("delta_primitive needs a primitive alphabet")
        tag = x.tag
        unit = self.word((), tag)
        out = TensorElement(tag, {})
        for w, c in x.terms.items():
            acc = TensorElement(tag, {(unit, unit): RF_ONE})
            for i, l in w.letters:
                g = self.word(((i, l),), tag)
                letter = TensorElement(tag, {(g, unit): RF_ONE, (unit, g): RF_ONE})
                acc = self.tensor_mul(acc, letter)
            out = out + acc.scale(c)
        return out

    # -- derivations on the primitive alphabet -------------------------------

    def derivation(self, side: str, i: int, l: int, x: FreeElement) -> FreeElement:
        """e'_{i,l} (side='left') or e''_{i,l} (side='right') on t-words.

        e'(uv) = e'(u) v + q^{l(|u|,alpha_i)} u e'(v);
        e''(uv) = q^{l(|v|,alpha_i)} e''(u) v + u e''(v).
        """
        if x.tag not in ("t", "s"):
            raise AlphabetMismatch("derivations act on the primitive alphabets")
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        n = self.datum.n
        ai = tuple(1 if j == i else 0 for j in range(n))
        out = {}
        for w, c in x.terms.items():
            for p, (j, k) in enumerate(w.letters):
                if (j, k) != (i, l):
                    continue
                rest = self.word(w.letters[:p] + w.letters[p + 1:], x.tag)
                if side == "left":
                    part = w.letters[:p]
                else:
                    part = w.letters[p + 1:]
                proot = [0] * n
                for ii, ll in part:
                    proot[ii] += ll
                # |part| lies in Q_-, so (|part|, alpha_i) = -(root, alpha_i)
                coeff = c * self.q_root_pair(tuple(proot), ai, -l)
                s = out.get(rest, RF_ZERO) + coeff
                out[rest] = s
        return FreeElement(x.tag, out)

    # -- degree enumeration ---------------------------------------------------

    def words_of_degree(self, beta, tag="f"):
        """All words of degree -(beta), deg-lex ordered: by length, then by
        the letter sequence.  Letters respect the per-index level cutoffs."""
        beta = tuple(beta)
        if ht(beta) > self.max_ht:
            raise DegreeTooLarge(f"ht({beta}) = {ht(beta)} exceeds max_ht = {self.max_ht}")
        key = (beta, tag)
        cached = self._degree_words.get(key)
        if cached is not None:
            return cached
        letters = []
        for i, bi in enumerate(beta):
            if bi < 0:
                raise ValueError("degree must lie in Q_+")
            top = min(bi, self.datum.cutoffs[i])
            letters.extend((i, l) for l in range(1, top + 1))
        seqs = []

        def extend(prefix, remaining):
            if all(x == 0 for x in remaining):
                seqs.append(tuple(prefix))
                return
            for (i, l) in letters:
                if remaining[i] >= l:
                    remaining2 = list(remaining)
                    remaining2[i] -= l
                    extend(prefix + [(i, l)], remaining2)

        extend([], list(beta))
        seqs.sort(key=lambda s: (len(s), s))
        words = tuple(self.word(s, tag) for s in seqs)
        self._degree_words[key] = words
        return words
