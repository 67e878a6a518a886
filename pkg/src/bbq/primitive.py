"""Primitive generators of the lower half: the elements t_{il}, the constants
tau_{il}, divided powers, Serre elements, and the basis change between the
defining and primitive alphabets.

t_{il} is found as the unique (mod radical) element f_{il} + (levels < l
combination) whose coproduct has no middle terms.  Primitivity forces
orthogonality to every product, so the pairing conditions hold by
construction and are re-verified independently in check_properties.
When the degree component has a radical (isotropic indices), the first-pivot
solution of the primitivity system is the canonical lift.
"""

from __future__ import annotations

from .cartan import alpha, ht
from .scalars import RF_ONE, RF_ZERO, RatFunc, q_binom, q_factorial, rf
from . import linalg
from .freealg import DegreeTooLarge, FreeElement, Word


class InconsistentSystem(RuntimeError):
    """The primitivity system has no solution; signals an implementation bug."""


class ZeroTau(ArithmeticError):
    """tau_{il} = 0: the configured nu family is outside supported genericity."""


class PrimitiveTable:
    """Fill-once tables of primitive generators for one bilinear form."""

    def __init__(self, lform):
        self.lform = lform
        self.algebra = lform.algebra
        self.datum = lform.algebra.datum
        self.nu = lform.nu
        self._t = {}
        self._tau = {}
        self._t_word = {}
        self._t_matrix = {}

    # -- construction ---------------------------------------------------------

    def _middle(self, x: FreeElement):
        """Middle part of delta(x): the key -> coeff map over word pairs with
        both tensor factors nonempty."""
        out = {}
        for (a, b), c in self.algebra.delta(x).terms.items():
            if a.letters and b.letters:
                s = out.get((a, b), RF_ZERO) + c
                if s.is_zero():
                    out.pop((a, b), None)
                else:
                    out[(a, b)] = s
        return out

    def t_element(self, i: int, l: int) -> FreeElement:
        """Expansion of t_{il} in the f-alphabet."""
        key = (i, l)
        cached = self._t.get(key)
        if cached is not None:
            return cached
        alg = self.algebra
        if self.datum.is_real(i):
            if l != 1:
                raise ValueError(f"real index {i} admits only level 1")
            out = alg.gen(i, 1)
        elif l == 1:
            out = alg.gen(i, 1)
        else:
            beta = alpha(self.datum.n, i, l)
            words = alg.words_of_degree(beta)
            lower = [w for w in words if len(w.letters) >= 2]
            gen = alg.gen(i, l)
            target = self._middle(gen)
            columns = [self._middle(FreeElement("f", {w: RF_ONE})) for w in lower]
            pair_keys = sorted(
                {k for col in columns for k in col} | set(target),
                key=lambda k: (k[0].sort_key(), k[1].sort_key()))
            rows = [[col.get(k, RF_ZERO) for col in columns] for k in pair_keys]
            rhs = [-target.get(k, RF_ZERO) for k in pair_keys]
            sol = linalg.solve(rows, rhs)
            if sol is None:
                raise InconsistentSystem(
                    f"no primitive lift of f[{self.datum.labels[i]},{l}]")
            out = gen + FreeElement("f", dict(zip(lower, sol)))
        self._t[key] = out
        return out

    def s_element(self, i: int, l: int) -> FreeElement:
        """s_{il} = omega(t_{il}): the same coefficients on e-words."""
        return self.algebra.retag(self.t_element(i, l), "e")

    def tau(self, i: int, l: int) -> RatFunc:
        key = (i, l)
        cached = self._tau.get(key)
        if cached is None:
            t = self.t_element(i, l)
            cached = self.lform.pair(t, t)
            if cached.is_zero():
                raise ZeroTau(
                    f"(t[{self.datum.labels[i]},{l}], t[{self.datum.labels[i]},{l}]) = 0 "
                    "for the configured nu family")
            self._tau[key] = cached
        return cached

    # -- basis change ----------------------------------------------------------

    def expand_t_word(self, w) -> FreeElement:
        """Product of the t-letter expansions of a t-alphabet word."""
        letters = w.letters if isinstance(w, Word) else tuple(w)
        cached = self._t_word.get(letters)
        if cached is not None:
            return cached
        alg = self.algebra
        out = alg.one()
        for i, l in letters:
            out = alg.mul(out, self.t_element(i, l))
        self._t_word[letters] = out
        return out

    def from_t(self, x: FreeElement) -> FreeElement:
        """Expand a t/s-alphabet element into the matching defining alphabet."""
        if x.tag == "t":
            out = self.algebra.zero("f")
            for w, c in x.terms.items():
                out = out + self.expand_t_word(w).scale(c)
            return out
        if x.tag == "s":
            return self.algebra.retag(self.from_t(self.algebra.retag(x, "t")), "e")
        raise ValueError("from_t expects the t or s alphabet")

    def to_t_coords(self, x: FreeElement, beta=None) -> FreeElement:
        """Rewrite an f-alphabet element in t-words.

        The change of basis is unitriangular for the (length, letters) order,
        so a single sweep of leading-term elimination inverts it exactly.
        """
        if x.tag != "f":
            raise ValueError("to_t_coords expects the f-alphabet")
        alg = self.algebra
        residual = dict(x.terms)
        out = {}
        while residual:
            w = min(residual, key=Word.sort_key)
            c = residual.pop(w)
            if c.is_zero():
                continue
            out[alg.word(w.letters, "t")] = c
            # subtract c * (expansion - leading word); corrections are longer
            for u, cu in self.expand_t_word(w.letters).terms.items():
                if u is w or u == w:
                    continue
                s = residual.get(u, RF_ZERO) - c * cu
                if s.is_zero():
                    residual.pop(u, None)
                else:
                    residual[u] = s
        return FreeElement("t", out)

    # -- divided powers and Serre elements -------------------------------------

    def divided_power(self, i: int, n: int) -> FreeElement:
        """t_i^(n) = t_i^n / [n]_i! for a real index, in the f-alphabet."""
        if not self.datum.is_real(i):
            raise ValueError(f"index {self.datum.labels[i]!r} is not real")
        alg = self.algebra
        out = alg.one()
        for _ in range(n):
            out = alg.mul(out, alg.gen(i, 1))
        return out.scale(q_factorial(n, self.datum.r[i]).inverse())

    def serre_element(self, i: int, j: int, l: int) -> FreeElement:
        """sum_{p+p'=1-l a_ij} (-1)^p t_i^(p) t_{jl} t_i^(p')."""
        if not self.datum.is_real(i):
            raise ValueError(f"index {self.datum.labels[i]!r} is not real")
        if (i, 1) == (j, l):
            raise ValueError("the Serre element needs i != (j,l)")
        n = 1 - l * self.datum.a[i][j]
        alg = self.algebra
        tj = self.t_element(j, l)
        out = alg.zero()
        for p in range(n + 1):
            term = alg.mul(alg.mul(self.divided_power(i, p), tj),
                           self.divided_power(i, n - p))
            out = out + (term if p % 2 == 0 else -term)
        return out

    def serre_check(self, i: int, j: int, l: int):
        """Radical membership certificate: the Serre element paired against
        every word of its degree."""
        elem = self.serre_element(i, j, l)
        n = 1 - l * self.datum.a[i][j]
        beta = tuple((n if k == i else 0) + (l if k == j else 0)
                     for k in range(self.datum.n))
        if ht(beta) > self.algebra.max_ht:
            raise DegreeTooLarge(
                f"Serre degree ht {ht(beta)} exceeds max_ht {self.algebra.max_ht}")
        pairings = []
        ok = True
        for w in self.algebra.words_of_degree(beta):
            v = self.lform.pair(elem, FreeElement("f", {w: RF_ONE}))
            pairings.append((w, v))
            ok = ok and v.is_zero()
        return {"index_real": self.datum.labels[i],
                "index_other": self.datum.labels[j],
                "level": l,
                "degree": beta,
                "in_radical": ok,
                "pairings": pairings}

    # -- property verification ---------------------------------------------------

    def check_properties(self, i: int, l: int):
        """Independent verification of the primitive-generator properties:
        pairing orthogonality to lower levels, normalization, bar invariance
        of the coefficients, and delta-primitivity."""
        alg = self.algebra
        t = self.t_element(i, l)
        report = {}

        gen_word = alg.word(((i, l),))
        norm_ok = t.terms.get(gen_word) == RF_ONE
        lower_ok = all(w is gen_word or w == gen_word or
                       (len(w.letters) >= 2 and all(k < l for _, k in w.letters))
                       for w in t.terms)
        report["normalization"] = norm_ok and lower_ok

        beta = alpha(self.datum.n, i, l)
        orth = []
        for w in alg.words_of_degree(beta):
            if len(w.letters) >= 2:
                orth.append(self.lform.pair(t, FreeElement("f", {w: RF_ONE})))
        report["orthogonal_to_lower"] = all(v.is_zero() for v in orth)

        report["bar_invariant"] = all(c.bar() == c for c in t.terms.values())

        report["delta_primitive"] = not self._middle(t)

        try:
            report["tau"] = self.tau(i, l)
            report["tau_nonzero"] = True
        except ZeroTau:
            report["tau"] = RF_ZERO
            report["tau_nonzero"] = False
        report["ok"] = all(report[k] for k in
                           ("normalization", "orthogonal_to_lower",
                            "bar_invariant", "delta_primitive", "tau_nonzero"))
        return report

