"""Borcherds-Cartan data: validation, weight/root lattices, bilinear form.

Roots are handled as plain int tuples of simple-root multiplicities; weights
store their values on the coroot basis {h_i} + {d_i}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .scalars import RatFunc, q_power


class DatumError(ValueError):
    """Invalid Borcherds-Cartan datum; carries every violated condition."""

    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(f"{kind}: {msg}" for kind, msg in self.problems))

    def kinds(self):
        return {kind for kind, _ in self.problems}


class NotRealIndex(ValueError):
    pass


def ht(beta) -> int:
    return sum(beta)


def alpha(n: int, i: int, mult: int = 1):
    """The root vector mult * alpha_i in an index set of size n."""
    return tuple(mult if j == i else 0 for j in range(n))


@dataclass(frozen=True)
class CartanDatum:
    labels: tuple
    a: tuple          # rows of the Borcherds-Cartan matrix
    r: tuple          # symmetrizer entries, positive ints
    cutoffs: tuple    # max generator level per index (1 for real indices)

    @property
    def n(self) -> int:
        return len(self.labels)

    def index(self, label) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown index label {label!r}") from None

    def is_real(self, i: int) -> bool:
        return self.a[i][i] == 2

    def is_imaginary(self, i: int) -> bool:
        return self.a[i][i] <= 0

    def is_isotropic(self, i: int) -> bool:
        return self.a[i][i] == 0

    @property
    def real_indices(self):
        return tuple(i for i in range(self.n) if self.is_real(i))

    @property
    def imaginary_indices(self):
        return tuple(i for i in range(self.n) if self.is_imaginary(i))

    @property
    def isotropic_indices(self):
        return tuple(i for i in range(self.n) if self.is_isotropic(i))

    def sym(self, i: int, j: int) -> int:
        """(alpha_i, alpha_j) = r_i a_ij."""
        return self.r[i] * self.a[i][j]

    def root_pair(self, beta, gamma) -> int:
        """Bilinear form on root vectors."""
        total = 0
        for i, bi in enumerate(beta):
            if bi:
                for j, gj in enumerate(gamma):
                    if gj:
                        total += bi * gj * self.r[i] * self.a[i][j]
        return total

    def q_i(self, i: int) -> RatFunc:
        return q_power(self.r[i])

    def half_norm(self, i: int) -> int:
        """(alpha_i, alpha_i)/2, the exponent of q_(i)."""
        return self.r[i] * self.a[i][i] // 2

    def q_paren(self, i: int, m: int = 1) -> RatFunc:
        """q_(i)^m = q^{m (alpha_i, alpha_i)/2}."""
        return q_power(m * self.half_norm(i))

    def alpha_on_coroot(self, j: int, hvec) -> int:
        """alpha_j evaluated on h = sum c_i h_i + sum e_i d_i."""
        n = self.n
        return sum(hvec[i] * self.a[i][j] for i in range(n)) + hvec[n + j]

    def gen_indices(self):
        """All generator indices (i, l) with l up to the per-index cutoff."""
        return [(i, l) for i in range(self.n) for l in range(1, self.cutoffs[i] + 1)]

    def alpha_weight(self, i: int) -> "Weight":
        return Weight(tuple(self.a[j][i] for j in range(self.n)),
                      tuple(1 if j == i else 0 for j in range(self.n)))

    def root_weight(self, beta) -> "Weight":
        """The element sum beta_j alpha_j of P."""
        w = Weight((0,) * self.n, (0,) * self.n)
        for j, bj in enumerate(beta):
            if bj:
                w = w + self.alpha_weight(j).scale(bj)
        return w

    def fundamental_weight(self, i: int) -> "Weight":
        return Weight(tuple(1 if j == i else 0 for j in range(self.n)),
                      (0,) * self.n)


@dataclass(frozen=True)
class Weight:
    """Element of P, stored by its values on the coroots h_i and the d_i."""

    h: tuple
    d: tuple

    def __add__(self, other):
        return Weight(tuple(a + b for a, b in zip(self.h, other.h)),
                      tuple(a + b for a, b in zip(self.d, other.d)))

    def __sub__(self, other):
        return Weight(tuple(a - b for a, b in zip(self.h, other.h)),
                      tuple(a - b for a, b in zip(self.d, other.d)))

    def __neg__(self):
        return Weight(tuple(-a for a in self.h), tuple(-a for a in self.d))

    def scale(self, c: int) -> "Weight":
        return Weight(tuple(c * a for a in self.h), tuple(c * a for a in self.d))

    def on_coroot(self, hvec) -> int:
        """Pair with h = sum c_i h_i + sum e_i d_i given as a length-2n vector."""
        n = len(self.h)
        return sum(self.h[i] * hvec[i] for i in range(n)) \
            + sum(self.d[i] * hvec[n + i] for i in range(n))


def simple_reflection(datum: CartanDatum, i: int, lam: Weight) -> Weight:
    if not datum.is_real(i):
        raise NotRealIndex(f"index {datum.labels[i]!r} is not real")
    return lam - datum.alpha_weight(i).scale(lam.h[i])


def _infer_symmetrizer(a, problems):
    """Solve r_i a_ij = r_j a_ji in positive integers by spanning-tree
    propagation; appends NotSymmetrizable problems on failure."""
    n = len(a)
    ratio = [None] * n
    comps = []
    for start in range(n):
        if ratio[start] is not None:
            continue
        ratio[start] = Fraction(1)
        comp = [start]
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if i == j or (a[i][j] == 0 and a[j][i] == 0):
                    continue
                if (a[i][j] == 0) != (a[j][i] == 0):
                    problems.append(("NotSymmetrizable",
                                     f"a[{i}][{j}]={a[i][j]} but a[{j}][{i}]={a[j][i]}; "
                                     "r_i a_ij = r_j a_ji has no positive solution"))
                    continue
                want = ratio[i] * Fraction(a[i][j], a[j][i])
                if ratio[j] is None:
                    ratio[j] = want
                    comp.append(j)
                    queue.append(j)
                elif ratio[j] != want:
                    problems.append(("NotSymmetrizable",
                                     f"inconsistent cycle through edge ({i},{j})"))
        comps.append(comp)
    if any(kind == "NotSymmetrizable" for kind, _ in problems):
        return None
    r = [Fraction(0)] * n
    for comp in comps:
        den_lcm = 1
        for i in comp:
            den_lcm = den_lcm * ratio[i].denominator // gcd(den_lcm, ratio[i].denominator)
        nums = [ratio[i] * den_lcm for i in comp]
        g = 0
        for v in nums:
            g = gcd(g, int(v))
        for i, v in zip(comp, nums):
            r[i] = int(v) // g
    return tuple(int(x) for x in r)


def validate_datum(a, symmetrizer=None, cutoffs=None, labels=None,
                   default_cutoff: int = 6) -> CartanDatum:
    """Check the Borcherds-Cartan conditions, inferring the symmetrizer when
    it is not supplied.  Raises DatumError listing every violated condition."""
    problems = []
    n = len(a)
    rows = []
    for i, row in enumerate(a):
        if len(row) != n:
            problems.append(("BadShape", f"row {i} has length {len(row)}, expected {n}"))
        rows.append(tuple(int(x) for x in row))
    if problems:
        raise DatumError(problems)
    a = tuple(rows)
    if labels is None:
        labels = tuple(str(i) for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(set(labels)) != n:
            problems.append(("BadShape", "index labels must be distinct"))

    for i in range(n):
        aii = a[i][i]
        if not (aii == 2 or (aii <= 0 and aii % 2 == 0)):
            problems.append(("OddDiagonal",
                             f"a[{i}][{i}] = {aii}; diagonal entries must be 2, 0, -2, -4, ..."))
        for j in range(n):
            if i != j and a[i][j] > 0:
                problems.append(("PositiveOffDiagonal",
                                 f"a[{i}][{j}] = {a[i][j]} > 0"))

    if symmetrizer is not None:
        r = tuple(int(x) for x in symmetrizer)
        if len(r) != n or any(x < 1 for x in r):
            problems.append(("BadSymmetrizer", "symmetrizer must be positive integers"))
        else:
            for i in range(n):
                for j in range(i + 1, n):
                    if r[i] * a[i][j] != r[j] * a[j][i]:
                        problems.append(("NotSymmetrizable",
                                         f"r[{i}]*a[{i}][{j}] = {r[i] * a[i][j]} != "
                                         f"r[{j}]*a[{j}][{i}] = {r[j] * a[j][i]}"))
    else:
        r = _infer_symmetrizer(a, problems)

    cuts = [0] * n
    cutoffs = dict(cutoffs or {})
    for i in range(n):
        real = a[i][i] == 2
        given = cutoffs.pop(labels[i], None) if labels[i] in cutoffs else cutoffs.pop(i, None)
        if real:
            if given not in (None, 1):
                problems.append(("BadCutoff",
                                 f"real index {labels[i]!r} admits only level 1"))
            cuts[i] = 1
        else:
            cuts[i] = int(given) if given is not None else default_cutoff
            if cuts[i] < 1:
                problems.append(("BadCutoff", f"cutoff for {labels[i]!r} must be >= 1"))
    for leftover in cutoffs:
        problems.append(("BadCutoff", f"cutoff given for unknown index {leftover!r}"))

    if problems:
        raise DatumError(problems)
    return CartanDatum(labels=labels, a=a, r=r, cutoffs=tuple(cuts))
