import itertools

import pytest

from bbq.freealg import AlphabetMismatch, DegreeTooLarge
from bbq.scalars import RF_ONE, parse, q_power, rf


def T(lf, pairs, tag="f"):
    """Tensor element from {(letters1, letters2): coeff-string} shorthand."""
    alg = lf.algebra
    from bbq.freealg import TensorElement
    return TensorElement(tag, {
        (alg.word(a, tag), alg.word(b, tag)): rf(c) for (a, b), c in pairs.items()
    })


def test_twisted_mul_units(lf_im):
    alg = lf_im.algebra
    x = T(lf_im, {(((0, 1),), ()): 1})
    y = T(lf_im, {(((0, 2),), ()): 1})
    assert alg.tensor_mul(x, y) == T(lf_im, {(((0, 1), (0, 2)), ()): 1})
    xr = T(lf_im, {((), ((0, 1),)): 1})
    yr = T(lf_im, {((), ((0, 2),)): 1})
    assert alg.tensor_mul(xr, yr) == T(lf_im, {((), ((0, 1), (0, 2))): 1})


def test_twisted_mul_crossing(lf_im):
    # (1 (x) f_{i1})(f_{i1} (x) 1) = q_(i)^{-2} f_{i1} (x) f_{i1}
    alg = lf_im.algebra
    a = T(lf_im, {((), ((0, 1),)): 1})
    b = T(lf_im, {(((0, 1),), ()): 1})
    expect = T(lf_im, {(((0, 1),), ((0, 1),)): alg.datum.q_paren(0, -2)})
    assert alg.tensor_mul(a, b) == expect


def test_delta_unit_and_letter(lf_im):
    alg = lf_im.algebra
    assert alg.delta(alg.one()) == T(lf_im, {((), ()): 1})
    # delta(f_{i2}) = f_{i2} (x) 1 + q_(i)^{-1} f_{i1} (x) f_{i1} + 1 (x) f_{i2}
    got = alg.delta(alg.gen(0, 2))
    expect = T(lf_im, {
        (((0, 2),), ()): 1,
        (((0, 1),), ((0, 1),)): alg.datum.q_paren(0, -1),
        ((), ((0, 2),)): 1,
    })
    assert got == expect


def test_delta_of_product_rank2(lf_real_real):
    # delta(f_i f_j) = f_i f_j (x) 1 + f_i (x) f_j
    #                + q^{-(a_i,a_j)} f_j (x) f_i + 1 (x) f_i f_j
    alg = lf_real_real.algebra
    x = alg.mul(alg.gen(0, 1), alg.gen(1, 1))
    twist = q_power(-alg.datum.sym(0, 1))
    expect = T(lf_real_real, {
        (((0, 1), (1, 1)), ()): 1,
        (((0, 1),), ((1, 1),)): 1,
        (((1, 1),), ((0, 1),)): twist,
        ((), ((0, 1), (1, 1))): 1,
    })
    assert alg.delta(x) == expect


def _words_up_to(alg, max_ht, n):
    betas = [b for b in itertools.product(range(max_ht + 1), repeat=n)
             if 0 < sum(b) <= max_ht]
    out = []
    for b in sorted(betas):
        out.extend(alg.words_of_degree(b))
    return out


def test_delta_is_homomorphism(lf_real_im):
    alg = lf_real_im.algebra
    words = [w for w in _words_up_to(alg, 2, 2)]
    for wx in words:
        for wy in words:
            if wx.height + wy.height > 4:
                continue
            x = alg.element({wx.letters: RF_ONE})
            y = alg.element({wy.letters: RF_ONE})
            assert alg.delta(alg.mul(x, y)) == alg.tensor_mul(alg.delta(x), alg.delta(y))


def test_delta_coassociative(lf_real_im):
    # (delta (x) id) delta = (id (x) delta) delta, checked on all words of
    # height <= 4 by expanding both sides into word triples
    alg = lf_real_im.algebra
    for w in _words_up_to(alg, 4, 2):
        left = {}
        right = {}
        for (a, b), c in alg.delta_word(w).terms.items():
            for (a1, a2), c2 in alg.delta_word(a).terms.items():
                k = (a1, a2, b)
                left[k] = left.get(k, rf(0)) + c * c2
            for (b1, b2), c2 in alg.delta_word(b).terms.items():
                k = (a, b1, b2)
                right[k] = right.get(k, rf(0)) + c * c2
        left = {k: v for k, v in left.items() if not v.is_zero()}
        right = {k: v for k, v in right.items() if not v.is_zero()}
        assert left == right


def test_derivations(lf_im):
    alg = lf_im.algebra
    # e'_{i,l}(1) = 0
    assert alg.derivation("left", 0, 1, alg.one("t")).is_zero()
    # e'_{i,1}(t_{i1} t_{i1}) = (1 + q_(i)^{-2}) t_{i1}
    x = alg.element({((0, 1), (0, 1)): RF_ONE}, tag="t")
    got = alg.derivation("left", 0, 1, x)
    expect = alg.gen(0, 1, "t").scale(RF_ONE + alg.datum.q_paren(0, -2))
    assert got == expect
    # e''_{j,k}(t_{jk}) = 1
    assert alg.derivation("right", 0, 2, alg.gen(0, 2, "t")) == alg.one("t")


def test_derivation_product_rule(lf_real_im):
    alg = lf_real_im.algebra
    datum = alg.datum
    words = _words_up_to(alg, 3, 2)
    ai = (0, 1)
    for side in ("left", "right"):
        for wx in words:
            for wy in words:
                if wx.height + wy.height > 4:
                    continue
                x = alg.element({wx.letters: RF_ONE}, tag="t")
                y = alg.element({wy.letters: RF_ONE}, tag="t")
                i, l = 1, 2
                xy = alg.mul(x, y)
                got = alg.derivation(side, i, l, xy)
                if side == "left":
                    tw = q_power(-l * datum.root_pair(wx.root, ai))
                    expect = alg.mul(alg.derivation(side, i, l, x), y) \
                        + alg.mul(x, alg.derivation(side, i, l, y)).scale(tw)
                else:
                    tw = q_power(-l * datum.root_pair(wy.root, ai))
                    expect = alg.mul(alg.derivation(side, i, l, x), y).scale(tw) \
                        + alg.mul(x, alg.derivation(side, i, l, y))
                assert got == expect


def test_degree_enumeration(lf_im):
    alg = lf_im.algebra
    # compositions of l, shortest first
    ws = alg.words_of_degree((2,))
    assert [w.letters for w in ws] == [((0, 2),), ((0, 1), (0, 1))]
    assert len(alg.words_of_degree((4,))) == 8
    with pytest.raises(DegreeTooLarge):
        alg.words_of_degree((alg.max_ht + 1,))


def test_alphabet_mismatch(lf_im):
    alg = lf_im.algebra
    with pytest.raises(AlphabetMismatch):
        alg.mul(alg.one("f"), alg.one("t"))
    with pytest.raises(AlphabetMismatch):
        alg.delta(alg.one("t"))


def test_real_level_restriction(lf_real_real):
    with pytest.raises(ValueError):
        lf_real_real.algebra.word(((0, 2),))
