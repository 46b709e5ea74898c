"""Word universes, the top/bottom split, closed-form generating functions,
and the constructive pairing.

Positions and statistics are re-derived from their definitions inside the
tests wherever they are asserted (seeded random words for the extractors,
explicit sets for the splits).
"""

import random
from math import comb, inf

import pytest

from macq.algebra import MPoly, qmultinom
from macq.words import (WordSpec, build_phi,
                        build_phi_inverse, coinv, enumerate_Wk, gf_brute,
                        gf_closed, gf_refined_closed, lemma_sums,
                        middle_subword, multiset_words, p_bottom,
                        p_bottom_raw, p_top, quinv_prime, side_of, split,
                        top_before_bottom)

SPEC33 = WordSpec(n=3, N=3, alpha=(1,), ell=3)


def test_universe_enumeration():
    assert sorted(enumerate_Wk(SPEC33, 0)) == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
    assert sorted(enumerate_Wk(SPEC33, 1)) == [
        (1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    assert sorted(enumerate_Wk(SPEC33, 2)) == [(2, 3, 3), (3, 2, 3), (3, 3, 2)]
    with pytest.raises(ValueError):
        list(enumerate_Wk(SPEC33, 3))


def test_spec_validation():
    with pytest.raises(ValueError):
        WordSpec(n=3, N=3, alpha=(0,), ell=3)
    with pytest.raises(ValueError):
        WordSpec(n=3, N=1, alpha=(1,), ell=3)
    with pytest.raises(ValueError):
        WordSpec(n=3, N=4, alpha=(1,), ell=5)
    with pytest.raises(ValueError):
        WordSpec(n=4, N=4, alpha=(1,), ell=2)
    # empty middle alphabet is allowed
    WordSpec(n=2, N=3, alpha=(), ell=2)


def test_coinv_extremes():
    assert coinv((3, 2, 1)) == 0
    assert coinv((1, 2, 3)) == 3
    assert coinv((1, 1, 2)) == 2


def test_split_three_letters():
    leq, gt = split(SPEC33, 1)
    assert sorted(leq) == [(1, 3, 2), (3, 1, 2), (3, 2, 1)]
    assert sorted(gt) == [(1, 2, 3), (2, 1, 3), (2, 3, 1)]
    # boundary conventions
    leq0, gt0 = split(SPEC33, 0)
    assert not leq0 and len(gt0) == 3
    leq2, gt2 = split(SPEC33, 2)
    assert not gt2 and len(leq2) == 3


def test_split_four_letter_display():
    spec = WordSpec(n=3, N=4, alpha=(1,), ell=3)
    leq, gt = split(spec, 2)
    assert sorted("".join(map(str, w)) for w in leq) == [
        "1323", "1332", "3123", "3132", "3213", "3231", "3312", "3321"]
    assert sorted("".join(map(str, w)) for w in gt) == [
        "1233", "2133", "2313", "2331"]


def test_quinv_prime_generating_functions():
    q = MPoly.q
    one = MPoly.const(1)
    gf01 = one + q() + q(exp=2)
    gf12 = q() + q(exp=2) + q(exp=3)
    leq1, gt1 = split(SPEC33, 1)
    assert gf_brute(SPEC33, enumerate_Wk(SPEC33, 0)) == gf01
    assert gf_brute(SPEC33, leq1) == gf01
    assert gf_brute(SPEC33, gt1) == gf12
    assert gf_brute(SPEC33, enumerate_Wk(SPEC33, 2)) == gf12
    assert str(gf01) == "1 + q + q^2"
    assert str(gf12) == "q + q^2 + q^3"


def test_position_extractors_against_definitions():
    rng = random.Random(4242)
    for _ in range(1000):
        n = rng.choice([3, 4])
        N = rng.randint(2, 8)
        w = tuple(rng.randint(1, n) for _ in range(N))
        # leftmost top letter, scanning from the left
        tops = [i + 1 for i, v in enumerate(w) if v == n]
        assert p_top(w, n) == (tops[0] if tops else inf)
        # rightmost 1 counted from the right, top letters deleted
        kept = [v for v in w if v != n]
        ones = [i for i, v in enumerate(kept) if v == 1]
        want = (len(kept) - ones[-1]) if ones else inf
        assert p_bottom(w, n) == want
        # rightmost 1 counted from the right, nothing deleted
        raw = [i for i, v in enumerate(w) if v == 1]
        want = (len(w) - raw[-1]) if raw else inf
        assert p_bottom_raw(w) == want


def test_closed_forms_whole_sweep_sample():
    for spec in [WordSpec(3, 5, (2,), 3), WordSpec(3, 6, (1,), 2),
                 WordSpec(4, 6, (1, 2), 3), WordSpec(4, 5, (1, 1), 4),
                 WordSpec(2, 4, (), 2)]:
        for k in range(spec.L + 1):
            leq, gt = split(spec, k)
            assert gf_brute(spec, gt) == gf_closed(spec, k, "gt")
            assert gf_brute(spec, leq) == gf_closed(spec, k, "leq")
            for pos in range(1, spec.N + 2 - spec.L):
                sub = [w for w in gt if p_bottom(w, spec.n) == pos]
                assert gf_brute(spec, sub) == gf_refined_closed(
                    spec, k, "gt", pos)
                sub = [w for w in leq if p_top(w, spec.n) == pos]
                assert gf_brute(spec, sub) == gf_refined_closed(
                    spec, k, "leq", pos)


def test_refined_forms_sum_to_totals():
    """Summing the refined closed forms over the position recovers the
    unrefined closed forms, as exact polynomials."""
    for spec in [WordSpec(3, 6, (2,), 3), WordSpec(4, 6, (1, 1), 2)]:
        for k in range(spec.L + 1):
            for side in ("gt", "leq"):
                total = MPoly.zero()
                for pos in range(1, spec.N + 2 - spec.L):
                    total = total + gf_refined_closed(spec, k, side, pos)
                assert total == gf_closed(spec, k, side)


def test_whole_universe_product_formula():
    """The quinv' generating function of the full universe is twice a
    q-multinomial times prod_{j=1}^{L-1} (1 + q^j)."""
    for spec in [SPEC33, WordSpec(3, 6, (2,), 2), WordSpec(4, 6, (1, 1), 3)]:
        total = MPoly.zero()
        for k in range(spec.L + 1):
            total = total + gf_brute(spec, enumerate_Wk(spec, k))
        bars = sum(comb(spec.alpha[i - 2], 2)
                   for i in range(spec.ell, spec.n))
        want = qmultinom((spec.L,) + spec.alpha).scale(2) \
            * MPoly.q(exp=bars)
        for j in range(1, spec.L):
            want = want * (MPoly.const(1) + MPoly.q(exp=j))
        assert total == want


def test_per_k_totals():
    for spec in [SPEC33, WordSpec(3, 7, (3,), 3)]:
        for k in range(spec.L + 1):
            bars = sum(comb(spec.alpha[i - 2], 2)
                       for i in range(spec.ell, spec.n))
            want = MPoly.q(exp=bars + comb(k, 2)) * qmultinom(
                (spec.L - k,) + spec.alpha + (k,))
            assert gf_brute(spec, enumerate_Wk(spec, k)) == want


def test_refined_case_sums():
    for N in range(2, 8):
        for a2 in range(1, N):
            spec = WordSpec(3, N, (a2,), 3)
            L = spec.L
            for k in range(L + 1):
                leq, gt = split(spec, k)
                for i in range(1, N + 2 - L):
                    if k <= L - 1:
                        before = [w for w in gt if p_bottom(w, 3) == i
                                  and top_before_bottom(w, 3)]
                        after = [w for w in gt if p_bottom(w, 3) == i
                                 and not top_before_bottom(w, 3)]
                        if 1 <= i <= (N - k) // 2:
                            assert _coinv_gf(before) == lemma_sums(
                                spec, k, i, "gt_l")
                            assert _coinv_gf(after) == lemma_sums(
                                spec, k, i, "gt_r1")
                        else:
                            assert not before
                            assert _coinv_gf(after) == lemma_sums(
                                spec, k, i, "gt_r2")
                    if k >= 1:
                        before = [w for w in leq if p_top(w, 3) == i
                                  and top_before_bottom(w, 3)]
                        after = [w for w in leq if p_top(w, 3) == i
                                 and not top_before_bottom(w, 3)]
                        if 1 <= i <= (N - k + 1) // 2:
                            assert _coinv_gf(before) == lemma_sums(
                                spec, k, i, "leq_l")
                            if i >= L - k + 1:
                                assert _coinv_gf(after) == lemma_sums(
                                    spec, k, i, "leq_r1")
                            else:
                                assert not after
                        else:
                            assert not before
                            assert _coinv_gf(after) == lemma_sums(
                                spec, k, i, "leq_r2")


def _coinv_gf(words):
    acc = {}
    for w in words:
        acc[((), coinv(w), 0)] = acc.get(((), coinv(w), 0), 0) + 1
    return MPoly(0, acc)


def test_lemma_sums_guards():
    with pytest.raises(ValueError):
        lemma_sums(WordSpec(4, 5, (1, 1), 2), 1, 1, "gt_l")
    with pytest.raises(ValueError):
        lemma_sums(SPEC33, 0, 1, "gt_r2")  # position below the stated range
    with pytest.raises(ValueError):
        lemma_sums(SPEC33, 2, 1, "gt_l")  # no 'gt' words at k = L
    with pytest.raises(ValueError):
        lemma_sums(SPEC33, 0, 1, "leq_l")  # no 'leq' words at k = 0


def test_pairing_unique_case():
    phi = build_phi(SPEC33)
    assert phi == {
        (1, 1, 2): (1, 3, 2), (1, 2, 1): (3, 1, 2), (2, 1, 1): (3, 2, 1),
        (1, 2, 3): (2, 3, 3), (2, 1, 3): (3, 2, 3), (2, 3, 1): (3, 3, 2)}
    inv = build_phi_inverse(SPEC33)
    assert all(inv[v] == k for k, v in phi.items())


def test_pairing_signed_letter_table():
    """With the letters 1, 2, 1~ ranked 1, 2, 3, the pairing of the
    three-letter universe sends 211->1~21, 121->1~12, 2(1~)1->1~1~2,
    112->1(1~)2, 21(1~)->1~2(1~), 12(1~)->2(1~)(1~), preserving quinv'."""
    phi = build_phi(SPEC33)
    table = {(2, 1, 1): ((3, 2, 1), 0), (1, 2, 1): ((3, 1, 2), 1),
             (2, 3, 1): ((3, 3, 2), 1), (1, 1, 2): ((1, 3, 2), 2),
             (2, 1, 3): ((3, 2, 3), 2), (1, 2, 3): ((2, 3, 3), 3)}
    for w, (img, qp) in table.items():
        assert phi[w] == img
        assert quinv_prime(SPEC33, w) == qp
        assert quinv_prime(SPEC33, img) == qp


def test_pairing_audit_full():
    for spec in [WordSpec(3, 5, (1,), 2), WordSpec(4, 5, (1, 1), 3),
                 WordSpec(2, 5, (), 2)]:
        phi = build_phi(spec)
        total_gt = sum(len(split(spec, k)[1]) for k in range(spec.L + 1))
        assert len(phi) == total_gt
        for w, img in phi.items():
            assert w.count(spec.n) + 1 == img.count(spec.n)
            assert side_of(spec, w) == "gt"
            assert side_of(spec, img) == "leq"
            assert quinv_prime(spec, w) == quinv_prime(spec, img)
            assert middle_subword(spec, w) == middle_subword(spec, img)


def test_forced_pairing_with_empty_middle():
    spec = WordSpec(n=2, N=2, alpha=(), ell=2)
    phi = build_phi(spec)
    assert phi == {(1, 1): (2, 1), (1, 2): (2, 2)}


def test_multiset_words_order_and_count():
    words = list(multiset_words([(1, 2), (2, 1)]))
    assert words == [(1, 1, 2), (1, 2, 1), (2, 1, 1)]
