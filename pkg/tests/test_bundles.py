import random

import pytest

from detcalc.bundles import BundleSpec, VirtualPair
from detcalc.chow import projective_space
from oracles import series, series_inv, series_mul


def split(space, degrees):
    return BundleSpec.sum_of_line_bundles(space, [[d] for d in degrees])


def test_total_chern_examples():
    p4 = projective_space(4)
    h = p4.generator(0)
    assert split(p4, [0, 0]).total_chern() == p4.one()
    assert split(p4, [-1, -1, -1, -2]).total_chern() == (1 - h) ** 3 * (1 - 2 * h)
    assert split(p4, [1, 3]).total_chern() == 1 + 4 * h + 3 * h**2


def test_formal_bundle_round_trip():
    p4 = projective_space(4)
    B = split(p4, [1, 2, 3])
    formal = BundleSpec.formal(p4, B.rank, B.total_chern())
    assert formal.total_chern() == B.total_chern()
    assert formal.dual().total_chern() == B.dual().total_chern()
    h = p4.generator(0)
    assert formal.twist(2 * h).total_chern() == B.twist(2 * h).total_chern()


def test_formal_bundle_validation():
    p4 = projective_space(4)
    with pytest.raises(ValueError):
        BundleSpec.formal(p4, 0, p4.one())
    with pytest.raises(ValueError):
        BundleSpec.formal(p4, 2, p4.generator(0))


def test_dual_examples():
    p4 = projective_space(4)
    h = p4.generator(0)
    assert split(p4, [3]).dual().total_chern() == 1 - 3 * h
    B = split(p4, [-1, -1, -1, -2])
    assert B.dual().total_chern() == (1 + h) ** 3 * (1 + 2 * h)
    assert B.dual().dual().total_chern() == B.total_chern()


def test_twist_examples():
    p4 = projective_space(4)
    h = p4.generator(0)
    B = split(p4, [1, -1])
    assert B.twist(p4.zero()).total_chern() == B.total_chern()
    line = split(p4, [2])
    assert line.twist(3 * h).c1() == 5 * h


def test_top_chern_of_twist_expansion():
    # c_r(B tensor L) must equal sum_i c_i(B) * ell^(r - i)
    rng = random.Random(12)
    p5 = projective_space(5)
    h = p5.generator(0)
    for _ in range(8):
        rank = rng.randint(1, 4)
        B = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        ell = rng.randint(-2, 2) * h
        expansion = p5.zero()
        for i in range(rank + 1):
            expansion = expansion + B.chern(i) * ell ** (rank - i)
        assert B.twist(ell).chern(rank) == expansion


def test_virtual_chern_trivial_and_degree_one():
    p4 = projective_space(4)
    B = split(p4, [1, 2])
    same = VirtualPair(B, B)
    assert same.virtual_chern(0) == 1
    for k in range(1, 5):
        assert same.virtual_chern(k).is_zero()
    pair = VirtualPair(split(p4, [0, -1]), split(p4, [1, 2]))
    assert pair.virtual_chern(1) == pair.F.c1() - pair.E.c1()


def test_dual_difference_sequence_against_series_oracle():
    # trivial E, F = O(2)^2: the sequence is 1/(1-2h)^2, coefficients (k+1)2^k
    p4 = projective_space(4)
    h = p4.generator(0)
    pair = VirtualPair(split(p4, [0, 0]), split(p4, [2, 2]))
    expected = series_inv(series_mul(series([1, -2], 4), series([1, -2], 4), 4), 4)
    for k in range(5):
        assert pair.schur_seq[k] == expected[k] * h**k
        assert expected[k] == (k + 1) * 2**k


def test_sign_rule_relating_the_two_sequences():
    # s_k = (-1)^k  x  degree-k part of c(E)/c(F)
    rng = random.Random(13)
    p5 = projective_space(5)
    for _ in range(8):
        rank = rng.randint(1, 4)
        E = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        F = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        pair = VirtualPair(E, F)
        reverse = VirtualPair(F, E).chern_diff
        for k in range(6):
            signed = reverse[k] if k % 2 == 0 else -reverse[k]
            assert pair.schur_seq[k] == signed


def test_forward_and_backward_virtual_classes_invert():
    rng = random.Random(14)
    p5 = projective_space(5)
    for _ in range(8):
        rank = rng.randint(1, 4)
        E = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        F = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        forward = VirtualPair(E, F).chern_diff
        backward = VirtualPair(F, E).chern_diff
        product = p5.zero()
        for k in range(6):
            for i in range(k + 1):
                product = product + forward[i] * backward[k - i]
        assert product == p5.one()


def test_twisted_virtual_chern_closed_form_against_direct():
    rng = random.Random(15)
    p5 = projective_space(5)
    h = p5.generator(0)
    for _ in range(10):
        rank = rng.randint(1, 4)
        E = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        F = split(p5, [rng.randint(-2, 2) for _ in range(rank)])
        pair = VirtualPair(E, F)
        ell = rng.randint(-2, 2) * h
        twisted = pair.twisted(ell)
        for k in range(1, 6):
            assert pair.twisted_virtual_chern(ell, k) == twisted.virtual_chern(k)


def test_twisted_virtual_chern_special_cases():
    p4 = projective_space(4)
    h = p4.generator(0)
    pair = VirtualPair(split(p4, [0, -1]), split(p4, [1, 2]))
    # degree one is twist-invariant; zero twist reproduces the plain classes
    assert pair.twisted_virtual_chern(2 * h, 1) == pair.virtual_chern(1)
    for k in range(1, 5):
        assert pair.twisted_virtual_chern(p4.zero(), k) == pair.virtual_chern(k)


def test_hypersurface_class():
    p4 = projective_space(4)
    h = p4.generator(0)
    pair = VirtualPair(split(p4, [-1, -1, -1, -2]), split(p4, [0, 0, 0, 0]))
    assert pair.hypersurface_class() == 5 * h


def test_pair_requires_matching_ranks_and_space():
    p4 = projective_space(4)
    p3 = projective_space(3)
    with pytest.raises(ValueError):
        VirtualPair(split(p4, [1]), split(p4, [1, 2]))
    with pytest.raises(ValueError):
        VirtualPair(split(p4, [1]), split(p3, [1]))
