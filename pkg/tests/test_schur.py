import random
from fractions import Fraction

import pytest

from detcalc.bundles import BundleSpec, VirtualPair
from detcalc.chow import ChowClass, product_of_projective_spaces, projective_space
from detcalc.partitions import partitions_of, syt_count
from detcalc.schur import pieri_expand, s_from_c, schur


def random_sequence(rng, space):
    seq = [space.one()]
    for degree in range(1, space.dim + 1):
        terms = {
            exp: Fraction(rng.randint(-4, 4))
            for exp in space.monomials_of_degree(degree)
        }
        seq.append(ChowClass(space, terms))
    return seq


def split_pair(space, e_degrees, f_degrees):
    return VirtualPair(
        BundleSpec.sum_of_line_bundles(space, [[d] for d in e_degrees]),
        BundleSpec.sum_of_line_bundles(space, [[d] for d in f_degrees]),
    )


def test_s_from_c_fixes_trivial_sequence():
    p4 = projective_space(4)
    trivial = [p4.one()] + [p4.zero()] * 4
    assert s_from_c(trivial) == trivial


def test_s_from_c_degree_one_entry_is_unchanged():
    rng = random.Random(1)
    space = projective_space(5)
    for _ in range(5):
        seq = random_sequence(rng, space)
        assert s_from_c(seq)[1] == seq[1]


def test_s_from_c_is_involution():
    rng = random.Random(2)
    for space in (projective_space(6), product_of_projective_spaces([2, 2])):
        for _ in range(8):
            seq = random_sequence(rng, space)
            assert s_from_c(s_from_c(seq)) == seq


def test_s_from_c_of_difference_gives_dual_segre_classes():
    # with a trivial first bundle the transform produces 1 / c(F dual)
    p4 = projective_space(4)
    h = p4.generator(0)
    pair = split_pair(p4, [0, 0], [2, 2])
    transformed = s_from_c(pair.chern_diff)
    for k in range(5):
        assert transformed[k] == (k + 1) * 2**k * h**k
    assert transformed == pair.schur_seq


def test_s_from_c_rejects_bad_head():
    p4 = projective_space(4)
    with pytest.raises(ValueError):
        s_from_c([p4.zero()])


def test_schur_single_row_is_sequence_entry():
    rng = random.Random(3)
    space = projective_space(6)
    seq = random_sequence(rng, space)
    for m in range(7):
        assert schur((m,) if m else (), seq) == seq[m]


def test_schur_square_is_two_by_two_determinant():
    rng = random.Random(4)
    space = projective_space(8)
    for _ in range(5):
        seq = random_sequence(rng, space)
        assert schur((2, 2), seq) == seq[2] * seq[2] - seq[1] * seq[3]


def test_schur_padding_with_zeros_is_harmless():
    rng = random.Random(5)
    space = projective_space(6)
    seq = random_sequence(rng, space)
    assert schur((3, 2, 0, 0), seq) == schur((3, 2), seq)
    assert schur((), seq) == space.one()


def test_schur_known_hook_expansion():
    # det [[s1, s2], [1, s1]] for the column pair
    rng = random.Random(6)
    space = projective_space(6)
    seq = random_sequence(rng, space)
    assert schur((1, 1), seq) == seq[1] * seq[1] - seq[2]
    assert schur((2, 1), seq) == seq[2] * seq[1] - seq[3]


def test_pieri_expand_known_values():
    assert pieri_expand(()) == [(1,)]
    assert pieri_expand((1,)) == [(2,), (1, 1)]
    assert pieri_expand((2, 2)) == [(3, 2), (2, 2, 1)]


def test_pieri_identity_on_split_bundle_over_p8():
    space = projective_space(8)
    pair = split_pair(space, [0, 0, 0, 0], [1, 2, 3, 5])
    seq = pair.schur_seq
    s1 = seq[1]
    for weight in range(7):
        for lam in partitions_of(weight):
            expected = space.zero()
            for mu in pieri_expand(lam):
                expected = expected + schur(mu, seq)
            assert s1 * schur(lam, seq) == expected


def test_pieri_identity_on_a_product_space():
    space = product_of_projective_spaces([3, 3])
    pair = VirtualPair(
        BundleSpec.sum_of_line_bundles(space, [[0, 0], [0, 0]]),
        BundleSpec.sum_of_line_bundles(space, [[1, 2], [2, 1]]),
    )
    seq = pair.schur_seq
    s1 = seq[1]
    for weight in range(5):
        for lam in partitions_of(weight):
            expected = space.zero()
            for mu in pieri_expand(lam):
                expected = expected + schur(mu, seq)
            assert s1 * schur(lam, seq) == expected


def test_power_identity_up_to_weight_six():
    space = projective_space(8)
    pair = split_pair(space, [0, 0, 0, 0], [1, 2, 3, 5])
    seq = pair.schur_seq
    s1 = seq[1]
    for power in range(7):
        expansion = space.zero()
        for lam in partitions_of(power):
            expansion = expansion + syt_count(lam) * schur(lam, seq)
        assert s1**power == expansion


def test_square_schur_class_swap_symmetry():
    # the 2x2 determinant takes the same value on the two cached sequences
    rng = random.Random(8)
    p5 = projective_space(5)
    for _ in range(10):
        pair = split_pair(
            p5,
            [rng.randint(-2, 2) for _ in range(3)],
            [rng.randint(-2, 2) for _ in range(3)],
        )
        assert schur((2, 2), pair.schur_seq) == schur((2, 2), pair.chern_diff)
