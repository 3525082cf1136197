import doctest
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from schroder_stats import perm_core
from schroder_stats.oracle import SEPARABLE_PAIR, enumerate_avoiders
from schroder_stats.perm_core import (
    SYMMETRIES,
    apply_symmetry,
    avoids_all,
    check_perm,
    contains_pattern,
    delete_position,
    direct_sum,
    insert_value,
    inverse,
    is_skew_indecomposable,
    is_sum_indecomposable,
    parse_perm,
    position_of,
    reduction,
    reverse,
    reverse_complement,
    skew_sum,
    sum_components,
    value_at,
)


def all_perms(n):
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def perms_up_to(n):
    return [p for m in range(n + 1) for p in all_perms(m)]


def test_doctests():
    failures, _ = doctest.testmod(perm_core)
    assert failures == 0


def test_check_perm_rejects_non_permutations():
    with pytest.raises(ValueError):
        check_perm((1, 1, 2))
    with pytest.raises(ValueError):
        check_perm((0, 1))


def test_parse_perm_roundtrip():
    assert parse_perm("2413") == (2, 4, 1, 3)
    assert parse_perm("2 4 1 3") == (2, 4, 1, 3)


def test_positions_and_values_are_inverse():
    sigma = (2, 5, 1, 4, 3)
    for p in range(1, 6):
        assert position_of(sigma, value_at(sigma, p)) == p


def test_contains_self_and_monotone():
    assert contains_pattern((2, 4, 1, 3), (2, 4, 1, 3))
    assert not contains_pattern((1, 2, 3, 4), (2, 4, 1, 3))
    assert contains_pattern((1, 2), ())


def test_avoider_count_in_s4():
    avoiders = [p for p in all_perms(4) if avoids_all(p, SEPARABLE_PAIR)]
    assert len(avoiders) == 22


def test_generic_containment_matches_specialized():
    # The length-4 fast path agrees with the generic subsequence scan.
    pattern = (2, 4, 1, 3)
    for sigma in all_perms(5):
        generic = any(
            reduction(sub) == pattern for sub in itertools.combinations(sigma, 4)
        )
        assert contains_pattern(sigma, pattern) == generic


def test_reverse_example():
    assert reverse((1, 3, 2)) == (2, 3, 1)


def test_reverse_complement_maps_pattern_pair():
    # Elementwise: 1324 is an rc fixed point and 2134 maps to 1243, so the
    # pair {1324, 2134} maps onto {1243, 1324} as a set.
    assert reverse_complement((1, 3, 2, 4)) == (1, 3, 2, 4)
    assert reverse_complement((2, 1, 3, 4)) == (1, 2, 4, 3)
    image = {reverse_complement(p) for p in ((1, 3, 2, 4), (2, 1, 3, 4))}
    assert image == {(1, 2, 4, 3), (1, 3, 2, 4)}


@given(st.permutations(list(range(1, 7))))
def test_symmetries_are_involutions(values):
    sigma = tuple(values)
    for which in ("reverse", "complement", "inverse", "reverse_complement"):
        assert apply_symmetry(apply_symmetry(sigma, which), which) == sigma


def test_apply_symmetry_rejects_unknown():
    with pytest.raises(ValueError):
        apply_symmetry((1,), "rotate")


def test_symmetry_equivariance_of_containment():
    # contains(sigma, pi) is invariant under applying any one symmetry to
    # both arguments; exhaustive over sigma of size <= 6, pi of size <= 4.
    patterns = perms_up_to(4)[1:]  # skip the empty pattern
    for sigma in perms_up_to(6):
        hits = {pi: contains_pattern(sigma, pi) for pi in patterns if len(pi) <= len(sigma)}
        for which in SYMMETRIES:
            image = apply_symmetry(sigma, which)
            for pi, hit in hits.items():
                assert contains_pattern(image, apply_symmetry(pi, which)) == hit


def test_sum_examples():
    assert direct_sum((1,), (1,)) == (1, 2)
    assert skew_sum((1, 2), (1,)) == (2, 3, 1)
    assert direct_sum((), (2, 1)) == (2, 1)
    assert skew_sum((2, 1), ()) == (2, 1)


def test_sum_components_examples():
    assert sum_components((1, 2, 3)) == [(1,), (1,), (1,)]
    assert sum_components((2, 4, 1, 3)) == [(2, 4, 1, 3)]
    assert sum_components((2, 1, 4, 3, 5)) == [(2, 1), (2, 1), (1,)]


def test_sum_components_fold_and_indecomposability():
    import functools

    for n in range(1, 8):
        for sigma in all_perms(n):
            parts = sum_components(sigma)
            assert all(is_sum_indecomposable(p) for p in parts)
            assert functools.reduce(direct_sum, parts) == sigma


def test_decomposability_dichotomy_for_separables():
    # Every separable permutation of size >= 2 is a direct sum or a skew sum.
    for n in range(2, 8):
        for sigma in enumerate_avoiders(n, SEPARABLE_PAIR):
            assert not (is_sum_indecomposable(sigma) and is_skew_indecomposable(sigma))


def test_skew_indecomposable_examples():
    assert is_skew_indecomposable((1,))
    assert not is_skew_indecomposable((2, 3, 1))
    with pytest.raises(ValueError):
        is_skew_indecomposable(())


def test_skew_indecomposable_iff_min_before_max_for_2413_avoiders():
    for n in range(2, 8):
        for sigma in enumerate_avoiders(n, ((2, 4, 1, 3),)):
            expected = position_of(sigma, 1) < position_of(sigma, n)
            assert is_skew_indecomposable(sigma) == expected


def test_skew_block_structure_of_cutoff_classes():
    # A separable word with entry a left of the max and all smaller entries
    # right of the max splits as pi (-) tau with tau holding values 1..a-1.
    for n in range(2, 8):
        for sigma in enumerate_avoiders(n, SEPARABLE_PAIR):
            pn = position_of(sigma, n)
            for a in range(2, n):
                if position_of(sigma, a) >= pn:
                    continue
                if any(position_of(sigma, b) < pn for b in range(1, a)):
                    continue
                tail = sigma[n - (a - 1):]
                assert set(tail) == set(range(1, a))
                assert skew_sum(reduction(sigma[: n - (a - 1)]), tail) == sigma


def test_insert_value_examples():
    assert insert_value((2, 5, 1, 4, 3), 2, 4) == (3, 6, 1, 2, 5, 4)
    assert insert_value((2, 5, 1, 4, 3), 2, 6) == (3, 6, 1, 5, 4, 2)
    assert insert_value((1, 2), 1, 2) == (2, 1, 3)
    with pytest.raises(ValueError):
        insert_value((1, 2), 4, 1)
    with pytest.raises(ValueError):
        insert_value((1, 2), 1, 4)


@given(
    st.permutations(list(range(1, 6))),
    st.integers(1, 6),
    st.integers(1, 6),
)
@settings(max_examples=200)
def test_insert_delete_roundtrip(values, k, j):
    pi = tuple(values)
    assert delete_position(insert_value(pi, k, j), j) == pi


def test_reduction():
    assert reduction((4, 9, 2)) == (2, 3, 1)
    assert reduction(()) == ()
    with pytest.raises(ValueError):
        reduction((1, 1))


@given(st.permutations(list(range(1, 7))))
def test_inverse_is_position_map(values):
    sigma = tuple(values)
    inv = inverse(sigma)
    for v in range(1, 7):
        assert inv[v - 1] == position_of(sigma, v)
