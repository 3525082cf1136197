import pytest

from schroder_stats.bijections import (
    CONSTRUCTIONS,
    alpha,
    dist_step,
    phi1,
    phi2,
    phi3,
    prop31_children,
    verify_partition,
)
from schroder_stats.oracle import DIST_1243_1324, TABLE_SPECS, class_members, statistic_value
from schroder_stats.perm_core import delete_position, position_of
from schroder_stats.recurrences import triangle_by_recurrence


def cells(n, spec):
    out = {}
    for sigma in class_members(n, spec.cls):
        k = statistic_value(sigma, spec.stat)
        out.setdefault(k, set()).add(sigma)
    return out


# -- individual maps --------------------------------------------------------


def test_prop31_children_examples():
    tau = (2, 5, 1, 4, 3)  # minimum at position 3
    assert prop31_children(tau, 3, "adjacent") == (3, 6, 1, 2, 5, 4)
    assert prop31_children(tau, 3, "end") == (3, 6, 1, 5, 4, 2)
    assert prop31_children((2, 1, 3), 3, "left_j") == (3, 2, 1, 4)


def test_prop31_children_preconditions():
    with pytest.raises(ValueError):
        prop31_children((2, 5, 1, 4, 3), 4, "adjacent")  # minimum not at 4
    with pytest.raises(ValueError):
        prop31_children((1, 2), 2, "left_j")  # minimum not left of target
    with pytest.raises(ValueError):
        prop31_children((2, 5, 1, 4, 3), 3, "middle")


def test_phi_examples():
    assert phi1((1, 3, 2)) == (1, 2, 3)
    assert phi2((1, 3, 2), 2) == (1, 4, 3, 2)
    assert phi3((1, 2)) == (2, 1, 3)
    assert phi3((1, 3, 2)) == (3, 1, 4, 2)


def test_phi_preconditions():
    with pytest.raises(ValueError):
        phi1((1, 2, 3))  # maximum already last
    with pytest.raises(ValueError):
        phi1((3, 1, 2))  # minimum after maximum
    with pytest.raises(ValueError):
        phi2((1, 3, 2), 3)  # maximum not at the insertion slot
    with pytest.raises(ValueError):
        phi3((2, 3, 1))  # minimum after maximum


def test_phi2_outputs_carry_marker():
    # The inserted maximum pushes the old one to the next slot.
    for n in range(4, 8):
        for k, members in cells(n - 1, TABLE_SPECS[4]).items():
            if k >= n - 1:
                continue
            for sigma in members:
                out = phi2(sigma, k)
                assert out[k] == n - 1


def test_phi3_example_lands_in_expected_cell():
    out = phi3((1, 3, 2))
    assert out == (3, 1, 4, 2)
    assert position_of(out, 4) == 3
    members = cells(4, TABLE_SPECS[4])[3]
    assert out in members


def test_alpha_example_and_inverse():
    assert alpha((2, 4, 1, 3), 4) == (3, 5, 1, 2, 4)
    with pytest.raises(ValueError):
        alpha((2, 4, 1, 3), 5)  # last entry does not precede the target
    with pytest.raises(ValueError):
        alpha((2, 1, 3), 3)  # target below 4


def test_alpha_is_inverted_by_deletion():
    for n in range(5, 9):
        prev = cells(n - 1, TABLE_SPECS[5])
        for ell in range(4, n + 1):
            for tau in prev.get(ell - 1, ()):
                image = alpha(tau, ell)
                assert image[-1] == ell
                assert 1 < image[-2] < ell
                assert delete_position(image, n - 1) == tau


def test_dist_step_examples():
    assert dist_step((3, 1, 4, 2), "A_theta") == (3, 1, 4, 5, 2)
    assert dist_step((4, 1, 3, 5, 2), "A_tau") == (1, 3, 4, 5, 2)
    with pytest.raises(ValueError):
        dist_step((1, 3, 2), "A_tau")  # next-to-max after the min
    with pytest.raises(ValueError):
        dist_step((2, 1, 3), "sideways")


# -- exhaustive partition checks ---------------------------------------------


@pytest.mark.parametrize("construction", CONSTRUCTIONS)
@pytest.mark.parametrize("n", range(3, 9))
def test_partitions_pass(construction, n):
    report = verify_partition(n, construction)
    assert report.passed, report.witnesses


def test_partition_guards():
    with pytest.raises(ValueError):
        verify_partition(2, "PROP31")
    with pytest.raises(ValueError):
        verify_partition(5, "PROP99")


def test_prop31_small_sizes():
    report = verify_partition(3, "PROP31")
    totals = {cell: sum(sizes.values()) for cell, sizes in report.image_sizes.items()}
    assert totals == {1: 2, 2: 1}


def test_prop31_branch_sizes_match_recurrence_terms():
    tri = triangle_by_recurrence("P31", 8)
    for n in range(4, 9):
        report = verify_partition(n, "PROP31")
        for ell, sizes in report.image_sizes.items():
            assert sizes["left_j"] == sum(tri.value(n - 1, j) for j in range(1, ell))
            assert sizes["adjacent"] == tri.value(n - 1, ell)
            assert sizes["end"] == tri.value(n - 1, ell)


def test_prop31_outputs_never_end_with_min_ascent():
    # adjacent/end children never finish with the values 1, 2 in the last
    # two slots.
    for n in range(4, 9):
        prev = cells(n - 1, TABLE_SPECS[3])
        for ell, members in prev.items():
            if ell >= n - 2:
                continue
            for tau in members:
                for branch in ("adjacent", "end"):
                    out = prop31_children(tau, ell, branch)
                    assert out[-2:] != (1, 2)


def test_prop31_dispatch_trichotomy():
    # In every target cell the position of the entry 2 is left of the
    # minimum, adjacent to it, or last; nothing else occurs.
    for n in range(3, 9):
        for ell, members in cells(n, TABLE_SPECS[3]).items():
            for sigma in members:
                p2 = position_of(sigma, 2)
                assert p2 < ell or p2 == ell + 1 or p2 == n


def test_prop41_branch_sizes_match_recurrence_terms():
    tri = triangle_by_recurrence("P41", 8)
    for n in (7, 8):
        report = verify_partition(n, "PROP41")
        for k in range(3, n + 1):
            sizes = report.image_sizes[k]
            assert sizes["phi1"] == tri.value(n, k - 1)
            assert sizes["phi3"] == tri.value(n - 1, k - 1)
            if k < n:
                assert sizes["phi2"] == tri.value(n - 1, k)
            total = sum(sizes.values())
            assert total == tri.value(n, k)


def test_prop41_marker_trichotomy():
    # phi2 images have the next-to-max right after the max; phi1 images
    # descend across the max; phi3 images ascend across it with a smaller
    # right neighbor. Together they partition each interior cell.
    for n in range(4, 9):
        cur = cells(n, TABLE_SPECS[4])
        for k in range(3, n):
            members = cur.get(k, set())
            set2 = {s for s in members if s[k] == n - 1}
            set1 = {s for s in members if s[k - 2] > s[k]}
            set3 = {s for s in members if s[k - 2] < s[k] and s[k] < n - 1}
            assert set1 | set2 | set3 == members
            assert not (set1 & set2) and not (set1 & set3) and not (set2 & set3)
        # at k = n the split is by whether the minimum sits next to the end
        members = cur.get(n, set())
        tail_min = {s for s in members if s[n - 2] == 1}
        rest = {s for s in members if s[n - 2] != 1}
        assert tail_min | rest == members


def test_prop51_ascent_cells_double_previous():
    tri = triangle_by_recurrence("P51", 8)
    for n in (6, 7, 8):
        report = verify_partition(n, "PROP51")
        for ell in range(4, n + 1):
            sizes = report.image_sizes[ell]
            assert sizes["U"] == sizes["V"] == tri.value(n - 1, ell - 1)
            assert sizes["U"] + sizes["V"] == 2 * tri.value(n - 1, ell - 1)


def test_prop53_theta_tau_split_matches_recurrence():
    tri = triangle_by_recurrence("P53_REC", 8)
    for n in (6, 7, 8):
        report = verify_partition(n, "PROP53")
        for k in range(2, n - 1):
            sizes = report.image_sizes[k]
            assert sizes["theta"] == tri.value(n - 1, k - 1)
            assert sizes["tau"] == tri.value(n, k + 1)
            assert sizes["theta"] + sizes["tau"] == tri.value(n, k)


def test_prop53_spot_identity():
    # a(4,2) = a(4,3) + a(3,1) = 1 + 2 = 3
    tri = triangle_by_recurrence("P53_REC", 4)
    assert tri.value(4, 2) == tri.value(4, 3) + tri.value(3, 1) == 3
