from fractions import Fraction

import pytest
from hypothesis import given

from conftest import ade_trees, chain, random_trees, star
from ratsing.dualgraph import parse_tree
from ratsing.families import type_d
from ratsing.lattice import intersection_matrix, is_negative_definite, pair
from ratsing.oracle import (
    OracleConfig,
    TreeTooLargeError,
    brute_force_zmin,
    continued_fraction_value,
    definiteness_witness,
    sample_definiteness,
    ztop_members,
)


def test_zmin_single():
    assert brute_force_zmin(parse_tree("vertex E1 -2")).coeffs == (1,)


def test_zmin_too_large():
    with pytest.raises(TreeTooLargeError):
        brute_force_zmin(type_d(3))


def test_zmin_a3():
    assert brute_force_zmin(chain([-2, -2, -2])).coeffs == (1, 1, 1)


def test_zmin_none_in_box():
    # the affine D4 form has no member with all coefficients at most 1
    assert brute_force_zmin(star(-2, [-2] * 4), OracleConfig(coeff_bound=1)) is None


def test_ztop_members_explicit():
    # A2: a1, a2 in [1,3] with -2a1 + a2 <= 0 and a1 - 2a2 <= 0
    expected = sorted(
        (a, b) for a in range(1, 4) for b in range(1, 4) if -2 * a + b <= 0 and a - 2 * b <= 0
    )
    assert sorted(ztop_members(chain([-2, -2]), 3)) == expected


def test_config_validation():
    with pytest.raises(ValueError):
        OracleConfig(coeff_bound=0)


def test_sample_examples():
    assert sample_definiteness(intersection_matrix(parse_tree("vertex E1 -2")))
    d4 = star(-2, [-2] * 4)
    w = definiteness_witness(intersection_matrix(d4))
    assert w is not None
    assert pair(intersection_matrix(d4), w, w) >= 0
    assert not sample_definiteness(d4)


@pytest.mark.parametrize("t", ade_trees(), ids=lambda t: f"n{len(t)}")
def test_sample_ade(t):
    assert sample_definiteness(intersection_matrix(t))


def test_sampling_large_tree_is_seeded():
    t = type_d(3)
    assert definiteness_witness(t) == definiteness_witness(t)
    assert sample_definiteness(t)


@given(random_trees(max_size=7, weights=(-3, -1)))
def test_one_sided_soundness(t):
    form = intersection_matrix(t)
    if not sample_definiteness(form):
        assert not is_negative_definite(form)


def test_continued_fraction_value():
    assert continued_fraction_value((-3, -2)) == Fraction(5, 2)
    assert continued_fraction_value((-2,)) == 2
    assert continued_fraction_value((-2, -2, -2)) == Fraction(4, 3)
