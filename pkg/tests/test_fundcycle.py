import json
import random

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from conftest import ade_trees, chain, random_trees, small_chains, star
from ratsing.dualgraph import Cycle, LabelledTree, parse_tree
from ratsing.families import ade_tree, type_d
from ratsing.fundcycle import (
    LauferDivergenceError,
    artin_check,
    artin_correction,
    in_ztop,
    laufer,
)
from ratsing.lattice import NotNegativeDefiniteError, intersection_matrix, is_negative_definite, pair
from ratsing.oracle import brute_force_zmin


def type_d_cycle(n):
    return (1, 1) + (2,) * n + (1,) * 10


def test_in_ztop_zero():
    t = chain([-2, -2])
    assert not in_ztop(t, Cycle.zero(t))


@pytest.mark.parametrize("n", [3, 5, 10])
def test_in_ztop_type_d(n):
    assert in_ztop(type_d(n), type_d_cycle(n))


def test_in_ztop_affine_d4_reduced():
    t = star(-2, [-2] * 4)
    red = Cycle.reduced(t)
    assert pair(intersection_matrix(t), red, Cycle.curve(t, "C")) == 2
    assert not in_ztop(t, red)


def test_in_ztop_negative_coeff():
    assert not in_ztop(chain([-2, -2]), (2, -1))


def test_laufer_single():
    assert laufer(parse_tree("vertex E1 -2")).coeffs == (1,)


def test_laufer_e8_highest_root():
    t = ade_tree("E", 8)
    zf = laufer(t)
    assert zf.coeffs == (2, 4, 6, 5, 4, 3, 2, 3)
    assert zf == brute_force_zmin(t)


def test_laufer_rejects_indefinite():
    with pytest.raises(NotNegativeDefiniteError):
        laufer(star(-2, [-2] * 4))


def test_laufer_bad_choice_rule():
    with pytest.raises(ValueError):
        laufer(ade_tree("D", 4), choose=lambda bad: -1)


def test_divergence_error_is_runtime():
    assert issubclass(LauferDivergenceError, RuntimeError)


def _random_rule(seed):
    rng = random.Random(seed)
    return lambda bad: rng.choice(list(bad))


@pytest.mark.parametrize("t", ade_trees() + list(small_chains()), ids=lambda t: ",".join(map(str, t.weights)))
def test_order_independence(t):
    ref = laufer(t)
    assert laufer(t, choose=lambda bad: bad[-1]) == ref
    for seed in range(20):
        assert laufer(t, choose=_random_rule(seed)) == ref


@given(random_trees(max_size=8, weights=(-4, -2)), st.integers(0, 10**6))
def test_postconditions_and_order(t, seed):
    assume(is_negative_definite(intersection_matrix(t)))
    zf = laufer(t)
    assert zf.coeffs >= (1,) * len(t) and min(zf.coeffs) >= 1
    assert in_ztop(t, zf)
    assert laufer(t, choose=_random_rule(seed)) == zf


@given(random_trees(max_size=7, weights=(-4, -2)))
def test_oracle_equivalence_random(t):
    assume(is_negative_definite(intersection_matrix(t)))
    assert brute_force_zmin(t) == laufer(t)


@pytest.mark.parametrize("n", range(3, 11))
def test_artin_type_d(n):
    rep = artin_check(type_d(n))
    assert rep.fundamental_cycle.coeffs == type_d_cycle(n)
    assert (rep.self_pairing, rep.correction, rep.artin_sum) == (-15, 13, -2)
    assert rep.is_rational and rep.weights_ok and rep.negative_definite


def test_artin_star_not_rational():
    t = star(-2, [-3] * 4)
    rep = artin_check(t)
    assert rep.fundamental_cycle.coeffs == (2, 1, 1, 1, 1)
    assert rep.fundamental_cycle == brute_force_zmin(t)
    assert (rep.self_pairing, rep.correction, rep.artin_sum) == (-4, 4, 0)
    assert rep.negative_definite and not rep.is_rational


def test_artin_indefinite():
    rep = artin_check(star(-2, [-2] * 4))
    assert not rep.negative_definite and not rep.is_rational
    assert rep.fundamental_cycle is None and rep.artin_sum is None


def test_artin_weight_condition():
    rep = artin_check(chain([-1, -3]))
    assert not rep.weights_ok and not rep.is_rational


@pytest.mark.parametrize("t", ade_trees(), ids=lambda t: f"n{len(t)}")
def test_artin_ade(t):
    rep = artin_check(t)
    assert rep.fundamental_cycle == brute_force_zmin(t)
    assert (rep.correction, rep.self_pairing, rep.artin_sum) == (0, -2, -2)
    assert rep.is_rational


def test_artin_t9(t9_tree):
    rep = artin_check(t9_tree)
    assert rep.fundamental_cycle == Cycle.reduced(t9_tree)
    assert (rep.self_pairing, rep.correction, rep.artin_sum) == (-4, 2, -2)
    assert rep.is_rational


def test_report_json_keys(t9_tree):
    data = artin_check(t9_tree).to_json()
    assert list(data) == [
        "weights_ok", "negative_definite", "fundamental_cycle",
        "self_pairing", "correction", "artin_sum", "is_rational",
    ]
    assert data["fundamental_cycle"] == {f"E{i}": 1 for i in range(1, 6)}
    json.dumps(data)


def test_artin_correction_direct():
    t = chain([-3, -2])
    assert artin_correction(t, Cycle(t.vertices, (1, 1))) == 1


@given(random_trees(max_size=8, weights=(-4, -2)), st.randoms(use_true_random=False))
def test_artin_sum_relabel_invariant(t, rnd):
    assume(is_negative_definite(intersection_matrix(t)))
    order = list(t.vertices)
    rnd.shuffle(order)
    rename = {v: f"X{k}" for k, v in enumerate(rnd.sample(order, len(order)))}
    permuted = LabelledTree.build(
        [rename[v] for v in order],
        {rename[v]: t.weight(v) for v in order},
        [(rename[u], rename[v]) for u, v in reversed(t.edges)],
    )
    a, b = artin_check(t), artin_check(permuted)
    assert (a.artin_sum, a.is_rational) == (b.artin_sum, b.is_rational)
    assert {rename[v]: c for v, c in a.fundamental_cycle.as_dict().items()} == b.fundamental_cycle.as_dict()
