import numpy as np
import pytest
from hypothesis import assume, given, settings, strategies as st

from partialhopf.actions import (ActionError, PartialBimoduleData, check_action_morphism, check_global_bimodule,
                                 check_partial_bimodule, check_symmetry_assumption, induced_partial_from_global,
                                 trivial_global)
from partialhopf.catalog import group_algebra, sign_action_kz2

from conftest import GLOBAL_NAMES, VALID_NAMES, entry, partial


@pytest.mark.parametrize("name", GLOBAL_NAMES)
def test_global_entries(name):
    assert check_global_bimodule(entry(name)).ok


@pytest.mark.parametrize("name", VALID_NAMES)
def test_identity_is_equivalence(name):
    d = partial(name)
    assert check_action_morphism(d.field.eye(d.A.dim), d, d, require_equivalence=True).ok


def test_zeroed_left_action_names_unit_axiom():
    d = partial("central-idempotent-kz2")
    bad = PartialBimoduleData(d.H, d.A, d.field.zeros(d.left.shape), d.right, "zeroed")
    rep = check_partial_bimodule(bad)
    assert rep["1_H acts as identity"].status == "fail"
    assert rep["1_H acts as identity"].counterexample is not None


def test_kx_fails_right_partial_associativity():
    rep = check_partial_bimodule(partial("kx-in-h4"))
    assert rep["right partial associativity"].status == "fail"
    assert not check_symmetry_assumption(partial("kx-in-h4")).ok


def test_induced_from_whole_algebra_is_global():
    g = sign_action_kz2()
    f = g.field
    d = induced_partial_from_global(g, f.eye(g.B.dim), g.B.unit)
    assert np.array_equal(d.left, g.left)


def test_non_ideal_rejected():
    g = sign_action_kz2()
    f = g.field
    with pytest.raises(ActionError):
        induced_partial_from_global(g, f.array([[1, 1]]), f.array([1, 1]))


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(1, 3))
def test_perturbed_action_fails(h, a, b, delta):
    d = partial("sign-action-kz2")
    left = d.left.copy()
    left[h, a, b] = left[h, a, b] + delta
    # g -> g = +1 is the trivial action, which is valid again
    assume(not (h == 1 and np.array_equal(left[1], d.field.eye(2))))
    assert not check_partial_bimodule(PartialBimoduleData(d.H, d.A, left, d.right)).ok


@pytest.mark.parametrize("n", [1, 2, 3])
def test_trivial_action_is_global(n):
    h = group_algebra(n)
    assert check_global_bimodule(trivial_global(h, h.algebra)).ok
