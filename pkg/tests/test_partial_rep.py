import numpy as np
import pytest

from partialhopf.catalog import group_algebra, sweedler_h4
from partialhopf.hopf import end_algebra
from partialhopf.morita import build_morita
from partialhopf.partial_rep import (PartialRepData, check_algebra_map, check_partial_rep, rep_into_end_A,
                                     rep_into_underline, rep_through_morita)

from conftest import GLOBAL_NAMES, PARTIAL_NAMES, envelope, partial, underline


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_end_A(name):
    r = rep_into_end_A(partial(name))
    assert r.report.ok, r.report.summary()
    assert np.array_equal(r.pi.dot(r.H.unit), r.target.unit)


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_underline(name):
    r = rep_into_underline(partial(name), underline(name))
    assert r.report.ok, r.report.summary()


@pytest.mark.parametrize("name", GLOBAL_NAMES)
def test_global_reps_are_honest(name):
    d = partial(name)
    assert check_algebra_map(rep_into_end_A(d)).ok
    assert check_algebra_map(rep_into_underline(d)).ok


@pytest.mark.parametrize("h", [group_algebra(3), sweedler_h4()])
def test_trivial_rep(h):
    f = h.field
    b = end_algebra(2, f)
    pi = np.outer(b.unit, h.counit)
    assert check_partial_rep(PartialRepData(h, b, pi)).ok


def test_regular_rep_is_partial():
    h = sweedler_h4()
    pi = np.transpose(h.mult, (2, 1, 0)).reshape(16, 4)        # left multiplication matrices
    r = PartialRepData(h, end_algebra(4, h.field), pi)
    assert check_algebra_map(r).ok and check_partial_rep(r).ok


def test_non_unital_map_fails_first_condition():
    h = group_algebra(2)
    b = end_algebra(1, h.field)
    r = PartialRepData(h, b, h.field.zeros((1, 2)))
    rep = check_partial_rep(r)
    assert rep["pi(1_H) = 1_B"].status == "fail"


@pytest.mark.parametrize("name", ["skew-pair-z2", "sign-action-kz2", "central-idempotent-kz2"])
def test_through_morita_keeps_condition_two(name):
    m = build_morita(envelope(name), underline(name))
    r = rep_through_morita(rep_into_underline(partial(name), underline(name)), m)
    assert r.report.passed("pi(S^-1(h2)) pi(h1) pi(k) = pi(S^-1(h2)) pi(h1 k)")
