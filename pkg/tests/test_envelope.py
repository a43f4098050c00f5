import numpy as np
import pytest

from partialhopf.envelope import check_envelope, check_phi_identities, check_right_ideal, ideal_criterion

from conftest import GLOBAL_NAMES, PARTIAL_NAMES, VALID_NAMES, envelope, partial


@pytest.mark.parametrize("name", ["central-idempotent-kz2", "induced-kz2"])
def test_envelope_conditions(name):
    rep = check_envelope(envelope(name))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", GLOBAL_NAMES)
def test_global_envelope_degenerates(name):
    env = envelope(name)
    assert env.dim == partial(name).A.dim
    assert np.linalg.matrix_rank(np.array(env.theta, dtype=float)) == env.dim


@pytest.mark.parametrize("name", VALID_NAMES)
def test_phi_identities(name):
    rep = check_phi_identities(envelope(name))
    assert rep.ok, rep.summary()


@pytest.mark.parametrize("name", VALID_NAMES)
def test_phi_one_is_unity_on_valid(name):
    assert check_right_ideal(envelope(name)).ok


def test_kx_envelope_not_algebra():
    env = envelope("kx-in-h4")
    assert env.B_table is None
    assert not check_right_ideal(env).ok


@pytest.mark.parametrize("name", PARTIAL_NAMES)
def test_ideal_criterion_components_consistent(name):
    rep = ideal_criterion(envelope(name))
    # phi(1_A) is idempotent in every instance
    assert rep.passed("phi(1_A) idempotent")


@pytest.mark.parametrize("name", ["central-idempotent-kz2", "induced-kz2", "trivial-h4-on-k"])
def test_ideal_criterion_agrees(name):
    assert ideal_criterion(envelope(name)).passed("criterion agrees with ideal test")


@pytest.mark.parametrize("name", ["sign-action-kz2", "skew-pair-z2"])
def test_displayed_identity_misses_conjugation(name):
    rep = ideal_criterion(envelope(name))
    assert rep.passed("phi(A) is an ideal of B")
    assert not rep.passed("displayed identity")
    assert any("conjugated identity': pass" in n for n in rep.notes)
