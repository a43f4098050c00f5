import pytest

from partialhopf.morita import MoritaError, build_morita, check_morita

from conftest import envelope, underline

IDENTITIES = ["M right module", "N left module", "M left module", "N right module",
              "sigma balanced", "tau balanced", "sigma left linear", "sigma right linear",
              "tau left linear", "tau right linear",
              "tau(m, n) |> m' = m sigma(n, m')", "sigma(n, m) n' = n <| tau(m, n')",
              "Phi multiplicative", "Phi injective"]

BUILDABLE = ["central-idempotent-kz2", "skew-pair-z2", "induced-kz2", "sign-action-kz2", "trivial-h4-on-k"]


@pytest.fixture(scope="module", params=BUILDABLE)
def morita(request):
    return request.param, check_morita(build_morita(envelope(request.param), underline(request.param)))


@pytest.mark.parametrize("check", IDENTITIES)
def test_identity(morita, check):
    name, rep = morita
    assert rep.passed(check), rep.summary()


def test_tau_containment(morita):
    name, rep = morita
    expected = name not in ("central-idempotent-kz2", "induced-kz2")
    assert rep.passed("tau lands in Phi(partial smash)") == expected


def test_kx_has_no_context():
    with pytest.raises(MoritaError):
        build_morita(envelope("kx-in-h4"))
