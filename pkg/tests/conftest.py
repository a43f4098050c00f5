import functools

import pytest

from partialhopf import catalog
from partialhopf.envelope import build_envelope
from partialhopf.smash import build_underline_smash


@functools.lru_cache(maxsize=None)
def entry(name):
    return catalog.get_entry(name).build()


@functools.lru_cache(maxsize=None)
def partial(name):
    e = catalog.get_entry(name)
    obj = e.build()
    return obj.as_partial() if e.kind == "global" else obj


@functools.lru_cache(maxsize=None)
def underline(name):
    return build_underline_smash(partial(name))


@functools.lru_cache(maxsize=None)
def envelope(name):
    return build_envelope(partial(name))


PARTIAL_NAMES = [c.name for c in catalog.CATALOG if c.kind in ("partial", "global")]
VALID_NAMES = [n for n in PARTIAL_NAMES if n != "kx-in-h4"]
GLOBAL_NAMES = [c.name for c in catalog.CATALOG if c.kind == "global"]
HOPF_NAMES = [c.name for c in catalog.CATALOG if c.kind == "hopf"]


@pytest.fixture(params=PARTIAL_NAMES)
def any_partial(request):
    return request.param, partial(request.param)
