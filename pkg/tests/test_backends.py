"""The compiled kernels and the numpy fallback must agree exactly."""

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from apdecomp import _backend, _pycore
from apdecomp.arith import as_modulus

_core = pytest.importorskip("apdecomp._core")


@pytest.mark.parametrize("n", [2, 3, 8, 91, 104, 273, 1001, 4003])
def test_order_table_agrees(n):
    m = as_modulus(n)
    a = _pycore.order_table(m.n, m.lam, m.lam_primes)
    b = _core.order_table(m.n, m.lam, m.lam_primes)
    assert np.array_equal(np.asarray(a), np.asarray(b))


@settings(max_examples=60, deadline=None)
@given(st.integers(3, 700), st.sampled_from([3, 4]), st.booleans())
def test_ap_search_agrees(n, length, weak):
    m = as_modulus(n)
    ords = _pycore.order_table(m.n, m.lam, m.lam_primes)
    args = (m.n, m.phi, ords, length, weak, 1, (m.n + 1) // 2)
    assert _pycore.ap_search(*args) == _core.ap_search(*args)
    assert _pycore.ap_search(*args, True) == _core.ap_search(*args, True)


@settings(max_examples=200, deadline=None)
@given(st.integers(3, 400), st.data())
def test_direct_product_agrees(n, data):
    m = as_modulus(n)
    ords = _pycore.order_table(m.n, m.lam, m.lam_primes)
    units = [x for x in range(1, n) if ords[x] > 0]
    gens = data.draw(st.lists(st.sampled_from(units), min_size=1, max_size=4))
    od = [int(ords[g]) for g in gens]
    assert _pycore.direct_product(n, gens, od) == _core.direct_product(n, gens, od)


def _backend_name(env_value):
    env = dict(os.environ, APDECOMP_BACKEND=env_value)
    code = "from apdecomp import _backend; print(_backend.NAME)"
    return subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                          text=True, check=True).stdout.strip()


def test_env_override_selects_fallback():
    assert _backend_name("python") == _pycore.NAME
    assert _backend_name("") == _core.NAME
    assert _backend_name("compiled") == _core.NAME


def test_default_is_compiled():
    assert _backend.NAME == _core.NAME != _pycore.NAME
