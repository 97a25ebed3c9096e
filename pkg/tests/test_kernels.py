"""The compiled and pure-Python enumeration kernels must agree exactly."""

import pytest
from hypothesis import given

from imbalance import _kernels_py, kernels, poset
from imbalance.kernels import CapExceeded

from conftest import labelled_posets

compiled = pytest.mark.skipif(kernels.BACKEND != "compiled", reason="compiled kernel not built")


def test_empty_poset():
    assert _kernels_py.extension_stats(0, [], [], 10) == (1, [1], [1])
    assert kernels.extension_stats(0, [], [], 10)[0] == 1


def test_antichain_histograms():
    count, inv_h, maj_h = kernels.extension_stats(4, [0] * 4, [1, 2, 3, 4], 10**6)
    assert count == 24
    assert inv_h == [1, 3, 5, 6, 5, 3, 1]
    assert maj_h == [1, 3, 5, 6, 5, 3, 1]


@compiled
@given(labelled_posets(max_n=8))
def test_backends_agree(Pw):
    from imbalance import _kernels

    P, omega = Pw
    args = (P.n, list(P.below), list(omega), 10**6)
    assert _kernels.extension_stats(*args) == _kernels_py.extension_stats(*args)


@pytest.mark.parametrize("impl", ["python", pytest.param("compiled", marks=compiled)])
def test_cap_is_enforced(impl):
    if impl == "python":
        fn = _kernels_py.extension_stats
    else:
        from imbalance import _kernels
        fn = _kernels.extension_stats
    with pytest.raises(CapExceeded):
        fn(5, [0] * 5, [1, 2, 3, 4, 5], 100)
    assert fn(5, [0] * 5, [1, 2, 3, 4, 5], 120)[0] == 120


def test_environment_cap(monkeypatch):
    monkeypatch.setenv("IMBALANCE_CAP", "5")
    with pytest.raises(CapExceeded):
        poset.inv_poly(poset.antichain(4), (1, 2, 3, 4))
    monkeypatch.setenv("IMBALANCE_CAP", "24")
    assert poset.inv_poly(poset.antichain(4), (1, 2, 3, 4))(1) == 24


def test_large_posets_fall_back():
    # a 70-chain is beyond the compiled word size
    P = poset.chain(70)
    count, inv_h, _ = kernels.extension_stats(P.n, list(P.below), list(range(1, 71)), 10)
    assert count == 1 and inv_h[0] == 1
