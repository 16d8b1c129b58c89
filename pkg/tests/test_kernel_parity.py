"""The compiled and pure straightening kernels must agree bit for bit."""

import pytest
from hypothesis import given, settings, strategies as st

from fockdec import _straighten_py, kernel
from fockdec.fock import wedge_from_partition
from fockdec.partitions import partitions_of

try:
    from fockdec import _straighten_cy
except ImportError:
    _straighten_cy = None

needs_compiled = pytest.mark.skipif(
    _straighten_cy is None, reason="compiled kernel not built"
)


def heads_strategy():
    return st.lists(
        st.integers(min_value=0, max_value=9), min_size=1, max_size=6
    ).map(tuple)


@needs_compiled
class TestParity:
    def test_bar_heads(self):
        for n in (2, 3, 4):
            for m in range(7):
                for lam in partitions_of(m):
                    k = max(m, len(lam), 1)
                    head = wedge_from_partition(lam, k)[::-1]
                    pure = _straighten_py.straighten_raw(head, n)
                    compiled = _straighten_cy.straighten_raw(head, n)
                    assert pure == compiled

    @settings(max_examples=200, deadline=None)
    @given(heads_strategy(), st.integers(min_value=2, max_value=5))
    def test_random_heads(self, head, n):
        assert _straighten_py.straighten_raw(head, n) == _straighten_cy.straighten_raw(
            head, n
        )

    def test_budget_error_parity(self):
        from fockdec.errors import StepBudgetExceeded

        head = tuple(range(8))
        with pytest.raises(StepBudgetExceeded):
            _straighten_py.clear_cache()
            _straighten_py.straighten_raw(head, 2, budget=2)
        with pytest.raises(StepBudgetExceeded):
            _straighten_cy.clear_cache()
            _straighten_cy.straighten_raw(head, 2, budget=2)


class TestSelection:
    def test_selected_kernel_exposes_interface(self):
        assert kernel.KERNEL_NAME in ("pure", "cython")
        result = kernel.straighten_raw((1, 0), 2)
        assert result == {(1, 0): {0: 1}}
        assert kernel.cache_size() >= 1

    def test_pure_fallback_env(self, monkeypatch):
        import importlib

        monkeypatch.setenv("FOCKDEC_PURE", "1")
        import fockdec.kernel as kernel_module

        reloaded = importlib.reload(kernel_module)
        try:
            assert reloaded.KERNEL_NAME == "pure"
        finally:
            monkeypatch.delenv("FOCKDEC_PURE")
            importlib.reload(kernel_module)
