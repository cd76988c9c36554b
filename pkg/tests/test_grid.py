import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fwlab.grid import StateField, eval_kernel, initial_data, make_grid


def test_make_grid_paper_size():
    g = make_grid(1000)
    assert g.h == pytest.approx(0.001)
    assert g.h * g.n == pytest.approx(1.0, abs=1e-15)


def test_make_grid_smallest():
    assert make_grid(4).h == 0.25


def test_make_grid_rejects_small():
    with pytest.raises(ValueError):
        make_grid(3)


def test_index_wrapping():
    g = make_grid(8)
    assert g.neighbor(7, 1) == 0
    assert g.neighbor(0, -1) == 7


@given(st.integers(min_value=4, max_value=200))
def test_shift_composition_is_identity(n):
    g = make_grid(n)
    k = np.arange(n)
    for _ in range(n):
        k = (k + 1) % n
    assert np.array_equal(k, np.arange(n))


def test_kernel_endpoints():
    e = np.e
    assert eval_kernel(0.0) == pytest.approx((1 + e) / (2 * (e - 1)), rel=1e-14)
    assert eval_kernel(1.0) == eval_kernel(0.0)


def test_kernel_minimum_at_half():
    assert eval_kernel(0.5) == pytest.approx(np.sqrt(np.e) / (np.e - 1), rel=1e-14)


def test_kernel_rejects_out_of_range():
    with pytest.raises(ValueError):
        eval_kernel(-0.1)
    with pytest.raises(ValueError):
        eval_kernel(1.1)


def test_kernel_symmetry():
    x = np.linspace(0.0, 1.0, 301)
    assert np.max(np.abs(eval_kernel(x) - eval_kernel(1.0 - x))) < 1e-15


def test_kernel_unit_mean_trapezoid_second_order():
    # trapezoid quadrature of K converges to 1 at O(h^2)
    errs = []
    for n in (100, 200, 400):
        x = np.linspace(0.0, 1.0, n + 1)
        v = eval_kernel(x)
        q = np.trapezoid(v, x)
        errs.append(abs(q - 1.0))
    assert errs[0] / errs[1] == pytest.approx(4.0, rel=0.1)
    assert errs[1] / errs[2] == pytest.approx(4.0, rel=0.1)


def test_data1_value_at_zero():
    g = make_grid(1000)
    u = initial_data("data1", g)
    assert u.values[0] == pytest.approx(np.cos(0.5) + 1.0, rel=1e-15)


def test_data2_value_at_zero():
    g = make_grid(1000)
    u = initial_data("data2", g)
    assert u.values[0] == pytest.approx(0.8, rel=1e-15)


def test_cosine_zero_amplitude():
    g = make_grid(64)
    u = initial_data("cosine", g, q=0.0)
    assert np.all(u.values == 0.0)


def test_fourier_preset():
    g = make_grid(256)
    u = initial_data("fourier", g, coeffs=([0.2, 0.1, 0.0], [0.0, 0.0, -0.3]))
    ref = (
        0.2 * np.cos(2 * np.pi * g.x)
        + 0.1 * np.cos(4 * np.pi * g.x)
        - 0.3 * np.sin(6 * np.pi * g.x)
    )
    assert np.allclose(u.values, ref, atol=1e-15)


def test_unknown_preset():
    with pytest.raises(ValueError):
        initial_data("dat1", make_grid(8))


def test_state_field_validates_length_and_finiteness():
    g = make_grid(8)
    with pytest.raises(ValueError):
        StateField(g, np.zeros(7))
    with pytest.raises(ValueError):
        StateField(g, np.full(8, np.nan))
