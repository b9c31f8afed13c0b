# -*- coding: utf-8 -*-
"""Tests for the :py:mod:`~stokes_darcy_gfdm.stencil.basis` module."""
import math

import numpy
import pytest

from stokes_darcy_gfdm.stencil.basis import DerivativeBasis


@pytest.mark.parametrize('order', (2, 4))
def test_basis_regression(data_regression, order):
    """Test the ordering of the derivatives for the lower truncation orders."""
    basis = DerivativeBasis(order)
    data_regression.check({'count': basis.count, 'degrees': basis.degrees.tolist(), 'labels': list(basis.labels)})


@pytest.mark.parametrize(('order', 'count'), ((2, 5), (4, 14), (6, 27)))
def test_count(order, count):
    """Test the number of derivatives of each supported order."""
    assert DerivativeBasis(order).count == count


@pytest.mark.parametrize('order', (1, 3, 8))
def test_unsupported_order(order):
    """Test that unsupported orders are rejected."""
    with pytest.raises(ValueError):
        DerivativeBasis(order)


def test_index():
    """Test the lookup of rows by index, label and multi-index."""
    basis = DerivativeBasis(4)

    assert basis.index('xy') == basis.index((1, 1)) == basis.index(4) == 4
    assert basis.index('yx') == 4
    assert basis.index(numpy.int64(2)) == 2

    for derivative in ('xxxxx', (0, 5), 14, -1):
        with pytest.raises(KeyError):
            basis.index(derivative)


def test_taylor_matrix():
    """Test the Taylor terms of a single offset."""
    basis = DerivativeBasis(4)
    h, l = 0.3, -0.2
    row = basis.taylor_matrix(numpy.array([h, l]))[0]

    expected = [h**i * l**j / (math.factorial(i) * math.factorial(j)) for i, j in basis.multi_indices]
    numpy.testing.assert_allclose(row, expected)
    assert basis.taylor_matrix(numpy.zeros((3, 2))).shape == (3, 14)
