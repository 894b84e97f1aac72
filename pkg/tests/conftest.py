"""Shared fixtures: the small matrices every experiment is built on."""

import json

import numpy as np
import pytest

from trotterlab.linalg import matrix_to_json, matrix_unit


@pytest.fixture
def e11():
    return matrix_unit(2, 0, 0)


@pytest.fixture
def e12():
    return matrix_unit(2, 0, 1)


@pytest.fixture
def e21():
    return matrix_unit(2, 1, 0)


@pytest.fixture
def commuting_pair():
    return np.diag([0.3, -0.2]).astype(complex), np.diag([0.1, 0.4]).astype(complex)


@pytest.fixture
def quasi_commuting_pair():
    # 3x3 pair whose commutator is nonzero but commutes with both factors.
    a = matrix_unit(3, 0, 1)
    b = matrix_unit(3, 1, 2)
    return a, b


@pytest.fixture
def scaled_commutator_pair():
    # [A, B] = B for A = diag(1, 0), B = E12.
    return np.diag([1.0, 0.0]).astype(complex), matrix_unit(2, 0, 1)


@pytest.fixture
def jordan_pair():
    return np.array([[0.5, 1.0], [0.0, 0.5]], dtype=complex), np.diag([1.0, -1.0]).astype(complex)


@pytest.fixture
def matrix_file(tmp_path):
    """Write a matrix to a JSON file and return its path."""

    def write(matrix, name):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(matrix_to_json(matrix)))
        return str(path)

    return write
