"""Общие фикстуры тестов: встроенные системы и решение магического квадрата."""

import random

import numpy as np
import pytest
from sympy.combinatorics.fp_groups import FpGroup
from sympy.combinatorics.free_groups import free_group

from linsys import LinearSystem, bundled_system
from strategies import OperatorSolution, pauli_matrix

# Решение Мермина: строки XI IX XX / IZ ZI ZZ / XZ ZX YY, все знаки +.
MERMIN_LABELS = ("+XI", "+IX", "+XX", "+IZ", "+ZI", "+ZZ", "+XZ", "+ZX", "+YY")


@pytest.fixture
def magic_square() -> LinearSystem:
    return bundled_system("magic_square")


@pytest.fixture
def inconsistent_pair() -> LinearSystem:
    return bundled_system("inconsistent_pair")


@pytest.fixture
def single_z2() -> LinearSystem:
    return bundled_system("single_equation_z2")


@pytest.fixture
def single_z3() -> LinearSystem:
    return bundled_system("single_equation_z3")


@pytest.fixture
def mermin_solution() -> OperatorSolution:
    return OperatorSolution.from_matrices(2, [pauli_matrix(lb) for lb in MERMIN_LABELS])


def sympy_order(pres) -> int:
    """Порядок группы по копредставлению, вычисленный sympy."""
    names = " ".join(["J"] + [f"g{i}" for i in range(1, pres.n + 1)])
    free, *gens = free_group(names)
    relators = []
    for rel in pres.relators:
        element = free.identity
        for gen, exp in rel.letters:
            element = element * gens[gen] ** exp
        relators.append(element)
    return FpGroup(free, relators).order()


def random_system(rng: random.Random, p: int = 2, n_max: int = 6, m_max: int = 6,
                  support_max: int = 3) -> LinearSystem:
    """Случайная система без пустых уравнений и лишних переменных."""
    while True:
        n = rng.randint(1, n_max)
        m = rng.randint(1, m_max)
        matrix = []
        for _ in range(m):
            size = rng.randint(1, min(support_max, n))
            row = [0] * n
            for k in rng.sample(range(n), size):
                row[k] = rng.randint(1, p - 1)
            matrix.append(row)
        if all(any(row[k] for row in matrix) for k in range(n)):
            rhs = [rng.randrange(p) for _ in range(m)]
            return LinearSystem(p, matrix, rhs)


def random_unitary(rng: np.random.Generator, d: int) -> np.ndarray:
    """Случайная унитарная матрица (QR от гауссовой)."""
    z = rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))
