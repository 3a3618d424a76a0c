"""
Модуль тестов для поиска операторных решений среди операторов Паули.

Покрывает тесты для:
- симплектической арифметики PauliString,
- перебора на 0..2 кубитах и исчерпания бюджета,
- обобщённых операторов clock/shift для p > 2,
- меток тензорной стратегии.
"""

import itertools
import random
from functools import reduce

import numpy as np
import pytest

from linsys.errors import LinearSystemError, QubitCapError, StrategyFormatError
from strategies import (PauliSearchStatus, PauliString, check_operator_solution,
                        clock_shift_search, game_value, is_perfect,
                        operator_solution_to_tensor_strategy, pauli_matrix,
                        pauli_opsol_search, tensor_labels, transpose_label)
from tests.conftest import MERMIN_LABELS

_X = np.array([[0, 1], [1, 0]], dtype=complex)
_Z = np.array([[1, 0], [0, -1]], dtype=complex)


def _symplectic_matrix(op: PauliString) -> np.ndarray:
    """i^phase X^x Z^z, собранное по кубитам независимо от меток."""
    factors = [
        np.linalg.matrix_power(_X, op.x >> k & 1) @ np.linalg.matrix_power(_Z, op.z >> k & 1)
        for k in range(op.qubits)
    ]
    return 1j**op.phase * reduce(np.kron, factors, np.eye(1, dtype=complex))


def _all_labels(qubits: int) -> list[str]:
    return [
        sign + "".join(body)
        for sign in "+-"
        for body in itertools.product("IXYZ", repeat=qubits)
    ]


@pytest.mark.strategies
def test_label_matches_matrix():
    """Тестирует, что метка, симплектическая форма и матрица согласованы."""
    for label in _all_labels(2):
        op = PauliString.from_label(label)
        assert op.is_hermitian
        assert op.label == label
        assert np.allclose(_symplectic_matrix(op), pauli_matrix(label))


@pytest.mark.strategies
def test_product_and_commutation():
    """
    Тестирует умножение и коммутацию в симплектической форме.

    XZ = -iY, X и Z антикоммутируют, XX и ZZ коммутируют.
    """
    x, z = PauliString.from_label("X"), PauliString.from_label("Z")
    product = x * z
    assert not product.is_hermitian
    assert np.allclose(_symplectic_matrix(product), -1j * pauli_matrix("+Y"))
    assert not x.commutes(z)
    assert PauliString.from_label("XX").commutes(PauliString.from_label("ZZ"))
    assert (x * x).is_scalar and (x * x).phase == 0

    rng = random.Random(7)
    for _ in range(50):
        a = PauliString(2, rng.randrange(4), rng.randrange(4), rng.randrange(4))
        b = PauliString(2, rng.randrange(4), rng.randrange(4), rng.randrange(4))
        ma, mb = _symplectic_matrix(a), _symplectic_matrix(b)
        assert np.allclose(_symplectic_matrix(a * b), ma @ mb)
        assert a.commutes(b) == np.allclose(ma @ mb, mb @ ma)


@pytest.mark.strategies
def test_bad_labels():
    """Тестирует отказ на недопустимых символах."""
    with pytest.raises(StrategyFormatError):
        PauliString.from_label("+XQ")
    with pytest.raises(StrategyFormatError):
        pauli_matrix("+A")
    assert pauli_matrix("-").shape == (1, 1)


@pytest.mark.strategies
def test_transpose_label():
    """Тестирует Y^T = -Y на всех метках двух кубитов."""
    assert transpose_label("+YY") == "+YY"
    assert transpose_label("+XY") == "-XY"
    for label in _all_labels(2):
        assert np.allclose(pauli_matrix(transpose_label(label)), pauli_matrix(label).T)


@pytest.mark.strategies
def test_tensor_labels():
    """Тестирует метки A ⊗ I для Алисы и I ⊗ A^T для Боба."""
    alice, bob = tensor_labels(("+XY", "-ZI"))
    assert alice == ["+XYII", "-ZIII"]
    assert bob == ["-IIXY", "-IIZI"]


@pytest.mark.strategies
def test_magic_square_two_qubits(magic_square):
    """
    Тестирует поиск на двух кубитах для магического квадрата.

    Найденное решение проходит проверку с допуском 1e-12, а тензорная
    стратегия размерности 16 идеальна.
    """
    result = pauli_opsol_search(magic_square, 2)
    assert result.status is PauliSearchStatus.FOUND
    assert len(result.labels) == 9
    assert check_operator_solution(result.solution, magic_square, 1e-12).passed
    st = operator_solution_to_tensor_strategy(result.solution, magic_square)
    assert st.dimension == 16
    assert is_perfect(st, magic_square).passed
    assert game_value(st, magic_square).value == pytest.approx(1.0, abs=1e-9)


@pytest.mark.strategies
def test_magic_square_small_classes(magic_square):
    """
    Тестирует, что на 0 и 1 кубите решения нет.

    На 0 кубитов это классическая несовместность.
    """
    for qubits in (0, 1):
        result = pauli_opsol_search(magic_square, qubits)
        assert result.status is PauliSearchStatus.NONE_IN_CLASS
        assert result.solution is None


@pytest.mark.strategies
def test_mermin_labels_are_a_solution(magic_square, mermin_solution):
    """Тестирует, что метки решения Мермина - операторное решение."""
    assert check_operator_solution(mermin_solution, magic_square, 1e-12).passed
    assert all(PauliString.from_label(lb).is_hermitian for lb in MERMIN_LABELS)


@pytest.mark.strategies
def test_classical_class(single_z2):
    """Тестирует скалярный класс: метки '+'/'-' повторяют классическое решение."""
    result = pauli_opsol_search(single_z2, 0)
    assert result.found
    assert result.solution.dimension == 1
    assert sorted(result.labels) == ["+", "-"]
    assert result.to_dict()["status"] == "found"


@pytest.mark.strategies
@pytest.mark.parametrize("qubits", [0, 1, 2, 3])
def test_inconsistent_pair_has_no_solution(inconsistent_pair, qubits):
    """Тестирует, что x1 = 0, x1 = 1 не имеет решений ни в каком классе."""
    result = pauli_opsol_search(inconsistent_pair, qubits)
    assert result.status is PauliSearchStatus.NONE_IN_CLASS


@pytest.mark.strategies
def test_node_budget(magic_square):
    """Тестирует исчерпание бюджета узлов."""
    result = pauli_opsol_search(magic_square, 2, 5)
    assert result.status is PauliSearchStatus.NODE_BUDGET
    assert result.nodes == 5


@pytest.mark.strategies
def test_search_rejects_bad_arguments(magic_square, single_z3):
    """Тестирует отказ при p ≠ 2 и при числе кубитов вне 0..4."""
    with pytest.raises(LinearSystemError):
        pauli_opsol_search(single_z3, 1)
    for qubits in (-1, 5):
        with pytest.raises(QubitCapError):
            pauli_opsol_search(magic_square, qubits)
    with pytest.raises(QubitCapError):
        pauli_opsol_search(magic_square, 1, 0)


@pytest.mark.strategies
def test_clock_shift_z3(single_z3):
    """
    Тестирует решение clock/shift для x1 + x2 = 1 над Z_3.

    Решение размерности 3 даёт идеальную стратегию размерности 9.
    """
    result = clock_shift_search(single_z3)
    assert result.found
    assert len(result.labels) == 2
    assert check_operator_solution(result.solution, single_z3, 1e-10).passed
    st = operator_solution_to_tensor_strategy(result.solution, single_z3)
    assert st.dimension == 9
    assert is_perfect(st, single_z3).passed


@pytest.mark.strategies
def test_clock_shift_inconsistent(inconsistent_pair):
    """Тестирует, что для несовместной пары clock/shift-решения нет."""
    assert clock_shift_search(inconsistent_pair).status is PauliSearchStatus.NONE_IN_CLASS
