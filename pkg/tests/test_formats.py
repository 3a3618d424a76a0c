"""
Модуль тестов для записи и чтения стратегий и решений в JSON.

Покрывает тесты для:
- встроенных стратегий магического квадрата,
- записи и повторного чтения,
- отказов на некорректных файлах.
"""

import json
from fractions import Fraction

import numpy as np
import pytest

from linsys.errors import StrategyFormatError
from strategies import (BUNDLED_STRATEGIES, bundled_strategy, check_strategy,
                        game_value, is_perfect, load_strategy,
                        matrix_from_json, matrix_to_json,
                        operator_solution_to_tensor_strategy,
                        solution_from_json, solution_to_json,
                        strategy_from_json, strategy_to_json, tensor_labels)
from tests.conftest import MERMIN_LABELS


@pytest.mark.strategies
def test_bundled_perfect_strategy(magic_square):
    """
    Тестирует встроенную идеальную стратегию магического квадрата.

    Стратегия корректна, идеальна и выигрывает с вероятностью 1.
    """
    st = bundled_strategy("magic_square_perfect", magic_square)
    assert st.dimension == 16
    assert check_strategy(st, magic_square, 1e-12).passed
    assert is_perfect(st, magic_square, 1e-12).passed
    assert game_value(st, magic_square).value == pytest.approx(1.0, abs=1e-12)


@pytest.mark.strategies
def test_bundled_classical_strategy(magic_square):
    """Тестирует встроенную классическую стратегию: ровно 17/18."""
    st = bundled_strategy("magic_square_classical", magic_square)
    assert st.dimension == 1
    report = game_value(st, magic_square)
    assert report.exact == Fraction(17, 18)
    assert not is_perfect(st, magic_square).passed


@pytest.mark.strategies
def test_bundled_strategy_unknown_name(magic_square):
    """Тестирует отказ на неизвестном имени встроенной стратегии."""
    assert "magic_square_perfect" in BUNDLED_STRATEGIES
    with pytest.raises(KeyError):
        bundled_strategy("no_such_strategy", magic_square)


@pytest.mark.strategies
def test_bundled_strategy_for_other_system(single_z2):
    """Тестирует отказ при несовпадении хэша системы."""
    with pytest.raises(StrategyFormatError):
        bundled_strategy("magic_square_perfect", single_z2)


@pytest.mark.strategies
def test_strategy_round_trip(magic_square, mermin_solution, tmp_path):
    """
    Тестирует запись стратегии с метками Паули и без них.

    Прочитанные матрицы совпадают с исходными.
    """
    st = operator_solution_to_tensor_strategy(mermin_solution, magic_square)
    alice, bob = tensor_labels(MERMIN_LABELS)
    alice_labels = {pair: alice[pair[1]] for pair in magic_square.pairs}
    for text in (
        strategy_to_json(st, magic_square),
        strategy_to_json(st, magic_square, alice_labels, bob),
    ):
        back = strategy_from_json(text, magic_square)
        assert np.allclose(back.state, st.state)
        for pair, op in st.alice.items():
            assert np.allclose(back.alice[pair].matrix, op.matrix)
        for op, other in zip(st.bob, back.bob):
            assert np.allclose(op.matrix, other.matrix)

    path = tmp_path / "strategy.json"
    path.write_text(strategy_to_json(st, magic_square), encoding="utf-8")
    assert load_strategy(path, magic_square).dimension == 16


@pytest.mark.strategies
def test_solution_round_trip(magic_square, mermin_solution):
    """Тестирует запись операторного решения с метками и матрицами."""
    for labels in (MERMIN_LABELS, None):
        text = solution_to_json(mermin_solution, magic_square, labels)
        back = solution_from_json(text, magic_square)
        for op, other in zip(mermin_solution.operators, back.operators):
            assert np.allclose(op.matrix, other.matrix)
    data = json.loads(solution_to_json(mermin_solution, magic_square, MERMIN_LABELS))
    assert data["operators"][8] == {"variable": 9, "matrix": {"pauli": "+YY"}}


@pytest.mark.strategies
def test_matrix_json():
    """Тестирует пары [re, im] и сокращение Паули."""
    matrix = np.array([[0, -1j], [1j, 0]])
    assert matrix_to_json(matrix)[0][1] == [0.0, -1.0]
    assert np.allclose(matrix_from_json(matrix_to_json(matrix), 3), matrix)
    assert np.allclose(matrix_from_json({"pauli": "+Y"}, 2), matrix)
    with pytest.raises(StrategyFormatError):
        matrix_from_json({"pauli": "+Y"}, 3)


@pytest.mark.strategies
@pytest.mark.parametrize(
    "data",
    [
        [[1, 0]],
        [],
        [[[1, 0], [0, 0, 0]]],
        {"pauli": "+X", "extra": 1},
        "matrix",
    ],
)
def test_malformed_matrix(data):
    """Тестирует отказ на неквадратных и неполных матрицах."""
    with pytest.raises(StrategyFormatError):
        matrix_from_json(data, 2)


@pytest.mark.strategies
def test_malformed_strategy_files(magic_square):
    """
    Тестирует отказ на некорректных файлах стратегии.

    Неверный формат, модуль, длина состояния и отсутствующие поля дают
    StrategyFormatError.
    """
    good = json.loads(strategy_to_json(
        bundled_strategy("magic_square_classical", magic_square), magic_square
    ))
    variants = []
    for key, value in [("format", "other/1"), ("p", 3), ("dimension", 2)]:
        data = dict(good)
        data[key] = value
        variants.append(json.dumps(data))
    data = dict(good)
    del data["bob"]
    variants.append(json.dumps(data))
    variants.append("{not json")
    variants.append("[1, 2]")
    for text in variants:
        with pytest.raises(StrategyFormatError):
            strategy_from_json(text, magic_square)


@pytest.mark.strategies
def test_duplicate_operators_rejected(magic_square, mermin_solution):
    """
    Тестирует отказ на повторных записях одного оператора.

    Повтор переменной Боба отвергается, даже если число записей совпадает
    с числом переменных; то же для пары Алисы и операторного решения.
    """
    good = json.loads(strategy_to_json(
        bundled_strategy("magic_square_classical", magic_square), magic_square
    ))
    data = dict(good)
    data["bob"] = [dict(item) for item in good["bob"]]
    data["bob"][8]["variable"] = 1
    with pytest.raises(StrategyFormatError, match="Боба для x1"):
        strategy_from_json(json.dumps(data), magic_square)
    data = dict(good)
    data["alice"] = good["alice"] + good["alice"][:1]
    with pytest.raises(StrategyFormatError, match="дважды"):
        strategy_from_json(json.dumps(data), magic_square)
    solution = json.loads(solution_to_json(mermin_solution, magic_square, MERMIN_LABELS))
    solution["operators"][8]["variable"] = 2
    with pytest.raises(StrategyFormatError, match="x2"):
        solution_from_json(json.dumps(solution), magic_square)
