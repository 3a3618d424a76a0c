"""
Модуль записи и чтения стратегий и операторных решений в JSON.

Матрица записывается построчно списком пар [re, im] либо, при p = 2,
сокращением {"pauli": "+XZ"}. Уравнения и переменные нумеруются от 1.
Хэш системы (system_sha256) пишется при экспорте и сверяется при
импорте, если присутствует.
"""

from __future__ import annotations

import json
import logging
from importlib import resources
from pathlib import Path

import numpy as np

from linsys import LinearSystem, system_hash
from linsys.errors import StrategyFormatError
from strategies.operators import Observable
from strategies.pauli import pauli_matrix
from strategies.solutions import OperatorSolution
from strategies.strategy import Strategy

logger = logging.getLogger(__name__)

STRATEGY_FORMAT = "linsys-strategy/1"
SOLUTION_FORMAT = "linsys-operator-solution/1"
BUNDLED_STRATEGIES = ("magic_square_perfect", "magic_square_classical")


def matrix_to_json(matrix: np.ndarray) -> list:
    """Матрица или вектор в виде вложенных списков пар [re, im]."""
    array = np.asarray(matrix, dtype=complex)
    if array.ndim == 1:
        return [[float(v.real), float(v.imag)] for v in array]
    return [[[float(v.real), float(v.imag)] for v in row] for row in array]


def _complex_entry(entry: object) -> complex:
    if isinstance(entry, (int, float)):
        return complex(entry)
    if isinstance(entry, list) and len(entry) == 2:
        return complex(float(entry[0]), float(entry[1]))
    raise StrategyFormatError(f"ожидалась пара [re, im], получено {entry!r}")


def matrix_from_json(data: object, p: int) -> np.ndarray:
    """
    Читает матрицу из JSON-представления.

    Args:
        data (object): Список строк из пар [re, im] или {"pauli": метка}.
        p (int): Модуль; сокращение Паули допустимо только при p = 2.

    Returns:
        np.ndarray: Квадратная комплексная матрица.

    Raises:
        StrategyFormatError: Запись некорректна.
    """
    if isinstance(data, dict):
        if set(data) != {"pauli"}:
            raise StrategyFormatError(f"неизвестная запись матрицы {data!r}")
        if p != 2:
            raise StrategyFormatError("сокращение Паули допустимо только при p = 2")
        return pauli_matrix(str(data["pauli"]))
    if not isinstance(data, list) or not data:
        raise StrategyFormatError("матрица должна быть непустым списком строк")
    rows = [[_complex_entry(v) for v in row] for row in data]
    if any(len(row) != len(rows) for row in rows):
        raise StrategyFormatError("матрица должна быть квадратной")
    return np.array(rows, dtype=complex)


def _header(kind: str, sys: LinearSystem, dimension: int) -> dict:
    return {
        "format": kind,
        "p": sys.p,
        "dimension": dimension,
        "system_sha256": system_hash(sys),
    }


def _check_header(data: dict, kind: str, sys: LinearSystem) -> None:
    if data.get("format") != kind:
        raise StrategyFormatError(f"ожидался формат {kind}, получен {data.get('format')!r}")
    if int(data.get("p", -1)) != sys.p:
        raise StrategyFormatError(f"модуль в файле {data.get('p')}, в системе {sys.p}")
    digest = data.get("system_sha256")
    if digest is not None and digest != system_hash(sys):
        raise StrategyFormatError("хэш системы в файле не совпадает с системой")


def _encode(op: Observable, label: str | None) -> object:
    return {"pauli": label} if label is not None else matrix_to_json(op.matrix)


def strategy_to_json(
    st: Strategy,
    sys: LinearSystem,
    alice_labels: dict[tuple[int, int], str] | None = None,
    bob_labels: list[str] | None = None,
) -> str:
    """
    Записывает стратегию в JSON.

    Args:
        st (Strategy): Стратегия.
        sys (LinearSystem): Система, хэш которой попадёт в файл.
        alice_labels (dict | None): Метки Паули операторов Алисы по (ℓ, i).
        bob_labels (list[str] | None): Метки Паули операторов Боба.

    Returns:
        str: JSON-документ.
    """
    alice_labels = alice_labels or {}
    data = _header(STRATEGY_FORMAT, sys, st.dimension)
    data["state"] = matrix_to_json(st.state)
    data["alice"] = [
        {
            "equation": s + 1,
            "variable": i + 1,
            "matrix": _encode(op, alice_labels.get((s, i))),
        }
        for (s, i), op in sorted(st.alice.items())
    ]
    data["bob"] = [
        {
            "variable": j + 1,
            "matrix": _encode(op, bob_labels[j] if bob_labels else None),
        }
        for j, op in enumerate(st.bob)
    ]
    return json.dumps(data, indent=2) + "\n"


def _reject_duplicates(names: list[str]) -> None:
    """Отвергает повторную запись одного и того же оператора."""
    seen = set()
    for name in names:
        if name in seen:
            raise StrategyFormatError(f"{name} задан дважды")
        seen.add(name)


def strategy_from_json(text: str, sys: LinearSystem) -> Strategy:
    """
    Читает стратегию, записанную strategy_to_json.

    Raises:
        StrategyFormatError: Файл некорректен или относится к другой системе.
    """
    try:
        data = json.loads(text)
        _check_header(data, STRATEGY_FORMAT, sys)
        p = sys.p
        state = np.array([_complex_entry(v) for v in data["state"]], dtype=complex)
        _reject_duplicates([
            f"оператор Алисы для (уравнение {int(item['equation'])}, x{int(item['variable'])})"
            for item in data["alice"]
        ])
        _reject_duplicates([f"оператор Боба для x{int(item['variable'])}" for item in data["bob"]])
        alice = {
            (int(item["equation"]) - 1, int(item["variable"]) - 1): Observable(
                matrix_from_json(item["matrix"], p), p
            )
            for item in data["alice"]
        }
        bob_items = sorted(data["bob"], key=lambda item: int(item["variable"]))
        bob = tuple(Observable(matrix_from_json(item["matrix"], p), p) for item in bob_items)
        dimension = int(data["dimension"])
    except StrategyFormatError:
        raise
    except (AttributeError, KeyError, TypeError, ValueError) as error:
        raise StrategyFormatError(f"некорректный файл стратегии: {error}") from error
    if state.shape[0] != dimension:
        raise StrategyFormatError("длина состояния не совпадает с dimension")
    return Strategy(p, state, alice, bob)


def solution_to_json(
    sol: OperatorSolution, sys: LinearSystem, labels: tuple[str, ...] | None = None
) -> str:
    """Записывает операторное решение; labels - метки Паули, если известны."""
    data = _header(SOLUTION_FORMAT, sys, sol.dimension)
    data["operators"] = [
        {"variable": i + 1, "matrix": _encode(op, labels[i] if labels else None)}
        for i, op in enumerate(sol.operators)
    ]
    return json.dumps(data, indent=2) + "\n"


def solution_from_json(text: str, sys: LinearSystem) -> OperatorSolution:
    """Читает операторное решение, записанное solution_to_json."""
    try:
        data = json.loads(text)
        _check_header(data, SOLUTION_FORMAT, sys)
        _reject_duplicates([f"оператор для x{int(item['variable'])}" for item in data["operators"]])
        items = sorted(data["operators"], key=lambda item: int(item["variable"]))
        matrices = [matrix_from_json(item["matrix"], sys.p) for item in items]
    except StrategyFormatError:
        raise
    except (AttributeError, KeyError, TypeError, ValueError) as error:
        raise StrategyFormatError(f"некорректный файл решения: {error}") from error
    return OperatorSolution.from_matrices(sys.p, matrices)


def load_strategy(path: str | Path, sys: LinearSystem) -> Strategy:
    """Читает стратегию из файла."""
    return strategy_from_json(Path(path).read_text(encoding="utf-8"), sys)


def bundled_strategy(name: str, sys: LinearSystem) -> Strategy:
    """Встроенная стратегия: magic_square_perfect или magic_square_classical."""
    if name not in BUNDLED_STRATEGIES:
        raise KeyError(f"нет встроенной стратегии {name!r}")
    text = resources.files("linsys").joinpath("data", f"{name}.json").read_text(
        encoding="utf-8"
    )
    return strategy_from_json(text, sys)
