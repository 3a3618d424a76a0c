"""
Модуль наблюдаемых порядка p и отчётов о невязках.

Корень из единицы ζ = exp(2πi/p) фиксирован для всего проекта; при p = 2
это ровно -1.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np


def root_of_unity(p: int) -> complex:
    """Примитивный корень ζ = exp(2πi/p); для p = 2 точно -1."""
    if p == 2:
        return -1 + 0j
    return cmath.exp(2j * cmath.pi / p)


def zeta_power(p: int, k: int) -> complex:
    """ζ^k с показателем по модулю p."""
    k %= p
    if k == 0:
        return 1 + 0j
    return root_of_unity(p) ** k


def frozen(array: object) -> np.ndarray:
    """Комплексная копия массива, закрытая от записи."""
    out = np.array(array, dtype=complex)
    out.setflags(write=False)
    return out


def op_norm(matrix: np.ndarray) -> float:
    """Операторная (спектральная) норма."""
    if matrix.size == 0:
        return 0.0
    if matrix.ndim == 1:
        return float(np.linalg.norm(matrix))
    return float(np.linalg.norm(matrix, 2))


def spectral_projectors(matrix: np.ndarray, p: int) -> list[np.ndarray]:
    """
    Спектральные проекторы унитарного U с U^p = I.

    P(c) = (1/p) Σ_k ζ^{-ck} U^k - проектор на собственное значение ζ^c.

    Args:
        matrix (np.ndarray): Унитарная матрица порядка p.
        p (int): Модуль.

    Returns:
        list[np.ndarray]: Проекторы P(0), ..., P(p-1).
    """
    powers = [np.eye(matrix.shape[0], dtype=complex)]
    for _ in range(p - 1):
        powers.append(powers[-1] @ matrix)
    return [
        sum(zeta_power(p, -c * k) * powers[k] for k in range(p)) / p
        for c in range(p)
    ]


@dataclass(frozen=True, eq=False)
class Observable:
    """
    Наблюдаемая: унитарная матрица U с U^p = I.

    Attributes:
        matrix (np.ndarray): матрица d×d.
        p (int): модуль.
    """

    matrix: np.ndarray
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", frozen(self.matrix))

    @property
    def dimension(self) -> int:
        """Размерность d."""
        return self.matrix.shape[0]

    def power(self, k: int) -> np.ndarray:
        """U^k с показателем по модулю p."""
        return np.linalg.matrix_power(self.matrix, k % self.p)

    @cached_property
    def projectors(self) -> list[np.ndarray]:
        """Спектральные проекторы P(0..p-1)."""
        return spectral_projectors(self.matrix, self.p)

    def unitarity_residual(self) -> float:
        """‖U U† - I‖."""
        eye = np.eye(self.dimension)
        return op_norm(self.matrix @ self.matrix.conj().T - eye)

    def order_residual(self) -> float:
        """‖U^p - I‖."""
        eye = np.eye(self.dimension)
        return op_norm(np.linalg.matrix_power(self.matrix, self.p) - eye)


def commutator_norm(a: np.ndarray, b: np.ndarray) -> float:
    """‖AB - BA‖."""
    return op_norm(a @ b - b @ a)


@dataclass
class ResidualReport:
    """
    Отчёт о невязках, сгруппированных по семействам условий.

    Attributes:
        tol (float): допуск.
        families (dict[str, dict[str, float]]): семейство → пункт → невязка.
        notes (dict[str, float]): сопутствующие величины вне критерия.
    """

    tol: float
    families: dict[str, dict[str, float]] = field(default_factory=dict)
    notes: dict[str, float] = field(default_factory=dict)

    def add(self, family: str, item: str, residual: float) -> None:
        """Добавляет невязку в семейство."""
        self.families.setdefault(family, {})[item] = float(residual)

    def family_max(self, family: str) -> float:
        """Максимальная невязка семейства; 0 для пустого."""
        return max(self.families.get(family, {}).values(), default=0.0)

    @property
    def maxima(self) -> dict[str, float]:
        """Максимум по каждому семейству."""
        return {name: self.family_max(name) for name in self.families}

    @property
    def passed(self) -> bool:
        """Все невязки не превышают допуск."""
        return all(value <= self.tol for value in self.maxima.values())

    def failures(self) -> dict[str, dict[str, float]]:
        """Пункты, превысившие допуск."""
        return {
            name: bad
            for name, items in self.families.items()
            if (bad := {k: v for k, v in items.items() if v > self.tol})
        }

    def to_dict(self) -> dict:
        """Словарь для машиночитаемого вывода."""
        return {
            "tol": self.tol,
            "passed": self.passed,
            "max": self.maxima,
            "failures": self.failures(),
            "notes": self.notes,
        }
