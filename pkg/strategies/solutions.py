"""
Модуль операторных решений линейной системы.

Операторное решение - набор унитарных A_1..A_n порядка p, у которых
операторы переменных одного уравнения коммутируют, а произведение
∏_{k∈V_ℓ} A_k^{M[ℓ][k]} равно ζ^{b_ℓ}·I.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

import numpy as np

from linsys import LinearSystem
from linsys.errors import DimensionMismatchError
from linsys.settings import TOL_STRUCTURAL
from linsys.strict import strict
from solution_group import Presentation
from solution_group.words import J_ID
from strategies.operators import (Observable, ResidualReport,
                                  commutator_norm, op_norm, zeta_power)

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class OperatorSolution:
    """
    Операторы A_1..A_n, по одному на переменную.

    Attributes:
        p (int): модуль.
        operators (tuple[Observable, ...]): операторы переменных.
    """

    p: int
    operators: tuple[Observable, ...]

    @classmethod
    def from_matrices(cls, p: int, matrices) -> OperatorSolution:
        """Строит решение из списка матриц."""
        return cls(p, tuple(Observable(np.asarray(m), p) for m in matrices))

    @property
    def dimension(self) -> int:
        """Размерность пространства."""
        return self.operators[0].dimension if self.operators else 0

    def matrix(self, i: int) -> np.ndarray:
        """Матрица переменной i (от нуля)."""
        return self.operators[i].matrix


def _check_shapes(sol: OperatorSolution, sys: LinearSystem) -> None:
    if sol.p != sys.p:
        raise DimensionMismatchError(f"модуль решения {sol.p}, системы {sys.p}")
    if len(sol.operators) != sys.n:
        raise DimensionMismatchError(
            f"операторов {len(sol.operators)}, переменных {sys.n}"
        )
    d = sol.dimension
    if any(op.matrix.shape != (d, d) for op in sol.operators):
        raise DimensionMismatchError("операторы разной размерности")


def equation_product(
    matrices, sys: LinearSystem, ell: int
) -> np.ndarray:
    """
    ∏_{k∈V_ℓ} A_k^{M[ℓ][k]} по возрастанию k.

    Args:
        matrices: Последовательность матриц по переменным или отображение
            переменная → матрица.
        sys (LinearSystem): Система.
        ell (int): Номер уравнения от нуля.

    Returns:
        np.ndarray: Произведение.
    """
    vs = sys.supports[ell]
    d = matrices[vs[0]].shape[0]
    product = np.eye(d, dtype=complex)
    for k in vs:
        product = product @ np.linalg.matrix_power(matrices[k], sys.matrix[ell][k])
    return product


@strict
def check_operator_solution(
    sol: OperatorSolution, sys: LinearSystem, tol: float = TOL_STRUCTURAL
) -> ResidualReport:
    """
    Проверяет условия операторного решения.

    Семейства отчёта: 'unitarity', 'order' (‖A_i^p - I‖), 'local'
    (коммутаторы пар из общего уравнения) и 'constraint'
    (‖∏ A_k^{M[ℓ][k]} - ζ^{b_ℓ} I‖ по уравнениям).

    Args:
        sol (OperatorSolution): Решение.
        sys (LinearSystem): Система.
        tol (float): Допуск.

    Returns:
        ResidualReport: Невязки; passed - все не больше tol.

    Raises:
        DimensionMismatchError: Размеры не согласованы с системой.
    """
    _check_shapes(sol, sys)
    report = ResidualReport(tol)
    for i, op in enumerate(sol.operators):
        report.add("unitarity", f"A{i + 1}", op.unitarity_residual())
        report.add("order", f"A{i + 1}", op.order_residual())
    for i in range(sys.n):
        for j in sorted(sys.neighbours[i]):
            if i < j:
                report.add(
                    "local",
                    f"A{i + 1},A{j + 1}",
                    commutator_norm(sol.matrix(i), sol.matrix(j)),
                )
    matrices = [op.matrix for op in sol.operators]
    eye = np.eye(sol.dimension)
    for ell in range(sys.m):
        target = zeta_power(sys.p, sys.rhs[ell]) * eye
        report.add(
            "constraint",
            f"eq{ell + 1}",
            op_norm(equation_product(matrices, sys, ell) - target),
        )
    return report


@strict
def scalar_solution(sys: LinearSystem, x: tuple) -> OperatorSolution:
    """
    Одномерное решение A_i = ζ^{x_i} из классического решения x.

    Args:
        sys (LinearSystem): Система.
        x (Assignment): Классическое решение.

    Returns:
        OperatorSolution: Решение размерности 1.
    """
    if len(x) != sys.n:
        raise DimensionMismatchError("длина решения не равна числу переменных")
    return OperatorSolution.from_matrices(
        sys.p, [[[zeta_power(sys.p, v)]] for v in x]
    )


def relator_image(
    sol: OperatorSolution, letters: tuple[tuple[int, int], ...]
) -> np.ndarray:
    """Образ слова при g_i ↦ A_i, J ↦ ζ·I."""
    d = sol.dimension
    image = np.eye(d, dtype=complex)
    for gen, exp in letters:
        if gen == J_ID:
            image = image * zeta_power(sol.p, exp)
        else:
            image = image @ np.linalg.matrix_power(sol.matrix(gen - 1), exp)
    return image


@strict
def solution_to_representation_check(
    sol: OperatorSolution, pres: Presentation, tol: float = TOL_STRUCTURAL
) -> ResidualReport:
    """
    Проверяет, что g_i ↦ A_i, J ↦ ζ·I задаёт представление группы решений.

    Для p = 2 это отображение J ↦ -I. Прохождение проверки численно
    удостоверяет J ≠ e в группе.

    Args:
        sol (OperatorSolution): Решение.
        pres (Presentation): Копредставление группы решений.
        tol (float): Допуск.

    Returns:
        ResidualReport: Семейство 'relator' с невязкой ‖образ - I‖ для
        каждого соотношения (ключ - номер и запись соотношения).
    """
    if sol.p != pres.p or len(sol.operators) != pres.n:
        raise DimensionMismatchError("решение не согласовано с копредставлением")
    report = ResidualReport(tol)
    eye = np.eye(sol.dimension)
    for index, rel in enumerate(pres.relators):
        residual = op_norm(relator_image(sol, rel.letters) - eye)
        report.add("relator", f"{index + 1}:{rel}", residual)
    logger.debug("проверка представления: максимум %.3g", report.family_max("relator"))
    return report

