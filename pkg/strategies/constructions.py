"""
Модуль переходов между стратегиями, операторными решениями и группой.

- идеальная стратегия → операторное решение (сужение на орбиту ψ),
- конечномерное решение → стратегия в тензорной модели,
- конечная группа решений с J ≠ e → стратегия регулярного представления.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass

import numpy as np

from linsys import LinearSystem
from linsys.errors import DimensionMismatchError, OrbitClosureError, TrivialJError
from linsys.settings import TOL_ORBIT, TOL_PERFECT
from linsys.strict import strict
from solution_group import (CosetTable, Presentation, element_words, j_index,
                            left_action)
from solution_group.words import J_ID
from strategies.operators import Observable, op_norm, zeta_power
from strategies.solutions import OperatorSolution
from strategies.strategy import Strategy, require_perfect

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Restriction:
    """
    Итог сужения идеальной стратегии.

    Attributes:
        solution (OperatorSolution): операторы Q_i на H_0.
        basis (np.ndarray): ортонормированный базис H_0 по столбцам.
        well_definedness (float): max ‖(A_i^{(ℓ)} - A_i^{(ℓ')})|_{H_0}‖.
        invariance (float): max ‖A B - B (B† A B)‖ по операторам Алисы.
    """

    solution: OperatorSolution
    basis: np.ndarray
    well_definedness: float
    invariance: float


def _orbit_basis(
    psi: np.ndarray, operators: list[np.ndarray], residual: float
) -> np.ndarray:
    """
    Ортонормированный базис замыкания A·ψ под действием алгебры.

    Новые векторы получаются применением операторов к уже найденным;
    каждый ортогонализуется дважды, вектор с остатком меньше residual
    отбрасывается.
    """
    d = psi.shape[0]
    basis = [psi / np.linalg.norm(psi)]
    cursor = 0
    while cursor < len(basis):
        vector = basis[cursor]
        for op in operators:
            w = op @ vector
            current = np.array(basis).T
            for _ in range(2):
                w = w - current @ (current.conj().T @ w)
            norm = np.linalg.norm(w)
            if norm > residual:
                basis.append(w / norm)
                current = np.array(basis).T
                if len(basis) > d:
                    raise OrbitClosureError(
                        f"ранг орбиты превысил размерность {d}"
                    )
        cursor += 1
    return np.array(basis).T


@strict
def restrict_to_operator_solution(
    st: Strategy,
    sys: LinearSystem,
    tol: float = TOL_PERFECT,
    residual: float = TOL_ORBIT,
) -> Restriction:
    """
    Строит операторное решение по идеальной стратегии.

    H_0 - замыкание орбиты ψ под алгеброй операторов Алисы;
    Q_i - сжатие A_i^{(ℓ)} на H_0 для первого уравнения ℓ, содержащего i.
    Независимость от выбора ℓ проверяется численно и возвращается.

    Args:
        st (Strategy): Идеальная стратегия.
        sys (LinearSystem): Система.
        tol (float): Допуск идеальности и инвариантности H_0.
        residual (float): Порог роста ранга при замыкании орбиты.

    Returns:
        Restriction: Решение, базис H_0 и невязки корректности.

    Raises:
        StrategyError: Стратегия не идеальна.
        OrbitClosureError: H_0 не стабилизировалось или не инвариантно.
    """
    require_perfect(st, sys, tol)
    keys = sorted(st.alice)
    operators = [st.alice[key].matrix for key in keys]
    basis = _orbit_basis(np.asarray(st.state), operators, residual)
    adjoint = basis.conj().T

    invariance = max(
        op_norm(op @ basis - basis @ (adjoint @ op @ basis)) for op in operators
    )
    if invariance > max(tol, residual) * 10:
        raise OrbitClosureError(f"H_0 не инвариантно: невязка {invariance:.3g}")

    matrices = []
    well_defined = 0.0
    for i in range(sys.n):
        equations = [s for s, vs in enumerate(sys.supports) if i in vs]
        first = st.alice[(equations[0], i)].matrix
        matrices.append(adjoint @ first @ basis)
        for s in equations[1:]:
            other = st.alice[(s, i)].matrix
            well_defined = max(well_defined, op_norm((other - first) @ basis))
    solution = OperatorSolution.from_matrices(sys.p, matrices)
    logger.info("сужение на H_0 размерности %d", basis.shape[1])
    return Restriction(solution, basis, well_defined, invariance)


@strict
def operator_solution_to_tensor_strategy(
    sol: OperatorSolution, sys: LinearSystem
) -> Strategy:
    """
    Стратегия в тензорной модели по конечномерному решению.

    Состояние (1/√d) Σ_k |k⟩|k⟩, A_i^{(ℓ)} = A_i ⊗ I, B_j = I ⊗ A_j^T
    (транспонирование, а не эрмитово сопряжение).

    Args:
        sol (OperatorSolution): Решение размерности d.
        sys (LinearSystem): Система (задаёт пары (ℓ, i)).

    Returns:
        Strategy: Стратегия размерности d².
    """
    if len(sol.operators) != sys.n or sol.p != sys.p:
        raise DimensionMismatchError("решение не согласовано с системой")
    d = sol.dimension
    eye = np.eye(d)
    state = eye.reshape(d * d) / math.sqrt(d)
    left = [np.kron(op.matrix, eye) for op in sol.operators]
    alice = {(s, i): Observable(left[i], sys.p) for s, i in sys.pairs}
    bob = tuple(Observable(np.kron(eye, op.matrix.T), sys.p) for op in sol.operators)
    return Strategy(sys.p, state, alice, bob)


def permutation_matrix(perm: tuple[int, ...]) -> np.ndarray:
    """Матрица P с P|h⟩ = |perm(h)⟩."""
    size = len(perm)
    matrix = np.zeros((size, size))
    matrix[list(perm), list(range(size))] = 1.0
    return matrix


@strict
def regular_rep_strategy(
    table: CosetTable, pres: Presentation, sys: LinearSystem
) -> Strategy:
    """
    Стратегия регулярного представления конечной группы решений.

    A_i^{(ℓ)} - левое умножение на g_i, B_j - правое умножение на g_j,
    ψ = (1/√p) Σ_k ζ^{-k} |J^k⟩ (при p = 2 это (|e⟩ - |J⟩)/√2).

    Args:
        table (CosetTable): Завершённая таблица с J ≠ e.
        pres (Presentation): Копредставление группы решений.
        sys (LinearSystem): Система.

    Returns:
        Strategy: Стратегия размерности |Γ|.

    Raises:
        TrivialJError: J совпадает с единицей (J ≠ e необходимо для
            существования идеальной стратегии).
    """
    if not j_index(table).nontrivial:
        raise TrivialJError("J = e в группе решений: идеальной стратегии нет")
    if pres.n != sys.n or pres.p != sys.p or len(table.actions) != pres.generator_count:
        raise DimensionMismatchError("таблица, копредставление и система не согласованы")
    p = sys.p
    words = element_words(table)
    left = [
        Observable(permutation_matrix(left_action(table, i, words)), p)
        for i in range(1, sys.n + 1)
    ]
    bob = tuple(
        Observable(permutation_matrix(table.actions[j]), p)
        for j in range(1, sys.n + 1)
    )
    state = np.zeros(table.order, dtype=complex)
    element = table.identity
    for k in range(p):
        state[element] += zeta_power(p, -k) / math.sqrt(p)
        element = table.actions[J_ID][element]
    alice = {(s, i): left[i] for s, i in sys.pairs}
    logger.info("стратегия регулярного представления размерности %d", table.order)
    return Strategy(p, state, alice, bob)
