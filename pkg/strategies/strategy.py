"""
Модуль стратегий в модели коммутирующих операторов.

Стратегия - состояние ψ в пространстве размерности d, наблюдаемые Алисы
A_i^{(ℓ)} для каждого уравнения ℓ и i ∈ V_ℓ и наблюдаемые Боба B_j для
каждой переменной j. Нумерация уравнений и переменных - от нуля.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from types import MappingProxyType
from typing import Mapping

import numpy as np

from linsys import LinearSystem
from linsys.errors import (DimensionMismatchError, MissingOperatorError,
                           StrategyError)
from linsys.settings import TOL_PERFECT, TOL_STRUCTURAL
from linsys.strict import strict
from strategies.operators import (Observable, ResidualReport,
                                  commutator_norm, frozen, zeta_power)
from strategies.solutions import equation_product

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class Strategy:
    """
    Стратегия в модели коммутирующих операторов.

    Attributes:
        p (int): модуль.
        state (np.ndarray): вектор состояния единичной нормы длины d.
        alice (Mapping[tuple[int, int], Observable]): (ℓ, i) → A_i^{(ℓ)}.
        bob (tuple[Observable, ...]): B_j по переменным.
    """

    p: int
    state: np.ndarray
    alice: Mapping[tuple[int, int], Observable]
    bob: tuple[Observable, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "state", frozen(self.state))
        object.__setattr__(self, "alice", MappingProxyType(dict(self.alice)))
        object.__setattr__(self, "bob", tuple(self.bob))

    @property
    def dimension(self) -> int:
        """Размерность пространства."""
        return self.state.shape[0]


def validate_shapes(st: Strategy, sys: LinearSystem) -> None:
    """Проверяет наличие всех операторов и согласованность размеров."""
    if st.p != sys.p:
        raise DimensionMismatchError(f"модуль стратегии {st.p}, системы {sys.p}")
    if len(st.bob) != sys.n:
        raise DimensionMismatchError(
            f"операторов Боба {len(st.bob)}, переменных {sys.n}"
        )
    for s, t in sys.pairs:
        if (s, t) not in st.alice:
            raise MissingOperatorError(
                f"нет оператора Алисы для уравнения {s + 1}, переменной {t + 1}"
            )
    d = st.dimension
    if st.state.ndim != 1:
        raise DimensionMismatchError("состояние должно быть вектором")
    for op in (*st.alice.values(), *st.bob):
        if op.matrix.shape != (d, d):
            raise DimensionMismatchError(
                f"оператор размера {op.matrix.shape}, состояние длины {d}"
            )


@strict
def check_strategy(
    st: Strategy, sys: LinearSystem, tol: float = TOL_STRUCTURAL
) -> ResidualReport:
    """
    Проверяет корректность стратегии.

    Семейства отчёта: 'order' (унитарность и U^p = I для всех операторов),
    'alice_bob' (коммутаторы операторов Алисы и Боба), 'local'
    (коммутаторы операторов Алисы внутри уравнения). В notes записано
    отклонение нормы состояния от 1.

    Args:
        st (Strategy): Стратегия.
        sys (LinearSystem): Система.
        tol (float): Допуск.

    Returns:
        ResidualReport: Невязки; passed - все не больше tol.

    Raises:
        MissingOperatorError: Не задан оператор для (ℓ, i ∈ V_ℓ).
        DimensionMismatchError: Размеры не согласованы.
    """
    validate_shapes(st, sys)
    report = ResidualReport(tol)
    for (s, i), op in sorted(st.alice.items()):
        label = f"A{i + 1}^({s + 1})"
        report.add("order", label, max(op.unitarity_residual(), op.order_residual()))
    for j, op in enumerate(st.bob):
        report.add("order", f"B{j + 1}", max(op.unitarity_residual(), op.order_residual()))
    for (s, i), op in sorted(st.alice.items()):
        worst = max(commutator_norm(op.matrix, b.matrix) for b in st.bob)
        report.add("alice_bob", f"A{i + 1}^({s + 1})", worst)
    for s, vs in enumerate(sys.supports):
        for a, i in enumerate(vs):
            for j in vs[a + 1:]:
                report.add(
                    "local",
                    f"A{i + 1}^({s + 1}),A{j + 1}^({s + 1})",
                    commutator_norm(st.alice[(s, i)].matrix, st.alice[(s, j)].matrix),
                )
    report.notes["state_norm"] = abs(float(np.linalg.norm(st.state)) - 1.0)
    return report


@strict
def is_perfect(
    st: Strategy, sys: LinearSystem, tol: float = TOL_PERFECT
) -> ResidualReport:
    """
    Проверяет условия идеальности стратегии.

    Семейство 'consistency': ‖A_i^{(ℓ)}ψ - B_iψ‖ для всех ℓ и i ∈ V_ℓ;
    семейство 'constraint': ‖∏_{i∈V_ℓ} (A_i^{(ℓ)})^{M[ℓ][i]} ψ - ζ^{b_ℓ} ψ‖.

    Args:
        st (Strategy): Стратегия, прошедшая check_strategy.
        sys (LinearSystem): Система.
        tol (float): Допуск.

    Returns:
        ResidualReport: Невязки; passed - стратегия идеальна.
    """
    validate_shapes(st, sys)
    psi = st.state
    report = ResidualReport(tol)
    for s, t in sys.pairs:
        delta = st.alice[(s, t)].matrix @ psi - st.bob[t].matrix @ psi
        report.add("consistency", f"A{t + 1}^({s + 1})", float(np.linalg.norm(delta)))
    for s, vs in enumerate(sys.supports):
        matrices = {i: st.alice[(s, i)].matrix for i in vs}
        image = equation_product(matrices, sys, s) @ psi
        delta = image - zeta_power(sys.p, sys.rhs[s]) * psi
        report.add("constraint", f"eq{s + 1}", float(np.linalg.norm(delta)))
    logger.debug("идеальность: %s", report.maxima)
    return report


def require_perfect(st: Strategy, sys: LinearSystem, tol: float) -> None:
    """Бросает StrategyError, если стратегия не идеальна при допуске tol."""
    report = is_perfect(st, sys, tol)
    if not report.passed:
        raise StrategyError(f"стратегия не идеальна: {report.failures()}")
