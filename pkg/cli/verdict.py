"""
Модуль итогового вердикта анализа линейной системы.

Вердикт сводит результаты классического, конечномерного и
операторного путей и проверяет их взаимную согласованность: тривиальность
J исключает и классическое решение, и конечномерное операторное решение,
и идеальную стратегию.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from linsys.errors import InconsistentVerdictError


class FiniteDimStatus(Enum):
    """Итог поиска конечномерного операторного решения."""

    FOUND = "solution_found"
    NONE_WITHIN_BUDGET = "none_within_budget"


class JSearchStatus(Enum):
    """Итог поиска доказательства J = e."""

    PROVED = "proved"
    INCONCLUSIVE = "inconclusive"


class GroupStatus(Enum):
    """Итог перечисления смежных классов."""

    FINITE = "finite"
    OUT_OF_BUDGET = "out_of_budget"


class CommutingStatus(Enum):
    """Вывод о существовании идеальной стратегии коммутирующих операторов."""

    PERFECT_STRATEGY = "perfect_strategy_constructed"
    J_TRIVIAL = "j_trivial_no_perfect_strategy"
    UNDETERMINED = "undetermined_within_budgets"


@dataclass
class AnalysisVerdict:
    """
    Итог команды analyze.

    Attributes:
        system (str): источник системы.
        p (int): модуль.
        classical_solvable (bool): найдено классическое решение.
        classical_value (Fraction | None): классическое значение игры или
            None, если перебор превысил ограничение.
        finite_dim (FiniteDimStatus): итог поиска операторного решения.
        finite_dim_dimension (int | None): размерность найденного решения.
        tensor_perfect (bool | None): тензорная стратегия прошла is_perfect.
        j_search (JSearchStatus): итог поиска сертификата J = e.
        group (GroupStatus): итог перечисления смежных классов.
        group_order (int | None): порядок группы решений.
        j_nontrivial (bool | None): J ≠ e по таблице смежных классов.
        regular_perfect (bool | None): стратегия регулярного
            представления прошла is_perfect.
        commuting (CommutingStatus): вывод об идеальной стратегии.
        artifacts (list[str]): пути к записанным файлам.
        details (dict): сопутствующие числа (узлы, невязки).
    """

    system: str
    p: int
    classical_solvable: bool
    classical_value: Fraction | None
    finite_dim: FiniteDimStatus
    finite_dim_dimension: int | None
    tensor_perfect: bool | None
    j_search: JSearchStatus
    group: GroupStatus
    group_order: int | None
    j_nontrivial: bool | None
    regular_perfect: bool | None
    commuting: CommutingStatus = CommutingStatus.UNDETERMINED
    artifacts: list[str] = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def conclude(self) -> AnalysisVerdict:
        """Выводит commuting из остальных полей и проверяет согласованность."""
        j_trivial = self.j_search is JSearchStatus.PROVED or self.j_nontrivial is False
        perfect = bool(self.regular_perfect or self.tensor_perfect or self.classical_solvable)
        if j_trivial:
            self.commuting = CommutingStatus.J_TRIVIAL
        elif perfect:
            self.commuting = CommutingStatus.PERFECT_STRATEGY
        else:
            self.commuting = CommutingStatus.UNDETERMINED
        self.validate()
        return self

    def contradictions(self) -> list[str]:
        """Список взаимоисключающих пар выводов."""
        out = []
        j_trivial = self.j_search is JSearchStatus.PROVED or self.j_nontrivial is False
        if j_trivial:
            if self.classical_solvable:
                out.append("J = e, но система решается классически")
            if self.finite_dim is FiniteDimStatus.FOUND:
                out.append("J = e, но найдено конечномерное операторное решение")
            if self.regular_perfect or self.tensor_perfect:
                out.append("J = e, но построена идеальная стратегия")
        if self.j_search is JSearchStatus.PROVED and self.j_nontrivial:
            out.append("сертификат J = e противоречит таблице смежных классов")
        if self.classical_value is not None:
            if (self.classical_value == 1) != self.classical_solvable:
                out.append("классическое значение не согласовано с решением системы")
        if self.finite_dim is FiniteDimStatus.FOUND and self.tensor_perfect is False:
            out.append("тензорная стратегия по найденному решению не идеальна")
        if self.regular_perfect is False:
            out.append("стратегия регулярного представления не идеальна")
        return out

    def validate(self) -> None:
        """
        Проверяет согласованность вердикта.

        Raises:
            InconsistentVerdictError: Выводы противоречат друг другу.
        """
        problems = self.contradictions()
        if problems:
            raise InconsistentVerdictError("; ".join(problems))

    def to_dict(self) -> dict:
        """Машиночитаемое представление."""
        return {
            "system": self.system,
            "p": self.p,
            "classical": {
                "solvable": self.classical_solvable,
                "value": None if self.classical_value is None else str(self.classical_value),
            },
            "finite_dim": {
                "status": self.finite_dim.value,
                "dimension": self.finite_dim_dimension,
                "tensor_perfect": self.tensor_perfect,
            },
            "group": {
                "status": self.group.value,
                "order": self.group_order,
                "j_nontrivial": self.j_nontrivial,
                "regular_perfect": self.regular_perfect,
            },
            "j_search": self.j_search.value,
            "commuting": self.commuting.value,
            "artifacts": list(self.artifacts),
            "details": self.details,
        }
