"""
Модуль команд анализа линейных систем.

Каждая команда возвращает данные (вердикт или словарь отчёта) и не
печатает; вывод оформляет cli.main.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from linsys import (BUNDLED, LinearSystem, bundled_system, classical_solve,
                    load_system)
from linsys.errors import (EnumerationCapError, InconsistentVerdictError,
                           LinearSystemError)
from linsys.settings import Budgets, Tolerances
from solution_group import (Finite, Proved, RelatorKind, build_solution_group,
                            certificate_to_json, coset_enumerate,
                            format_presentation, j_index, prove_j_trivial,
                            verify_table)
from strategies import (BUNDLED_STRATEGIES, PauliSearchResult,
                        best_classical_strategy, bundled_strategy,
                        check_strategy, classical_value, clock_shift_search,
                        game_value, is_perfect, load_strategy,
                        operator_solution_to_tensor_strategy,
                        pauli_opsol_search, regular_rep_strategy,
                        solution_to_json, solution_to_representation_check,
                        strategy_to_json, tensor_labels)
from cli.artifacts import save_artifacts
from cli.verdict import (AnalysisVerdict, FiniteDimStatus, GroupStatus,
                         JSearchStatus)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunOptions:
    """
    Общие параметры команд.

    Attributes:
        budgets (Budgets): бюджеты процедур.
        tolerances (Tolerances): допуски проверок.
        p (int | None): переопределение модуля системы.
        out (str | None): каталог для артефактов.
        workers (int): число потоков для значения игры.
    """

    budgets: Budgets = field(default_factory=Budgets)
    tolerances: Tolerances = field(default_factory=Tolerances)
    p: int | None = None
    out: str | None = None
    workers: int = 1


def read_system(source: str, p: int | None = None) -> LinearSystem:
    """
    Загружает систему из файла или встроенного примера по имени.

    При заданном p коэффициенты переводятся в Z_p и система проверяется
    заново.
    """
    if not Path(source).exists() and source in BUNDLED:
        sys = bundled_system(source)
    else:
        sys = load_system(source)
    if p is None or p == sys.p:
        return sys
    return LinearSystem(
        p,
        [[c % p for c in row] for row in sys.matrix],
        [b % p for b in sys.rhs],
    )


def _finite_dim_search(
    sys: LinearSystem, budgets: Budgets
) -> PauliSearchResult:
    """Поиск по числу кубитов от 0 до бюджета; при p ≠ 2 - кудит clock/shift."""
    if sys.p != 2:
        return clock_shift_search(sys, budgets.pauli_nodes)
    result = None
    for qubits in range(budgets.pauli_qubits + 1):
        result = pauli_opsol_search(sys, qubits, budgets.pauli_nodes)
        if result.found:
            break
    return result


def cmd_analyze(source: str, options: RunOptions = RunOptions()) -> AnalysisVerdict:
    """
    Полный анализ: классический путь, группа решений, операторные решения.

    Args:
        source (str): Путь к файлу системы или имя встроенного примера.
        options (RunOptions): Бюджеты, допуски, каталог артефактов.

    Returns:
        AnalysisVerdict: Согласованный вердикт.

    Raises:
        LinearSystemError: Файл некорректен.
        InconsistentVerdictError: Выводы противоречат друг другу.
    """
    budgets, tols = options.budgets, options.tolerances
    sys = read_system(source, options.p)
    files: dict[str, str] = {}
    details: dict = {}

    solution = classical_solve(sys)
    try:
        value = classical_value(sys, budgets.classical_cap)
    except EnumerationCapError as error:
        logger.warning("классическое значение не вычислено: %s", error)
        value = None

    pres = build_solution_group(sys)
    files["presentation.txt"] = format_presentation(pres)

    search = prove_j_trivial(pres, budgets.prove_j)
    details["prove_j_nodes"] = search.nodes
    if isinstance(search, Proved):
        j_status = JSearchStatus.PROVED
        files["certificate.json"] = certificate_to_json(search.certificate, pres)
        details["certificate_steps"] = len(search.certificate.steps)
    else:
        j_status = JSearchStatus.INCONCLUSIVE

    enumeration = coset_enumerate(pres, budgets.cosets)
    order = j_nontrivial = regular_perfect = None
    if isinstance(enumeration, Finite):
        group = GroupStatus.FINITE
        table = enumeration.table
        order = table.order
        j_nontrivial = j_index(table).nontrivial
        problems = verify_table(pres, table)
        if problems:
            raise InconsistentVerdictError(
                f"таблица смежных классов некорректна: {problems}"
            )
        if j_nontrivial:
            strategy = regular_rep_strategy(table, pres, sys)
            report = is_perfect(strategy, sys, tols.permutation)
            regular_perfect = report.passed
            details["regular_residual"] = max(report.maxima.values(), default=0.0)
            if strategy.dimension <= 64:
                files["regular_strategy.json"] = strategy_to_json(strategy, sys)
    else:
        group = GroupStatus.OUT_OF_BUDGET
        details["cosets_live"] = enumeration.live

    found = _finite_dim_search(sys, budgets)
    details["finite_dim_search"] = found.to_dict()
    tensor_perfect = dimension = None
    finite_dim = FiniteDimStatus.NONE_WITHIN_BUDGET
    if found.found:
        finite_dim = FiniteDimStatus.FOUND
        dimension = found.solution.dimension
        tensor = operator_solution_to_tensor_strategy(found.solution, sys)
        tensor_perfect = is_perfect(tensor, sys, tols.perfect).passed
        labels = found.labels if sys.p == 2 else None
        files["solution.json"] = solution_to_json(found.solution, sys, labels)
        if labels is not None:
            alice, bob = tensor_labels(labels)
            alice_map = {(s, i): alice[i] for s, i in sys.pairs}
            files["tensor_strategy.json"] = strategy_to_json(tensor, sys, alice_map, bob)
        else:
            files["tensor_strategy.json"] = strategy_to_json(tensor, sys)

    verdict = AnalysisVerdict(
        system=source,
        p=sys.p,
        classical_solvable=solution is not None,
        classical_value=value,
        finite_dim=finite_dim,
        finite_dim_dimension=dimension,
        tensor_perfect=tensor_perfect,
        j_search=j_status,
        group=group,
        group_order=order,
        j_nontrivial=j_nontrivial,
        regular_perfect=regular_perfect,
        details=details,
    ).conclude()
    if options.out is not None:
        files["verdict.json"] = json.dumps(verdict.to_dict(), indent=2) + "\n"
        verdict.artifacts = save_artifacts(options.out, files)
    return verdict


def cmd_check_strategy(
    source: str, strategy_path: str, options: RunOptions = RunOptions()
) -> dict:
    """
    Проверяет стратегию из файла: корректность, идеальность и значение игры.

    Args:
        source (str): Система (файл или имя встроенного примера).
        strategy_path (str): Файл стратегии в формате linsys-strategy/1
            или имя встроенной стратегии.
        options (RunOptions): Допуски и число потоков.

    Returns:
        dict: Отчёты 'well_formed', 'perfect' и 'game'.

    Raises:
        StrategyError: Файл стратегии некорректен или размеры не согласованы.
    """
    tols = options.tolerances
    sys = read_system(source, options.p)
    if not Path(strategy_path).exists() and strategy_path in BUNDLED_STRATEGIES:
        strategy = bundled_strategy(strategy_path, sys)
    else:
        strategy = load_strategy(strategy_path, sys)
    well_formed = check_strategy(strategy, sys, tols.structural)
    perfect = is_perfect(strategy, sys, tols.perfect)
    game = game_value(strategy, sys, options.workers)
    return {
        "well_formed": well_formed.to_dict(),
        "perfect": perfect.to_dict(),
        "game": game.to_dict(),
    }


def cmd_group(
    source: str, action: str, options: RunOptions = RunOptions()
) -> dict:
    """
    Операции с группой решений: export, prove-j, enumerate.

    Args:
        source (str): Система (файл или имя встроенного примера).
        action (str): 'export', 'prove-j' или 'enumerate'.
        options (RunOptions): Бюджеты и каталог артефактов.

    Returns:
        dict: Результат операции и пути записанных файлов.
    """
    budgets = options.budgets
    sys = read_system(source, options.p)
    pres = build_solution_group(sys)
    files: dict[str, str] = {}
    if action == "export":
        text = format_presentation(pres)
        files["presentation.txt"] = text
        result = {
            "relators": len(pres.relators),
            "counts": {kind.value: pres.count(kind) for kind in RelatorKind},
            "text": text,
        }
    elif action == "prove-j":
        search = prove_j_trivial(pres, budgets.prove_j)
        result = {"status": "proved" if isinstance(search, Proved) else "inconclusive",
                  "nodes": search.nodes}
        if isinstance(search, Proved):
            files["certificate.json"] = certificate_to_json(search.certificate, pres)
            result["certificate"] = json.loads(files["certificate.json"])
    elif action == "enumerate":
        enumeration = coset_enumerate(pres, budgets.cosets)
        if isinstance(enumeration, Finite):
            result = {
                "status": "finite",
                "order": enumeration.table.order,
                "j_nontrivial": j_index(enumeration.table).nontrivial,
                "problems": verify_table(pres, enumeration.table),
            }
        else:
            result = {"status": "out_of_budget", "live": enumeration.live}
    else:
        raise LinearSystemError(f"неизвестная операция с группой {action!r}")
    result["artifacts"] = save_artifacts(options.out, files)
    return result


def cmd_classical(source: str, options: RunOptions = RunOptions()) -> dict:
    """
    Классический путь: решение системы и оптимальная классическая стратегия.

    Returns:
        dict: 'solvable', 'assignment', 'value' и лучшие таблицы ответов
        (нумерация от 1) или 'value': None при превышении ограничения.
    """
    sys = read_system(source, options.p)
    solution = classical_solve(sys)
    result = {
        "solvable": solution is not None,
        "assignment": list(solution) if solution is not None else None,
    }
    try:
        value, alice, bob = best_classical_strategy(sys, options.budgets.classical_cap)
    except EnumerationCapError as error:
        result.update(value=None, refused=str(error))
        return result
    result.update(
        value=str(value),
        alice={str(s + 1): list(answer) for s, answer in enumerate(alice)},
        bob=list(bob),
    )
    return result


def cmd_search_pauli(
    source: str, options: RunOptions = RunOptions(), qubits: int | None = None
) -> dict:
    """
    Поиск конечномерного операторного решения.

    При p = 2 перебираются операторы Паули на qubits кубитах (по
    умолчанию - бюджет из options), при p ≠ 2 - операторы clock/shift.

    Returns:
        dict: Итог поиска, проверка представления и пути артефактов.
    """
    budgets = options.budgets
    sys = read_system(source, options.p)
    if sys.p == 2:
        count = budgets.pauli_qubits if qubits is None else qubits
        found = pauli_opsol_search(sys, count, budgets.pauli_nodes)
    else:
        found = clock_shift_search(sys, budgets.pauli_nodes)
    result = found.to_dict()
    files: dict[str, str] = {}
    if found.found:
        pres = build_solution_group(sys)
        check = solution_to_representation_check(
            found.solution, pres, options.tolerances.structural
        )
        result["dimension"] = found.solution.dimension
        result["representation"] = check.to_dict()
        labels = found.labels if sys.p == 2 else None
        files["solution.json"] = solution_to_json(found.solution, sys, labels)
    result["artifacts"] = save_artifacts(options.out, files)
    return result
