"""
Командная строка linsys.

Подкоманды: analyze, check-strategy, group export|prove-j|enumerate,
classical, search-pauli. Коды выхода: 0 - команда завершена (с любым
вердиктом), 1 - ошибка входных данных, 2 - противоречивые выводы.
"""

import argparse
import json
import logging
from dataclasses import replace

from linsys.errors import (BudgetError, InconsistentVerdictError,
                           LinearSystemError, StrategyError)
from linsys.settings import Budgets, Tolerances
from cli.commands import (RunOptions, cmd_analyze, cmd_check_strategy,
                          cmd_classical, cmd_group, cmd_search_pauli)
from cli.verdict import AnalysisVerdict, CommutingStatus

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INCONSISTENT = 2

_BUDGET_FLAGS = {
    "budget_prove_j": "prove_j",
    "budget_cosets": "cosets",
    "budget_pauli_qubits": "pauli_qubits",
    "budget_pauli_nodes": "pauli_nodes",
    "budget_classical": "classical_cap",
}
_TOL_FLAGS = {
    "tol_structural": "structural",
    "tol_perfect": "perfect",
    "tol_permutation": "permutation",
    "tol_orbit": "orbit",
}


def build_parser() -> argparse.ArgumentParser:
    """Парсер аргументов со всеми подкомандами."""
    common = argparse.ArgumentParser(add_help=False)
    for flag in _BUDGET_FLAGS:
        common.add_argument("--" + flag.replace("_", "-"), dest=flag, type=int)
    for flag in _TOL_FLAGS:
        common.add_argument("--" + flag.replace("_", "-"), dest=flag, type=float)
    common.add_argument("--p", type=int, help="переопределить модуль системы")
    common.add_argument("--json", action="store_true", help="машиночитаемый вывод")
    common.add_argument("--out", help="каталог для артефактов")
    common.add_argument("--workers", type=int, default=1, help="потоки для значения игры")
    common.add_argument("-v", "--verbose", action="store_true", help="журнал DEBUG")

    parser = argparse.ArgumentParser(
        prog="linsys", description="Анализ игр линейных систем над Z_p"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", parents=[common], help="полный анализ")
    analyze.add_argument("system", help="файл системы или имя встроенного примера")

    check = sub.add_parser("check-strategy", parents=[common], help="проверка стратегии")
    check.add_argument("system")
    check.add_argument("strategy", help="файл стратегии или имя встроенной")

    group = sub.add_parser("group", parents=[common], help="группа решений")
    group.add_argument("action", choices=["export", "prove-j", "enumerate"])
    group.add_argument("system")

    classical = sub.add_parser("classical", parents=[common], help="классический путь")
    classical.add_argument("system")

    pauli = sub.add_parser("search-pauli", parents=[common], help="поиск решений Паули")
    pauli.add_argument("system")
    pauli.add_argument("--qubits", type=int, help="число кубитов")
    return parser


def options_from_args(args: argparse.Namespace) -> RunOptions:
    """Собирает RunOptions из флагов --budget-* и --tol-*."""
    budgets = replace(Budgets(), **{
        field: getattr(args, flag)
        for flag, field in _BUDGET_FLAGS.items()
        if getattr(args, flag) is not None
    })
    tolerances = replace(Tolerances(), **{
        field: getattr(args, flag)
        for flag, field in _TOL_FLAGS.items()
        if getattr(args, flag) is not None
    })
    return RunOptions(budgets, tolerances, args.p, args.out, args.workers)


def print_verdict(verdict: AnalysisVerdict) -> None:
    """Человекочитаемый вывод вердикта."""
    print(f"\n📄 Система: {verdict.system} (p = {verdict.p})")
    if verdict.classical_solvable:
        print("✅ Классическое решение существует")
    else:
        print("❌ Классического решения нет")
    value = "не вычислено" if verdict.classical_value is None else verdict.classical_value
    print(f"🎲 Классическое значение игры: {value}")
    if verdict.group_order is not None:
        j_state = "J ≠ e" if verdict.j_nontrivial else "J = e"
        print(f"🧮 Группа решений конечна: порядок {verdict.group_order}, {j_state}")
    else:
        print("🧮 Перечисление смежных классов не уложилось в бюджет")
    if verdict.finite_dim_dimension is not None:
        print(f"🔎 Найдено операторное решение размерности {verdict.finite_dim_dimension}")
    else:
        print("🔎 Конечномерное операторное решение в бюджете не найдено")
    messages = {
        CommutingStatus.PERFECT_STRATEGY: "🏆 Построена идеальная стратегия",
        CommutingStatus.J_TRIVIAL: (
            "🚫 J = e: идеальной стратегии коммутирующих операторов нет"
        ),
        CommutingStatus.UNDETERMINED: "❔ Вывод в пределах бюджетов не получен",
    }
    print(messages[verdict.commuting])
    for path in verdict.artifacts:
        print(f"📁 Записан файл: {path}")
    print()


def print_report(title: str, data: dict) -> None:
    """Краткий вывод словаря отчёта."""
    print(f"\n📊 {title}")
    for key, value in data.items():
        if key in ("text", "certificate", "pairs"):
            continue
        print(f"  {key}: {value}")
    if "text" in data:
        print(data["text"])
    print()


def run(args: argparse.Namespace) -> dict:
    """Выполняет подкоманду и печатает результат; возвращает данные."""
    options = options_from_args(args)
    if args.command == "analyze":
        verdict = cmd_analyze(args.system, options)
        data = verdict.to_dict()
        if not args.json:
            print_verdict(verdict)
    elif args.command == "check-strategy":
        data = cmd_check_strategy(args.system, args.strategy, options)
        if not args.json:
            print_report("Корректность", data["well_formed"])
            print_report("Идеальность", data["perfect"])
            print_report("Значение игры", data["game"])
    elif args.command == "group":
        data = cmd_group(args.system, args.action, options)
        if not args.json:
            print_report(f"Группа решений: {args.action}", data)
    elif args.command == "classical":
        data = cmd_classical(args.system, options)
        if not args.json:
            print_report("Классический путь", data)
    else:
        data = cmd_search_pauli(args.system, options, args.qubits)
        if not args.json:
            print_report("Поиск операторного решения", data)
    if args.json:
        print(json.dumps(data, indent=2, ensure_ascii=False))
    return data


def main(argv: list[str] | None = None) -> int:
    """
    Точка входа командной строки.

    Args:
        argv (list[str] | None): Аргументы; по умолчанию sys.argv.

    Returns:
        int: Код выхода.
    """
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        run(args)
    except InconsistentVerdictError as error:
        logger.error("противоречивые выводы: %s", error)
        print(f"\n💥 Противоречивые выводы: {error}\n")
        return EXIT_INCONSISTENT
    except (LinearSystemError, StrategyError, BudgetError, OSError, KeyError) as error:
        print(f"\n⚠️ Ошибка входных данных: {error}\n")
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
