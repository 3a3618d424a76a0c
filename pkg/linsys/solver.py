"""
Модуль классического решения систем над Z_p.

Метод Гаусса–Жордана в точной модульной арифметике и переборный
оракул для проверки на малых системах.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterator

from linsys.errors import EnumerationCapError
from linsys.settings import CAP_BRUTE_FORCE
from linsys.strict import strict
from linsys.system import Assignment, LinearSystem

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveResult:
    """
    Итог исключения Гаусса.

    Attributes:
        assignment (Assignment | None): решение или None для несовместной.
        rank (int): ранг матрицы M.
        free (int): число свободных переменных.
    """

    assignment: Assignment | None
    rank: int
    free: int


@strict
def solve_details(sys: LinearSystem) -> SolveResult:
    """
    Решает Mx = b над Z_p методом Гаусса–Жордана.

    Свободным переменным присваивается 0.

    Args:
        sys (LinearSystem): Система.

    Returns:
        SolveResult: Решение (или None), ранг и число свободных переменных.
    """
    p, n = sys.p, sys.n
    rows = [list(row) + [b] for row, b in zip(sys.matrix, sys.rhs)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = pow(rows[r][col], -1, p)
        rows[r] = [(v * inv) % p for v in rows[r]]
        for i, row in enumerate(rows):
            if i != r and row[col]:
                factor = row[col]
                rows[i] = [(a - factor * b) % p for a, b in zip(row, rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break

    rank = len(pivots)
    if any(not any(row[:n]) and row[n] for row in rows):
        logger.debug("система несовместна, ранг %d", rank)
        return SolveResult(None, rank, n - rank)

    x = [0] * n
    for i, col in enumerate(pivots):
        x[col] = rows[i][n]
    return SolveResult(tuple(x), rank, n - rank)


@strict
def classical_solve(sys: LinearSystem) -> Assignment | None:
    """
    Возвращает решение системы или None, если она несовместна.

    Args:
        sys (LinearSystem): Система.

    Returns:
        Assignment | None: Решение, удовлетворяющее каждому уравнению.
    """
    return solve_details(sys).assignment


def satisfies(sys: LinearSystem, x: Assignment) -> bool:
    """Проверяет M·x ≡ b (mod p) прямой подстановкой."""
    if len(x) != sys.n:
        return False
    return all(
        sum(c * v for c, v in zip(row, x)) % sys.p == b
        for row, b in zip(sys.matrix, sys.rhs)
    )


def brute_force_solutions(
    sys: LinearSystem, cap: int = CAP_BRUTE_FORCE
) -> Iterator[Assignment]:
    """
    Перебирает все решения системы.

    Args:
        sys (LinearSystem): Система.
        cap (int): Максимум p^n перебираемых векторов.

    Yields:
        Assignment: Очередное решение.

    Raises:
        EnumerationCapError: Если p^n больше cap.
    """
    if sys.p**sys.n > cap:
        raise EnumerationCapError(f"перебор {sys.p}^{sys.n} превышает {cap}")
    for x in itertools.product(range(sys.p), repeat=sys.n):
        if satisfies(sys, x):
            yield x
