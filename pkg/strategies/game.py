"""
Модуль значения игры линейной системы.

Алиса получает уравнение s и отвечает значениями переменных из V_s,
Боб получает переменную t ∈ V_s и отвечает её значением. Пара выигрывает,
если ответ Алисы удовлетворяет уравнению и согласован с ответом Боба.
Распределение входов равномерное на допустимых парах (s, t).
"""

from __future__ import annotations

import itertools
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from linsys import LinearSystem
from linsys.errors import DimensionMismatchError, EnumerationCapError
from linsys.settings import CAP_CLASSICAL
from linsys.strict import strict
from strategies.operators import Observable, zeta_power
from strategies.strategy import Strategy, validate_shapes

logger = logging.getLogger(__name__)

AliceTable = tuple[tuple[int, ...], ...]


@dataclass
class GameReport:
    """
    Итог вычисления значения игры.

    Attributes:
        pairs (dict[tuple[int, int], float]): вероятность выигрыша на паре
            (s, t), нумерация от нуля.
        value (float): среднее по парам.
        worst (tuple[int, int]): пара с наименьшей вероятностью.
        exact (Fraction | None): точное значение, если считалось точно.
    """

    pairs: dict[tuple[int, int], float]
    value: float
    worst: tuple[int, int]
    exact: Fraction | None = field(default=None)

    def to_dict(self) -> dict:
        """Словарь для машиночитаемого вывода (нумерация от 1)."""
        data = {
            "value": self.value,
            "worst": [self.worst[0] + 1, self.worst[1] + 1],
            "pairs": [
                {"equation": s + 1, "variable": t + 1, "probability": prob}
                for (s, t), prob in sorted(self.pairs.items())
            ],
        }
        if self.exact is not None:
            data["exact"] = str(self.exact)
        return data


def _satisfying(sys: LinearSystem, s: int) -> list[tuple[int, ...]]:
    """Удовлетворяющие уравнению s наборы значений переменных V_s."""
    vs = sys.supports[s]
    coeffs = [sys.matrix[s][i] for i in vs]
    return [
        a for a in itertools.product(range(sys.p), repeat=len(vs))
        if sum(c * v for c, v in zip(coeffs, a)) % sys.p == sys.rhs[s]
    ]


def _pair_probability(
    st: Strategy, sys: LinearSystem, s: int, t: int
) -> float:
    vs = sys.supports[s]
    position = vs.index(t)
    psi = st.state
    alice = [st.alice[(s, i)].projectors for i in vs]
    bob = st.bob[t].projectors
    total = 0.0
    for a in _satisfying(sys, s):
        phi = bob[a[position]] @ psi
        for projectors, value in zip(alice, a):
            phi = projectors[value] @ phi
        total += float(np.vdot(psi, phi).real)
    return total


@strict
def game_value(st: Strategy, sys: LinearSystem, workers: int = 1) -> GameReport:
    """
    Вычисляет вероятности выигрыша по правилу Борна.

    Исход Алисы на уравнении s задаётся совместными спектральными
    проекторами ∏_{i∈V_s} P_i(a_i), исход Боба - проекторами B_t.

    Args:
        st (Strategy): Стратегия, прошедшая check_strategy.
        sys (LinearSystem): Система.
        workers (int): Число потоков для параллельного счёта пар.

    Returns:
        GameReport: Вероятности по парам и среднее.
    """
    validate_shapes(st, sys)
    pairs = list(sys.pairs)
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            probs = list(pool.map(lambda pair: _pair_probability(st, sys, *pair), pairs))
    else:
        probs = [_pair_probability(st, sys, s, t) for s, t in pairs]
    table = dict(zip(pairs, probs))
    value = math.fsum(probs) / len(probs)
    worst = min(pairs, key=lambda pair: (table[pair], pair))
    exact = None
    if (tables := deterministic_tables(st, sys)) is not None:
        exact = deterministic_value(sys, *tables)
    return GameReport(table, value, worst, exact)


def strategy_space_size(sys: LinearSystem) -> int:
    """Число пар детерминированных стратегий (таблица Алисы, таблица Боба)."""
    alice = math.prod(sys.p ** (len(vs) - 1) for vs in sys.supports)
    return alice * sys.p**sys.n


def _classical_optimum(
    sys: LinearSystem, cap: int
) -> tuple[int, AliceTable, tuple[int, ...]]:
    size = strategy_space_size(sys)
    if size > cap:
        raise EnumerationCapError(
            f"пар детерминированных стратегий {size}, ограничение {cap}"
        )
    # лучший ответ Алисы зависит только от ответов Боба на V_s
    best_reply = []
    for s, vs in enumerate(sys.supports):
        options = _satisfying(sys, s)
        reply = {}
        for key in itertools.product(range(sys.p), repeat=len(vs)):
            reply[key] = max(
                (sum(x == y for x, y in zip(a, key)), a) for a in options
            )
        best_reply.append(reply)

    best = (-1, (), ())
    for y in itertools.product(range(sys.p), repeat=sys.n):
        score = 0
        for vs, reply in zip(sys.supports, best_reply):
            score += reply[tuple(y[i] for i in vs)][0]
        if score > best[0]:
            alice = tuple(
                reply[tuple(y[i] for i in vs)][1]
                for vs, reply in zip(sys.supports, best_reply)
            )
            best = (score, alice, y)
    return best


@strict
def classical_value(sys: LinearSystem, cap: int = CAP_CLASSICAL) -> Fraction:
    """
    Точное оптимальное значение по детерминированным стратегиям.

    Args:
        sys (LinearSystem): Система.
        cap (int): Ограничение на число пар детерминированных стратегий.

    Returns:
        Fraction: Максимальная вероятность выигрыша.

    Raises:
        EnumerationCapError: Перебор превышает cap.
    """
    score, _, _ = _classical_optimum(sys, cap)
    value = Fraction(score, len(sys.pairs))
    logger.info("классическое значение %s", value)
    return value


def best_classical_strategy(
    sys: LinearSystem, cap: int = CAP_CLASSICAL
) -> tuple[Fraction, AliceTable, tuple[int, ...]]:
    """
    Оптимальная детерминированная стратегия.

    Returns:
        tuple[Fraction, AliceTable, tuple[int, ...]]: Значение, ответы Алисы
        по уравнениям (значения переменных V_s) и ответы Боба.
    """
    score, alice, bob = _classical_optimum(sys, cap)
    return Fraction(score, len(sys.pairs)), alice, tuple(bob)


def _check_tables(sys: LinearSystem, alice: AliceTable, bob: tuple[int, ...]) -> None:
    if len(alice) != sys.m or len(bob) != sys.n:
        raise DimensionMismatchError("размеры таблиц не совпадают с системой")
    for vs, answer in zip(sys.supports, alice):
        if len(answer) != len(vs):
            raise DimensionMismatchError("ответ Алисы не совпадает с носителем")


def deterministic_value(
    sys: LinearSystem, alice: AliceTable, bob: tuple[int, ...]
) -> Fraction:
    """
    Точное значение детерминированной стратегии.

    Args:
        sys (LinearSystem): Система.
        alice (AliceTable): Для каждого уравнения значения переменных V_s.
        bob (tuple[int, ...]): Значение каждой переменной у Боба.

    Returns:
        Fraction: Доля выигрышных пар.
    """
    _check_tables(sys, alice, bob)
    wins = 0
    for s, (vs, answer) in enumerate(zip(sys.supports, alice)):
        coeffs = [sys.matrix[s][i] for i in vs]
        if sum(c * v for c, v in zip(coeffs, answer)) % sys.p != sys.rhs[s]:
            continue
        wins += sum(1 for i, v in zip(vs, answer) if bob[i] % sys.p == v % sys.p)
    return Fraction(wins, len(sys.pairs))


def deterministic_strategy(
    sys: LinearSystem, alice: AliceTable, bob: tuple[int, ...]
) -> Strategy:
    """
    Одномерная стратегия с операторами ζ^{ответ}.

    Args:
        sys (LinearSystem): Система.
        alice (AliceTable): Ответы Алисы по уравнениям.
        bob (tuple[int, ...]): Ответы Боба.

    Returns:
        Strategy: Стратегия размерности 1.
    """
    _check_tables(sys, alice, bob)
    p = sys.p

    def scalar(value: int) -> Observable:
        return Observable(np.array([[zeta_power(p, value)]]), p)

    alice_ops = {
        (s, i): scalar(v)
        for s, (vs, answer) in enumerate(zip(sys.supports, alice))
        for i, v in zip(vs, answer)
    }
    return Strategy(p, np.array([1.0]), alice_ops, tuple(scalar(v) for v in bob))


def classical_strategy(sys: LinearSystem, x: tuple[int, ...]) -> Strategy:
    """Одномерная стратегия, в которой оба игрока отвечают решением x."""
    alice = tuple(tuple(x[i] for i in vs) for vs in sys.supports)
    return deterministic_strategy(sys, alice, tuple(x))


def _scalar_answer(op: Observable, tol: float) -> int | None:
    value = complex(op.matrix[0, 0])
    for c in range(op.p):
        if abs(value - zeta_power(op.p, c)) <= tol:
            return c
    return None


def deterministic_tables(
    st: Strategy, sys: LinearSystem, tol: float = 1e-12
) -> tuple[AliceTable, tuple[int, ...]] | None:
    """
    Таблицы ответов одномерной стратегии, если все операторы - степени ζ.

    Returns:
        tuple[AliceTable, tuple[int, ...]] | None: Ответы Алисы и Боба или
        None, если стратегия не детерминированная.
    """
    if st.dimension != 1:
        return None
    bob = tuple(_scalar_answer(op, tol) for op in st.bob)
    alice = tuple(
        tuple(_scalar_answer(st.alice[(s, i)], tol) for i in vs)
        for s, vs in enumerate(sys.supports)
    )
    if None in bob or any(None in answer for answer in alice):
        return None
    return alice, bob
