"""
Модуль перечисления смежных классов по тривиальной подгруппе.

Перечисление в стиле таблиц соотношений (Todd–Coxeter, HLT): живые
классы просматриваются по возрастанию номера, для каждого прослеживаются
все соотношения в порядке копредставления, недостающие рёбра
определяются новыми классами, совпадения сливаются через систему
непересекающихся множеств с немедленным распространением следствий.
Обратных столбцов нет: поскольку g^p входит в соотношения, g⁻¹ = g^(p-1).
"""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass

from linsys.errors import BudgetError, InconsistentVerdictError
from linsys.strict import strict
from solution_group.presentation import Presentation
from solution_group.words import J_ID, Word

logger = logging.getLogger(__name__)

UNDEFINED = -1


@dataclass(frozen=True)
class CosetTable:
    """
    Завершённая таблица: правое регулярное действие группы.

    Attributes:
        p (int): модуль.
        order (int): порядок группы N.
        actions (tuple[tuple[int, ...], ...]): actions[g][h] - номер h·g
            для образующей g (J имеет номер 0).
        identity (int): номер единицы.
        j_element (int): номер элемента J.
    """

    p: int
    order: int
    actions: tuple[tuple[int, ...], ...]
    identity: int
    j_element: int

    def trace(self, start: int, gens: tuple[int, ...]) -> int:
        """Применяет образующие по порядку справа, начиная с start."""
        for gen in gens:
            start = self.actions[gen][start]
        return start


@dataclass(frozen=True)
class Finite:
    """Перечисление завершилось."""

    table: CosetTable
    defined: int


@dataclass(frozen=True)
class OutOfBudget:
    """Число живых классов превысило предел."""

    live: int
    defined: int


@dataclass(frozen=True)
class JIndex:
    """Номер элемента J и признак J ≠ e."""

    index: int
    nontrivial: bool


class _Enumerator:
    """Таблица смежных классов в процессе перечисления."""

    def __init__(self, ngens: int, relators: list[tuple[int, ...]], limit: int):
        self.ngens = ngens
        self.relators = relators
        self.limit = limit
        self.labels: list[int] = []
        self.rows: list[list[int]] = []
        self.live = 0

    def find(self, c: int) -> int:
        labels = self.labels
        root = c
        while labels[root] != root:
            root = labels[root]
        while labels[c] != root:
            labels[c], c = root, labels[c]
        return root

    def define(self) -> int:
        c = len(self.labels)
        self.labels.append(c)
        self.rows.append([UNDEFINED] * self.ngens)
        self.live += 1
        return c

    def step(self, c: int, gen: int) -> int:
        c = self.find(c)
        row = self.rows[c]
        if row[gen] == UNDEFINED:
            row[gen] = self.define()
        return self.find(row[gen])

    def trace(self, c: int, rel: tuple[int, ...]) -> int:
        for gen in rel:
            c = self.step(c, gen)
        return c

    def coincidence(self, a: int, b: int) -> None:
        pending = [(a, b)]
        while pending:
            a, b = pending.pop()
            a, b = self.find(a), self.find(b)
            if a == b:
                continue
            a, b = min(a, b), max(a, b)
            self.labels[b] = a
            self.live -= 1
            row_a, row_b = self.rows[a], self.rows[b]
            for gen in range(self.ngens):
                if row_a[gen] == UNDEFINED:
                    row_a[gen] = row_b[gen]
                elif row_b[gen] != UNDEFINED:
                    pending.append((row_a[gen], row_b[gen]))

    def run(self) -> bool:
        self.define()
        cursor = 0
        while cursor < len(self.labels):
            if self.find(cursor) == cursor:
                for rel in self.relators:
                    self.coincidence(self.trace(cursor, rel), cursor)
                    if self.live > self.limit:
                        return False
                    if self.find(cursor) != cursor:
                        break
            cursor += 1
        return True

    def table(self, p: int) -> CosetTable:
        alive = [c for c in range(len(self.labels)) if self.find(c) == c]
        lookup = {c: i for i, c in enumerate(alive)}
        actions = []
        for gen in range(self.ngens):
            column = []
            for c in alive:
                target = self.rows[c][gen]
                if target == UNDEFINED:
                    raise InconsistentVerdictError(f"класс {c}: не определено действие {gen}")
                column.append(lookup[self.find(target)])
            actions.append(tuple(column))
        identity = lookup[self.find(0)]
        j_element = actions[J_ID][identity]
        return CosetTable(p, len(alive), tuple(actions), identity, j_element)


@strict
def coset_enumerate(pres: Presentation, limit: int) -> Finite | OutOfBudget:
    """
    Перечисляет элементы группы решений.

    Args:
        pres (Presentation): Копредставление.
        limit (int): Максимум живых классов.

    Returns:
        Finite | OutOfBudget: Таблица регулярного действия или отказ.

    Raises:
        BudgetError: Если limit < 1.
    """
    if limit < 1:
        raise BudgetError("предел числа классов должен быть не меньше 1")
    relators = [rel.expanded() for rel in pres.relators if rel.letters]
    enumerator = _Enumerator(pres.generator_count, relators, limit)
    if not enumerator.run():
        logger.info("перечисление остановлено: %d живых классов", enumerator.live)
        return OutOfBudget(enumerator.live, len(enumerator.labels))
    table = enumerator.table(pres.p)
    logger.info("перечисление завершено: порядок %d", table.order)
    return Finite(table, len(enumerator.labels))


def j_index(table: CosetTable) -> JIndex:
    """
    Возвращает номер J и признак того, что J отличен от единицы.

    Args:
        table (CosetTable): Завершённая таблица.

    Returns:
        JIndex: Номер элемента J и флаг J ≠ e.
    """
    return JIndex(table.j_element, table.j_element != table.identity)


def element_words(table: CosetTable) -> list[Word]:
    """
    Кратчайшие слова-представители элементов (обход в ширину).

    Args:
        table (CosetTable): Завершённая таблица.

    Returns:
        list[Word]: Слово для каждого номера элемента.
    """
    words: list[Word | None] = [None] * table.order
    words[table.identity] = Word.identity(table.p)
    queue = deque([table.identity])
    while queue:
        h = queue.popleft()
        for gen, action in enumerate(table.actions):
            target = action[h]
            if words[target] is None:
                words[target] = words[h] * Word.generator(gen, table.p)
                queue.append(target)
    return words


def right_action(table: CosetTable, gen: int) -> tuple[int, ...]:
    """Перестановка h ↦ h·gen."""
    return table.actions[gen]


def left_action(
    table: CosetTable, gen: int, words: list[Word] | None = None
) -> tuple[int, ...]:
    """
    Перестановка h ↦ gen·h.

    Args:
        table (CosetTable): Завершённая таблица.
        gen (int): Номер образующей.
        words (list[Word] | None): Представители из element_words.

    Returns:
        tuple[int, ...]: Образ каждого элемента.
    """
    words = element_words(table) if words is None else words
    start = table.actions[gen][table.identity]
    return tuple(table.trace(start, w.expanded()) for w in words)


def verify_table(pres: Presentation, table: CosetTable) -> list[str]:
    """
    Полная проверка завершённой таблицы.

    Проверяется, что каждая образующая действует биекцией порядка,
    делящего p, что каждое соотношение действует тождественно и что
    действие транзитивно от единицы.

    Args:
        pres (Presentation): Копредставление.
        table (CosetTable): Таблица.

    Returns:
        list[str]: Описания нарушений; пустой список - таблица корректна.
    """
    problems = []
    everything = tuple(range(table.order))
    for gen, action in enumerate(table.actions):
        if tuple(sorted(action)) != everything:
            problems.append(f"образующая {gen} действует не биекцией")
            continue
        if any(table.trace(h, (gen,) * pres.p) != h for h in everything):
            problems.append(f"порядок образующей {gen} не делит {pres.p}")
    for index, rel in enumerate(pres.relators):
        gens = rel.expanded()
        if any(table.trace(h, gens) != h for h in everything):
            problems.append(f"соотношение {index + 1} ({rel}) действует нетривиально")
    if any(w is None for w in element_words(table)):
        problems.append("действие не транзитивно")
    return problems
