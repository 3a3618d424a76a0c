"""
Модуль копредставления группы решений линейной системы.

Образующие g_1..g_n и центральный элемент J; соотношения четырёх видов:
порядок (g_i^p, J^p), центральность J, локальная совместимость и
выполнение ограничений.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from enum import Enum
from itertools import combinations

from linsys import LinearSystem
from linsys.strict import strict
from solution_group.words import (J_ID, Letter, Word, format_letters,
                                  generator_name, parse_letters)

logger = logging.getLogger(__name__)


class RelatorKind(Enum):
    """Вид соотношения."""

    ORDER = "order"
    CENTRAL = "central"
    LOCAL = "local"
    CONSTRAINT = "constraint"
    OTHER = "other"


@dataclass(frozen=True)
class Relator:
    """
    Соотношение копредставления.

    Attributes:
        kind (RelatorKind): вид соотношения.
        letters (tuple[Letter, ...]): исходные буквы без приведения;
            для соотношений порядка это одна буква с показателем p.
        p (int): модуль.
    """

    kind: RelatorKind
    letters: tuple[Letter, ...]
    p: int

    @property
    def word(self) -> Word:
        """Приведённое слово; для соотношений порядка оно пустое."""
        return Word(self.letters, self.p)

    def expanded(self) -> tuple[int, ...]:
        """Образующие подряд, g^e записано e раз (для перечисления)."""
        return tuple(gen for gen, exp in self.letters for _ in range(exp))

    def __str__(self) -> str:
        return format_letters(self.letters)


@dataclass(frozen=True)
class Presentation:
    """
    Конечное копредставление группы решений.

    Attributes:
        p (int): модуль.
        n (int): число переменных (образующих g_i).
        relators (tuple[Relator, ...]): соотношения в фиксированном порядке.
    """

    p: int
    n: int
    relators: tuple[Relator, ...]

    @property
    def generator_count(self) -> int:
        """Число образующих, включая J."""
        return self.n + 1

    @property
    def generators(self) -> tuple[int, ...]:
        """Номера образующих по возрастанию: J, g1, ..., gn."""
        return tuple(range(self.n + 1))

    def count(self, kind: RelatorKind) -> int:
        """Число соотношений данного вида."""
        return sum(1 for rel in self.relators if rel.kind is kind)


def _commutator(a: int, b: int, p: int) -> tuple[Letter, ...]:
    return ((a, 1), (b, 1), (a, p - 1), (b, p - 1))


@strict
def build_solution_group(sys: LinearSystem) -> Presentation:
    """
    Строит копредставление группы решений системы.

    Порядок соотношений: g_i^p и J^p; [g_i, J]; [g_i, g_j] для пар из общего
    носителя (каждая пара один раз, лексикографически); по уравнению
    (∏_{k∈V_ℓ} g_k^{M[ℓ][k]})·J^{-b_ℓ} с возрастающими k.

    Args:
        sys (LinearSystem): Система.

    Returns:
        Presentation: Копредставление с n + 1 образующими.
    """
    p, n = sys.p, sys.n
    relators = [Relator(RelatorKind.ORDER, ((i, p),), p) for i in range(1, n + 1)]
    relators.append(Relator(RelatorKind.ORDER, ((J_ID, p),), p))
    relators += [
        Relator(RelatorKind.CENTRAL, _commutator(i, J_ID, p), p)
        for i in range(1, n + 1)
    ]
    pairs = sorted(
        {(i + 1, j + 1) for vs in sys.supports for i, j in combinations(vs, 2)}
    )
    relators += [Relator(RelatorKind.LOCAL, _commutator(i, j, p), p) for i, j in pairs]
    for row, b, vs in zip(sys.matrix, sys.rhs, sys.supports):
        letters = tuple((k + 1, row[k]) for k in vs)
        if b:
            letters += ((J_ID, (-b) % p),)
        relators.append(Relator(RelatorKind.CONSTRAINT, letters, p))
    pres = Presentation(p, n, tuple(relators))
    logger.debug(
        "группа решений: %d образующих, %d соотношений", n + 1, len(relators)
    )
    return pres


def format_presentation(pres: Presentation) -> str:
    """
    Записывает копредставление в текстовом виде.

    Первые строки - '# p <p>' и '# generators g1 ... J', далее по одному
    соотношению в строке с видом в комментарии.

    Args:
        pres (Presentation): Копредставление.

    Returns:
        str: Текст для сторонних систем компьютерной алгебры.
    """
    names = " ".join(generator_name(g) for g in (*range(1, pres.n + 1), J_ID))
    out = [f"# p {pres.p}", f"# generators {names}"]
    out += [f"{rel}  # {rel.kind.value}" for rel in pres.relators]
    return "\n".join(out) + "\n"


def parse_presentation(text: str) -> Presentation:
    """
    Разбирает текст, записанный format_presentation.

    Args:
        text (str): Текст копредставления.

    Returns:
        Presentation: Копредставление; вид соотношения берётся из
        комментария, без комментария - OTHER.

    Raises:
        ValueError: Нет заголовков или соотношение не распознано.
    """
    p = n = None
    relators = []
    for line in text.splitlines():
        body, _, comment = line.partition("#")
        comment = comment.strip()
        if not body.strip():
            if match := re.fullmatch(r"p\s+(\d+)", comment):
                p = int(match.group(1))
            elif comment.startswith("generators"):
                n = len(comment.split()) - 2
            continue
        if p is None or n is None:
            raise ValueError("заголовки '# p' и '# generators' обязательны")
        try:
            kind = RelatorKind(comment)
        except ValueError:
            kind = RelatorKind.OTHER
        letters = parse_letters(body)
        if any(gen > n for gen, _ in letters):
            raise ValueError(f"образующая вне g1..g{n}: {body.strip()}")
        relators.append(Relator(kind, letters, p))
    if p is None or n is None:
        raise ValueError("заголовки '# p' и '# generators' обязательны")
    return Presentation(p, n, tuple(relators))
