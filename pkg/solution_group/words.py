"""
Модуль слов в свободном произведении циклических групп порядка p.

Буква слова - пара (номер образующей, показатель). Образующая J имеет
номер 0, образующая g_i - номер i. Обратные буквы не вводятся: обратный
к g^e элемент записывается как g^(p-e).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable

J_ID = 0

Letter = tuple[int, int]

_LETTER = re.compile(r"\s*(?:g(?P<gen>\d+)|(?P<j>J))(?:\^(?P<exp>-?\d+))?\s*")


def generator_name(gen: int) -> str:
    """Имя образующей: J для номера 0, иначе g<i>."""
    return "J" if gen == J_ID else f"g{gen}"


def _reduce(letters: Iterable[Letter], p: int) -> tuple[Letter, ...]:
    stack: list[Letter] = []
    for gen, exp in letters:
        exp %= p
        if not exp:
            continue
        if stack and stack[-1][0] == gen:
            merged = (stack.pop()[1] + exp) % p
            if merged:
                stack.append((gen, merged))
        else:
            stack.append((gen, exp))
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """
    Приведённое слово.

    При создании соседние буквы одной образующей сливаются, показатели
    берутся по модулю p, нулевые буквы удаляются.

    Attributes:
        letters (tuple[Letter, ...]): буквы (образующая, показатель 1..p-1).
        p (int): модуль показателей.
    """

    letters: tuple[Letter, ...]
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "letters", _reduce(self.letters, self.p))

    @classmethod
    def identity(cls, p: int) -> Word:
        """Пустое слово e."""
        return cls((), p)

    @classmethod
    def generator(cls, gen: int, p: int, exp: int = 1) -> Word:
        """Слово из одной буквы gen^exp."""
        return cls(((gen, exp),), p)

    def __len__(self) -> int:
        return len(self.letters)

    def __mul__(self, other: Word) -> Word:
        return Word(self.letters + other.letters, self.p)

    def __pow__(self, k: int) -> Word:
        if k < 0:
            return self.inverse() ** (-k)
        return Word(self.letters * k, self.p)

    def inverse(self) -> Word:
        """Обратное слово."""
        return Word(
            tuple((gen, self.p - exp) for gen, exp in reversed(self.letters)), self.p
        )

    def conjugate(self, by: Word) -> Word:
        """Сопряжение by · self · by⁻¹."""
        return by * self * by.inverse()

    def j_power(self) -> int | None:
        """Возвращает k, если слово равно J^k, иначе None."""
        if not self.letters:
            return 0
        if len(self.letters) == 1 and self.letters[0][0] == J_ID:
            return self.letters[0][1]
        return None

    def expanded(self) -> tuple[int, ...]:
        """Последовательность образующих, в которой g^e записано e раз."""
        return tuple(gen for gen, exp in self.letters for _ in range(exp))

    def __str__(self) -> str:
        return format_letters(self.letters)


def free_reduce(w: Word | Iterable[Letter], p: int) -> Word:
    """
    Приводит слово: сливает соседние буквы, берёт показатели по модулю p.

    Args:
        w (Word | Iterable[Letter]): Слово или последовательность букв.
        p (int): Модуль показателей.

    Returns:
        Word: Единственная приведённая форма.
    """
    letters = w.letters if isinstance(w, Word) else tuple(w)
    return Word(letters, p)


def format_letters(letters: Iterable[Letter]) -> str:
    """Записывает буквы как 'g1*g3^2*J'; пустое слово - 'e'."""
    parts = [
        generator_name(gen) if exp == 1 else f"{generator_name(gen)}^{exp}"
        for gen, exp in letters
    ]
    return "*".join(parts) if parts else "e"


def parse_letters(text: str) -> tuple[Letter, ...]:
    """
    Разбирает запись 'g1*g3^2*J' без приведения.

    Args:
        text (str): Запись слова; 'e' или пустая строка - пустое слово.

    Returns:
        tuple[Letter, ...]: Буквы в исходном порядке.

    Raises:
        ValueError: Если запись не распознана.
    """
    text = text.strip()
    if text in ("", "e"):
        return ()
    letters = []
    for part in text.split("*"):
        match = _LETTER.fullmatch(part)
        if not match:
            raise ValueError(f"не распознана буква {part!r}")
        gen = J_ID if match.group("j") else int(match.group("gen"))
        if match.group("gen") is not None and gen == 0:
            raise ValueError("образующие g нумеруются с 1")
        letters.append((gen, int(match.group("exp") or 1)))
    return tuple(letters)


def parse_word(text: str, p: int) -> Word:
    """Разбирает и приводит слово."""
    return Word(parse_letters(text), p)
