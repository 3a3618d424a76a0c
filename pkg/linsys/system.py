"""
Модуль линейных систем Mx = b над полем Z_p.

Содержит:
- тип LinearSystem с проверкой корректности при создании,
- разбор и каноническую запись текстового формата,
- носители уравнений (Support) и загрузку встроенных примеров.
"""

from __future__ import annotations

import hashlib
import logging
import re
from dataclasses import dataclass
from functools import cached_property
from importlib import resources
from pathlib import Path

from sympy import isprime

from linsys.errors import (EmptyEquationError, EntryOutOfRangeError,
                           IndexOutOfRangeError, LinearSystemError,
                           NonPrimeModulusError, OrphanVariableError,
                           SystemSyntaxError)
from linsys.strict import strict

logger = logging.getLogger(__name__)

Assignment = tuple[int, ...]

BUNDLED = (
    "magic_square",
    "inconsistent_pair",
    "single_equation_z2",
    "single_equation_z3",
)

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|x(?P<var>\d+)|(?P<op>[+=])|(?P<bad>\S))")


@dataclass(frozen=True)
class LinearSystem:
    """
    Линейная система Mx = b над Z_p.

    Attributes:
        p (int): простой модуль.
        matrix (tuple[tuple[int, ...], ...]): матрица M размера m×n.
        rhs (tuple[int, ...]): правая часть b длины m.
    """

    p: int
    matrix: tuple[tuple[int, ...], ...]
    rhs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        object.__setattr__(self, "rhs", tuple(self.rhs))
        if self.p < 2 or not isprime(self.p):
            raise NonPrimeModulusError(f"модуль {self.p} не простой")
        if not self.matrix:
            raise LinearSystemError("система без уравнений")
        if len(self.rhs) != len(self.matrix):
            raise LinearSystemError("длина b не совпадает с числом уравнений")
        width = len(self.matrix[0])
        if width == 0 or any(len(row) != width for row in self.matrix):
            raise LinearSystemError("строки M разной длины или пусты")
        for ell, row in enumerate(self.matrix):
            for value in (*row, self.rhs[ell]):
                if not 0 <= value < self.p:
                    raise EntryOutOfRangeError(
                        f"уравнение {ell + 1}: значение {value} вне 0..{self.p - 1}"
                    )
            if not any(row):
                raise EmptyEquationError(f"уравнение {ell + 1} пустое")
        for k in range(width):
            if not any(row[k] for row in self.matrix):
                raise OrphanVariableError(f"переменная x{k + 1} не входит в уравнения")

    @property
    def m(self) -> int:
        """Число уравнений."""
        return len(self.matrix)

    @property
    def n(self) -> int:
        """Число переменных."""
        return len(self.matrix[0])

    @cached_property
    def supports(self) -> tuple[tuple[int, ...], ...]:
        """Носители V_ℓ с нумерацией от нуля, по возрастанию."""
        return tuple(
            tuple(k for k, c in enumerate(row) if c) for row in self.matrix
        )

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Допустимые пары входов (s, t) с M[s][t] ≠ 0, от нуля."""
        return tuple((s, t) for s, vs in enumerate(self.supports) for t in vs)

    @cached_property
    def neighbours(self) -> tuple[frozenset[int], ...]:
        """Для каждой переменной: переменные, встречающиеся с ней в уравнении."""
        result = [set() for _ in range(self.n)]
        for vs in self.supports:
            for i in vs:
                result[i].update(j for j in vs if j != i)
        return tuple(frozenset(s) for s in result)


@dataclass(frozen=True)
class Support:
    """
    Носитель уравнения в нумерации файла (от 1).

    Attributes:
        equation (int): номер уравнения ℓ.
        variables (tuple[int, ...]): возрастающие номера k с M[ℓ][k] ≠ 0.
    """

    equation: int
    variables: tuple[int, ...]


@strict
def support(sys: LinearSystem, ell: int) -> Support:
    """
    Возвращает носитель уравнения с номером ell.

    Args:
        sys (LinearSystem): Система.
        ell (int): Номер уравнения, от 1 до m.

    Returns:
        Support: Номера переменных уравнения по возрастанию.

    Raises:
        IndexOutOfRangeError: Если ell вне 1..m.
    """
    if not 1 <= ell <= sys.m:
        raise IndexOutOfRangeError(f"уравнение {ell} вне диапазона 1..{sys.m}")
    return Support(ell, tuple(k + 1 for k in sys.supports[ell - 1]))


def _parse_header(
    line: str, keyword: str, number: int
) -> int:
    match = re.fullmatch(rf"\s*{keyword}\s+(\d+)\s*", line)
    if not match:
        column = len(line) - len(line.lstrip()) + 1
        raise SystemSyntaxError(f"ожидалось '{keyword} <число>'", number, column)
    return int(match.group(1))


def _parse_equation(
    line: str, number: int, p: int, n: int
) -> tuple[list[int], int]:
    """
    Разбирает строку уравнения '<c> x<k> + ... = <rhs>'.

    Args:
        line (str): Строка без комментария.
        number (int): Номер строки для сообщений.
        p (int): Модуль.
        n (int): Число переменных.

    Returns:
        tuple[list[int], int]: Строка коэффициентов и правая часть.
    """
    tokens = []
    pos = 0
    while pos < len(line.rstrip()):
        match = _TOKEN.match(line, pos)
        column = match.start(match.lastgroup) + 1
        if match.lastgroup == "bad":
            raise SystemSyntaxError(
                f"неожиданный символ '{match.group('bad')}'", number, column
            )
        tokens.append((match.lastgroup, match.group(match.lastgroup), column))
        pos = match.end()
    tokens.append(("end", "", len(line.rstrip()) + 1))

    row = [0] * n
    seen = set()
    idx = 0
    expect_term = tokens[0][0] != "op" or tokens[0][1] != "="
    while expect_term:
        kind, text, column = tokens[idx]
        coefficient = 1
        if kind == "int":
            coefficient = int(text)
            idx += 1
            kind, text, column = tokens[idx]
        if kind != "var":
            raise SystemSyntaxError("ожидалась переменная x<k>", number, column)
        k = int(text)
        if not 1 <= k <= n:
            raise EntryOutOfRangeError(
                f"строка {number}, столбец {column}: переменная x{k} вне 1..{n}"
            )
        if k in seen:
            raise SystemSyntaxError(f"переменная x{k} повторяется", number, column)
        if not 0 <= coefficient < p:
            raise EntryOutOfRangeError(
                f"строка {number}: коэффициент {coefficient} вне 0..{p - 1}"
            )
        seen.add(k)
        row[k - 1] = coefficient
        idx += 1
        kind, text, column = tokens[idx]
        if kind == "op" and text == "+":
            idx += 1
            continue
        expect_term = False

    kind, text, column = tokens[idx]
    if kind != "op" or text != "=":
        raise SystemSyntaxError("ожидался знак '=' или '+'", number, column)
    kind, text, column = tokens[idx + 1]
    if kind != "int":
        raise SystemSyntaxError("ожидалась правая часть", number, column)
    rhs = int(text)
    if rhs >= p:
        raise EntryOutOfRangeError(f"строка {number}: правая часть {rhs} вне 0..{p - 1}")
    kind, text, column = tokens[idx + 2]
    if kind != "end":
        raise SystemSyntaxError("лишний текст после правой части", number, column)
    if not any(row):
        raise EmptyEquationError(f"строка {number}: уравнение без переменных")
    return row, rhs


@strict
def parse_system(text: str) -> LinearSystem:
    """
    Разбирает текст системы в формате 'p <p>', 'vars <n>', уравнения.

    Символ '#' начинает комментарий, пустые строки пропускаются,
    коэффициент 1 можно не писать.

    Args:
        text (str): Содержимое файла.

    Returns:
        LinearSystem: Проверенная система.

    Raises:
        SystemSyntaxError: Нарушена грамматика (со строкой и столбцом).
        NonPrimeModulusError: Модуль не простой.
        EntryOutOfRangeError: Значение вне диапазона.
        EmptyEquationError: Пустое уравнение.
        OrphanVariableError: Переменная не входит ни в одно уравнение.
    """
    lines = [
        (number, raw.split("#", 1)[0])
        for number, raw in enumerate(text.splitlines(), start=1)
    ]
    lines = [(number, line) for number, line in lines if line.strip()]
    if len(lines) < 2:
        last = lines[-1][0] if lines else 1
        raise SystemSyntaxError("ожидались строки 'p' и 'vars'", last, 1)

    p = _parse_header(lines[0][1], "p", lines[0][0])
    if p < 2 or not isprime(p):
        raise NonPrimeModulusError(f"строка {lines[0][0]}: модуль {p} не простой")
    n = _parse_header(lines[1][1], "vars", lines[1][0])
    if n < 1:
        raise SystemSyntaxError("число переменных должно быть положительным", lines[1][0], 1)
    if len(lines) == 2:
        raise SystemSyntaxError("нет ни одного уравнения", lines[1][0], 1)

    matrix, rhs = [], []
    for number, line in lines[2:]:
        row, value = _parse_equation(line, number, p, n)
        matrix.append(row)
        rhs.append(value)
    system = LinearSystem(p, matrix, rhs)
    logger.debug("разобрана система p=%d, m=%d, n=%d", p, system.m, system.n)
    return system


@strict
def serialize_system(sys: LinearSystem) -> str:
    """
    Записывает систему в канонической форме.

    Коэффициенты идут по возрастанию номера переменной, нулевые опущены,
    разделители - одиночные пробелы.

    Args:
        sys (LinearSystem): Система.

    Returns:
        str: Канонический текст с завершающим переводом строки.
    """
    out = [f"p {sys.p}", f"vars {sys.n}"]
    for row, value in zip(sys.matrix, sys.rhs):
        terms = " + ".join(f"{c} x{k + 1}" for k, c in enumerate(row) if c)
        out.append(f"{terms} = {value}")
    return "\n".join(out) + "\n"


def system_hash(sys: LinearSystem) -> str:
    """Возвращает sha256 канонической записи системы."""
    return hashlib.sha256(serialize_system(sys).encode("utf-8")).hexdigest()


def load_system(path: str | Path) -> LinearSystem:
    """
    Читает систему из файла в кодировке UTF-8.

    Args:
        path (str | Path): Путь к файлу.

    Returns:
        LinearSystem: Проверенная система.

    Raises:
        SystemSyntaxError: Если файл не декодируется как UTF-8.
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as error:
        head = data[: error.start]
        line = head.count(b"\n") + 1
        column = error.start - (head.rfind(b"\n") + 1) + 1
        raise SystemSyntaxError(
            f"байт 0x{data[error.start]:02x} не декодируется как UTF-8", line, column
        ) from error
    return parse_system(text)


def bundled_text(name: str) -> str:
    """Возвращает текст встроенного примера по имени."""
    if name not in BUNDLED:
        raise KeyError(f"нет встроенного примера {name!r}")
    return resources.files("linsys").joinpath("data", f"{name}.txt").read_text(
        encoding="utf-8"
    )


def bundled_system(name: str) -> LinearSystem:
    """Возвращает встроенный пример: magic_square, inconsistent_pair и др."""
    return parse_system(bundled_text(name))


def bundled_names() -> tuple[str, ...]:
    """Имена встроенных примеров."""
    return BUNDLED
