"""Иерархия исключений пакета."""


class LinsysError(Exception):
    """Базовое исключение всех пакетов проекта."""


class LinearSystemError(LinsysError, ValueError):
    """Некорректная линейная система или её файл."""


class SystemSyntaxError(LinearSystemError):
    """
    Синтаксическая ошибка в файле системы.

    Attributes:
        line (int): номер строки, начиная с 1.
        column (int): номер столбца, начиная с 1.
    """

    def __init__(self, message: str, line: int, column: int) -> None:
        super().__init__(f"строка {line}, столбец {column}: {message}")
        self.line = line
        self.column = column


class NonPrimeModulusError(LinearSystemError):
    """Модуль p не является простым числом."""


class EntryOutOfRangeError(LinearSystemError):
    """Коэффициент, правая часть или номер переменной вне диапазона."""


class EmptyEquationError(LinearSystemError):
    """Уравнение без ненулевых коэффициентов."""


class OrphanVariableError(LinearSystemError):
    """Переменная не входит ни в одно уравнение."""


class IndexOutOfRangeError(LinearSystemError, IndexError):
    """Номер уравнения вне диапазона 1..m."""


class BudgetError(LinsysError, ValueError):
    """Некорректный бюджет или превышено ограничение перебора."""


class EnumerationCapError(BudgetError):
    """Полный перебор классических стратегий превышает ограничение."""


class QubitCapError(BudgetError):
    """Запрошено больше кубитов, чем допускает ограничение."""


class StrategyError(LinsysError, ValueError):
    """Некорректная стратегия или операторное решение."""


class DimensionMismatchError(StrategyError):
    """Размерности операторов, состояния и системы не согласованы."""


class MissingOperatorError(StrategyError):
    """Для пары (уравнение, переменная) не задан оператор."""


class OrbitClosureError(StrategyError):
    """Замыкание орбиты состояния не стабилизировалось численно."""


class TrivialJError(StrategyError):
    """В таблице смежных классов J совпадает с единицей."""


class StrategyFormatError(StrategyError):
    """Ошибка формата файла стратегии или операторного решения."""


class InconsistentVerdictError(LinsysError):
    """Вердикты анализа противоречат друг другу."""
