"""
Модуль с декоратором strict для строгой проверки типов аргументов.

Декоратор strict проверяет типы аргументов публичных операций на основе
аннотаций и выбрасывает TypeError при несовпадении типов. Поддерживаются
объединения типов, Optional и параметризованные обобщённые типы
(проверяется только исходный класс: list[int] проверяется как list).
"""

import inspect
import numbers
import types
import typing
from functools import wraps
from typing import Callable


def _matches(value: object, expected: object) -> bool:
    """
    Проверяет, что значение подходит под аннотацию.

    Args:
        value (object): Значение аргумента.
        expected (object): Аннотация из сигнатуры.

    Returns:
        bool: True, если значение допустимо.
    """
    if expected is typing.Any:
        return True
    if expected is None or expected is type(None):
        return value is None
    origin = typing.get_origin(expected)
    if origin in (typing.Union, types.UnionType):
        return any(_matches(value, arg) for arg in typing.get_args(expected))
    if origin is not None:
        expected = origin
    if expected is int:
        return isinstance(value, numbers.Integral)
    if expected is float:
        return isinstance(value, numbers.Real)
    if not isinstance(expected, type):
        return True
    return isinstance(value, expected)


def strict(func) -> Callable:
    """
    Декоратор, проверяющий типы аргументов функции согласно её аннотациям.

    Аннотации разрешаются при первом вызове, поэтому допустимы строковые
    аннотации и ссылки на классы, объявленные ниже по модулю.

    Args:
        func (callable): Функция, к которой применяется декоратор.

    Returns:
        callable: Обёрнутая функция с проверкой типов.
    """
    sig = inspect.signature(func)
    hints: dict[str, object] = {}

    @wraps(func)
    def wrapper(*args, **kwargs) -> object:
        if not hints:
            hints.update(typing.get_type_hints(func))
            hints.pop("return", None)
        bound = sig.bind(*args, **kwargs)
        bound.apply_defaults()
        for name, value in bound.arguments.items():
            if name in hints and not _matches(value, hints[name]):
                raise TypeError(
                    f"{func.__name__}: аргумент {name} имеет тип "
                    f"{type(value).__name__}, ожидался {hints[name]}"
                )
        return func(*args, **kwargs)

    return wrapper
