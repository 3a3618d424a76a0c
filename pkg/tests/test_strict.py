"""Модуль тестов для декоратора strict из linsys.strict."""

from __future__ import annotations

import pytest

from linsys.strict import strict


@strict
def scale(value: int, factor: float = 1.0) -> float:
    return value * factor


@strict
def maybe_length(items: list[int] | None = None) -> int:
    return 0 if items is None else len(items)


class Box:
    pass


@strict
def unwrap(box: Box, label: str) -> str:
    return label


@pytest.mark.linsys
def test_strict_correct_types():
    """
    Тестирует strict с корректными типами.

    int подходит под аннотацию float, параметризованный list проверяется
    по исходному классу.
    """
    assert scale(2, 1.5) == 3.0
    assert scale(2, 3) == 6
    assert maybe_length([1, 2]) == 2
    assert maybe_length() == 0
    assert unwrap(Box(), "x") == "x"


@pytest.mark.linsys
@pytest.mark.parametrize(
    "call",
    [
        lambda: scale(1.5),
        lambda: scale("1"),
        lambda: maybe_length((1, 2)),
        lambda: unwrap(object(), "x"),
        lambda: unwrap(Box(), label=3),
    ],
)
def test_strict_incorrect_type(call):
    """
    Тестирует strict с некорректным типом аргумента.

    Ожидается TypeError с именем функции в сообщении.
    """
    with pytest.raises(TypeError) as exc_info:
        call()
    assert "аргумент" in str(exc_info.value)
