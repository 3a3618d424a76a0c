"""
Модуль тестов для пакета strategies.

Покрывает тесты для:
- наблюдаемых и спектральных проекторов,
- проверки операторных решений и стратегий,
- значения игры (матричный и точный пути),
- переходов стратегия ↔ решение ↔ группа.
"""

from fractions import Fraction

import numpy as np
import pytest

from linsys import LinearSystem, classical_solve
from linsys.errors import (DimensionMismatchError, EnumerationCapError,
                           MissingOperatorError, StrategyError, TrivialJError)
from solution_group import RelatorKind, build_solution_group, coset_enumerate
from strategies import (Observable, OperatorSolution, Strategy,
                        best_classical_strategy, check_operator_solution,
                        check_strategy, classical_strategy, classical_value,
                        clock_shift_search, deterministic_strategy,
                        deterministic_value, game_value, is_perfect,
                        operator_solution_to_tensor_strategy,
                        regular_rep_strategy, restrict_to_operator_solution,
                        root_of_unity, scalar_solution,
                        solution_to_representation_check,
                        spectral_projectors, strategy_space_size, zeta_power)
from tests.conftest import random_unitary


def _regular(sys: LinearSystem) -> Strategy:
    pres = build_solution_group(sys)
    table = coset_enumerate(pres, 1000).table
    return regular_rep_strategy(table, pres, sys)


def _reflection(rng: np.random.Generator, d: int) -> np.ndarray:
    v = rng.normal(size=d) + 1j * rng.normal(size=d)
    v /= np.linalg.norm(v)
    return np.eye(d) - 2 * np.outer(v, v.conj())


@pytest.mark.strategies
def test_root_of_unity():
    """Тестирует ζ: ровно -1 при p = 2, примитивный корень при p = 3, 5."""
    assert root_of_unity(2) == -1
    assert zeta_power(2, 3) == -1
    for p in (3, 5):
        zeta = root_of_unity(p)
        assert abs(zeta**p - 1) < 1e-12
        assert all(abs(zeta**k - 1) > 1e-3 for k in range(1, p))


@pytest.mark.strategies
@pytest.mark.parametrize("p, d", [(2, 4), (3, 3), (5, 6)])
def test_spectral_projectors_complete(p, d):
    """
    Тестирует полноту и ортогональность спектральных проекторов.

    Σ_c P(c) = I, P(c)P(c') = 0 при c ≠ c', P(c)² = P(c).
    """
    rng = np.random.default_rng(p * d)
    v = random_unitary(rng, d)
    eigen = np.diag([zeta_power(p, int(c)) for c in rng.integers(0, p, size=d)])
    u = v @ eigen @ v.conj().T
    projectors = spectral_projectors(u, p)
    assert np.allclose(sum(projectors), np.eye(d), atol=1e-10)
    for a, pa in enumerate(projectors):
        assert np.allclose(pa @ pa, pa, atol=1e-10)
        for b, pb in enumerate(projectors):
            if a != b:
                assert np.allclose(pa @ pb, 0, atol=1e-10)
    assert Observable(u, p).order_residual() < 1e-10


@pytest.mark.strategies
def test_mermin_solution_passes(magic_square, mermin_solution):
    """Тестирует решение Мермина: все условия выполняются с допуском 1e-12."""
    report = check_operator_solution(mermin_solution, magic_square, 1e-12)
    assert report.passed
    assert set(report.families) == {"unitarity", "order", "local", "constraint"}


@pytest.mark.strategies
def test_swapped_operators_fail(magic_square, mermin_solution):
    """Тестирует, что обмен операторов разных уравнений ломает ограничения."""
    matrices = [op.matrix for op in mermin_solution.operators]
    matrices[0], matrices[3] = matrices[3], matrices[0]
    report = check_operator_solution(OperatorSolution.from_matrices(2, matrices), magic_square)
    assert not report.passed
    assert report.family_max("constraint") > 0.5


@pytest.mark.strategies
def test_solution_shape_mismatch(magic_square, single_z2):
    """Тестирует отказ проверки при несогласованных размерах."""
    sol = scalar_solution(single_z2, classical_solve(single_z2))
    with pytest.raises(DimensionMismatchError):
        check_operator_solution(sol, magic_square)


@pytest.mark.strategies
@pytest.mark.parametrize("name", ["single_z2", "single_z3"])
def test_scalar_solution(name, request):
    """
    Тестирует скалярное решение из классического.

    Решение проходит и проверку операторного решения, и проверку
    представления группы решений.
    """
    sys = request.getfixturevalue(name)
    sol = scalar_solution(sys, classical_solve(sys))
    assert sol.dimension == 1
    assert check_operator_solution(sol, sys).passed
    assert solution_to_representation_check(sol, build_solution_group(sys)).passed


@pytest.mark.strategies
def test_representation_check(magic_square, mermin_solution):
    """
    Тестирует g_i ↦ A_i, J ↦ -I на решении Мермина.

    Смена знака x9 ломает ровно соотношения ограничений, содержащие g9.
    """
    pres = build_solution_group(magic_square)
    assert solution_to_representation_check(mermin_solution, pres, 1e-12).passed

    matrices = [op.matrix for op in mermin_solution.operators]
    matrices[8] = -matrices[8]
    flipped = OperatorSolution.from_matrices(2, matrices)
    report = solution_to_representation_check(flipped, pres)
    expected = {
        f"{index + 1}:{rel}"
        for index, rel in enumerate(pres.relators)
        if rel.kind is RelatorKind.CONSTRAINT and (9, 1) in rel.letters
    }
    assert set(report.failures()["relator"]) == expected
    assert len(expected) == 2


@pytest.mark.strategies
def test_regular_strategy_order_4(single_z2):
    """
    Тестирует стратегию регулярного представления группы порядка 4.

    Перестановочные матрицы дают невязки на уровне машинной точности.
    """
    st = _regular(single_z2)
    assert st.dimension == 4
    assert check_strategy(st, single_z2, 1e-12).passed
    assert is_perfect(st, single_z2, 1e-12).passed
    assert np.isclose(np.linalg.norm(st.state), 1.0)


@pytest.mark.strategies
def test_regular_strategy_order_9(single_z3):
    """Тестирует стратегию с ζ-взвешенным состоянием для Z_3."""
    st = _regular(single_z3)
    assert st.dimension == 9
    assert check_strategy(st, single_z3, 1e-10).passed
    assert is_perfect(st, single_z3, 1e-10).passed
    assert game_value(st, single_z3).value == pytest.approx(1.0, abs=1e-9)


@pytest.mark.strategies
def test_regular_strategy_refuses_trivial_j(inconsistent_pair):
    """Тестирует отказ при J = e."""
    with pytest.raises(TrivialJError):
        _regular(inconsistent_pair)


@pytest.mark.strategies
def test_non_commuting_bob_fails(single_z2):
    """Тестирует, что некоммутирующий оператор Боба нарушает условие alice_bob."""
    st = _regular(single_z2)
    bob = list(st.bob)
    bob[0] = Observable(_reflection(np.random.default_rng(1), 4), 2)
    broken = Strategy(2, st.state, st.alice, tuple(bob))
    report = check_strategy(broken, single_z2)
    assert report.family_max("order") < 1e-10
    assert report.family_max("alice_bob") > 1e-3
    assert not report.passed


@pytest.mark.strategies
def test_missing_operator(single_z2):
    """Тестирует отказ при отсутствии оператора Алисы."""
    st = _regular(single_z2)
    alice = dict(st.alice)
    del alice[(0, 0)]
    with pytest.raises(MissingOperatorError):
        check_strategy(Strategy(2, st.state, alice, st.bob), single_z2)


@pytest.mark.strategies
def test_tensor_strategy_mermin(magic_square, mermin_solution):
    """
    Тестирует тензорную стратегию по решению Мермина.

    Размерность 16, стратегия идеальна, все 18 пар выигрывают.
    """
    st = operator_solution_to_tensor_strategy(mermin_solution, magic_square)
    assert st.dimension == 16
    assert check_strategy(st, magic_square).passed
    assert is_perfect(st, magic_square).passed
    report = game_value(st, magic_square)
    assert len(report.pairs) == 18
    assert report.value == pytest.approx(1.0, abs=1e-9)
    assert all(prob == pytest.approx(1.0, abs=1e-9) for prob in report.pairs.values())


@pytest.mark.strategies
def test_tensor_strategy_scalar(single_z2):
    """Тестирует одномерную тензорную стратегию из скалярного решения."""
    sol = scalar_solution(single_z2, classical_solve(single_z2))
    st = operator_solution_to_tensor_strategy(sol, single_z2)
    assert st.dimension == 1
    assert is_perfect(st, single_z2).passed


@pytest.mark.strategies
def test_tensor_strategy_clock_shift(single_z3):
    """Тестирует решение clock/shift размерности 3 и стратегию размерности 9."""
    result = clock_shift_search(single_z3)
    assert result.found
    assert result.solution.dimension == 3
    assert check_operator_solution(result.solution, single_z3).passed
    st = operator_solution_to_tensor_strategy(result.solution, single_z3)
    assert st.dimension == 9
    assert is_perfect(st, single_z3).passed


@pytest.mark.strategies
def test_non_solution_is_not_perfect(magic_square):
    """Тестирует, что классическая стратегия из не-решения не идеальна."""
    st = classical_strategy(magic_square, (0,) * 9)
    assert check_strategy(st, magic_square).passed
    report = is_perfect(st, magic_square)
    assert report.family_max("constraint") > 1.0
    assert not report.passed


@pytest.mark.strategies
def test_classical_strategy_value_one(single_z2):
    """Тестирует, что стратегия из решения выигрывает с вероятностью ровно 1."""
    x = classical_solve(single_z2)
    st = classical_strategy(single_z2, x)
    assert check_strategy(st, single_z2).passed
    report = game_value(st, single_z2)
    assert report.exact == 1
    assert report.value == pytest.approx(1.0)


@pytest.mark.strategies
def test_classical_value_magic_square(magic_square):
    """
    Тестирует классическое значение магического квадрата.

    Лучшая детерминированная стратегия выигрывает 17 пар из 18.
    """
    assert strategy_space_size(magic_square) == 4**6 * 2**9
    assert classical_value(magic_square) == Fraction(17, 18)
    value, alice, bob = best_classical_strategy(magic_square)
    assert value == Fraction(17, 18)
    assert deterministic_value(magic_square, alice, bob) == value
    report = game_value(deterministic_strategy(magic_square, alice, bob), magic_square)
    assert report.exact == value
    assert report.value == pytest.approx(17 / 18, abs=1e-9)


@pytest.mark.strategies
def test_classical_value_small(inconsistent_pair, single_z2, single_z3):
    """
    Тестирует классическое значение малых систем.

    Для x1 = 0, x1 = 1 из двух пар выигрывает ровно одна.
    """
    assert classical_value(inconsistent_pair) == Fraction(1, 2)
    assert classical_value(single_z2) == 1
    assert classical_value(single_z3) == 1


@pytest.mark.strategies
def test_classical_value_cap(magic_square):
    """Тестирует явный отказ при превышении ограничения перебора."""
    with pytest.raises(EnumerationCapError):
        classical_value(magic_square, 1000)


@pytest.mark.strategies
def test_game_value_workers(magic_square, mermin_solution):
    """Тестирует совпадение результата при параллельном счёте пар."""
    st = operator_solution_to_tensor_strategy(mermin_solution, magic_square)
    serial = game_value(st, magic_square)
    parallel = game_value(st, magic_square, workers=4)
    assert serial.pairs == parallel.pairs
    assert serial.worst == parallel.worst


@pytest.mark.strategies
@pytest.mark.parametrize("name", ["single_z2", "single_z3"])
def test_full_cycle_from_group(name, request):
    """
    Тестирует замкнутый цикл: группа → стратегия → решение → представление.

    Стратегия регулярного представления идеальна, её сужение на орбиту ψ -
    операторное решение, которое задаёт представление группы решений.
    """
    sys = request.getfixturevalue(name)
    st = _regular(sys)
    restriction = restrict_to_operator_solution(st, sys)
    sol = restriction.solution
    assert sol.dimension <= st.dimension
    assert restriction.well_definedness < 1e-9
    assert check_operator_solution(sol, sys).passed
    assert solution_to_representation_check(sol, build_solution_group(sys)).passed


@pytest.mark.strategies
def test_restrict_tensor_and_classical(magic_square, mermin_solution, single_z2):
    """
    Тестирует сужение тензорной стратегии Мермина и одномерной стратегии.

    Одномерная стратегия сужается в само скалярное решение.
    """
    st = operator_solution_to_tensor_strategy(mermin_solution, magic_square)
    restriction = restrict_to_operator_solution(st, magic_square)
    assert restriction.solution.dimension <= 16
    assert check_operator_solution(restriction.solution, magic_square).passed

    x = classical_solve(single_z2)
    restriction = restrict_to_operator_solution(classical_strategy(single_z2, x), single_z2)
    assert restriction.solution.dimension == 1
    for v, op in zip(x, restriction.solution.operators):
        assert op.matrix[0, 0] == pytest.approx(zeta_power(2, v))


@pytest.mark.strategies
def test_restrict_requires_perfect(magic_square):
    """Тестирует отказ сужения неидеальной стратегии."""
    with pytest.raises(StrategyError):
        restrict_to_operator_solution(classical_strategy(magic_square, (0,) * 9), magic_square)
