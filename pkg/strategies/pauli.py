"""
Модуль поиска операторных решений среди операторов Паули.

Оператор на q кубитах хранится в симплектической форме i^phase X^x Z^z,
где x и z - битовые маски (бит k соответствует k-му символу метки).
Произведение добавляет к фазе 2·|z1 & x2|, операторы коммутируют,
если |x1 & z2| + |z1 & x2| чётно.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from enum import Enum
from functools import reduce

import numpy as np

from linsys import LinearSystem, classical_solve
from linsys.errors import (InconsistentVerdictError, LinearSystemError,
                           QubitCapError, StrategyFormatError)
from linsys.settings import (BUDGET_PAULI_NODES, BUDGET_PAULI_QUBITS,
                             CAP_PAULI_QUBITS, TOL_PERMUTATION)
from linsys.strict import strict
from strategies.operators import commutator_norm, op_norm, zeta_power
from strategies.solutions import (OperatorSolution, check_operator_solution,
                                  equation_product, scalar_solution)

logger = logging.getLogger(__name__)

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}


def _popcount(value: int) -> int:
    return bin(value).count("1")


@dataclass(frozen=True)
class PauliString:
    """
    Оператор i^phase X^x Z^z на qubits кубитах.

    Attributes:
        qubits (int): число кубитов.
        x (int): маска X-части.
        z (int): маска Z-части.
        phase (int): показатель i по модулю 4.
    """

    qubits: int
    x: int
    z: int
    phase: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "phase", self.phase % 4)

    @classmethod
    def identity(cls, qubits: int) -> PauliString:
        return cls(qubits, 0, 0, 0)

    @classmethod
    def from_label(cls, label: str) -> PauliString:
        """Разбирает метку вида '+XZ', '-YI' или 'XX' (знак + по умолчанию)."""
        sign = 0
        if label and label[0] in "+-":
            sign = 2 if label[0] == "-" else 0
            label = label[1:]
        x = z = ys = 0
        for k, char in enumerate(label):
            if char not in _SINGLE:
                raise StrategyFormatError(f"недопустимый символ Паули {char!r}")
            if char in "XY":
                x |= 1 << k
            if char in "ZY":
                z |= 1 << k
            ys += char == "Y"
        return cls(len(label), x, z, sign + ys)

    @property
    def is_hermitian(self) -> bool:
        return (self.phase - _popcount(self.x & self.z)) % 2 == 0

    @property
    def is_scalar(self) -> bool:
        return self.x == 0 and self.z == 0

    @property
    def label(self) -> str:
        """Метка со знаком; определена для эрмитовых операторов."""
        if not self.is_hermitian:
            raise StrategyFormatError("метка определена только для эрмитовых операторов")
        chars = []
        for k in range(self.qubits):
            bits = (self.x >> k & 1, self.z >> k & 1)
            chars.append({(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}[bits])
        sign = (self.phase - _popcount(self.x & self.z)) % 4
        return ("-" if sign == 2 else "+") + "".join(chars)

    def __mul__(self, other: PauliString) -> PauliString:
        phase = self.phase + other.phase + 2 * _popcount(self.z & other.x)
        return PauliString(self.qubits, self.x ^ other.x, self.z ^ other.z, phase)

    def commutes(self, other: PauliString) -> bool:
        return (_popcount(self.x & other.z) + _popcount(self.z & other.x)) % 2 == 0

    def negate(self) -> PauliString:
        return PauliString(self.qubits, self.x, self.z, self.phase + 2)

    def matrix(self) -> np.ndarray:
        return pauli_matrix(self.label)


def pauli_matrix(label: str) -> np.ndarray:
    """
    Матрица оператора по метке: '+XZ' = X ⊗ Z, '-YY' = -(Y ⊗ Y).

    Пустая метка ('+' или '-') задаёт матрицу 1×1.
    """
    sign = -1.0 if label.startswith("-") else 1.0
    body = label.lstrip("+-")
    for char in body:
        if char not in _SINGLE:
            raise StrategyFormatError(f"недопустимый символ Паули {char!r}")
    factors = [_SINGLE[char] for char in body]
    return sign * reduce(np.kron, factors, np.eye(1, dtype=complex))


class PauliSearchStatus(Enum):
    """Итог поиска: найдено, класс исчерпан, бюджет исчерпан."""

    FOUND = "found"
    NONE_IN_CLASS = "none_in_class"
    NODE_BUDGET = "node_budget"


@dataclass(frozen=True, eq=False)
class PauliSearchResult:
    """
    Результат поиска операторного решения.

    Attributes:
        status (PauliSearchStatus): итог.
        solution (OperatorSolution | None): решение при FOUND.
        qubits (int): число кубитов (для clock_shift_search - 1 кудит).
        nodes (int): число пройденных узлов перебора.
        labels (tuple[str, ...] | None): метки Паули найденного решения.
    """

    status: PauliSearchStatus
    solution: OperatorSolution | None
    qubits: int
    nodes: int
    labels: tuple[str, ...] | None = None

    @property
    def found(self) -> bool:
        return self.status is PauliSearchStatus.FOUND

    def to_dict(self) -> dict:
        return {
            "status": self.status.value,
            "qubits": self.qubits,
            "nodes": self.nodes,
            "labels": list(self.labels) if self.labels else None,
        }


def _candidates(qubits: int) -> list[PauliString]:
    """Все эрмитовы операторы Паули со знаками, начиная с ±I."""
    out = []
    for x, z in itertools.product(range(1 << qubits), repeat=2):
        base = PauliString(qubits, x, z, _popcount(x & z))
        out.extend((base, base.negate()))
    return out


def _gauge(qubits: int) -> list[PauliString]:
    """
    Представители первой переменной: ±I и +Z на первом кубите.

    Любой оператор Паули, отличный от ±I, клиффордовым сопряжением
    переводится в +Z_0, а сопряжение сохраняет все соотношения.
    """
    identity = PauliString.identity(qubits)
    return [identity, identity.negate(), PauliString(qubits, 0, 1, 0)]


class _Backtrack:
    """Перебор с отсечением по коммутации и по уравнениям."""

    def __init__(self, sys: LinearSystem, qubits: int, budget: int):
        self.sys = sys
        self.qubits = qubits
        self.budget = budget
        self.nodes = 0
        self.exhausted = False
        self.all = _candidates(qubits)
        # уравнения, в которых переменная стоит последней
        self.closing: list[list[int]] = [[] for _ in range(sys.n)]
        for s, vs in enumerate(sys.supports):
            self.closing[vs[-1]].append(s)
        self.earlier = [sorted(j for j in sys.neighbours[i] if j < i) for i in range(sys.n)]
        self.assigned: list[PauliString] = []

    def _forced(self, i: int) -> PauliString:
        s = self.closing[i][0]
        prefix = PauliString.identity(self.qubits)
        for k in self.sys.supports[s][:-1]:
            prefix = prefix * self.assigned[k]
        # prefix эрмитов, поэтому совпадает со своим обратным
        return prefix if self.sys.rhs[s] == 0 else prefix.negate()

    def _fits(self, i: int, op: PauliString) -> bool:
        if not all(op.commutes(self.assigned[j]) for j in self.earlier[i]):
            return False
        for s in self.closing[i]:
            product = PauliString.identity(self.qubits)
            for k in self.sys.supports[s][:-1]:
                product = product * self.assigned[k]
            product = product * op
            if not product.is_scalar or product.phase != 2 * self.sys.rhs[s]:
                return False
        return True

    def run(self, i: int = 0) -> bool:
        if i == self.sys.n:
            return True
        if self.closing[i]:
            options = [self._forced(i)]
        elif i == 0:
            options = _gauge(self.qubits)
        else:
            options = self.all
        for op in options:
            if self.nodes >= self.budget:
                self.exhausted = True
                return False
            self.nodes += 1
            if not self._fits(i, op):
                continue
            self.assigned.append(op)
            if self.run(i + 1):
                return True
            self.assigned.pop()
            if self.exhausted:
                return False
        return False


@strict
def pauli_opsol_search(
    sys: LinearSystem,
    qubits: int = BUDGET_PAULI_QUBITS,
    node_budget: int = BUDGET_PAULI_NODES,
) -> PauliSearchResult:
    """
    Ищет операторное решение из операторов Паули со знаками на qubits кубитах.

    При qubits = 0 возвращает скалярное решение из classical_solve.
    Найденное решение перед возвратом проходит check_operator_solution
    с допуском 1e-12.

    Args:
        sys (LinearSystem): Система над Z_2.
        qubits (int): Число кубитов.
        node_budget (int): Максимум узлов перебора.

    Returns:
        PauliSearchResult: FOUND с решением, NONE_IN_CLASS, если класс
        исчерпан, или NODE_BUDGET, если исчерпан бюджет.

    Raises:
        LinearSystemError: p ≠ 2.
        QubitCapError: qubits вне диапазона 0..CAP_PAULI_QUBITS.
    """
    if sys.p != 2:
        raise LinearSystemError("поиск среди операторов Паули определён только для p = 2")
    if not 0 <= qubits <= CAP_PAULI_QUBITS:
        raise QubitCapError(f"число кубитов {qubits} вне 0..{CAP_PAULI_QUBITS}")
    if node_budget <= 0:
        raise QubitCapError("бюджет узлов должен быть положительным")

    if qubits == 0:
        x = classical_solve(sys)
        if x is None:
            return PauliSearchResult(PauliSearchStatus.NONE_IN_CLASS, None, 0, 1)
        labels = tuple("-" if v else "+" for v in x)
        return PauliSearchResult(
            PauliSearchStatus.FOUND, scalar_solution(sys, tuple(x)), 0, 1, labels
        )

    search = _Backtrack(sys, qubits, node_budget)
    if not search.run():
        status = (
            PauliSearchStatus.NODE_BUDGET if search.exhausted
            else PauliSearchStatus.NONE_IN_CLASS
        )
        logger.info("поиск Паули на %d кубитах: %s за %d узлов",
                    qubits, status.value, search.nodes)
        return PauliSearchResult(status, None, qubits, search.nodes)

    labels = tuple(op.label for op in search.assigned)
    solution = OperatorSolution.from_matrices(2, [pauli_matrix(lb) for lb in labels])
    report = check_operator_solution(solution, sys, TOL_PERMUTATION)
    if not report.passed:
        raise InconsistentVerdictError(
            f"найденное решение не прошло проверку: {report.failures()}"
        )
    logger.info("найдено решение на %d кубитах за %d узлов", qubits, search.nodes)
    return PauliSearchResult(PauliSearchStatus.FOUND, solution, qubits, search.nodes, labels)


def clock_shift_operators(p: int) -> list[tuple[str, np.ndarray]]:
    """
    Операторы ζ^k X^a Z^b размерности p с метками 'w^k X^a Z^b'.

    X|j⟩ = |j+1⟩, Z|j⟩ = ζ^j|j⟩. Нескалярные операторы идут первыми.
    """
    shift = np.roll(np.eye(p, dtype=complex), 1, axis=0)
    clock = np.diag([zeta_power(p, j) for j in range(p)])
    out = []
    for a, b, k in itertools.product(range(p), repeat=3):
        matrix = (
            zeta_power(p, k)
            * np.linalg.matrix_power(shift, a)
            @ np.linalg.matrix_power(clock, b)
        )
        out.append((f"w^{k} X^{a} Z^{b}", matrix))
    out.sort(key=lambda item: item[0].endswith("X^0 Z^0"))
    return out


@strict
def clock_shift_search(
    sys: LinearSystem, node_budget: int = BUDGET_PAULI_NODES
) -> PauliSearchResult:
    """
    Ищет решение среди обобщённых операторов Паули одного кудита.

    Args:
        sys (LinearSystem): Система над Z_p.
        node_budget (int): Максимум узлов перебора.

    Returns:
        PauliSearchResult: Итог поиска в размерности p.
    """
    p = sys.p
    options = clock_shift_operators(p)
    closing: list[list[int]] = [[] for _ in range(sys.n)]
    for s, vs in enumerate(sys.supports):
        closing[vs[-1]].append(s)
    assigned: dict[int, np.ndarray] = {}
    chosen: list[str] = []
    nodes = 0
    exhausted = False
    eye = np.eye(p)

    def fits(i: int, matrix: np.ndarray) -> bool:
        for j in sys.neighbours[i]:
            if j < i and commutator_norm(matrix, assigned[j]) > TOL_PERMUTATION:
                return False
        assigned[i] = matrix
        for s in closing[i]:
            target = zeta_power(p, sys.rhs[s]) * eye
            if op_norm(equation_product(assigned, sys, s) - target) > TOL_PERMUTATION:
                del assigned[i]
                return False
        return True

    def run(i: int) -> bool:
        nonlocal nodes, exhausted
        if i == sys.n:
            return True
        for label, matrix in options:
            if nodes >= node_budget:
                exhausted = True
                return False
            nodes += 1
            if not fits(i, matrix):
                continue
            chosen.append(label)
            if run(i + 1):
                return True
            chosen.pop()
            del assigned[i]
            if exhausted:
                return False
        return False

    if not run(0):
        status = (
            PauliSearchStatus.NODE_BUDGET if exhausted else PauliSearchStatus.NONE_IN_CLASS
        )
        return PauliSearchResult(status, None, 1, nodes)
    solution = OperatorSolution.from_matrices(p, [assigned[i] for i in range(sys.n)])
    logger.info("найдено решение размерности %d за %d узлов", p, nodes)
    return PauliSearchResult(PauliSearchStatus.FOUND, solution, 1, nodes, tuple(chosen))


def transpose_label(label: str) -> str:
    """Метка транспонированного оператора: Y^T = -Y, остальные симметричны."""
    body = label.lstrip("+-")
    negative = label.startswith("-") ^ (body.count("Y") % 2 == 1)
    return ("-" if negative else "+") + body


def tensor_labels(labels: tuple[str, ...]) -> tuple[list[str], list[str]]:
    """
    Метки операторов тензорной стратегии по меткам решения.

    Алисе достаётся A_i ⊗ I, Бобу I ⊗ A_i^T.
    """
    qubits = len(labels[0].lstrip("+-")) if labels else 0
    pad = "I" * qubits
    alice = [label + pad for label in labels]
    bob = [label[0] + pad + label[1:] for label in map(transpose_label, labels)]
    return alice, bob
