"""
Значения по умолчанию для допусков, бюджетов и ограничений перебора.

Все операции принимают эти значения явными аргументами; здесь собраны
только умолчания, которые командная строка может переопределить.
"""

from dataclasses import dataclass

# Допуски
TOL_STRUCTURAL = 1e-10
TOL_PERFECT = 1e-9
TOL_PERMUTATION = 1e-12
TOL_ORBIT = 1e-8

# Бюджеты
BUDGET_PROVE_J = 10**5
BUDGET_COSETS = 10**5
BUDGET_PAULI_QUBITS = 3
BUDGET_PAULI_NODES = 10**6

# Жёсткие ограничения
CAP_PAULI_QUBITS = 4
CAP_CLASSICAL = 2**22
CAP_BRUTE_FORCE = 2**20


@dataclass(frozen=True)
class Tolerances:
    """
    Набор допусков для численных проверок.

    Attributes:
        structural (float): унитарность, коммутаторы, соотношения.
        perfect (float): невязки условия идеальности стратегии.
        permutation (float): проверки на перестановочных матрицах.
        orbit (float): порог роста ранга при замыкании орбиты.
    """

    structural: float = TOL_STRUCTURAL
    perfect: float = TOL_PERFECT
    permutation: float = TOL_PERMUTATION
    orbit: float = TOL_ORBIT


@dataclass(frozen=True)
class Budgets:
    """
    Набор бюджетов для полуразрешающих процедур.

    Attributes:
        prove_j (int): число узлов поиска тривиальности J.
        cosets (int): максимум живых смежных классов.
        pauli_qubits (int): число кубитов в поиске паулиевских решений.
        pauli_nodes (int): число узлов перебора паулиевских решений.
        classical_cap (int): максимум пар детерминированных стратегий.
    """

    prove_j: int = BUDGET_PROVE_J
    cosets: int = BUDGET_COSETS
    pauli_qubits: int = BUDGET_PAULI_QUBITS
    pauli_nodes: int = BUDGET_PAULI_NODES
    classical_cap: int = CAP_CLASSICAL
