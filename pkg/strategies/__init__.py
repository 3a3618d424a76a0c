"""Стратегии, операторные решения и значение игры линейной системы."""

from strategies.constructions import (Restriction,
                                      operator_solution_to_tensor_strategy,
                                      permutation_matrix, regular_rep_strategy,
                                      restrict_to_operator_solution)
from strategies.formats import (BUNDLED_STRATEGIES, bundled_strategy,
                                load_strategy, matrix_from_json,
                                matrix_to_json, solution_from_json,
                                solution_to_json, strategy_from_json,
                                strategy_to_json)
from strategies.game import (GameReport, best_classical_strategy,
                             classical_strategy, classical_value,
                             deterministic_strategy, deterministic_tables,
                             deterministic_value,
                             game_value, strategy_space_size)
from strategies.operators import (Observable, ResidualReport,
                                  commutator_norm, op_norm, root_of_unity,
                                  spectral_projectors, zeta_power)
from strategies.pauli import (PauliSearchResult, PauliSearchStatus,
                              PauliString, clock_shift_search,
                              pauli_matrix, pauli_opsol_search,
                              tensor_labels, transpose_label)
from strategies.solutions import (OperatorSolution, check_operator_solution,
                                  equation_product, scalar_solution,
                                  solution_to_representation_check)
from strategies.strategy import (Strategy, check_strategy, is_perfect,
                                 require_perfect)

__all__ = [
    "BUNDLED_STRATEGIES",
    "GameReport",
    "Observable",
    "OperatorSolution",
    "PauliSearchResult",
    "PauliSearchStatus",
    "PauliString",
    "ResidualReport",
    "Restriction",
    "Strategy",
    "best_classical_strategy",
    "bundled_strategy",
    "check_operator_solution",
    "check_strategy",
    "classical_strategy",
    "classical_value",
    "clock_shift_search",
    "commutator_norm",
    "deterministic_strategy",
    "deterministic_tables",
    "deterministic_value",
    "equation_product",
    "game_value",
    "is_perfect",
    "load_strategy",
    "matrix_from_json",
    "matrix_to_json",
    "op_norm",
    "operator_solution_to_tensor_strategy",
    "pauli_matrix",
    "pauli_opsol_search",
    "permutation_matrix",
    "regular_rep_strategy",
    "require_perfect",
    "restrict_to_operator_solution",
    "root_of_unity",
    "scalar_solution",
    "solution_from_json",
    "solution_to_json",
    "solution_to_representation_check",
    "spectral_projectors",
    "strategy_from_json",
    "strategy_to_json",
    "strategy_space_size",
    "tensor_labels",
    "transpose_label",
    "zeta_power",
]
