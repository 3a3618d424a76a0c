"""Группа решений линейной системы и процедуры для неё."""

from solution_group.cosets import (CosetTable, Finite, JIndex, OutOfBudget,
                                   coset_enumerate, element_words, j_index,
                                   left_action, right_action, verify_table)
from solution_group.jsearch import (CertificateStep, Inconclusive,
                                    JTrivialityCertificate, Proved,
                                    certificate_from_json, certificate_to_json,
                                    check_certificate, prove_j_trivial,
                                    replay_certificate)
from solution_group.presentation import (Presentation, Relator, RelatorKind,
                                         build_solution_group,
                                         format_presentation,
                                         parse_presentation)
from solution_group.words import (J_ID, Word, format_letters, free_reduce,
                                  generator_name, parse_word)

__all__ = [
    "J_ID",
    "CertificateStep",
    "CosetTable",
    "Finite",
    "Inconclusive",
    "JIndex",
    "JTrivialityCertificate",
    "OutOfBudget",
    "Presentation",
    "Proved",
    "Relator",
    "RelatorKind",
    "Word",
    "build_solution_group",
    "certificate_from_json",
    "certificate_to_json",
    "check_certificate",
    "coset_enumerate",
    "element_words",
    "format_letters",
    "format_presentation",
    "free_reduce",
    "generator_name",
    "j_index",
    "left_action",
    "parse_presentation",
    "parse_word",
    "prove_j_trivial",
    "replay_certificate",
    "right_action",
    "verify_table",
]
