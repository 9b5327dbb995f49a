"""Episturmian words, palindromic defect and morphism classes."""

from ._epimorph import (
    EpimorphError,
    apply_morphism,
    check_rich_crw,
    classify,
    defect,
    example3_prefix,
    experiments,
    fixed_point_prefix,
    h_profile,
    is_pret,
    palindromes,
    palindromic_closure,
    project,
    return_words,
    run_cli,
    s_operator,
    s_preimage,
    standard_prefix,
)

__version__ = "0.1.0"
