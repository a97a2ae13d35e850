from ._eqforms import (
    chern_form,
    decay_table,
    equivariant_d_lambda,
    fit_decay_exponent,
    list_checks,
    list_examples,
    run_check,
    run_report,
    transgression_form,
)

__all__ = [
    "chern_form",
    "decay_table",
    "equivariant_d_lambda",
    "fit_decay_exponent",
    "list_checks",
    "list_examples",
    "run_check",
    "run_report",
    "transgression_form",
]
