"""Exact F_q-linear calculus over F_q((x))."""

from ._core import (
    Field,
    FqcalcError,
    Series,
    Workspace,
    carlitz_module,
    cli,
    exp_c,
    goss_integral,
    integrate,
    integrate_basis,
    log_c,
    log_functional_equation,
    to_carlitz,
    to_qexpansion,
    verify,
)

__all__ = [
    "Field",
    "FqcalcError",
    "Series",
    "Workspace",
    "carlitz_module",
    "cli",
    "exp_c",
    "goss_integral",
    "integrate",
    "integrate_basis",
    "log_c",
    "log_functional_equation",
    "to_carlitz",
    "to_qexpansion",
    "verify",
]
