"""Generalized Taylor expansions for linear differential operators.

The heavy lifting happens in the compiled extension; this package just
re-exports its surface. Operators are written as expression-string
coefficient lists, lowest index = highest derivative's companion:
``Operator(["0", "1"], (-7, 7))`` is y'' + y on [-7, 7].
"""

from gentaylor._core import (
    ArgumentError,
    InputError,
    NumericalError,
    Operator,
    catalogue_names,
    catalogue_operator,
    classical_taylor,
    fundamental_table,
    kernel_table,
    load_problem,
    reconstruct,
    solve,
    solve_memory,
    verify,
)

__all__ = [
    "ArgumentError",
    "InputError",
    "NumericalError",
    "Operator",
    "catalogue_names",
    "catalogue_operator",
    "classical_taylor",
    "fundamental_table",
    "kernel_table",
    "load_problem",
    "reconstruct",
    "solve",
    "solve_memory",
    "verify",
]

__version__ = "0.1.0"
