"""Error taxonomy shared across the package.

InputError maps to CLI exit code 1, BudgetError to exit code 2.
"""


class InputError(ValueError):
    """Malformed caller input: bad file, non-edge target, invalid vertex id."""


class BudgetError(RuntimeError):
    """Instance exceeds a documented size cap of an exact/exponential routine."""
