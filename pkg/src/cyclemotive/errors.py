"""Exception types shared across the package.

The CLI maps these onto exit codes, so library code should raise the most
specific class that applies rather than a bare ValueError.
"""


class DomainError(ValueError):
    """An argument is outside the stated domain of an operation."""


class ParseError(ValueError):
    """Malformed input text or JSON structure."""


class UnsupportedError(ValueError):
    """Well-formed input naming a measure or leaf kind we do not know."""


class NotCountableError(Exception):
    """A class carries Hodge data that no point-counting polynomial realizes."""

    def __init__(self, leaf_name: str):
        super().__init__(
            f"class {leaf_name!r} is not countable: its Hodge polynomial "
            "is not a polynomial in the product uv"
        )
        self.leaf_name = leaf_name


class FanError(ValueError):
    """A fan fails structural validation."""


class BudgetError(RuntimeError):
    """A brute-force enumeration would exceed the configured point budget."""
