class DomainError(ValueError):
    """Input outside the mathematical domain of an operation.

    The CLI maps this to exit status 1.
    """
