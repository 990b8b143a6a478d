class BudgetError(RuntimeError):
    """A requested computation exceeds its configured work or memory budget."""


class ConfigError(ValueError):
    pass


class OutputError(OSError):
    pass
