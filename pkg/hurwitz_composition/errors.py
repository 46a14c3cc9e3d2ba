from typing import Optional, TYPE_CHECKING, Union

if TYPE_CHECKING:
    from hurwitz_composition.composition.search.clique import SearchResult


class HurwitzError(Exception):
    """Base class for every error raised by the library."""


class StructuralError(HurwitzError):
    """Shapes or counts are inconsistent with the declared formula size."""


class DomainError(HurwitzError, ValueError):
    """An argument lies outside the domain of the operation."""


class MatrixOverflowError(HurwitzError, OverflowError):
    """An exact integer result would leave the signed 64-bit range."""


class SizeCapExceeded(HurwitzError):
    """A construction or candidate pool would exceed the configured cap."""

    def __init__(self, what: str, requested: Union[int, str], cap: int):
        self.what = what
        self.requested = requested
        self.cap = cap
        super().__init__(f"{what} needs {requested}, above the configured cap of {cap}")


class SearchBudgetExceeded(HurwitzError):
    """Clique search hit its node budget; ``best`` holds the partial result."""

    def __init__(self, best: "SearchResult"):
        self.best = best
        super().__init__(
            f"search for s={best.s}, n={best.n} inconclusive above r = {best.r_max} "
            f"after {best.nodes} nodes"
        )


class DocumentError(HurwitzError):
    """A system document could not be parsed or validated."""

    def __init__(self, message: str, line: Optional[int] = None, source: str = "<document>"):
        self.line = line
        self.source = source
        where = f"{source}:{line}" if line is not None else source
        super().__init__(f"{where}: {message}")
