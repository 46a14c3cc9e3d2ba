from .document import PairDocument, SystemDocument, dumps_document, load_system, loads_document
from .main import cli

__all__ = ["PairDocument", "SystemDocument", "cli", "dumps_document", "load_system", "loads_document"]
