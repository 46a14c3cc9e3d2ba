"""Versioned JSON documents for systems and amicable pairs.

Documents are written with a fixed key order, one matrix row per line and no
timestamps, so identical inputs give byte-identical files. See
``docs/document_format.md`` for the schema.
"""

import json
from typing import Any, Dict, List, Literal, Optional, Sequence, Union

from pydantic import BaseModel, Field, ValidationError, field_validator

from hurwitz_composition.composition.matrix import IntMatrix
from hurwitz_composition.composition.system import AmicablePair, FormulaSize, HurwitzSystem
from hurwitz_composition.errors import DocumentError, StructuralError

SCHEMA_VERSION = "1"
SUPPORTED_VERSIONS = (SCHEMA_VERSION,)

Rows = List[List[int]]


def check_version(version: str) -> str:
    if version not in SUPPORTED_VERSIONS:
        raise ValueError(f"unsupported schema_version {version!r}; expected one of {SUPPORTED_VERSIONS}")
    return version


class ProvenanceStep(BaseModel):
    operation: str
    arguments: Dict[str, str] = Field(default_factory=dict)


class SystemBody(BaseModel):
    size: List[int]
    matrices: List[Rows]

    @field_validator("size")
    @classmethod
    def _three_positive(cls, size: List[int]) -> List[int]:
        if len(size) != 3 or any(value < 1 for value in size):
            raise ValueError(f"size must be three positive integers [r, s, n], got {size}")
        return size

    @classmethod
    def from_system(cls, system: HurwitzSystem) -> "SystemBody":
        return cls(size=system.size.as_list(), matrices=[m.to_rows() for m in system.matrices])

    def to_system(self) -> HurwitzSystem:
        r, s, n = self.size
        return HurwitzSystem(
            size=FormulaSize(r=r, s=s, n=n),
            matrices=tuple(IntMatrix.from_rows(rows) for rows in self.matrices),
        )


class SystemDocument(SystemBody):
    schema_version: str = SCHEMA_VERSION
    kind: Literal["system"] = "system"
    provenance: List[ProvenanceStep] = Field(default_factory=list)

    @field_validator("schema_version")
    @classmethod
    def _known_version(cls, version: str) -> str:
        return check_version(version)

    @classmethod
    def from_system(
        cls, system: HurwitzSystem, provenance: Sequence[ProvenanceStep] = ()
    ) -> "SystemDocument":
        return cls(
            size=system.size.as_list(),
            matrices=[m.to_rows() for m in system.matrices],
            provenance=list(provenance),
        )


class PairDocument(BaseModel):
    schema_version: str = SCHEMA_VERSION
    kind: Literal["amicable_pair"] = "amicable_pair"
    first: SystemBody
    second: Optional[SystemBody] = None
    provenance: List[ProvenanceStep] = Field(default_factory=list)

    @field_validator("schema_version")
    @classmethod
    def _known_version(cls, version: str) -> str:
        return check_version(version)

    @classmethod
    def from_pair(
        cls, pair: AmicablePair, provenance: Sequence[ProvenanceStep] = ()
    ) -> "PairDocument":
        return cls(
            first=SystemBody.from_system(pair.first),
            second=SystemBody.from_system(pair.second) if pair.second is not None else None,
            provenance=list(provenance),
        )

    def to_pair(self) -> AmicablePair:
        return AmicablePair(
            first=self.first.to_system(),
            second=self.second.to_system() if self.second is not None else None,
        )


Document = Union[SystemDocument, PairDocument]

_KEY_ORDER = ("schema_version", "kind", "size", "first", "second", "matrices", "provenance")


def _is_row(value: Any) -> bool:
    return isinstance(value, list) and all(isinstance(item, int) for item in value)


def _format(value: Any, depth: int) -> str:
    pad = "  " * (depth + 1)
    close = "  " * depth
    if _is_row(value):
        return json.dumps(value)
    if isinstance(value, list):
        if not value:
            return "[]"
        inner = ",\n".join(pad + _format(item, depth + 1) for item in value)
        return f"[\n{inner}\n{close}]"
    if isinstance(value, dict):
        if not value:
            return "{}"
        keys = [key for key in _KEY_ORDER if key in value]
        keys += sorted(key for key in value if key not in _KEY_ORDER)
        inner = ",\n".join(f"{pad}{json.dumps(key)}: {_format(value[key], depth + 1)}" for key in keys)
        return f"{{\n{inner}\n{close}}}"
    return json.dumps(value)


def dumps_document(document: Document) -> str:
    """Serialize with fixed key order and one matrix row per line."""
    return _format(document.model_dump(mode="json"), 0) + "\n"


def _line_of(text: str, key: Any) -> Optional[int]:
    needle = f'"{key}"'
    for number, line in enumerate(text.splitlines(), start=1):
        if needle in line:
            return number
    return None


def _row_line(text: str, start: int, matrix: int, row: int) -> Optional[int]:
    """Line of ``matrices[matrix][row]`` for the array that opens after ``start``."""
    opening = text.find("[", start)
    if opening < 0:
        return None
    depth = 0
    matrix_index = row_index = -1
    for offset in range(opening, len(text)):
        char = text[offset]
        if char == "[":
            depth += 1
            if depth == 2:
                matrix_index, row_index = matrix_index + 1, -1
            elif depth == 3:
                row_index += 1
                if (matrix_index, row_index) == (matrix, row):
                    return text.count("\n", 0, offset) + 1
        elif char == "]":
            depth -= 1
            if depth == 0:
                return None
    return None


def _error_line(text: str, loc: Sequence[Any]) -> Optional[int]:
    """Line for a validation error location; matrix entries map to their row."""
    if not loc:
        return None
    if "matrices" in loc:
        at = list(loc).index("matrices")
        indices = loc[at + 1:at + 3]
        if len(indices) == 2 and all(isinstance(index, int) for index in indices):
            start = 0
            for key in loc[:at + 1]:
                start = text.find(f'"{key}"', start)
                if start < 0:
                    break
            else:
                line = _row_line(text, start + len('"matrices"'), *indices)
                if line is not None:
                    return line
    return _line_of(text, loc[0])


def loads_document(text: str, source: str = "<document>") -> Document:
    """Parse a system or pair document.

    Raises:
        DocumentError: on malformed JSON, unknown kinds or versions, or values
            that do not match the schema; the message names the line.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(exc.msg, line=exc.lineno, source=source) from None
    if not isinstance(data, dict):
        raise DocumentError("document must be a JSON object", line=1, source=source)

    if "schema_version" not in data:
        raise DocumentError("missing schema_version", line=1, source=source)
    kind = data.get("kind", "system")
    model = {"system": SystemDocument, "amicable_pair": PairDocument}.get(kind)
    if model is None:
        raise DocumentError(f"unknown document kind {kind!r}", line=_line_of(text, "kind"), source=source)
    try:
        return model.model_validate(data)
    except ValidationError as exc:
        error = exc.errors()[0]
        location = ".".join(str(part) for part in error["loc"])
        line = _error_line(text, error["loc"])
        raise DocumentError(f"{location}: {error['msg']}", line=line, source=source) from None


def load_system(document: Document, source: str = "<document>") -> HurwitzSystem:
    if not isinstance(document, SystemDocument):
        raise DocumentError("expected a system document, got an amicable pair", source=source)
    try:
        return document.to_system()
    except StructuralError as exc:
        raise DocumentError(str(exc), line=None, source=source) from None
