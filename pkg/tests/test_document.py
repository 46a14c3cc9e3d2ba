import json

import pytest

from hurwitz_composition.cli.document import (
    PairDocument, ProvenanceStep, SystemDocument, dumps_document, load_system, loads_document,
)
from hurwitz_composition.composition.constructions import amicable_double, combine
from hurwitz_composition.composition.generators import classical
from hurwitz_composition.composition.system import AmicablePair
from hurwitz_composition.errors import DocumentError


def system_document(dim: int = 2) -> SystemDocument:
    return SystemDocument.from_system(
        classical(dim), [ProvenanceStep(operation="classical", arguments={"dim": str(dim)})]
    )


@pytest.mark.parametrize("dim", [1, 2, 4, 8])
def test_system_document_round_trip(dim):
    document = system_document(dim)
    parsed = loads_document(dumps_document(document))
    assert parsed == document
    assert load_system(parsed) == classical(dim)


def test_pair_document_round_trip():
    pair = amicable_double(AmicablePair(first=classical(2)))
    document = PairDocument.from_pair(pair)
    parsed = loads_document(dumps_document(document))
    assert isinstance(parsed, PairDocument)
    assert parsed.to_pair() == pair


def test_serialization_is_deterministic():
    first = dumps_document(SystemDocument.from_system(combine(classical(4), classical(2))))
    second = dumps_document(SystemDocument.from_system(combine(classical(4), classical(2))))
    assert first == second


def test_layout_has_fixed_key_order_and_one_row_per_line():
    text = dumps_document(system_document(2))
    lines = text.splitlines()
    assert lines[1] == '  "schema_version": "1",'
    assert lines[2] == '  "kind": "system",'
    assert lines[3] == '  "size": [2, 2, 2],'
    assert "      [0, -1]," in lines
    assert text.endswith("}\n")
    assert json.loads(text)["size"] == [2, 2, 2]


def test_malformed_json_names_the_line():
    text = '{\n  "schema_version": "1",\n  "size": [1, 1, 1\n}\n'
    with pytest.raises(DocumentError) as caught:
        loads_document(text, source="bad.json")
    assert caught.value.line is not None
    assert str(caught.value).startswith("bad.json:")


def test_unknown_schema_version_is_rejected():
    text = dumps_document(system_document()).replace('"schema_version": "1"', '"schema_version": "9"')
    with pytest.raises(DocumentError) as caught:
        loads_document(text)
    assert caught.value.line == 2


def test_missing_schema_version_is_rejected():
    data = json.loads(dumps_document(system_document()))
    del data["schema_version"]
    with pytest.raises(DocumentError):
        loads_document(json.dumps(data))


def test_unknown_kind_is_rejected():
    text = dumps_document(system_document()).replace('"kind": "system"', '"kind": "tensor"')
    with pytest.raises(DocumentError) as caught:
        loads_document(text)
    assert caught.value.line == 3


def test_bad_matrix_entry_names_its_row():
    lines = dumps_document(system_document()).splitlines()
    row = lines.index("      [0, -1],") + 1
    assert lines[row] == "      [1, 0]"
    lines[row] = '      [1, "x"]'
    with pytest.raises(DocumentError) as caught:
        loads_document("\n".join(lines) + "\n", source="bad.json")
    assert caught.value.line == row + 1
    assert str(caught.value).startswith(f"bad.json:{row + 1}: matrices.1.1.1:")


def test_bad_pair_entry_names_its_row_in_the_right_member():
    pair = amicable_double(AmicablePair(first=classical(1)))
    lines = dumps_document(PairDocument.from_pair(pair)).splitlines()
    second = next(index for index, line in enumerate(lines) if '"second"' in line)
    matrices = next(index for index in range(second, len(lines)) if '"matrices"' in lines[index])
    row = matrices + 2
    lines[row] = lines[row].replace("[", '["x", ', 1)
    with pytest.raises(DocumentError) as caught:
        loads_document("\n".join(lines) + "\n")
    assert caught.value.line == row + 1


def test_bad_entry_in_compact_json_is_on_line_one():
    data = json.loads(dumps_document(system_document()))
    data["matrices"][0][1][0] = 0.5
    with pytest.raises(DocumentError) as caught:
        loads_document(json.dumps(data))
    assert caught.value.line == 1


def test_size_must_match_matrices():
    text = dumps_document(system_document()).replace('"size": [2, 2, 2]', '"size": [3, 2, 2]')
    with pytest.raises(DocumentError):
        load_system(loads_document(text))


def test_ragged_matrix_is_rejected():
    data = json.loads(dumps_document(system_document()))
    data["matrices"][0][1] = [1]
    with pytest.raises(DocumentError):
        load_system(loads_document(json.dumps(data)))


def test_non_positive_size_is_rejected():
    data = json.loads(dumps_document(system_document()))
    data["size"] = [0, 2, 2]
    with pytest.raises(DocumentError):
        loads_document(json.dumps(data))


def test_pair_is_not_a_system():
    document = PairDocument.from_pair(AmicablePair(first=classical(1)))
    with pytest.raises(DocumentError):
        load_system(document)
