import pytest

from hurwitz_composition.composition.config import CompositionConfig, SurveyConfig
from hurwitz_composition.composition.generators import classical
from hurwitz_composition.composition.survey import CONSTRUCTIONS, Survey
from hurwitz_composition.errors import DomainError


@pytest.fixture(scope="module")
def closure_records():
    return Survey().run(SurveyConfig(run_oracle=False))


def test_every_construction_closes_over_classical_inputs(closure_records):
    assert {record["construction"] for record in closure_records} == set(CONSTRUCTIONS)
    for record in closure_records:
        assert record["hurwitz_passed"], record
        assert record["signed_unit"], record
        assert record["size"] == record["expected_size"], record


def test_record_counts(closure_records):
    counts = {name: 0 for name in CONSTRUCTIONS}
    for record in closure_records:
        counts[record["construction"]] += 1
    assert counts == {
        "double": 4,
        "amicable_double": 4,
        "extended_double": 12,
        "full_double": 16,
        "combine": 16,
    }


def test_oracle_runs_on_small_outputs_only():
    records = Survey(CompositionConfig(oracle_max_rows=8)).run(
        SurveyConfig(constructions=["double"], systems={"c2": classical(2), "c8": classical(8)})
    )
    assert [record["oracle_passed"] for record in records] == [True, None]


def test_outputs_above_the_cap_are_skipped():
    records = Survey(CompositionConfig(size_cap=16)).run(SurveyConfig(constructions=["combine"], run_oracle=False))
    assert records
    assert all(record["size"][2] <= 16 for record in records)
    assert len(records) < 16


def test_unknown_construction_is_rejected():
    with pytest.raises(DomainError, match="triple"):
        Survey().run(SurveyConfig(constructions=["triple"]))


def test_extension_exponents_above_the_cap_are_skipped():
    records = Survey().run(
        SurveyConfig(
            constructions=["extended_double"],
            systems={"c2": classical(2)},
            extension_exponents=[1, 2**40],
            run_oracle=False,
        )
    )
    assert [record["inputs"] for record in records] == [["c2", "k=1"]]
