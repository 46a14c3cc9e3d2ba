import json

import pytest
from click.testing import CliRunner

from hurwitz_composition.cli.document import PairDocument, loads_document
from hurwitz_composition.cli.main import EXIT_ERROR, EXIT_FAIL, EXIT_PASS, cli


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def generate(runner: CliRunner, *args: str) -> str:
    result = runner.invoke(cli, ["gen", *args])
    assert result.exit_code == EXIT_PASS, result.output
    return result.stdout


def test_generated_complex_system_verifies_with_oracle(runner):
    document = generate(runner, "classical", "2")
    result = runner.invoke(cli, ["verify", "--oracle", "-"], input=document)
    assert result.exit_code == EXIT_PASS
    assert "oracle [2, 2, 2]: pass" in result.stderr


def test_rho(runner):
    result = runner.invoke(cli, ["rho", "64"])
    assert result.exit_code == EXIT_PASS
    assert result.stdout.strip() == "12"


def test_rho_domain_error(runner):
    result = runner.invoke(cli, ["rho", "0"])
    assert result.exit_code == EXIT_ERROR
    assert "error:" in result.stderr


def test_combine_octonions(runner):
    with runner.isolated_filesystem():
        with open("a.json", "w") as handle:
            handle.write(generate(runner, "classical", "8"))
        combined = runner.invoke(cli, ["combine", "a.json", "a.json"])
        assert combined.exit_code == EXIT_PASS
        assert loads_document(combined.stdout).size == [16, 128, 128]
        result = runner.invoke(cli, ["verify", "-"], input=combined.stdout)
        assert result.exit_code == EXIT_PASS


def test_constructions_append_provenance(runner):
    document = generate(runner, "classical", "4")
    doubled = runner.invoke(cli, ["double", "-", "--special", "2"], input=document)
    assert doubled.exit_code == EXIT_PASS
    extended = runner.invoke(cli, ["extend", "-", "--k", "2"], input=doubled.stdout)
    assert extended.exit_code == EXIT_PASS
    parsed = loads_document(extended.stdout)
    assert parsed.size == [7, 32, 32]
    assert [step.operation for step in parsed.provenance] == ["classical", "double", "extended_double"]
    assert parsed.provenance[1].arguments == {"special": "2"}


def test_hr_generator(runner):
    assert loads_document(generate(runner, "hr", "6")).size == [12, 64, 64]


def test_generation_is_byte_identical(runner):
    assert generate(runner, "hr", "5") == generate(runner, "hr", "5")


def test_size_cap_is_a_structural_error(runner):
    result = runner.invoke(cli, ["--size-cap", "8", "gen", "hr", "4"])
    assert result.exit_code == EXIT_ERROR
    assert "cap" in result.stderr


def test_failed_verification_exit_code(runner):
    data = json.loads(generate(runner, "classical", "2"))
    data["matrices"][1] = data["matrices"][0]
    result = runner.invoke(cli, ["verify", "--all-failures", "-"], input=json.dumps(data))
    assert result.exit_code == EXIT_FAIL
    assert "A1^T A2 + A2^T A1 != 0" in result.stderr


def test_oracle_failure_exit_code(runner):
    data = json.loads(generate(runner, "classical", "2"))
    data["matrices"][1] = data["matrices"][0]
    result = runner.invoke(cli, ["verify", "--oracle", "-"], input=json.dumps(data))
    assert result.exit_code == EXIT_FAIL
    assert "oracle [2, 2, 2]: FAIL at x1 x2 y1^2" in result.stderr


def test_malformed_document_exit_code(runner):
    result = runner.invoke(cli, ["verify", "-"], input="{\n  \"size\": \n")
    assert result.exit_code == EXIT_ERROR
    assert "<stdin>:" in result.stderr or "-:" in result.stderr


def test_unknown_subcommand_is_usage_error(runner):
    assert runner.invoke(cli, ["frobnicate"]).exit_code == EXIT_ERROR


def test_emit_text(runner):
    result = runner.invoke(cli, ["emit", "-"], input=generate(runner, "classical", "2"))
    assert result.exit_code == EXIT_PASS
    assert result.stdout.strip() == "(x1^2 + x2^2)(y1^2 + y2^2) = (x1 y1 - x2 y2)^2 + (x1 y2 + x2 y1)^2"


def test_emit_latex(runner):
    result = runner.invoke(cli, ["emit", "-", "--format", "latex"], input=generate(runner, "classical", "1"))
    assert result.exit_code == EXIT_PASS
    assert result.stdout.startswith(r"\left(x_{1}^2\right)")


def test_amicable_pair_document_verifies(runner):
    pair = runner.invoke(cli, ["amicable", "-"], input=generate(runner, "classical", "4"))
    assert pair.exit_code == EXIT_PASS
    assert isinstance(loads_document(pair.stdout), PairDocument)
    result = runner.invoke(cli, ["verify", "--oracle", "-"], input=pair.stdout)
    assert result.exit_code == EXIT_PASS
    assert "amicable: pass" in result.stderr


def test_search(runner):
    result = runner.invoke(cli, ["search", "--s", "2", "--n", "2"])
    assert result.exit_code == EXIT_PASS
    assert "r_max = 2" in result.stderr
    assert loads_document(result.stdout).size == [2, 2, 2]


def test_search_budget_is_inconclusive(runner):
    result = runner.invoke(cli, ["search", "--s", "4", "--n", "4", "--budget", "3"])
    assert result.exit_code == EXIT_ERROR
    assert "inconclusive above r =" in result.stderr


def test_survey_prints_json_lines(runner):
    result = runner.invoke(cli, ["survey", "--construction", "double", "--no-oracle"])
    assert result.exit_code == EXIT_PASS
    records = [json.loads(line) for line in result.stdout.splitlines()]
    assert [record["size"] for record in records] == [[2, 2, 2], [3, 4, 4], [5, 8, 8], [9, 16, 16]]
    assert all(record["oracle_passed"] is None for record in records)


def test_huge_exponents_are_refused_with_error_exit(runner):
    result = runner.invoke(cli, ["gen", "hr", str(2**40)])
    assert result.exit_code == EXIT_ERROR
    assert "cap" in result.stderr
    extended = runner.invoke(cli, ["extend", "-", "--k", str(2**40)], input=generate(runner, "classical", "2"))
    assert extended.exit_code == EXIT_ERROR
    assert "cap" in extended.stderr
