import logging
from itertools import product
from typing import Any, Callable, Dict, List, Optional

from hurwitz_composition.composition.config import CompositionConfig, SurveyConfig, resolve_config
from hurwitz_composition.composition.constructions import (
    amicable_double, combine, double, extended_double, full_double,
)
from hurwitz_composition.composition.constructions.base import guard_exponent
from hurwitz_composition.composition.generators import CLASSICAL_DIMENSIONS, classical
from hurwitz_composition.composition.matrix import all_signed_unit
from hurwitz_composition.composition.oracle import check_identity, system_to_formula
from hurwitz_composition.composition.rho import rho
from hurwitz_composition.composition.system import AmicablePair, FormulaSize, HurwitzSystem
from hurwitz_composition.composition.verification import verify_amicable, verify_hurwitz
from hurwitz_composition.errors import DomainError, SizeCapExceeded

logger = logging.getLogger(__name__)

CONSTRUCTIONS = ("double", "amicable_double", "full_double", "combine", "extended_double")


class Survey:
    """
    Closure survey: every construction applied to every input.

    Each output is verified against the Hurwitz equations (the amicability
    equations for ``amicable_double``), optionally checked by the polynomial
    oracle, and compared with the size its statement promises.

    Example:
        >>> from hurwitz_composition import Survey, SurveyConfig
        >>> records = Survey().run(SurveyConfig(constructions=["combine"]))
        >>> all(record["hurwitz_passed"] for record in records)
        True
    """

    def __init__(self, config: Optional[CompositionConfig] = None):
        self.config = resolve_config(config)

    # ------------------------------------------------------------------ #
    #  Private helpers                                                     #
    # ------------------------------------------------------------------ #

    @staticmethod
    def _default_systems() -> Dict[str, HurwitzSystem]:
        return {f"classical({dim})": classical(dim) for dim in CLASSICAL_DIMENSIONS}

    def _oracle(self, system: HurwitzSystem, run_oracle: bool) -> Optional[bool]:
        if not run_oracle:
            return None
        if system.n > self.config.oracle_max_rows:
            logger.warning(
                "Skipping oracle for %s: more than %d rows", system.size, self.config.oracle_max_rows
            )
            return None
        return check_identity(system_to_formula(system)).passed

    def _record(
        self,
        construction: str,
        inputs: List[str],
        expected: FormulaSize,
        build: Callable[[], Any],
        run_oracle: bool,
    ) -> Optional[Dict[str, Any]]:
        try:
            output = build()
        except SizeCapExceeded as exc:
            logger.warning("Skipping %s%s: %s", construction, tuple(inputs), exc)
            return None

        if isinstance(output, AmicablePair):
            system = output.first
            passed = verify_amicable(output).passed
            matrices = output.first.matrices + output.second_matrices
        else:
            system = output
            passed = verify_hurwitz(output).passed
            matrices = output.matrices

        return {
            "construction": construction,
            "inputs": inputs,
            "size": system.size.as_list(),
            "expected_size": expected.as_list(),
            "hurwitz_passed": passed,
            "oracle_passed": self._oracle(system, run_oracle),
            "signed_unit": all_signed_unit(matrices),
        }

    def _jobs(self, survey_config: SurveyConfig, systems: Dict[str, HurwitzSystem]):
        """Yield ``(construction, input names, expected size, builder)`` tuples."""
        wanted = survey_config.constructions or list(CONSTRUCTIONS)
        config = self.config
        for name in wanted:
            if name not in CONSTRUCTIONS:
                raise DomainError(f"unknown construction {name!r}; expected one of {CONSTRUCTIONS}")

        for label, system in systems.items():
            size = system.size
            if "double" in wanted:
                yield (
                    "double",
                    [label],
                    FormulaSize(r=size.r + 1, s=2 * size.s, n=2 * size.n),
                    lambda system=system: double(system, config=config),
                )
            if "amicable_double" in wanted:
                yield (
                    "amicable_double",
                    [label],
                    FormulaSize(r=size.r + 1, s=2 * size.s, n=2 * size.n),
                    lambda system=system: amicable_double(AmicablePair(first=system), config=config),
                )
            if "extended_double" in wanted:
                for k in survey_config.extension_exponents:
                    try:
                        guard_exponent(k, size.n, config, "extended_double")
                    except SizeCapExceeded as exc:
                        logger.warning("Skipping extended_double%s: %s", (label, f"k={k}"), exc)
                        continue
                    yield (
                        "extended_double",
                        [label, f"k={k}"],
                        FormulaSize(
                            r=size.r + rho(1 << (k - 1)), s=(1 << k) * size.s, n=(1 << k) * size.n
                        ),
                        lambda system=system, k=k: extended_double(system, k, config=config),
                    )

        for (label_a, system_a), (label_b, system_b) in product(systems.items(), repeat=2):
            a, b = system_a.size, system_b.size
            if "full_double" in wanted:
                # C/D systems come from amicable doubling of system_b; B is the first matrix of system_a
                yield (
                    "full_double",
                    [label_a, label_b],
                    FormulaSize(r=(a.r - 1) + (b.r + 1), s=a.s * 2 * b.s, n=a.n * 2 * b.n),
                    lambda system_a=system_a, system_b=system_b: full_double(
                        system_a,
                        1,
                        amicable_double(AmicablePair(first=system_b), config=config),
                        config=config,
                    ),
                )
            if "combine" in wanted:
                yield (
                    "combine",
                    [label_a, label_b],
                    FormulaSize(r=a.r + b.r, s=2 * a.s * b.s, n=2 * a.n * b.n),
                    lambda system_a=system_a, system_b=system_b: combine(
                        system_a, system_b, config=config
                    ),
                )

    # ------------------------------------------------------------------ #
    #  Public API                                                          #
    # ------------------------------------------------------------------ #

    def run(self, survey_config: Optional[SurveyConfig] = None) -> List[Dict[str, Any]]:
        """Run the survey.

        Args:
            survey_config: Inputs, constructions and exponents to survey.
                Defaults to every construction over ``classical(1|2|4|8)``.

        Returns:
            One record per construction call, with keys ``construction``,
            ``inputs``, ``size``, ``expected_size``, ``hurwitz_passed``,
            ``oracle_passed`` (``None`` when skipped) and ``signed_unit``.
        """
        survey_config = survey_config or SurveyConfig()
        systems = survey_config.systems or self._default_systems()
        jobs = list(self._jobs(survey_config, systems))
        logger.info("Starting survey with %d construction calls", len(jobs))

        records: List[Dict[str, Any]] = []
        for index, (construction, inputs, expected, build) in enumerate(jobs, start=1):
            logger.debug("Survey [%d/%d]: %s%s", index, len(jobs), construction, tuple(inputs))
            record = self._record(construction, inputs, expected, build, survey_config.run_oracle)
            if record is not None:
                records.append(record)

        failures = [record for record in records if not record["hurwitz_passed"]]
        logger.info(
            "Survey complete: %d outputs, %d failing verification, %d skipped",
            len(records),
            len(failures),
            len(jobs) - len(records),
        )
        return records
