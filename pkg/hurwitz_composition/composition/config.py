from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, PositiveInt

from hurwitz_composition.composition.system import HurwitzSystem


class CompositionConfig(BaseModel):
    size_cap: int = Field(default=4096, ge=1)
    oracle_max_rows: int = Field(default=64, ge=1)
    search_node_budget: int = Field(default=5_000_000, ge=1)
    search_pool_cap: int = Field(default=20_000, ge=1)


DEFAULT_CONFIG = CompositionConfig()


def resolve_config(config: Optional[CompositionConfig]) -> CompositionConfig:
    return config if config is not None else DEFAULT_CONFIG


class SurveyConfig(BaseModel):
    """Configuration for a closure survey over construction inputs.

    The survey applies every named construction to every input (and every
    ordered pair of inputs for the two-argument constructions), verifies each
    output and records its size. Combinations whose predicted output exceeds
    the size cap are skipped.

    Args:
        systems: Named input systems. Defaults to ``classical(1|2|4|8)``.
        constructions: Construction names to run. Any of ``double``,
            ``amicable_double``, ``full_double``, ``combine``,
            ``extended_double``. Defaults to all of them.
        extension_exponents: Values of ``k`` tried by ``extended_double``.
        run_oracle: Also run the polynomial identity check when the output
            has at most ``oracle_max_rows`` rows.
    """

    model_config = ConfigDict(arbitrary_types_allowed=True)

    systems: Optional[dict[str, HurwitzSystem]] = None
    constructions: Optional[List[str]] = None
    extension_exponents: List[PositiveInt] = Field(default_factory=lambda: [1, 2, 3])
    run_oracle: bool = True
