from dataclasses import asdict, dataclass, replace
from typing import Any, Dict

from environs import Env

from gext_lab.helpers.errors import ConfigurationError


class Configuration:
    env = Env()
    GEXT_PRECISION: int = env.int("GEXT_PRECISION", 256)
    GEXT_PRECISION_CAP: int = env.int("GEXT_PRECISION_CAP", 4096)
    GEXT_MAX_DENOMINATOR: int = env.int("GEXT_MAX_DENOMINATOR", 10**12)
    GEXT_SUBGROUP_CAP: int = env.int("GEXT_SUBGROUP_CAP", 64)
    GEXT_MC_TRIALS: int = env.int("GEXT_MC_TRIALS", 8)
    GEXT_PRIMITIVE_BUDGET: int = env.int("GEXT_PRIMITIVE_BUDGET", 20000)
    GEXT_CONJUGATOR_BUDGET: int = env.int("GEXT_CONJUGATOR_BUDGET", 1000)
    GEXT_RANDOM_SEED: int = env.int("GEXT_RANDOM_SEED", 20250601)
    GEXT_TRUST_IRREDUCIBLE: bool = env.bool("GEXT_TRUST_IRREDUCIBLE", False)


@dataclass(frozen=True)
class RunConfig:
    precision: int = Configuration.GEXT_PRECISION
    precision_cap: int = Configuration.GEXT_PRECISION_CAP
    max_denominator: int = Configuration.GEXT_MAX_DENOMINATOR
    subgroup_cap: int = Configuration.GEXT_SUBGROUP_CAP
    mc_trials: int = Configuration.GEXT_MC_TRIALS
    primitive_budget: int = Configuration.GEXT_PRIMITIVE_BUDGET
    conjugator_budget: int = Configuration.GEXT_CONJUGATOR_BUDGET
    random_seed: int = Configuration.GEXT_RANDOM_SEED
    trust_irreducible: bool = Configuration.GEXT_TRUST_IRREDUCIBLE

    @classmethod
    def from_env(cls, **overrides: Any) -> "RunConfig":
        """Environment defaults, overridden by any non-None keyword."""
        config = replace(cls(), **{k: v for k, v in overrides.items() if v is not None})
        config.validate()
        return config

    def validate(self) -> None:
        for name in (
            "max_denominator",
            "subgroup_cap",
            "mc_trials",
            "primitive_budget",
            "conjugator_budget",
        ):
            if getattr(self, name) < 1:
                raise ConfigurationError(f"{name} must be at least 1")
        if self.precision < 128:
            raise ConfigurationError("precision must be at least 128 bits")
        if self.precision > self.precision_cap:
            raise ConfigurationError(
                f"precision {self.precision} exceeds the cap {self.precision_cap}"
            )

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)
