from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional


class Status(Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    SKIPPED = "SKIPPED"
    PROBABILISTIC_PASS = "PROBABILISTIC-PASS"


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    status: Status
    witness: Optional[Any] = None
    detail: str = ""

    def __post_init__(self) -> None:
        if self.status is Status.FAIL and self.witness is None:
            raise ValueError(f"FAIL verdict for {self.theorem_id} needs a witness")

    @property
    def failed(self) -> bool:
        return self.status is Status.FAIL


def passed(theorem_id: str, detail: str = "", probabilistic: bool = False) -> TheoremVerdict:
    status = Status.PROBABILISTIC_PASS if probabilistic else Status.PASS
    return TheoremVerdict(theorem_id, status, detail=detail)


def failed(theorem_id: str, witness: Any, detail: str = "") -> TheoremVerdict:
    return TheoremVerdict(theorem_id, Status.FAIL, witness=witness, detail=detail)


def skipped(theorem_id: str, reason: str) -> TheoremVerdict:
    return TheoremVerdict(theorem_id, Status.SKIPPED, witness=reason, detail=reason)
