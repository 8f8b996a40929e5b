"""
JSON shapes of everything the engine writes out: suite reports and
derivation files.
"""
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

Status = Literal["pass", "fail", "skipped", "unproven", "info"]


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    status: Status
    witness: str | None = None


class CheckReport(BaseModel):
    suite: str
    family: str
    rank: int
    ring: str
    checks: list[CheckResult] = Field(default_factory=list)
    elapsed_ms: int = 0

    @property
    def status(self):
        """fail if any check failed; unproven if nothing failed but something is unproven."""
        statuses = {check.status for check in self.checks}
        if "fail" in statuses:
            return "fail"
        if "unproven" in statuses:
            return "unproven"
        return "pass"

    @property
    def passed(self):
        return self.status != "fail"

    def counts(self):
        out = {}
        for check in self.checks:
            out[check.status] = out.get(check.status, 0) + 1
        return out


class DerivationStep(BaseModel):
    rule: str
    orientation: Literal["forward", "backward"]
    position: int = Field(ge=0)
    bindings: dict[str, str] = Field(default_factory=dict)


class DerivationRecord(BaseModel):
    family: Literal["A", "D"]
    rank: int = Field(ge=1)
    ring: str
    shortcuts: bool = True
    start: str
    end: str
    steps: list[DerivationStep] = Field(default_factory=list)
