from __future__ import annotations

from typing import Any, Literal

from pydantic import BaseModel, ConfigDict

Status = Literal["pass", "fail", "skipped-with-citation"]


class ReportEntry(BaseModel):
    """One verification check: what was expected, what was computed, and the source it validates."""

    model_config = ConfigDict(extra="ignore")

    id: str
    citation: str
    status: Status
    expected: Any = None
    computed: Any = None

    @property
    def failed(self) -> bool:
        return self.status == "fail"
