from __future__ import annotations

from dataclasses import dataclass


class FormatError(Exception):
    pass


@dataclass
class ValidationResult:
    valid: bool
    errors: list[str]
