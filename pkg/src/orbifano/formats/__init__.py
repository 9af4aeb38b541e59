from orbifano.formats import json_format
from orbifano.formats.base import FormatError, ValidationResult

__all__ = ["FormatError", "ValidationResult", "json_format"]
