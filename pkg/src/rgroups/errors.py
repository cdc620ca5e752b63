"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: user-input problems
(ValidationError and subclasses) exit 2, engine self-check failures
(InternalInconsistencyError) exit 3.
"""

from __future__ import annotations


class ValidationError(Exception):
    """Invalid user input; carries a list of (field_path, message) pairs."""

    def __init__(self, violations):
        if isinstance(violations, str):
            violations = [("", violations)]
        self.violations = list(violations)
        super().__init__("; ".join(f"{p}: {m}" if p else m for p, m in self.violations))


class UnsupportedLeviError(ValidationError):
    """Levi accepted for enumeration but outside the engine's scope."""


class ConfigurationError(ValidationError):
    """A required oracle flag (e.g. a reducibility bit) is missing."""


class InternalInconsistencyError(Exception):
    """A structural identity the engine asserts has failed; indicates a bug."""
