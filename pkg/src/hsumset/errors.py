"""Exception types shared across the package.

Two buckets matter to callers (and map to CLI exit codes):

  * ValueError subclasses -- bad input or an out-of-domain request
    (usage errors, exit code 2);
  * ResourceLimitError -- a computation was refused because it would
    blow a configured cap (exit code 3).  Refusal is always explicit:
    nothing is ever silently truncated.
"""


class ResourceLimitError(RuntimeError):
    """A configured resource cap (bit window, subset count, 64-bit range) would be exceeded."""


class DomainError(ValueError):
    """An operation was asked for outside its stated domain of validity."""


class CoverageError(ValueError):
    """A parameter tuple is uncovered by, or ambiguous between, catalog cases."""
