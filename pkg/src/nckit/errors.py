"""Shared error types.

Three families, matching the CLI exit codes:

* ``InputError`` (exit 1): the input is malformed or outside an operation's
  contract (bad scene file, wrong degree, divisor too large, ...).
* ``CheckFailed`` (exit 2): a named hypothesis or verification check failed.
  ``check`` holds the machine-readable name of the first failed check and is
  printed verbatim in reports.
* ``UnsupportedQuery`` (exit 1): the request is outside the certified rule set
  (e.g. asking for a pairing the calculus has no direct witness for).
"""

from __future__ import annotations


class NckitError(Exception):
    """Base class for all engine errors."""


class InputError(NckitError):
    """Malformed or out-of-contract input."""


class UnsupportedQuery(InputError):
    """The query falls outside the certified rule set, by design."""


class CheckFailed(NckitError):
    """A named hypothesis or verification check failed.

    Attributes:
        check: short machine-readable name of the failed check.
        detail: human-readable explanation, printed in reports.
    """

    def __init__(self, check: str, detail: str = ""):
        self.check = check
        self.detail = detail
        super().__init__(f"{check}: {detail}" if detail else check)
