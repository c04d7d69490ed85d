"""Signals shared by the transfer families."""

from __future__ import annotations


class Inapplicable(Exception):
    """The sentence lacks the structure this transfer needs.

    A skip, not a failure: per-transfer applicability varies across a
    corpus and callers are expected to catch this and move on.
    """


class MissingAgentError(Inapplicable):
    """Passive clause without a by-phrase; the actor is unrecoverable."""
