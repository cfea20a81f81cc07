"""Reachability for networks of timed automata."""

from ._taz import check_text, generate, roundtrip

__all__ = ["check_text", "generate", "roundtrip"]
