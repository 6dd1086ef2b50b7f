"""Shape normalization: map text to character classes so that distances
compare layout rather than content."""

from __future__ import annotations

from enum import Enum


class NormalizationMode(Enum):
    SIMPLE = "simple"   # every letter -> 'a', every digit -> '9'
    CASED = "cased"     # lowercase -> 'a', uppercase -> 'A', digit -> '9'
    NONE = "none"       # identity


def _map_char_simple(c: str) -> str:
    if c.isalpha():
        return "a"
    if c.isdigit():
        return "9"
    return c


def _map_char_cased(c: str) -> str:
    if c.isalpha():
        return "A" if c.isupper() else "a"
    if c.isdigit():
        return "9"
    return c


def normalize_line(line: str, mode: NormalizationMode = NormalizationMode.CASED) -> str:
    """Normalize one line of text.

    Letters become 'a' (or 'A' for uppercase in CASED mode), digits
    become '9', everything else, including all whitespace, is kept
    as-is.  Length is preserved.  ``line`` must not contain line
    breaks; behavior on embedded newlines is unspecified.
    """
    if mode is NormalizationMode.NONE:
        return line
    if mode is NormalizationMode.SIMPLE:
        return "".join(_map_char_simple(c) for c in line)
    return "".join(_map_char_cased(c) for c in line)


def normalize_lines(lines, mode: NormalizationMode = NormalizationMode.CASED):
    """Normalize a sequence of lines, preserving order and count."""
    return [normalize_line(line, mode) for line in lines]
