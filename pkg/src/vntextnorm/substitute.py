"""Regex substitution that reports what was replaced where."""

from __future__ import annotations

import re
from typing import Callable, NamedTuple


class Replacement(NamedTuple):
    """One replaced span, in coordinates of the text the pass received."""

    start: int
    end: int
    original: str
    replacement: str


def sub_with_records(
    pattern: re.Pattern,
    repl: Callable[[re.Match], str | None],
    text: str,
) -> tuple[str, list[Replacement]]:
    """Single left-to-right pass of `pattern` over `text`.

    `repl` returns the replacement string, or None to leave a match
    untouched. Replaced spans are never re-scanned.
    """
    parts: list[str] = []
    records: list[Replacement] = []
    last = 0
    for match in pattern.finditer(text):
        replacement = repl(match)
        if replacement is None:
            continue
        parts.append(text[last : match.start()])
        parts.append(replacement)
        records.append(Replacement(match.start(), match.end(), match.group(0), replacement))
        last = match.end()
    if not records:
        return text, []
    parts.append(text[last:])
    return "".join(parts), records
