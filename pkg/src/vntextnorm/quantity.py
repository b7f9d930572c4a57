"""Currency and percentage verbalization.

These run after dates/times and before the general number pass, so a full
amount like "1.500.000 dong" is read as one quantity, never as loose
number groups.
"""

from __future__ import annotations

import re

from .numwords import NUMBER_TOKEN, verbalize_token
from .substitute import Replacement, sub_with_records

# <number> + đồng/₫/đ/VND (any case, including the undiacritized "dong")
# or + USD; the suffix must be adjacent or exactly one space away.
_SUFFIX_AMOUNT_RE = re.compile(
    rf"(?<![^\W_])(?P<num>{NUMBER_TOKEN}) ?(?P<unit>(?i:đồng|dong|vnd|usd|₫|đ))(?![^\W_])"
)

# $5 / $ 5.
_DOLLAR_PREFIX_RE = re.compile(rf"\$ ?(?P<num>{NUMBER_TOKEN})(?![^\W_])")

_PERCENT_RE = re.compile(rf"(?<![^\W_])(?P<num>{NUMBER_TOKEN})%(?![^\W_])")


def _amount_words(token: str, unit_word: str) -> str | None:
    try:
        return f"{verbalize_token(token)} {unit_word}"
    except ValueError:
        return None


def expand_suffix_amounts(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        unit = "đô la" if match.group("unit").lower() == "usd" else "đồng"
        return _amount_words(match.group("num"), unit)

    return sub_with_records(_SUFFIX_AMOUNT_RE, repl, text)


def expand_dollar_amounts(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        return _amount_words(match.group("num"), "đô la")

    return sub_with_records(_DOLLAR_PREFIX_RE, repl, text)


def expand_percents(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        return _amount_words(match.group("num"), "phần trăm")

    return sub_with_records(_PERCENT_RE, repl, text)


def normalize_currency(text: str) -> str:
    """Replace VND and USD amounts with their spoken forms."""
    text, _ = expand_suffix_amounts(text)
    text, _ = expand_dollar_amounts(text)
    return text


def normalize_percent(text: str) -> str:
    """Replace <number>% (decimals included) with "... phần trăm"."""
    text, _ = expand_percents(text)
    return text
