"""Spoken-form expansion of date and time patterns.

Dates run before times and both run before the general number pass, so a
token like 2/9 reads as a date, never as a fraction or two numbers.
"""

from __future__ import annotations

import re

from .numwords import verbalize_integer
from .substitute import Replacement, sub_with_records

# DD<sep>MM<sep>YYYY with one consistent separator. The token must not sit
# inside a larger alphanumeric run.
_FULL_DATE_RE = re.compile(
    r"(?<![^\W_])(\d{1,2})([/.\-])(\d{1,2})\2(\d{1,4})(?![^\W_])"
)

# DD/MM and DD-MM. A bare "." pair is left alone (collides with thousands
# grouping), and a trailing <sep><digit> means the token was a failed full
# date, not a short one.
_SHORT_DATE_RE = re.compile(
    r"(?<![^\W_])(\d{1,2})([/\-])(\d{1,2})(?!\2\d)(?![^\W_])"
)

# HH:MM with optional :SS; guards reject chained colon groups (12:30:45:59)
# rather than reading a prefix of them.
_TIME_RE = re.compile(
    r"(?<![^\W_])(?<!\d:)(\d{1,2}):(\d{1,2})(?::(\d{1,2}))?(?!:?\d)"
)


def _month_words(month: int) -> str:
    # "tháng tư", not "tháng bốn", per common usage.
    return "tư" if month == 4 else verbalize_integer(month)


def _date_words(day: int, month: int, year: int | None) -> str:
    words = f"ngày {verbalize_integer(day)} tháng {_month_words(month)}"
    if year is not None:
        words += f" năm {verbalize_integer(year)}"
    return words


def expand_full_dates(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        day, month, year = int(match.group(1)), int(match.group(3)), int(match.group(4))
        if not (1 <= day <= 31 and 1 <= month <= 12 and 1 <= year <= 9999):
            return None
        return _date_words(day, month, year)

    return sub_with_records(_FULL_DATE_RE, repl, text)


def expand_short_dates(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        day, month = int(match.group(1)), int(match.group(3))
        if not (1 <= day <= 31 and 1 <= month <= 12):
            return None
        return _date_words(day, month, None)

    return sub_with_records(_SHORT_DATE_RE, repl, text)


def expand_times(text: str) -> tuple[str, list[Replacement]]:
    def repl(match: re.Match) -> str | None:
        hour, minute = int(match.group(1)), int(match.group(2))
        second = int(match.group(3)) if match.group(3) is not None else None
        if not (0 <= hour <= 23 and 0 <= minute <= 59):
            return None
        if second is not None and not 0 <= second <= 59:
            return None
        words = f"{verbalize_integer(hour)} giờ"
        if minute != 0:
            words += f" {verbalize_integer(minute)} phút"
        if second is not None:
            words += f" {verbalize_integer(second)} giây"
        return words

    return sub_with_records(_TIME_RE, repl, text)


def normalize_dates(text: str) -> str:
    """Replace every valid date token with its spoken form; out-of-range
    day or month leaves the token for later passes."""
    text, _ = expand_full_dates(text)
    text, _ = expand_short_dates(text)
    return text


def normalize_times(text: str) -> str:
    """Replace every valid HH:MM / HH:MM:SS token with its spoken form."""
    text, _ = expand_times(text)
    return text
