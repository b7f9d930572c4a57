"""Vietnamese number verbalization by recursive decomposition.

Handles cardinals up to 10**15 - 1 with the irregular forms (mười/mươi,
mốt, lăm, linh) and the zero-hundred padding that grouped readings need,
plus decimal readings ("phẩy") and parsing of written number tokens with
dot thousands-grouping and comma decimal separators.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Literal, NamedTuple

from .substitute import Replacement, sub_with_records

MAX_INTEGER = 10**15 - 1


class NumberFormatError(ValueError):
    """A written number token that cannot be read (bad grouping/fraction)."""


@dataclass(frozen=True)
class Lexicon:
    """Word table for the verbalizer; northern-standard forms."""

    digit_words: tuple[str, ...] = (
        "không", "một", "hai", "ba", "bốn",
        "năm", "sáu", "bảy", "tám", "chín",
    )
    ten_word: str = "mười"
    tens_multiplier_word: str = "mươi"
    irregular_unit_one_after_tens: str = "mốt"
    irregular_unit_five_after_tens: str = "lăm"
    hundred_word: str = "trăm"
    zero_tens_connector: str = "linh"
    thousand_word: str = "nghìn"
    million_word: str = "triệu"
    billion_word: str = "tỷ"
    decimal_point_word: str = "phẩy"
    negative_word: str = "âm"

    @property
    def group_words(self) -> dict[int, str]:
        """Magnitude word table; powers above 10**9 compose from these."""
        return {10**3: self.thousand_word, 10**6: self.million_word, 10**9: self.billion_word}


DEFAULT_LEXICON = Lexicon()


def _tens_units(n: int, lex: Lexicon) -> list[str]:
    """Read 1..99."""
    tens, units = divmod(n, 10)
    if tens == 0:
        return [lex.digit_words[units]]
    words = [lex.ten_word] if tens == 1 else [lex.digit_words[tens], lex.tens_multiplier_word]
    if units == 0:
        return words
    if units == 1 and tens >= 2:
        words.append(lex.irregular_unit_one_after_tens)
    elif units == 5:
        words.append(lex.irregular_unit_five_after_tens)
    else:
        words.append(lex.digit_words[units])
    return words


def _group(n: int, lex: Lexicon, pad_zero_hundred: bool) -> list[str]:
    """Read a 3-digit group 1..999; pad_zero_hundred emits the leading
    "không trăm" a lower group needs after a nonzero higher group."""
    hundreds, rest = divmod(n, 100)
    words: list[str] = []
    if hundreds or pad_zero_hundred:
        words += [lex.digit_words[hundreds], lex.hundred_word]
        if 0 < rest < 10:
            return words + [lex.zero_tens_connector, lex.digit_words[rest]]
    if rest:
        words += _tens_units(rest, lex)
    return words


def _compose(n: int, lex: Lexicon, follows_nonzero: bool) -> list[str]:
    if n >= 10**9:
        billions, rest = divmod(n, 10**9)
        words = _compose(billions, lex, False) + [lex.billion_word]
        if rest:
            words += _compose(rest, lex, True)
        return words
    words = []
    for scale, scale_word in ((10**6, lex.million_word), (10**3, lex.thousand_word)):
        group, n = divmod(n, scale)
        if group:
            words += _group(group, lex, follows_nonzero and group < 100)
            words.append(scale_word)
            follows_nonzero = True
    if n:
        words += _group(n, lex, follows_nonzero and n < 100)
    return words


def verbalize_integer(n: int, lexicon: Lexicon = DEFAULT_LEXICON) -> str:
    """Vietnamese cardinal reading of a non-negative integer.

    Raises ValueError outside 0 <= n <= 10**15 - 1.
    """
    if not 0 <= n <= MAX_INTEGER:
        raise ValueError(f"integer out of range 0..{MAX_INTEGER}: {n}")
    if n == 0:
        return lexicon.digit_words[0]
    return " ".join(_compose(n, lexicon, False))


def verbalize_decimal(
    integer_part: int, fraction_digits: str, lexicon: Lexicon = DEFAULT_LEXICON
) -> str:
    """Read "<integer> phẩy <fraction>".

    A fraction of one or two digits with no leading zero reads as a
    cardinal ("3,50" -> "ba phẩy năm mươi"); anything else reads digit by
    digit ("3,05" -> "ba phẩy không năm").
    """
    if not fraction_digits or not fraction_digits.isdigit():
        raise NumberFormatError(f"fraction is not a digit string: {fraction_digits!r}")
    words = [verbalize_integer(integer_part, lexicon), lexicon.decimal_point_word]
    if len(fraction_digits) <= 2 and not fraction_digits.startswith("0"):
        words.append(verbalize_integer(int(fraction_digits), lexicon))
    else:
        words += [lexicon.digit_words[int(d)] for d in fraction_digits]
    return " ".join(words)


class ParsedNumber(NamedTuple):
    kind: Literal["integer", "decimal"]
    integer_part: int
    fraction_digits: str | None


def _join_dot_groups(text: str) -> int:
    """Collapse dot thousands-grouping; every group after the first must
    have exactly three digits."""
    groups = text.split(".")
    if not all(g.isdigit() for g in groups) or not groups[0]:
        raise NumberFormatError(f"malformed number token: {text!r}")
    if any(len(g) != 3 for g in groups[1:]):
        raise NumberFormatError(f"malformed thousands grouping: {text!r}")
    return int("".join(groups))


def parse_number_token(token: str) -> ParsedNumber:
    """Classify a written number token as integer or decimal.

    "1.500.000" is a dot-grouped integer; a comma starts the decimal
    fraction ("3,5"); a single dot whose tail is not a 3-digit group is
    also read as a decimal point ("3.14"). Tokens that mix a comma with
    malformed dot-grouping raise NumberFormatError.
    """
    if "," in token:
        head, _, fraction = token.partition(",")
        if not fraction.isdigit():
            raise NumberFormatError(f"malformed decimal fraction: {token!r}")
        return ParsedNumber("decimal", _join_dot_groups(head), fraction)
    if "." in token:
        groups = token.split(".")
        if len(groups) == 2 and groups[0].isdigit() and groups[1].isdigit() and len(groups[1]) != 3:
            return ParsedNumber("decimal", int(groups[0]), groups[1])
        return ParsedNumber("integer", _join_dot_groups(token), None)
    if not token.isdigit():
        raise NumberFormatError(f"not a number token: {token!r}")
    return ParsedNumber("integer", int(token), None)


def verbalize_token(token: str, lexicon: Lexicon = DEFAULT_LEXICON) -> str:
    """Read a written number token (integer or decimal shape)."""
    parsed = parse_number_token(token)
    if parsed.kind == "integer":
        return verbalize_integer(parsed.integer_part, lexicon)
    return verbalize_decimal(parsed.integer_part, parsed.fraction_digits or "", lexicon)


# Maximal digit run with optional dot grouping and comma fraction; an
# optional minus counts only at line start or after whitespace. Runs glued
# to letters ("A4") stay untouched.
NUMBER_TOKEN = r"\d+(?:\.\d+)*(?:,\d+)?"
_NUMBER_PASS_RE = re.compile(
    rf"(?P<sign>(?:\A|(?<=\s))-)?(?<![^\W_])(?P<num>{NUMBER_TOKEN})(?![^\W_])"
)


def normalize_numbers(
    text: str, lexicon: Lexicon = DEFAULT_LEXICON
) -> tuple[str, list[Replacement]]:
    """General number pass: replace every standalone number token with its
    reading. Unreadable tokens (range overflow, broken grouping) pass
    through unchanged."""

    def repl(match: re.Match) -> str | None:
        try:
            words = verbalize_token(match.group("num"), lexicon)
        except ValueError:
            return None
        if match.group("sign"):
            return f"{lexicon.negative_word} {words}"
        return words

    return sub_with_records(_NUMBER_PASS_RE, repl, text)
