"""Unicode cleanup: NFC canonicalization, emoji and control-character removal."""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass

# Major emoji blocks plus regional indicators, dingbats and misc symbols.
# Variation selectors and the zero-width joiner are dropped with them so
# stripped emoji sequences leave no invisible residue behind.
_EMOJI_RE = re.compile(
    "["
    "\U0001f300-\U0001f5ff"
    "\U0001f600-\U0001f64f"
    "\U0001f680-\U0001f6ff"
    "\U0001f900-\U0001f9ff"
    "\U0001f1e6-\U0001f1ff"
    "☀-⛿"
    "✀-➿"
    "︎️"
    "‍"
    "]+"
)

# C0 and C1 controls except newline and tab; \r counts as a control here,
# so CRLF input comes out with bare LF line endings.
_CONTROL_RE = re.compile("[\x00-\x08\x0b-\x1f\x7f-\x9f]+")

_SPACE_RUN_RE = re.compile("[ \t]+")


@dataclass(frozen=True)
class CleanPolicy:
    """Which cleanup steps run; NFC normalization always applies."""

    strip_emoji: bool = True
    strip_control: bool = True
    collapse_whitespace: bool = True


DEFAULT_POLICY = CleanPolicy()


def clean(text: str, policy: CleanPolicy = DEFAULT_POLICY) -> str:
    """Canonicalize a string for normalization.

    Output is always NFC. Depending on the policy, emoji (and their
    variation selectors / ZWJ), C0/C1 controls other than newline and tab
    are removed, space/tab runs are collapsed to a single space and every
    line is stripped of leading/trailing whitespace. Total function: any
    input, including the empty string, is accepted.
    """
    text = unicodedata.normalize("NFC", text)
    if policy.strip_emoji:
        text = _EMOJI_RE.sub("", text)
    if policy.strip_control:
        text = _CONTROL_RE.sub("", text)
    if policy.collapse_whitespace:
        text = _SPACE_RUN_RE.sub(" ", text)
        text = "\n".join(line.strip() for line in text.split("\n"))
    # Removals can juxtapose a base letter with a combining mark that was
    # separated by a stripped character; recompose so the output stays NFC.
    return unicodedata.normalize("NFC", text)


def fold_diacritics(text: str) -> str:
    """ASCII skeleton used for tolerant comparisons: strip Vietnamese tone
    and vowel marks, map đ/Đ to d/D, lowercase."""
    decomposed = unicodedata.normalize("NFD", text)
    stripped = "".join(
        ch for ch in decomposed if not unicodedata.combining(ch)
    )
    return stripped.replace("đ", "d").replace("Đ", "D").lower()
