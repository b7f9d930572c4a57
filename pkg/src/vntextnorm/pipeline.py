"""The seven-pass normalization pipeline and its public API.

Pass order is fixed and load-bearing: cleanup, dates, times, currency,
percentages, general numbers, then dictionary replacement. Currency and
date patterns must win before the general number pass sees their digits.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, NamedTuple

from .datetimes import expand_full_dates, expand_short_dates, expand_times
from .dictionaries import DictionaryEngine
from .numwords import normalize_numbers
from .quantity import expand_dollar_amounts, expand_percents, expand_suffix_amounts
from .substitute import Replacement
from .textclean import DEFAULT_POLICY, CleanPolicy, clean

PASS_IDS = ("clean", "date", "time", "currency", "percent", "number", "dictionary")

# The pattern passes between cleanup and dictionary replacement; a pass may
# run as more than one scan (full dates before year-less ones, currency
# suffixes before $ prefixes).
_PATTERN_STEPS: tuple[tuple[str, Callable[[str], tuple[str, list[Replacement]]]], ...] = (
    ("date", expand_full_dates),
    ("date", expand_short_dates),
    ("time", expand_times),
    ("currency", expand_suffix_amounts),
    ("currency", expand_dollar_amounts),
    ("percent", expand_percents),
    ("number", normalize_numbers),
)


@dataclass(frozen=True)
class NormalizerConfig:
    """Construction-time settings; unset paths mean the shipped CSVs."""

    acronyms_path: str | Path | None = None
    loanwords_path: str | Path | None = None
    clean_policy: CleanPolicy = DEFAULT_POLICY
    lowercase_expansions: bool = True


class TraceRecord(NamedTuple):
    """One audited replacement.

    Spans are replay coordinates: applying the records in order, each to
    the text produced by the previous ones (starting from the original
    input), reconstructs the output exactly.
    """

    pass_id: str
    start: int
    end: int
    original: str
    replacement: str


@dataclass
class NormalizationResult:
    text: str
    trace: list[TraceRecord] = field(default_factory=list)

    def replay(self, source: str) -> str:
        """Re-derive the output from `source` by applying the trace."""
        for record in self.trace:
            if source[record.start : record.end] != record.original:
                raise ValueError(
                    f"trace does not match source at {record.start}:{record.end}"
                )
            source = source[: record.start] + record.replacement + source[record.end :]
        return source

    def __str__(self) -> str:
        return self.text


class VietnameseNormalizer:
    """Expands non-standard words into pronounceable Vietnamese.

    All patterns and the dictionary matcher are compiled here, once;
    normalize() only executes them. Instances are safe to share across
    threads, including concurrently with reload_dictionaries().
    """

    def __init__(
        self,
        acronyms_path: str | Path | None = None,
        loanwords_path: str | Path | None = None,
        clean_policy: CleanPolicy | None = None,
        lowercase_expansions: bool = True,
    ):
        self.config = NormalizerConfig(
            acronyms_path=acronyms_path,
            loanwords_path=loanwords_path,
            clean_policy=clean_policy if clean_policy is not None else DEFAULT_POLICY,
            lowercase_expansions=lowercase_expansions,
        )
        self._dictionaries = DictionaryEngine(
            acronyms_path,
            loanwords_path,
            lowercase_values=lowercase_expansions,
        )

    @classmethod
    def from_config(cls, config: NormalizerConfig) -> "VietnameseNormalizer":
        return cls(
            acronyms_path=config.acronyms_path,
            loanwords_path=config.loanwords_path,
            clean_policy=config.clean_policy,
            lowercase_expansions=config.lowercase_expansions,
        )

    def normalize(self, text: str, enable_preprocessing: bool = True) -> NormalizationResult:
        """Run the pipeline over one string.

        With enable_preprocessing=False only cleanup and dictionary
        replacement run (dictionary-only mode). Total function: every pass
        leaves unmatched text untouched.
        """
        # One snapshot of the compiled dictionary for the whole call, so a
        # concurrent reload can never mix old and new entries in one output.
        compiled = self._dictionaries.compiled
        trace: list[TraceRecord] = []

        cleaned = clean(text, self.config.clean_policy)
        if cleaned != text:
            trace.append(TraceRecord("clean", 0, len(text), text, cleaned))
        current = cleaned

        if enable_preprocessing:
            for pass_id, step in _PATTERN_STEPS:
                current = self._run_step(pass_id, step, current, trace)

        replaced, matches = compiled.apply(current)
        if matches:
            records = [
                Replacement(m.start, m.end, current[m.start : m.end], m.value)
                for m in matches
            ]
            _extend_trace(trace, "dictionary", records)
            current = replaced

        return NormalizationResult(current, trace)

    def reload_dictionaries(
        self,
        acronyms_path: str | Path | None = None,
        loanwords_path: str | Path | None = None,
    ) -> None:
        """Swap in new dictionary files atomically; on load failure the
        previous dictionaries stay active."""
        self._dictionaries.reload(acronyms_path, loanwords_path)

    @staticmethod
    def _run_step(
        pass_id: str,
        step: Callable[[str], tuple[str, list[Replacement]]],
        text: str,
        trace: list[TraceRecord],
    ) -> str:
        new_text, records = step(text)
        _extend_trace(trace, pass_id, records)
        return new_text


def _extend_trace(trace: list[TraceRecord], pass_id: str, records: list[Replacement]) -> None:
    # Records come in step-input coordinates; shift each by the growth of
    # the ones before it so the whole trace replays sequentially.
    delta = 0
    for record in records:
        trace.append(
            TraceRecord(
                pass_id,
                record.start + delta,
                record.end + delta,
                record.original,
                record.replacement,
            )
        )
        delta += len(record.replacement) - (record.end - record.start)
