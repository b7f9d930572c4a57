"""CSV-backed acronym and loanword dictionaries compiled into one matcher.

All keys from both dictionaries go into a single Aho-Corasick automaton,
so one scan of the input finds every candidate regardless of dictionary
size. Matches are anchored to token boundaries, prefer the longest key at
each position, and are replaced in a single left-to-right pass that never
rescans replaced text.
"""

from __future__ import annotations

import csv
import logging
import os
from collections import deque
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, NamedTuple, Sequence

logger = logging.getLogger(__name__)

ACRONYMS_FILENAME = "acronyms.csv"
LOANWORDS_FILENAME = "non_vietnamese_words.csv"

_HEADER = ("word", "replacement")


class DictionaryError(ValueError):
    """A dictionary file is missing or malformed."""


@dataclass(frozen=True)
class DictionaryEntry:
    key: str
    value: str


class DictMatch(NamedTuple):
    """One replaced span: [start, end) in the input, the dictionary key
    that matched there and the value written in its place."""

    start: int
    end: int
    key: str
    value: str


def default_dictionary_dir() -> Path:
    """Shipped dictionary directory, overridable via VNTN_DICT_DIR."""
    override = os.environ.get("VNTN_DICT_DIR")
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def load_csv(path: str | Path) -> list[DictionaryEntry]:
    """Read key,value rows (UTF-8, RFC-style quoting).

    An optional "word,replacement" header row is skipped. On duplicate
    keys the last row wins, with a warning. Raises DictionaryError for a
    missing file, a row with fewer than two fields, or an empty key.
    """
    path = Path(path)
    if not path.is_file():
        raise DictionaryError(f"dictionary file not found: {path}")
    seen: dict[str, tuple[int, str]] = {}
    order: list[str] = []
    first_row = True
    with open(path, encoding="utf-8", newline="") as handle:
        reader = csv.reader(handle)
        for row in reader:
            if not row:
                continue
            if first_row:
                first_row = False
                if tuple(f.strip().lower() for f in row[:2]) == _HEADER:
                    continue
            if len(row) < 2:
                raise DictionaryError(
                    f"{path}:{reader.line_num}: expected key,value but got {len(row)} field(s)"
                )
            key, value = row[0].strip(), row[1].strip()
            if not key:
                raise DictionaryError(f"{path}:{reader.line_num}: empty dictionary key")
            if key in seen:
                logger.warning(
                    "%s:%d: duplicate key %r overrides line %d",
                    path, reader.line_num, key, seen[key][0],
                )
            else:
                order.append(key)
            seen[key] = (reader.line_num, value)
    return [DictionaryEntry(key, seen[key][1]) for key in order]


def _lower_keep_length(text: str) -> str:
    lowered = text.lower()
    if len(lowered) == len(text):
        return lowered
    # Rare one-to-many lowercase mappings (e.g. İ) would shift offsets;
    # lower per character and keep the odd ones as-is.
    return "".join(low if len(low := c.lower()) == 1 else c for c in text)


def _is_word_char(ch: str) -> bool:
    return ch.isalnum()


class _Key(NamedTuple):
    key: str
    value: str
    length: int
    ignore_case: bool
    rank: int


class CompiledDictionary:
    """Immutable multi-pattern matcher over one or more entry groups.

    Groups are (entries, ignore_case) pairs; earlier groups win when two
    keys match the same span. Matching walks the automaton once per input
    character, so scan cost does not grow with the number of entries.
    """

    def __init__(self, groups: Sequence[tuple[Sequence[DictionaryEntry], bool]]):
        self._keys: list[_Key] = []
        all_entries: list[DictionaryEntry] = []
        for rank, (entries, ignore_case) in enumerate(groups):
            for entry in entries:
                self._keys.append(
                    _Key(entry.key, entry.value, len(entry.key), ignore_case, rank)
                )
                all_entries.append(entry)
        self.entries: tuple[DictionaryEntry, ...] = tuple(all_entries)
        self._build()
        self._validate_values()

    def _build(self) -> None:
        goto: list[dict[str, int]] = [{}]
        out: list[list[int]] = [[]]
        for index, key in enumerate(self._keys):
            state = 0
            for ch in _lower_keep_length(key.key):
                nxt = goto[state].get(ch)
                if nxt is None:
                    goto.append({})
                    out.append([])
                    nxt = len(goto) - 1
                    goto[state][ch] = nxt
                state = nxt
            out[state].append(index)

        # Breadth-first failure links, folded straight into a full DFA:
        # after this, goto[state] holds the complete transition map and
        # out[state] every key ending at state or on its failure chain.
        fail = [0] * len(goto)
        queue: deque[int] = deque(goto[0].values())
        while queue:
            state = queue.popleft()
            children = list(goto[state].items())
            out[state].extend(out[fail[state]])
            for ch, child in children:
                fail[child] = goto[fail[state]].get(ch, 0)
                queue.append(child)
            merged = dict(goto[fail[state]])
            merged.update(children)
            goto[state] = merged

        self._goto = goto
        self._out = out

    def _candidates(self, text: str) -> list[tuple[int, int, _Key]]:
        lowered = _lower_keep_length(text)
        goto, out, keys = self._goto, self._out, self._keys
        state = 0
        hits: list[tuple[int, int, _Key]] = []
        for position, ch in enumerate(lowered):
            state = goto[state].get(ch, 0)
            if out[state]:
                end = position + 1
                for index in out[state]:
                    key = keys[index]
                    start = end - key.length
                    if start > 0 and _is_word_char(text[start - 1]):
                        continue
                    if end < len(text) and _is_word_char(text[end]):
                        continue
                    if not key.ignore_case and text[start:end] != key.key:
                        continue
                    hits.append((start, end, key))
        return hits

    def apply(self, text: str) -> tuple[str, list[DictMatch]]:
        """Replace all matches in one pass; longest key wins at each
        position and replacements are never rescanned."""
        if not self._keys:
            return text, []
        hits = self._candidates(text)
        if not hits:
            return text, []
        hits.sort(key=lambda hit: (hit[0], -(hit[1] - hit[0]), hit[2].rank))
        parts: list[str] = []
        records: list[DictMatch] = []
        position = 0
        for start, end, key in hits:
            if start < position:
                continue
            parts.append(text[position:start])
            parts.append(key.value)
            records.append(DictMatch(start, end, key.key, key.value))
            position = end
        parts.append(text[position:])
        return "".join(parts), records

    def _validate_values(self) -> None:
        for key in self._keys:
            if any(ch.isdigit() for ch in key.value):
                logger.warning(
                    "dictionary value for %r contains digits: %r", key.key, key.value
                )
            replaced, matches = self.apply(key.value)
            if replaced != key.value:
                logger.warning(
                    "dictionary value for %r contains key %r; replacement output "
                    "would not be stable", key.key, matches[0].key,
                )


def compile_entries(
    entries: Iterable[DictionaryEntry], ignore_case: bool = False
) -> CompiledDictionary:
    """Compile a single dictionary into a matcher."""
    return CompiledDictionary([(list(entries), ignore_case)])


class _EngineState(NamedTuple):
    acronyms: list[DictionaryEntry]
    loanwords: list[DictionaryEntry]
    compiled: CompiledDictionary


def _compile_state(
    acronyms: list[DictionaryEntry], loanwords: list[DictionaryEntry]
) -> _EngineState:
    # Acronyms match case-sensitively and outrank loanwords on collisions;
    # loanwords match any casing.
    compiled = CompiledDictionary([(acronyms, False), (loanwords, True)])
    return _EngineState(acronyms, loanwords, compiled)


class DictionaryEngine:
    """Owns the acronym and loanword dictionaries behind one matcher.

    reload() builds the new matcher first and installs it with a single
    reference swap, so concurrent readers always see one complete state,
    old or new, never a mixture.
    """

    def __init__(
        self,
        acronyms_path: str | Path | None = None,
        loanwords_path: str | Path | None = None,
        lowercase_values: bool = False,
    ):
        base = default_dictionary_dir()
        self._lowercase_values = lowercase_values
        self._state = _compile_state(
            self._load(acronyms_path if acronyms_path is not None else base / ACRONYMS_FILENAME),
            self._load(loanwords_path if loanwords_path is not None else base / LOANWORDS_FILENAME),
        )

    def _load(self, path: str | Path) -> list[DictionaryEntry]:
        entries = load_csv(path)
        if self._lowercase_values:
            entries = [DictionaryEntry(e.key, e.value.lower()) for e in entries]
        return entries

    def reload(
        self,
        acronyms_path: str | Path | None = None,
        loanwords_path: str | Path | None = None,
    ) -> None:
        """Reload one or both dictionaries; on any load error the previous
        state stays installed."""
        if acronyms_path is None and loanwords_path is None:
            raise ValueError("reload requires at least one dictionary path")
        current = self._state
        acronyms = self._load(acronyms_path) if acronyms_path is not None else current.acronyms
        loanwords = self._load(loanwords_path) if loanwords_path is not None else current.loanwords
        self._state = _compile_state(acronyms, loanwords)

    @property
    def compiled(self) -> CompiledDictionary:
        """Current matcher snapshot; hold it for span-consistent use."""
        return self._state.compiled
