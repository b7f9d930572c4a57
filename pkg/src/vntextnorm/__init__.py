"""Vietnamese text normalization for TTS and NLP preprocessing.

Expands non-standard words (numbers, dates, times, currency, percentages,
acronyms, loanwords) into fully pronounceable Vietnamese through an
ordered rule pipeline with user-extensible CSV dictionaries.

    >>> from vntextnorm import VietnameseNormalizer
    >>> normalizer = VietnameseNormalizer()
    >>> normalizer.normalize("Toi co 123 quyen sach").text
    'Toi co một trăm hai mươi ba quyen sach'
"""

from .dictionaries import (
    CompiledDictionary,
    DictionaryEngine,
    DictionaryEntry,
    DictionaryError,
    DictMatch,
    compile_entries,
    default_dictionary_dir,
    load_csv,
)
from .datetimes import normalize_dates, normalize_times
from .numwords import (
    Lexicon,
    NumberFormatError,
    ParsedNumber,
    parse_number_token,
    verbalize_decimal,
    verbalize_integer,
)
from .pipeline import (
    PASS_IDS,
    NormalizationResult,
    NormalizerConfig,
    TraceRecord,
    VietnameseNormalizer,
)
from .quantity import normalize_currency, normalize_percent
from .textclean import CleanPolicy, clean, fold_diacritics

__version__ = "0.1.0"

__all__ = [
    "CleanPolicy",
    "CompiledDictionary",
    "DictMatch",
    "DictionaryEngine",
    "DictionaryEntry",
    "DictionaryError",
    "Lexicon",
    "NormalizationResult",
    "NormalizerConfig",
    "NumberFormatError",
    "PASS_IDS",
    "ParsedNumber",
    "TraceRecord",
    "VietnameseNormalizer",
    "clean",
    "compile_entries",
    "default_dictionary_dir",
    "fold_diacritics",
    "load_csv",
    "normalize_currency",
    "normalize_dates",
    "normalize_percent",
    "normalize_times",
    "parse_number_token",
    "verbalize_decimal",
    "verbalize_integer",
    "__version__",
]
