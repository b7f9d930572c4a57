"""Shared fixtures: a deterministic 1,000-line corpus mixing every
non-standard-word category the pipeline handles."""

from __future__ import annotations

import random

import pytest

_WORDS = (
    "hôm nay trời đẹp", "giá vé là", "cuộc họp bắt đầu lúc", "tôi có",
    "doanh thu đạt", "dân số tăng", "chuyến bay khởi hành", "hợp đồng ký",
    "nhiệt độ xuống", "khoảng cách là", "số lượng hàng về", "tin từ",
    "báo cáo của", "kết quả trận đấu", "lãi suất hiện ở mức", "thu nhập",
    "Toi co quyen sach", "Gia la", "Hom nay la", "Cuoc hop luc",
)

_ACRONYMS = ("NASA", "GDP", "UBND", "THPT", "CLB", "VTV", "ATM", "CEO", "TPHCM", "BHYT")
_LOANWORDS = (
    "container", "Singapore", "internet", "taxi", "video", "camera",
    "CONTAINER", "singapore", "Taxi", "marketing", "karaoke", "Tokyo",
)
_EMOJI = ("😀", "🚀", "🎉", "☀️", "🇻🇳")


def _number(rng: random.Random) -> str:
    style = rng.randrange(5)
    if style == 0:
        return str(rng.randint(0, 9999))
    if style == 1:
        # dot thousands grouping
        n = rng.randint(1000, 10**9)
        return f"{n:,}".replace(",", ".")
    if style == 2:
        return f"{rng.randint(0, 999)},{rng.randint(0, 99)}"
    if style == 3:
        return f"-{rng.randint(1, 500)}"
    return str(rng.randint(10**4, 10**15 - 1))


def _date(rng: random.Random) -> str:
    sep = rng.choice("/-")
    if rng.random() < 0.3:  # out-of-range day/month: later passes eat the digits
        return f"{rng.randint(32, 60)}{sep}{rng.randint(13, 30)}{sep}{rng.randint(1, 2100)}"
    day, month = rng.randint(1, 31), rng.randint(1, 12)
    if rng.random() < 0.4:
        return f"{day:02d}{sep}{month:02d}"
    return f"{day}{sep}{month}{sep}{rng.randint(1900, 2100)}"


def _time(rng: random.Random) -> str:
    if rng.random() < 0.2:
        return f"{rng.randint(24, 60)}:{rng.randint(60, 99)}"
    base = f"{rng.randint(0, 23)}:{rng.randint(0, 59):02d}"
    if rng.random() < 0.3:
        base += f":{rng.randint(0, 59):02d}"
    return base


def _currency(rng: random.Random) -> str:
    amount = _number(rng).lstrip("-")
    form = rng.randrange(6)
    if form == 0:
        return f"{amount} đồng"
    if form == 1:
        return f"{amount} dong"
    if form == 2:
        return f"{amount}đ"
    if form == 3:
        return f"{amount} VND"
    if form == 4:
        return f"${amount}"
    return f"{amount} USD"


def _percent(rng: random.Random) -> str:
    if rng.random() < 0.3:
        return f"{rng.randint(0, 99)},{rng.randint(1, 9)}%"
    return f"{rng.randint(0, 100)}%"


def build_corpus(seed: int = 20260810, lines: int = 1000) -> list[str]:
    rng = random.Random(seed)
    fragments = (
        lambda: rng.choice(_WORDS),
        lambda: _number(rng),
        lambda: _date(rng),
        lambda: _time(rng),
        lambda: _currency(rng),
        lambda: _percent(rng),
        lambda: rng.choice(_ACRONYMS),
        lambda: rng.choice(_LOANWORDS),
        lambda: rng.choice(_EMOJI),
    )
    corpus = []
    for _ in range(lines):
        parts = [rng.choice(fragments)() for _ in range(rng.randint(3, 9))]
        line = " ".join(parts)
        if rng.random() < 0.2:
            line += rng.choice((".", "?", "!", ","))
        corpus.append(line)
    return corpus


@pytest.fixture(scope="session")
def corpus() -> list[str]:
    return build_corpus()
