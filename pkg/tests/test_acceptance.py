"""Acceptance suite: one test per shipping criterion, each printing a
PASS/FAIL line (run with `pytest -s tests/test_acceptance.py` to see them
all)."""

from __future__ import annotations

import random
import re
import subprocess
import sys
import threading
import time
import unicodedata

import pytest

from vntextnorm import DictionaryEntry, VietnameseNormalizer, compile_entries

from reference_numwords import reference_integer


def _fold(text: str) -> str:
    decomposed = unicodedata.normalize("NFD", text)
    skeleton = "".join(c for c in decomposed if not unicodedata.combining(c))
    return skeleton.replace("đ", "d").replace("Đ", "D").lower()


def _report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[acceptance] {name}: {status}{suffix}", flush=True)


@pytest.fixture(scope="module")
def normalizer():
    return VietnameseNormalizer()


GOLDEN_PAIRS = [
    ("Toi co 123 quyen sach",
     "toi co mot tram hai muoi ba quyen sach"),
    ("Hom nay la 25/12/2023",
     "hom nay la ngay hai muoi lam thang muoi hai nam hai nghin khong tram hai muoi ba"),
    ("Gia la 1.500.000 dong",
     "gia la mot trieu nam tram nghin dong"),
    ("Gia container la 1.500.000 dong tu Singapore",
     "gia cong-te-no la mot trieu nam tram nghin dong tu xin-ga-po"),
    ("Cuoc hop luc 9:30 ngay 15/08/1990",
     "cuoc hop luc chin gio ba muoi phut ngay ngay muoi lam thang tam nam mot nghin chin tram chin muoi"),
    ("9:30", "chin gio ba muoi phut"),
    ("14:30", "muoi bon gio ba muoi phut"),
]


def test_golden_parity(normalizer):
    ok = False
    started = time.perf_counter()
    try:
        for source, want in GOLDEN_PAIRS:
            got = _fold(normalizer.normalize(source).text)
            assert got == want, f"{source!r}: {got!r} != {want!r}"
        elapsed = time.perf_counter() - started
        assert elapsed < 1.0, f"took {elapsed:.2f}s"
        ok = True
    finally:
        _report("golden example parity", ok)


def test_number_oracle(normalizer):
    ok = False
    started = time.perf_counter()
    try:
        from vntextnorm import verbalize_integer

        for n in range(10000):
            assert verbalize_integer(n) == reference_integer(n), n
        rng = random.Random(987654321)
        for _ in range(1000):
            n = rng.randint(10**4, 10**15 - 1)
            assert verbalize_integer(n) == reference_integer(n), n
        elapsed = time.perf_counter() - started
        assert elapsed < 5.0, f"took {elapsed:.2f}s"
        ok = True
    finally:
        _report("number oracle (0..9999 + 1000 random)", ok)


def _replay(source: str, trace) -> str:
    for record in trace:
        assert source[record.start : record.end] == record.original
        source = source[: record.start] + record.replacement + source[record.end :]
    return source


def test_property_suite(normalizer, corpus):
    ok = False
    started = time.perf_counter()
    try:
        assert len(corpus) == 1000
        for line in corpus:
            first = normalizer.normalize(line)
            # determinism
            assert normalizer.normalize(line).text == first.text
            # trace faithfulness
            assert _replay(line, first.trace) == first.text
            # no-digit residue (every corpus digit token is well formed)
            assert not any(ch.isdigit() for ch in first.text), (line, first.text)
            # idempotence
            assert normalizer.normalize(first.text).text == first.text
        # date-before-fraction priority
        assert normalizer.normalize("2/9").text == "ngày hai tháng chín"
        elapsed = time.perf_counter() - started
        assert elapsed < 10.0, f"took {elapsed:.2f}s"
        ok = True
    finally:
        _report("property suite over 1000-line corpus", ok)


_TOKEN_BANK = (
    "hôm", "nay", "giá", "vé", "tăng", "mạnh", "đội", "tuyển", "thắng",
    "123", "4.567", "89%", "3,5%", "25/12/2023", "2/9", "9:30", "14:30:05",
    "1.500.000", "NASA", "GDP", "container", "Singapore", "internet",
    "-42", "2024", "0,5", "$99", "100", "taxi",
)


def test_throughput_via_bench(tmp_path):
    ok = False
    rate = 0.0
    try:
        rng = random.Random(31337)
        utterances = [
            " ".join(rng.choice(_TOKEN_BANK) for _ in range(15)) for _ in range(200)
        ]
        source = tmp_path / "bench_input.txt"
        source.write_text("\n".join(utterances) + "\n", encoding="utf-8")
        proc = subprocess.run(
            [sys.executable, "-m", "vntextnorm", "--input", str(source), "--bench", "15"],
            capture_output=True, text=True, encoding="utf-8",
        )
        assert proc.returncode == 0, proc.stderr
        match = re.search(r"([0-9.]+) utterances/minute", proc.stdout)
        assert match, proc.stdout
        rate = float(match.group(1))
        assert rate >= 20000, f"only {rate:.0f} utterances/minute"
        ok = True
    finally:
        _report("throughput >= 20k utterances/minute", ok, f"{rate:.0f}/min")


def _random_entries(rng: random.Random, count: int) -> list[DictionaryEntry]:
    entries = []
    seen = set()
    while len(entries) < count:
        key = "".join(rng.choice("bcdfghklmnpqrstvx") for _ in range(rng.randint(5, 10)))
        if key in seen:
            continue
        seen.add(key)
        entries.append(DictionaryEntry(key, "thay-thế"))
    return entries


def _best_apply_time(compiled, text: str, rounds: int = 5, reps: int = 120) -> float:
    best = float("inf")
    for _ in range(rounds):
        started = time.perf_counter()
        for _ in range(reps):
            compiled.apply(text)
        best = min(best, (time.perf_counter() - started) / reps)
    return best


def test_dictionary_scaling(corpus):
    ok = False
    ratio = float("inf")
    started = time.perf_counter()
    try:
        rng = random.Random(24680)
        entries = _random_entries(rng, 1000)
        small = compile_entries(entries[:100])
        large = compile_entries(entries)
        text = " ".join(corpus)[:1024]
        assert len(text) == 1024
        small.apply(text)  # warm both before timing
        large.apply(text)
        time_small = _best_apply_time(small, text)
        time_large = _best_apply_time(large, text)
        ratio = time_large / time_small
        assert ratio <= 1.5, f"|D|=1000 is {ratio:.2f}x |D|=100"
        elapsed = time.perf_counter() - started
        assert elapsed < 30.0, f"took {elapsed:.2f}s"
        ok = True
    finally:
        _report("dictionary scan scaling O(n)", ok, f"ratio {ratio:.2f}")


def test_reload_atomicity(tmp_path):
    ok = False
    try:
        old = tmp_path / "old.csv"
        old.write_text("SENTA,cũ một\nSENTB,cũ hai\n", encoding="utf-8")
        new = tmp_path / "new.csv"
        new.write_text("SENTA,mới một\nSENTB,mới hai\n", encoding="utf-8")
        loan = tmp_path / "loan.csv"
        loan.write_text("zzz,z\n", encoding="utf-8")
        normalizer = VietnameseNormalizer(acronyms_path=old, loanwords_path=loan)
        allowed = {"cũ một cũ hai", "mới một mới hai"}
        stop = threading.Event()
        seen: list[str] = []
        errors: list[BaseException] = []

        def worker():
            local = []
            try:
                while not stop.is_set():
                    local.append(normalizer.normalize("SENTA SENTB").text)
            except BaseException as exc:  # surface thread crashes in the test
                errors.append(exc)
            seen.extend(local)

        threads = [threading.Thread(target=worker) for _ in range(4)]
        for thread in threads:
            thread.start()
        # GIL-saturated workers make each swap slow; a dozen swaps against
        # thousands of in-flight normalize calls is plenty of interleaving.
        deadline = time.perf_counter() + 3.0
        flip = False
        reloads = 0
        while time.perf_counter() < deadline or reloads < 10:
            normalizer.reload_dictionaries(acronyms_path=new if flip else old)
            flip = not flip
            reloads += 1
        stop.set()
        for thread in threads:
            thread.join()
        assert not errors, errors
        assert reloads >= 10 and len(seen) > 1000
        mixed = [out for out in seen if out not in allowed]
        assert not mixed, f"torn outputs: {mixed[:3]}"
        ok = True
    finally:
        _report("reload atomicity under concurrency", ok)
