"""Benchmark harness: counters, CSV shape, and growth behavior at small sizes."""

import pytest

from lctr.bench import BENCH_CSV_HEADER, BenchRecord, bench_csv, run_bench


def test_run_bench_counters():
    records = run_bench(max_exponent=6, repetitions=1, min_exponent=4, oracle_max_boxes=10**5)
    fast = [r for r in records if r.algorithm == "fast"]
    oracle = [r for r in records if r.algorithm == "oracle"]
    assert [r.r for r in fast] == [16, 32, 64]
    assert [r.r for r in oracle] == [16, 32, 64]
    for rec in fast:
        k = rec.r.bit_length() - 1
        assert rec.n == rec.r * (rec.r + 1) // 2
        assert rec.probes_or_cells <= 12 * k + 64
    for rec in oracle:
        assert rec.probes_or_cells == rec.n  # one update per box


def test_fast_probe_growth_is_additively_small():
    records = [r for r in run_bench(max_exponent=9, repetitions=1, min_exponent=4, oracle_max_boxes=0) if r.algorithm == "fast"]
    probes = [r.probes_or_cells for r in records]
    for smaller, larger in zip(probes, probes[1:]):
        assert larger - smaller <= 12


def test_bench_csv_format():
    rec = BenchRecord("fast", 16, 136, 0.000123, 42)
    text = bench_csv([rec])
    lines = text.splitlines()
    assert lines[0] == ",".join(BENCH_CSV_HEADER)
    assert lines[1] == "fast,16,136,0.000123,42"


def test_run_bench_validates_exponents():
    with pytest.raises(ValueError):
        run_bench(max_exponent=30)
    with pytest.raises(ValueError):
        run_bench(max_exponent=4, min_exponent=6)
