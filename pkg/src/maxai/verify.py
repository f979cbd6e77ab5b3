"""Cross-validation of the constructive catalog against the brute-force
immunity oracle.

Exhaustive mode sweeps every value vector of a given n and compares the set
the oracle accepts with the enumerated set.  Sampled mode confirms every
enumerated function and rejects seeded random non-enumerated vectors.
Oracle calls are independent, so both modes can fan out over worker
processes; results are merged in input order, keeping output deterministic.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
import random

from .ai import ai_exact
from .enumeration import enumerate_all
from .gf2 import BitVec
from .symfun import SymFn, to_truth_table

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "SAMPLE_LIMIT",
    "ExhaustiveResult",
    "SampleResult",
    "exhaustive_check",
    "sampled_check",
]

EXHAUSTIVE_LIMIT = 12
SAMPLE_LIMIT = 16


@dataclass(frozen=True)
class ExhaustiveResult:
    n: int
    total: int
    enumerated: int
    oracle_accepted: int
    ok: bool
    mismatches: tuple[str, ...]  # value vectors, sorted; first few only


@dataclass(frozen=True)
class SampleResult:
    n: int
    enumerated: int
    sampled: int
    seed: int
    ok: bool
    failures: tuple[str, ...]  # "svv=... ai=..." lines, deterministic order


def _svv_ai(args: tuple[int, int]) -> int:
    n, bits = args
    f = SymFn(n, BitVec(n + 1, bits))
    return ai_exact(to_truth_table(f)).ai


def _map_ai(items: list[tuple[int, int]], jobs: int) -> list[int]:
    if jobs <= 1 or len(items) < 4:
        return [_svv_ai(it) for it in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_svv_ai, items, chunksize=chunk))


def _svv_string(n: int, bits: int) -> str:
    return BitVec(n + 1, bits).to01()


def exhaustive_check(n: int, jobs: int = 1) -> ExhaustiveResult:
    """Compare {f : oracle degree == n/2} with the enumerated set over all
    2^(n+1) value vectors."""
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    if n > EXHAUSTIVE_LIMIT:
        raise ValueError(f"exhaustive mode is limited to n <= {EXHAUSTIVE_LIMIT}")
    k = n // 2
    enumerated = {r.f.svv.bits for r in enumerate_all(n)}
    total = 1 << (n + 1)
    ais = _map_ai([(n, bits) for bits in range(total)], jobs)
    accepted = {bits for bits, a in zip(range(total), ais) if a == k}
    diff = sorted(accepted ^ enumerated)
    return ExhaustiveResult(
        n=n,
        total=total,
        enumerated=len(enumerated),
        oracle_accepted=len(accepted),
        ok=not diff,
        mismatches=tuple(_svv_string(n, b) for b in diff[:8]),
    )


def sampled_check(n: int, sample: int = 200, seed: int = 0, jobs: int = 1) -> SampleResult:
    """Confirm oracle degree n/2 on every enumerated function and < n/2 on
    ``sample`` seeded random non-enumerated value vectors."""
    if n < 2 or n % 2:
        raise ValueError("n must be a positive even integer")
    if n > SAMPLE_LIMIT:
        raise ValueError(f"sampled mode is limited to n <= {SAMPLE_LIMIT}")
    if sample < 0:
        raise ValueError("sample must be nonnegative")
    k = n // 2
    enumerated = [r.f.svv.bits for r in enumerate_all(n)]
    enumerated_set = set(enumerated)

    rng = random.Random(seed)
    drawn = []
    while len(drawn) < sample:
        bits = rng.getrandbits(n + 1)
        if bits not in enumerated_set:
            drawn.append(bits)

    ais = _map_ai([(n, b) for b in enumerated + drawn], jobs)
    failures = []
    for bits, a in zip(enumerated, ais[: len(enumerated)]):
        if a != k:
            failures.append(f"svv={_svv_string(n, bits)} ai={a} expected {k}")
    for bits, a in zip(drawn, ais[len(enumerated):]):
        if a >= k:
            failures.append(f"svv={_svv_string(n, bits)} ai={a} expected < {k}")
    return SampleResult(
        n=n,
        enumerated=len(enumerated),
        sampled=sample,
        seed=seed,
        ok=not failures,
        failures=tuple(failures),
    )
