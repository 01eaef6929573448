"""Cost of lifting the sign restriction on the base.

Times ``pow0`` on non-negative bases against ``pow_full`` on mixed-sign
bases, both with non-singleton exponents.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass

from .interval import DEFAULT_CONFIG, EvalConfig, Interval
from .kernel import pow0
from .power import pow_full

_POOL = 1024
_CHUNK = 256


@dataclass(frozen=True)
class BenchReport:
    iters: int
    workload: str
    pow0_ns: float
    full_ns: float

    @property
    def ratio(self) -> float:
        return self.full_ns / self.pow0_ns if self.pow0_ns > 0 else float("nan")

    def to_text(self) -> str:
        return (f"workload: {self.workload}\n"
                f"iters: {self.iters}\n"
                f"pow0 (non-negative base): {self.pow0_ns:.1f} ns/op\n"
                f"pow_full ({self.workload} base): {self.full_ns:.1f} ns/op\n"
                f"ratio: {self.ratio:.3f}")


def _exponent(rng: random.Random) -> Interval:
    c, d = sorted((rng.uniform(-5, 5), rng.uniform(-5, 5)))
    return Interval(c, d if d > c else c + 0.5)


def _positive(rng: random.Random) -> Interval:
    a, b = sorted((rng.uniform(0.01, 10), rng.uniform(0.01, 10)))
    return Interval(a, b)


def _mixed(rng: random.Random) -> Interval:
    return Interval(-rng.uniform(0.01, 10), rng.uniform(0.01, 10))


def _time(fn, boxes, n: int, cfg: EvalConfig) -> int:
    m = len(boxes)
    start = time.perf_counter_ns()
    for i in range(n):
        x, y = boxes[i % m]
        fn(x, y, cfg)
    return time.perf_counter_ns() - start


def run_bench(iters: int, seed: int = 0, workload: str = "mixed",
              cfg: EvalConfig = DEFAULT_CONFIG) -> BenchReport:
    """Mean ns/op for both paths. ``workload='nonneg'`` feeds ``pow_full``
    the same non-negative boxes as ``pow0``."""
    if iters < 1:
        raise ValueError("iters must be at least 1")
    if workload not in ("mixed", "nonneg"):
        raise ValueError(f"unknown workload {workload!r}")
    rng = random.Random(seed)
    pool = min(iters, _POOL)
    base = [(_positive(rng), _exponent(rng)) for _ in range(pool)]
    if workload == "mixed":
        full = [(_mixed(rng), _exponent(rng)) for _ in range(pool)]
    else:
        full = base
    # interleave the two loops in chunks so drift hits both equally
    t0 = t1 = 0
    done = 0
    while done < iters:
        k = min(_CHUNK, iters - done)
        t0 += _time(pow0, base, k, cfg)
        t1 += _time(pow_full, full, k, cfg)
        done += k
    return BenchReport(iters, workload, t0 / iters, t1 / iters)
