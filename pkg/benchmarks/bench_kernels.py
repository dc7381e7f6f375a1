"""Compare the compiled row-reduction kernel against the pure-Python fallback.

Times the raw rref kernel on random matrices and an end-to-end distance
search on the six-qubit example at a large prime.

Run:  python3 benchmarks/bench_kernels.py
"""

from __future__ import annotations

import random
import time
from pathlib import Path

import numpy as np

from qldi import distance_search, ldi_transform, parse_code
from qldi._kernels import _py

try:
    from qldi._kernels import _speed
except ImportError:
    _speed = None

FIXTURES = Path(__file__).resolve().parent.parent / "src" / "qldi" / "fixtures"


def bench_rref(kernel, matrices, p, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        copies = [m.copy() for m in matrices]
        start = time.perf_counter()
        for m in copies:
            kernel.rref_mod_inplace(m, p)
        best = min(best, time.perf_counter() - start)
    return best


def bench_distance(p, w_max, repeats=3):
    code = parse_code((FIXTURES / "six_qubit.code").read_text())
    form = ldi_transform(code)
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        distance_search(form, p, w_max)
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    rng = random.Random(0)
    p = 10007
    matrices = [
        np.array(
            [[rng.randrange(p) for _ in range(60)] for _ in range(30)],
            dtype=np.int64,
        )
        for _ in range(200)
    ]

    t_py = bench_rref(_py, matrices, p)
    print(f"rref fallback (python):  {t_py * 1e3:8.2f} ms for 200 30x60 matrices")
    if _speed is not None:
        t_c = bench_rref(_speed, matrices, p)
        print(f"rref compiled:           {t_c * 1e3:8.2f} ms for 200 30x60 matrices")
        print(f"speedup: {t_py / t_c:.1f}x")
    else:
        print("compiled kernel not built; skipping")

    import os
    import subprocess
    import sys

    t_active = bench_distance(4099, 3)
    print(f"\ndistance search (active backend): {t_active * 1e3:.2f} ms")
    env = dict(os.environ, QLDI_PURE_PYTHON="1")
    script = (
        "from benchmarks.bench_kernels import bench_distance;"
        "print(f'{bench_distance(4099, 3) * 1e3:.2f}')"
    )
    out = subprocess.run(
        [sys.executable, "-c", script],
        env=env,
        capture_output=True,
        text=True,
        cwd=Path(__file__).resolve().parent.parent,
    )
    if out.returncode == 0:
        print(f"distance search (forced python):  {out.stdout.strip()} ms")


if __name__ == "__main__":
    main()
